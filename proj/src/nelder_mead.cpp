#include "qcevo/nelder_mead.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qcevo {

namespace {

struct BudgetExhausted {};

class CountingObjective {
public:
    CountingObjective(const Objective& f, int budget) : f_(f), budget_(budget) {}

    double operator()(const std::vector<double>& x) {
        if (count_ >= budget_) throw BudgetExhausted{};
        ++count_;
        const double v = f_(x);
        if (v < best_value_) {
            best_value_ = v;
            best_x_ = x;
        }
        return v;
    }

    NelderMeadResult result() const { return {best_x_, best_value_, count_}; }

private:
    const Objective& f_;
    int budget_;
    int count_ = 0;
    double best_value_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b, double t) {
    // a + t (b - a)
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
    CountingObjective eval(f, std::max(options.max_evaluations, 1));
    const std::size_t n = x0.size();

    try {
        const double f0 = eval(x0);
        if (n == 0) return eval.result();

        std::vector<std::vector<double>> simplex{x0};
        std::vector<double> values{f0};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> vertex = x0;
            vertex[i] += options.initial_step;
            values.push_back(eval(vertex));
            simplex.push_back(std::move(vertex));
        }

        std::vector<std::size_t> order(n + 1);
        while (true) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
            const std::size_t best = order.front();
            const std::size_t worst = order.back();
            const std::size_t second_worst = order[n - 1];

            if (values[worst] - values[best] <= options.tolerance) break;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t k = 0; k <= n; ++k) {
                if (k == worst) continue;
                for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
            }

            const auto reflected = affine(centroid, simplex[worst], -1.0);
            const double f_reflected = eval(reflected);
            if (f_reflected < values[best]) {
                const auto expanded = affine(centroid, simplex[worst], -2.0);
                const double f_expanded = eval(expanded);
                if (f_expanded < f_reflected) {
                    simplex[worst] = expanded;
                    values[worst] = f_expanded;
                } else {
                    simplex[worst] = reflected;
                    values[worst] = f_reflected;
                }
                continue;
            }
            if (f_reflected < values[second_worst]) {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
                continue;
            }

            const bool outside = f_reflected < values[worst];
            const auto contracted = outside ? affine(centroid, reflected, 0.5) : affine(centroid, simplex[worst], 0.5);
            const double f_contracted = eval(contracted);
            if (f_contracted < std::min(f_reflected, values[worst])) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
                continue;
            }

            for (std::size_t k = 0; k <= n; ++k) {
                if (k == best) continue;
                simplex[k] = affine(simplex[best], simplex[k], 0.5);
                values[k] = eval(simplex[k]);
            }
        }
    } catch (const BudgetExhausted&) {
    }
    return eval.result();
}

}  // namespace qcevo
