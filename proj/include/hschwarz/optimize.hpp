#pragma once

// Nelder-Mead simplex minimisation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "hschwarz/error.hpp"

namespace hschwarz {

struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    int max_iterations = 0;  ///< 0 means 200 * dimension
    double tolerance = 1e-12;  ///< stop when the simplex value spread falls below this
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                                    std::vector<double> start, const NelderMeadOptions& opt = {}) {
    const std::size_t n = start.size();
    if (n == 0) throw error(errc::domain, "Nelder-Mead needs at least one parameter");
    const int cap = opt.max_iterations > 0 ? opt.max_iterations : 200 * static_cast<int>(n);

    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        const double v = objective(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) {
        const double step = start[i] != 0.0 ? opt.initial_step * std::max(1.0, std::abs(start[i])) : opt.initial_step;
        simplex[i + 1][i] += step;
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto point = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = from[k] + t * (to[k] - from[k]);
        return out;
    };

    for (; result.iterations < cap; ++result.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];
        if (std::abs(values[worst] - values[best]) <= opt.tolerance) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
        }

        const auto reflected = point(centroid, simplex[worst], -opt.reflection);
        const double fr = eval(reflected);
        if (fr < values[best]) {
            const auto expanded = point(centroid, simplex[worst], -opt.reflection * opt.expansion);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = reflected;
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        const auto contracted = outside ? point(centroid, reflected, opt.contraction)
                                        : point(centroid, simplex[worst], opt.contraction);
        const double fc = eval(contracted);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = contracted;
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            simplex[i] = point(simplex[best], simplex[i], opt.shrink);
            values[i] = eval(simplex[i]);
        }
    }

    const auto it = std::min_element(values.begin(), values.end());
    result.x = simplex[static_cast<std::size_t>(it - values.begin())];
    result.value = *it;
    return result;
}

}  // namespace hschwarz
