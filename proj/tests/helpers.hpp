#ifndef BOOLPROB_TEST_HELPERS_HPP
#define BOOLPROB_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "boolprob/measure.hpp"

namespace boolprob::test {

// The four-atom law used throughout as the nontrivial worked example:
// +-sqrt(2) with weight 1/6, +-1/sqrt(2) with weight 1/3. It has m2 = 1,
// m4 = 3/2, m_{-2} = 3/2.
inline AtomicMeasure measure_B() {
    const double s2 = std::sqrt(2.0);
    return AtomicMeasure({{-s2, 1.0 / 6}, {-1 / s2, 1.0 / 3}, {1 / s2, 1.0 / 3}, {s2, 1.0 / 6}});
}

inline AtomicMeasure two_atom(double a) { return AtomicMeasure({{-a, 0.5}, {a, 0.5}}); }

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// General (not necessarily symmetric) random measure with `atoms` atoms in
// [lo, hi], pairwise separation at least min_sep, weights bounded away from
// zero.
inline AtomicMeasure random_measure(std::uint64_t seed, int atoms, double lo = -3.0,
                                    double hi = 3.0, double min_sep = 0.05) {
    std::mt19937_64 rng(seed);
    std::vector<double> xs(atoms);
    for (int attempt = 0;; ++attempt) {
        for (double& x : xs) x = lo + uniform01(rng) * (hi - lo);
        std::sort(xs.begin(), xs.end());
        bool ok = true;
        for (int i = 1; i < atoms; ++i)
            if (xs[i] - xs[i - 1] < min_sep) ok = false;
        if (ok || attempt > 500) break;
    }
    std::vector<double> ws(atoms);
    double sum = 0.0;
    for (double& w : ws) {
        w = 0.05 + uniform01(rng);
        sum += w;
    }
    std::vector<Atom> out(atoms);
    for (int i = 0; i < atoms; ++i) out[static_cast<std::size_t>(i)] = {xs[i], ws[i] / sum};
    return AtomicMeasure(std::move(out));
}

// Independent W1 oracle: the CDF-difference area int |F_mu - F_nu| dx,
// computed exactly on the merged breakpoint grid. A different formula from
// the quantile coupling the library uses.
inline double w1_cdf_area(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    std::vector<double> grid;
    for (const Atom& a : mu.atoms()) grid.push_back(a.x);
    for (const Atom& a : nu.atoms()) grid.push_back(a.x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const auto cdf = [](const AtomicMeasure& m, double x) {
        double f = 0.0;
        for (const Atom& a : m.atoms())
            if (a.x <= x) f += a.w;
        return f;
    };
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        area += std::abs(cdf(mu, grid[i]) - cdf(nu, grid[i])) * (grid[i + 1] - grid[i]);
    return area;
}

} // namespace boolprob::test

#endif
