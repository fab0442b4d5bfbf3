#include "boolprob/transform.hpp"

#include <cmath>

#include "boolprob/errors.hpp"

namespace boolprob {

namespace {

// Recover a measure that must live on [0, inf). Locations within merge_tol
// of the origin are legitimate atoms at zero; anything further below is a
// failed recovery, not bad input.
AtomicMeasure recover_on_halfline(const RationalFn& g, double merge_tol) {
    // Locations within merge_tol of the origin were already snapped to zero
    // during construction; anything still negative is a failed recovery.
    AtomicMeasure m = recover_measure(g, merge_tol);
    if (m.atoms().front().x < 0.0)
        throw NotACauchyTransform("recovered atom at " + std::to_string(m.atoms().front().x) +
                                  " outside [0, inf)");
    return m;
}

// G of mu [+] nu from G_mu = N1/D1 and G_nu = N2/D2:
// N1 N2 / (D1 N2 + D2 N1 - z N1 N2).
RationalFn convolve_transforms(const RationalFn& g1, const RationalFn& g2) {
    const Polynomial nn = g1.num() * g2.num();
    const Polynomial den =
        g1.den() * g2.num() + g2.den() * g1.num() - Polynomial::monomial(1.0, 1) * nn;
    return RationalFn(nn, den);
}

// G of mu^{[+]n} from G_mu = N/D: N / ((1-n) z N + n D).
RationalFn power_transform(const RationalFn& g, double n) {
    const Polynomial den =
        (1.0 - n) * (Polynomial::monomial(1.0, 1) * g.num()) + n * g.den();
    return RationalFn(g.num(), den);
}

} // namespace

AtomicMeasure boolean_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    // Identity element: K is additive and K_{delta_0} = 0.
    if (mu.size() == 1 && mu.atoms()[0].x == 0.0) return nu;
    if (nu.size() == 1 && nu.atoms()[0].x == 0.0) return mu;

    const double merge_tol = std::min(mu.merge_tol(), nu.merge_tol());
    if (mu.is_symmetric() && nu.is_symmetric()) {
        const RationalFn g = convolve_transforms(cauchy_transform(square_pushforward(mu)),
                                                 cauchy_transform(square_pushforward(nu)));
        return symmetric_sqrt_pullback(recover_on_halfline(g, merge_tol));
    }
    const RationalFn g = convolve_transforms(cauchy_transform(mu), cauchy_transform(nu));
    return recover_measure(g, merge_tol);
}

AtomicMeasure boolean_power(const AtomicMeasure& mu, int n) {
    if (n < 1) throw InputError("convolution power requires n >= 1");
    if (n == 1) return mu;
    if (mu.is_symmetric()) {
        const RationalFn g = power_transform(cauchy_transform(square_pushforward(mu)),
                                             static_cast<double>(n));
        return symmetric_sqrt_pullback(recover_on_halfline(g, mu.merge_tol()));
    }
    return recover_measure(power_transform(cauchy_transform(mu), static_cast<double>(n)),
                           mu.merge_tol());
}

AtomicMeasure clt_measure(const AtomicMeasure& mu, int n) {
    if (n < 1) throw InputError("clt_measure requires n >= 1");
    const double m1 = moment(mu, 1).value();
    const double m2 = moment(mu, 2).value();
    if (std::abs(m1) > 1e-9 || std::abs(m2 - 1.0) > 1e-9)
        throw InputError("clt_measure requires m1 = 0 and m2 = 1 (got m1 = " +
                         std::to_string(m1) + ", m2 = " + std::to_string(m2) + ")");
    if (n == 1) return mu;
    return dilate(boolean_power(mu, n), 1.0 / std::sqrt(static_cast<double>(n)));
}

AtomicMeasure continuous_sq_power(const AtomicMeasure& mu, double t) {
    if (!mu.is_symmetric()) throw SymmetryError("continuous_sq_power requires a symmetric law");
    if (!(t >= 1.0)) throw InputError("continuous_sq_power requires t >= 1");
    const AtomicMeasure nu = square_pushforward(mu);
    const RationalFn k = k_transform(nu);
    const Polynomial pt = k.num().compose_scale(t);
    const Polynomial qt = k.den().compose_scale(t);
    const RationalFn g(qt, Polynomial::monomial(1.0, 1) * qt - pt);
    return recover_on_halfline(g, mu.merge_tol());
}

AtomicMeasure heat_flow(const AtomicMeasure& mu, double t) {
    if (!mu.is_symmetric()) throw SymmetryError("heat_flow requires a symmetric law");
    if (!(t >= 0.0)) throw InputError("heat_flow requires t >= 0");
    if (t == 0.0) return mu;
    const RationalFn g = cauchy_transform(square_pushforward(mu));
    const RationalFn flowed(g.num(), g.den() - t * g.num());
    return symmetric_sqrt_pullback(recover_on_halfline(flowed, mu.merge_tol()));
}

AtomicMeasure ou_flow(const AtomicMeasure& mu, double t) {
    if (!mu.is_symmetric()) throw SymmetryError("ou_flow requires a symmetric law");
    if (!(t >= 0.0)) throw InputError("ou_flow requires t >= 0");
    if (t == 0.0) return mu;
    return dilate(heat_flow(mu, std::exp(2.0 * t) - 1.0), std::exp(-t));
}

} // namespace boolprob
