#ifndef BOOLPROB_RATIONAL_HPP
#define BOOLPROB_RATIONAL_HPP

#include <complex>

#include "boolprob/measure.hpp"
#include "boolprob/polynomial.hpp"

namespace boolprob {

// Ratio of two real polynomials, normalized so the denominator is monic.
// Coprimality is not enforced; recovery performs an approximate
// common-root cancellation instead (convolving measures that share atoms
// produces matching num/den roots).
class RationalFn {
public:
    RationalFn() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
    RationalFn(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    std::complex<double> eval(std::complex<double> z) const { return num_.eval(z) / den_.eval(z); }
    double eval(double x) const { return num_.eval(x) / den_.eval(x); }

private:
    Polynomial num_;
    Polynomial den_;
};

// G_mu(z) = sum_i w_i/(z - x_i) as a single fraction: the denominator is the
// monic node polynomial, the numerator interpolates the residues.
RationalFn cauchy_transform(const AtomicMeasure& mu);

// Self-energy K_mu(z) = z - 1/G_mu(z); with G = N/D this is (zN - D)/N.
RationalFn k_transform(const AtomicMeasure& mu);

// Inverts the Cauchy transform of an atomic law: atoms at the real roots of
// the denominator, weights at the residues num(x_i)/den'(x_i) evaluated in
// factored form. Poles whose residue vanishes (below 1e-12) are spurious
// common factors and are dropped. Throws NotACauchyTransform on genuinely
// complex poles, negative residues or a residue sum far from one.
AtomicMeasure recover_measure(const RationalFn& g, double merge_tol = kDefaultMergeTol);

} // namespace boolprob

#endif
