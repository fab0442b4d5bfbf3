#ifndef BOOLPROB_FUNCTIONALS_HPP
#define BOOLPROB_FUNCTIONALS_HPP

#include <optional>

#include "boolprob/extended_real.hpp"
#include "boolprob/measure.hpp"

namespace boolprob {

// Every functional of one measure evaluated together. The microstates
// Fisher fields require a symmetric law and are left empty otherwise; all
// other fields are defined for any law.
struct FunctionalReport {
    ExtendedReal m2, m4, m_neg2;
    ExtendedReal gamma;           // entropy, int log|x| dmu
    ExtendedReal gamma_rel;       // m2/2 - gamma - 1/2
    ExtendedReal gamma_star;      // -log(psi_star)/2
    ExtendedReal gamma_star_rel;  // m2/2 + log(psi_star)/2 - 1/2
    std::optional<ExtendedReal> psi;      // microstates Fisher (symmetric only)
    std::optional<ExtendedReal> psi_rel;  // psi + m2 - 2
    ExtendedReal psi_star;        // m_{-2}
    ExtendedReal psi_star_rel;    // psi_star + m2 - 2
    ExtendedReal d_star;          // sqrt(m4 - 2 m2 + 1), Stein discrepancy
    ExtendedReal w2_to_b_sym;     // sqrt(int (|x|-1)^2 dmu) = W2(mu^s, b)
};

// int log|x| dmu; -inf exactly when mu has an atom at zero.
ExtendedReal entropy(const AtomicMeasure& mu);

// Microstates Fisher information of a symmetric law: the double integral of
// (log x^2 - log y^2)/(x^2 - y^2), diagonal 1/x^2. Throws SymmetryError on
// non-symmetric input (symmetrization is never silent). +inf exactly when
// mu has an atom at zero.
ExtendedReal fisher(const AtomicMeasure& mu);

// The same double sum on a law already living on [0, inf): kernel
// (log y - log y')/(y - y'), diagonal 1/y.
ExtendedReal fisher_of_squared(const AtomicMeasure& nu);

// The explicit non-symmetric Fisher expression with kernel
// (g(x) - g(y))/(x - y), g(x) = log(x^2)/x, diagonal g'(x) = (2-log x^2)/x^2.
// Agrees with fisher() on symmetric laws; carries no positivity or scaling
// guarantee in general. Throws DomainError on an atom at zero.
double fisher_asymmetric(const AtomicMeasure& mu);

// Non-microstates Fisher information: m_{-2}. +inf iff atom at zero.
ExtendedReal nm_fisher(const AtomicMeasure& mu);

// The lower bound of the Fisher sandwich: double integral of 2/(x^2+y^2).
ExtendedReal fisher_lower_bound(const AtomicMeasure& mu);

// Closed form for the Fisher information along the heat flow:
// psi_star / (1 + t psi_star).
double nm_fisher_heatflow(double psi_star, double t);

// All functionals at once; see FunctionalReport.
FunctionalReport relative_report(const AtomicMeasure& mu);

// Wasserstein-p distance, p in {1, 2}, by quantile coupling over the merged
// breakpoint grid (the optimal coupling in one dimension).
double wasserstein(const AtomicMeasure& mu, const AtomicMeasure& nu, int p);

// sqrt(int (|x|-1)^2 dmu): W2(mu, b) for symmetric mu, W2(mu^s, b) in
// general. Exact closed form, no transport solve.
double w2_to_rademacher(const AtomicMeasure& mu);

} // namespace boolprob

#endif
