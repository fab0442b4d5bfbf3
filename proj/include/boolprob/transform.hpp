#ifndef BOOLPROB_TRANSFORM_HPP
#define BOOLPROB_TRANSFORM_HPP

#include "boolprob/measure.hpp"
#include "boolprob/rational.hpp"

namespace boolprob {

// mu [+] nu, the Boolean convolution: the unique law whose self-energy is
// K_mu + K_nu. Computed through the squared measures when both inputs are
// symmetric (halves the polynomial degrees), through raw transforms
// otherwise.
AtomicMeasure boolean_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu);

// n-fold Boolean convolution power via the single-shot formula
// G = 1/(z - n K(z)); never iterated convolution.
AtomicMeasure boolean_power(const AtomicMeasure& mu, int n);

// mu_n, the CLT normalization: dilation of mu^{[+]n} by 1/sqrt(n).
// Requires m1 = 0 and m2 = 1 within 1e-9.
AtomicMeasure clt_measure(const AtomicMeasure& mu, int n);

// The continuous extension of n -> (mu_n)^(2): the law on [0, inf) with
// Cauchy transform 1/(z - K_{mu^(2)}(t z)), t >= 1, mu symmetric. At
// integer t it matches square_pushforward(clt_measure(mu, t)).
AtomicMeasure continuous_sq_power(const AtomicMeasure& mu, double t);

// Law of X + sqrt(t) B for B Rademacher Boolean-independent of X: the
// squared Cauchy transform evolves as G -> G/(1 - t G). mu symmetric.
AtomicMeasure heat_flow(const AtomicMeasure& mu, double t);

// Boolean Ornstein-Uhlenbeck flow: law of e^{-t} X + sqrt(1-e^{-2t}) B,
// realized as dilate(heat_flow(mu, e^{2t}-1), e^{-t}). Fixed point is the
// Rademacher law.
AtomicMeasure ou_flow(const AtomicMeasure& mu, double t);

} // namespace boolprob

#endif
