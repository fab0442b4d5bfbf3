#include "boolprob/rational.hpp"

#include <algorithm>
#include <cmath>

#include "boolprob/errors.hpp"

namespace boolprob {

RationalFn::RationalFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    const double lead = den_.leading();
    num_ = (1.0 / lead) * num_;
    den_ = (1.0 / lead) * den_;
}

RationalFn cauchy_transform(const AtomicMeasure& mu) {
    // The node polynomial and the residue numerator are accumulated in
    // extended precision: at degree ~12 the monomial basis is conditioned
    // badly enough that double accumulation already costs the recovery
    // round trip its 1e-10 gate.
    const std::size_t n = mu.size();
    std::vector<long double> den_l{1.0L};
    den_l.reserve(n + 1);
    for (const Atom& a : mu.atoms()) {
        den_l.push_back(0.0L);
        const long double r = a.x;
        for (std::size_t i = den_l.size() - 1; i > 0; --i)
            den_l[i] = den_l[i - 1] - r * den_l[i];
        den_l[0] = -r * den_l[0];
    } // coefficients are ascending in degree, leading entry 1

    std::vector<long double> num_l(n, 0.0L);
    std::vector<long double> quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Synthetic division of the node polynomial by (z - x_i).
        const long double r = mu.atoms()[i].x;
        long double carry = den_l[n];
        for (std::size_t k = n; k-- > 0;) {
            quotient[k] = carry;
            carry = den_l[k] + r * carry;
        }
        const long double w = mu.atoms()[i].w;
        for (std::size_t k = 0; k < n; ++k) num_l[k] += w * quotient[k];
    }

    std::vector<double> den(den_l.begin(), den_l.end());
    std::vector<double> num(num_l.begin(), num_l.end());
    return RationalFn(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

RationalFn k_transform(const AtomicMeasure& mu) {
    const RationalFn g = cauchy_transform(mu);
    const Polynomial zn = Polynomial::monomial(1.0, 1) * g.num();
    return RationalFn(zn - g.den(), g.num());
}

AtomicMeasure recover_measure(const RationalFn& g, double merge_tol) {
    if (g.num().is_zero()) throw NotACauchyTransform("zero numerator");

    // The polynomial degree gap is invariant under common factors, so the
    // asymptotics check needs no explicit cancellation.
    if (g.den().degree() != g.num().degree() + 1)
        throw NotACauchyTransform("degree mismatch: deg(den) must be deg(num)+1, got " +
                                  std::to_string(g.den().degree()) + " vs " +
                                  std::to_string(g.num().degree()));

    std::vector<std::complex<double>> num_roots;
    if (g.num().degree() >= 1) num_roots = polynomial_roots(g.num());
    const std::vector<std::complex<double>> den_roots = polynomial_roots(g.den());

    // Residues from the factored form. Shared num/den roots (they arise when
    // convolving measures with common atoms or common transform zeros) are
    // kept in the products: a close zero/pole pair contributes an accurately
    // evaluated near-cancellation, and the spurious pole is then recognized
    // by its vanishing residue. Splitting such pairs out by root matching
    // would trade the well-conditioned pair product for two O(sqrt(eps))
    // root halves.
    const double lead = g.num().leading(); // den is monic
    std::vector<Atom> atoms;
    atoms.reserve(den_roots.size());
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < den_roots.size(); ++i) {
        const std::complex<double>& r = den_roots[i];
        std::complex<long double> value = lead;
        for (const auto& z : num_roots)
            value *= std::complex<long double>(r.real() - z.real(), r.imag() - z.imag());
        for (std::size_t j = 0; j < den_roots.size(); ++j)
            if (j != i)
                value /= std::complex<long double>(r.real() - den_roots[j].real(),
                                                   r.imag() - den_roots[j].imag());
        const double magnitude = static_cast<double>(std::abs(value));
        if (!std::isfinite(magnitude)) throw NotACauchyTransform("non-finite residue");
        if (magnitude <= 1e-12) continue; // spurious pole from a shared factor

        const double root_tol = 1e-7 * std::max(1.0, std::abs(r));
        if (std::abs(r.imag()) > root_tol)
            throw NotACauchyTransform("complex pole at " + std::to_string(r.real()) + " + " +
                                      std::to_string(r.imag()) + "i");
        const double w = static_cast<double>(value.real());
        if (w < -1e-8) throw NotACauchyTransform("negative residue " + std::to_string(w));
        if (w <= 1e-12) continue;
        atoms.push_back({r.real(), w});
        weight_sum += w;
    }
    if (atoms.empty() || std::abs(weight_sum - 1.0) > 1e-8)
        throw NotACauchyTransform("residues sum to " + std::to_string(weight_sum));
    if (std::abs(weight_sum - 1.0) > 1e-13)
        for (Atom& a : atoms) a.w /= weight_sum;
    return AtomicMeasure(std::move(atoms), merge_tol, 1e-12);
}

} // namespace boolprob
