#ifndef BOOLPROB_POLYNOMIAL_HPP
#define BOOLPROB_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace boolprob {

// Degrees beyond this refuse with CapacityError instead of silently losing
// accuracy in double precision.
inline constexpr int kMaxPolyDegree = 64;

// Real polynomial, coefficients in ascending degree, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }
    // The monomial c * z^k.
    static Polynomial monomial(double c, int k);
    static Polynomial from_real_roots(const std::vector<double>& roots, double lead = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.back(); }
    double operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    double eval(double x) const;
    std::complex<double> eval(std::complex<double> z) const;

    Polynomial derivative() const;
    // p(s*z): coefficient k scaled by s^k.
    Polynomial compose_scale(double s) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& p);

    // Synthetic division by (z - root); the remainder is discarded.
    Polynomial deflate(double root) const;

private:
    std::vector<double> coeffs_;
};

// All complex roots of p via the balanced companion matrix (Hessenberg QR
// with Francis double shifts), each followed by one Newton polish step.
// Coefficients are rescaled by the largest magnitude before factoring.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

} // namespace boolprob

#endif
