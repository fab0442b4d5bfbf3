#include "boolprob/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "boolprob/errors.hpp"

namespace boolprob {

namespace {

void trim(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

void check_degree(std::size_t ncoeffs) {
    if (static_cast<int>(ncoeffs) - 1 > kMaxPolyDegree)
        throw CapacityError("polynomial degree exceeds cap of " + std::to_string(kMaxPolyDegree));
}

} // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim(coeffs_);
    check_degree(coeffs_.size());
}

Polynomial Polynomial::monomial(double c, int k) {
    std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_real_roots(const std::vector<double>& roots, double lead) {
    std::vector<double> c{lead};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_scale(double s) const {
    std::vector<double> c = coeffs_;
    double f = 1.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        f *= s;
        c[i] *= f;
    }
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    check_degree(a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> c = p.coeffs_;
    for (double& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::deflate(double root) const {
    if (coeffs_.size() == 1) return *this;
    std::vector<double> q(coeffs_.size() - 1, 0.0);
    double carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + root * carry;
    }
    return Polynomial(std::move(q));
}

namespace {

// Eigenvalues of a real upper Hessenberg matrix by the shifted QR algorithm
// (Francis double shift with implicit bulge chasing). The matrix is
// destroyed. Standard dense formulation; adequate up to the degree cap.
std::vector<std::complex<double>> hessenberg_eigenvalues(std::vector<double>& h, int n) {
    auto H = [&](int i, int j) -> double& { return h[static_cast<std::size_t>(i) * n + j]; };
    std::vector<std::complex<double>> eig;
    eig.reserve(n);

    const double eps = std::numeric_limits<double>::epsilon();
    int high = n - 1;
    int iter_budget = 40 * n + 100;

    while (high >= 0) {
        if (iter_budget-- <= 0)
            throw NotACauchyTransform("eigenvalue iteration failed to converge");

        // Deflate: find the largest l <= high with a negligible subdiagonal
        // just below it, so the active block is [l, high].
        int l = high;
        while (l > 0) {
            const double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
            const double thresh = eps * (s != 0.0 ? s : 1.0);
            if (std::abs(H(l, l - 1)) <= thresh) {
                H(l, l - 1) = 0.0;
                break;
            }
            --l;
        }

        if (l == high) {
            eig.emplace_back(H(high, high), 0.0);
            --high;
            continue;
        }
        if (l == high - 1) {
            // 2x2 block: solve its characteristic quadratic directly.
            const double a = H(high - 1, high - 1), b = H(high - 1, high);
            const double c = H(high, high - 1), d = H(high, high);
            const double tr = a + d;
            const double det = a * d - b * c;
            const double disc = tr * tr / 4.0 - det;
            if (disc >= 0.0) {
                const double root = std::sqrt(disc);
                double e1 = tr / 2.0 + (tr >= 0 ? root : -root);
                double e2 = (e1 != 0.0) ? det / e1 : tr / 2.0 - root;
                eig.emplace_back(e1, 0.0);
                eig.emplace_back(e2, 0.0);
            } else {
                const double im = std::sqrt(-disc);
                eig.emplace_back(tr / 2.0, im);
                eig.emplace_back(tr / 2.0, -im);
            }
            high -= 2;
            continue;
        }

        // Double-shift from the trailing 2x2 of the active block. Every few
        // stalls an exceptional shift breaks symmetry-induced cycles.
        double s = H(high - 1, high - 1) + H(high, high);
        double t = H(high - 1, high - 1) * H(high, high) - H(high - 1, high) * H(high, high - 1);
        if (iter_budget % (10 * n + 1) == 0) {
            const double w = std::abs(H(high, high - 1)) + std::abs(H(high - 1, high - 2));
            s = 1.5 * w;
            t = w * w;
        }

        // First column of H^2 - s H + t I restricted to rows l..l+2.
        double x = H(l, l) * H(l, l) + H(l, l + 1) * H(l + 1, l) - s * H(l, l) + t;
        double y = H(l + 1, l) * (H(l, l) + H(l + 1, l + 1) - s);
        double z = (l + 2 <= high) ? H(l + 2, l + 1) * H(l + 1, l) : 0.0;

        for (int k = l; k <= high - 1; ++k) {
            // Householder reflection annihilating (y, z) against x.
            const double scale = std::abs(x) + std::abs(y) + std::abs(z);
            if (scale == 0.0) {
                x = H(k + 1, k);
                y = (k + 2 <= high) ? H(k + 2, k) : 0.0;
                z = (k + 3 <= high) ? H(k + 3, k) : 0.0;
                continue;
            }
            double xs = x / scale, ys = y / scale, zs = z / scale;
            double norm = std::sqrt(xs * xs + ys * ys + zs * zs);
            if (xs < 0) norm = -norm;
            const double v0 = xs + norm, v1 = ys, v2 = zs;
            const double beta = (norm * v0 != 0.0) ? 1.0 / (norm * v0) : 0.0;

            // Apply I - beta v v^T from the left to rows k..k+2.
            for (int j = std::max(l, k - 1); j <= high; ++j) {
                double sum = v0 * H(k, j) + v1 * H(k + 1, j);
                if (k + 2 <= high) sum += v2 * H(k + 2, j);
                sum *= beta;
                H(k, j) -= sum * v0;
                H(k + 1, j) -= sum * v1;
                if (k + 2 <= high) H(k + 2, j) -= sum * v2;
            }
            // And from the right to columns k..k+2.
            for (int i = l; i <= std::min(k + 3, high); ++i) {
                double sum = v0 * H(i, k) + v1 * H(i, k + 1);
                if (k + 2 <= high) sum += v2 * H(i, k + 2);
                sum *= beta;
                H(i, k) -= sum * v0;
                H(i, k + 1) -= sum * v1;
                if (k + 2 <= high) H(i, k + 2) -= sum * v2;
            }

            x = H(k + 1, k);
            y = (k + 2 <= high) ? H(k + 2, k) : 0.0;
            z = (k + 3 <= high) ? H(k + 3, k) : 0.0;
        }
        // Restore the Hessenberg pattern below the chased bulge.
        for (int i = l + 2; i <= high; ++i)
            for (int j = l; j <= i - 2; ++j) H(i, j) = 0.0;
    }
    return eig;
}

// Parlett–Reinsch style balancing by powers of two; reduces the norm spread
// of companion matrices whose coefficients span many orders of magnitude.
void balance(std::vector<double>& h, int n) {
    auto H = [&](int i, int j) -> double& { return h[static_cast<std::size_t>(i) * n + j]; };
    bool converged = false;
    for (int pass = 0; pass < 32 && !converged; ++pass) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::abs(H(i, j));
                col += std::abs(H(j, i));
            }
            if (row == 0.0 || col == 0.0) continue;
            double f = 1.0;
            const double s = row + col;
            while (col < row / 2.0) {
                col *= 2.0;
                row /= 2.0;
                f *= 2.0;
            }
            while (col > row * 2.0) {
                col /= 2.0;
                row *= 2.0;
                f /= 2.0;
            }
            if ((row + col) < 0.95 * s && f != 1.0) {
                converged = false;
                for (int j = 0; j < n; ++j) H(i, j) /= f;
                for (int j = 0; j < n; ++j) H(j, i) *= f;
            }
        }
    }
}

} // namespace

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    const int n = p.degree();
    if (n == 0) return {};

    // Rescale by the largest coefficient magnitude, then normalize monic.
    std::vector<double> c = p.coeffs();
    double maxc = 0.0;
    for (double v : c) maxc = std::max(maxc, std::abs(v));
    for (double& v : c) v /= maxc;
    const double lead = c.back();
    for (double& v : c) v /= lead;

    std::vector<std::complex<double>> roots;
    if (n == 1) {
        roots = {std::complex<double>(-c[0], 0.0)};
    } else if (n == 2) {
        const double b = c[1], q = c[0];
        const double disc = b * b / 4.0 - q;
        if (disc >= 0.0) {
            const double root = std::sqrt(disc);
            double r1 = -b / 2.0 - (b >= 0 ? root : -root);
            double r2 = (r1 != 0.0) ? q / r1 : -b / 2.0 + root;
            roots = {r1, r2};
        } else {
            const double im = std::sqrt(-disc);
            roots = {{-b / 2.0, im}, {-b / 2.0, -im}};
        }
    } else {
        std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 1; i < n; ++i) h[static_cast<std::size_t>(i) * n + (i - 1)] = 1.0;
        for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i) * n + (n - 1)] = -c[i];
        balance(h, n);
        roots = hessenberg_eigenvalues(h, n);
    }

    // One Newton polish step per root against the rescaled polynomial,
    // evaluated in extended precision so the step is limited by the root
    // conditioning rather than by Horner round-off.
    std::vector<long double> cs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cs[i] = static_cast<long double>(p.coeffs()[i]) / maxc;
    const auto eval_with_derivative = [&cs](std::complex<long double> z,
                                            std::complex<long double>& dp) {
        std::complex<long double> v = 0.0L;
        dp = 0.0L;
        for (std::size_t i = cs.size(); i-- > 0;) {
            dp = dp * z + v;
            v = v * z + cs[i];
        }
        return v;
    };
    for (auto& r : roots) {
        std::complex<long double> dp;
        const std::complex<long double> v =
            eval_with_derivative(std::complex<long double>(r.real(), r.imag()), dp);
        if (std::abs(dp) == 0.0L) continue;
        const std::complex<long double> step = v / dp;
        const double sr = static_cast<double>(step.real());
        const double si = static_cast<double>(step.imag());
        if (!std::isfinite(sr) || !std::isfinite(si)) continue;
        // Guarded step: near a root cluster the QR estimate sits close to a
        // zero of p', where the raw Newton correction is arbitrary. Only
        // accept a step that actually reduces |p|.
        const std::complex<double> candidate = r - std::complex<double>(sr, si);
        std::complex<long double> dp2;
        const std::complex<long double> v2 =
            eval_with_derivative(std::complex<long double>(candidate.real(), candidate.imag()),
                                 dp2);
        if (std::abs(v2) <= std::abs(v)) r = candidate;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace boolprob
