#include "boolprob/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "boolprob/errors.hpp"

namespace boolprob {

namespace {

// (log y - log y')/(y - y') for y, y' > 0 with the continuous extension on
// the diagonal. Near-equal pairs use the diagonal value to avoid
// catastrophic cancellation; otherwise log1p keeps the quotient accurate.
double log_difference_kernel(double y1, double y2) {
    const double d = y1 - y2;
    if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(y1))) return 2.0 / (y1 + y2);
    return std::log1p(d / y2) / d;
}

} // namespace

ExtendedReal entropy(const AtomicMeasure& mu) {
    if (mu.has_atom_at_zero()) return ExtendedReal::neg_inf();
    double sum = 0.0;
    for (const Atom& a : mu.atoms()) sum += a.w * std::log(std::abs(a.x));
    return ExtendedReal(sum);
}

ExtendedReal fisher_of_squared(const AtomicMeasure& nu) {
    if (nu.has_atom_at_zero()) return ExtendedReal::pos_inf();
    const auto& atoms = nu.atoms();
    double sum = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        sum += atoms[i].w * atoms[i].w / atoms[i].x;
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            sum += 2.0 * atoms[i].w * atoms[j].w * log_difference_kernel(atoms[i].x, atoms[j].x);
    }
    return ExtendedReal(sum);
}

ExtendedReal fisher(const AtomicMeasure& mu) {
    if (!mu.is_symmetric())
        throw SymmetryError("fisher requires a symmetric law; symmetrize explicitly if intended");
    return fisher_of_squared(square_pushforward(mu));
}

double fisher_asymmetric(const AtomicMeasure& mu) {
    if (mu.has_atom_at_zero())
        throw DomainError("the non-symmetric Fisher expression is undefined with an atom at zero");
    const auto& atoms = mu.atoms();
    const auto g = [](double x) { return std::log(x * x) / x; };
    double sum = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const double x = atoms[i].x;
        sum += atoms[i].w * atoms[i].w * (2.0 - std::log(x * x)) / (x * x);
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            const double y = atoms[j].x;
            double k;
            if (std::abs(x - y) < 1e-12 * std::max(1.0, std::abs(x)))
                k = (2.0 - std::log(x * x)) / (x * x);
            else
                k = (g(x) - g(y)) / (x - y);
            sum += 2.0 * atoms[i].w * atoms[j].w * k;
        }
    }
    return sum;
}

ExtendedReal nm_fisher(const AtomicMeasure& mu) { return moment(mu, -2); }

ExtendedReal fisher_lower_bound(const AtomicMeasure& mu) {
    const auto& atoms = mu.atoms();
    double sum = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double s = atoms[i].x * atoms[i].x + atoms[j].x * atoms[j].x;
            if (s == 0.0) return ExtendedReal::pos_inf();
            sum += atoms[i].w * atoms[j].w * 2.0 / s;
        }
    }
    return ExtendedReal(sum);
}

double nm_fisher_heatflow(double psi_star, double t) {
    if (!(psi_star > 0.0)) throw InputError("nm_fisher_heatflow requires psi_star > 0");
    if (!(t >= 0.0)) throw InputError("nm_fisher_heatflow requires t >= 0");
    return psi_star / (1.0 + t * psi_star);
}

double w2_to_rademacher(const AtomicMeasure& mu) {
    double sum = 0.0;
    for (const Atom& a : mu.atoms()) {
        const double d = std::abs(a.x) - 1.0;
        sum += a.w * d * d;
    }
    return std::sqrt(sum);
}

FunctionalReport relative_report(const AtomicMeasure& mu) {
    FunctionalReport rep;
    rep.m2 = moment(mu, 2);
    rep.m4 = moment(mu, 4);
    rep.m_neg2 = moment(mu, -2);
    const double m2 = rep.m2.value();

    rep.gamma = entropy(mu);
    rep.gamma_rel = rep.gamma.is_neg_inf() ? ExtendedReal::pos_inf()
                                           : ExtendedReal(0.5 * m2 - rep.gamma.value() - 0.5);

    rep.psi_star = rep.m_neg2;
    if (rep.psi_star.is_pos_inf()) {
        rep.gamma_star = ExtendedReal::neg_inf();
        rep.gamma_star_rel = ExtendedReal::pos_inf();
        rep.psi_star_rel = ExtendedReal::pos_inf();
    } else {
        const double ps = rep.psi_star.value();
        rep.gamma_star = ExtendedReal(-0.5 * std::log(ps));
        rep.gamma_star_rel = ExtendedReal(0.5 * m2 + 0.5 * std::log(ps) - 0.5);
        rep.psi_star_rel = ExtendedReal(ps + m2 - 2.0);
    }

    if (mu.is_symmetric()) {
        rep.psi = fisher(mu);
        rep.psi_rel = rep.psi->is_pos_inf() ? ExtendedReal::pos_inf()
                                            : ExtendedReal(rep.psi->value() + m2 - 2.0);
    }

    rep.d_star = ExtendedReal(std::sqrt(std::max(0.0, rep.m4.value() - 2.0 * m2 + 1.0)));
    rep.w2_to_b_sym = ExtendedReal(w2_to_rademacher(mu));
    return rep;
}

double wasserstein(const AtomicMeasure& mu, const AtomicMeasure& nu, int p) {
    if (p != 1 && p != 2) throw InputError("wasserstein supports p = 1 and p = 2 only");
    const auto& a = mu.atoms();
    const auto& b = nu.atoms();
    std::size_t i = 0, j = 0;
    double rem_a = a[0].w, rem_b = b[0].w;
    double cost = 0.0;
    // Quantile (inverse-CDF) coupling: walk both supports in lockstep,
    // shipping the smaller remaining mass at each step.
    while (i < a.size() && j < b.size()) {
        const double m = std::min(rem_a, rem_b);
        const double d = std::abs(a[i].x - b[j].x);
        cost += m * (p == 1 ? d : d * d);
        rem_a -= m;
        rem_b -= m;
        if (rem_a <= 1e-15) {
            if (++i < a.size()) rem_a = a[i].w;
        }
        if (rem_b <= 1e-15) {
            if (++j < b.size()) rem_b = b[j].w;
        }
    }
    return p == 1 ? cost : std::sqrt(cost);
}

} // namespace boolprob
