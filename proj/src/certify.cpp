#include "boolprob/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "boolprob/errors.hpp"
#include "boolprob/functionals.hpp"
#include "boolprob/transform.hpp"

namespace boolprob {

namespace {

// Build the record for an inequality lhs <= rhs under the extended-value
// conventions: rhs = +inf with smaller lhs is satisfied with infinite
// slack; inf vs inf of the same sign carries no information.
InequalitySlack inequality(std::string name, ExtendedReal lhs, ExtendedReal rhs, double tol) {
    InequalitySlack s;
    s.name = std::move(name);
    s.lhs = lhs;
    s.rhs = rhs;
    if (lhs.is_finite() && rhs.is_finite()) {
        s.slack = ExtendedReal(rhs.value() - lhs.value());
        s.status = s.slack.value() >= -tol ? SlackStatus::Satisfied : SlackStatus::Violated;
    } else if ((lhs.is_pos_inf() && rhs.is_pos_inf()) || (lhs.is_neg_inf() && rhs.is_neg_inf())) {
        s.slack = ExtendedReal(0.0);
        s.status = SlackStatus::Indeterminate;
    } else if (rhs.is_pos_inf() || lhs.is_neg_inf()) {
        s.slack = ExtendedReal::pos_inf();
        s.status = SlackStatus::Satisfied;
    } else {
        s.slack = ExtendedReal::neg_inf();
        s.status = SlackStatus::Violated;
    }
    return s;
}

InequalitySlack equality(std::string name, ExtendedReal lhs, ExtendedReal rhs, double tol) {
    InequalitySlack s;
    s.name = std::move(name);
    s.lhs = lhs;
    s.rhs = rhs;
    if (lhs.is_finite() && rhs.is_finite()) {
        s.slack = ExtendedReal(std::abs(lhs.value() - rhs.value()));
        const double eq_tol = 10.0 * tol * std::max(1.0, std::abs(lhs.value()));
        s.status = s.slack.value() <= eq_tol ? SlackStatus::Satisfied : SlackStatus::Violated;
    } else if (lhs == rhs) {
        s.slack = ExtendedReal(0.0);
        s.status = SlackStatus::Indeterminate;
    } else {
        s.slack = ExtendedReal::pos_inf();
        s.status = SlackStatus::Violated;
    }
    return s;
}

ExtendedReal half(const ExtendedReal& v) {
    return v.is_finite() ? ExtendedReal(0.5 * v.value()) : v;
}

// theta * psi + (1-theta) * psi' with the boundary convention that a
// zero-theta term is dropped before it can touch an infinity.
ExtendedReal convex_combination(double theta, const ExtendedReal& a, const ExtendedReal& b) {
    if (theta == 0.0) return b;
    if (theta == 1.0) return a;
    if (a.is_pos_inf() || b.is_pos_inf()) return ExtendedReal::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return ExtendedReal::neg_inf();
    return ExtendedReal(theta * a.value() + (1.0 - theta) * b.value());
}

double inverse_or_zero(const ExtendedReal& v) { return v.is_pos_inf() ? 0.0 : 1.0 / v.value(); }

double exp_twice_or_zero(const ExtendedReal& gamma) {
    return gamma.is_neg_inf() ? 0.0 : std::exp(2.0 * gamma.value());
}

} // namespace

std::vector<InequalitySlack> certify_single(const AtomicMeasure& mu, double tol) {
    if (!mu.is_symmetric()) throw SymmetryError("certify_single requires a symmetric law");
    const FunctionalReport rep = relative_report(mu);
    const double w2 = rep.w2_to_b_sym.value();
    const double d_star = rep.d_star.value();
    const ExtendedReal psi = *rep.psi;
    const ExtendedReal psi_rel = *rep.psi_rel;

    std::vector<InequalitySlack> out;
    out.reserve(17);

    // W2^2 <= 2 Gamma(mu|b)
    out.push_back(inequality("talagrand", ExtendedReal(w2 * w2),
                             rep.gamma_rel.is_finite() ? ExtendedReal(2.0 * rep.gamma_rel.value())
                                                       : rep.gamma_rel,
                             tol));
    // Gamma(mu|b) <= Psi(mu|b)/2
    out.push_back(inequality("lsi_micro", rep.gamma_rel, half(psi_rel), tol));
    // Gamma*(mu|b) <= Psi*(mu|b)/2
    out.push_back(inequality("lsi_nm", rep.gamma_star_rel, half(rep.psi_star_rel), tol));
    // Gamma(mu|b) <= Psi*(mu|b)/2
    out.push_back(inequality("lsi_cross", rep.gamma_rel, half(rep.psi_star_rel), tol));

    // Gamma(mu|b) <= W2 sqrt(Psi*(mu|b)) - W2^2/2
    ExtendedReal hwi_rhs;
    if (rep.psi_star_rel.is_pos_inf())
        hwi_rhs = w2 > 0.0 ? ExtendedReal::pos_inf() : ExtendedReal(0.0);
    else
        hwi_rhs = ExtendedReal(w2 * std::sqrt(rep.psi_star_rel.value()) - 0.5 * w2 * w2);
    out.push_back(inequality("hwi", rep.gamma_rel, hwi_rhs, tol));

    // Degenerate Stein discrepancy: D* = 0 forces mu^(2) = delta_1, so both
    // HSI and WSH sides vanish, provided the entropy agrees.
    const bool d_star_zero = d_star <= 1e-12;
    if (d_star_zero) {
        const bool gamma_rel_zero = rep.gamma_rel.is_finite() && rep.gamma_rel.value() <= 1e-12;
        if (!gamma_rel_zero)
            throw IndeterminateError(
                "zero Stein discrepancy with nonzero relative entropy: numerical inconsistency");
        out.push_back(inequality("hsi", ExtendedReal(0.0), ExtendedReal(0.0), tol));
        out.push_back(inequality("wsh", ExtendedReal(0.0), ExtendedReal(0.0), tol));
    } else {
        // Gamma(mu|b) <= D*^2/2 log(1 + Psi*(mu|b)/D*^2)
        const double d2 = d_star * d_star;
        ExtendedReal hsi_rhs;
        if (rep.psi_star_rel.is_pos_inf())
            hsi_rhs = ExtendedReal::pos_inf();
        else
            hsi_rhs = ExtendedReal(0.5 * d2 * std::log1p(rep.psi_star_rel.value() / d2));
        out.push_back(inequality("hsi", rep.gamma_rel, hsi_rhs, tol));

        // W2 <= D* arccos(exp(-Gamma(mu|b)/D*^2))
        const double expo =
            rep.gamma_rel.is_pos_inf() ? 0.0 : std::exp(-rep.gamma_rel.value() / d2);
        out.push_back(inequality(
            "wsh", ExtendedReal(w2),
            ExtendedReal(d_star * std::acos(std::clamp(expo, 0.0, 1.0))), tol));
    }

    // sqrt(int (|x|-1)^2) <= D*
    out.push_back(inequality("ws", ExtendedReal(w2), ExtendedReal(d_star), tol));

    // 1 <= Psi(mu) m2 and 1 <= Psi*(mu) m2
    const double m2 = rep.m2.value();
    const auto scaled = [m2](const ExtendedReal& v) {
        return v.is_pos_inf() ? v : ExtendedReal(v.value() * m2);
    };
    out.push_back(inequality("cramer_rao_micro", ExtendedReal(1.0), scaled(psi), tol));
    out.push_back(inequality("cramer_rao_nm", ExtendedReal(1.0), scaled(rep.psi_star), tol));

    out.push_back(inequality("micro_le_nm_entropy", rep.gamma_rel, rep.gamma_star_rel, tol));
    out.push_back(inequality("micro_le_nm_fisher", psi_rel, rep.psi_star_rel, tol));
    out.push_back(inequality("psi_rel_nonneg", ExtendedReal(0.0), psi_rel, tol));
    out.push_back(inequality("gamma_rel_nonneg", ExtendedReal(0.0), rep.gamma_rel, tol));
    out.push_back(inequality("fisher_lower_bdd", fisher_lower_bound(mu), psi, tol));
    out.push_back(inequality("fisher_upper_bdd", psi, rep.psi_star, tol));

    // 1 <= exp(2 Gamma) Psi
    if (rep.gamma.is_neg_inf() && psi.is_pos_inf()) {
        // 0 * inf carries no information.
        InequalitySlack s;
        s.name = "fisher_entropy_product";
        s.lhs = ExtendedReal(1.0);
        s.rhs = ExtendedReal::pos_inf();
        s.slack = ExtendedReal(0.0);
        s.status = SlackStatus::Indeterminate;
        out.push_back(std::move(s));
    } else {
        const ExtendedReal product =
            psi.is_pos_inf() ? ExtendedReal::pos_inf()
                             : ExtendedReal(std::exp(2.0 * rep.gamma.value()) * psi.value());
        out.push_back(inequality("fisher_entropy_product", ExtendedReal(1.0), product, tol));
    }
    return out;
}

std::vector<InequalitySlack> certify_pair(const AtomicMeasure& mu, const AtomicMeasure& nu,
                                          double theta, double tol) {
    if (!mu.is_symmetric() || !nu.is_symmetric())
        throw SymmetryError("certify_pair requires symmetric laws");
    if (!(theta >= 0.0 && theta <= 1.0)) throw InputError("theta must lie in [0, 1]");

    const AtomicMeasure mixture = theta == 0.0 ? nu
                                  : theta == 1.0
                                      ? mu
                                      : boolean_convolve(dilate(mu, std::sqrt(theta)),
                                                         dilate(nu, std::sqrt(1.0 - theta)));
    const AtomicMeasure conv = boolean_convolve(mu, nu);

    const ExtendedReal gamma_mu = entropy(mu), gamma_nu = entropy(nu);
    const ExtendedReal psi_mu = fisher(mu), psi_nu = fisher(nu);
    const ExtendedReal nm_mu = nm_fisher(mu), nm_nu = nm_fisher(nu);

    std::vector<InequalitySlack> out;
    out.reserve(8);

    // theta Gamma(mu) + (1-theta) Gamma(nu) <= Gamma(mixture)
    out.push_back(inequality("shannon_stam", convex_combination(theta, gamma_mu, gamma_nu),
                             entropy(mixture), tol));
    // Psi(mixture) <= theta Psi(mu) + (1-theta) Psi(nu)
    out.push_back(inequality("blachman_stam_micro", fisher(mixture),
                             convex_combination(theta, psi_mu, psi_nu), tol));
    out.push_back(inequality("blachman_stam_nm", nm_fisher(mixture),
                             convex_combination(theta, nm_mu, nm_nu), tol));

    // 1/Psi(mu) + 1/Psi(nu) <= 1/Psi(mu [+] nu)
    out.push_back(inequality("stam_micro",
                             ExtendedReal(inverse_or_zero(psi_mu) + inverse_or_zero(psi_nu)),
                             ExtendedReal(inverse_or_zero(fisher(conv))), tol));
    // 1/Psi*(mu [+] nu) = 1/Psi*(mu) + 1/Psi*(nu)
    out.push_back(equality("stam_nm_equality", ExtendedReal(inverse_or_zero(nm_fisher(conv))),
                           ExtendedReal(inverse_or_zero(nm_mu) + inverse_or_zero(nm_nu)), tol));

    // exp(2 Gamma(mu)) + exp(2 Gamma(nu)) <= exp(2 Gamma(mu [+] nu))
    out.push_back(inequality("entropy_power_micro",
                             ExtendedReal(exp_twice_or_zero(gamma_mu) + exp_twice_or_zero(gamma_nu)),
                             ExtendedReal(exp_twice_or_zero(entropy(conv))), tol));
    // exp(2 Gamma*(mu [+] nu)) = exp(2 Gamma*(mu)) + exp(2 Gamma*(nu))
    const auto gamma_star_exp = [](const ExtendedReal& nm) {
        return nm.is_pos_inf() ? 0.0 : std::exp(2.0 * (-0.5 * std::log(nm.value())));
    };
    out.push_back(equality("entropy_power_nm_equality",
                           ExtendedReal(gamma_star_exp(nm_fisher(conv))),
                           ExtendedReal(gamma_star_exp(nm_mu) + gamma_star_exp(nm_nu)), tol));

    // r_i(mu [+] nu) = r_i(mu) + r_i(nu), reported at the worst i.
    const CumulantVector rc = boolean_cumulants(conv);
    const CumulantVector ra = boolean_cumulants(mu);
    const CumulantVector rb = boolean_cumulants(nu);
    const double lhs[4] = {rc.r1, rc.r2, rc.r3, rc.r4};
    const double rhs[4] = {ra.r1 + rb.r1, ra.r2 + rb.r2, ra.r3 + rb.r3, ra.r4 + rb.r4};
    std::size_t worst = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(lhs[i] - rhs[i]) > std::abs(lhs[worst] - rhs[worst])) worst = i;
    out.push_back(
        equality("cumulant_additivity", ExtendedReal(lhs[worst]), ExtendedReal(rhs[worst]), tol));
    return out;
}

double lemma_discrete_slack(const std::vector<double>& x) {
    if (x.empty()) throw InputError("lemma_discrete_slack requires at least one entry");
    double log_sum = 0.0;
    for (double v : x) {
        if (!(v > 0.0)) throw InputError("lemma_discrete_slack requires strictly positive entries");
        log_sum += std::log(v);
    }
    const double geo_mean = std::exp(log_sum / static_cast<double>(x.size()));
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / geo_mean;

    const double n = static_cast<double>(y.size());
    double inv_sum = 0.0, pair_sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        inv_sum += 1.0 / y[i];
        for (std::size_t j = i + 1; j < y.size(); ++j) pair_sum += 2.0 / (y[i] + y[j]);
    }
    return inv_sum / (n * n) + 2.0 * pair_sum / (n * n) - 1.0;
}

AtomicMeasure random_symmetric_measure(std::uint64_t seed, int pairs, double radius_min,
                                       double radius_max) {
    if (pairs < 1 || pairs > 6) throw InputError("pairs must lie in [1, 6]");
    if (!(radius_min > 0.0) || radius_max < radius_min)
        throw InputError("radius range must satisfy 0 < min <= max");

    std::mt19937_64 rng(seed);
    // Portable uniforms straight from the engine bits; std:: distributions
    // are implementation-defined and would break cross-platform determinism.
    const auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::vector<double> radii(pairs);
    const double min_sep = std::min(0.01, (radius_max - radius_min) / (4.0 * pairs + 1.0));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (double& r : radii) r = radius_min + uniform() * (radius_max - radius_min);
        std::sort(radii.begin(), radii.end());
        bool ok = true;
        for (int i = 1; i < pairs; ++i)
            if (radii[i] - radii[i - 1] < min_sep) ok = false;
        if (ok) break;
    }

    // Dirichlet(1,...,1) weights via normalized exponentials; resample when
    // a component is tiny enough to stress residue recovery downstream.
    std::vector<double> weights(pairs);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        double sum = 0.0;
        for (double& w : weights) {
            w = -std::log1p(-uniform());
            sum += w;
        }
        for (double& w : weights) w /= sum;
        if (*std::min_element(weights.begin(), weights.end()) >= 1e-4) break;
    }

    std::vector<Atom> atoms;
    atoms.reserve(2 * pairs);
    for (int i = 0; i < pairs; ++i) {
        atoms.push_back({-radii[i], weights[i] / 2});
        atoms.push_back({radii[i], weights[i] / 2});
    }
    return AtomicMeasure(std::move(atoms));
}

} // namespace boolprob
