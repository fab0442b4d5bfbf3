#include "boolprob/experiments.hpp"

#include <cmath>
#include <functional>

#include "boolprob/errors.hpp"
#include "boolprob/parallel.hpp"
#include "boolprob/transform.hpp"

namespace boolprob {

namespace {

void require_clt_normalized(const AtomicMeasure& mu, const char* who) {
    if (!mu.is_symmetric()) throw SymmetryError(std::string(who) + " requires a symmetric law");
    const double m1 = moment(mu, 1).value();
    const double m2 = moment(mu, 2).value();
    if (std::abs(m1) > 1e-9 || std::abs(m2 - 1.0) > 1e-9)
        throw InputError(std::string(who) + " requires m1 = 0 and m2 = 1");
}

// Adaptive Simpson with Richardson correction; each node is evaluated once
// and passed down the recursion. Depth capped at 30.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 30);
}

} // namespace

std::vector<CltRow> clt_table(const AtomicMeasure& mu, int n_max, int jobs) {
    require_clt_normalized(mu, "clt_table");
    if (n_max < 1) throw InputError("clt_table requires n_max >= 1");
    const double r4 = boolean_cumulants(mu).r4;
    const AtomicMeasure b = AtomicMeasure::rademacher();

    std::vector<CltRow> rows(static_cast<std::size_t>(n_max));
    parallel_for(jobs, n_max, [&](int i) {
        CltRow& row = rows[static_cast<std::size_t>(i)];
        const int n = i + 1;
        row.n = n;
        try {
            const AtomicMeasure mu_n = clt_measure(mu, n);
            row.report = relative_report(mu_n);
            const double d_star = row.report.d_star.value();
            row.w1 = wasserstein(mu_n, b, 1);
            row.w2 = wasserstein(symmetrize(mu_n), b, 2);
            row.d_star_identity_residual = std::abs(n * d_star * d_star - r4);
            row.w1_bound_slack = d_star - row.w1;
            row.w2_bound_slack = d_star - row.w2;
        } catch (const Error& e) {
            row.failed = true;
            row.failure = e.what();
        }
    });
    return rows;
}

DeBruijnResidual de_bruijn_residual(const AtomicMeasure& mu, double t, double quad_tol) {
    if (!mu.is_symmetric()) throw SymmetryError("de_bruijn_residual requires a symmetric law");
    if (mu.has_atom_at_zero())
        throw DomainError("de_bruijn_residual requires no atom at zero along the flow");
    if (!(t > 0.0)) throw InputError("de_bruijn_residual requires t > 0");
    if (!(quad_tol > 0.0)) throw InputError("quad_tol must be positive");

    DeBruijnResidual res;
    const double gamma_0 = entropy(mu).value();
    const double gamma_t = entropy(heat_flow(mu, t)).value();
    const auto half_fisher_along_flow = [&mu](double s) {
        return 0.5 * fisher(heat_flow(mu, s)).value();
    };
    res.micro = std::abs(gamma_t - gamma_0 - integrate(half_fisher_along_flow, 0.0, t, quad_tol));

    const double psi_star = nm_fisher(mu).value();
    const double gamma_star_0 = -0.5 * std::log(psi_star);
    const double gamma_star_t = -0.5 * std::log(nm_fisher(heat_flow(mu, t)).value());
    res.nm = std::abs(gamma_star_t - gamma_star_0 - 0.5 * std::log1p(t * psi_star));
    return res;
}

MonotonicityReport monotonicity_scan(const AtomicMeasure& mu, int n_max,
                                     const std::vector<double>& t_grid) {
    require_clt_normalized(mu, "monotonicity_scan");
    if (n_max < 1) throw InputError("monotonicity_scan requires n_max >= 1");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 1.0)) throw InputError("t_grid entries must be >= 1");
        if (i > 0 && t_grid[i] < t_grid[i - 1]) throw InputError("t_grid must be sorted ascending");
    }
    constexpr double tol = 1e-10;

    MonotonicityReport rep;
    for (int n = 1; n <= n_max; ++n) {
        const AtomicMeasure mu_n = clt_measure(mu, n);
        rep.ns.push_back(n);
        rep.psi.push_back(fisher(mu_n).value());
        rep.gamma.push_back(entropy(mu_n).value());
    }
    for (std::size_t i = 1; i < rep.psi.size(); ++i) {
        if (rep.psi[i] > rep.psi[i - 1] + tol) {
            rep.psi_monotone = false;
            rep.violations.push_back("psi increased at n = " + std::to_string(rep.ns[i]));
        }
        if (rep.gamma[i] < rep.gamma[i - 1] - tol) {
            rep.gamma_monotone = false;
            rep.violations.push_back("gamma decreased at n = " + std::to_string(rep.ns[i]));
        }
        if (std::abs(rep.psi[i] - rep.psi[i - 1]) <= tol) {
            rep.equality_detected = true;
            // Equality characterizes the scaled Rademacher laws.
            rep.equality_is_rademacher_type = mu.size() == 2;
            if (!rep.equality_is_rademacher_type)
                rep.violations.push_back("psi constant at n = " + std::to_string(rep.ns[i]) +
                                         " for a non-two-atom law");
        }
    }

    rep.t_grid = t_grid;
    for (double t : t_grid)
        rep.psi_sq_t.push_back(fisher_of_squared(continuous_sq_power(mu, t)).value());
    for (std::size_t i = 1; i < rep.psi_sq_t.size(); ++i) {
        if (rep.psi_sq_t[i] > rep.psi_sq_t[i - 1] + tol) {
            rep.psi_t_monotone = false;
            rep.violations.push_back("squared-kernel psi increased at t index " + std::to_string(i));
        }
    }
    return rep;
}

std::vector<RateRow> entropic_rate_scan(const AtomicMeasure& mu, const std::vector<int>& n_list) {
    require_clt_normalized(mu, "entropic_rate_scan");
    if (mu.has_atom_at_zero())
        throw DomainError("entropic_rate_scan requires no atom at zero");
    const double r4 = boolean_cumulants(mu).r4;
    const double m4 = moment(mu, 4).value();
    const double m_neg2 = moment(mu, -2).value();
    const double psi_star = m_neg2;
    const double gamma_star = -0.5 * std::log(psi_star);
    const double psi_star_rel = psi_star + 1.0 - 2.0; // m2 = 1

    std::vector<RateRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        if (n < 1) throw InputError("n_list entries must be >= 1");
        const AtomicMeasure mu_n = clt_measure(mu, n);
        RateRow row;
        row.n = n;
        const FunctionalReport rep = relative_report(mu_n);
        row.gamma_rel = rep.gamma_rel.value();
        row.psi_rel = rep.psi_rel->value();

        // HSI instantiated with the exact discrepancy D*^2 = r4/n.
        const double d2 = r4 / n;
        const double hsi_bound = d2 <= 1e-12 ? 0.0 : 0.5 * d2 * std::log1p(psi_star_rel / d2);
        row.entropic_hsi_slack = hsi_bound - row.gamma_rel;
        row.fisher_rate_slack = m_neg2 * std::sqrt(m4 - 1.0) / std::sqrt(n) - row.psi_rel;
        row.psi_star_residual = std::abs(rep.psi_star.value() - psi_star);
        row.gamma_star_residual = std::abs(rep.gamma_star.value() - gamma_star);
        rows.push_back(row);
    }
    return rows;
}

std::vector<DecayRow> exp_decay_scan(const AtomicMeasure& mu, const std::vector<double>& t_grid) {
    if (!mu.is_symmetric()) throw SymmetryError("exp_decay_scan requires a symmetric law");
    const FunctionalReport rep0 = relative_report(mu);

    std::vector<DecayRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t >= 0.0)) throw InputError("t_grid entries must be >= 0");
        const AtomicMeasure flowed = ou_flow(mu, t);
        const FunctionalReport rep = relative_report(flowed);
        const double decay = std::exp(-2.0 * t);
        DecayRow row;
        row.t = t;
        // An atom at zero makes the initial relative entropy infinite while
        // the flow at t > 0 has left it; the slack is then trivially +inf.
        if (rep0.gamma_rel.is_pos_inf()) {
            row.gamma_slack_infinite = !rep.gamma_rel.is_pos_inf();
            row.gamma_slack = 0.0;
        } else {
            row.gamma_slack = decay * rep0.gamma_rel.value() - rep.gamma_rel.value();
        }
        if (rep0.gamma_star_rel.is_pos_inf()) {
            row.gamma_star_slack_infinite = !rep.gamma_star_rel.is_pos_inf();
            row.gamma_star_slack = 0.0;
        } else {
            row.gamma_star_slack = decay * rep0.gamma_star_rel.value() - rep.gamma_star_rel.value();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace boolprob
