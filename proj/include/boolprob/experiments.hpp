#ifndef BOOLPROB_EXPERIMENTS_HPP
#define BOOLPROB_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "boolprob/functionals.hpp"
#include "boolprob/measure.hpp"

namespace boolprob {

// One CLT step mu_n with its functionals and the quantitative slacks of the
// Berry-Esseen machinery. A row after a numerical failure is marked failed
// instead of aborting the table.
struct CltRow {
    int n = 0;
    bool failed = false;
    std::string failure;
    FunctionalReport report;
    double w1 = 0.0;                       // W1(mu_n, b)
    double w2 = 0.0;                       // W2(mu_n^s, b)
    double d_star_identity_residual = 0.0; // |n D*(mu_n|b)^2 - r4(mu)|
    double w1_bound_slack = 0.0;           // D*(mu_n|b) - W1(mu_n, b)
    double w2_bound_slack = 0.0;           // D*(mu_n|b) - W2(mu_n^s, b)
};

// Rows for n = 1..n_max, computed on up to `jobs` threads (rows are
// independent). Requires mu symmetric with m1 = 0, m2 = 1.
std::vector<CltRow> clt_table(const AtomicMeasure& mu, int n_max, int jobs = 1);

struct DeBruijnResidual {
    double micro = 0.0; // |Gamma(flow t) - Gamma(mu) - int_0^t Psi(flow s)/2 ds|
    double nm = 0.0;    // |Gamma*(flow t) - Gamma*(mu) - log(1 + t Psi*(mu))/2|
};

// Checks both de Bruijn identities along the heat flow; the microstates
// integral is evaluated by adaptive Simpson quadrature to quad_tol.
// Requires mu symmetric without an atom at zero.
DeBruijnResidual de_bruijn_residual(const AtomicMeasure& mu, double t, double quad_tol);

struct MonotonicityReport {
    std::vector<int> ns;
    std::vector<double> psi;   // Psi(mu_n), must be nonincreasing
    std::vector<double> gamma; // Gamma(mu_n), must be nondecreasing
    std::vector<double> t_grid;
    std::vector<double> psi_sq_t; // squared-kernel Fisher along the t-family
    bool psi_monotone = true;
    bool gamma_monotone = true;
    bool psi_t_monotone = true;
    // Consecutive Psi values that agree to 1e-10; genuine only for two-atom
    // inputs (the Rademacher-type equality case).
    bool equality_detected = false;
    bool equality_is_rademacher_type = false;
    std::vector<std::string> violations;
    bool ok() const {
        return psi_monotone && gamma_monotone && psi_t_monotone &&
               (!equality_detected || equality_is_rademacher_type);
    }
};

MonotonicityReport monotonicity_scan(const AtomicMeasure& mu, int n_max,
                                     const std::vector<double>& t_grid);

struct RateRow {
    int n = 0;
    double gamma_rel = 0.0;              // Gamma(mu_n|b)
    double psi_rel = 0.0;                // Psi(mu_n|b)
    double entropic_hsi_slack = 0.0;     // (r4/2n) log(1 + n Psi*(mu|b)/r4) - Gamma(mu_n|b)
    double fisher_rate_slack = 0.0;      // m_{-2} sqrt(m4-1)/sqrt(n) - Psi(mu_n|b)
    double psi_star_residual = 0.0;      // |Psi*(mu_n) - Psi*(mu)|
    double gamma_star_residual = 0.0;    // |Gamma*(mu_n) - Gamma*(mu)|
};

// Entropic and Fisher convergence rates plus the constancy residuals of the
// non-microstates quantities. Requires mu symmetric, m1 = 0, m2 = 1, no
// atom at zero.
std::vector<RateRow> entropic_rate_scan(const AtomicMeasure& mu, const std::vector<int>& n_list);

struct DecayRow {
    double t = 0.0;
    double gamma_slack = 0.0;      // e^{-2t} Gamma(mu|b) - Gamma(ou_flow(mu,t)|b)
    double gamma_star_slack = 0.0; // same for Gamma*
    bool gamma_slack_infinite = false;
    bool gamma_star_slack_infinite = false;
};

// Exponential decay of the relative entropies along the Ornstein-Uhlenbeck
// flow. Requires mu symmetric with finite variance.
std::vector<DecayRow> exp_decay_scan(const AtomicMeasure& mu, const std::vector<double>& t_grid);

} // namespace boolprob

#endif
