#ifndef BOOLPROB_CERTIFY_HPP
#define BOOLPROB_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boolprob/extended_real.hpp"
#include "boolprob/measure.hpp"

namespace boolprob {

// Outcome of one inequality or identity check. Indeterminate marks
// extended-value comparisons (inf vs inf) that carry no information; fuzz
// campaigns exclude those from pass/fail.
enum class SlackStatus : std::uint8_t { Satisfied, Violated, Indeterminate };

struct InequalitySlack {
    std::string name;
    ExtendedReal lhs;
    ExtendedReal rhs;
    // rhs - lhs for inequalities lhs <= rhs; |residual| for equalities.
    ExtendedReal slack;
    SlackStatus status = SlackStatus::Satisfied;

    bool satisfied() const { return status != SlackStatus::Violated; }
};

// Default absolute slack tolerance; equality residuals use the mixed
// tolerance 10*tol*max(1, |lhs|) (1e-8 at the default).
inline constexpr double kDefaultSlackTol = 1e-9;

// All seventeen single-measure inequalities of the functional hierarchy:
// talagrand, lsi_micro, lsi_nm, lsi_cross, hwi, hsi, wsh, ws,
// cramer_rao_micro, cramer_rao_nm, micro_le_nm_entropy, micro_le_nm_fisher,
// psi_rel_nonneg, gamma_rel_nonneg, fisher_lower_bdd, fisher_upper_bdd,
// fisher_entropy_product. Requires a symmetric law.
std::vector<InequalitySlack> certify_single(const AtomicMeasure& mu, double tol = kDefaultSlackTol);

// Two-measure inequalities and identities at mixing weight theta in [0,1]:
// shannon_stam, blachman_stam_micro, blachman_stam_nm, stam_micro,
// stam_nm_equality, entropy_power_micro, entropy_power_nm_equality,
// cumulant_additivity. Mixture laws are built as
// dilate(mu, sqrt(theta)) [+] dilate(nu, sqrt(1-theta)), dropping the
// vanishing component at the boundary.
std::vector<InequalitySlack> certify_pair(const AtomicMeasure& mu, const AtomicMeasure& nu,
                                          double theta, double tol = kDefaultSlackTol);

// (1/n^2) sum 1/x_i + (2/n^2) sum_{i<j} 2/(x_i+x_j) - 1 after rescaling the
// inputs by their geometric mean; nonnegative, zero only at the all-ones
// vector. Throws InputError on a non-positive entry.
double lemma_discrete_slack(const std::vector<double>& x);

// Deterministic random symmetric measure: `pairs` atom pairs +-r with radii
// drawn in radius_range and Dirichlet pair weights. Same seed, same measure.
AtomicMeasure random_symmetric_measure(std::uint64_t seed, int pairs, double radius_min,
                                       double radius_max);

} // namespace boolprob

#endif
