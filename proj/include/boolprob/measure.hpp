#ifndef BOOLPROB_MEASURE_HPP
#define BOOLPROB_MEASURE_HPP

#include <string>
#include <vector>

#include "boolprob/extended_real.hpp"

namespace boolprob {

struct Atom {
    double x; // location
    double w; // weight, strictly positive
};

// First four Boolean cumulants of a law.
struct CumulantVector {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
};

inline constexpr double kDefaultMergeTol = 1e-9;
inline constexpr double kWeightSumTol = 1e-9;

// A finitely-supported probability measure on the real line. Atoms are kept
// sorted by location, locations closer than merge_tol are merged (weights
// summed), weights are strictly positive and renormalized to sum exactly to
// one. Immutable after construction.
class AtomicMeasure {
public:
    // Throws InputError if a weight is non-positive or the weight sum is off
    // by more than weight_sum_tol before renormalization.
    explicit AtomicMeasure(std::vector<Atom> atoms,
                           double merge_tol = kDefaultMergeTol,
                           double weight_sum_tol = kWeightSumTol);

    static AtomicMeasure dirac(double x) { return AtomicMeasure({{x, 1.0}}); }
    // The Rademacher law, the equilibrium measure of the Boolean CLT.
    static AtomicMeasure rademacher() { return AtomicMeasure({{-1.0, 0.5}, {1.0, 0.5}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double merge_tol() const { return merge_tol_; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool has_atom_at_zero() const;
    // Exact pairing check: every atom (x,w), x != 0, is matched by (-x,w).
    bool is_symmetric(double loc_tol = kDefaultMergeTol, double weight_tol = 1e-12) const;

    friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
        return a.atoms_.size() == b.atoms_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.atoms_.size(); ++i)
                       if (a.atoms_[i].x != b.atoms_[i].x || a.atoms_[i].w != b.atoms_[i].w)
                           return false;
                   return true;
               }();
    }

private:
    std::vector<Atom> atoms_;
    double merge_tol_;
    std::string name_;
};

// mu^s, the symmetrization: each atom (x,w) contributes w/2 at +-x; an atom
// at zero keeps its full weight. Idempotent.
AtomicMeasure symmetrize(const AtomicMeasure& mu);

// Push-forward by x -> a*x. Throws InputError for a == 0.
AtomicMeasure dilate(const AtomicMeasure& mu, double a);

// Push-forward by x -> x^2; supported on [0, inf).
AtomicMeasure square_pushforward(const AtomicMeasure& mu);

// Inverse of square_pushforward on symmetric laws: (y,w) with y>0 becomes
// (+-sqrt(y), w/2), an atom at zero is preserved. Locations must be >= 0
// (tiny negatives within merge_tol are treated as zero).
AtomicMeasure symmetric_sqrt_pullback(const AtomicMeasure& nu);

// k-th moment, k any integer. With an atom at zero and k < 0: +inf for even
// k, DomainError for odd k (the signed contributions are undefined).
ExtendedReal moment(const AtomicMeasure& mu, int k);

// First four Boolean cumulants, solved exactly from the triangular
// moment-cumulant system.
CumulantVector boolean_cumulants(const AtomicMeasure& mu);

// Inverse of boolean_cumulants: first four moments from cumulants.
// Used by round-trip tests and by certification residuals.
void cumulants_to_moments(const CumulantVector& r, double& m1, double& m2, double& m3, double& m4);

} // namespace boolprob

#endif
