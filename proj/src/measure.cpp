#include "boolprob/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "boolprob/errors.hpp"

namespace boolprob {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double merge_tol, double weight_sum_tol)
    : merge_tol_(merge_tol) {
    if (atoms.empty()) throw InputError("measure must have at least one atom");
    if (merge_tol <= 0) throw InputError("merge_tol must be positive");
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.x)) throw InputError("atom location must be finite");
        if (!std::isfinite(a.w) || a.w <= 0.0)
            throw InputError("atom weight must be strictly positive");
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });

    // Merge runs of locations within merge_tol; merged location is the
    // weighted mean so that the first moment is preserved.
    atoms_.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!atoms_.empty() && a.x - atoms_.back().x <= merge_tol_) {
            Atom& last = atoms_.back();
            const double w = last.w + a.w;
            if (a.x != last.x) last.x = (last.x * last.w + a.x * a.w) / w;
            last.w = w;
        } else {
            atoms_.push_back(a);
        }
    }

    double sum = 0.0;
    for (const Atom& a : atoms_) sum += a.w;
    if (std::abs(sum - 1.0) > weight_sum_tol)
        throw InputError("atom weights sum to " + std::to_string(sum) + ", expected 1");
    // Renormalize measurable drift, but leave ulp-level sums untouched so
    // that rebuilding an already-normalized measure is the exact identity.
    if (std::abs(sum - 1.0) > 1e-13)
        for (Atom& a : atoms_) a.w /= sum;

    // Exact zero snap: locations within merge_tol of the origin are the
    // origin (root-finding noise must not hide an atom at zero).
    for (Atom& a : atoms_)
        if (a.x != 0.0 && std::abs(a.x) <= merge_tol_) a.x = 0.0;
}

bool AtomicMeasure::has_atom_at_zero() const {
    for (const Atom& a : atoms_)
        if (a.x == 0.0) return true;
    return false;
}

bool AtomicMeasure::is_symmetric(double loc_tol, double weight_tol) const {
    std::size_t lo = 0, hi = atoms_.size();
    while (lo < hi) {
        const Atom& left = atoms_[lo];
        const Atom& right = atoms_[hi - 1];
        if (std::abs(left.x) <= loc_tol) {
            // Central atom: must be alone in the middle.
            return hi - lo == 1;
        }
        if (std::abs(left.x + right.x) > loc_tol) return false;
        if (std::abs(left.w - right.w) > weight_tol * std::max(1.0, left.w)) return false;
        ++lo;
        --hi;
    }
    return true;
}

AtomicMeasure symmetrize(const AtomicMeasure& mu) {
    std::vector<Atom> out;
    out.reserve(2 * mu.size());
    for (const Atom& a : mu.atoms()) {
        if (a.x == 0.0) {
            out.push_back(a);
        } else {
            const double r = std::abs(a.x);
            out.push_back({-r, a.w / 2});
            out.push_back({r, a.w / 2});
        }
    }
    return AtomicMeasure(std::move(out), mu.merge_tol());
}

AtomicMeasure dilate(const AtomicMeasure& mu, double a) {
    if (a == 0.0 || !std::isfinite(a)) throw InputError("dilation factor must be finite and nonzero");
    std::vector<Atom> out;
    out.reserve(mu.size());
    for (const Atom& at : mu.atoms()) out.push_back({a * at.x, at.w});
    return AtomicMeasure(std::move(out), mu.merge_tol());
}

AtomicMeasure square_pushforward(const AtomicMeasure& mu) {
    std::vector<Atom> out;
    out.reserve(mu.size());
    for (const Atom& a : mu.atoms()) out.push_back({a.x * a.x, a.w});
    return AtomicMeasure(std::move(out), mu.merge_tol());
}

AtomicMeasure symmetric_sqrt_pullback(const AtomicMeasure& nu) {
    std::vector<Atom> out;
    out.reserve(2 * nu.size());
    for (const Atom& a : nu.atoms()) {
        if (a.x < -nu.merge_tol())
            throw InputError("sqrt pullback requires locations >= 0");
        if (a.x <= nu.merge_tol()) {
            out.push_back({0.0, a.w});
        } else {
            const double r = std::sqrt(a.x);
            out.push_back({-r, a.w / 2});
            out.push_back({r, a.w / 2});
        }
    }
    return AtomicMeasure(std::move(out), nu.merge_tol());
}

ExtendedReal moment(const AtomicMeasure& mu, int k) {
    if (k == 0) return ExtendedReal(1.0);
    if (k < 0 && mu.has_atom_at_zero()) {
        if (k % 2 == 0) return ExtendedReal::pos_inf();
        throw DomainError("odd negative moment of a law with an atom at zero is undefined");
    }
    double sum = 0.0;
    for (const Atom& a : mu.atoms()) sum += a.w * std::pow(a.x, k);
    return ExtendedReal(sum);
}

CumulantVector boolean_cumulants(const AtomicMeasure& mu) {
    const double m1 = moment(mu, 1).value();
    const double m2 = moment(mu, 2).value();
    const double m3 = moment(mu, 3).value();
    const double m4 = moment(mu, 4).value();
    CumulantVector r;
    r.r1 = m1;
    r.r2 = m2 - r.r1 * r.r1;
    r.r3 = m3 - r.r1 * r.r1 * r.r1 - 2 * r.r1 * r.r2;
    r.r4 = m4 - r.r1 * r.r1 * r.r1 * r.r1 - 3 * r.r1 * r.r1 * r.r2 - r.r2 * r.r2 - 2 * r.r3 * r.r1;
    return r;
}

void cumulants_to_moments(const CumulantVector& r, double& m1, double& m2, double& m3, double& m4) {
    m1 = r.r1;
    m2 = r.r1 * r.r1 + r.r2;
    m3 = r.r1 * r.r1 * r.r1 + 2 * r.r1 * r.r2 + r.r3;
    m4 = r.r1 * r.r1 * r.r1 * r.r1 + 3 * r.r1 * r.r1 * r.r2 + r.r2 * r.r2 + 2 * r.r3 * r.r1 + r.r4;
}

} // namespace boolprob
