#ifndef BOOLPROB_EXTENDED_REAL_HPP
#define BOOLPROB_EXTENDED_REAL_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "boolprob/errors.hpp"

namespace boolprob {

// A real number extended with -inf/+inf. Carrier for the entropy and Fisher
// functionals, whose natural ranges include the infinities. All arithmetic
// on extended values is spelled out case by case; no operation produces NaN.
class ExtendedReal {
public:
    enum class Tag : std::uint8_t { Finite, NegInf, PosInf };

    ExtendedReal() : tag_(Tag::Finite), value_(0.0) {}
    ExtendedReal(double v) : tag_(Tag::Finite), value_(v) {
        if (std::isnan(v)) throw DomainError("ExtendedReal: NaN is not representable");
        if (std::isinf(v)) tag_ = v > 0 ? Tag::PosInf : Tag::NegInf;
    }

    static ExtendedReal pos_inf() { ExtendedReal e; e.tag_ = Tag::PosInf; return e; }
    static ExtendedReal neg_inf() { ExtendedReal e; e.tag_ = Tag::NegInf; return e; }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }

    // Finite value; throws if called on an infinity.
    double value() const {
        if (!is_finite()) throw DomainError("ExtendedReal: value() on infinite value");
        return value_;
    }

    // Value as a plain double, infinities mapped to IEEE infinities.
    double as_double() const {
        switch (tag_) {
            case Tag::PosInf: return std::numeric_limits<double>::infinity();
            case Tag::NegInf: return -std::numeric_limits<double>::infinity();
            default: return value_;
        }
    }

    ExtendedReal operator-() const {
        if (is_pos_inf()) return neg_inf();
        if (is_neg_inf()) return pos_inf();
        return ExtendedReal(-value_);
    }

    // a + b; throws on the indeterminate form (+inf) + (-inf).
    friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.is_finite() && b.is_finite()) return ExtendedReal(a.value_ + b.value_);
        if (a.is_pos_inf() && b.is_neg_inf()) throw DomainError("ExtendedReal: inf - inf");
        if (a.is_neg_inf() && b.is_pos_inf()) throw DomainError("ExtendedReal: inf - inf");
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        return neg_inf();
    }
    friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.tag_ != b.tag_) return false;
        return !a.is_finite() || a.value_ == b.value_;
    }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.is_neg_inf()) return !b.is_neg_inf();
        if (a.is_pos_inf()) return false;
        if (b.is_pos_inf()) return true;
        if (b.is_neg_inf()) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
    friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return b <= a; }

    std::string to_string() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(value_);
    }

private:
    Tag tag_;
    double value_;
};

} // namespace boolprob

#endif
