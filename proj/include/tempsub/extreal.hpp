#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>

namespace tempsub {

/// Extended real value: a finite double, +infinity, or -infinity.
///
/// Cumulants and rate functions take the value +infinity outside their
/// effective domains, and some one-sided derivatives are -infinity; this
/// tagged type keeps raw IEEE infinities from leaking across module
/// boundaries.
class ExtReal {
    enum class Kind : unsigned char { Finite, PlusInf, MinusInf };

  public:
    constexpr ExtReal() = default;

    static constexpr ExtReal finite(double v) { return ExtReal(v, Kind::Finite); }
    static constexpr ExtReal infinity() { return ExtReal(0.0, Kind::PlusInf); }
    static constexpr ExtReal minus_infinity() { return ExtReal(0.0, Kind::MinusInf); }

    [[nodiscard]] constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    [[nodiscard]] constexpr bool is_plus_infinity() const { return kind_ == Kind::PlusInf; }
    [[nodiscard]] constexpr bool is_minus_infinity() const { return kind_ == Kind::MinusInf; }
    [[nodiscard]] constexpr bool is_infinite() const { return kind_ != Kind::Finite; }

    /// Finite value; must not be called on an infinity.
    [[nodiscard]] double value() const {
        assert(kind_ == Kind::Finite);
        return v_;
    }

    /// Finite value, or `fallback` when infinite.
    [[nodiscard]] constexpr double value_or(double fallback) const {
        return kind_ == Kind::Finite ? v_ : fallback;
    }

    /// Value as a raw double (IEEE infinities allowed); for formatting and
    /// plain comparisons only.
    [[nodiscard]] constexpr double as_double() const {
        switch (kind_) {
            case Kind::Finite: return v_;
            case Kind::PlusInf: return std::numeric_limits<double>::infinity();
            case Kind::MinusInf: return -std::numeric_limits<double>::infinity();
        }
        return v_;
    }

    friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.is_finite() && b.is_finite()) return finite(a.v_ + b.v_);
        assert(!(a.is_plus_infinity() && b.is_minus_infinity()));
        assert(!(a.is_minus_infinity() && b.is_plus_infinity()));
        return a.is_finite() ? b : a;
    }
    friend constexpr ExtReal operator*(double c, ExtReal a) {
        assert(c > 0.0);
        if (a.is_finite()) return finite(c * a.v_);
        return a;
    }
    friend constexpr bool operator==(ExtReal a, ExtReal b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.v_ == b.v_;
    }
    friend constexpr bool operator<(ExtReal a, ExtReal b) {
        return a.as_double() < b.as_double();
    }
    friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a < b || a == b; }

    friend std::ostream& operator<<(std::ostream& os, ExtReal x) {
        switch (x.kind_) {
            case Kind::Finite: return os << x.v_;
            case Kind::PlusInf: return os << "inf";
            case Kind::MinusInf: return os << "-inf";
        }
        return os;
    }

  private:
    constexpr ExtReal(double v, Kind k) : v_(v), kind_(k) {}

    double v_ = 0.0;
    Kind kind_ = Kind::Finite;
};

}  // namespace tempsub
