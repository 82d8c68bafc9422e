#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fairdiv {

/// Exact non-negative rational amount. All comparisons and arithmetic are
/// exact; there is deliberately no conversion to floating point anywhere in
/// the library. Subtraction is not offered: every quantity in the checks is
/// rearranged so that only sums, products and comparisons are needed.
class Value {
public:
    Value() = default;
    Value(int v);
    Value(long long v);
    Value(unsigned long long v);

    /// num/den with den > 0, num >= 0.
    static Value ratio(long long num, long long den);

    /// Accepts "7", "3.25" and "13/4" style literals (non-negative only).
    /// Decimal literals become exact power-of-ten fractions.
    static Value parse(std::string_view text);

    Value& operator+=(const Value& o);
    Value& operator*=(const Value& o);
    friend Value operator+(Value a, const Value& b) { a += b; return a; }
    friend Value operator*(Value a, const Value& b) { a *= b; return a; }
    Value operator/(const Value& o) const;
    Value pow(unsigned exponent) const;

    bool is_zero() const { return q_.is_zero(); }

    /// Canonical form: "p" when the denominator is 1, else "p/q" reduced.
    std::string str() const;

    friend bool operator==(const Value& a, const Value& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Value& a, const Value& b) { return a.q_ != b.q_; }
    friend bool operator<(const Value& a, const Value& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Value& a, const Value& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Value& a, const Value& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Value& a, const Value& b) { return a.q_ >= b.q_; }

private:
    boost::multiprecision::cpp_rational q_;
};

/// A Value extended with a single +infinity element, which compares
/// strictly greater than every finite Value. Used by the potential
/// comparison where exhausted positions read as +infinity.
class ExtendedValue {
public:
    ExtendedValue(Value v) : finite_(std::move(v)), infinite_(false) {}
    static ExtendedValue infinity();

    bool is_infinity() const { return infinite_; }
    const Value& finite() const;

    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
    friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
    friend bool operator<(const ExtendedValue& a, const ExtendedValue& b);
    friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }

private:
    ExtendedValue() : infinite_(true) {}
    Value finite_;
    bool infinite_;
};

} // namespace fairdiv
