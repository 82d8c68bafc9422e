#include "fairdiv/value.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace mp = boost::multiprecision;

Value::Value(int v) : Value(static_cast<long long>(v)) {}

Value::Value(long long v) {
    if (v < 0) throw InputError("negative value: " + std::to_string(v));
    q_ = v;
}

Value::Value(unsigned long long v) { q_ = v; }

Value Value::ratio(long long num, long long den) {
    if (num < 0) throw InputError("negative value: " + std::to_string(num));
    if (den <= 0) throw InputError("non-positive denominator: " + std::to_string(den));
    Value v;
    v.q_ = mp::cpp_rational(num, den);
    return v;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Value Value::parse(std::string_view text) {
    auto fail = [&]() -> Value {
        throw InputError("invalid rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mp::cpp_int d{std::string(den)};
        if (d.is_zero()) return fail();
        Value v;
        v.q_ = mp::cpp_rational(mp::cpp_int{std::string(num)}, d);
        return v;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = text.substr(0, dot);
        std::string_view fpart = text.substr(dot + 1);
        if (!fpart.empty() && !all_digits(fpart)) return fail();
        if (!ipart.empty() && !all_digits(ipart)) return fail();
        if (ipart.empty() && fpart.empty()) return fail();
        mp::cpp_int num{std::string(ipart) + std::string(fpart)};
        mp::cpp_int den = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
        Value v;
        v.q_ = mp::cpp_rational(num, den);
        return v;
    }

    if (!all_digits(text)) return fail();
    Value v;
    v.q_ = mp::cpp_int{std::string(text)};
    return v;
}

Value& Value::operator+=(const Value& o) {
    q_ += o.q_;
    return *this;
}

Value& Value::operator*=(const Value& o) {
    q_ *= o.q_;
    return *this;
}

Value Value::operator/(const Value& o) const {
    if (o.is_zero()) throw InputError("division by zero");
    Value v;
    v.q_ = q_ / o.q_;
    return v;
}

Value Value::pow(unsigned exponent) const {
    Value out{1};
    for (unsigned i = 0; i < exponent; ++i) out *= *this;
    return out;
}

std::string Value::str() const {
    const mp::cpp_int num = mp::numerator(q_);
    const mp::cpp_int den = mp::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

ExtendedValue ExtendedValue::infinity() { return ExtendedValue{}; }

const Value& ExtendedValue::finite() const {
    if (infinite_) throw InternalError("finite() called on +infinity");
    return finite_;
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.finite_ == b.finite_;
}

bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_) return false;       // +inf < x never holds
    if (b.infinite_) return true;        // finite < +inf always holds
    return a.finite_ < b.finite_;
}

} // namespace fairdiv
