#include "nsalg/exponent.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "nsalg/error.hpp"

namespace nsalg {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyGenerators: return "EMPTY_GENERATORS";
        case ErrorCode::NonPositiveGenerator: return "NON_POSITIVE_GENERATOR";
        case ErrorCode::NotAMember: return "NOT_A_MEMBER";
        case ErrorCode::ZeroExponent: return "ZERO_EXPONENT";
        case ErrorCode::NotASubring: return "NOT_A_SUBRING";
        case ErrorCode::ZeroConductor: return "ZERO_CONDUCTOR";
        case ErrorCode::InfiniteSet: return "INFINITE_SET";
        case ErrorCode::TrivialAlgebra: return "TRIVIAL_ALGEBRA";
        case ErrorCode::MultipleFrobenius: return "MULTIPLE_FROBENIUS";
        case ErrorCode::TooManyGaps: return "TOO_MANY_GAPS";
        case ErrorCode::NotFrobenius: return "NOT_FROBENIUS";
        case ErrorCode::HalfAlreadyPresent: return "HALF_ALREADY_PRESENT";
        case ErrorCode::BadH: return "BAD_H";
        case ErrorCode::NotEquiGcd: return "NOT_EQUI_GCD";
        case ErrorCode::Overflow: return "OVERFLOW";
        case ErrorCode::Parse: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent arithmetic overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent arithmetic overflow");
    return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

Exponent::Exponent(std::int64_t value) : num_(value), den_(1) {
    if (value < 0) throw Error(ErrorCode::NonPositiveGenerator, "negative exponent");
}

Exponent::Exponent(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0) throw Error(ErrorCode::NonPositiveGenerator, "negative exponent");
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Exponent operator+(Exponent a, Exponent b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t den = checked_mul(a.den_ / g, b.den_);
    std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return Exponent(num, den);
}

Exponent operator-(Exponent a, Exponent b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t den = checked_mul(a.den_ / g, b.den_);
    std::int64_t num = checked_mul(a.num_, b.den_ / g) - checked_mul(b.num_, a.den_ / g);
    return Exponent(num, den);
}

Exponent operator*(Exponent a, std::int64_t k) {
    if (k < 0) throw Error(ErrorCode::NonPositiveGenerator, "negative multiplier");
    std::int64_t g = std::gcd(k, a.den_);
    if (g == 0) return Exponent();
    return Exponent(checked_mul(a.num_, k / g), a.den_ / g);
}

Exponent operator*(Exponent a, Exponent b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0 || g2 == 0) return Exponent();
    return Exponent(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Exponent operator/(Exponent a, Exponent b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroExponent, "division by zero exponent");
    return a * Exponent(b.den_, b.num_);
}

std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept {
    __extension__ using wide = __int128;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Exponent::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, Exponent e) { return os << e.str(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::Parse, "cannot parse exponent '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Exponent parse_exponent(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        std::int64_t v = parse_int(text, text);
        if (v < 0) throw Error(ErrorCode::NonPositiveGenerator, "negative exponent '" + std::string(text) + "'");
        return Exponent(v);
    }
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    if ((num < 0) != (den < 0) && num != 0)
        throw Error(ErrorCode::NonPositiveGenerator, "negative exponent '" + std::string(text) + "'");
    return Exponent(num, den);
}

std::vector<Exponent> parse_exponent_list(std::string_view text) {
    std::vector<Exponent> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_exponent(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

MonomialSet::MonomialSet(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
}

MonomialSet::MonomialSet(std::initializer_list<Exponent> exps) : MonomialSet(std::vector<Exponent>(exps)) {}

bool MonomialSet::contains(Exponent e) const { return std::binary_search(exps_.begin(), exps_.end(), e); }

bool MonomialSet::is_subset_of(const MonomialSet& other) const {
    return std::includes(other.exps_.begin(), other.exps_.end(), exps_.begin(), exps_.end());
}

MonomialSet set_union(const MonomialSet& a, const MonomialSet& b) {
    std::vector<Exponent> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(std::move(out));
}

MonomialSet set_intersection(const MonomialSet& a, const MonomialSet& b) {
    std::vector<Exponent> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(std::move(out));
}

MonomialSet set_difference(const MonomialSet& a, const MonomialSet& b) {
    std::vector<Exponent> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MonomialSet& s) {
    os << '{';
    bool first = true;
    for (const auto& e : s) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    return os << '}';
}

}  // namespace nsalg
