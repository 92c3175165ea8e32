#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nsalg {

/// Exact nonnegative rational exponent of a monomial u^s, kept in lowest terms.
class Exponent {
public:
    constexpr Exponent() = default;
    Exponent(std::int64_t value);  // NOLINT: integers are exponents
    Exponent(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Exponent operator+(Exponent a, Exponent b);
    /// Throws when the difference would be negative.
    friend Exponent operator-(Exponent a, Exponent b);
    friend Exponent operator*(Exponent a, std::int64_t k);
    friend Exponent operator*(Exponent a, Exponent b);
    /// Exact quotient a / b for b != 0.
    friend Exponent operator/(Exponent a, Exponent b);

    friend bool operator==(Exponent a, Exponent b) noexcept = default;
    friend std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept;

    /// "7" or "9/2".
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, Exponent e);

/// Parses "7" or "9/2". Throws Error(Parse).
Exponent parse_exponent(std::string_view text);

namespace detail {
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
}  // namespace detail

/// Finite, sorted, duplicate-free set of exponents.
class MonomialSet {
public:
    using const_iterator = std::vector<Exponent>::const_iterator;

    MonomialSet() = default;
    explicit MonomialSet(std::vector<Exponent> exps);
    MonomialSet(std::initializer_list<Exponent> exps);

    bool contains(Exponent e) const;
    bool empty() const noexcept { return exps_.empty(); }
    std::size_t size() const noexcept { return exps_.size(); }
    const Exponent& operator[](std::size_t i) const { return exps_[i]; }
    const Exponent& front() const { return exps_.front(); }
    const Exponent& back() const { return exps_.back(); }
    const_iterator begin() const noexcept { return exps_.begin(); }
    const_iterator end() const noexcept { return exps_.end(); }
    const std::vector<Exponent>& values() const noexcept { return exps_; }

    bool is_subset_of(const MonomialSet& other) const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::vector<Exponent> exps_;
};

MonomialSet set_union(const MonomialSet& a, const MonomialSet& b);
MonomialSet set_intersection(const MonomialSet& a, const MonomialSet& b);
MonomialSet set_difference(const MonomialSet& a, const MonomialSet& b);

std::ostream& operator<<(std::ostream& os, const MonomialSet& s);

/// Comma-separated list of exponents: "4,6,9" or "3/2,5/2". Empty input gives an empty list.
std::vector<Exponent> parse_exponent_list(std::string_view text);

}  // namespace nsalg
