#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsalg/exponent.hpp"

namespace nsalg {

namespace detail {

/// Integer numerical semigroup with gcd 1, backed by its Apery table with
/// respect to the multiplicity. Immutable after construction.
class CoreSemigroup {
public:
    /// gens: positive integers with gcd 1.
    explicit CoreSemigroup(std::vector<std::int64_t> gens);

    bool contains(std::int64_t x) const noexcept {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return small_[static_cast<std::size_t>(x)];
    }

    /// Largest integer outside the semigroup; -1 for N.
    std::int64_t frobenius() const noexcept { return frobenius_; }
    std::int64_t multiplicity() const noexcept { return min_gens_.front(); }
    const std::vector<std::int64_t>& minimal_generators() const noexcept { return min_gens_; }

    /// apery()[r] is the least member congruent to r modulo the multiplicity.
    const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

    std::vector<std::int64_t> gaps() const;

    /// Members m with m - s outside the semigroup. s must be a nonzero member.
    std::vector<std::int64_t> apery_set(std::int64_t s) const;

private:
    std::vector<std::int64_t> min_gens_;
    std::vector<std::int64_t> apery_;
    std::int64_t frobenius_ = -1;
    std::vector<bool> small_;
};

/// Reduces a sorted list of positive integers to a minimal generating set of
/// the monoid it generates.
std::vector<std::int64_t> minimize_generators(std::vector<std::int64_t> gens);

}  // namespace detail

/// Additive monoid generated by finitely many positive rationals, stored as
/// unit * T with T an integer numerical semigroup of gcd 1.
class NumericalSemigroup {
public:
    /// Throws EmptyGenerators / NonPositiveGenerator.
    static NumericalSemigroup from_generators(std::vector<Exponent> gens);

    const std::vector<Exponent>& generators() const noexcept { return generators_; }
    MonomialSet minimal_generators() const;

    /// Least common denominator of the generators.
    std::int64_t scale() const noexcept { return scale_; }
    /// generators * scale.
    const std::vector<std::int64_t>& norm_generators() const noexcept { return norm_generators_; }
    /// gcd of norm_generators.
    std::int64_t content() const noexcept { return content_; }
    /// content * Frobenius number of the reduced semigroup, or -1 when the reduction is N.
    std::int64_t frobenius_norm() const noexcept;

    /// The exponent of one step of the reduced semigroup: content / scale.
    Exponent unit() const noexcept { return unit_; }
    const detail::CoreSemigroup& core() const noexcept { return *core_; }

    /// Frobenius number in the original rational scale; nullopt for a full monoid.
    std::optional<Exponent> frobenius_number() const;
    bool is_full() const noexcept { return core_->frobenius() < 0; }

    /// e / unit when that is an integer.
    std::optional<std::int64_t> index_of(Exponent e) const;
    Exponent exponent_at(std::int64_t index) const { return unit_ * index; }

    bool contains(Exponent e) const;

    /// Equality of the monoids (same unit and same reduced minimal generators).
    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b);

    /// "<4,6,9>" using the minimal generating set.
    std::string str() const;

private:
    NumericalSemigroup() = default;

    std::vector<Exponent> generators_;
    std::int64_t scale_ = 1;
    std::vector<std::int64_t> norm_generators_;
    std::int64_t content_ = 1;
    Exponent unit_{1};
    std::shared_ptr<const detail::CoreSemigroup> core_;
};

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s);

NumericalSemigroup from_generators(std::vector<Exponent> gens);
bool contains(const NumericalSemigroup& s, Exponent e);

/// Gaps of the gcd-1 reduction, expressed back in the original scale.
MonomialSet gaps_to_full(const NumericalSemigroup& s);

/// Minimal members of each congruence class modulo s. Throws ZeroExponent / NotAMember.
MonomialSet apery_set(const NumericalSemigroup& s, Exponent mod);

/// Semigroup generated by s together with new_exps.
NumericalSemigroup join(const NumericalSemigroup& s, const MonomialSet& new_exps);
NumericalSemigroup join(const NumericalSemigroup& s, std::span<const Exponent> new_exps);

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// t * S for a positive rational t.
NumericalSemigroup scaled(const NumericalSemigroup& s, Exponent t);

/// Semigroup on the grid unit * Z given by a membership predicate, where
/// every multiple of `period` that is >= `conductor` is a member and every
/// member is a multiple of `period`.
NumericalSemigroup semigroup_from_predicate(Exponent unit, std::int64_t period, std::int64_t conductor,
                                            const std::function<bool(std::int64_t)>& member);

/// Semigroup generated by unit * k for k in indices.
NumericalSemigroup semigroup_from_indices(Exponent unit, std::span<const std::int64_t> indices);

}  // namespace nsalg
