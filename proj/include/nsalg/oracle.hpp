#pragma once

// Deliberately naive reference implementations. Nothing here calls the
// Apery-table code paths: membership is a plain sieve on the oracle's own grid.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nsalg/algebra.hpp"

namespace nsalg::oracle {

struct BoundedSet {
    std::int64_t bound = 0;
    std::vector<bool> members;  // index 0..bound

    bool contains(std::int64_t x) const { return x >= 0 && x <= bound && members[static_cast<std::size_t>(x)]; }
    std::vector<std::int64_t> elements() const;
};

/// All nonnegative integer combinations of gens up to bound.
BoundedSet bf_members(std::span<const std::int64_t> gens, std::int64_t bound);

/// Elements of set with no strictly larger element t, i.e. no t != s with divides(s, t).
MonomialSet bf_maximal(const MonomialSet& set, const std::function<bool(Exponent, Exponent)>& divides);

/// Invariants of R'/R recomputed from sieves.
struct BfInvariants {
    MonomialSet gaps;
    MonomialSet sporadics;
    MonomialSet conductor_generators;
    MonomialSet frobenius;
    MonomialSet pseudo_frobenius;
};

/// Throws InfiniteSet when the gap set is infinite.
BfInvariants bf_invariants(const SemigroupAlgebra& alg);

/// Membership of e in the semigroup, decided by a sieve.
bool bf_contains(const NumericalSemigroup& s, Exponent e);

inline constexpr std::size_t bf_intermediate_limit = 16;

/// Every intermediate ring R <= T <= R', each given by the gaps of R'/R it
/// contains, from a scan of all subsets of the gaps. Sorted lexicographically.
/// Throws TooManyGaps when |G| > 16, InfiniteSet when the gap set is infinite.
std::vector<MonomialSet> bf_all_intermediate(const SemigroupAlgebra& alg);

}  // namespace nsalg::oracle
