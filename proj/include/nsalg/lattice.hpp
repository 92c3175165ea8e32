#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsalg/algebra.hpp"

namespace nsalg {

inline constexpr std::size_t default_gap_limit = 20;
inline constexpr std::size_t max_gap_limit = 63;

/// All coefficient rings T with R <= T <= R''. Extension i is R joined with
/// the gaps selected by bit j of masks[i] (bit j <-> gaps[j]).
struct ExtensionLattice {
    SemigroupAlgebra base;
    MonomialSet gaps;
    std::vector<std::uint64_t> masks;

    std::uint64_t full_mask() const noexcept {
        return gaps.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gaps.size()) - 1;
    }
    std::size_t size() const noexcept { return masks.size(); }
    NumericalSemigroup extension(std::size_t i) const;
    NumericalSemigroup extension_for_mask(std::uint64_t mask) const;
    std::vector<NumericalSemigroup> extensions() const;
};

/// Throws TooManyGaps when |G(R''/R)| exceeds limit, InfiniteSet when not equi-gcd.
ExtensionLattice enumerate_extensions(const SemigroupAlgebra& alg, std::size_t limit = default_gap_limit);

/// True iff no two non-trivial extensions intersect to R.
bool is_intersection_irreducible_bf(const SemigroupAlgebra& alg, std::size_t limit = default_gap_limit);
bool is_intersection_irreducible_bf(const ExtensionLattice& lattice);

struct CoverSteps {
    NumericalSemigroup result;
    /// Pseudo-Frobenius exponents joined, in order.
    std::vector<Exponent> joined;
};

/// Greedily joins the smallest pseudo-Frobenius exponent that is not a
/// radical of w until PF is within {w, w/2}. Throws NotFrobenius unless
/// u^w is a Frobenius monomial of R''/R.
CoverSteps irreducible_cover_steps(const SemigroupAlgebra& alg, Exponent w);
NumericalSemigroup irreducible_cover(const SemigroupAlgebra& alg, Exponent w);

inline constexpr std::size_t default_decompose_budget = 2'000'000;

/// Irreducible extensions T_1..T_k with intersection R, k minimal when the
/// search finishes within node_budget.
std::vector<NumericalSemigroup> decompose_irreducible(const SemigroupAlgebra& alg,
                                                      std::size_t limit = default_gap_limit,
                                                      std::size_t node_budget = default_decompose_budget);

}  // namespace nsalg
