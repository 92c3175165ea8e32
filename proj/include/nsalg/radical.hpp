#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nsalg/algebra.hpp"

namespace nsalg {

/// The n-th radical of R in R'': all u^s in R'' with u^{ns} in R. Throws NotASubring.
NumericalSemigroup nth_radical(const NumericalSemigroup& coeff, std::int64_t n, const NumericalSemigroup& ambient);

/// R[[u^{s_i + s0/2}]] for s0 and every s_i in R, with u^{s0/2} outside R.
/// Throws HalfAlreadyPresent / NotAMember.
NumericalSemigroup numerical_duplication(const NumericalSemigroup& coeff, Exponent s0, const MonomialSet& doubles);

enum class CoverMode { Symmetric, PseudoSymmetric };

std::string_view cover_mode_name(CoverMode mode);

/// Every stage of the construction of a coefficient ring R of R'' with
/// prescribed n-th radical R'.
struct CoverTrace {
    std::int64_t n = 2;
    Exponent h;
    /// Frobenius number of R' (in the normalized coordinates of R'').
    Exponent w;
    NumericalSemigroup r0;
    /// h - n*w_i over the gaps w_i of R'.
    MonomialSet r1_joins;
    NumericalSemigroup r1;
    /// Gaps t of R'/R1 with u^t not below u^h in the order of R''.
    MonomialSet r2_joins;
    NumericalSemigroup r2;
    /// Pseudo-Frobenius exponents joined by the irreducible cover, in order.
    std::vector<Exponent> joined_pf;
    NumericalSemigroup result;
    CoverMode mode = CoverMode::Symmetric;
};

/// alg is R''/R' (coeff = R', ext = R''). When h is omitted, the smallest
/// admissible h for the mode is used. Throws NotEquiGcd / BadH.
CoverTrace construct_radical_cover(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode,
                                   std::optional<Exponent> h = std::nullopt);

/// Smallest admissible h (as a grid index of R'') for the construction.
std::int64_t default_cover_h(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode);

/// For R <= R' <= R'' with R''/R and R''/R' flat, the index q with
/// R' = q-th radical of R; nullopt otherwise.
std::optional<std::int64_t> flat_radical_check(const NumericalSemigroup& coeff, const NumericalSemigroup& mid,
                                               const NumericalSemigroup& ambient);

}  // namespace nsalg
