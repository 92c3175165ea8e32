#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nsalg/algebra.hpp"
#include "nsalg/lattice.hpp"

namespace nsalg {

struct FundamentalGapReport {
    /// G meet the 2nd and 3rd radicals of R.
    MonomialSet fg;
    bool singleton = false;
    /// For each gap t outside fg: an n in {2, 3} with u^{nt} still a gap.
    std::map<Exponent, std::int64_t> radical_chain_witness;
};

/// Throws TrivialAlgebra / InfiniteSet.
FundamentalGapReport fundamental_gap_monomials(const SemigroupAlgebra& alg);

struct RadicalWitness {
    /// n with n * t = s, s the unique fundamental gap exponent.
    std::int64_t n = 1;
    /// t, t*n1, t*n1*n2, ..., s following the fundamental-gap witnesses.
    std::vector<Exponent> chain;
};

/// When FG = {u^s}: every other gap t with its radical index n (n*t = s).
/// nullopt when FG is not a singleton.
std::optional<std::map<Exponent, RadicalWitness>> single_fg_witness(const SemigroupAlgebra& alg);

struct SingleFgOptions {
    /// Largest candidate fundamental-gap exponent (normalized); defaults to 2n
    /// for the least n > 4 past the Frobenius number of the ambient ring.
    std::optional<std::int64_t> bound;
    /// Also report the ambient ring itself (it has no gaps).
    bool include_trivial = false;
};

/// Every equi-gcd coefficient ring R of `ambient` with |FG(ambient/R)| = 1,
/// sorted by (number of gaps, minimal generators).
std::vector<NumericalSemigroup> enumerate_single_fg_coeff_rings(const NumericalSemigroup& ambient,
                                                                const SingleFgOptions& options = {});

/// The bound used when none is given: 2n with n = max(5, F(ambient) + 1), normalized.
std::int64_t default_single_fg_bound(const NumericalSemigroup& ambient);

/// |FG(R'/R)| = 1.
bool extensions_are_radical_intersections(const SemigroupAlgebra& alg);

/// Radical indices d with T equal to the meet of the d-th radicals of R in R'
/// (the empty list stands for R' itself); nullopt when T is no such
/// intersection. With a single fundamental gap u^w the indices are w/w' over
/// the gaps w' missing from T.
std::optional<std::vector<std::int64_t>> express_as_radical_intersection(const SemigroupAlgebra& alg,
                                                                         const NumericalSemigroup& extension);

/// Whether every extension in the lattice is an intersection of radicals,
/// decided extension by extension.
bool every_extension_is_radical_intersection(const SemigroupAlgebra& alg, std::size_t limit = default_gap_limit);

}  // namespace nsalg
