#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nsalg/algebra.hpp"

namespace nsalg::corpus {

struct Options {
    std::int64_t max_generator = 30;
    std::size_t max_generators = 5;
    std::size_t min_joined = 1;
    std::size_t max_joined = 4;
    /// Multiply both rings by a random p/q now and then.
    bool rational_scaling = true;
    /// Reject coefficient rings whose Frobenius number exceeds this.
    std::optional<std::int64_t> max_frobenius;
};

/// Random gcd-1 semigroup other than N, generated by at most max_generators
/// integers in [2, max_generator].
NumericalSemigroup random_semigroup(std::mt19937_64& rng, const Options& opts = {});

/// R with gcd 1 and R' = R joined with 1..4 of its gaps; always equi-gcd and
/// nontrivial.
SemigroupAlgebra random_algebra(std::mt19937_64& rng, const Options& opts = {});

std::vector<SemigroupAlgebra> random_corpus(std::uint64_t seed, std::size_t count, const Options& opts = {});

}  // namespace nsalg::corpus
