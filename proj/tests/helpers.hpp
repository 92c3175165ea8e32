#pragma once

#include <random>
#include <string>

#include "nsalg/algebra.hpp"
#include "nsalg/corpus.hpp"

namespace testing {

inline nsalg::NumericalSemigroup S(const std::string& gens) {
    return nsalg::NumericalSemigroup::from_generators(nsalg::parse_exponent_list(gens));
}

// R and R' = R joined with the listed exponents.
inline nsalg::SemigroupAlgebra joined(const std::string& gens, const std::string& extra) {
    auto r = S(gens);
    auto rp = nsalg::join(r, nsalg::MonomialSet(nsalg::parse_exponent_list(extra)));
    return nsalg::SemigroupAlgebra(r, rp);
}

inline nsalg::SemigroupAlgebra over(const std::string& coeff, const std::string& ext) {
    return nsalg::SemigroupAlgebra(S(coeff), S(ext));
}

inline nsalg::MonomialSet M(std::initializer_list<nsalg::Exponent> xs) { return nsalg::MonomialSet(xs); }

inline std::vector<nsalg::SemigroupAlgebra> corpus(std::uint64_t seed, std::size_t n) {
    return nsalg::corpus::random_corpus(seed, n);
}

}  // namespace testing
