#include "nsalg/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace nsalg::corpus {

namespace {

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

NumericalSemigroup random_semigroup(std::mt19937_64& rng, const Options& opts) {
    for (;;) {
        const auto k = static_cast<std::size_t>(pick(rng, 2, static_cast<std::int64_t>(opts.max_generators)));
        std::vector<std::int64_t> gens;
        std::int64_t g = 0;
        for (std::size_t i = 0; i < k; ++i) {
            gens.push_back(pick(rng, 2, opts.max_generator));
            g = std::gcd(g, gens.back());
        }
        if (g != 1) continue;
        std::vector<Exponent> exps(gens.begin(), gens.end());
        auto s = NumericalSemigroup::from_generators(std::move(exps));
        if (opts.max_frobenius && s.core().frobenius() > *opts.max_frobenius) continue;
        return s;
    }
}

SemigroupAlgebra random_algebra(std::mt19937_64& rng, const Options& opts) {
    NumericalSemigroup coeff = random_semigroup(rng, opts);
    auto gaps = coeff.core().gaps();
    std::shuffle(gaps.begin(), gaps.end(), rng);
    const auto want = static_cast<std::size_t>(
        pick(rng, static_cast<std::int64_t>(opts.min_joined), static_cast<std::int64_t>(opts.max_joined)));
    gaps.resize(std::min(gaps.size(), want));
    std::vector<Exponent> joined(gaps.begin(), gaps.end());
    NumericalSemigroup ext = join(coeff, std::span<const Exponent>(joined));

    if (opts.rational_scaling && pick(rng, 0, 3) == 0) {
        const Exponent t(pick(rng, 1, 5), pick(rng, 1, 6));
        return SemigroupAlgebra(scaled(coeff, t), scaled(ext, t));
    }
    return SemigroupAlgebra(std::move(coeff), std::move(ext));
}

std::vector<SemigroupAlgebra> random_corpus(std::uint64_t seed, std::size_t count, const Options& opts) {
    std::mt19937_64 rng(seed);
    std::vector<SemigroupAlgebra> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_algebra(rng, opts));
    return out;
}

}  // namespace nsalg::corpus
