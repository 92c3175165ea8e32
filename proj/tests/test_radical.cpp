#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nsalg/classify.hpp"
#include "nsalg/error.hpp"
#include "nsalg/fundgap.hpp"
#include "nsalg/radical.hpp"

using namespace nsalg;
using testing::joined;
using testing::M;
using testing::over;
using testing::S;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Parse;
}

bool contains_set(const NumericalSemigroup& big, const NumericalSemigroup& small, const NumericalSemigroup& amb) {
    const SemigroupAlgebra a(small, amb);
    for (std::int64_t k = 0; k <= a.coeff_frobenius() + 40; ++k)
        if (a.in_coeff(k) && !big.contains(a.to_exponent(k))) return false;
    return true;
}

}  // namespace

TEST_CASE("radicals from the worked examples") {
    for (int n : {1, 2, 3, 5, 7, 12}) {
        auto r = S("6,10,14," + std::to_string(2 * n + 1));
        CHECK(nth_radical(r, 2, S("3,4,5")) == S("3,5,7"));
    }
    auto r = S("5,6");
    auto amb = join(r, M({7, 8}));
    CHECK(nth_radical(r, 2, amb) == join(r, M({8})));
    CHECK(nth_radical(r, 2, amb) == join(r, M({8, 13, 14, 19})));
    for (int n = 3; n <= 8; ++n) CHECK(nth_radical(r, n, amb) == amb);
    CHECK(nth_radical(r, 1, amb) == r);
    CHECK(code_of([] { nth_radical(S("3,4"), 2, S("3,5")); }) == ErrorCode::NotASubring);
    CHECK_THROWS_AS(nth_radical(r, 0, amb), Error);
}

TEST_CASE("numerical duplication") {
    auto r = S("4,6,9");
    auto d = numerical_duplication(r, 4, M({9}));
    CHECK(d == join(r, M({11})));
    CHECK(nth_radical(r, 2, d) == d);
    CHECK(numerical_duplication(r, 4, MonomialSet{}) == r);

    auto h = numerical_duplication(S("3,5"), 3, M({3}));
    CHECK(h == join(S("3,5"), M({Exponent(9, 2)})));
    CHECK(nth_radical(S("3,5"), 2, h) == h);

    CHECK(code_of([] { numerical_duplication(S("4,6,9"), 8, M({9})); }) == ErrorCode::HalfAlreadyPresent);
    CHECK(code_of([] { numerical_duplication(S("4,6,9"), 4, M({7})); }) == ErrorCode::NotAMember);
    CHECK(code_of([] { numerical_duplication(S("4,6,9"), 5, M({})); }) == ErrorCode::NotAMember);
}

TEST_CASE("the two worked cover traces") {
    const SemigroupAlgebra alg(S("4,6,7,9"), S("4,5,6,7"));
    auto t2 = construct_radical_cover(alg, 2, CoverMode::Symmetric, Exponent(21));
    CHECK(t2.w == Exponent(5));
    CHECK(t2.r0 == S("8,12,14,18,23,25,27,29"));
    CHECK(t2.r0.minimal_generators() == M({8, 12, 14, 18, 23, 25, 27, 29}));
    CHECK(t2.r1_joins == M({11, 15, 17, 19}));
    CHECK(t2.r1 == S("8,11,12,14,15,17,18"));
    CHECK(t2.r2 == t2.r1);
    CHECK(t2.result == t2.r2);
    CHECK(classify(SemigroupAlgebra(t2.result, alg.ext())).verdict == Verdict::Symmetric);
    CHECK(nth_radical(t2.result, 2, alg.ext()) == alg.coeff());

    auto t3 = construct_radical_cover(alg, 3, CoverMode::Symmetric, Exponent(31));
    CHECK(t3.r0 == S("12,18,21,27,32,34,35,37,38,40,41,43"));
    CHECK(t3.r1_joins == M({16, 22, 25, 28}));
    CHECK(t3.r1 == S("12,16,18,21,22,25,27,35"));
    CHECK(t3.r2_joins == M({29}));
    CHECK(t3.r2 == S("12,16,18,21,22,25,27,29,35"));
    CHECK(pseudo_frobenius_monomials(SemigroupAlgebra(t3.r2, alg.ext())) == M({17, 20, 23, 26, 31}));
    CHECK(t3.joined_pf == std::vector<Exponent>{17, 20, 23, 26});
    CHECK(t3.result == join(t3.r2, M({17, 20, 23, 26})));
    CHECK(nth_radical(t3.result, 3, alg.ext()) == alg.coeff());
}

TEST_CASE("cover preconditions") {
    const SemigroupAlgebra alg(S("4,6,7,9"), S("4,5,6,7"));
    CHECK(code_of([&] { construct_radical_cover(alg, 2, CoverMode::Symmetric, Exponent(20)); }) == ErrorCode::BadH);
    CHECK(code_of([&] { construct_radical_cover(alg, 2, CoverMode::Symmetric, Exponent(22)); }) == ErrorCode::BadH);
    CHECK(code_of([&] { construct_radical_cover(alg, 2, CoverMode::PseudoSymmetric); }) == ErrorCode::BadH);
    CHECK(code_of([&] { construct_radical_cover(alg, 1, CoverMode::Symmetric); }) == ErrorCode::BadH);
    CHECK(code_of([&] { construct_radical_cover(alg, 3, CoverMode::PseudoSymmetric, Exponent(31)); }) ==
          ErrorCode::BadH);
    CHECK(code_of([] { construct_radical_cover(over("4,6", "2,3"), 2, CoverMode::Symmetric); }) ==
          ErrorCode::NotEquiGcd);
    CHECK(code_of([] { construct_radical_cover(over("1", "1"), 2, CoverMode::Symmetric); }) == ErrorCode::BadH);

    auto ps = construct_radical_cover(alg, 3, CoverMode::PseudoSymmetric);
    CHECK(classify(SemigroupAlgebra(ps.result, alg.ext())).verdict == Verdict::PseudoSymmetric);
    CHECK(ps.h.num() % 3 == 2);
}

TEST_CASE("covers on random pairs") {
    std::mt19937_64 rng(77);
    corpus::Options opts;
    opts.max_frobenius = 25;
    opts.rational_scaling = false;
    int done = 0;
    while (done < 20) {
        const auto pair = corpus::random_algebra(rng, opts);
        const auto& mid = pair.coeff();
        if (mid.core().frobenius() < 1) continue;
        ++done;
        std::set<std::string> seen;
        for (std::int64_t n : {2, 3}) {
            const auto t = construct_radical_cover(pair, n, CoverMode::Symmetric);
            // Gap identity for R1/R0.
            std::vector<Exponent> expect;
            for (std::int64_t g : mid.core().gaps()) expect.push_back(t.h - Exponent(n * g));
            CHECK(gap_monomials(SemigroupAlgebra(t.r0, t.r1)) == MonomialSet(expect));
            CHECK(nth_radical(t.result, n, pair.ext()) == mid);
        }
        // Different odd h give different rings.
        const std::int64_t h0 = default_cover_h(pair, 2, CoverMode::Symmetric);
        for (std::int64_t h = h0; h < h0 + 8; h += 2)
            seen.insert(construct_radical_cover(pair, 2, CoverMode::Symmetric, Exponent(h)).result.str());
        CHECK(seen.size() == 4);
    }
}

TEST_CASE("radical containments") {
    for (const auto& alg : testing::corpus(808, 80)) {
        const auto& r = alg.coeff();
        const auto& amb = alg.ext();
        const auto fg = fundamental_gap_monomials(alg).fg;
        for (std::int64_t n = 2; n <= 4; ++n) {
            const auto rn = nth_radical(r, n, amb);
            CHECK(contains_set(rn, r, amb));
            for (std::int64_t m = 2; m <= 3; ++m) {
                const auto outer = nth_radical(rn, m, amb);
                CHECK(contains_set(outer, nth_radical(r, m * n, amb), amb));
            }
            for (const auto& e : fg) CHECK(rn.contains(e));
            // Growing the ambient ring can only grow the radical.
            const auto wide = NumericalSemigroup::from_generators({alg.unit()});
            CHECK(contains_set(nth_radical(r, n, wide), rn, wide));
        }
    }
}

TEST_CASE("flat chains have radical middles") {
    auto q = flat_radical_check(S("4"), S("2"), S("2,3"));
    REQUIRE(q.has_value());
    CHECK(*q == 2);
    CHECK(nth_radical(S("4"), 2, S("2,3")) == S("2"));
    CHECK(flat_radical_check(S("3,5"), S("3,5"), S("3,5")) == std::optional<std::int64_t>(1));
    CHECK_FALSE(flat_radical_check(S("4,6"), S("2,3"), S("2,3")).has_value());
}
