#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "nsalg/classify.hpp"
#include "nsalg/error.hpp"
#include "nsalg/lattice.hpp"

using namespace nsalg;
using testing::joined;
using testing::M;
using testing::over;
using testing::S;

namespace {

// <2n+1, ..., 4n+1> joined with 2.
SemigroupAlgebra even_family(int n) {
    std::string gens;
    for (int g = 2 * n + 1; g <= 4 * n + 1; ++g) gens += (gens.empty() ? "" : ",") + std::to_string(g);
    return joined(gens, "2");
}

}  // namespace

TEST_CASE("verdicts on the worked examples") {
    auto a = classify(joined("4,6,9", "5"));
    CHECK(a.verdict == Verdict::Symmetric);
    CHECK(a.irreducible);
    CHECK(a.single_frobenius == Exponent(11));

    auto b = classify(joined("5,6,7,8,9", "2"));
    CHECK(b.verdict == Verdict::PseudoSymmetric);
    CHECK(b.irreducible);
    CHECK(b.single_frobenius == Exponent(4));
    CHECK(b.half == Exponent(2));

    auto c = classify(joined("7,8,9,10,11,12,13", "2"));
    CHECK(c.verdict == Verdict::AlmostSymmetric);
    CHECK_FALSE(c.irreducible);
    CHECK(c.single_frobenius == Exponent(6));

    auto d = classify(joined("5,7,9", "8,11"));
    CHECK(d.verdict == Verdict::General);
    CHECK_FALSE(d.single_frobenius.has_value());
    CHECK_FALSE(d.nari_pairing.has_value());

    CHECK_THROWS_AS(classify(over("4,6,9", "4,6,9")), Error);
}

TEST_CASE("the even family is almost symmetric, irreducible exactly for n <= 2") {
    for (int n = 1; n <= 5; ++n) {
        auto alg = even_family(n);
        std::vector<Exponent> evens;
        for (int k = 1; k <= n; ++k) evens.push_back(2 * k);
        CHECK(gap_monomials(alg) == MonomialSet(evens));
        CHECK(pseudo_frobenius_monomials(alg) == MonomialSet(evens));
        CHECK(frobenius_monomials(alg) == M({2 * n}));
        auto cl = classify(alg);
        CHECK(cl.verdict != Verdict::General);
        CHECK(cl.irreducible == (n <= 2));
        CHECK(is_intersection_irreducible_bf(alg) == (n <= 2));
    }
}

TEST_CASE("the n, 2n family") {
    for (int n = 2; n <= 6; ++n) {
        std::string gens;
        for (int g = n + 1; g <= 2 * n - 1; ++g) gens += std::to_string(g) + ",";
        gens += std::to_string(2 * n + 1);
        auto alg = joined(gens, std::to_string(n));
        if (n == 2) {
            CHECK(gap_monomials(alg) == M({2, 4, 7}));
            CHECK(pseudo_frobenius_monomials(alg) == M({7}));
        } else {
            CHECK(gap_monomials(alg) == M({n, 2 * n}));
            CHECK(pseudo_frobenius_monomials(alg) == M({n, 2 * n}));
        }
        CHECK(classify(alg).irreducible);
        CHECK(is_intersection_irreducible_bf(alg));
    }
}

TEST_CASE("maximal pseudo-Frobenius monomials") {
    CHECK(maximal_pseudo_frobenius(joined("5,6,7,8,9", "2")) == M({4}));
    CHECK(maximal_pseudo_frobenius(joined("4,6,9", "5")) == M({11}));
    CHECK(maximal_pseudo_frobenius(joined("5,7,11,13", "3")) == M({6, 8, 9}));
    CHECK(classify(joined("5,7,11,13", "3")).verdict == Verdict::General);
}

TEST_CASE("Nari conditions") {
    auto a = nari_check(joined("5,6,7,8,9", "2"));
    CHECK(a.almost_symmetric);
    CHECK(a.pairing_sums_to_w);
    CHECK(a.gap_count_matches);

    auto b = nari_check(joined("4,6,9", "5"));
    CHECK(b.almost_symmetric);
    CHECK(b.agree());

    auto alg = over("5,6", "1");
    CHECK(frobenius_monomials(alg) == M({19}));
    CHECK(pseudo_frobenius_monomials(alg) == M({19}));
    CHECK(nari_check(alg).agree());

    CHECK_THROWS_AS(nari_check(joined("5,7,9", "8,11")), Error);
}

TEST_CASE("flatness") {
    CHECK_FALSE(is_flat(over("4,6", "2,3")));
    CHECK(is_flat(over("4,6,9", "4,6,9")));
    CHECK(is_flat(over("2", "2,3")));
    CHECK(is_flat(over("4", "2")));
    CHECK_FALSE(is_flat(over("3,5", "1")));
    CHECK(is_flat(over("1", "1")));
}

TEST_CASE("classification agrees with brute force and the counting identities") {
    std::size_t single = 0;
    for (const auto& alg : testing::corpus(303, 400)) {
        const auto r = invariant_report(alg);
        if (r.gaps.size() > 14) continue;
        const auto cl = classify(alg);
        const bool bf = is_intersection_irreducible_bf(alg);
        REQUIRE(cl.irreducible == bf);
        if (bf) CHECK(r.f_type == 1);
        if (cl.verdict == Verdict::Symmetric) {
            CHECK(r.pseudo_frobenius.size() == 1);
            CHECK(r.gaps.size() == r.sporadics.size());
        }
        if (cl.verdict == Verdict::PseudoSymmetric) {
            CHECK(alg.ext().contains(*cl.half));
            CHECK(*cl.half + *cl.half == *cl.single_frobenius);
            CHECK(r.pseudo_frobenius == M({*cl.half, *cl.single_frobenius}));
            CHECK(r.gaps.size() == r.sporadics.size() + 1);
        }
        if (cl.irreducible) CHECK((cl.verdict == Verdict::Symmetric || cl.verdict == Verdict::PseudoSymmetric));
        if (r.f_type == 1) {
            ++single;
            CHECK(nari_check(alg).agree());
        }
    }
    CHECK(single > 50);
}
