#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nsalg/error.hpp"
#include "nsalg/fundgap.hpp"
#include "nsalg/radical.hpp"

using namespace nsalg;
using testing::joined;
using testing::M;
using testing::over;
using testing::S;

namespace {

std::vector<NumericalSemigroup> rings(std::initializer_list<const char*> gens) {
    std::vector<NumericalSemigroup> out;
    for (const char* g : gens) out.push_back(S(g));
    return out;
}

bool same_rings(std::vector<NumericalSemigroup> a, std::vector<NumericalSemigroup> b) {
    auto key = [](const NumericalSemigroup& s) { return s.str(); };
    auto by = [&](const NumericalSemigroup& x, const NumericalSemigroup& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), by);
    std::sort(b.begin(), b.end(), by);
    return a == b;
}

// Every subset of the gaps of N-scaled ambient below the bound that closes up
// to a coefficient ring with a single FG monomial, found without the radical shortcut.
std::vector<NumericalSemigroup> scan_single_fg(const NumericalSemigroup& ambient, std::int64_t bound) {
    const auto& core = ambient.core();
    std::vector<std::int64_t> cand;
    for (std::int64_t k = 1; k <= bound; ++k)
        if (core.contains(k)) cand.push_back(k);
    std::vector<NumericalSemigroup> out;
    const std::size_t n = cand.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::int64_t> removed;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) removed.push_back(cand[j]);
        const std::int64_t cond = std::max(bound, core.frobenius()) + 1;
        const auto r = semigroup_from_predicate(ambient.unit(), 1, cond, [&](std::int64_t k) {
            return core.contains(k) && !std::binary_search(removed.begin(), removed.end(), k);
        });
        const SemigroupAlgebra alg(r, ambient);
        if (!alg.equi_gcd() || alg.trivial()) continue;
        if (gap_monomials(alg).size() != removed.size()) continue;  // not closed
        if (fundamental_gap_monomials(alg).fg.size() == 1) out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("fundamental gaps of the worked examples") {
    auto a = fundamental_gap_monomials(over("5,6", "5,6,7,8"));
    CHECK(a.fg == M({8, 13, 14, 19}));
    CHECK_FALSE(a.singleton);
    CHECK(a.radical_chain_witness.size() == 1);
    CHECK(a.radical_chain_witness.at(7) == 2);
    CHECK_FALSE(single_fg_witness(over("5,6", "5,6,7,8")).has_value());

    auto alg = joined("7,8,9,10,11,13", "3,4");
    CHECK(gap_monomials(alg) == M({3, 4, 6, 12}));
    auto b = fundamental_gap_monomials(alg);
    CHECK(b.fg == M({12}));
    CHECK(b.singleton);
    auto wit = single_fg_witness(alg);
    REQUIRE(wit.has_value());
    CHECK(wit->size() == 3);
    CHECK(wit->at(3).n == 4);
    CHECK(wit->at(4).n == 3);
    CHECK(wit->at(6).n == 2);
    for (const auto& [t, rw] : *wit) {
        CHECK(rw.chain.front() == t);
        CHECK(rw.chain.back() == Exponent(12));
    }

    auto one = joined("4,6,9", "11");
    CHECK(fundamental_gap_monomials(one).fg == M({11}));
    auto ow = single_fg_witness(one);
    REQUIRE(ow.has_value());
    CHECK(ow->empty());

    CHECK_THROWS_AS(fundamental_gap_monomials(over("4,6,9", "4,6,9")), Error);
    CHECK_THROWS_AS(fundamental_gap_monomials(over("4,6", "2,3")), Error);
}

TEST_CASE("single-FG coefficient rings of N and of <2,3>") {
    SingleFgOptions with_trivial;
    with_trivial.include_trivial = true;
    CHECK(same_rings(enumerate_single_fg_coeff_rings(S("1"), with_trivial),
                     rings({"1", "2,3", "3,4,5", "2,5", "3,5,7", "4,5,7"})));
    CHECK(same_rings(enumerate_single_fg_coeff_rings(S("1")), rings({"2,3", "3,4,5", "2,5", "3,5,7", "4,5,7"})));
    CHECK(same_rings(enumerate_single_fg_coeff_rings(S("2,3")), rings({"3,4,5", "2,5", "3,5,7", "4,5,7"})));
    CHECK(default_single_fg_bound(S("1")) == 10);
    CHECK(default_single_fg_bound(S("4,6,9")) == 24);
}

TEST_CASE("radical intersections of the worked examples") {
    auto alg = joined("7,8,9,10,11,13", "3,4");
    CHECK(extensions_are_radical_intersections(alg));
    auto t = join(alg.coeff(), M({12}));
    auto idx = express_as_radical_intersection(alg, t);
    REQUIRE(idx.has_value());
    CHECK(*idx == std::vector<std::int64_t>{2, 3, 4});
    CHECK(intersect(nth_radical(alg.coeff(), 2, alg.ext()), nth_radical(alg.coeff(), 3, alg.ext())) == t);
    CHECK(intersect(join(alg.coeff(), M({4})), join(alg.coeff(), M({3}))) == t);
    CHECK(every_extension_is_radical_intersection(alg));

    auto b = joined("5,6,13", "7,8");
    CHECK_FALSE(extensions_are_radical_intersections(b));
    CHECK_FALSE(express_as_radical_intersection(b, join(b.coeff(), M({7}))).has_value());
    CHECK_FALSE(express_as_radical_intersection(b, join(b.coeff(), M({14}))).has_value());
    auto r8 = express_as_radical_intersection(b, join(b.coeff(), M({8})));
    REQUIRE(r8.has_value());
    CHECK(nth_radical(b.coeff(), 2, b.ext()) == join(b.coeff(), M({8})));
    auto whole = express_as_radical_intersection(b, b.ext());
    REQUIRE(whole.has_value());
    CHECK(whole->empty());
    CHECK_FALSE(every_extension_is_radical_intersection(b));

    CHECK_THROWS_AS(express_as_radical_intersection(b, S("5,6")), Error);
}

TEST_CASE("fundamental gaps lie in every radical and contain the largest gap") {
    for (const auto& alg : testing::corpus(909, 200)) {
        const auto gaps = gap_monomials(alg);
        const auto rep = fundamental_gap_monomials(alg);
        CHECK(rep.fg.contains(gaps.back()));
        CHECK(rep.fg.is_subset_of(gaps));
        for (std::int64_t n = 2; n <= 12; ++n) {
            const auto rn = nth_radical(alg.coeff(), n, alg.ext());
            for (const auto& e : rep.fg) CHECK(rn.contains(e));
        }
        for (const auto& [t, n] : rep.radical_chain_witness) {
            CHECK(gaps.contains(t));
            CHECK(gaps.contains(t * Exponent(n)));
        }
        CHECK(rep.singleton == single_fg_witness(alg).has_value());
        if (auto wit = single_fg_witness(alg)) {
            const Exponent s = rep.fg.front();
            for (const auto& [t, rw] : *wit) CHECK(t * Exponent(rw.n) == s);
        }
    }
}

TEST_CASE("singleton FG iff every extension is an intersection of radicals") {
    std::size_t singles = 0, checked = 0;
    for (const auto& alg : testing::corpus(1010, 300)) {
        if (gap_monomials(alg).size() > 12) continue;
        ++checked;
        const bool single = extensions_are_radical_intersections(alg);
        singles += single ? 1 : 0;
        CHECK(single == every_extension_is_radical_intersection(alg));
        if (!single) continue;
        for (const auto& t : enumerate_extensions(alg).extensions()) {
            const auto idx = express_as_radical_intersection(alg, t);
            REQUIRE(idx.has_value());
            NumericalSemigroup meet = alg.ext();
            for (auto d : *idx) meet = intersect(meet, nth_radical(alg.coeff(), d, alg.ext()));
            CHECK(meet == t);
        }
    }
    CHECK(checked > 100);
    CHECK(singles > 10);
}

TEST_CASE("single-FG enumeration is complete at a low bound") {
    for (const char* amb : {"1", "2,3", "3,4,5", "2,5"}) {
        const auto ambient = S(amb);
        const std::int64_t bound = 10;
        SingleFgOptions opts;
        opts.bound = bound;
        const auto listed = enumerate_single_fg_coeff_rings(ambient, opts);
        for (const auto& r : listed) CHECK(fundamental_gap_monomials(SemigroupAlgebra(r, ambient)).fg.size() == 1);
        CHECK(same_rings(listed, scan_single_fg(ambient, bound)));
    }
}
