#include "nsalg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "nsalg/classify.hpp"
#include "nsalg/error.hpp"

namespace nsalg {

NumericalSemigroup ExtensionLattice::extension_for_mask(std::uint64_t mask) const {
    std::vector<Exponent> joined;
    for (std::size_t j = 0; j < gaps.size(); ++j)
        if (mask >> j & 1) joined.push_back(gaps[j]);
    return join(base.coeff(), std::span<const Exponent>(joined));
}

NumericalSemigroup ExtensionLattice::extension(std::size_t i) const { return extension_for_mask(masks.at(i)); }

std::vector<NumericalSemigroup> ExtensionLattice::extensions() const {
    std::vector<NumericalSemigroup> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(extension_for_mask(m));
    return out;
}

ExtensionLattice enumerate_extensions(const SemigroupAlgebra& alg, std::size_t limit) {
    detail::require_equi_gcd(alg, "the gap set");
    const auto gaps = detail::gap_indices(alg);
    const std::size_t n = gaps.size();
    if (n > std::min(limit, max_gap_limit))
        throw Error(ErrorCode::TooManyGaps, "|G| = " + std::to_string(n) + " exceeds the enumeration limit " +
                                                std::to_string(std::min(limit, max_gap_limit)));

    auto index_of_gap = [&](std::int64_t x) -> int {
        auto it = std::lower_bound(gaps.begin(), gaps.end(), x);
        return it != gaps.end() && *it == x ? static_cast<int>(it - gaps.begin()) : -1;
    };

    // forced[i]: gaps reached from gap i by adding a nonzero element of R.
    // sum_with[i][k]: index of gaps[i] + gaps[k] when that is a gap.
    std::vector<std::uint64_t> forced(n, 0);
    std::vector<std::vector<int>> sum_with(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (alg.in_coeff(gaps[j] - gaps[i])) forced[i] |= std::uint64_t{1} << j;
        for (std::size_t k = 0; k < n; ++k) sum_with[i][k] = index_of_gap(gaps[i] + gaps[k]);
    }

    // Decide gaps from the largest down: every sum involving gaps[i] is larger,
    // hence already decided, so including gaps[i] is a local check.
    std::vector<std::uint64_t> masks;
    std::function<void(int, std::uint64_t)> walk = [&](int i, std::uint64_t included) {
        if (i < 0) {
            masks.push_back(included);
            return;
        }
        const auto ui = static_cast<std::size_t>(i);
        walk(i - 1, included);
        if ((forced[ui] & ~included) != 0) return;
        const std::uint64_t with = included | std::uint64_t{1} << ui;
        for (std::size_t k = ui; k < n; ++k) {
            if (!(with >> k & 1)) continue;
            int s = sum_with[ui][k];
            if (s >= 0 && !(with >> s & 1)) return;
        }
        walk(i - 1, with);
    };
    walk(static_cast<int>(n) - 1, 0);
    std::sort(masks.begin(), masks.end());

    return ExtensionLattice{alg, alg.to_monomials(gaps), std::move(masks)};
}

bool is_intersection_irreducible_bf(const ExtensionLattice& lattice) {
    const std::uint64_t full = lattice.full_mask();
    std::vector<std::uint64_t> nontrivial;
    for (std::uint64_t m : lattice.masks)
        if (m != 0 && m != full) nontrivial.push_back(m);
    // Two non-trivial extensions meeting in R can be shrunk to minimal ones.
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t m : nontrivial) {
        bool is_min = std::none_of(nontrivial.begin(), nontrivial.end(),
                                   [&](std::uint64_t o) { return o != m && (o & m) == o; });
        if (is_min) minimal.push_back(m);
    }
    for (std::size_t a = 0; a < minimal.size(); ++a)
        for (std::size_t b = a + 1; b < minimal.size(); ++b)
            if ((minimal[a] & minimal[b]) == 0) return false;
    return true;
}

bool is_intersection_irreducible_bf(const SemigroupAlgebra& alg, std::size_t limit) {
    return is_intersection_irreducible_bf(enumerate_extensions(alg, limit));
}

CoverSteps irreducible_cover_steps(const SemigroupAlgebra& alg, Exponent w) {
    detail::require_equi_gcd(alg, "the gap set");
    const auto wk = alg.to_index(w);
    {
        const auto gaps = detail::gap_indices(alg);
        const auto f = detail::frobenius_indices(alg, gaps);
        if (!wk || !std::binary_search(f.begin(), f.end(), *wk))
            throw Error(ErrorCode::NotFrobenius, "u^" + w.str() + " is not a Frobenius monomial of " +
                                                     alg.ext().str() + "/" + alg.coeff().str());
    }

    CoverSteps steps{alg.coeff(), {}};
    for (;;) {
        SemigroupAlgebra current(steps.result, alg.ext());
        const auto pf = detail::pseudo_frobenius_indices(current, detail::gap_indices(current));
        const bool done = std::all_of(pf.begin(), pf.end(), [&](std::int64_t s) { return s == *wk || 2 * s == *wk; });
        if (done) break;
        // Gaps shrink strictly each round, so the loop terminates.
        auto eligible = std::find_if(pf.begin(), pf.end(), [&](std::int64_t s) { return *wk % s != 0; });
        if (eligible == pf.end())
            throw std::logic_error("irreducible_cover: no pseudo-Frobenius exponent is eligible to join");
        const Exponent s = alg.to_exponent(*eligible);
        steps.joined.push_back(s);
        steps.result = join(steps.result, std::span<const Exponent>(&s, 1));
    }
    return steps;
}

NumericalSemigroup irreducible_cover(const SemigroupAlgebra& alg, Exponent w) {
    return irreducible_cover_steps(alg, w).result;
}

std::vector<NumericalSemigroup> decompose_irreducible(const SemigroupAlgebra& alg, std::size_t limit,
                                                      std::size_t node_budget) {
    const ExtensionLattice lattice = enumerate_extensions(alg, limit);
    if (alg.trivial()) return {alg.coeff()};
    const std::uint64_t full = lattice.full_mask();

    std::vector<std::uint64_t> irreducible;
    for (std::uint64_t m : lattice.masks) {
        if (m == full) continue;
        SemigroupAlgebra sub(lattice.extension_for_mask(m), alg.ext());
        if (classify(sub).irreducible) irreducible.push_back(m);
    }
    if (!irreducible.empty() && irreducible.front() == 0) return {alg.coeff()};

    std::sort(irreducible.begin(), irreducible.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    // Smallest k such that some k irreducible extensions share no joined gap.
    std::size_t nodes = 0;
    std::vector<std::uint64_t> chosen;
    std::function<bool(std::size_t, std::size_t, std::uint64_t)> search = [&](std::size_t start, std::size_t k,
                                                                              std::uint64_t common) -> bool {
        if (++nodes > node_budget) return false;
        if (chosen.size() == k) return common == 0;
        for (std::size_t i = start; i < irreducible.size(); ++i) {
            chosen.push_back(irreducible[i]);
            if (search(i + 1, k, common & irreducible[i])) return true;
            chosen.pop_back();
            if (nodes > node_budget) return false;
        }
        return false;
    };
    for (std::size_t k = 2; k <= lattice.gaps.size() && nodes <= node_budget; ++k) {
        chosen.clear();
        if (search(0, k, full)) {
            std::vector<NumericalSemigroup> out;
            for (std::uint64_t m : chosen) out.push_back(lattice.extension_for_mask(m));
            return out;
        }
    }

    // Fallback: for each gap, a largest extension avoiding it (necessarily
    // irreducible), then drop components that are not needed.
    std::vector<std::uint64_t> picks;
    for (std::size_t j = 0; j < lattice.gaps.size(); ++j) {
        std::uint64_t best = 0;
        int best_count = -1;
        for (std::uint64_t m : lattice.masks) {
            if (m >> j & 1) continue;
            if (std::popcount(m) > best_count) {
                best = m;
                best_count = std::popcount(m);
            }
        }
        if (std::find(picks.begin(), picks.end(), best) == picks.end()) picks.push_back(best);
    }
    for (std::size_t i = 0; i < picks.size();) {
        std::uint64_t common = full;
        for (std::size_t o = 0; o < picks.size(); ++o)
            if (o != i) common &= picks[o];
        if (picks.size() > 1 && common == 0)
            picks.erase(picks.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    std::vector<NumericalSemigroup> out;
    for (std::uint64_t m : picks) out.push_back(lattice.extension_for_mask(m));
    return out;
}

}  // namespace nsalg
