#include "nsalg/fundgap.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "nsalg/error.hpp"

namespace nsalg {

namespace {

void require_nontrivial(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    if (alg.trivial()) throw Error(ErrorCode::TrivialAlgebra, "R = R' has no gap monomials");
}

// 0 when t is fundamental, else the witness n in {2, 3} with n*t outside R.
std::int64_t fg_witness(const SemigroupAlgebra& alg, std::int64_t t) {
    if (!alg.in_coeff(2 * t)) return 2;
    if (!alg.in_coeff(3 * t)) return 3;
    return 0;
}

std::vector<std::int64_t> fg_indices(const SemigroupAlgebra& alg, const std::vector<std::int64_t>& gaps) {
    std::vector<std::int64_t> out;
    for (std::int64_t t : gaps)
        if (fg_witness(alg, t) == 0) out.push_back(t);
    return out;
}

// Gaps (as a bitmask over `gaps`) lying in the d-th radical of R.
std::uint64_t radical_mask(const SemigroupAlgebra& alg, const std::vector<std::int64_t>& gaps, std::int64_t d) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < gaps.size(); ++j)
        if (alg.in_coeff(d * gaps[j])) m |= std::uint64_t{1} << j;
    return m;
}

std::uint64_t extension_mask(const NumericalSemigroup& ext, const SemigroupAlgebra& alg,
                             const std::vector<std::int64_t>& gaps) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < gaps.size(); ++j)
        if (ext.contains(alg.to_exponent(gaps[j]))) m |= std::uint64_t{1} << j;
    return m;
}

// Search over every radical index that can matter: beyond max/min gap the
// radical is all of R'.
std::optional<std::vector<std::int64_t>> radical_intersection_search(const SemigroupAlgebra& alg,
                                                                     const std::vector<std::int64_t>& gaps,
                                                                     std::uint64_t target) {
    const std::uint64_t full = gaps.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gaps.size()) - 1;
    if (target == full) return std::vector<std::int64_t>{};
    if (target == 0) return std::vector<std::int64_t>{1};
    const std::int64_t top = gaps.back() / gaps.front() + 1;
    std::uint64_t meet = full;
    std::vector<std::int64_t> indices;
    std::set<std::uint64_t> seen;
    for (std::int64_t d = 1; d <= top; ++d) {
        const std::uint64_t rad = radical_mask(alg, gaps, d);
        if ((rad & target) != target || rad == full) continue;
        meet &= rad;
        if (seen.insert(rad).second) indices.push_back(d);
    }
    if (meet != target) return std::nullopt;
    return indices;
}

}  // namespace

FundamentalGapReport fundamental_gap_monomials(const SemigroupAlgebra& alg) {
    require_nontrivial(alg);
    const auto gaps = detail::gap_indices(alg);
    FundamentalGapReport report;
    std::vector<std::int64_t> fg;
    for (std::int64_t t : gaps) {
        std::int64_t n = fg_witness(alg, t);
        if (n == 0)
            fg.push_back(t);
        else
            report.radical_chain_witness.emplace(alg.to_exponent(t), n);
    }
    report.fg = alg.to_monomials(fg);
    report.singleton = fg.size() == 1;
    return report;
}

std::optional<std::map<Exponent, RadicalWitness>> single_fg_witness(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    if (alg.trivial()) return std::nullopt;
    const auto gaps = detail::gap_indices(alg);
    const auto fg = fg_indices(alg, gaps);
    if (fg.size() != 1) return std::nullopt;
    const std::int64_t s = fg.front();
    std::map<Exponent, RadicalWitness> out;
    for (std::int64_t t : gaps) {
        if (t == s) continue;
        RadicalWitness wit;
        wit.n = s / t;
        std::int64_t cur = t;
        wit.chain.push_back(alg.to_exponent(cur));
        while (cur != s) {
            std::int64_t n = fg_witness(alg, cur);
            assert(n != 0);
            cur *= n;
            wit.chain.push_back(alg.to_exponent(cur));
        }
        out.emplace(alg.to_exponent(t), std::move(wit));
    }
    return out;
}

std::int64_t default_single_fg_bound(const NumericalSemigroup& ambient) {
    const std::int64_t n = std::max<std::int64_t>(5, ambient.core().frobenius() + 1);
    return 2 * n;
}

std::vector<NumericalSemigroup> enumerate_single_fg_coeff_rings(const NumericalSemigroup& ambient,
                                                                const SingleFgOptions& options) {
    const auto& core = ambient.core();
    const std::int64_t bound = options.bound.value_or(default_single_fg_bound(ambient));
    std::vector<NumericalSemigroup> found;
    if (options.include_trivial) found.push_back(ambient);

    for (std::int64_t w = 1; w <= bound; ++w) {
        if (!core.contains(w)) continue;
        // A single fundamental gap w forces every gap to divide w.
        std::vector<std::int64_t> divisors;
        for (std::int64_t t = 1; t < w; ++t)
            if (w % t == 0 && core.contains(t)) divisors.push_back(t);
        const std::size_t d = divisors.size();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << d); ++pick) {
            std::vector<std::int64_t> removed{w};
            for (std::size_t j = 0; j < d; ++j)
                if (pick >> j & 1) removed.push_back(divisors[j]);
            std::sort(removed.begin(), removed.end());
            auto is_removed = [&](std::int64_t x) { return std::binary_search(removed.begin(), removed.end(), x); };
            auto member = [&](std::int64_t x) { return core.contains(x) && !is_removed(x); };
            bool closed = true;
            for (std::int64_t t : removed) {
                for (std::int64_t x = 1; x < t && closed; ++x)
                    if (member(x) && member(t - x)) closed = false;
                if (!closed) break;
            }
            if (!closed) continue;
            // Everything past both w and F(R') is in R.
            const std::int64_t cond = std::max(w, core.frobenius()) + 1;
            NumericalSemigroup coeff = semigroup_from_predicate(ambient.unit(), 1, cond, member);
            const SemigroupAlgebra alg(coeff, ambient);
            if (fundamental_gap_monomials(alg).singleton) found.push_back(std::move(coeff));
        }
    }
    std::stable_sort(found.begin(), found.end(), [&](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        const auto ga = detail::gap_indices(SemigroupAlgebra(a, ambient)).size();
        const auto gb = detail::gap_indices(SemigroupAlgebra(b, ambient)).size();
        if (ga != gb) return ga < gb;
        return a.minimal_generators().values() < b.minimal_generators().values();
    });
    return found;
}

bool extensions_are_radical_intersections(const SemigroupAlgebra& alg) {
    return fundamental_gap_monomials(alg).singleton;
}

std::optional<std::vector<std::int64_t>> express_as_radical_intersection(const SemigroupAlgebra& alg,
                                                                         const NumericalSemigroup& extension) {
    detail::require_equi_gcd(alg, "the gap set");
    const SemigroupAlgebra lower(alg.coeff(), extension);
    const SemigroupAlgebra upper(extension, alg.ext());
    (void)lower;
    (void)upper;
    const auto gaps = detail::gap_indices(alg);
    if (gaps.empty()) return std::vector<std::int64_t>{};
    const std::uint64_t target = extension_mask(extension, alg, gaps);
    const auto fg = fg_indices(alg, gaps);
    if (fg.size() != 1) return radical_intersection_search(alg, gaps, target);

    const std::int64_t w = fg.front();
    std::vector<std::int64_t> indices;
    std::uint64_t meet = (gaps.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gaps.size()) - 1);
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        if (target >> j & 1) continue;
        assert(w % gaps[j] == 0);
        const std::int64_t d = w / gaps[j];
        indices.push_back(d);
        meet &= radical_mask(alg, gaps, d);
    }
    std::sort(indices.begin(), indices.end());
    if (meet != target) return std::nullopt;
    return indices;
}

bool every_extension_is_radical_intersection(const SemigroupAlgebra& alg, std::size_t limit) {
    const ExtensionLattice lattice = enumerate_extensions(alg, limit);
    const auto gaps = detail::gap_indices(alg);
    if (gaps.empty()) return true;
    return std::all_of(lattice.masks.begin(), lattice.masks.end(), [&](std::uint64_t m) {
        return radical_intersection_search(alg, gaps, m).has_value();
    });
}

}  // namespace nsalg
