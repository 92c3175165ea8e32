#include "nsalg/radical.hpp"

#include <algorithm>
#include <numeric>

#include "nsalg/classify.hpp"
#include "nsalg/error.hpp"
#include "nsalg/lattice.hpp"

namespace nsalg {

std::string_view cover_mode_name(CoverMode mode) {
    return mode == CoverMode::Symmetric ? "symmetric" : "pseudo_symmetric";
}

NumericalSemigroup nth_radical(const NumericalSemigroup& coeff, std::int64_t n, const NumericalSemigroup& ambient) {
    if (n < 1) throw Error(ErrorCode::NonPositiveGenerator, "radical index must be at least 1");
    const SemigroupAlgebra alg(coeff, ambient);
    // {k in R'' : n*k in R} is already additively closed and contains R.
    const std::int64_t p = alg.coeff_content();
    const std::int64_t period = p / std::gcd(p, n);
    const std::int64_t reduced_conductor = detail::checked_mul(p, coeff.core().frobenius() + 1);
    const std::int64_t conductor =
        std::max(alg.ext().core().frobenius() + 1, (reduced_conductor + n - 1) / n);
    return semigroup_from_predicate(alg.unit(), period, conductor, [&](std::int64_t k) {
        return alg.in_ext(k) && alg.in_coeff(detail::checked_mul(n, k));
    });
}

NumericalSemigroup numerical_duplication(const NumericalSemigroup& coeff, Exponent s0, const MonomialSet& doubles) {
    if (!coeff.contains(s0)) throw Error(ErrorCode::NotAMember, s0.str() + " is not in " + coeff.str());
    const Exponent half = s0 / Exponent(2);
    if (coeff.contains(half))
        throw Error(ErrorCode::HalfAlreadyPresent, half.str() + " already lies in " + coeff.str());
    std::vector<Exponent> joined;
    for (const auto& s : doubles) {
        if (!coeff.contains(s)) throw Error(ErrorCode::NotAMember, s.str() + " is not in " + coeff.str());
        joined.push_back(s + half);
    }
    return join(coeff, std::span<const Exponent>(joined));
}

namespace {

void check_h(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode, std::int64_t w, std::int64_t h) {
    auto bad = [&](const std::string& why) {
        throw Error(ErrorCode::BadH, "h = " + alg.to_exponent(h).str() + " is not admissible: " + why);
    };
    if (h <= 2 * n * w) bad("need h > 2nw = " + std::to_string(2 * n * w));
    if (h % n == 0) bad("n must not divide h");
    const bool half_in_ambient = h % 2 == 0 && alg.in_ext(h / 2);
    if (mode == CoverMode::Symmetric && half_in_ambient) bad("h/2 lies in the ambient ring");
    if (mode == CoverMode::PseudoSymmetric && !half_in_ambient) bad("h/2 must lie in the ambient ring");
}

void check_setup(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode) {
    if (!alg.equi_gcd())
        throw Error(ErrorCode::NotEquiGcd, alg.ext().str() + "/" + alg.coeff().str() + " is not equi-gcd");
    if (n < 2) throw Error(ErrorCode::BadH, "the radical index n must be at least 2");
    if (mode == CoverMode::PseudoSymmetric && n < 3)
        throw Error(ErrorCode::BadH, "pseudo-symmetric covers need n >= 3");
    if (alg.coeff().core().frobenius() < 1)
        throw Error(ErrorCode::BadH, "the construction needs R' to have a gap in its normalized coordinates");
}

}  // namespace

std::int64_t default_cover_h(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode) {
    check_setup(alg, n, mode);
    const std::int64_t w = alg.coeff().core().frobenius();
    for (std::int64_t h = 2 * n * w + 1;; ++h) {
        if (h % n == 0) continue;
        const bool half_in_ambient = h % 2 == 0 && alg.in_ext(h / 2);
        if (mode == CoverMode::Symmetric && h % 2 == 1) return h;
        if (mode == CoverMode::PseudoSymmetric && half_in_ambient && h % n == 2 % n) return h;
    }
}

CoverTrace construct_radical_cover(const SemigroupAlgebra& alg, std::int64_t n, CoverMode mode,
                                   std::optional<Exponent> h_exp) {
    check_setup(alg, n, mode);
    const NumericalSemigroup& mid = alg.coeff();
    const NumericalSemigroup& ambient = alg.ext();
    const std::int64_t w = mid.core().frobenius();

    std::int64_t h = 0;
    if (h_exp) {
        auto k = alg.to_index(*h_exp);
        if (!k) throw Error(ErrorCode::BadH, "h = " + h_exp->str() + " is off the grid of the ambient ring");
        h = *k;
    } else {
        h = default_cover_h(alg, n, mode);
    }
    check_h(alg, n, mode, w, h);

    CoverTrace trace{n,
                     alg.to_exponent(h),
                     alg.to_exponent(w),
                     mid,
                     {},
                     mid,
                     {},
                     mid,
                     {},
                     mid,
                     mode};

    std::vector<std::int64_t> r0_gens;
    for (std::int64_t g : mid.core().minimal_generators()) r0_gens.push_back(n * g);
    for (std::int64_t k = h + 1; k <= 2 * h + 1; ++k) r0_gens.push_back(k);
    trace.r0 = semigroup_from_indices(alg.unit(), r0_gens);

    std::vector<std::int64_t> r1_joins;
    for (std::int64_t gap : mid.core().gaps()) r1_joins.push_back(h - n * gap);
    trace.r1_joins = alg.to_monomials(r1_joins);
    trace.r1 = join(trace.r0, trace.r1_joins);

    const SemigroupAlgebra mid_over_r1(trace.r1, mid);
    std::vector<std::int64_t> r2_joins;
    for (std::int64_t t : detail::gap_indices(mid_over_r1))
        if (!alg.in_ext(h - t)) r2_joins.push_back(t);
    trace.r2_joins = alg.to_monomials(r2_joins);
    trace.r2 = join(trace.r1, trace.r2_joins);

    auto steps = irreducible_cover_steps(SemigroupAlgebra(trace.r2, ambient), trace.h);
    trace.result = std::move(steps.result);
    trace.joined_pf = std::move(steps.joined);

    const SemigroupAlgebra final_alg(trace.result, ambient);
    const auto verdict = classify(final_alg).verdict;
    const Verdict wanted = mode == CoverMode::Symmetric ? Verdict::Symmetric : Verdict::PseudoSymmetric;
    if (verdict != wanted || frobenius_monomials(final_alg) != MonomialSet{trace.h} ||
        nth_radical(trace.result, n, ambient) != mid)
        throw std::logic_error("construct_radical_cover: postconditions failed for h = " + trace.h.str());
    return trace;
}

std::optional<std::int64_t> flat_radical_check(const NumericalSemigroup& coeff, const NumericalSemigroup& mid,
                                               const NumericalSemigroup& ambient) {
    const SemigroupAlgebra chain(coeff, mid);
    const SemigroupAlgebra outer(coeff, ambient);
    const SemigroupAlgebra upper(mid, ambient);
    (void)chain;
    if (!is_flat(outer) || !is_flat(upper)) return std::nullopt;
    const std::int64_t q = outer.coeff_content() / upper.coeff_content();
    if (nth_radical(coeff, q, ambient) != mid)
        throw std::logic_error("flat_radical_check: flat chain whose middle ring is not a radical");
    return q;
}

}  // namespace nsalg
