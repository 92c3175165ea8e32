#include "nsalg/algebra.hpp"

#include <algorithm>

#include "nsalg/error.hpp"

namespace nsalg {

SemigroupAlgebra::SemigroupAlgebra(NumericalSemigroup coeff, NumericalSemigroup ext)
    : coeff_(std::move(coeff)), ext_(std::move(ext)) {
    Exponent ratio = coeff_.unit() / ext_.unit();
    if (!ratio.is_integer())
        throw Error(ErrorCode::NotASubring, coeff_.str() + " is not contained in " + ext_.str());
    coeff_content_ = ratio.num();
    for (std::int64_t g : coeff_.core().minimal_generators()) {
        if (!ext_.core().contains(detail::checked_mul(g, coeff_content_)))
            throw Error(ErrorCode::NotASubring, "generator " + coeff_.exponent_at(g).str() + " of " + coeff_.str() +
                                                    " is not in " + ext_.str());
    }
    shared_scale_ = detail::checked_lcm(coeff_.scale(), ext_.scale());
}

MonomialSet SemigroupAlgebra::to_monomials(const std::vector<std::int64_t>& ks) const {
    std::vector<Exponent> out;
    out.reserve(ks.size());
    for (std::int64_t k : ks) out.push_back(to_exponent(k));
    return MonomialSet(std::move(out));
}

SemigroupAlgebra new_algebra(NumericalSemigroup coeff, NumericalSemigroup ext) {
    return SemigroupAlgebra(std::move(coeff), std::move(ext));
}

namespace detail {

void require_equi_gcd(const SemigroupAlgebra& alg, const char* what) {
    if (!alg.equi_gcd())
        throw Error(ErrorCode::InfiniteSet, std::string(what) + " is infinite: " + alg.ext().str() + "/" +
                                                alg.coeff().str() + " is not equi-gcd");
}

std::vector<std::int64_t> gap_indices(const SemigroupAlgebra& alg) {
    std::vector<std::int64_t> out;
    const std::int64_t top = alg.coeff_frobenius();
    for (std::int64_t k = 1; k <= top; ++k)
        if (alg.in_ext(k) && !alg.in_coeff(k)) out.push_back(k);
    return out;
}

std::vector<std::int64_t> sporadic_indices(const SemigroupAlgebra& alg) {
    // s is sporadic iff s + t is a gap for some t in R'.
    const auto gaps = gap_indices(alg);
    std::vector<std::int64_t> out;
    const std::int64_t top = alg.coeff_frobenius();
    for (std::int64_t s = 0; s <= top; ++s) {
        if (!alg.in_coeff(s)) continue;
        bool sporadic = std::any_of(gaps.begin(), gaps.end(),
                                    [&](std::int64_t g) { return g >= s && alg.in_ext(g - s); });
        if (sporadic) out.push_back(s);
    }
    return out;
}

std::vector<std::int64_t> conductor_generator_indices(const SemigroupAlgebra& alg) {
    const std::int64_t threshold = alg.coeff_frobenius() + 1;
    const auto sporadics = sporadic_indices(alg);
    auto in_ideal = [&](std::int64_t k) {
        if (!alg.in_coeff(k)) return false;
        return k >= threshold || !std::binary_search(sporadics.begin(), sporadics.end(), k);
    };
    const std::int64_t top = threshold + alg.ext().core().multiplicity();
    std::vector<std::int64_t> out;
    for (std::int64_t c = 0; c <= top; ++c) {
        if (!in_ideal(c)) continue;
        bool minimal = true;
        for (std::int64_t b = 1; b <= c && minimal; ++b)
            if (alg.in_ext(b) && in_ideal(c - b)) minimal = false;
        if (minimal) out.push_back(c);
    }
    return out;
}

namespace {

template <typename InOrder>
std::vector<std::int64_t> maximal_under(const std::vector<std::int64_t>& sorted, InOrder in_order) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < sorted.size() && maximal; ++j)
            if (in_order(sorted[j] - sorted[i])) maximal = false;
        if (maximal) out.push_back(sorted[i]);
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> frobenius_indices(const SemigroupAlgebra& alg, const std::vector<std::int64_t>& gaps) {
    return maximal_under(gaps, [&](std::int64_t d) { return alg.in_ext(d); });
}

std::vector<std::int64_t> pseudo_frobenius_indices(const SemigroupAlgebra& alg,
                                                   const std::vector<std::int64_t>& gaps) {
    return maximal_under(gaps, [&](std::int64_t d) { return alg.in_coeff(d); });
}

}  // namespace detail

ConductorIdeal conductor(const SemigroupAlgebra& alg) {
    if (!alg.equi_gcd())
        throw Error(ErrorCode::ZeroConductor,
                    "the conductor of " + alg.ext().str() + "/" + alg.coeff().str() + " is zero (not equi-gcd)");
    ConductorIdeal ideal;
    ideal.sporadics = alg.to_monomials(detail::sporadic_indices(alg));
    ideal.threshold = alg.to_exponent(alg.coeff_frobenius() + 1);
    ideal.min_generators_over_ext = alg.to_monomials(detail::conductor_generator_indices(alg));
    return ideal;
}

MonomialSet gap_monomials(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    return alg.to_monomials(detail::gap_indices(alg));
}

MonomialSet sporadic_monomials(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the sporadic set");
    return alg.to_monomials(detail::sporadic_indices(alg));
}

MonomialSet frobenius_monomials(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    return alg.to_monomials(detail::frobenius_indices(alg, detail::gap_indices(alg)));
}

MonomialSet pseudo_frobenius_monomials(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    return alg.to_monomials(detail::pseudo_frobenius_indices(alg, detail::gap_indices(alg)));
}

InvariantReport invariant_report(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    const auto gaps = detail::gap_indices(alg);
    InvariantReport r;
    r.gaps = alg.to_monomials(gaps);
    r.conductor = conductor(alg);
    r.sporadics = r.conductor.sporadics;
    r.frobenius = alg.to_monomials(detail::frobenius_indices(alg, gaps));
    r.pseudo_frobenius = alg.to_monomials(detail::pseudo_frobenius_indices(alg, gaps));
    r.cm_type = r.pseudo_frobenius.size();
    r.f_type = r.frobenius.size();
    return r;
}

bool divides(const SemigroupAlgebra& alg, Exponent s, Exponent t, Order which) {
    if (t < s) return false;
    Exponent d = t - s;
    return which == Order::Coeff ? alg.coeff().contains(d) : alg.ext().contains(d);
}

namespace {

std::vector<std::int64_t> apery_indices(const SemigroupAlgebra& alg) {
    // An Apery monomial m of R' has m - r outside R' for all 0 != r in R, so
    // m <= F(R') + (least nonzero element of R).
    const std::int64_t least = alg.coeff_content() * alg.coeff().core().multiplicity();
    const std::int64_t top = alg.ext().core().frobenius() + least;
    std::vector<std::int64_t> coeff_members;
    for (std::int64_t r = 1; r <= top; ++r)
        if (alg.in_coeff(r)) coeff_members.push_back(r);
    std::vector<std::int64_t> out;
    for (std::int64_t m = 0; m <= top; ++m) {
        if (!alg.in_ext(m)) continue;
        bool minimal = std::none_of(coeff_members.begin(), coeff_members.end(),
                                    [&](std::int64_t r) { return r <= m && alg.in_ext(m - r); });
        if (minimal) out.push_back(m);
    }
    return out;
}

}  // namespace

MonomialSet apery_monomials(const SemigroupAlgebra& alg) { return alg.to_monomials(apery_indices(alg)); }

MonomialSet maximal_apery_monomials(const SemigroupAlgebra& alg) {
    const auto apery = apery_indices(alg);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < apery.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < apery.size() && maximal; ++j)
            if (alg.in_ext(apery[j] - apery[i])) maximal = false;
        if (maximal) out.push_back(apery[i]);
    }
    return alg.to_monomials(out);
}

MonomialSet pf_via_apery(const SemigroupAlgebra& alg, Exponent s) {
    if (s.is_zero()) throw Error(ErrorCode::ZeroExponent, "pf_via_apery needs a nonzero member of R");
    if (!alg.coeff().contains(s)) throw Error(ErrorCode::NotAMember, s.str() + " is not in " + alg.coeff().str());
    detail::require_equi_gcd(alg, "the gap set");
    const std::int64_t k = *alg.to_index(s);
    const auto in_r = alg.coeff().core().apery_set(k);
    const auto in_ext = alg.ext().core().apery_set(k);
    std::vector<std::int64_t> diff;
    std::set_difference(in_r.begin(), in_r.end(), in_ext.begin(), in_ext.end(), std::back_inserter(diff));
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < diff.size() && maximal; ++j)
            if (alg.in_coeff(diff[j] - diff[i])) maximal = false;
        if (maximal) out.push_back(diff[i] - k);
    }
    return alg.to_monomials(out);
}

}  // namespace nsalg
