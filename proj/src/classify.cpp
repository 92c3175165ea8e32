#include "nsalg/classify.hpp"

#include <algorithm>

#include "nsalg/error.hpp"

namespace nsalg {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Symmetric: return "symmetric";
        case Verdict::PseudoSymmetric: return "pseudo_symmetric";
        case Verdict::AlmostSymmetric: return "almost_symmetric";
        case Verdict::General: return "general";
    }
    return "general";
}

namespace {

void require_nontrivial(const SemigroupAlgebra& alg) {
    detail::require_equi_gcd(alg, "the gap set");
    if (alg.trivial()) throw Error(ErrorCode::TrivialAlgebra, "R = R' has no gap monomials to classify");
}

std::vector<std::int64_t> maximal_pf_indices(const std::vector<std::int64_t>& pf) {
    std::vector<std::int64_t> out;
    for (std::int64_t w : pf) {
        bool maximal = std::none_of(pf.begin(), pf.end(), [&](std::int64_t v) {
            return std::binary_search(pf.begin(), pf.end(), w + v);
        });
        if (maximal) out.push_back(w);
    }
    return out;
}

}  // namespace

MonomialSet maximal_pseudo_frobenius(const SemigroupAlgebra& alg) {
    require_nontrivial(alg);
    const auto gaps = detail::gap_indices(alg);
    return alg.to_monomials(maximal_pf_indices(detail::pseudo_frobenius_indices(alg, gaps)));
}

Classification classify(const SemigroupAlgebra& alg) {
    require_nontrivial(alg);
    const auto gaps = detail::gap_indices(alg);
    const auto pf = detail::pseudo_frobenius_indices(alg, gaps);
    const auto f = detail::frobenius_indices(alg, gaps);
    const auto maximal = maximal_pf_indices(pf);

    Classification c;
    c.maximal_pf = alg.to_monomials(maximal);
    if (f.size() == 1) {
        const std::int64_t w = f.front();
        c.single_frobenius = alg.to_exponent(w);
        std::vector<std::int64_t> rest;
        std::copy_if(pf.begin(), pf.end(), std::back_inserter(rest), [&](std::int64_t t) { return t != w; });
        std::vector<std::pair<Exponent, Exponent>> pairs;
        for (std::size_t i = 0; i < rest.size(); ++i)
            pairs.emplace_back(alg.to_exponent(rest[i]), alg.to_exponent(rest[rest.size() - 1 - i]));
        c.nari_pairing = std::move(pairs);
    }

    // PF is {w} or {w/2, w}; w/2 is then a gap, hence in R'.
    if (pf.size() == 1) {
        c.verdict = Verdict::Symmetric;
    } else if (pf.size() == 2 && 2 * pf[0] == pf[1]) {
        c.verdict = Verdict::PseudoSymmetric;
        c.half = alg.to_exponent(pf[0]);
    } else if (maximal.size() == 1) {
        c.verdict = Verdict::AlmostSymmetric;
    }
    c.irreducible = c.verdict == Verdict::Symmetric || c.verdict == Verdict::PseudoSymmetric;
    return c;
}

NariCheck nari_check(const SemigroupAlgebra& alg) {
    require_nontrivial(alg);
    const auto gaps = detail::gap_indices(alg);
    const auto f = detail::frobenius_indices(alg, gaps);
    if (f.size() != 1)
        throw Error(ErrorCode::MultipleFrobenius,
                    "the algebra has " + std::to_string(f.size()) + " Frobenius monomials, expected one");
    const std::int64_t w = f.front();
    const auto pf = detail::pseudo_frobenius_indices(alg, gaps);
    std::vector<std::int64_t> t;
    std::copy_if(pf.begin(), pf.end(), std::back_inserter(t), [&](std::int64_t x) { return x != w; });

    NariCheck out;
    out.almost_symmetric = maximal_pf_indices(pf).size() == 1;
    out.pairing_sums_to_w = true;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] + t[t.size() - 1 - i] != w) out.pairing_sums_to_w = false;
    const std::size_t n = pf.size();
    out.gap_count_matches = gaps.size() == detail::sporadic_indices(alg).size() + n - 1;
    return out;
}

bool is_flat(const SemigroupAlgebra& alg) {
    // On the grid of R'' (gcd 1), R = d * T. Multiples of d beyond d * (F(T) + 1) lie in R and R''.
    const std::int64_t d = alg.coeff_content();
    const std::int64_t top = detail::checked_mul(d, alg.coeff().core().frobenius() + 1);
    for (std::int64_t k = 0; k <= std::max<std::int64_t>(top, alg.ext().core().frobenius()); k += d)
        if (alg.in_ext(k) && !alg.in_coeff(k)) return false;
    return true;
}

}  // namespace nsalg
