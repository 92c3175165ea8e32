#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nsalg/algebra.hpp"

namespace nsalg {

enum class Verdict { Symmetric, PseudoSymmetric, AlmostSymmetric, General };

/// "symmetric", "pseudo_symmetric", "almost_symmetric", "general".
std::string_view verdict_name(Verdict v);

/// The strongest symmetry notion satisfied by the coefficient ring R in R'.
struct Classification {
    Verdict verdict = Verdict::General;
    /// w when F(R'/R) = {u^w}.
    std::optional<Exponent> single_frobenius;
    /// w/2 when pseudo-symmetric.
    std::optional<Exponent> half;
    MonomialSet maximal_pf;
    /// (t_i, t_{n-i}) over PF \ {w} sorted ascending; present when F is a singleton.
    std::optional<std::vector<std::pair<Exponent, Exponent>>> nari_pairing;
    bool irreducible = false;
};

/// Throws TrivialAlgebra when R = R', InfiniteSet when not equi-gcd.
Classification classify(const SemigroupAlgebra& alg);

/// PF monomials u^w with u^{w+w'} outside PF for every PF monomial u^{w'}.
MonomialSet maximal_pseudo_frobenius(const SemigroupAlgebra& alg);

struct NariCheck {
    bool almost_symmetric = false;
    bool pairing_sums_to_w = false;
    bool gap_count_matches = false;

    bool agree() const noexcept {
        return almost_symmetric == pairing_sums_to_w && pairing_sums_to_w == gap_count_matches;
    }
};

/// The three equivalent almost-symmetry conditions for an algebra with a
/// single Frobenius monomial. Throws MultipleFrobenius otherwise.
NariCheck nari_check(const SemigroupAlgebra& alg);

/// R = (multiples of d) meet R'' on the grid where R'' has gcd 1, d = gcd of R.
bool is_flat(const SemigroupAlgebra& alg);

}  // namespace nsalg
