#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsalg/exponent.hpp"
#include "nsalg/semigroup.hpp"

namespace nsalg {

/// A numerical semigroup algebra R'/R: the ring R' over its coefficient ring R.
///
/// Both rings are viewed on the grid unit() * Z, where unit() is the reduced
/// unit of R'. On that grid R' is the gcd-1 semigroup ext().core() and R is
/// coeff_content() times coeff().core(). The algebra is equi-gcd exactly when
/// coeff_content() == 1.
class SemigroupAlgebra {
public:
    /// Throws NotASubring if some generator of coeff lies outside ext.
    SemigroupAlgebra(NumericalSemigroup coeff, NumericalSemigroup ext);

    const NumericalSemigroup& coeff() const noexcept { return coeff_; }
    const NumericalSemigroup& ext() const noexcept { return ext_; }
    bool equi_gcd() const noexcept { return coeff_content_ == 1; }
    bool trivial() const noexcept { return coeff_ == ext_; }

    /// Least common denominator of both rings' exponents.
    std::int64_t shared_scale() const noexcept { return shared_scale_; }
    Exponent unit() const noexcept { return ext_.unit(); }
    std::int64_t coeff_content() const noexcept { return coeff_content_; }

    bool in_coeff(std::int64_t k) const noexcept {
        return k >= 0 && k % coeff_content_ == 0 && coeff_.core().contains(k / coeff_content_);
    }
    bool in_ext(std::int64_t k) const noexcept { return ext_.core().contains(k); }

    Exponent to_exponent(std::int64_t k) const { return ext_.exponent_at(k); }
    std::optional<std::int64_t> to_index(Exponent e) const { return ext_.index_of(e); }
    MonomialSet to_monomials(const std::vector<std::int64_t>& ks) const;

    /// Largest grid point outside R (equi-gcd only); every gap and sporadic lies below it.
    std::int64_t coeff_frobenius() const noexcept { return coeff_.core().frobenius(); }

private:
    NumericalSemigroup coeff_;
    NumericalSemigroup ext_;
    std::int64_t coeff_content_ = 1;
    std::int64_t shared_scale_ = 1;
};

SemigroupAlgebra new_algebra(NumericalSemigroup coeff, NumericalSemigroup ext);

/// The conductor f(R'/R) = {s in R : s + R' in R}, stored through its finite
/// complement in R (the sporadic exponents).
struct ConductorIdeal {
    MonomialSet sporadics;
    /// Every member of R at or above this exponent lies in the ideal.
    Exponent threshold;
    MonomialSet min_generators_over_ext;
};

struct InvariantReport {
    MonomialSet gaps;
    MonomialSet sporadics;
    ConductorIdeal conductor;
    MonomialSet frobenius;
    MonomialSet pseudo_frobenius;
    std::size_t cm_type = 0;
    std::size_t f_type = 0;
};

enum class Order { Coeff, Ext };

/// Throws ZeroConductor for non-equi-gcd input.
ConductorIdeal conductor(const SemigroupAlgebra& alg);
/// The finite-set operations below throw InfiniteSet for non-equi-gcd input.
MonomialSet gap_monomials(const SemigroupAlgebra& alg);
MonomialSet sporadic_monomials(const SemigroupAlgebra& alg);
MonomialSet frobenius_monomials(const SemigroupAlgebra& alg);
MonomialSet pseudo_frobenius_monomials(const SemigroupAlgebra& alg);
InvariantReport invariant_report(const SemigroupAlgebra& alg);

/// u^s <= u^t in the order of R (Order::Coeff) or R' (Order::Ext).
bool divides(const SemigroupAlgebra& alg, Exponent s, Exponent t, Order which);

/// Minimal monomials of R' under the order of R.
MonomialSet apery_monomials(const SemigroupAlgebra& alg);
/// Apery monomials that are maximal under the order of R'.
MonomialSet maximal_apery_monomials(const SemigroupAlgebra& alg);

/// PF(R'/R) read off the Apery sets of R and R' with respect to u^s, s a
/// nonzero member of R.
MonomialSet pf_via_apery(const SemigroupAlgebra& alg, Exponent s);

namespace detail {

// Grid-index versions of the invariants (sorted ascending). Callers must have
// checked equi_gcd().
std::vector<std::int64_t> gap_indices(const SemigroupAlgebra& alg);
std::vector<std::int64_t> sporadic_indices(const SemigroupAlgebra& alg);
std::vector<std::int64_t> conductor_generator_indices(const SemigroupAlgebra& alg);
std::vector<std::int64_t> frobenius_indices(const SemigroupAlgebra& alg, const std::vector<std::int64_t>& gaps);
std::vector<std::int64_t> pseudo_frobenius_indices(const SemigroupAlgebra& alg, const std::vector<std::int64_t>& gaps);

void require_equi_gcd(const SemigroupAlgebra& alg, const char* what);

}  // namespace detail

}  // namespace nsalg
