#include "nsalg/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "nsalg/error.hpp"

namespace nsalg::oracle {

std::vector<std::int64_t> BoundedSet::elements() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (members[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

BoundedSet bf_members(std::span<const std::int64_t> gens, std::int64_t bound) {
    BoundedSet s{bound, std::vector<bool>(static_cast<std::size_t>(bound + 1), false)};
    s.members[0] = true;
    for (std::int64_t x = 1; x <= bound; ++x)
        for (std::int64_t g : gens)
            if (g <= x && s.members[static_cast<std::size_t>(x - g)]) {
                s.members[static_cast<std::size_t>(x)] = true;
                break;
            }
    return s;
}

MonomialSet bf_maximal(const MonomialSet& set, const std::function<bool(Exponent, Exponent)>& divides) {
    std::vector<Exponent> out;
    for (const auto& s : set) {
        bool dominated = false;
        for (const auto& t : set)
            if (t != s && divides(s, t)) dominated = true;
        if (!dominated) out.push_back(s);
    }
    return MonomialSet(std::move(out));
}

namespace {

// Both rings on the integer grid where R' has gcd 1.
struct Grid {
    std::int64_t scale = 1;  // exponent = k * step / scale
    std::int64_t step = 1;
    std::vector<std::int64_t> coeff;
    std::vector<std::int64_t> ext;

    Exponent at(std::int64_t k) const { return Exponent(k * step, scale); }
    bool on_grid(Exponent e, std::int64_t& k) const {
        // e = num/den; k = e * scale / step
        const std::int64_t a = e.num() * (scale / e.den());
        if (scale % e.den() != 0 || a % step != 0) return false;
        k = a / step;
        return true;
    }
};

std::int64_t common_denominator(const std::vector<Exponent>& gens, std::int64_t acc) {
    for (const auto& g : gens) acc = std::lcm(acc, g.den());
    return acc;
}

std::vector<std::int64_t> on_scale(const std::vector<Exponent>& gens, std::int64_t scale) {
    std::vector<std::int64_t> out;
    for (const auto& g : gens) out.push_back(g.num() * (scale / g.den()));
    return out;
}

Grid make_grid(const NumericalSemigroup& coeff, const NumericalSemigroup& ext) {
    Grid g;
    g.scale = common_denominator(ext.generators(), common_denominator(coeff.generators(), 1));
    g.coeff = on_scale(coeff.generators(), g.scale);
    g.ext = on_scale(ext.generators(), g.scale);
    g.step = 0;
    for (std::int64_t x : g.ext) g.step = std::gcd(g.step, x);
    for (auto& x : g.coeff) {
        if (x % g.step != 0) throw Error(ErrorCode::NotASubring, "coefficient generator off the ambient grid");
        x /= g.step;
    }
    for (auto& x : g.ext) x /= g.step;
    return g;
}

// Sieve up to a bound past which the semigroup is known to be everything:
// a run of min(gens) consecutive members means all larger integers are in.
struct Sieved {
    BoundedSet set;
    std::int64_t tail = 0;  // every x >= tail is a member
    bool contains(std::int64_t x) const { return x >= tail ? true : set.contains(x); }
};

Sieved sieve_cofinite(const std::vector<std::int64_t>& gens) {
    std::int64_t g = 0;
    for (std::int64_t x : gens) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorCode::InfiniteSet, "generators have a common factor on the ambient grid");
    const std::int64_t m = *std::min_element(gens.begin(), gens.end());
    for (std::int64_t bound = 64;; bound *= 2) {
        BoundedSet s = bf_members(gens, bound);
        std::int64_t run = 0;
        for (std::int64_t x = 0; x <= bound; ++x) {
            run = s.contains(x) ? run + 1 : 0;
            if (run == m) return Sieved{std::move(s), x - m + 1};
        }
    }
}

}  // namespace

bool bf_contains(const NumericalSemigroup& s, Exponent e) {
    const std::int64_t scale = std::lcm(common_denominator(s.generators(), 1), e.den());
    const auto gens = on_scale(s.generators(), scale);
    const std::int64_t target = e.num() * (scale / e.den());
    return bf_members(gens, target).contains(target);
}

BfInvariants bf_invariants(const SemigroupAlgebra& alg) {
    const Grid grid = make_grid(alg.coeff(), alg.ext());
    const Sieved r = sieve_cofinite(grid.coeff);
    const Sieved rp = sieve_cofinite(grid.ext);
    const std::int64_t top = r.tail;  // every gap and sporadic lies below
    auto to_set = [&](const std::vector<std::int64_t>& ks) {
        std::vector<Exponent> out;
        for (std::int64_t k : ks) out.push_back(grid.at(k));
        return MonomialSet(std::move(out));
    };

    BfInvariants inv;
    std::vector<std::int64_t> gaps;
    for (std::int64_t k = 0; k < top; ++k)
        if (rp.contains(k) && !r.contains(k)) gaps.push_back(k);
    inv.gaps = to_set(gaps);

    // s in R is sporadic when s + x falls outside R for some x in R'.
    std::vector<std::int64_t> sporadic;
    for (std::int64_t s = 0; s < top; ++s) {
        if (!r.contains(s)) continue;
        for (std::int64_t x = 0; s + x < top; ++x)
            if (rp.contains(x) && !r.contains(s + x)) {
                sporadic.push_back(s);
                break;
            }
    }
    inv.sporadics = to_set(sporadic);

    const std::int64_t m_ext = *std::min_element(grid.ext.begin(), grid.ext.end());
    auto in_conductor = [&](std::int64_t c) {
        return r.contains(c) && !std::binary_search(sporadic.begin(), sporadic.end(), c);
    };
    std::vector<std::int64_t> cgens;
    for (std::int64_t c = 0; c <= top + m_ext; ++c) {
        if (!in_conductor(c)) continue;
        bool minimal = true;
        for (std::int64_t d = 0; d < c && minimal; ++d)
            if (in_conductor(d) && rp.contains(c - d)) minimal = false;
        if (minimal) cgens.push_back(c);
    }
    inv.conductor_generators = to_set(cgens);

    auto below_in = [&](const Sieved& ring) {
        return [&ring, &grid](Exponent s, Exponent t) {
            std::int64_t a = 0, b = 0;
            grid.on_grid(s, a);
            grid.on_grid(t, b);
            return b >= a && ring.contains(b - a);
        };
    };
    inv.frobenius = bf_maximal(inv.gaps, below_in(rp));
    inv.pseudo_frobenius = bf_maximal(inv.gaps, below_in(r));
    return inv;
}

std::vector<MonomialSet> bf_all_intermediate(const SemigroupAlgebra& alg) {
    const Grid grid = make_grid(alg.coeff(), alg.ext());
    const Sieved r = sieve_cofinite(grid.coeff);
    const Sieved rp = sieve_cofinite(grid.ext);
    std::vector<std::int64_t> gaps;
    for (std::int64_t k = 0; k < r.tail; ++k)
        if (rp.contains(k) && !r.contains(k)) gaps.push_back(k);
    if (gaps.size() > bf_intermediate_limit)
        throw Error(ErrorCode::TooManyGaps, "oracle lattice scan is limited to 16 gaps");

    std::vector<MonomialSet> out;
    const std::size_t n = gaps.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
        std::vector<std::int64_t> chosen;
        for (std::size_t j = 0; j < n; ++j)
            if (pick >> j & 1) chosen.push_back(gaps[j]);
        auto member = [&](std::int64_t x) {
            return r.contains(x) || std::binary_search(chosen.begin(), chosen.end(), x);
        };
        // R plus the chosen gaps is closed iff no two members add up to an
        // unchosen gap.
        bool closed = true;
        for (std::size_t j = 0; j < n && closed; ++j) {
            if (pick >> j & 1) continue;
            for (std::int64_t a = 1; a < gaps[j] && closed; ++a)
                if (member(a) && member(gaps[j] - a)) closed = false;
        }
        if (!closed) continue;
        std::vector<Exponent> exps;
        for (std::int64_t k : chosen) exps.push_back(grid.at(k));
        out.emplace_back(std::move(exps));
    }
    std::sort(out.begin(), out.end(),
              [](const MonomialSet& a, const MonomialSet& b) { return a.values() < b.values(); });
    return out;
}

}  // namespace nsalg::oracle
