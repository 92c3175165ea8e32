#include "nsalg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "nsalg/error.hpp"

namespace nsalg {

namespace detail {

std::vector<std::int64_t> minimize_generators(std::vector<std::int64_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return gens;
    // A generator is redundant iff it is a sum of smaller kept generators;
    // reach[v] tracks representability by the generators kept so far.
    const auto top = static_cast<std::size_t>(gens.back());
    std::vector<bool> reach(top + 1, false);
    reach[0] = true;
    std::vector<std::int64_t> kept;
    for (std::int64_t g : gens) {
        const auto gi = static_cast<std::size_t>(g);
        if (reach[gi]) continue;
        kept.push_back(g);
        for (std::size_t v = gi; v <= top; ++v)
            if (reach[v - gi]) reach[v] = true;
    }
    return kept;
}

CoreSemigroup::CoreSemigroup(std::vector<std::int64_t> gens) : min_gens_(minimize_generators(std::move(gens))) {
    assert(!min_gens_.empty() && min_gens_.front() > 0);
    const std::int64_t m = min_gens_.front();
    const auto mz = static_cast<std::size_t>(m);

    // Shortest path over residues modulo m; edges are the generators.
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    apery_.assign(mz, inf);
    apery_[0] = 0;
    using Node = std::pair<std::int64_t, std::int64_t>;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [dist, r] = queue.top();
        queue.pop();
        if (dist != apery_[static_cast<std::size_t>(r)]) continue;
        for (std::int64_t g : min_gens_) {
            std::int64_t nd = checked_add(dist, g);
            auto nr = static_cast<std::size_t>((r + g) % m);
            if (nd < apery_[nr]) {
                apery_[nr] = nd;
                queue.emplace(nd, static_cast<std::int64_t>(nr));
            }
        }
    }
    for (std::int64_t a : apery_)
        if (a == inf) throw Error(ErrorCode::NonPositiveGenerator, "generators of the reduced semigroup must have gcd 1");

    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
    small_.assign(static_cast<std::size_t>(frobenius_ + 2), false);
    for (std::int64_t x = 0; x <= frobenius_ + 1; ++x)
        small_[static_cast<std::size_t>(x)] = x >= apery_[static_cast<std::size_t>(x % m)];
}

std::vector<std::int64_t> CoreSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x <= frobenius_; ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

std::vector<std::int64_t> CoreSemigroup::apery_set(std::int64_t s) const {
    std::vector<std::int64_t> out;
    const std::int64_t top = frobenius_ + s;
    for (std::int64_t x = 0; x <= top; ++x)
        if (contains(x) && !contains(x - s)) out.push_back(x);
    return out;
}

}  // namespace detail

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Exponent> gens) {
    if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "a numerical semigroup needs at least one generator");
    for (const auto& g : gens)
        if (g.is_zero()) throw Error(ErrorCode::NonPositiveGenerator, "generator " + g.str() + " is not positive");

    NumericalSemigroup s;
    s.generators_ = std::move(gens);
    s.scale_ = 1;
    for (const auto& g : s.generators_) s.scale_ = detail::checked_lcm(s.scale_, g.den());
    s.content_ = 0;
    for (const auto& g : s.generators_) {
        std::int64_t v = detail::checked_mul(g.num(), s.scale_ / g.den());
        s.norm_generators_.push_back(v);
        s.content_ = std::gcd(s.content_, v);
    }
    s.unit_ = Exponent(s.content_, s.scale_);
    std::vector<std::int64_t> reduced;
    reduced.reserve(s.norm_generators_.size());
    for (std::int64_t v : s.norm_generators_) reduced.push_back(v / s.content_);
    s.core_ = std::make_shared<const detail::CoreSemigroup>(std::move(reduced));
    return s;
}

MonomialSet NumericalSemigroup::minimal_generators() const {
    std::vector<Exponent> out;
    for (std::int64_t g : core_->minimal_generators()) out.push_back(exponent_at(g));
    return MonomialSet(std::move(out));
}

std::int64_t NumericalSemigroup::frobenius_norm() const noexcept {
    return core_->frobenius() < 0 ? -1 : content_ * core_->frobenius();
}

std::optional<Exponent> NumericalSemigroup::frobenius_number() const {
    if (is_full()) return std::nullopt;
    return exponent_at(core_->frobenius());
}

std::optional<std::int64_t> NumericalSemigroup::index_of(Exponent e) const {
    Exponent q = e / unit_;
    if (!q.is_integer()) return std::nullopt;
    return q.num();
}

bool NumericalSemigroup::contains(Exponent e) const {
    auto k = index_of(e);
    return k && core_->contains(*k);
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.unit_ == b.unit_ && a.core_->minimal_generators() == b.core_->minimal_generators();
}

std::string NumericalSemigroup::str() const {
    std::ostringstream os;
    os << '<';
    bool first = true;
    for (const auto& g : minimal_generators()) {
        if (!first) os << ',';
        os << g;
        first = false;
    }
    os << '>';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) { return os << s.str(); }

NumericalSemigroup from_generators(std::vector<Exponent> gens) {
    return NumericalSemigroup::from_generators(std::move(gens));
}

bool contains(const NumericalSemigroup& s, Exponent e) { return s.contains(e); }

MonomialSet gaps_to_full(const NumericalSemigroup& s) {
    std::vector<Exponent> out;
    for (std::int64_t g : s.core().gaps()) out.push_back(s.exponent_at(g));
    return MonomialSet(std::move(out));
}

MonomialSet apery_set(const NumericalSemigroup& s, Exponent mod) {
    if (mod.is_zero()) throw Error(ErrorCode::ZeroExponent, "Apery set modulo 0 is undefined");
    if (!s.contains(mod)) throw Error(ErrorCode::NotAMember, mod.str() + " is not in " + s.str());
    std::vector<Exponent> out;
    for (std::int64_t a : s.core().apery_set(*s.index_of(mod))) out.push_back(s.exponent_at(a));
    return MonomialSet(std::move(out));
}

NumericalSemigroup join(const NumericalSemigroup& s, std::span<const Exponent> new_exps) {
    if (new_exps.empty()) return s;
    std::vector<Exponent> gens(s.minimal_generators().values());
    for (const auto& e : new_exps) {
        if (e.is_zero()) throw Error(ErrorCode::NonPositiveGenerator, "joined exponent must be positive");
        gens.push_back(e);
    }
    return NumericalSemigroup::from_generators(std::move(gens));
}

NumericalSemigroup join(const NumericalSemigroup& s, const MonomialSet& new_exps) {
    return join(s, std::span<const Exponent>(new_exps.values()));
}

NumericalSemigroup semigroup_from_predicate(Exponent unit, std::int64_t period, std::int64_t conductor,
                                            const std::function<bool(std::int64_t)>& member) {
    assert(period > 0);
    std::int64_t c = std::max<std::int64_t>(conductor, period);
    c = (c + period - 1) / period * period;
    std::int64_t smallest = 0;
    for (std::int64_t k = period; k <= c; k += period) {
        if (k >= c || member(k)) {
            smallest = k;
            break;
        }
    }
    assert(smallest > 0);
    // Every member >= c + smallest is smallest plus a member >= c.
    std::vector<std::int64_t> gens;
    for (std::int64_t k = period; k < c + smallest; k += period)
        if (k >= c || member(k)) gens.push_back(k);
    gens = detail::minimize_generators(std::move(gens));
    return semigroup_from_indices(unit, gens);
}

NumericalSemigroup semigroup_from_indices(Exponent unit, std::span<const std::int64_t> indices) {
    std::vector<Exponent> gens;
    gens.reserve(indices.size());
    for (std::int64_t k : indices) gens.push_back(unit * k);
    return NumericalSemigroup::from_generators(std::move(gens));
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    // Common grid 1/D; a lives on multiples of qa, b on multiples of qb.
    const Exponent ua = a.unit();
    const Exponent ub = b.unit();
    const std::int64_t grid = detail::checked_lcm(ua.den(), ub.den());
    const Exponent step(1, grid);
    const std::int64_t qa = (ua / step).num();
    const std::int64_t qb = (ub / step).num();
    const std::int64_t period = detail::checked_lcm(qa, qb);
    const std::int64_t conductor = std::max(detail::checked_mul(qa, a.core().frobenius() + 1),
                                            detail::checked_mul(qb, b.core().frobenius() + 1));
    return semigroup_from_predicate(step, period, conductor, [&](std::int64_t k) {
        return k % qa == 0 && k % qb == 0 && a.core().contains(k / qa) && b.core().contains(k / qb);
    });
}

NumericalSemigroup scaled(const NumericalSemigroup& s, Exponent t) {
    if (t.is_zero()) throw Error(ErrorCode::NonPositiveGenerator, "scaling factor must be positive");
    std::vector<Exponent> gens;
    for (const auto& g : s.generators()) gens.push_back(g * t);
    return NumericalSemigroup::from_generators(std::move(gens));
}

}  // namespace nsalg
