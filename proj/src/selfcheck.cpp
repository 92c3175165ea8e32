#include "nsalg/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsalg/corpus.hpp"
#include "nsalg/lattice.hpp"
#include "nsalg/oracle.hpp"

namespace nsalg {

std::size_t SelfcheckReport::total_discrepancies() const {
    std::size_t n = 0;
    for (const auto& [_, k] : discrepancies) n += k;
    return n;
}

namespace {

struct Recorder {
    SelfcheckReport& report;
    std::string where;

    void check(const std::string& category, bool ok, const std::string& what) {
        ++report.checks[category];
        report.discrepancies[category] += ok ? 0 : 1;
        if (!ok) report.failures.push_back(category + ": " + where + ": " + what);
    }
};

void check_membership(Recorder& rec, const NumericalSemigroup& s) {
    std::int64_t scale = 1;
    for (const auto& g : s.generators()) scale = std::lcm(scale, g.den());
    std::vector<std::int64_t> ints;
    std::int64_t largest = 0;
    for (const auto& g : s.generators()) {
        ints.push_back(g.num() * (scale / g.den()));
        largest = std::max(largest, ints.back());
    }
    const std::int64_t bound = std::max<std::int64_t>(s.frobenius_norm(), 0) + 2 * largest;
    const auto sieve = oracle::bf_members(ints, bound);
    bool ok = true;
    std::int64_t bad = -1;
    for (std::int64_t x = 0; x <= bound && ok; ++x)
        if (s.contains(Exponent(x, scale)) != sieve.contains(x)) {
            ok = false;
            bad = x;
        }
    rec.check("membership", ok, s.str() + (ok ? "" : " disagrees at " + Exponent(bad, scale).str()));
}

std::string show(const MonomialSet& a, const MonomialSet& b) {
    std::ostringstream os;
    os << a << " vs oracle " << b;
    return os.str();
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
    SelfcheckReport report;
    corpus::Options opts;
    opts.max_generator = options.max_generator;
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.count; ++i) {
        const SemigroupAlgebra alg = corpus::random_algebra(rng, opts);
        ++report.instances;
        Recorder rec{report, alg.ext().str() + "/" + alg.coeff().str()};

        check_membership(rec, alg.coeff());
        check_membership(rec, alg.ext());

        const InvariantReport fast = invariant_report(alg);
        const oracle::BfInvariants slow = oracle::bf_invariants(alg);
        rec.check("maxima", fast.gaps == slow.gaps, "gaps " + show(fast.gaps, slow.gaps));
        rec.check("maxima", fast.frobenius == slow.frobenius, "F " + show(fast.frobenius, slow.frobenius));
        rec.check("maxima", fast.pseudo_frobenius == slow.pseudo_frobenius,
                  "PF " + show(fast.pseudo_frobenius, slow.pseudo_frobenius));
        rec.check("conductor", fast.sporadics == slow.sporadics,
                  "sporadics " + show(fast.sporadics, slow.sporadics));
        rec.check("conductor", fast.conductor.min_generators_over_ext == slow.conductor_generators,
                  "generators " + show(fast.conductor.min_generators_over_ext, slow.conductor_generators));

        if (fast.gaps.size() <= oracle::bf_intermediate_limit) {
            const ExtensionLattice lattice = enumerate_extensions(alg, oracle::bf_intermediate_limit);
            std::vector<MonomialSet> mine;
            for (std::uint64_t m : lattice.masks) {
                std::vector<Exponent> picked;
                for (std::size_t j = 0; j < lattice.gaps.size(); ++j)
                    if (m >> j & 1) picked.push_back(lattice.gaps[j]);
                mine.emplace_back(std::move(picked));
            }
            std::sort(mine.begin(), mine.end(),
                      [](const MonomialSet& a, const MonomialSet& b) { return a.values() < b.values(); });
            const auto theirs = oracle::bf_all_intermediate(alg);
            rec.check("extensions", mine == theirs,
                      std::to_string(mine.size()) + " extensions vs oracle " + std::to_string(theirs.size()));
        }
    }
    return report;
}

}  // namespace nsalg
