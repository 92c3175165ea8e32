#include "nsalg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "nsalg/algebra.hpp"
#include "nsalg/classify.hpp"
#include "nsalg/error.hpp"
#include "nsalg/fundgap.hpp"
#include "nsalg/lattice.hpp"
#include "nsalg/radical.hpp"
#include "nsalg/selfcheck.hpp"

namespace nsalg::cli {

using nlohmann::json;

namespace {

json exponent_json(Exponent e) { return json::array({e.num(), e.den()}); }

json set_json(const MonomialSet& s) {
    json a = json::array();
    for (const auto& e : s) a.push_back(exponent_json(e));
    return a;
}

json set_json(const std::vector<Exponent>& v) { return set_json(MonomialSet(v)); }

json semigroup_json(const NumericalSemigroup& s) { return json{{"generators", set_json(s.minimal_generators())}}; }

Exponent exponent_from_json(const json& j) {
    if (j.is_number_integer()) return Exponent(j.get<std::int64_t>());
    if (j.is_string()) return parse_exponent(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return Exponent(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    throw Error(ErrorCode::Parse, "cannot read an exponent from " + j.dump());
}

std::string gap_limit_help() { return "gap cutoff for lattice enumeration (env NSALG_GAP_LIMIT, default 20)"; }

std::size_t env_gap_limit() {
    const char* v = std::getenv("NSALG_GAP_LIMIT");
    if (!v || !*v) return default_gap_limit;
    char* end = nullptr;
    const long long n = std::strtoll(v, &end, 10);
    if (*end != '\0' || n < 0) throw Error(ErrorCode::Parse, std::string("bad NSALG_GAP_LIMIT: ") + v);
    return static_cast<std::size_t>(n);
}

struct Args {
    std::string coeff, ext, join, ambient;
    bool json = false, raw = false, trace = false, include_trivial = false;
    std::optional<std::size_t> limit;
    std::int64_t n = 2;
    std::string mode = "symmetric";
    std::string h, s0, doubles;
    std::optional<std::int64_t> bound;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::int64_t max_gen = 30;
};

struct Context {
    Args a;
    std::ostream& out;

    std::size_t limit() const { return a.limit ? *a.limit : env_gap_limit(); }
    std::string mono(const MonomialSet& s) const { return monomials(s, a.raw); }
    std::string mono(Exponent e) const { return monomial(e, a.raw); }

    NumericalSemigroup coeff() const {
        if (a.coeff.empty()) throw Error(ErrorCode::Parse, "--coeff is required");
        return parse_semigroup(a.coeff);
    }
    NumericalSemigroup ambient() const {
        if (!a.ambient.empty()) return parse_semigroup(a.ambient);
        if (!a.ext.empty()) return parse_semigroup(a.ext);
        throw Error(ErrorCode::Parse, "--ambient (or --ext) is required");
    }
    // R' from --ext, or R joined with --join.
    SemigroupAlgebra algebra(bool need_equi_gcd = true) const {
        NumericalSemigroup r = coeff();
        std::optional<NumericalSemigroup> rp;
        if (!a.ext.empty() && !a.join.empty()) throw Error(ErrorCode::Parse, "give either --ext or --join, not both");
        if (!a.ext.empty())
            rp = parse_semigroup(a.ext);
        else if (!a.join.empty())
            rp = join(r, MonomialSet(parse_exponent_list(a.join)));
        else if (!a.ambient.empty())
            rp = parse_semigroup(a.ambient);
        else
            throw Error(ErrorCode::Parse, "--ext or --join is required");
        SemigroupAlgebra alg(std::move(r), std::move(*rp));
        if (need_equi_gcd && !alg.equi_gcd())
            throw Error(ErrorCode::NotEquiGcd, alg.ext().str() + "/" + alg.coeff().str() + " is not equi-gcd");
        return alg;
    }
    void emit(const json& j) const { out << j.dump() << '\n'; }
};

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Symmetric: return "symmetric";
        case Verdict::PseudoSymmetric: return "pseudo-symmetric";
        case Verdict::AlmostSymmetric: return "almost symmetric";
        case Verdict::General: return "general";
    }
    return "general";
}

int cmd_invariants(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    const InvariantReport r = invariant_report(alg);
    if (c.a.json) {
        c.emit(json{{"coeff", semigroup_json(alg.coeff())},
                    {"ext", semigroup_json(alg.ext())},
                    {"gaps", set_json(r.gaps)},
                    {"sporadics", set_json(r.sporadics)},
                    {"conductor_gens", set_json(r.conductor.min_generators_over_ext)},
                    {"conductor_threshold", exponent_json(r.conductor.threshold)},
                    {"frobenius", set_json(r.frobenius)},
                    {"pseudo_frobenius", set_json(r.pseudo_frobenius)},
                    {"cm_type", r.cm_type},
                    {"f_type", r.f_type}});
        return 0;
    }
    c.out << "algebra: " << alg.ext().str() << " over " << alg.coeff().str() << '\n'
          << "gaps: " << c.mono(r.gaps) << '\n'
          << "sporadics: " << c.mono(r.sporadics) << '\n'
          << "conductor generators: " << c.mono(r.conductor.min_generators_over_ext) << '\n'
          << "frobenius: " << c.mono(r.frobenius) << '\n'
          << "pseudo-frobenius: " << c.mono(r.pseudo_frobenius) << '\n'
          << "cm type: " << r.cm_type << '\n'
          << "f type: " << r.f_type << '\n';
    return 0;
}

int cmd_classify(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    if (alg.trivial()) {
        if (c.a.json)
            c.emit(json{{"verdict", "trivial"}});
        else
            c.out << "trivial\n";
        return 0;
    }
    const Classification cl = classify(alg);
    if (c.a.json) {
        json j{{"verdict", verdict_name(cl.verdict)},
               {"irreducible", cl.irreducible},
               {"maximal_pf", set_json(cl.maximal_pf)}};
        if (cl.single_frobenius) j["w"] = exponent_json(*cl.single_frobenius);
        if (cl.half) j["half"] = exponent_json(*cl.half);
        if (cl.single_frobenius) {
            const NariCheck nc = nari_check(alg);
            j["nari"] = {nc.almost_symmetric, nc.pairing_sums_to_w, nc.gap_count_matches};
        }
        if (cl.nari_pairing) {
            json pairs = json::array();
            for (const auto& [x, y] : *cl.nari_pairing)
                pairs.push_back(json::array({exponent_json(x), exponent_json(y)}));
            j["nari_pairing"] = pairs;
        }
        c.emit(j);
        return 0;
    }
    c.out << verdict_text(cl.verdict) << ", " << (cl.irreducible ? "irreducible" : "reducible");
    if (cl.single_frobenius)
        c.out << ", w=" << cl.single_frobenius->str();
    else
        c.out << ", F=" << c.mono(frobenius_monomials(alg));
    c.out << '\n';
    return 0;
}

int cmd_extensions(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    const ExtensionLattice lat = enumerate_extensions(alg, c.limit());
    json list = json::array();
    for (std::uint64_t m : lat.masks) {
        std::vector<Exponent> joined;
        for (std::size_t j = 0; j < lat.gaps.size(); ++j)
            if (m >> j & 1) joined.push_back(lat.gaps[j]);
        const NumericalSemigroup t = lat.extension_for_mask(m);
        if (c.a.json)
            list.push_back(json{{"generators", set_json(t.minimal_generators())}, {"joined", set_json(joined)}});
        else
            c.out << t.str() << "  joined " << c.mono(MonomialSet(joined)) << '\n';
    }
    if (c.a.json)
        c.emit(json{{"count", lat.size()}, {"extensions", list}});
    else
        c.out << lat.size() << " extensions\n";
    return 0;
}

int cmd_decompose(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    const auto parts = decompose_irreducible(alg, c.limit());
    json list = json::array();
    for (const auto& t : parts) {
        const SemigroupAlgebra sub(t, alg.ext());
        std::string verdict = "trivial";
        if (!sub.trivial()) verdict = std::string(verdict_name(classify(sub).verdict));
        if (c.a.json) {
            list.push_back(json{{"generators", set_json(t.minimal_generators())}, {"verdict", verdict}});
        } else {
            c.out << t.str();
            if (!sub.trivial()) c.out << "  " << verdict_text(classify(sub).verdict);
            c.out << '\n';
        }
    }
    if (c.a.json) c.emit(json{{"components", list}});
    return 0;
}

int cmd_radical(const Context& c) {
    const NumericalSemigroup r = c.coeff();
    const NumericalSemigroup amb = c.ambient();
    const NumericalSemigroup rad = nth_radical(r, c.a.n, amb);
    if (c.a.json)
        c.emit(json{{"n", c.a.n}, {"radical", semigroup_json(rad)}});
    else
        c.out << rad.str() << '\n';
    return 0;
}

int cmd_cover(const Context& c) {
    CoverMode mode;
    if (c.a.mode == "symmetric")
        mode = CoverMode::Symmetric;
    else if (c.a.mode == "pseudo" || c.a.mode == "pseudo_symmetric" || c.a.mode == "pseudo-symmetric")
        mode = CoverMode::PseudoSymmetric;
    else
        throw Error(ErrorCode::Parse, "--mode must be symmetric or pseudo");
    const SemigroupAlgebra alg(c.coeff(), c.ambient());
    std::optional<Exponent> h;
    if (!c.a.h.empty()) h = parse_exponent(c.a.h);
    const CoverTrace t = construct_radical_cover(alg, c.a.n, mode, h);
    if (c.a.json) {
        json j{{"n", t.n},
               {"h", exponent_json(t.h)},
               {"w", exponent_json(t.w)},
               {"mode", cover_mode_name(t.mode)},
               {"result", semigroup_json(t.result)}};
        if (c.a.trace) {
            j["r0"] = semigroup_json(t.r0);
            j["r1_joins"] = set_json(t.r1_joins);
            j["r1"] = semigroup_json(t.r1);
            j["r2_joins"] = set_json(t.r2_joins);
            j["r2"] = semigroup_json(t.r2);
            j["joined_pf"] = set_json(t.joined_pf);
        }
        c.emit(j);
        return 0;
    }
    if (c.a.trace) {
        c.out << "R0 = " << t.r0.str() << '\n'
              << "R1 joins " << c.mono(t.r1_joins) << '\n'
              << "R1 = " << t.r1.str() << '\n'
              << "R2 joins " << c.mono(t.r2_joins) << '\n'
              << "R2 = " << t.r2.str() << '\n'
              << "PF joined " << c.mono(MonomialSet(t.joined_pf)) << '\n';
    }
    c.out << t.result.str() << "  " << cover_mode_name(t.mode) << ", h=" << t.h.str() << ", w=" << t.w.str()
          << '\n';
    return 0;
}

int cmd_duplication(const Context& c) {
    if (c.a.s0.empty()) throw Error(ErrorCode::Parse, "--s0 is required");
    const NumericalSemigroup r = c.coeff();
    const NumericalSemigroup d =
        numerical_duplication(r, parse_exponent(c.a.s0), MonomialSet(parse_exponent_list(c.a.doubles)));
    if (c.a.json)
        c.emit(json{{"result", semigroup_json(d)}});
    else
        c.out << d.str() << '\n';
    return 0;
}

int cmd_fundamental_gaps(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    const FundamentalGapReport rep = fundamental_gap_monomials(alg);
    const auto chains = single_fg_witness(alg);
    if (c.a.json) {
        json wit = json::object();
        for (const auto& [t, n] : rep.radical_chain_witness) wit[t.str()] = n;
        json j{{"fg", set_json(rep.fg)}, {"singleton", rep.singleton}, {"witness", wit}};
        if (chains) {
            json ch = json::object();
            for (const auto& [t, w] : *chains) ch[t.str()] = json{{"n", w.n}, {"chain", set_json(w.chain)}};
            j["radicals"] = ch;
        }
        c.emit(j);
        return 0;
    }
    c.out << "FG: " << c.mono(rep.fg) << '\n' << "singleton: " << (rep.singleton ? "yes" : "no") << '\n';
    if (chains) {
        for (const auto& [t, w] : *chains) {
            c.out << c.mono(t) << ": n=" << w.n << ", chain";
            for (const auto& e : w.chain) c.out << ' ' << c.mono(e);
            c.out << '\n';
        }
    }
    return 0;
}

int cmd_single_fg(const Context& c) {
    SingleFgOptions opts;
    opts.bound = c.a.bound;
    opts.include_trivial = c.a.include_trivial;
    const auto rings = enumerate_single_fg_coeff_rings(c.ambient(), opts);
    if (c.a.json) {
        json list = json::array();
        for (const auto& r : rings) list.push_back(semigroup_json(r));
        c.emit(json{{"count", rings.size()}, {"rings", list}});
        return 0;
    }
    for (const auto& r : rings) c.out << r.str() << '\n';
    c.out << rings.size() << " rings\n";
    return 0;
}

int cmd_radical_intersections(const Context& c) {
    const SemigroupAlgebra alg = c.algebra();
    const ExtensionLattice lat = enumerate_extensions(alg, c.limit());
    const bool all = extensions_are_radical_intersections(alg);
    json list = json::array();
    if (!c.a.json) c.out << "every extension is an intersection of radicals: " << (all ? "yes" : "no") << '\n';
    for (const auto& t : lat.extensions()) {
        const auto ds = express_as_radical_intersection(alg, t);
        if (c.a.json) {
            json e{{"generators", set_json(t.minimal_generators())}};
            e["radicals"] = ds ? json(*ds) : json(nullptr);
            list.push_back(e);
            continue;
        }
        c.out << t.str() << ": ";
        if (!ds) {
            c.out << "not an intersection of radicals\n";
        } else if (ds->empty()) {
            c.out << "the ambient ring\n";
        } else {
            for (std::size_t i = 0; i < ds->size(); ++i) c.out << (i ? " & " : "") << "rad" << (*ds)[i];
            c.out << '\n';
        }
    }
    if (c.a.json) c.emit(json{{"all", all}, {"extensions", list}});
    return 0;
}

int cmd_selfcheck(const Context& c) {
    SelfcheckOptions opts{c.a.seed, c.a.count, c.a.max_gen};
    const SelfcheckReport rep = run_selfcheck(opts);
    if (c.a.json) {
        c.emit(json{{"instances", rep.instances},
                    {"checks", rep.checks},
                    {"discrepancies", rep.discrepancies},
                    {"failures", rep.failures},
                    {"total_discrepancies", rep.total_discrepancies()}});
    } else {
        c.out << "instances: " << rep.instances << '\n';
        for (const auto& [k, n] : rep.checks)
            c.out << k << ": " << n << " checks, " << rep.discrepancies.at(k) << " discrepancies\n";
        for (const auto& f : rep.failures) c.out << "  " << f << '\n';
        c.out << "total discrepancies: " << rep.total_discrepancies() << '\n';
    }
    return rep.total_discrepancies() == 0 ? 0 : 1;
}

}  // namespace

std::string monomial(Exponent e, bool raw) {
    if (raw) return e.str();
    if (e.is_zero()) return "1";
    if (e == Exponent(1)) return "u";
    if (e.is_integer()) return "u^" + e.str();
    return "u^(" + e.str() + ")";
}

std::string monomials(const MonomialSet& s, bool raw) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + monomial(s[i], raw);
    return out + "}";
}

NumericalSemigroup parse_semigroup(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::Parse, std::string("bad JSON semigroup: ") + e.what());
        }
        if (j.is_object()) {
            if (!j.contains("generators")) throw Error(ErrorCode::Parse, "JSON semigroup needs \"generators\"");
            j = j["generators"];
        }
        if (!j.is_array()) throw Error(ErrorCode::Parse, "JSON generators must be an array");
        std::vector<Exponent> gens;
        for (const auto& g : j) gens.push_back(exponent_from_json(g));
        return NumericalSemigroup::from_generators(std::move(gens));
    }
    return NumericalSemigroup::from_generators(parse_exponent_list(text));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Args a;
    CLI::App app{"Invariants of numerical semigroup algebras", "nsalg"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    auto algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--coeff", a.coeff, "coefficient ring R, e.g. 4,6,9");
        sub->add_option("--ext", a.ext, "ambient ring R'");
        sub->add_option("--join", a.join, "exponents joined to R to form R'");
        sub->add_option("--ambient", a.ambient, "ambient ring (alias of --ext)");
    };
    auto output_opts = [&](CLI::App* sub) {
        sub->add_flag("--json", a.json, "emit a single JSON document");
        sub->add_flag("--raw", a.raw, "print bare exponents");
    };
    auto limit_opt = [&](CLI::App* sub) { sub->add_option("--limit", a.limit, gap_limit_help()); };

    std::map<std::string, int (*)(const Context&)> handlers{
        {"invariants", cmd_invariants},
        {"classify", cmd_classify},
        {"extensions", cmd_extensions},
        {"decompose", cmd_decompose},
        {"radical", cmd_radical},
        {"cover", cmd_cover},
        {"duplication", cmd_duplication},
        {"fundamental-gaps", cmd_fundamental_gaps},
        {"single-fg", cmd_single_fg},
        {"radical-intersections", cmd_radical_intersections},
        {"selfcheck", cmd_selfcheck},
    };
    const std::map<std::string, std::string> blurbs{
        {"invariants", "gaps, sporadics, conductor, Frobenius and pseudo-Frobenius monomials"},
        {"classify", "symmetric / pseudo-symmetric / almost symmetric, irreducibility"},
        {"extensions", "all coefficient rings between R and R'"},
        {"decompose", "R as an intersection of irreducible extensions"},
        {"radical", "the n-th radical of R in the ambient ring"},
        {"cover", "a symmetric or pseudo-symmetric R with prescribed n-th radical"},
        {"duplication", "numerical duplication of R"},
        {"fundamental-gaps", "fundamental gap monomials and radical witnesses"},
        {"single-fg", "coefficient rings of the ambient ring with one fundamental gap"},
        {"radical-intersections", "which extensions are intersections of radicals"},
        {"selfcheck", "compare fast paths with the brute-force oracle"},
    };
    for (const auto& [name, blurb] : blurbs) {
        CLI::App* sub = app.add_subcommand(name, blurb);
        output_opts(sub);
        if (name == "selfcheck") {
            sub->add_option("--seed", a.seed, "random seed");
            sub->add_option("--count", a.count, "number of random algebras");
            sub->add_option("--max-gen", a.max_gen, "largest coefficient generator");
            continue;
        }
        if (name == "single-fg") {
            sub->add_option("--ambient,--ext", a.ambient, "ambient ring R'");
            sub->add_option("--bound", a.bound, "largest candidate fundamental gap exponent (normalized)");
            sub->add_flag("--include-trivial", a.include_trivial, "also list the ambient ring itself");
            continue;
        }
        if (name == "duplication") {
            sub->add_option("--coeff", a.coeff, "semigroup S");
            sub->add_option("--s0", a.s0, "the member s0 of S");
            sub->add_option("--doubles", a.doubles, "members s_i of S; s_i + s0/2 is joined");
            continue;
        }
        algebra_opts(sub);
        if (name == "extensions" || name == "decompose" || name == "radical-intersections") limit_opt(sub);
        if (name == "radical" || name == "cover") sub->add_option("--n", a.n, "radical index");
        if (name == "cover") {
            sub->add_option("--mode", a.mode, "symmetric or pseudo");
            sub->add_option("--h", a.h, "Frobenius exponent of the result");
            sub->add_flag("--trace", a.trace, "print every stage");
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: PARSE_ERROR: " << e.what() << '\n';
        return 2;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    Context ctx{a, out};
    try {
        return handlers.at(chosen->get_name())(ctx);
    } catch (const Error& e) {
        err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
        return e.code() == ErrorCode::Parse ? 2 : 1;
    }
    return 0;
}

}  // namespace nsalg::cli
