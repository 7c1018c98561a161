// Command-line front end: decide / milnor / sh / knot / resultant /
// factors-modp / selftest. Verdicts map to exit codes 0 (realizable),
// 1 (not realizable), 2 (undetermined); usage and validation errors exit 64.

#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "lisom/expr.hpp"
#include "lisom/report_json.hpp"
#include "lisom/selftest.hpp"

namespace {

using namespace lisom;

constexpr int kExitRealizable = 0;
constexpr int kExitNotRealizable = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;

struct Options {
    bool json = false;
    bool quiet = false;
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_rounds = 1'000'000;

    FactorLimits limits() const { return {trial_limit, rho_rounds}; }
};

long now_ms() {
    using namespace std::chrono;
    return static_cast<long>(
        duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count());
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return kExitRealizable;
        case Verdict::NotRealizable: return kExitNotRealizable;
        case Verdict::Undetermined: return kExitUndetermined;
    }
    return kExitUndetermined;
}

std::pair<long, long> parse_signature(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        fail(Errc::BadInput, "signature must be R,S");
    return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
}

// "i:Ni,..." with 1-based factor indices in canonical order
MilnorProfile parse_profile(const std::string& text, size_t nfactors) {
    MilnorProfile prof;
    prof.neg_pairs.assign(nfactors, 0);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t colon = text.find(':', pos);
        if (colon == std::string::npos) fail(Errc::BadInput, "profile entries are i:N");
        size_t comma = text.find(',', colon);
        if (comma == std::string::npos) comma = text.size();
        size_t idx = std::stoul(text.substr(pos, colon - pos));
        long val = std::stol(text.substr(colon + 1, comma - colon - 1));
        if (idx < 1 || idx > nfactors) fail(Errc::BadInput, "profile index out of range");
        prof.neg_pairs[idx - 1] = val;
        pos = comma == text.size() ? comma : comma + 1;
    }
    return prof;
}

void print_verdict_text(std::ostream& os, const DecisionReport& rep) {
    os << "verdict: " << verdict_name(rep.verdict) << " (rule: " << rep.rule << ")\n";
    os << "C1: " << (rep.c1.pass ? "pass" : "fail") << "  F(1) = " << rep.c1.at_one.str()
       << ", F(-1) = " << rep.c1.at_minus_one.str()
       << ", signed product = " << rep.c1.signed_product.str() << "\n";
    os << "C2: " << (rep.c2.pass ? "pass" : "fail") << "  m(F) = " << rep.c2.m
       << ", deg = " << rep.c2.deg << "\n";
    if (rep.sh) {
        os << "Sh: rank " << rep.sh->rank() << ", " << rep.sh->classes.size() << " class(es)";
        if (rep.sh->unresolved) os << " [unresolved]";
        os << "\n";
    }
    if (rep.epsilon) {
        os << "epsilon total: (";
        for (size_t i = 0; i < rep.epsilon->total.size(); ++i)
            os << (i ? "," : "") << rep.epsilon->total.get(i);
        os << ")\n";
    }
    if (rep.witness) {
        os << "witness: (";
        for (size_t i = 0; i < rep.witness->size(); ++i)
            os << (i ? "," : "") << rep.witness->get(i);
        os << ")\n";
    }
    if (!rep.undetermined_reason.empty()) os << "reason: " << rep.undetermined_reason << "\n";
}

void print_sh_text(std::ostream& os, const ShGroup& sh) {
    os << "rank: " << sh.rank() << (sh.upper_bound_only ? " (upper bound)" : "") << "\n";
    os << "classes:";
    for (const auto& cls : sh.classes) {
        os << " {";
        for (size_t k = 0; k < cls.size(); ++k) os << (k ? "," : "") << cls[k] + 1;
        os << "}";
    }
    os << "\n";
    for (const auto& e : sh.edges) {
        os << "V(" << e.i + 1 << "," << e.j + 1 << "):";
        for (const auto& w : e.witnesses) {
            os << " " << (w.prime == 0 ? std::string("inf") : w.prime.str());
            if (!w.common_factors.empty()) {
                os << " [";
                for (size_t k = 0; k < w.common_factors.size(); ++k)
                    os << (k ? ", " : "") << w.common_factors[k];
                os << "]";
            }
        }
        os << "\n";
    }
    if (sh.unresolved) os << "warning: some prime sets are unresolved\n";
}

int emit(const Options& opt, const std::string& command, const Json& input, const Json& payload,
         long t0, int exit_code, const std::function<void(std::ostream&)>& text) {
    if (opt.quiet) return exit_code;
    if (opt.json) {
        std::cout << report_envelope(command, input, payload, now_ms() - t0).dump(2) << "\n";
    } else {
        text(std::cout);
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-simple isometries of even unimodular lattices: realizability of "
                 "characteristic polynomials, obstruction groups, and knot indices"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON report");
    app.add_flag("--quiet", opt.quiet, "verdict via exit code only");
    app.add_option("--trial-limit", opt.trial_limit, "trial division bound for resultants");
    app.add_option("--rho-rounds", opt.rho_rounds, "Pollard rho iteration budget");

    std::string poly_text, signature_text, profile_text, torus_text, corpus_path;
    std::string f_text, g_text;
    std::uint64_t prime = 0, bound = 1000;
    bool rational = false, indices = false, symmetric_only = false;

    auto* cmd_decide = app.add_subcommand("decide", "decide a (polynomial, signature) query");
    cmd_decide->add_option("--poly", poly_text, "characteristic polynomial")->required();
    cmd_decide->add_option("--signature", signature_text, "target signature R,S")->required();

    auto* cmd_milnor = app.add_subcommand("milnor", "decide a Milnor-index query");
    cmd_milnor->add_option("--poly", poly_text, "characteristic polynomial")->required();
    cmd_milnor->add_option("--signature", signature_text, "target signature R,S")->required();
    cmd_milnor->add_option("--profile", profile_text, "negative pair counts, i:N,...")->required();

    auto* cmd_sh = app.add_subcommand("sh", "obstruction group of a factored polynomial");
    cmd_sh->add_option("--poly", poly_text, "factored polynomial")->required();
    cmd_sh->add_flag("--rational", rational, "bounded rational variant");
    cmd_sh->add_option("--bound", bound, "prime bound for --rational");

    auto* cmd_knot = app.add_subcommand("knot", "knot index and Milnor-index queries");
    cmd_knot->add_option("--torus", torus_text, "torus knot parameters U,V");
    cmd_knot->add_option("--poly", poly_text, "Alexander polynomial (squarefree, unramified)");
    cmd_knot->add_flag("--indices", indices, "list realizable indices");
    cmd_knot->add_option("--milnor", profile_text, "Milnor profile i:N,...");

    auto* cmd_res = app.add_subcommand("resultant", "exact resultant of two polynomials");
    cmd_res->add_option("--f", f_text, "first polynomial")->required();
    cmd_res->add_option("--g", g_text, "second polynomial")->required();

    auto* cmd_modp = app.add_subcommand("factors-modp", "factor a polynomial mod p");
    cmd_modp->add_option("--poly", poly_text, "polynomial")->required();
    cmd_modp->add_option("--prime", prime, "modulus")->required();
    cmd_modp->add_flag("--symmetric-only", symmetric_only, "only self-reciprocal factors");

    auto* cmd_self = app.add_subcommand("selftest", "replay the fixture corpus");
    cmd_self->add_option("--corpus", corpus_path, "path to corpus.json");

    CLI11_PARSE(app, argc, argv);
    long t0 = now_ms();

    try {
        if (*cmd_decide || *cmd_milnor) {
            auto [r, s] = parse_signature(signature_text);
            FactoredCharPoly F = parse_charpoly(poly_text);
            if (r < 0 || s < 0 || r + s != F.degree()) {
                std::cerr << "error: signature " << r << "," << s << " does not sum to deg F = "
                          << F.degree() << "\n";
                return kExitUsage;
            }
            DecisionReport rep;
            std::string name;
            Json input;
            input["poly"] = poly_text;
            input["factors"] = factors_json(F);
            input["r"] = r;
            input["s"] = s;
            if (*cmd_decide) {
                name = "decide";
                rep = decide_lattice(F, {r, s}, opt.limits());
            } else {
                name = "milnor";
                MilnorProfile prof = parse_profile(profile_text, F.count());
                Json jp = Json::array();
                for (long v : prof.neg_pairs) jp.push_back(v);
                input["profile"] = std::move(jp);
                rep = decide_milnor(F, {r, s}, prof, opt.limits());
            }
            return emit(opt, name, input, decision_json(rep), t0, verdict_exit(rep.verdict),
                        [&](std::ostream& os) { print_verdict_text(os, rep); });
        }
        if (*cmd_sh) {
            FactoredCharPoly F = parse_charpoly(poly_text);
            ShGroup sh = rational ? sh_rational_bounded(F, bound) : sh_group(F, opt.limits());
            Json input;
            input["poly"] = poly_text;
            input["factors"] = factors_json(F);
            input["rational"] = rational;
            if (rational) input["bound"] = bound;
            return emit(opt, "sh", input, sh_json(sh), t0, 0,
                        [&](std::ostream& os) { print_sh_text(os, sh); });
        }
        if (*cmd_knot) {
            if (torus_text.empty() == poly_text.empty()) {
                std::cerr << "error: give exactly one of --torus or --poly\n";
                return kExitUsage;
            }
            FactoredCharPoly F = [&] {
                if (!torus_text.empty()) {
                    auto [u, v] = parse_signature(torus_text);
                    return torus_alexander(
                        TorusKnotSpec(static_cast<unsigned>(u), static_cast<unsigned>(v)));
                }
                return parse_charpoly(poly_text);
            }();
            Json input;
            if (!torus_text.empty()) input["torus"] = torus_text;
            if (!poly_text.empty()) input["poly"] = poly_text;
            input["factors"] = factors_json(F);
            if (indices) {
                KnotIndexReport rep = realizable_indices(F, opt.limits());
                return emit(opt, "knot-indices", input, knot_indices_json(rep), t0, 0,
                            [&](std::ostream& os) {
                                os << "deg: " << rep.deg << "\nrealizable indices:";
                                for (long i : rep.realizable) os << " " << i;
                                os << "\n";
                            });
            }
            if (profile_text.empty()) {
                std::cerr << "error: give --indices or --milnor PROFILE\n";
                return kExitUsage;
            }
            MilnorProfile prof = parse_profile(profile_text, F.count());
            long m = m_of(F);
            long s = m, deg = F.degree();
            for (long v : prof.neg_pairs) s += 2 * v;
            DecisionReport rep = knot_milnor_realizable(F, {deg - s, s}, prof, opt.limits());
            Json jp = Json::array();
            for (long v : prof.neg_pairs) jp.push_back(v);
            input["profile"] = std::move(jp);
            input["r"] = deg - s;
            input["s"] = s;
            return emit(opt, "knot-milnor", input, decision_json(rep), t0,
                        verdict_exit(rep.verdict),
                        [&](std::ostream& os) { print_verdict_text(os, rep); });
        }
        if (*cmd_res) {
            IntPoly f = parse_intpoly(f_text);
            IntPoly g = parse_intpoly(g_text);
            BigInt res = resultant(f, g);
            Json input;
            input["f"] = f_text;
            input["g"] = g_text;
            Json payload;
            payload["resultant"] = res.str();
            return emit(opt, "resultant", input, payload, t0, 0,
                        [&](std::ostream& os) { os << res.str() << "\n"; });
        }
        if (*cmd_modp) {
            IntPoly f = parse_intpoly(poly_text);
            FpPoly fr = reduce_mod(f, prime);
            Json input;
            input["poly"] = poly_text;
            input["prime"] = prime;
            Json payload;
            if (symmetric_only) {
                auto factors = symmetric_irreducible_factors(fr);
                Json arr = Json::array();
                for (const auto& q : factors) arr.push_back(q.to_string());
                payload["symmetric_factors"] = std::move(arr);
                return emit(opt, "factors-modp", input, payload, t0, 0,
                            [&](std::ostream& os) {
                                for (const auto& q : factors) os << q.to_string() << "\n";
                            });
            }
            FpFactorization fac = factor_mod(fr);
            Json arr = Json::array();
            for (const auto& [q, mult] : fac.factors) {
                Json e;
                e["poly"] = q.to_string();
                e["multiplicity"] = mult;
                e["self_reciprocal"] = is_self_reciprocal(q);
                arr.push_back(std::move(e));
            }
            payload["unit"] = fac.unit;
            payload["factors"] = std::move(arr);
            return emit(opt, "factors-modp", input, payload, t0, 0, [&](std::ostream& os) {
                for (const auto& [q, mult] : fac.factors)
                    os << q.to_string() << (mult > 1 ? " ^ " + std::to_string(mult) : "") << "\n";
            });
        }
        if (*cmd_self) {
            std::string path = corpus_path.empty() ? default_corpus_path(argv[0]) : corpus_path;
            if (path.empty()) {
                std::cerr << "error: no corpus file found; pass --corpus\n";
                return kExitUsage;
            }
            SelftestResult res = run_corpus(path, std::cout);
            res.merge(run_builtin_properties(std::cout));
            std::cout << res.passed << " passed, " << res.failed << " failed, "
                      << res.internal_inconsistencies << " internal inconsistencies\n";
            return res.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
