// somos: exact Somos 4 / Somos 5 sequence laboratory.
//
// Subcommands: gen, invariants, curve, companion, fastterm, check, family,
// laurent, dioph, growth, gaps. All exact values are printed as decimal
// strings ("p/q" or "p"); output is byte-stable for identical configs.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "somos/curve.hpp"
#include "somos/diophantine.hpp"
#include "somos/eds.hpp"
#include "somos/growth.hpp"
#include "somos/integrality.hpp"
#include "somos/invariants.hpp"
#include "somos/recurrence.hpp"
#include "somos/symbolic.hpp"

using json = nlohmann::ordered_json;
using namespace somos;

namespace {

struct RunConfig {
    std::string command;
    std::string rec = "somos4";  // somos4 | somos5 | somos8
    std::string alpha = "1";
    std::string beta = "1";
    std::vector<std::string> inits;
    std::int64_t from = 1;
    std::int64_t to = 13;
    std::string format = "json";  // json | csv | text
    std::string out;

    std::int64_t n = 13;              // fastterm
    std::int64_t count = 8;           // companion terms / dioph windows
    std::string criterion = "cor";    // check: cor | gcd
    std::string a = "1", d = "1", e = "1", b = "2", c = "1";  // family
    std::string kind = "somos4";      // laurent: somos4|strong|parity|positivity|nfamily
    std::int64_t n_max = 12;
    std::int64_t bound = 14;
    bool dump = false;
    bool quartic = false;             // dioph
    bool quintic = false;
    bool primitive = false;
    std::string growth = "fit";       // growth: fit | somos8
    std::string gnuplot;
    std::string N = "1";
    std::string p = "2";
    std::int64_t lo = -3;
    std::int64_t hi = 8;
};

json config_to_json(const RunConfig& c) {
    json j;
    j["rec"] = c.rec;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["inits"] = c.inits;
    j["from"] = c.from;
    j["to"] = c.to;
    j["format"] = c.format;
    j["out"] = c.out;
    j["n"] = c.n;
    j["count"] = c.count;
    j["criterion"] = c.criterion;
    j["a"] = c.a;
    j["d"] = c.d;
    j["e"] = c.e;
    j["b"] = c.b;
    j["c"] = c.c;
    j["kind"] = c.kind;
    j["n_max"] = c.n_max;
    j["bound"] = c.bound;
    j["dump"] = c.dump;
    j["quartic"] = c.quartic;
    j["quintic"] = c.quintic;
    j["primitive"] = c.primitive;
    j["growth"] = c.growth;
    j["gnuplot"] = c.gnuplot;
    j["N"] = c.N;
    j["p"] = c.p;
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    return j;
}

void config_from_json(const json& j, RunConfig& c) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("rec", c.rec);
    get("alpha", c.alpha);
    get("beta", c.beta);
    get("inits", c.inits);
    get("from", c.from);
    get("to", c.to);
    get("format", c.format);
    get("out", c.out);
    get("n", c.n);
    get("count", c.count);
    get("criterion", c.criterion);
    get("a", c.a);
    get("d", c.d);
    get("e", c.e);
    get("b", c.b);
    get("c", c.c);
    get("kind", c.kind);
    get("n_max", c.n_max);
    get("bound", c.bound);
    get("dump", c.dump);
    get("quartic", c.quartic);
    get("quintic", c.quintic);
    get("primitive", c.primitive);
    get("growth", c.growth);
    get("gnuplot", c.gnuplot);
    get("N", c.N);
    get("p", c.p);
    get("lo", c.lo);
    get("hi", c.hi);
}

int rec_order(const RunConfig& c) {
    if (c.rec == "somos4") return 4;
    if (c.rec == "somos5") return 5;
    if (c.rec == "somos8") return 8;
    throw ParseError("unknown recurrence type '" + c.rec + "'");
}

std::vector<Rat> parse_inits(const RunConfig& c, int order) {
    if (c.inits.empty()) return std::vector<Rat>(std::size_t(order), Rat(1));
    if (std::int64_t(c.inits.size()) != order)
        throw ParseError("expected " + std::to_string(order) + " initial terms, got " +
                         std::to_string(c.inits.size()));
    std::vector<Rat> v;
    for (const auto& s : c.inits) v.push_back(Rat::parse(s));
    return v;
}

SomosRecurrence<Rat> parse_recurrence(const RunConfig& c) {
    const int k = rec_order(c);
    if (k == 8) return SomosRecurrence<Rat>(8, std::vector<Rat>(4, Rat(1)));
    return SomosRecurrence<Rat>(k, {Rat::parse(c.alpha), Rat::parse(c.beta)});
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error("IoError", "cannot open '" + c.out + "' for writing");
    f << text;
}

json ext_to_json(const ExtElem<Rat>& x) {
    json j;
    for (int k = 0; k < x.modulus_degree(); ++k) j["c" + std::to_string(k)] = x.coeff(k).str();
    return j;
}

json poly_to_json(const LaurentPoly& p) {
    json names = json::array();
    for (std::size_t i = 0; i < p.vars()->arity(); ++i) names.push_back(p.vars()->name(i));
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exps = json::array();
        for (std::size_t i = 0; i < p.vars()->arity(); ++i) exps.push_back(t.exps[i]);
        terms.push_back(json{{"exponents", exps}, {"coeff", t.coeff.get_str()}});
    }
    return json{{"variables", names}, {"terms", terms}};
}

json report_to_json(const CriteriaReport& rep, const std::string& criterion) {
    json j;
    j["criterion"] = criterion;
    j["verdict"] = verdict_name(rep.verdict);
    json hyps = json::array();
    for (const auto& h : rep.hypotheses)
        hyps.push_back(json{{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
    j["hypotheses"] = hyps;
    return j;
}

// ---- subcommand bodies ----

int cmd_gen(const RunConfig& c) {
    auto rec = parse_recurrence(c);
    auto orbit = generate(rec, parse_inits(c, rec.order), 1, c.from, c.to);
    if (c.format == "json") {
        json arr = json::array();
        for (std::int64_t n = c.from; n <= c.to; ++n)
            arr.push_back(json{{"index", n}, {"value", orbit.at(n).str()}});
        emit(c, arr.dump(2) + "\n");
    } else if (c.format == "csv") {
        std::ostringstream os;
        os << "index,value\n";
        for (std::int64_t n = c.from; n <= c.to; ++n) os << n << "," << orbit.at(n).str() << "\n";
        emit(c, os.str());
    } else {
        std::ostringstream os;
        for (std::int64_t n = c.from; n <= c.to; ++n)
            os << "A_" << n << " = " << orbit.at(n).str() << "\n";
        emit(c, os.str());
    }
    return 0;
}

int cmd_invariants(const RunConfig& c) {
    const int k = rec_order(c);
    const auto inits = parse_inits(c, k);
    json j;
    if (k == 4) {
        const Rat alpha = Rat::parse(c.alpha), beta = Rat::parse(c.beta);
        const auto inv = somos4_invariants(alpha, beta, inits);
        const auto curve = curve_from_invariants(alpha, beta, inv.T);
        j["T"] = inv.T.str();
        j["lambda"] = inv.lambda.str();
        j["I"] = inv.I.str();
        j["g2"] = curve.g2.str();
        j["g3"] = curve.g3.str();
        if (curve.j)
            j["j"] = json{{"num", curve.j->num().get_str()}, {"den", curve.j->den().get_str()}};
        else
            j["j"] = "infinite";
    } else if (k == 5) {
        const auto inv = j_tilde(Rat::parse(c.alpha), Rat::parse(c.beta), inits);
        j["J"] = inv.J.str();
        j["I_tilde"] = inv.I_tilde.str();
    } else {
        throw ParseError("invariants requires somos4 or somos5");
    }
    if (c.format == "text") {
        std::ostringstream os;
        for (auto& [key, val] : j.items())
            os << key << " = " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        emit(c, os.str());
    } else {
        emit(c, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_curve(const RunConfig& c) {
    if (rec_order(c) != 4) throw ParseError("curve requires somos4");
    const Rat alpha = Rat::parse(c.alpha), beta = Rat::parse(c.beta);
    auto rec = parse_recurrence(c);
    auto orbit = generate(rec, parse_inits(c, 4), 1, c.lo - 2, c.hi + 2);
    const auto sp = sequence_points(orbit, alpha, beta);
    const auto rep = verify_correspondence(orbit, alpha, beta, c.lo, c.hi);

    json j;
    j["g2"] = sp.curve.g2.str();
    j["g3"] = sp.curve.g3.str();
    if (sp.curve.j)
        j["j"] = json{{"num", sp.curve.j->num().get_str()}, {"den", sp.curve.j->den().get_str()}};
    else
        j["j"] = "infinite";
    j["s_squared"] = alpha.str();
    j["P"] = json{{"x", ext_to_json(sp.P.x)}, {"y", ext_to_json(sp.P.y)}};
    j["Q"] = json{{"x", ext_to_json(sp.Q.x)}, {"y", ext_to_json(sp.Q.y)}};
    j["verified_range"] = json::array({rep.lo, rep.hi});
    j["x_matches"] = rep.x_matches;
    j["y_branch"] = rep.y_branch > 0 ? "+" : (rep.y_branch < 0 ? "-" : "mixed");
    j["t_identity"] = rep.t_identity_ok;
    j["beta_identity"] = rep.beta_identity_ok;
    emit(c, j.dump(2) + "\n");
    return rep.ok() ? 0 : 1;
}

int cmd_companion(const RunConfig& c) {
    const int k = rec_order(c);
    const auto inits = parse_inits(c, k);
    EdsSequence w = [&] {
        if (k == 4) {
            const Rat alpha = Rat::parse(c.alpha), beta = Rat::parse(c.beta);
            return EdsSequence::companion_of_somos4(alpha, beta,
                                                    t_invariant(alpha, beta, inits));
        }
        if (k == 5) {
            const Rat at = Rat::parse(c.alpha), bt = Rat::parse(c.beta);
            return EdsSequence::companion_of_somos5(at, bt, j_tilde(at, bt, inits).J);
        }
        throw ParseError("companion requires somos4 or somos5");
    }();
    w.extend_to(c.count);
    const std::string sym = k == 4 ? "s" : "mu";

    if (c.format == "json") {
        json j;
        j[k == 4 ? "s_squared" : "mu_fourth"] = w.ext_gamma().str();
        json terms = json::array();
        for (std::int64_t n = 1; n <= c.count; ++n) {
            json t = ext_to_json(w.at(n));
            t["n"] = n;
            t["display"] = w.at(n).str(sym);
            terms.push_back(t);
        }
        j["terms"] = terms;
        if (w.collapse_root()) {
            j["collapsed_root"] = w.collapse_root()->str();
            json coll = json::array();
            for (std::int64_t n = 1; n <= c.count; ++n)
                coll.push_back(w.at(n).collapse(*w.collapse_root()).str());
            j["collapsed"] = coll;
        }
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << sym << "^" << w.at(1).modulus_degree() << " = " << w.ext_gamma().str() << "\n";
        for (std::int64_t n = 1; n <= c.count; ++n)
            os << "W_" << n << " = " << w.at(n).str(sym) << "\n";
        if (w.collapse_root()) {
            os << "collapsed (" << sym << " = " << w.collapse_root()->str() << "):";
            for (std::int64_t n = 1; n <= c.count; ++n)
                os << " " << w.at(n).collapse(*w.collapse_root()).str();
            os << "\n";
        }
        emit(c, os.str());
    }
    return 0;
}

int cmd_fastterm(const RunConfig& c) {
    if (rec_order(c) != 4) throw ParseError("fastterm requires somos4");
    auto rec = parse_recurrence(c);
    const auto iv = parse_inits(c, 4);
    const std::array<Rat, 4> inits{iv[0], iv[1], iv[2], iv[3]};
    const Rat value = fast_somos_term(rec, inits, c.n);
    json j;
    j["n"] = c.n;
    j["value"] = value.str();
    j["digits"] = value.num().get_str().size() - (value.sign() < 0 ? 1 : 0);
    emit(c, j.dump(2) + "\n");
    return 0;
}

int cmd_check(const RunConfig& c) {
    const int k = rec_order(c);
    auto rec = parse_recurrence(c);
    const auto inits = parse_inits(c, k);

    // backward terms tau_0, tau_-1, tau_-2 when iteration permits
    std::vector<Rat> window;
    bool have_back = true;
    try {
        auto orbit = generate(rec, inits, 1, -2, k);
        for (std::int64_t n = -2; n <= k; ++n) window.push_back(orbit.at(n));
    } catch (const ZeroPivotError&) {
        have_back = false;
        window = inits;
    }

    json j;
    if (k == 4) {
        const Rat alpha = Rat::parse(c.alpha), beta = Rat::parse(c.beta);
        if (c.criterion == "gcd") {
            if (!have_back) throw ZeroPivotError(0);
            const auto rep =
                check_thm_gcd(alpha, beta, std::span<const Rat>(window).subspan(0, 8));
            j = report_to_json(rep, "somos4_gcd");
        } else {
            const std::span<const Rat> w(window);
            const auto rep = check_cor_somos4(alpha, beta,
                                              have_back ? w.subspan(0, 7) : w.subspan(0, 4));
            j = report_to_json(rep, "somos4_cor");
        }
    } else if (k == 5) {
        const std::span<const Rat> w(window);
        const auto rep = check_cor_somos5(Rat::parse(c.alpha), Rat::parse(c.beta),
                                          have_back ? w.subspan(0, 8) : w.subspan(0, 5));
        j = report_to_json(rep, "somos5_cor");
    } else {
        throw ParseError("check requires somos4 or somos5");
    }

    if (c.format == "text") {
        std::ostringstream os;
        os << "verdict: " << j["verdict"].get<std::string>() << "\n";
        for (const auto& h : j["hypotheses"])
            os << "  " << (h["holds"].get<bool>() ? "[ok]  " : "[fail] ")
               << h["name"].get<std::string>()
               << (h["witness"].get<std::string>().empty()
                       ? ""
                       : "  (" + h["witness"].get<std::string>() + ")")
               << "\n";
        emit(c, os.str());
    } else {
        emit(c, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_family(const RunConfig& c) {
    const auto fam = family_abcde(parse_int(c.a), parse_int(c.d), parse_int(c.e), parse_int(c.b),
                                  parse_int(c.c));
    json j;
    j["alpha"] = fam.rec.coeffs[0].str();
    j["beta"] = fam.rec.coeffs[1].str();
    json inits = json::array();
    for (const auto& v : fam.inits) inits.push_back(v.str());
    j["inits"] = inits;
    json window = json::array();
    for (std::size_t i = 0; i < fam.window.size(); ++i)
        window.push_back(json{{"index", std::int64_t(i) - 2}, {"value", fam.window[i].str()}});
    j["window"] = window;
    j["betaT"] = fam.beta_T.str();
    try {
        const auto rep = check_cor_somos4(fam.rec.coeffs[0], fam.rec.coeffs[1],
                                          std::span<const Rat>(fam.window).subspan(0, 7));
        j["verdict"] = verdict_name(rep.verdict);
    } catch (const ZeroTermError&) {
        j["verdict"] = verdict_name(Verdict::Inconclusive);
        j["note"] = "window contains a zero term";
    }
    emit(c, j.dump(2) + "\n");
    return 0;
}

int cmd_laurent(const RunConfig& c) {
    std::ostringstream os;
    bool all_ok = true;
    auto row_json = [](const SymbolicRow& r) {
        return json{{"n", r.n},
                    {"monomials", r.monomials},
                    {"min_coeff", r.min_coeff.get_str()},
                    {"membership", r.ok ? "pass" : "fail"},
                    {"witness", r.witness}};
    };

    if (c.kind == "somos4") {
        const auto sym = symbolic_somos4(int(c.n_max), int(c.bound));
        for (std::int64_t n = 1; n <= c.n_max; ++n) {
            const auto& p = sym.at(n);
            json row{{"n", n},
                     {"monomials", p.term_count()},
                     {"min_coeff", p.min_coefficient().get_str()},
                     {"membership", "pass"}};
            if (c.dump) row["poly"] = poly_to_json(p);
            os << row.dump() << "\n";
        }
    } else if (c.kind == "strong") {
        const auto rep = strong_laurent_check(int(c.n_max), int(c.bound));
        all_ok = rep.all_ok;
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            json row = row_json(rep.rows[i]);
            row["dual_path"] = rep.dual_path_ok[i] ? "pass" : "fail";
            if (c.dump) row["poly"] = poly_to_json(rep.terms[i]);
            os << row.dump() << "\n";
        }
    } else if (c.kind == "reversal") {
        const auto rep = strong_laurent_reversal_check(int(c.n_max), int(c.bound));
        all_ok = rep.all_ok;
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            json row = row_json(rep.rows[i]);
            row["dual_path"] = rep.dual_path_ok[i] ? "pass" : "fail";
            os << row.dump() << "\n";
        }
    } else if (c.kind == "parity") {
        const auto rep = eds_parity_check(int(c.n_max), int(c.bound));
        all_ok = rep.all_ok;
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            json row = row_json(rep.rows[i]);
            if (c.dump) row["poly"] = poly_to_json(rep.terms[i]);
            os << row.dump() << "\n";
        }
        os << json{{"antisymmetry", rep.antisymmetry_ok ? "pass" : "fail"}}.dump() << "\n";
    } else if (c.kind == "positivity") {
        const auto rep = positivity_check(int(c.n_max), int(c.bound));
        all_ok = rep.all_positive;
        for (const auto& r : rep.rows) {
            json row{{"n", r.n},
                     {"monomials", r.monomials},
                     {"min_coeff", r.min_coeff.get_str()},
                     {"positive", r.ok ? "pass" : "fail"}};
            os << row.dump() << "\n";
        }
    } else if (c.kind == "nfamily") {
        const auto rep = n_family_symbolic(c.lo, c.hi);
        all_ok = rep.all_ok;
        for (const auto& r : rep.rows) {
            json row = row_json(r);
            if (c.dump) row["poly"] = poly_to_json(rep.terms.at(r.n));
            os << row.dump() << "\n";
        }
    } else {
        throw ParseError("unknown laurent kind '" + c.kind + "'");
    }
    os << json{{"all_ok", all_ok}}.dump() << "\n";
    emit(c, os.str());
    if (!all_ok) throw MembershipViolationError(0, "see report rows");
    return 0;
}

int cmd_dioph(const RunConfig& c) {
    if (c.quartic == c.quintic) throw ParseError("choose exactly one of --quartic / --quintic");
    std::ostringstream os;
    StreamResult res;
    if (c.quartic) {
        const auto iv = parse_inits(c, 4);
        const std::array<Rat, 4> inits{iv[0], iv[1], iv[2], iv[3]};
        const auto inst = quartic_instance(Rat::parse(c.alpha), Rat::parse(c.beta), inits);
        res = stream_quartic(inst, inits, std::size_t(c.count), c.primitive);
    } else {
        const auto iv = parse_inits(c, 5);
        const std::array<Rat, 5> inits{iv[0], iv[1], iv[2], iv[3], iv[4]};
        const auto inst = quintic_instance(Rat::parse(c.alpha), Rat::parse(c.beta), inits);
        res = stream_quintic(inst, inits, std::size_t(c.count), c.primitive);
    }
    for (const auto& item : res.items) {
        json w = json::array();
        for (const auto& v : item.window) w.push_back(v.str());
        os << json{{"n", item.start_index},
                   {"window", w},
                   {"gcd", item.gcd.get_str()},
                   {"residual", item.residual.str()}}
                  .dump()
           << "\n";
    }
    if (res.periodic) os << json{{"periodic", true}}.dump() << "\n";
    emit(c, os.str());
    if (res.periodic) throw Error("Periodic", "orbit window repeated; torsion orbit");
    return 0;
}

int cmd_growth(const RunConfig& c) {
    std::ostringstream os;
    if (c.growth == "somos8") {
        const auto rep = somos8_experiment(c.n_max);
        if (c.format == "json") {
            json j;
            j["model"] = "log h(S_n) ~ K n";
            j["K"] = rep.fit.constant;
            j["fit_range"] = json::array({rep.fit.n_lo, rep.fit.n_hi});
            j["rmse"] = rep.fit.rmse;
            if (rep.first_nonintegral) {
                j["first_nonintegral_index"] = *rep.first_nonintegral;
                j["first_nonintegral_value"] = rep.first_nonintegral_value.str();
            }
            json samples = json::array();
            for (const auto& [n, h] : rep.heights) samples.push_back(json::array({n, h}));
            j["heights"] = samples;
            os << j.dump(2) << "\n";
        } else {
            os << "n,log_height\n";
            for (const auto& [n, h] : rep.heights) os << n << "," << h << "\n";
            os << "# model: log h(S_n) ~ K n\n";
            os << "# K = " << rep.fit.constant << " on [" << rep.fit.n_lo << ", " << rep.fit.n_hi
               << "], rmse = " << rep.fit.rmse << "\n";
            if (rep.first_nonintegral)
                os << "# first non-integer iterate: S_" << *rep.first_nonintegral << " = "
                   << rep.first_nonintegral_value.str() << "\n";
        }
        if (!c.gnuplot.empty()) {
            std::ofstream g(c.gnuplot, std::ios::binary);
            if (!g) throw Error("IoError", "cannot open '" + c.gnuplot + "'");
            for (const auto& [n, h] : rep.heights) g << n << " " << h << "\n";
        }
    } else if (c.growth == "fit") {
        auto rec = parse_recurrence(c);
        auto orbit = generate(rec, parse_inits(c, rec.order), 1, c.from, c.to);
        const auto rep = fit_quadratic_growth(orbit, c.from, c.to);
        if (c.format == "json") {
            json j;
            j["model"] = "log |A_n| ~ C n^2";
            j["C"] = rep.constant;
            j["fit_range"] = json::array({rep.n_lo, rep.n_hi});
            j["rmse"] = rep.rmse;
            json samples = json::array();
            for (std::int64_t n = c.from; n <= c.to; ++n)
                samples.push_back(json::array({n, log_height(orbit.at(n))}));
            j["heights"] = samples;
            os << j.dump(2) << "\n";
        } else {
            os << "n,log_height\n";
            for (std::int64_t n = c.from; n <= c.to; ++n)
                os << n << "," << log_height(orbit.at(n)) << "\n";
            os << "# model: log |A_n| ~ C n^2\n";
            os << "# C = " << rep.constant << " on [" << rep.n_lo << ", " << rep.n_hi
               << "], rmse = " << rep.rmse << "\n";
        }
        if (!c.gnuplot.empty()) {
            std::ofstream g(c.gnuplot, std::ios::binary);
            if (!g) throw Error("IoError", "cannot open '" + c.gnuplot + "'");
            for (std::int64_t n = c.from; n <= c.to; ++n)
                g << n << " " << log_height(orbit.at(n)) << "\n";
        }
    } else {
        throw ParseError("unknown growth kind '" + c.growth + "'");
    }
    emit(c, os.str());
    return 0;
}

int cmd_gaps(const RunConfig& c) {
    Orbit<Rat> orbit = [&] {
        if (c.rec == "nfamily") return n_family(parse_int(c.N), c.from, c.to);
        auto rec = parse_recurrence(c);
        return generate(rec, parse_inits(c, rec.order), 1, c.from, c.to);
    }();
    const auto rep = gap_lengths(orbit, parse_int(c.p));
    json j;
    j["p"] = rep.p.get_str();
    j["range"] = json::array({orbit.first_index(), orbit.last_index()});
    j["indices"] = rep.indices;
    j["gaps"] = rep.gaps;
    emit(c, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // a JSON config file mirrors every flag; explicit flags override it
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream f(argv[i + 1]);
            if (!f) {
                std::cerr << "error: ParseError: cannot read config '" << argv[i + 1] << "'\n";
                return 2;
            }
            try {
                config_from_json(json::parse(f), cfg);
            } catch (const std::exception& ex) {
                std::cerr << "error: ParseError: bad config: " << ex.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"exact Somos 4 / Somos 5 sequence laboratory"};
    app.require_subcommand(1);
    bool dump_config = false;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file mirroring all flags");
    app.add_flag("--dump-config", dump_config, "print the canonical config and exit");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rec", cfg.rec, "recurrence: somos4 | somos5 | somos8");
        sub->add_flag_callback("--s4", [&] { cfg.rec = "somos4"; }, "shorthand for --rec somos4");
        sub->add_flag_callback("--s5", [&] { cfg.rec = "somos5"; }, "shorthand for --rec somos5");
        sub->add_flag_callback("--s8", [&] { cfg.rec = "somos8"; }, "shorthand for --rec somos8");
        sub->add_option("--alpha", cfg.alpha, "coefficient alpha as p/q");
        sub->add_option("--beta", cfg.beta, "coefficient beta as p/q");
        sub->add_option("--init", cfg.inits, "initial terms (comma separated p/q)")
            ->delimiter(',');
        sub->add_option("--format", cfg.format, "output: json | csv | text");
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
    };

    auto* gen = app.add_subcommand("gen", "iterate a Somos recurrence exactly");
    add_common(gen);
    gen->add_option("--from", cfg.from, "first index");
    gen->add_option("--to", cfg.to, "last index");

    auto* inv = app.add_subcommand("invariants", "T, lambda, I (or J~, I~) and the curve data");
    add_common(inv);

    auto* curve = app.add_subcommand("curve", "curve data and the point correspondence");
    add_common(curve);
    curve->add_option("--lo", cfg.lo, "first index of the verified range");
    curve->add_option("--hi", cfg.hi, "last index of the verified range");

    auto* comp = app.add_subcommand("companion", "companion EDS terms in c*s^e form");
    add_common(comp);
    comp->add_option("--count", cfg.count, "number of terms W_1..W_count");

    auto* fast = app.add_subcommand("fastterm", "A_n by index doubling in O(log n) steps");
    add_common(fast);
    fast->add_option("--n", cfg.n, "index to evaluate");

    auto* check = app.add_subcommand("check", "sufficient integrality criteria");
    add_common(check);
    check->add_option("--criterion", cfg.criterion, "somos4 criterion: cor | gcd");

    auto* family = app.add_subcommand("family", "the (a,d,e;b,c) integral family");
    family->add_option("--a", cfg.a, "parameter a");
    family->add_option("--d", cfg.d, "parameter d");
    family->add_option("--e", cfg.e, "parameter e");
    family->add_option("--b", cfg.b, "factor b of a^3 d + e^2");
    family->add_option("--c", cfg.c, "factor c of a^3 d + e^2");
    family->add_option("--format", cfg.format, "output: json | csv | text");
    family->add_option("--out", cfg.out, "write output to a file");

    auto* laurent = app.add_subcommand("laurent", "symbolic Laurent verifications");
    laurent->add_option("--kind", cfg.kind,
                        "somos4 | strong | reversal | parity | positivity | nfamily");
    laurent->add_option("--n-max", cfg.n_max, "last index to verify");
    laurent->add_option("--bound", cfg.bound, "configured bound for n-max");
    laurent->add_option("--lo", cfg.lo, "first index (nfamily)");
    laurent->add_option("--hi", cfg.hi, "last index (nfamily)");
    laurent->add_flag("--dump", cfg.dump, "include full canonical polynomials");
    laurent->add_option("--out", cfg.out, "write output to a file");

    auto* dioph = app.add_subcommand("dioph", "stream Diophantine solutions from orbits");
    add_common(dioph);
    dioph->add_flag("--quartic", cfg.quartic, "quartic equation from a Somos 4 orbit");
    dioph->add_flag("--quintic", cfg.quintic, "quintic equation from a Somos 5 orbit");
    dioph->add_option("--count", cfg.count, "number of solution windows");
    dioph->add_flag("--primitive", cfg.primitive, "only windows with gcd 1");

    auto* growth = app.add_subcommand("growth", "height-growth experiments");
    add_common(growth);
    growth->add_option("--kind", cfg.growth, "fit | somos8");
    growth->add_option("--from", cfg.from, "fit range start");
    growth->add_option("--to", cfg.to, "fit range end");
    growth->add_option("--n-max", cfg.n_max, "somos8 iteration bound (<= 50)");
    growth->add_option("--gnuplot", cfg.gnuplot, "also write a gnuplot data file");

    auto* gaps = app.add_subcommand("gaps", "prime divisibility gap lengths");
    add_common(gaps);
    gaps->add_flag_callback("--nfamily", [&] { cfg.rec = "nfamily"; },
                            "use the one-parameter family");
    gaps->add_option("--N", cfg.N, "family parameter N");
    gaps->add_option("--p", cfg.p, "prime p");
    gaps->add_option("--from", cfg.from, "first index");
    gaps->add_option("--to", cfg.to, "last index");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (dump_config) {
            json j = config_to_json(cfg);
            j["command"] = cfg.command;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cfg.command == "gen") return cmd_gen(cfg);
        if (cfg.command == "invariants") return cmd_invariants(cfg);
        if (cfg.command == "curve") return cmd_curve(cfg);
        if (cfg.command == "companion") return cmd_companion(cfg);
        if (cfg.command == "fastterm") return cmd_fastterm(cfg);
        if (cfg.command == "check") return cmd_check(cfg);
        if (cfg.command == "family") return cmd_family(cfg);
        if (cfg.command == "laurent") return cmd_laurent(cfg);
        if (cfg.command == "dioph") return cmd_dioph(cfg);
        if (cfg.command == "growth") return cmd_growth(cfg);
        if (cfg.command == "gaps") return cmd_gaps(cfg);
        std::cerr << "error: ParseError: unknown command\n";
        return 2;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: Internal: " << err.what() << "\n";
        return 1;
    }
}
