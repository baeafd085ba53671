/*
   Copyright 2026 The gd2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gd2/brauer.hpp"
#include "gd2/config.hpp"
#include "gd2/galois.hpp"
#include "gd2/invariants.hpp"
#include "gd2/models.hpp"
#include "gd2/modular.hpp"
#include "gd2/quotients.hpp"

using json = nlohmann::ordered_json;
using namespace gd2;

namespace {

struct Options {
    bool pretty = false;
    Config cfg = Config::from_env();
    std::string field = "q";
};

BaseField parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return BaseField::rationals();
    if (s.rfind("fp:", 0) == 0) return BaseField::prime_field(std::stoll(s.substr(3)));
    throw parse_error("unknown field '" + s + "' (expected q or fp:<p>)");
}

Case parse_case(const std::string& s) {
    if (s == "d8" || s == "D8") return Case::D8;
    if (s == "d12" || s == "D12") return Case::D12;
    throw parse_error("unknown case '" + s + "' (expected d8 or d12)");
}

ModelSign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return ModelSign::Plus;
    if (s == "-" || s == "minus") return ModelSign::Minus;
    throw parse_error("unknown sign '" + s + "' (expected + or -)");
}

mpq_class parse_rat(const std::string& s) {
    return Fq::parse(BaseField::rationals(), s).rat();
}

void emit(const Options& opt, json doc) {
    doc["schema"] = "gd2/1";
    // keep schema first
    json out;
    out["schema"] = "gd2/1";
    for (auto& [k, v] : doc.items())
        if (k != "schema") out[k] = v;
    if (opt.pretty) std::cout << out.dump(2) << "\n";
    else std::cout << out.dump() << "\n";
}

json quad_ext_json(const QuadExt& e) {
    return json{{"x", e.x().to_string()},
                {"y", e.y().to_string()},
                {"radicand", e.u().to_string()},
                {"value", e.to_string()}};
}

json field_tower_json(const FieldTowerDescription& ft) {
    json j{{"K1", ft.K1.to_string()},
           {"K2", ft.K2.to_string()},
           {"deg_K1", ft.deg_K1},
           {"deg_K2", ft.deg_K2},
           {"deg_K", ft.deg_K},
           {"generators", ft.generators}};
    if (ft.deg_K3 >= 0) j["deg_K3"] = ft.deg_K3;
    std::string field = "Q";
    if (ft.deg_K > 1) {
        field = "Q(";
        for (size_t i = 0; i < ft.generators.size(); ++i)
            field += (i ? ", " : "") + ft.generators[i];
        field += ")";
    }
    j["K"] = field;
    if (ft.table_condition) {
        j["table_condition"] = ft.table_condition->to_string();
        j["table_condition_holds"] = ft.table_condition_holds;
    }
    return j;
}

json galois_data_json(const GaloisData& d) {
    return json{{"case", case_name(d.c)}, {"u", d.u.to_string()}, {"v", d.v.to_string()},
                {"z", d.z.to_string()},   {"w", d.w.to_string()}, {"s", d.s.to_string()}};
}

/// Derive the witness s from (u, v, z); throws when the congruence fails.
GaloisData data_from_zuvw(Case c, const Fq& u, const Fq& v, const Fq& z, const Fq& w) {
    const BaseField& F = u.field();
    Fq s2 = c == Case::D8 ? (Fq(F, 1) - z * z * u) / (u * v)
                          : (u * u * u - z * z) / (Fq(F, 3) * v);
    auto s = s2.sqrt();
    if (!s)
        throw domain_error("no Galois structure: " +
                           std::string(c == Case::D8 ? "(1 - z^2 u)/(uv)" : "(u^3 - z^2)/(3v)") +
                           " = " + s2.to_string() + " is not a square");
    GaloisData d{c, u, v, z, w, *s};
    if (!d.identity_holds()) throw domain_error("inconsistent Galois data");
    return d;
}

GaloisData make_or_throw(Case c, const Fq& u, const Fq& v, const std::optional<Fq>& w,
                         const Config& cfg) {
    MakeResult r = make_galois_data(c, u, v, w, cfg);
    if (auto* ob = std::get_if<ObstructionReport>(&r)) {
        std::string msg = "obstructed: " + ob->reason + "; witness " + ob->symbol.to_string();
        if (ob->place) msg += " nontrivial at place " + ob->place->to_string();
        throw obstructed_error(msg);
    }
    if (auto* se = std::get_if<SearchExceeded>(&r)) throw search_bound_error(se->what);
    return std::get<GaloisData>(r);
}

// ---------------------------------------------------------------------------

int cmd_invariants(const Options& opt, const std::string& poly_text, const std::string& coeffs,
                   const std::string& case_s) {
    BaseField F = parse_field(opt.field);
    Poly f(F);
    if (!coeffs.empty()) {
        std::vector<Fq> c;
        std::string cur;
        for (char ch : coeffs + ",") {
            if (ch == ',') {
                c.push_back(Fq::parse(F, cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f = Poly(F, std::move(c));
    } else if (!poly_text.empty()) {
        f = Poly::parse(F, poly_text);
    } else {
        throw parse_error("one of --poly or --coeffs is required");
    }
    Case c = parse_case(case_s);
    Sextic sx(f);
    InvariantSet inv = compute_invariants(sx);
    json j{{"field", F.to_string()}, {"case", case_name(c)}, {"poly", f.to_string()}};
    j["igusa"] = {{"I2", inv.igusa[0].to_string()},
                  {"I4", inv.igusa[1].to_string()},
                  {"I6", inv.igusa[2].to_string()},
                  {"I10", inv.igusa[3].to_string()}};
    if (inv.clebsch) {
        j["clebsch"] = {{"c2", (*inv.clebsch)[0].to_string()},
                        {"c4", (*inv.clebsch)[1].to_string()},
                        {"c6", (*inv.clebsch)[2].to_string()},
                        {"c10", (*inv.clebsch)[3].to_string()}};
    } else {
        j["clebsch"] = nullptr;
    }
    j["t"] = absolute_invariant(sx, c).to_string();
    emit(opt, j);
    return 0;
}

int cmd_construct(const Options& opt, const std::string& case_s, const std::string& u_s,
                  const std::string& v_s, const std::string& w_s, const std::string& sign_s,
                  const std::string& d_s) {
    BaseField F = parse_field(opt.field);
    Case c = parse_case(case_s);
    Fq u = Fq::parse(F, u_s), v = Fq::parse(F, v_s);
    std::optional<Fq> w;
    if (!w_s.empty()) w = Fq::parse(F, w_s);
    GaloisData data = make_or_throw(c, u, v, w, opt.cfg);
    ModelSign sign = sign_s.empty() ? ModelSign::Plus : parse_sign(sign_s);
    std::optional<Fq> d;
    if (!d_s.empty()) d = Fq::parse(F, d_s);
    CurveModel model = build_model(data, sign, d);
    auto [type, ft] = classify_type(data);

    json j{{"field", F.to_string()}, {"case", case_name(c)}};
    j["data"] = galois_data_json(data);
    j["model"] = {{"F", model.F.to_string()},
                  {"sign", model.sign == ModelSign::Plus ? "+" : "-"},
                  {"d", model.d.to_string()},
                  {"data", galois_data_json(model.data)}};
    j["type"] = type_label_name(type.label);
    j["field_tower"] = field_tower_json(ft);
    json obs = json::array();
    if (F.is_rationals()) {
        if (c == Case::D8) {
            obs.push_back({{"symbol", QuaternionSymbol{(-v).rat(), data.w.rat()}.to_string()},
                           {"name", "(-v,w)"},
                           {"trivial", hilbert_symbol_global((-v).rat(), data.w.rat())}});
            obs.push_back({{"symbol", QuaternionSymbol{u.rat(), (-v).rat()}.to_string()},
                           {"name", "(u,-v)"},
                           {"trivial", hilbert_symbol_global(u.rat(), (-v).rat())}});
        } else {
            mpq_class m3v = -3 * v.rat();
            obs.push_back({{"symbol", QuaternionSymbol{u.rat(), m3v}.to_string()},
                           {"name", "(u,-3v)"},
                           {"trivial", hilbert_symbol_global(u.rat(), m3v)}});
        }
    }
    j["obstruction"] = {{"symbols", obs}, {"trivial", true}};
    json gens = json::array();
    for (const auto& g : hyperelliptic_twist_group(data)) gens.push_back(g.to_string());
    j["hyperelliptic_twist_group_mod"] = gens;
    emit(opt, j);
    return 0;
}

int cmd_classify(const Options& opt, const std::string& case_s, const std::string& u_s,
                 const std::string& v_s, const std::string& z_s, const std::string& w_s) {
    BaseField F = parse_field(opt.field);
    Case c = parse_case(case_s);
    Fq u = Fq::parse(F, u_s), v = Fq::parse(F, v_s), z = Fq::parse(F, z_s);
    Fq w = w_s.empty() ? Fq(F, 1) : Fq::parse(F, w_s);
    GaloisData data = data_from_zuvw(c, u, v, z, w);
    auto [type, ft] = classify_type(data);
    json j{{"field", F.to_string()}, {"case", case_name(c)}};
    j["data"] = galois_data_json(data);
    j["type"] = type_label_name(type.label);
    j["field_tower"] = field_tower_json(ft);
    emit(opt, j);
    return 0;
}

int cmd_twistrel(const Options& opt, const std::string& case_s,
                 const std::array<std::string, 5>& m1, const std::array<std::string, 5>& m2) {
    BaseField F = parse_field(opt.field);
    Case c = parse_case(case_s);
    auto build = [&](const std::array<std::string, 5>& ms) {
        Fq u = Fq::parse(F, ms[0]), v = Fq::parse(F, ms[1]);
        GaloisData data = ms[2].empty()
                              ? make_or_throw(c, u, v, std::nullopt, opt.cfg)
                              : data_from_zuvw(c, u, v, Fq::parse(F, ms[2]), Fq(F, 1));
        ModelSign sign = ms[3].empty() ? ModelSign::Plus : parse_sign(ms[3]);
        std::optional<Fq> d;
        if (!ms[4].empty()) d = Fq::parse(F, ms[4]);
        return build_model(data, sign, d);
    };
    CurveModel a = build(m1), b = build(m2);
    TwistRelation rel = twist_relation(a, b);
    json j{{"field", F.to_string()},
           {"case", case_name(c)},
           {"model1", {{"F", a.F.to_string()}, {"data", galois_data_json(a.data)}}},
           {"model2", {{"F", b.F.to_string()}, {"data", galois_data_json(b.data)}}},
           {"kind", twist_kind_name(rel.kind)}};
    if (rel.d) j["d"] = rel.d->get_str();
    else j["d"] = nullptr;
    emit(opt, j);
    return 0;
}

int cmd_quotients(const Options& opt, const std::string& case_s, const std::string& t_s,
                  const std::string& cover_s, const std::string& h_s, const std::string& w_s) {
    Case c = parse_case(case_s);
    json j{{"case", case_name(c)}};
    if (!cover_s.empty()) {
        CoveringScenario sc;
        if (cover_s == "deg3_quadratic") sc = CoveringScenario::Deg3Quadratic;
        else if (cover_s == "deg2_quadratic") sc = CoveringScenario::Deg2Quadratic;
        else if (cover_s == "deg2_cyclic_quartic") sc = CoveringScenario::Deg2CyclicQuartic;
        else throw parse_error("unknown covering scenario '" + cover_s + "'");
        if (h_s.empty()) throw parse_error("--h is required with --covering");
        std::optional<mpq_class> w;
        if (!w_s.empty()) w = parse_rat(w_s);
        CoveringReport rep = covering_obstruction(parse_rat(h_s), sc, w);
        j["scenario"] = cover_s;
        j["sign_class_trivial"] = rep.sign_class.trivial;
        json syms = json::array();
        for (size_t i = 0; i < rep.symbols.size(); ++i)
            syms.push_back({{"name", rep.symbols[i].first},
                            {"symbol", rep.symbols[i].second.to_string()},
                            {"trivial", static_cast<bool>(rep.symbol_trivial[i])}});
        j["symbols"] = syms;
        if (rep.product_class_name) {
            j["product_class"] = *rep.product_class_name;
            j["product_class_trivial"] = *rep.product_class_trivial;
        }
        j["covering_exists"] = rep.covering_exists;
        emit(opt, j);
        return 0;
    }
    if (t_s.empty()) throw parse_error("--t is required");
    mpq_class t = parse_rat(t_s);
    QuotientPair qp = quotient_j_invariants(t, c);
    j["t"] = t_s;
    j["j1"] = quad_ext_json(qp.j1);
    j["j2"] = quad_ext_json(qp.j2);
    j["galois_conjugate"] = qp.galois_conjugate;
    j["rational_pair"] = qp.rational_pair;
    j["cm"] = is_cm_parameter(t, c);
    emit(opt, j);
    return 0;
}

int cmd_gl2type(const Options& opt, const std::string& case_s, const std::string& type_s,
                const std::string& t_s, const std::string& w_s) {
    Case c = parse_case(case_s);
    GaloisType type{c, parse_type_label(c, type_s)};
    std::optional<mpq_class> t, w;
    if (!t_s.empty()) t = parse_rat(t_s);
    if (!w_s.empty()) w = parse_rat(w_s);
    EndoAlgebra e = endomorphism_algebra(type, t, w);
    json j{{"case", case_name(c)},
           {"type", type_label_name(type.label)},
           {"endomorphism_algebra", e.to_string()},
           {"q_basis", e.qbasis},
           {"q_j", e.qj}};
    if (e.condition) {
        j["condition"] = e.condition->to_string();
        j["condition_holds"] = *e.condition_holds;
    } else {
        j["condition"] = nullptr;
    }
    emit(opt, j);
    return 0;
}

int cmd_qcheck(const Options& opt, int N, const std::string& tau_s, double tol) {
    UpperHalfPoint tau = UpperHalfPoint::parse(tau_s);
    QcurveIdentityReport rep = verify_qcurve_identity(tau, N, tol, opt.cfg.qseries_terms);
    json j{{"n", N},
           {"tau", {{"re", tau.re}, {"im", tau.im}}},
           {"h", {{"re", rep.h.real()}, {"im", rep.h.imag()}}},
           {"j_tau", {{"re", rep.j_tau.real()}, {"im", rep.j_tau.imag()}}},
           {"j_ntau", {{"re", rep.j_Ntau.real()}, {"im", rep.j_Ntau.imag()}}},
           {"max_error", rep.max_error},
           {"max_abs_error", rep.max_abs_error},
           {"tol", tol},
           {"pass", rep.pass}};
    emit(opt, j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"genus-2 curves with dihedral automorphisms: invariants, twists, quotients"};
    app.require_subcommand(1);
    app.add_flag("--pretty", opt.pretty, "indent the JSON output");
    app.add_option("--field", opt.field, "base field: q or fp:<p>")->capture_default_str();
    app.add_option("--search-bound", opt.cfg.conic_height, "conic point search height bound");
    app.add_option("--factor-bound", opt.cfg.factor_bound, "trial division bound");
    app.add_option("--qseries-n", opt.cfg.qseries_terms, "q-expansion truncation order");

    std::string poly, coeffs, case_s, u_s, v_s, w_s, z_s, sign_s, d_s, t_s, type_s, tau_s;
    std::string cover_s, h_s;
    std::array<std::string, 5> m1{}, m2{};
    int N = 2;
    double tol = 1e-6;

    auto* inv = app.add_subcommand("invariants", "Clebsch/Igusa invariants and the absolute invariant");
    inv->add_option("--poly", poly, "polynomial, e.g. \"X^5+X^3+2*X\"");
    inv->add_option("--coeffs", coeffs, "a0,...,a6");
    inv->add_option("--case", case_s, "d8 or d12")->required();

    auto* con = app.add_subcommand("construct", "construct a rational model from (u, v)");
    con->add_option("--case", case_s, "d8 or d12")->required();
    con->add_option("--u", u_s)->required();
    con->add_option("--v", v_s)->required();
    con->add_option("--w", w_s);
    con->add_option("--sign", sign_s, "+ or - (D8)");
    con->add_option("--twist", d_s, "hyperelliptic twist factor d");

    auto* cls = app.add_subcommand("classify", "classify the Galois structure of (u, v, z)");
    cls->add_option("--case", case_s)->required();
    cls->add_option("--u", u_s)->required();
    cls->add_option("--v", v_s)->required();
    cls->add_option("--z", z_s)->required();
    cls->add_option("--w", w_s);

    auto* twr = app.add_subcommand("twistrel", "twist relation between two models");
    twr->add_option("--case", case_s)->required();
    twr->add_option("--u1", m1[0])->required();
    twr->add_option("--v1", m1[1])->required();
    twr->add_option("--z1", m1[2]);
    twr->add_option("--sign1", m1[3]);
    twr->add_option("--d1", m1[4]);
    twr->add_option("--u2", m2[0])->required();
    twr->add_option("--v2", m2[1])->required();
    twr->add_option("--z2", m2[2]);
    twr->add_option("--sign2", m2[3]);
    twr->add_option("--d2", m2[4]);

    auto* quo = app.add_subcommand("quotients", "elliptic-quotient j-invariants / covering obstructions");
    quo->add_option("--case", case_s)->required();
    quo->add_option("--t", t_s, "absolute invariant");
    quo->add_option("--covering", cover_s, "deg3_quadratic | deg2_quadratic | deg2_cyclic_quartic");
    quo->add_option("--h", h_s, "hauptmodul value (covering scenarios)");
    quo->add_option("--w", w_s, "quartic parameter (cyclic quartic scenario)");

    auto* gl2 = app.add_subcommand("gl2type", "End_Q(J_C) by Galois type");
    gl2->add_option("--case", case_s)->required();
    gl2->add_option("--type", type_s)->required();
    gl2->add_option("--t", t_s);
    gl2->add_option("--w", w_s);

    auto* qck = app.add_subcommand("qcheck", "numeric check of the Q-curve parametrization");
    qck->add_option("--n", N, "2 or 3")->required();
    qck->add_option("--tau", tau_s, "upper half-plane point, e.g. 0.3+1.1i")->required();
    qck->add_option("--tol", tol)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err{{"schema", "gd2/1"},
                 {"error", {{"code", 2}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(opt, poly, coeffs, case_s);
        if (con->parsed()) return cmd_construct(opt, case_s, u_s, v_s, w_s, sign_s, d_s);
        if (cls->parsed()) return cmd_classify(opt, case_s, u_s, v_s, z_s, w_s);
        if (twr->parsed()) return cmd_twistrel(opt, case_s, m1, m2);
        if (quo->parsed()) return cmd_quotients(opt, case_s, t_s, cover_s, h_s, w_s);
        if (gl2->parsed()) return cmd_gl2type(opt, case_s, type_s, t_s, w_s);
        if (qck->parsed()) return cmd_qcheck(opt, N, tau_s, tol);
    } catch (const error& e) {
        json err{{"schema", "gd2/1"},
                 {"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cout << (opt.pretty ? err.dump(2) : err.dump()) << "\n";
        return e.code();
    } catch (const std::exception& e) {
        json err{{"schema", "gd2/1"}, {"error", {{"code", 3}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 3;
    }
    return 0;
}
