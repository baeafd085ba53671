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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gd2/brauer.hpp"
#include "gd2/galois.hpp"
#include "gd2/invariants.hpp"
#include "gd2/models.hpp"
#include "gd2/modular.hpp"
#include "gd2/quotients.hpp"

namespace py = pybind11;
using namespace gd2;

namespace {

BaseField field_of(const std::string& f) {
    if (f == "q" || f == "Q") return BaseField::rationals();
    if (f.rfind("fp:", 0) == 0) return BaseField::prime_field(std::stoll(f.substr(3)));
    throw parse_error("unknown field '" + f + "'");
}

Case case_of(const std::string& c) {
    if (c == "d8" || c == "D8") return Case::D8;
    if (c == "d12" || c == "D12") return Case::D12;
    throw parse_error("unknown case '" + c + "'");
}

Fq rat(const BaseField& F, const std::string& s) { return Fq::parse(F, s); }

py::dict data_dict(const GaloisData& d) {
    py::dict out;
    out["case"] = case_name(d.c);
    out["u"] = d.u.to_string();
    out["v"] = d.v.to_string();
    out["z"] = d.z.to_string();
    out["w"] = d.w.to_string();
    out["s"] = d.s.to_string();
    return out;
}

GaloisData data_from_dict(const std::string& field, const py::dict& d) {
    BaseField F = field_of(field);
    Case c = case_of(d["case"].cast<std::string>());
    return GaloisData{c,
                      rat(F, d["u"].cast<std::string>()),
                      rat(F, d["v"].cast<std::string>()),
                      rat(F, d["z"].cast<std::string>()),
                      d.contains("w") ? rat(F, d["w"].cast<std::string>()) : Fq(F, 1),
                      rat(F, d["s"].cast<std::string>())};
}

} // namespace

PYBIND11_MODULE(_gd2core, m) {
    m.doc() = "exact classification of genus-2 curves with D8/D12 automorphisms";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<obstructed_error>(m, "ObstructedError");
    py::register_exception<search_bound_error>(m, "SearchBoundError");

    m.def(
        "absolute_invariant",
        [](const std::string& poly, const std::string& case_s, const std::string& field) {
            BaseField F = field_of(field);
            return absolute_invariant(Sextic(Poly::parse(F, poly)), case_of(case_s)).to_string();
        },
        py::arg("poly"), py::arg("case"), py::arg("field") = "q");

    m.def(
        "invariants",
        [](const std::string& poly, const std::string& field) {
            BaseField F = field_of(field);
            InvariantSet inv = compute_invariants(Sextic(Poly::parse(F, poly)));
            py::dict out;
            out["I2"] = inv.igusa[0].to_string();
            out["I4"] = inv.igusa[1].to_string();
            out["I6"] = inv.igusa[2].to_string();
            out["I10"] = inv.igusa[3].to_string();
            if (inv.clebsch) {
                out["c2"] = (*inv.clebsch)[0].to_string();
                out["c4"] = (*inv.clebsch)[1].to_string();
                out["c6"] = (*inv.clebsch)[2].to_string();
                out["c10"] = (*inv.clebsch)[3].to_string();
            }
            return out;
        },
        py::arg("poly"), py::arg("field") = "q");

    m.def(
        "poly_discriminant",
        [](const std::string& poly, const std::string& field) {
            BaseField F = field_of(field);
            return poly_discriminant(Poly::parse(F, poly)).to_string();
        },
        py::arg("poly"), py::arg("field") = "q");

    m.def(
        "hilbert_symbol",
        [](const std::string& a, const std::string& b, const std::string& place) {
            BaseField Q = BaseField::rationals();
            mpq_class qa = rat(Q, a).rat(), qb = rat(Q, b).rat();
            if (place == "global") return hilbert_symbol_global(qa, qb) ? 1 : -1;
            if (place == "oo" || place == "inf")
                return hilbert_symbol_local(qa, qb, Place::infinity());
            return hilbert_symbol_local(qa, qb, Place::prime(mpz_class(place)));
        },
        py::arg("a"), py::arg("b"), py::arg("place") = "global");

    m.def(
        "squarefree_part",
        [](const std::string& q) {
            return squarefree_part(rat(BaseField::rationals(), q).rat()).get_str();
        },
        py::arg("q"));

    m.def(
        "solve_conic",
        [](const std::string& a, const std::string& b, const std::string& target) -> py::object {
            BaseField Q = BaseField::rationals();
            ConicResult r = solve_conic(rat(Q, a).rat(), rat(Q, b).rat(), rat(Q, target).rat());
            if (auto* s = std::get_if<ConicSolution>(&r)) {
                py::dict out;
                out["x"] = Fq(Q, s->x).to_string();
                out["z"] = Fq(Q, s->z).to_string();
                return out;
            }
            if (std::holds_alternative<ConicBoundExceeded>(r))
                throw search_bound_error("conic search bound exceeded");
            return py::none();
        },
        py::arg("a"), py::arg("b"), py::arg("target"));

    m.def(
        "make_galois_data",
        [](const std::string& case_s, const std::string& u, const std::string& v,
           const std::optional<std::string>& w, const std::string& field) -> py::object {
            BaseField F = field_of(field);
            std::optional<Fq> wf;
            if (w) wf = rat(F, *w);
            MakeResult r = make_galois_data(case_of(case_s), rat(F, u), rat(F, v), wf);
            if (auto* d = std::get_if<GaloisData>(&r)) return data_dict(*d);
            if (auto* ob = std::get_if<ObstructionReport>(&r)) {
                py::dict out;
                out["obstructed"] = true;
                out["symbol"] = ob->symbol.to_string();
                out["reason"] = ob->reason;
                if (ob->place) out["place"] = ob->place->to_string();
                return out;
            }
            throw search_bound_error(std::get<SearchExceeded>(r).what);
        },
        py::arg("case"), py::arg("u"), py::arg("v"), py::arg("w") = py::none(),
        py::arg("field") = "q");

    m.def(
        "classify_type",
        [](const std::string& field, const py::dict& data) {
            auto [type, ft] = classify_type(data_from_dict(field, data));
            py::dict out;
            out["type"] = type_label_name(type.label);
            out["deg_K"] = ft.deg_K;
            out["deg_K1"] = ft.deg_K1;
            out["deg_K2"] = ft.deg_K2;
            if (ft.deg_K3 >= 0) out["deg_K3"] = ft.deg_K3;
            out["K1"] = ft.K1.to_string();
            out["K2"] = ft.K2.to_string();
            out["generators"] = ft.generators;
            return out;
        },
        py::arg("field"), py::arg("data"));

    m.def(
        "build_model",
        [](const std::string& field, const py::dict& data, const std::string& sign,
           const std::string& d) {
            GaloisData gd = data_from_dict(field, data);
            ModelSign s = sign == "-" ? ModelSign::Minus : ModelSign::Plus;
            std::optional<Fq> dd;
            if (!d.empty()) dd = rat(gd.field(), d);
            CurveModel m2 = build_model(gd, s, dd);
            py::dict out;
            out["F"] = m2.F.to_string();
            out["data"] = data_dict(m2.data);
            out["sign"] = m2.sign == ModelSign::Plus ? "+" : "-";
            out["d"] = m2.d.to_string();
            return out;
        },
        py::arg("field"), py::arg("data"), py::arg("sign") = "+", py::arg("d") = "");

    m.def(
        "twist_relation",
        [](const std::string& field, const py::dict& d1, const std::string& sign1,
           const std::string& dd1, const py::dict& d2, const std::string& sign2,
           const std::string& dd2) {
            GaloisData g1 = data_from_dict(field, d1), g2 = data_from_dict(field, d2);
            auto mk = [&](const GaloisData& g, const std::string& sg, const std::string& dv) {
                std::optional<Fq> dd;
                if (!dv.empty()) dd = rat(g.field(), dv);
                return build_model(g, sg == "-" ? ModelSign::Minus : ModelSign::Plus, dd);
            };
            TwistRelation r = twist_relation(mk(g1, sign1, dd1), mk(g2, sign2, dd2));
            py::dict out;
            out["kind"] = twist_kind_name(r.kind);
            if (r.d) out["d"] = r.d->get_str();
            return out;
        },
        py::arg("field"), py::arg("data1"), py::arg("sign1"), py::arg("d1"), py::arg("data2"),
        py::arg("sign2"), py::arg("d2"));

    m.def(
        "realize_matrices_check",
        [](const std::string& field, const py::dict& data) {
            GaloisData gd = data_from_dict(field, data);
            RealizedGroup g = realize_matrices(gd);
            py::dict out;
            out["order"] = static_cast<int>(g.group.size());
            out["galois_stable"] = g.galois_stable;
            out["tower_degree"] = g.tower->total_degree();
            return out;
        },
        py::arg("field"), py::arg("data"));

    m.def(
        "quotient_j_invariants",
        [](const std::string& t, const std::string& case_s) {
            QuotientPair qp =
                quotient_j_invariants(rat(BaseField::rationals(), t).rat(), case_of(case_s));
            py::dict out;
            auto one = [](const QuadExt& j) {
                py::dict v;
                v["x"] = j.x().to_string();
                v["y"] = j.y().to_string();
                return v;
            };
            out["j1"] = one(qp.j1);
            out["j2"] = one(qp.j2);
            out["galois_conjugate"] = qp.galois_conjugate;
            out["rational_pair"] = qp.rational_pair;
            return out;
        },
        py::arg("t"), py::arg("case"));

    m.def(
        "is_cm_parameter",
        [](const std::string& t, const std::string& case_s) {
            return is_cm_parameter(rat(BaseField::rationals(), t).rat(), case_of(case_s));
        },
        py::arg("t"), py::arg("case"));

    m.def(
        "endomorphism_algebra",
        [](const std::string& case_s, const std::string& type, const std::optional<std::string>& t,
           const std::optional<std::string>& w) {
            Case c = case_of(case_s);
            std::optional<mpq_class> tq, wq;
            BaseField Q = BaseField::rationals();
            if (t) tq = rat(Q, *t).rat();
            if (w) wq = rat(Q, *w).rat();
            EndoAlgebra e = endomorphism_algebra(GaloisType{c, parse_type_label(c, type)}, tq, wq);
            py::dict out;
            out["algebra"] = e.to_string();
            out["q_basis"] = e.qbasis;
            out["q_j"] = e.qj;
            if (e.condition) {
                out["condition"] = e.condition->to_string();
                out["condition_holds"] = *e.condition_holds;
            }
            return out;
        },
        py::arg("case"), py::arg("type"), py::arg("t") = py::none(), py::arg("w") = py::none());

    m.def(
        "verify_qcurve_identity",
        [](double re, double im, int N, double tol, int n_terms) {
            QcurveIdentityReport r = verify_qcurve_identity(UpperHalfPoint{re, im}, N, tol, n_terms);
            py::dict out;
            out["max_error"] = r.max_error;
            out["max_abs_error"] = r.max_abs_error;
            out["pass"] = r.pass;
            out["h_re"] = r.h.real();
            out["h_im"] = r.h.imag();
            return out;
        },
        py::arg("re"), py::arg("im"), py::arg("n"), py::arg("tol") = 1e-6,
        py::arg("n_terms") = 64);

    m.def("hauptmodul_h0", [](double re, double im, int N) {
        Complex h = hauptmodul_h0(UpperHalfPoint{re, im}, N);
        return py::make_tuple(h.real(), h.imag());
    });

    m.def("dedekind_eta", [](double re, double im) {
        Complex e = dedekind_eta(UpperHalfPoint{re, im});
        return py::make_tuple(e.real(), e.imag());
    });
}
