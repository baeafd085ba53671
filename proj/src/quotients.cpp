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

#include "gd2/quotients.hpp"

#include <algorithm>

namespace gd2 {

namespace {

const BaseField kQ = BaseField::rationals();

QuadExt qe(const mpq_class& x, const mpq_class& y, const mpq_class& u) {
    return QuadExt(Fq(kQ, x), Fq(kQ, y), Fq(kQ, u));
}

} // namespace

QuotientPair quotient_j_invariants(const mpq_class& t, Case c) {
    if (t == 0 || t == mpq_class(1, 4))
        throw domain_error("excluded absolute invariant t in {0, 1/4}");
    Fq tf(kQ, t);
    bool square = tf.is_square();
    // arithmetic in Q(sqrt t); for square t the radicand is still carried and
    // the final values are reduced to the base field
    QuadExt w = qe(0, 1, t); // sqrt t
    QuadExt one = qe(1, 0, t), two = qe(2, 0, t);
    auto cube = [](const QuadExt& x) { return x * x * x; };
    QuadExt j1 = one, j2 = one;
    if (c == Case::D8) {
        QuadExt n1 = cube(qe(3, 0, t) - qe(10, 0, t) * w) * qe(64, 0, t);
        QuadExt n2 = cube(qe(3, 0, t) + qe(10, 0, t) * w) * qe(64, 0, t);
        j1 = n1 / ((one - two * w) * (one + two * w) * (one + two * w));
        j2 = n2 / ((one + two * w) * (one - two * w) * (one - two * w));
    } else {
        QuadExt c0 = qe(6912, 0, t); // 2^8 3^3
        QuadExt n1 = c0 * cube(qe(2, 0, t) - qe(5, 0, t) * w) * w;
        QuadExt n2 = c0 * cube(qe(2, 0, t) + qe(5, 0, t) * w) * (-w);
        j1 = n1 / ((one - two * w) * (one + two * w) * (one + two * w) * (one + two * w));
        j2 = n2 / ((one + two * w) * (one - two * w) * (one - two * w) * (one - two * w));
    }
    if (square) {
        // materialize sqrt t and reduce both values into Q
        Fq r = *tf.sqrt();
        auto collapse = [&](const QuadExt& j) {
            return QuadExt(j.x() + j.y() * r, Fq(kQ, 0), j.u());
        };
        j1 = collapse(j1);
        j2 = collapse(j2);
    }
    bool rational = j1.in_base() && j2.in_base();
    bool conj = !square && j2 == j1.conj();
    return QuotientPair{j1, j2, conj, rational};
}

const std::vector<mpq_class>& cm_parameters(Case c) {
    static const std::vector<mpq_class> d8 = {
        mpq_class(9, 100),       mpq_class(81, 196),         mpq_class(3969, 16900),
        mpq_class(-81, 700),     mpq_class(1, 5),            mpq_class(9, 32),
        mpq_class(12, 49),       mpq_class(81, 320),         mpq_class(81, 325),
        mpq_class(2401, 9600),   mpq_class(9801, 39200),     mpq_class(6480, 25921),
        mpq_class(194481, 777925), mpq_class(96059601, 384238400)};
    static const std::vector<mpq_class> d12 = {
        mpq_class(4, 25),      mpq_class(-1, 50),   mpq_class(-4, 11),  mpq_class(1, 20),
        mpq_class(1, 2),       mpq_class(27, 100),  mpq_class(4, 17),   mpq_class(125, 484),
        mpq_class(20, 81),     mpq_class(256, 1025), mpq_class(756, 3025),
        mpq_class(62500, 250001)};
    return c == Case::D8 ? d8 : d12;
}

bool is_cm_parameter(const mpq_class& t, Case c) {
    if (t == 0 || t == mpq_class(1, 4))
        throw domain_error("excluded absolute invariant t in {0, 1/4}");
    const auto& list = cm_parameters(c);
    return std::find(list.begin(), list.end(), t) != list.end();
}

std::string EndoAlgebra::to_string() const {
    switch (desc) {
        case Desc::M2Q: return "M2(Q)";
        case Desc::QxQ: return "QxQ";
        case Desc::QOnly: return "Q";
        case Desc::QuadField: return "Q(sqrt " + std::to_string(quad_d) + ")";
    }
    return "?";
}

EndoAlgebra endomorphism_algebra(const GaloisType& type, const std::optional<mpq_class>& t,
                                 const std::optional<mpq_class>& w) {
    EndoAlgebra out{EndoAlgebra::Desc::QOnly, 0, "1", "Q", std::nullopt, std::nullopt};
    auto cond = [&](const std::optional<mpq_class>& x, long y) {
        if (!x) return;
        if (*x == 0) throw domain_error("condition parameter must be nonzero");
        out.condition = QuaternionSymbol{*x, mpq_class(y)};
        out.condition_holds = hilbert_symbol_global(*x, mpq_class(y));
    };
    if (type.c == Case::D8) {
        switch (type.label) {
            case GaloisTypeLabel::I:
                out = {EndoAlgebra::Desc::M2Q, 0, "1,U,V,UV", "Q", {}, {}};
                break;
            case GaloisTypeLabel::C2A:
                out = {EndoAlgebra::Desc::QuadField, -1, "1,V", "Q", {}, {}};
                break;
            case GaloisTypeLabel::C2B:
                out = {EndoAlgebra::Desc::QxQ, 0, "1,U", "Q", {}, {}};
                break;
            case GaloisTypeLabel::C2C:
                out = {EndoAlgebra::Desc::QuadField, 2, "1,U(1+V)", "Q(sqrt t)", {}, {}};
                cond(t, 2);
                break;
            case GaloisTypeLabel::C4:
                out = {EndoAlgebra::Desc::QuadField, -1, "1,V", "Q(sqrt t)", {}, {}};
                cond(w, -1);
                break;
            default:
                break; // V4A, V4B, D8: End_Q = Q
        }
        return out;
    }
    switch (type.label) {
        case GaloisTypeLabel::I:
            out = {EndoAlgebra::Desc::M2Q, 0, "1,U,V,UV", "Q", {}, {}};
            break;
        case GaloisTypeLabel::C2A:
            out = {EndoAlgebra::Desc::QuadField, -3, "1,V", "Q(sqrt t)", {}, {}};
            cond(t, -3);
            break;
        case GaloisTypeLabel::C2B:
            out = {EndoAlgebra::Desc::QxQ, 0, "1,U", "Q", {}, {}};
            break;
        case GaloisTypeLabel::C2C:
            out = {EndoAlgebra::Desc::QuadField, 3, "1,U(1+2V)", "Q(sqrt t)", {}, {}};
            cond(t, 3);
            break;
        case GaloisTypeLabel::C3:
            out = {EndoAlgebra::Desc::QuadField, -3, "1,V", "Q", {}, {}};
            break;
        case GaloisTypeLabel::C6:
            out = {EndoAlgebra::Desc::QuadField, -3, "1,V", "Q(sqrt t)", {}, {}};
            cond(t, -3);
            break;
        default:
            break; // V4, D6A, D6B, D12: End_Q = Q
    }
    return out;
}

CoveringReport covering_obstruction(const mpq_class& h, CoveringScenario sc,
                                    const std::optional<mpq_class>& w) {
    if (h == 0) throw domain_error("h must be nonzero");
    if (Fq(kQ, h).is_square())
        throw domain_error("h must not be a square: K = Q(sqrt h) must be quadratic");
    CoveringReport out{{true}, {}, {}, std::nullopt, std::nullopt, true};
    auto add = [&](const std::string& name, const mpq_class& a, const mpq_class& b) {
        out.symbols.emplace_back(name, QuaternionSymbol{a, b});
        out.symbol_trivial.push_back(hilbert_symbol_global(a, b));
        return out.symbol_trivial.back();
    };
    switch (sc) {
        case CoveringScenario::Deg3Quadratic: {
            bool c = add("inflation of c+- : (h,3)", h, 3);
            add("cyclic-quartic embedding class: (h,-1)", h, -1);
            out.sign_class.trivial = c;
            out.covering_exists = true; // both parities are covered
            break;
        }
        case CoveringScenario::Deg2Quadratic: {
            bool c = add("inflation of c+- : (h,2)", h, 2);
            out.sign_class.trivial = c;
            out.covering_exists = c;
            break;
        }
        case CoveringScenario::Deg2CyclicQuartic: {
            if (!w) throw domain_error("the cyclic quartic scenario requires w");
            if (*w == 0) throw domain_error("w must be nonzero");
            bool c = add("inflation of c+- : (h,2)", h, 2);
            out.sign_class.trivial = c;
            // the obstruction to embedding K into a cyclic octic field is the
            // product class (h,2)(w,-1): trivial iff the two factors agree
            bool e2 = add("octic embedding factor (w,-1)", *w, -1);
            out.product_class_name = "octic embedding class: (h,2)(w,-1)";
            out.product_class_trivial = (c == e2);
            out.covering_exists = true;
            break;
        }
    }
    return out;
}

} // namespace gd2
