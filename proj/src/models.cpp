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

#include "gd2/models.hpp"

#include <algorithm>

#include "gd2/quadext.hpp"

namespace gd2 {

std::string twist_kind_name(TwistKind k) {
    switch (k) {
        case TwistKind::Identical: return "identical";
        case TwistKind::Hyperelliptic: return "hyperelliptic";
        case TwistKind::XiTwist: return "xi_twist";
        case TwistKind::XiAndHyperelliptic: return "xi_and_hyperelliptic";
        case TwistKind::Inequivalent: return "inequivalent";
    }
    return "?";
}

namespace {

bool same_square_class(const Fq& a, const Fq& b) { return (a * b).is_square(); }

GaloisData normalize_s(const GaloisData& in) {
    if (in.s.is_zero() || in.s.is_one()) return in;
    GaloisData out = in;
    out.v = in.s * in.s * in.v;
    out.s = Fq(in.field(), 1);
    return out;
}

Poly family_poly(const GaloisData& d, ModelSign sign) {
    const BaseField& F = d.field();
    const Fq &u = d.u, &v = d.v, &z = d.z, &s = d.s;
    std::vector<Fq> c(7, Fq(F, 0));
    if (d.c == Case::D8) {
        Fq pm(F, sign == ModelSign::Plus ? 1 : -1);
        Fq two_uz = Fq(F, 2) * u * z, ten_uz = Fq(F, 10) * u * z;
        c[6] = Fq(F, 1) + pm * two_uz;
        c[5] = -pm * Fq(F, 8) * s * u * v;
        c[4] = v * (Fq(F, 3) - pm * ten_uz);
        c[2] = v * v * (Fq(F, 3) - pm * ten_uz);
        c[1] = pm * Fq(F, 8) * s * u * v * v * v;
        c[0] = v * v * v * (Fq(F, 1) + pm * two_uz);
    } else {
        c[6] = Fq(F, 27) * (u + Fq(F, 2) * z);
        c[5] = Fq(F, -324) * s * v;
        c[4] = Fq(F, 27) * v * (u - Fq(F, 10) * z);
        c[3] = Fq(F, 360) * s * v * v;
        c[2] = Fq(F, 9) * v * v * (u + Fq(F, 10) * z);
        c[1] = Fq(F, -36) * s * v * v * v;
        c[0] = v * v * v * (u - Fq(F, 2) * z);
    }
    return Poly(F, std::move(c));
}

/// Radicand of the model field K = k(sqrt v, sqrt m) over k(sqrt u):
/// m = (1 - z sqrt u)/2 as a QuadExt, for the u-nonsquare route.
QuadExt model_radicand(const GaloisData& d) {
    const BaseField& F = d.field();
    return QuadExt(Fq(F, 1, 2), -d.z * Fq(F, 1, 2), d.u);
}

/// m in k for square u, chosen by the root with 1 - z r != 0.
Fq model_radicand_rational(const GaloisData& d) {
    const BaseField& F = d.field();
    Fq r = *d.u.sqrt();
    if ((Fq(F, 1) - d.z * r).is_zero()) r = -r;
    return (Fq(F, 1) - d.z * r) / Fq(F, 2);
}

/// Reduce a square class modulo the subgroup generated by `gens`; returns the
/// representative of smallest absolute value (positive on ties).
mpz_class reduce_mod_group(const BaseField& F, SquareClass cls, const std::vector<SquareClass>& gens) {
    std::vector<SquareClass> reps = {cls};
    for (const auto& g : gens) {
        size_t n = reps.size();
        for (size_t i = 0; i < n; ++i) reps.push_back(reps[i] * g);
    }
    mpz_class best = reps[0].rep();
    for (const auto& r : reps) {
        mpz_class v = r.rep();
        if (abs(v) < abs(best) || (abs(v) == abs(best) && v > best)) best = v;
    }
    return best;
}

} // namespace

CurveModel build_model(const GaloisData& data_in, ModelSign sign, const std::optional<Fq>& d_in) {
    const BaseField& F = data_in.field();
    if (!data_in.identity_holds()) throw domain_error("inconsistent Galois data");
    if (data_in.u.is_zero() || data_in.u == Fq(F, 1, 4))
        throw domain_error("excluded absolute invariant u in {0, 1/4}");
    Fq d = d_in.value_or(Fq(F, 1));
    if (d.is_zero()) throw domain_error("twist factor d must be nonzero");

    GaloisData data = normalize_s(data_in);
    Poly F0 = family_poly(data, sign);
    Poly Fd = F0 * d;
    if (Fd.degree() < 5) throw domain_error("internal: model polynomial degenerated below degree 5");
    if (poly_discriminant(Fd).is_zero())
        throw domain_error("internal: model polynomial has a repeated root");
    Fq t = absolute_invariant(Sextic(Fd), data.c);
    if (t != data.u) throw domain_error("internal: absolute invariant of model differs from u");
    return CurveModel{data.c, data, sign, d, Fd};
}

std::vector<SquareClass> hyperelliptic_twist_group(const GaloisData& data_in) {
    if (!data_in.identity_holds()) throw domain_error("inconsistent Galois data");
    GaloisData data = normalize_s(data_in);
    const BaseField& F = data.field();
    std::vector<SquareClass> out;
    auto push = [&](const Fq& x) {
        if (x.is_zero()) return;
        SquareClass cls = SquareClass::of(x);
        if (cls.is_trivial()) return;
        if (std::none_of(out.begin(), out.end(), [&](const SquareClass& c) { return c == cls; }))
            out.push_back(cls);
    };
    if (data.c == Case::D8) {
        if (data.u.is_square()) {
            push(data.v);
            push(data.w * model_radicand_rational(data));
        } else {
            push(data.v);
        }
    } else {
        Poly cubic(F, {-data.z * Fq(F, 1, 4), Fq(F, -3, 4) * data.u, Fq(F, 0), Fq(F, 1)});
        bool three_divides = cubic.roots_in_field().empty();
        if (!three_divides) push(data.u);
    }
    return out;
}

bool d12_same_cubic_field(const Fq& u, const Fq& z1, const Fq& z2) {
    const BaseField& F = u.field();
    if (z2 == z1 || z2 == -z1) return true;
    Poly c1(F, {-z1 * Fq(F, 1, 4), Fq(F, -3, 4) * u, Fq(F, 0), Fq(F, 1)});
    Poly c2(F, {-z2 * Fq(F, 1, 4), Fq(F, -3, 4) * u, Fq(F, 0), Fq(F, 1)});
    size_t n1 = c1.roots_in_field().size(), n2 = c2.roots_in_field().size();
    if ((n1 == 0) != (n2 == 0)) return false;
    if (n1 > 0) {
        // reducible cubics: splitting field is k when all roots are rational
        // (n >= 2 covers the repeated-root case), else k(sqrt disc)
        bool split1 = n1 >= 2, split2 = n2 >= 2;
        if (split1 != split2) return false;
        if (split1) return true;
        return same_square_class(poly_discriminant(c1), poly_discriminant(c2));
    }
    // both irreducible: a root of c2 lies in k(alpha_1) iff the zero-trace
    // element x alpha + y (alpha^2 - 2a/3) has minimal polynomial c2 for some
    // rational (x, y); its coefficients are
    //   a1(x,y) = a x^2 + 3b xy + (a^2/3) y^2          (must equal a)
    //   b1(x,y) = b x^3 + (2/3)a^2 x^2 y + ab xy^2 + (b^2 - (2/27)a^3) y^3
    // with a = 3u/4, b = z1/4; parametrize the conic a1 = a through (1,0).
    Fq a = Fq(F, 3, 4) * u, b = z1 * Fq(F, 1, 4);
    Fq target = z2 * Fq(F, 1, 4);
    Fq a2 = a * a;
    auto b1 = [&](const Fq& x, const Fq& y) {
        return b * x.pow(3) + Fq(F, 2, 3) * a2 * x * x * y + a * b * x * y * y +
               (b * b - Fq(F, 2, 27) * a * a2) * y.pow(3);
    };
    auto a1 = [&](const Fq& x, const Fq& y) {
        return a * x * x + Fq(F, 3) * b * x * y + a2 * Fq(F, 1, 3) * y * y;
    };
    // point at lambda = infinity: (1, -9b/a^2)
    {
        Fq y = Fq(F, -9) * b / a2;
        if (a1(Fq(F, 1), y) == a && b1(Fq(F, 1), y) == target) return true;
    }
    // chord (x, y) = (1 + lambda*t, t), t = -(2a lambda + 3b) / (a lambda^2 + 3b lambda + a^2/3);
    // using homogeneity of b1: b1(D + lambda*T, T) = target * D^3 with
    // T(lambda) = -(2a lambda + 3b), D(lambda) = a lambda^2 + 3b lambda + a^2/3.
    Poly L = Poly::monomial(Fq(F, 1), 1);
    Poly T = Poly::constant(Fq(F, -3) * b) - L * (Fq(F, 2) * a);
    Poly D = L * L * a + L * (Fq(F, 3) * b) + Poly::constant(a2 * Fq(F, 1, 3));
    Poly X = D + L * T;
    Poly eq = X * X * X * b + X * X * T * (Fq(F, 2, 3) * a2) + X * T * T * (a * b) +
              T * T * T * (b * b - Fq(F, 2, 27) * a * a2) - D * D * D * target;
    if (eq.is_zero()) return true;
    for (const Fq& lam : eq.roots_in_field()) {
        Fq Dv = D.eval(lam);
        if (Dv.is_zero()) continue;
        Fq t = T.eval(lam) / Dv;
        Fq x = Fq(F, 1) + lam * t, y = t;
        if (a1(x, y) == a && b1(x, y) == target) return true;
    }
    return false;
}

namespace {

/// K-field equality for two D8 models with equal u and equal v-class:
/// k(sqrt v, sqrt m1) = k(sqrt v, sqrt m2) iff m1 m2 is a square or v times a
/// square in k(sqrt u).
bool d8_same_k_field(const GaloisData& a, const GaloisData& b) {
    const BaseField& F = a.field();
    if (a.u.is_square()) {
        Fq m1 = model_radicand_rational(a), m2 = model_radicand_rational(b);
        Fq prod = m1 * m2;
        return prod.is_square() || (prod * a.v).is_square();
    }
    QuadExt prod = model_radicand(a) * model_radicand(b);
    if (is_square_in_quadratic_field(prod)) return true;
    QuadExt vprod = QuadExt::from_base(a.v, a.u) * prod;
    return is_square_in_quadratic_field(vprod).has_value();
}

} // namespace

TwistRelation twist_relation(const CurveModel& a, const CurveModel& b) {
    if (a.c != b.c) throw domain_error("twist_relation requires models of the same case");
    const BaseField& F = a.data.field();
    if (F != b.data.field()) throw domain_error("mixed base fields");

    if (a.F == b.F) return {TwistKind::Identical, std::nullopt};
    if (a.data.u != b.data.u) return {TwistKind::Inequivalent, std::nullopt};
    if (!same_square_class(a.data.v, b.data.v)) return {TwistKind::Inequivalent, std::nullopt};

    bool same_k;
    if (a.c == Case::D8) same_k = d8_same_k_field(a.data, b.data);
    else same_k = d12_same_cubic_field(a.data.u, a.data.z, b.data.z);
    if (!same_k) return {TwistKind::Inequivalent, std::nullopt};

    auto gens = hyperelliptic_twist_group(a.data);
    // negating z swaps the two members of a D8 pair (the substitution
    // X -> -X), so compare signs relative to a canonical sign of z
    auto canon = [&](const CurveModel& m) -> std::pair<Fq, ModelSign> {
        if (m.c != Case::D8) return {m.data.z, m.sign};
        bool neg = F.is_rationals() ? m.data.z.rat() < 0
                                    : m.data.z.residue() > (F.p() - 1) / 2;
        if (neg)
            return {-m.data.z, m.sign == ModelSign::Plus ? ModelSign::Minus : ModelSign::Plus};
        return {m.data.z, m.sign};
    };
    auto [za, sign_a] = canon(a);
    auto [zb, sign_b] = canon(b);
    bool same_witnesses = za == zb && a.data.s == b.data.s && a.data.v == b.data.v;
    bool sign_flip = (a.c == Case::D8) && (sign_a != sign_b);

    if (!sign_flip) {
        std::optional<mpz_class> dd;
        if (same_witnesses && F.is_rationals())
            dd = reduce_mod_group(F, SquareClass::of(a.d * b.d), gens);
        return {TwistKind::Hyperelliptic, dd};
    }
    // D8 sign flip: the models differ by the Xi cocycle (up to hyperelliptic
    // twist); Xi itself is hyperelliptic iff K2 = k or K2 = K1
    bool xi_hyperelliptic = a.data.v.is_square() || same_square_class(a.data.u, a.data.v);
    if (xi_hyperelliptic) return {TwistKind::Hyperelliptic, std::nullopt};
    if (same_witnesses && F.is_rationals()) {
        // the explicit change-of-sign matrix contributes the k(sqrt 2) cocycle
        mpz_class dd = reduce_mod_group(F, SquareClass::of(Fq(F, 2) * a.d * b.d), gens);
        if (dd == 1) return {TwistKind::XiTwist, dd};
        return {TwistKind::XiAndHyperelliptic, dd};
    }
    return {TwistKind::XiTwist, std::nullopt};
}

} // namespace gd2
