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

#include "gd2/invariants.hpp"

#include <vector>

namespace gd2 {

namespace {

struct IgusaTerm {
    int e[7];
    long c;
};

#include "igusa_tables.inc"

/// Homogeneous binary form of order n in (X, Z): coefficient of X^i Z^(n-i)
/// at index i.
struct Form {
    int order;
    std::vector<Fq> c;
};

Form dx(const BaseField& F, const Form& f) {
    Form out{f.order - 1, std::vector<Fq>(f.order, Fq(F, 0))};
    for (int i = 1; i <= f.order; ++i) out.c[i - 1] = f.c[i] * Fq(F, i);
    return out;
}

Form dz(const BaseField& F, const Form& f) {
    Form out{f.order - 1, std::vector<Fq>(f.order, Fq(F, 0))};
    for (int i = 0; i < f.order; ++i) out.c[i] = f.c[i] * Fq(F, f.order - i);
    return out;
}

Form mul(const BaseField& F, const Form& a, const Form& b) {
    Form out{a.order + b.order, std::vector<Fq>(a.order + b.order + 1, Fq(F, 0))};
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; j <= b.order; ++j) out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
    return out;
}

mpz_class factorial(int n) {
    mpz_class r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// r-th transvectant of binary forms f, g.
Form transvectant(const BaseField& F, const Form& f, const Form& g, int r) {
    int m = f.order, n = g.order;
    Form acc{m + n - 2 * r, std::vector<Fq>(m + n - 2 * r + 1, Fq(F, 0))};
    Fq sign(F, 1);
    for (int j = 0; j <= r; ++j) {
        // d^r f / dX^(r-j) dZ^j  and  d^r g / dX^j dZ^(r-j)
        Form df = f, dg = g;
        for (int t = 0; t < r - j; ++t) df = dx(F, df);
        for (int t = 0; t < j; ++t) df = dz(F, df);
        for (int t = 0; t < j; ++t) dg = dx(F, dg);
        for (int t = 0; t < r - j; ++t) dg = dz(F, dg);
        Fq binom(F, mpq_class(factorial(r) / (factorial(j) * factorial(r - j))));
        Form prod = mul(F, df, dg);
        Fq k = sign * binom;
        for (size_t i = 0; i < acc.c.size(); ++i) acc.c[i] = acc.c[i] + k * prod.c[i];
        sign = -sign;
    }
    Fq pref(F, mpq_class(factorial(m - r) * factorial(n - r)) / mpq_class(factorial(m) * factorial(n)));
    for (auto& x : acc.c) x = x * pref;
    return acc;
}

Fq eval_table(const BaseField& F, const IgusaTerm* terms, size_t n, const std::array<Fq, 7>& a) {
    Fq acc(F, 0);
    for (size_t t = 0; t < n; ++t) {
        Fq m(F, terms[t].c);
        for (int i = 0; i < 7; ++i)
            for (int e = 0; e < terms[t].e[i]; ++e) m = m * a[i];
        acc = acc + m;
    }
    return acc;
}

} // namespace

Sextic::Sextic(const Poly& f)
    : field_(f.field()), a_{Fq(f.field(), 0), Fq(f.field(), 0), Fq(f.field(), 0), Fq(f.field(), 0),
                            Fq(f.field(), 0), Fq(f.field(), 0), Fq(f.field(), 0)} {
    if (f.is_zero() || f.degree() > 6) throw domain_error("sextic requires a polynomial of degree <= 6");
    for (int i = 0; i <= f.degree(); ++i) a_[i] = f.coeff(i);
}

Poly Sextic::to_poly() const {
    return Poly(field_, std::vector<Fq>(a_.begin(), a_.end()));
}

InvariantSet compute_invariants(const Sextic& f) {
    const BaseField& F = f.field();
    if (F.characteristic() == 2) throw domain_error("invariants are not defined in characteristic 2");
    InvariantSet out{std::nullopt,
                     {Fq(F, 0), Fq(F, 0), Fq(F, 0), Fq(F, 0)}};

    std::array<Fq, 7> a{f[0], f[1], f[2], f[3], f[4], f[5], f[6]};
    out.igusa[0] = eval_table(F, kI2Terms, std::size(kI2Terms), a);
    out.igusa[1] = eval_table(F, kI4Terms, std::size(kI4Terms), a);
    out.igusa[2] = eval_table(F, kI6Terms, std::size(kI6Terms), a);

    // I10 = 2^-12 * disc(sextic form); with a6 = 0 the form discriminant is
    // a5^2 * disc of the quintic
    Poly poly = f.to_poly();
    Fq disc(F, 0);
    if (poly.degree() >= 1) {
        disc = poly_discriminant(poly);
        if (poly.degree() == 5) disc = disc * f[5] * f[5];
        else if (poly.degree() < 5) disc = Fq(F, 0);
    }
    out.igusa[3] = disc / Fq(F, 4096);

    long p = F.characteristic();
    if (p != 3 && p != 5) {
        Form fx{6, {a[0], a[1], a[2], a[3], a[4], a[5], a[6]}};
        Form i = transvectant(F, fx, fx, 4);
        Form A = transvectant(F, fx, fx, 6);
        Form B = transvectant(F, i, i, 4);
        Form Delta = transvectant(F, i, i, 2);
        Form C = transvectant(F, i, Delta, 4);
        Form y1 = transvectant(F, fx, i, 4);
        Form y2 = transvectant(F, i, y1, 2);
        Form y3 = transvectant(F, i, y2, 2);
        Form D = transvectant(F, y3, y1, 2);
        out.clebsch = {A.c[0], B.c[0], C.c[0], D.c[0]};
    }
    return out;
}

Fq absolute_invariant(const Sextic& f, Case c) {
    const BaseField& F = f.field();
    long p = F.characteristic();
    if (p == 2) throw domain_error("characteristic 2 is not supported");
    if (c == Case::D12 && p == 3)
        throw domain_error("the D12 absolute invariant is not defined in characteristic 3");

    InvariantSet inv = compute_invariants(f);
    if (inv.igusa[3].is_zero())
        throw domain_error("repeated root: the sextic is not the equation of a genus-2 curve");

    if (p == 5) {
        const Fq& I2 = inv.igusa[0];
        const Fq& I4 = inv.igusa[1];
        if (I2.is_zero()) throw domain_error("vanishing denominator I2^2 in characteristic 5");
        Fq t = I4 / (I2 * I2);
        return c == Case::D8 ? t : -t;
    }
    if (p == 3) {
        const Fq& I2 = inv.igusa[0];
        const Fq& I6 = inv.igusa[2];
        Fq den = I6 - I2.pow(3);
        if (den.is_zero()) throw domain_error("vanishing denominator I6 - I2^3 in characteristic 3");
        return Fq(F, 2) * I2.pow(3) / den;
    }
    const auto& cl = *inv.clebsch;
    const Fq &c2 = cl[0], &c4 = cl[1], &c6 = cl[2], &c10 = cl[3];
    if (c10.is_zero()) throw domain_error("vanishing denominator c10");
    if (c == Case::D8)
        return (Fq(F, 8) * c6 * (Fq(F, 6) * c4 - c2 * c2) + Fq(F, 9) * c10) / (Fq(F, 900) * c10);
    return (Fq(F, 3) * c4 * c6 - c10) / (Fq(F, 50) * c10);
}

} // namespace gd2
