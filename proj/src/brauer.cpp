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

#include "gd2/brauer.hpp"

#include <algorithm>

#include "gd2/errors.hpp"
#include "gd2/factor.hpp"

namespace gd2 {

std::string QuaternionSymbol::to_string() const {
    auto r = [](const mpq_class& q) {
        return q.get_den() == 1 ? q.get_num().get_str()
                                : q.get_num().get_str() + "/" + q.get_den().get_str();
    };
    return "(" + r(a) + "," + r(b) + ")";
}

namespace {

/// v_p(q) and the unit part of q at p.
std::pair<long, mpq_class> padic_split(const mpq_class& q, const mpz_class& p) {
    long v = 0;
    mpz_class num = q.get_num(), den = q.get_den();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return {v, mpq_class(num) / mpq_class(den)};
}

/// Legendre symbol of a p-adic unit (given as a rational) mod odd prime p.
int legendre_unit(const mpq_class& u, const mpz_class& p) {
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), u.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
        throw domain_error("internal: non-unit denominator in legendre_unit");
    mpz_class val = (u.get_num() * den_inv) % p;
    return mpz_legendre(val.get_mpz_t(), p.get_mpz_t());
}

/// (x-1)/2 mod 2 for an odd rational unit (numerator*denominator mod 4).
int eps2(const mpq_class& u) {
    mpz_class nd = u.get_num() * u.get_den();
    long r = mpz_class(nd % 4).get_si();
    if (r < 0) r += 4;
    return r == 3 ? 1 : 0;
}

/// (x^2-1)/8 mod 2 for an odd rational unit.
int omega2(const mpq_class& u) {
    mpz_class nd = u.get_num() * u.get_den();
    long r = mpz_class(nd % 8).get_si();
    if (r < 0) r += 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace

int hilbert_symbol_local(const mpq_class& a, const mpq_class& b, const Place& v) {
    if (a == 0 || b == 0) throw domain_error("Hilbert symbol requires nonzero arguments");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const mpz_class& p = v.p;
    auto [alpha, au] = padic_split(a, p);
    auto [beta, bu] = padic_split(b, p);
    if (p == 2) {
        int e = eps2(au) * eps2(bu) + alpha * omega2(bu) + beta * omega2(au);
        return (e % 2) ? -1 : 1;
    }
    int epsp = mpz_class(p % 4) == 3 ? 1 : 0;
    int sign = (alpha * beta * epsp) % 2 ? -1 : 1;
    if (beta % 2) sign *= legendre_unit(au, p);
    if (alpha % 2) sign *= legendre_unit(bu, p);
    return sign;
}

std::vector<Place> relevant_places(const mpq_class& a, const mpq_class& b) {
    std::vector<Place> out = {Place::infinity(), Place::prime(2)};
    auto add_primes = [&](const mpq_class& q) {
        mpz_class nd = q.get_num() * q.get_den();
        for (auto& [p, e] : factor_integer(nd)) {
            if (p == 2) continue;
            Place pl = Place::prime(p);
            if (std::find(out.begin(), out.end(), pl) == out.end()) out.push_back(pl);
        }
    };
    add_primes(a);
    add_primes(b);
    return out;
}

std::optional<Place> hilbert_obstruction_place(const mpq_class& a, const mpq_class& b) {
    for (const Place& v : relevant_places(a, b))
        if (hilbert_symbol_local(a, b, v) == -1) return v;
    return std::nullopt;
}

bool hilbert_symbol_global(const mpq_class& a, const mpq_class& b) {
    return !hilbert_obstruction_place(a, b).has_value();
}

bool hilbert_symbol_global(const BaseField& k, const Fq& a, const Fq& b) {
    if (a.is_zero() || b.is_zero()) throw domain_error("Hilbert symbol requires nonzero arguments");
    if (!k.is_rationals()) return true; // Br_2 of a finite field is trivial
    return hilbert_symbol_global(a.rat(), b.rat());
}

// ---------------------------------------------------------------------------
// conic solving
// ---------------------------------------------------------------------------

namespace {

/// q = s * f^2 with s squarefree; returns (s, f).
std::pair<mpz_class, mpq_class> squarefree_split(const mpq_class& q) {
    mpz_class s = squarefree_part(q);
    mpq_class f2 = q / mpq_class(s);
    mpz_class fn, fd;
    mpz_sqrt(fn.get_mpz_t(), f2.get_num().get_mpz_t());
    mpz_sqrt(fd.get_mpz_t(), f2.get_den().get_mpz_t());
    return {s, mpq_class(fn) / mpq_class(fd)};
}

} // namespace

ConicResult solve_conic(const mpq_class& a, const mpq_class& b, const mpq_class& target,
                        std::int64_t height_bound) {
    if (a == 0 || b == 0 || target == 0) throw domain_error("solve_conic requires nonzero inputs");
    // solvability: a x^2 + b z^2 = t  <=>  (a/t) x^2 + (b/t) z^2 represents 1
    // <=>  (a/t, b/t) trivial
    mpq_class at = a / target, bt = b / target;
    if (auto bad = hilbert_obstruction_place(at, bt))
        return ConicUnsolvable{QuaternionSymbol{at, bt}, *bad};

    // reduce to squarefree integer coefficients: a = s_a f_a^2 etc.
    auto [sa, fa] = squarefree_split(a);
    auto [sb, fb] = squarefree_split(b);
    auto [st, ft] = squarefree_split(target);
    // solve sa X^2 + sb Z^2 = st W^2 in integers, then
    // x = (X/W) (ft/fa), z = (Z/W) (ft/fb). Enumerate by height max(xi, w);
    // signs are irrelevant since only squares enter.
    auto try_pair = [&](std::int64_t xi, std::int64_t w) -> std::optional<ConicSolution> {
        mpz_class rem = st * w * w - sa * xi * xi;
        if (rem % sb != 0) return std::nullopt;
        mpz_class z2 = rem / sb;
        if (z2 < 0 || !mpz_perfect_square_p(z2.get_mpz_t())) return std::nullopt;
        mpz_class zi;
        mpz_sqrt(zi.get_mpz_t(), z2.get_mpz_t());
        mpq_class X = mpq_class(xi) / mpq_class(w) * ft / fa;
        mpq_class Z = mpq_class(zi) / mpq_class(w) * ft / fb;
        return ConicSolution{X, Z};
    };
    for (std::int64_t m = 1; m <= height_bound; ++m) {
        for (std::int64_t xi = 0; xi <= m; ++xi)
            if (auto s = try_pair(xi, m)) return *s;
        for (std::int64_t w = 1; w < m; ++w)
            if (auto s = try_pair(m, w)) return *s;
    }
    return ConicBoundExceeded{};
}

ConicSolution solve_conic_mod_p(const Fq& a, const Fq& b, const Fq& target) {
    const BaseField& F = a.field();
    if (F.is_rationals()) throw domain_error("solve_conic_mod_p requires a prime field");
    if (a.is_zero() || b.is_zero() || target.is_zero())
        throw domain_error("solve_conic requires nonzero inputs");
    for (std::int64_t xi = 0; xi < F.p(); ++xi) {
        Fq x(F, mpq_class(xi));
        Fq rem = (target - a * x * x) / b;
        if (auto z = rem.sqrt())
            return ConicSolution{mpq_class(xi), mpq_class(z->residue())};
    }
    throw domain_error("internal: conic over F_p had no point");
}

} // namespace gd2
