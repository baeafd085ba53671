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

#include "gd2/poly.hpp"

#include <algorithm>
#include <cctype>

#include "gd2/factor.hpp"

namespace gd2 {

Poly::Poly(const BaseField& f, std::vector<Fq> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Fq& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(const Fq& c, int k) {
    Poly p(c.field());
    if (!c.is_zero()) {
        p.coeffs_.assign(k + 1, Fq(c.field(), 0));
        p.coeffs_[k] = c;
    }
    return p;
}

Fq Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Fq(field_, 0);
    return coeffs_[k];
}

Fq Poly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Fq> c(std::max(coeffs_.size(), o.coeffs_.size()), Fq(field_, 0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Fq> c(coeffs_);
    for (auto& x : c) x = -x;
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Fq> c(coeffs_.size() + o.coeffs_.size() - 1, Fq(field_, 0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Fq& k) const {
    std::vector<Fq> c(coeffs_);
    for (auto& x : c) x = x * k;
    return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw domain_error("polynomial division by zero");
    Poly q(field_), r(*this);
    Fq lead_inv = divisor.leading().inv();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        int k = r.degree() - divisor.degree();
        Fq c = r.leading() * lead_inv;
        Poly term = monomial(c, k);
        q = q + term;
        r = r - term * divisor;
    }
    return {q, r};
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<Fq> c(coeffs_.size() - 1, Fq(field_, 0));
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Fq(field_, static_cast<long>(i));
    return Poly(field_, std::move(c));
}

Fq Poly::eval(const Fq& x) const {
    Fq acc(field_, 0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading().inv();
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& m) const {
    Poly base = divmod(m).second;
    Poly acc = constant(Fq(field_, 1));
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base).divmod(m).second;
        base = (base * base).divmod(m).second;
        k >>= 1;
    }
    return acc;
}

std::vector<Fq> Poly::roots_in_field() const {
    std::vector<Fq> out;
    if (is_zero() || degree() < 1) return out;
    if (field_.is_rationals()) {
        // clear denominators, rational root theorem on primitive integer form
        mpz_class den(1);
        for (const auto& c : coeffs_) den = lcm(den, c.rat().get_den());
        std::vector<mpz_class> ic;
        for (const auto& c : coeffs_) ic.push_back(mpq_class(c.rat() * den).get_num());
        int lo = 0;
        while (ic[lo] == 0) ++lo;
        if (lo > 0) out.push_back(Fq(field_, 0));
        mpz_class a0 = abs(ic[lo]), an = abs(ic.back());
        auto div_a0 = factor_integer(a0);
        auto div_an = factor_integer(an);
        std::vector<mpz_class> ps = {1}, qs = {1};
        auto expand = [](std::vector<mpz_class>& v, const std::map<mpz_class, int>& f) {
            for (auto& [p, e] : f) {
                size_t n = v.size();
                mpz_class pe(1);
                for (int i = 1; i <= e; ++i) {
                    pe *= p;
                    for (size_t j = 0; j < n; ++j) v.push_back(v[j] * pe);
                }
            }
        };
        expand(ps, div_a0);
        expand(qs, div_an);
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int sg : {1, -1}) {
                    Fq cand(field_, mpq_class(sg * p) / mpq_class(q));
                    if (eval(cand).is_zero() &&
                        std::find(out.begin(), out.end(), cand) == out.end())
                        out.push_back(cand);
                }
    } else {
        // gcd(f, X^p - X) splits off the roots in F_p
        Poly xp = monomial(Fq(field_, 1), 1).pow_mod(mpz_class(field_.p()), *this);
        Poly lin = xp - monomial(Fq(field_, 1), 1);
        Poly g = gcd(*this, lin);
        if (g.is_zero()) g = *this; // f divides X^p - X
        // g has distinct roots, all in F_p; find them by splitting (degree <= 6: scan
        // is fine for small p, otherwise use (X+a)^((p-1)/2) splitting)
        if (field_.p() <= 4096) {
            for (std::int64_t x = 0; x < field_.p(); ++x) {
                Fq c(field_, mpq_class(x));
                if (g.eval(c).is_zero()) out.push_back(c);
            }
        } else {
            std::vector<Poly> stack = {g};
            while (!stack.empty()) {
                Poly h = stack.back();
                stack.pop_back();
                if (h.degree() <= 0) continue;
                if (h.degree() == 1) {
                    out.push_back(-h.coeff(0) / h.coeff(1));
                    continue;
                }
                for (std::int64_t shift = 0;; ++shift) {
                    Poly xa = Poly(field_, {Fq(field_, mpq_class(shift)), Fq(field_, 1)});
                    Poly powp = xa.pow_mod(mpz_class((field_.p() - 1) / 2), h);
                    Poly split = gcd(powp - constant(Fq(field_, 1)), h);
                    if (split.degree() > 0 && split.degree() < h.degree()) {
                        stack.push_back(split);
                        stack.push_back(h.divmod(split).first);
                        break;
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Fq& a, const Fq& b) {
        if (a.field().is_rationals()) return a.rat() < b.rat();
        return a.residue() < b.residue();
    });
    return out;
}

Fq resultant(const Poly& f, const Poly& g) {
    const BaseField& F = f.field();
    if (f.is_zero() || g.is_zero()) return Fq(F, 0);
    Poly a = f, b = g;
    Fq acc(F, 1);
    bool swapped = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        swapped = ((f.degree() * g.degree()) % 2) != 0;
    }
    Fq sign(F, swapped ? -1 : 1);
    while (true) {
        if (b.degree() == 0) {
            acc = acc * b.coeff(0).pow(a.degree());
            break;
        }
        Poly r = a.divmod(b).second;
        if (r.is_zero()) return Fq(F, 0);
        // Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        acc = acc * b.leading().pow(a.degree() - r.degree());
        if ((a.degree() % 2) && (b.degree() % 2)) acc = -acc;
        a = std::move(b);
        b = std::move(r);
    }
    return acc * sign;
}

Fq poly_discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 1) throw domain_error("discriminant requires degree >= 1");
    Fq res = resultant(f, f.derivative());
    Fq d = res / f.leading();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

// ---------------------------------------------------------------------------
// polynomial expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const BaseField& F;
    const std::string& s;
    size_t i = 0;

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }

    // factor := integer | X ['^' int] | '(' expr ')'
    Poly factor() {
        skip();
        if (i >= s.size()) throw parse_error("unexpected end of polynomial");
        char c = s[i];
        if (c == '(') {
            ++i;
            Poly e = expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return e;
        }
        if (c == 'X' || c == 'x') {
            ++i;
            long k = 1;
            if (eat('^')) k = integer();
            return Poly::monomial(Fq(F, 1), static_cast<int>(k));
        }
        if (std::isdigit((unsigned char)c)) {
            long n = integer();
            return Poly::constant(Fq(F, n));
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }

    long integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) throw parse_error("expected integer");
        return std::stol(s.substr(start, i - start));
    }

    // term := factor (('*' | '/') factor)*
    Poly term() {
        Poly acc = factor();
        while (true) {
            skip();
            if (i < s.size() && (s[i] == '*' || s[i] == '/')) {
                char op = s[i++];
                Poly rhs = factor();
                if (op == '*') {
                    acc = acc * rhs;
                } else {
                    if (rhs.degree() != 0) throw parse_error("division by non-constant");
                    acc = acc * rhs.coeff(0).inv();
                }
            } else if (i < s.size() && (s[i] == 'X' || s[i] == 'x' || s[i] == '(')) {
                acc = acc * factor(); // implicit product: "3X^2"
            } else {
                break;
            }
        }
        return acc;
    }

    Poly expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }
};

} // namespace

Poly Poly::parse(const BaseField& f, const std::string& text) {
    Parser p{f, text};
    Poly out = p.expr();
    p.skip();
    if (p.i != text.size()) throw parse_error("trailing input in polynomial '" + text + "'");
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Fq c = coeff(k);
        if (c.is_zero()) continue;
        bool negative = false;
        std::string cs = c.to_string();
        if (!cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        bool unit = (cs == "1");
        if (k == 0) {
            out += cs;
        } else {
            if (!unit) out += cs;
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace gd2
