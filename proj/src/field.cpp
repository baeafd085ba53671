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

#include "gd2/field.hpp"

#include <cstdlib>

#include "gd2/config.hpp"

namespace gd2 {

Config Config::from_env() {
    Config c;
    if (const char* s = std::getenv("GD2_FACTOR_BOUND")) c.factor_bound = std::atoll(s);
    if (const char* s = std::getenv("GD2_SEARCH_BOUND")) c.conic_height = std::atoll(s);
    if (const char* s = std::getenv("GD2_QSERIES_N")) c.qseries_terms = std::atoi(s);
    return c;
}

BaseField BaseField::prime_field(std::int64_t p) {
    if (p < 3 || !is_prime(p))
        throw domain_error("prime field requires an odd prime, got " + std::to_string(p));
    return BaseField(Kind::PrimeField, p);
}

std::string BaseField::to_string() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

namespace {

std::int64_t reduce_mod(const mpz_class& n, std::int64_t p) {
    mpz_class r = n % p;
    if (r < 0) r += p;
    return r.get_si();
}

} // namespace

Fq::Fq(const BaseField& f, const mpq_class& value) : field_(f), q_(0), r_(0) {
    if (f.is_rationals()) {
        q_ = value;
        q_.canonicalize();
    } else {
        mpq_class v = value;
        v.canonicalize();
        std::int64_t den = reduce_mod(v.get_den(), f.p());
        if (den == 0) throw domain_error("denominator divisible by p in F_" + std::to_string(f.p()));
        r_ = reduce_mod(v.get_num() * mod_inv(den, f.p()), f.p());
    }
}

Fq::Fq(const BaseField& f, long num, long den) : Fq(f, mpq_class(num, den)) {}

bool Fq::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
bool Fq::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

const mpq_class& Fq::rat() const {
    if (!field_.is_rationals()) throw domain_error("rat() on a prime-field element");
    return q_;
}

std::int64_t Fq::residue() const {
    if (field_.is_rationals()) throw domain_error("residue() on a rational element");
    return r_;
}

void Fq::check_same(const Fq& o) const {
    if (field_ != o.field_) throw domain_error("mixed base fields in arithmetic");
}

Fq Fq::operator+(const Fq& o) const {
    check_same(o);
    Fq out(*this);
    if (field_.is_rationals()) out.q_ = q_ + o.q_;
    else out.r_ = (r_ + o.r_) % field_.p();
    return out;
}

Fq Fq::operator-(const Fq& o) const {
    check_same(o);
    Fq out(*this);
    if (field_.is_rationals()) out.q_ = q_ - o.q_;
    else out.r_ = ((r_ - o.r_) % field_.p() + field_.p()) % field_.p();
    return out;
}

Fq Fq::operator*(const Fq& o) const {
    check_same(o);
    Fq out(*this);
    if (field_.is_rationals()) out.q_ = q_ * o.q_;
    else out.r_ = static_cast<std::int64_t>((__int128)r_ * o.r_ % field_.p());
    return out;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::operator-() const {
    Fq out(*this);
    if (field_.is_rationals()) out.q_ = -q_;
    else out.r_ = r_ == 0 ? 0 : field_.p() - r_;
    return out;
}

bool Fq::operator==(const Fq& o) const {
    return field_ == o.field_ && (field_.is_rationals() ? q_ == o.q_ : r_ == o.r_);
}

Fq Fq::inv() const {
    if (is_zero()) throw domain_error("division by zero");
    Fq out(*this);
    if (field_.is_rationals()) out.q_ = 1 / q_;
    else out.r_ = mod_inv(r_, field_.p());
    return out;
}

Fq Fq::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Fq out(field_, 1), base(*this);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

bool Fq::is_square() const {
    if (is_zero()) return true;
    if (field_.is_rationals()) {
        if (q_ < 0) return false;
        return mpz_perfect_square_p(q_.get_num().get_mpz_t()) &&
               mpz_perfect_square_p(q_.get_den().get_mpz_t());
    }
    return legendre_symbol(r_, field_.p()) != -1;
}

std::optional<Fq> Fq::sqrt() const {
    if (is_zero()) return Fq(field_, 0);
    if (field_.is_rationals()) {
        if (!is_square()) return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q_.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q_.get_den().get_mpz_t());
        return Fq(field_, mpq_class(n) / mpq_class(d));
    }
    auto r = sqrt_mod_p(r_, field_.p());
    if (!r) return std::nullopt;
    return Fq(field_, mpq_class(*r));
}

std::string Fq::to_string() const {
    if (!field_.is_rationals()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Fq Fq::parse(const BaseField& f, const std::string& text) {
    if (text.empty()) throw parse_error("empty rational");
    std::string s = text;
    mpq_class v;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            v = mpq_class(mpz_class(s));
        } else {
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator in '" + text + "'");
            v = mpq_class(num) / mpq_class(den);
        }
    } catch (const std::invalid_argument&) {
        throw parse_error("cannot parse rational '" + text + "'");
    }
    return Fq(f, v);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    __int128 r = 1, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw domain_error("inverse of zero mod p");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    return t < 0 ? t + p : t;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = mod_pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<std::int64_t>((__int128)x * x % n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    std::int64_t r = mod_pow(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

std::optional<std::int64_t> sqrt_mod_p(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    if (legendre_symbol(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    std::int64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::int64_t z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    std::int64_t m = s, c = mod_pow(z, q, p), tt = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
    while (tt != 1) {
        std::int64_t t2 = tt;
        int i = 0;
        while (t2 != 1) { t2 = static_cast<std::int64_t>((__int128)t2 * t2 % p); ++i; }
        std::int64_t b = mod_pow(c, std::int64_t(1) << (m - i - 1), p);
        m = i;
        c = static_cast<std::int64_t>((__int128)b * b % p);
        tt = static_cast<std::int64_t>((__int128)tt * c % p);
        r = static_cast<std::int64_t>((__int128)r * b % p);
    }
    return r;
}

} // namespace gd2
