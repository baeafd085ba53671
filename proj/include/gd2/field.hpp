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

#ifndef GD2_FIELD_HPP
#define GD2_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "gd2/errors.hpp"

namespace gd2 {

/// The base field k: either Q or a prime field F_p with p an odd prime.
class BaseField {
public:
    enum class Kind { Rationals, PrimeField };

    static BaseField rationals() { return BaseField(Kind::Rationals, 0); }
    static BaseField prime_field(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    std::int64_t p() const { return p_; }

    /// 0 for Q, p for F_p.
    std::int64_t characteristic() const { return is_rationals() ? 0 : p_; }

    bool operator==(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    BaseField(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

/// An exact element of a BaseField: reduced fraction over Q, canonical
/// residue in [0, p) over F_p. Immutable value semantics.
class Fq {
public:
    Fq() : field_(BaseField::rationals()), q_(0), r_(0) {}
    Fq(const BaseField& f, const mpq_class& value);
    Fq(const BaseField& f, long num, long den = 1);

    static Fq from_int(const BaseField& f, long n) { return Fq(f, n, 1); }

    const BaseField& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// The rational value; only valid over Q.
    const mpq_class& rat() const;
    /// The canonical residue; only valid over F_p.
    std::int64_t residue() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inv() const;
    Fq pow(long e) const;

    /// True iff the element is a square in the base field.
    bool is_square() const;
    /// A square root when one exists (over Q: exact; over F_p: Tonelli-Shanks).
    std::optional<Fq> sqrt() const;

    /// Serialized as "p/q" (or "n" when the denominator is 1); residue over F_p.
    std::string to_string() const;
    static Fq parse(const BaseField& f, const std::string& text);

private:
    void check_same(const Fq& o) const;
    BaseField field_;
    mpq_class q_;        // value over Q
    std::int64_t r_;     // value over F_p
};

/// Modular helpers shared by F_p arithmetic and the Brauer module.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t n);
/// Legendre symbol (a|p) in {-1,0,1} for odd prime p.
int legendre_symbol(std::int64_t a, std::int64_t p);
/// Square root mod an odd prime, when (a|p) != -1.
std::optional<std::int64_t> sqrt_mod_p(std::int64_t a, std::int64_t p);

} // namespace gd2

#endif
