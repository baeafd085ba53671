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

#ifndef GD2_POLY_HPP
#define GD2_POLY_HPP

#include <string>
#include <vector>

#include "gd2/field.hpp"

namespace gd2 {

/// Dense univariate polynomial over a base field, coefficients lowest-degree
/// first, normalized so the leading coefficient is nonzero (or empty = 0).
class Poly {
public:
    explicit Poly(const BaseField& f) : field_(f) {}
    Poly(const BaseField& f, std::vector<Fq> coeffs);

    static Poly zero(const BaseField& f) { return Poly(f); }
    static Poly constant(const Fq& c);
    /// c * X^k
    static Poly monomial(const Fq& c, int k);

    const BaseField& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Fq>& coeffs() const { return coeffs_; }
    Fq coeff(int k) const;
    Fq leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fq& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly derivative() const;
    Fq eval(const Fq& x) const;
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);
    /// this^e mod m.
    Poly pow_mod(const mpz_class& e, const Poly& m) const;

    /// Roots in the base field (exact; rational-root search over Q, gcd with
    /// X^p - X over F_p). Repeated roots reported once.
    std::vector<Fq> roots_in_field() const;

    std::string to_string(const std::string& var = "X") const;
    /// Parses expressions like "X^5+X^3+2*X", "X^6+X^3+5", "X^5+X^3+X/4",
    /// "3/2*X^2 - X + 1".
    static Poly parse(const BaseField& f, const std::string& text);

private:
    void trim();
    BaseField field_;
    std::vector<Fq> coeffs_;
};

/// Resultant of f and g via the Euclidean remainder sequence. Zero iff f and
/// g share a root in the algebraic closure.
Fq resultant(const Poly& f, const Poly& g);

/// Discriminant: (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
Fq poly_discriminant(const Poly& f);

} // namespace gd2

#endif
