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

#ifndef GD2_FACTOR_HPP
#define GD2_FACTOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "gd2/field.hpp"

namespace gd2 {

/// Prime factorization of |n| by trial division up to `bound`, then a
/// primality / perfect-power check on the cofactor. Throws search_bound_error
/// ("factorization too hard") when the cofactor cannot be resolved.
std::map<mpz_class, int> factor_integer(const mpz_class& n, std::int64_t bound = 1'000'000);

/// The unique squarefree integer s with q/s a rational square; sign preserved.
/// Pre: q != 0.
mpz_class squarefree_part(const mpq_class& q, std::int64_t bound = 1'000'000);

/// An element of k*/k*^2 in canonical form. Over Q the representative is a
/// squarefree integer; over F_p it is 1 or the least positive nonresidue.
class SquareClass {
public:
    SquareClass(const BaseField& f, const mpz_class& rep) : field_(f), rep_(rep) {}

    /// Canonicalize a nonzero field element.
    static SquareClass of(const Fq& x, std::int64_t factor_bound = 1'000'000);

    const BaseField& field() const { return field_; }
    const mpz_class& rep() const { return rep_; }
    bool is_trivial() const { return rep_ == 1; }

    bool operator==(const SquareClass& o) const { return field_ == o.field_ && rep_ == o.rep_; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }

    SquareClass operator*(const SquareClass& o) const;

    std::string to_string() const { return rep_.get_str(); }

private:
    BaseField field_;
    mpz_class rep_;
};

/// Least positive quadratic nonresidue mod p.
std::int64_t least_nonresidue(std::int64_t p);

} // namespace gd2

#endif
