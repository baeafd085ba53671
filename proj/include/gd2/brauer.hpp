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

#ifndef GD2_BRAUER_HPP
#define GD2_BRAUER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gd2/field.hpp"

namespace gd2 {

/// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    mpz_class p = 0;

    static Place infinity() { return {true, 0}; }
    static Place prime(const mpz_class& q) { return {false, q}; }
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    std::string to_string() const { return infinite ? "oo" : p.get_str(); }
};

/// Class of the quaternion algebra (a, b): i^2 = a, j^2 = b, ji = -ij.
/// Only the square classes of a and b matter.
struct QuaternionSymbol {
    mpq_class a, b;
    std::string to_string() const;
};

/// Local Hilbert symbol (a,b)_v in {+1, -1}. Pre: a, b != 0.
int hilbert_symbol_local(const mpq_class& a, const mpq_class& b, const Place& v);

/// Global triviality over Q: +1 at every place. Over a prime field every
/// quaternion algebra splits, so the overload for a BaseField returns true.
bool hilbert_symbol_global(const mpq_class& a, const mpq_class& b);
bool hilbert_symbol_global(const BaseField& k, const Fq& a, const Fq& b);

/// The finite places that can ramify (2 and the primes of the squarefree
/// parts of a and b); used by the product-formula test as well.
std::vector<Place> relevant_places(const mpq_class& a, const mpq_class& b);

/// A witness place where the symbol is -1, if any.
std::optional<Place> hilbert_obstruction_place(const mpq_class& a, const mpq_class& b);

/// Outcome of solve_conic.
struct ConicSolution {
    mpq_class x, z; // a x^2 + b z^2 = target
};
struct ConicUnsolvable {
    QuaternionSymbol witness; // (a/t, b/t) with a -1 local symbol
    Place place;
};
struct ConicBoundExceeded {};
using ConicResult = std::variant<ConicSolution, ConicUnsolvable, ConicBoundExceeded>;

/// Decide a x^2 + b z^2 = target over Q exactly (Hilbert pre-check), then
/// search a solution by bounded enumeration of primitive integer triples of
/// height <= H on the square-free reduced equation.
ConicResult solve_conic(const mpq_class& a, const mpq_class& b, const mpq_class& target,
                        std::int64_t height_bound = 10'000);

/// F_p version: always solvable for nonzero a, b, target; found by scanning.
ConicSolution solve_conic_mod_p(const Fq& a, const Fq& b, const Fq& target);

} // namespace gd2

#endif
