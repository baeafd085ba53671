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

#ifndef GD2_INVARIANTS_HPP
#define GD2_INVARIANTS_HPP

#include <array>
#include <optional>

#include "gd2/poly.hpp"

namespace gd2 {

/// The two dihedral families handled by the library.
enum class Case { D8, D12 };

inline const char* case_name(Case c) { return c == Case::D8 ? "D8" : "D12"; }

/// Binary sextic a0 + a1 X + ... + a6 X^6 attached to a hyperelliptic
/// polynomial of degree 5 or 6 (degree 5 embeds with a6 = 0).
class Sextic {
public:
    explicit Sextic(const Poly& f);
    Sextic(const BaseField& f, std::array<Fq, 7> a) : field_(f), a_(std::move(a)) {}

    const BaseField& field() const { return field_; }
    const Fq& operator[](int i) const { return a_[i]; }
    Poly to_poly() const;

private:
    BaseField field_;
    std::array<Fq, 7> a_;
};

/// Clebsch invariants (degrees 2, 4, 6, 10) and Igusa invariants
/// (same degrees). Clebsch entries are absent in characteristics 3 and 5.
struct InvariantSet {
    std::optional<std::array<Fq, 4>> clebsch; // c2, c4, c6, c10
    std::array<Fq, 4> igusa;                  // I2, I4, I6, I10
};

/// Exact invariants of a sextic. Characteristic 2 is rejected. I10 is
/// 2^-12 times the discriminant of the sextic form and vanishes iff the
/// form has a repeated root.
InvariantSet compute_invariants(const Sextic& f);

/// The absolute invariant t classifying the D8 / D12 families:
///   D8:  (8 c6 (6 c4 - c2^2) + 9 c10) / (900 c10), with Igusa-invariant
///        branches I4/I2^2 in characteristic 5 and 2 I2^3/(I6 - I2^3) in
///        characteristic 3;
///   D12: (3 c4 c6 - c10) / (50 c10), with -I4/I2^2 in characteristic 5;
///        characteristic 3 is rejected.
/// Pre: f squarefree (I10 != 0).
Fq absolute_invariant(const Sextic& f, Case c);

} // namespace gd2

#endif
