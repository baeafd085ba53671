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

#ifndef GD2_QUOTIENTS_HPP
#define GD2_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "gd2/brauer.hpp"
#include "gd2/galois.hpp"
#include "gd2/quadext.hpp"

namespace gd2 {

/// j-invariants of the two elliptic quotients of a curve with absolute
/// invariant t, as elements of Q(sqrt t):
///   D8:  j_{1,2} = 2^6 (3 -+ 10 sqrt t)^3 / ((1 -+ 2 sqrt t)(1 +- 2 sqrt t)^2)
///   D12: j_{1,2} = 2^8 3^3 (2 -+ 5 sqrt t)^3 (+-sqrt t) / ((1 -+ 2 sqrt t)(1 +- 2 sqrt t)^3)
/// (upper signs give j1).
struct QuotientPair {
    QuadExt j1, j2;
    bool galois_conjugate; // t nonsquare and j2 = conj(j1)
    bool rational_pair;    // both j-values lie in Q
};

/// Evaluate the quotient j-invariants. Base field Q; t not in {0, 1/4}.
QuotientPair quotient_j_invariants(const mpq_class& t, Case c);

/// Membership in the complex-multiplication parameter lists (14 values for
/// D8, 12 for D12).
bool is_cm_parameter(const mpq_class& t, Case c);
const std::vector<mpq_class>& cm_parameters(Case c);

/// End_Q(J_C) for a non-CM curve, by the type of the Galois structure.
struct EndoAlgebra {
    enum class Desc { M2Q, QxQ, QOnly, QuadField } desc;
    int quad_d = 0;                   // -1, 2 (D8); -3, 3 (D12)
    std::string qbasis;               // generating endomorphisms, e.g. "1,V"
    std::string qj;                   // field of moduli of the quotients: "Q" or "Q(sqrt t)"
    std::optional<QuaternionSymbol> condition;
    std::optional<bool> condition_holds;
    std::string to_string() const;
};

/// Table lookup; evaluates the listed existence condition via the global
/// Hilbert symbol when t (and w for the D8 C4 row) are supplied.
EndoAlgebra endomorphism_algebra(const GaloisType& type, const std::optional<mpq_class>& t,
                                 const std::optional<mpq_class>& w);

/// Sign component of the isogeny 2-cocycle of a quadratic or cyclic-quartic
/// Q-curve situation, encoded by triviality.
struct CocycleSignClass {
    bool trivial;
};

enum class CoveringScenario { Deg3Quadratic, Deg2Quadratic, Deg2CyclicQuartic };

struct CoveringReport {
    CocycleSignClass sign_class;
    /// Named inflation/obstruction classes with their verdicts.
    std::vector<std::pair<std::string, QuaternionSymbol>> symbols;
    std::vector<bool> symbol_trivial;
    /// Product class (h,2)(w,-1) of the cyclic-quartic scenario, which is not
    /// a single symbol; reported by triviality.
    std::optional<std::string> product_class_name;
    std::optional<bool> product_class_trivial;
    /// Whether a genus-2 covering over K exists (always true for the degree-3
    /// and cyclic-quartic scenarios; equivalent to sign-class triviality for
    /// Deg2Quadratic).
    bool covering_exists;
};

/// Obstruction classes for covering a quadratic (or cyclic quartic) Q-curve
/// of degree 2 or 3 by a genus-2 curve:
///   Deg3Quadratic:     inflation of c+- is (h,3); the quartic-embedding class
///                      is (h,-1)
///   Deg2Quadratic:     inflation of c+- is (h,2); covering exists iff trivial
///   Deg2CyclicQuartic: inflation of c+- is (h,2); the octic-embedding class
///                      is (h,2)(w,-1)
/// Pre: h nonzero and not a square (K must be a quadratic field).
CoveringReport covering_obstruction(const mpq_class& h, CoveringScenario sc,
                                    const std::optional<mpq_class>& w = std::nullopt);

} // namespace gd2

#endif
