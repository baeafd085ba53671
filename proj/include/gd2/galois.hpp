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

#ifndef GD2_GALOIS_HPP
#define GD2_GALOIS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gd2/brauer.hpp"
#include "gd2/config.hpp"
#include "gd2/factor.hpp"
#include "gd2/invariants.hpp"
#include "gd2/tower.hpp"

namespace gd2 {

/// Parameters (case, u, v, z, w, s) of a Galois structure on D8 or D12:
///   D8:  1 - z^2 u = s^2 u v      K1 = k(sqrt u), K2 = k(sqrt v),
///                                 K  = k(sqrt v, sqrt(w(1 +- z sqrt u)/2))
///   D12: u^3 - z^2 = 3 s^2 v      K3 = splitting field of X^3 - (3u/4)X - z/4,
///                                 K  = K3 K1
/// The witnesses z, s are exact; w defaults to 1 and is meaningful for D8 only.
struct GaloisData {
    Case c;
    Fq u, v, z, w, s;

    const BaseField& field() const { return u.field(); }
    /// Checks the defining identity exactly.
    bool identity_holds() const;
};

enum class GaloisTypeLabel {
    // D8 rows
    I, C2A, C2B, C2C, C4, V4A, V4B, D8,
    // D12 rows (I, C2A..C2C shared labels above)
    C3, C6, V4, D6A, D6B, D12,
};

std::string type_label_name(GaloisTypeLabel l);
GaloisTypeLabel parse_type_label(Case c, const std::string& name);

struct GaloisType {
    Case c;
    GaloisTypeLabel label;
};

/// Field data attached to a classified structure.
struct FieldTowerDescription {
    SquareClass K1, K2;          // square classes of u and v
    int deg_K1 = 1, deg_K2 = 1;  // [K1:k], [K2:k]
    int deg_K = 1;               // [K:k]
    int deg_K3 = -1;             // [K3:k], D12 only
    /// Generator description of K over k, for rendering.
    std::vector<std::string> generators;
    /// Existence condition from the table remarks column, when the row has
    /// one ((u,-1) for C4, (u,-v) for the D8 row); evaluated over Q.
    std::optional<QuaternionSymbol> table_condition;
    bool table_condition_holds = true;
};

struct ObstructionReport {
    QuaternionSymbol symbol;
    std::optional<Place> place;
    std::string reason;
};

struct SearchExceeded {
    std::string what;
};

using MakeResult = std::variant<GaloisData, ObstructionReport, SearchExceeded>;

/// Find witnesses (z, s) for the case congruence given u, v (and w for D8).
/// Fails with the obstruction witness when the structure cannot exist or is
/// not realizable as a matrix group: for D8 both (-v, w) and (u, -v) must be
/// trivial, for D12 the single symbol (u, -3v). Solutions with s != 0 are
/// preferred. Over a prime field every symbol is trivial and the search
/// always succeeds.
MakeResult make_galois_data(Case c, const Fq& u, const Fq& v,
                            const std::optional<Fq>& w = std::nullopt,
                            const Config& cfg = Config{});

/// Table row of the structure plus its field description.
std::pair<GaloisType, FieldTowerDescription> classify_type(const GaloisData& d);

/// D8 only: do (u,v,w) and (u,v,w') encode the same field K for a suitable
/// choice of the remaining parameter? True iff the square classes of u and v
/// agree and (-v,w) = (-v,w') in Br_2(k).
bool same_structure(const GaloisData& a, const GaloisData& b);

/// Rewrite D8 data with w != 1 into equivalent data with w = 1 describing the
/// same field K (constructive direction of the w-comparison lemma).
/// Pre: (-v, w) trivial. Identity on data with w a square.
GaloisData normalize_w(const GaloisData& d, const Config& cfg = Config{});

struct RealizedGroup {
    TowerPtr tower;
    Matrix2 U, V;
    std::vector<Matrix2> group;       // closure of {U, V}; order 8 or 12
    TowerElem alpha, beta;
    bool galois_stable = false;       // entry set closed under tower conjugations
};

/// The generator matrices of the structure over an explicit radical tower.
/// Verifies the group relations, the group order, centrality of -1, and
/// Galois-stability of the matrix set. Throws obstructed_error when the
/// realizability obstruction is nontrivial.
RealizedGroup realize_matrices(const GaloisData& d);

} // namespace gd2

#endif
