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

#ifndef GD2_MODELS_HPP
#define GD2_MODELS_HPP

#include <optional>

#include "gd2/galois.hpp"

namespace gd2 {

enum class ModelSign { Plus, Minus };

/// A member of the rational model families:
///   D8 (sign +-):  Y^2 = (1 +- 2uz) X^6 -+ 8suv X^5 + v(3 -+ 10uz) X^4
///                        + v^2(3 -+ 10uz) X^2 +- 8suv^3 X + v^3(1 +- 2uz)
///   D12:           Y^2 = 27(u+2z) X^6 - 324sv X^5 + 27v(u-10z) X^4 + 360sv^2 X^3
///                        + 9v^2(u+10z) X^2 - 36sv^3 X + v^3(u-2z)
/// scaled by the hyperelliptic-twist factor d. The stored data is normalized:
/// nonzero s is replaced by 1 with v rescaled by s^2 (a k-isomorphism).
struct CurveModel {
    Case c;
    GaloisData data;
    ModelSign sign = ModelSign::Plus; // D8 only
    Fq d;
    Poly F;
};

/// Kinds of relation between two models of the same case.
enum class TwistKind {
    Identical,
    Hyperelliptic,
    XiTwist,
    XiAndHyperelliptic,
    Inequivalent,
};

struct TwistRelation {
    TwistKind kind;
    /// Square class of the recovered hyperelliptic factor reduced modulo the
    /// twist-group generators, when determined by the model data.
    std::optional<mpz_class> d;
};

std::string twist_kind_name(TwistKind k);

/// Materialize the model polynomial; verifies squarefreeness and the
/// absolute-invariant identity t(C) = u before returning.
/// Pre: valid data, u not 0 or 1/4, d != 0.
CurveModel build_model(const GaloisData& data, ModelSign sign = ModelSign::Plus,
                       const std::optional<Fq>& d = std::nullopt);

/// Generators of the subgroup of k*/k*^2 acting trivially on hyperelliptic
/// twists of the model (the quotient k*/k*^2 / <generators> acts freely):
///   D8,  K1 = k:        {v, m}     (K = k(sqrt v, sqrt m))
///   D8,  K1 != k:       {v}
///   D12, 3 not | [K:k]: {u}
///   D12, 3 | [K:k]:     {}
/// Trivial generators are dropped.
std::vector<SquareClass> hyperelliptic_twist_group(const GaloisData& data);

/// Decide how two models of the same case are related: by comparing the
/// absolute invariant u exactly, the square class of v, and the field K
/// (radicand ratio tests over k(sqrt u) for D8; splitting-field comparison of
/// the two cubics for D12). Sign-flip D8 pairs are Xi-twists, which degrade
/// to hyperelliptic twists exactly when K2 = k or K2 = K1.
TwistRelation twist_relation(const CurveModel& a, const CurveModel& b);

/// Exact check that the two cubics X^3 - (3u/4)X - z_i/4 (same u) generate
/// the same splitting field over k(sqrt v). Exposed for the D12 route and its
/// test oracle.
bool d12_same_cubic_field(const Fq& u, const Fq& z1, const Fq& z2);

} // namespace gd2

#endif
