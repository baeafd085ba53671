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

#ifndef GD2_TOWER_HPP
#define GD2_TOWER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gd2/field.hpp"
#include "gd2/poly.hpp"

namespace gd2 {

class Tower;
using TowerPtr = std::shared_ptr<Tower>;

namespace detail {

/// Nested coefficient tree: a level-0 node holds an Fq, a level-n node holds
/// `degree(level n)` children over level n-1.
struct TNode {
    Fq v;
    std::vector<TNode> kids;

    explicit TNode(const Fq& x) : v(x) {}
    TNode() : v() {}
    bool operator==(const TNode& o) const { return v == o.v && kids == o.kids; }
};

} // namespace detail

/// Element of a radical tower over the base field. Elements carry the height
/// (number of genuine extension levels) at which they were created and are
/// lifted automatically when combined.
class TowerElem {
public:
    TowerElem() : height_(0), node_(Fq()) {}

    const TowerPtr& tower() const { return tower_; }
    int height() const { return height_; }
    bool is_zero() const;

    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem operator/(const TowerElem& o) const;
    TowerElem operator-() const;
    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    TowerElem inv() const;
    TowerElem pow(long e) const;

    /// The base-field value when the element lies in the base field.
    std::optional<Fq> as_base() const;

    std::string to_string() const;

private:
    friend class Tower;
    friend struct TowerHom;
    TowerElem(TowerPtr t, int h, detail::TNode n)
        : tower_(std::move(t)), height_(h), node_(std::move(n)) {}
    TowerPtr tower_;
    int height_;
    detail::TNode node_;
};

/// A tower k = L_0 < L_1 < ... with quadratic layers (adjoin sqrt of a
/// previous-level element) and cubic layers (adjoin a root of X^3 + pX + q
/// over the base field). Declared layers that do not enlarge the field are
/// collapsed: the declared generator is materialized in the existing tower
/// and no level is created.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static TowerPtr make(const BaseField& f);

    const BaseField& base_field() const { return field_; }
    int height() const { return static_cast<int>(levels_.size()); }
    int total_degree() const;
    int layer_degree(int level) const { return levels_[level].degree; }

    TowerElem from_base(const Fq& c);
    TowerElem from_int(long n) { return from_base(Fq(field_, n)); }

    /// Adjoin a square root of `radicand` (nonzero). Returns the generator:
    /// a fresh level generator, or a materialized square root if the radicand
    /// is already a square in the tower.
    TowerElem add_sqrt(const TowerElem& radicand);

    /// Adjoin a root of X^3 + pX + q over the base field. If the cubic has a
    /// base-field root the layer collapses to it (when `avoid` is given,
    /// roots equal to `avoid` are skipped if another choice exists); if it
    /// factors as (linear)(irreducible quadratic) and `prefer_quadratic` is
    /// set, the quadratic factor's root is adjoined instead.
    TowerElem add_cubic_root(const Fq& p, const Fq& q, bool prefer_quadratic_factor = false,
                             const std::optional<Fq>& avoid_root = std::nullopt);

    /// Square test with witness. Elements strictly involving a cubic
    /// generator are not supported (never needed: radicands drop to lower
    /// levels in all uses).
    std::optional<TowerElem> sqrt(const TowerElem& e);

    /// Generators of all *levels* (post-collapse), bottom up.
    std::vector<TowerElem> level_generators();

    struct LevelInfo {
        enum class Kind { Quadratic, Cubic } kind;
        int degree;
    };
    LevelInfo level_info(int level) const;
    /// Minimal polynomial data of a level generator, as elements lifted to
    /// the full tower: {r} for quadratic (g^2 = r), {p, q} for cubic.
    std::vector<TowerElem> level_minpoly(int level);

private:
    explicit Tower(const BaseField& f) : field_(f) {}

    struct Level {
        LevelInfo::Kind kind;
        int degree;
        // minimal polynomial data at creation height (level index = its own
        // height - 1): quadratic stores {r}; cubic stores {p, q}.
        std::vector<detail::TNode> mp;
    };

    friend class TowerElem;
    friend struct TowerHom;

    // node arithmetic at a given level
    detail::TNode lift(const detail::TNode& n, int from, int to) const;
    detail::TNode nadd(int level, const detail::TNode& a, const detail::TNode& b) const;
    detail::TNode nsub(int level, const detail::TNode& a, const detail::TNode& b) const;
    detail::TNode nneg(int level, const detail::TNode& a) const;
    detail::TNode nmul(int level, const detail::TNode& a, const detail::TNode& b) const;
    detail::TNode ninv(int level, const detail::TNode& a) const;
    bool nis_zero(const detail::TNode& a) const;
    detail::TNode nzero(int level) const;
    detail::TNode none(int level) const;
    std::optional<detail::TNode> nsqrt(int level, const detail::TNode& a);
    detail::TNode reduce_pow(int level, const std::vector<detail::TNode>& coeffs) const;

    TowerElem wrap(int height, detail::TNode n) { return TowerElem(shared_from_this(), height, std::move(n)); }

    BaseField field_;
    std::vector<Level> levels_;
};

/// 2x2 matrix over a tower.
struct Matrix2 {
    TowerElem a, b, c, d;

    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator-() const;
    bool operator==(const Matrix2& o) const;
    bool operator!=(const Matrix2& o) const { return !(*this == o); }
    TowerElem det() const { return a * d - b * c; }
    Matrix2 inverse() const;
    bool is_scalar() const;
};

/// True iff the fractional-linear substitution attached to M fixes the
/// hyperelliptic equation Y^2 = F(X):
///   (cX+d)^6 F((aX+b)/(cX+d)) == det(M)^2 F(X)
/// as an exact polynomial identity over the tower. F has degree 5 or 6 and
/// coefficients in the tower's base field. Throws on singular M.
bool is_curve_automorphism(const Poly& F, const Matrix2& M);

/// Multiplicative closure of {U, V}; throws domain_error past `cap` elements.
std::vector<Matrix2> generate_matrix_group(const Matrix2& U, const Matrix2& V, size_t cap = 32);

/// A base-field-fixing homomorphism of the tower determined by images of the
/// level generators. Construction validates that every generator image
/// satisfies the generator's minimal polynomial.
struct TowerHom {
    TowerPtr tower;
    std::vector<TowerElem> images;

    static std::optional<TowerHom> make(const TowerPtr& t, std::vector<TowerElem> images);
    TowerElem apply(const TowerElem& e) const;
    Matrix2 apply(const Matrix2& m) const;
};

} // namespace gd2

#endif
