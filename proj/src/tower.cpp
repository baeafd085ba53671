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

#include "gd2/tower.hpp"

#include <algorithm>
#include <sstream>

namespace gd2 {

using detail::TNode;

// ---------------------------------------------------------------------------
// Tower: node arithmetic
// ---------------------------------------------------------------------------

TowerPtr Tower::make(const BaseField& f) { return TowerPtr(new Tower(f)); }

int Tower::total_degree() const {
    int d = 1;
    for (const auto& l : levels_) d *= l.degree;
    return d;
}

Tower::LevelInfo Tower::level_info(int level) const {
    return {levels_[level].kind, levels_[level].degree};
}

TNode Tower::nzero(int level) const {
    if (level == 0) return TNode(Fq(field_, 0));
    TNode n;
    n.kids.assign(levels_[level - 1].degree, nzero(level - 1));
    return n;
}

TNode Tower::none(int level) const {
    TNode n = nzero(level);
    TNode* p = &n;
    for (int l = level; l > 0; --l) p = &p->kids[0];
    p->v = Fq(field_, 1);
    return n;
}

bool Tower::nis_zero(const TNode& a) const {
    if (a.kids.empty()) return a.v.is_zero();
    return std::all_of(a.kids.begin(), a.kids.end(), [&](const TNode& k) { return nis_zero(k); });
}

TNode Tower::lift(const TNode& n, int from, int to) const {
    TNode out = n;
    for (int l = from; l < to; ++l) {
        TNode up;
        up.kids.assign(levels_[l].degree, nzero(l));
        up.kids[0] = std::move(out);
        out = std::move(up);
    }
    return out;
}

TNode Tower::nadd(int level, const TNode& a, const TNode& b) const {
    if (level == 0) return TNode(a.v + b.v);
    TNode out;
    out.kids.reserve(a.kids.size());
    for (size_t i = 0; i < a.kids.size(); ++i) out.kids.push_back(nadd(level - 1, a.kids[i], b.kids[i]));
    return out;
}

TNode Tower::nsub(int level, const TNode& a, const TNode& b) const {
    if (level == 0) return TNode(a.v - b.v);
    TNode out;
    out.kids.reserve(a.kids.size());
    for (size_t i = 0; i < a.kids.size(); ++i) out.kids.push_back(nsub(level - 1, a.kids[i], b.kids[i]));
    return out;
}

TNode Tower::nneg(int level, const TNode& a) const {
    if (level == 0) return TNode(-a.v);
    TNode out;
    out.kids.reserve(a.kids.size());
    for (const auto& k : a.kids) out.kids.push_back(nneg(level - 1, k));
    return out;
}

/// Reduce a coefficient list in the level generator (length up to 2*deg-1)
/// modulo the generator's minimal polynomial.
TNode Tower::reduce_pow(int level, const std::vector<TNode>& coeffs) const {
    const Level& L = levels_[level - 1];
    std::vector<TNode> c = coeffs;
    c.resize(2 * L.degree - 1, nzero(level - 1));
    if (L.kind == LevelInfo::Kind::Quadratic) {
        const TNode& r = L.mp[0];
        // g^2 = r
        c[0] = nadd(level - 1, c[0], nmul(level - 1, c[2], r));
    } else {
        const TNode& p = L.mp[0];
        const TNode& q = L.mp[1];
        // g^3 = -p g - q ; g^4 = -p g^2 - q g
        c[1] = nsub(level - 1, c[1], nmul(level - 1, c[4], q));
        c[2] = nsub(level - 1, c[2], nmul(level - 1, c[4], p));
        c[0] = nsub(level - 1, c[0], nmul(level - 1, c[3], q));
        c[1] = nsub(level - 1, c[1], nmul(level - 1, c[3], p));
    }
    TNode out;
    out.kids.assign(c.begin(), c.begin() + L.degree);
    return out;
}

TNode Tower::nmul(int level, const TNode& a, const TNode& b) const {
    if (level == 0) return TNode(a.v * b.v);
    int d = levels_[level - 1].degree;
    std::vector<TNode> conv(2 * d - 1, nzero(level - 1));
    for (int i = 0; i < d; ++i) {
        if (nis_zero(a.kids[i])) continue;
        for (int j = 0; j < d; ++j) {
            if (nis_zero(b.kids[j])) continue;
            conv[i + j] = nadd(level - 1, conv[i + j], nmul(level - 1, a.kids[i], b.kids[j]));
        }
    }
    return reduce_pow(level, conv);
}

TNode Tower::ninv(int level, const TNode& a) const {
    if (level == 0) {
        if (a.v.is_zero()) throw domain_error("division by zero in tower");
        return TNode(a.v.inv());
    }
    const Level& L = levels_[level - 1];
    // minimal polynomial as coefficient vector over level-1
    std::vector<TNode> m;
    if (L.kind == LevelInfo::Kind::Quadratic) {
        m = {nneg(level - 1, L.mp[0]), nzero(level - 1), none(level - 1)};
    } else {
        m = {L.mp[1], L.mp[0], nzero(level - 1), none(level - 1)};
    }
    // extended Euclid: maintain r0, r1 and s0, s1 with si * a == ri (mod m)
    auto deg = [&](const std::vector<TNode>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!nis_zero(p[i])) return i;
        return -1;
    };
    auto sub = [&](std::vector<TNode> x, const std::vector<TNode>& y) {
        if (y.size() > x.size()) x.resize(y.size(), nzero(level - 1));
        for (size_t i = 0; i < y.size(); ++i) x[i] = nsub(level - 1, x[i], y[i]);
        return x;
    };
    auto mul = [&](const std::vector<TNode>& x, const std::vector<TNode>& y) {
        std::vector<TNode> out;
        int dx = deg(x), dy = deg(y);
        if (dx < 0 || dy < 0) return out;
        out.assign(dx + dy + 1, nzero(level - 1));
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j)
                out[i + j] = nadd(level - 1, out[i + j], nmul(level - 1, x[i], y[j]));
        return out;
    };
    auto divmod = [&](std::vector<TNode> num, const std::vector<TNode>& den) {
        int dd = deg(den);
        std::vector<TNode> quot(std::max(0, deg(num) - dd + 1), nzero(level - 1));
        TNode lead_inv = ninv(level - 1, den[dd]);
        while (deg(num) >= dd && deg(num) >= 0) {
            int k = deg(num) - dd;
            TNode coef = nmul(level - 1, num[deg(num)], lead_inv);
            quot[k] = nadd(level - 1, quot[k], coef);
            for (int i = 0; i <= dd; ++i)
                num[i + k] = nsub(level - 1, num[i + k], nmul(level - 1, coef, den[i]));
        }
        return std::make_pair(quot, num);
    };

    std::vector<TNode> r0 = m, r1(a.kids.begin(), a.kids.end());
    std::vector<TNode> s0 = {nzero(level - 1)}, s1 = {none(level - 1)};
    if (deg(r1) < 0) throw domain_error("division by zero in tower");
    while (deg(r1) > 0) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s_next = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s_next);
        if (deg(r1) < 0)
            throw domain_error("non-invertible element: layer minimal polynomial not irreducible");
    }
    // r1 is a nonzero constant; inverse = s1 / r1[0]
    if (deg(s1) >= levels_[level - 1].degree)
        throw domain_error("internal: Bezout coefficient degree out of range");
    TNode c_inv = ninv(level - 1, r1[0]);
    std::vector<TNode> inv_c(levels_[level - 1].degree, nzero(level - 1));
    for (size_t i = 0; i < s1.size() && i < inv_c.size(); ++i)
        inv_c[i] = nmul(level - 1, s1[i], c_inv);
    TNode out;
    out.kids = std::move(inv_c);
    return out;
}

std::optional<TNode> Tower::nsqrt(int level, const TNode& a) {
    if (level == 0) {
        auto r = a.v.sqrt();
        if (!r) return std::nullopt;
        return TNode(*r);
    }
    const Level& L = levels_[level - 1];
    if (L.kind == LevelInfo::Kind::Cubic) {
        for (size_t i = 1; i < a.kids.size(); ++i)
            if (!nis_zero(a.kids[i]))
                throw domain_error("square test over a cubic generator is not supported");
        auto r = nsqrt(level - 1, a.kids[0]);
        if (!r) return std::nullopt;
        TNode out = nzero(level);
        out.kids[0] = *r;
        return out;
    }
    const TNode& r = L.mp[0];
    const TNode& x = a.kids[0];
    const TNode& y = a.kids[1];
    TNode out = nzero(level);
    if (nis_zero(y)) {
        if (auto s = nsqrt(level - 1, x)) {
            out.kids[0] = *s;
            return out;
        }
        // x = r * b^2 ?
        if (!nis_zero(x)) {
            if (auto s = nsqrt(level - 1, nmul(level - 1, x, ninv(level - 1, r)))) {
                out.kids[1] = *s;
                return out;
            }
        }
        return std::nullopt;
    }
    // norm = x^2 - r y^2 must be a square below
    TNode norm = nsub(level - 1, nmul(level - 1, x, x), nmul(level - 1, r, nmul(level - 1, y, y)));
    auto dopt = nsqrt(level - 1, norm);
    if (!dopt) return std::nullopt;
    TNode half = lift(TNode(Fq(field_, 1, 2)), 0, level - 1);
    for (int sign : {1, -1}) {
        TNode t0 = nmul(level - 1, half,
                        sign > 0 ? nadd(level - 1, x, *dopt) : nsub(level - 1, x, *dopt));
        if (nis_zero(t0)) continue;
        if (auto s = nsqrt(level - 1, t0)) {
            if (nis_zero(*s)) continue;
            TNode two_s = nadd(level - 1, *s, *s);
            TNode b = nmul(level - 1, y, ninv(level - 1, two_s));
            out.kids[0] = *s;
            out.kids[1] = b;
            // verify exactly
            if (nis_zero(nsub(level, nmul(level, out, out), a))) return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tower: public construction
// ---------------------------------------------------------------------------

TowerElem Tower::from_base(const Fq& c) {
    if (c.field() != field_) throw domain_error("element from wrong base field");
    return wrap(height(), lift(TNode(c), 0, height()));
}

TowerElem Tower::add_sqrt(const TowerElem& radicand) {
    if (radicand.tower() && radicand.tower().get() != this)
        throw domain_error("radicand from a different tower");
    if (radicand.is_zero()) throw domain_error("zero radicand");
    TNode r = lift(radicand.node_, radicand.height_, height());
    if (auto s = nsqrt(height(), r)) return wrap(height(), *s);
    Level lvl;
    lvl.kind = LevelInfo::Kind::Quadratic;
    lvl.degree = 2;
    lvl.mp = {r};
    levels_.push_back(std::move(lvl));
    TNode gen = nzero(height());
    gen.kids[1] = none(height() - 1);
    return wrap(height(), gen);
}

TowerElem Tower::add_cubic_root(const Fq& p, const Fq& q, bool prefer_quadratic_factor,
                                const std::optional<Fq>& avoid_root) {
    for (const auto& l : levels_)
        if (l.kind == LevelInfo::Kind::Cubic)
            throw domain_error("at most one cubic layer is supported");
    Poly cubic(field_, {q, p, Fq(field_, 0), Fq(field_, 1)});
    auto roots = cubic.roots_in_field();
    if (roots.empty()) {
        if (height() != 0) {
            // an irreducible cubic stays irreducible over a 2-power tower,
            // but keep the layer at the bottom so cubic stays over the base
            throw domain_error("cubic layer must be added before quadratic layers");
        }
        Level lvl;
        lvl.kind = LevelInfo::Kind::Cubic;
        lvl.degree = 3;
        lvl.mp = {TNode(p), TNode(q)};
        levels_.push_back(std::move(lvl));
        TNode gen = nzero(1);
        gen.kids[1] = TNode(Fq(field_, 1));
        return wrap(1, gen);
    }
    // reducible: pick a rational root, avoiding `avoid_root` when possible
    for (const auto& r : roots)
        if (!avoid_root || r != *avoid_root) return from_base(r);
    // all rational roots are to be avoided (a single value): use the quadratic
    // cofactor when asked, else return the root anyway
    const Fq& r = roots.front();
    if (prefer_quadratic_factor) {
        // cubic = (X - r)(X^2 + bX + c) with b = r, c = p + r^2; the cofactor
        // is irreducible here or its roots would have been rational roots
        Fq b = r, c = p + r * r;
        Fq disc = b * b * Fq(field_, 1, 4) - c;
        TowerElem gamma = add_sqrt(from_base(disc));
        return from_base(-b * Fq(field_, 1, 2)) + gamma;
    }
    return from_base(r);
}

std::optional<TowerElem> Tower::sqrt(const TowerElem& e) {
    TNode n = lift(e.node_, e.height_, height());
    auto r = nsqrt(height(), n);
    if (!r) return std::nullopt;
    return wrap(height(), *r);
}

std::vector<TowerElem> Tower::level_generators() {
    std::vector<TowerElem> out;
    for (int i = 0; i < height(); ++i) {
        TNode gen = nzero(i + 1);
        gen.kids[1] = none(i);
        out.push_back(wrap(i + 1, gen));
    }
    return out;
}

std::vector<TowerElem> Tower::level_minpoly(int level) {
    std::vector<TowerElem> out;
    for (const auto& n : levels_[level].mp) out.push_back(wrap(level, n));
    return out;
}

// ---------------------------------------------------------------------------
// TowerElem operators
// ---------------------------------------------------------------------------

namespace {

const Tower& common_tower(const TowerElem& a, const TowerElem& b) {
    if (!a.tower() || !b.tower()) throw domain_error("uninitialized tower element");
    if (a.tower().get() != b.tower().get()) throw domain_error("mismatched tower specs");
    return *a.tower();
}

} // namespace

bool TowerElem::is_zero() const {
    if (!tower_) throw domain_error("uninitialized tower element");
    return tower_->nis_zero(node_);
}

#define GD2_TOWER_BINOP(OP, FN)                                                        \
    TowerElem TowerElem::operator OP(const TowerElem& o) const {                      \
        const Tower& T = common_tower(*this, o);                                       \
        int h = std::max(height_, o.height_);                                          \
        return TowerElem(tower_, h,                                                    \
                         T.FN(h, T.lift(node_, height_, h), T.lift(o.node_, o.height_, h))); \
    }

GD2_TOWER_BINOP(+, nadd)
GD2_TOWER_BINOP(-, nsub)
GD2_TOWER_BINOP(*, nmul)
#undef GD2_TOWER_BINOP

TowerElem TowerElem::operator/(const TowerElem& o) const { return *this * o.inv(); }

TowerElem TowerElem::operator-() const {
    return TowerElem(tower_, height_, tower_->nneg(height_, node_));
}

bool TowerElem::operator==(const TowerElem& o) const {
    const Tower& T = common_tower(*this, o);
    int h = std::max(height_, o.height_);
    return T.nis_zero(T.nsub(h, T.lift(node_, height_, h), T.lift(o.node_, o.height_, h)));
}

TowerElem TowerElem::inv() const {
    if (!tower_) throw domain_error("uninitialized tower element");
    return TowerElem(tower_, height_, tower_->ninv(height_, node_));
}

TowerElem TowerElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    TowerElem acc = tower_->from_base(Fq(tower_->base_field(), 1));
    TowerElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<Fq> TowerElem::as_base() const {
    const TNode* n = &node_;
    for (int h = height_; h > 0; --h) {
        for (size_t i = 1; i < n->kids.size(); ++i)
            if (!tower_->nis_zero(n->kids[i])) return std::nullopt;
        n = &n->kids[0];
    }
    return n->v;
}

namespace {

void node_str(const Tower& T, int level, const TNode& n, const std::string& prefix, std::ostringstream& os,
              bool& first) {
    if (level == 0) {
        if (!n.v.is_zero()) {
            if (!first) os << " + ";
            first = false;
            os << n.v.to_string() << (prefix.empty() ? "" : "*" + prefix);
        }
        return;
    }
    for (size_t i = 0; i < n.kids.size(); ++i) {
        std::string p = prefix;
        if (i > 0) {
            std::string g = "g" + std::to_string(level);
            if (i > 1) g += "^" + std::to_string(i);
            p = p.empty() ? g : g + "*" + p;
        }
        node_str(T, level - 1, n.kids[i], p, os, first);
    }
}

} // namespace

std::string TowerElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    node_str(*tower_, height_, node_, "", os, first);
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Matrix2
// ---------------------------------------------------------------------------

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Matrix2 Matrix2::operator-() const { return {-a, -b, -c, -d}; }

bool Matrix2::operator==(const Matrix2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

Matrix2 Matrix2::inverse() const {
    TowerElem di = det().inv();
    return {d * di, -b * di, -c * di, a * di};
}

bool Matrix2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

bool is_curve_automorphism(const Poly& F, const Matrix2& M) {
    if (F.degree() < 5 || F.degree() > 6) throw domain_error("curve polynomial must have degree 5 or 6");
    TowerPtr T = M.a.tower();
    TowerElem det = M.det();
    if (det.is_zero()) throw domain_error("singular matrix in curve-automorphism test");

    const int n = 6;
    // powers of (aX+b) and (cX+d) as tower-coefficient polynomials in X
    auto poly_mul = [&](const std::vector<TowerElem>& f, const std::vector<TowerElem>& g) {
        std::vector<TowerElem> out(f.size() + g.size() - 1, T->from_int(0));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
        return out;
    };
    std::vector<std::vector<TowerElem>> num_pow(n + 1), den_pow(n + 1);
    num_pow[0] = {T->from_int(1)};
    den_pow[0] = {T->from_int(1)};
    std::vector<TowerElem> num = {M.b, M.a}, den = {M.d, M.c};
    for (int k = 1; k <= n; ++k) {
        num_pow[k] = poly_mul(num_pow[k - 1], num);
        den_pow[k] = poly_mul(den_pow[k - 1], den);
    }
    std::vector<TowerElem> lhs(n + 1, T->from_int(0));
    for (int k = 0; k <= n; ++k) {
        Fq coef = F.coeff(k);
        if (coef.is_zero()) continue;
        TowerElem ck = T->from_base(coef);
        auto term = poly_mul(num_pow[k], den_pow[n - k]);
        for (size_t i = 0; i < term.size() && i <= static_cast<size_t>(n); ++i)
            lhs[i] = lhs[i] + ck * term[i];
    }
    TowerElem det2 = det * det;
    for (int k = 0; k <= n; ++k) {
        TowerElem rhs = det2 * T->from_base(F.coeff(k));
        if (!(lhs[k] == rhs)) return false;
    }
    return true;
}

std::vector<Matrix2> generate_matrix_group(const Matrix2& U, const Matrix2& V, size_t cap) {
    TowerPtr T = U.a.tower();
    Matrix2 id{T->from_int(1), T->from_int(0), T->from_int(0), T->from_int(1)};
    std::vector<Matrix2> elems = {id};
    std::vector<Matrix2> frontier = {id};
    auto contains = [&](const Matrix2& m) {
        return std::any_of(elems.begin(), elems.end(), [&](const Matrix2& e) { return e == m; });
    };
    while (!frontier.empty()) {
        std::vector<Matrix2> next;
        for (const auto& f : frontier) {
            for (const Matrix2* g : {&U, &V}) {
                Matrix2 prod = f * *g;
                if (!contains(prod)) {
                    if (elems.size() >= cap)
                        throw domain_error("matrix group exceeds expected order");
                    elems.push_back(prod);
                    next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }
    return elems;
}

// ---------------------------------------------------------------------------
// TowerHom
// ---------------------------------------------------------------------------

std::optional<TowerHom> TowerHom::make(const TowerPtr& t, std::vector<TowerElem> images) {
    if (static_cast<int>(images.size()) != t->height()) return std::nullopt;
    for (int i = 0; i < t->height(); ++i) {
        auto info = t->level_info(i);
        auto mp = t->level_minpoly(i);
        TowerHom partial{t, images};
        if (info.kind == Tower::LevelInfo::Kind::Quadratic) {
            // image^2 must equal the image of the radicand (radicand lives at
            // height i, so its own generators must be mapped too)
            TowerElem r_img = partial.apply(mp[0]);
            if (!(images[i] * images[i] == r_img)) return std::nullopt;
        } else {
            TowerElem p = mp[0], q = mp[1];
            TowerElem g = images[i];
            if (!((g * g * g + partial.apply(p) * g + partial.apply(q)).is_zero())) return std::nullopt;
        }
    }
    return TowerHom{t, std::move(images)};
}

namespace {

TowerElem apply_node(const TowerHom& H, int level, const TNode& n) {
    if (level == 0) return H.tower->from_base(n.v);
    TowerElem acc = H.tower->from_int(0);
    const TowerElem& g = H.images[level - 1];
    for (int i = static_cast<int>(n.kids.size()) - 1; i >= 0; --i)
        acc = acc * g + apply_node(H, level - 1, n.kids[i]);
    return acc;
}

} // namespace

TowerElem TowerHom::apply(const TowerElem& e) const {
    TNode lifted = tower->lift(e.node_, e.height_, tower->height());
    return apply_node(*this, tower->height(), lifted);
}

Matrix2 TowerHom::apply(const Matrix2& m) const {
    return {apply(m.a), apply(m.b), apply(m.c), apply(m.d)};
}

} // namespace gd2
