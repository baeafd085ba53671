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

#include "gd2/galois.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gd2 {

namespace {

bool same_square_class(const Fq& a, const Fq& b) { return (a * b).is_square(); }

Fq fq(const BaseField& F, long n, long d = 1) { return Fq(F, n, d); }

/// Enumerate further rational points of A x^2 + B z^2 = C by chords through a
/// known point, until `pred` accepts one.
template <class Pred>
std::optional<std::pair<mpq_class, mpq_class>> chord_search(const mpq_class& A, const mpq_class& B,
                                                            const mpq_class& C, mpq_class x0,
                                                            mpq_class z0, Pred pred) {
    if (pred(x0, z0)) return std::make_pair(x0, z0);
    for (int h = 1; h <= 24; ++h) {
        for (int num = -h; num <= h; ++num) {
            for (long den = 1; den <= h; ++den) {
                if (std::gcd(std::abs(num), den) != 1) continue;
                if (std::max<long>(std::abs(num), den) != h) continue;
                mpq_class tau(num, den);
                mpq_class denom = A + B * tau * tau;
                if (denom == 0) continue;
                mpq_class x1 = -x0 - 2 * B * tau * (z0 - tau * x0) / denom;
                mpq_class z1 = z0 + tau * (x1 - x0);
                if (pred(x1, z1)) return std::make_pair(x1, z1);
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool GaloisData::identity_holds() const {
    if (u.is_zero() || v.is_zero() || w.is_zero()) return false;
    if (c == Case::D8) return Fq(field(), 1) - z * z * u == s * s * u * v;
    if (field().characteristic() == 3) return false;
    if (!(u * u * u - z * z == Fq(field(), 3) * s * s * v)) return false;
    // with s = 0 the discriminant vanishes and only v in k*^2 is consistent
    if (s.is_zero() && !v.is_square()) return false;
    return true;
}

std::string type_label_name(GaloisTypeLabel l) {
    switch (l) {
        case GaloisTypeLabel::I: return "I";
        case GaloisTypeLabel::C2A: return "C2A";
        case GaloisTypeLabel::C2B: return "C2B";
        case GaloisTypeLabel::C2C: return "C2C";
        case GaloisTypeLabel::C4: return "C4";
        case GaloisTypeLabel::V4A: return "V4A";
        case GaloisTypeLabel::V4B: return "V4B";
        case GaloisTypeLabel::D8: return "D8";
        case GaloisTypeLabel::C3: return "C3";
        case GaloisTypeLabel::C6: return "C6";
        case GaloisTypeLabel::V4: return "V4";
        case GaloisTypeLabel::D6A: return "D6A";
        case GaloisTypeLabel::D6B: return "D6B";
        case GaloisTypeLabel::D12: return "D12";
    }
    return "?";
}

GaloisTypeLabel parse_type_label(Case c, const std::string& name) {
    std::string n;
    for (char ch : name) n += static_cast<char>(std::toupper((unsigned char)ch));
    static const std::pair<const char*, GaloisTypeLabel> d8[] = {
        {"I", GaloisTypeLabel::I},     {"C2A", GaloisTypeLabel::C2A}, {"C2B", GaloisTypeLabel::C2B},
        {"C2C", GaloisTypeLabel::C2C}, {"C4", GaloisTypeLabel::C4},   {"V4A", GaloisTypeLabel::V4A},
        {"V4B", GaloisTypeLabel::V4B}, {"D8", GaloisTypeLabel::D8}};
    static const std::pair<const char*, GaloisTypeLabel> d12[] = {
        {"I", GaloisTypeLabel::I},     {"C2A", GaloisTypeLabel::C2A}, {"C2B", GaloisTypeLabel::C2B},
        {"C2C", GaloisTypeLabel::C2C}, {"C3", GaloisTypeLabel::C3},   {"C6", GaloisTypeLabel::C6},
        {"V4", GaloisTypeLabel::V4},   {"D6A", GaloisTypeLabel::D6A}, {"D6B", GaloisTypeLabel::D6B},
        {"D12", GaloisTypeLabel::D12}};
    if (c == Case::D8) {
        for (auto& [s, l] : d8)
            if (n == s) return l;
    } else {
        for (auto& [s, l] : d12)
            if (n == s) return l;
    }
    throw parse_error("unknown type label '" + name + "' for case " + case_name(c));
}

// ---------------------------------------------------------------------------
// make_galois_data
// ---------------------------------------------------------------------------

MakeResult make_galois_data(Case c, const Fq& u, const Fq& v, const std::optional<Fq>& w_in,
                            const Config& cfg) {
    const BaseField& F = u.field();
    if (u.is_zero() || v.is_zero()) throw domain_error("u and v must be nonzero");
    Fq w = w_in.value_or(Fq(F, 1));
    if (w.is_zero()) throw domain_error("w must be nonzero");
    if (c == Case::D12 && F.characteristic() == 3)
        throw domain_error("D12 requires characteristic different from 3");
    if (c == Case::D12 && !w.is_one() && w_in)
        throw domain_error("w is a D8-only parameter");

    if (F.is_rationals()) {
        if (c == Case::D8) {
            // realizability of the declared field shape
            mpq_class mv = (-v).rat(), mw = w.rat();
            if (auto bad = hilbert_obstruction_place(mv, mw))
                return ObstructionReport{QuaternionSymbol{mv, mw}, *bad,
                                         "matrix realizability obstruction (-v,w)"};
            // existence of the Galois structure: congruence 1 - z^2 u = s^2 u v
            mpq_class mu = u.rat(), mnv = (-v).rat();
            if (auto bad = hilbert_obstruction_place(mu, mnv))
                return ObstructionReport{QuaternionSymbol{mu, mnv}, *bad,
                                         "no D8 structure with these K1, K2: (u,-v) nontrivial"};
            ConicResult r = solve_conic(u.rat() * v.rat(), u.rat(), 1, cfg.conic_height);
            if (std::holds_alternative<ConicBoundExceeded>(r))
                return SearchExceeded{"conic point search exceeded height bound"};
            if (std::holds_alternative<ConicUnsolvable>(r)) {
                auto& un = std::get<ConicUnsolvable>(r);
                return ObstructionReport{un.witness, un.place, "congruence conic unsolvable"};
            }
            auto pt = std::get<ConicSolution>(r); // uv s^2 + u z^2 = 1, x = s, z = z
            auto found = chord_search(u.rat() * v.rat(), u.rat(), 1, pt.x, pt.z,
                                      [](const mpq_class& s, const mpq_class&) { return s != 0; });
            mpq_class sres = found ? found->first : pt.x;
            mpq_class zres = found ? found->second : pt.z;
            GaloisData d{c, u, v, Fq(F, zres), w, Fq(F, sres)};
            if (!d.identity_holds()) throw domain_error("internal: witness identity failed");
            return d;
        }
        // D12: (u, -3v) gates both existence and realizability
        mpq_class mu = u.rat(), m3v = (Fq(F, -3) * v).rat();
        if (auto bad = hilbert_obstruction_place(mu, m3v))
            return ObstructionReport{QuaternionSymbol{mu, m3v}, *bad,
                                     "obstruction (u,-3v) nontrivial"};
        // z = u x, s = u y with x^2 + 3v y^2 = u
        ConicResult r = solve_conic(1, 3 * v.rat(), u.rat(), cfg.conic_height);
        if (std::holds_alternative<ConicBoundExceeded>(r))
            return SearchExceeded{"conic point search exceeded height bound"};
        if (std::holds_alternative<ConicUnsolvable>(r)) {
            auto& un = std::get<ConicUnsolvable>(r);
            return ObstructionReport{un.witness, un.place, "congruence conic unsolvable"};
        }
        auto pt = std::get<ConicSolution>(r);
        auto found = chord_search(mpq_class(1), 3 * v.rat(), u.rat(), pt.x, pt.z,
                                  [](const mpq_class&, const mpq_class& y) { return y != 0; });
        mpq_class x1 = found ? found->first : pt.x;
        mpq_class y1 = found ? found->second : pt.z;
        GaloisData d{c, u, v, Fq(F, u.rat() * x1), w, Fq(F, u.rat() * y1)};
        if (!d.identity_holds()) throw domain_error("internal: witness identity failed");
        return d;
    }

    // prime field: Br_2 is trivial; solve the conic by scanning
    if (c == Case::D8) {
        ConicSolution sol = solve_conic_mod_p(u * v, u, Fq(F, 1));
        GaloisData d{c, u, v, Fq(F, sol.z), w, Fq(F, sol.x)};
        if (!d.identity_holds()) throw domain_error("internal: witness identity failed");
        return d;
    }
    ConicSolution sol = solve_conic_mod_p(Fq(F, 3) * v, Fq(F, 1), u);
    GaloisData d{c, u, v, u * Fq(F, sol.z), w, u * Fq(F, sol.x)};
    if (!d.identity_holds()) throw domain_error("internal: witness identity failed");
    return d;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

namespace {

/// The tower of the field K attached to D8 data, together with rendering
/// strings for the surviving generators.
TowerPtr build_k_tower_d8(const GaloisData& d, std::vector<std::string>* gens) {
    const BaseField& F = d.field();
    TowerPtr T = Tower::make(F);
    TowerElem su = T->add_sqrt(T->from_base(d.u));
    TowerElem half = T->from_base(fq(F, 1, 2));
    TowerElem rad = T->from_base(d.w) * (T->from_int(1) - T->from_base(d.z) * su) * half;
    if (rad.is_zero()) rad = T->from_base(d.w) * (T->from_int(1) + T->from_base(d.z) * su) * half;
    int h0 = T->height();
    T->add_sqrt(T->from_base(d.v));
    bool v_level = T->height() > h0;
    h0 = T->height();
    T->add_sqrt(rad);
    bool m_level = T->height() > h0;
    if (gens) {
        if (v_level) gens->push_back("sqrt(" + SquareClass::of(d.v).to_string() + ")");
        if (m_level) {
            if (auto m0 = rad.as_base())
                gens->push_back("sqrt(" + SquareClass::of(*m0).to_string() + ")");
            else
                gens->push_back("sqrt(" + d.w.to_string() + "*(1-" + d.z.to_string() +
                                "*sqrt(" + d.u.to_string() + "))/2)");
        }
        if (T->height() > (v_level ? 1 : 0) + (m_level ? 1 : 0))
            gens->insert(gens->begin(), "sqrt(" + SquareClass::of(d.u).to_string() + ")");
    }
    return T;
}

Poly d12_cubic(const GaloisData& d) {
    const BaseField& F = d.field();
    return Poly(F, {-d.z * fq(F, 1, 4), -fq(F, 3, 4) * d.u, Fq(F, 0), Fq(F, 1)});
}

} // namespace

std::pair<GaloisType, FieldTowerDescription> classify_type(const GaloisData& d) {
    const BaseField& F = d.field();
    if (!d.identity_holds()) throw domain_error("inconsistent Galois data");
    FieldTowerDescription out{SquareClass::of(d.u), SquareClass::of(d.v)};
    out.deg_K1 = d.u.is_square() ? 1 : 2;
    out.deg_K2 = d.v.is_square() ? 1 : 2;

    if (d.c == Case::D8) {
        TowerPtr T = build_k_tower_d8(d, &out.generators);
        out.deg_K = T->total_degree();
        GaloisTypeLabel label;
        int key = out.deg_K * 100 + out.deg_K2 * 10 + out.deg_K1;
        switch (key) {
            case 111: label = GaloisTypeLabel::I; break;
            case 211: label = GaloisTypeLabel::C2A; break;
            case 221: label = GaloisTypeLabel::C2B; break;
            case 222: label = GaloisTypeLabel::C2C; break;
            case 412: label = GaloisTypeLabel::C4; break;
            case 421: label = GaloisTypeLabel::V4A; break;
            case 422: label = GaloisTypeLabel::V4B; break;
            case 822: label = GaloisTypeLabel::D8; break;
            default:
                throw domain_error("inconsistent data: no D8 table row with degrees [K:k]=" +
                                   std::to_string(out.deg_K));
        }
        if (label == GaloisTypeLabel::C2C || label == GaloisTypeLabel::V4B) {
            if (!same_square_class(d.u, d.v))
                throw domain_error("inconsistent data: row requires K1 = K2");
        }
        if (F.is_rationals()) {
            if (label == GaloisTypeLabel::C4) {
                out.table_condition = QuaternionSymbol{d.u.rat(), -1};
                out.table_condition_holds = hilbert_symbol_global(d.u.rat(), mpq_class(-1));
            } else if (label == GaloisTypeLabel::D8) {
                out.table_condition = QuaternionSymbol{d.u.rat(), (-d.v).rat()};
                out.table_condition_holds = hilbert_symbol_global(d.u.rat(), (-d.v).rat());
            }
            if (out.table_condition && !out.table_condition_holds)
                throw domain_error("inconsistent data: table existence condition fails");
        }
        return {GaloisType{d.c, label}, out};
    }

    // D12
    Poly cubic = d12_cubic(d);
    auto roots = cubic.roots_in_field();
    if (roots.size() >= 2) out.deg_K3 = 1;
    else if (roots.size() == 1) out.deg_K3 = 2;
    else out.deg_K3 = poly_discriminant(cubic).is_square() ? 3 : 6;
    bool k3_has_quad = (out.deg_K3 == 2 || out.deg_K3 == 6);
    if (k3_has_quad) {
        // the quadratic subfield of K3 is k(sqrt(disc)) = K2
        Fq disc = poly_discriminant(cubic);
        if (disc.is_zero() || !same_square_class(disc, d.v))
            throw domain_error("inconsistent data: cubic discriminant class differs from v");
    } else if (out.deg_K3 == 1 && !d.v.is_square() && !d.s.is_zero()) {
        throw domain_error("inconsistent data: split cubic forces K2 = k");
    }
    bool k1_in_k3 = out.deg_K1 == 2 && k3_has_quad && same_square_class(d.u, d.v);
    out.deg_K = out.deg_K3 * out.deg_K1 / (k1_in_k3 ? 2 : 1);
    out.generators.push_back("sqrt(" + SquareClass::of(d.v).to_string() + ")");
    out.generators.push_back(cubic.to_string());
    if (out.deg_K > out.deg_K3)
        out.generators.insert(out.generators.begin(),
                              "sqrt(" + SquareClass::of(d.u).to_string() + ")");

    GaloisTypeLabel label;
    int key = out.deg_K * 1000 + out.deg_K3 * 100 + out.deg_K2 * 10 + out.deg_K1;
    switch (key) {
        case 1111: label = GaloisTypeLabel::I; break;
        case 2112: label = GaloisTypeLabel::C2A; break;
        case 2221: label = GaloisTypeLabel::C2B; break;
        case 2222: label = GaloisTypeLabel::C2C; break;
        case 3311: label = GaloisTypeLabel::C3; break;
        case 6312: label = GaloisTypeLabel::C6; break;
        case 4222: label = GaloisTypeLabel::V4; break;
        case 6621: label = GaloisTypeLabel::D6A; break;
        case 6622: label = GaloisTypeLabel::D6B; break;
        case 12622: label = GaloisTypeLabel::D12; break;
        default:
            throw domain_error("inconsistent data: no D12 table row with degrees [K:k]=" +
                               std::to_string(out.deg_K) + ", [K3:k]=" + std::to_string(out.deg_K3));
    }
    if (label == GaloisTypeLabel::C2C || label == GaloisTypeLabel::D6B) {
        if (!same_square_class(d.u, d.v)) throw domain_error("inconsistent data: row requires K1 = K2");
    }
    if ((label == GaloisTypeLabel::V4 || label == GaloisTypeLabel::D12) &&
        same_square_class(d.u, d.v))
        throw domain_error("inconsistent data: row requires K1 != K2");
    return {GaloisType{d.c, label}, out};
}

bool same_structure(const GaloisData& a, const GaloisData& b) {
    if (a.c != Case::D8 || b.c != Case::D8)
        throw domain_error("same_structure compares D8 data only");
    if (a.field() != b.field()) throw domain_error("mixed base fields");
    if (!same_square_class(a.u, b.u) || !same_square_class(a.v, b.v)) return false;
    if (!a.field().is_rationals()) return true;
    // (-v, w) = (-v, w')  <=>  (-v, w w') trivial
    return hilbert_symbol_global((-a.v).rat(), (a.w * b.w).rat());
}

GaloisData normalize_w(const GaloisData& d, const Config& cfg) {
    const BaseField& F = d.field();
    if (d.c != Case::D8) throw domain_error("normalize_w applies to D8 data");
    if (!d.identity_holds()) throw domain_error("inconsistent Galois data");
    if (d.w.is_square()) {
        GaloisData out = d;
        out.w = Fq(F, 1);
        return out;
    }
    if (F.is_rationals()) {
        if (auto bad = hilbert_obstruction_place((-d.v).rat(), d.w.rat()))
            throw obstructed_error("(-v,w) = " + QuaternionSymbol{(-d.v).rat(), d.w.rat()}.to_string() +
                                   " nontrivial at place " + bad->to_string());
    }
    auto solve = [&](const Fq& A, const Fq& B) -> std::pair<Fq, Fq> {
        if (F.is_rationals()) {
            ConicResult r = solve_conic(A.rat(), B.rat(), 1, cfg.conic_height);
            if (std::holds_alternative<ConicUnsolvable>(r))
                throw domain_error("internal: normalize_w conic unexpectedly unsolvable");
            if (std::holds_alternative<ConicBoundExceeded>(r))
                throw search_bound_error("normalize_w conic search exceeded bound");
            auto pt = std::get<ConicSolution>(r);
            auto better = chord_search(A.rat(), B.rat(), 1, pt.x, pt.z,
                                       [](const mpq_class& x, const mpq_class& y) {
                                           return x != 0 && y != 0;
                                       });
            if (better) return {Fq(F, better->first), Fq(F, better->second)};
            return {Fq(F, pt.x), Fq(F, pt.z)};
        }
        ConicSolution s = solve_conic_mod_p(A, B, Fq(F, 1));
        return {Fq(F, s.x), Fq(F, s.z)};
    };

    GaloisData out = d;
    out.w = Fq(F, 1);
    if (d.u.is_square()) {
        Fq r = *d.u.sqrt();
        if ((Fq(F, 1) - d.z * r).is_zero()) r = -r;
        Fq m = d.w * (Fq(F, 1) - d.z * r) / Fq(F, 2);
        auto [x0, y0] = solve(m, d.v * m); // m x^2 + v m y^2 = 1
        out.z = (Fq(F, 1) - Fq(F, 2) * m * x0 * x0) / r;
        out.s = Fq(F, 2) * m * x0 * y0 / r;
    } else {
        // w(1-z^2 u) X^2 + w u Y^2 = 1, then xi = a + b sqrt(u), b = Y + aZ
        Fq A = d.w * (Fq(F, 1) - d.z * d.z * d.u);
        auto [x0, y0] = solve(A, d.w * d.u);
        Fq a = x0, b = y0 + x0 * d.z;
        out.z = -d.w * (Fq(F, 2) * a * b - d.z * (a * a + d.u * b * b));
        out.s = d.w * d.s * (a * a - d.u * b * b);
    }
    if (!out.identity_holds()) throw domain_error("internal: normalize_w produced invalid data");
    return out;
}

// ---------------------------------------------------------------------------
// matrix realization
// ---------------------------------------------------------------------------

namespace {

void check_group(const RealizedGroup& g, Case c) {
    size_t expected = c == Case::D8 ? 8 : 12;
    if (g.group.size() != expected)
        throw domain_error("realized group has order " + std::to_string(g.group.size()) +
                           ", expected " + std::to_string(expected));
    TowerPtr T = g.tower;
    Matrix2 id{T->from_int(1), T->from_int(0), T->from_int(0), T->from_int(1)};
    Matrix2 mid = -id;
    bool has_minus = std::any_of(g.group.begin(), g.group.end(),
                                 [&](const Matrix2& m) { return m == mid; });
    if (!has_minus) throw domain_error("hyperelliptic involution -1 missing from realized group");
    if (!(g.U * g.U == id)) throw domain_error("relation U^2 = 1 fails");
    if (c == Case::D8) {
        if (!(g.V * g.V == mid)) throw domain_error("relation V^2 = -1 fails");
        if (!(g.U * g.V == -(g.V * g.U))) throw domain_error("relation UV = -VU fails");
    } else {
        if (!(g.V * g.V * g.V == mid)) throw domain_error("relation V^3 = -1 fails");
        if (!(g.V * g.U == -(g.U * g.V * g.V))) throw domain_error("relation VU = -UV^2 fails");
    }
}

bool group_set_equal(const std::vector<Matrix2>& a, const std::vector<Matrix2>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& m : a)
        if (std::none_of(b.begin(), b.end(), [&](const Matrix2& n) { return n == m; })) return false;
    return true;
}

/// Check that every consistent conjugation of the tower permutes the matrix
/// set. `extra` supplies additional generator-image candidates per level.
bool verify_galois_stability(const RealizedGroup& g,
                             const std::vector<std::vector<TowerElem>>& extra) {
    TowerPtr T = g.tower;
    int h = T->height();
    auto gens = T->level_generators();
    std::vector<std::vector<TowerElem>> cands(h);
    for (int i = 0; i < h; ++i) {
        cands[i] = {gens[i], -gens[i]};
        if (i < static_cast<int>(extra.size()))
            for (const auto& e : extra[i]) {
                cands[i].push_back(e);
                cands[i].push_back(-e);
            }
    }
    std::vector<size_t> idx(h, 0);
    size_t homs_found = 0;
    while (true) {
        std::vector<TowerElem> images;
        for (int i = 0; i < h; ++i) images.push_back(cands[i][idx[i]]);
        if (auto hom = TowerHom::make(T, images)) {
            ++homs_found;
            std::vector<Matrix2> mapped;
            mapped.reserve(g.group.size());
            for (const auto& m : g.group) mapped.push_back(hom->apply(m));
            if (!group_set_equal(mapped, g.group)) return false;
        }
        int i = 0;
        for (; i < h; ++i) {
            if (++idx[i] < cands[i].size()) break;
            idx[i] = 0;
        }
        if (i == h) break;
    }
    return homs_found > 0 || h == 0;
}

} // namespace

RealizedGroup realize_matrices(const GaloisData& d) {
    const BaseField& F = d.field();
    if (!d.identity_holds()) throw domain_error("inconsistent Galois data");

    if (F.is_rationals()) {
        if (d.c == Case::D8) {
            if (auto bad = hilbert_obstruction_place((-d.v).rat(), d.w.rat()))
                throw obstructed_error(
                    "obstruction (-v,w) = " + QuaternionSymbol{(-d.v).rat(), d.w.rat()}.to_string() +
                    " nontrivial at place " + bad->to_string());
        } else {
            mpq_class m3v = (Fq(F, -3) * d.v).rat();
            if (auto bad = hilbert_obstruction_place(d.u.rat(), m3v))
                throw obstructed_error("obstruction (u,-3v) = " +
                                       QuaternionSymbol{d.u.rat(), m3v}.to_string() +
                                       " nontrivial at place " + bad->to_string());
        }
    }

    RealizedGroup out;
    TowerPtr T = Tower::make(F);
    out.tower = T;
    const Fq one(F, 1), two(F, 2);

    if (d.c == Case::D8) {
        TowerElem su = T->add_sqrt(T->from_base(d.u));
        // choose the square root of u with 1 - z sqrt(u) != 0
        TowerElem rad = (T->from_int(1) - T->from_base(d.z) * su) * T->from_base(fq(F, 1, 2));
        if (rad.is_zero()) {
            su = -su;
            rad = (T->from_int(1) - T->from_base(d.z) * su) * T->from_base(fq(F, 1, 2));
        }
        TowerElem rv = T->add_sqrt(T->from_base(d.v));
        int h_before_alpha = T->height();
        TowerElem alpha = T->add_sqrt(rad);
        bool alpha_level = T->height() > h_before_alpha;
        TowerElem beta = d.s.is_zero()
                             ? T->from_int(0)
                             : T->from_base(d.s * d.v) * su / (T->from_int(2) * alpha);
        out.alpha = alpha;
        out.beta = beta;
        TowerElem vinv = T->from_base(d.v.inv());
        out.U = {alpha, beta, beta * vinv, -alpha};
        out.V = {T->from_int(0), -rv, rv * vinv, T->from_int(0)};
        out.group = generate_matrix_group(out.U, out.V, 16);
        check_group(out, d.c);
        // conjugate candidates: the alpha-level generator may map to +-beta/sqrt(v)
        std::vector<std::vector<TowerElem>> extra(T->height());
        if (alpha_level && !beta.is_zero()) extra[T->height() - 1] = {beta / rv};
        out.galois_stable = verify_galois_stability(out, extra);
    } else {
        // D12: alpha a root of X^3 - (3u/4) X - z/4
        Fq pc = -fq(F, 3, 4) * d.u, qc = -d.z * fq(F, 1, 4);
        std::optional<Fq> avoid;
        if (d.u.is_square()) {
            // a root with alpha^2 = u makes beta = 0; avoid it
            Fq r = *d.u.sqrt();
            Poly cubic(F, {qc, pc, Fq(F, 0), one});
            if (cubic.eval(r).is_zero()) avoid = r;
            else if (cubic.eval(-r).is_zero()) avoid = -r;
        }
        TowerElem alpha = T->add_cubic_root(pc, qc, /*prefer_quadratic_factor=*/true, avoid);
        bool cubic_level = T->height() > 0 && T->level_info(0).kind == Tower::LevelInfo::Kind::Cubic;
        TowerElem beta = T->from_int(0);
        if (!d.s.is_zero()) {
            TowerElem num = T->from_base(d.u * d.u) + T->from_base(d.z) * alpha -
                            T->from_base(two * d.u) * alpha * alpha;
            beta = num / T->from_base(Fq(F, 3) * d.s);
        } else {
            TowerElem rad = (T->from_base(d.v) * (T->from_base(d.u) - alpha * alpha)) /
                            T->from_int(3);
            if (rad.is_zero()) throw domain_error("internal: degenerate beta in D12 realization");
            beta = T->add_sqrt(rad);
        }
        TowerElem rv = T->add_sqrt(T->from_base(d.v));
        TowerElem ru = T->add_sqrt(T->from_base(d.u));
        out.alpha = alpha;
        out.beta = beta;
        TowerElem inv_su = ru / T->from_base(d.u); // 1/sqrt(u)
        TowerElem vinv = T->from_base(d.v.inv());
        out.U = {alpha * inv_su, beta * inv_su, T->from_int(3) * beta * vinv * inv_su,
                 -alpha * inv_su};
        TowerElem half = T->from_base(fq(F, 1, 2));
        out.V = {half, rv * half, T->from_base(fq(F, -3, 2)) * rv * vinv, half};
        out.group = generate_matrix_group(out.U, out.V, 24);
        check_group(out, d.c);
        std::vector<std::vector<TowerElem>> extra(T->height());
        if (cubic_level && !d.s.is_zero()) {
            // other roots: -(u^2 + z a - 2u a^2 +- s a sqrt(v)) (+-sqrt(v)) / (2 v s)
            TowerElem core = T->from_base(d.u * d.u) + T->from_base(d.z) * alpha -
                             T->from_base(two * d.u) * alpha * alpha;
            TowerElem sa = T->from_base(d.s) * alpha;
            TowerElem den = T->from_base((two * d.v * d.s).inv());
            extra[0] = {(core + sa * rv) * (-rv) * den, (core - sa * rv) * rv * den};
        }
        out.galois_stable = verify_galois_stability(out, extra);
    }
    if (!out.galois_stable)
        throw domain_error("internal: realized matrix set is not Galois stable");
    return out;
}

} // namespace gd2
