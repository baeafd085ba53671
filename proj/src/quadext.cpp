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

#include "gd2/quadext.hpp"

namespace gd2 {

void QuadExt::check(const QuadExt& o) const {
    if (u_ != o.u_) throw domain_error("mixed radicands in quadratic-field arithmetic");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    check(o);
    return QuadExt(x_ + o.x_, y_ + o.y_, u_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    check(o);
    return QuadExt(x_ - o.x_, y_ - o.y_, u_);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    check(o);
    return QuadExt(x_ * o.x_ + u_ * y_ * o.y_, x_ * o.y_ + y_ * o.x_, u_);
}

QuadExt QuadExt::operator-() const { return QuadExt(-x_, -y_, u_); }

bool QuadExt::operator==(const QuadExt& o) const {
    return u_ == o.u_ && x_ == o.x_ && y_ == o.y_;
}

QuadExt QuadExt::inv() const {
    Fq n = norm();
    if (n.is_zero()) throw domain_error("inverse of zero (or zero-norm element with square radicand)");
    return QuadExt(x_ / n, -y_ / n, u_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inv(); }

std::string QuadExt::to_string() const {
    return x_.to_string() + " + " + y_.to_string() + "*sqrt(" + u_.to_string() + ")";
}

std::optional<QuadExt> is_square_in_quadratic_field(const QuadExt& e) {
    const BaseField& F = e.field();
    const Fq zero(F, 0);
    if (e.is_zero()) return QuadExt(zero, zero, e.u());
    if (e.u().is_square()) {
        // delegate: the "extension" is the base field
        Fq r = *e.u().sqrt();
        Fq val = e.x() + e.y() * r;
        if (auto s = val.sqrt()) return QuadExt(*s, zero, e.u());
        return std::nullopt;
    }
    if (e.in_base()) {
        // x = a^2 or x = u b^2
        if (auto s = e.x().sqrt()) return QuadExt(*s, zero, e.u());
        if (auto s = (e.x() / e.u()).sqrt()) return QuadExt(zero, *s, e.u());
        return std::nullopt;
    }
    // (a + b sqrt u)^2 = x + y sqrt u  =>  a^2 + u b^2 = x, 2ab = y.
    // a^2 is a root of T^2 - x T + u y^2 / 4, so x^2 - u y^2 must be square.
    auto d = e.norm().sqrt();
    if (!d) return std::nullopt;
    Fq half(F, 1, 2);
    for (int sign : {1, -1}) {
        Fq t0 = (e.x() + Fq(F, sign) * *d) * half;
        if (auto a = t0.sqrt()) {
            if (a->is_zero()) continue;
            Fq b = e.y() / (Fq(F, 2) * *a);
            QuadExt root(*a, b, e.u());
            if (root * root == e) return root;
        }
    }
    return std::nullopt;
}

} // namespace gd2
