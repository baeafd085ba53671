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

#ifndef GD2_QUADEXT_HPP
#define GD2_QUADEXT_HPP

#include <optional>
#include <string>

#include "gd2/field.hpp"

namespace gd2 {

/// x + y*sqrt(u) in k(sqrt u). The radicand u is carried by the element;
/// mixing radicands in arithmetic is an error.
class QuadExt {
public:
    QuadExt(Fq x, Fq y, Fq u) : x_(std::move(x)), y_(std::move(y)), u_(std::move(u)) {}

    static QuadExt from_base(const Fq& x, const Fq& u) { return QuadExt(x, Fq(x.field(), 0), u); }

    const Fq& x() const { return x_; }
    const Fq& y() const { return y_; }
    const Fq& u() const { return u_; }
    const BaseField& field() const { return x_.field(); }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool in_base() const { return y_.is_zero(); }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt operator-() const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt conj() const { return QuadExt(x_, -y_, u_); }
    /// x^2 - u y^2
    Fq norm() const { return x_ * x_ - u_ * y_ * y_; }
    QuadExt inv() const;

    std::string to_string() const;

private:
    void check(const QuadExt& o) const;
    Fq x_, y_, u_;
};

/// A square root of e in k(sqrt u) when one exists. Splits on whether e lies
/// in the base field; for y != 0 the criterion is that the norm x^2 - u y^2
/// is a square d^2 in k and one of (x +- d)/2 is a square in k.
std::optional<QuadExt> is_square_in_quadratic_field(const QuadExt& e);

} // namespace gd2

#endif
