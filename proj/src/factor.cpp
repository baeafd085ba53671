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

#include "gd2/factor.hpp"

#include "gd2/errors.hpp"

namespace gd2 {

std::map<mpz_class, int> factor_integer(const mpz_class& n, std::int64_t bound) {
    std::map<mpz_class, int> out;
    mpz_class m = abs(n);
    if (m <= 1) return out;
    for (std::int64_t p = 2; p <= bound && mpz_class(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    }
    if (m == 1) return out;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
        ++out[m];
        return out;
    }
    // cofactor may be a square or cube of a prime beyond the bound
    for (int e : {2, 3}) {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), e) != 0 &&
            mpz_probab_prime_p(r.get_mpz_t(), 40)) {
            out[r] += e;
            return out;
        }
    }
    throw search_bound_error("factorization too hard: cofactor " + m.get_str() +
                             " exceeds trial-division bound " + std::to_string(bound));
}

mpz_class squarefree_part(const mpq_class& q, std::int64_t bound) {
    if (q == 0) throw domain_error("squarefree part of zero");
    // n/d is a square times n*d
    mpz_class nd = q.get_num() * q.get_den();
    auto fac = factor_integer(nd, bound);
    mpz_class s = nd < 0 ? -1 : 1;
    for (auto& [p, e] : fac)
        if (e % 2) s *= p;
    return s;
}

SquareClass SquareClass::of(const Fq& x, std::int64_t factor_bound) {
    if (x.is_zero()) throw domain_error("square class of zero");
    if (x.field().is_rationals())
        return SquareClass(x.field(), squarefree_part(x.rat(), factor_bound));
    std::int64_t p = x.field().p();
    bool sq = legendre_symbol(x.residue(), p) == 1;
    return SquareClass(x.field(), sq ? 1 : least_nonresidue(p));
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (field_ != o.field_) throw domain_error("mixed fields in square class product");
    if (field_.is_rationals())
        return SquareClass(field_, squarefree_part(mpq_class(rep_ * o.rep_)));
    Fq prod(field_, mpq_class(rep_ * o.rep_));
    return of(prod);
}

std::int64_t least_nonresidue(std::int64_t p) {
    for (std::int64_t n = 2;; ++n)
        if (legendre_symbol(n, p) == -1) return n;
}

} // namespace gd2
