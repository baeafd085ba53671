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

#include "gd2/modular.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace gd2 {

namespace {

#include "j_series_table.inc"

constexpr double kPi = std::numbers::pi;

void check_domain(const UpperHalfPoint& tau) {
    if (!(tau.im > 0)) throw domain_error("tau must lie in the upper half plane");
    if (tau.im < 0.05) throw domain_error("im(tau) < 0.05: series truncation unreliable");
}

} // namespace

UpperHalfPoint UpperHalfPoint::parse(const std::string& text) {
    // forms: "a+bi", "a-bi", "bi", "a" (a, b decimal)
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw parse_error("empty tau");
    if (s.back() != 'i') {
        try {
            return UpperHalfPoint{std::stod(s), 0.0};
        } catch (...) {
            throw parse_error("cannot parse tau '" + text + "'");
        }
    }
    s.pop_back(); // drop 'i'
    // split at the last '+' or '-' that is not an exponent sign or leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    try {
        if (split == std::string::npos) {
            std::string bs = s.empty() || s == "+" ? "1" : (s == "-" ? "-1" : s);
            return UpperHalfPoint{0.0, std::stod(bs)};
        }
        double re = std::stod(s.substr(0, split));
        std::string bs = s.substr(split);
        if (bs == "+") bs = "1";
        else if (bs == "-") bs = "-1";
        return UpperHalfPoint{re, std::stod(bs)};
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        throw parse_error("cannot parse tau '" + text + "'");
    }
}

Complex dedekind_eta(const UpperHalfPoint& tau, int n_terms) {
    check_domain(tau);
    Complex q = std::exp(Complex(0, 2 * kPi) * tau.value());
    Complex q24 = std::exp(Complex(0, 2 * kPi / 24) * tau.value());
    Complex prod = 1.0;
    Complex qn = 1.0;
    for (int n = 1; n <= n_terms; ++n) {
        qn *= q;
        prod *= (1.0 - qn);
    }
    return q24 * prod;
}

Complex modular_j(const UpperHalfPoint& tau, int n_terms) {
    check_domain(tau);
    Complex q = std::exp(Complex(0, 2 * kPi) * tau.value());
    int terms = std::min(n_terms + 2, kJSeriesLen);
    // j = q^-1 + 744 + 196884 q + ... ; kJSeriesCoeff[n] multiplies q^(n-1)
    Complex acc = 0.0;
    Complex qpow = 1.0 / q;
    for (int n = 0; n < terms; ++n) {
        acc += kJSeriesCoeff[n] * qpow;
        qpow *= q;
    }
    return acc;
}

Complex hauptmodul_h0(const UpperHalfPoint& tau, int N, int n_terms) {
    if (N != 2 && N != 3) throw domain_error("N must be 2 or 3");
    check_domain(tau);
    UpperHalfPoint Ntau{N * tau.re, N * tau.im};
    Complex e1 = dedekind_eta(tau, n_terms), eN = dedekind_eta(Ntau, n_terms);
    int e = N == 2 ? 24 : 12;
    double C = N == 2 ? 4096.0 : 729.0;
    Complex r = std::pow(e1 / eN, e);
    return r + C / r;
}

Complex hauptmodul_h(const UpperHalfPoint& tau, int N, int n_terms) {
    Complex h0 = hauptmodul_h0(tau, N, n_terms);
    double shift = N == 2 ? 104.0 : 42.0;
    double pole = N == 2 ? 152.0 : 66.0;
    if (std::abs(h0 - pole) < 1e-9) throw domain_error("tau is at a pole of h");
    return (h0 + shift) / (4.0 * (h0 - pole));
}

namespace {

/// Formula pair (j1, j2) from h for a fixed branch of sqrt(h).
std::pair<Complex, Complex> j_pair_from_h(Complex sqrt_h, int N) {
    Complex one = 1.0;
    if (N == 2) {
        Complex a = 64.0 * std::pow(3.0 + 10.0 * sqrt_h, 3) /
                    ((one + 2.0 * sqrt_h) * std::pow(one - 2.0 * sqrt_h, 2));
        Complex b = 64.0 * std::pow(3.0 - 10.0 * sqrt_h, 3) /
                    ((one - 2.0 * sqrt_h) * std::pow(one + 2.0 * sqrt_h, 2));
        return {a, b};
    }
    Complex a = 6912.0 * std::pow(2.0 + 5.0 * sqrt_h, 3) * (-sqrt_h) /
                ((one + 2.0 * sqrt_h) * std::pow(one - 2.0 * sqrt_h, 3));
    Complex b = 6912.0 * std::pow(2.0 - 5.0 * sqrt_h, 3) * (sqrt_h) /
                ((one - 2.0 * sqrt_h) * std::pow(one + 2.0 * sqrt_h, 3));
    return {a, b};
}

double scaled_err(Complex want, Complex got) {
    return std::abs(want - got) / std::max({1.0, std::abs(want), std::abs(got)});
}

} // namespace

QcurveIdentityReport verify_qcurve_identity(const UpperHalfPoint& tau, int N, double tol,
                                            int n_terms) {
    if (N != 2 && N != 3) throw domain_error("N must be 2 or 3");
    QcurveIdentityReport rep{};
    rep.j_tau = modular_j(tau, n_terms);
    UpperHalfPoint Ntau{N * tau.re, N * tau.im};
    rep.j_Ntau = modular_j(Ntau, n_terms);
    rep.h = hauptmodul_h(tau, N, n_terms);
    if (std::abs(rep.h) < 1e-9 || std::abs(rep.h - 0.25) < 1e-9)
        throw domain_error("h at an excluded value (0 or 1/4)");

    double best = std::numeric_limits<double>::infinity();
    double best_abs = best;
    for (int branch : {0, 1}) {
        Complex sq = std::sqrt(rep.h);
        if (branch) sq = -sq;
        auto [a, b] = j_pair_from_h(sq, N);
        for (int order : {0, 1}) {
            Complex ja = order ? b : a, jb = order ? a : b;
            double err = std::max(scaled_err(rep.j_tau, ja), scaled_err(rep.j_Ntau, jb));
            if (err < best) {
                best = err;
                best_abs = std::max(std::abs(rep.j_tau - ja), std::abs(rep.j_Ntau - jb));
            }
        }
    }
    rep.max_error = best;
    rep.max_abs_error = best_abs;
    rep.pass = best <= tol;
    return rep;
}

} // namespace gd2
