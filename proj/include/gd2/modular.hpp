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

#ifndef GD2_MODULAR_HPP
#define GD2_MODULAR_HPP

#include <complex>
#include <string>

#include "gd2/errors.hpp"

namespace gd2 {

using Complex = std::complex<double>;

/// Point tau of the upper half plane. Evaluation accuracy at the default
/// truncation (64 terms) is far below 1e-10 for im(tau) >= 0.5.
struct UpperHalfPoint {
    double re = 0.0;
    double im = 1.0;

    Complex value() const { return {re, im}; }
    static UpperHalfPoint parse(const std::string& text); // "a+bi"
};

/// Dedekind eta function, q^(1/24) prod (1 - q^n) truncated at n_terms.
Complex dedekind_eta(const UpperHalfPoint& tau, int n_terms = 64);

/// Elliptic modular function j via its q-expansion (coefficients tabulated to
/// order 128; n_terms caps at the table length).
Complex modular_j(const UpperHalfPoint& tau, int n_terms = 64);

/// Eta-quotient hauptmodul data for X*(N), N in {2, 3}:
///   h0 = (eta(tau)/eta(Ntau))^e + C (eta(Ntau)/eta(tau))^e,
///       with (e, C) = (24, 2^12) for N = 2, (12, 3^6) for N = 3;
///   h  = (h0 + 104)/(4(h0 - 152)) for N = 2, (h0 + 42)/(4(h0 - 66)) for N = 3.
Complex hauptmodul_h0(const UpperHalfPoint& tau, int N, int n_terms = 64);
Complex hauptmodul_h(const UpperHalfPoint& tau, int N, int n_terms = 64);

struct QcurveIdentityReport {
    Complex j_tau, j_Ntau; // from the q-expansion
    Complex h;             // hauptmodul value
    double max_error;      // best-match deviation, normalized by max(1, |j|)
    double max_abs_error;  // raw absolute deviation of the same match
    bool pass;
};

/// Numerically verify that (j(tau), j(N tau)) matches the rational
/// parametrization by h:
///   N=2: 2^6 (3 +- 10 sqrt h)^3 / ((1 +- 2 sqrt h)(1 -+ 2 sqrt h)^2)
///   N=3: 2^8 3^3 (2 +- 5 sqrt h)^3 (-+ sqrt h) / ((1 +- 2 sqrt h)(1 -+ 2 sqrt h)^3)
/// Both square-root branches and both orderings are tried; the report carries
/// the best match. Deviations are normalized by max(1, |j|) since j grows like
/// 1/|q| while doubles carry ~16 significant digits.
QcurveIdentityReport verify_qcurve_identity(const UpperHalfPoint& tau, int N, double tol = 1e-6,
                                            int n_terms = 64);

} // namespace gd2

#endif
