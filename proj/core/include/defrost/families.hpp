/*
   Copyright 2026 The defrost authors

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

#pragma once

#include <vector>

#include "defrost/egf.hpp"
#include "defrost/poly.hpp"
#include "defrost/rational.hpp"

namespace defrost {

enum class family_kind {
    deg_frobenius_euler,
    deg_frobenius_euler_order_r,
    deg_bernoulli,
    deg_genocchi,
    classical_frobenius_euler,
};

/// Names a polynomial family together with its bound parameters. u is
/// meaningful for the Frobenius-Euler families (and fixed to -1 for the
/// Genocchi family); order is 1 except for the order-r family.
struct family_spec {
    family_kind kind = family_kind::deg_frobenius_euler;
    rational u = rational(0);
    rational lambda = rational(0);
    int order = 1;
};

/// Number sequence h_0..h_N of a family at x = 0, with its spec attached.
struct number_seq {
    family_spec spec;
    std::vector<rational> values;
};

// --- Recurrence path (the product API) ------------------------------------
//
// Every family is computed by a closed recurrence in exact arithmetic; the
// EGF path below recomputes the same objects independently.

/// Degenerate Frobenius-Euler numbers h_{n,lambda}(u) for n = 0..max_n,
/// from h_0 = 1 and h_n = -1/(1-u) * sum_{l<n} C(n,l) h_l (1|lambda)_{n-l}.
/// Throws u_equals_one when u = 1.
number_seq dfe_numbers(const rational& u, const rational& lambda, int max_n);

/// h_{n,lambda}(x|u) = sum_l C(n,l) h_{l,lambda}(u) (x|lambda)_{n-l}.
poly dfe_poly(int n, const rational& u, const rational& lambda);

/// Order-r numbers: the r-fold binomial convolution of the order-1 numbers.
number_seq dfe_higher_numbers(int r, const rational& u, const rational& lambda, int max_n);

/// Order-r polynomials, assembled like dfe_poly from the order-r numbers.
poly dfe_higher_poly(int n, int r, const rational& u, const rational& lambda);

/// Degenerate Bernoulli numbers beta_n(lambda): beta_0 = 1 and, for n >= 2,
/// sum_{m=1..n} C(n,m) (1|lambda)_m beta_{n-m} = 0 solved for beta_{n-1}.
number_seq deg_bernoulli_numbers(const rational& lambda, int max_n);

/// beta_n(x|lambda) = sum_l C(n,l) beta_{n-l}(lambda) (x|lambda)_l.
poly deg_bernoulli_poly(int n, const rational& lambda);

/// Degenerate Genocchi polynomials: g_0 = 0 and g_n = n * h_{n-1,lambda}(x|-1).
poly deg_genocchi_poly(int n, const rational& lambda);

/// Classical Frobenius-Euler polynomials H_n(x|u), by their own lambda-free
/// recurrence and monomial assembly (an independent realization of the
/// lambda -> 0 degeneration of dfe_poly).
poly classical_fe_poly(int n, const rational& u);

/// Classical numbers H_n(u).
number_seq classical_fe_numbers(const rational& u, int max_n);

/// Higher-order classical polynomials H^(r)_n(x|u).
poly classical_fe_higher_poly(int n, int r, const rational& u);

// --- EGF path (the independent oracle) -------------------------------------
//
// Series are built from the generating functions with egf_inv/egf_mul and
// never touch the recurrences above; entry n is the degree-n family member.

/// EGF whose entry n is h_{n,lambda}(x|u) as a polynomial.
egf_series<poly> dfe_egf(const rational& u, const rational& lambda, std::size_t order);

/// Scalar EGF of the numbers h_{n,lambda}(u) (the prefactor alone).
egf_series<rational> dfe_number_egf(const rational& u, const rational& lambda,
                                    std::size_t order);

/// Order-r polynomial EGF: the r-th power of the prefactor times the kernel.
egf_series<poly> dfe_higher_egf(int r, const rational& u, const rational& lambda,
                                std::size_t order);

/// EGF whose entry n is beta_n(x|lambda).
egf_series<poly> deg_bernoulli_egf(const rational& lambda, std::size_t order);

/// EGF whose entry n is g_{n,lambda}(x), via the factor 2t/((1+lambda t)^(1/lambda)+1).
egf_series<poly> deg_genocchi_egf(const rational& lambda, std::size_t order);

/// Entry n of dfe_egf: the series-extraction oracle for dfe_poly.
poly dfe_oracle(int n, const rational& u, const rational& lambda);

/// Scalar variant, extracting at a bound x instead of symbolically.
rational dfe_oracle(int n, const rational& u, const rational& lambda, const rational& x);

} // namespace defrost
