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

#include "defrost/families.hpp"

#include <cassert>
#include <cstddef>

namespace defrost {

namespace {

void require_u_not_one(const rational& u) {
    if (u.is_one()) {
        throw u_equals_one();
    }
}

void require_order(int r) {
    if (r < 1) {
        throw bad_order();
    }
}

/// (c_n) with c_n = sum_k C(n,k) a_k b_{n-k}.
std::vector<rational> binom_convolve(const std::vector<rational>& a,
                                     const std::vector<rational>& b) {
    std::vector<rational> c(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            c[n] += binomial(n, k) * a[k] * b[n - k];
        }
    }
    return c;
}

/// sum_l C(n,l) numbers_l * (x|lambda)_{n-l}: the shared assembly step from
/// numbers to the degree-n family polynomial.
poly assemble_genfall(const std::vector<rational>& numbers, const rational& lambda, int n) {
    poly out;
    for (int l = 0; l <= n; ++l) {
        out += binomial(n, l) * numbers[static_cast<std::size_t>(l)] *
               genfall_poly(lambda, static_cast<unsigned>(n - l));
    }
    return out;
}

/// (1|lambda)_k for k = 0..max_n, built incrementally.
std::vector<rational> genfall_at_one(const rational& lambda, int max_n) {
    std::vector<rational> gf(static_cast<std::size_t>(max_n) + 1);
    gf[0] = rational(1);
    for (int k = 1; k <= max_n; ++k) {
        gf[static_cast<std::size_t>(k)] =
            gf[static_cast<std::size_t>(k - 1)] *
            (rational(1) - rational(k - 1) * lambda);
    }
    return gf;
}

} // namespace

number_seq dfe_numbers(const rational& u, const rational& lambda, int max_n) {
    assert(max_n >= 0);
    require_u_not_one(u);
    const rational lead = rational(-1) / (rational(1) - u);
    const std::vector<rational> gf = genfall_at_one(lambda, max_n);
    std::vector<rational> h(static_cast<std::size_t>(max_n) + 1);
    h[0] = rational(1);
    for (int n = 1; n <= max_n; ++n) {
        rational acc(0);
        for (int l = 0; l < n; ++l) {
            acc += binomial(n, l) * h[static_cast<std::size_t>(l)] *
                   gf[static_cast<std::size_t>(n - l)];
        }
        h[static_cast<std::size_t>(n)] = lead * acc;
    }
    return {{family_kind::deg_frobenius_euler, u, lambda, 1}, std::move(h)};
}

poly dfe_poly(int n, const rational& u, const rational& lambda) {
    const number_seq h = dfe_numbers(u, lambda, n);
    return assemble_genfall(h.values, lambda, n);
}

number_seq dfe_higher_numbers(int r, const rational& u, const rational& lambda, int max_n) {
    require_order(r);
    require_u_not_one(u);
    const number_seq base = dfe_numbers(u, lambda, max_n);
    std::vector<rational> h = base.values;
    for (int i = 1; i < r; ++i) {
        h = binom_convolve(h, base.values);
    }
    return {{family_kind::deg_frobenius_euler_order_r, u, lambda, r}, std::move(h)};
}

poly dfe_higher_poly(int n, int r, const rational& u, const rational& lambda) {
    const number_seq h = dfe_higher_numbers(r, u, lambda, n);
    return assemble_genfall(h.values, lambda, n);
}

number_seq deg_bernoulli_numbers(const rational& lambda, int max_n) {
    assert(max_n >= 0);
    std::vector<rational> beta(static_cast<std::size_t>(max_n) + 1);
    beta[0] = rational(1);
    // Row n of the cross-multiplied generating identity:
    //   sum_{m=1..n} C(n,m) (1|lambda)_m beta_{n-m} = [n == 1].
    // Row 1 pins beta_0 = 1 (kept as a self-check against mis-indexing the
    // (1|lambda)_m factor); row n >= 2 is solved for beta_{n-1}, whose
    // coefficient is C(n,1) (1|lambda)_1 = n.
    const std::vector<rational> gf = genfall_at_one(lambda, max_n + 1);
    assert(binomial(1, 1) * gf[1] * beta[0] == rational(1));
    for (int n = 2; n <= max_n + 1; ++n) {
        rational acc(0);
        for (int m = 2; m <= n; ++m) {
            acc += binomial(n, m) * gf[static_cast<std::size_t>(m)] *
                   beta[static_cast<std::size_t>(n - m)];
        }
        beta[static_cast<std::size_t>(n - 1)] =
            -acc / rational(static_cast<long>(n));
    }
    return {{family_kind::deg_bernoulli, rational(0), lambda, 1}, std::move(beta)};
}

poly deg_bernoulli_poly(int n, const rational& lambda) {
    const number_seq beta = deg_bernoulli_numbers(lambda, n);
    return assemble_genfall(beta.values, lambda, n);
}

poly deg_genocchi_poly(int n, const rational& lambda) {
    if (n == 0) {
        return poly();
    }
    return rational(static_cast<long>(n)) * dfe_poly(n - 1, rational(-1), lambda);
}

number_seq classical_fe_numbers(const rational& u, int max_n) {
    assert(max_n >= 0);
    require_u_not_one(u);
    const rational lead = rational(-1) / (rational(1) - u);
    std::vector<rational> h(static_cast<std::size_t>(max_n) + 1);
    h[0] = rational(1);
    for (int n = 1; n <= max_n; ++n) {
        rational acc(0);
        for (int l = 0; l < n; ++l) {
            acc += binomial(n, l) * h[static_cast<std::size_t>(l)];
        }
        h[static_cast<std::size_t>(n)] = lead * acc;
    }
    return {{family_kind::classical_frobenius_euler, u, rational(0), 1}, std::move(h)};
}

namespace {

poly assemble_monomial(const std::vector<rational>& numbers, int n) {
    std::vector<rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        // coefficient of x^{n-l} is C(n,l) H_l
        coeffs[static_cast<std::size_t>(n - l)] =
            binomial(n, l) * numbers[static_cast<std::size_t>(l)];
    }
    return poly(std::move(coeffs));
}

} // namespace

poly classical_fe_poly(int n, const rational& u) {
    const number_seq h = classical_fe_numbers(u, n);
    return assemble_monomial(h.values, n);
}

poly classical_fe_higher_poly(int n, int r, const rational& u) {
    require_order(r);
    const number_seq base = classical_fe_numbers(u, n);
    std::vector<rational> h = base.values;
    for (int i = 1; i < r; ++i) {
        h = binom_convolve(h, base.values);
    }
    return assemble_monomial(h, n);
}

// --- EGF path ---------------------------------------------------------------

namespace {

/// Scalar EGF of (1+lambda t)^(1/lambda) - u: the denominator of the
/// generating kernel.
egf_series<rational> shifted_denominator(const rational& u, const rational& lambda,
                                         std::size_t order) {
    egf_series<rational> d = egf_binom_kernel(rational(1), lambda, order);
    d[0] -= u;
    return d;
}

} // namespace

egf_series<rational> dfe_number_egf(const rational& u, const rational& lambda,
                                    std::size_t order) {
    require_u_not_one(u);
    egf_series<rational> inv = egf_inv(shifted_denominator(u, lambda, order));
    const rational scale = rational(1) - u;
    for (std::size_t n = 0; n <= order; ++n) {
        inv[n] *= scale;
    }
    return inv;
}

egf_series<poly> dfe_egf(const rational& u, const rational& lambda, std::size_t order) {
    return egf_mul(dfe_number_egf(u, lambda, order),
                   egf_binom_kernel(poly::x(), lambda, order));
}

egf_series<poly> dfe_higher_egf(int r, const rational& u, const rational& lambda,
                                std::size_t order) {
    require_order(r);
    return egf_mul(egf_pow(dfe_number_egf(u, lambda, order), r),
                   egf_binom_kernel(poly::x(), lambda, order));
}

egf_series<poly> deg_bernoulli_egf(const rational& lambda, std::size_t order) {
    // t/((1+lambda t)^(1/lambda) - 1) is the inverse of the series with
    // entries (1|lambda)_{n+1}/(n+1), which has constant term 1.
    const std::vector<rational> gf = genfall_at_one(lambda, static_cast<int>(order) + 1);
    egf_series<rational> f(order);
    for (std::size_t n = 0; n <= order; ++n) {
        f[n] = gf[n + 1] / rational(static_cast<long>(n + 1));
    }
    return egf_mul(egf_inv(f), egf_binom_kernel(poly::x(), lambda, order));
}

egf_series<poly> deg_genocchi_egf(const rational& lambda, std::size_t order) {
    egf_series<rational> t(order);
    if (order >= 1) {
        t[1] = rational(1);
    }
    return egf_mul(t, dfe_egf(rational(-1), lambda, order));
}

poly dfe_oracle(int n, const rational& u, const rational& lambda) {
    return dfe_egf(u, lambda, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

rational dfe_oracle(int n, const rational& u, const rational& lambda, const rational& x) {
    const auto series = egf_mul(dfe_number_egf(u, lambda, static_cast<std::size_t>(n)),
                                egf_binom_kernel(x, lambda, static_cast<std::size_t>(n)));
    return series[static_cast<std::size_t>(n)];
}

} // namespace defrost
