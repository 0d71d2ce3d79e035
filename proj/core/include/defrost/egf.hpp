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

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "defrost/poly.hpp"
#include "defrost/rational.hpp"

namespace defrost {

/// Truncated exponential generating function: entry n holds n! * [t^n] of
/// the represented series, for n = 0..order. With this normalization the
/// product of two series is the binomial convolution of their entries.
/// The entry type T is either rational (scalar series) or poly.
template <typename T>
class egf_series {
public:
    explicit egf_series(std::size_t order) : entries_(order + 1) {}

    static egf_series one(std::size_t order) {
        egf_series s(order);
        s.entries_[0] = T(1);
        return s;
    }

    std::size_t order() const { return entries_.size() - 1; }

    const T& operator[](std::size_t n) const { return entries_[n]; }
    T& operator[](std::size_t n) { return entries_[n]; }

    friend bool operator==(const egf_series& a, const egf_series& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<T> entries_;
};

/// EGF of (1 + lambda*t)^(x/lambda): entry m is (x|lambda)_m. At lambda = 0
/// this is the EGF of e^(xt) with entries x^m. x may be a rational or a poly.
template <typename T>
egf_series<T> egf_binom_kernel(const T& x, const rational& lambda, std::size_t order) {
    egf_series<T> s(order);
    T acc(1);
    s[0] = acc;
    for (std::size_t m = 1; m <= order; ++m) {
        acc = acc * (x - T(rational(static_cast<long>(m - 1)) * lambda));
        s[m] = acc;
    }
    return s;
}

/// Binomial convolution, truncated to the smaller operand order.
template <typename A, typename B>
auto egf_mul(const egf_series<A>& a, const egf_series<B>& b) {
    using R = decltype(std::declval<const A&>() * std::declval<const B&>());
    const std::size_t order = std::min(a.order(), b.order());
    egf_series<R> out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        R acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            acc += binomial(n, k) * (a[k] * b[n - k]);
        }
        out[n] = std::move(acc);
    }
    return out;
}

/// Multiplicative inverse of a scalar series, by the triangular recurrence
/// b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} C(n,k) a_k b_{n-k}.
/// Throws zero_constant_term when a_0 = 0.
inline egf_series<rational> egf_inv(const egf_series<rational>& a) {
    if (a[0].is_zero()) {
        throw zero_constant_term();
    }
    const rational a0_inv = a[0].inverse();
    egf_series<rational> b(a.order());
    b[0] = a0_inv;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc += binomial(n, k) * a[k] * b[n - k];
        }
        b[n] = -a0_inv * acc;
    }
    return b;
}

/// r-fold product of a with itself, r >= 1.
template <typename T>
egf_series<T> egf_pow(const egf_series<T>& a, int r) {
    if (r < 1) {
        throw bad_order();
    }
    egf_series<T> out = a;
    for (int i = 1; i < r; ++i) {
        out = egf_mul(out, a);
    }
    return out;
}

/// Composition A(g(t)) for a scalar inner series with zero constant term,
/// by Horner evaluation of the outer series in the inner one. Entries up to
/// the common truncation order are exact.
template <typename T>
egf_series<T> egf_compose(const egf_series<T>& outer, const egf_series<rational>& inner) {
    const std::size_t order = std::min(outer.order(), inner.order());
    egf_series<T> acc(order);
    for (std::size_t i = order + 1; i-- > 0;) {
        acc = egf_mul(acc, inner);
        acc[0] += outer[i] / factorial(i);
    }
    return acc;
}

namespace detail {

/// EGF of (e^(lambda*t) - 1)/lambda: entries 0, then lambda^(n-1).
inline egf_series<rational> scaled_exp_minus_one(const rational& lambda, std::size_t order) {
    egf_series<rational> g(order);
    rational p(1);
    for (std::size_t n = 1; n <= order; ++n) {
        g[n] = p;
        p *= lambda;
    }
    return g;
}

/// EGF of log(1 + lambda*t)/lambda: entries 0, then (-1)^(n-1) (n-1)! lambda^(n-1).
inline egf_series<rational> scaled_log(const rational& lambda, std::size_t order) {
    egf_series<rational> g(order);
    rational p(1);
    for (std::size_t n = 1; n <= order; ++n) {
        g[n] = factorial(n - 1) * p;
        p *= -lambda;
    }
    return g;
}

} // namespace detail

/// A((e^(lambda*t) - 1)/lambda). Throws lambda_zero when lambda = 0.
template <typename T>
egf_series<T> egf_compose_scaled_exp(const egf_series<T>& a, const rational& lambda,
                                     std::size_t order) {
    if (lambda.is_zero()) {
        throw lambda_zero();
    }
    return egf_compose(a, detail::scaled_exp_minus_one(lambda, std::min(order, a.order())));
}

/// A(log(1 + lambda*t)/lambda), the compositional inverse of the scaled
/// exponential substitution. Throws lambda_zero when lambda = 0.
template <typename T>
egf_series<T> egf_compose_scaled_log(const egf_series<T>& a, const rational& lambda,
                                     std::size_t order) {
    if (lambda.is_zero()) {
        throw lambda_zero();
    }
    return egf_compose(a, detail::scaled_log(lambda, std::min(order, a.order())));
}

} // namespace defrost
