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

#include "defrost/egf.hpp"

#include <random>

#include "doctest.h"

using defrost::egf_binom_kernel;
using defrost::egf_compose_scaled_exp;
using defrost::egf_compose_scaled_log;
using defrost::egf_inv;
using defrost::egf_mul;
using defrost::egf_pow;
using defrost::egf_series;
using defrost::genfall;
using defrost::poly;
using defrost::rational;

namespace {

struct gen {
    std::mt19937 rng{20260808};

    rational small_rational(long lo = -8, long hi = 8) {
        std::uniform_int_distribution<long> num(lo, hi);
        std::uniform_int_distribution<long> den(1, 6);
        return rational(num(rng), den(rng));
    }

    egf_series<rational> random_series(std::size_t order, bool unit_constant = false) {
        egf_series<rational> s(order);
        for (std::size_t n = 0; n <= order; ++n) {
            s[n] = small_rational();
        }
        if (unit_constant) {
            while (s[0].is_zero()) {
                s[0] = small_rational();
            }
        }
        return s;
    }
};

} // namespace

TEST_CASE("binomial kernel entries are generalized falling factorials") {
    // e^t at lambda = 0.
    const auto e = egf_binom_kernel(rational(1), rational(0), 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(e[n] == rational(1));
    }
    // Symbolic ordinary falling factorial at lambda = 1.
    const auto sym = egf_binom_kernel(poly::x(), rational(1), 2);
    CHECK(sym[0] == poly(1));
    CHECK(sym[1] == poly::x());
    CHECK(sym[2] == poly::x() * (poly::x() - poly(1)));
    // Direct product 1 * (1 - 1/2) * (1 - 1) = 0 in the tail.
    const auto half = egf_binom_kernel(rational(1), rational(1, 2), 3);
    CHECK(half[0] == rational(1));
    CHECK(half[1] == rational(1));
    CHECK(half[2] == rational(1, 2));
    CHECK(half[3] == rational(0));
    // Kernel at lambda = 0 is the monomial EGF of e^(xt).
    const auto mono = egf_binom_kernel(rational(3, 2), rational(0), 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(mono[n] == defrost::pow(rational(3, 2), static_cast<long>(n)));
    }
}

TEST_CASE("egf_mul is the binomial convolution") {
    const auto e = egf_binom_kernel(rational(1), rational(0), 8);
    const auto e2 = egf_mul(e, e);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(e2[n] == defrost::pow(rational(2), static_cast<long>(n)));
    }

    gen g;
    const auto a = g.random_series(8);
    CHECK(egf_mul(a, egf_series<rational>::one(8)) == a);

    // kernel(x) * kernel(y) entry n equals sum_k C(n,k)(x|l)_k (y|l)_{n-k}.
    for (int i = 0; i < 10; ++i) {
        const rational x = g.small_rational();
        const rational y = g.small_rational();
        const rational lambda = g.small_rational();
        const auto prod = egf_mul(egf_binom_kernel(x, lambda, 6),
                                  egf_binom_kernel(y, lambda, 6));
        for (std::size_t n = 0; n <= 6; ++n) {
            rational expected(0);
            for (std::size_t k = 0; k <= n; ++k) {
                expected += defrost::binomial(n, k) * genfall(x, lambda, k) *
                            genfall(y, lambda, n - k);
            }
            CHECK(prod[n] == expected);
        }
    }
}

TEST_CASE("egf_mul is commutative and associative") {
    gen g;
    for (int i = 0; i < 20; ++i) {
        const auto a = g.random_series(12);
        const auto b = g.random_series(12);
        const auto c = g.random_series(12);
        CHECK(egf_mul(a, b) == egf_mul(b, a));
        CHECK(egf_mul(egf_mul(a, b), c) == egf_mul(a, egf_mul(b, c)));
    }
}

TEST_CASE("egf_inv") {
    const auto one = egf_series<rational>::one(5);
    CHECK(egf_inv(one) == one);

    // Reciprocal of e^t is e^{-t}.
    const auto e_inv = egf_inv(egf_binom_kernel(rational(1), rational(0), 6));
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(e_inv[n] == defrost::pow(rational(-1), static_cast<long>(n)));
    }

    gen g;
    for (int i = 0; i < 20; ++i) {
        const auto a = g.random_series(16, /*unit_constant=*/true);
        CHECK(egf_mul(a, egf_inv(a)) == egf_series<rational>::one(16));
        CHECK(egf_mul(egf_inv(a), a) == egf_series<rational>::one(16));
    }

    egf_series<rational> singular(4);
    singular[1] = rational(3);
    CHECK_THROWS_AS(egf_inv(singular), defrost::zero_constant_term);
}

TEST_CASE("egf_pow") {
    gen g;
    const auto a = g.random_series(12);
    CHECK(egf_pow(a, 1) == a);
    CHECK(egf_pow(a, 2) == egf_mul(a, a));
    CHECK_THROWS_AS(egf_pow(a, 0), defrost::bad_order);

    const auto e3 = egf_pow(egf_binom_kernel(rational(1), rational(0), 7), 3);
    for (std::size_t n = 0; n <= 7; ++n) {
        CHECK(e3[n] == defrost::pow(rational(3), static_cast<long>(n)));
    }
}

TEST_CASE("scaled exp composition") {
    const rational lambda(2, 5);

    // Constant series are fixed points.
    const auto one = egf_series<rational>::one(6);
    CHECK(egf_compose_scaled_exp(one, lambda, 6) == one);

    // Composing the identity series returns the inner series itself:
    // entries 0, 1, lambda, lambda^2, ...
    egf_series<rational> t(6);
    t[1] = rational(1);
    const auto composed = egf_compose_scaled_exp(t, lambda, 6);
    CHECK(composed[0] == rational(0));
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(composed[n] == defrost::pow(lambda, static_cast<long>(n - 1)));
    }

    CHECK_THROWS_AS(egf_compose_scaled_exp(t, rational(0), 6), defrost::lambda_zero);
    CHECK_THROWS_AS(egf_compose_scaled_log(t, rational(0), 6), defrost::lambda_zero);
}

TEST_CASE("composition with the identity series") {
    gen g;
    const auto a = g.random_series(8);
    egf_series<rational> t(8);
    t[1] = rational(1);
    // A(t) = A: the identity series is neutral as the inner operand.
    CHECK(defrost::egf_compose(a, t) == a);
    // Constant outer series are fixed points of the scaled-log substitution too.
    const auto one = egf_series<rational>::one(8);
    CHECK(egf_compose_scaled_log(one, rational(1, 3), 8) == one);
}

TEST_CASE("scaled exp and scaled log are compositional inverses") {
    gen g;
    for (int i = 0; i < 12; ++i) {
        const auto a = g.random_series(10);
        rational lambda = g.small_rational();
        while (lambda.is_zero()) {
            lambda = g.small_rational();
        }
        CHECK(egf_compose_scaled_log(egf_compose_scaled_exp(a, lambda, 10), lambda, 10) == a);
        CHECK(egf_compose_scaled_exp(egf_compose_scaled_log(a, lambda, 10), lambda, 10) == a);
    }
}

TEST_CASE("composition truncates to the smaller order") {
    gen g;
    const auto a = g.random_series(10);
    const auto full = egf_compose_scaled_exp(a, rational(1, 3), 10);
    const auto truncated = egf_compose_scaled_exp(a, rational(1, 3), 4);
    CHECK(truncated.order() == 4);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(truncated[n] == full[n]);
    }
}
