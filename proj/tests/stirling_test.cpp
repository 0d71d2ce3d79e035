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

#include "defrost/stirling.hpp"

#include <cstddef>
#include <random>
#include <vector>

#include "defrost/egf.hpp"
#include "defrost/families.hpp"
#include "doctest.h"

using defrost::genfall_expand;
using defrost::genfall_poly;
using defrost::poly;
using defrost::rational;
using defrost::s1;
using defrost::s1_transform;
using defrost::s2;
using defrost::s2_transform;
using defrost::stirling_table;

namespace {

/// Brute-force count of partitions of an n-set into exactly k nonempty
/// blocks, by recursing on where element n goes.
long partition_count(long n, long k) {
    if (n == 0 && k == 0) {
        return 1;
    }
    if (n == 0 || k == 0 || k > n) {
        return 0;
    }
    return partition_count(n - 1, k - 1) + k * partition_count(n - 1, k);
}

/// Second-kind values by full enumeration of block assignments, independent
/// of any recurrence: count surjections onto k labelled blocks, then divide
/// by k! via inclusion of assignment vectors with exactly k distinct values.
long enumerate_partitions(int n, int k) {
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    long count = 0;
    while (true) {
        // Restricted growth strings enumerate set partitions exactly once.
        bool valid = true;
        int max_seen = -1;
        for (int i = 0; i < n; ++i) {
            if (block[static_cast<std::size_t>(i)] > max_seen + 1) {
                valid = false;
                break;
            }
            max_seen = std::max(max_seen, block[static_cast<std::size_t>(i)]);
        }
        if (valid && max_seen == k - 1) {
            ++count;
        }
        int pos = n - 1;
        while (pos >= 0 && block[static_cast<std::size_t>(pos)] == n - 1) {
            block[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++block[static_cast<std::size_t>(pos)];
    }
    return count;
}

rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    return rational(num(rng), den(rng));
}

poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
        c.push_back(random_rational(rng));
    }
    return poly(std::move(c));
}

} // namespace

TEST_CASE("triangle corner values") {
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(s1(n, n) == rational(1));
        CHECK(s2(n, n) == rational(1));
        if (n >= 1) {
            CHECK(s1(n, 0) == rational(0));
            CHECK(s2(n, 0) == rational(0));
        }
    }
    // (x)_3 = x^3 - 3x^2 + 2x.
    CHECK(s1(3, 1) == rational(2));
    CHECK(s1(3, 2) == rational(-3));
    CHECK(s2(3, 2) == rational(3));
}

TEST_CASE("second kind matches set-partition enumeration") {
    CHECK(enumerate_partitions(3, 2) == 3);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(s2(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) ==
                  rational(enumerate_partitions(n, k)));
        }
    }
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(s2(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) ==
                  rational(partition_count(n, k)));
        }
    }
}

TEST_CASE("first kind expands the ordinary falling factorial") {
    // (x)_n = sum_l S1(n,l) x^l, checked against the direct product.
    for (unsigned n = 0; n <= 10; ++n) {
        const poly direct = genfall_poly(rational(1), n);
        for (std::size_t l = 0; l <= n; ++l) {
            CHECK(direct.coeff(l) == s1(n, l));
        }
    }
}

TEST_CASE("index errors") {
    CHECK_THROWS_AS(s1(3, 4), defrost::index_out_of_triangle);
    CHECK_THROWS_AS(s2(2, 5), defrost::index_out_of_triangle);
    const stirling_table t(stirling_table::kind::second, 4);
    CHECK_THROWS_AS(t.at(5, 0), defrost::index_out_of_triangle);
    CHECK_THROWS_AS(t.at(2, 3), defrost::index_out_of_triangle);
}

TEST_CASE("inverse pair identity") {
    // sum_k S1(n,k) S2(k,m) = [n == m], and with the kinds swapped.
    const std::size_t N = 16;
    const stirling_table first(stirling_table::kind::first_signed, N);
    const stirling_table second(stirling_table::kind::second, N);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            rational a(0);
            rational b(0);
            for (std::size_t k = m; k <= n; ++k) {
                a += first.at(n, k) * second.at(k, m);
                b += second.at(n, k) * first.at(k, m);
            }
            const rational expected = n == m ? rational(1) : rational(0);
            CHECK(a == expected);
            CHECK(b == expected);
        }
    }
}

TEST_CASE("genfall_expand") {
    CHECK(genfall_expand(0, rational(7, 2)) == poly(1));
    // lambda = 1, n = 3: x^3 - 3x^2 + 2x.
    CHECK(genfall_expand(3, rational(1)) ==
          poly(std::vector<rational>{rational(0), rational(2), rational(-3), rational(1)}));
    // lambda = 0 collapses to the monomial.
    CHECK(genfall_expand(4, rational(0)) == genfall_poly(rational(0), 4));

    std::mt19937 rng(20260808);
    for (int i = 0; i < 15; ++i) {
        const rational lambda = random_rational(rng);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(genfall_expand(n, lambda) == genfall_poly(lambda, n));
        }
    }
}

TEST_CASE("lambda-weighted transforms are mutually inverse") {
    std::mt19937 rng(20260808);
    for (int i = 0; i < 10; ++i) {
        const rational lambda = random_rational(rng);
        std::vector<poly> seq;
        for (int m = 0; m <= 12; ++m) {
            seq.push_back(random_poly(rng));
        }
        CHECK(s1_transform<poly>(s2_transform<poly>(seq, lambda), lambda) == seq);
        CHECK(s2_transform<poly>(s1_transform<poly>(seq, lambda), lambda) == seq);
    }
}

TEST_CASE("lambda zero transforms are the identity") {
    std::mt19937 rng(20260808);
    std::vector<poly> seq;
    for (int m = 0; m <= 8; ++m) {
        seq.push_back(random_poly(rng));
    }
    CHECK(s2_transform<poly>(seq, rational(0)) == seq);
    CHECK(s1_transform<poly>(seq, rational(0)) == seq);
    // S2(1,0) = 0, so index 1 passes through untouched for any lambda.
    CHECK(s2_transform<poly>(seq, rational(5, 3))[1] == seq[1]);
}

TEST_CASE("degenerate to classical and back, end to end") {
    // Transforming the degenerate family yields the classical family...
    {
        const rational u(2);
        const rational lambda(1, 2);
        std::vector<poly> h;
        for (int n = 0; n <= 12; ++n) {
            h.push_back(defrost::dfe_poly(n, u, lambda));
        }
        const auto transformed = s2_transform<poly>(h, lambda);
        for (int m = 0; m <= 12; ++m) {
            CHECK(transformed[static_cast<std::size_t>(m)] ==
                  defrost::classical_fe_poly(m, u));
        }
    }
    // ...and the classical family maps back to the degenerate one.
    {
        const rational u(-3);
        const rational lambda(1, 3);
        std::vector<poly> H;
        for (int n = 0; n <= 12; ++n) {
            H.push_back(defrost::classical_fe_poly(n, u));
        }
        const auto transformed = s1_transform<poly>(H, lambda);
        for (int m = 0; m <= 12; ++m) {
            CHECK(transformed[static_cast<std::size_t>(m)] ==
                  defrost::dfe_poly(m, u, lambda));
        }
    }
}

TEST_CASE("transform agrees with the scaled-exp composition") {
    // Two realizations of the same substitution: the S2 lambda-transform of
    // the family sequence, and composing the family EGF with (e^(lt)-1)/l.
    const rational u(1, 2);
    const rational lambda(-2, 3);
    std::vector<poly> h;
    for (int n = 0; n <= 10; ++n) {
        h.push_back(defrost::dfe_poly(n, u, lambda));
    }
    const auto transformed = s2_transform<poly>(h, lambda);
    const auto composed =
        egf_compose_scaled_exp(defrost::dfe_egf(u, lambda, 10), lambda, 10);
    for (std::size_t m = 0; m <= 10; ++m) {
        CHECK(transformed[m] == composed[m]);
    }
}
