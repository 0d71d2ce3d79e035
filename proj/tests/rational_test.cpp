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

#include "defrost/rational.hpp"

#include <random>

#include "doctest.h"

using defrost::rational;

TEST_CASE("construction canonicalizes") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(0, 7) == rational(0));
    CHECK(rational(0, -7).str() == "0");
    CHECK_THROWS_AS(rational(1, 0), defrost::division_by_zero);
}

TEST_CASE("parse accepts the strict text grammar") {
    CHECK(rational::parse("-3/5") == rational(-3, 5));
    CHECK(rational::parse("7") == rational(7));
    CHECK(rational::parse("0") == rational(0));
    CHECK(rational::parse("-0") == rational(0));
    CHECK(rational::parse("007") == rational(7));
    CHECK(rational::parse("2/4") == rational(1, 2));

    for (const char* bad : {"", "-", "3/", "/5", "3/-5", "+3", "1.5", " 1", "1 ",
                            "3//5", "a", "--3", "1/+2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(rational::parse(bad), defrost::parse_error);
    }
    CHECK_THROWS_AS(rational::parse("3/0"), defrost::parse_error);
}

TEST_CASE("str is canonical and round-trips") {
    CHECK(rational(1, 2).str() == "1/2");
    CHECK(rational(-3, 5).str() == "-3/5");
    CHECK(rational(7).str() == "7");
    CHECK(rational(4, 2).str() == "2");

    std::mt19937 rng(20260808);
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 200);
    for (int i = 0; i < 200; ++i) {
        const rational r(num(rng), den(rng));
        CHECK(rational::parse(r.str()) == r);
    }
}

TEST_CASE("field arithmetic") {
    const rational a(3, 4);
    const rational b(-2, 3);
    CHECK(a + b == rational(1, 12));
    CHECK(a - b == rational(17, 12));
    CHECK(a * b == rational(-1, 2));
    CHECK(a / b == rational(-9, 8));
    CHECK(-a == rational(-3, 4));
    CHECK(a.inverse() == rational(4, 3));
    CHECK_THROWS_AS(rational(0).inverse(), defrost::division_by_zero);
    CHECK_THROWS_AS(a / rational(0), defrost::division_by_zero);
}

TEST_CASE("comparisons order by value") {
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < rational(-1, 3));
    CHECK(rational(2, 4) <= rational(1, 2));
    CHECK(rational(5) > rational(9, 2));
}

TEST_CASE("pow handles negative exponents and 0^0") {
    CHECK(defrost::pow(rational(2, 3), 3) == rational(8, 27));
    CHECK(defrost::pow(rational(2, 3), 0) == rational(1));
    CHECK(defrost::pow(rational(0), 0) == rational(1));
    CHECK(defrost::pow(rational(2), -2) == rational(1, 4));
    CHECK_THROWS_AS(defrost::pow(rational(0), -1), defrost::division_by_zero);
}

TEST_CASE("binomial and factorial") {
    CHECK(defrost::binomial(0, 0) == rational(1));
    CHECK(defrost::binomial(6, 2) == rational(15));
    CHECK(defrost::binomial(5, 7) == rational(0));
    // Pascal rule on a patch of the triangle.
    for (unsigned long n = 1; n <= 20; ++n) {
        for (unsigned long k = 1; k <= n; ++k) {
            CHECK(defrost::binomial(n, k) ==
                  defrost::binomial(n - 1, k - 1) + defrost::binomial(n - 1, k));
        }
    }
    CHECK(defrost::factorial(0) == rational(1));
    CHECK(defrost::factorial(6) == rational(720));
}
