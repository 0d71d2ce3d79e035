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

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "defrost/errors.hpp"

namespace defrost {

/// Arbitrary-precision rational scalar. Always kept in canonical form:
/// denominator > 0 and gcd(|num|, den) = 1, so equality is structural.
class rational {
public:
    rational() : v_(0) {}
    rational(long n) : v_(n) {} // NOLINT: implicit by design
    rational(int n) : v_(static_cast<long>(n)) {}

    /// n/d, canonicalized. Throws division_by_zero when d = 0.
    rational(long n, long d);

    /// Strict text form: optional '-', digits, optionally '/' and digits
    /// with a positive denominator ("-3/5", "7", "0"). Anything else,
    /// including "3/0", throws parse_error.
    static rational parse(std::string_view text);

    /// Canonical text: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    rational inverse() const;

    rational operator-() const;

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { a += b; return a; }
    friend rational operator-(rational a, const rational& b) { a -= b; return a; }
    friend rational operator*(rational a, const rational& b) { a *= b; return a; }
    friend rational operator/(rational a, const rational& b) { a /= b; return a; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const rational& r);
    friend rational binomial(unsigned long n, unsigned long k);
    friend rational factorial(unsigned long n);

private:
    explicit rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// b^e for any integer e; negative e inverts first (throws on b = 0).
rational pow(const rational& base, long exp);

/// C(n, k) as an exact rational (integer-valued). Zero when k > n.
rational binomial(unsigned long n, unsigned long k);

/// n! as an exact rational (integer-valued).
rational factorial(unsigned long n);

} // namespace defrost
