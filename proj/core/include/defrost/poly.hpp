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

#include <span>
#include <string>
#include <vector>

#include "defrost/rational.hpp"

namespace defrost {

/// Dense univariate polynomial in x over exact rationals. Coefficients are
/// stored ascending by power and kept trimmed: the zero polynomial is the
/// empty sequence, so equality is structural.
class poly {
public:
    poly() = default;
    poly(const rational& constant);       // NOLINT: implicit by design
    poly(long constant) : poly(rational(constant)) {}
    poly(int constant) : poly(rational(constant)) {}
    explicit poly(std::vector<rational> coeffs);

    /// The variable x.
    static poly x() { return poly(std::vector<rational>{rational(0), rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Highest power with a nonzero coefficient; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the degree).
    rational coeff(std::size_t k) const;

    std::span<const rational> coefficients() const { return coeffs_; }

    rational eval(const rational& at) const;

    poly derivative() const;

    /// p(q(x)) by Horner's rule, exact.
    poly compose(const poly& inner) const;

    poly operator-() const;

    poly& operator+=(const poly& o);
    poly& operator-=(const poly& o);
    poly& operator*=(const poly& o) { *this = *this * o; return *this; }
    poly& operator*=(const rational& s);
    poly& operator/=(const rational& s);

    friend poly operator+(poly a, const poly& b) { a += b; return a; }
    friend poly operator-(poly a, const poly& b) { a -= b; return a; }
    friend poly operator*(const poly& a, const poly& b);
    friend poly operator*(poly p, const rational& s) { p *= s; return p; }
    friend poly operator*(const rational& s, poly p) { p *= s; return p; }
    friend poly operator/(poly p, const rational& s) { p /= s; return p; }

    friend bool operator==(const poly& a, const poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    /// Bracketed coefficient list, ascending powers: "[1, -1/2]"; "[]" is zero.
    std::string str() const;

private:
    void trim();

    std::vector<rational> coeffs_;
};

/// Generalized falling factorial (x|lambda)_n = x(x-lambda)...(x-(n-1)lambda),
/// with the empty product equal to 1. Works over any ring element that
/// supports subtraction of a rational and multiplication.
template <typename T>
T genfall(const T& x, const rational& lambda, unsigned n) {
    T acc(1);
    for (unsigned j = 0; j < n; ++j) {
        acc = acc * (x - T(rational(static_cast<long>(j)) * lambda));
    }
    return acc;
}

/// (x|lambda)_n with x the symbolic variable; degree-n monic polynomial.
poly genfall_poly(const rational& lambda, unsigned n);

} // namespace defrost
