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

#include <cctype>
#include <ostream>

namespace defrost {

rational::rational(long n, long d) {
    if (d == 0) {
        throw division_by_zero();
    }
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

rational rational::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num) || (has_den && !all_digits(den))) {
        throw parse_error("malformed rational: \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (has_den) {
        d = mpz_class(std::string(den), 10);
        if (sgn(d) == 0) {
            throw parse_error("zero denominator: \"" + std::string(text) + "\"");
        }
    }
    mpq_class q(n, d);
    q.canonicalize();
    if (!text.empty() && text.front() == '-') {
        q = -q;
    }
    return rational(std::move(q));
}

std::string rational::str() const {
    return v_.get_str();
}

rational rational::inverse() const {
    if (is_zero()) {
        throw division_by_zero();
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
    return rational(std::move(inv));
}

rational rational::operator-() const {
    return rational(mpq_class(-v_));
}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero()) {
        throw division_by_zero();
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.str();
}

rational pow(const rational& base, long exp) {
    if (exp < 0) {
        return pow(base.inverse(), -exp);
    }
    rational result(1);
    rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1UL;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

rational binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return rational(0);
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return rational(mpq_class(c));
}

rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(mpq_class(f));
}

} // namespace defrost
