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

#include "defrost/poly.hpp"

#include <utility>

namespace defrost {

poly::poly(const rational& constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

poly::poly(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

rational poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : rational(0);
}

rational poly::eval(const rational& at) const {
    rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * at + coeffs_[i];
    }
    return acc;
}

poly poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return poly();
    }
    std::vector<rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = rational(static_cast<long>(k)) * coeffs_[k];
    }
    return poly(std::move(d));
}

poly poly::compose(const poly& inner) const {
    poly acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * inner + poly(coeffs_[i]);
    }
    return acc;
}

poly poly::operator-() const {
    poly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

poly& poly::operator+=(const poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

poly& poly::operator-=(const poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return poly();
    }
    std::vector<rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return poly(std::move(prod));
}

poly& poly::operator*=(const rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

poly& poly::operator/=(const rational& s) {
    if (s.is_zero()) {
        throw division_by_zero();
    }
    for (auto& c : coeffs_) {
        c /= s;
    }
    return *this;
}

std::string poly::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += coeffs_[k].str();
    }
    out += "]";
    return out;
}

poly genfall_poly(const rational& lambda, unsigned n) {
    return genfall(poly::x(), lambda, n);
}

} // namespace defrost
