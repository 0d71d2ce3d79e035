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

namespace defrost {

stirling_table::stirling_table(kind which, std::size_t max_n) : kind_(which) {
    rows_.resize(max_n + 1);
    rows_[0] = {rational(1)};
    for (std::size_t n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, rational(0));
        for (std::size_t k = 1; k <= n; ++k) {
            const rational& carry = rows_[n - 1][k - 1];
            const rational same = k < n ? rows_[n - 1][k] : rational(0);
            if (kind_ == kind::first_signed) {
                // S1(n,k) = S1(n-1,k-1) - (n-1) S1(n-1,k)
                rows_[n][k] = carry - rational(static_cast<long>(n - 1)) * same;
            } else {
                // S2(n,k) = S2(n-1,k-1) + k S2(n-1,k)
                rows_[n][k] = carry + rational(static_cast<long>(k)) * same;
            }
        }
    }
}

const rational& stirling_table::at(std::size_t n, std::size_t k) const {
    if (n >= rows_.size() || k > n) {
        throw index_out_of_triangle();
    }
    return rows_[n][k];
}

rational s1(std::size_t n, std::size_t k) {
    if (k > n) {
        throw index_out_of_triangle();
    }
    return stirling_table(stirling_table::kind::first_signed, n).at(n, k);
}

rational s2(std::size_t n, std::size_t k) {
    if (k > n) {
        throw index_out_of_triangle();
    }
    return stirling_table(stirling_table::kind::second, n).at(n, k);
}

poly genfall_expand(std::size_t n, const rational& lambda) {
    stirling_table table(stirling_table::kind::first_signed, n);
    std::vector<rational> coeffs(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        coeffs[l] = pow(lambda, static_cast<long>(n - l)) * table.at(n, l);
    }
    return poly(std::move(coeffs));
}

} // namespace defrost
