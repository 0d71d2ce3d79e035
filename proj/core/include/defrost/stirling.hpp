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

#include <cstddef>
#include <span>
#include <vector>

#include "defrost/poly.hpp"
#include "defrost/rational.hpp"

namespace defrost {

/// Triangle of Stirling numbers for 0 <= k <= n <= max_n. The first kind is
/// signed, fixed by (x)_n = sum_l S1(n,l) x^l; the second kind satisfies
/// x^n = sum_l S2(n,l) (x)_l. The triangles are inverse to each other.
class stirling_table {
public:
    enum class kind { first_signed, second };

    stirling_table(kind which, std::size_t max_n);

    kind which() const { return kind_; }
    std::size_t max_n() const { return rows_.size() - 1; }

    /// Throws index_out_of_triangle unless 0 <= k <= n <= max_n.
    const rational& at(std::size_t n, std::size_t k) const;

private:
    kind kind_;
    std::vector<std::vector<rational>> rows_;
};

/// Signed Stirling number of the first kind (fresh triangle per call).
rational s1(std::size_t n, std::size_t k);

/// Stirling number of the second kind.
rational s2(std::size_t n, std::size_t k);

/// Monomial expansion of (x|lambda)_n: coefficient of x^l is
/// lambda^(n-l) * S1(n,l).
poly genfall_expand(std::size_t n, const rational& lambda);

/// Lambda-weighted Stirling transform of the second kind:
/// out_m = sum_{n<=m} seq_n * lambda^(m-n) * S2(m,n). Maps sequences built
/// on the (x|lambda)_n basis onto the classical monomial-basis families;
/// the identity transform at lambda = 0.
template <typename T>
std::vector<T> s2_transform(std::span<const T> seq, const rational& lambda) {
    if (seq.empty()) {
        return {};
    }
    stirling_table table(stirling_table::kind::second, seq.size() - 1);
    std::vector<T> out;
    out.reserve(seq.size());
    for (std::size_t m = 0; m < seq.size(); ++m) {
        T acc{};
        for (std::size_t n = 0; n <= m; ++n) {
            acc += seq[n] * (pow(lambda, static_cast<long>(m - n)) * table.at(m, n));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Inverse of s2_transform, weighted by signed first-kind numbers:
/// out_m = sum_{n<=m} seq_n * lambda^(m-n) * S1(m,n).
template <typename T>
std::vector<T> s1_transform(std::span<const T> seq, const rational& lambda) {
    if (seq.empty()) {
        return {};
    }
    stirling_table table(stirling_table::kind::first_signed, seq.size() - 1);
    std::vector<T> out;
    out.reserve(seq.size());
    for (std::size_t m = 0; m < seq.size(); ++m) {
        T acc{};
        for (std::size_t n = 0; n <= m; ++n) {
            acc += seq[n] * (pow(lambda, static_cast<long>(m - n)) * table.at(m, n));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace defrost
