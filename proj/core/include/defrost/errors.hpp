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

#include <stdexcept>
#include <string>

namespace defrost {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed rational text (bad grammar or zero denominator).
class parse_error : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

/// egf_inv requires a nonzero constant term.
class zero_constant_term : public error {
public:
    zero_constant_term() : error("series has zero constant term, not invertible") {}
};

/// The scaled exp/log substitutions are only defined for lambda != 0.
class lambda_zero : public error {
public:
    lambda_zero() : error("lambda must be nonzero") {}
};

/// Frobenius-Euler families require u != 1.
class u_equals_one : public error {
public:
    u_equals_one() : error("u must not equal 1") {}
};

/// The reflection identity needs 1/u, so u != 0.
class u_zero : public error {
public:
    u_zero() : error("u must be nonzero") {}
};

/// The distribution identity needs u^d != 1.
class u_root_of_unity : public error {
public:
    u_root_of_unity() : error("u^d must not equal 1") {}
};

class bad_order : public error {
public:
    bad_order() : error("order r must be >= 1") {}
};

class bad_divisor : public error {
public:
    bad_divisor() : error("divisor d must be >= 1") {}
};

class index_out_of_triangle : public error {
public:
    index_out_of_triangle() : error("Stirling index outside 0 <= k <= n") {}
};

} // namespace defrost
