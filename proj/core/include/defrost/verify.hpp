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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defrost/families.hpp"
#include "defrost/poly.hpp"
#include "defrost/rational.hpp"

namespace defrost::verify {

/// The closed catalogue of identities the checker knows how to verify.
/// Every check is an exact comparison of canonical polynomials or rationals;
/// there are no tolerances anywhere.
enum class identity {
    t1_expansion,        // recurrence family equals EGF-extraction oracle
    t1_shift,            // h_n(x+1|u) - u h_n(x|u) = (1-u)(x|lambda)_n
    t1_delta,            // h_n(1|u) - u h_n(u) = (1-u) [n == 0]
    t2_reflection,       // (-1)^n h_{n,-lambda}(-x|u) = h_{n,lambda}(x+1|1/u)
    t3_distribution,     // multiplication formula over residues a mod d
    t4_addition,         // h^(r)_n(x+y) = sum C(n,l) h^(r)_l(x) (y|lambda)_{n-l}
    t5_h_to_classical,   // S2 lambda-transform maps degenerate to classical
    t6_classical_to_h,   // S1 lambda-transform maps classical to degenerate
    t7_order_reduction,  // shifted difference lowers the order by one
    r_genocchi,          // g_{n+1} = (n+1) h_n(x|-1), against the Genocchi EGF
    l_lambda_zero_limit, // dfe at lambda = 0 equals the classical family
    d_derivative_classical, // d/dx H_n = n H_{n-1}
    b_bernoulli_limit,   // degenerate Bernoulli at lambda = 0 is classical
};

inline constexpr identity all_identities[] = {
    identity::t1_expansion,
    identity::t1_shift,
    identity::t1_delta,
    identity::t2_reflection,
    identity::t3_distribution,
    identity::t4_addition,
    identity::t5_h_to_classical,
    identity::t6_classical_to_h,
    identity::t7_order_reduction,
    identity::r_genocchi,
    identity::l_lambda_zero_limit,
    identity::d_derivative_classical,
    identity::b_bernoulli_limit,
};

std::string_view to_string(identity id);
std::optional<identity> identity_from_string(std::string_view name);

/// One grid point: only the parameters an identity consumes are set.
struct param_point {
    std::optional<rational> u;
    std::optional<rational> lambda;
    std::optional<int> r;
    std::optional<int> d;
    int max_n = 0;
};

/// First mismatch of a check: index n, both side values as exact text, and
/// an optional note (e.g. which sampled argument pair failed).
struct check_failure {
    int n = 0;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

enum class check_status { pass, fail, skipped };

struct verify_report {
    identity id = identity::t1_expansion;
    param_point params;
    check_status status = check_status::pass;
    std::optional<check_failure> first_failure;
    std::string skip_reason; // nonempty iff skipped
};

/// Family computations behind the checkers, overridable so tests can seed
/// defects and confirm each checker detects them. The default source
/// forwards to the families module.
class family_source {
public:
    virtual ~family_source() = default;

    virtual number_seq dfe_numbers(const rational& u, const rational& lambda,
                                   int max_n) const;
    virtual poly dfe_poly(int n, const rational& u, const rational& lambda) const;
    virtual poly dfe_higher_poly(int n, int r, const rational& u,
                                 const rational& lambda) const;
    virtual poly classical_fe_poly(int n, const rational& u) const;
    virtual poly classical_fe_higher_poly(int n, int r, const rational& u) const;
    virtual number_seq deg_bernoulli_numbers(const rational& lambda, int max_n) const;
    virtual poly deg_genocchi_poly(int n, const rational& lambda) const;
};

const family_source& default_family_source();

// Single-point checkers. Preconditions are hard errors here (u_zero,
// u_equals_one, u_root_of_unity, bad_order, bad_divisor); the grid runner
// below turns the same conditions into skipped reports instead.
verify_report check_T1_expansion(const rational& u, const rational& lambda, int max_n,
                                 const family_source& fam = default_family_source());
verify_report check_T1_shift(const rational& u, const rational& lambda, int max_n,
                             const family_source& fam = default_family_source());
verify_report check_T1_delta(const rational& u, const rational& lambda, int max_n,
                             const family_source& fam = default_family_source());
verify_report check_T2_reflection(const rational& u, const rational& lambda, int max_n,
                                  const family_source& fam = default_family_source());
verify_report check_T3_distribution(const rational& u, const rational& lambda, int d,
                                    int max_n,
                                    const family_source& fam = default_family_source());
verify_report check_T4_addition(const rational& u, const rational& lambda, int r, int max_n,
                                const family_source& fam = default_family_source());
verify_report check_T5_h_to_classical(const rational& u, const rational& lambda, int r,
                                      int max_m,
                                      const family_source& fam = default_family_source());
verify_report check_T6_classical_to_h(const rational& u, const rational& lambda, int r,
                                      int max_m,
                                      const family_source& fam = default_family_source());
verify_report check_T7_order_reduction(const rational& u, const rational& lambda, int r,
                                       int max_n,
                                       const family_source& fam = default_family_source());
verify_report check_R_genocchi(const rational& lambda, int max_n,
                               const family_source& fam = default_family_source());
verify_report check_L_lambda_zero_limit(const rational& u, int max_n,
                                        const family_source& fam = default_family_source());
verify_report check_D_derivative_classical(const rational& u, int max_n,
                                           const family_source& fam = default_family_source());
verify_report check_B_bernoulli_limit(int max_n,
                                      const family_source& fam = default_family_source());

/// Parameter grid shared by all identities; each checker consumes only the
/// axes it needs.
struct param_grid {
    std::vector<rational> u_values;
    std::vector<rational> lambda_values;
    std::vector<int> r_values;
    std::vector<int> d_values;

    static param_grid default_grid();
};

/// Runs every identity over the grid, one report per applicable grid point,
/// in deterministic order (identity, then grid order). Inadmissible points
/// are reported as skipped with a reason; failures are data, not errors.
std::vector<verify_report> check_all(const param_grid& grid, int max_n,
                                     const family_source& fam = default_family_source());

/// Runs one identity over the grid, same conventions as check_all.
std::vector<verify_report> check_identity(identity id, const param_grid& grid, int max_n,
                                          const family_source& fam = default_family_source());

/// Pretty JSON array of {identity, params, status, first_failure?, reason?}
/// objects, rationals as "p/q" strings, deterministic key order.
std::string reports_to_json(std::span<const verify_report> reports);

} // namespace defrost::verify
