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

#include "defrost/verify.hpp"

#include <array>
#include <utility>

#include "defrost/egf.hpp"
#include "defrost/stirling.hpp"

namespace defrost::verify {

std::string_view to_string(identity id) {
    switch (id) {
    case identity::t1_expansion: return "T1_expansion";
    case identity::t1_shift: return "T1_shift";
    case identity::t1_delta: return "T1_delta";
    case identity::t2_reflection: return "T2_reflection";
    case identity::t3_distribution: return "T3_distribution";
    case identity::t4_addition: return "T4_addition";
    case identity::t5_h_to_classical: return "T5_h_to_H";
    case identity::t6_classical_to_h: return "T6_H_to_h";
    case identity::t7_order_reduction: return "T7_order_reduction";
    case identity::r_genocchi: return "R_genocchi";
    case identity::l_lambda_zero_limit: return "L_lambda_zero_limit";
    case identity::d_derivative_classical: return "D_derivative_classical";
    case identity::b_bernoulli_limit: return "B_bernoulli_limit";
    }
    return "unknown";
}

std::optional<identity> identity_from_string(std::string_view name) {
    for (identity id : all_identities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

number_seq family_source::dfe_numbers(const rational& u, const rational& lambda,
                                      int max_n) const {
    return defrost::dfe_numbers(u, lambda, max_n);
}

poly family_source::dfe_poly(int n, const rational& u, const rational& lambda) const {
    return defrost::dfe_poly(n, u, lambda);
}

poly family_source::dfe_higher_poly(int n, int r, const rational& u,
                                    const rational& lambda) const {
    return defrost::dfe_higher_poly(n, r, u, lambda);
}

poly family_source::classical_fe_poly(int n, const rational& u) const {
    return defrost::classical_fe_poly(n, u);
}

poly family_source::classical_fe_higher_poly(int n, int r, const rational& u) const {
    return defrost::classical_fe_higher_poly(n, r, u);
}

number_seq family_source::deg_bernoulli_numbers(const rational& lambda, int max_n) const {
    return defrost::deg_bernoulli_numbers(lambda, max_n);
}

poly family_source::deg_genocchi_poly(int n, const rational& lambda) const {
    return defrost::deg_genocchi_poly(n, lambda);
}

const family_source& default_family_source() {
    static const family_source instance;
    return instance;
}

namespace {

poly shift_x_plus_one(const poly& p) {
    return p.compose(poly(std::vector<rational>{rational(1), rational(1)}));
}

poly reflect_x(const poly& p) {
    return p.compose(poly(std::vector<rational>{rational(0), rational(-1)}));
}

/// p((a + x)/d), exact affine substitution.
poly affine_sub(const poly& p, const rational& a, const rational& d) {
    return p.compose(poly(std::vector<rational>{a / d, d.inverse()}));
}

verify_report pass_report(identity id, param_point params) {
    return {id, std::move(params), check_status::pass, std::nullopt, {}};
}

verify_report fail_report(identity id, param_point params, check_failure f) {
    return {id, std::move(params), check_status::fail, std::move(f), {}};
}

/// Compares both sides for n = 0..max_n and folds the first mismatch into a
/// report. The sides are produced lazily per index.
template <typename Lhs, typename Rhs>
verify_report compare_indexed(identity id, param_point params, int max_n, Lhs&& lhs,
                              Rhs&& rhs, const char* detail = "") {
    for (int n = 0; n <= max_n; ++n) {
        const auto l = lhs(n);
        const auto r = rhs(n);
        if (!(l == r)) {
            return fail_report(id, std::move(params), {n, l.str(), r.str(), detail});
        }
    }
    return pass_report(id, std::move(params));
}

param_point point_ul(const rational& u, const rational& lambda, int max_n) {
    param_point p;
    p.u = u;
    p.lambda = lambda;
    p.max_n = max_n;
    return p;
}

param_point point_ulr(const rational& u, const rational& lambda, int r, int max_n) {
    param_point p = point_ul(u, lambda, max_n);
    p.r = r;
    return p;
}

} // namespace

verify_report check_T1_expansion(const rational& u, const rational& lambda, int max_n,
                                 const family_source& fam) {
    if (u.is_one()) {
        throw u_equals_one();
    }
    const auto oracle = dfe_egf(u, lambda, static_cast<std::size_t>(max_n));
    return compare_indexed(
        identity::t1_expansion, point_ul(u, lambda, max_n), max_n,
        [&](int n) { return fam.dfe_poly(n, u, lambda); },
        [&](int n) { return oracle[static_cast<std::size_t>(n)]; });
}

verify_report check_T1_shift(const rational& u, const rational& lambda, int max_n,
                             const family_source& fam) {
    if (u.is_one()) {
        throw u_equals_one();
    }
    return compare_indexed(
        identity::t1_shift, point_ul(u, lambda, max_n), max_n,
        [&](int n) {
            const poly h = fam.dfe_poly(n, u, lambda);
            return shift_x_plus_one(h) - u * h;
        },
        [&](int n) {
            return (rational(1) - u) * genfall_poly(lambda, static_cast<unsigned>(n));
        });
}

verify_report check_T1_delta(const rational& u, const rational& lambda, int max_n,
                             const family_source& fam) {
    if (u.is_one()) {
        throw u_equals_one();
    }
    const number_seq h = fam.dfe_numbers(u, lambda, max_n);
    return compare_indexed(
        identity::t1_delta, point_ul(u, lambda, max_n), max_n,
        [&](int n) {
            return fam.dfe_poly(n, u, lambda).eval(rational(1)) -
                   u * h.values[static_cast<std::size_t>(n)];
        },
        [&](int n) { return n == 0 ? rational(1) - u : rational(0); });
}

verify_report check_T2_reflection(const rational& u, const rational& lambda, int max_n,
                                  const family_source& fam) {
    if (u.is_zero()) {
        throw u_zero();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    const rational u_inv = u.inverse();
    return compare_indexed(
        identity::t2_reflection, point_ul(u, lambda, max_n), max_n,
        [&](int n) {
            const rational sign = n % 2 == 0 ? rational(1) : rational(-1);
            return sign * reflect_x(fam.dfe_poly(n, u, -lambda));
        },
        [&](int n) { return shift_x_plus_one(fam.dfe_poly(n, u_inv, lambda)); });
}

verify_report check_T3_distribution(const rational& u, const rational& lambda, int d,
                                    int max_n, const family_source& fam) {
    if (d < 1) {
        throw bad_divisor();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    if (u.is_zero()) {
        throw u_zero();
    }
    const rational u_pow_d = pow(u, d);
    if (u_pow_d.is_one()) {
        throw u_root_of_unity();
    }
    param_point params = point_ul(u, lambda, max_n);
    params.d = d;
    const rational d_rat(static_cast<long>(d));
    const rational prefactor = (u.inverse() - rational(1)) / (rational(1) - u_pow_d);
    const rational lambda_over_d = lambda / d_rat;
    return compare_indexed(
        identity::t3_distribution, std::move(params), max_n,
        [&](int n) { return fam.dfe_poly(n, u, lambda); },
        [&](int n) {
            const poly inner = fam.dfe_poly(n, u_pow_d, lambda_over_d);
            poly sum;
            for (int a = 0; a < d; ++a) {
                sum += pow(u, d - a) * affine_sub(inner, rational(a), d_rat);
            }
            return pow(d_rat, n) * prefactor * sum;
        });
}

verify_report check_T4_addition(const rational& u, const rational& lambda, int r, int max_n,
                                const family_source& fam) {
    if (r < 1) {
        throw bad_order();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    param_point params = point_ulr(u, lambda, r, max_n);

    // Sampled rational argument pairs, then (x = 0, y symbolic) as a full
    // polynomial identity.
    const std::array<std::pair<rational, rational>, 2> samples = {
        std::pair{rational(1, 2), rational(1, 3)},
        std::pair{rational(-1), rational(2)},
    };
    for (int n = 0; n <= max_n; ++n) {
        const poly hn = fam.dfe_higher_poly(n, r, u, lambda);
        for (const auto& [x, y] : samples) {
            const rational lhs = hn.eval(x + y);
            rational rhs(0);
            for (int l = 0; l <= n; ++l) {
                rhs += binomial(n, l) *
                       fam.dfe_higher_poly(l, r, u, lambda).eval(x) *
                       genfall(y, lambda, static_cast<unsigned>(n - l));
            }
            if (lhs != rhs) {
                return fail_report(identity::t4_addition, std::move(params),
                                   {n, lhs.str(), rhs.str(),
                                    "x=" + x.str() + ",y=" + y.str()});
            }
        }
        poly rhs_sym;
        for (int l = 0; l <= n; ++l) {
            rhs_sym += binomial(n, l) *
                       fam.dfe_higher_poly(l, r, u, lambda).eval(rational(0)) *
                       genfall_poly(lambda, static_cast<unsigned>(n - l));
        }
        if (hn != rhs_sym) {
            return fail_report(identity::t4_addition, std::move(params),
                               {n, hn.str(), rhs_sym.str(), "x=0,y symbolic"});
        }
    }
    return pass_report(identity::t4_addition, std::move(params));
}

verify_report check_T5_h_to_classical(const rational& u, const rational& lambda, int r,
                                      int max_m, const family_source& fam) {
    if (r < 1) {
        throw bad_order();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    std::vector<poly> degenerate;
    degenerate.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int n = 0; n <= max_m; ++n) {
        degenerate.push_back(fam.dfe_higher_poly(n, r, u, lambda));
    }
    const std::vector<poly> transformed = s2_transform<poly>(degenerate, lambda);
    return compare_indexed(
        identity::t5_h_to_classical, point_ulr(u, lambda, r, max_m), max_m,
        [&](int m) { return transformed[static_cast<std::size_t>(m)]; },
        [&](int m) { return fam.classical_fe_higher_poly(m, r, u); });
}

verify_report check_T6_classical_to_h(const rational& u, const rational& lambda, int r,
                                      int max_m, const family_source& fam) {
    if (r < 1) {
        throw bad_order();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    std::vector<poly> classical;
    classical.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int n = 0; n <= max_m; ++n) {
        classical.push_back(fam.classical_fe_higher_poly(n, r, u));
    }
    const std::vector<poly> transformed = s1_transform<poly>(classical, lambda);
    return compare_indexed(
        identity::t6_classical_to_h, point_ulr(u, lambda, r, max_m), max_m,
        [&](int m) { return transformed[static_cast<std::size_t>(m)]; },
        [&](int m) { return fam.dfe_higher_poly(m, r, u, lambda); });
}

verify_report check_T7_order_reduction(const rational& u, const rational& lambda, int r,
                                       int max_n, const family_source& fam) {
    if (r < 1) {
        throw bad_order();
    }
    if (u.is_one()) {
        throw u_equals_one();
    }
    const rational one_minus_u = rational(1) - u;
    return compare_indexed(
        identity::t7_order_reduction, point_ulr(u, lambda, r, max_n), max_n,
        [&](int n) {
            const poly h = fam.dfe_higher_poly(n, r, u, lambda);
            return (shift_x_plus_one(h) - u * h) / one_minus_u;
        },
        [&](int n) {
            // Order 0 is the bare kernel: h^(0)_n = (x|lambda)_n.
            return r == 1 ? genfall_poly(lambda, static_cast<unsigned>(n))
                          : fam.dfe_higher_poly(n, r - 1, u, lambda);
        });
}

verify_report check_R_genocchi(const rational& lambda, int max_n, const family_source& fam) {
    param_point params;
    params.lambda = lambda;
    params.max_n = max_n;
    const auto oracle = deg_genocchi_egf(lambda, static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        const poly product = fam.deg_genocchi_poly(n, lambda);
        const poly& extracted = oracle[static_cast<std::size_t>(n)];
        if (product != extracted) {
            return fail_report(identity::r_genocchi, std::move(params),
                               {n, product.str(), extracted.str(), "family vs EGF"});
        }
        // g_{n+1} = (n+1) h_n(x|-1) against the series extraction.
        const poly relation =
            rational(n + 1) * fam.dfe_poly(n, rational(-1), lambda);
        const poly& next = oracle[static_cast<std::size_t>(n) + 1];
        if (relation != next) {
            return fail_report(identity::r_genocchi, std::move(params),
                               {n, relation.str(), next.str(), "(n+1) h_n vs g_{n+1}"});
        }
    }
    return pass_report(identity::r_genocchi, std::move(params));
}

verify_report check_L_lambda_zero_limit(const rational& u, int max_n,
                                        const family_source& fam) {
    if (u.is_one()) {
        throw u_equals_one();
    }
    param_point params;
    params.u = u;
    params.max_n = max_n;
    return compare_indexed(
        identity::l_lambda_zero_limit, std::move(params), max_n,
        [&](int n) { return fam.dfe_poly(n, u, rational(0)); },
        [&](int n) { return fam.classical_fe_poly(n, u); });
}

verify_report check_D_derivative_classical(const rational& u, int max_n,
                                           const family_source& fam) {
    if (u.is_one()) {
        throw u_equals_one();
    }
    param_point params;
    params.u = u;
    params.max_n = max_n;
    return compare_indexed(
        identity::d_derivative_classical, std::move(params), max_n,
        [&](int n) { return fam.classical_fe_poly(n, u).derivative(); },
        [&](int n) {
            return n == 0 ? poly()
                          : rational(n) * fam.classical_fe_poly(n - 1, u);
        });
}

verify_report check_B_bernoulli_limit(int max_n, const family_source& fam) {
    param_point params;
    params.max_n = max_n;
    // Independent classical oracle: B_0 = 1, B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k.
    std::vector<rational> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = rational(1);
    for (int n = 1; n <= max_n; ++n) {
        rational acc(0);
        for (int k = 0; k < n; ++k) {
            acc += binomial(n + 1, k) * b[static_cast<std::size_t>(k)];
        }
        b[static_cast<std::size_t>(n)] = -acc / rational(n + 1);
    }
    const number_seq beta = fam.deg_bernoulli_numbers(rational(0), max_n);
    return compare_indexed(
        identity::b_bernoulli_limit, std::move(params), max_n,
        [&](int n) { return beta.values[static_cast<std::size_t>(n)]; },
        [&](int n) { return b[static_cast<std::size_t>(n)]; });
}

param_grid param_grid::default_grid() {
    param_grid g;
    g.u_values = {rational(2), rational(-1), rational(1, 2), rational(-3, 5)};
    g.lambda_values = {rational(0), rational(1), rational(1, 2), rational(-2, 3)};
    g.r_values = {1, 2, 3};
    g.d_values = {1, 2, 3, 4};
    return g;
}

namespace {

verify_report skipped(identity id, param_point params, std::string reason) {
    return {id, std::move(params), check_status::skipped, std::nullopt, std::move(reason)};
}

/// Returns the reason a point is inadmissible for an identity, or empty.
/// Every identity with a u axis needs u != 1; reflection and distribution
/// additionally invert u; distribution needs u^d != 1.
std::string skip_reason_for(identity id, const param_point& p) {
    if (p.u.has_value() && p.u->is_one()) {
        return "u = 1";
    }
    if ((id == identity::t2_reflection || id == identity::t3_distribution) &&
        p.u.has_value() && p.u->is_zero()) {
        return "u = 0";
    }
    if (id == identity::t3_distribution && pow(*p.u, *p.d).is_one()) {
        return "u^d = 1";
    }
    return {};
}

} // namespace

std::vector<verify_report> check_identity(identity id, const param_grid& grid, int max_n,
                                          const family_source& fam) {
    std::vector<verify_report> out;
    auto run = [&](param_point point, auto&& checker) {
        std::string reason = skip_reason_for(id, point);
        if (!reason.empty()) {
            out.push_back(skipped(id, std::move(point), std::move(reason)));
        } else {
            out.push_back(checker());
        }
    };

    switch (id) {
    case identity::t1_expansion:
    case identity::t1_shift:
    case identity::t1_delta:
    case identity::t2_reflection:
        for (const rational& u : grid.u_values) {
            for (const rational& lambda : grid.lambda_values) {
                run(point_ul(u, lambda, max_n), [&] {
                    switch (id) {
                    case identity::t1_expansion:
                        return check_T1_expansion(u, lambda, max_n, fam);
                    case identity::t1_shift:
                        return check_T1_shift(u, lambda, max_n, fam);
                    case identity::t1_delta:
                        return check_T1_delta(u, lambda, max_n, fam);
                    default:
                        return check_T2_reflection(u, lambda, max_n, fam);
                    }
                });
            }
        }
        break;
    case identity::t3_distribution:
        for (const rational& u : grid.u_values) {
            for (const rational& lambda : grid.lambda_values) {
                for (int d : grid.d_values) {
                    param_point point = point_ul(u, lambda, max_n);
                    point.d = d;
                    run(std::move(point),
                        [&] { return check_T3_distribution(u, lambda, d, max_n, fam); });
                }
            }
        }
        break;
    case identity::t4_addition:
    case identity::t5_h_to_classical:
    case identity::t6_classical_to_h:
    case identity::t7_order_reduction:
        for (const rational& u : grid.u_values) {
            for (const rational& lambda : grid.lambda_values) {
                for (int r : grid.r_values) {
                    run(point_ulr(u, lambda, r, max_n), [&] {
                        switch (id) {
                        case identity::t4_addition:
                            return check_T4_addition(u, lambda, r, max_n, fam);
                        case identity::t5_h_to_classical:
                            return check_T5_h_to_classical(u, lambda, r, max_n, fam);
                        case identity::t6_classical_to_h:
                            return check_T6_classical_to_h(u, lambda, r, max_n, fam);
                        default:
                            return check_T7_order_reduction(u, lambda, r, max_n, fam);
                        }
                    });
                }
            }
        }
        break;
    case identity::r_genocchi:
        for (const rational& lambda : grid.lambda_values) {
            param_point point;
            point.lambda = lambda;
            point.max_n = max_n;
            run(std::move(point), [&] { return check_R_genocchi(lambda, max_n, fam); });
        }
        break;
    case identity::l_lambda_zero_limit:
    case identity::d_derivative_classical:
        for (const rational& u : grid.u_values) {
            param_point point;
            point.u = u;
            point.max_n = max_n;
            run(std::move(point), [&] {
                return id == identity::l_lambda_zero_limit
                           ? check_L_lambda_zero_limit(u, max_n, fam)
                           : check_D_derivative_classical(u, max_n, fam);
            });
        }
        break;
    case identity::b_bernoulli_limit: {
        param_point point;
        point.max_n = max_n;
        run(std::move(point), [&] { return check_B_bernoulli_limit(max_n, fam); });
        break;
    }
    }
    return out;
}

std::vector<verify_report> check_all(const param_grid& grid, int max_n,
                                     const family_source& fam) {
    std::vector<verify_report> out;
    for (identity id : all_identities) {
        std::vector<verify_report> batch = check_identity(id, grid, max_n, fam);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

} // namespace defrost::verify
