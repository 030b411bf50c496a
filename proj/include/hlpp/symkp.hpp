#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hlpp/linalg.hpp"
#include "hlpp/multipoly.hpp"
#include "hlpp/numeric.hpp"
#include "hlpp/partition.hpp"

namespace hlpp {

/* Symmetric-function and tau-function layer.
 *
 * The finite-box generating function, rewritten in the variables
 * x_m = (1/m) sum_j u_j^m and y~_m = (1-t^m) y_m, is a KP tau-function:
 * its coefficients in the character basis are Plucker coordinates of a
 * point on a finite Grassmannian, and it satisfies the lowest Hirota
 * bilinear equation.  Everything here is exact rational arithmetic.
 */

// h_0..h_m of the given variables: repeated multiplication of the
// coefficient vector by 1/(1 - u_j z).
inline std::vector<Rational> complete_homogeneous_upto(int m, const std::vector<Rational>& u) {
    if (m < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> h(static_cast<size_t>(m) + 1, Rational(0));
    h[0] = 1;
    for (const Rational& uj : u)
        for (int r = 1; r <= m; ++r) h[r] += uj * h[r - 1];
    return h;
}

inline Rational complete_homogeneous(int m, const std::vector<Rational>& u) {
    return complete_homogeneous_upto(m, u)[static_cast<size_t>(m)];
}

// q_0..q_m from prod_j (1 - t v_j z)/(1 - v_j z); at t = 0 these are the
// complete homogeneous functions.
inline std::vector<Rational> hl_q_upto(int m, const std::vector<Rational>& v,
                                       const Rational& t_val) {
    if (m < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> q(static_cast<size_t>(m) + 1, Rational(0));
    q[0] = 1;
    for (const Rational& vj : v) {
        Rational prev_old = q[0];
        for (int r = 1; r <= m; ++r) {
            const Rational old_r = q[r];
            q[r] = old_r - t_val * vj * prev_old + vj * q[r - 1];
            prev_old = old_r;
        }
    }
    return q;
}

inline Rational hl_q(int m, const std::vector<Rational>& v, const Rational& t_val) {
    return hl_q_upto(m, v, t_val)[static_cast<size_t>(m)];
}

namespace detail {

// det(g(lambda_i - i + j))_{1<=i,j<=l(lambda)} with g(neg) = 0
inline Rational jacobi_trudi_det(const Partition& lambda,
                                 const std::function<Rational(int)>& g) {
    const int k = lambda.length();
    RatMatrix m(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int idx = lambda.part(i) - i + j;
            if (idx >= 0) m[i - 1][j - 1] = g(idx);
        }
    return rat_det(std::move(m));
}

}  // namespace detail

// Schur polynomial as the Jacobi-Trudi determinant det(h_{lambda_i-i+j}).
inline Rational schur(const Partition& lambda, const std::vector<Rational>& u) {
    if (lambda.empty()) return Rational(1);
    const auto h = complete_homogeneous_upto(lambda.part(1) + lambda.length(), u);
    return detail::jacobi_trudi_det(lambda, [&h](int i) { return h[static_cast<size_t>(i)]; });
}

// Deformed analogue det(q_{lambda_i-i+j}); equals schur at t = 0.
inline Rational hl_S(const Partition& lambda, const std::vector<Rational>& v,
                     const Rational& t_val) {
    if (lambda.empty()) return Rational(1);
    const auto q = hl_q_upto(lambda.part(1) + lambda.length(), v, t_val);
    return detail::jacobi_trudi_det(lambda, [&q](int i) { return q[static_cast<size_t>(i)]; });
}

/* Both sides of the Cauchy-type identity
 *   sum_{l(lambda)<=s} s_lambda(a) S_lambda(b;t)
 *     = prod_{i,j} (1 - t a_i b_j)/(1 - a_i b_j),
 * graded by u -> eps a, v -> eps b.  Entry d of each table is the
 * coefficient of eps^{2d}: on the left only |lambda| = d contributes, so
 * every entry is a finite exact sum; on the right it is the coefficient
 * in the truncated expansion of the product.  The tables must agree
 * entrywise. */
inline std::pair<std::vector<Rational>, std::vector<Rational>> cauchy_check(
    int s, int max_deg, const std::vector<Rational>& a, const std::vector<Rational>& b,
    const Rational& t_val) {
    if (s < 1) throw std::invalid_argument("need at least one variable pair");
    if (static_cast<int>(a.size()) != s || static_cast<int>(b.size()) != s)
        throw std::invalid_argument("sample point size must match s");
    if (max_deg < 0) throw std::invalid_argument("negative degree bound");

    std::vector<Rational> lhs(static_cast<size_t>(max_deg) + 1, Rational(0));
    for (int d = 0; d <= max_deg; ++d)
        for (const Partition& la : partitions_of(d))
            if (la.length() <= s) lhs[d] += schur(la, a) * hl_S(la, b, t_val);

    std::vector<Rational> rhs(static_cast<size_t>(max_deg) + 1, Rational(0));
    rhs[0] = 1;
    for (const Rational& ai : a) {
        for (const Rational& bj : b) {
            // multiply by 1 + (1-t) sum_k (a_i b_j)^k w^k, w = eps^2
            const Rational x = ai * bj;
            std::vector<Rational> factor(static_cast<size_t>(max_deg) + 1, Rational(0));
            factor[0] = 1;
            Rational pw(1);
            for (int kk = 1; kk <= max_deg; ++kk) {
                pw *= x;
                factor[kk] = (Rational(1) - t_val) * pw;
            }
            std::vector<Rational> next(static_cast<size_t>(max_deg) + 1, Rational(0));
            for (int i = 0; i <= max_deg; ++i)
                for (int j = 0; i + j <= max_deg; ++j) next[i + j] += rhs[i] * factor[j];
            rhs = std::move(next);
        }
    }
    return {std::move(lhs), std::move(rhs)};
}

namespace detail {

// p_0..p_r as weighted polynomials, from r p_r = sum_j j x_j p_{r-j}
// (the expansion of exp(sum_m x_m z^m) in powers of z)
inline std::vector<RatMultiPoly> char_p_polys(int r, int m_vars, int weight_cutoff) {
    std::vector<RatMultiPoly> ps;
    ps.reserve(static_cast<size_t>(r) + 1);
    ps.push_back(RatMultiPoly::constant(Rational(1), weight_cutoff));
    for (int d = 1; d <= r; ++d) {
        RatMultiPoly acc(weight_cutoff);
        for (int j = 1; j <= std::min(d, m_vars); ++j)
            acc += (RatMultiPoly::variable(j, weight_cutoff) * ps[d - j]).scaled(Rational(j));
        ps.push_back(acc.scaled(make_rational(1, d)));
    }
    return ps;
}

// the same expansion evaluated at numbers
inline std::vector<Rational> char_p_values(int r, const std::vector<Rational>& y) {
    std::vector<Rational> ps(static_cast<size_t>(r) + 1, Rational(0));
    ps[0] = 1;
    for (int d = 1; d <= r; ++d) {
        Rational acc(0);
        for (int j = 1; j <= std::min<int>(d, static_cast<int>(y.size())); ++j)
            acc += Rational(j) * y[j - 1] * ps[d - j];
        ps[d] = acc / Rational(d);
    }
    return ps;
}

inline RatMultiPoly det_poly(const std::vector<std::vector<RatMultiPoly>>& m, int cutoff) {
    const size_t k = m.size();
    if (k == 0) return RatMultiPoly::constant(Rational(1), cutoff);
    // Laplace expansion along the first row; matrices here stay small
    RatMultiPoly acc(cutoff);
    std::vector<size_t> cols(k);
    for (size_t j = 0; j < k; ++j) cols[j] = j;
    std::function<RatMultiPoly(size_t, std::vector<size_t>)> rec =
        [&](size_t row, std::vector<size_t> cs) -> RatMultiPoly {
        if (cs.empty()) return RatMultiPoly::constant(Rational(1), cutoff);
        RatMultiPoly sum(cutoff);
        for (size_t j = 0; j < cs.size(); ++j) {
            std::vector<size_t> rest;
            rest.reserve(cs.size() - 1);
            for (size_t i = 0; i < cs.size(); ++i)
                if (i != j) rest.push_back(cs[i]);
            RatMultiPoly term = m[row][cs[j]] * rec(row + 1, std::move(rest));
            sum += (j % 2 == 0) ? term : -term;
        }
        return sum;
    };
    return rec(0, cols);
}

}  // namespace detail

/* Character polynomial chi_lambda(x) = det(p_{lambda_i-i+j}), a
 * weighted-homogeneous polynomial of weight |lambda|.  Variables beyond
 * m_vars are taken as zero. */
inline RatMultiPoly char_poly(const Partition& lambda, int m_vars, int weight_cutoff) {
    if (weight_cutoff < lambda.sum())
        throw std::invalid_argument("weight cutoff below |lambda|");
    if (lambda.empty()) return RatMultiPoly::constant(Rational(1), weight_cutoff);
    const int k = lambda.length();
    const auto ps = detail::char_p_polys(lambda.part(1) + k, m_vars, weight_cutoff);
    std::vector<std::vector<RatMultiPoly>> m(
        static_cast<size_t>(k),
        std::vector<RatMultiPoly>(static_cast<size_t>(k), RatMultiPoly(weight_cutoff)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int idx = lambda.part(i) - i + j;
            if (idx >= 0) m[i - 1][j - 1] = ps[static_cast<size_t>(idx)];
        }
    return detail::det_poly(m, weight_cutoff);
}

// chi_lambda evaluated at a numeric point
inline Rational char_value(const Partition& lambda, const std::vector<Rational>& y) {
    if (lambda.empty()) return Rational(1);
    const auto ps = detail::char_p_values(lambda.part(1) + lambda.length(), y);
    return detail::jacobi_trudi_det(lambda,
                                    [&ps](int i) { return ps[static_cast<size_t>(i)]; });
}

/* tau(x) = sum over lambda with at most s rows and |lambda| <= cutoff of
 * chi_lambda(y~) chi_lambda(x).  The y~ values are consumed as given;
 * any deformation factor is the caller's business. */
inline RatMultiPoly tau_build(int s, const std::vector<Rational>& y_tilde, int weight_cutoff) {
    if (s < 1) throw std::invalid_argument("need at least one row");
    if (static_cast<int>(y_tilde.size()) < weight_cutoff)
        throw std::invalid_argument("y~ must provide one value per weight");
    RatMultiPoly tau = RatMultiPoly::constant(Rational(1), weight_cutoff);
    for (int d = 1; d <= weight_cutoff; ++d)
        for (const Partition& la : partitions_of(d)) {
            if (la.length() > s) continue;
            const Rational c = char_value(la, y_tilde);
            if (c == 0) continue;
            tau += char_poly(la, weight_cutoff, weight_cutoff).scaled(c);
        }
    return tau;
}

/* Residual of the lowest Hirota bilinear equation
 *   (D_1^4 + 3 D_2^2 - 4 D_1 D_3) tau . tau,
 * expanded by the Leibniz rule D^n f.g = sum (-1)^k C(n,k) f^(n-k) g^(k).
 * With tau exact to weight W the residual is meaningful to weight W-4,
 * so it is truncated there. */
inline RatMultiPoly hirota_kp_residual(const RatMultiPoly& tau) {
    const int w = tau.weight_cutoff();
    auto d = [&tau](std::initializer_list<int> vars) {
        RatMultiPoly r = tau;
        for (int v : vars) r = r.derivative(v);
        return r;
    };
    RatMultiPoly acc(w);
    const std::array<long, 5> c4 = {1, -4, 6, -4, 1};
    for (int k = 0; k <= 4; ++k) {
        RatMultiPoly f = tau, g = tau;
        for (int i = 0; i < 4 - k; ++i) f = f.derivative(1);
        for (int i = 0; i < k; ++i) g = g.derivative(1);
        acc += (f * g).scaled(Rational(c4[static_cast<size_t>(k)]));
    }
    acc += (d({2, 2}) * tau).scaled(Rational(3));
    acc += (d({2}) * d({2})).scaled(Rational(-6));
    acc += (tau * d({2, 2})).scaled(Rational(3));
    acc += (tau * d({1, 3})).scaled(Rational(-8));
    acc += (d({1}) * d({3})).scaled(Rational(8));
    return acc.truncated(std::max(w - 4, 0));
}

// exp(sum_{k<=K} k (1-t^k) x_k y_k) at numbers, with the exponential
// expanded to the stated series order
inline Rational tau_trivial_B(const Rational& t_val, const std::vector<Rational>& x,
                              const std::vector<Rational>& y, int K, int series_order) {
    if (K < 1) throw std::invalid_argument("summation cutoff must be positive");
    if (series_order < 0) throw std::invalid_argument("negative series order");
    Rational e(0);
    const int top = std::min<int>(K, static_cast<int>(std::min(x.size(), y.size())));
    for (int k = 1; k <= top; ++k)
        e += Rational(k) * (Rational(1) - rational_pow(t_val, static_cast<unsigned long>(k))) *
             x[k - 1] * y[k - 1];
    Rational sum(0), term(1);
    for (int j = 0; j <= series_order; ++j) {
        sum += term;
        term = term * e / Rational(j + 1);
    }
    return sum;
}

// the same exponential kept as a polynomial in x, truncated by weight
inline RatMultiPoly tau_trivial_B_poly(const Rational& t_val, const std::vector<Rational>& y,
                                       int K, int weight_cutoff) {
    if (K < 1) throw std::invalid_argument("summation cutoff must be positive");
    RatMultiPoly e(weight_cutoff);
    const int top = std::min<int>(K, static_cast<int>(y.size()));
    for (int k = 1; k <= top; ++k) {
        const Rational c = Rational(k) *
                           (Rational(1) - rational_pow(t_val, static_cast<unsigned long>(k))) *
                           y[k - 1];
        e += RatMultiPoly::variable(k, weight_cutoff).scaled(c);
    }
    RatMultiPoly sum = RatMultiPoly::constant(Rational(1), weight_cutoff);
    RatMultiPoly term = RatMultiPoly::constant(Rational(1), weight_cutoff);
    for (int j = 1; j <= weight_cutoff; ++j) {
        term = (term * e).scaled(make_rational(1, j));
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

/* Coefficient table of a tau polynomial in the character basis:
 * partition-indexed Plucker coordinates. */
struct SchurCoeffTable {
    int rows;  // declared row bound for the stored keys
    std::map<Partition, Rational> coeff;

    const Rational& at(const Partition& la) const {
        auto it = coeff.find(la);
        if (it == coeff.end()) {
            std::string msg = "missing coefficient for partition [";
            for (int i = 1; i <= la.length(); ++i)
                msg += (i > 1 ? "," : "") + std::to_string(la.part(i));
            throw std::out_of_range(msg + "]");
        }
        return it->second;
    }
};

/* Recover c_lambda from tau = sum c_lambda chi_lambda by solving one
 * exact linear system per weight: the characters of weight d form a
 * basis of the weight-d slice, with monomials x^e of weight d indexed by
 * the partition with e_k parts equal to k.  Solved coefficients outside
 * the declared row bound must come out zero. */
inline SchurCoeffTable schur_coeff_table(const RatMultiPoly& tau, int rows, int max_deg) {
    if (max_deg > tau.weight_cutoff())
        throw std::invalid_argument("extraction degree exceeds the cutoff");
    SchurCoeffTable table{rows, {}};
    for (int d = 0; d <= max_deg; ++d) {
        const auto lams = partitions_of(d);
        const size_t n = lams.size();
        std::vector<RatMultiPoly::Exponents> monos;
        monos.reserve(n);
        for (const Partition& la : lams) {
            RatMultiPoly::Exponents e(la.empty() ? 0 : la.part(1), 0);
            for (const auto& [part, mult] : multiplicities(la)) e[part - 1] = mult;
            monos.push_back(std::move(e));
        }
        RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> rhs(n, Rational(0));
        for (size_t col = 0; col < n; ++col) {
            const RatMultiPoly chi = char_poly(lams[col], d == 0 ? 1 : d, d == 0 ? 1 : d);
            for (size_t row = 0; row < n; ++row) m[row][col] = chi.coeff(monos[row]);
        }
        for (size_t row = 0; row < n; ++row) rhs[row] = tau.coeff(monos[row]);
        const auto sol = rat_solve(std::move(m), std::move(rhs));
        for (size_t col = 0; col < n; ++col) {
            if (lams[col].length() <= rows)
                table.coeff.emplace(lams[col], sol[col]);
            else if (sol[col] != 0)
                throw std::domain_error("coefficients exceed the declared row bound");
        }
    }
    return table;
}

// all partitions with at most max_rows rows and parts at most max_part
inline std::vector<Partition> box_partitions(int max_rows, int max_part) {
    if (max_rows < 0 || max_part < 0) throw std::invalid_argument("negative box bounds");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int v = cap; v >= 1; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_part);
    std::sort(out.begin(), out.end());
    return out;
}

// direct character table c_lambda = chi_lambda(y~) over the k x (n-k) box
inline SchurCoeffTable chi_table(const std::vector<Rational>& y_tilde, int k, int n) {
    if (k < 1 || n <= k) throw std::invalid_argument("need 1 <= k < n");
    SchurCoeffTable table{k, {}};
    for (const Partition& la : box_partitions(k, n - k))
        table.coeff.emplace(la, char_value(la, y_tilde));
    return table;
}

/* A quadratic Plucker relation on partition-indexed coordinates:
 * sum of coeff * c_{first} * c_{second}. */
struct PluckerRelation {
    struct Term {
        Partition first, second;
        Rational coeff;
    };
    std::vector<Term> terms;
};

// columns {j_1 < ... < j_k} (1-based) of a k x n matrix correspond to
// the partition lambda_i = j_{k+1-i} - (k+1-i)
inline Partition plucker_partition(const std::vector<int>& cols) {
    const int k = static_cast<int>(cols.size());
    std::vector<int> parts(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) parts[i - 1] = cols[static_cast<size_t>(k - i)] - (k + 1 - i);
    return Partition(std::move(parts));
}

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = next; j <= n - (k - static_cast<int>(cur.size())) + 1; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// all maximal minors of a k x n matrix, in subset order
inline std::vector<Rational> maximal_minors(const RatMatrix& m,
                                            const std::vector<std::vector<int>>& subsets) {
    const size_t k = m.size();
    std::vector<Rational> out;
    out.reserve(subsets.size());
    for (const auto& cols : subsets) {
        RatMatrix sq(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sq[i][j] = m[i][static_cast<size_t>(cols[j] - 1)];
        out.push_back(rat_det(std::move(sq)));
    }
    return out;
}

}  // namespace detail

/* Quadratic relations satisfied by the maximal minors of every k x n
 * matrix, generated rather than hard-coded: the kernel of the evaluation
 * of minor pairs on random integer matrices, computed classwise (a
 * relation can only mix pairs whose column multisets agree, by scaling
 * single columns), then validated on independent random matrices.  The
 * fixed generation seed makes the relation list reproducible. */
inline std::vector<PluckerRelation> plucker_relations(int k, int n) {
    if (k < 1 || n <= k) throw std::invalid_argument("need 1 <= k < n");
    const auto subsets = detail::k_subsets(n, k);
    const size_t nsub = subsets.size();

    // group unordered pairs by the column-content vector of their union
    std::map<std::vector<int>, std::vector<std::pair<size_t, size_t>>> classes;
    for (size_t a = 0; a < nsub; ++a)
        for (size_t b = a; b < nsub; ++b) {
            std::vector<int> content(static_cast<size_t>(n), 0);
            for (int c : subsets[a]) ++content[static_cast<size_t>(c - 1)];
            for (int c : subsets[b]) ++content[static_cast<size_t>(c - 1)];
            classes[std::move(content)].emplace_back(a, b);
        }

    size_t widest = 0;
    for (const auto& [content, pairs] : classes) widest = std::max(widest, pairs.size());

    std::mt19937_64 rng(0x715c4d2f3a9e8b61ULL);
    auto draw = [&rng, k, n](int bound) {
        std::uniform_int_distribution<int> dist(-bound, bound);
        RatMatrix m(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(n)));
        for (auto& row : m)
            for (auto& x : row) x = Rational(dist(rng));
        return m;
    };

    const size_t n_fit = widest + 6, n_check = 8;
    std::vector<std::vector<Rational>> fit_minors, check_minors;
    for (size_t i = 0; i < n_fit; ++i)
        fit_minors.push_back(detail::maximal_minors(draw(9), subsets));
    for (size_t i = 0; i < n_check; ++i)
        check_minors.push_back(detail::maximal_minors(draw(50), subsets));

    std::vector<PluckerRelation> rels;
    for (const auto& [content, pairs] : classes) {
        const size_t width = pairs.size();
        if (width < 2) continue;
        RatMatrix sys(width + 6, std::vector<Rational>(width));
        for (size_t r = 0; r < width + 6; ++r)
            for (size_t c = 0; c < width; ++c)
                sys[r][c] = fit_minors[r][pairs[c].first] * fit_minors[r][pairs[c].second];
        for (auto& vec : rat_kernel(std::move(sys))) {
            for (const auto& minors : check_minors) {
                Rational val(0);
                for (size_t c = 0; c < width; ++c)
                    val += vec[c] * minors[pairs[c].first] * minors[pairs[c].second];
                if (val != 0)
                    throw std::logic_error("generated relation failed independent validation");
            }
            size_t lead = 0;
            while (lead < width && vec[lead] == 0) ++lead;
            const Rational scale = Rational(1) / vec[lead];
            PluckerRelation rel;
            for (size_t c = 0; c < width; ++c) {
                if (vec[c] == 0) continue;
                rel.terms.push_back({plucker_partition(subsets[pairs[c].first]),
                                     plucker_partition(subsets[pairs[c].second]),
                                     vec[c] * scale});
            }
            rels.push_back(std::move(rel));
        }
    }
    return rels;
}

// values of every generated Gr(k,n) relation on a coefficient table
inline std::vector<Rational> plucker_residuals(const SchurCoeffTable& coeffs, int k, int n) {
    std::vector<Rational> out;
    for (const auto& rel : plucker_relations(k, n)) {
        Rational val(0);
        for (const auto& term : rel.terms)
            val += term.coeff * coeffs.at(term.first) * coeffs.at(term.second);
        out.push_back(val);
    }
    return out;
}

// shared sample pool for rational test points; small denominators keep
// the exact arithmetic fast
inline Rational pool_rational(std::mt19937_64& rng) {
    static const std::array<std::pair<long, long>, 8> pool = {
        {{1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}, {2, 3}, {-2, 3}}};
    const auto& [num, den] = pool[static_cast<size_t>(rng() % pool.size())];
    return make_rational(num, den);
}

}  // namespace hlpp
