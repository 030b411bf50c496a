#pragma once

#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hlpp/partition.hpp"
#include "hlpp/poly.hpp"
#include "hlpp/qseries.hpp"
#include "hlpp/series.hpp"

namespace hlpp {

/* Transfer-matrix evaluation of the plane-partition generating functions.
 *
 * A plane partition is read as a sequence of diagonal slices, and each
 * slice transition is an application of a raising operator on the free
 * module spanned by partitions: |mu> picks up every lambda >- mu with
 * coefficient Phi_{lambda/mu}(t) and a power of z measuring the added
 * volume.  Summing the resulting chain weights over a central slice mu_0
 * with the multiplier b_{mu_0}(t) reproduces the path weight A_pi(t) of
 * every array exactly once, so the full generating function becomes a
 * quadratic expression in the chain sums.
 */

/* State vector: finitely many partitions, each carrying a truncated
 * z-series coefficient.  Zero series are never stored, and all stored
 * series share the state's truncation order. */
struct WeightedState {
    int order_half;
    std::map<Partition, ZSeries> terms;

    explicit WeightedState(int order_half_) : order_half(order_half_) {
        if (order_half < 0) throw std::invalid_argument("negative truncation order");
    }

    static WeightedState vacuum(int order_half) {
        WeightedState st(order_half);
        st.terms.emplace(Partition(), ZSeries::one(order_half));
        return st;
    }

    void add(const Partition& mu, ZSeries s) {
        if (s.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(mu, std::move(s));
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

/* One layer of the raising operator with argument z^{arg_half/2}:
 *   |mu>  ->  sum over lambda >- mu of Phi_{lambda/mu}(t)
 *             z^{(arg_half/2)(|lambda|-|mu|)} |lambda>.
 * The sum is finite because gains pushing every retained exponent past
 * the truncation order are pruned. */
inline WeightedState gamma_minus_apply(const WeightedState& state, int arg_half) {
    if (arg_half < 1) throw std::invalid_argument("layer argument must be positive");
    WeightedState out(state.order_half);
    for (const auto& [mu, series] : state.terms) {
        const int room = state.order_half - series.min_half_exp();
        if (room < 0) continue;
        const int max_gain = room / arg_half;
        for_each_interlacing_above(mu, max_gain, [&](const Partition& lambda) {
            const int gain = lambda.sum() - mu.sum();
            ZSeries contrib = series.shifted(arg_half * gain);
            if (gain > 0) contrib = contrib.scaled(phi_poly(lambda, mu));
            out.add(lambda, std::move(contrib));
        });
    }
    return out;
}

namespace detail {

// State reached from the vacuum through the given layers, applied from
// the last argument to the first; entry mu then holds the sum over all
// ascent chains empty = nu_M -< ... -< nu_0 = mu, where the step into
// nu_{k-1} carries z^{(arg_halves[k-1]/2)(|nu_{k-1}|-|nu_k|)}.
inline WeightedState ascend_all(const std::vector<int>& arg_halves, int order_half) {
    WeightedState st = WeightedState::vacuum(order_half);
    for (auto it = arg_halves.rbegin(); it != arg_halves.rend(); ++it)
        st = gamma_minus_apply(st, *it);
    return st;
}

/* Sum of b_{mu}(t) * w_mu^2 over the entries w_mu of a chain-sum state,
 * evaluated as (b*w)^2 / b with a hard-failing exact division.  The
 * division succeeding for every mu doubles as a correctness check on the
 * Phi/b bookkeeping.  The mu-sum is striped across workers; exact
 * arithmetic makes the result independent of the worker count. */
inline ZSeries quadratic_sum(const WeightedState& st, int workers) {
    std::vector<const std::pair<const Partition, ZSeries>*> entries;
    entries.reserve(st.terms.size());
    for (const auto& e : st.terms) entries.push_back(&e);

    const int n = static_cast<int>(entries.size());
    if (workers < 1) workers = 1;
    if (workers > n && n > 0) workers = n;

    auto stripe_sum = [&](int w) {
        ZSeries acc(st.order_half);
        for (int i = w; i < n; i += workers) {
            const auto& [mu, series] = *entries[i];
            const IntPolyT b = b_poly(mu);
            const ZSeries me = series.scaled(b);
            acc += (me * me).divided_exact(b);
        }
        return acc;
    };

    ZSeries total(st.order_half);
    if (workers <= 1) {
        total = stripe_sum(0);
    } else {
        std::vector<ZSeries> partial(workers, ZSeries(st.order_half));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { partial[w] = stripe_sum(w); });
        for (auto& th : pool) th.join();
        for (const auto& p : partial) total += p;
    }

    for (const auto& [half_exp, coeff] : total.terms()) {
        (void)coeff;
        if (half_exp % 2 != 0)
            throw std::logic_error("scalar product acquired a half-integer exponent");
    }
    return total;
}

}  // namespace detail

/* Chain sum from the vacuum to mu through the given layers: the series
 * sum over all ascent chains empty -< ... -< mu of the Phi factors times
 * the layer-weighted z powers.  No b normalization is applied here. */
inline ZSeries ascend_weight(const Partition& mu, const std::vector<int>& arg_halves,
                             int order_half) {
    const WeightedState st = detail::ascend_all(arg_halves, order_half);
    auto it = st.terms.find(mu);
    return it == st.terms.end() ? ZSeries(order_half) : it->second;
}

/* Generating function of all plane partitions, truncated to z^order:
 *   sum over pi of A_pi(t) z^{|pi|}.
 * Layer k of the ascent carries z^{(2k-1)/2}; a nonempty slice at
 * distance k from the center forces at least k+1 boxes, so order layers
 * per side are enough below z^{order+1} (checked exhaustively in the
 * tests by widening the layer count).  Both sides of the center use the
 * same ascent by mirror symmetry of the slice weights. */
inline ZSeries scalar_product_S(int order, int workers = 1) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    std::vector<int> args;
    args.reserve(order);
    for (int k = 1; k <= order; ++k) args.push_back(2 * k - 1);
    return detail::quadratic_sum(detail::ascend_all(args, 2 * order), workers);
}

// Same sum restricted to arrays whose support fits an s-by-s base:
// exactly s layers each side.
inline ZSeries scalar_product_S_box(int s, int order, int workers = 1) {
    if (s < 1) throw std::invalid_argument("box side must be positive");
    if (order < 0) throw std::invalid_argument("negative truncation order");
    std::vector<int> args;
    args.reserve(s);
    for (int k = 1; k <= s; ++k) args.push_back(2 * k - 1);
    return detail::quadratic_sum(detail::ascend_all(args, 2 * order), workers);
}

// prod_{j=1..order} ((1 - t z^j)/(1 - z^j))^j, truncated to z^order;
// factors with j > order cannot touch the retained exponents.
inline ZSeries product_formula_S(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    const int oh = 2 * order;
    ZSeries acc = ZSeries::one(oh);
    for (int j = 1; j <= order; ++j) {
        ZSeries numer = ZSeries::one(oh);
        numer.add_term(2 * j, IntPolyT::monomial(1, -1));
        const ZSeries factor = numer * ZSeries::geometric(2 * j, oh);
        acc *= factor.pow(j);
    }
    return acc;
}

// prod_{i,j=1..s} (1 - t z^{i+j-1})/(1 - z^{i+j-1}), truncated to z^order.
inline ZSeries product_formula_S_box(int s, int order) {
    if (s < 1) throw std::invalid_argument("box side must be positive");
    if (order < 0) throw std::invalid_argument("negative truncation order");
    const int oh = 2 * order;
    ZSeries acc = ZSeries::one(oh);
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            const int e = i + j - 1;
            if (e > order) continue;
            ZSeries numer = ZSeries::one(oh);
            numer.add_term(2 * e, IntPolyT::monomial(1, -1));
            acc *= numer * ZSeries::geometric(2 * e, oh);
        }
    }
    return acc;
}

// Exact value of prod_{i,j} (1 - t u_i v_j)/(1 - u_i v_j).
inline Rational cauchy_rational(const std::vector<Rational>& u,
                                const std::vector<Rational>& v, const Rational& t_val) {
    Rational acc(1);
    for (const Rational& ui : u) {
        for (const Rational& vj : v) {
            const Rational x = ui * vj;
            if (x == Rational(1)) throw std::domain_error("pole: u_i v_j = 1");
            acc *= (Rational(1) - t_val * x) / (Rational(1) - x);
        }
    }
    return acc;
}

// prod_{n=1..order} ((t z^n; q)_inf / (z^n; q)_inf)^n, truncated to
// z^order and q^q_order; the q = 0 slice is product_formula_S.
inline ZSeriesTQ macdonald_product_S(int order, int q_order) {
    if (order < 0 || q_order < 0) throw std::invalid_argument("negative truncation order");
    const int oh = 2 * order;
    ZSeriesTQ acc = ZSeriesTQ::one(oh, q_order);
    for (int n = 1; n <= order; ++n) {
        const ZSeriesTQ factor = q_pochhammer_factor(2 * n, q_order, oh, q_order) *
                                 q_pochhammer_inverse_factor(2 * n, q_order, oh, q_order);
        acc = acc * factor.pow(n);
    }
    return acc;
}

}  // namespace hlpp
