#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hlpp/series.hpp"

namespace hlpp {

// Sparse bivariate polynomial in (t, q) over the integers.
class IntPolyTQ {
  public:
    using Key = std::pair<int, int>;  // (deg_t, deg_q)

    IntPolyTQ() = default;
    IntPolyTQ(long c) { add(0, 0, Integer(c)); }

    static IntPolyTQ monomial(int dt, int dq, Integer c = 1) {
        IntPolyTQ p;
        p.add(dt, dq, std::move(c));
        return p;
    }

    static IntPolyTQ from_t_poly(const IntPolyT& p) {
        IntPolyTQ r;
        for (int k = 0; k <= p.degree(); ++k) r.add(k, 0, p.coeff(k));
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Integer>& terms() const { return c_; }
    bool operator==(const IntPolyTQ& o) const { return c_ == o.c_; }

    void add(int dt, int dq, Integer v) {
        if (dt < 0 || dq < 0) throw std::invalid_argument("negative degree");
        if (v == 0) return;
        auto it = c_.find({dt, dq});
        if (it == c_.end()) {
            c_.emplace(Key{dt, dq}, std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    IntPolyTQ& operator+=(const IntPolyTQ& o) {
        for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
        return *this;
    }
    friend IntPolyTQ operator+(IntPolyTQ a, const IntPolyTQ& b) { return a += b; }

    IntPolyTQ operator-() const {
        IntPolyTQ r = *this;
        for (auto& [k, v] : r.c_) v = -v;
        return r;
    }

    // Product, discarding q-degrees above q_cap (pass -1 for no cap).
    IntPolyTQ mul(const IntPolyTQ& o, int q_cap = -1) const {
        IntPolyTQ r;
        for (const auto& [ka, va] : c_) {
            for (const auto& [kb, vb] : o.c_) {
                const int dq = ka.second + kb.second;
                if (q_cap >= 0 && dq > q_cap) continue;
                r.add(ka.first + kb.first, dq, va * vb);
            }
        }
        return r;
    }
    friend IntPolyTQ operator*(const IntPolyTQ& a, const IntPolyTQ& b) { return a.mul(b); }

    IntPolyT at_q0() const {
        IntPolyT r;
        for (const auto& [k, v] : c_) {
            if (k.second == 0) r += IntPolyT::monomial(k.first, v);
        }
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : c_) {
            Integer a = v;
            if (s.empty()) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            const bool has_var = k.first > 0 || k.second > 0;
            if (a != 1 || !has_var) s += a.get_str();
            if (k.first >= 1) s += "t" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second >= 1) s += "q" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return s;
    }

  private:
    std::map<Key, Integer> c_;
};

/* Truncated series in z over IntPolyTQ, truncated independently in the
 * z half-exponent (order_half) and in the q-degree (q_order).  The
 * t-degree is never truncated; it stays bounded at the scales used. */
class ZSeriesTQ {
  public:
    ZSeriesTQ(int order_half, int q_order) : order_half_(order_half), q_order_(q_order) {
        if (order_half < 0 || q_order < 0) throw std::invalid_argument("negative order");
    }

    static ZSeriesTQ one(int order_half, int q_order) {
        ZSeriesTQ s(order_half, q_order);
        s.add_term(0, IntPolyTQ(1));
        return s;
    }

    int order_half() const { return order_half_; }
    int q_order() const { return q_order_; }
    const std::map<int, IntPolyTQ>& terms() const { return terms_; }

    const IntPolyTQ& coeff(int half_exp) const {
        static const IntPolyTQ zero;
        auto it = terms_.find(half_exp);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(int half_exp, IntPolyTQ c) {
        if (half_exp < 0) throw std::invalid_argument("negative z exponent");
        if (half_exp > order_half_ || c.is_zero()) return;
        auto it = terms_.find(half_exp);
        if (it == terms_.end()) {
            terms_.emplace(half_exp, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const ZSeriesTQ& o) const {
        return order_half_ == o.order_half_ && q_order_ == o.q_order_ && terms_ == o.terms_;
    }

    friend ZSeriesTQ operator*(const ZSeriesTQ& a, const ZSeriesTQ& b) {
        if (a.order_half_ != b.order_half_ || a.q_order_ != b.q_order_)
            throw std::invalid_argument("series truncation orders differ");
        ZSeriesTQ r(a.order_half_, a.q_order_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb > r.order_half_) break;
                r.add_term(ea + eb, ca.mul(cb, r.q_order_));
            }
        }
        return r;
    }
    ZSeriesTQ& operator*=(const ZSeriesTQ& o) { return *this = *this * o; }

    ZSeriesTQ pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative series power");
        ZSeriesTQ acc = one(order_half_, q_order_), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    ZSeries at_q0() const {
        ZSeries r(order_half_);
        for (const auto& [e, c] : terms_) r.add_term(e, c.at_q0());
        return r;
    }

  private:
    int order_half_;
    int q_order_;
    std::map<int, IntPolyTQ> terms_;
};

/* prod_{n=0}^{n_max} (1 - t q^n z^{a_half/2}), truncated.  With
 * n_max >= q_order the truncation is exact: omitted factors differ from
 * 1 only in q-degrees past the cap. */
inline ZSeriesTQ q_pochhammer_factor(int a_half, int n_max, int order_half, int q_order) {
    if (a_half < 1) throw std::invalid_argument("z exponent must be positive");
    ZSeriesTQ acc = ZSeriesTQ::one(order_half, q_order);
    for (int n = 0; n <= n_max; ++n) {
        if (n > q_order) break;  // factor is 1 within truncation
        ZSeriesTQ f = ZSeriesTQ::one(order_half, q_order);
        f.add_term(a_half, IntPolyTQ::monomial(1, n, Integer(-1)));
        acc *= f;
    }
    return acc;
}

/* prod_{n=0}^{n_max} 1/(1 - q^n z^{a_half/2}) via geometric expansion of
 * each factor; the truncated reciprocal of (z^{a_half/2}; q)_{n_max+1}. */
inline ZSeriesTQ q_pochhammer_inverse_factor(int a_half, int n_max, int order_half,
                                             int q_order) {
    if (a_half < 1) throw std::invalid_argument("z exponent must be positive");
    ZSeriesTQ acc = ZSeriesTQ::one(order_half, q_order);
    for (int n = 0; n <= n_max; ++n) {
        if (n > q_order) break;
        ZSeriesTQ f(order_half, q_order);
        for (int k = 0; k * a_half <= order_half; ++k) {
            if (k * n > q_order) break;
            f.add_term(k * a_half, IntPolyTQ::monomial(0, k * n));
        }
        acc *= f;
    }
    return acc;
}

}  // namespace hlpp
