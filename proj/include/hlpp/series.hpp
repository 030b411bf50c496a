#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "hlpp/poly.hpp"

namespace hlpp {

/* Truncated formal power series in z with IntPolyT coefficients.
 *
 * Exponents are tracked in half-units: the stored key k means z^{k/2}.
 * Vertex-operator arguments are odd half-powers z^{(2k-1)/2}, so this
 * keeps every intermediate value exactly representable; completed
 * generating functions come out with even keys only, and callers can
 * assert that via integer_coefficients().
 *
 * order_half is the inclusive truncation bound: terms with half-exponent
 * beyond it are discarded by every operation.  Binary operations demand
 * equal truncation orders rather than silently taking a minimum. */
class ZSeries {
  public:
    explicit ZSeries(int order_half) : order_half_(order_half) {
        if (order_half < 0) throw std::invalid_argument("negative truncation order");
    }

    static ZSeries one(int order_half) {
        ZSeries s(order_half);
        s.set(0, IntPolyT(1));
        return s;
    }

    static ZSeries monomial(int half_exp, IntPolyT c, int order_half) {
        ZSeries s(order_half);
        s.add_term(half_exp, std::move(c));
        return s;
    }

    // 1 + z^{a/2} + z^{2a/2} + ... : the expansion of 1/(1 - z^{a/2}).
    static ZSeries geometric(int step_half, int order_half) {
        if (step_half < 1) throw std::invalid_argument("geometric step must be >= 1");
        ZSeries s(order_half);
        for (int e = 0; e <= order_half; e += step_half) s.set(e, IntPolyT(1));
        return s;
    }

    int order_half() const { return order_half_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, IntPolyT>& terms() const { return terms_; }

    const IntPolyT& coeff(int half_exp) const {
        static const IntPolyT zero;
        auto it = terms_.find(half_exp);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(int half_exp, IntPolyT c) {
        if (half_exp < 0) throw std::invalid_argument("negative z exponent");
        if (half_exp > order_half_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(half_exp, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const ZSeries& o) const {
        return order_half_ == o.order_half_ && terms_ == o.terms_;
    }

    ZSeries& operator+=(const ZSeries& o) {
        check_order(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }

    ZSeries& operator-=(const ZSeries& o) {
        check_order(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }

    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        a.check_order(b);
        ZSeries r(a.order_half_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb > r.order_half_) break;  // keys ascend
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

    ZSeries scaled(const IntPolyT& p) const {
        ZSeries r(order_half_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * p);
        return r;
    }

    ZSeries shifted(int shift_half) const {  // multiply by z^{shift_half/2}
        ZSeries r(order_half_);
        for (const auto& [e, c] : terms_) r.add_term(e + shift_half, c);
        return r;
    }

    ZSeries pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative series power");
        ZSeries acc = one(order_half_), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    // Per-coefficient exact division by a polynomial; InexactDivision on failure.
    ZSeries divided_exact(const IntPolyT& p) const {
        ZSeries r(order_half_);
        for (const auto& [e, c] : terms_) r.set(e, divide_exact(c, p));
        return r;
    }

    // View with integer z-exponents; throws if any odd half-exponent survives.
    std::map<int, IntPolyT> integer_coefficients() const {
        std::map<int, IntPolyT> out;
        for (const auto& [e, c] : terms_) {
            if (e % 2 != 0) throw std::logic_error("odd half-exponent in completed series");
            out.emplace(e / 2, c);
        }
        return out;
    }

    int min_half_exp() const {  // order_half+1 when zero
        return terms_.empty() ? order_half_ + 1 : terms_.begin()->first;
    }

    std::string str(const std::string& zvar = "z") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            const std::string cs = c.str();
            if (e == 0) {
                s += cs;
                continue;
            }
            const bool bare = c.degree() == 0 && !(c.coeff(0) < 0);
            if (c == IntPolyT(1)) {
                // coefficient 1: print the power alone
            } else if (bare) {
                s += cs;
            } else {
                s += "(" + cs + ")";
            }
            s += zvar;
            if (e != 2) s += (e % 2 == 0) ? "^" + std::to_string(e / 2)
                                          : "^(" + std::to_string(e) + "/2)";
        }
        return s;
    }

  private:
    int order_half_;
    std::map<int, IntPolyT> terms_;

    void set(int half_exp, IntPolyT c) {
        if (half_exp > order_half_) return;
        if (c.is_zero()) terms_.erase(half_exp);
        else terms_[half_exp] = std::move(c);
    }

    void check_order(const ZSeries& o) const {
        if (order_half_ != o.order_half_)
            throw std::invalid_argument("series truncation orders differ");
    }
};

inline ZSeries series_mul(const ZSeries& a, const ZSeries& b) { return a * b; }

}  // namespace hlpp
