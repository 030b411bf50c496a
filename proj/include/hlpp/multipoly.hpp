#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlpp/numeric.hpp"

namespace hlpp {

/* Polynomial in x_1, x_2, ... with rational coefficients, truncated by
 * weighted degree where x_k carries weight k.  Exponent keys are stored
 * with trailing zeros trimmed; the empty key is the constant term.
 * Monomials heavier than the cutoff are silently dropped, which is the
 * single truncation rule used for every tau computation. */
class RatMultiPoly {
  public:
    using Exponents = std::vector<int>;

    explicit RatMultiPoly(int weight_cutoff) : cutoff_(weight_cutoff) {
        if (weight_cutoff < 0) throw std::invalid_argument("negative weight cutoff");
    }

    static int weight_of(const Exponents& e) {
        int w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
        return w;
    }

    static RatMultiPoly constant(const Rational& c, int weight_cutoff) {
        RatMultiPoly p(weight_cutoff);
        p.add_term({}, c);
        return p;
    }

    // x_k (1-based); vanishes when its weight k exceeds the cutoff
    static RatMultiPoly variable(int k, int weight_cutoff) {
        if (k < 1) throw std::invalid_argument("variable index must be positive");
        RatMultiPoly p(weight_cutoff);
        Exponents e(k, 0);
        e[k - 1] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    int weight_cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coeff(Exponents e) const {
        trim(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational& c) {
        if (c == 0) return;
        trim(e);
        for (int x : e)
            if (x < 0) throw std::invalid_argument("negative exponent");
        if (weight_of(e) > cutoff_) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const RatMultiPoly& o) const {
        return cutoff_ == o.cutoff_ && terms_ == o.terms_;
    }

    RatMultiPoly& operator+=(const RatMultiPoly& o) {
        check_cutoff(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    RatMultiPoly& operator-=(const RatMultiPoly& o) {
        check_cutoff(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend RatMultiPoly operator+(RatMultiPoly a, const RatMultiPoly& b) { return a += b; }
    friend RatMultiPoly operator-(RatMultiPoly a, const RatMultiPoly& b) { return a -= b; }
    RatMultiPoly operator-() const {
        RatMultiPoly r(cutoff_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend RatMultiPoly operator*(const RatMultiPoly& a, const RatMultiPoly& b) {
        a.check_cutoff(b);
        RatMultiPoly r(a.cutoff_);
        for (const auto& [ea, ca] : a.terms_) {
            const int wa = weight_of(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (wa + weight_of(eb) > r.cutoff_) continue;
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    RatMultiPoly& operator*=(const RatMultiPoly& o) { return *this = *this * o; }

    RatMultiPoly scaled(const Rational& c) const {
        RatMultiPoly r(cutoff_);
        if (c == 0) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
        return r;
    }

    // partial derivative with respect to x_k
    RatMultiPoly derivative(int k) const {
        if (k < 1) throw std::invalid_argument("variable index must be positive");
        RatMultiPoly r(cutoff_);
        const size_t idx = static_cast<size_t>(k - 1);
        for (const auto& [e, c] : terms_) {
            if (idx >= e.size() || e[idx] == 0) continue;
            Exponents d = e;
            --d[idx];
            r.add_term(std::move(d), c * Rational(e[idx]));
        }
        return r;
    }

    // copy truncated to a smaller cutoff
    RatMultiPoly truncated(int new_cutoff) const {
        RatMultiPoly r(new_cutoff);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    // exact evaluation; point[i] is the value of x_{i+1}
    Rational eval(const std::vector<Rational>& point) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            if (e.size() > point.size())
                throw std::invalid_argument("evaluation point has too few coordinates");
            Rational m = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) m *= rational_pow(point[i], static_cast<unsigned long>(e[i]));
            total += m;
        }
        return total;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        // order terms by weight, then by exponent key, for stable output
        std::multimap<std::pair<int, Exponents>, Rational> ordered;
        for (const auto& [e, c] : terms_) ordered.emplace(std::make_pair(weight_of(e), e), c);
        std::ostringstream out;
        bool first = true;
        for (const auto& [key, c] : ordered) {
            const auto& e = key.second;
            if (!first) out << (c > 0 ? " + " : " - ");
            if (first && c < 0) out << "-";
            first = false;
            const Rational ac = c > 0 ? c : Rational(-c);
            const bool unit = ac == 1 && !e.empty();
            if (!unit) out << to_decimal(ac);
            bool any = false;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (any || !unit) out << "*";
                any = true;
                out << var << (i + 1);
                if (e[i] > 1) out << "^" << e[i];
            }
        }
        return out.str();
    }

  private:
    static void trim(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    void check_cutoff(const RatMultiPoly& o) const {
        if (cutoff_ != o.cutoff_) throw std::invalid_argument("weight cutoff mismatch");
    }

    int cutoff_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hlpp
