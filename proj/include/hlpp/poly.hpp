#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hlpp/numeric.hpp"

namespace hlpp {

/* Dense univariate polynomial over the integers in the deformation
 * parameter t.  The coefficient vector never stores trailing zeros, so
 * degree() is simply size()-1 and the zero polynomial is the empty
 * vector.  Degrees stay small in this library (bounded by partition
 * statistics), hence dense storage. */
class IntPolyT {
  public:
    IntPolyT() = default;
    IntPolyT(long c) : c_{Integer(c)} { trim(); }
    IntPolyT(Integer c) : c_{std::move(c)} { trim(); }

    static IntPolyT monomial(int deg, Integer coeff = 1) {
        IntPolyT p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, Integer(0));
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }

    // 1 - t^k, the building block of all Hall-Littlewood weights.
    static IntPolyT one_minus_power(int k) {
        IntPolyT p;
        p.c_.assign(k + 1, Integer(0));
        p.c_[0] = 1;
        p.c_[k] -= 1;  // k = 0 collapses to the zero polynomial
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Integer& coeff(int k) const {
        static const Integer zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }

    bool operator==(const IntPolyT& o) const { return c_ == o.c_; }

    IntPolyT& operator+=(const IntPolyT& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPolyT& operator-=(const IntPolyT& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend IntPolyT operator+(IntPolyT a, const IntPolyT& b) { return a += b; }
    friend IntPolyT operator-(IntPolyT a, const IntPolyT& b) { return a -= b; }
    IntPolyT operator-() const {
        IntPolyT r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend IntPolyT operator*(const IntPolyT& a, const IntPolyT& b) {
        IntPolyT r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    IntPolyT& operator*=(const IntPolyT& o) { return *this = *this * o; }

    Rational eval(const Rational& t) const {  // Horner
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
        return acc;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Integer a = c_[k];
            if (s.empty()) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            const bool unit = (a == 1 && k > 0);
            if (!unit) s += a.get_str();
            if (k >= 1) {
                s += var;
                if (k >= 2) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

    const std::vector<Integer>& coeffs() const { return c_; }

  private:
    std::vector<Integer> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline IntPolyT poly_mul(const IntPolyT& a, const IntPolyT& b) { return a * b; }

struct InexactDivision : std::runtime_error {
    InexactDivision(const char* what) : std::runtime_error(what) {}
};

/* Long division in Z[t].  Every leading-term step must divide exactly
 * over the integers; all divisors arising here (cyclotomic polynomials,
 * b_mu(t) and friends) have unit leading coefficient, so this is the
 * natural domain.  A non-dividing step throws InexactDivision. */
inline std::pair<IntPolyT, IntPolyT> poly_divmod(const IntPolyT& a, const IntPolyT& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    IntPolyT q, r = a;
    const int db = b.degree();
    const Integer& lead = b.coeff(db);
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        Integer c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.coeff(r.degree()).get_mpz_t(),
                    lead.get_mpz_t());
        if (rem != 0) throw InexactDivision("leading coefficient does not divide");
        IntPolyT step = IntPolyT::monomial(k, c);
        q += step;
        r -= step * b;
    }
    return {q, r};
}

// Exact quotient a/b; throws InexactDivision unless b divides a in Z[t].
inline IntPolyT divide_exact(const IntPolyT& a, const IntPolyT& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw InexactDivision("nonzero remainder in exact division");
    return q;
}

/* n-th cyclotomic polynomial, built by dividing t^n - 1 by Phi_d for
 * every proper divisor d of n.  Only small n occur (root-of-unity
 * specializations of t), so the recursion is cheap. */
inline IntPolyT cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    IntPolyT p = IntPolyT::monomial(n) - IntPolyT(1);  // t^n - 1
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(p, cyclotomic(d));
    }
    return p;
}

/* Remainder of p modulo Phi_n(t): the canonical representative of p in
 * the exact quotient ring Z[t]/Phi_n(t), which realizes t = primitive
 * n-th root of unity without floating point. */
inline IntPolyT cyclotomic_reduce(const IntPolyT& p, int n) {
    if (n < 2) throw std::invalid_argument("cyclotomic_reduce requires n >= 2");
    return poly_divmod(p, cyclotomic(n)).second;
}

}  // namespace hlpp
