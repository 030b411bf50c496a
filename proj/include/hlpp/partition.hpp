#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hlpp/series.hpp"

namespace hlpp {

// Young diagram: weakly decreasing positive parts, canonical form
// (no trailing zeros), value semantics.  Ordered so it can key maps.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("parts must be weakly decreasing and positive");
        }
    }

    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based part access; zero beyond the length, as in the usual convention.
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// lambda >- mu : lambda_j >= mu_j >= lambda_{j+1} for all j
// (equivalently, lambda/mu is a horizontal strip).
inline bool interlaces(const Partition& lambda, const Partition& mu) {
    const int n = std::max(lambda.length(), mu.length());
    for (int j = 1; j <= n; ++j) {
        if (lambda.part(j) < mu.part(j)) return false;
        if (mu.part(j) < lambda.part(j + 1)) return false;
    }
    return true;
}

inline std::map<int, int> multiplicities(const Partition& mu) {
    std::map<int, int> m;
    for (int p : mu.parts()) ++m[p];
    return m;
}

/* b_mu(t) = prod_j prod_{k=1}^{p_j(mu)} (1 - t^k), the norm of the
 * Hall-Littlewood basis element labelled by mu. */
inline IntPolyT b_poly(const Partition& mu) {
    IntPolyT b(1);
    for (const auto& [part, mult] : multiplicities(mu)) {
        (void)part;
        for (int k = 1; k <= mult; ++k) b *= IntPolyT::one_minus_power(k);
    }
    return b;
}

/* Phi_{lambda/mu}(t) = prod_{j in J} (1 - t^{p_j(mu)}) over the part
 * sizes j whose multiplicity drops by one from mu to lambda, i.e.
 * J = { j : p_j(lambda) - p_j(mu) = -1 }; zero when the pair does not
 * interlace.  This is the one-variable skew transition factor. */
inline IntPolyT phi_poly(const Partition& lambda, const Partition& mu) {
    if (!interlaces(lambda, mu)) return IntPolyT();
    const auto pl = multiplicities(lambda);
    IntPolyT phi(1);
    for (const auto& [j, pj_mu] : multiplicities(mu)) {
        auto it = pl.find(j);
        const int pj_lambda = it == pl.end() ? 0 : it->second;
        if (pj_lambda - pj_mu == -1) phi *= IntPolyT::one_minus_power(pj_mu);
    }
    return phi;
}

/* One-variable skew Hall-Littlewood function evaluated at z^{arg_half/2}:
 * P_{lambda/mu} = Phi_{lambda/mu}(t) * z^{(arg_half/2)(|lambda|-|mu|)}
 * when lambda >- mu, else 0.  Exponents past the truncation vanish. */
inline ZSeries skew_hl(const Partition& lambda, const Partition& mu, int order_half,
                       int arg_half) {
    ZSeries s(order_half);
    const IntPolyT phi = phi_poly(lambda, mu);
    if (phi.is_zero()) return s;
    s.add_term(arg_half * (lambda.sum() - mu.sum()), phi);
    return s;
}

// All partitions of n, in lexicographically decreasing part order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            rec(remaining - p, p);
            stack.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/* Visit every nu with mu >- nu.  The interlacing condition decouples:
 * nu_j ranges over [mu_{j+1}, mu_j] independently, and the weak
 * decrease of nu is automatic. */
template <typename F>
void for_each_interlacing_below(const Partition& mu, F&& visit) {
    const int l = mu.length();
    std::vector<int> nu(l);
    std::function<void(int)> rec = [&](int j) {
        if (j > l) {
            std::vector<int> parts(nu.begin(), nu.begin() + l);
            visit(Partition(std::move(parts)));
            return;
        }
        for (int v = mu.part(j + 1); v <= mu.part(j); ++v) {
            nu[j - 1] = v;
            rec(j + 1);
        }
    };
    rec(1);
}

/* Visit every lambda with lambda >- mu and |lambda| - |mu| <= max_gain.
 * lambda_1 >= mu_1 is open-ended, bounded here by the volume budget;
 * lambda_{j} for j >= 2 is pinned to [mu_j, mu_{j-1}]. */
template <typename F>
void for_each_interlacing_above(const Partition& mu, int max_gain, F&& visit) {
    if (max_gain < 0) return;
    const int l = mu.length();
    std::vector<int> lam(l + 1);
    // choose parts from the last row upward so the budget prunes tightly
    std::function<void(int, int)> rec = [&](int j, int budget) {
        if (j == 1) {
            for (int v = mu.part(1); v <= mu.part(1) + budget; ++v) {
                lam[0] = v;
                std::vector<int> parts;
                for (int x : lam)
                    if (x > 0) parts.push_back(x);
                visit(Partition(std::move(parts)));
            }
            return;
        }
        for (int v = mu.part(j); v <= mu.part(j - 1); ++v) {
            const int spent = v - mu.part(j);
            if (spent > budget) break;
            lam[j - 1] = v;
            rec(j - 1, budget - spent);
        }
    };
    rec(l + 1, max_gain);
}

}  // namespace hlpp
