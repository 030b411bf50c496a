#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlpp/partition.hpp"

namespace hlpp {

/* Plane partition: a finite 2-D array of positive heights pi_{i,j},
 * weakly decreasing along rows and columns, stored row-major in
 * canonical form (no trailing zeros inside a row, no empty trailing
 * rows).  Cells outside the stored support read as height 0. */
class PlanePartition {
  public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        for (auto& row : rows_) {
            while (!row.empty() && row.back() == 0) row.pop_back();
        }
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty()) throw std::invalid_argument("interior empty row");
            for (size_t j = 0; j < row.size(); ++j) {
                if (row[j] < 1) throw std::invalid_argument("interior zero height");
                if (j + 1 < row.size() && row[j] < row[j + 1])
                    throw std::invalid_argument("row heights must weakly decrease");
                if (i > 0 && rows_[i - 1].size() <= j)
                    throw std::invalid_argument("support must be a Young diagram");
                if (i > 0 && rows_[i - 1][j] < row[j])
                    throw std::invalid_argument("column heights must weakly decrease");
            }
        }
    }

    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const {
        return (i >= 0 && i < row_count()) ? static_cast<int>(rows_[i].size()) : 0;
    }
    int at(int i, int j) const {
        if (i < 0 || j < 0 || i >= row_count() || j >= row_length(i)) return 0;
        return rows_[i][j];
    }
    int volume() const {
        int v = 0;
        for (const auto& row : rows_)
            for (int h : row) v += h;
        return v;
    }
    const std::vector<std::vector<int>>& height_rows() const { return rows_; }

    auto operator<=>(const PlanePartition&) const = default;

  private:
    std::vector<std::vector<int>> rows_;
};

/* Diagonal slices: mu_k = (pi_{0,k}, pi_{1,k+1}, ...) for k >= 0 and
 * mu_{-k} = (pi_{k,0}, pi_{k+1,1}, ...) for k >= 1.  Only nonempty
 * slices are stored; consecutive slices interlace toward the center,
 *   ... -< mu_{-1} -< mu_0 >- mu_1 >- ...
 */
inline std::map<int, Partition> slices(const PlanePartition& pi) {
    std::map<int, Partition> out;
    auto slice_at = [&pi](int k) {
        std::vector<int> parts;
        const int i0 = k < 0 ? -k : 0;
        const int j0 = k < 0 ? 0 : k;
        for (int r = 0; pi.at(i0 + r, j0 + r) > 0; ++r) parts.push_back(pi.at(i0 + r, j0 + r));
        return Partition(std::move(parts));
    };
    for (int k = 0; ; ++k) {
        Partition mu = slice_at(k);
        if (mu.empty()) break;
        out.emplace(k, std::move(mu));
    }
    for (int k = -1; ; --k) {
        Partition mu = slice_at(k);
        if (mu.empty()) break;
        out.emplace(k, std::move(mu));
    }
    return out;
}

struct SliceChainError : std::invalid_argument {
    int index;  // slice index at which the interlacing chain breaks
    explicit SliceChainError(int idx)
        : std::invalid_argument("slices do not interlace at index " + std::to_string(idx)),
          index(idx) {}
};

// Inverse of slices(); throws SliceChainError when adjacent slices fail
// to interlace.  Missing indices denote empty slices.
inline PlanePartition assemble(const std::map<int, Partition>& slc) {
    auto get = [&slc](int k) -> const Partition& {
        static const Partition empty;
        auto it = slc.find(k);
        return it == slc.end() ? empty : it->second;
    };
    int lo = 0, hi = 0;
    for (const auto& [k, mu] : slc) {
        if (mu.empty()) continue;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    for (int k = 1; k <= hi; ++k) {
        if (!interlaces(get(k - 1), get(k))) throw SliceChainError(k);
    }
    for (int k = 0; k > lo; --k) {
        if (!interlaces(get(k), get(k - 1))) throw SliceChainError(k - 1);
    }

    std::vector<std::vector<int>> rows;
    for (int i = 0; !get(-i).empty(); ++i) {
        std::vector<int> row;
        for (int j = 0; ; ++j) {
            const int h = get(j - i).part(std::min(i, j) + 1);
            if (h == 0) break;
            row.push_back(h);
        }
        rows.push_back(std::move(row));
    }
    return PlanePartition(std::move(rows));
}

struct PathInfo {
    int level;
    int height;
    std::vector<std::pair<int, int>> cells;
};

struct LevelDecomposition {
    std::vector<std::vector<int>> level;  // same support shape as the heights
    std::vector<PathInfo> paths;
    std::map<int, int> path_mult;  // level j -> p_j(pi)

    int max_level() const { return path_mult.empty() ? 0 : path_mult.rbegin()->first; }
};

/* A cell (i,j) has level l when its height persists exactly l steps
 * down the main diagonal: pi_{i,j} = ... = pi_{i+l-1,j+l-1} > pi_{i+l,j+l}.
 * A path is a maximal 4-connected set of cells sharing both level and
 * height; p_j(pi) counts the level-j paths. */
inline LevelDecomposition level_decompose(const PlanePartition& pi) {
    LevelDecomposition d;
    const int n = pi.row_count();
    d.level.resize(n);
    for (int i = 0; i < n; ++i) {
        d.level[i].resize(pi.row_length(i));
        for (int j = 0; j < pi.row_length(i); ++j) {
            const int h = pi.at(i, j);
            int l = 1;
            while (pi.at(i + l, j + l) == h) ++l;
            d.level[i][j] = l;
        }
    }

    std::vector<std::vector<char>> seen(n);
    for (int i = 0; i < n; ++i) seen[i].assign(pi.row_length(i), 0);
    auto in_support = [&](int i, int j) {
        return i >= 0 && i < n && j >= 0 && j < pi.row_length(i);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < pi.row_length(i); ++j) {
            if (seen[i][j]) continue;
            PathInfo path{d.level[i][j], pi.at(i, j), {}};
            std::vector<std::pair<int, int>> stack{{i, j}};
            seen[i][j] = 1;
            while (!stack.empty()) {
                auto [ci, cj] = stack.back();
                stack.pop_back();
                path.cells.emplace_back(ci, cj);
                const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ni = ci + di[k], nj = cj + dj[k];
                    if (!in_support(ni, nj) || seen[ni][nj]) continue;
                    if (pi.at(ni, nj) != path.height) continue;
                    if (d.level[ni][nj] != path.level) continue;
                    seen[ni][nj] = 1;
                    stack.emplace_back(ni, nj);
                }
            }
            std::sort(path.cells.begin(), path.cells.end());
            ++d.path_mult[path.level];
            d.paths.push_back(std::move(path));
        }
    }
    return d;
}

// A_pi(t) = prod_j (1 - t^j)^{p_j(pi)}
inline IntPolyT weight_A(const PlanePartition& pi) {
    IntPolyT w(1);
    for (const auto& [lvl, count] : level_decompose(pi).path_mult) {
        const IntPolyT f = IntPolyT::one_minus_power(lvl);
        for (int c = 0; c < count; ++c) w *= f;
    }
    return w;
}

/* The same weight assembled from the diagonal slices:
 * A_pi(t) = b_{mu_0}(t) * prod_{j>=1} Phi_{mu_{-j+1}/mu_{-j}}
 *                       * prod_{k>=1} Phi_{mu_{k-1}/mu_k}. */
inline IntPolyT weight_via_slices(const PlanePartition& pi) {
    const auto slc = slices(pi);
    auto get = [&slc](int k) -> const Partition& {
        static const Partition empty;
        auto it = slc.find(k);
        return it == slc.end() ? empty : it->second;
    };
    int lo = 0, hi = 0;
    for (const auto& [k, mu] : slc) {
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    IntPolyT w = b_poly(get(0));
    for (int j = 1; j <= -lo + 1; ++j) w *= phi_poly(get(-j + 1), get(-j));
    for (int k = 1; k <= hi + 1; ++k) w *= phi_poly(get(k - 1), get(k));
    return w;
}

namespace detail {

/* Row-major cell filler shared by the box enumerator and the second
 * (slice-independent) volume enumerator.  Heights are chosen cell by
 * cell under the row/column monotonicity constraints; rows may stop
 * early, and a row of length zero terminates the partition. */
template <typename F>
void fill_cells(std::vector<std::vector<int>>& rows, int i, int j, int used, int max_rows,
                int max_cols, int max_height, int min_volume, int max_volume, F& visit) {
    if (j == 0) rows.push_back({});
    // option 1: close the current row (and the partition, if the row is empty)
    if (!rows.back().empty() || used >= min_volume) {
        if (rows.back().empty()) {
            if (used >= min_volume) {
                rows.pop_back();
                visit(PlanePartition(rows));  // ctor copies; rows restored below
                rows.push_back({});
            }
        } else if (static_cast<int>(rows.size()) < max_rows) {
            fill_cells(rows, i + 1, 0, used, max_rows, max_cols, max_height, min_volume,
                       max_volume, visit);
        } else if (used >= min_volume) {
            visit(PlanePartition(rows));
        }
    }
    // option 2: place a cell at (i, j)
    if (j >= max_cols) {
        if (j == 0) rows.pop_back();
        return;
    }
    const int up = i == 0 ? max_height : (j < static_cast<int>(rows[i - 1].size())
                                              ? rows[i - 1][j]
                                              : 0);
    const int left = j == 0 ? max_height : rows[i][j - 1];
    const int cap = std::min({up, left, max_height, max_volume - used});
    for (int v = 1; v <= cap; ++v) {
        rows[i].push_back(v);
        fill_cells(rows, i, j + 1, used + v, max_rows, max_cols, max_height, min_volume,
                   max_volume, visit);
        rows[i].pop_back();
    }
    if (j == 0) rows.pop_back();
}

}  // namespace detail

/* Visit every plane partition with support inside an s-by-s base and
 * heights at most max_height; an optional volume cap prunes the search.
 * Visits happen in row-major lexicographic order, deterministically. */
template <typename F>
void for_each_in_box(int s, int max_height, F visit, int max_volume = -1) {
    if (s < 1 || max_height < 0) throw std::invalid_argument("invalid box bounds");
    if (max_volume < 0) max_volume = s * s * max_height;
    std::vector<std::vector<int>> rows;
    detail::fill_cells(rows, 0, 0, 0, s, s, max_height, 0, max_volume, visit);
}

inline std::vector<PlanePartition> enumerate_in_box(int s, int max_height,
                                                    int max_volume = -1) {
    std::vector<PlanePartition> out;
    for_each_in_box(s, max_height, [&](const PlanePartition& p) { out.push_back(p); },
                    max_volume);
    return out;
}

/* Independent volume-n enumerator: fills cells row-major with the
 * monotonicity checks above, no slicing involved.  Serves as the oracle
 * twin of enumerate_by_volume. */
inline std::vector<PlanePartition> enumerate_by_volume_cells(int n) {
    if (n < 0) throw std::invalid_argument("negative volume");
    std::vector<PlanePartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> rows;
    auto visit = [&](const PlanePartition& p) { out.push_back(p); };
    detail::fill_cells(rows, 0, 0, 0, n, n, n, n, n, visit);
    return out;
}

/* Primary volume-n enumerator: depth-first over diagonal slice chains.
 * For each central slice mu_0 and each pair of descending interlacing
 * chains (left, right) whose volumes add up to n - |mu_0|, the slices
 * are assembled back into the array form. */
inline std::vector<PlanePartition> enumerate_by_volume(int n) {
    if (n < 0) throw std::invalid_argument("negative volume");
    std::vector<PlanePartition> out;

    // all descending chains mu >- nu_1 >- nu_2 >- ... >- 0, keyed by total volume
    auto descending_chains = [](const Partition& mu, int budget) {
        std::map<int, std::vector<std::vector<Partition>>> by_volume;
        std::vector<Partition> stack;
        std::function<void(const Partition&, int)> rec = [&](const Partition& cur, int left) {
            if (cur.empty()) {
                by_volume[budget - left].push_back(stack);
                return;
            }
            for_each_interlacing_below(cur, [&](const Partition& nu) {
                if (nu.sum() > left) return;
                if (nu.empty()) {
                    by_volume[budget - left].push_back(stack);
                    return;
                }
                stack.push_back(nu);
                rec(nu, left - nu.sum());
                stack.pop_back();
            });
        };
        rec(mu, budget);
        return by_volume;
    };

    for (int c = 0; c <= n; ++c) {
        for (const Partition& mu0 : partitions_of(c)) {
            const auto chains = descending_chains(mu0, n - c);
            for (const auto& [vol_right, rights] : chains) {
                const auto lefts = chains.find(n - c - vol_right);
                if (lefts == chains.end()) continue;
                for (const auto& right : rights) {
                    for (const auto& left : lefts->second) {
                        std::map<int, Partition> slc;
                        if (!mu0.empty()) slc.emplace(0, mu0);
                        for (size_t k = 0; k < right.size(); ++k)
                            slc.emplace(static_cast<int>(k) + 1, right[k]);
                        for (size_t j = 0; j < left.size(); ++j)
                            slc.emplace(-(static_cast<int>(j) + 1), left[j]);
                        out.push_back(assemble(slc));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hlpp
