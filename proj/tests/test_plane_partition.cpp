#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hlpp/plane_partition.hpp"
#include "hlpp/series.hpp"

using namespace hlpp;

namespace {

// Worked example used throughout: a volume-21 array with eight nonempty
// diagonal slices.
const std::vector<std::vector<int>> kArrayA = {
    {4, 2, 1, 1, 1}, {3, 2, 1, 1}, {2, 1, 1}, {1}};

// Larger worked example: volume 114, with thirteen level-1 paths, three
// level-2 paths and one level-3 path.
const std::vector<std::vector<int>> kArrayB = {
    {5, 5, 5, 5, 4, 2, 1}, {5, 5, 5, 4, 3, 2}, {5, 5, 5, 3, 3, 2},
    {4, 4, 4, 3, 3, 1},    {4, 4, 3, 2, 1},    {2, 2, 2},
    {1}};

// Counts of plane partitions by volume, n = 0..10.
const std::vector<long> kCounts = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};

PlanePartition pp(std::vector<std::vector<int>> rows) { return PlanePartition(std::move(rows)); }

std::vector<PlanePartition> all_up_to(int max_volume) {
    std::vector<PlanePartition> out;
    for (int n = 0; n <= max_volume; ++n) {
        auto batch = enumerate_by_volume(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace

TEST_CASE("plane partition canonical form and validation", "[planepart]") {
    PlanePartition p({{3, 1, 0, 0}, {2, 1}, {}});
    CHECK(p.row_count() == 2);
    CHECK(p.row_length(0) == 2);
    CHECK(p.at(0, 0) == 3);
    CHECK(p.at(0, 2) == 0);
    CHECK(p.at(5, 5) == 0);
    CHECK(p.at(-1, 0) == 0);
    CHECK(p.volume() == 7);
    CHECK(p == PlanePartition({{3, 1}, {2, 1}}));

    CHECK(PlanePartition().empty());
    CHECK(PlanePartition().volume() == 0);

    CHECK_THROWS_AS(PlanePartition({{1, 2}}), std::invalid_argument);          // row increases
    CHECK_THROWS_AS(PlanePartition({{1}, {2}}), std::invalid_argument);        // column increases
    CHECK_THROWS_AS(PlanePartition({{2, 1}, {1, 1, 1}}), std::invalid_argument);  // ragged support
    CHECK_THROWS_AS(PlanePartition({{2, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(PlanePartition({{}, {1}}), std::invalid_argument);  // interior empty row
}

TEST_CASE("diagonal slices of the worked example", "[planepart]") {
    const PlanePartition p(kArrayA);
    CHECK(p.volume() == 21);

    const std::map<int, Partition> expected = {
        {-3, Partition{1}}, {-2, Partition{2}},    {-1, Partition{3, 1}},
        {0, Partition{4, 2, 1}}, {1, Partition{2, 1}}, {2, Partition{1, 1}},
        {3, Partition{1}},  {4, Partition{1}}};
    CHECK(slices(p) == expected);

    // interlacing toward the central slice on both sides
    const auto slc = slices(p);
    CHECK(interlaces(slc.at(0), slc.at(-1)));
    CHECK(interlaces(slc.at(-1), slc.at(-2)));
    CHECK(interlaces(slc.at(-2), slc.at(-3)));
    CHECK(interlaces(slc.at(0), slc.at(1)));
    CHECK(interlaces(slc.at(1), slc.at(2)));
    CHECK(interlaces(slc.at(2), slc.at(3)));
    CHECK(interlaces(slc.at(3), slc.at(4)));

    CHECK(assemble(slc) == p);
}

TEST_CASE("assemble rejects non-interlacing slice data", "[planepart]") {
    CHECK_THROWS_AS(assemble({{0, Partition{1}}, {1, Partition{2}}}), SliceChainError);
    try {
        assemble({{0, Partition{1}}, {1, Partition{2}}});
    } catch (const SliceChainError& e) {
        CHECK(e.index == 1);
    }
    try {
        assemble({{-1, Partition{3}}, {0, Partition{2, 2}}});
    } catch (const SliceChainError& e) {
        CHECK(e.index == -1);
    }
    // a gap of empty slices between nonempty ones cannot interlace
    CHECK_THROWS_AS(assemble({{0, Partition{1}}, {2, Partition{1}}}), SliceChainError);
}

TEST_CASE("slice round-trip over all small arrays", "[planepart]") {
    for (const auto& p : all_up_to(7)) {
        CAPTURE(p.volume());
        CHECK(assemble(slices(p)) == p);
    }
}

TEST_CASE("level decomposition of small arrays", "[planepart]") {
    const PlanePartition single = pp({{1}});
    auto d = level_decompose(single);
    REQUIRE(d.paths.size() == 1);
    CHECK(d.paths[0].level == 1);
    CHECK(d.paths[0].height == 1);
    CHECK(d.max_level() == 1);
    CHECK(weight_A(single) == IntPolyT::one_minus_power(1));

    // flat 2x2 slab: the corner cell sits at level 2, the rest form one
    // level-1 path of height 1
    const PlanePartition slab({{1, 1}, {1, 1}});
    d = level_decompose(slab);
    CHECK(d.level == std::vector<std::vector<int>>{{2, 1}, {1, 1}});
    CHECK(d.path_mult == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(weight_A(slab) ==
          poly_mul(IntPolyT::one_minus_power(1), IntPolyT::one_minus_power(2)));

    // staircase: three isolated cells, all level 1
    const PlanePartition stairs({{2, 1}, {1}});
    d = level_decompose(stairs);
    CHECK(d.path_mult == std::map<int, int>{{1, 3}});
    REQUIRE(d.paths.size() == 3);
}

TEST_CASE("path decomposition of the large worked example", "[planepart]") {
    const PlanePartition p(kArrayB);
    CHECK(p.volume() == 114);

    const auto d = level_decompose(p);
    CHECK(d.path_mult == std::map<int, int>{{1, 13}, {2, 3}, {3, 1}});
    CHECK(d.max_level() == 3);

    IntPolyT expected(1);
    for (int i = 0; i < 13; ++i) expected *= IntPolyT::one_minus_power(1);
    for (int i = 0; i < 3; ++i) expected *= IntPolyT::one_minus_power(2);
    expected *= IntPolyT::one_minus_power(3);
    CHECK(weight_A(p) == expected);
    CHECK(weight_via_slices(p) == expected);

    // the lone level-3 path is the corner cell of the height-5 block; the
    // cells hugging it persist only two steps down the diagonal and form a
    // level-2 path of their own
    bool found3 = false, found2 = false;
    for (const auto& path : d.paths) {
        if (path.level == 3) {
            found3 = true;
            CHECK(path.height == 5);
            CHECK(path.cells == std::vector<std::pair<int, int>>{{0, 0}});
        }
        if (path.level == 2 && path.height == 5) {
            found2 = true;
            CHECK(path.cells ==
                  std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}});
        }
    }
    CHECK(found3);
    CHECK(found2);
}

TEST_CASE("cell levels never exceed the support dimensions", "[planepart]") {
    for (const auto& p : all_up_to(6)) {
        int max_cols = 0;
        for (int i = 0; i < p.row_count(); ++i) max_cols = std::max(max_cols, p.row_length(i));
        const auto d = level_decompose(p);
        for (const auto& row : d.level)
            for (int l : row) {
                CHECK(l >= 1);
                CHECK(l <= std::min(p.row_count(), max_cols));
            }
        // levels weakly decrease along every diagonal step taken from a cell
        // of equal height (the run shrinks by one)
        for (int i = 0; i < p.row_count(); ++i)
            for (int j = 0; j < p.row_length(i); ++j)
                if (p.at(i + 1, j + 1) == p.at(i, j))
                    CHECK(d.level[i][j] == d.level[i + 1][j + 1] + 1);
    }
}

TEST_CASE("enumeration counts by volume", "[planepart]") {
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(enumerate_by_volume(n).size() == static_cast<size_t>(kCounts[n]));
    }
}

TEST_CASE("slice-chain and cell-filling enumerators agree", "[planepart]") {
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        const auto via_slices = enumerate_by_volume(n);
        auto via_cells = enumerate_by_volume_cells(n);
        std::sort(via_cells.begin(), via_cells.end());
        CHECK(via_slices == via_cells);
        // no duplicates, and every array has the requested volume
        std::set<PlanePartition> distinct(via_slices.begin(), via_slices.end());
        CHECK(distinct.size() == via_slices.size());
        for (const auto& p : via_slices) CHECK(p.volume() == n);
    }
}

TEST_CASE("counts match the height-free generating product", "[planepart]") {
    // prod_{j<=N} (1 - z^j)^{-j} expanded as a z-series; its z^n
    // coefficient counts plane partitions of volume n.
    const int N = 8;
    ZSeries prod = ZSeries::one(2 * N);
    for (int j = 1; j <= N; ++j) prod *= ZSeries::geometric(2 * j, 2 * N).pow(j);
    for (int n = 0; n <= N; ++n) {
        CAPTURE(n);
        CHECK(prod.coeff(2 * n) == IntPolyT(Integer(kCounts[n])));
    }
}

TEST_CASE("weight A specializes to 1 at t = 0", "[planepart]") {
    for (const auto& p : all_up_to(6)) {
        CHECK(weight_A(p).eval(Rational(0)) == Rational(1));
    }
}

TEST_CASE("slice formula reproduces the path weight", "[planepart]") {
    for (const auto& p : all_up_to(8)) {
        CAPTURE(p.volume());
        CHECK(weight_via_slices(p) == weight_A(p));
    }
}

TEST_CASE("box enumeration", "[planepart]") {
    // 2x2 base, height at most 1: one array per partition inside a 2x2 box
    CHECK(enumerate_in_box(2, 1).size() == 6);
    // 2x2 base, height at most 2: the classical 2x2x2 box count
    CHECK(enumerate_in_box(2, 2).size() == 20);
    // 1x1 base: a single column of height up to h
    CHECK(enumerate_in_box(1, 5).size() == 6);

    // every enumerated array fits the box and none is repeated
    const auto boxed = enumerate_in_box(3, 2);
    std::set<PlanePartition> distinct(boxed.begin(), boxed.end());
    CHECK(distinct.size() == boxed.size());
    for (const auto& p : boxed) {
        CHECK(p.row_count() <= 3);
        for (int i = 0; i < p.row_count(); ++i) CHECK(p.row_length(i) <= 3);
        CHECK(p.at(0, 0) <= 2);
    }

    // with a volume cap, the box enumerator agrees with the volume
    // enumerators restricted to the box
    const int cap = 6;
    const auto capped = enumerate_in_box(2, 3, cap);
    std::vector<PlanePartition> expected;
    for (int n = 0; n <= cap; ++n)
        for (const auto& p : enumerate_by_volume(n)) {
            bool fits = p.row_count() <= 2 && p.at(0, 0) <= 3;
            for (int i = 0; fits && i < p.row_count(); ++i) fits = p.row_length(i) <= 2;
            if (fits) expected.push_back(p);
        }
    std::vector<PlanePartition> got = capped;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    CHECK_THROWS_AS(enumerate_in_box(0, 3), std::invalid_argument);
}
