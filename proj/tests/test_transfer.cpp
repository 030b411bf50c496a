#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "hlpp/plane_partition.hpp"
#include "hlpp/transfer.hpp"

using namespace hlpp;

namespace {

const IntPolyT kOneMinusT = IntPolyT::one_minus_power(1);

// Brute-force side of the main identity: sum of A_pi(t) z^{|pi|} over
// all plane partitions of volume at most order.
ZSeries brute_series(int order) {
    ZSeries acc(2 * order);
    for (int n = 0; n <= order; ++n)
        for (const auto& p : enumerate_by_volume(n)) acc.add_term(2 * n, weight_A(p));
    return acc;
}

// The same sum restricted to an s-by-s base.
ZSeries brute_series_box(int s, int order) {
    ZSeries acc(2 * order);
    for (const auto& p : enumerate_in_box(s, order, order))
        acc.add_term(2 * p.volume(), weight_A(p));
    return acc;
}

}  // namespace

TEST_CASE("raising operator on the vacuum produces one-row partitions", "[transfer]") {
    const auto out = gamma_minus_apply(WeightedState::vacuum(6), 2);
    REQUIRE(out.terms.size() == 4);
    CHECK(out.terms.at(Partition{}) == ZSeries::one(6));
    CHECK(out.terms.at(Partition{1}) == ZSeries::monomial(2, IntPolyT(1), 6));
    CHECK(out.terms.at(Partition{2}) == ZSeries::monomial(4, IntPolyT(1), 6));
    CHECK(out.terms.at(Partition{3}) == ZSeries::monomial(6, IntPolyT(1), 6));
    for (const auto& [mu, series] : out.terms) {
        CHECK(mu.length() <= 1);
        CHECK_FALSE(series.is_zero());
    }
}

TEST_CASE("raising operator on a one-box state", "[transfer]") {
    WeightedState st(4);
    st.add(Partition{1}, ZSeries::one(4));
    const auto out = gamma_minus_apply(st, 2);

    REQUIRE(out.terms.size() == 5);
    CHECK(out.terms.at(Partition{1}) == ZSeries::one(4));
    CHECK(out.terms.at(Partition{2}) == ZSeries::monomial(2, kOneMinusT, 4));
    CHECK(out.terms.at(Partition{3}) == ZSeries::monomial(4, kOneMinusT, 4));
    CHECK(out.terms.at(Partition{1, 1}) == ZSeries::monomial(2, IntPolyT(1), 4));
    CHECK(out.terms.at(Partition{2, 1}) == ZSeries::monomial(4, IntPolyT(1), 4));
}

TEST_CASE("raising operator edge cases", "[transfer]") {
    const WeightedState empty(4);
    CHECK(gamma_minus_apply(empty, 2).terms.empty());
    CHECK_THROWS_AS(gamma_minus_apply(empty, 0), std::invalid_argument);

    // truncation prunes everything once the series sits at the order cap
    WeightedState full(2);
    full.add(Partition{1}, ZSeries::monomial(2, IntPolyT(1), 2));
    const auto out = gamma_minus_apply(full, 2);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms.at(Partition{1}) == ZSeries::monomial(2, IntPolyT(1), 2));
}

TEST_CASE("ascent chain sums", "[transfer]") {
    CHECK(ascend_weight(Partition{}, {}, 8) == ZSeries::one(8));
    CHECK(ascend_weight(Partition{}, {1, 3, 5}, 8) == ZSeries::one(8));
    CHECK(ascend_weight(Partition{1}, {1}, 8) == ZSeries::monomial(1, IntPolyT(1), 8));

    // with two layers the single box enters at either one
    ZSeries expected(8);
    expected.add_term(1, IntPolyT(1));
    expected.add_term(3, IntPolyT(1));
    CHECK(ascend_weight(Partition{1}, {1, 3}, 8) == expected);

    // no chain reaches a two-row partition through one layer
    CHECK(ascend_weight(Partition{1, 1}, {1}, 8).is_zero());
}

TEST_CASE("scalar product small orders", "[transfer]") {
    CHECK(scalar_product_S(0) == ZSeries::one(0));

    ZSeries s1(2);
    s1.add_term(0, IntPolyT(1));
    s1.add_term(2, kOneMinusT);
    CHECK(scalar_product_S(1) == s1);

    ZSeries s2(4);
    s2.add_term(0, IntPolyT(1));
    s2.add_term(2, kOneMinusT);
    s2.add_term(4, poly_mul(IntPolyT(3), kOneMinusT));
    CHECK(scalar_product_S(2) == s2);

    CHECK_THROWS_AS(scalar_product_S(-1), std::invalid_argument);
}

TEST_CASE("transfer route matches enumeration and the closed product", "[transfer]") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const ZSeries via_transfer = scalar_product_S(n);
        CHECK(via_transfer == brute_series(n));
        CHECK(via_transfer == product_formula_S(n));
    }
}

TEST_CASE("closed product at t = 0 counts plane partitions", "[transfer]") {
    const std::vector<long> counts = {1, 1, 3, 6, 13, 24, 48, 86, 160};
    const ZSeries s = product_formula_S(8);
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(s.coeff(2 * n).eval(Rational(0)) == Rational(counts[n]));
    }
}

TEST_CASE("box scalar product", "[transfer]") {
    // single column: one array per height
    ZSeries expected(6);
    expected.add_term(0, IntPolyT(1));
    for (int h = 1; h <= 3; ++h) expected.add_term(2 * h, kOneMinusT);
    CHECK(scalar_product_S_box(1, 3) == expected);

    CHECK(scalar_product_S_box(5, 0) == ZSeries::one(0));

    // 2x2 base to z^2: three volume-2 arrays, each of weight (1 - t)
    ZSeries s22(4);
    s22.add_term(0, IntPolyT(1));
    s22.add_term(2, kOneMinusT);
    s22.add_term(4, poly_mul(IntPolyT(3), kOneMinusT));
    CHECK(scalar_product_S_box(2, 2) == s22);
    CHECK(scalar_product_S_box(2, 2) == brute_series_box(2, 2));

    CHECK_THROWS_AS(scalar_product_S_box(0, 3), std::invalid_argument);
}

TEST_CASE("box route matches enumeration and the box product", "[transfer]") {
    for (int s = 1; s <= 3; ++s) {
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(s, n);
            const ZSeries via_transfer = scalar_product_S_box(s, n);
            CHECK(via_transfer == product_formula_S_box(s, n));
            CHECK(via_transfer == brute_series_box(s, n));
        }
    }
}

TEST_CASE("box scalar product stabilizes at s = order", "[transfer]") {
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        const ZSeries full = scalar_product_S(n);
        CHECK(scalar_product_S_box(std::max(n, 1), n) == full);
        CHECK(scalar_product_S_box(n + 2, n) == full);
    }
}

TEST_CASE("worker count does not change the scalar product", "[transfer]") {
    const ZSeries reference = scalar_product_S(5, 1);
    for (int workers : {2, 3, 8}) {
        CAPTURE(workers);
        const ZSeries parallel = scalar_product_S(5, workers);
        CHECK(parallel == reference);
        CHECK(parallel.str() == reference.str());
    }
    CHECK(scalar_product_S_box(2, 5, 4) == scalar_product_S_box(2, 5, 1));
}

TEST_CASE("level-capped enumeration matches the product modulo cyclotomics", "[transfer]") {
    // modulo Phi_n(t), factors (1 - t^n) vanish, removing every array
    // with a path of level n or higher from the generating function
    for (int n : {2, 3}) {
        const int order = 5;
        const ZSeries prod = product_formula_S(order);
        ZSeries capped(2 * order);
        for (int vol = 0; vol <= order; ++vol)
            for (const auto& p : enumerate_by_volume(vol))
                if (level_decompose(p).max_level() <= n - 1)
                    capped.add_term(2 * vol, weight_A(p));
        for (int vol = 0; vol <= order; ++vol) {
            CAPTURE(n, vol);
            CHECK(cyclotomic_reduce(prod.coeff(2 * vol), n) ==
                  cyclotomic_reduce(capped.coeff(2 * vol), n));
        }
    }
}

TEST_CASE("rational Cauchy kernel", "[transfer]") {
    CHECK(cauchy_rational({make_rational(1, 2)}, {make_rational(1, 3)},
                          make_rational(1, 5)) == make_rational(29, 25));
    CHECK(cauchy_rational({make_rational(1, 2), make_rational(1, 3)},
                          {make_rational(1, 4), make_rational(2, 3)}, Rational(1)) ==
          Rational(1));

    // t = 0 leaves the plain Cauchy product
    const std::vector<Rational> u = {make_rational(1, 2), make_rational(-1, 3)};
    const std::vector<Rational> v = {make_rational(1, 5), make_rational(2, 7)};
    Rational expected(1);
    for (const auto& ui : u)
        for (const auto& vj : v) expected /= Rational(1) - ui * vj;
    CHECK(cauchy_rational(u, v, Rational(0)) == expected);

    CHECK_THROWS_AS(cauchy_rational({Rational(2)}, {make_rational(1, 2)}, Rational(0)),
                    std::domain_error);
}

TEST_CASE("two-parameter product degenerates to the one-parameter one", "[transfer]") {
    CHECK(macdonald_product_S(0, 3) == ZSeriesTQ::one(0, 3));
    CHECK(macdonald_product_S(4, 0).at_q0() == product_formula_S(4));
    CHECK(macdonald_product_S(4, 3).at_q0() == product_formula_S(4));
}

TEST_CASE("two-parameter product linear coefficient", "[transfer]") {
    const ZSeriesTQ s = macdonald_product_S(3, 2);
    IntPolyTQ expected;
    for (int m = 0; m <= 2; ++m) {
        expected.add(0, m, 1);
        expected.add(1, m, -1);
    }
    CHECK(s.coeff(2) == expected);
}
