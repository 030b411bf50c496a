#include <catch2/catch_amalgamated.hpp>

#include "hlpp/serialize.hpp"
#include "hlpp/transfer.hpp"

using namespace hlpp;
using nlohmann::json;

TEST_CASE("polynomial JSON form", "[serialize]") {
    const IntPolyT p = IntPolyT(1) - IntPolyT::monomial(1, 2) + IntPolyT::monomial(2);
    CHECK(to_json(p) == json::parse(R"(["1","-2","1"])"));
    CHECK(to_json(IntPolyT()) == json::array());

    // big coefficients survive as decimal strings
    const Integer big = factorial(30);
    CHECK(to_json(IntPolyT(big))[0].get<std::string>() == big.get_str());
}

TEST_CASE("partition and plane partition JSON forms", "[serialize]") {
    CHECK(to_json(Partition{3, 1}) == json::parse("[3,1]"));
    CHECK(to_json(Partition{}) == json::array());
    using Rows = std::vector<std::vector<int>>;
    CHECK(to_json(PlanePartition(Rows{{2, 1}, {1}})) == json::parse("[[2,1],[1]]"));
    CHECK(to_json(PlanePartition(Rows{})) == json::array());
}

TEST_CASE("series JSON forms", "[serialize]") {
    const ZSeries s = ZSeries::monomial(1, IntPolyT::one_minus_power(1), 3);
    CHECK(to_json(s) == json::parse(R"({"order_half":3,"terms":[[1,["1","-1"]]]})"));

    const json table = series_table(product_formula_S(2));
    CHECK(table["order"] == 2);
    CHECK(table["terms"][2] ==
          json::parse(R"({"z":2,"coeffs":["3","-3"],"poly":"3 - 3t"})"));
    CHECK(table["str"].get<std::string>() == "1 + (1 - t)z + (3 - 3t)z^2");

    // a leftover half-integer exponent is a bug, not a table row
    CHECK_THROWS_AS(series_table(s), std::logic_error);
}
