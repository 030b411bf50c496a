#pragma once

#include <string>

#include <json.hpp>

#include "hlpp/partition.hpp"
#include "hlpp/plane_partition.hpp"
#include "hlpp/series.hpp"

namespace hlpp {

/* JSON views of the core types, used by the command-line reports.
 * Polynomial coefficients are emitted as decimal strings: they are
 * arbitrary-precision integers and would not survive a round trip
 * through IEEE doubles. */

inline nlohmann::json to_json(const IntPolyT& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Integer& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;  // ascending degree in t
}

inline nlohmann::json to_json(const Partition& la) {
    return nlohmann::json(la.parts());
}

inline nlohmann::json to_json(const PlanePartition& pi) {
    return nlohmann::json(pi.height_rows());
}

inline nlohmann::json to_json(const ZSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({e, to_json(c)});
    return {{"order_half", s.order_half()}, {"terms", terms}};
}

/* Report form of a completed generating function: one entry per power
 * of z, each coefficient given both as an array and as text.  Throws
 * if the series still carries half-integer exponents. */
inline nlohmann::json series_table(const ZSeries& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [d, c] : s.integer_coefficients())
        entries.push_back({{"z", d}, {"coeffs", to_json(c)}, {"poly", c.str()}});
    return {{"order", s.order_half() / 2}, {"terms", entries}, {"str", s.str()}};
}

}  // namespace hlpp
