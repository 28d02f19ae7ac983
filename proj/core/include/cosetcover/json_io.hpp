// JSON loading and dumping for cover systems and reports.
//
// Integer cover files:
//   {"type": "Z", "m": 1, "classes": [[a1, n1], [a2, n2], ...]}
//
// Group cover files:
//   {"type": "abelian", "orders": [d1, ..., dr], "m": 1,
//    "cosets": [{"rep": [c1, ..., cr], "gens": [[...], ...]}, ...]}
//
// Serialization is deterministic: identical inputs produce byte-identical
// output.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/report.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/zcover.hpp"

namespace cosetcover::json_io {

struct ZCoverDoc {
    zcover::ZCoverSystem system;
    std::optional<int> m;
};

struct GroupCoverDoc {
    abgroup::CosetSystem system;
    std::optional<int> m;
};

ZCoverDoc load_zcover(const std::string& text);
GroupCoverDoc load_group_cover(const std::string& text);

std::string dump_zcover(const zcover::ZCoverSystem& sys, int m);
std::string dump_group_cover(const abgroup::CosetSystem& sys, int m);

std::string report_json(const BoundReport& report);
std::string sweep_json(const search::SweepStats& stats);

} // namespace cosetcover::json_io
