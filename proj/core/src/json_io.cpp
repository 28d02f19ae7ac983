#include "cosetcover/json_io.hpp"

#include <json.hpp>

#include "cosetcover/errors.hpp"

namespace cosetcover::json_io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw domain_error("json: malformed document");
    return j;
}

std::optional<int> read_m(const json& j) {
    if (!j.contains("m"))
        return std::nullopt;
    if (!j["m"].is_number_integer())
        throw domain_error("json: \"m\" must be an integer");
    return j["m"].get<int>();
}

std::vector<std::uint32_t> read_coords(const json& j, std::size_t rank,
                                       const char* what) {
    if (!j.is_array() || j.size() != rank)
        throw domain_error(std::string("json: ") + what + " must be an array of " +
                           std::to_string(rank) + " coordinates");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw domain_error(std::string("json: ") + what +
                               " coordinates must be nonnegative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

} // namespace

ZCoverDoc load_zcover(const std::string& text) {
    json j = parse(text);
    if (j.value("type", "") != "Z")
        throw domain_error("json: expected \"type\": \"Z\"");
    if (!j.contains("classes") || !j["classes"].is_array() || j["classes"].empty())
        throw domain_error("json: \"classes\" must be a nonempty array");
    std::vector<zcover::ResidueClass> classes;
    for (const auto& c : j["classes"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw domain_error("json: each class must be a pair [a, n]");
        classes.emplace_back(c[0].get<std::int64_t>(), c[1].get<std::int64_t>());
    }
    return {zcover::ZCoverSystem(std::move(classes)), read_m(j)};
}

GroupCoverDoc load_group_cover(const std::string& text) {
    json j = parse(text);
    if (j.value("type", "") != "abelian")
        throw domain_error("json: expected \"type\": \"abelian\"");
    if (!j.contains("orders") || !j["orders"].is_array() || j["orders"].empty())
        throw domain_error("json: \"orders\" must be a nonempty array");
    std::vector<std::uint32_t> orders;
    for (const auto& d : j["orders"]) {
        if (!d.is_number_integer() || d.get<std::int64_t>() < 1)
            throw domain_error("json: orders must be positive integers");
        orders.push_back(d.get<std::uint32_t>());
    }
    abgroup::AbelianGroup g(orders);

    if (!j.contains("cosets") || !j["cosets"].is_array() || j["cosets"].empty())
        throw domain_error("json: \"cosets\" must be a nonempty array");
    std::vector<abgroup::Coset> cosets;
    for (const auto& c : j["cosets"]) {
        if (!c.is_object() || !c.contains("rep") || !c.contains("gens") ||
            !c["gens"].is_array())
            throw domain_error("json: each coset needs \"rep\" and \"gens\"");
        auto rep = read_coords(c["rep"], g.rank(), "\"rep\"");
        std::vector<abgroup::elem_t> gens;
        for (const auto& gcoords : c["gens"])
            gens.push_back(g.element(read_coords(gcoords, g.rank(), "\"gens\" entry")));
        cosets.emplace_back(abgroup::subgroup_from_generators(g, gens), g.element(rep));
    }
    return {abgroup::CosetSystem(std::move(g), std::move(cosets)), read_m(j)};
}

std::string dump_zcover(const zcover::ZCoverSystem& sys, int m) {
    json j;
    j["type"] = "Z";
    j["m"] = m;
    json classes = json::array();
    for (const auto& c : sys.classes())
        classes.push_back(json::array({c.rep, c.mod}));
    j["classes"] = std::move(classes);
    return j.dump();
}

std::string dump_group_cover(const abgroup::CosetSystem& sys, int m) {
    json j;
    j["type"] = "abelian";
    j["orders"] = sys.group().orders();
    j["m"] = m;
    json cosets = json::array();
    for (const auto& c : sys.cosets()) {
        json entry;
        entry["rep"] = sys.group().coords(c.rep);
        json gens = json::array();
        auto gen_elems = c.subgroup.generators.empty()
                             ? abgroup::generating_set(c.subgroup)
                             : c.subgroup.generators;
        for (abgroup::elem_t x : gen_elems)
            gens.push_back(sys.group().coords(x));
        entry["gens"] = std::move(gens);
        cosets.push_back(std::move(entry));
    }
    j["cosets"] = std::move(cosets);
    return j.dump();
}

std::string report_json(const BoundReport& report) {
    json j;
    j["check"] = report.check;
    j["pass"] = report.pass;
    j["facts"] = report.facts;
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"where", w.where},
                             {"inequality", w.inequality},
                             {"lhs", w.lhs.str()},
                             {"rhs", w.rhs.str()},
                             {"holds", w.holds}});
    }
    j["witnesses"] = std::move(witnesses);
    json residuals = json::array();
    for (const auto& r : report.residuals) {
        residuals.push_back({{"where", r.where},
                             {"check", r.check},
                             {"residual", r.residual},
                             {"tolerance", r.tolerance},
                             {"holds", r.holds}});
    }
    j["residuals"] = std::move(residuals);
    j["notes"] = report.notes;
    return j.dump();
}

std::string sweep_json(const search::SweepStats& stats) {
    json j;
    j["systems_examined"] = stats.systems_examined;
    j["covers_found"] = stats.covers_found;
    j["counterexamples"] = stats.counterexamples;
    j["tight_cases"] = stats.tight_cases;
    j["tight_witnesses"] = stats.tight_witnesses;
    return j.dump();
}

} // namespace cosetcover::json_io
