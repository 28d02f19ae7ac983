// Command line front end: verify cover bounds for systems loaded from
// JSON, decide cyclotomic divisibility, construct reference covers, and
// run exhaustive searches over small groups.
//
// Exit codes: 0 checks pass, 1 a checked bound failed (a bug somewhere),
// 2 bad input or unmet precondition, 3 capacity guard tripped.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/arith.hpp"
#include "cosetcover/characters.hpp"
#include "cosetcover/cyclotomic.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/json_io.hpp"
#include "cosetcover/report.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/zcover.hpp"

namespace cc = cosetcover;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw cc::domain_error("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

int resolve_m(const std::optional<int>& flag, const std::optional<int>& from_file) {
    if (flag)
        return *flag;
    if (from_file)
        return *from_file;
    throw cc::precondition_error("no m given: pass --m or put \"m\" in the input");
}

std::vector<std::int64_t> parse_csv(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        std::int64_t v = std::stoll(part, &used);
        if (used != part.size())
            throw cc::domain_error("not an integer: " + part);
        out.push_back(v);
    }
    if (out.empty())
        throw cc::domain_error("empty integer list");
    return out;
}

// An element is given either as rank-many comma-separated coordinates or
// as a single element index.
cc::abgroup::elem_t parse_element(const cc::abgroup::AbelianGroup& g,
                                  const std::string& text) {
    auto vals = parse_csv(text);
    if (vals.size() == g.rank()) {
        std::vector<std::uint32_t> coords;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] < 0 || vals[i] >= static_cast<std::int64_t>(g.orders()[i]))
                throw cc::domain_error("coordinate " + std::to_string(vals[i]) +
                                       " out of range for order " +
                                       std::to_string(g.orders()[i]));
            coords.push_back(static_cast<std::uint32_t>(vals[i]));
        }
        return g.element(coords);
    }
    if (vals.size() == 1) {
        if (vals[0] < 0 || static_cast<std::uint64_t>(vals[0]) >= g.order())
            throw cc::domain_error("element index out of range");
        return static_cast<cc::abgroup::elem_t>(vals[0]);
    }
    throw cc::domain_error("element needs rank-many coordinates or one index");
}

void print_report(const cc::BoundReport& report, const std::string& format) {
    if (format == "json")
        std::cout << cc::json_io::report_json(report) << "\n";
    else
        std::cout << cc::to_string(report);
}

int run_mycielski(std::int64_t n, const std::string& format) {
    std::int64_t f = cc::arith::mycielski_f(n);
    if (format == "json")
        std::cout << json{{"f", f}, {"n", n}}.dump() << "\n";
    else
        std::cout << "f(" << n << ") = " << f << "\n";
    return 0;
}

int run_verify_z(const std::string& path, const std::optional<int>& m_flag,
                 const std::optional<std::int64_t>& a, const std::string& format) {
    auto doc = cc::json_io::load_zcover(read_input(path));
    int m = resolve_m(m_flag, doc.m);
    cc::BoundReport report = a ? cc::zcover::check_zcover_bounds(doc.system, m, *a)
                               : cc::zcover::check_zcover_bounds_all(doc.system, m);
    print_report(report, format);
    return report.pass ? 0 : 1;
}

int run_verify_group(const std::string& path, const std::optional<int>& m_flag,
                     const std::optional<std::string>& a,
                     const std::vector<std::string>& kgens, const std::string& format) {
    auto doc = cc::json_io::load_group_cover(read_input(path));
    int m = resolve_m(m_flag, doc.m);
    const auto& g = doc.system.group();

    std::vector<cc::BoundReport> reports;
    reports.push_back(cc::abgroup::check_cover_bounds(doc.system, m));
    if (!kgens.empty()) {
        if (!a)
            throw cc::precondition_error("--K needs a base point: pass --a");
        std::vector<cc::abgroup::elem_t> gens;
        for (const auto& s : kgens)
            gens.push_back(parse_element(g, s));
        auto K = cc::abgroup::subgroup_from_generators(g, gens);
        reports.push_back(cc::abgroup::check_subgroup_cover_bounds(
            doc.system, m, parse_element(g, *a), K));
    }

    bool pass = true;
    for (const auto& r : reports)
        pass = pass && r.pass;
    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << cc::json_io::report_json(reports[0]) << "\n";
        } else {
            json arr = json::array();
            for (const auto& r : reports)
                arr.push_back(json::parse(cc::json_io::report_json(r)));
            std::cout << arr.dump() << "\n";
        }
    } else {
        for (const auto& r : reports)
            std::cout << cc::to_string(r);
    }
    return pass ? 0 : 1;
}

int run_divides(std::int64_t n, const std::vector<std::int64_t>& orders,
                const std::string& format) {
    cc::cyclotomic::OrderMultiset ms(orders);
    auto rows = cc::cyclotomic::divisibility_profile(n, ms);
    bool yes = true;
    for (const auto& row : rows)
        yes = yes && row.holds;
    if (format == "json") {
        json primes = json::array();
        for (const auto& row : rows)
            primes.push_back(json{{"holds", row.holds},
                                  {"p", row.prime},
                                  {"required", row.required},
                                  {"sum", row.sum.str()}});
        std::cout << json{{"divides", yes},
                          {"n", n},
                          {"orders", ms.orders},
                          {"primes", primes}}
                         .dump()
                  << "\n";
    } else if (yes) {
        std::cout << "YES\n";
    } else {
        for (const auto& row : rows)
            if (!row.holds) {
                std::cout << "NO (p=" << row.prime << ": " << row.sum.str() << " < "
                          << row.required << ")\n";
                break;
            }
    }
    return 0;
}

int run_minimal_k(std::int64_t n, const std::string& format) {
    auto cert = cc::cyclotomic::minimal_k(n);
    if (format == "json") {
        std::cout << json{{"k", cert.k}, {"n", n}, {"orders", cert.orders.orders}}.dump()
                  << "\n";
    } else {
        std::cout << "k = " << cert.k << "\n";
        std::cout << "orders:";
        for (auto v : cert.orders.orders)
            std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int run_construct_partition(const std::vector<std::uint32_t>& orders) {
    cc::abgroup::AbelianGroup g(orders);
    if (g.order() > 4096)
        throw cc::capacity_error("partition construction capped at order 4096");
    auto triv = cc::abgroup::trivial_subgroup(g);
    std::vector<cc::abgroup::Coset> cosets;
    for (cc::abgroup::elem_t x = 0; x < g.order(); ++x)
        cosets.emplace_back(triv, x);
    cc::abgroup::CosetSystem sys(g, std::move(cosets));
    std::cout << cc::json_io::dump_group_cover(sys, 1) << "\n";
    return 0;
}

int run_search_sweep(const std::vector<std::uint32_t>& orders, int max_k, int m,
                     bool proper_only, bool dedup, int jobs, int max_tight,
                     const std::string& format) {
    cc::search::SearchConfig config{.group = cc::abgroup::AbelianGroup(orders),
                                    .max_k = max_k,
                                    .m = m,
                                    .proper_cosets_only = proper_only,
                                    .dedup_by_symmetry = dedup,
                                    .jobs = jobs,
                                    .max_tight_witnesses =
                                        static_cast<std::size_t>(max_tight)};
    auto stats = cc::search::verify_bounds_exhaustively(config);
    if (format == "json") {
        std::cout << cc::json_io::sweep_json(stats) << "\n";
    } else {
        std::cout << "systems examined: " << stats.systems_examined << "\n";
        std::cout << "covers found: " << stats.covers_found << "\n";
        std::cout << "counterexamples: " << stats.counterexamples << "\n";
        std::cout << "tight cases: " << stats.tight_cases << "\n";
        for (const auto& w : stats.tight_witnesses)
            std::cout << "tight witness: " << w << "\n";
    }
    return stats.counterexamples == 0 ? 0 : 1;
}

int run_search_ggmin(const std::vector<std::uint32_t>& orders, const std::string& format) {
    cc::abgroup::AbelianGroup g(orders);
    auto result = cc::search::min_proper_coset_cover(g);
    std::int64_t f = cc::arith::mycielski_f(static_cast<std::int64_t>(g.order()));
    bool ok = result.k_min >= f;
    if (format == "json") {
        json witness = json::array();
        for (const auto& c : result.witness)
            witness.push_back(cc::search::format_coset(c));
        std::cout << json{{"f", f},
                          {"k_min", result.k_min},
                          {"order", g.order()},
                          {"witness", witness}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "k_min = " << result.k_min << "\n";
        std::cout << "f(|G|) = " << f << "\n";
        std::cout << "witness:";
        for (std::size_t i = 0; i < result.witness.size(); ++i)
            std::cout << (i ? ", " : " ") << cc::search::format_coset(result.witness[i]);
        std::cout << "\n";
    }
    if (!ok)
        std::cerr << "bug: minimum below f(|G|)\n";
    return ok ? 0 : 1;
}

int run_search_min_multiset(std::int64_t n, const std::string& format) {
    std::int64_t k = cc::search::min_multiset_for_divisibility(n);
    std::int64_t f = cc::arith::mycielski_f(n);
    if (format == "json")
        std::cout << json{{"f", f}, {"k_min", k}, {"n", n}}.dump() << "\n";
    else
        std::cout << "k_min = " << k << "\nf(n) = " << f << "\n";
    if (k != f)
        std::cerr << "bug: brute force minimum differs from f(n)\n";
    return k == f ? 0 : 1;
}

int run_characters(const std::string& path, const std::optional<int>& m_flag,
                   const std::string& a, const std::string& format) {
    auto doc = cc::json_io::load_group_cover(read_input(path));
    int m = resolve_m(m_flag, doc.m);
    auto report = cc::characters::verify_divisibility(doc.system, m,
                                                      parse_element(doc.system.group(), a));
    print_report(report, format);
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cover bound verification for residue classes and group cosets"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* mycielski = app.add_subcommand("mycielski", "evaluate f(n)");
    std::int64_t myc_n = 0;
    mycielski->add_option("n", myc_n, "positive integer")->required();
    add_format(mycielski);

    auto* verify_z = app.add_subcommand(
        "verify-z", "check cover bounds for a residue class system");
    std::string vz_path;
    std::optional<int> vz_m;
    std::optional<std::int64_t> vz_a;
    verify_z->add_option("file", vz_path, "system JSON, - for stdin")->required();
    verify_z->add_option("--m", vz_m, "covering multiplicity, overrides the file");
    verify_z->add_option("--a", vz_a, "base point, default all with multiplicity m");
    add_format(verify_z);

    auto* verify_group =
        app.add_subcommand("verify-group", "check cover bounds for a coset system");
    std::string vg_path;
    std::optional<int> vg_m;
    std::optional<std::string> vg_a;
    std::vector<std::string> vg_kgens;
    verify_group->add_option("file", vg_path, "system JSON, - for stdin")->required();
    verify_group->add_option("--m", vg_m, "covering multiplicity, overrides the file");
    verify_group->add_option("--a", vg_a, "base point: coordinates c1,c2,... or index");
    verify_group
        ->add_option("--K", vg_kgens,
                     "subgroup generator (repeatable), enables the relative bound")
        ->allow_extra_args(false);
    add_format(verify_group);

    auto* divides =
        app.add_subcommand("divides", "does n divide prod (1 - zeta) for these orders");
    std::int64_t dv_n = 0;
    std::vector<std::int64_t> dv_orders;
    divides->add_option("n", dv_n, "positive integer")->required();
    divides->add_option("orders", dv_orders, "root of unity orders, each >= 2");
    add_format(divides);

    auto* minimal_k =
        app.add_subcommand("minimal-k", "least k with n | prod (1 - zeta), with witness");
    std::int64_t mk_n = 0;
    minimal_k->add_option("n", mk_n, "integer >= 2")->required();
    add_format(minimal_k);

    auto* construct = app.add_subcommand("construct", "emit a reference system as JSON");
    construct->require_subcommand(1);
    auto* cons_ext = construct->add_subcommand(
        "extremal-z", "exact m-cover with k = m + f(2^(k-m)), bound tight at 0");
    int ce_k = 0, ce_m = 0;
    cons_ext->add_option("k", ce_k, "number of classes")->required();
    cons_ext->add_option("m", ce_m, "covering multiplicity")->required();
    auto* cons_cpcp = construct->add_subcommand(
        "cpcp", "the p+1 order-p subgroups of Z_p x Z_p as a minimal 1-cover");
    std::int64_t cp_p = 0;
    cons_cpcp->add_option("p", cp_p, "prime")->required();
    auto* cons_part = construct->add_subcommand(
        "partition", "partition of the group into singleton cosets");
    std::vector<std::uint32_t> pt_orders;
    cons_part->add_option("orders", pt_orders, "cyclic factor orders")->required();

    auto* search = app.add_subcommand("search", "exhaustive searches over small groups");
    search->require_subcommand(1);
    auto* sweep = search->add_subcommand(
        "sweep", "enumerate coset systems and check bounds on every m-cover");
    std::vector<std::uint32_t> sw_orders;
    int sw_max_k = 3, sw_m = 1, sw_jobs = 1, sw_max_tight = 16;
    bool sw_proper = false, sw_dedup = false;
    sweep->add_option("--orders", sw_orders, "cyclic factor orders, e.g. 2,2")
        ->delimiter(',')
        ->required();
    sweep->add_option("--max-k", sw_max_k, "largest system size");
    sweep->add_option("--m", sw_m, "covering multiplicity");
    sweep->add_flag("--proper-only", sw_proper, "only cosets avoiding the identity");
    sweep->add_flag("--dedup", sw_dedup, "skip systems equivalent under automorphisms");
    sweep->add_option("--jobs", sw_jobs, "worker threads, default 1");
    sweep->add_option("--max-tight", sw_max_tight, "tight witness sample cap");
    add_format(sweep);
    auto* ggmin = search->add_subcommand(
        "gg-min", "fewest proper cosets covering the group minus the identity");
    std::vector<std::uint32_t> gg_orders;
    ggmin->add_option("--orders", gg_orders, "cyclic factor orders")
        ->delimiter(',')
        ->required();
    add_format(ggmin);
    auto* minms = search->add_subcommand(
        "min-multiset", "brute force least k over order multisets dividing n");
    std::int64_t mm_n = 0;
    minms->add_option("n", mm_n, "integer >= 2")->required();
    add_format(minms);

    auto* characters = app.add_subcommand(
        "characters", "character-side divisibility certificate at a base point");
    std::string ch_path, ch_a;
    std::optional<int> ch_m;
    characters->add_option("file", ch_path, "system JSON, - for stdin")->required();
    characters->add_option("--m", ch_m, "covering multiplicity, overrides the file");
    characters->add_option("--a", ch_a, "base point: coordinates or index")->required();
    add_format(characters);

    try {
        app.parse(argc, argv);

        if (mycielski->parsed())
            return run_mycielski(myc_n, format);
        if (verify_z->parsed())
            return run_verify_z(vz_path, vz_m, vz_a, format);
        if (verify_group->parsed())
            return run_verify_group(vg_path, vg_m, vg_a, vg_kgens, format);
        if (divides->parsed())
            return run_divides(dv_n, dv_orders, format);
        if (minimal_k->parsed())
            return run_minimal_k(mk_n, format);
        if (cons_ext->parsed()) {
            auto sys = cc::zcover::build_extremal_zcover(ce_k, ce_m);
            std::cout << cc::json_io::dump_zcover(sys, ce_m) << "\n";
            return 0;
        }
        if (cons_cpcp->parsed()) {
            auto sys = cc::abgroup::build_cp_cp_cover(cp_p);
            std::cout << cc::json_io::dump_group_cover(sys, 1) << "\n";
            return 0;
        }
        if (cons_part->parsed())
            return run_construct_partition(pt_orders);
        if (sweep->parsed())
            return run_search_sweep(sw_orders, sw_max_k, sw_m, sw_proper, sw_dedup,
                                    sw_jobs, sw_max_tight, format);
        if (ggmin->parsed())
            return run_search_ggmin(gg_orders, format);
        if (minms->parsed())
            return run_search_min_multiset(mm_n, format);
        if (characters->parsed())
            return run_characters(ch_path, ch_m, ch_a, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cc::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "bug: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
