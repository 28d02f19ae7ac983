#include "cosetcover/abgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cosetcover/errors.hpp"

namespace cosetcover::abgroup {

namespace {

std::vector<std::uint32_t> coverage_table(const CosetSystem& sys) {
    std::vector<std::uint32_t> w(sys.group().order(), 0);
    for (const auto& c : sys.cosets())
        for (elem_t x : c.members())
            ++w[x];
    return w;
}

bool subgroup_subset(const Subgroup& inner, const Subgroup& outer) {
    return std::includes(outer.elements.begin(), outer.elements.end(),
                         inner.elements.begin(), inner.elements.end());
}

// Element list of the subgroup generated by a set plus one element.
std::vector<elem_t> extend_elements(const AbelianGroup& g,
                                    const std::vector<elem_t>& base, elem_t x) {
    std::vector<elem_t> out;
    std::uint64_t ord = g.element_order(x);
    out.reserve(base.size() * ord);
    elem_t shift = 0;
    for (std::uint64_t t = 0; t < ord; ++t) {
        for (elem_t h : base)
            out.push_back(g.add(h, shift));
        shift = g.add(shift, x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty())
        throw domain_error("AbelianGroup: at least one cyclic factor required");
    for (std::uint32_t d : orders_) {
        if (d == 0)
            throw domain_error("AbelianGroup: cyclic factor orders must be >= 1");
        if (order_ > kMaxGroupOrder / d)
            throw capacity_error("AbelianGroup: order exceeds supported range");
        order_ *= d;
    }
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * orders_[i];
}

elem_t AbelianGroup::element(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != orders_.size())
        throw domain_error("AbelianGroup::element: coordinate count mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        idx += static_cast<std::uint64_t>(coords[i] % orders_[i]) * strides_[i];
    return static_cast<elem_t>(idx);
}

std::vector<std::uint32_t> AbelianGroup::coords(elem_t x) const {
    if (x >= order_)
        throw domain_error("AbelianGroup::coords: element index out of range");
    std::vector<std::uint32_t> c(orders_.size());
    std::uint64_t rest = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = static_cast<std::uint32_t>(rest / strides_[i]);
        rest %= strides_[i];
    }
    return c;
}

elem_t AbelianGroup::add(elem_t x, elem_t y) const {
    auto a = coords(x);
    auto b = coords(y);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = (a[i] + b[i]) % orders_[i];
    return element(a);
}

elem_t AbelianGroup::neg(elem_t x) const {
    auto a = coords(x);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return element(a);
}

elem_t AbelianGroup::mul(std::int64_t t, elem_t x) const {
    auto a = coords(x);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t v = (t % orders_[i]) * a[i] % orders_[i];
        a[i] = static_cast<std::uint32_t>(v < 0 ? v + orders_[i] : v);
    }
    return element(a);
}

std::uint64_t AbelianGroup::element_order(elem_t x) const {
    auto a = coords(x);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = orders_[i] / std::gcd<std::int64_t>(orders_[i], a[i]);
        ord = std::lcm(ord, d);
    }
    return static_cast<std::uint64_t>(ord);
}

std::string AbelianGroup::format(elem_t x) const {
    auto c = coords(x);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

Subgroup::Subgroup(AbelianGroup parent, std::vector<elem_t> elems, std::vector<elem_t> gens)
    : group(std::move(parent)), elements(std::move(elems)), generators(std::move(gens)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
        throw domain_error("Subgroup: must contain the identity");
    if (elements.back() >= group.order())
        throw domain_error("Subgroup: element index out of range");
    if (group.order() % elements.size() != 0)
        throw domain_error("Subgroup: size does not divide the group order");
    for (elem_t x : elements)
        for (elem_t y : elements)
            if (!std::binary_search(elements.begin(), elements.end(), group.add(x, y)))
                throw domain_error("Subgroup: element set is not closed");
}

bool Subgroup::contains(elem_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup(const AbelianGroup& g) {
    return Subgroup(g, {0});
}

Subgroup full_subgroup(const AbelianGroup& g) {
    std::vector<elem_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup subgroup_from_generators(const AbelianGroup& g, const std::vector<elem_t>& gens) {
    std::vector<elem_t> elems = {0};
    for (elem_t x : gens) {
        if (x >= g.order())
            throw domain_error("subgroup_from_generators: generator out of range");
        elems = extend_elements(g, elems, x);
    }
    return Subgroup(g, std::move(elems), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (!(a.group == b.group))
        throw domain_error("intersect: subgroups of different groups");
    std::vector<elem_t> common;
    std::set_intersection(a.elements.begin(), a.elements.end(),
                          b.elements.begin(), b.elements.end(),
                          std::back_inserter(common));
    return Subgroup(a.group, std::move(common));
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g) {
    if (g.order() > kMaxSubgroupEnumOrder)
        throw capacity_error("all_subgroups: group order exceeds " +
                             std::to_string(kMaxSubgroupEnumOrder));
    std::set<std::vector<elem_t>> seen;
    std::vector<std::vector<elem_t>> queue;
    queue.push_back({0});
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto current = queue[head]; // copy: queue grows below
        for (elem_t x = 1; x < g.order(); ++x) {
            if (std::binary_search(current.begin(), current.end(), x))
                continue;
            auto bigger = extend_elements(g, current, x);
            if (seen.insert(bigger).second)
                queue.push_back(std::move(bigger));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& elems : seen)
        out.emplace_back(g, elems);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<elem_t> generating_set(const Subgroup& h) {
    std::vector<elem_t> gens;
    std::vector<elem_t> span = {0};
    for (elem_t x : h.elements) {
        if (std::binary_search(span.begin(), span.end(), x))
            continue;
        gens.push_back(x);
        span = extend_elements(h.group, span, x);
        if (span.size() == h.elements.size())
            break;
    }
    // Drop generators made redundant by later picks.
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<elem_t> rest = {0};
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i)
                rest = extend_elements(h.group, rest, gens[j]);
        if (rest.size() == h.elements.size())
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return gens;
}

Coset::Coset(Subgroup h, elem_t a) : subgroup(std::move(h)), rep(a) {
    if (a >= subgroup.group.order())
        throw domain_error("Coset: representative out of range");
    for (elem_t x : subgroup.elements)
        rep = std::min(rep, subgroup.group.add(a, x));
}

bool Coset::contains(elem_t x) const {
    return subgroup.contains(subgroup.group.sub(x, rep));
}

std::vector<elem_t> Coset::members() const {
    std::vector<elem_t> out;
    out.reserve(subgroup.elements.size());
    for (elem_t x : subgroup.elements)
        out.push_back(subgroup.group.add(rep, x));
    std::sort(out.begin(), out.end());
    return out;
}

bool Coset::is_proper() const {
    return rep != 0; // the least member is 0 exactly when the coset holds e
}

CosetSystem::CosetSystem(AbelianGroup g, std::vector<Coset> cosets)
    : group_(std::move(g)), cosets_(std::move(cosets)) {
    if (cosets_.empty())
        throw domain_error("CosetSystem: at least one coset required");
    for (const auto& c : cosets_)
        if (!(c.subgroup.group == group_))
            throw domain_error("CosetSystem: coset from a different group");
}

std::size_t multiplicity(const CosetSystem& sys, elem_t x) {
    std::size_t count = 0;
    for (const auto& c : sys.cosets())
        count += c.contains(x);
    return count;
}

bool is_m_cover(const CosetSystem& sys, int m) {
    if (m < 1)
        throw domain_error("is_m_cover: m must be >= 1");
    auto w = coverage_table(sys);
    return *std::min_element(w.begin(), w.end()) >= static_cast<std::uint32_t>(m);
}

bool is_exact_m_cover(const CosetSystem& sys, int m) {
    if (m < 1)
        throw domain_error("is_exact_m_cover: m must be >= 1");
    auto w = coverage_table(sys);
    return std::all_of(w.begin(), w.end(),
                       [&](std::uint32_t v) { return v == static_cast<std::uint32_t>(m); });
}

std::vector<std::size_t> irredundant_indices(const CosetSystem& sys, int m) {
    if (m < 1)
        throw domain_error("irredundant_indices: m must be >= 1");
    auto w = coverage_table(sys);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < sys.k(); ++t) {
        const auto& c = sys.cosets()[t];
        bool still_cover = true;
        for (elem_t x = 0; x < sys.group().order() && still_cover; ++x) {
            std::uint32_t wt = w[x] - (c.contains(x) ? 1u : 0u);
            still_cover = wt >= static_cast<std::uint32_t>(m);
        }
        if (!still_cover)
            out.push_back(t);
    }
    return out;
}

bool is_minimal_m_cover(const CosetSystem& sys, int m) {
    return is_m_cover(sys, m) && irredundant_indices(sys, m).size() == sys.k();
}

std::uint64_t n_a(const CosetSystem& sys, elem_t a) {
    std::vector<elem_t> inter(sys.group().order());
    std::iota(inter.begin(), inter.end(), 0);
    for (const auto& c : sys.cosets()) {
        if (!c.contains(a))
            continue;
        std::vector<elem_t> next;
        std::set_intersection(inter.begin(), inter.end(),
                              c.subgroup.elements.begin(), c.subgroup.elements.end(),
                              std::back_inserter(next));
        inter = std::move(next);
    }
    return sys.group().order() / inter.size();
}

BoundReport check_cover_bounds(const CosetSystem& sys, int m) {
    if (m < 1)
        throw domain_error("check_cover_bounds: m must be >= 1");
    auto w = coverage_table(sys);
    if (*std::min_element(w.begin(), w.end()) < static_cast<std::uint32_t>(m))
        throw precondition_error("check_cover_bounds: system is not an m-cover");

    const auto& g = sys.group();
    const std::int64_t k = static_cast<std::int64_t>(sys.k());
    arith::BigInt two_pow_int = arith::BigInt(1) << static_cast<unsigned>(k - m);
    arith::Rational two_pow(two_pow_int);

    BoundReport report;
    report.check = "cover_bounds";
    report.facts["k"] = std::to_string(k);
    report.facts["m"] = std::to_string(m);
    report.facts["|G|"] = std::to_string(g.order());

    std::int64_t tight = 0;
    for (elem_t a = 0; a < g.order(); ++a) {
        if (w[a] != static_cast<std::uint32_t>(m))
            continue;
        std::int64_t N = static_cast<std::int64_t>(n_a(sys, a));
        std::int64_t fN = arith::mycielski_f(N);
        std::string where = "a=" + g.format(a);
        report.add_bound(where, "N_a <= 2^(k-m)", arith::Rational(N), two_pow,
                         arith::Rational(N) <= two_pow);
        report.add_bound(where, "k >= m + f(N_a)", arith::Rational(k),
                         arith::Rational(m + fN), k >= m + fN);
        if (k == m + fN)
            ++tight;
    }
    report.facts["base points with multiplicity m"] =
        std::to_string(std::count(w.begin(), w.end(), static_cast<std::uint32_t>(m)));
    report.facts["tight base points"] = std::to_string(tight);

    for (std::size_t t : irredundant_indices(sys, m)) {
        std::int64_t idx = static_cast<std::int64_t>(sys.cosets()[t].subgroup.index());
        std::int64_t fI = arith::mycielski_f(idx);
        std::string where = "t=" + std::to_string(t + 1);
        report.add_bound(where, "[G:G_t] <= 2^(k-m)", arith::Rational(idx), two_pow,
                         arith::Rational(idx) <= two_pow);
        report.add_bound(where, "k >= m + f([G:G_t])", arith::Rational(k),
                         arith::Rational(m + fI), k >= m + fI);
    }

    report.finalize();
    return report;
}

BoundReport check_subgroup_cover_bounds(const CosetSystem& sys, int m, elem_t a,
                                        const Subgroup& K) {
    if (m < 1)
        throw domain_error("check_subgroup_cover_bounds: m must be >= 1");
    if (!(K.group == sys.group()))
        throw domain_error("check_subgroup_cover_bounds: K from a different group");
    if (!is_m_cover(sys, m))
        throw precondition_error("check_subgroup_cover_bounds: system is not an m-cover");
    if (multiplicity(sys, a) != static_cast<std::size_t>(m))
        throw precondition_error("check_subgroup_cover_bounds: multiplicity at a must equal m");

    const std::int64_t k = static_cast<std::int64_t>(sys.k());

    BoundReport report;
    report.check = "subgroup_cover_bounds";
    report.facts["k"] = std::to_string(k);
    report.facts["m"] = std::to_string(m);
    report.facts["a"] = sys.group().format(a);
    report.facts["|K|"] = std::to_string(K.size());

    // Chain k - m >= #{s : a outside coset s, K not inside G_s} >= f([K : K n H_a]).
    std::int64_t count = 0;
    Subgroup inner = K;
    for (const auto& c : sys.cosets()) {
        if (c.contains(a))
            inner = intersect(inner, c.subgroup);
        else if (!subgroup_subset(K, c.subgroup))
            ++count;
    }
    std::int64_t rel_index = static_cast<std::int64_t>(K.size() / inner.size());
    std::int64_t fRel = arith::mycielski_f(rel_index);
    std::string where = "a=" + sys.group().format(a);
    report.add_bound(where, "k - m >= |{s : a not in a_sG_s, K not <= G_s}|",
                     arith::Rational(k - m), arith::Rational(count), k - m >= count);
    report.add_bound(where, "|{s}| >= f([K : K n H_a])", arith::Rational(count),
                     arith::Rational(fRel), count >= fRel);

    // Per irredundant t with K not inside G_t.
    bool any = false;
    for (std::size_t t : irredundant_indices(sys, m)) {
        const auto& gt = sys.cosets()[t].subgroup;
        if (subgroup_subset(K, gt))
            continue;
        any = true;
        std::int64_t total = 0;
        for (const auto& c : sys.cosets())
            if (!subgroup_subset(K, c.subgroup))
                ++total;
        std::int64_t rel = static_cast<std::int64_t>(K.size() / intersect(K, gt).size());
        std::int64_t fr = arith::mycielski_f(rel);
        report.add_bound("t=" + std::to_string(t + 1),
                         "|{s : K not <= G_s}| >= 1 + f([K : K n G_t])",
                         arith::Rational(total), arith::Rational(1 + fr), total >= 1 + fr);
    }
    if (!any)
        report.notes.push_back("no irredundant index t with K not <= G_t");

    report.finalize();
    return report;
}

BoundReport check_proper_coset_cover_bound(const AbelianGroup& g,
                                           const std::vector<Coset>& cosets) {
    std::vector<char> hit(g.order(), 0);
    for (const auto& c : cosets) {
        if (!(c.subgroup.group == g))
            throw domain_error("check_proper_coset_cover_bound: coset from a different group");
        if (!c.is_proper())
            throw precondition_error("check_proper_coset_cover_bound: coset is not proper");
        for (elem_t x : c.members())
            hit[x] = 1;
    }
    for (elem_t x = 1; x < g.order(); ++x)
        if (!hit[x])
            throw precondition_error("check_proper_coset_cover_bound: union misses " +
                                     g.format(x));

    std::int64_t k = static_cast<std::int64_t>(cosets.size());
    std::int64_t f = arith::mycielski_f(static_cast<std::int64_t>(g.order()));
    BoundReport report;
    report.check = "proper_coset_cover_bound";
    report.facts["|G|"] = std::to_string(g.order());
    report.facts["k"] = std::to_string(k);
    report.facts["f(|G|)"] = std::to_string(f);
    report.add_bound("G \\ {e}", "k >= f(|G|)", arith::Rational(k), arith::Rational(f), k >= f);
    report.finalize();
    return report;
}

CosetSystem build_cp_cp_cover(std::int64_t p) {
    if (!arith::is_prime(p))
        throw domain_error("build_cp_cp_cover: p must be prime");
    if (p * p > static_cast<std::int64_t>(kMaxSubgroupEnumOrder))
        throw capacity_error("build_cp_cp_cover: p^2 exceeds supported group order");
    AbelianGroup g({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p)});
    std::vector<Coset> cosets;
    cosets.emplace_back(subgroup_from_generators(g, {g.element({1, 0})}), 0);
    for (std::uint32_t a = 0; a < p; ++a)
        cosets.emplace_back(subgroup_from_generators(g, {g.element({a, 1})}), 0);
    return CosetSystem(std::move(g), std::move(cosets));
}

QuotientMap quotient(const AbelianGroup& g, const Subgroup& h) {
    if (!(h.group == g))
        throw domain_error("quotient: subgroup of a different group");

    const std::uint64_t n = g.order();
    const elem_t unset = static_cast<elem_t>(n);
    std::vector<elem_t> cid(n, unset);
    std::vector<elem_t> reps;
    for (elem_t x = 0; x < n; ++x) {
        if (cid[x] != unset)
            continue;
        reps.push_back(x); // ascending scan: x is the least member of its coset
        for (elem_t s : h.elements)
            cid[g.add(x, s)] = x;
    }

    const std::size_t r = reps.size();
    std::vector<std::uint32_t> loc(n, 0);
    for (std::size_t i = 0; i < r; ++i)
        loc[reps[i]] = static_cast<std::uint32_t>(i);

    auto addq = [&](std::uint32_t i, std::uint32_t j) {
        return loc[cid[g.add(reps[i], reps[j])]];
    };
    auto mulq = [&](std::uint64_t t, std::uint32_t x) {
        std::uint32_t acc = 0;
        for (std::uint64_t i = 0; i < t; ++i)
            acc = addq(acc, x);
        return acc;
    };
    auto order_of = [&](std::uint32_t x) {
        std::uint64_t t = 1;
        std::uint32_t acc = x;
        while (acc != 0) {
            acc = addq(acc, x);
            ++t;
        }
        return t;
    };

    // Greedy basis: repeatedly split off a cyclic summand of maximal order.
    std::vector<char> in_span(r, 0);
    in_span[0] = 1;
    std::vector<std::uint32_t> span_members = {0};
    std::vector<std::uint32_t> basis_orders;
    std::vector<std::uint32_t> basis;

    auto rel_order = [&](std::uint32_t x) {
        std::uint64_t t = 1;
        std::uint32_t acc = x;
        while (!in_span[acc]) {
            acc = addq(acc, x);
            ++t;
        }
        return t;
    };

    while (span_members.size() < r) {
        std::uint64_t best_t = 0;
        std::uint32_t best_x = 0;
        for (std::uint32_t x = 0; x < r; ++x) {
            if (in_span[x])
                continue;
            std::uint64_t t = rel_order(x);
            if (t > best_t) {
                best_t = t;
                best_x = x;
            }
        }
        // A valid lift lives in the span-coset of best_x: same absolute
        // order as the coset order, meeting the span only at 0.
        std::uint32_t lift = 0;
        bool found = false;
        std::vector<std::uint32_t> coset;
        coset.reserve(span_members.size());
        for (std::uint32_t s : span_members)
            coset.push_back(addq(best_x, s));
        std::sort(coset.begin(), coset.end());
        for (std::uint32_t y : coset) {
            if (order_of(y) != best_t)
                continue;
            bool clean = true;
            std::uint32_t acc = y;
            for (std::uint64_t t = 1; t < best_t && clean; ++t) {
                clean = !in_span[acc] || acc == 0;
                acc = addq(acc, y);
            }
            if (clean) {
                lift = y;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("quotient: basis lift search failed");
        basis.push_back(lift);
        basis_orders.push_back(static_cast<std::uint32_t>(best_t));
        std::vector<std::uint32_t> grown;
        grown.reserve(span_members.size() * best_t);
        for (std::uint64_t t = 0; t < best_t; ++t) {
            std::uint32_t shift = mulq(t, lift);
            for (std::uint32_t s : span_members)
                grown.push_back(addq(s, shift));
        }
        std::sort(grown.begin(), grown.end());
        span_members = std::move(grown);
        for (std::uint32_t s : span_members)
            in_span[s] = 1;
    }

    if (basis_orders.empty())
        basis_orders.push_back(1);
    AbelianGroup q(basis_orders);

    // Tabulate local index -> quotient element by walking all coordinates.
    std::vector<elem_t> table(r, 0);
    std::vector<char> seen(r, 0);
    std::vector<std::uint32_t> coords(basis_orders.size(), 0);
    for (std::uint64_t count = 0;; ++count) {
        std::uint32_t abstract = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            abstract = addq(abstract, mulq(coords[i], basis[i]));
        table[abstract] = q.element(coords);
        seen[abstract] = 1;
        std::size_t pos = coords.size();
        while (pos-- > 0) {
            if (++coords[pos] < basis_orders[pos])
                break;
            coords[pos] = 0;
            if (pos == 0) {
                if (std::find(seen.begin(), seen.end(), 0) != seen.end())
                    throw std::logic_error("quotient: basis does not span the quotient");
                QuotientMap out{std::move(q), h, {}};
                out.project.resize(n);
                for (elem_t x = 0; x < n; ++x)
                    out.project[x] = table[loc[cid[x]]];
                return out;
            }
        }
    }
}

CosetSystem map_system(const QuotientMap& q, const CosetSystem& sys) {
    if (!(q.kernel.group == sys.group()))
        throw domain_error("map_system: quotient of a different group");
    std::vector<Coset> mapped;
    mapped.reserve(sys.k());
    for (const auto& c : sys.cosets()) {
        if (!subgroup_subset(q.kernel, c.subgroup))
            throw domain_error("map_system: coset subgroup does not contain the kernel");
        std::vector<elem_t> image;
        image.reserve(c.subgroup.elements.size());
        for (elem_t x : c.subgroup.elements)
            image.push_back(q.project[x]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        mapped.emplace_back(Subgroup(q.quotient, std::move(image)), q.project[c.rep]);
    }
    return CosetSystem(q.quotient, std::move(mapped));
}

} // namespace cosetcover::abgroup
