#include "cosetcover/zcover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cosetcover/errors.hpp"

namespace cosetcover::zcover {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

std::complex<double> unit(const arith::Rational& phase) {
    double t = 2.0 * std::numbers::pi * phase.frac().to_double();
    return {std::cos(t), std::sin(t)};
}

// Multiplicity of every residue in [0, period).
std::vector<std::uint32_t> coverage_table(const ZCoverSystem& sys) {
    std::int64_t period = sys.period();
    std::vector<std::uint32_t> w(static_cast<std::size_t>(period), 0);
    for (const auto& c : sys.classes())
        for (std::int64_t x = c.rep; x < period; x += c.mod)
            ++w[static_cast<std::size_t>(x)];
    return w;
}

// Witness math shared by the single-point and aggregated checks;
// preconditions are the caller's responsibility.
void append_bound_witnesses(const ZCoverSystem& sys, int m, std::int64_t a,
                            std::int64_t N, std::int64_t fN, BoundReport& report) {
    const std::int64_t k = static_cast<std::int64_t>(sys.k());
    report.add_bound("a=" + std::to_string(a), "k >= m + f(N_a)",
                     arith::Rational(k), arith::Rational(m + fN), k >= m + fN);
    arith::BigInt two_pow = arith::BigInt(1) << static_cast<unsigned>(k - m);
    report.add_bound("a=" + std::to_string(a), "N_a <= 2^(k-m)",
                     arith::Rational(N), arith::Rational(two_pow),
                     arith::Rational(N) <= arith::Rational(two_pow));

    for (const auto& [p, e] : arith::factorize(N).factors) {
        std::int64_t members = 0;
        arith::Rational middle(0);
        for (const auto& c : sys.classes()) {
            std::int64_t d = floor_mod(c.rep - a, c.mod);
            if (d == 0)
                continue; // class contains a
            int ep = arith::ord_p(c.mod, p);
            std::int64_t core = c.mod;
            for (int i = 0; i < ep; ++i)
                core /= p;
            if (d % core != 0)
                continue; // not in I(p)
            int dp = arith::ord_p(d, p); // < ep because c.mod does not divide d
            std::int64_t denom = 1;
            for (int i = 0; i < ep - dp - 1; ++i)
                denom *= p;
            ++members;
            middle += arith::Rational(1, denom);
        }
        std::string where = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
        arith::Rational rhs(static_cast<long long>(e) * (p - 1));
        report.add_bound(where, "|I(p)| >= sum over I(p) of p^-(ord_p(n_s)-ord_p(a_s-a)-1)",
                         arith::Rational(members), middle, arith::Rational(members) >= middle);
        report.add_bound(where, "sum >= ord_p(N_a)(p-1)", middle, rhs, middle >= rhs);
    }
}

} // namespace

ResidueClass::ResidueClass(std::int64_t a, std::int64_t n) {
    if (n <= 0)
        throw domain_error("ResidueClass: modulus must be positive");
    mod = n;
    rep = floor_mod(a, n);
}

bool ResidueClass::contains(std::int64_t x) const {
    return floor_mod(x - rep, mod) == 0;
}

ZCoverSystem::ZCoverSystem(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
    if (classes_.empty())
        throw domain_error("ZCoverSystem: at least one residue class required");
}

std::int64_t ZCoverSystem::period() const {
    std::int64_t l = 1;
    for (const auto& c : classes_) {
        l = arith::lcm_checked(l, c.mod);
        if (l > kMaxPeriod)
            throw capacity_error("ZCoverSystem: period exceeds " + std::to_string(kMaxPeriod));
    }
    return l;
}

std::size_t multiplicity(const ZCoverSystem& sys, std::int64_t x) {
    std::size_t count = 0;
    for (const auto& c : sys.classes())
        count += c.contains(x);
    return count;
}

bool is_m_cover(const ZCoverSystem& sys, int m) {
    if (m < 1)
        throw domain_error("is_m_cover: m must be >= 1");
    auto w = coverage_table(sys);
    return *std::min_element(w.begin(), w.end()) >= static_cast<std::uint32_t>(m);
}

bool is_exact_m_cover(const ZCoverSystem& sys, int m) {
    if (m < 1)
        throw domain_error("is_exact_m_cover: m must be >= 1");
    auto w = coverage_table(sys);
    return std::all_of(w.begin(), w.end(),
                       [&](std::uint32_t v) { return v == static_cast<std::uint32_t>(m); });
}

std::vector<std::size_t> irredundant_indices(const ZCoverSystem& sys, int m) {
    if (m < 1)
        throw domain_error("irredundant_indices: m must be >= 1");
    auto w = coverage_table(sys);
    std::int64_t period = static_cast<std::int64_t>(w.size());
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < sys.k(); ++t) {
        const auto& c = sys.classes()[t];
        bool still_cover = true;
        for (std::int64_t x = 0; x < period && still_cover; ++x) {
            std::uint32_t wt = w[static_cast<std::size_t>(x)] - (c.contains(x) ? 1u : 0u);
            still_cover = wt >= static_cast<std::uint32_t>(m);
        }
        if (!still_cover)
            out.push_back(t);
    }
    return out;
}

bool is_minimal_m_cover(const ZCoverSystem& sys, int m) {
    return is_m_cover(sys, m) && irredundant_indices(sys, m).size() == sys.k();
}

std::int64_t n_a(const ZCoverSystem& sys, std::int64_t a) {
    std::int64_t l = 1;
    for (const auto& c : sys.classes())
        if (c.contains(a))
            l = arith::lcm_checked(l, c.mod);
    return l;
}

std::vector<std::size_t> outside_indices(const ZCoverSystem& sys, std::int64_t a) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < sys.k(); ++s)
        if (!sys.classes()[s].contains(a))
            out.push_back(s);
    return out;
}

BoundReport check_zcover_bounds(const ZCoverSystem& sys, int m, std::int64_t a) {
    if (m < 1)
        throw domain_error("check_zcover_bounds: m must be >= 1");
    if (!is_m_cover(sys, m))
        throw precondition_error("check_zcover_bounds: system is not an m-cover");
    if (multiplicity(sys, a) != static_cast<std::size_t>(m))
        throw precondition_error("check_zcover_bounds: multiplicity at a must equal m");

    const std::int64_t k = static_cast<std::int64_t>(sys.k());
    const std::int64_t N = n_a(sys, a);
    const std::int64_t fN = arith::mycielski_f(N);

    BoundReport report;
    report.check = "zcover_bounds";
    report.facts["k"] = std::to_string(k);
    report.facts["m"] = std::to_string(m);
    report.facts["a"] = std::to_string(a);
    report.facts["N_a"] = std::to_string(N);
    report.facts["f(N_a)"] = std::to_string(fN);

    append_bound_witnesses(sys, m, a, N, fN, report);

    report.finalize();
    return report;
}

BoundReport check_zcover_bounds_all(const ZCoverSystem& sys, int m) {
    if (m < 1)
        throw domain_error("check_zcover_bounds_all: m must be >= 1");
    auto w = coverage_table(sys);
    if (*std::min_element(w.begin(), w.end()) < static_cast<std::uint32_t>(m))
        throw precondition_error("check_zcover_bounds_all: system is not an m-cover");

    const std::int64_t period = static_cast<std::int64_t>(w.size());
    const std::int64_t k = static_cast<std::int64_t>(sys.k());
    constexpr std::size_t kMaxListed = 16;

    BoundReport report;
    report.check = "zcover_bounds_all";
    report.facts["k"] = std::to_string(k);
    report.facts["m"] = std::to_string(m);
    report.facts["period"] = std::to_string(period);

    std::int64_t checked = 0, violations = 0, tight = 0, max_n = 1;
    std::vector<std::int64_t> tight_samples;
    std::map<std::int64_t, std::int64_t> f_cache;
    for (std::int64_t a = 0; a < period; ++a) {
        if (w[static_cast<std::size_t>(a)] != static_cast<std::uint32_t>(m))
            continue;
        ++checked;
        std::int64_t N = n_a(sys, a);
        max_n = std::max(max_n, N);
        auto [it, fresh] = f_cache.try_emplace(N, 0);
        if (fresh)
            it->second = arith::mycielski_f(N);
        std::int64_t fN = it->second;
        // Only failing witnesses are worth materializing across a whole period.
        BoundReport point;
        append_bound_witnesses(sys, m, a, N, fN, point);
        bool ok = true;
        for (const auto& witness : point.witnesses)
            ok = ok && witness.holds;
        if (!ok) {
            ++violations;
            for (const auto& witness : point.witnesses)
                if (!witness.holds && report.witnesses.size() < kMaxListed)
                    report.witnesses.push_back(witness);
        }
        if (k == m + fN) {
            ++tight;
            if (tight_samples.size() < kMaxListed)
                tight_samples.push_back(a);
        }
    }

    report.facts["base points checked"] = std::to_string(checked);
    report.facts["violations"] = std::to_string(violations);
    report.facts["tight base points"] = std::to_string(tight);
    report.facts["max N_a"] = std::to_string(max_n);
    {
        std::string s;
        for (std::int64_t a : tight_samples)
            s += (s.empty() ? "" : ",") + std::to_string(a);
        report.facts["tight samples"] = s;
    }
    report.pass = violations == 0;
    return report;
}

std::vector<std::complex<double>> exponential_sums(const ZCoverSystem& sys,
                                                   const ExpSumSpec& spec) {
    if (spec.alpha < arith::Rational(0) || spec.alpha >= arith::Rational(1))
        throw domain_error("exponential_sums: alpha must lie in [0, 1)");
    auto J = outside_indices(sys, spec.base);
    if (J.size() > kMaxSubsetClasses)
        throw capacity_error("exponential_sums: too many classes off the base point");
    for (std::size_t s : J)
        if (!spec.weights.contains(s))
            throw domain_error("exponential_sums: missing weight for class index " +
                               std::to_string(s));
    for (const auto& [s, w] : spec.weights)
        if (!std::binary_search(J.begin(), J.end(), s))
            throw domain_error("exponential_sums: weight given for a class containing the base");

    const std::int64_t N = n_a(sys, spec.base);
    std::vector<std::complex<double>> sums(static_cast<std::size_t>(N), {0.0, 0.0});

    // DFS over subsets of J carrying the exact weight sum and phase sum.
    auto descend = [&](auto&& self, std::size_t pos, const arith::Rational& weight_sum,
                       const arith::Rational& phase, bool odd) -> void {
        if (pos == J.size()) {
            arith::Rational x = weight_sum.frac() * arith::Rational(N) - spec.alpha;
            if (!x.is_integer())
                return;
            arith::BigInt r = x.num();
            if (r < 0 || r >= N)
                return;
            std::complex<double> term = unit(phase);
            sums[r.get_ui()] += odd ? -term : term;
            return;
        }
        const auto& c = sys.classes()[J[pos]];
        std::int64_t w = spec.weights.at(J[pos]);
        self(self, pos + 1, weight_sum, phase, odd);
        self(self, pos + 1, weight_sum + arith::Rational(w, c.mod),
             phase + arith::Rational((c.rep - spec.base) * w, c.mod), !odd);
    };
    descend(descend, 0, arith::Rational(0), arith::Rational(0), false);
    return sums;
}

std::vector<arith::Rational> realized_alphas(const ZCoverSystem& sys, std::int64_t base,
                                             const std::map<std::size_t, std::int64_t>& weights) {
    auto J = outside_indices(sys, base);
    if (J.size() > kMaxSubsetClasses)
        throw capacity_error("realized_alphas: too many classes off the base point");
    const std::int64_t N = n_a(sys, base);
    std::vector<arith::Rational> out;
    auto descend = [&](auto&& self, std::size_t pos, const arith::Rational& weight_sum) -> void {
        if (pos == J.size()) {
            out.push_back((weight_sum.frac() * arith::Rational(N)).frac());
            return;
        }
        const auto& c = sys.classes()[J[pos]];
        std::int64_t w = weights.contains(J[pos]) ? weights.at(J[pos]) : 0;
        self(self, pos + 1, weight_sum);
        self(self, pos + 1, weight_sum + arith::Rational(w, c.mod));
    };
    descend(descend, 0, arith::Rational(0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ZCoverSystem build_extremal_zcover(int k, int m) {
    if (m < 1 || k < m + 1)
        throw domain_error("build_extremal_zcover: need k >= m + 1 >= 2");
    int K = k - m;
    if (K > 40)
        throw capacity_error("build_extremal_zcover: modulus 2^(k-m) out of range");
    std::vector<ResidueClass> classes;
    for (int i = 0; i < m - 1; ++i)
        classes.emplace_back(0, 1);
    for (int j = 1; j <= K; ++j)
        classes.emplace_back(std::int64_t(1) << (j - 1), std::int64_t(1) << j);
    classes.emplace_back(0, std::int64_t(1) << K);
    return ZCoverSystem(std::move(classes));
}

} // namespace cosetcover::zcover
