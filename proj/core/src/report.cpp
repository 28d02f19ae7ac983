#include "cosetcover/report.hpp"

#include <cmath>
#include <sstream>

namespace cosetcover {

BoundWitness& BoundReport::add_bound(std::string where, std::string inequality,
                                     arith::Rational lhs, arith::Rational rhs, bool holds) {
    witnesses.push_back({std::move(where), std::move(inequality),
                         std::move(lhs), std::move(rhs), holds});
    return witnesses.back();
}

ResidualWitness& BoundReport::add_residual(std::string where, std::string check,
                                           double residual, double tolerance) {
    residuals.push_back({std::move(where), std::move(check),
                         residual, tolerance, std::fabs(residual) < tolerance});
    return residuals.back();
}

void BoundReport::finalize() {
    pass = true;
    for (const auto& w : witnesses)
        pass = pass && w.holds;
    for (const auto& r : residuals)
        pass = pass && r.holds;
}

std::string to_string(const BoundReport& report) {
    std::ostringstream os;
    os << "check: " << report.check << "\n";
    for (const auto& [key, value] : report.facts)
        os << "  " << key << " = " << value << "\n";
    for (const auto& w : report.witnesses)
        os << "  [" << (w.holds ? "ok" : "FAIL") << "] " << w.where << ": "
           << w.inequality << "  [" << w.lhs.str() << " vs " << w.rhs.str() << "]\n";
    for (const auto& r : report.residuals) {
        os << "  [" << (r.holds ? "ok" : "FAIL") << "] " << r.where << ": "
           << r.check << "  [residual " << r.residual << ", tol " << r.tolerance << "]\n";
    }
    for (const auto& n : report.notes)
        os << "  note: " << n << "\n";
    os << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace cosetcover
