// Structured verdicts for bound checks.
//
// A BoundReport is the single currency every checker returns: a list of
// inequality witnesses carrying exact rational sides, plus numeric
// residual witnesses for the few identities that are only available in
// floating point.  Callers decide how to render it (text or JSON).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cosetcover/rational.hpp"

namespace cosetcover {

// One verified inequality, e.g.  "k >= m + f(N_a)"  with lhs=4, rhs=3.
struct BoundWitness {
    std::string where;      // base point / class index the bound refers to
    std::string inequality; // human-readable statement, lhs rel rhs
    arith::Rational lhs;
    arith::Rational rhs;
    bool holds = false;
};

// One numeric identity checked against a tolerance.
struct ResidualWitness {
    std::string where;
    std::string check;
    double residual = 0.0;
    double tolerance = 0.0;
    bool holds = false;
};

struct BoundReport {
    std::string check; // stable identifier, e.g. "cover_bounds"
    bool pass = false;
    std::map<std::string, std::string> facts; // exact values worth reporting
    std::vector<BoundWitness> witnesses;
    std::vector<ResidualWitness> residuals;
    std::vector<std::string> notes;

    BoundWitness& add_bound(std::string where, std::string inequality,
                            arith::Rational lhs, arith::Rational rhs, bool holds);
    ResidualWitness& add_residual(std::string where, std::string check,
                                  double residual, double tolerance);
    // pass = conjunction of every witness recorded so far.
    void finalize();
};

std::string to_string(const BoundReport& report);

} // namespace cosetcover
