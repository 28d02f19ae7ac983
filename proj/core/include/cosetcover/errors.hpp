// Error taxonomy shared by all modules.
//
// domain_error:       the input is outside the mathematical domain of the
//                     operation (zero modulus, composite where a prime is
//                     required, mismatched parent groups, ...).
// precondition_error: the input is well formed but fails a stated
//                     precondition, e.g. asking for cover bounds of a system
//                     that is not an m-cover.
// capacity_error:     the input is valid but exceeds an implementation
//                     limit meant to keep runs interactive.
#pragma once

#include <stdexcept>
#include <string>

namespace cosetcover {

class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

class capacity_error : public std::length_error {
public:
    explicit capacity_error(const std::string& what) : std::length_error(what) {}
};

} // namespace cosetcover
