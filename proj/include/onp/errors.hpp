#pragma once
// Exception taxonomy. The CLI maps these onto its exit codes:
//   parse_error        -> 2   (syntax or semantic error in an input expression)
//   out_of_range_error -> 3   (value escapes the representable segment, e.g. an
//                              omega-exponent that is not below w^w)
//   resource_error     -> 4   (a configured cap was hit: scan/iteration/table size)
// Plain misuse of the API (u == p where u != p is required, inverse of zero, ...)
// throws std::invalid_argument / std::domain_error as usual.

#include <stdexcept>
#include <string>

namespace onp {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct out_of_range_error : std::runtime_error {
    explicit out_of_range_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace onp
