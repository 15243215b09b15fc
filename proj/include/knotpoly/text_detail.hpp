#ifndef KNOTPOLY_TEXT_DETAIL_HPP
#define KNOTPOLY_TEXT_DETAIL_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "knotpoly/bigint.hpp"

namespace knotpoly::detail {

// Canonical term grammar shared by both polynomial rings:
//   term      := sign [magnitude '*'] factors | sign magnitude
//   factors   := factor ('*' factor)*
//   factor    := var | var '^' int
// The sign is always printed, v^0 factors are omitted, a magnitude of 1 is
// omitted when at least one variable factor is present, and v^1 prints as v.

struct VarPower {
    std::string var;
    int exp;
};

void print_term(std::ostream& out, const BigInt& coeff, const std::vector<VarPower>& powers);

/// Parses a polynomial in the canonical text form with the given variable
/// names; invokes sink(coefficient, exponents) per term. Throws ParseError.
void parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const std::function<void(const BigInt&, const std::vector<int>&)>& sink);

} // namespace knotpoly::detail

#endif
