#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nsalg/semigroup.hpp"

namespace nsalg::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 on a domain error, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "4,6,9", "3/2,5/2", or JSON: {"generators": [...]} / [...], where each
/// exponent is an integer, "num/den", or [num, den]. Throws Error(Parse).
NumericalSemigroup parse_semigroup(std::string_view text);

/// "1" for exponent 0, "u" for 1, otherwise "u^7" or "u^(9/2)"; raw prints the bare exponent.
std::string monomial(Exponent e, bool raw = false);
std::string monomials(const MonomialSet& s, bool raw = false);

}  // namespace nsalg::cli
