#pragma once

#include <string>
#include <vector>

#include "varsamp/elim.hpp"

namespace varsamp {

/// A parsed system file: header `q=<prime>` and `vars: a, b, ...`, then one
/// polynomial per line. Term syntax is `c*x^2*y` with `*` and `^1` optional
/// and whitespace insignificant.
struct SystemFile {
    PolySystem system;
    std::vector<std::string> var_names;
};

SystemFile parse_system(const std::string& text);

/// Canonical text form; parse_system(format_system(s)) reproduces s exactly.
std::string format_system(const SystemFile& s);

std::string format_poly(const MultiPoly& f, const std::vector<std::string>& var_names);

} // namespace varsamp
