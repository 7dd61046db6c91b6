#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace varsamp::cli {

/// Exit codes: 0 success, 2 parse/config error, 3 budget or empty-variety
/// error, 4 verification FAIL.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace varsamp::cli
