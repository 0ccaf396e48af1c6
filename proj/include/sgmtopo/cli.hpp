#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgmtopo::cli {

/// Exit codes: 0 success, 1 internal inconsistency, 2 invalid input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// SGM_TOPO_MAX_ORDER if set, else the default enumeration bound.
long enumeration_bound();

}  // namespace sgmtopo::cli
