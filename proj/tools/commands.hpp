#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "becurv/graph.hpp"
#include "becurv/numeric.hpp"

namespace becurv::cli {

// Parses a BECURV_TOLERANCES-style override list: `key=value` pairs separated
// by commas or whitespace. Known keys: eigen_tol, bisect_tol. Throws
// DomainError on unknown keys, malformed pairs, or non-positive values.
Tolerances tolerances_from_spec(const std::string& text);

// Picks the input format from the file name, falling back to the content:
// `.json` files and text starting with '{' or '[' parse as json.
GraphFormat sniff_format(const std::string& path, const std::string& content);

// Full command dispatch. `args` excludes the program name. Returns the
// process exit code: 0 success, 2 usage or input error, 3 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace becurv::cli
