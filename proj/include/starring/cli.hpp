#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "starring/liealg.hpp"

namespace starring::cli {

// Runs one command line (without the program name). Exit codes: 0 on
// success, 1 on a domain error such as NotInvertible, 2 on usage or parse
// errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// Lie constants as a JSON array d[n][n][n]; each entry is an integer, a
// decimal string or an [re, im] pair of those. Values live in Z[i].
lie::StructureConstants constants_from_json(const nlohmann::json& j);
nlohmann::json constants_to_json(const lie::StructureConstants& c);
lie::ShiftVector shift_from_json(const nlohmann::json& j);

}  // namespace starring::cli
