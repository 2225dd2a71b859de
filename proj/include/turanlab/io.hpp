#pragma once

// JSON and CSV renderings of the library's result types. Key order is fixed
// so identical inputs give byte-identical output.

#include "turanlab/bounds.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/search.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace turanlab {

using Json = nlohmann::ordered_json;

// Integral values print without a fractional part; others with 12
// significant digits.
std::string format_number(double x);

Json to_json(const BoundReport& report);
Json to_json(const ConstraintReport& report);
Json to_json(const VerificationRow& row);
// Timing goes under stats.seconds only when include_timing is set.
Json to_json(const SearchResult& result, bool include_timing);

// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

// Header plus one line per row. Columns: n, constraints, exact, each bound
// id in alphabetical order, ratio_<id> (measured / bound) for the same ids,
// pass. Throws std::invalid_argument unless every row has the same bound ids.
std::string emit_csv(const std::vector<VerificationRow>& rows);

}  // namespace turanlab
