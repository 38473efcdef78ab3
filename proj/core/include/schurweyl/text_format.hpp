#pragma once

#include "schurweyl/tableau.hpp"
#include "schurweyl/young.hpp"

#include <string>
#include <string_view>

namespace schurweyl {

/// "3,2,1" -> (3,2,1). Whitespace around entries is ignored.
/// Throws ParseError on malformed text, InvalidArgument on a non-partition.
YoungDiagram parse_partition(std::string_view text);

/// "[[1,3],[2]]" -> tableau. Throws ParseError on malformed text,
/// InvalidArgument when the filling is not standard.
StandardTableau parse_tableau(std::string_view text);

/// "(4,1)" -> box.
Box parse_box(std::string_view text);

} // namespace schurweyl
