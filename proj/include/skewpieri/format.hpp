#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "skewpieri/insertion.hpp"
#include "skewpieri/shapes.hpp"
#include "skewpieri/symfunc.hpp"
#include "skewpieri/tableaux.hpp"
#include "skewpieri/verify.hpp"

namespace skewpieri {

// Shapes are written "3,2,2/1,1" or compactly "322/11" (single-digit parts
// only). Either side may be empty or "∅"; a missing "/" means an empty inner
// partition. Parse failures throw ParseError carrying the offending token.

Partition parse_partition(std::string_view text);
SkewShape parse_shape(std::string_view text);

std::string format_partition(const Partition& p, bool compact = false);
/// Compact form is used only when requested and every part is below 10.
std::string format_shape(const SkewShape& s, bool compact = false);

/// "431/1: [1,2,7][3,3,5][5]", rows bottom first.
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view text);

std::string format_cell(Cell c);
std::string format_path(const std::vector<Cell>& path);

/// One line per term, "+ s[3,2,2,2/1,1]" or "- 2 s[4,2]"; "0" when empty.
std::string format_text(const SkewExpansion& f, std::string_view separator = "\n");
std::string format_text(const SchurExpansion& f, std::string_view separator = "\n");

nlohmann::json to_json(const SchurExpansion& f);
nlohmann::json to_json(const SkewExpansion& f);
SchurExpansion schur_expansion_from_json(const nlohmann::json& j);
SkewExpansion skew_expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
std::string format_text(const Report& r);

}  // namespace skewpieri
