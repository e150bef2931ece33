#include "skewpieri/format.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "skewpieri/errors.hpp"

namespace skewpieri {

namespace {

constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // ∅

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(std::string(token.empty() ? whole : token), "expected a nonnegative integer");
  if (value < 0) throw ParseError(std::string(token), "parts must be nonnegative");
  return value;
}

std::vector<int> parse_parts(std::string_view text, bool commas = false) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty() || text == kEmptySet || text == "0") return parts;
  if (commas || text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (!(token.empty() && comma == std::string_view::npos && !parts.empty())) parts.push_back(parse_int(token, text));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError(std::string(text), "unexpected character '" + std::string(1, ch) + "'");
      parts.push_back(ch - '0');
    }
  }
  return parts;
}

Partition make_partition(std::string_view text, bool commas = false) {
  auto parts = parse_parts(text, commas);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw ParseError(std::string(trim(text)), "parts are not weakly decreasing");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (std::find(parts.begin(), parts.end(), 0) != parts.end())
    throw ParseError(std::string(trim(text)), "zero part before a positive one");
  return Partition(std::move(parts));
}

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

bool single_digits(const Partition& p) { return p.part(1) < 10; }

nlohmann::json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(j.get<std::string>(), "not an integer coefficient");
    }
  }
  throw ParseError(j.dump(), "coefficient must be an integer or a decimal string");
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(j.dump(), "expected an array of parts");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(v.dump(), "part must be an integer");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(j.dump(), ex.what());
  }
}

template <class Key, class Label>
std::string expansion_text(const Expansion<Key>& f, std::string_view separator, Label label) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    if (!first) out += separator;
    first = false;
    out += c < 0 ? "- " : "+ ";
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1) out += mag.str() + " ";
    out += "s[" + label(key) + "]";
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  if (text.find('/') != std::string_view::npos) throw ParseError(std::string(text), "expected a partition, not a skew shape");
  return make_partition(text);
}

SkewShape parse_shape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos)
    throw ParseError(std::string(text), "more than one '/'");
  // A comma on either side puts both sides in comma form.
  const bool commas = text.find(',') != std::string_view::npos;
  Partition outer = make_partition(text.substr(0, slash), commas);
  Partition inner = slash == std::string_view::npos ? Partition{} : make_partition(text.substr(slash + 1), commas);
  if (!outer.contains(inner)) throw ParseError(std::string(trim(text)), "inner shape is not contained in the outer one");
  return SkewShape(std::move(outer), std::move(inner));
}

std::string format_partition(const Partition& p, bool compact) {
  if (compact && single_digits(p)) return p.empty() ? "0" : join(p.parts(), "");
  return join(p.parts(), ",");
}

std::string format_shape(const SkewShape& s, bool compact) {
  compact = compact && single_digits(s.outer());
  std::string out = s.outer().empty() ? std::string(kEmptySet) : format_partition(s.outer(), compact);
  if (!s.inner().empty()) out += "/" + format_partition(s.inner(), compact);
  return out;
}

std::string format_tableau(const Tableau& t) {
  std::string out = format_shape(t.shape(), true) + ":";
  if (t.num_rows() > 0) out += " ";
  for (int r = 1; r <= t.num_rows(); ++r) out += "[" + join(t.row(r), ",") + "]";
  return out;
}

Tableau parse_tableau(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(std::string(text), "expected '<shape>: [row][row]...'");
  const SkewShape shape = parse_shape(text.substr(0, colon));
  std::vector<std::vector<int>> rows;
  std::string_view rest = trim(text.substr(colon + 1));
  while (!rest.empty()) {
    if (rest.front() != '[') throw ParseError(std::string(rest), "expected '['");
    const auto close = rest.find(']');
    if (close == std::string_view::npos) throw ParseError(std::string(rest), "missing ']'");
    const auto body = trim(rest.substr(1, close - 1));
    std::vector<int> row;
    if (!body.empty()) {
      if (body.find(',') == std::string_view::npos) row.push_back(parse_int(body, body));
      else row = parse_parts(body);
    }
    for (int v : row)
      if (v < 1) throw ParseError(std::string(body), "entries must be positive");
    rows.push_back(std::move(row));
    rest = trim(rest.substr(close + 1));
  }
  rows.resize(static_cast<std::size_t>(std::max<int>(shape.outer().length(), static_cast<int>(rows.size()))));
  try {
    return Tableau(shape, std::move(rows));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string(trim(text)), ex.what());
  }
}

std::string format_cell(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

std::string format_path(const std::vector<Cell>& path) {
  std::string out;
  for (const auto& c : path) out += (out.empty() ? "" : " ") + format_cell(c);
  return out;
}

std::string format_text(const SkewExpansion& f, std::string_view separator) {
  return expansion_text(f, separator, [](const SkewShape& s) { return format_shape(s); });
}

std::string format_text(const SchurExpansion& f, std::string_view separator) {
  return expansion_text(f, separator, [](const Partition& p) { return format_partition(p); });
}

nlohmann::json to_json(const SchurExpansion& f) {
  auto terms = nlohmann::json::array();
  for (const auto& [p, c] : f.terms())
    terms.push_back({{"coeff", coefficient_json(c)}, {"partition", std::vector<int>(p.parts().begin(), p.parts().end())}});
  return {{"basis", "schur"}, {"terms", terms}};
}

nlohmann::json to_json(const SkewExpansion& f) {
  auto terms = nlohmann::json::array();
  for (const auto& [s, c] : f.terms())
    terms.push_back({{"coeff", coefficient_json(c)},
                     {"outer", std::vector<int>(s.outer().parts().begin(), s.outer().parts().end())},
                     {"inner", std::vector<int>(s.inner().parts().begin(), s.inner().parts().end())}});
  return {{"basis", "skew"}, {"terms", terms}};
}

SchurExpansion schur_expansion_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != "schur" || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(j.dump(), "expected {\"basis\":\"schur\",\"terms\":[...]}");
  SchurExpansion out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("partition")) throw ParseError(t.dump(), "malformed term");
    out.add(partition_from_json(t["partition"]), coefficient_from_json(t["coeff"]));
  }
  return out;
}

SkewExpansion skew_expansion_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != "skew" || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(j.dump(), "expected {\"basis\":\"skew\",\"terms\":[...]}");
  SkewExpansion out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("outer")) throw ParseError(t.dump(), "malformed term");
    Partition outer = partition_from_json(t["outer"]);
    Partition inner = t.contains("inner") ? partition_from_json(t["inner"]) : Partition{};
    if (!outer.contains(inner)) throw ParseError(t.dump(), "inner shape is not contained in the outer one");
    out.add(SkewShape(std::move(outer), std::move(inner)), coefficient_from_json(t["coeff"]));
  }
  return out;
}

nlohmann::json to_json(const Report& r) {
  auto cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json entry{{"name", c.name}, {"passed", c.passed}, {"seconds", c.seconds}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    cases.push_back(std::move(entry));
  }
  return {{"check", r.check},
          {"passed", r.passed()},
          {"cases", r.cases.size()},
          {"failures", r.failures()},
          {"seconds", r.seconds},
          {"results", cases}};
}

std::string format_text(const Report& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  std::string out = "verify " + r.check + ": " + std::to_string(r.cases.size()) + " cases, " +
                    std::to_string(r.failures()) + " failures (" + secs + " s)\n";
  for (const auto& c : r.cases)
    if (!c.passed) out += "FAIL " + c.name + ": " + c.counterexample + "\n";
  return out;
}

}  // namespace skewpieri
