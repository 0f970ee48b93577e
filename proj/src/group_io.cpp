#include <charconv>
#include <sstream>
#include <vector>

#include "tcg/error.hpp"
#include "tcg/io.hpp"

namespace tcg {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int parse_index(std::string_view token, int line, int column) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v < 0)
    throw ParseError(line, column,
                     "expected a non-negative integer, got '" + std::string(token) + "'");
  return v;
}

}  // namespace

GroupTable parse_group_table(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected the group order");
  GroupTable t;
  t.order = parse_index(lines[0], 1, 1);
  if (t.order < 1) throw ParseError(1, 1, "group order must be at least 1");
  const int n = t.order;
  t.products.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const int line_no = row + 2;
    if (static_cast<std::size_t>(row + 1) >= lines.size())
      throw ParseError(line_no, 1, "expected row " + std::to_string(row) + " of the table");
    const std::string_view line = lines[row + 1];
    std::size_t pos = 0;
    for (int col = 0; col < n; ++col) {
      if (col > 0) {
        if (pos >= line.size() || line[pos] != ' ')
          throw ParseError(line_no, static_cast<int>(pos) + 1,
                           "expected " + std::to_string(n) + " entries, found " +
                               std::to_string(col));
        ++pos;
      }
      const std::size_t end = std::min(line.find(' ', pos), line.size());
      t.products.push_back(parse_index(line.substr(pos, end - pos), line_no,
                                       static_cast<int>(pos) + 1));
      pos = end;
    }
    if (pos != line.size())
      throw ParseError(line_no, static_cast<int>(pos) + 1,
                       "row has more than " + std::to_string(n) + " entries");
  }
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    if (line.substr(0, 2) == "# " && t.label.empty()) {
      t.label = std::string(line.substr(2));
      continue;
    }
    throw ParseError(static_cast<int>(i) + 1, 1, "unexpected text after the table");
  }
  return t;
}

FiniteGroup parse_group(std::string_view text) {
  return FiniteGroup::from_table(parse_group_table(text));
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream out;
  const int n = g.order();
  out << n << '\n';
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  if (!g.label().empty()) out << "# " << g.label() << '\n';
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const FiniteGroup& g) {
  const int n = g.order();
  Json table = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return Json{{"order", n}, {"table", std::move(table)}, {"label", g.label()}};
}

FiniteGroup group_from_json(const Json& j) {
  try {
    GroupTable t;
    t.order = j.at("order").get<int>();
    t.label = j.value("label", std::string{});
    const Json& rows = j.at("table");
    if (!rows.is_array() || static_cast<int>(rows.size()) != t.order)
      throw Error(ErrorKind::parse, "group JSON: table must have 'order' rows");
    for (const Json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != t.order)
        throw Error(ErrorKind::parse, "group JSON: every row must have 'order' entries");
      for (const Json& x : row) t.products.push_back(x.get<Element>());
    }
    return FiniteGroup::from_table(std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("group JSON: ") + e.what());
  }
}

}  // namespace tcg
