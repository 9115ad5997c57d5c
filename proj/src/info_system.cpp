#include "rauszer/info_system.hpp"

#include <algorithm>

#include "rauszer/opens.hpp"

namespace rauszer {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::set<std::string> parse_cell(std::string_view cell) {
  std::set<std::string> tokens;
  for (auto& t : split(cell, ';'))
    if (!t.empty()) tokens.insert(t);
  return tokens;
}

}  // namespace

InformationSystem InformationSystem::parse_csv(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string line = trim(text.substr(start, i - start));
      if (!line.empty()) lines.push_back(std::move(line));
      start = i + 1;
    }
  }
  if (lines.empty()) throw InputError("empty document: missing header row");

  auto header = split(lines[0], ',');
  if (header.empty() || header[0] != "object")
    throw InputError("header must start with 'object'");
  if (header.size() < 2) throw InputError("no attributes in header");

  InformationSystem s;
  s.attributes.assign(header.begin() + 1, header.end());
  for (std::size_t row = 1; row < lines.size(); ++row) {
    auto fields = split(lines[row], ',');
    if (fields.size() != header.size())
      throw InputError("ragged row " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                       " cells, got " + std::to_string(fields.size()));
    const std::string& label = fields[0];
    if (label.empty()) throw InputError("row " + std::to_string(row) + " has an empty object label");
    if (std::find(s.objects.begin(), s.objects.end(), label) != s.objects.end())
      throw InputError("duplicate object label '" + label + "'");
    s.objects.push_back(label);
    std::vector<std::set<std::string>> row_cells;
    for (std::size_t a = 1; a < fields.size(); ++a) row_cells.push_back(parse_cell(fields[a]));
    s.cells.push_back(std::move(row_cells));
  }
  if (s.objects.empty()) throw InputError("no object rows");
  return s;
}

std::optional<std::size_t> InformationSystem::object_index(std::string_view label) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == label) return i;
  return std::nullopt;
}

Preorder InformationSystem::indiscernibility() const {
  const std::size_t n = objects.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (cells[x] == cells[y]) up[x].set(y);
  return Preorder::from_up_sets(std::move(up));
}

Preorder InformationSystem::inclusion_preorder() const {
  const std::size_t n = objects.size();
  auto included = [&](std::size_t x, std::size_t y) {
    for (std::size_t a = 0; a < attributes.size(); ++a)
      if (!std::includes(cells[y][a].begin(), cells[y][a].end(), cells[x][a].begin(), cells[x][a].end()))
        return false;
    return true;
  };
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (included(x, y)) up[x].set(y);
  return Preorder::from_up_sets(std::move(up));
}

Approximation approximate(const Preorder& r, const Bits& x) {
  Bits lower = interior(r, x);
  Bits upper = closure(r, x);
  return Approximation{lower, upper, lower == upper};
}

}  // namespace rauszer
