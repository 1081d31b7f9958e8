#pragma once

/**
 * Golden-table fixtures: a line-oriented interchange format for family
 * values.
 *
 *   family=<name>
 *   n,k,value
 *   ...
 *
 * The header names one of the six families; each data line holds grid
 * coordinates and a value in canonical rational (or polynomial) text.
 * Blank lines and lines starting with '#' are ignored. Duplicate (n, k)
 * coordinates are a parse error.
 *
 * crosscheck() recomputes every entry with the closed forms and reports
 * exact mismatches; fixture values are number values (x = 0), which is
 * what `table` emits.
 */

#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "changhee/families.hpp"
#include "changhee/family.hpp"
#include "changhee/polynomial.hpp"

namespace changhee {

struct FixtureParseError : std::runtime_error {
  explicit FixtureParseError(const std::string& what)
      : std::runtime_error(what) {}
};

struct FixtureEntry {
  unsigned n = 0;
  unsigned k = 0;
  Polynomial value;
};

struct Fixture {
  Family family = Family::changhee1;
  std::vector<FixtureEntry> entries;
};

namespace detail {

inline unsigned parse_grid_index(const std::string& s, int line) {
  if (s.empty()) throw FixtureParseError("fixture line " +
                                         std::to_string(line) +
                                         ": empty grid index");
  unsigned v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw FixtureParseError("fixture line " + std::to_string(line) +
                              ": bad grid index '" + s + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

}  // namespace detail

inline Fixture parse_fixture(std::istream& in) {
  Fixture fx;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::set<std::pair<unsigned, unsigned>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped;
    for (char c : line)
      if (c != ' ' && c != '\t') stripped += c;
    if (stripped.empty() || stripped[0] == '#') continue;

    if (!have_header) {
      const std::string prefix = "family=";
      if (stripped.rfind(prefix, 0) != 0)
        throw FixtureParseError("fixture line " + std::to_string(line_no) +
                                ": expected 'family=<name>' header");
      try {
        fx.family = family_from_string(stripped.substr(prefix.size()));
      } catch (const std::invalid_argument& e) {
        throw FixtureParseError("fixture line " + std::to_string(line_no) +
                                ": " + e.what());
      }
      have_header = true;
      continue;
    }

    auto c1 = stripped.find(',');
    auto c2 = c1 == std::string::npos ? std::string::npos
                                      : stripped.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw FixtureParseError("fixture line " + std::to_string(line_no) +
                              ": expected 'n,k,value'");
    FixtureEntry e;
    e.n = detail::parse_grid_index(stripped.substr(0, c1), line_no);
    e.k = detail::parse_grid_index(stripped.substr(c1 + 1, c2 - c1 - 1),
                                   line_no);
    try {
      e.value = Polynomial::parse(stripped.substr(c2 + 1));
    } catch (const std::invalid_argument& err) {
      throw FixtureParseError("fixture line " + std::to_string(line_no) +
                              ": " + err.what());
    }
    if (!seen.insert({e.n, e.k}).second)
      throw FixtureParseError("fixture line " + std::to_string(line_no) +
                              ": duplicate coordinates (" +
                              std::to_string(e.n) + ", " +
                              std::to_string(e.k) + ")");
    fx.entries.push_back(std::move(e));
  }
  if (!have_header)
    throw FixtureParseError("fixture: missing 'family=<name>' header");
  return fx;
}

inline Fixture parse_fixture(const std::string& text) {
  std::istringstream in(text);
  return parse_fixture(in);
}

inline std::string serialize_fixture(const Fixture& fx) {
  std::ostringstream out;
  out << "family=" << family_name(fx.family) << '\n';
  for (const auto& e : fx.entries)
    out << e.n << ',' << e.k << ',' << e.value.to_string() << '\n';
  return out.str();
}

struct CrosscheckMismatch {
  unsigned n = 0;
  unsigned k = 0;
  std::string expected;  // fixture value
  std::string computed;  // recomputed value
};

struct CrosscheckReport {
  Family family = Family::changhee1;
  std::size_t checked = 0;
  std::vector<CrosscheckMismatch> mismatches;  // fixture order
  bool ok() const { return mismatches.empty(); }
};

inline CrosscheckReport crosscheck(const Fixture& fx) {
  CrosscheckReport rep;
  rep.family = fx.family;
  for (const auto& e : fx.entries) {
    ++rep.checked;
    Polynomial computed(family_number(fx.family, e.n, e.k));
    if (computed != e.value)
      rep.mismatches.push_back(
          {e.n, e.k, e.value.to_string(), computed.to_string()});
  }
  return rep;
}

}  // namespace changhee
