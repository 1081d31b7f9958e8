/**
 * changhee: exact tables, polynomials, matrices, and identity checks for
 * the Changhee/Daehee/Euler/Bernoulli/Norlund families.
 *
 * Exit codes:
 *   0  success
 *   1  verification deviation (verify / oracle-diff found a discrepancy)
 *   2  usage error (bad flags, unknown family/identity/matrix name)
 *   3  fixture unreadable or malformed
 *   4  fixture family does not match the requested family
 *   5  fixture value mismatch
 */

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "changhee/families.hpp"
#include "changhee/family.hpp"
#include "changhee/fixtures.hpp"
#include "changhee/identities.hpp"
#include "changhee/matrix.hpp"
#include "changhee/report_io.hpp"
#include "changhee/series.hpp"

namespace {

using namespace changhee;

constexpr int kExitOk = 0;
constexpr int kExitDeviation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFixtureParse = 3;
constexpr int kExitFixtureFamily = 4;
constexpr int kExitFixtureValue = 5;

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.num().str();
  std::string s;
  if (r.sign() < 0) s += '-';
  s += "\\frac{" + BigInt(boost::multiprecision::abs(r.num())).str() + "}{" +
       r.den().str() + "}";
  return s;
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.degree().value() + 1; i-- > 0;) {
    const Rational& c = p.coeff(i);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rational mag = neg ? -c : c;
    if (i == 0) {
      out << latex_rational(mag);
    } else {
      if (!mag.is_one()) out << latex_rational(mag);
      out << 'x';
      if (i > 1) {
        out << '^';
        if (i > 9)
          out << '{' << i << '}';
        else
          out << i;
      }
    }
  }
  return out.str();
}

std::vector<std::vector<Polynomial>> table_cells(Family family,
                                                 unsigned n_max,
                                                 unsigned k_max) {
  std::vector<std::vector<Polynomial>> cells(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    cells[n].reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k)
      cells[n].emplace_back(family_number(family, n, k));
  }
  return cells;
}

void print_grid_csv(const std::vector<std::vector<Polynomial>>& cells) {
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) std::cout << ',';
      std::cout << row[j].to_string();
    }
    std::cout << '\n';
  }
}

void print_grid_text(const std::string& title,
                     const std::vector<std::vector<Polynomial>>& cells) {
  std::vector<std::vector<std::string>> text(cells.size());
  std::vector<std::size_t> width(cells.empty() ? 0 : cells[0].size(), 1);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      text[i].push_back(cells[i][j].to_string());
      width[j] = std::max(width[j], text[i][j].size());
    }
  std::cout << title << '\n';
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::cout << "n=" << i << ":";
    for (std::size_t j = 0; j < text[i].size(); ++j) {
      std::cout << "  ";
      std::cout.width(static_cast<std::streamsize>(width[j]));
      std::cout << text[i][j];
    }
    std::cout << '\n';
  }
  std::cout.width(0);
}

nlohmann::json grid_json(const std::vector<std::vector<Polynomial>>& cells) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cells) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_table(const std::string& family_s, unsigned n_max, unsigned k_max,
              const std::string& format) {
  Family family = family_from_string(family_s);
  auto cells = table_cells(family, n_max, k_max);
  if (format == "csv") {
    print_grid_csv(cells);
  } else if (format == "json") {
    nlohmann::json root;
    root["family"] = family_name(family);
    root["n_max"] = n_max;
    root["k_max"] = k_max;
    root["values"] = grid_json(cells);
    std::cout << root.dump(2) << '\n';
  } else {
    std::ostringstream title;
    title << "table " << family_name(family) << " (rows n=0.." << n_max
          << ", columns k=0.." << k_max << ")";
    print_grid_text(title.str(), cells);
  }
  return kExitOk;
}

int cmd_poly(const std::string& family_s, unsigned n, unsigned k,
             const std::string& at) {
  Family family = family_from_string(family_s);
  Polynomial p = family_poly(family, n, k);
  if (at.empty())
    std::cout << p.to_string() << '\n';
  else
    std::cout << p.eval(Rational::parse(at)).to_string() << '\n';
  return kExitOk;
}

int cmd_matrix(const std::string& name, unsigned rows, unsigned cols,
               const std::string& variant_s, const std::string& format) {
  MatrixVariant variant = matrix_variant_from_string(variant_s);
  Mat m = build_matrix(name, rows, cols, variant);
  if (format == "latex") {
    std::cout << "\\begin{pmatrix}\n";
    for (unsigned i = 0; i < rows; ++i) {
      for (unsigned j = 0; j < cols; ++j) {
        if (j != 0) std::cout << " & ";
        std::cout << latex_polynomial(m.at(i, j));
      }
      std::cout << (i + 1 < rows ? " \\\\" : "") << '\n';
    }
    std::cout << "\\end{pmatrix}\n";
  } else if (format == "json") {
    nlohmann::json root;
    root["name"] = name;
    root["rows"] = rows;
    root["cols"] = cols;
    root["variant"] = matrix_variant_name(variant);
    nlohmann::json entries = nlohmann::json::array();
    for (unsigned i = 0; i < rows; ++i) {
      nlohmann::json r = nlohmann::json::array();
      for (unsigned j = 0; j < cols; ++j)
        r.push_back(m.at(i, j).to_string());
      entries.push_back(std::move(r));
    }
    root["entries"] = std::move(entries);
    std::cout << root.dump(2) << '\n';
  } else {
    for (unsigned i = 0; i < rows; ++i) {
      for (unsigned j = 0; j < cols; ++j) {
        if (j != 0) std::cout << ',';
        std::cout << m.at(i, j).to_string();
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& ids_csv, unsigned n_max, unsigned k_max,
               const std::string& format, unsigned jobs) {
  std::vector<std::string> ids;
  std::stringstream ss(ids_csv);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) ids.push_back(id);
  SuiteReport suite = verify_all(n_max, k_max, ids, jobs);
  if (format == "json")
    std::cout << suite_to_json(suite).dump(2) << '\n';
  else
    std::cout << suite_to_text(suite);
  return suite.ok() ? kExitOk : kExitDeviation;
}

int cmd_oracle_diff(const std::string& family_s, unsigned n_max,
                    unsigned k_max, const std::string& format) {
  Family family = family_from_string(family_s);
  struct Diff {
    unsigned n, k;
    std::string closed_form, oracle;
  };
  std::vector<Diff> diffs;
  std::size_t points = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    Series gf = family_gf(family, k, true, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
      ++points;
      Polynomial closed = family_poly(family, n, k);
      Polynomial oracle = egf_coeff(gf, n);
      if (closed != oracle)
        diffs.push_back({n, k, closed.to_string(), oracle.to_string()});
    }
  }
  // Report in (n, k) order regardless of evaluation order.
  std::sort(diffs.begin(), diffs.end(), [](const Diff& a, const Diff& b) {
    return a.n != b.n ? a.n < b.n : a.k < b.k;
  });
  if (format == "json") {
    nlohmann::json root;
    root["family"] = family_name(family);
    root["n_max"] = n_max;
    root["k_max"] = k_max;
    root["points"] = points;
    nlohmann::json jd = nlohmann::json::array();
    for (const auto& d : diffs)
      jd.push_back({{"n", d.n},
                    {"k", d.k},
                    {"closed_form", d.closed_form},
                    {"oracle", d.oracle}});
    root["mismatches"] = std::move(jd);
    root["ok"] = diffs.empty();
    std::cout << root.dump(2) << '\n';
  } else {
    std::cout << "oracle-diff: family=" << family_name(family)
              << " n_max=" << n_max << " k_max=" << k_max << '\n';
    for (const auto& d : diffs)
      std::cout << "  (n=" << d.n << ", k=" << d.k
                << ") closed-form=" << d.closed_form
                << " oracle=" << d.oracle << '\n';
    std::cout << "points=" << points << " mismatches=" << diffs.size()
              << '\n'
              << "result: " << (diffs.empty() ? "ok" : "FAIL") << '\n';
  }
  return diffs.empty() ? kExitOk : kExitDeviation;
}

int cmd_crosscheck(const std::string& path, const std::string& family_s) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "crosscheck: cannot read fixture '" << path << "'\n";
    return kExitFixtureParse;
  }
  Fixture fx;
  try {
    fx = parse_fixture(in);
  } catch (const FixtureParseError& e) {
    std::cerr << "crosscheck: " << e.what() << '\n';
    return kExitFixtureParse;
  }
  if (!family_s.empty()) {
    Family requested = family_from_string(family_s);
    if (requested != fx.family) {
      std::cerr << "crosscheck: fixture family '" << family_name(fx.family)
                << "' does not match requested family '"
                << family_name(requested) << "'\n";
      return kExitFixtureFamily;
    }
  }
  CrosscheckReport rep = crosscheck(fx);
  for (const auto& m : rep.mismatches)
    std::cout << "mismatch at (n=" << m.n << ", k=" << m.k << "): expected "
              << m.expected << ", computed " << m.computed << '\n';
  std::cout << "crosscheck: family=" << family_name(rep.family)
            << " entries=" << rep.checked
            << " mismatches=" << rep.mismatches.size() << '\n'
            << "result: " << (rep.ok() ? "ok" : "FAIL") << '\n';
  return rep.ok() ? kExitOk : kExitFixtureValue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Changhee-family sequences: tables, polynomials, matrix "
      "factorizations, and identity verification"};
  app.require_subcommand(1);

  const std::vector<std::string> families = {"bernoulli", "euler",  "daehee",
                                             "changhee1", "changhee2",
                                             "norlund2"};

  // table
  auto* table = app.add_subcommand(
      "table", "Print the (n, k) grid of number values for one family");
  std::string t_family, t_format = "text";
  unsigned t_nmax = 0, t_kmax = 0;
  table->add_option("family", t_family, "Family name")->required();
  table->add_option("--n-max", t_nmax, "Largest row index n")->required();
  table->add_option("--k-max", t_kmax, "Largest order/column index k");
  table->add_option("--format", t_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // poly
  auto* poly = app.add_subcommand(
      "poly", "Print one family polynomial (or its value at a point)");
  std::string p_family, p_at;
  unsigned p_n = 0, p_k = 1;
  poly->add_option("family", p_family, "Family name")->required();
  poly->add_option("--n", p_n, "Degree index n")->required();
  poly->add_option("--k", p_k, "Order k (default 1)");
  poly->add_option("--at", p_at,
                   "Evaluate at this rational point instead of printing "
                   "the polynomial");

  // matrix
  auto* matrix = app.add_subcommand(
      "matrix", "Print a named matrix (S1, S2, SIGN_DIAG, FACT_DIAG, CFRAC, "
                "CH1, CH2, EULER, BERNOULLI, DAEHEE)");
  std::string m_name, m_variant = "numbers", m_format = "csv";
  unsigned m_rows = 0, m_cols = 0;
  matrix->add_option("name", m_name, "Matrix name")->required();
  matrix->add_option("--rows", m_rows, "Row count")->required();
  matrix->add_option("--cols", m_cols, "Column count")->required();
  matrix->add_option("--variant", m_variant,
                     "Family-matrix entry shape (ignored by structural "
                     "matrices)")
      ->check(CLI::IsMember(
          {"numbers", "polynomials", "at-negative-x", "at-shifted-x"}));
  matrix->add_option("--format", m_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "latex"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check registered identities over an (n, k) grid");
  std::string v_ids, v_format = "text";
  unsigned v_nmax = 8, v_kmax = 4, v_jobs = 1;
  verify->add_option("--ids", v_ids,
                     "Comma-separated identity ids (default: all)");
  verify->add_option("--n-max", v_nmax, "Largest n (default 8)");
  verify->add_option("--k-max", v_kmax, "Largest k (default 4)");
  verify->add_option("--format", v_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", v_jobs,
                     "Worker threads (output is identical at any count)")
      ->check(CLI::Range(1u, 64u));

  // oracle-diff
  auto* odiff = app.add_subcommand(
      "oracle-diff",
      "Compare closed-form family values against the generating-function "
      "oracle");
  std::string o_family, o_format = "text";
  unsigned o_nmax = 8, o_kmax = 4;
  odiff->add_option("family", o_family, "Family name")->required();
  odiff->add_option("--n-max", o_nmax, "Largest n (default 8)");
  odiff->add_option("--k-max", o_kmax, "Largest order k (default 4)");
  odiff->add_option("--format", o_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  // crosscheck
  auto* cross = app.add_subcommand(
      "crosscheck", "Recompute every entry of a fixture file and report "
                    "mismatches");
  std::string c_path, c_family;
  cross->add_option("fixture", c_path, "Path to a fixture file")->required();
  cross->add_option("--family", c_family,
                    "Family the fixture must declare (must match its header)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(t_family, t_nmax, t_kmax, t_format);
    if (poly->parsed()) return cmd_poly(p_family, p_n, p_k, p_at);
    if (matrix->parsed())
      return cmd_matrix(m_name, m_rows, m_cols, m_variant, m_format);
    if (verify->parsed())
      return cmd_verify(v_ids, v_nmax, v_kmax, v_format, v_jobs);
    if (odiff->parsed())
      return cmd_oracle_diff(o_family, o_nmax, o_kmax, o_format);
    if (cross->parsed()) return cmd_crosscheck(c_path, c_family);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
