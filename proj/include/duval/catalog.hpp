#pragma once

// Catalog of weighted K3 surfaces.
//
// Plain UTF-8 text, one row per line:
//
//   name | weights | degrees | basket | sigma
//
// weights and degrees are blank-separated positive integers (four weights and
// one degree for a hypersurface, five weights and two degrees for a
// codimension-2 complete intersection), the basket is a list of
// multiplicity-prefixed ADE tokens such as "3A_2 A_4" ("-" when empty) and
// sigma is an integer. Blank lines and lines starting with '#' are ignored.

#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "duval/basket.hpp"
#include "duval/catalog_data.hpp"
#include "duval/errors.hpp"
#include "duval/threefold.hpp"
#include "duval/wps.hpp"

namespace duval {

class CannotOpen : public Error {
 public:
  using Error::Error;
};

struct CatalogRow {
  std::string name;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> degrees;
  Basket basket;
  int sigma = 0;

  int codim() const noexcept { return static_cast<int>(degrees.size()); }

  HypersurfaceFamily family() const {
    if (codim() != 1) throw InvalidType(name + " is not a hypersurface");
    return {Weights(weights[0], weights[1], weights[2], weights[3]), degrees[0]};
  }
};

inline std::string format_row(const CatalogRow& r) {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  const std::string b = r.basket.empty() ? "-" : r.basket.to_string();
  return r.name + " | " + join(r.weights) + " | " + join(r.degrees) + " | " + b + " | " + std::to_string(r.sigma);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::int64_t> parse_ints(std::string_view s, std::size_t line, const char* what) {
  std::vector<std::int64_t> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    const auto v = parse_int(tok, line, what);
    if (v < 1) throw ParseError(line, std::string(what) + " must be positive");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline std::vector<CatalogRow> load_catalog(std::string_view source) {
  std::vector<CatalogRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto nl = source.find('\n', start);
    if (nl == std::string_view::npos) nl = source.size();
    const std::string_view line = detail::trim(source.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto f = detail::split(line, '|');
    if (f.size() != 5) throw ParseError(line_no, "expected 5 '|'-separated fields, found " + std::to_string(f.size()));
    CatalogRow r;
    r.name = std::string(f[0]);
    if (r.name.empty()) throw ParseError(line_no, "empty name");
    r.weights = detail::parse_ints(f[1], line_no, "weight");
    r.degrees = detail::parse_ints(f[2], line_no, "degree");
    if (!((r.weights.size() == 4 && r.degrees.size() == 1) || (r.weights.size() == 5 && r.degrees.size() == 2)))
      throw ParseError(line_no, "need 4 weights and 1 degree, or 5 weights and 2 degrees");
    try {
      r.basket = parse_basket(f[3]);
    } catch (const InvalidType& e) {
      throw ParseError(line_no, e.what());
    }
    r.sigma = static_cast<int>(detail::parse_int(f[4], line_no, "sigma"));
    if (r.sigma != smooth_k3_signature() + r.basket.total_d())
      throw InvariantViolation(r.name + ": sigma " + std::to_string(r.sigma) + " != -16 + " +
                               std::to_string(r.basket.total_d()));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<CatalogRow> load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CannotOpen("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

inline std::vector<CatalogRow> embedded_catalog() { return load_catalog(kEmbeddedCatalog); }

struct FieldCheck {
  std::string field;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct RowReport {
  std::string name;
  std::vector<FieldCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
};

/// Recomputes a row: basket and sigma for hypersurfaces, sigma from the stored
/// basket for complete intersections.
inline RowReport verify_row(const CatalogRow& r) {
  RowReport rep{r.name, {}};
  auto check = [&](std::string field, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    rep.checks.push_back({std::move(field), std::move(expected), std::move(computed), ok});
  };

  const auto wsum = std::accumulate(r.weights.begin(), r.weights.end(), std::int64_t{0});
  const auto dsum = std::accumulate(r.degrees.begin(), r.degrees.end(), std::int64_t{0});
  check("canonical", std::to_string(wsum), std::to_string(dsum));

  const std::string stored_basket = r.basket.empty() ? "-" : r.basket.to_string();
  Basket source = r.basket;
  if (r.codim() == 1) {
    try {
      const HypersurfaceFamily f = r.family();
      check("well-formed", "yes", well_formed(f.weights) ? "yes" : "no");
      check("quasismooth", "yes", quasismooth(f) ? "yes" : "no");
      source = basket(f);
      check("basket", stored_basket, source.empty() ? "-" : source.to_string());
    } catch (const Error& e) {
      check("basket", stored_basket, std::string("error: ") + e.what());
      return rep;
    }
  }
  try {
    check("sigma", std::to_string(r.sigma), std::to_string(sigma_k3(source, 0)));
  } catch (const Error& e) {
    check("sigma", std::to_string(r.sigma), std::string("error: ") + e.what());
  }
  return rep;
}

/// Signatures occurring in `rows`; codim 0 means all rows.
inline std::set<int> realized_signatures(const std::vector<CatalogRow>& rows, int codim = 0) {
  std::set<int> s;
  for (const auto& r : rows)
    if (codim == 0 || r.codim() == codim) s.insert(r.sigma);
  return s;
}

}  // namespace duval
