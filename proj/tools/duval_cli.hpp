#pragma once

// Command-line front end. Exit codes:
//   0  success
//   1  a verification ran and reported a mismatch
//   2  input rejected on mathematical grounds (filters, non-du Val point, bound)
//   64 usage error
//   65 malformed catalog data
//   66 catalog file cannot be opened

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "duval/duval.hpp"

namespace duval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataErr = 65;
inline constexpr int kExitNoInput = 66;

inline constexpr const char* kCatalogEnv = "DUVAL_CATALOG";

namespace detail {

inline std::string tsv_row(const CatalogRow& r) {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  return r.name + "\t" + join(r.weights) + "\t" + join(r.degrees) + "\t" + (r.basket.empty() ? "-" : r.basket.to_string()) +
         "\t" + std::to_string(r.sigma);
}

inline std::string basket_text(const Basket& b) { return b.empty() ? "(empty)" : b.to_string(); }

inline std::string signature_list(const std::set<int>& s) {
  std::string out;
  for (int x : s) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out.empty() ? "(none)" : out;
}

struct BasketOptions {
  std::vector<std::int64_t> weights;
  std::optional<std::int64_t> degree;
  std::string format = "text";
};

inline int run_basket(const BasketOptions& o, std::ostream& out) {
  const Weights w(o.weights[0], o.weights[1], o.weights[2], o.weights[3]);
  const HypersurfaceFamily f(w, o.degree.value_or(w.sum()));
  const Basket b = basket(f);
  const int s = sigma_k3(b, 0);
  if (o.format == "tsv") {
    const auto& a = w.values();
    out << detail::tsv_row({"F_" + std::to_string(f.degree) + " ⊂ " + w.to_string(), {a.begin(), a.end()}, {f.degree}, b, s})
        << "\n";
    return kExitOk;
  }
  out << "family: F_" << f.degree << " ⊂ " << w.to_string() << "\n";
  for (const auto& q : vertex_singularities(f)) out << "vertex: " << q.name() << " = " << q.to_ade().name() << "\n";
  for (const auto& [q, n] : edge_singularities(f))
    out << "edge: " << n << " x " << q.name() << " = " << q.to_ade().name() << "\n";
  out << "basket: " << basket_text(b) << "\n";
  out << "sigma: " << s << "\n";
  return kExitOk;
}

inline int run_sigma(const std::string& basket_tokens, int q, std::ostream& out) {
  const Basket b = parse_basket(basket_tokens);
  const int s = sigma_k3(b, q);
  out << "basket: " << basket_text(b) << "\n";
  out << "total_d: " << b.total_d() << "\n";
  if (q == 0) {
    const NovikovDecomposition n = novikov_assembly(b);
    out << "sigma(F_0): " << n.sigma_resolution << "\n";
    out << "tubes:";
    if (n.tube_signatures.empty()) out << " (none)";
    for (int t : n.tube_signatures) out << " " << t;
    out << "\n";
    out << "complement: " << n.sigma_complement << "\n";
  }
  out << "sigma: " << s << "\n";
  return kExitOk;
}

inline std::vector<DynkinGraph::Edge> parse_edges(const std::string& text) {
  std::vector<DynkinGraph::Edge> edges;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      throw InvalidType("edge '" + tok + "' must look like u-v");
    try {
      edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    } catch (const std::logic_error&) {
      throw InvalidType("edge '" + tok + "' must look like u-v");
    }
  }
  return edges;
}

inline int run_plumbing(const std::string& type, const std::vector<std::int64_t>& euler, const std::string& edges,
                        std::ostream& out) {
  std::optional<DynkinGraph> g;
  if (!type.empty()) {
    const Basket b = parse_basket(type);
    if (b.point_count() != 1) throw InvalidType("--type takes a single ADE type such as E_8");
    g.emplace(dynkin_graph(b.entries().front()));
  } else {
    g.emplace(static_cast<int>(euler.size()), parse_edges(edges), euler);
  }
  const SymIntForm q = plumbing_form(*g);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = 0; j < q.dim(); ++j) out << (j ? " " : "") << q.at(i, j);
    out << "\n";
  }
  const FormSignature s = form_signature(q);
  out << "inertia: (" << s.positives << "," << s.negatives << "," << s.zeros << ")\n";
  out << "sigma: " << s.sigma() << "\n";
  out << "negative definite: " << (is_negative_definite(q) ? "yes" : "no") << "\n";
  out << "tree: " << (g->is_tree() ? "yes" : "no") << "\n";
  return kExitOk;
}

inline int run_table_verify(const std::string& catalog_path, const std::string& format, std::ostream& out) {
  std::string path = catalog_path;
  if (path.empty())
    if (const char* env = std::getenv(kCatalogEnv); env && *env) path = env;
  const std::vector<CatalogRow> rows = path.empty() ? embedded_catalog() : load_catalog_file(path);
  std::size_t passed = 0;
  for (const auto& r : rows) {
    const RowReport rep = verify_row(r);
    if (rep.ok()) ++passed;
    if (format == "tsv") {
      out << r.name << "\t" << (rep.ok() ? "PASS" : "FAIL");
      for (const auto& c : rep.checks)
        if (!c.ok) out << "\t" << c.field << ": expected " << c.expected << ", computed " << c.computed;
      out << "\n";
      continue;
    }
    out << (rep.ok() ? "PASS " : "FAIL ") << r.name << "  sigma " << r.sigma << "\n";
    for (const auto& c : rep.checks)
      if (!c.ok) out << "  " << c.field << ": expected " << c.expected << ", computed " << c.computed << "\n";
  }
  out << passed << "/" << rows.size() << " rows verified\n";
  return passed == rows.size() ? kExitOk : kExitMismatch;
}

inline int run_bsy(int q, const std::optional<std::string>& basket_tokens, int fiber_q, int degree, std::ostream& out,
                   std::ostream& err) {
  if (q < 1 || q > 3) {
    err << "error: --q must be 1, 2 or 3\n";
    return kExitUsage;
  }
  if (q != 1 && (basket_tokens || fiber_q != 0)) {
    err << "error: --basket and --fiber-q only apply when q = 1\n";
    return kExitUsage;
  }
  const SurfaceModel fiber(parse_basket(basket_tokens.value_or("")), fiber_q);
  const KawamataDiagram k = KawamataDiagram::for_irregularity(q, fiber, degree);
  const BsyReport r = bsy_check(k);
  out << "q(X) = " << q << ", cover degree d = " << degree << "\n";
  if (q == 1)
    out << "fiber: basket " << basket_text(fiber.basket()) << ", q(F) = " << fiber.q() << ", sigma(F) = " << sigma_k3(fiber)
        << "\n";
  out << "Hodge route:       T_1*(X) = " << r.hodge.to_string() << "\n";
  out << "topological route: L_*(X)  = " << r.topological.to_string() << "\n";
  out << "closed form:       L_*(X)  = " << r.closed_form.to_string() << "\n";
  out << "transfer p_! L_*(X) = L_*(F×E): " << (r.transfer_consistent ? "yes" : "no") << "\n";
  out << (r.equal ? "PASS" : "FAIL") << "\n";
  return r.equal ? kExitOk : kExitMismatch;
}

struct SearchOptions {
  std::optional<int> target;
  int max_weight = 40;
  int jobs = 1;
  bool stabilize = false;
  std::string format = "text";
};

inline int run_search(const SearchOptions& o, std::ostream& out) {
  std::vector<K3Family> all;
  std::string bound_note;
  int bound = o.max_weight;
  if (o.stabilize) {
    StabilizedSearch s = stabilize_k3_hypersurfaces(o.max_weight, 10, o.jobs);
    all = std::move(s.families);
    bound = s.max_weight;
    for (const auto& [w, n] : s.history) bound_note += (bound_note.empty() ? "" : " ") + std::to_string(w) + ":" + std::to_string(n);
  } else {
    all = enumerate_k3_hypersurfaces(o.max_weight, o.jobs);
  }
  const std::vector<K3Family> shown = o.target ? filter_signature(all, *o.target) : all;

  std::vector<CatalogRow> rows;
  for (const auto& f : shown) rows.push_back(f.to_row());
  if (o.format != "tsv") out << "# name | weights | degrees | basket | sigma\n";
  for (const auto& r : rows) out << (o.format == "tsv" ? tsv_row(r) : format_row(r)) << "\n";

  std::vector<CatalogRow> all_rows;
  for (const auto& f : all) all_rows.push_back(f.to_row());
  out << "# families: " << rows.size() << " (weights up to " << bound << ")\n";
  if (!bound_note.empty()) out << "# stabilization (bound:count): " << bound_note << "\n";
  out << "# realized signatures: " << signature_list(realized_signatures(all_rows)) << "\n";
  if (o.target && rows.empty()) {
    out << "# no quasismooth weighted K3 hypersurface with sigma = " << *o.target << " and weights up to " << bound
        << "\n";
    if (*o.target == 3)
      out << "# this is consistent with sigma = 3 being open for du Val K3 surfaces; it is not a proof of non-existence\n";
  }
  return kExitOk;
}

}  // namespace detail

/// Runs the CLI on `argv` and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signatures and L-classes of du Val K3 surfaces and canonical Calabi-Yau 3-folds", "duval"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  detail::BasketOptions basket_opts;
  auto* basket_cmd = app.add_subcommand("basket", "du Val basket and signature of a general F_d in P(a0,a1,a2,a3)");
  basket_cmd->add_option("weights", basket_opts.weights, "four weights")->required()->expected(4);
  basket_cmd->add_option("--degree,-d", basket_opts.degree, "degree (default: sum of weights)");
  basket_cmd->add_option("--format", basket_opts.format)->check(CLI::IsMember({"text", "tsv"}));

  std::string sigma_basket;
  int sigma_q = 0;
  auto* sigma_cmd = app.add_subcommand("sigma", "signature of a du Val surface with trivial canonical class");
  sigma_cmd->add_option("--basket,-b", sigma_basket, "e.g. \"3A_2 A_4\"");
  sigma_cmd->add_option("--q", sigma_q, "irregularity q(F)")->check(CLI::Range(0, 2));

  std::string plumb_type, plumb_edges;
  std::vector<std::int64_t> plumb_weights;
  auto* plumb_cmd = app.add_subcommand("plumbing", "intersection form and signature of a plumbing graph");
  auto* type_opt = plumb_cmd->add_option("--type,-t", plumb_type, "ADE type, e.g. E_8");
  auto* weights_opt =
      plumb_cmd->add_option("--euler", plumb_weights, "Euler number of each vertex")->delimiter(',')->allow_extra_args(false);
  plumb_cmd->add_option("--edges", plumb_edges, "edges as \"0-1 1-2\"")->needs(weights_opt);
  type_opt->excludes(weights_opt);

  auto* table_cmd = app.add_subcommand("table", "catalog operations");
  table_cmd->require_subcommand(1);
  std::string catalog_path, table_format = "text";
  auto* verify_cmd = table_cmd->add_subcommand("verify", "recompute every catalog row");
  verify_cmd->add_option("--catalog", catalog_path, std::string("catalog file (default: $") + kCatalogEnv + " or built-in)");
  verify_cmd->add_option("--format", table_format)->check(CLI::IsMember({"text", "tsv"}));

  int bsy_q = 1, bsy_fiber_q = 0, bsy_degree = 1;
  std::optional<std::string> bsy_basket;
  auto* bsy_cmd = app.add_subcommand("bsy", "compare T_1*(X) and L_*(X) on a Kawamata cover");
  bsy_cmd->add_option("--q", bsy_q, "irregularity q(X) in {1,2,3}");
  bsy_cmd->add_option("--basket,-b", bsy_basket, "basket of the surface fiber (q = 1)");
  bsy_cmd->add_option("--fiber-q", bsy_fiber_q, "irregularity of the surface fiber (q = 1)")->check(CLI::Range(0, 2));
  bsy_cmd->add_option("--degree,-d", bsy_degree, "cover degree")->check(CLI::PositiveNumber);

  detail::SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "enumerate weighted K3 hypersurfaces");
  search_cmd->add_option("--target", search_opts.target, "only families with this signature");
  search_cmd->add_option("--max-weight", search_opts.max_weight, "largest weight (start bound with --stabilize)")
      ->check(CLI::Range(1, 400));
  search_cmd->add_option("--jobs,-j", search_opts.jobs, "worker threads")->check(CLI::Range(1, 256));
  search_cmd->add_flag("--stabilize", search_opts.stabilize, "raise the bound until the family count settles");
  search_cmd->add_option("--format", search_opts.format)->check(CLI::IsMember({"text", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*basket_cmd) return detail::run_basket(basket_opts, out);
    if (*sigma_cmd) return detail::run_sigma(sigma_basket, sigma_q, out);
    if (*plumb_cmd) {
      if (plumb_type.empty() && plumb_weights.empty()) {
        err << "error: plumbing needs --type or --euler\n";
        return kExitUsage;
      }
      return detail::run_plumbing(plumb_type, plumb_weights, plumb_edges, out);
    }
    if (*verify_cmd) return detail::run_table_verify(catalog_path, table_format, out);
    if (*bsy_cmd) return detail::run_bsy(bsy_q, bsy_basket, bsy_fiber_q, bsy_degree, out, err);
    if (*search_cmd) return detail::run_search(search_opts, out);
  } catch (const CannotOpen& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ParseError& e) {
    err << "error: catalog " << e.what() << "\n";
    return kExitDataErr;
  } catch (const InvariantViolation& e) {
    err << "error: catalog row " << e.what() << "\n";
    return kExitDataErr;
  } catch (const InvalidType& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}

}  // namespace duval::cli
