#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grc/brackets.hpp"
#include "grc/gl11.hpp"
#include "grc/json_io.hpp"
#include "grc/singular.hpp"
#include "grc/tables.hpp"

namespace grc::cli {

enum ExitCode : int { ok = 0, usage = 1, failures = 2 };

// The default classification grid.
inline std::vector<Rat> default_mu_grid() {
  return {-2, -1, 0, rat(1, 2), 1, 2, 3, 4, 6, 8, 10, 12};
}

struct CellArgs {
  std::string algebra = "vect11";
  std::string mu1 = "0";
  std::string mu2 = "0";
  unsigned order = 0;
};

inline void add_cell_options(CLI::App* sub, CellArgs& a) {
  sub->add_option("--algebra", a.algebra, "k11 or vect11")->required();
  sub->add_option("--mu1", a.mu1, "weight of the first factor, p/q")->required();
  sub->add_option("--mu2", a.mu2, "weight of the second factor, p/q")->required();
  sub->add_option("--order", a.order, "level n")->required();
}

struct Cell {
  Algebra algebra;
  Rat mu1;
  Rat mu2;
  unsigned order;
};

inline Cell parse_cell(const CellArgs& a) {
  return {parse_algebra(a.algebra), parse_rat(a.mu1), parse_rat(a.mu2), a.order};
}

// Basis vectors in output order: even sector first.
inline std::vector<ModVec> all_vectors(const SingularSpace& s) {
  std::vector<ModVec> out = s.even_basis;
  out.insert(out.end(), s.odd_basis.begin(), s.odd_basis.end());
  return out;
}

inline int cmd_singular(const Cell& c, bool json, std::ostream& out) {
  SingularSpace s = singular_space(c.algebra, c.mu1, c.mu2, c.order);
  if (json) {
    out << to_json(s).dump(2) << "\n";
    return ok;
  }
  out << algebra_name(s.algebra) << " mu1=" << to_string(s.mu1) << " mu2=" << to_string(s.mu2)
      << " level=" << s.level << " dim=" << dims_str(s.dim_even(), s.dim_odd()) << "\n";
  for (auto p : {Parity::even, Parity::odd}) {
    std::size_t i = 0;
    for (const auto& v : s.basis(p)) out << parity_name(p) << "[" << i++ << "] " << v.str() << "\n";
  }
  return ok;
}

inline int cmd_bracket(const Cell& c, std::optional<std::size_t> index, bool json, std::ostream& out,
                       std::ostream& err) {
  auto vs = all_vectors(singular_space(c.algebra, c.mu1, c.mu2, c.order));
  if (index && *index >= vs.size()) {
    err << "index " << *index << " out of range (" << vs.size() << " brackets)\n";
    return usage;
  }
  Json arr = Json::array();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (index && i != *index) continue;
    BilinOp b = bracket_from_singular(vs[i]);
    if (json) {
      Json j = to_json(b);
      j["index"] = i;
      arr.push_back(j);
      continue;
    }
    out << "[" << i << "] " << parity_name(b.parity) << " order " << b.order << ": " << b.formula() << "\n";
    out << "    lambda1=" << to_string(b.lambda1) << " lambda2=" << to_string(b.lambda2)
        << " lambda=" << to_string(b.lambda);
    if (b.algebra == Algebra::vect) out << " chi2=" << to_string(b.chi2);
    out << "\n";
  }
  if (json) out << arr.dump(2) << "\n";
  if (!json && vs.empty()) out << "no singular vectors\n";
  return ok;
}

inline int cmd_verify(const Cell& c, Subalgebra s, unsigned bound, bool json, std::ostream& out,
                      std::ostream& err) {
  if (subalgebra_algebra(s) != c.algebra) {
    err << "subalgebra " << subalgebra_name(s) << " does not belong to " << algebra_name(c.algebra) << "\n";
    return usage;
  }
  auto vs = all_vectors(singular_space(c.algebra, c.mu1, c.mu2, c.order));
  bool pass = true;
  Json arr = Json::array();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    BilinOp b = bracket_from_singular(vs[i]);
    EquivarianceReport r = equivariance_report(b, s, bound);
    pass = pass && r.pass();
    if (json) {
      Json j = to_json(r);
      j["index"] = i;
      j["formula"] = b.formula();
      arr.push_back(j);
      continue;
    }
    out << "[" << i << "] " << b.formula() << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks
        << " checks, " << r.failures.size() << " failures)\n";
    for (const auto& f : r.failures)
      out << "    " << f.generator << " on (" << f.phi << ", " << f.psi << "): " << f.defect << "\n";
  }
  if (json) out << arr.dump(2) << "\n";
  if (!json && vs.empty()) out << "no singular vectors\n";
  return pass ? ok : failures;
}

struct ClassifyArgs {
  std::string algebra = "vect11";
  std::string mu_list;
  std::string mu_range;
  std::string orders = "1..6";
  std::size_t spot_check = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out_file;
  std::string ledger_file;
  unsigned threads = 0;
};

inline int write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open '" << path << "' for writing\n";
    return usage;
  }
  f << text;
  return f ? ok : usage;
}

inline int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.mu_list.empty() && !a.mu_range.empty()) {
    err << "--mu-list and --mu-range are exclusive\n";
    return usage;
  }
  ScanConfig cfg;
  cfg.algebra = parse_algebra(a.algebra);
  cfg.mu_grid = !a.mu_list.empty()    ? parse_mu_list(a.mu_list)
                : !a.mu_range.empty() ? parse_mu_range(a.mu_range)
                                      : default_mu_grid();
  std::tie(cfg.order_min, cfg.order_max) = parse_orders(a.orders);
  cfg.spot_checks = a.spot_check;
  cfg.seed = a.seed;
  cfg.format = parse_format(a.format);
  cfg.threads = a.threads;
  ScanResult r = scan_classify(cfg);
  std::string doc = emit_table(r.records, cfg.format);
  if (a.out_file.empty()) {
    out << doc;
  } else if (int rc = write_file(a.out_file, doc, err); rc != ok) {
    return rc;
  }
  std::size_t mismatches = 0;
  for (const auto& rec : r.records) mismatches += rec.match ? 0 : 1;
  // Summary goes to stderr when the table itself is on stdout.
  std::ostream& info = a.out_file.empty() ? err : out;
  info << r.records.size() << " cells, " << mismatches << " dimension mismatches\n";
  bool spot_ok = true;
  for (const auto& s : r.spot_checks) {
    info << "spot-check mu1=" << to_string(s.mu1) << " mu2=" << to_string(s.mu2) << " n=" << s.n << ": "
         << s.vectors << " brackets " << (s.pass ? "PASS" : "FAIL") << "\n";
    spot_ok = spot_ok && s.pass;
  }
  if (!a.ledger_file.empty()) {
    if (cfg.algebra != Algebra::contact) {
      err << "--ledger requires --algebra k11\n";
      return usage;
    }
    Json ledger = discrepancy_ledger(cfg.mu_grid, cfg.order_max);
    if (int rc = write_file(a.ledger_file, ledger.dump(2) + "\n", err); rc != ok) return rc;
    info << "ledger: " << ledger_entries(ledger) << " entries\n";
  }
  return spot_ok ? ok : failures;
}

inline int cmd_tensor_case(const std::string& l, const std::string& m, const std::string& s, const std::string& r,
                           std::ostream& out) {
  Rat lambda = parse_rat(l), mu = parse_rat(m), sigma = parse_rat(s), rho = parse_rat(r);
  Json j = to_json(tensor_case(lambda, mu, sigma, rho));
  Json rays = Json::array();
  for (const auto& [x, y] : level1_highest(lambda, mu, sigma, rho))
    rays.push_back({{"x", to_string(x)}, {"y", to_string(y)}});
  j["level1_highest"] = rays;
  out << j.dump(2) << "\n";
  return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Invariant bilinear operators on weighted densities over the (1|1)-dimensional superline"};
  app.name("grc");
  app.require_subcommand(1);

  CellArgs singular_args;
  bool singular_json = false;
  auto* singular = app.add_subcommand("singular", "singular vectors of a tensor product of induced modules");
  add_cell_options(singular, singular_args);
  singular->add_flag("--json", singular_json, "print JSON");

  CellArgs bracket_args;
  std::optional<std::size_t> bracket_index;
  bool bracket_json = false;
  auto* bracket = app.add_subcommand("bracket", "bilinear operators dual to the singular vectors");
  add_cell_options(bracket, bracket_args);
  bracket->add_option("--index", bracket_index, "print only this bracket");
  bracket->add_flag("--json", bracket_json, "print JSON");

  CellArgs verify_args;
  std::string subalgebra;
  unsigned degree_bound = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the equivariance oracle on every bracket of a cell");
  add_cell_options(verify, verify_args);
  verify->add_option("--subalgebra", subalgebra, "osp12, pgl21, k11-full or vect11-full")->required();
  verify->add_option("--degree-bound", degree_bound, "maximal test density degree")->required();
  verify->add_flag("--json", verify_json, "print JSON");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "scan a weight grid and compare with the predicted dimensions");
  classify->add_option("--algebra", classify_args.algebra, "k11 or vect11");
  auto* list_opt = classify->add_option("--mu-list", classify_args.mu_list, "comma-separated weights");
  classify->add_option("--mu-range", classify_args.mu_range, "A..B:STEP")->excludes(list_opt);
  classify->add_option("--orders", classify_args.orders, "A..B");
  classify->add_option("--spot-check", classify_args.spot_check, "number of cells to verify with the oracle");
  classify->add_option("--seed", classify_args.seed, "seed for spot-check sampling");
  classify->add_option("--format", classify_args.format, "csv, json or markdown");
  classify->add_option("--out", classify_args.out_file, "output file (default stdout)");
  classify->add_option("--ledger", classify_args.ledger_file, "write the contact discrepancy ledger here");
  classify->add_option("--threads", classify_args.threads, "worker threads (default: all cores)");

  std::string tl, tm, ts, tr;
  auto* tensor = app.add_subcommand("tensor-case", "gl(1|1) tensor product case analysis");
  tensor->add_option("--lambda", tl, "p/q")->required();
  tensor->add_option("--mu", tm, "p/q")->required();
  tensor->add_option("--sigma", ts, "p/q")->required();
  tensor->add_option("--rho", tr, "p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "grc: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*singular) return cmd_singular(parse_cell(singular_args), singular_json, out);
    if (*bracket) return cmd_bracket(parse_cell(bracket_args), bracket_index, bracket_json, out, err);
    if (*verify) {
      Cell c = parse_cell(verify_args);
      if (degree_bound < c.order + 2) {
        err << "--degree-bound must be at least order + 2\n";
        return usage;
      }
      return cmd_verify(c, parse_subalgebra(subalgebra), degree_bound, verify_json, out, err);
    }
    if (*classify) return cmd_classify(classify_args, out, err);
    if (*tensor) return cmd_tensor_case(tl, tm, ts, tr, out);
  } catch (const Error& e) {
    err << "grc: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace grc::cli
