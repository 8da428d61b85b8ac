#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grc/brackets.hpp"
#include "grc/json_io.hpp"
#include "grc/singular.hpp"

namespace grc {

struct ClassRecord {
  Algebra algebra = Algebra::vect;
  Rat mu1;
  Rat mu2;
  unsigned n = 0;
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  std::size_t pred_even = 0;
  std::size_t pred_odd = 0;
  std::string case_label;
  bool match = false;
  ClosedStatus closed_form = ClosedStatus::not_applicable;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

enum class TableFormat : std::uint8_t { csv, json, markdown };

inline TableFormat parse_format(std::string_view s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  if (s == "markdown") return TableFormat::markdown;
  throw Error("unknown format '" + std::string(s) + "'");
}

struct ScanConfig {
  Algebra algebra = Algebra::vect;
  std::vector<Rat> mu_grid;
  unsigned order_min = 1;
  unsigned order_max = 0;
  std::size_t spot_checks = 0;
  std::uint64_t seed = 0;
  unsigned degree_margin = 4;  // spot-check degree bound = order + margin
  unsigned threads = 0;        // 0: hardware concurrency
  TableFormat format = TableFormat::csv;
};

// "a,b,c" of rationals.
inline std::vector<Rat> parse_mu_list(std::string_view text) {
  std::vector<Rat> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (item.empty()) throw Error("empty entry in mu list");
    out.push_back(parse_rat(item));
  }
  if (out.empty()) throw Error("empty mu list");
  return out;
}

// "A..B:STEP", inclusive of B when reached exactly.
inline std::vector<Rat> parse_mu_range(std::string_view text) {
  auto dots = text.find("..");
  auto colon = text.find(':');
  if (dots == std::string_view::npos || colon == std::string_view::npos || colon < dots)
    throw Error("mu range must look like A..B:STEP");
  Rat a = parse_rat(text.substr(0, dots));
  Rat b = parse_rat(text.substr(dots + 2, colon - dots - 2));
  Rat step = parse_rat(text.substr(colon + 1));
  if (step <= 0) throw Error("mu range step must be positive");
  if (b < a) throw Error("mu range is empty");
  std::vector<Rat> out;
  for (Rat x = a; x <= b; x += step) out.push_back(x);
  return out;
}

// "A..B" or "N".
inline std::pair<unsigned, unsigned> parse_orders(std::string_view text) {
  auto to_u = [](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("malformed order '" + std::string(s) + "'");
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    unsigned n = to_u(text);
    return {n, n};
  }
  return {to_u(text.substr(0, dots)), to_u(text.substr(dots + 2))};
}

struct CellKey {
  Rat mu1;
  Rat mu2;
  unsigned n;
};

inline ClassRecord classify_cell(Algebra a, const Rat& mu1, const Rat& mu2, unsigned n) {
  ComparisonReport r = compare_closed_vs_kernel(a, mu1, mu2, n);
  Prediction p = predict_dimension(a, mu1, mu2, n);
  ClassRecord rec{a, mu1, mu2, n, r.even.kernel_dim, r.odd.kernel_dim, p.even, p.odd, p.label, false, r.closed_status()};
  rec.match = rec.dim_even == rec.pred_even && rec.dim_odd == rec.pred_odd;
  return rec;
}

struct SpotCheck {
  Rat mu1;
  Rat mu2;
  unsigned n = 0;
  std::size_t vectors = 0;
  bool pass = true;
};

struct ScanResult {
  std::vector<ClassRecord> records;
  std::vector<SpotCheck> spot_checks;
};

// Runs work(i) for i in [0, count) on a small thread pool.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto body = [&](unsigned t) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    } catch (...) {
      errors[t] = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(body, t);
  body(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline ScanResult scan_classify(const ScanConfig& cfg) {
  ScanResult out;
  if (cfg.order_min > cfg.order_max) return out;
  if (cfg.mu_grid.empty()) throw Error("scan_classify: empty mu grid");
  std::vector<Rat> grid = cfg.mu_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<CellKey> cells;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (unsigned n = cfg.order_min; n <= cfg.order_max; ++n) cells.push_back({a, b, n});
  out.records.resize(cells.size());
  parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
    out.records[i] = classify_cell(cfg.algebra, cells[i].mu1, cells[i].mu2, cells[i].n);
  });

  if (cfg.spot_checks > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::size_t> picked;
    std::size_t want = std::min(cfg.spot_checks, cells.size());
    while (picked.size() < want) {
      std::size_t i = static_cast<std::size_t>(rng() % cells.size());
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) picked.push_back(i);
    }
    std::sort(picked.begin(), picked.end());
    out.spot_checks.resize(picked.size());
    parallel_for(picked.size(), cfg.threads, [&](std::size_t k) {
      const auto& c = cells[picked[k]];
      auto s = singular_space(cfg.algebra, c.mu1, c.mu2, c.n);
      SpotCheck sc{c.mu1, c.mu2, c.n, 0, true};
      for (const auto* basis : {&s.even_basis, &s.odd_basis})
        for (const auto& v : *basis) {
          ++sc.vectors;
          BilinOp b = bracket_from_singular(v);
          if (!oracle_passes(b, classification_subalgebra(cfg.algebra), c.n + cfg.degree_margin)) sc.pass = false;
        }
      out.spot_checks[k] = sc;
    });
  }
  return out;
}

inline const char* csv_header() {
  return "algebra,mu1,mu2,n,dim_even,dim_odd,pred_even,pred_odd,case,match,closed_form";
}

inline Json record_to_json(const ClassRecord& r) {
  return {{"algebra", algebra_name(r.algebra)}, {"mu1", to_string(r.mu1)},   {"mu2", to_string(r.mu2)},
          {"n", r.n},                           {"dim_even", r.dim_even},   {"dim_odd", r.dim_odd},
          {"pred_even", r.pred_even},           {"pred_odd", r.pred_odd},   {"case", r.case_label},
          {"match", r.match},                   {"closed_form", closed_status_name(r.closed_form)}};
}

inline ClassRecord record_from_json(const Json& j) {
  ClassRecord r;
  r.algebra = parse_algebra(j.at("algebra").get<std::string>());
  r.mu1 = parse_rat(j.at("mu1").get<std::string>());
  r.mu2 = parse_rat(j.at("mu2").get<std::string>());
  r.n = j.at("n").get<unsigned>();
  r.dim_even = j.at("dim_even").get<std::size_t>();
  r.dim_odd = j.at("dim_odd").get<std::size_t>();
  r.pred_even = j.at("pred_even").get<std::size_t>();
  r.pred_odd = j.at("pred_odd").get<std::size_t>();
  r.case_label = j.at("case").get<std::string>();
  r.match = j.at("match").get<bool>();
  r.closed_form = parse_closed_status(j.at("closed_form").get<std::string>());
  return r;
}

inline std::vector<ClassRecord> parse_records_json(std::string_view doc) {
  Json j = Json::parse(doc);
  std::vector<ClassRecord> out;
  for (const auto& r : j.at("records")) out.push_back(record_from_json(r));
  return out;
}

inline std::vector<std::string> case_legend(Algebra a) {
  if (a == Algebra::vect)
    return {"vect-i: 1|1 when mu1, mu2 are non-negative even integers with mu1 + mu2 = 2n - 4",
            "vect-ii: 0|2 when mu1, mu2 are even integers in [0, 2n - 2] with mu1 + mu2 >= 2n - 2",
            "vect-iii: 0|1 otherwise"};
  return {"even-generic: 1|0 unless mu1 = j + 1 and mu2 = 3(n+j+1) for some j < n",
          "even-exceptional: 2|0, mu1 = j + 1 and mu2 = 3(n+j+1)",
          "odd-1: 0|1 if mu1 = n else 0|0, mu2 not in {1..n}",
          "odd-2: 0|2 if mu1 = n else 0|1, mu2 = n - k and mu1 not in {0..k-1}",
          "odd-3: 0|2, mu2 = n - k and mu1 in {0..k-1}",
          "contact rows use the level as n; the half-order of the case analysis is floor(n/2)"};
}

inline std::string emit_table(const std::vector<ClassRecord>& records, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::csv:
      os << csv_header() << "\n";
      for (const auto& r : records)
        os << algebra_name(r.algebra) << "," << to_string(r.mu1) << "," << to_string(r.mu2) << "," << r.n << ","
           << r.dim_even << "," << r.dim_odd << "," << r.pred_even << "," << r.pred_odd << "," << r.case_label << ","
           << (r.match ? "true" : "false") << "," << closed_status_name(r.closed_form) << "\n";
      break;
    case TableFormat::json: {
      Json arr = Json::array();
      for (const auto& r : records) arr.push_back(record_to_json(r));
      Json doc = {{"records", arr}};
      os << doc.dump(2) << "\n";
      break;
    }
    case TableFormat::markdown: {
      os << "| algebra | mu1 | mu2 | n | computed | predicted | case | match | closed form |\n";
      os << "|---|---|---|---|---|---|---|---|---|\n";
      std::vector<Algebra> seen;
      for (const auto& r : records) {
        os << "| " << algebra_name(r.algebra) << " | " << to_string(r.mu1) << " | " << to_string(r.mu2) << " | " << r.n
           << " | " << r.dim_even << "\\|" << r.dim_odd << " | " << r.pred_even << "\\|" << r.pred_odd << " | "
           << r.case_label << " | " << (r.match ? "yes" : "no") << " | " << closed_status_name(r.closed_form)
           << " |\n";
        if (std::find(seen.begin(), seen.end(), r.algebra) == seen.end()) seen.push_back(r.algebra);
      }
      if (!seen.empty()) os << "\nLegend (dimensions are even|odd):\n\n";
      for (Algebra a : seen)
        for (const auto& line : case_legend(a)) os << "- " << line << "\n";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Contact discrepancy ledger.

inline Json discrepancy_ledger(const std::vector<Rat>& mu_grid, unsigned max_level) {
  Json ledger;
  Json displays = Json::array();
  for (const auto& d : nabla_display_checks(max_level, default_display_weights())) displays.push_back(to_json(d));
  ledger["displays"] = displays;
  ledger["corrected_systems"] = {
      {"even", "c_i = (mu1-i) e_i / 2 (i < n); c_n = -mu2 e_{n-1} / 2; "
               "(n-i-1-mu2) e_i + (i+1-mu1) e_{i+1} = 0 (i = 0..n-2)"},
      {"odd", "(mu1-i) a_i + (mu2-n+i) b_i = 0 (i = 0..n); a_i = (i+1)/(n-i) b_{i+1} (i = 0..n-1)"},
      {"even_exceptional_locus", "dimension 2 iff mu2 = n-1-i and mu1 = j+1 for some 0 <= i <= j <= n-2"}};
  Json cells = Json::array();
  std::size_t total = 0, flagged = 0;
  for (const auto& a : mu_grid)
    for (const auto& b : mu_grid)
      for (unsigned level = 0; level <= max_level; ++level) {
        ++total;
        SingularSpace s = singular_space(Algebra::contact, a, b, level);
        ComparisonReport r = compare_closed_vs_kernel(s);
        if (r.all_match()) continue;
        ++flagged;
        Json c = to_json(r);
        Json corrected = Json::array();
        Parity p = level % 2 ? Parity::odd : Parity::even;
        for (const auto& f : corrected_contact(a, b, level / 2, p)) {
          Json fj = to_json(f);
          fj["in_kernel"] = annihilated(f.vector, {RaiserId::nabla_plus});
          corrected.push_back(fj);
        }
        c["corrected_families"] = corrected;
        cells.push_back(c);
      }
  ledger["cells"] = cells;
  ledger["summary"] = {{"cells", total}, {"cells_with_discrepancies", flagged}};
  return ledger;
}

inline std::size_t ledger_entries(const Json& ledger) {
  std::size_t n = ledger.at("cells").size();
  for (const auto& d : ledger.at("displays"))
    if (!d.at("matches").get<bool>()) ++n;
  return n;
}

}  // namespace grc
