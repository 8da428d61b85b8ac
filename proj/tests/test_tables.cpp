#include <gtest/gtest.h>

#include <sstream>

#include "grc/cli.hpp"
#include "grc/tables.hpp"

namespace grc {
namespace {

ScanConfig vect_config() {
  ScanConfig c;
  c.algebra = Algebra::vect;
  c.mu_grid = {0, 2, 4};
  c.order_min = 1;
  c.order_max = 3;
  return c;
}

TEST(Tables, Parsers) {
  EXPECT_EQ(parse_mu_list("0, 1/2,-3"), (std::vector<Rat>{0, rat(1, 2), -3}));
  EXPECT_EQ(parse_mu_range("-1..1:1/2"), (std::vector<Rat>{-1, rat(-1, 2), 0, rat(1, 2), 1}));
  EXPECT_EQ(parse_mu_range("0..1:2/3"), (std::vector<Rat>{0, rat(2, 3)}));
  EXPECT_EQ(parse_orders("2..5"), (std::pair<unsigned, unsigned>{2, 5}));
  EXPECT_EQ(parse_orders("3"), (std::pair<unsigned, unsigned>{3, 3}));
  for (const char* bad : {"", "1,,2", "x"}) EXPECT_THROW(parse_mu_list(bad), Error) << bad;
  for (const char* bad : {"0..1", "0..1:0", "2..1:1", "a..1:1"}) EXPECT_THROW(parse_mu_range(bad), Error) << bad;
  EXPECT_THROW(parse_orders("1..x"), Error);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Tables, VectGridAllMatch) {
  auto r = scan_classify(vect_config());
  ASSERT_EQ(r.records.size(), 27u);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(rec.match);
    EXPECT_EQ(rec.closed_form, ClosedStatus::pass);
  }
  auto key = [](const ClassRecord& x) { return std::tuple{x.mu1, x.mu2, x.n}; };
  EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(),
                             [&](const auto& a, const auto& b) { return key(a) < key(b); }));
}

TEST(Tables, EmptyOrderRange) {
  auto c = vect_config();
  c.order_min = 4;
  c.order_max = 3;
  EXPECT_TRUE(scan_classify(c).records.empty());
  c.order_min = 1;
  c.mu_grid.clear();
  EXPECT_THROW(scan_classify(c), Error);
}

TEST(Tables, RecordsAgreeWithFreshKernels) {
  auto c = vect_config();
  c.algebra = Algebra::contact;
  c.mu_grid = {0, 1};
  c.order_max = 4;
  for (const auto& rec : scan_classify(c).records) {
    SingularSpace s = singular_space(rec.algebra, rec.mu1, rec.mu2, rec.n);
    EXPECT_EQ(rec.dim_even, s.dim_even());
    EXPECT_EQ(rec.dim_odd, s.dim_odd());
    EXPECT_EQ(rec.match, rec.dim_even == rec.pred_even && rec.dim_odd == rec.pred_odd);
  }
}

TEST(Tables, CsvShape) {
  auto c = vect_config();
  c.mu_grid = {rat(1, 2)};
  c.order_max = 1;
  auto r = scan_classify(c);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(emit_table(r.records, TableFormat::csv),
            std::string(csv_header()) + "\nvect11,1/2,1/2,1,0,1,0,1,vect-iii,true,pass\n");
}

TEST(Tables, JsonRoundTrip) {
  auto c = vect_config();
  c.mu_grid = {-1, rat(1, 2), 2};
  auto recs = scan_classify(c).records;
  std::string doc = emit_table(recs, TableFormat::json);
  auto back = parse_records_json(doc);
  EXPECT_EQ(back, recs);
  EXPECT_EQ(emit_table(back, TableFormat::json), doc);
}

TEST(Tables, MarkdownLegend) {
  auto md = emit_table(scan_classify(vect_config()).records, TableFormat::markdown);
  for (const char* label : {"vect-i:", "vect-ii:", "vect-iii:"}) EXPECT_NE(md.find(label), std::string::npos);
  EXPECT_NE(md.find("| vect11 | 0 | 0 | 2 | 1\\|1 | 1\\|1 | vect-i | yes | pass |"), std::string::npos);
}

TEST(Tables, DeterministicAcrossThreadCounts) {
  auto c = vect_config();
  c.spot_checks = 3;
  c.seed = 42;
  c.threads = 1;
  auto a = scan_classify(c);
  c.threads = 4;
  auto b = scan_classify(c);
  for (auto f : {TableFormat::csv, TableFormat::json, TableFormat::markdown})
    EXPECT_EQ(emit_table(a.records, f), emit_table(b.records, f));
  ASSERT_EQ(a.spot_checks.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.spot_checks[i].mu1, b.spot_checks[i].mu1);
    EXPECT_EQ(a.spot_checks[i].n, b.spot_checks[i].n);
    EXPECT_TRUE(a.spot_checks[i].pass);
  }
}

TEST(Tables, ContactLedger) {
  Json ledger = discrepancy_ledger({0, 1, 2}, 4);
  EXPECT_EQ(ledger["displays"].size(), 6u);
  EXPECT_GT(ledger_entries(ledger), 0u);
  for (const auto& cell : ledger["cells"]) {
    EXPECT_FALSE(cell["discrepancies"].empty());
    for (const auto& f : cell["corrected_families"]) EXPECT_TRUE(f["in_kernel"].get<bool>());
  }
  for (const auto& d : ledger["displays"]) {
    if (!d["matches"].get<bool>()) {
      EXPECT_TRUE(d.contains("corrected_coefficient"));
    }
  }
}

int run_cli(std::vector<const char*> args, std::string* out = nullptr) {
  args.insert(args.begin(), "grc");
  std::ostringstream o, e;
  int rc = cli::run(static_cast<int>(args.size()), args.data(), o, e);
  if (out) *out = o.str();
  return rc;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}), 1);
  EXPECT_EQ(run_cli({"nonsense"}), 1);
  EXPECT_EQ(run_cli({"singular", "--algebra", "k11", "--mu1", "1/0", "--mu2", "0", "--order", "1"}), 1);
  EXPECT_EQ(run_cli({"singular", "--algebra", "k11", "--mu1", "0", "--mu2", "0"}), 1);
  EXPECT_EQ(run_cli({"verify", "--algebra", "k11", "--subalgebra", "pgl21", "--mu1", "0", "--mu2", "0", "--order",
                     "1", "--degree-bound", "4"}),
            1);
  EXPECT_EQ(run_cli({"bracket", "--algebra", "k11", "--mu1", "0", "--mu2", "0", "--order", "1", "--index", "7"}), 1);
  EXPECT_EQ(run_cli({"classify", "--format", "xml", "--orders", "1"}), 1);
  EXPECT_EQ(run_cli({"classify", "--mu-list", "0", "--mu-range", "0..1:1"}), 1);
}

TEST(Cli, SingularAndBracket) {
  std::string out;
  ASSERT_EQ(run_cli({"singular", "--algebra", "vect11", "--mu1", "0", "--mu2", "0", "--order", "2"}, &out), 0);
  EXPECT_EQ(out.substr(0, out.find('\n')), "vect11 mu1=0 mu2=0 level=2 dim=1|1");
  ASSERT_EQ(run_cli({"singular", "--algebra", "k11", "--mu1", "0", "--mu2", "0", "--order", "1", "--json"}, &out), 0);
  Json j = Json::parse(out);
  EXPECT_EQ(j["dim_odd"], 2);
  ASSERT_EQ(run_cli({"bracket", "--algebra", "k11", "--mu1", "0", "--mu2", "0", "--order", "1", "--index", "1"}, &out),
            0);
  EXPECT_NE(out.find("Dth(f)*g"), std::string::npos);
}

TEST(Cli, VerifyPassesOnKernelBrackets) {
  std::string out;
  EXPECT_EQ(run_cli({"verify", "--algebra", "vect11", "--subalgebra", "pgl21", "--mu1", "2", "--mu2", "0", "--order",
                     "3", "--degree-bound", "6"},
                    &out),
            0);
  EXPECT_NE(out.find("PASS"), std::string::npos);
  EXPECT_EQ(out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyReportsFailures) {
  // Order-three brackets of generic weights are not invariant under K(t^2*th).
  std::string out;
  EXPECT_EQ(run_cli({"verify", "--algebra", "k11", "--subalgebra", "k11-full", "--mu1", "1/3", "--mu2", "2/5",
                     "--order", "3", "--degree-bound", "5"},
                    &out),
            2);
  EXPECT_NE(out.find("FAIL"), std::string::npos);
  EXPECT_NE(out.find("K(t^2*th)"), std::string::npos);
}

TEST(Cli, OrderTwoContactBracketsAreFullyInvariant) {
  EXPECT_EQ(run_cli({"verify", "--algebra", "k11", "--subalgebra", "k11-full", "--mu1", "1/3", "--mu2", "2/5",
                     "--order", "2", "--degree-bound", "6"}),
            0);
}

TEST(Cli, TensorCase) {
  std::string out;
  ASSERT_EQ(run_cli({"tensor-case", "--lambda", "1", "--mu", "0", "--sigma", "2", "--rho", "0"}, &out), 0);
  Json j = Json::parse(out);
  EXPECT_EQ(j["case"], "case-iii");
  EXPECT_EQ(j["summands"][1]["mu"], "-2");
  EXPECT_EQ(j["level1_highest"][0]["x"], "-2");
}

TEST(Cli, ClassifyIsByteDeterministic) {
  std::string a, b;
  std::vector<const char*> args{"classify", "--algebra", "vect11", "--mu-list", "0,1/2,2", "--orders", "1..3",
                                "--spot-check", "2", "--seed", "9", "--format", "json"};
  ASSERT_EQ(run_cli(args, &a), 0);
  ASSERT_EQ(run_cli(args, &b), 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_records_json(a).size(), 27u);
}

}  // namespace
}  // namespace grc
