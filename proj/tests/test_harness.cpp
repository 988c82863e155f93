#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "setcalc/harness.hpp"
#include "setcalc/json_io.hpp"

using namespace setcalc;

namespace {

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.group = GroupSpec::parse("zn:30");
  cfg.generator = GeneratorSpec::parse("uniform(5)");
  cfg.trials = 20;
  cfg.seed = 42;
  cfg.theorems = {TheoremId::triangle, TheoremId::plunnecke_h, TheoremId::ruzsa_kl};
  cfg.h = 3;
  return cfg;
}

}  // namespace

TEST_CASE("generator spec parsing round-trips") {
  for (const char* text :
       {"uniform(8)", "subgroup-plus-points((1,0) (0,3); 2)", "coset-union(3)",
        "progression(4)", "progression((0,1); (1,2); 6)", "random-words(5; 6)"}) {
    auto gen = GeneratorSpec::parse(text);
    CHECK(GeneratorSpec::parse(gen.str()).str() == gen.str());
  }
  CHECK_THROWS_AS(GeneratorSpec::parse("bogus(1)"), Error);
  CHECK_THROWS_AS(GeneratorSpec::parse("uniform"), Error);
  CHECK_THROWS_AS(GeneratorSpec::parse("uniform(0)"), Error);
}

TEST_CASE("config keys, file parsing, validation") {
  ExperimentConfig cfg;
  cfg.apply("group", "sym:4");
  cfg.apply("generator", "uniform(6)");
  cfg.apply("trials", "50");
  cfg.apply("seed", "0xdead");
  cfg.apply("theorems", "triple, triangle");
  cfg.apply("h", "4");
  cfg.apply("jobs", "2");
  cfg.apply("format", "json");
  CHECK(cfg.group.str() == "sym:4");
  CHECK(cfg.trials == 50);
  CHECK(cfg.seed == 0xdead);
  CHECK(cfg.theorems.size() == 2);
  CHECK_THROWS_AS(cfg.apply("unknown_key", "1"), Error);
  cfg.validate();

  // Incompatibilities are config errors.
  ExperimentConfig bad = cfg;
  bad.theorems = {TheoremId::plunnecke_h};  // abelian-only vs sym:4
  CHECK_THROWS_AS(bad.validate(), Error);
  ExperimentConfig bad2 = cfg;
  bad2.generator = GeneratorSpec::parse("random-words(3; 4)");
  CHECK_THROWS_AS(bad2.validate(), Error);
  ExperimentConfig bad3 = cfg;
  bad3.trials = 0;
  CHECK_THROWS_AS(bad3.validate(), Error);

  // File round-trip.
  std::string path = "harness_config_test.tmp";
  {
    std::ofstream out(path);
    out << "# comment\n";
    out << "group = zn:30\n";
    out << "generator = uniform(4)\n";
    out << "trials = 7\n";
    out << "seed = 9\n";
    out << "theorems = triangle\n";
  }
  auto from_file = ExperimentConfig::from_file(path);
  CHECK(from_file.group.str() == "zn:30");
  CHECK(from_file.trials == 7);
  std::remove(path.c_str());
}

TEST_CASE("generate_sets is a pure function of (seed, trial)") {
  auto cfg = base_config();
  auto [a1, b1] = generate_sets(cfg, 3);
  auto [a2, b2] = generate_sets(cfg, 3);
  CHECK(a1 == a2);
  CHECK(b1 == b2);
  auto [a3, b3] = generate_sets(cfg, 4);
  CHECK(!(a1 == a3 && b1 == b3));  // overwhelmingly likely distinct
  CHECK(!a1.is_empty());
  CHECK(!b1.is_empty());

  ExperimentConfig other = cfg;
  other.seed = 43;
  auto [a4, b4] = generate_sets(other, 3);
  CHECK(!(a1 == a4 && b1 == b4));
}

TEST_CASE("generators honor their shapes") {
  // uniform(1) gives singletons.
  ExperimentConfig cfg = base_config();
  cfg.generator = GeneratorSpec::parse("uniform(1)");
  auto [a, b] = generate_sets(cfg, 0);
  CHECK(a.size() == 1);
  CHECK(b.size() == 1);

  // subgroup-plus-points over sym(6) reproduces the counterexample family.
  ExperimentConfig sx;
  sx.group = GroupSpec::parse("sym:6");
  sx.generator =
      GeneratorSpec::parse("subgroup-plus-points([2,1,3,4,5,6] [2,3,1,4,5,6]; 1)");
  sx.theorems = {TheoremId::triple};
  GroupPtr g = Group::make(sx.group);
  GSet h = GSet::closure(g, {g->parse_element("[2,1,3,4,5,6]"),
                             g->parse_element("[2,3,1,4,5,6]")});
  for (int trial = 0; trial < 5; ++trial) {
    auto [aa, bb] = generate_sets(sx, trial);
    CHECK(aa.size() == 7);
    CHECK(h.subset_of(aa));
  }

  // progression with explicit start and step.
  ExperimentConfig pr = base_config();
  pr.generator = GeneratorSpec::parse("progression(0; 3; 5)");
  auto [pa, pb] = generate_sets(pr, 1);
  CHECK(format_set(pa) == "{0,3,6,9,12}");

  // coset-union yields a union of cosets (size divisible by |H|).
  ExperimentConfig cu = base_config();
  cu.generator = GeneratorSpec::parse("coset-union(2)");
  auto [ca, cb] = generate_sets(cu, 2);
  CHECK(ca.size() >= 1);

  // random-words in a free group.
  ExperimentConfig fw;
  fw.group = GroupSpec::parse("free:2:10");
  fw.generator = GeneratorSpec::parse("random-words(4; 3)");
  fw.theorems = {TheoremId::triangle};
  auto [wa, wb] = generate_sets(fw, 0);
  CHECK(wa.size() == 4);
}

TEST_CASE("identity-progression generator makes every slack exactly 1") {
  ExperimentConfig cfg;
  cfg.group = GroupSpec::parse("zn:30");
  cfg.generator = GeneratorSpec::parse("progression(0; 0; 1)");  // {identity}
  cfg.trials = 1;
  cfg.theorems = {TheoremId::triangle, TheoremId::plunnecke_h, TheoremId::ruzsa_kl,
                  TheoremId::stronger_middle};
  cfg.h = 2;
  cfg.k = 1;
  cfg.l = 1;
  auto summary = run_fuzz(cfg);
  CHECK(summary.violations == 0);
  CHECK(summary.reports >= 4);
  for (const auto& [name, agg] : summary.per_theorem) {
    CHECK(agg.min_slack.has_value());
    CHECK(*agg.min_slack == Rational(1));
  }
}

TEST_CASE("campaign bookkeeping: every trial accounted for, skips recorded") {
  ExperimentConfig cfg = base_config();
  cfg.trials = 25;
  auto summary = run_fuzz(cfg);
  CHECK(summary.records.size() == 25);
  for (int t = 0; t < 25; ++t) CHECK(summary.records[static_cast<size_t>(t)].trial == t);
  CHECK(summary.violations == 0);

  // A tiny size cap forces skip records instead of silent drops.
  ExperimentConfig tight = base_config();
  tight.trials = 10;
  tight.size_cap = 8;
  tight.theorems = {TheoremId::ruzsa_kl};
  tight.k = 2;
  tight.l = 1;
  auto s2 = run_fuzz(tight);
  CHECK(s2.records.size() == 10);
  CHECK(s2.skips > 0);
  std::uint64_t skip_rows = 0;
  for (const auto& rec : s2.records) skip_rows += rec.skips.size();
  CHECK(skip_rows == s2.skips);
}

TEST_CASE("run_fuzz summary is identical across worker counts") {
  ExperimentConfig cfg = base_config();
  cfg.trials = 40;
  cfg.theorems = {TheoremId::triangle, TheoremId::stronger_middle, TheoremId::ruzsa_kl};
  cfg.jobs = 1;
  auto s1 = run_fuzz(cfg);
  cfg.jobs = 4;
  auto s4 = run_fuzz(cfg);
  CHECK(emit_report(s1, "json") == emit_report(s4, "json"));
  CHECK(emit_report(s1, "csv") == emit_report(s4, "csv"));
  CHECK(emit_report(s1, "text") == emit_report(s4, "text"));
}

TEST_CASE("emitted JSON parses and carries the schema and totals") {
  ExperimentConfig cfg = base_config();
  cfg.trials = 6;
  auto summary = run_fuzz(cfg);
  auto text = emit_report(summary, "json");
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["schema"] == "setcalc.fuzz/1");
  CHECK(parsed["totals"]["trials"] == 6);
  CHECK(parsed["totals"]["violations"] == 0);
  CHECK(parsed["trials"].size() == 6);

  // CSV: one row per report plus one per skip.
  auto csv = emit_report(summary, "csv");
  size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 1 + summary.reports + summary.skips);

  CHECK_THROWS_AS(emit_report(summary, "yaml"), Error);
}

TEST_CASE("campaign with zero reports still emits valid documents") {
  ExperimentConfig cfg = base_config();
  cfg.trials = 2;
  cfg.size_cap = 2;  // everything skips
  cfg.theorems = {TheoremId::ruzsa_kl};
  auto summary = run_fuzz(cfg);
  CHECK(summary.reports == 0);
  auto parsed = nlohmann::json::parse(emit_report(summary, "json"));
  CHECK(parsed["totals"]["reports"] == 0);
  CHECK(!emit_report(summary, "text").empty());
}

TEST_CASE("mutation sensitivity: a planted off-by-one surfaces as violations") {
  ExperimentConfig cfg;
  cfg.group = GroupSpec::parse("sym:4");
  cfg.generator = GeneratorSpec::parse("subgroup-plus-points([2,1,3,4] [2,3,1,4]; 0)");
  cfg.trials = 3;
  cfg.theorems = {TheoremId::triple};
  testing::product_card_offset.store(1);
  auto summary = run_fuzz(cfg);
  testing::product_card_offset.store(0);
  CHECK(summary.violations > 0);

  auto clean = run_fuzz(cfg);
  CHECK(clean.violations == 0);
}

TEST_CASE("theorem reports serialize with full ledgers") {
  GroupPtr g = make_group("zprod:5,7");
  GSet a = GSet::closure(g, {g->parse_element("(1,0)")});
  GSet b = parse_set(g, "{(0,1),(1,2),(2,4)}");
  auto reports = verify_plunnecke(a, b, 2);
  auto j = report_json(reports[1]);
  CHECK(j["schema"] == "setcalc.report/1");
  CHECK(j["theorem"] == "plunnecke_h");
  CHECK(j["params"]["h"] == 2);
  CHECK(j["actual"] == 30);
  CHECK(j["pass"] == true);
  CHECK(j["steps"].is_array());
  CHECK(j["steps"].size() >= 2);
  // Round-trip through the parser stays identical.
  CHECK(nlohmann::json::parse(j.dump()).dump() == nlohmann::json(j).dump());
}
