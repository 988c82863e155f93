#ifndef SETCALC_HARNESS_HPP
#define SETCALC_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setcalc/gset.hpp"
#include "setcalc/verify.hpp"

namespace setcalc {

// Structured random-set generator. Text forms:
//   uniform(8)
//   subgroup-plus-points((1,0) (0,3); 2)   generators, then extra count
//   coset-union(3)
//   progression(4)                          random start/step, length 4
//   progression((0,1); (1,2); 6)            explicit start; step; length
//   random-words(5; 6)                      free groups: count, max length
struct GeneratorSpec {
  enum class Kind {
    uniform,
    subgroup_plus_points,
    coset_union,
    progression,
    random_words,
  };
  Kind kind = Kind::uniform;
  int size = 4;                             // uniform / random-words count
  std::vector<std::string> subgroup_gens;   // element literals
  int extra = 1;                            // subgroup-plus-points
  int count = 2;                            // coset-union
  std::string start, step;                  // progression (empty = random)
  int length = 4;                           // progression
  int max_len = 4;                          // random-words

  static GeneratorSpec parse(std::string_view text);
  std::string str() const;
};

struct ExperimentConfig {
  GroupSpec group = GroupSpec::cyclic(30);
  GeneratorSpec generator;
  int trials = 1;
  std::uint64_t seed = 0;
  std::vector<TheoremId> theorems;
  // Parameter ranges. h is the maximum level for plunnecke/tao_power/sb_h
  // (levels are cycled over trials where a single value is verified per
  // run). (k,l) is fixed unless kl_max > 0, which cycles all pairs with
  // 2 <= k+l <= kl_max. signs is fixed unless signs_h_max > 0.
  int h = 3;
  int k = 1;
  int l = 1;
  int kl_max = 0;
  std::vector<int> signs{+1, -1};
  int signs_h_max = 0;
  bool allow_large = false;  // lifts the h/k/l caps
  std::uint64_t size_cap = kDefaultSizeCap;
  int jobs = 1;
  std::string format = "text";
  Rational near_tight_threshold = Rational(BigInt(2), BigInt(1));

  static ExperimentConfig from_file(const std::string& path);
  // Flat key=value pairs, the same grammar as the config file.
  void apply(const std::string& key, const std::string& value);
  void validate() const;
};

// Compact per-report row kept in the campaign record.
struct ReportRow {
  TheoremId id;
  ReportStatus status;
  std::optional<int> h, k, l;
  std::vector<int> signs;
  std::int64_t actual = 0;
  Rational bound;  // bound_coeff * reference
  Rational slack;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t derived_seed = 0;
  std::string a_literal;
  std::string b_literal;
  std::string c_literal;  // empty unless a three-set theorem ran
  std::vector<ReportRow> rows;
  std::vector<std::string> skips;
  std::int64_t wall_time_us = 0;  // diagnostic only; never serialized
};

struct TheoremAggregate {
  std::uint64_t runs = 0;
  std::uint64_t passes = 0;
  std::uint64_t fails = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::optional<Rational> min_slack;
  std::optional<Rational> median_slack;
  std::vector<std::pair<int, Rational>> near_tight;  // (trial, slack), capped
  std::uint64_t near_tight_total = 0;
};

struct CampaignSummary {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  std::uint64_t reports = 0;
  std::uint64_t violations = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::uint64_t skips = 0;
  std::map<std::string, TheoremAggregate> per_theorem;
};

// Deterministic function of (config.seed, trial): the same pair comes
// back no matter how trials are scheduled.
std::pair<GSet, GSet> generate_sets(const ExperimentConfig& config, int trial);

// Runs every requested verifier on every trial. Capacity-style errors
// become per-trial skip records; they are never dropped silently.
CampaignSummary run_fuzz(const ExperimentConfig& config);

// format: "json", "csv" or "text". Output is byte-stable for a given
// summary (wall times are excluded).
std::string emit_report(const CampaignSummary& summary, const std::string& format);

}  // namespace setcalc

#endif
