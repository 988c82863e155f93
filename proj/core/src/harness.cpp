#include "setcalc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "setcalc/json_io.hpp"

namespace setcalc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Counter-based stream: the per-trial state depends only on (seed, trial),
// so scheduling trials across workers cannot change any outcome.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

SplitMix64 trial_stream(std::uint64_t seed, int trial) {
  return SplitMix64{seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1))};
}

std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  text = trim(text);
  size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    fail(errc::config, "generator must look like name(args): '" + std::string(text) + "'");
  std::string_view name = trim(text.substr(0, open));
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  auto args = split_top(body, ';');

  auto arg_int = [&](std::string_view v) {
    try {
      return std::stoi(std::string(trim(v)));
    } catch (...) {
      fail(errc::config, "bad generator argument: '" + std::string(v) + "'");
    }
  };

  GeneratorSpec gen;
  if (name == "uniform") {
    gen.kind = Kind::uniform;
    gen.size = arg_int(args.at(0));
    if (gen.size < 1) fail(errc::config, "uniform size must be >= 1");
  } else if (name == "subgroup-plus-points") {
    gen.kind = Kind::subgroup_plus_points;
    if (args.size() != 2) fail(errc::config, "subgroup-plus-points(gens; extra)");
    std::istringstream is{std::string(trim(args[0]))};
    // Generators are whitespace-separated element literals.
    std::string tok;
    std::string current;
    int depth = 0;
    for (char c : std::string(trim(args[0]))) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
        if (!current.empty()) gen.subgroup_gens.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) gen.subgroup_gens.push_back(current);
    if (gen.subgroup_gens.empty()) fail(errc::config, "subgroup generators missing");
    gen.extra = arg_int(args[1]);
    if (gen.extra < 0) fail(errc::config, "extra count must be >= 0");
  } else if (name == "coset-union") {
    gen.kind = Kind::coset_union;
    gen.count = arg_int(args.at(0));
    if (gen.count < 1) fail(errc::config, "coset count must be >= 1");
  } else if (name == "progression") {
    gen.kind = Kind::progression;
    if (args.size() == 1) {
      gen.length = arg_int(args[0]);
    } else if (args.size() == 3) {
      gen.start = std::string(trim(args[0]));
      gen.step = std::string(trim(args[1]));
      gen.length = arg_int(args[2]);
    } else {
      fail(errc::config, "progression(length) or progression(start; step; length)");
    }
    if (gen.length < 1) fail(errc::config, "progression length must be >= 1");
  } else if (name == "random-words") {
    gen.kind = Kind::random_words;
    if (args.size() != 2) fail(errc::config, "random-words(count; maxlen)");
    gen.size = arg_int(args[0]);
    gen.max_len = arg_int(args[1]);
    if (gen.size < 1 || gen.max_len < 0) fail(errc::config, "bad random-words arguments");
  } else {
    fail(errc::config, "unknown generator: '" + std::string(name) + "'");
  }
  return gen;
}

std::string GeneratorSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::uniform:
      os << "uniform(" << size << ')';
      break;
    case Kind::subgroup_plus_points: {
      os << "subgroup-plus-points(";
      for (size_t i = 0; i < subgroup_gens.size(); ++i) {
        if (i) os << ' ';
        os << subgroup_gens[i];
      }
      os << "; " << extra << ')';
      break;
    }
    case Kind::coset_union:
      os << "coset-union(" << count << ')';
      break;
    case Kind::progression:
      if (start.empty())
        os << "progression(" << length << ')';
      else
        os << "progression(" << start << "; " << step << "; " << length << ')';
      break;
    case Kind::random_words:
      os << "random-words(" << size << "; " << max_len << ')';
      break;
  }
  return os.str();
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::config, "cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    size_t eq = view.find('=');
    if (eq == std::string_view::npos)
      fail(errc::config, path + ":" + std::to_string(lineno) + ": expected key=value");
    cfg.apply(std::string(trim(view.substr(0, eq))), std::string(trim(view.substr(eq + 1))));
  }
  return cfg;
}

void ExperimentConfig::apply(const std::string& key, const std::string& value) {
  auto to_int = [&](const std::string& v) {
    try {
      return std::stoi(v);
    } catch (...) {
      fail(errc::config, "bad integer for " + key + ": '" + v + "'");
    }
  };
  if (key == "group") {
    group = GroupSpec::parse(value);
  } else if (key == "generator") {
    generator = GeneratorSpec::parse(value);
  } else if (key == "trials") {
    trials = to_int(value);
  } else if (key == "seed") {
    try {
      seed = std::stoull(value, nullptr, 0);
    } catch (...) {
      fail(errc::config, "bad seed: '" + value + "'");
    }
  } else if (key == "theorems") {
    theorems.clear();
    for (auto part : split_top(value, ','))
      if (!trim(part).empty()) theorems.push_back(parse_theorem(trim(part)));
  } else if (key == "h") {
    h = to_int(value);
  } else if (key == "k") {
    k = to_int(value);
  } else if (key == "l") {
    l = to_int(value);
  } else if (key == "kl_max") {
    kl_max = to_int(value);
  } else if (key == "signs") {
    signs.clear();
    for (auto part : split_top(value, ',')) {
      auto t = trim(part);
      if (t == "+" || t == "+1")
        signs.push_back(1);
      else if (t == "-" || t == "-1")
        signs.push_back(-1);
      else
        fail(errc::config, "signs must be + or -");
    }
  } else if (key == "signs_h_max") {
    signs_h_max = to_int(value);
  } else if (key == "allow_large") {
    allow_large = value == "1" || value == "true";
  } else if (key == "size_cap") {
    size_cap = static_cast<std::uint64_t>(std::stoull(value));
  } else if (key == "jobs") {
    jobs = to_int(value);
  } else if (key == "format") {
    format = value;
  } else if (key == "near_tight") {
    near_tight_threshold = Rational(BigInt(std::stoll(value)), BigInt(1));
  } else {
    fail(errc::config, "unknown config key: '" + key + "'");
  }
}

void ExperimentConfig::validate() const {
  group.validate();
  if (trials < 1) fail(errc::config, "trials must be >= 1");
  if (theorems.empty()) fail(errc::config, "no theorems requested");
  bool finite = group.kind != GroupKind::free_group;
  switch (generator.kind) {
    case GeneratorSpec::Kind::uniform:
    case GeneratorSpec::Kind::subgroup_plus_points:
    case GeneratorSpec::Kind::coset_union:
      if (!finite)
        fail(errc::config, generator.str() + " needs a finite group");
      break;
    case GeneratorSpec::Kind::progression:
      if (!group.is_abelian())
        fail(errc::config, "progression generator needs an abelian group");
      if (!finite) fail(errc::config, "progression generator needs a finite group");
      break;
    case GeneratorSpec::Kind::random_words:
      if (finite) fail(errc::config, "random-words generator needs a free group");
      break;
  }
  for (TheoremId id : theorems) {
    bool needs_abelian = id == TheoremId::plunnecke_h || id == TheoremId::ruzsa_kl ||
                         id == TheoremId::triangle_abelian;
    if (needs_abelian && !group.is_abelian())
      fail(errc::config, std::string(theorem_name(id)) + " needs an abelian group");
  }
  if (format != "json" && format != "csv" && format != "text")
    fail(errc::config, "format must be json, csv or text");
  if (jobs < 1) fail(errc::config, "jobs must be >= 1");
}

namespace {

GSet generate_one(const GroupPtr& g, const GeneratorSpec& gen, SplitMix64& rng,
                  std::uint64_t size_cap) {
  switch (gen.kind) {
    case GeneratorSpec::Kind::uniform: {
      // Rejection sampling of distinct ranks.
      std::uint64_t order = *g->order();
      std::uint64_t want = std::min<std::uint64_t>(static_cast<std::uint64_t>(gen.size), order);
      std::vector<std::uint64_t> chosen;
      while (chosen.size() < want) {
        std::uint64_t r = rng.below(order);
        if (std::find(chosen.begin(), chosen.end(), r) == chosen.end()) chosen.push_back(r);
      }
      SetBuilder builder(g, size_cap);
      for (auto r : chosen) builder.insert(g->unrank(r));
      return builder.take();
    }
    case GeneratorSpec::Kind::subgroup_plus_points: {
      std::vector<Element> gens;
      for (const auto& lit : gen.subgroup_gens) gens.push_back(g->parse_element(lit));
      GSet h = GSet::closure(g, gens, size_cap);
      GSet out = h;
      std::uint64_t order = *g->order();
      int added = 0;
      int attempts = 0;
      while (added < gen.extra && attempts < 1000 * (gen.extra + 1)) {
        ++attempts;
        Element e = g->unrank(rng.below(order));
        if (!out.contains(e)) {
          out = with_element(out, e);
          ++added;
        }
      }
      if (added < gen.extra)
        fail(errc::config, "group too small for requested extra points");
      return out;
    }
    case GeneratorSpec::Kind::coset_union: {
      std::uint64_t order = *g->order();
      Element gen_elem = g->unrank(rng.below(order));
      GSet h = GSet::closure(g, {gen_elem}, size_cap);
      GSet out = GSet::empty(g);
      for (int i = 0; i < gen.count; ++i) {
        int attempts = 0;
        while (attempts < 1000) {
          ++attempts;
          Element x = g->unrank(rng.below(order));
          if (out.is_empty() || !out.contains(x)) {
            out = set_union(out, product(GSet::single(g, x), h, size_cap));
            break;
          }
        }
        if (out.size() >= order) break;  // the whole group is covered
      }
      return out;
    }
    case GeneratorSpec::Kind::progression: {
      std::uint64_t order = *g->order();
      Element start = gen.start.empty() ? g->unrank(rng.below(order))
                                        : g->parse_element(gen.start);
      Element step = gen.step.empty() ? g->unrank(rng.below(order))
                                      : g->parse_element(gen.step);
      SetBuilder builder(g, size_cap);
      Element cur = start;
      for (int i = 0; i < gen.length; ++i) {
        builder.insert(cur);
        cur = g->mul(cur, step);
      }
      return builder.take();
    }
    case GeneratorSpec::Kind::random_words: {
      int rank = g->spec().rank;
      SetBuilder builder(g, size_cap);
      std::vector<Element> seen;
      int attempts = 0;
      while (static_cast<int>(seen.size()) < gen.size && attempts < 200 * (gen.size + 1)) {
        ++attempts;
        int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(gen.max_len) + 1));
        Element w{{}};
        for (int i = 0; i < len; ++i) {
          std::int64_t letter;
          do {
            std::int64_t idx = static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(rank)));
            letter = idx < rank ? idx + 1 : -(idx - rank + 1);
          } while (!w.data.empty() && w.data.back() == -letter);
          w.data.push_back(letter);
        }
        if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
      }
      for (const auto& w : seen) builder.insert(w);
      return builder.take();
    }
  }
  fail(errc::config, "bad generator kind");
}

bool needs_third_set(TheoremId id) {
  return id == TheoremId::triangle || id == TheoremId::triangle_abelian ||
         id == TheoremId::stronger_middle || id == TheoremId::middle;
}

std::vector<std::pair<int, int>> kl_pairs(int kl_max) {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= kl_max; ++s)
    for (int k = s; k >= 0; --k) out.emplace_back(k, s - k);
  return out;
}

std::vector<std::vector<int>> sign_vectors(int h_max) {
  std::vector<std::vector<int>> out;
  for (int len = 1; len <= h_max; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<int> v(static_cast<size_t>(len));
      for (int i = 0; i < len; ++i) v[static_cast<size_t>(i)] = (bits >> i & 1) ? -1 : 1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string set_literal(const GSet& s) {
  if (s.size() <= 32) return format_set(s);
  return "<" + std::to_string(s.size()) + " elements>";
}

ReportRow row_from(const TheoremReport& r) {
  ReportRow row;
  row.id = r.id;
  row.status = r.status;
  row.h = r.h;
  row.k = r.k;
  row.l = r.l;
  row.signs = r.signs;
  row.actual = r.actual;
  row.bound = r.bound_coeff * Rational(BigInt(r.reference), BigInt(1));
  row.slack = r.slack;
  return row;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int trial) {
  auto t0 = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial = trial;
  SplitMix64 rng = trial_stream(cfg.seed, trial);
  rec.derived_seed = rng.next();

  GroupPtr g = Group::make(cfg.group);
  bool want_c = std::any_of(cfg.theorems.begin(), cfg.theorems.end(), needs_third_set);
  GSet a, b, c;
  try {
    a = generate_one(g, cfg.generator, rng, cfg.size_cap);
    b = generate_one(g, cfg.generator, rng, cfg.size_cap);
    if (want_c) c = generate_one(g, cfg.generator, rng, cfg.size_cap);
  } catch (const Error& err) {
    if (err.code() == errc::capacity || err.code() == errc::size_overflow ||
        err.code() == errc::length_overflow) {
      rec.skips.push_back(std::string("generator: ") + err.what());
      return rec;
    }
    throw;
  }

  rec.a_literal = set_literal(a);
  rec.b_literal = set_literal(b);
  if (want_c) rec.c_literal = set_literal(c);

  VerifyOptions opts;
  opts.size_cap = cfg.size_cap;
  opts.allow_large_params = cfg.allow_large;

  auto guard = [&](TheoremId id, auto&& fn) {
    try {
      fn();
    } catch (const Error& err) {
      if (err.code() == errc::capacity || err.code() == errc::size_overflow ||
          err.code() == errc::length_overflow) {
        rec.skips.push_back(std::string(theorem_name(id)) + ": " + err.what());
        return;
      }
      throw;
    }
  };

  for (TheoremId id : cfg.theorems) {
    switch (id) {
      case TheoremId::triangle:
        guard(id, [&] { rec.rows.push_back(row_from(verify_triangle(a, b, c, opts))); });
        break;
      case TheoremId::triangle_abelian:
        guard(id, [&] {
          rec.rows.push_back(row_from(verify_triangle_abelian(a, b, c, opts)));
        });
        break;
      case TheoremId::stronger_middle:
        guard(id, [&] {
          MagnificationCertificate cert = a.size() <= static_cast<std::uint64_t>(opts.mag.brute_cap)
                                              ? magnification_brute(a, b, opts.mag)
                                              : magnification_flow(a, b, opts.mag);
          VerifyOptions certified = opts;
          certified.hypothesis_certified = true;
          rec.rows.push_back(row_from(verify_stronger_middle(cert.X, b, c, certified)));
        });
        break;
      case TheoremId::middle:
        guard(id, [&] { rec.rows.push_back(row_from(verify_middle(a, b, c, opts))); });
        break;
      case TheoremId::plunnecke_h:
        guard(id, [&] {
          for (auto& r : verify_plunnecke(a, b, cfg.h, opts))
            rec.rows.push_back(row_from(r));
        });
        break;
      case TheoremId::ruzsa_kl:
        guard(id, [&] {
          int k = cfg.k, l = cfg.l;
          if (cfg.kl_max > 1) {
            auto pairs = kl_pairs(cfg.kl_max);
            auto [pk, pl] = pairs[static_cast<size_t>(trial) % pairs.size()];
            k = pk;
            l = pl;
          }
          rec.rows.push_back(row_from(verify_ruzsa_kl(a, b, k, l, opts)));
        });
        break;
      case TheoremId::b_inv_chain:
        guard(id, [&] { rec.rows.push_back(row_from(verify_b_inv_chain(a, b, opts))); });
        break;
      case TheoremId::triple:
        guard(id, [&] { rec.rows.push_back(row_from(verify_triple(b, opts))); });
        break;
      case TheoremId::tao_power:
        guard(id, [&] {
          int span = std::max(1, cfg.h - 2);
          int h = 3 + trial % span;
          rec.rows.push_back(row_from(verify_tao_power(b, h, opts)));
        });
        break;
      case TheoremId::alternating:
        guard(id, [&] {
          std::vector<int> signs = cfg.signs;
          if (cfg.signs_h_max > 0) {
            auto vecs = sign_vectors(cfg.signs_h_max);
            signs = vecs[static_cast<size_t>(trial) % vecs.size()];
          }
          rec.rows.push_back(row_from(verify_alternating(b, signs, opts)));
        });
        break;
      case TheoremId::s_chain:
        guard(id, [&] {
          MagnificationCertificate cert = a.size() <= static_cast<std::uint64_t>(opts.mag.brute_cap)
                                              ? magnification_brute(a, b, opts.mag)
                                              : magnification_flow(a, b, opts.mag);
          VerifyOptions certified = opts;
          certified.hypothesis_certified = true;
          rec.rows.push_back(row_from(verify_s_chain(cert.X, b, certified)));
        });
        break;
      case TheoremId::sbb:
        guard(id, [&] { rec.rows.push_back(row_from(verify_sbb(a, b, opts))); });
        break;
      case TheoremId::sb_h:
        guard(id, [&] {
          int span = std::max(1, cfg.h - 1);
          int h = 2 + trial % span;
          rec.rows.push_back(row_from(verify_sb_h(a, b, h, opts)));
        });
        break;
      case TheoremId::gallery_counterexample:
        guard(id, [&] { rec.rows.push_back(row_from(gallery_counterexample(opts))); });
        break;
      case TheoremId::gallery_sharpness:
        guard(id, [&] {
          for (auto& r : gallery_sharpness(cfg.h, opts)) rec.rows.push_back(row_from(r));
        });
        break;
    }
  }
  rec.wall_time_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rec;
}

}  // namespace

std::pair<GSet, GSet> generate_sets(const ExperimentConfig& config, int trial) {
  GroupPtr g = Group::make(config.group);
  SplitMix64 rng = trial_stream(config.seed, trial);
  rng.next();  // reserve the derived-seed draw, as run_trial does
  GSet a = generate_one(g, config.generator, rng, config.size_cap);
  GSet b = generate_one(g, config.generator, rng, config.size_cap);
  return {std::move(a), std::move(b)};
}

CampaignSummary run_fuzz(const ExperimentConfig& config) {
  config.validate();
  CampaignSummary summary;
  summary.config = config;
  summary.records.resize(static_cast<size_t>(config.trials));

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (int t = 0; t < config.trials; ++t)
      summary.records[static_cast<size_t>(t)] = run_trial(config, t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          while (true) {
            int t = next.fetch_add(1);
            if (t >= config.trials) return;
            summary.records[static_cast<size_t>(t)] = run_trial(config, t);
          }
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  // Deterministic aggregation in trial order.
  std::map<std::string, std::vector<Rational>> slacks;
  for (const auto& rec : summary.records) {
    summary.skips += rec.skips.size();
    for (const auto& row : rec.rows) {
      ++summary.reports;
      auto& agg = summary.per_theorem[theorem_name(row.id)];
      ++agg.runs;
      switch (row.status) {
        case ReportStatus::pass: {
          ++agg.passes;
          auto& vec = slacks[theorem_name(row.id)];
          vec.push_back(row.slack);
          if (!agg.min_slack || row.slack < *agg.min_slack) agg.min_slack = row.slack;
          if (row.slack <= summary.config.near_tight_threshold) {
            ++agg.near_tight_total;
            if (agg.near_tight.size() < 50) agg.near_tight.emplace_back(rec.trial, row.slack);
          }
          break;
        }
        case ReportStatus::fail:
          ++agg.fails;
          ++summary.violations;
          break;
        case ReportStatus::hypothesis_not_met:
          ++agg.hypothesis_not_met;
          ++summary.hypothesis_not_met;
          break;
      }
    }
  }
  for (auto& [name, agg] : summary.per_theorem) {
    auto& vec = slacks[name];
    if (!vec.empty()) {
      std::sort(vec.begin(), vec.end());
      size_t mid = vec.size() / 2;
      if (vec.size() % 2 == 1)
        agg.median_slack = vec[mid];
      else
        agg.median_slack =
            (vec[mid - 1] + vec[mid]) * Rational(BigInt(1), BigInt(2));
    }
  }
  return summary;
}

namespace {

Json config_json(const ExperimentConfig& cfg) {
  Json j;
  j["group"] = cfg.group.str();
  j["generator"] = cfg.generator.str();
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  Json names = Json::array();
  for (TheoremId id : cfg.theorems) names.push_back(theorem_name(id));
  j["theorems"] = names;
  j["h"] = cfg.h;
  j["k"] = cfg.k;
  j["l"] = cfg.l;
  if (cfg.kl_max > 0) j["kl_max"] = cfg.kl_max;
  if (cfg.signs_h_max > 0) j["signs_h_max"] = cfg.signs_h_max;
  j["size_cap"] = cfg.size_cap;
  return j;
}

std::string params_string(const ReportRow& row) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += ';';
    out += part;
  };
  if (row.h) append("h=" + std::to_string(*row.h));
  if (row.k) append("k=" + std::to_string(*row.k));
  if (row.l) append("l=" + std::to_string(*row.l));
  if (!row.signs.empty()) {
    std::string s = "signs=";
    for (int v : row.signs) s += v > 0 ? '+' : '-';
    append(s);
  }
  return out;
}

}  // namespace

std::string emit_report(const CampaignSummary& summary, const std::string& format) {
  if (format == "json") {
    Json j;
    j["schema"] = "setcalc.fuzz/1";
    j["config"] = config_json(summary.config);
    Json totals;
    totals["trials"] = summary.records.size();
    totals["reports"] = summary.reports;
    totals["violations"] = summary.violations;
    totals["hypothesis_not_met"] = summary.hypothesis_not_met;
    totals["skips"] = summary.skips;
    j["totals"] = totals;
    Json per = Json::object();
    for (const auto& [name, agg] : summary.per_theorem) {
      Json t;
      t["runs"] = agg.runs;
      t["pass"] = agg.passes;
      t["fail"] = agg.fails;
      t["hypothesis_not_met"] = agg.hypothesis_not_met;
      if (agg.min_slack) t["min_slack"] = rational_json(*agg.min_slack);
      if (agg.median_slack) t["median_slack"] = rational_json(*agg.median_slack);
      Json near = Json::array();
      for (const auto& [trial, slack] : agg.near_tight) {
        Json e;
        e["trial"] = trial;
        e["slack"] = rational_json(slack);
        near.push_back(e);
      }
      t["near_tight"] = near;
      t["near_tight_total"] = agg.near_tight_total;
      per[name] = t;
    }
    j["per_theorem"] = per;
    Json trials = Json::array();
    for (const auto& rec : summary.records) {
      Json r;
      r["trial"] = rec.trial;
      r["derived_seed"] = rec.derived_seed;
      r["a"] = rec.a_literal;
      r["b"] = rec.b_literal;
      if (!rec.c_literal.empty()) r["c"] = rec.c_literal;
      Json rows = Json::array();
      for (const auto& row : rec.rows) {
        Json e;
        e["theorem"] = theorem_name(row.id);
        std::string params = params_string(row);
        if (!params.empty()) e["params"] = params;
        e["status"] = status_name(row.status);
        e["actual"] = row.actual;
        e["bound"] = rational_json(row.bound);
        e["slack"] = rational_json(row.slack);
        rows.push_back(e);
      }
      r["reports"] = rows;
      r["skips"] = rec.skips;
      trials.push_back(r);
    }
    j["trials"] = trials;
    return j.dump(2) + "\n";
  }

  if (format == "csv") {
    std::ostringstream os;
    os << "trial,theorem,params,status,actual,bound,slack\n";
    for (const auto& rec : summary.records) {
      for (const auto& row : rec.rows) {
        os << rec.trial << ',' << theorem_name(row.id) << ',' << params_string(row) << ','
           << status_name(row.status) << ',' << row.actual << ',' << row.bound.str() << ','
           << row.slack.decimal(6) << '\n';
      }
      for (const auto& skip : rec.skips) {
        std::string reason = skip;
        std::replace(reason.begin(), reason.end(), ',', ';');
        os << rec.trial << ',' << reason.substr(0, reason.find(':')) << ",,skip,,,\n";
      }
    }
    return os.str();
  }

  if (format == "text") {
    std::ostringstream os;
    os << "campaign: group=" << summary.config.group.str()
       << " generator=" << summary.config.generator.str()
       << " trials=" << summary.records.size() << " seed=" << summary.config.seed << "\n";
    os << "reports=" << summary.reports << " violations=" << summary.violations
       << " hypothesis_not_met=" << summary.hypothesis_not_met << " skips=" << summary.skips
       << "\n";
    for (const auto& [name, agg] : summary.per_theorem) {
      os << "  " << name << ": runs=" << agg.runs << " pass=" << agg.passes
         << " fail=" << agg.fails;
      if (agg.hypothesis_not_met) os << " hyp_not_met=" << agg.hypothesis_not_met;
      if (agg.min_slack) os << " min_slack=" << agg.min_slack->decimal(6);
      if (agg.median_slack) os << " median_slack=" << agg.median_slack->decimal(6);
      if (agg.near_tight_total) os << " near_tight=" << agg.near_tight_total;
      os << "\n";
    }
    if (summary.violations > 0) {
      os << "violations:\n";
      int shown = 0;
      for (const auto& rec : summary.records) {
        for (const auto& row : rec.rows) {
          if (row.status == ReportStatus::fail && shown < 20) {
            os << "  trial " << rec.trial << " " << theorem_name(row.id) << " actual="
               << row.actual << " bound=" << row.bound.str() << " a=" << rec.a_literal
               << " b=" << rec.b_literal << "\n";
            ++shown;
          }
        }
      }
    }
    return os.str();
  }
  fail(errc::config, "unknown report format: '" + format + "'");
}

}  // namespace setcalc
