// setcalc: exact growth calculus for finite sets in groups.
//
//   setcalc ratio  --group zn:10 --a '{0,1,2}' --b '{0,1}' [--method both]
//   setcalc cover  --group zn:10 --a '{0,1}' --b '{0,5}'
//   setcalc verify triple --group sym:4 --b 'subgroup:[2,1,3,4];[2,3,1,4]'
//   setcalc gallery [--h 3] [--format json]
//   setcalc fuzz   --config camp.cfg [--trials N --seed N --jobs N --format json]
//
// Exit codes: 0 success (verify: pass or hypothesis_not_met), 2 a bound
// was violated, 3 bad configuration or input, 1 other runtime errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "setcalc/harness.hpp"
#include "setcalc/json_io.hpp"

using namespace setcalc;

namespace {

GroupPtr group_from(const std::string& spec) { return make_group(spec); }

GSet need_set(const GroupPtr& g, const std::string& text, const char* flag) {
  if (text.empty())
    fail(errc::config, std::string("missing required set option ") + flag);
  return parse_set(g, text);
}

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(errc::config, "bad rational literal: '" + text + "'");
  }
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else if (c != ',' && c != ' ')
      fail(errc::config, "signs must be a list of + and -");
  }
  return out;
}

int report_exit(const TheoremReport& r) {
  return r.status == ReportStatus::fail ? 2 : 0;
}

int run_ratio(const std::string& group, const std::string& a_text,
              const std::string& b_text, const std::string& method) {
  GroupPtr g = group_from(group);
  GSet a = need_set(g, a_text, "--a");
  GSet b = need_set(g, b_text, "--b");
  auto emit = [&](const MagnificationCertificate& cert) {
    bool verified = verify_certificate(cert, a, b, /*exhaustive=*/a.size() <= 16).ok;
    return certificate_json(cert, verified);
  };
  if (method == "brute") {
    std::cout << emit(magnification_brute(a, b)).dump(2) << "\n";
  } else if (method == "flow") {
    std::cout << emit(magnification_flow(a, b)).dump(2) << "\n";
  } else if (method == "both") {
    auto brute = magnification_brute(a, b);
    auto flow = magnification_flow(a, b);
    Json j;
    j["brute"] = emit(brute);
    j["flow"] = emit(flow);
    j["agree"] = brute.K == flow.K && brute.X == flow.X;
    std::cout << j.dump(2) << "\n";
    return j["agree"] == true ? 0 : 2;
  } else {
    fail(errc::config, "--method must be brute, flow or both");
  }
  return 0;
}

int run_cover(const std::string& group, const std::string& a_text,
              const std::string& b_text, bool reverse) {
  GroupPtr g = group_from(group);
  GSet a = need_set(g, a_text, "--a");
  GSet b = need_set(g, b_text, "--b");
  auto cert = ruzsa_cover(a, b, reverse ? ScanOrder::reverse : ScanOrder::forward);
  std::cout << cover_json(cert).dump(2) << "\n";
  return cert.covered ? 0 : 2;
}

int run_verify(const std::string& theorem, const std::string& group,
               const std::string& a_text, const std::string& b_text,
               const std::string& c_text, const std::string& x_text, int h, int k, int l,
               const std::string& signs_text, bool allow_large,
               const std::string& alpha_text, const std::string& beta_text,
               const std::string& gamma_text) {
  TheoremId id = parse_theorem(theorem);
  GroupPtr g = group_from(group);
  VerifyOptions opts;
  opts.allow_large_params = allow_large;
  if (!alpha_text.empty()) opts.alpha_override = parse_rational(alpha_text);
  if (!beta_text.empty()) opts.beta_override = parse_rational(beta_text);
  if (!gamma_text.empty()) opts.gamma_override = parse_rational(gamma_text);

  auto pivot = [&](const GSet& b) {
    // Explicit --x/--s is re-certified; otherwise the minimizer of A.
    if (!x_text.empty()) return parse_set(g, x_text);
    GSet a = need_set(g, a_text, "--a");
    opts.hypothesis_certified = true;
    return a.size() <= static_cast<std::uint64_t>(opts.mag.brute_cap)
               ? magnification_brute(a, b, opts.mag).X
               : magnification_flow(a, b, opts.mag).X;
  };

  std::vector<TheoremReport> reports;
  switch (id) {
    case TheoremId::triangle:
      reports.push_back(verify_triangle(need_set(g, a_text, "--a"),
                                        need_set(g, b_text, "--b"),
                                        need_set(g, c_text, "--c"), opts));
      break;
    case TheoremId::triangle_abelian:
      reports.push_back(verify_triangle_abelian(need_set(g, a_text, "--a"),
                                                need_set(g, b_text, "--b"),
                                                need_set(g, c_text, "--c"), opts));
      break;
    case TheoremId::stronger_middle: {
      GSet b = need_set(g, b_text, "--b");
      reports.push_back(
          verify_stronger_middle(pivot(b), b, need_set(g, c_text, "--c"), opts));
      break;
    }
    case TheoremId::middle:
      reports.push_back(verify_middle(need_set(g, a_text, "--a"),
                                      need_set(g, b_text, "--b"),
                                      need_set(g, c_text, "--c"), opts));
      break;
    case TheoremId::plunnecke_h:
      reports = verify_plunnecke(need_set(g, a_text, "--a"), need_set(g, b_text, "--b"),
                                 h, opts);
      break;
    case TheoremId::ruzsa_kl:
      reports.push_back(verify_ruzsa_kl(need_set(g, a_text, "--a"),
                                        need_set(g, b_text, "--b"), k, l, opts));
      break;
    case TheoremId::b_inv_chain:
      reports.push_back(verify_b_inv_chain(need_set(g, a_text, "--a"),
                                           need_set(g, b_text, "--b"), opts));
      break;
    case TheoremId::triple:
      reports.push_back(verify_triple(need_set(g, b_text, "--b"), opts));
      break;
    case TheoremId::tao_power:
      reports.push_back(verify_tao_power(need_set(g, b_text, "--b"), h, opts));
      break;
    case TheoremId::alternating:
      reports.push_back(verify_alternating(need_set(g, b_text, "--b"),
                                           parse_signs(signs_text), opts));
      break;
    case TheoremId::s_chain: {
      GSet b = need_set(g, b_text, "--b");
      reports.push_back(verify_s_chain(pivot(b), b, opts));
      break;
    }
    case TheoremId::sbb:
      reports.push_back(
          verify_sbb(need_set(g, a_text, "--a"), need_set(g, b_text, "--b"), opts));
      break;
    case TheoremId::sb_h:
      reports.push_back(verify_sb_h(need_set(g, a_text, "--a"),
                                    need_set(g, b_text, "--b"), h, opts));
      break;
    case TheoremId::gallery_counterexample:
      reports.push_back(gallery_counterexample(opts));
      break;
    case TheoremId::gallery_sharpness:
      reports = gallery_sharpness(h, opts);
      break;
  }

  int exit_code = 0;
  if (reports.size() == 1) {
    std::cout << report_json(reports[0]).dump(2) << "\n";
    exit_code = report_exit(reports[0]);
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(report_json(r));
      exit_code = std::max(exit_code, report_exit(r));
    }
    std::cout << arr.dump(2) << "\n";
  }
  return exit_code;
}

int run_gallery(int h, const std::string& format) {
  auto counter = gallery_counterexample();
  auto sharp = gallery_sharpness(h);
  if (format == "json") {
    Json j;
    j["counterexample"] = report_json(counter);
    Json arr = Json::array();
    for (const auto& r : sharp) arr.push_back(report_json(r));
    j["sharpness"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "counterexample in " << counter.group.str() << ":\n";
    for (const auto& s : counter.steps)
      std::cout << "  " << s.label << ": " << s.lhs
                << (s.cmp == StepCmp::le ? " <= " : s.cmp == StepCmp::ge ? " >= " : " = ")
                << s.rhs.str() << (s.holds ? "" : "  VIOLATED") << "\n";
    for (const auto& note : counter.notes) std::cout << "  " << note << "\n";
    std::cout << "sharpness:\n";
    for (const auto& r : sharp) {
      Rational bound = r.bound_coeff * Rational(BigInt(r.reference), BigInt(1));
      std::cout << "  " << r.group.str() << " h=" << *r.h << ": |A+hB| = " << r.actual
                << " <= " << bound.str() << " (slack " << r.slack.decimal(6) << ")\n";
    }
  }
  bool ok = counter.pass;
  for (const auto& r : sharp) ok = ok && r.pass;
  return ok ? 0 : 2;
}

int run_fuzz_cmd(const std::string& config_path, std::optional<std::uint64_t> seed,
                 std::optional<int> trials, std::optional<int> jobs,
                 std::optional<std::string> format) {
  ExperimentConfig cfg;
  if (!config_path.empty()) cfg = ExperimentConfig::from_file(config_path);
  if (seed) cfg.seed = *seed;
  if (trials) cfg.trials = *trials;
  if (jobs) {
    cfg.jobs = *jobs;
  } else if (const char* env = std::getenv("SETCALC_JOBS")) {
    cfg.jobs = std::max(1, std::atoi(env));
  }
  if (format) cfg.format = *format;
  cfg.validate();
  auto summary = run_fuzz(cfg);
  std::cout << emit_report(summary, cfg.format);
  return summary.violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sumset/product-set growth calculator and verifier"};
  app.require_subcommand(1);
  // --h is a theorem parameter; keep only --help for help.
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);

  std::string group, a_text, b_text, c_text, x_text, signs_text = "+,-";
  std::string method = "brute", format = "text", config_path, theorem;
  std::string alpha_text, beta_text, gamma_text;
  int h = 3, k = 1, l = 1;
  bool reverse = false, allow_large = false;
  std::optional<std::uint64_t> seed_opt;
  std::optional<int> trials_opt, jobs_opt;
  std::optional<std::string> format_opt;

  auto* ratio = app.add_subcommand("ratio", "minimal growth ratio K and minimizer X");
  auto* cover = app.add_subcommand("cover", "covering set T with B inside A^-1 A T");
  auto* verify = app.add_subcommand("verify", "check one inequality, emit the report");
  auto* gallery = app.add_subcommand("gallery", "run both worked constructions");
  auto* fuzz = app.add_subcommand("fuzz", "seeded verification campaign");
  for (auto* sub : {ratio, cover, verify, gallery, fuzz})
    sub->set_help_flag("--help", "print help");

  ratio->add_option("--group", group)->required();
  ratio->add_option("--a", a_text)->required();
  ratio->add_option("--b", b_text)->required();
  ratio->add_option("--method", method)->check(CLI::IsMember({"brute", "flow", "both"}));

  cover->add_option("--group", group)->required();
  cover->add_option("--a", a_text)->required();
  cover->add_option("--b", b_text)->required();
  cover->add_flag("--reverse", reverse, "scan B in reverse canonical order");

  verify->add_option("theorem", theorem, "theorem id (e.g. triple, plunnecke_h)")
      ->required();
  verify->add_option("--group", group)->required();
  verify->add_option("--a", a_text);
  verify->add_option("--b", b_text);
  verify->add_option("--c", c_text);
  verify->add_option("--x", x_text, "explicit pivot set (re-certified)");
  verify->add_option("--h", h);
  verify->add_option("--k", k);
  verify->add_option("--l", l);
  verify->add_option("--signs", signs_text);
  verify->add_flag("--allow-large", allow_large, "lift the h/k/l caps");
  verify->add_option("--alpha", alpha_text, "hypothesis constant override, e.g. 7/2");
  verify->add_option("--beta", beta_text, "hypothesis constant override");
  verify->add_option("--gamma", gamma_text, "hypothesis constant override");

  gallery->add_option("--h", h);
  gallery->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  fuzz->add_option("--config", config_path);
  fuzz->add_option("--seed", seed_opt);
  fuzz->add_option("--trials", trials_opt);
  fuzz->add_option("--jobs", jobs_opt);
  fuzz->add_option("--format", format_opt)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (ratio->parsed()) return run_ratio(group, a_text, b_text, method);
    if (cover->parsed()) return run_cover(group, a_text, b_text, reverse);
    if (verify->parsed())
      return run_verify(theorem, group, a_text, b_text, c_text, x_text, h, k, l,
                        signs_text, allow_large, alpha_text, beta_text, gamma_text);
    if (gallery->parsed()) return run_gallery(h, format);
    if (fuzz->parsed())
      return run_fuzz_cmd(config_path, seed_opt, trials_opt, jobs_opt, format_opt);
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == errc::config || e.code() == errc::parse ||
                   e.code() == errc::invalid_spec
               ? 3
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
