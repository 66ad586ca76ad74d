#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hk/analysis.hpp"
#include "hk/antiderivative.hpp"
#include "hk/compactify.hpp"
#include "hk/convergence.hpp"
#include "hk/errors.hpp"
#include "hk/gallery.hpp"
#include "hk/io.hpp"
#include "hk/norm_search.hpp"
#include "hk/parallel.hpp"

namespace {

using hk::io::json;

struct NormOpts {
  std::string gallery;
  std::string spec_path;
  bool zero = false;
  int n = 1;
  std::string L;
  bool compact = false;
  std::uint64_t seed = 42;
  std::string mode = "rational";
  int grid = 4096;
  bool serial = false;
};

struct RunOpts {
  std::string config_path;
  std::string gallery = "typewriter";
  int N = 64;
  std::vector<std::string> eps;
  std::vector<std::string> family;
  std::string schedule;
  std::string mode = "rational";
  std::string limit = "default";
  int probe_depth = 4;
  std::uint64_t seed = 42;
  std::string out_dir;
  std::string f_spec;
  bool serial = false;
};

hk::io::ExperimentConfig config_from(const RunOpts& o) {
  if (!o.config_path.empty()) return hk::io::load_config(o.config_path);
  hk::io::ExperimentConfig cfg;
  cfg.sequence_id = o.gallery;
  cfg.N = o.N;
  if (!o.eps.empty()) cfg.eps = o.eps;
  if (!o.family.empty()) cfg.family_ids = o.family;
  cfg.limit_id = o.limit;
  cfg.probe_depth = o.probe_depth;
  cfg.seed = o.seed;
  cfg.mode = hk::io::parse_mode(o.mode);
  if (!o.schedule.empty()) {
    const auto comma = o.schedule.find(',');
    if (comma == std::string::npos)
      throw hk::ParseError("schedule must be tol,window");
    try {
      cfg.tol = std::stod(o.schedule.substr(0, comma));
      cfg.window = std::stoi(o.schedule.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw hk::ParseError("schedule must be tol,window");
    }
    if (!(cfg.tol > 0) || cfg.window < 1) throw hk::ParseError("schedule must be tol,window");
  }
  if (cfg.N < 1) throw hk::ParseError("N must be at least 1");
  return cfg;
}

template <class S>
void fill_step_metrics(json& out, const hk::StepFn<S>& s, const hk::Interval<S>& domain) {
  const bool rational = std::is_same_v<S, hk::Rat>;
  auto put = [&](const char* key, const S& v) {
    if (rational)
      out[key] = hk::scalar::str(v);
    else
      out[key] = hk::scalar::to_double(v);
  };
  put("alexiewicz", hk::alexiewicz_norm(s));
  put("l1", hk::l1_norm(s, domain));
  put("sup", hk::sup_norm(s, domain));
  put("variation", hk::total_variation(s, domain));
  out["bracket"] = nullptr;
}

void fill_searched_metrics(json& out, const hk::HKFn<double>& f, const hk::SearchOptions& sopt) {
  const hk::BracketedNorm<double> bn = hk::alexiewicz_norm_bracketed(f, sopt);
  out["alexiewicz"] = bn.value;
  out["l1"] = nullptr;
  out["sup"] = nullptr;
  out["variation"] = nullptr;
  out["bracket"] = bn.bracket;
}

int cmd_norm(const NormOpts& o) {
  const hk::io::Mode mode = hk::io::parse_mode(o.mode);
  hk::SearchOptions sopt;
  sopt.grid = o.grid;
  sopt.exec = o.serial ? hk::Exec::serial : hk::Exec::parallel;

  json out;
  out["mode"] = hk::io::mode_name(mode);

  auto emit_step_rat = [&](const std::string& desc, const hk::StepFn<hk::Rat>& s,
                           const hk::Interval<hk::Rat>& domain) {
    out["function"] = desc;
    if (mode == hk::io::Mode::rational)
      fill_step_metrics(out, s, domain);
    else
      fill_step_metrics(out, to_float(s), to_float(domain));
  };

  if (o.zero) {
    emit_step_rat("zero", hk::StepFn<hk::Rat>::zero(hk::Rat(0), hk::Rat(1)),
                  hk::Interval<hk::Rat>::closed(hk::Rat(0), hk::Rat(1)));
  } else if (!o.spec_path.empty()) {
    const hk::io::FunctionSpec fs = hk::io::load_function_spec(o.spec_path, mode);
    out["function"] = "spec:" + o.spec_path;
    if (fs.antideriv) {
      hk::HKFn<double> f{*fs.antideriv};
      fill_searched_metrics(out, f, sopt);
    } else if (fs.step_rat) {
      fill_step_metrics(out, *fs.step_rat, fs.step_rat->base());
    } else {
      fill_step_metrics(out, *fs.step_flt, fs.step_flt->base());
    }
  } else if (o.gallery == "typewriter") {
    if (o.n < 1) throw hk::ParseError("--n must be at least 1");
    emit_step_rat("typewriter n=" + std::to_string(o.n), hk::gallery::typewriter(o.n),
                  hk::Interval<hk::Rat>::closed(hk::Rat(0), hk::Rat(1)));
  } else if (o.gallery == "alternating") {
    if (o.n < 1) throw hk::ParseError("--n must be at least 1");
    emit_step_rat("alternating n=" + std::to_string(o.n), hk::gallery::alternating(o.n),
                  hk::Interval<hk::Rat>::closed(hk::Rat(0), hk::Rat(1)));
  } else if (o.gallery == "heaviside") {
    if (o.n < 1) throw hk::ParseError("--n must be at least 1");
    if (o.compact) {
      emit_step_rat("heaviside n=" + std::to_string(o.n) + " compact",
                    hk::gallery::heaviside_compact(o.n),
                    hk::Interval<hk::Rat>::left_open(hk::Rat(0), hk::Rat(1)));
    } else if (!o.L.empty()) {
      const hk::Rat L = hk::Rat::parse(o.L);
      if (!(hk::Rat(0) < L)) throw hk::ParseError("--L must be positive");
      emit_step_rat("heaviside n=" + std::to_string(o.n) + " L=" + L.str(),
                    hk::gallery::heaviside_trunc(o.n, L),
                    hk::Interval<hk::Rat>::closed(hk::Rat(0), L));
    } else {
      throw hk::UnboundedWithoutLimit(
          "the tail indicator has no Alexiewicz norm on an unbounded base; pass --L to "
          "truncate or --compact for its image on (0,1]");
    }
  } else if (o.gallery == "random") {
    if (o.n < 1) throw hk::ParseError("--n must be at least 1");
    const auto seq = hk::gallery::random_seq(o.seed);
    emit_step_rat("random seed=" + std::to_string(o.seed) + " n=" + std::to_string(o.n),
                  seq.generate(o.n), seq.domain);
  } else if (o.gallery == "cos_over_x") {
    if (mode == hk::io::Mode::rational)
      throw hk::ParseError("cos_over_x requires --mode float");
    out["function"] = "cos_over_x";
    fill_searched_metrics(out, hk::HKFn<double>{hk::AntiderivFn::cos_over_x()}, sopt);
  } else if (o.gallery.rfind("osc:", 0) == 0) {
    if (mode == hk::io::Mode::rational)
      throw hk::ParseError("oscillatory integrands require --mode float");
    const hk::gallery::FamilyMember m = hk::gallery::parse_family_id(o.gallery);
    out["function"] = m.id;
    fill_searched_metrics(out, m.flt, sopt);
  } else {
    throw hk::ParseError("unknown gallery function: " + o.gallery);
  }

  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_trend(const RunOpts& o) {
  const hk::io::ExperimentConfig cfg = config_from(o);
  const hk::Exec how = o.serial ? hk::Exec::serial : hk::Exec::parallel;
  std::optional<hk::gallery::FamilyMember> extra;
  if (!o.f_spec.empty())
    extra = hk::io::member_from_spec(hk::io::load_function_spec(o.f_spec, cfg.mode), "spec");
  const hk::io::TrendRun run = hk::io::run_trend(cfg, how, extra);
  if (!o.out_dir.empty()) hk::io::write_outputs(run, o.out_dir);
  std::cout << run.summary.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& theorem, const RunOpts& o) {
  const hk::io::ExperimentConfig cfg = config_from(o);
  const hk::Exec how = o.serial ? hk::Exec::serial : hk::Exec::parallel;
  const hk::TheoremId id = hk::parse_theorem(theorem);
  const json verdict = hk::io::run_verify(id, cfg, how);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    hk::io::write_text_file(o.out_dir + "/verdict.json", verdict.dump(2) + "\n");
  }
  std::cout << verdict.dump(2) << "\n";
  return verdict.at("ok").get<bool>() ? 0 : 1;
}

void add_run_flags(CLI::App* cmd, RunOpts& o, bool with_fspec) {
  auto* config = cmd->add_option("--config", o.config_path, "config JSON file");
  cmd->add_option("--gallery", o.gallery, "sequence id")->excludes(config);
  cmd->add_option("--N", o.N, "horizon")->excludes(config);
  cmd->add_option("--eps", o.eps, "epsilon grid entries")->excludes(config);
  cmd->add_option("--family", o.family, "multiplier ids")->excludes(config);
  cmd->add_option("--schedule", o.schedule, "tol,window")->excludes(config);
  cmd->add_option("--mode", o.mode, "rational|float")->excludes(config);
  cmd->add_option("--limit", o.limit, "default|zero|g1")->excludes(config);
  cmd->add_option("--probe-depth", o.probe_depth, "dyadic probe depth")->excludes(config);
  cmd->add_option("--seed", o.seed, "seed for the random sequence")->excludes(config);
  cmd->add_option("--out", o.out_dir, "directory for CSV and JSON outputs");
  if (with_fspec) cmd->add_option("--f-spec", o.f_spec, "extra multiplier from a spec file");
  cmd->add_flag("--serial", o.serial, "run kernels serially");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexiewicz norms, variation, and convergence trends for step-function "
               "sequences"};
  app.require_subcommand(1);

  NormOpts norm_opts;
  auto* norm = app.add_subcommand("norm", "norms of a single function");
  norm->add_option("--gallery", norm_opts.gallery, "function id");
  norm->add_option("--spec", norm_opts.spec_path, "function spec JSON file");
  norm->add_flag("--zero", norm_opts.zero, "the zero function on [0,1]");
  norm->add_option("--n", norm_opts.n, "sequence index");
  norm->add_option("--L", norm_opts.L, "truncate the tail indicator to [0,L]");
  norm->add_flag("--compact", norm_opts.compact, "use the image on (0,1] instead");
  norm->add_option("--seed", norm_opts.seed, "seed for the random gallery");
  norm->add_option("--mode", norm_opts.mode, "rational|float");
  norm->add_option("--grid", norm_opts.grid, "extremum search grid");
  norm->add_flag("--serial", norm_opts.serial, "run kernels serially");

  RunOpts trend_opts;
  auto* trend = app.add_subcommand("trend", "hypothesis and conclusion trends at horizon N");
  add_run_flags(trend, trend_opts, true);

  RunOpts verify_opts;
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "check one theorem's conditions and conclusions");
  verify->add_option("theorem", theorem, "T1|T2|T3|T4|T5")->required();
  add_run_flags(verify, verify_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) return cmd_norm(norm_opts);
    if (trend->parsed()) return cmd_trend(trend_opts);
    return cmd_verify(theorem, verify_opts);
  } catch (const hk::MissingCertificate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const hk::DomainMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const hk::UnboundedWithoutLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
