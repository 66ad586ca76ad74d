#include "hk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hk/analysis.hpp"
#include "hk/errors.hpp"
#include "hk/scalar.hpp"

namespace hk::io {

const char* mode_name(Mode m) { return m == Mode::rational ? "rational" : "float"; }

Mode parse_mode(const std::string& s) {
  if (s == "rational") return Mode::rational;
  if (s == "float") return Mode::floating;
  throw ParseError("unknown mode: " + s + " (expected rational|float)");
}

namespace {

template <class S>
S scalar_of(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if constexpr (std::is_same_v<S, double>) {
      // Accept the exact literals rational mode takes ("1/2", "0.25") so one
      // spec file loads in either mode, then fall back to float syntax.
      try {
        return Rat::parse(s).to_double();
      } catch (const ParseError&) {
        return scalar::parse<double>(s);
      }
    } else {
      return scalar::parse<S>(s);
    }
  }
  if (v.is_number_integer()) return scalar::from_ratio<S>(v.get<long>(), 1);
  if (v.is_number_float()) return scalar::from_double<S>(v.get<double>());
  throw ParseError("expected a number or a numeric string");
}

template <class S>
StepFn<S> parse_step(const json& j) {
  const auto& base = j.at("base");
  if (!base.is_array() || base.size() != 2) throw ParseError("step base must be [a, b]");
  S a = scalar_of<S>(base[0]);
  S b = scalar_of<S>(base[1]);

  std::vector<S> values;
  for (const auto& v : j.at("values")) values.push_back(scalar_of<S>(v));
  if (values.empty()) throw ParseError("step needs at least one value");

  std::vector<S> xs;
  if (j.contains("breakpoints")) {
    const auto& bp = j.at("breakpoints");
    if (!bp.is_array()) throw ParseError("breakpoints must be an array");
    if (bp.size() == values.size() + 1) {
      for (const auto& v : bp) xs.push_back(scalar_of<S>(v));
      if (!(xs.front() == a) || !(xs.back() == b))
        throw ParseError("breakpoints disagree with base");
    } else if (bp.size() + 1 == values.size()) {
      xs.push_back(a);
      for (const auto& v : bp) xs.push_back(scalar_of<S>(v));
      xs.push_back(b);
    } else {
      throw ParseError("breakpoint count must be one more or one less than the value count");
    }
  } else {
    if (values.size() != 1) throw ParseError("more than one value needs breakpoints");
    xs = {a, b};
  }

  S at_lo = j.contains("value_at_a") ? scalar_of<S>(j.at("value_at_a")) : S{};
  return StepFn<S>(std::move(xs), std::move(values), std::move(at_lo));
}

AntiderivFn parse_antideriv(const json& j) {
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "x^p sin(x^-q)") {
    const int p = j.at("p").get<int>();
    const int q = j.at("q").get<int>();
    return AntiderivFn::oscillatory(p, q);
  }
  if (fam == "cos(x)/x") return AntiderivFn::cos_over_x();
  throw ParseError("unknown antiderivative family: " + fam);
}

json parsed(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FunctionSpec parse_function_spec(const std::string& text, Mode mode) {
  json j = parsed(text, "function spec");
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("function spec needs a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  FunctionSpec out;
  try {
    if (kind == "step") {
      if (mode == Mode::rational)
        out.step_rat = parse_step<Rat>(j);
      else
        out.step_flt = parse_step<double>(j);
    } else if (kind == "antideriv") {
      if (mode == Mode::rational)
        throw ParseError("antiderivative specs require float mode");
      out.antideriv = parse_antideriv(j);
    } else {
      throw ParseError("unknown function kind: " + kind);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad function spec: ") + e.what());
  }
  return out;
}

FunctionSpec load_function_spec(const std::string& path, Mode mode) {
  return parse_function_spec(slurp(path), mode);
}

gallery::FamilyMember member_from_spec(const FunctionSpec& spec, const std::string& id) {
  if (spec.antideriv) return {id, std::nullopt, HKFn<double>(*spec.antideriv)};
  if (spec.step_rat) return {id, *spec.step_rat, HKFn<double>(to_float(*spec.step_rat))};
  return {id, std::nullopt, HKFn<double>(*spec.step_flt)};
}

ExperimentConfig default_config() { return {}; }

ExperimentConfig parse_config(const std::string& text) {
  json j = parsed(text, "config");
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "sequence")
        cfg.sequence_id = val.get<std::string>();
      else if (key == "seed")
        cfg.seed = val.get<std::uint64_t>();
      else if (key == "limit")
        cfg.limit_id = val.get<std::string>();
      else if (key == "family")
        cfg.family_ids = val.get<std::vector<std::string>>();
      else if (key == "N")
        cfg.N = val.get<int>();
      else if (key == "eps")
        cfg.eps = val.get<std::vector<std::string>>();
      else if (key == "probe_depth")
        cfg.probe_depth = val.get<int>();
      else if (key == "tol")
        cfg.tol = val.get<double>();
      else if (key == "window")
        cfg.window = val.get<int>();
      else if (key == "mode")
        cfg.mode = parse_mode(val.get<std::string>());
      else
        throw ParseError("unknown config key: " + key);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  }
  if (cfg.N < 1) throw ParseError("N must be at least 1");
  if (cfg.window < 1) throw ParseError("window must be at least 1");
  if (!(cfg.tol > 0)) throw ParseError("tol must be positive");
  if (cfg.probe_depth < 0 || cfg.probe_depth > 10)
    throw ParseError("probe_depth must be between 0 and 10");
  if (cfg.family_ids.empty()) throw ParseError("family must not be empty");
  if (cfg.eps.empty()) throw ParseError("eps grid must not be empty");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(slurp(path)); }

std::string config_canonical_json(const ExperimentConfig& cfg) {
  json j;
  j["sequence"] = cfg.sequence_id;
  j["seed"] = cfg.seed;
  j["limit"] = cfg.limit_id;
  j["family"] = cfg.family_ids;
  j["N"] = cfg.N;
  j["eps"] = cfg.eps;
  j["probe_depth"] = cfg.probe_depth;
  j["tol"] = cfg.tol;
  j["window"] = cfg.window;
  j["mode"] = mode_name(cfg.mode);
  return j.dump();
}

std::string checksum_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json manifest_json(const ExperimentConfig& cfg) {
  const Schedule sch = schedule_of(cfg);
  json j;
  j["version"] = "0.1.0";
  j["mode"] = mode_name(cfg.mode);
  j["N"] = cfg.N;
  j["schedule"]["tol"] = sch.tol;
  j["schedule"]["window"] = sch.window;
  j["schedule"]["exact_zero"] = sch.exact_zero;
  j["config_checksum"] = checksum_hex(config_canonical_json(cfg));
  return j;
}

Schedule schedule_of(const ExperimentConfig& cfg) {
  Schedule s;
  s.tol = cfg.tol;
  s.window = cfg.window;
  s.exact_zero = cfg.mode == Mode::rational;
  return s;
}

std::vector<Rat> eps_grid_rat(const ExperimentConfig& cfg) {
  std::vector<Rat> out;
  out.reserve(cfg.eps.size());
  for (const auto& s : cfg.eps) out.push_back(Rat::parse(s));
  return out;
}

std::vector<double> eps_grid_flt(const ExperimentConfig& cfg) {
  std::vector<double> out;
  out.reserve(cfg.eps.size());
  for (const auto& s : cfg.eps) {
    try {
      out.push_back(Rat::parse(s).to_double());
    } catch (const ParseError&) {
      out.push_back(scalar::parse<double>(s));
    }
  }
  return out;
}

FunctionSequence<Rat> sequence_by_id(const std::string& id, std::uint64_t seed) {
  if (id == "typewriter") return gallery::typewriter_seq();
  if (id == "heaviside") return gallery::heaviside_compact_seq();
  if (id == "alternating") return gallery::alternating_seq();
  if (id == "random") return gallery::random_seq(seed);
  throw ParseError("unknown sequence: " + id +
                   " (expected typewriter|heaviside|alternating|random)");
}

StepFn<Rat> resolve_limit(const FunctionSequence<Rat>& seq, const std::string& limit_id) {
  if (limit_id == "default") return seq.limit;
  if (limit_id == "zero")
    return StepFn<Rat>::zero(seq.limit.breakpoints().front(), seq.limit.breakpoints().back());
  if (limit_id == "g1") return seq.generate(1);
  throw ParseError("unknown limit id: " + limit_id + " (expected default|zero|g1)");
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    out.push_back(keep ? c : '_');
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string trend_csv(const TrendReport& r) {
  std::string out = "n,value\n";
  for (const auto& [n, v] : r.points) {
    out += std::to_string(n);
    out += ',';
    out += v;
    out += '\n';
  }
  return out;
}

namespace {

template <class S>
std::vector<TrendReport> condition_trends(const FunctionSequence<S>& seq, const StepFn<S>& g,
                                          const std::vector<S>& eps, int probe_depth, int N,
                                          const Schedule& sch, Exec how) {
  std::vector<TrendReport> out;
  const Interval<S> I = seq.limit.base();
  for (auto& et : in_measure_trend(seq, g, eps, I, N, sch, how))
    out.push_back(report_of("in_measure eps=" + scalar::str(et.eps), et.series));
  out.push_back(report_of("l1", l1_trend(seq, g, I, N, sch, how)));
  for (auto& pt : interval_mean_trend(seq, g, dyadic_probes(I, probe_depth), N, sch, how))
    out.push_back(report_of("interval_mean probe=" + pt.probe.str(), pt.series));
  return out;
}

}  // namespace

TrendRun run_trend(const ExperimentConfig& cfg, Exec how,
                   const std::optional<gallery::FamilyMember>& extra) {
  const FunctionSequence<Rat> seq = sequence_by_id(cfg.sequence_id, cfg.seed);
  const StepFn<Rat> g = resolve_limit(seq, cfg.limit_id);
  std::vector<gallery::FamilyMember> family;
  for (const auto& id : cfg.family_ids) family.push_back(gallery::parse_family_id(id));
  if (extra) family.push_back(*extra);

  const Schedule sch = schedule_of(cfg);
  Schedule float_sch = sch;
  float_sch.exact_zero = false;

  const FunctionSequence<double> fseq = to_float(seq);
  const StepFn<double> fg = to_float(g);

  std::vector<TrendReport> reports;
  json bv;
  if (cfg.mode == Mode::rational) {
    reports = condition_trends<Rat>(seq, g, eps_grid_rat(cfg), cfg.probe_depth, cfg.N, sch, how);
    const auto r = uniform_bv_report(seq, cfg.N, how);
    bv["variation_sup"] = scalar::str(r.variation_sup);
    bv["supnorm_sup"] = scalar::str(r.supnorm_sup);
  } else {
    reports =
        condition_trends<double>(fseq, fg, eps_grid_flt(cfg), cfg.probe_depth, cfg.N, float_sch, how);
    const auto r = uniform_bv_report(fseq, cfg.N, how);
    bv["variation_sup"] = scalar::str(r.variation_sup);
    bv["supnorm_sup"] = scalar::str(r.supnorm_sup);
  }

  static const char* kKinds[] = {"pairing", "alexiewicz_product", "product_norm"};
  for (const auto& m : family) {
    for (const char* kind : kKinds) {
      const bool exact_arm = cfg.mode == Mode::rational && m.exact.has_value();
      if (exact_arm) {
        TrendSeries<Rat> t =
            hk::detail::conclusion_series<Rat>(kind, HKFn<Rat>(*m.exact), seq, g, cfg.N, sch, how);
        reports.push_back(report_of(std::string(kind) + " f=" + m.id, t));
      } else {
        TrendSeries<double> t =
            hk::detail::conclusion_series<double>(kind, m.flt, fseq, fg, cfg.N, float_sch, how);
        reports.push_back(report_of(std::string(kind) + " f=" + m.id, t));
      }
    }
  }

  TrendRun out;
  out.summary["manifest"] = manifest_json(cfg);
  out.summary["sequence"] = cfg.sequence_id;
  out.summary["limit"] = cfg.limit_id;
  out.summary["uniform_bv"] = bv;
  json arr = json::array();
  int idx = 0;
  for (const auto& r : reports) {
    char prefix[16];
    std::snprintf(prefix, sizeof(prefix), "t%02d_", idx);
    const std::string file = std::string(prefix) + sanitize_name(r.name) + ".csv";
    json e;
    e["name"] = r.name;
    e["mode"] = r.mode;
    e["verdict"] = verdict_name(r.verdict);
    e["achieved"] = r.achieved;
    e["points"] = static_cast<int>(r.points.size());
    e["file"] = file;
    arr.push_back(std::move(e));
    out.csv_files.emplace_back(file, trend_csv(r));
    ++idx;
  }
  out.summary["trends"] = std::move(arr);
  return out;
}

json verdict_json(const TheoremVerdict& v, const ExperimentConfig& cfg) {
  json j;
  j["manifest"] = manifest_json(cfg);
  j["theorem"] = v.theorem;
  j["sequence"] = cfg.sequence_id;
  j["ok"] = v.ok();
  json conds = json::array();
  for (const auto& c : v.conditions) {
    json e;
    e["id"] = c.id;
    e["holds"] = c.holds;
    e["diverged"] = c.diverged;
    e["detail"] = c.detail;
    json ts = json::array();
    for (const auto& t : c.trends) {
      json te;
      te["name"] = t.name;
      te["mode"] = t.mode;
      te["verdict"] = verdict_name(t.verdict);
      te["achieved"] = t.achieved;
      ts.push_back(std::move(te));
    }
    e["trends"] = std::move(ts);
    conds.push_back(std::move(e));
  }
  j["conditions"] = std::move(conds);
  json concl = json::array();
  for (const auto& c : v.conclusions) {
    json e;
    e["f"] = c.family_id;
    e["kind"] = c.kind;
    e["mode"] = c.trend.mode;
    e["verdict"] = verdict_name(c.verdict);
    e["achieved"] = c.trend.achieved;
    concl.push_back(std::move(e));
  }
  j["conclusions"] = std::move(concl);
  json an = json::array();
  for (const auto& a : v.anomalies) {
    json e;
    e["n"] = a.n;
    e["f"] = a.f;
    e["detail"] = a.detail;
    an.push_back(std::move(e));
  }
  j["anomalies"] = std::move(an);
  return j;
}

json run_verify(TheoremId id, const ExperimentConfig& cfg, Exec how) {
  const FunctionSequence<Rat> seq = sequence_by_id(cfg.sequence_id, cfg.seed);
  const StepFn<Rat> g = resolve_limit(seq, cfg.limit_id);
  std::vector<gallery::FamilyMember> family;
  for (const auto& fid : cfg.family_ids) family.push_back(gallery::parse_family_id(fid));

  const Schedule sch = schedule_of(cfg);
  TheoremVerdict v;
  if (cfg.mode == Mode::rational) {
    v = verify_theorem<Rat>(id, seq, g, family, cfg.N, sch, eps_grid_rat(cfg), cfg.probe_depth,
                            how);
  } else {
    Schedule fsch = sch;
    fsch.exact_zero = false;
    v = verify_theorem<double>(id, to_float(seq), to_float(g), family, cfg.N, fsch,
                               eps_grid_flt(cfg), cfg.probe_depth, how);
  }
  return verdict_json(v, cfg);
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << body;
}

void write_outputs(const TrendRun& run, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir + "/summary.json", run.summary.dump(2) + "\n");
  for (const auto& [name, body] : run.csv_files) write_text_file(out_dir + "/" + name, body);
}

}  // namespace hk::io
