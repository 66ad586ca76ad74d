#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hk/antiderivative.hpp"
#include "hk/convergence.hpp"
#include "hk/gallery.hpp"
#include "hk/rational.hpp"
#include "hk/sequence.hpp"
#include "hk/step_function.hpp"

namespace hk::io {

using json = nlohmann::ordered_json;

enum class Mode { rational, floating };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

// A function read from a JSON spec file. Step specs land in the slot for the
// requested mode; antiderivative specs are float-only and a rational-mode
// request for one is a parse error.
struct FunctionSpec {
  std::optional<StepFn<Rat>> step_rat;
  std::optional<StepFn<double>> step_flt;
  std::optional<AntiderivFn> antideriv;
};

FunctionSpec parse_function_spec(const std::string& text, Mode mode);
FunctionSpec load_function_spec(const std::string& path, Mode mode);
gallery::FamilyMember member_from_spec(const FunctionSpec& spec, const std::string& id);

// Everything that determines a run's numbers. The checksum of the canonical
// form is embedded in every report so outputs can be traced back to their
// inputs.
struct ExperimentConfig {
  std::string sequence_id = "typewriter";
  std::uint64_t seed = 42;
  std::string limit_id = "default";  // "default" | "zero" | "g1"
  std::vector<std::string> family_ids = {"chi", "two_piece", "osc:2:3"};
  int N = 64;
  std::vector<std::string> eps = {"9/10", "1/2", "1/10", "1/100"};
  int probe_depth = 4;
  double tol = 1e-9;
  int window = 8;
  Mode mode = Mode::rational;
};

ExperimentConfig default_config();
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

std::string config_canonical_json(const ExperimentConfig& cfg);
std::string checksum_hex(const std::string& text);  // FNV-1a, 64-bit
json manifest_json(const ExperimentConfig& cfg);

Schedule schedule_of(const ExperimentConfig& cfg);
std::vector<Rat> eps_grid_rat(const ExperimentConfig& cfg);
std::vector<double> eps_grid_flt(const ExperimentConfig& cfg);

FunctionSequence<Rat> sequence_by_id(const std::string& id, std::uint64_t seed);
StepFn<Rat> resolve_limit(const FunctionSequence<Rat>& seq, const std::string& limit_id);

std::string sanitize_name(const std::string& name);
std::string trend_csv(const TrendReport& r);

// All trend series a config asks for: the hypothesis trends against the
// resolved limit plus pairing / alexiewicz_product / product_norm per family
// member. `csv_files` maps file name to file body; the summary lists one
// entry per series with its verdict.
struct TrendRun {
  json summary;
  std::vector<std::pair<std::string, std::string>> csv_files;
};

TrendRun run_trend(const ExperimentConfig& cfg, Exec how,
                   const std::optional<gallery::FamilyMember>& extra = std::nullopt);

json verdict_json(const TheoremVerdict& v, const ExperimentConfig& cfg);
json run_verify(TheoremId id, const ExperimentConfig& cfg, Exec how);

void write_text_file(const std::string& path, const std::string& body);
void write_outputs(const TrendRun& run, const std::string& out_dir);

}  // namespace hk::io
