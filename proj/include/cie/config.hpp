#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cie/causal.hpp"
#include "cie/provider.hpp"
#include "cie/types.hpp"

namespace cie {

struct ProviderConfig {
  std::string endpoint;
  std::string api_key_env = "CIE_API_KEY";
  TranscriptMode transcript_mode = TranscriptMode::replay;
  std::string transcript_path = "transcript.jsonl";
  ProviderOptions options;
};

struct EstimatorSettings {
  causal::Estimator estimator = causal::Estimator::t_learner;
  causal::EstimatorConfig base;
  causal::BinarizePolicy policy;
  double epsilon = 0.005;
  bool psm = false;
  double psm_caliper = 0.05;

  causal::ReportConfig report_config() const;
};

struct RunConfig {
  TaskSpec task;
  std::string base_instruction_path;
  int a = 9;
  int b = 5;
  std::optional<int> n_hint;
  uint64_t seed = 0;
  ProviderConfig provider;
  EstimatorSettings estimator;
  bool ablation_no_counterfactual = false;

  // Parses and validates; relative paths resolve against the config file's
  // directory. Throws config_error.
  static RunConfig load(const std::filesystem::path& config_path);
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

  nlohmann::json echo() const;  // canonical echo for the manifest
  Instruction load_base_instruction() const;
};

}  // namespace cie
