#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cie/config.hpp"
#include "cie/enhance.hpp"
#include "cie/evalharness.hpp"
#include "cie/ormodule.hpp"
#include "cie/provider.hpp"

namespace cie::pipeline {

namespace fs = std::filesystem;

// Run directory layout. One directory = one reproducible experiment.
struct RunPaths {
  fs::path dir;

  fs::path manifest() const { return dir / "manifest.json"; }
  fs::path timings() const { return dir / "timings.json"; }
  fs::path pool_originals() const { return dir / "pool_originals.jsonl"; }
  fs::path pool() const { return dir / "pool.jsonl"; }
  fs::path features() const { return dir / "features.json"; }
  fs::path scores_originals() const { return dir / "scores_originals.csv"; }
  fs::path scores() const { return dir / "scores.csv"; }
  fs::path questions() const { return dir / "questions.json"; }
  fs::path observations() const { return dir / "observations.csv"; }
  fs::path observations_meta() const { return dir / "observations_meta.json"; }
  fs::path ate_report() const { return dir / "ate_report.json"; }
  fs::path overlap_csv() const { return dir / "overlap.csv"; }
  fs::path agreement() const { return dir / "agreement.json"; }
  fs::path enhancement() const { return dir / "enhancement.json"; }
  fs::path enhanced_instruction() const { return dir / "enhanced_instruction.txt"; }
  fs::path explanation() const { return dir / "explanation.txt"; }
  fs::path inherited_instruction() const { return dir / "inherited_instruction.txt"; }
  fs::path eval_dir() const { return dir / "eval"; }
  fs::path report_md() const { return dir / "report.md"; }
};

// manifest.json: run id, config echo, per-stage completion markers with
// artifact digests, and the datagen bookkeeping (counts, sampled ids, feature
// definitions, pool ids, ablation flag). Stage wall times live in a separate
// timings.json so consecutive replay runs stay byte-identical.
class Manifest {
 public:
  static Manifest create(const RunConfig& config);
  static Manifest load(const fs::path& path);
  static std::optional<Manifest> try_load(const fs::path& path);

  void save(const fs::path& path) const;

  const std::string& run_id() const { return run_id_; }

  bool stage_done(const std::string& stage, const RunPaths& paths) const;
  void mark_stage(const std::string& stage, const RunPaths& paths,
                  const std::vector<std::string>& artifact_names);

  void set_counts(int a, int b, int n, uint64_t seed, bool ablation);
  void set_sampled_question_ids(const std::vector<std::string>& ids);
  void set_feature_definitions(const std::vector<ProxyFeature>& features);
  void set_pool_instruction_ids(const std::vector<std::string>& ids);

  std::vector<std::string> sampled_question_ids() const;
  int n() const { return n_; }
  bool ablation() const { return ablation_; }

  nlohmann::json to_json() const;

 private:
  std::string run_id_;
  nlohmann::json config_echo_ = nlohmann::json::object();
  // stage -> artifact relpath -> sha256
  std::map<std::string, std::map<std::string, std::string>> stages_;
  int a_ = 0, b_ = 0, n_ = 0;
  uint64_t seed_ = 0;
  bool ablation_ = false;
  std::vector<std::string> sampled_question_ids_;
  nlohmann::json feature_definitions_ = nlohmann::json::array();
  std::vector<std::string> pool_instruction_ids_;
};

// Builds the provider from config; `backend_override` substitutes the HTTP
// backend (tests inject scripted or failing backends).
Provider make_provider(const RunConfig& config, std::shared_ptr<Backend> backend_override = nullptr);

// cmd_generate: variants -> features -> prior scores -> expansion
// (counterfactual or ablation) -> pool scores -> questions -> outcomes.
// Each sub-stage is checkpointed; reruns resume after the last completed one.
void run_generate(const RunConfig& config, const RunPaths& paths, Provider& provider);

// cmd_estimate: writes ate_report.json and overlap.csv; optionally runs the
// LLM-estimator agreement protocol and writes agreement.json.
causal::AteReport run_estimate(const RunConfig& config, const RunPaths& paths,
                               bool llm_estimate = false, Provider* provider = nullptr);

// cmd_enhance: derives directives, prompts, parses and persists the result.
enhance::EnhancementResult run_enhance(const RunConfig& config, const RunPaths& paths,
                                       Provider& provider);

enum class EvalTarget { base, enhanced, inherited };
const char* to_string(EvalTarget target);

evalharness::EvalResult run_evaluate(const RunConfig& config, const RunPaths& paths,
                                     EvalTarget target, Provider& provider);

// OR-module commands.
ormod::CausalClass or_extract(const RunConfig& config, const RunPaths& paths);
enhance::EnhancementResult or_apply(const ormod::CausalClass& cls, const RunConfig& config,
                                    const RunPaths& paths, Provider& provider);

// cmd_report: one human-readable summary linking every artifact present.
std::string render_report(const RunPaths& paths);

}  // namespace cie::pipeline
