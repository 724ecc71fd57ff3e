#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cie {

// --- instructions ------------------------------------------------------------

enum class Origin { base, variant, counterfactual, enhanced, inherited };
enum class Direction { raise, lower };

const char* to_string(Origin origin);
Origin origin_from_string(const std::string& s);
const char* to_string(Direction direction);
Direction direction_from_string(const std::string& s);

struct Instruction {
  std::string id;
  std::string text;
  Origin origin = Origin::base;
  std::string parent_id;  // empty for base instructions

  // Set only when origin == counterfactual.
  int cf_feature_id = 0;
  Direction cf_direction = Direction::raise;
};

// --- proxy features ------------------------------------------------------------

struct ScaleBounds {
  int min = 0;
  int max = 10;
  double midpoint() const { return 0.5 * (min + max); }
};

struct ProxyFeature {
  int feature_id = 0;  // 1..n
  std::string name;
  std::string description;  // frozen after discovery for the whole run
  ScaleBounds scale;
};

struct FeatureScores {
  std::string instruction_id;
  std::vector<double> scores;  // one per feature, in feature_id order
};

// --- task data -----------------------------------------------------------------

enum class AnswerType { numeric, multiple_choice, yes_no, exact_string };
const char* to_string(AnswerType type);
AnswerType answer_type_from_string(const std::string& s);

struct Question {
  std::string question_id;
  std::string prompt_text;
  std::string gold_answer;
  AnswerType answer_type = AnswerType::numeric;
};

enum class PromptingMode { two_stage, one_stage, q_end };
const char* to_string(PromptingMode mode);
PromptingMode prompting_mode_from_string(const std::string& s);

enum class SplitPolicy { predefined_test, holdout_excluding_sampled };
const char* to_string(SplitPolicy split);
SplitPolicy split_policy_from_string(const std::string& s);

struct TaskSpec {
  std::string task_id;
  std::string dataset_path;
  AnswerType answer_type = AnswerType::numeric;
  PromptingMode prompting_mode = PromptingMode::two_stage;
  SplitPolicy split = SplitPolicy::holdout_excluding_sampled;
  std::string answer_trigger = "Therefore, the answer is";
};

// --- observational data ----------------------------------------------------------

struct ObservationRecord {
  std::string instruction_id;
  std::string question_id;
  std::vector<double> feature_scores;  // copied verbatim from FeatureScores
  int outcome = 0;                     // Y in {0,1}
  std::string raw_answer;
  bool error_flag = false;
};

struct ObservationTable {
  std::vector<ProxyFeature> features;
  std::vector<ObservationRecord> records;  // sorted by (instruction_id, question_id)

  size_t feature_count() const { return features.size(); }
  size_t row_count() const { return records.size(); }
  size_t error_count() const;

  // Column of raw scores for one feature across all rows.
  std::vector<double> feature_column(int feature_id) const;
  int feature_index(int feature_id) const;  // -1 if absent

  std::string to_csv() const;
  nlohmann::json sidecar_json() const;

  void write(const std::filesystem::path& csv_path, const std::filesystem::path& sidecar_path) const;
  static ObservationTable read(const std::filesystem::path& csv_path,
                               const std::filesystem::path& sidecar_path);
};

// --- serialization helpers ---------------------------------------------------------

nlohmann::json instruction_to_json(const Instruction& instruction);
Instruction instruction_from_json(const nlohmann::json& j);

nlohmann::json feature_to_json(const ProxyFeature& feature);
ProxyFeature feature_from_json(const nlohmann::json& j);

void write_instructions_jsonl(const std::filesystem::path& path,
                              const std::vector<Instruction>& instructions);
std::vector<Instruction> read_instructions_jsonl(const std::filesystem::path& path);

void write_features_json(const std::filesystem::path& path,
                         const std::vector<ProxyFeature>& features);
std::vector<ProxyFeature> read_features_json(const std::filesystem::path& path);

void write_scores_csv(const std::filesystem::path& path, const std::vector<FeatureScores>& scores,
                      size_t feature_count);
std::vector<FeatureScores> read_scores_csv(const std::filesystem::path& path);

// Dataset files are JSON-lines: {question_id, prompt_text, gold_answer, answer_type}.
std::vector<Question> load_questions(const std::filesystem::path& path);
void write_questions_jsonl(const std::filesystem::path& path, const std::vector<Question>& questions);

}  // namespace cie
