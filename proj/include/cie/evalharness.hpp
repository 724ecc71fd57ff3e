#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cie/provider.hpp"
#include "cie/types.hpp"

namespace cie::evalharness {

// Stage 1 elicits the reasoning, stage 2 re-prompts with the answer trigger.
// Returns the stage-2 text; issues exactly two provider calls.
std::string run_two_stage(const Instruction& instruction, const Question& question,
                          Provider& provider, const std::string& answer_trigger);

// Single call; q_end appends the instruction after the question instead.
std::string run_one_stage(const Instruction& instruction, const Question& question,
                          Provider& provider, bool q_end = false);

std::string run_prompting(const TaskSpec& task, const Instruction& instruction,
                          const Question& question, Provider& provider);

// Last-occurrence extraction with per-type normalization; nullopt when no
// matching token exists (scored incorrect, flagged).
std::optional<std::string> extract_answer(const std::string& raw, AnswerType type);

// Gold answers go through the same normalization so matching is symmetric.
std::string normalize_gold(const std::string& gold, AnswerType type);

struct PerQuestion {
  std::string question_id;
  std::string raw_answer;
  std::string extracted;  // empty when no answer found
  int correct = 0;
  bool no_answer = false;
  bool error_flag = false;
};

struct EvalResult {
  std::string task_id;
  std::string instruction_id;
  std::vector<PerQuestion> per_question;  // sorted by question_id
  double accuracy = 0.0;

  nlohmann::json to_json() const;
  static EvalResult from_json(const nlohmann::json& j);
  std::string to_csv() const;  // question_id, extracted, gold-correct flat export
};

EvalResult evaluate(const Instruction& instruction, const TaskSpec& task, Provider& provider,
                    const std::set<std::string>& exclusions);

struct ComparisonReport {
  std::string task_id;
  std::string base_instruction_id;
  std::string enhanced_instruction_id;
  double base_accuracy = 0.0;
  double enhanced_accuracy = 0.0;
  double delta = 0.0;
  std::vector<std::string> fixed_to_broken;  // correct in base, incorrect in enhanced
  std::vector<std::string> broken_to_fixed;

  nlohmann::json to_json() const;
};

ComparisonReport compare(const EvalResult& base_result, const EvalResult& enhanced_result);

}  // namespace cie::evalharness
