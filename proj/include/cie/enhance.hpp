#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cie/causal.hpp"
#include "cie/provider.hpp"
#include "cie/types.hpp"

namespace cie::enhance {

inline constexpr const char* kBeginSentinel = "BEGIN_INSTRUCTION";
inline constexpr const char* kEndSentinel = "END_INSTRUCTION";

enum class Action { increase, decrease, ignore };
const char* to_string(Action action);
Action action_from_string(const std::string& s);

struct Directive {
  int feature_id = 0;
  Action action = Action::ignore;
  double magnitude = 0.0;  // |ATE_i|
};

// One directive per feature: increase iff ATE > epsilon, decrease iff
// ATE < -epsilon, ignore inside the band. Sorted by descending magnitude
// (ties by feature_id).
std::vector<Directive> derive_directives(const causal::AteReport& report, double epsilon = 0.005);

struct EnhancementResult {
  Instruction enhanced;
  std::string explanation;
  std::vector<Directive> directives_used;
  std::string source_report_digest;
  std::string warning;  // set on degenerate paths (e.g. NoDirectives)

  nlohmann::json to_json() const;
  static EnhancementResult from_json(const nlohmann::json& j);
};

// Deterministic prompt: task framing, frozen feature definitions, the ATE
// table, the directive list, the base instruction, then the output contract
// with the BEGIN/END sentinels.
std::string build_enhancement_prompt_text(const Instruction& base,
                                          const std::vector<ProxyFeature>& features,
                                          const causal::AteReport& report,
                                          const std::vector<Directive>& directives);

ChatRequest build_enhancement_prompt(const Instruction& base,
                                     const std::vector<ProxyFeature>& features,
                                     const causal::AteReport& report,
                                     const std::vector<Directive>& directives,
                                     const Provider& provider);

// Splits the response on the sentinels. Throws parse_error when a sentinel is
// missing and degenerate_instruction when the extracted text is empty or
// byte-equal to the base.
EnhancementResult parse_enhancement(const ChatResponse& response, const Instruction& base);

// --- LLM-as-estimator agreement protocol -----------------------------------------

// Frozen reference implementation text shown to the model as a worked
// demonstration; data, not executable code from this library.
const std::string& tlearner_reference_code();

// k defaults to ceil(n/2) when <= 0.
std::string build_estimation_demo_text(const ObservationTable& table,
                                       const causal::AteReport& report,
                                       const std::string& code_text, int k = 0);

ChatRequest build_estimation_demo(const ObservationTable& table, const causal::AteReport& report,
                                  const std::string& code_text, int k, const Provider& provider);

struct AgreementReport {
  std::vector<double> native_values;
  std::vector<double> llm_values;
  std::vector<double> abs_deviation;
  double max_deviation = 0.0;
  int exact_match_count = 0;  // at tolerance 1e-3

  nlohmann::json to_json() const;
};

// Parses "ATE_i = value" lines out of raw model text; parse_error when fewer
// than n values are found.
std::vector<double> parse_ate_values(const std::string& text, int n);

AgreementReport llm_estimate_ates(const ChatRequest& prompt, Provider& provider,
                                  const causal::AteReport& native_report);

}  // namespace cie::enhance
