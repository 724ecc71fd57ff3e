#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cie/provider.hpp"
#include "cie/types.hpp"

namespace cie::datagen {

// --- prompt builders (pure; exposed for tests) ------------------------------------

std::string variant_prompt_text(const Instruction& base, int count);
std::string variant_retry_prompt_text(const Instruction& base, int count,
                                      const std::vector<std::string>& existing_texts);
std::string discovery_prompt_text(const std::vector<Instruction>& instructions, int n_hint);
std::string counterfactual_prompt_text(const Instruction& source, const ProxyFeature& feature,
                                       Direction direction);
std::string plain_expansion_prompt_text(const Instruction& source, int index);
std::string scoring_prompt_text(const Instruction& instruction,
                                const std::vector<ProxyFeature>& features);

// --- parsers (pure; exposed for tests) ---------------------------------------------

// Lines shaped "3. text" / "3) text" / "3: text".
std::vector<std::string> parse_numbered_list(const std::string& text);
std::vector<ProxyFeature> parse_feature_list(const std::string& text, ScaleBounds scale);

// --- operations -------------------------------------------------------------------

// Exactly `count` variants, pairwise distinct and distinct from the base
// after whitespace normalization; duplicates are re-requested up to 3 times,
// then generation_shortfall.
std::vector<Instruction> generate_variants(const Instruction& base, int count, Provider& provider);

// n >= 1 features with unique names and non-empty descriptions; n_hint <= 0
// leaves the count to the model.
std::vector<ProxyFeature> discover_features(const std::vector<Instruction>& instructions,
                                            Provider& provider, int n_hint = 0);

// One counterfactual per (instruction, feature) pair: n * |instructions| in
// total. Direction depends on the source's prior score side relative to the
// scale midpoint (below -> raise, otherwise -> lower) so both treatment arms
// get mass.
std::vector<Instruction> generate_counterfactuals(const std::vector<Instruction>& originals,
                                                  const std::vector<ProxyFeature>& features,
                                                  const std::vector<FeatureScores>& original_scores,
                                                  Provider& provider);

// Ablation path: the same n-per-source count of plain variants, no
// feature-targeted rewrites.
std::vector<Instruction> generate_plain_expansion(const std::vector<Instruction>& originals,
                                                  int per_source_count, Provider& provider);

// One score per (instruction, feature), clamped to the feature scale.
// Out-of-scale values append a message to `warnings` when given.
std::vector<FeatureScores> score_features(const std::vector<Instruction>& instructions,
                                          const std::vector<ProxyFeature>& features,
                                          Provider& provider,
                                          std::vector<std::string>* warnings = nullptr);

// Deterministic seeded sample of b questions; insufficient_data when the
// dataset has fewer than b items.
std::vector<Question> sample_questions(const TaskSpec& task, int b, uint64_t seed);

// Full Cartesian product in lexicographic (instruction_id, question_id) order.
std::vector<std::pair<std::string, std::string>> build_instances(
    const std::vector<Instruction>& instructions, const std::vector<Question>& questions);

// One record per instance; per-instance provider failures are kept as
// error-marked rows with Y = 0, never dropped.
ObservationTable collect_outcomes(const std::vector<std::pair<std::string, std::string>>& instances,
                                  const TaskSpec& task,
                                  const std::vector<Instruction>& instructions,
                                  const std::vector<Question>& questions,
                                  const std::vector<ProxyFeature>& features,
                                  const std::vector<FeatureScores>& scores, Provider& provider);

}  // namespace cie::datagen
