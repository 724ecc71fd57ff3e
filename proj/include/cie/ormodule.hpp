#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cie/enhance.hpp"
#include "cie/provider.hpp"
#include "cie/types.hpp"

namespace cie::ormod {

struct ClassDirective {
  std::string feature_name;
  std::string description;  // embedded so the class is self-contained
  enhance::Action action = enhance::Action::increase;
  double magnitude = 0.0;
};

// The persisted, inheritable set of uncovered causal relationships.
struct CausalClass {
  std::string class_id;  // content hash; excludes created_at
  std::string source_task_id;
  std::vector<ClassDirective> directives;  // non-ignore directives only
  std::string explanation_excerpt;
  std::string created_at;
  std::string report_digest;

  nlohmann::json to_json() const;
  static CausalClass from_json(const nlohmann::json& j);
};

enum class Relation { aggregation, generalization };
const char* to_string(Relation relation);
Relation relation_from_string(const std::string& s);

struct InheritanceLink {
  std::string link_id;
  std::string class_id;
  std::string target_task_id;
  Relation relation = Relation::aggregation;
  std::string created_at;

  nlohmann::json to_json() const;
  static InheritanceLink from_json(const nlohmann::json& j);
};

// Directives come from the report's sign-based rule (authoritative); the
// explanation is stored as human-readable provenance only. Throws
// digest_mismatch when result and report are from different runs.
CausalClass extract_class(const enhance::EnhancementResult& result,
                          const causal::AteReport& report,
                          const std::vector<ProxyFeature>& features,
                          const std::string& source_task_id, double epsilon = 0.005);

// Single-file JSON registry {classes: [...], links: [...]}.
class Registry {
 public:
  explicit Registry(std::string path);  // loads the file when present

  // Idempotent: identical content maps to the same class_id and one entry.
  std::string register_class(CausalClass cls);

  // relation is metadata; both kinds grant full directive inheritance.
  InheritanceLink inherit(const std::string& class_id, const std::string& target_task_id,
                          Relation relation);

  const CausalClass& get(const std::string& class_id) const;  // unknown_class
  bool has(const std::string& class_id) const;
  const std::vector<CausalClass>& classes() const { return classes_; }
  const std::vector<InheritanceLink>& links() const { return links_; }

  void save() const;  // atomic write
  nlohmann::json to_json() const;

 private:
  std::string path_;
  std::vector<CausalClass> classes_;
  std::vector<InheritanceLink> links_;
};

std::string class_content_id(const CausalClass& cls);

// Prompt built from class directives and embedded feature descriptions only;
// no ATE table exists for the inheriting task.
std::string build_class_prompt_text(const CausalClass& cls, const Instruction& base);

// Empty-directive classes skip the provider call and return the base
// unchanged with a NoDirectives warning.
enhance::EnhancementResult enhance_from_class(const CausalClass& cls, const Instruction& base,
                                              Provider& provider);

}  // namespace cie::ormod
