#pragma once

#include <stdexcept>
#include <string>

namespace cie {

enum class ErrorKind {
  invalid_request,
  replay_miss,
  backend_error,
  budget_exceeded,
  parse_error,
  generation_shortfall,
  empty_feature_set,
  insufficient_data,
  positivity_violation,
  insufficient_group,
  dimension_mismatch,
  empty_match_set,
  degenerate_instruction,
  digest_mismatch,
  unknown_class,
  duplicate_link,
  storage_error,
  invalid_question,
  question_set_mismatch,
  dataset_error,
  missing_artifact,
  config_error,
};

const char* to_string(ErrorKind kind);

class CieError : public std::runtime_error {
 public:
  CieError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw CieError(kind, message);
}

}  // namespace cie
