#pragma once

#include <atomic>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cie/errors.hpp"

namespace cie {

enum class Role { system, user, assistant };
const char* to_string(Role role);
Role role_from_string(const std::string& s);

// Pipeline stage labels; every request carries exactly one.
enum class RequestTag {
  variant_gen,
  feature_discovery,
  counterfactual_gen,
  scoring,
  task_answer,
  ate_estimation,
  enhancement,
  class_extraction,
};
const char* to_string(RequestTag tag);
RequestTag request_tag_from_string(const std::string& s);

struct ChatMessage {
  Role role = Role::user;
  std::string text;
};

struct ChatRequest {
  std::string model_id;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 1024;
  RequestTag request_tag = RequestTag::task_answer;
};

enum class FinishReason { stop, length, error };
const char* to_string(FinishReason reason);
FinishReason finish_reason_from_string(const std::string& s);

struct TokenUsage {
  int prompt = 0;
  int completion = 0;
};

struct ChatResponse {
  std::string text;
  FinishReason finish_reason = FinishReason::stop;
  TokenUsage token_usage;
};

// Canonical JSON serialization (sorted keys, byte-exact texts) used for the
// transcript file and for digesting.
std::string canonical_request_json(const ChatRequest& request);
ChatRequest request_from_json_text(const std::string& json_text);

std::string response_json(const ChatResponse& response);
ChatResponse response_from_json_text(const std::string& json_text);

// sha256 of the canonical serialization. Throws invalid_request when the
// request violates its invariants (empty messages, assistant-first, negative
// temperature, non-positive max_tokens).
std::string canonical_digest(const ChatRequest& request);

enum class TranscriptMode { record, replay, passthrough };
const char* to_string(TranscriptMode mode);
TranscriptMode transcript_mode_from_string(const std::string& s);

// Persistent digest -> response store, JSON-lines on disk, append-only in
// record mode. Thread-safe.
class Transcript {
 public:
  // File-backed; loads existing entries when the file exists.
  Transcript(std::string path, TranscriptMode mode);

  // In-memory store, for tests.
  static Transcript in_memory(TranscriptMode mode);

  TranscriptMode mode() const { return mode_; }
  const std::string& path() const { return path_; }

  std::optional<ChatResponse> lookup(const std::string& digest) const;
  void append(const std::string& digest, const ChatRequest& request, const ChatResponse& response);
  size_t size() const;

 private:
  Transcript() = default;

  std::string path_;  // empty for in-memory transcripts
  TranscriptMode mode_ = TranscriptMode::replay;
  mutable std::mutex mutex_;
  std::map<std::string, ChatResponse> entries_;
};

// A chat-completion backend. Implementations must be safe for concurrent use.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// Always throws backend_error; injected in replay tests to prove that a run
// performs zero network operations.
class FailingBackend : public Backend {
 public:
  ChatResponse complete(const ChatRequest& request) override;
  int calls() const { return calls_.load(); }

 private:
  std::atomic<int> calls_{0};
};

struct HttpBackendOptions {
  std::string endpoint;     // e.g. https://api.example.com/v1/chat/completions
  std::string api_key_env;  // name of the env var holding the key
  int max_retries = 3;      // transport errors only
  std::vector<int> backoff_ms = {1000, 2000, 4000};
  int timeout_seconds = 120;
};

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendOptions options);
  ChatResponse complete(const ChatRequest& request) override;

 private:
  HttpBackendOptions options_;
  std::string scheme_host_;
  std::string request_path_;
};

struct ProviderOptions {
  int parallelism = 8;
  int budget = 10000;  // max live backend calls per run
  // Keyed by request tag name; "default" is the fallback.
  std::map<std::string, std::string> model_by_tag = {{"default", "gpt-4o-mini"}};
  std::map<std::string, double> temperature_by_tag;  // overrides the stage defaults
  int max_tokens = 1024;
};

// Generation stages default to 0.7, scoring-like stages to 0.0.
double default_temperature(RequestTag tag);

// Gateway between the pipeline and a backend, with transcript record/replay.
// Safe for concurrent use; identical in-flight requests are coalesced so one
// digest maps to exactly one backend call.
class Provider {
 public:
  Provider(std::shared_ptr<Backend> backend, std::shared_ptr<Transcript> transcript,
           ProviderOptions options = {});

  ChatResponse complete(const ChatRequest& request);

  // Builds a single-user-message request with the per-stage model and
  // temperature defaults from the options.
  ChatRequest make_request(RequestTag tag, std::string user_text) const;

  int live_calls() const { return live_calls_.load(); }
  const ProviderOptions& options() const { return options_; }
  Transcript& transcript() { return *transcript_; }

 private:
  ChatResponse call_backend(const ChatRequest& request);

  std::shared_ptr<Backend> backend_;
  std::shared_ptr<Transcript> transcript_;
  ProviderOptions options_;
  std::atomic<int> live_calls_{0};

  std::mutex inflight_mutex_;
  std::condition_variable inflight_cv_;
  std::set<std::string> inflight_;
};

// Runs fn(i) for i in [0, count) on up to `parallelism` threads.
// Exceptions propagate (first one wins).
void parallel_for(size_t count, int parallelism, const std::function<void(size_t)>& fn);

}  // namespace cie
