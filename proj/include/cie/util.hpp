#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cie {

// --- strings ---------------------------------------------------------------

std::string trim(std::string_view s);
std::string lowercase(std::string_view s);

// Collapse every whitespace run to a single space and trim the ends.
std::string normalize_whitespace(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool contains(std::string_view s, std::string_view needle);

// Shortest decimal form that round-trips the double (to_chars).
std::string format_double(double value);

// --- hashing ---------------------------------------------------------------

std::string sha256_hex(std::string_view bytes);

// First 12 hex chars of sha256; used for content-derived ids.
std::string short_hash(std::string_view bytes);

uint64_t fnv1a64(std::string_view bytes);

// --- deterministic randomness ------------------------------------------------

// Thin wrapper over mt19937_64 with bounded draws that do not depend on
// libstdc++ distribution internals, so sequences match across platforms.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_unit();

  // Uniform integer in [0, n), rejection-sampled.
  uint64_t bounded(uint64_t n);

  bool bernoulli(double p) { return next_unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// --- filesystem --------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temp file then renames, so readers never see a partial
// artifact and nothing is overwritten in place.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string iso8601_now();

// --- CSV (RFC-style quoting) -------------------------------------------------

std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

// Full-document parser; handles quoted fields with embedded commas, quotes
// and newlines. Returns one vector of fields per record.
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

}  // namespace cie
