#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stepqa {

// Generation parameters; the defaults are the zero-shot settings
// (temperature 0, top_p 1.0, max_tokens 1000).
struct GenParams {
  double temperature = 0.0;
  double top_p = 1.0;
  int max_tokens = 1000;
  std::string model;
};

struct CompletionError {
  enum class Kind { auth, rate_limited, timeout, network, missing_fixture, bad_response };
  Kind kind = Kind::network;
  std::string message;
  int http_status = 0;
};

std::string to_string(CompletionError::Kind k);

struct CompletionSuccess {
  std::string text;
  int retries = 0;
};

using CompletionOutcome = std::variant<CompletionSuccess, CompletionError>;

class CompletionBackend {
public:
  virtual ~CompletionBackend() = default;
  virtual CompletionOutcome complete(const std::string& prompt, const GenParams& params) = 0;
  virtual std::string id() const = 0;
};

struct RetryPolicy {
  int max_retries = 3;
  int base_delay_ms = 250;
  int max_delay_ms = 4000;
  int connect_timeout_s = 10;
  int read_timeout_s = 120;
};

// OpenAI-compatible chat-completions client. `base_url` is e.g.
// "https://api.openai.com/v1"; the request goes to <base>/chat/completions
// with the prompt as a single user-role message. Transient failures
// (connection errors, 408/429/5xx) are retried with exponential backoff.
class HttpBackend : public CompletionBackend {
public:
  HttpBackend(std::string base_url, std::string api_key, RetryPolicy retry = {});
  CompletionOutcome complete(const std::string& prompt, const GenParams& params) override;
  std::string id() const override;

private:
  std::string base_url_;
  std::string api_key_;
  RetryPolicy retry_;
};

// Deterministic offline backend: answers from a fixture keyed by the SHA-256
// of the exact prompt bytes. Accepts fixture lines of the form
// {"prompt_sha256", "response"} as well as recorded CompletionRecord lines,
// so a record file from a live run replays directly.
class ReplayBackend : public CompletionBackend {
public:
  explicit ReplayBackend(const std::string& fixture_path);  // throws IoError
  CompletionOutcome complete(const std::string& prompt, const GenParams& params) override;
  std::string id() const override;

  size_t size() const { return responses_.size(); }

private:
  std::vector<std::pair<std::string, std::string>> responses_;  // hash -> text
};

struct CompletionRecord {
  std::string instance_id;
  std::string prompt_sha256;
  std::string response_text;
  std::string backend_id;
  long latency_ms = 0;
  int retries = 0;
};

struct BatchItem {
  std::string id;
  CompletionOutcome outcome;
  std::optional<CompletionRecord> record;  // present on success
};

// Bounded-parallelism fan-out: at most `parallelism` requests in flight,
// output order equals input order, per-item error slots (a batch never
// aborts wholesale).
std::vector<BatchItem> complete_batch(CompletionBackend& backend,
                                      const std::vector<std::pair<std::string, std::string>>& prompts,
                                      const GenParams& params, int parallelism);

// Stable digest of the exact prompt bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace stepqa
