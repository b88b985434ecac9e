#include "stepqa/gateway.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "stepqa/errors.hpp"

namespace stepqa {

using nlohmann::json;

std::string to_string(CompletionError::Kind k) {
  switch (k) {
    case CompletionError::Kind::auth: return "auth";
    case CompletionError::Kind::rate_limited: return "rate_limited";
    case CompletionError::Kind::timeout: return "timeout";
    case CompletionError::Kind::network: return "network";
    case CompletionError::Kind::missing_fixture: return "missing_fixture";
    case CompletionError::Kind::bad_response: return "bad_response";
  }
  return "network";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

// ---------------------------------------------------------------------------
// HttpBackend

HttpBackend::HttpBackend(std::string base_url, std::string api_key, RetryPolicy retry)
    : base_url_(std::move(base_url)), api_key_(std::move(api_key)), retry_(retry) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

std::string HttpBackend::id() const { return "http:" + base_url_; }

CompletionOutcome HttpBackend::complete(const std::string& prompt, const GenParams& params) {
  // split base_url into scheme://host[:port] and a path prefix
  std::string host = base_url_;
  std::string prefix;
  const size_t scheme_end = host.find("://");
  const size_t path_start = host.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start != std::string::npos) {
    prefix = host.substr(path_start);
    host = host.substr(0, path_start);
  }
  const std::string path = prefix + "/chat/completions";

  json body{
      {"model", params.model},
      {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
      {"temperature", params.temperature},
      {"top_p", params.top_p},
      {"max_tokens", params.max_tokens},
  };
  const std::string payload = body.dump();

  httplib::Client client(host);
  client.set_connection_timeout(retry_.connect_timeout_s, 0);
  client.set_read_timeout(retry_.read_timeout_s, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  CompletionError last{CompletionError::Kind::network, "no attempt made", 0};
  for (int attempt = 0; attempt <= retry_.max_retries; ++attempt) {
    if (attempt > 0) {
      long delay = static_cast<long>(retry_.base_delay_ms) << (attempt - 1);
      delay = std::min<long>(delay, retry_.max_delay_ms);
      std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    auto res = client.Post(path, headers, payload, "application/json");
    if (!res) {
      const bool timed_out = res.error() == httplib::Error::ConnectionTimeout ||
                             res.error() == httplib::Error::Read;
      last = {timed_out ? CompletionError::Kind::timeout : CompletionError::Kind::network,
              httplib::to_string(res.error()), 0};
      continue;  // transient
    }
    const int status = res->status;
    if (status == 401 || status == 403) {
      return CompletionError{CompletionError::Kind::auth,
                             "authentication failed (" + std::to_string(status) + ")", status};
    }
    if (status == 429 || status == 408 || status >= 500) {
      last = {status == 429 ? CompletionError::Kind::rate_limited
                            : CompletionError::Kind::network,
              "HTTP " + std::to_string(status), status};
      continue;  // transient
    }
    if (status < 200 || status >= 300) {
      return CompletionError{CompletionError::Kind::bad_response,
                             "HTTP " + std::to_string(status) + ": " + res->body, status};
    }
    try {
      const json reply = json::parse(res->body);
      const auto& choices = reply.at("choices");
      if (!choices.is_array() || choices.empty())
        return CompletionError{CompletionError::Kind::bad_response, "empty choices", status};
      std::string text = choices[0].at("message").at("content").get<std::string>();
      return CompletionSuccess{std::move(text), attempt};
    } catch (const json::exception& e) {
      return CompletionError{CompletionError::Kind::bad_response,
                             std::string("malformed completion payload: ") + e.what(), status};
    }
  }
  return last;
}

// ---------------------------------------------------------------------------
// ReplayBackend

ReplayBackend::ReplayBackend(const std::string& fixture_path) {
  std::ifstream in(fixture_path);
  if (!in) throw IoError("cannot open replay fixture " + fixture_path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError("replay fixture " + fixture_path + " line " + std::to_string(line_no) +
                    ": " + e.what());
    }
    const std::string hash = rec.value("prompt_sha256", "");
    std::string text;
    if (rec.contains("response")) text = rec["response"].get<std::string>();
    else if (rec.contains("response_text")) text = rec["response_text"].get<std::string>();
    if (hash.empty())
      throw IoError("replay fixture " + fixture_path + " line " + std::to_string(line_no) +
                    ": missing prompt_sha256");
    responses_.emplace_back(hash, std::move(text));
  }
}

std::string ReplayBackend::id() const { return "replay"; }

CompletionOutcome ReplayBackend::complete(const std::string& prompt, const GenParams&) {
  const std::string hash = sha256_hex(prompt);
  for (const auto& [h, text] : responses_) {
    if (h == hash) return CompletionSuccess{text, 0};
  }
  return CompletionError{CompletionError::Kind::missing_fixture,
                         "no fixture entry for prompt hash " + hash, 0};
}

// ---------------------------------------------------------------------------
// complete_batch

std::vector<BatchItem> complete_batch(CompletionBackend& backend,
                                      const std::vector<std::pair<std::string, std::string>>& prompts,
                                      const GenParams& params, int parallelism) {
  const size_t n = prompts.size();
  std::vector<BatchItem> results(n);
  if (n == 0) return results;

  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      const auto& [id, prompt] = prompts[i];
      BatchItem item;
      item.id = id;
      const auto start = std::chrono::steady_clock::now();
      try {
        item.outcome = backend.complete(prompt, params);
      } catch (const std::exception& e) {
        item.outcome = CompletionError{CompletionError::Kind::network,
                                       std::string("backend threw: ") + e.what(), 0};
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      if (const auto* ok = std::get_if<CompletionSuccess>(&item.outcome)) {
        CompletionRecord rec;
        rec.instance_id = id;
        rec.prompt_sha256 = sha256_hex(prompt);
        rec.response_text = ok->text;
        rec.backend_id = backend.id();
        rec.latency_ms = static_cast<long>(elapsed);
        rec.retries = ok->retries;
        item.record = std::move(rec);
      }
      results[i] = std::move(item);
    }
  };

  const int threads = std::max(1, std::min<int>(parallelism, static_cast<int>(n)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace stepqa
