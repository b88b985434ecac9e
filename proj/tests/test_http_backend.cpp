// HttpBackend tests against an in-process chat-completions mock server.
#include <doctest.h>

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "stepqa/gateway.hpp"

using namespace stepqa;
using nlohmann::json;

namespace {

// Serves an OpenAI-compatible /v1/chat/completions endpoint on a free port.
class MockServer {
public:
  MockServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      const int n = ++hits_;
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      if (fail_first_ >= n) {
        res.status = fail_status_;
        res.set_content("try later", "text/plain");
        return;
      }
      if (respond_malformed_) {
        res.set_content("{\"choices\": []}", "application/json");
        return;
      }
      const json body = json::parse(req.body, nullptr, false);
      const std::string prompt =
          body.is_discarded() ? "" : body["messages"][0]["content"].get<std::string>();
      const json reply{
          {"choices",
           json::array({json{{"message", json{{"role", "assistant"},
                                               {"content", "echo: " + prompt}}}}})}};
      res.set_content(reply.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

  void fail_first(int n, int status) {
    fail_first_ = n;
    fail_status_ = status;
  }
  void respond_malformed() { respond_malformed_ = true; }

  int hits() const { return hits_; }
  json last_request() const { return json::parse(last_body_); }
  std::string last_auth() const { return last_auth_; }

private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
  int fail_first_ = 0;
  int fail_status_ = 500;
  bool respond_malformed_ = false;
  std::string last_body_;
  std::string last_auth_;
};

RetryPolicy fast_retries(int max_retries) {
  RetryPolicy p;
  p.max_retries = max_retries;
  p.base_delay_ms = 1;
  p.max_delay_ms = 4;
  return p;
}

}  // namespace

TEST_CASE("http backend speaks the chat-completions wire format") {
  MockServer server;
  HttpBackend backend(server.base_url(), "secret-key", fast_retries(0));

  GenParams params;  // paper defaults
  params.model = "test-model";
  const auto outcome = backend.complete("what is 2 + 2?", params);
  REQUIRE(std::holds_alternative<CompletionSuccess>(outcome));
  CHECK(std::get<CompletionSuccess>(outcome).text == "echo: what is 2 + 2?");

  // the recorded request carries the defaults and a single user message
  const json req = server.last_request();
  CHECK(req.at("model") == "test-model");
  CHECK(req.at("temperature") == 0.0);
  CHECK(req.at("top_p") == 1.0);
  CHECK(req.at("max_tokens") == 1000);
  REQUIRE(req.at("messages").size() == 1);
  CHECK(req["messages"][0].at("role") == "user");
  CHECK(req["messages"][0].at("content") == "what is 2 + 2?");
  CHECK(server.last_auth() == "Bearer secret-key");
}

TEST_CASE("transient failures are retried") {
  MockServer server;
  server.fail_first(2, 429);
  HttpBackend backend(server.base_url(), "", fast_retries(3));
  const auto outcome = backend.complete("p", {});
  REQUIRE(std::holds_alternative<CompletionSuccess>(outcome));
  CHECK(std::get<CompletionSuccess>(outcome).retries == 2);
  CHECK(server.hits() == 3);
}

TEST_CASE("rate limiting surfaces after retries are exhausted") {
  MockServer server;
  server.fail_first(100, 429);
  HttpBackend backend(server.base_url(), "", fast_retries(2));
  const auto outcome = backend.complete("p", {});
  REQUIRE(std::holds_alternative<CompletionError>(outcome));
  CHECK(std::get<CompletionError>(outcome).kind == CompletionError::Kind::rate_limited);
  CHECK(server.hits() == 3);  // initial attempt + 2 retries
}

TEST_CASE("authentication failures are immediate and distinguishable") {
  MockServer server;
  server.fail_first(100, 401);
  HttpBackend backend(server.base_url(), "bad-key", fast_retries(3));
  const auto outcome = backend.complete("p", {});
  REQUIRE(std::holds_alternative<CompletionError>(outcome));
  CHECK(std::get<CompletionError>(outcome).kind == CompletionError::Kind::auth);
  CHECK(server.hits() == 1);  // no retries on auth
}

TEST_CASE("malformed completion payloads are bad_response") {
  MockServer server;
  server.respond_malformed();
  HttpBackend backend(server.base_url(), "", fast_retries(1));
  const auto outcome = backend.complete("p", {});
  REQUIRE(std::holds_alternative<CompletionError>(outcome));
  CHECK(std::get<CompletionError>(outcome).kind == CompletionError::Kind::bad_response);
}

TEST_CASE("an unreachable endpoint is a network error") {
  HttpBackend backend("http://127.0.0.1:9/v1", "", fast_retries(1));
  const auto outcome = backend.complete("p", {});
  REQUIRE(std::holds_alternative<CompletionError>(outcome));
  const auto kind = std::get<CompletionError>(outcome).kind;
  CHECK((kind == CompletionError::Kind::network || kind == CompletionError::Kind::timeout));
}

TEST_CASE("batch over the http backend keeps order and isolates failures") {
  MockServer server;
  HttpBackend backend(server.base_url(), "", fast_retries(0));
  GenParams params;
  params.model = "m";
  const auto items = complete_batch(
      backend, {{"a", "one"}, {"b", "two"}, {"c", "three"}}, params, 3);
  REQUIRE(items.size() == 3);
  CHECK(std::get<CompletionSuccess>(items[0].outcome).text == "echo: one");
  CHECK(std::get<CompletionSuccess>(items[1].outcome).text == "echo: two");
  CHECK(std::get<CompletionSuccess>(items[2].outcome).text == "echo: three");
  REQUIRE(items[1].record);
  CHECK(items[1].record->backend_id.rfind("http:", 0) == 0);
}
