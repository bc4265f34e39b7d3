#include "econagents/agent_io.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace econagents {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t bar = s.find('|', start);
    if (bar == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, bar - start)));
    start = bar + 1;
  }
}

// Integer percentages only; decimals are format errors.
std::optional<int> parse_int_percent(const std::string& field) {
  if (field.empty() || field.size() > 3) return std::nullopt;
  for (char c : field) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  int v = std::stoi(field);
  if (v < 0 || v > 100) return std::nullopt;
  return v;
}

}  // namespace

const char* parse_error_kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::WrongFieldCount: return "WrongFieldCount";
    case ParseError::Kind::NonBinaryAction: return "NonBinaryAction";
    case ParseError::Kind::PercentOutOfRange: return "PercentOutOfRange";
    case ParseError::Kind::InvalidJson: return "InvalidJson";
    case ParseError::Kind::MissingKey: return "MissingKey";
    case ParseError::Kind::NonNumericPrice: return "NonNumericPrice";
  }
  return "?";
}

Parsed<GameResponse> parse_game_response(const std::string& text, Protocol protocol) {
  const int n = decision_points(protocol);
  const int expected = 2 * n;
  auto fields = split_fields(trim(text));
  if (static_cast<int>(fields.size()) != expected) {
    return Parsed<GameResponse>::failure(
        {ParseError::Kind::WrongFieldCount,
         "expected " + std::to_string(expected) + " fields, got " +
             std::to_string(fields.size()),
         -1});
  }
  GameResponse r;
  r.raw = text;
  r.strategy.n = n;
  r.beliefs.n = n;
  for (int i = 0; i < n; ++i) {
    const std::string& f = fields[static_cast<size_t>(i)];
    if (f != "0" && f != "1") {
      return Parsed<GameResponse>::failure(
          {ParseError::Kind::NonBinaryAction, "field " + std::to_string(i + 1) + " is '" + f + "'",
           i + 1});
    }
    r.strategy[i] = f == "1" ? 1.0 : 0.0;
  }
  for (int i = 0; i < n; ++i) {
    const std::string& f = fields[static_cast<size_t>(n + i)];
    auto pct = parse_int_percent(f);
    if (!pct) {
      return Parsed<GameResponse>::failure(
          {ParseError::Kind::PercentOutOfRange,
           "field " + std::to_string(n + i + 1) + " is '" + f + "'", n + i + 1});
    }
    r.beliefs[i] = *pct / 100.0;
  }
  return Parsed<GameResponse>::success(std::move(r));
}

std::string format_game_response(const Strategy& strategy, const Belief& beliefs) {
  std::ostringstream os;
  for (int i = 0; i < strategy.size(); ++i) {
    os << (strategy[i] == 1.0 ? '1' : '0') << '|';
  }
  for (int i = 0; i < beliefs.size(); ++i) {
    os << static_cast<int>(std::lround(beliefs[i] * 100));
    if (i + 1 < beliefs.size()) os << '|';
  }
  return os.str();
}

Parsed<MoralMachineResponse> parse_moral_machine_response(const std::string& text,
                                                          MoralMachineStudy study) {
  const int expected = study == MoralMachineStudy::Study1 ? 3 : 4;
  auto fields = split_fields(trim(text));
  if (static_cast<int>(fields.size()) != expected) {
    return Parsed<MoralMachineResponse>::failure(
        {ParseError::Kind::WrongFieldCount,
         "expected " + std::to_string(expected) + " fields, got " +
             std::to_string(fields.size()),
         -1});
  }
  const int n_binary = study == MoralMachineStudy::Study1 ? 2 : 1;
  MoralMachineResponse r;
  r.study = study;
  for (int i = 0; i < expected; ++i) {
    const std::string& f = fields[static_cast<size_t>(i)];
    if (i < n_binary) {
      if (f != "0" && f != "1") {
        return Parsed<MoralMachineResponse>::failure(
            {ParseError::Kind::NonBinaryAction,
             "field " + std::to_string(i + 1) + " is '" + f + "'", i + 1});
      }
      r.fields.push_back(f == "1" ? 1 : 0);
    } else {
      auto pct = parse_int_percent(f);
      if (!pct) {
        return Parsed<MoralMachineResponse>::failure(
            {ParseError::Kind::PercentOutOfRange,
             "field " + std::to_string(i + 1) + " is '" + f + "'", i + 1});
      }
      r.fields.push_back(*pct);
    }
  }
  return Parsed<MoralMachineResponse>::success(std::move(r));
}

std::string format_moral_machine_response(const MoralMachineResponse& response) {
  std::ostringstream os;
  for (size_t i = 0; i < response.fields.size(); ++i) {
    if (i) os << '|';
    os << response.fields[i];
  }
  return os.str();
}

Parsed<PricingDecision> parse_pricing_response(const std::string& text) {
  std::string body = trim(text);
  // Tolerate a markdown code fence, nothing looser.
  if (body.rfind("```", 0) == 0) {
    size_t first_newline = body.find('\n');
    size_t closing = body.rfind("```");
    if (first_newline == std::string::npos || closing <= first_newline) {
      return Parsed<PricingDecision>::failure(
          {ParseError::Kind::InvalidJson, "unterminated code fence", -1});
    }
    body = trim(body.substr(first_newline + 1, closing - first_newline - 1));
  }

  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    return Parsed<PricingDecision>::failure({ParseError::Kind::InvalidJson, e.what(), -1});
  }
  if (!j.is_object()) {
    return Parsed<PricingDecision>::failure(
        {ParseError::Kind::InvalidJson, "top-level value is not an object", -1});
  }

  static const char* kKeys[] = {"observations", "new_plans", "new_insights", "chosen_price"};
  for (const char* key : kKeys) {
    if (!j.contains(key)) {
      return Parsed<PricingDecision>::failure(
          {ParseError::Kind::MissingKey, std::string("missing key '") + key + "'", -1});
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKeys)) {
      return Parsed<PricingDecision>::failure(
          {ParseError::Kind::InvalidJson, "unexpected key '" + key + "'", -1});
    }
  }

  PricingDecision d;
  for (const char* key : {"observations", "new_plans", "new_insights"}) {
    if (!j[key].is_string()) {
      return Parsed<PricingDecision>::failure(
          {ParseError::Kind::InvalidJson, std::string("key '") + key + "' is not a string", -1});
    }
  }
  d.observations = j["observations"].get<std::string>();
  d.new_plans = j["new_plans"].get<std::string>();
  d.new_insights = j["new_insights"].get<std::string>();
  if (!j["chosen_price"].is_number()) {
    return Parsed<PricingDecision>::failure(
        {ParseError::Kind::NonNumericPrice, "chosen_price is not numeric", -1});
  }
  d.chosen_price = j["chosen_price"].get<double>();
  if (!std::isfinite(d.chosen_price)) {
    return Parsed<PricingDecision>::failure(
        {ParseError::Kind::NonNumericPrice, "chosen_price is not finite", -1});
  }
  return Parsed<PricingDecision>::success(std::move(d));
}

std::string format_pricing_decision(const PricingDecision& decision) {
  ordered_json j;
  j["observations"] = decision.observations;
  j["new_plans"] = decision.new_plans;
  j["new_insights"] = decision.new_insights;
  j["chosen_price"] = decision.chosen_price;
  return j.dump();
}

// ---- Completion client -----------------------------------------------------

namespace {

// Bounded concurrency without C++20 semaphore headers everywhere.
class Gate {
 public:
  explicit Gate(int slots) : slots_(slots < 1 ? 1 : slots) {}
  void acquire() {
    std::unique_lock lk(m_);
    cv_.wait(lk, [&] { return slots_ > 0; });
    --slots_;
  }
  void release() {
    {
      std::lock_guard lk(m_);
      ++slots_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex m_;
  std::condition_variable cv_;
  int slots_;
};

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path prefix, possibly empty
};

UrlParts split_url(const std::string& url) {
  size_t scheme = url.find("://");
  size_t path = scheme == std::string::npos ? url.find('/') : url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, ""};
  return {url.substr(0, path), url.substr(path)};
}

bool retryable_status(int status) {
  return status == 408 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

struct CompletionClient::Impl {
  CompletionConfig config;
  std::string api_key;
  UrlParts url;
  Gate gate;
  std::mutex audit_mutex;

  explicit Impl(CompletionConfig cfg)
      : config(std::move(cfg)), url(split_url(config.base_url)), gate(config.concurrency_limit) {
    if (!config.api_key_env.empty()) {
      const char* key = std::getenv(config.api_key_env.c_str());
      if (key == nullptr || *key == '\0') {
        throw CompletionError(CompletionError::Kind::AuthFailure,
                              "credential environment variable " + config.api_key_env +
                                  " is not set");
      }
      api_key = key;
    }
  }

  void audit(const json& record) {
    if (config.audit_log_path.empty()) return;
    std::lock_guard lk(audit_mutex);
    std::ofstream out(config.audit_log_path, std::ios::app);
    out << record.dump() << '\n';
  }

  std::string run(const std::vector<ChatTurn>& messages) {
    json body;
    body["model"] = config.model_name;
    body["temperature"] = config.temperature;
    body["top_p"] = config.top_p;
    if (config.max_output_length > 0) body["max_tokens"] = config.max_output_length;
    body["messages"] = json::array();
    for (const auto& turn : messages) {
      body["messages"].push_back({{"role", turn.role}, {"content", turn.content}});
    }
    const std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
      if (attempt > 0) {
        int delay = config.retry_base_delay_ms * (1 << (attempt - 1));
        std::this_thread::sleep_for(std::chrono::milliseconds(delay));
      }

      gate.acquire();
      httplib::Client client(url.origin);
      client.set_connection_timeout(std::chrono::milliseconds(
          static_cast<long long>(config.timeout_seconds * 1000)));
      client.set_read_timeout(
          std::chrono::milliseconds(static_cast<long long>(config.timeout_seconds * 1000)));
      httplib::Headers headers;
      if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
      auto res = client.Post(url.prefix + "/chat/completions", headers, payload,
                             "application/json");
      gate.release();

      json record{{"attempt", attempt},
                  {"request", body},
                  {"endpoint", url.prefix + "/chat/completions"}};
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        record["error"] = last_error;
        audit(record);
        if (res.error() == httplib::Error::ConnectionTimeout ||
            res.error() == httplib::Error::Read) {
          if (attempt == config.max_retries) {
            throw CompletionError(CompletionError::Kind::Timeout, last_error);
          }
        }
        continue;
      }
      record["status"] = res->status;
      record["response"] = res->body;
      audit(record);

      if (res->status == 200) {
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("choices") || reply["choices"].empty()) {
          last_error = "malformed completion payload";
          continue;
        }
        return reply["choices"][0]["message"]["content"].get<std::string>();
      }
      if (res->status == 401 || res->status == 403) {
        throw CompletionError(CompletionError::Kind::AuthFailure,
                              "authentication rejected (HTTP " + std::to_string(res->status) +
                                  ")");
      }
      last_error = "HTTP " + std::to_string(res->status);
      if (!retryable_status(res->status)) break;
    }
    throw CompletionError(CompletionError::Kind::ExhaustedRetries,
                          "gave up after " + std::to_string(config.max_retries) +
                              " retries: " + last_error);
  }
};

CompletionClient::CompletionClient(CompletionConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

CompletionClient::~CompletionClient() = default;

std::string CompletionClient::complete(const std::vector<ChatTurn>& messages) {
  return impl_->run(messages);
}

int CompletionClient::concurrency() const { return impl_->config.concurrency_limit; }

std::string CompletionClient::describe() const {
  return "remote:" + impl_->config.model_name;
}

// ---- Scripted agents --------------------------------------------------------

OptimalGamePlayer::OptimalGamePlayer(AgentType agent, Belief beliefs)
    : agent_(agent), beliefs_(beliefs) {}

std::string OptimalGamePlayer::respond(const GameScenario& scenario) {
  Belief y;
  y.n = decision_points(scenario.protocol);
  for (int i = 0; i < y.n; ++i) y[i] = beliefs_[i];
  Strategy br = best_response(agent_, scenario.payoffs, scenario.protocol, y);
  return format_game_response(br, y);
}

std::string OptimalGamePlayer::describe() const { return "scripted:optimal-" + agent_.describe(); }

std::string ConstantPriceAgent::decide(const PricingContext& context) {
  PricingDecision d;
  d.observations = "Round " + std::to_string(context.round) + ".";
  d.new_plans = "Hold the price at the configured level.";
  d.new_insights = "Constant-price policy.";
  d.chosen_price = price_;
  return format_pricing_decision(d);
}

std::string ConstantPriceAgent::describe() const {
  std::ostringstream os;
  os << "scripted:const(" << price_ << ")";
  return os.str();
}

std::string UndercutByDeltaAgent::decide(const PricingContext& context) {
  PricingDecision d;
  double price = context.history.empty() ? start_price_
                                         : context.history.back().competitor_price - delta_;
  d.observations = context.history.empty() ? "No data yet." : "Tracking the competitor.";
  d.new_plans = "Undercut the competitor's last price.";
  d.new_insights = "Lower price moves quantity.";
  d.chosen_price = price;
  return format_pricing_decision(d);
}

std::string UndercutByDeltaAgent::describe() const {
  std::ostringstream os;
  os << "scripted:undercut(" << delta_ << ")";
  return os.str();
}

std::string MyopicBestResponseAgent::decide(const PricingContext& context) {
  PricingDecision d;
  double price = context.history.empty()
                     ? start_price_
                     : best_response_to_(context.history.back().competitor_price);
  d.observations = context.history.empty() ? "No data yet." : "Responding to the last price.";
  d.new_plans = "Best-respond to the competitor's previous price.";
  d.new_insights = "Single-round optimization.";
  d.chosen_price = price;
  return format_pricing_decision(d);
}

std::string MyopicBestResponseAgent::describe() const { return "scripted:myopic"; }

}  // namespace econagents
