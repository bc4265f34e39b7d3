#ifndef ECONAGENTS_AGENT_IO_HPP
#define ECONAGENTS_AGENT_IO_HPP

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "econagents/games.hpp"
#include "econagents/preferences.hpp"
#include "econagents/prompts.hpp"

namespace econagents {

struct ChatTurn {
  std::string role;  // system | user | assistant
  std::string content;
};

// ---- Wire-format parsing -------------------------------------------------

struct ParseError {
  enum class Kind {
    WrongFieldCount,
    NonBinaryAction,
    PercentOutOfRange,
    InvalidJson,
    MissingKey,
    NonNumericPrice,
  };
  Kind kind{};
  std::string message;
  int field{-1};  // offending pipe-separated field, when applicable
};

const char* parse_error_kind_name(ParseError::Kind kind);

template <typename T>
struct Parsed {
  std::optional<T> value;
  std::optional<ParseError> error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Parsed success(T v) { return {std::move(v), std::nullopt}; }
  static Parsed failure(ParseError e) { return {std::nullopt, std::move(e)}; }
};

struct GameResponse {
  Strategy strategy;
  Belief beliefs;
  std::string raw;
};

// Pipe-separated game answer: 6 fields for the SPD (3 binary actions, 3
// integer percentages), 4 for TG/UG. Surrounding whitespace is tolerated,
// decimals and anything else are format errors.
Parsed<GameResponse> parse_game_response(const std::string& text, Protocol protocol);
std::string format_game_response(const Strategy& strategy, const Belief& beliefs);

struct MoralMachineResponse {
  MoralMachineStudy study{};
  std::vector<int> fields;  // study 1: (0/1, 0/1, 0-100); study 3: (0/1, 0-100 x3)
};

Parsed<MoralMachineResponse> parse_moral_machine_response(const std::string& text,
                                                          MoralMachineStudy study);
std::string format_moral_machine_response(const MoralMachineResponse& response);

struct PricingDecision {
  std::string observations, new_plans, new_insights;
  double chosen_price{0};
};

// Strict JSON with exactly the four documented keys; surrounding markdown
// code fences are stripped, nothing looser.
Parsed<PricingDecision> parse_pricing_response(const std::string& text);
std::string format_pricing_decision(const PricingDecision& decision);

// ---- Agent contracts ------------------------------------------------------

struct GameScenario {
  Protocol protocol{Protocol::SPD};
  PayoffTuple payoffs{};
  std::string system_prompt, user_prompt;
};

class GameAgent {
 public:
  virtual ~GameAgent() = default;
  // Raw answer text for one scenario, issued as an independent conversation.
  virtual std::string respond(const GameScenario& scenario) = 0;
  virtual int concurrency() const { return 1; }
  virtual std::string describe() const = 0;
};

struct RoundObservation {
  int round{0};
  double own_price{0}, own_profit{0}, competitor_price{0};
};

struct PricingContext {
  int round{1};
  std::string prompt_prefix, plans, insights, market_data_block;
  std::vector<RoundObservation> history;  // oldest first; same data as the block
};

class PricingAgent {
 public:
  virtual ~PricingAgent() = default;
  // Raw response text; the duopoly loop parses it like any remote output.
  virtual std::string decide(const PricingContext& context) = 0;
  virtual std::string describe() const = 0;
};

class MoralMachineAgent {
 public:
  virtual ~MoralMachineAgent() = default;
  virtual std::string respond(MoralMachineStudy study, MoralMachineCondition condition,
                              const std::string& system_prompt, const std::string& user_prompt) = 0;
  virtual int concurrency() const { return 1; }
  virtual std::string describe() const = 0;
};

// ---- Chat-completion client -----------------------------------------------

struct CompletionConfig {
  std::string model_name{"gpt-4o-2024-08-06"};
  double temperature{1.0};
  double top_p{1.0};
  int max_output_length{0};  // request-level cap (20 for game elicitation); 0 = unset
  double timeout_seconds{60};
  int max_retries{3};
  int retry_base_delay_ms{500};
  int concurrency_limit{4};
  std::string base_url{"https://api.openai.com/v1"};
  std::string api_key_env{"OPENAI_API_KEY"};
  std::string audit_log_path;  // empty disables the audit log
};

struct CompletionError : std::runtime_error {
  enum class Kind { AuthFailure, Timeout, ExhaustedRetries };
  Kind kind;
  CompletionError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual std::string complete(const std::vector<ChatTurn>& messages) = 0;
  virtual int concurrency() const { return 1; }
  virtual std::string describe() const = 0;
};

// HTTP chat-completion backend. The credential is read from the configured
// environment variable at construction (AuthFailure if absent) and never
// written to the audit log. Transport failures and 408/429/5xx responses are
// retried with exponential backoff up to max_retries.
class CompletionClient : public ChatBackend {
 public:
  explicit CompletionClient(CompletionConfig config);
  ~CompletionClient() override;

  std::string complete(const std::vector<ChatTurn>& messages) override;
  int concurrency() const override;
  std::string describe() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---- Scripted agents (deterministic test doubles) --------------------------

// Answers game prompts with best_response under fixed beliefs, formatted like
// a wire response ("1|0|0|33|28|11"). Beliefs are truncated to the
// protocol's decision count.
class OptimalGamePlayer : public GameAgent {
 public:
  OptimalGamePlayer(AgentType agent, Belief beliefs = Belief{0.33, 0.28, 0.11});
  std::string respond(const GameScenario& scenario) override;
  std::string describe() const override;

 private:
  AgentType agent_;
  Belief beliefs_;
};

// Emits unparseable text; exercises exclusion accounting.
class GarbageGameAgent : public GameAgent {
 public:
  std::string respond(const GameScenario&) override { return "maybe 1|1|0"; }
  std::string describe() const override { return "scripted:garbage"; }
};

class ConstantPriceAgent : public PricingAgent {
 public:
  explicit ConstantPriceAgent(double price) : price_(price) {}
  std::string decide(const PricingContext& context) override;
  std::string describe() const override;

 private:
  double price_;
};

// Undercuts the competitor's previous price by delta; plays `start_price`
// in the first round when there is no history yet.
class UndercutByDeltaAgent : public PricingAgent {
 public:
  UndercutByDeltaAgent(double delta, double start_price)
      : delta_(delta), start_price_(start_price) {}
  std::string decide(const PricingContext& context) override;
  std::string describe() const override;

 private:
  double delta_, start_price_;
};

// Plays the injected single-round best response to the competitor's last
// price (the market model supplies the function), `start_price` first.
class MyopicBestResponseAgent : public PricingAgent {
 public:
  MyopicBestResponseAgent(std::function<double(double)> best_response_to, double start_price)
      : best_response_to_(std::move(best_response_to)), start_price_(start_price) {}
  std::string decide(const PricingContext& context) override;
  std::string describe() const override;

 private:
  std::function<double(double)> best_response_to_;
  double start_price_;
};

// Always answers a fixed string; used for moral-machine aggregation tests.
class FixedResponseMoralMachineAgent : public MoralMachineAgent {
 public:
  explicit FixedResponseMoralMachineAgent(std::string text) : text_(std::move(text)) {}
  std::string respond(MoralMachineStudy, MoralMachineCondition, const std::string&,
                      const std::string&) override {
    return text_;
  }
  std::string describe() const override { return "scripted:fixed"; }

 private:
  std::string text_;
};

// ---- Completion-backed adapters --------------------------------------------

class CompletionGameAgent : public GameAgent {
 public:
  explicit CompletionGameAgent(std::shared_ptr<ChatBackend> backend)
      : backend_(std::move(backend)) {}
  std::string respond(const GameScenario& scenario) override {
    return backend_->complete({{"system", scenario.system_prompt}, {"user", scenario.user_prompt}});
  }
  int concurrency() const override { return backend_->concurrency(); }
  std::string describe() const override { return backend_->describe(); }

 private:
  std::shared_ptr<ChatBackend> backend_;
};

class CompletionPricingAgent : public PricingAgent {
 public:
  explicit CompletionPricingAgent(std::shared_ptr<ChatBackend> backend)
      : backend_(std::move(backend)) {}
  std::string decide(const PricingContext& context) override {
    return backend_->complete(
        {{"system", pricing_system_prompt()},
         {"user", pricing_user_prompt(context.prompt_prefix, context.plans, context.insights,
                                      context.market_data_block)}});
  }
  std::string describe() const override { return backend_->describe(); }

 private:
  std::shared_ptr<ChatBackend> backend_;
};

class CompletionMoralMachineAgent : public MoralMachineAgent {
 public:
  explicit CompletionMoralMachineAgent(std::shared_ptr<ChatBackend> backend)
      : backend_(std::move(backend)) {}
  std::string respond(MoralMachineStudy, MoralMachineCondition, const std::string& system_prompt,
                      const std::string& user_prompt) override {
    return backend_->complete({{"system", system_prompt}, {"user", user_prompt}});
  }
  int concurrency() const override { return backend_->concurrency(); }
  std::string describe() const override { return backend_->describe(); }

 private:
  std::shared_ptr<ChatBackend> backend_;
};

}  // namespace econagents

#endif
