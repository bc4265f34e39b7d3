#ifndef ECONAGENTS_PROMPTS_HPP
#define ECONAGENTS_PROMPTS_HPP

#include <map>
#include <string>

#include "econagents/games.hpp"

namespace econagents {

// Replaces every "{KEY}" occurrence for the provided keys, leaving all other
// braces untouched (pricing prompts contain literal JSON braces).
std::string render_template(std::string text, const std::map<std::string, std::string>& values);

// ---- Game elicitation -------------------------------------------------

// Refined machine-readable instructions. `point_value_text` fills the
// "Each point is worth ..." line; the default mirrors the human design.
std::string game_system_prompt(const std::string& point_value_text = "$0.50");

// The original laboratory instructions, available as an alternative system
// prompt for robustness reruns.
std::string original_instructions_system_prompt();

// Scenario prompt with payoff placeholders substituted. The response format
// is pipe-separated: 6 fields for the SPD, 4 for TG/UG.
std::string game_user_prompt(Protocol protocol, const PayoffTuple& payoffs);

// ---- Fine-tuning dataset ----------------------------------------------

std::string datagen_system_prompt_econ();
// kappa_text fills the {type} placeholder ("0.5" by default elsewhere).
std::string datagen_system_prompt_moralis(const std::string& kappa_text);
std::string datagen_user_prompt(const PayoffTuple& payoffs);

// Assistant skeletons; datagen fills the computed placeholders.
const std::string& datagen_assistant_template_econ();
const std::string& datagen_assistant_template_moralis();

// ---- Moral Machine -----------------------------------------------------

enum class MoralMachineStudy { Study1, Study3 };
enum class MoralMachineCondition { SelfPassenger, OtherPassenger, FamilyMember, Coworker };

std::string moral_machine_system_prompt();
std::string moral_machine_user_prompt(MoralMachineStudy study, MoralMachineCondition condition);

// ---- Pricing -------------------------------------------------------------

enum class PromptVariant { Collusive_P1, Competitive_P2 };

const char* prompt_variant_name(PromptVariant v);
std::string pricing_prompt_prefix(PromptVariant v);
std::string pricing_system_prompt();
std::string pricing_user_prompt(const std::string& prefix, const std::string& plans,
                                const std::string& insights,
                                const std::string& market_data_block);

}  // namespace econagents

#endif
