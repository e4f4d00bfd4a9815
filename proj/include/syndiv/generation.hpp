#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syndiv/error.hpp"

namespace syndiv {

/// One headline to regenerate: the original headline plus the first three
/// whitespace-delimited tokens of the human-written lead.
struct GenerationTask {
  std::string headline;
  std::string lead_three_words;
  std::string source_id;
};

/// Sampling settings sent with every request. The defaults are the fixed
/// values used for all models; override only through explicit config.
struct SamplingParams {
  double temperature = 0.7;
  double top_p = 0.92;
  int top_k = 50;
  double repetition_penalty = 1.05;
  int max_new_tokens = 1000;
  int num_return_sequences = 1;
  int num_beams = 1;
};

struct GenerationConfig {
  SamplingParams sampling;
  std::string endpoint;  // OpenAI-compatible base URL, e.g. https://host/v1
  std::string model;
  std::string credential_env = "SYNDIV_API_KEY";
};

struct PromptPair {
  std::string system;
  std::string user;
};

inline constexpr std::string_view kSystemPrompt =
    "You are a professional journalist specializing in writing news. Follow the given "
    "structure.";

inline constexpr std::string_view kUserPromptTemplate =
    "You will write a news lead paragraph using the inputs below.\n"
    "  Inputs\n"
    "  Headline: {headline}\n"
    "  LeadThreeWords: {lead_three_words}\n"
    "  Requirements - Mandatory\n"
    "  Write one paragraph of several sentences (more than one, e.g. two-three (2-3)); no "
    "title, no bullets.\n"
    "  Output format: the paragraph only, no preamble or labels.";

/// Substitutes the task into the fixed templates; a pure function of the
/// task. Throws BadTask for an empty headline or a lead_three_words field
/// that is not exactly three tokens.
PromptPair render_prompts(const GenerationTask& task);

/// Trims, strips leading `Lead:` / `Paragraph:` / `Output:` labels, and
/// keeps only the first blank-line-separated paragraph. Idempotent. Throws
/// EmptyAfterCleaning when nothing remains.
std::string clean_output(const std::string& raw);

std::vector<std::string> default_abbreviations();

/// Rule-based splitting on `.`, `!`, `?`: a terminator ends a sentence
/// unless it sits inside a decimal number or closes a token on the
/// abbreviation list. No non-whitespace character is lost.
std::vector<std::string> segment_sentences(std::string_view paragraph);
std::vector<std::string> segment_sentences(std::string_view paragraph,
                                           const std::vector<std::string>& abbreviations);

/// Splits a lead paragraph into its first three whitespace-delimited
/// tokens; empty when it has fewer than three.
std::string lead_three_words(std::string_view lead);

}  // namespace syndiv
