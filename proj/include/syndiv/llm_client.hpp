#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syndiv/generation.hpp"
#include "syndiv/http_transport.hpp"

namespace syndiv {

/// Chat-completion call against an OpenAI-compatible endpoint. Sends the
/// rendered prompts with every sampling field; if the endpoint rejects the
/// non-universal fields (top_k, repetition_penalty) with a 400 naming them,
/// they are dropped with a warning and the request retried once.
/// Transport failures and 5xx retry with exponential backoff up to
/// policy.max_retries; 401/403 fail immediately as AuthFailure; 429 honors
/// Retry-After. Returns the first completion's text.
std::string generate(const GenerationTask& task, const GenerationConfig& config,
                     HttpTransport& transport, const RetryPolicy& policy = {},
                     const std::string& api_key = "");

/// Month in the archive, e.g. {2025, 2}.
struct ArchiveMonth {
  int year = 0;
  int month = 0;
};

/// Parses `YYYY-MM` or an inclusive range `YYYY-MM:YYYY-MM`.
std::vector<ArchiveMonth> parse_month_range(const std::string& text);

/// Fetches one archive month per request from `{endpoint}/{year}/{month}.json`
/// and keeps every article with a headline and a lead paragraph of at least
/// three tokens.
std::vector<GenerationTask> fetch_headlines(const std::string& endpoint,
                                            const std::vector<ArchiveMonth>& months,
                                            HttpTransport& transport,
                                            const RetryPolicy& policy = {},
                                            const std::string& api_key = "");

/// Task-file round trip (JSONL of GenerationTask).
std::string tasks_to_jsonl(const std::vector<GenerationTask>& tasks);
std::vector<GenerationTask> load_tasks_jsonl(const std::string& path);

}  // namespace syndiv
