#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "syndiv/corpus.hpp"

namespace syndiv {

/// Per-corpus parsing aggregates. Percentages are over all items; CPU and
/// memory means are over parsed items carrying the field, and stay absent
/// when no item carries it.
struct ParseStats {
  std::size_t items = 0;
  double parsed_pct = 0.0;
  double mean_tokens = 0.0;
  double short_pct = 0.0;     // token_count <= 15
  double fragment_pct = 0.0;
  std::optional<double> mean_cpu;
  std::optional<double> mean_mem;
  double over_limit_pct = 0.0;
  std::optional<double> ram_limit_gb;
};

/// Throws EmptyCorpus when the corpus has no items.
ParseStats aggregate_stats(const Corpus& corpus);

struct LengthBin {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;  // inclusive
  std::size_t count = 0;
  std::optional<double> mean_cpu;
  std::optional<double> mean_mem;
};

/// The four fixed bins 31-35, 36-40, 41-45, 46-50 tokens; parsed items
/// outside 31-50 are excluded.
struct LengthBinTable {
  std::array<LengthBin, 4> bins;
};

LengthBinTable binned_costs(const Corpus& corpus);

/// Fixed-width text and CSV renditions with the profile-table column order:
/// items, parsed %, length, short %, fragment %, time, space, >limit %.
std::string parse_stats_table(const std::vector<std::pair<std::string, ParseStats>>& rows);
std::string parse_stats_csv(const std::vector<std::pair<std::string, ParseStats>>& rows);
std::string binned_costs_table(const std::vector<std::pair<std::string, LengthBinTable>>& rows);
std::string binned_costs_csv(const std::vector<std::pair<std::string, LengthBinTable>>& rows);

}  // namespace syndiv
