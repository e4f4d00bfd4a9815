#pragma once

#include <string>
#include <vector>

#include "syndiv/corpus.hpp"
#include "syndiv/distribution.hpp"

namespace syndiv {

enum class PreferredBy { first, second };

/// Per-label share of the divergence between two corpora. `tie` marks
/// labels with exactly equal relative frequencies (reported as `first`).
struct TypeContribution {
  std::string label;
  double contribution = 0.0;  // nats, >= 0
  PreferredBy preferred_by = PreferredBy::first;
  bool tie = false;
  double p_first = 0.0;
  double p_second = 0.0;
};

enum class RankStat { jsd_contribution, freq_delta };

RankStat rank_stat_from_string(std::string_view text);
const char* to_string(RankStat stat);

struct ComparisonReport {
  std::string first_name;
  std::string second_name;
  LabelCategory category = LabelCategory::construction;
  PunctFilter filter = PunctFilter::all;
  double total_jsd = 0.0;
  RankStat stat = RankStat::jsd_contribution;
  std::vector<TypeContribution> ranked;  // contribution desc, then label asc
};

/// Jensen-Shannon divergence in nats between the relative-frequency vectors
/// over the union support, mixture weight 1/2. Symmetric, in [0, ln 2],
/// zero iff the relative frequencies are equal. Absent labels contribute
/// probability exactly 0; no smoothing.
double jsd(const TypeDistribution& first, const TypeDistribution& second);

/// Ranks labels by contribution_t = 1/2 p1 ln(p1/m) + 1/2 p2 ln(p2/m) with
/// m = (p1+p2)/2 and 0 ln(0/x) := 0; contributions over the union support
/// sum to jsd(first, second). With RankStat::freq_delta the ranking key is
/// |p1 - p2| instead (total_jsd still reports the JSD). The list is
/// truncated to top_k.
ComparisonReport rank_distinctive(const TypeDistribution& first,
                                  const TypeDistribution& second, std::size_t top_k,
                                  RankStat stat = RankStat::jsd_contribution);

/// Up to k sentences from items whose label multiset contains `label`,
/// shortest first (ties by id). Throws UnknownLabel when no item has it.
std::vector<std::string> find_examples(const Corpus& corpus, const std::string& label,
                                       LabelCategory category, std::size_t k);

/// CSV `rank,label,contribution,preferred_by,p_first,p_second`.
std::string comparison_to_csv(const ComparisonReport& report);

/// Human-readable table in the style of the distinctive-type tables: label,
/// preferred-by, example sentence (constituent column left blank).
std::string comparison_to_table(const ComparisonReport& report,
                                const std::vector<std::vector<std::string>>& examples);

}  // namespace syndiv
