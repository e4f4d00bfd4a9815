#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "syndiv/corpus.hpp"
#include "syndiv/punctuation.hpp"

namespace syndiv {

enum class LabelCategory { construction, lextype };
enum class PunctFilter { all, punct_only, no_punct };

const char* to_string(LabelCategory category);
const char* to_string(PunctFilter filter);
LabelCategory category_from_string(std::string_view text);
PunctFilter filter_from_string(std::string_view text);

/// Frequency table over type labels for one corpus slice. Immutable once
/// built: counts are all >= 1, N is their sum, S the number of distinct
/// labels.
class TypeDistribution {
 public:
  using Counts = std::map<std::string, std::uint64_t>;

  TypeDistribution(LabelCategory category, PunctFilter filter, Counts counts,
                   std::string source);

  LabelCategory category() const { return category_; }
  PunctFilter filter() const { return filter_; }
  const Counts& counts() const { return counts_; }
  const std::string& source() const { return source_; }

  std::uint64_t total() const { return total_; }            // N
  std::uint64_t richness() const { return counts_.size(); }  // S

 private:
  LabelCategory category_;
  PunctFilter filter_;
  Counts counts_;
  std::string source_;
  std::uint64_t total_ = 0;
};

struct BuildOptions {
  /// The reserved unknown-lextype bucket is dropped unless requested.
  bool include_unknown = false;
};

/// Pools label counts over all (effectively) parsed items of the corpus.
/// punct_filter other than `all` applies classify_punctuation per label and
/// is only valid for the lextype category (FilterOnConstructions otherwise).
/// Throws EmptyDistribution when nothing contributes.
TypeDistribution build_distribution(const Corpus& corpus, LabelCategory category,
                                    PunctFilter punct_filter = PunctFilter::all,
                                    const PunctuationConfig& punct_config = {},
                                    const BuildOptions& options = {});

/// Pointwise sum of counts; sources concatenated with '+'. Both inputs must
/// share category and punctuation-filter provenance (CategoryMismatch).
TypeDistribution merge(const TypeDistribution& first, const TypeDistribution& second);

/// p_i = count_i / N; the values sum to 1 within 1e-12.
std::map<std::string, double> relative_frequencies(const TypeDistribution& distribution);

/// Two-column CSV `label,count` preceded by a comment line with the
/// category, filter, N, S and source.
std::string distribution_to_csv(const TypeDistribution& distribution);

}  // namespace syndiv
