#include "syndiv/distribution.hpp"

#include <sstream>

namespace syndiv {

const char* to_string(LabelCategory category) {
  return category == LabelCategory::construction ? "construction" : "lextype";
}

const char* to_string(PunctFilter filter) {
  switch (filter) {
    case PunctFilter::all: return "all";
    case PunctFilter::punct_only: return "punct_only";
    case PunctFilter::no_punct: return "no_punct";
  }
  return "all";
}

LabelCategory category_from_string(std::string_view text) {
  if (text == "construction") {
    return LabelCategory::construction;
  }
  if (text == "lextype") {
    return LabelCategory::lextype;
  }
  throw Error(ErrorKind::UsageError, "unknown category '" + std::string(text) + "'");
}

PunctFilter filter_from_string(std::string_view text) {
  if (text == "all") {
    return PunctFilter::all;
  }
  if (text == "punct_only") {
    return PunctFilter::punct_only;
  }
  if (text == "no_punct") {
    return PunctFilter::no_punct;
  }
  throw Error(ErrorKind::UsageError, "unknown punctuation filter '" + std::string(text) + "'");
}

TypeDistribution::TypeDistribution(LabelCategory category, PunctFilter filter, Counts counts,
                                   std::string source)
    : category_(category), filter_(filter), counts_(std::move(counts)),
      source_(std::move(source)) {
  // Zero-count labels are absent by invariant; an empty table is permitted
  // so merge has an identity, but metrics over it raise EmptyDistribution.
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
    } else {
      total_ += it->second;
      ++it;
    }
  }
}

TypeDistribution build_distribution(const Corpus& corpus, LabelCategory category,
                                    PunctFilter punct_filter,
                                    const PunctuationConfig& punct_config,
                                    const BuildOptions& options) {
  if (category == LabelCategory::construction && punct_filter != PunctFilter::all) {
    throw Error(ErrorKind::FilterOnConstructions,
                "punctuation filters apply to lexical types only");
  }
  TypeDistribution::Counts counts;
  for (const ItemRecord& item : corpus.items) {
    if (!item.effectively_parsed()) {
      continue;
    }
    const LabelCounts& labels = category == LabelCategory::construction
                                    ? item.construction_labels
                                    : item.lextype_labels;
    for (const auto& [label, count] : labels) {
      if (!options.include_unknown && label == kUnknownLextype) {
        continue;
      }
      if (punct_filter != PunctFilter::all) {
        bool punct = punct_config.is_punctuation(label);
        if (punct != (punct_filter == PunctFilter::punct_only)) {
          continue;
        }
      }
      counts[label] += count;
    }
  }
  if (counts.empty()) {
    throw Error(ErrorKind::EmptyDistribution,
                "no parsed items contribute to " + std::string(to_string(category)) +
                    " distribution of corpus '" + corpus.name + "'");
  }
  return TypeDistribution(category, punct_filter, std::move(counts), corpus.name);
}

TypeDistribution merge(const TypeDistribution& first, const TypeDistribution& second) {
  if (first.category() != second.category()) {
    throw Error(ErrorKind::CategoryMismatch,
                std::string("cannot merge ") + to_string(first.category()) + " with " +
                    to_string(second.category()));
  }
  if (first.filter() != second.filter()) {
    throw Error(ErrorKind::CategoryMismatch,
                std::string("cannot merge filter ") + to_string(first.filter()) + " with " +
                    to_string(second.filter()));
  }
  TypeDistribution::Counts counts = first.counts();
  for (const auto& [label, count] : second.counts()) {
    counts[label] += count;
  }
  return TypeDistribution(first.category(), first.filter(), std::move(counts),
                          first.source() + "+" + second.source());
}

std::map<std::string, double> relative_frequencies(const TypeDistribution& distribution) {
  if (distribution.total() == 0) {
    throw Error(ErrorKind::EmptyDistribution, "distribution has no tokens");
  }
  std::map<std::string, double> freqs;
  auto n = static_cast<double>(distribution.total());
  for (const auto& [label, count] : distribution.counts()) {
    freqs[label] = static_cast<double>(count) / n;
  }
  return freqs;
}

std::string distribution_to_csv(const TypeDistribution& distribution) {
  std::ostringstream out;
  out << "# category=" << to_string(distribution.category())
      << " filter=" << to_string(distribution.filter()) << " N=" << distribution.total()
      << " S=" << distribution.richness() << " source=" << distribution.source() << "\n";
  out << "label,count\n";
  for (const auto& [label, count] : distribution.counts()) {
    out << label << "," << count << "\n";
  }
  return out.str();
}

}  // namespace syndiv
