#include "syndiv/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace syndiv {

const char* to_string(RankStat stat) {
  return stat == RankStat::jsd_contribution ? "jsd" : "freq-delta";
}

RankStat rank_stat_from_string(std::string_view text) {
  if (text == "jsd") {
    return RankStat::jsd_contribution;
  }
  if (text == "freq-delta") {
    return RankStat::freq_delta;
  }
  throw Error(ErrorKind::UsageError, "unknown ranking statistic '" + std::string(text) + "'");
}

namespace {

void check_comparable(const TypeDistribution& first, const TypeDistribution& second) {
  if (first.category() != second.category() || first.filter() != second.filter()) {
    throw Error(ErrorKind::CategoryMismatch,
                std::string("cannot compare ") + to_string(first.category()) + "/" +
                    to_string(first.filter()) + " with " + to_string(second.category()) + "/" +
                    to_string(second.filter()));
  }
  if (first.total() == 0 || second.total() == 0) {
    throw Error(ErrorKind::EmptyDistribution, "cannot compare an empty distribution");
  }
}

// 1/2 p ln(p/m), with the 0 ln(0/x) := 0 convention.
double half_kl_term(double p, double m) {
  return p > 0.0 ? 0.5 * p * std::log(p / m) : 0.0;
}

std::vector<TypeContribution> contributions_over_union(const TypeDistribution& first,
                                                       const TypeDistribution& second) {
  auto n1 = static_cast<double>(first.total());
  auto n2 = static_cast<double>(second.total());
  const auto& c1 = first.counts();
  const auto& c2 = second.counts();

  std::vector<TypeContribution> out;
  auto it1 = c1.begin();
  auto it2 = c2.begin();
  while (it1 != c1.end() || it2 != c2.end()) {
    std::string label;
    double p1 = 0.0, p2 = 0.0;
    if (it2 == c2.end() || (it1 != c1.end() && it1->first < it2->first)) {
      label = it1->first;
      p1 = static_cast<double>(it1->second) / n1;
      ++it1;
    } else if (it1 == c1.end() || it2->first < it1->first) {
      label = it2->first;
      p2 = static_cast<double>(it2->second) / n2;
      ++it2;
    } else {
      label = it1->first;
      p1 = static_cast<double>(it1->second) / n1;
      p2 = static_cast<double>(it2->second) / n2;
      ++it1;
      ++it2;
    }
    double m = 0.5 * (p1 + p2);
    TypeContribution contribution;
    contribution.label = std::move(label);
    contribution.contribution = half_kl_term(p1, m) + half_kl_term(p2, m);
    contribution.tie = (p1 == p2);
    contribution.preferred_by = p1 >= p2 ? PreferredBy::first : PreferredBy::second;
    contribution.p_first = p1;
    contribution.p_second = p2;
    out.push_back(std::move(contribution));
  }
  return out;
}

}  // namespace

double jsd(const TypeDistribution& first, const TypeDistribution& second) {
  check_comparable(first, second);
  double total = 0.0;
  for (const TypeContribution& c : contributions_over_union(first, second)) {
    total += c.contribution;
  }
  return total;
}

ComparisonReport rank_distinctive(const TypeDistribution& first,
                                  const TypeDistribution& second, std::size_t top_k,
                                  RankStat stat) {
  check_comparable(first, second);
  if (top_k < 1) {
    throw Error(ErrorKind::BadTopK, "top_k must be >= 1");
  }

  ComparisonReport report;
  report.first_name = first.source();
  report.second_name = second.source();
  report.category = first.category();
  report.filter = first.filter();
  report.stat = stat;
  report.ranked = contributions_over_union(first, second);
  for (const TypeContribution& c : report.ranked) {
    report.total_jsd += c.contribution;
  }

  auto key = [stat](const TypeContribution& c) {
    return stat == RankStat::jsd_contribution ? c.contribution
                                              : std::abs(c.p_first - c.p_second);
  };
  std::sort(report.ranked.begin(), report.ranked.end(),
            [&](const TypeContribution& a, const TypeContribution& b) {
              double ka = key(a), kb = key(b);
              if (ka != kb) {
                return ka > kb;
              }
              return a.label < b.label;
            });
  if (report.ranked.size() > top_k) {
    report.ranked.resize(top_k);
  }
  return report;
}

std::vector<std::string> find_examples(const Corpus& corpus, const std::string& label,
                                       LabelCategory category, std::size_t k) {
  if (k < 1) {
    throw Error(ErrorKind::BadTopK, "k must be >= 1");
  }
  std::vector<const ItemRecord*> matches;
  for (const ItemRecord& item : corpus.items) {
    const LabelCounts& labels = category == LabelCategory::construction
                                    ? item.construction_labels
                                    : item.lextype_labels;
    if (labels.contains(label)) {
      matches.push_back(&item);
    }
  }
  if (matches.empty()) {
    throw Error(ErrorKind::UnknownLabel,
                "label '" + label + "' does not occur in corpus '" + corpus.name + "'");
  }
  std::sort(matches.begin(), matches.end(), [](const ItemRecord* a, const ItemRecord* b) {
    if (a->token_count != b->token_count) {
      return a->token_count < b->token_count;
    }
    return a->id < b->id;
  });
  std::vector<std::string> sentences;
  for (const ItemRecord* item : matches) {
    if (sentences.size() == k) {
      break;
    }
    sentences.push_back(item->sentence);
  }
  return sentences;
}

std::string comparison_to_csv(const ComparisonReport& report) {
  std::string out = "rank,label,contribution,preferred_by,p_first,p_second\n";
  char buffer[512];
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    const TypeContribution& c = report.ranked[i];
    std::snprintf(buffer, sizeof(buffer), "%zu,%s,%.6f,%s,%.6f,%.6f\n", i + 1,
                  c.label.c_str(), c.contribution,
                  c.preferred_by == PreferredBy::first ? "first" : "second", c.p_first,
                  c.p_second);
    out += buffer;
  }
  return out;
}

std::string comparison_to_table(const ComparisonReport& report,
                                const std::vector<std::vector<std::string>>& examples) {
  std::ostringstream out;
  out << (report.category == LabelCategory::construction ? "Construction" : "Lex type")
      << "s contributing the most to statistical differences: " << report.first_name
      << " vs " << report.second_name << "\n";
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "(filter=%s, stat=%s, total JSD=%.6f nats)\n\n",
                to_string(report.filter), to_string(report.stat), report.total_jsd);
  out << buffer;
  out << "Rank | Label | Preferred by | Example Sentence | Constituent\n";
  out << "-----+-------+--------------+------------------+------------\n";
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    const TypeContribution& c = report.ranked[i];
    std::string who = c.preferred_by == PreferredBy::first ? report.first_name
                                                           : report.second_name;
    if (c.tie) {
      who += " (tie)";
    }
    std::string example;
    if (i < examples.size() && !examples[i].empty()) {
      example = examples[i].front();
    }
    out << i + 1 << " | " << c.label << " | " << who << " | " << example << " | \n";
  }
  return out.str();
}

}  // namespace syndiv
