#include "syndiv/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>
#include <vector>

#include "syndiv/rng.hpp"

namespace syndiv {

const char* to_string(DiversityMetric metric) {
  return metric == DiversityMetric::shannon ? "shannon" : "simpson";
}

DiversityMetric metric_from_string(std::string_view text) {
  if (text == "shannon") {
    return DiversityMetric::shannon;
  }
  if (text == "simpson") {
    return DiversityMetric::simpson;
  }
  throw Error(ErrorKind::UsageError, "unknown metric '" + std::string(text) + "'");
}

const char* to_string(ResampleMode mode) {
  switch (mode) {
    case ResampleMode::automatic: return "auto";
    case ResampleMode::with_replacement: return "with_replacement";
    case ResampleMode::without_replacement: return "without_replacement";
  }
  return "auto";
}

ResampleMode resample_mode_from_string(std::string_view text) {
  if (text == "auto") {
    return ResampleMode::automatic;
  }
  if (text == "with_replacement") {
    return ResampleMode::with_replacement;
  }
  if (text == "without_replacement") {
    return ResampleMode::without_replacement;
  }
  throw Error(ErrorKind::UsageError, "unknown resample mode '" + std::string(text) + "'");
}

double shannon_from_counts(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) {
    total += c;
  }
  if (total == 0) {
    throw Error(ErrorKind::EmptyDistribution, "shannon over an empty distribution");
  }
  double h = 0.0;
  auto n = static_cast<double>(total);
  for (std::uint64_t c : counts) {
    if (c == 0) {
      continue;
    }
    double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

double simpson_from_counts(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) {
    total += c;
  }
  if (total == 0) {
    throw Error(ErrorKind::EmptyDistribution, "simpson over an empty distribution");
  }
  double sum = 0.0;
  auto n = static_cast<double>(total);
  for (std::uint64_t c : counts) {
    double p = static_cast<double>(c) / n;
    sum += p * p;
  }
  return 1.0 - sum;
}

namespace {

std::vector<std::uint64_t> count_vector(const TypeDistribution& distribution) {
  std::vector<std::uint64_t> counts;
  counts.reserve(distribution.counts().size());
  for (const auto& [label, count] : distribution.counts()) {
    counts.push_back(count);
  }
  return counts;
}

double metric_from_counts(DiversityMetric metric, std::span<const std::uint64_t> counts) {
  return metric == DiversityMetric::shannon ? shannon_from_counts(counts)
                                            : simpson_from_counts(counts);
}

/// Selection sampling (Knuth's Algorithm S): one pass over the N tokens in
/// label order, keeping each with probability needed/remaining.
void sample_without_replacement(std::span<const std::uint64_t> counts, std::uint64_t total,
                                std::uint64_t target, Rng& rng,
                                std::vector<std::uint64_t>& out) {
  out.assign(counts.size(), 0);
  std::uint64_t remaining = total;
  std::uint64_t needed = target;
  for (std::size_t i = 0; i < counts.size() && needed > 0; ++i) {
    for (std::uint64_t j = 0; j < counts[i] && needed > 0; ++j) {
      if (rng.below(remaining) < needed) {
        ++out[i];
        --needed;
      }
      --remaining;
    }
  }
}

void sample_with_replacement(std::span<const std::uint64_t> cumulative, std::uint64_t total,
                             std::uint64_t target, Rng& rng,
                             std::vector<std::uint64_t>& out) {
  out.assign(cumulative.size(), 0);
  for (std::uint64_t draw = 0; draw < target; ++draw) {
    std::uint64_t token = rng.below(total);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), token);
    ++out[static_cast<std::size_t>(it - cumulative.begin())];
  }
}

}  // namespace

double shannon(const TypeDistribution& distribution) {
  return shannon_from_counts(count_vector(distribution));
}

double simpson(const TypeDistribution& distribution) {
  return simpson_from_counts(count_vector(distribution));
}

DiversityEstimate bootstrap_diversity(const TypeDistribution& distribution,
                                      DiversityMetric metric, const BootstrapParams& params) {
  const std::uint64_t n = distribution.total();
  if (n == 0) {
    throw Error(ErrorKind::EmptyDistribution, "bootstrap over an empty distribution");
  }
  const std::uint64_t target = params.target_n == 0 ? n : params.target_n;
  if (target < 1 || target > n) {
    throw Error(ErrorKind::BadTargetN, "target_n " + std::to_string(target) +
                                           " outside [1, " + std::to_string(n) + "]");
  }
  if (params.iterations < 1 || params.iterations > 10000) {
    throw Error(ErrorKind::BadIterations, "iterations " + std::to_string(params.iterations) +
                                              " outside [1, 10000]");
  }

  const std::vector<std::uint64_t> counts = count_vector(distribution);
  bool with_replacement;
  switch (params.mode) {
    case ResampleMode::with_replacement: with_replacement = true; break;
    case ResampleMode::without_replacement: with_replacement = false; break;
    case ResampleMode::automatic: default: with_replacement = (target == n); break;
  }

  std::vector<std::uint64_t> cumulative;
  if (with_replacement) {
    cumulative.resize(counts.size());
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      running += counts[i];
      cumulative[i] = running;
    }
  }

  std::vector<double> replicates(params.iterations);
  auto run_range = [&](std::uint32_t begin, std::uint32_t end) {
    std::vector<std::uint64_t> sub;
    for (std::uint32_t i = begin; i < end; ++i) {
      Rng rng(replicate_seed(params.seed, i));
      if (with_replacement) {
        sample_with_replacement(cumulative, n, target, rng, sub);
      } else {
        sample_without_replacement(counts, n, target, rng, sub);
      }
      replicates[i] = metric_from_counts(metric, sub);
    }
  };

  unsigned threads = std::max(1u, params.threads);
  if (threads == 1 || params.iterations < 2 * threads) {
    run_range(0, params.iterations);
  } else {
    std::vector<std::thread> pool;
    std::uint32_t chunk = (params.iterations + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint32_t begin = t * chunk;
      std::uint32_t end = std::min(params.iterations, begin + chunk);
      if (begin < end) {
        pool.emplace_back(run_range, begin, end);
      }
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  double sum = 0.0;
  for (double value : replicates) {
    sum += value;
  }
  std::sort(replicates.begin(), replicates.end());

  const std::size_t b = replicates.size();
  // Order statistic k of b has expected quantile k/(b+1); round outward.
  auto lo_rank = static_cast<std::size_t>(std::floor(0.025 * (static_cast<double>(b) + 1.0)));
  auto hi_rank = static_cast<std::size_t>(std::ceil(0.975 * (static_cast<double>(b) + 1.0)));
  std::size_t lo_idx = lo_rank > 0 ? lo_rank - 1 : 0;
  std::size_t hi_idx = std::min(b - 1, hi_rank > 0 ? hi_rank - 1 : 0);

  DiversityEstimate estimate;
  estimate.metric = metric;
  estimate.point = metric_from_counts(metric, counts);
  estimate.boot_mean = sum / static_cast<double>(b);
  estimate.ci_low = replicates[lo_idx];
  estimate.ci_high = replicates[hi_idx];
  estimate.iterations = params.iterations;
  estimate.target_n = target;
  estimate.seed = params.seed;
  return estimate;
}

std::string estimate_csv_header() {
  return "corpus,category,filter,metric,point,boot_mean,ci_low,ci_high,target_n,iterations,seed";
}

std::string estimate_to_csv_row(const std::string& corpus, LabelCategory category,
                                PunctFilter filter, const DiversityEstimate& estimate) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), "%s,%s,%s,%s,%.6f,%.6f,%.6f,%.6f,%llu,%u,%llu",
                corpus.c_str(), to_string(category), to_string(filter),
                to_string(estimate.metric), estimate.point, estimate.boot_mean,
                estimate.ci_low, estimate.ci_high,
                static_cast<unsigned long long>(estimate.target_n), estimate.iterations,
                static_cast<unsigned long long>(estimate.seed));
  return buffer;
}

}  // namespace syndiv
