#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "syndiv/distribution.hpp"

namespace syndiv {

enum class DiversityMetric { shannon, simpson };

const char* to_string(DiversityMetric metric);
DiversityMetric metric_from_string(std::string_view text);

/// Shannon index H' = -sum p_i ln(p_i), in nats. 0 <= H' <= ln S, with
/// equality at ln S iff the distribution is uniform.
double shannon(const TypeDistribution& distribution);

/// Simpson index D = 1 - sum p_i^2, the plug-in form without finite-sample
/// correction. 0 <= D <= 1 - 1/S.
double simpson(const TypeDistribution& distribution);

/// Same indices over a raw count vector (zero counts are skipped).
double shannon_from_counts(std::span<const std::uint64_t> counts);
double simpson_from_counts(std::span<const std::uint64_t> counts);

enum class ResampleMode {
  automatic,            // without replacement below N, with replacement at N
  with_replacement,     // classic bootstrap
  without_replacement,  // rarefaction
};

ResampleMode resample_mode_from_string(std::string_view text);
const char* to_string(ResampleMode mode);

struct BootstrapParams {
  std::uint64_t target_n = 0;       // 0 means full N
  std::uint32_t iterations = 10000; // paper caps bootstrap at 10,000
  std::uint64_t seed = 1;
  ResampleMode mode = ResampleMode::automatic;
  unsigned threads = 1;
};

struct DiversityEstimate {
  DiversityMetric metric = DiversityMetric::shannon;
  double point = 0.0;      // metric on the full distribution
  double boot_mean = 0.0;
  double ci_low = 0.0;     // 2.5th percentile of replicates
  double ci_high = 0.0;    // 97.5th percentile
  std::uint32_t iterations = 0;
  std::uint64_t target_n = 0;
  std::uint64_t seed = 0;
};

/// Resamples target_n of the N tokens per replicate and computes the metric
/// on each. Replicate i draws from an RNG seeded by replicate_seed(seed, i),
/// so the estimate is bit-identical for any thread count. The confidence
/// interval uses outward-rounded order statistics: the largest order
/// statistic whose expected quantile is <= 2.5% and the smallest >= 97.5%,
/// which errs on the wide side at low iteration counts.
/// Throws BadTargetN unless 1 <= target_n <= N and BadIterations unless
/// 1 <= iterations <= 10000.
DiversityEstimate bootstrap_diversity(const TypeDistribution& distribution,
                                      DiversityMetric metric,
                                      const BootstrapParams& params);

/// CSV row `corpus,category,filter,metric,point,boot_mean,ci_low,ci_high,
/// target_n,iterations,seed` with %.6f floats.
std::string estimate_csv_header();
std::string estimate_to_csv_row(const std::string& corpus, LabelCategory category,
                                PunctFilter filter, const DiversityEstimate& estimate);

}  // namespace syndiv
