#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fiwi/traffic.hpp"

namespace fiwi {

struct AggregationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AggScheme { AMsdu, AMpdu };

struct AggregationConfig {
  AggScheme scheme = AggScheme::AMsdu;
  std::int64_t max_aggregate_bits = 7935 * 8;
  std::int64_t subframe_overhead_bits = 14 * 8;  // subframe header / MPDU delimiter
  std::int64_t alignment_bits = 32;              // subframes pad to 4-byte boundaries

  static AggregationConfig amsdu(bool vht = false);
  static AggregationConfig ampdu(bool vht = false);
};

/// Aggregate payload-size distribution: the frames-per-aggregate-fold
/// self-convolution of the frame length pmf.
struct AggregateDist {
  std::vector<std::pair<std::int64_t, double>> pmf;  // payload bits, ascending
  int frames_per_aggregate = 1;
  double mean_bits = 0.0;          // E[A]
  double longest_mean_bits = 0.0;  // E[A*], mean of the longer of two colliding aggregates
};

/// Frames that fit in one aggregate at the largest frame size, never below 1.
int frames_per_aggregate(const FrameLengthDist& dist, const AggregationConfig& cfg);

AggregateDist aggregate_distribution(const FrameLengthDist& dist, const AggregationConfig& cfg);

/// E[max(X1,X2)] for two independent draws from the aggregate distribution.
double longest_aggregate_mean(const AggregateDist& agg);

/// Probability that a transmitted aggregate carries at least one bit error.
/// Every transmitted unit is charged its MAC header and FCS bits: once per
/// PSDU for A-MSDU, once per MPDU subframe for A-MPDU.
double aggregate_error_prob(const FrameLengthDist& dist, const AggregateDist& agg,
                            const AggregationConfig& cfg, double bit_error_rate,
                            std::int64_t mac_header_bits, std::int64_t fcs_bits);

}  // namespace fiwi
