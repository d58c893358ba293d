#include "fiwi/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fiwi {

namespace {

constexpr size_t kMaxSupport = 4096;

std::int64_t align_up(std::int64_t bits, std::int64_t alignment) {
  if (alignment <= 0) return bits;
  return (bits + alignment - 1) / alignment * alignment;
}

double pow_one_minus(double p_b, double bits) {
  // (1-p_b)^bits without underflow surprises for large exponents
  return std::exp(bits * std::log1p(-p_b));
}

using Pmf = std::vector<std::pair<std::int64_t, double>>;

// Mass-preserving quantile rebinning for pathological supports.
Pmf rebin(const Pmf& in) {
  if (in.size() <= kMaxSupport) return in;
  Pmf out;
  out.reserve(kMaxSupport);
  const double target = 1.0 / static_cast<double>(kMaxSupport);
  double acc_p = 0.0, acc_px = 0.0;
  size_t bins_left = kMaxSupport;
  size_t items_left = in.size();
  for (const auto& [x, p] : in) {
    acc_p += p;
    acc_px += p * static_cast<double>(x);
    --items_left;
    if ((acc_p >= target && bins_left > 1 && items_left >= bins_left - 1) || items_left == 0) {
      out.emplace_back(static_cast<std::int64_t>(std::llround(acc_px / acc_p)), acc_p);
      acc_p = acc_px = 0.0;
      --bins_left;
    }
  }
  return out;
}

Pmf convolve(const Pmf& a, const Pmf& b) {
  std::map<std::int64_t, double> acc;
  for (const auto& [xa, pa] : a)
    for (const auto& [xb, pb] : b) acc[xa + xb] += pa * pb;
  Pmf out(acc.begin(), acc.end());
  return rebin(out);
}

}  // namespace

AggregationConfig AggregationConfig::amsdu(bool vht) {
  AggregationConfig cfg;
  cfg.scheme = AggScheme::AMsdu;
  cfg.max_aggregate_bits = (vht ? 11406 : 7935) * 8;
  cfg.subframe_overhead_bits = 14 * 8;
  cfg.alignment_bits = 32;
  return cfg;
}

AggregationConfig AggregationConfig::ampdu(bool vht) {
  AggregationConfig cfg;
  cfg.scheme = AggScheme::AMpdu;
  cfg.max_aggregate_bits = (vht ? 1048575LL : 65535LL) * 8;
  cfg.subframe_overhead_bits = 4 * 8;
  cfg.alignment_bits = 32;
  return cfg;
}

int frames_per_aggregate(const FrameLengthDist& dist, const AggregationConfig& cfg) {
  const std::int64_t subframe =
      align_up(dist.max_bits() + cfg.subframe_overhead_bits, cfg.alignment_bits);
  if (subframe > cfg.max_aggregate_bits)
    throw AggregationError("single frame exceeds the maximum aggregate size");
  const std::int64_t n = cfg.max_aggregate_bits / subframe;
  return static_cast<int>(std::max<std::int64_t>(1, n));
}

AggregateDist aggregate_distribution(const FrameLengthDist& dist, const AggregationConfig& cfg) {
  AggregateDist out;
  out.frames_per_aggregate = frames_per_aggregate(dist, cfg);
  Pmf acc = dist.pmf();
  for (int k = 1; k < out.frames_per_aggregate; ++k) acc = convolve(acc, dist.pmf());
  out.pmf = std::move(acc);
  for (const auto& [x, p] : out.pmf) out.mean_bits += p * static_cast<double>(x);
  out.longest_mean_bits = longest_aggregate_mean(out);
  return out;
}

double longest_aggregate_mean(const AggregateDist& agg) {
  // E[max(X1,X2)] = sum_x x * (F(x)^2 - F(x-)^2) over the discrete support
  double mean = 0.0, cdf_prev = 0.0;
  for (const auto& [x, p] : agg.pmf) {
    const double cdf = cdf_prev + p;
    mean += static_cast<double>(x) * (cdf * cdf - cdf_prev * cdf_prev);
    cdf_prev = cdf;
  }
  return mean;
}

double aggregate_error_prob(const FrameLengthDist& dist, const AggregateDist& agg,
                            const AggregationConfig& cfg, double bit_error_rate,
                            std::int64_t mac_header_bits, std::int64_t fcs_bits) {
  if (bit_error_rate < 0.0 || bit_error_rate >= 1.0)
    throw AggregationError("bit error rate must lie in [0,1)");
  if (bit_error_rate == 0.0) return 0.0;
  const double overhead = static_cast<double>(mac_header_bits + fcs_bits);
  if (cfg.scheme == AggScheme::AMsdu) {
    double pe = 0.0;
    for (const auto& [x, p] : agg.pmf)
      pe += p * (1.0 - pow_one_minus(bit_error_rate, static_cast<double>(x) + overhead));
    return pe;
  }
  // A-MPDU: the aggregate is retransmitted only when every constituent MPDU
  // (frame plus its own header and FCS) is hit, i.i.d. across subframes.
  double per_frame = 0.0;
  for (const auto& [x, p] : dist.pmf())
    per_frame += p * (1.0 - pow_one_minus(bit_error_rate, static_cast<double>(x) + overhead));
  return std::pow(per_frame, agg.frames_per_aggregate);
}

}  // namespace fiwi
