#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "fiwi/topology.hpp"

namespace fiwi {

struct TrafficError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Discrete frame-length pmf, lengths in bits.
class FrameLengthDist {
 public:
  FrameLengthDist() = default;
  explicit FrameLengthDist(std::vector<std::pair<std::int64_t, double>> pmf);

  const std::vector<std::pair<std::int64_t, double>>& pmf() const { return pmf_; }
  double mean_bits() const { return mean_; }
  double variance_bits2() const { return variance_; }
  std::int64_t max_bits() const { return pmf_.back().first; }

  static FrameLengthDist fixed(std::int64_t bits);

 private:
  std::vector<std::pair<std::int64_t, double>> pmf_;  // sorted by length
  double mean_ = 0.0;
  double variance_ = 0.0;
};

/// (mean, variance) of the frame length, exact discrete moments.
std::pair<double, double> dist_moments(const FrameLengthDist& dist);

/// Frames/s between every ordered pair of traffic endpoints.
/// Row/column i is node id i (OLT=0, ONUs 1..O, STAs O+1..O+N).
using TrafficMatrix = Eigen::MatrixXd;

enum class ScenarioKind { P2P, Upstream, Uniform, Nonuniform, BMatrix };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::P2P;
  double alpha = 0.0;        // frames/s generated per source
  double b = 1.0;            // optical-pair multiplier, BMatrix only
  std::set<NodeId> hot_set;  // Nonuniform; empty = default (first two ONUs + their
                             // gateway-zone STAs)
  double surcharge = 0.30;   // extra traffic fraction for hot sources
};

TrafficMatrix generate_matrix(const ScenarioSpec& spec, const Topology& topo);

}  // namespace fiwi
