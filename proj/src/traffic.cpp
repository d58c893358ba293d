#include "fiwi/traffic.hpp"

#include <algorithm>
#include <cmath>

namespace fiwi {

FrameLengthDist::FrameLengthDist(std::vector<std::pair<std::int64_t, double>> pmf)
    : pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw TrafficError("empty frame length pmf");
  std::sort(pmf_.begin(), pmf_.end());
  double total = 0.0;
  for (const auto& [len, p] : pmf_) {
    if (len <= 0) throw TrafficError("frame length must be positive");
    if (p < 0.0) throw TrafficError("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw TrafficError("pmf does not sum to 1");
  for (const auto& [len, p] : pmf_) mean_ += p * static_cast<double>(len);
  for (const auto& [len, p] : pmf_) {
    const double d = static_cast<double>(len) - mean_;
    variance_ += p * d * d;
  }
}

FrameLengthDist FrameLengthDist::fixed(std::int64_t bits) {
  return FrameLengthDist({{bits, 1.0}});
}

std::pair<double, double> dist_moments(const FrameLengthDist& dist) {
  return {dist.mean_bits(), dist.variance_bits2()};
}

namespace {

std::vector<NodeId> stas_of(const Topology& topo) {
  std::vector<NodeId> out;
  for (NodeId n : topo.traffic_sources())
    if (topo.role(n) == NodeRole::Sta) out.push_back(n);
  return out;
}

std::vector<NodeId> onus_of(const Topology& topo) {
  std::vector<NodeId> out;
  for (NodeId n : topo.traffic_sources())
    if (topo.role(n) == NodeRole::Onu || topo.role(n) == NodeRole::OnuMpp) out.push_back(n);
  return out;
}

}  // namespace

TrafficMatrix generate_matrix(const ScenarioSpec& spec, const Topology& topo) {
  const int dim = topo.traffic_index_count();
  TrafficMatrix s = TrafficMatrix::Zero(dim, dim);
  if (spec.alpha < 0.0) throw TrafficError("alpha must be nonnegative");
  if (spec.b < 1.0) throw TrafficError("B must be >= 1");

  const std::vector<NodeId> stas = stas_of(topo);
  const std::vector<NodeId> onus = onus_of(topo);
  const std::vector<NodeId> sources = topo.traffic_sources();

  switch (spec.kind) {
    case ScenarioKind::P2P: {
      if (stas.size() < 2) throw TrafficError("P2P requires at least two STAs");
      const double per = spec.alpha / static_cast<double>(stas.size() - 1);
      for (NodeId i : stas)
        for (NodeId j : stas)
          if (i != j) s(i, j) = per;
      break;
    }
    case ScenarioKind::Upstream: {
      if (stas.empty()) throw TrafficError("upstream scenario requires STAs");
      if (!topo.is_traffic_endpoint(0)) throw TrafficError("upstream scenario requires the OLT");
      for (NodeId i : stas) s(i, 0) = spec.alpha;
      break;
    }
    case ScenarioKind::Uniform:
    case ScenarioKind::Nonuniform: {
      // Combined network: every endpoint spreads over all other endpoints.
      // PON-only (no STAs): ONUs spread over the remaining ONUs.
      // WMN-only (no fiber): STAs spread over the remaining STAs.
      std::vector<NodeId> pool;
      if (stas.empty())
        pool = onus;
      else if (!topo.any_fiber())
        pool = stas;
      else
        pool = sources;
      if (pool.size() < 2) throw TrafficError("uniform scenario needs at least two endpoints");
      std::set<NodeId> hot = spec.hot_set;
      if (spec.kind == ScenarioKind::Nonuniform && hot.empty()) {
        // First two ONUs plus the STAs sharing their gateway zones.
        for (size_t k = 0; k < onus.size() && k < 2; ++k) {
          NodeId onu = onus[k];
          hot.insert(onu);
          for (NodeId st : stas)
            if (topo.shared_zone(onu, st)) hot.insert(st);
        }
      }
      for (NodeId i : pool) {
        double rate = spec.alpha;
        if (spec.kind == ScenarioKind::Nonuniform && hot.count(i))
          rate *= 1.0 + spec.surcharge;
        const double per = rate / static_cast<double>(pool.size() - 1);
        for (NodeId j : pool)
          if (i != j) s(i, j) = per;
      }
      break;
    }
    case ScenarioKind::BMatrix: {
      std::vector<NodeId> optical;
      if (topo.is_traffic_endpoint(0)) optical.push_back(0);
      optical.insert(optical.end(), onus.begin(), onus.end());
      for (NodeId i : optical)
        for (NodeId j : optical)
          if (i != j) s(i, j) = spec.b * spec.alpha;
      for (NodeId i : stas) {
        for (NodeId j : sources)
          if (i != j) s(i, j) = spec.alpha;
        for (NodeId j : optical) s(j, i) = spec.alpha;
      }
      break;
    }
  }
  return s;
}

}  // namespace fiwi
