#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiwi {

using NodeId = int;   // OLT = 0, ONUs = 1..O, STAs = O+1..O+N, relay MPs/MAPs after
using ZoneId = int;   // 1-based
using RadioId = int;  // dense, assigned by the builder

enum class NodeRole { Olt, Onu, OnuMpp, MpRelay, Map, Sta };

enum class PonKind { None, Tdm, WdmBroadcast, WrMultistage };

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Radio {
  RadioId id = -1;
  NodeId owner = -1;
  ZoneId zone = -1;
};

/// One contention domain; collisions happen only among its members.
struct Zone {
  ZoneId id = -1;
  std::vector<RadioId> relay_members;   // radios of multi-radio relay MPs
  std::vector<RadioId> single_members;  // radios of single-radio nodes
  std::vector<RadioId> members;         // union, sorted by radio id
};

/// Fiber plant shared by all PON kinds. WR multi-stage PONs carry per-sector
/// rates/propagation; TDM and broadcast WDM use a single rate c and delay psi
/// (stored as one entry).
struct FiberPlant {
  PonKind kind = PonKind::None;
  int channel_count = 0;                 // Lambda
  std::vector<int> sector_sizes;         // per-sector ONU counts (WR); {O} otherwise
  std::vector<double> channel_rate_bps;  // per sector (WR) or single c
  std::vector<double> one_way_prop_s;    // per sector (WR) or single psi
};

struct FailureSet {
  std::set<NodeId> failed_distribution_fibers;  // ONU ids whose fiber is cut
  std::set<NodeId> failed_nodes;                // nodes removed entirely
};

// Declarative description consumed by build_topology.
struct OnuSpec {
  NodeId id = -1;
  bool mpp = false;
  ZoneId zone = -1;  // MPP radio zone; ignored unless mpp
};
struct StaSpec {
  NodeId id = -1;
  ZoneId zone = -1;
};
struct RelaySpec {
  NodeId id = -1;
  std::vector<ZoneId> zones;  // one radio per listed zone
  bool is_map = false;        // MAPs carry exactly one radio
};
struct TopologySpec {
  int version = 1;
  int zone_count = 0;
  std::vector<OnuSpec> onus;
  std::vector<StaSpec> stas;
  std::vector<RelaySpec> relays;
};

class Topology {
 public:
  int onu_count() const { return onu_count_; }
  int sta_count() const { return sta_count_; }
  int node_count() const { return static_cast<int>(roles_.size()); }
  int zone_count() const { return static_cast<int>(zones_.size()); }
  int traffic_index_count() const { return 1 + onu_count_ + sta_count_; }

  NodeRole role(NodeId n) const { return roles_.at(n); }
  bool alive(NodeId n) const { return alive_.at(n); }
  bool fiber_ok(NodeId onu) const;
  bool any_fiber() const;

  const std::vector<Zone>& zones() const { return zones_; }
  const Zone& zone(ZoneId z) const { return zones_.at(z - 1); }
  const std::vector<Radio>& radios() const { return radios_; }
  const Radio& radio(RadioId r) const { return radios_.at(r); }
  const std::vector<RadioId>& radios_of(NodeId n) const { return node_radios_.at(n); }

  /// Radio of node n operating in zone z, if any.
  std::optional<RadioId> radio_in_zone(NodeId n, ZoneId z) const;

  /// Lowest-id zone shared by both nodes, if they are wireless neighbors.
  std::optional<ZoneId> shared_zone(NodeId a, NodeId b) const;

  /// Nodes reachable in one wireless hop, ascending ids.
  const std::vector<NodeId>& wireless_neighbors(NodeId n) const { return neighbors_.at(n); }

  bool is_traffic_endpoint(NodeId n) const;
  bool may_relay(NodeId n) const;

  /// Source/destination-capable nodes in ascending id order.
  std::vector<NodeId> traffic_sources() const;

  int wireless_capable_node_count() const;
  int relay_radio_count() const;

 private:
  friend Topology build_topology(const TopologySpec& spec);
  friend Topology apply_failures(const Topology& topo, const FailureSet& failures);
  void rebuild_derived();

  int onu_count_ = 0;
  int sta_count_ = 0;
  std::vector<NodeRole> roles_;
  std::vector<bool> alive_;
  std::vector<bool> fiber_ok_;  // indexed by ONU id (entry 0 unused)
  std::vector<Zone> zones_;
  std::vector<Radio> radios_;
  std::vector<std::vector<RadioId>> node_radios_;
  std::vector<std::vector<NodeId>> neighbors_;
};

Topology build_topology(const TopologySpec& spec);
Topology apply_failures(const Topology& topo, const FailureSet& failures);

/// Sector (wavelength channel) serving this ONU, 1-based.
int sector_of(NodeId onu, const FiberPlant& plant);

/// Reference mesh used throughout: per island, four ONU/MPP clusters
/// (gateway zone with 2 STAs and one relay MP each), one access zone with
/// 2 STAs per MP, and a backbone chain linking the MPs; relay MPs carry
/// 3,4,4,3 radios. islands=2 doubles everything.
TopologySpec reference_topology_spec(int islands = 1);

}  // namespace fiwi
