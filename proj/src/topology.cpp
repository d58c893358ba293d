#include "fiwi/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fiwi {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw TopologyError(msg);
}

}  // namespace

bool Topology::fiber_ok(NodeId onu) const {
  if (onu < 1 || onu > onu_count_) return false;
  return fiber_ok_[onu];
}

bool Topology::any_fiber() const {
  for (int o = 1; o <= onu_count_; ++o)
    if (fiber_ok_[o] && alive_[o]) return true;
  return false;
}

std::optional<RadioId> Topology::radio_in_zone(NodeId n, ZoneId z) const {
  for (RadioId r : node_radios_.at(n))
    if (radios_[r].zone == z) return r;
  return std::nullopt;
}

std::optional<ZoneId> Topology::shared_zone(NodeId a, NodeId b) const {
  std::optional<ZoneId> best;
  for (RadioId ra : node_radios_.at(a))
    for (RadioId rb : node_radios_.at(b))
      if (radios_[ra].zone == radios_[rb].zone)
        if (!best || radios_[ra].zone < *best) best = radios_[ra].zone;
  return best;
}

bool Topology::is_traffic_endpoint(NodeId n) const {
  if (n < 0 || n >= node_count() || !alive_[n]) return false;
  switch (roles_[n]) {
    case NodeRole::Olt:
      return any_fiber();
    case NodeRole::Onu:
    case NodeRole::OnuMpp:
      return fiber_ok_[n];
    case NodeRole::Sta:
      return true;
    default:
      return false;
  }
}

bool Topology::may_relay(NodeId n) const {
  if (n < 0 || n >= node_count() || !alive_[n]) return false;
  switch (roles_[n]) {
    case NodeRole::Olt:
    case NodeRole::OnuMpp:
    case NodeRole::MpRelay:
    case NodeRole::Map:
      return true;
    default:
      return false;
  }
}

std::vector<NodeId> Topology::traffic_sources() const {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < node_count(); ++n)
    if (is_traffic_endpoint(n)) out.push_back(n);
  return out;
}

int Topology::wireless_capable_node_count() const {
  int k = 0;
  for (NodeId n = 0; n < node_count(); ++n)
    if (alive_[n] && !node_radios_[n].empty()) ++k;
  return k;
}

int Topology::relay_radio_count() const {
  int k = 0;
  for (const Radio& r : radios_)
    if (alive_[r.owner] && roles_[r.owner] == NodeRole::MpRelay &&
        std::find(node_radios_[r.owner].begin(), node_radios_[r.owner].end(), r.id) !=
            node_radios_[r.owner].end())
      ++k;
  return k;
}

void Topology::rebuild_derived() {
  node_radios_.assign(node_count(), {});
  for (const Radio& r : radios_) node_radios_[r.owner].push_back(r.id);

  for (Zone& z : zones_) {
    z.members.clear();
    z.relay_members.clear();
    z.single_members.clear();
  }
  for (const Radio& r : radios_) {
    if (!alive_[r.owner]) continue;
    Zone& z = zones_[r.zone - 1];
    z.members.push_back(r.id);
    bool multi_radio_relay =
        roles_[r.owner] == NodeRole::MpRelay && node_radios_[r.owner].size() > 1;
    (multi_radio_relay ? z.relay_members : z.single_members).push_back(r.id);
  }
  for (Zone& z : zones_) {
    std::sort(z.members.begin(), z.members.end());
    std::sort(z.relay_members.begin(), z.relay_members.end());
    std::sort(z.single_members.begin(), z.single_members.end());
  }

  neighbors_.assign(node_count(), {});
  std::vector<std::vector<NodeId>> zone_nodes(zones_.size());
  for (const Radio& r : radios_)
    if (alive_[r.owner]) zone_nodes[r.zone - 1].push_back(r.owner);
  for (auto& nodes : zone_nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (NodeId a : nodes)
      for (NodeId b : nodes)
        if (a != b) neighbors_[a].push_back(b);
  }
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

Topology build_topology(const TopologySpec& spec) {
  Topology t;
  const int O = static_cast<int>(spec.onus.size());
  const int N = static_cast<int>(spec.stas.size());
  const int R = static_cast<int>(spec.relays.size());
  t.onu_count_ = O;
  t.sta_count_ = N;
  t.roles_.assign(1 + O + N + R, NodeRole::Olt);
  t.alive_.assign(1 + O + N + R, true);
  t.fiber_ok_.assign(O + 1, true);

  require(spec.zone_count >= 0, "negative zone count");

  // Fixed id layout keeps traffic-matrix indices aligned with node ids.
  for (int i = 0; i < O; ++i) {
    const OnuSpec& o = spec.onus[i];
    require(o.id == i + 1, "ONU ids must be 1..O in order");
    t.roles_[o.id] = o.mpp ? NodeRole::OnuMpp : NodeRole::Onu;
  }
  for (int i = 0; i < N; ++i) {
    const StaSpec& s = spec.stas[i];
    require(s.id == O + 1 + i, "STA ids must be O+1..O+N in order");
    t.roles_[s.id] = NodeRole::Sta;
  }
  for (int i = 0; i < R; ++i) {
    const RelaySpec& m = spec.relays[i];
    require(m.id == O + N + 1 + i, "relay ids must follow the STAs in order");
    require(!m.zones.empty(), "relay node with no radios");
    require(!m.is_map || m.zones.size() == 1, "MAP must carry exactly one radio");
    t.roles_[m.id] = m.is_map ? NodeRole::Map : NodeRole::MpRelay;
  }

  auto add_radio = [&](NodeId owner, ZoneId z) {
    require(z >= 1 && z <= spec.zone_count, "zone id out of range");
    Radio r;
    r.id = static_cast<RadioId>(t.radios_.size());
    r.owner = owner;
    r.zone = z;
    t.radios_.push_back(r);
  };

  for (const OnuSpec& o : spec.onus)
    if (o.mpp) add_radio(o.id, o.zone);
  for (const StaSpec& s : spec.stas) add_radio(s.id, s.zone);
  for (const RelaySpec& m : spec.relays) {
    std::vector<ZoneId> zs = m.zones;
    std::sort(zs.begin(), zs.end());
    require(std::adjacent_find(zs.begin(), zs.end()) == zs.end(),
            "duplicate radio: relay lists the same zone twice");
    for (ZoneId z : zs) add_radio(m.id, z);
  }

  t.zones_.resize(spec.zone_count);
  for (int z = 0; z < spec.zone_count; ++z) t.zones_[z].id = z + 1;
  t.rebuild_derived();

  for (const Zone& z : t.zones_) require(!z.members.empty(), "empty zone");
  return t;
}

Topology apply_failures(const Topology& topo, const FailureSet& failures) {
  Topology t = topo;
  for (NodeId onu : failures.failed_distribution_fibers) {
    require(onu >= 1 && onu <= t.onu_count_, "unknown node id in fiber failure set");
    t.fiber_ok_[onu] = false;
    if (t.roles_[onu] == NodeRole::OnuMpp) t.roles_[onu] = NodeRole::MpRelay;
  }
  for (NodeId n : failures.failed_nodes) {
    require(n >= 0 && n < t.node_count(), "unknown node id in failure set");
    t.alive_[n] = false;
    if (n >= 1 && n <= t.onu_count_) t.fiber_ok_[n] = false;
  }
  if (!failures.failed_nodes.empty()) {
    std::vector<Radio> kept;
    for (const Radio& r : t.radios_)
      if (t.alive_[r.owner]) kept.push_back(r);
    t.radios_ = std::move(kept);
  }
  t.rebuild_derived();
  return t;
}

int sector_of(NodeId onu, const FiberPlant& plant) {
  const int total = std::accumulate(plant.sector_sizes.begin(), plant.sector_sizes.end(), 0);
  require(onu >= 1 && onu <= total, "ONU index outside any sector");
  if (plant.kind != PonKind::WrMultistage) return 1;
  int cum = 0;
  for (size_t s = 0; s < plant.sector_sizes.size(); ++s) {
    cum += plant.sector_sizes[s];
    if (onu <= cum) return static_cast<int>(s) + 1;
  }
  throw TopologyError("ONU assigned to no sector");
}

TopologySpec reference_topology_spec(int islands) {
  require(islands >= 1, "need at least one island");
  TopologySpec spec;
  spec.version = 1;
  spec.zone_count = 11 * islands;
  const int O = 4 * islands;
  const int N = 16 * islands;
  for (int i = 0; i < islands; ++i) {
    const int zo = 11 * i;  // zones zo+1..zo+4 gateway, +5..+8 access, +9..+11 backbone
    for (int c = 0; c < 4; ++c)
      spec.onus.push_back({4 * i + c + 1, true, zo + c + 1});
    const int sta_base = O + 16 * i;
    for (int c = 0; c < 4; ++c) {
      spec.stas.push_back({sta_base + 2 * c + 1, zo + c + 1});
      spec.stas.push_back({sta_base + 2 * c + 2, zo + c + 1});
    }
    for (int c = 0; c < 4; ++c) {
      spec.stas.push_back({sta_base + 8 + 2 * c + 1, zo + 4 + c + 1});
      spec.stas.push_back({sta_base + 8 + 2 * c + 2, zo + 4 + c + 1});
    }
    const int mp_base = O + N + 4 * i;
    spec.relays.push_back({mp_base + 1, {zo + 1, zo + 5, zo + 9}, false});
    spec.relays.push_back({mp_base + 2, {zo + 2, zo + 6, zo + 9, zo + 10}, false});
    spec.relays.push_back({mp_base + 3, {zo + 3, zo + 7, zo + 10, zo + 11}, false});
    spec.relays.push_back({mp_base + 4, {zo + 4, zo + 8, zo + 11}, false});
  }
  return spec;
}

}  // namespace fiwi
