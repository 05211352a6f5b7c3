#ifndef OCEAN_SIMULATOR_H
#define OCEAN_SIMULATOR_H

#include "ocean/core_model.h"
#include "ocean/event_queue.h"
#include "ocean/metrics.h"
#include "ocean/mobility.h"
#include "ocean/neighbor_watch.h"
#include "ocean/rng.h"
#include "ocean/route_ranker.h"
#include "ocean/scenario.h"

#include <memory>
#include <optional>
#include <ostream>
#include <vector>

namespace ocean
{

/// Airtime of a frame: ceil(bits / bandwidth) in whole microseconds.
Duration TxTime(std::uint32_t bytes, double bandwidth);

struct Node;

/**
 * One complete scenario run.
 *
 * A unit-disk radio (or an explicit link list) with independent per-delivery
 * erasures, an idealized per-node FIFO MAC with a retransmit budget for
 * unicast frames, random waypoint mobility and CBR traffic. Every node runs
 * source routing with the configured defense layer and behavior profile.
 */
class Simulator
{
  public:
    /// Validates cfg; throws ConfigError.
    explicit Simulator(const ScenarioConfig& cfg);
    ~Simulator();

    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;

    /// Writes one JSON object per line for every transmission and packet fate.
    void SetTrace(std::ostream* out) { m_trace = out; }

    RunMetrics Run();

    const ScenarioConfig& Config() const { return m_cfg; }
    BehaviorKind KindOf(NodeId n) const;
    const RouteRanker& Ranker(NodeId n) const;
    /// Every route accepted by n as originator, in acceptance order.
    const std::vector<SourceRoute>& AcceptedRoutes(NodeId n) const;
    /// Nodes that would receive a transmission by n at `now`, ascending.
    std::vector<NodeId> Neighbors(NodeId n, SimTime now);
    /// Hop distance on the connectivity graph at `now`; nullopt when unreachable.
    std::optional<std::uint32_t> HopDistance(NodeId a, NodeId b, SimTime now);

  private:
    void AssignBehaviors();
    void ScheduleTraffic();
    void StartConnection(std::size_t slot);
    void FlowTick(std::size_t flow, std::uint64_t k);
    void Sample();

    void Originate(NodeId src, NodeId dst);
    void SendOrBuffer(Node& n, Packet p);
    void DrainBuffer(Node& n, NodeId dst);
    void Discover(Node& n, NodeId dst);
    void RetryDiscovery(NodeId n, NodeId dst);

    void Enqueue(Node& n, Packet p, std::optional<NodeId> to);
    void StartTx(Node& n);
    void EndTx(NodeId sender, const std::vector<NodeId>& receivers);
    void OnUnicastSuccess(Node& n, const Packet& p, NodeId to);
    void OnLinkFailure(Node& n, Packet p, NodeId to);

    void Receive(Node& r, const Packet& p, NodeId from);
    void Overhear(Node& r, const Packet& p, NodeId from);
    void OnRreq(Node& r, const Packet& p);
    void OnRrep(Node& r, const Packet& p);
    void OnRerr(Node& r, const Packet& p);
    void OnData(Node& r, const Packet& p, NodeId from);

    void ExpireWatch(NodeId n);
    void OnBecameFaulty(Node& n, NodeId accused, const ChecksumBufferEntry& context);
    void SendRerr(Node& n, Packet rerr);
    void ScheduleSecondChance(Node& n);
    void SecondChance(NodeId n, SimTime due);

    void SetFate(std::uint64_t uid, Fate f);
    Duration Jitter(Node& n);
    void TraceTx(const Node& n, const Packet& p, std::optional<NodeId> to, std::uint32_t attempt);

    ScenarioConfig m_cfg;
    EventQueue m_queue;
    SimTime m_now{};
    SimTime m_end{};
    RandomWaypoint m_mobility;
    /// Positions of every node at m_snapshotTime.
    std::vector<Vec2> m_snapshot;
    std::optional<SimTime> m_snapshotTime;
    std::vector<std::unique_ptr<Node>> m_nodes;
    std::vector<std::vector<NodeId>> m_links;
    Rng m_channel;
    Rng m_traffic;
    RunMetrics m_metrics;
    struct PacketRecord
    {
        BehaviorKind sourceKind;
        std::optional<Fate> fate;
        std::uint32_t rebuffers = 0;
    };
    std::vector<PacketRecord> m_packets;
    std::ostream* m_trace = nullptr;
    bool m_ran = false;
};

/// Builds and runs one simulation.
RunMetrics RunScenario(const ScenarioConfig& cfg, std::ostream* trace = nullptr);

} // namespace ocean

#endif // OCEAN_SIMULATOR_H
