#ifndef OCEAN_SCENARIO_H
#define OCEAN_SCENARIO_H

#include "ocean/behavior.h"
#include "ocean/chipcount.h"
#include "ocean/core_model.h"
#include "ocean/mobility.h"
#include "ocean/route_ranker.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ocean
{

enum class DefenseMode
{
    /// Plain DSR.
    Defenseless,
    /// First-hand observation only.
    Ocean,
    /// Ocean plus alarms carried by route errors.
    SecHand,
};

const char* ToString(DefenseMode m);
std::optional<DefenseMode> ParseDefenseMode(std::string_view s);

/// Validation failure naming the offending configuration key.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message),
          m_field(std::move(field))
    {
    }

    const std::string& Field() const { return m_field; }

  private:
    std::string m_field;
};

struct FlowSpec
{
    NodeId src = 0;
    NodeId dst = 0;
};

struct ScenarioConfig
{
    // Topology and mobility.
    std::uint32_t numNodes = 40;
    double width = 1500.0;
    double height = 300.0;
    double radioRange = 250.0;
    double maxSpeed = 20.0;
    double minSpeed = 1.0;
    double pauseTime = 0.0;
    /// Fixed node positions; empty means random waypoint placement.
    std::vector<Vec2> staticPositions;
    /// Explicit symmetric adjacency; when set it replaces the range test.
    std::vector<std::pair<NodeId, NodeId>> staticLinks;

    // Radio and MAC.
    double bandwidth = 2e6;
    double linkLossProb = 0.0;
    std::uint32_t retransmitBudget = 3;

    // Traffic.
    std::uint32_t packetsPerConnection = 8;
    std::uint32_t minConnectionHops = 2;
    double sourceRate = 4.0;
    std::uint32_t payload = 64;
    std::uint32_t concurrentConnections = 10;
    /// Explicit flows replace the random connection generator.
    std::vector<FlowSpec> flows;
    double flowStart = 1.0;

    // Run.
    double simDuration = 600.0;
    std::uint64_t seed = 1;
    double sampleInterval = 10.0;

    // Protocol.
    DefenseMode mode = DefenseMode::Ocean;
    double watchTimeout = 0.001;
    RankerParams ranker{};
    std::uint32_t hopLimit = 16;
    double cacheLifetime = 30.0;
    double rreqJitterMax = 0.010;
    double rreqTimeout = 0.5;
    double sendBufferTimeout = 3.0;
    /// Per-node fixed rebroadcast delays in seconds, replacing random jitter.
    std::vector<double> fixedJitter;
    /// (observer, subject) pairs placed on faulty lists at time zero.
    std::vector<std::pair<NodeId, NodeId>> initialFaulty;

    // Economy.
    bool economy = false;
    ChipParams chips{};

    // Behaviors.
    std::uint32_t misbehaving = 0;
    BehaviorKind misbehavior = BehaviorKind::Misleading;
    bool misbehavingRunsOcean = true;
    bool tamperAvoidList = false;
    std::vector<NodeId> rushVictims;
    std::uint32_t routePadding = 0;
    bool bogusHop = false;
    /// Explicit (node, kind) assignments applied after random placement.
    std::vector<std::pair<NodeId, BehaviorKind>> behaviors;

    /// Throws ConfigError naming the first invalid field.
    void Validate() const;

    MobilityParams Mobility() const;
};

} // namespace ocean

#endif // OCEAN_SCENARIO_H
