#ifndef OCEAN_BEHAVIOR_H
#define OCEAN_BEHAVIOR_H

#include "ocean/core_model.h"

#include <optional>
#include <string_view>
#include <vector>

namespace ocean
{

enum class BehaviorKind
{
    Cooperating,
    /// Takes part in route discovery, silently drops transit DATA.
    Misleading,
    /// Stays out of route discovery for others, still originates traffic.
    Selfish,
    /// Relays DATA but rushes tampered route requests ahead of honest copies.
    Rushing,
};

const char* ToString(BehaviorKind k);
std::optional<BehaviorKind> ParseBehaviorKind(std::string_view s);

struct BehaviorProfile
{
    BehaviorKind kind = BehaviorKind::Cooperating;
    /// Whether the node runs the misbehavior layer for its own routing.
    bool runsOcean = true;
    /// Avoid-list tampering; always on for Rushing, optional for Misleading.
    bool tampersAvoidList = false;
    /// Extra ids stripped from avoid lists along with the node itself.
    std::vector<NodeId> rushVictims;
    /// Non-existent hops appended after the node when rushing.
    std::uint32_t routePadding = 0;
    /// Appends a real but non-adjacent node after itself when rushing.
    bool bogusHop = false;

    bool Tampers() const { return kind == BehaviorKind::Rushing || tampersAvoidList; }
};

enum class DataDecision
{
    Forward,
    SilentDrop,
};

enum class RreqDecision
{
    Participate,
    SilentDrop,
    RushTampered,
};

DataDecision DecideDataForward(const BehaviorProfile& profile, const Packet& p, NodeId self);

/// For a broadcast RREQ at a node that is not its destination.
RreqDecision DecideRreq(const BehaviorProfile& profile, const Packet& p, NodeId self);

/// Copy of p with self and the profile's victims removed from the avoid list.
Packet StripAvoidList(const BehaviorProfile& profile, const Packet& p, NodeId self);

/**
 * Appends padding and bogus hops to a rebroadcast copy whose route record
 * already ends with self. Phantom ids start at phantomBase.
 */
void PadRouteRecord(const BehaviorProfile& profile, Packet& rebroadcast, NodeId phantomBase,
                    std::optional<NodeId> bogus);

} // namespace ocean

#endif // OCEAN_BEHAVIOR_H
