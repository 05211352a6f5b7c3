#ifndef OCEAN_NEIGHBOR_WATCH_H
#define OCEAN_NEIGHBOR_WATCH_H

#include "ocean/core_model.h"

#include <deque>
#include <optional>
#include <vector>

namespace ocean
{

/// Pending forwarding observation.
struct ChecksumBufferEntry
{
    Digest digest = 0;
    NodeId neighbor = 0;
    SimTime deadline{};
    /// Originator and route of the watched packet, used to address route
    /// errors back to the traffic source.
    NodeId trafficSource = 0;
    SourceRoute route;
};

/**
 * Passive monitor of one node's direct neighbors.
 *
 * After handing a DATA packet to a neighbor that is expected to relay it, the
 * node remembers the packet checksum. Overhearing the neighbor retransmit the
 * same packet yields a Positive event; silence until the deadline yields a
 * Negative one. A retransmission with a different checksum is ignored and the
 * entry is left to expire.
 */
class NeighborWatch
{
  public:
    struct Counters
    {
        std::uint64_t created = 0;
        std::uint64_t positive = 0;
        std::uint64_t negative = 0;
        std::uint64_t skippedDestination = 0;
    };

    NeighborWatch(NodeId self, Duration timeout);

    /// Returns true when an entry was created (false when next hop is the destination).
    bool OnHandoff(const Packet& p, NodeId nextHop, SimTime now);

    std::optional<ObservationEvent> OnOverhear(const Packet& p, NodeId transmitter, SimTime now);

    std::vector<ObservationEvent> Expire(SimTime now);

    /// Same as Expire, keeping the packet context of each expired entry.
    std::vector<ChecksumBufferEntry> ExpireEntries(SimTime now);

    ObservationEvent NegativeFor(const ChecksumBufferEntry& e) const;

    std::size_t Pending() const { return m_live; }

    std::optional<SimTime> NextDeadline() const;

    const Counters& Stats() const { return m_counters; }

    Duration Timeout() const { return m_timeout; }

  private:
    struct Slot
    {
        ChecksumBufferEntry entry;
        bool live = true;
    };

    void Compact();

    NodeId m_self;
    Duration m_timeout;
    // Ordered by deadline: insertion time is non-decreasing and the timeout is fixed.
    std::deque<Slot> m_slots;
    std::size_t m_live = 0;
    Counters m_counters;
};

} // namespace ocean

#endif // OCEAN_NEIGHBOR_WATCH_H
