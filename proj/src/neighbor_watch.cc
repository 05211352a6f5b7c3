#include "ocean/neighbor_watch.h"

#include <stdexcept>

namespace ocean
{

NeighborWatch::NeighborWatch(NodeId self, Duration timeout)
    : m_self(self),
      m_timeout(timeout)
{
    if (timeout <= Duration::zero())
    {
        throw std::invalid_argument("NeighborWatch: timeout must be positive");
    }
}

bool
NeighborWatch::OnHandoff(const Packet& p, NodeId nextHop, SimTime now)
{
    if (nextHop == p.dst)
    {
        ++m_counters.skippedDestination;
        return false;
    }
    ChecksumBufferEntry e;
    e.digest = PacketDigest(p);
    e.neighbor = nextHop;
    e.deadline = now + m_timeout;
    e.trafficSource = p.src;
    e.route = p.Data().route;
    m_slots.push_back(Slot{std::move(e), true});
    ++m_live;
    ++m_counters.created;
    return true;
}

std::optional<ObservationEvent>
NeighborWatch::OnOverhear(const Packet& p, NodeId transmitter, SimTime now)
{
    if (!p.IsData() || m_live == 0)
    {
        return std::nullopt;
    }
    const Digest d = PacketDigest(p);
    for (auto& slot : m_slots)
    {
        if (slot.live && slot.entry.neighbor == transmitter && slot.entry.digest == d)
        {
            slot.live = false;
            --m_live;
            ++m_counters.positive;
            Compact();
            return ObservationEvent{m_self, transmitter, Sign::Positive, now};
        }
    }
    return std::nullopt;
}

ObservationEvent
NeighborWatch::NegativeFor(const ChecksumBufferEntry& e) const
{
    return ObservationEvent{m_self, e.neighbor, Sign::Negative, e.deadline};
}

std::vector<ChecksumBufferEntry>
NeighborWatch::ExpireEntries(SimTime now)
{
    std::vector<ChecksumBufferEntry> out;
    while (!m_slots.empty() && m_slots.front().entry.deadline <= now)
    {
        if (m_slots.front().live)
        {
            --m_live;
            ++m_counters.negative;
            out.push_back(std::move(m_slots.front().entry));
        }
        m_slots.pop_front();
    }
    return out;
}

std::vector<ObservationEvent>
NeighborWatch::Expire(SimTime now)
{
    std::vector<ObservationEvent> events;
    for (const auto& e : ExpireEntries(now))
    {
        ObservationEvent ev = NegativeFor(e);
        ev.time = now;
        events.push_back(ev);
    }
    return events;
}

std::optional<SimTime>
NeighborWatch::NextDeadline() const
{
    for (const auto& slot : m_slots)
    {
        if (slot.live)
        {
            return slot.entry.deadline;
        }
    }
    return std::nullopt;
}

void
NeighborWatch::Compact()
{
    while (!m_slots.empty() && !m_slots.front().live)
    {
        m_slots.pop_front();
    }
}

} // namespace ocean
