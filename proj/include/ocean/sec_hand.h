#ifndef OCEAN_SEC_HAND_H
#define OCEAN_SEC_HAND_H

#include "ocean/core_model.h"
#include "ocean/route_ranker.h"

#include <set>

namespace ocean
{

/**
 * Second-hand reputation through the Alarm field of route errors. A node that
 * locally declares a neighbor faulty advertises it once per faulty episode;
 * every node hearing the route error puts the accused on its own faulty list.
 * Accusations are believed unconditionally.
 */
class SecHand
{
  public:
    explicit SecHand(NodeId self);

    /// Sets the alarm field of rerr. Returns false (and leaves rerr untouched)
    /// when this episode of `accused` was already advertised by this node.
    bool EmitAlarm(NodeId accused, Packet& rerr);

    /// Tags a broken-link error whose far end is locally faulty. Never counts
    /// as a new alarm episode.
    void TagBrokenLink(Packet& rerr, const RouteRanker& ranker) const;

    /// Applies a heard alarm to the local ranker. Returns true when the accused
    /// was newly added to the faulty list.
    bool OnOverhearAlarm(const Packet& p, SimTime now, RouteRanker& ranker) const;

    /// Ends the advertised episode of nodes reinstated by the second-chance sweep.
    void OnReinstated(NodeId n) { m_advertised.erase(n); }

  private:
    NodeId m_self;
    std::set<NodeId> m_advertised;
};

} // namespace ocean

#endif // OCEAN_SEC_HAND_H
