#include "ocean/behavior.h"

#include <algorithm>

namespace ocean
{

const char*
ToString(BehaviorKind k)
{
    switch (k)
    {
    case BehaviorKind::Cooperating:
        return "cooperating";
    case BehaviorKind::Misleading:
        return "misleading";
    case BehaviorKind::Selfish:
        return "selfish";
    case BehaviorKind::Rushing:
        return "rushing";
    }
    return "?";
}

std::optional<BehaviorKind>
ParseBehaviorKind(std::string_view s)
{
    for (auto k : {BehaviorKind::Cooperating, BehaviorKind::Misleading, BehaviorKind::Selfish,
                   BehaviorKind::Rushing})
    {
        if (s == ToString(k))
        {
            return k;
        }
    }
    return std::nullopt;
}

DataDecision
DecideDataForward(const BehaviorProfile& profile, const Packet& p, NodeId self)
{
    if (p.src == self)
    {
        return DataDecision::Forward;
    }
    switch (profile.kind)
    {
    case BehaviorKind::Misleading:
    case BehaviorKind::Selfish:
        return DataDecision::SilentDrop;
    case BehaviorKind::Cooperating:
    case BehaviorKind::Rushing:
        break;
    }
    return DataDecision::Forward;
}

RreqDecision
DecideRreq(const BehaviorProfile& profile, const Packet& p, NodeId self)
{
    if (profile.kind == BehaviorKind::Selfish)
    {
        return RreqDecision::SilentDrop;
    }
    if (!profile.Tampers())
    {
        return RreqDecision::Participate;
    }
    if (profile.routePadding > 0 || profile.bogusHop)
    {
        return RreqDecision::RushTampered;
    }
    const auto& avoid = p.Rreq().avoidList;
    const auto listed = [&](NodeId n) { return std::binary_search(avoid.begin(), avoid.end(), n); };
    if (listed(self) || std::any_of(profile.rushVictims.begin(), profile.rushVictims.end(), listed))
    {
        return RreqDecision::RushTampered;
    }
    return RreqDecision::Participate;
}

Packet
StripAvoidList(const BehaviorProfile& profile, const Packet& p, NodeId self)
{
    Packet out = p;
    auto& avoid = out.Rreq().avoidList;
    std::erase_if(avoid, [&](NodeId n) {
        return n == self || std::find(profile.rushVictims.begin(), profile.rushVictims.end(), n) !=
                                profile.rushVictims.end();
    });
    return out;
}

void
PadRouteRecord(const BehaviorProfile& profile, Packet& rebroadcast, NodeId phantomBase,
               std::optional<NodeId> bogus)
{
    auto& record = rebroadcast.Rreq().routeRecord;
    if (profile.bogusHop && bogus && !RouteContains(record, *bogus))
    {
        record.push_back(*bogus);
    }
    for (std::uint32_t k = 0; k < profile.routePadding; ++k)
    {
        record.push_back(phantomBase + k);
    }
}

} // namespace ocean
