#include "ocean/sec_hand.h"

#include <stdexcept>

namespace ocean
{

SecHand::SecHand(NodeId self)
    : m_self(self)
{
}

bool
SecHand::EmitAlarm(NodeId accused, Packet& rerr)
{
    if (rerr.Type() != PacketType::RouteError)
    {
        throw std::logic_error("EmitAlarm: alarms ride on route errors only");
    }
    if (accused == m_self || !m_advertised.insert(accused).second)
    {
        return false;
    }
    rerr.Rerr().alarm = accused;
    return true;
}

void
SecHand::TagBrokenLink(Packet& rerr, const RouteRanker& ranker) const
{
    auto& body = rerr.Rerr();
    if (!body.alarm && ranker.IsFaulty(body.linkTo))
    {
        body.alarm = body.linkTo;
    }
}

bool
SecHand::OnOverhearAlarm(const Packet& p, SimTime now, RouteRanker& ranker) const
{
    if (p.Type() != PacketType::RouteError)
    {
        return false;
    }
    const auto& alarm = p.Rerr().alarm;
    if (!alarm || *alarm == m_self)
    {
        return false;
    }
    return ranker.MarkFaulty(*alarm, now);
}

} // namespace ocean
