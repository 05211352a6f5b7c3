#include "ocean/dsr_routing.h"

#include <algorithm>
#include <stdexcept>

namespace ocean
{

namespace
{

const std::set<NodeId> kNoFaulty;

} // namespace

std::vector<NodeId>
MergeSorted(const std::vector<NodeId>& a, const std::vector<NodeId>& b)
{
    std::vector<NodeId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool
Intersects(std::span<const NodeId> route, const std::vector<NodeId>& sortedSet)
{
    return std::any_of(route.begin(), route.end(), [&](NodeId n) {
        return std::binary_search(sortedSet.begin(), sortedSet.end(), n);
    });
}

bool
Intersects(std::span<const NodeId> route, const std::set<NodeId>& set)
{
    return std::any_of(route.begin(), route.end(), [&](NodeId n) { return set.contains(n); });
}

// RouteCache

RouteCache::RouteCache(Duration lifetime)
    : m_lifetime(lifetime)
{
}

void
RouteCache::Insert(const SourceRoute& route, SimTime now)
{
    if (!IsValidSourceRoute(route))
    {
        throw std::invalid_argument("RouteCache::Insert: invalid source route");
    }
    auto& bucket = m_routes[route.back()];
    for (auto& c : bucket)
    {
        if (c.route == route)
        {
            c.learnedAt = now;
            return;
        }
    }
    bucket.push_back(CachedRoute{route, now});
}

std::optional<SourceRoute>
RouteCache::Select(NodeId dst, SimTime now, const std::set<NodeId>& faulty) const
{
    auto it = m_routes.find(dst);
    if (it == m_routes.end())
    {
        return std::nullopt;
    }
    const CachedRoute* best = nullptr;
    for (const auto& c : it->second)
    {
        if (now - c.learnedAt > m_lifetime || faulty.contains(c.route[1]))
        {
            continue;
        }
        if (best == nullptr)
        {
            best = &c;
            continue;
        }
        if (c.route.size() != best->route.size())
        {
            if (c.route.size() < best->route.size())
            {
                best = &c;
            }
            continue;
        }
        if (c.learnedAt != best->learnedAt)
        {
            if (c.learnedAt > best->learnedAt)
            {
                best = &c;
            }
            continue;
        }
        if (c.route < best->route)
        {
            best = &c;
        }
    }
    if (best == nullptr)
    {
        return std::nullopt;
    }
    return best->route;
}

std::size_t
RouteCache::PurgeLink(NodeId a, NodeId b)
{
    std::size_t removed = 0;
    for (auto& [dst, bucket] : m_routes)
    {
        removed += std::erase_if(bucket,
                                 [&](const CachedRoute& c) { return RouteUsesLink(c.route, a, b); });
    }
    return removed;
}

void
RouteCache::EvictStale(SimTime now)
{
    for (auto& [dst, bucket] : m_routes)
    {
        std::erase_if(bucket, [&](const CachedRoute& c) { return now - c.learnedAt > m_lifetime; });
    }
}

std::vector<CachedRoute>
RouteCache::RoutesTo(NodeId dst) const
{
    auto it = m_routes.find(dst);
    return it == m_routes.end() ? std::vector<CachedRoute>{} : it->second;
}

std::size_t
RouteCache::Size() const
{
    std::size_t n = 0;
    for (const auto& [dst, bucket] : m_routes)
    {
        n += bucket.size();
    }
    return n;
}

// DsrRouting

DsrRouting::DsrRouting(NodeId self, DsrParams params, const RouteRanker* ranker)
    : m_self(self),
      m_params(params),
      m_ranker(ranker),
      m_cache(params.cacheLifetime)
{
}

const std::set<NodeId>&
DsrRouting::Faulty() const
{
    return m_ranker ? m_ranker->FaultySet() : kNoFaulty;
}

Packet
DsrRouting::OriginateRreq(NodeId dst, SimTime)
{
    Packet p;
    p.src = m_self;
    p.dst = dst;
    p.seq = m_nextSeq++;
    RouteRequestBody body;
    body.routeRecord = {m_self};
    const auto& faulty = Faulty();
    body.avoidList.assign(faulty.begin(), faulty.end());
    body.hopLimit = m_params.hopLimit;
    p.body = std::move(body);
    RecordRreq(m_self, p.seq);
    return p;
}

bool
DsrRouting::RecordRreq(NodeId originator, std::uint32_t seq)
{
    return m_seen.insert(std::uint64_t{originator} << 32 | seq).second;
}

bool
DsrRouting::HasSeen(NodeId originator, std::uint32_t seq) const
{
    return m_seen.contains(std::uint64_t{originator} << 32 | seq);
}

Packet
DsrRouting::BuildRebroadcast(const Packet& p) const
{
    Packet out = p;
    auto& body = out.Rreq();
    body.routeRecord.push_back(m_self);
    const auto& faulty = Faulty();
    if (!faulty.empty())
    {
        // The originator never belongs on its own avoid list.
        std::vector<NodeId> mine;
        for (NodeId n : faulty)
        {
            if (n != p.src)
            {
                mine.push_back(n);
            }
        }
        body.avoidList = MergeSorted(body.avoidList, mine);
    }
    return out;
}

Reply
DsrRouting::BuildReply(const Packet& rreq) const
{
    RouteReplyBody body;
    body.route = rreq.Rreq().routeRecord;
    body.route.push_back(m_self);
    body.path.assign(body.route.rbegin(), body.route.rend());
    body.cursor = 0;
    Packet rrep;
    rrep.src = m_self;
    rrep.dst = rreq.src;
    rrep.seq = rreq.seq;
    const NodeId next = body.path[1];
    rrep.body = std::move(body);
    return Reply{std::move(rrep), next};
}

RreqAction
DsrRouting::HandleRreq(const Packet& p, SimTime)
{
    const auto& body = p.Rreq();
    if (p.src == m_self)
    {
        return Suppress{SuppressReason::Duplicate};
    }
    const bool first = RecordRreq(p.src, p.seq);
    const bool atDestination = p.dst == m_self;
    if (!first && !atDestination)
    {
        return Suppress{SuppressReason::Duplicate};
    }
    if (!IsValidRoutePrefix(body.routeRecord) || body.routeRecord.front() != p.src ||
        RouteContains(body.routeRecord, m_self))
    {
        ++m_protocolErrors;
        return Suppress{SuppressReason::Malformed};
    }
    if (Intersects(body.routeRecord, body.avoidList))
    {
        return Suppress{SuppressReason::AvoidIntersection};
    }
    if (atDestination)
    {
        return BuildReply(p);
    }
    if (std::binary_search(body.avoidList.begin(), body.avoidList.end(), m_self))
    {
        return Suppress{SuppressReason::SelfAvoided};
    }
    if (body.routeRecord.size() >= body.hopLimit)
    {
        return Suppress{SuppressReason::HopLimit};
    }
    return Rebroadcast{BuildRebroadcast(p)};
}

RrepAction
DsrRouting::HandleRrep(const Packet& p, SimTime now)
{
    const auto& body = p.Rrep();
    if (body.cursor >= body.path.size() || body.path[body.cursor] != m_self ||
        !IsValidSourceRoute(body.route))
    {
        ++m_protocolErrors;
        return DropReply{};
    }
    if (Intersects(body.route, Faulty()))
    {
        return DropReply{};
    }
    if (body.cursor + 1 == body.path.size())
    {
        if (body.route.front() != m_self)
        {
            ++m_protocolErrors;
            return DropReply{};
        }
        m_cache.Insert(body.route, now);
        return AcceptRoute{body.route};
    }
    Packet out = p;
    ++out.Rrep().cursor;
    const NodeId next = body.path[body.cursor + 1];
    return RelayReply{std::move(out), next};
}

std::optional<SourceRoute>
DsrRouting::SelectRoute(NodeId dst, SimTime now) const
{
    return m_cache.Select(dst, now, Faulty());
}

DataAction
DsrRouting::HandleData(const Packet& p, NodeId prevHop) const
{
    const auto& d = p.Data();
    if (d.index >= d.route.size() || d.route[d.index] != m_self)
    {
        ++m_protocolErrors;
        return DropNoRoute{};
    }
    if (d.index + 1 == d.route.size())
    {
        return DeliverData{};
    }
    if (prevHop != m_self && Faulty().contains(prevHop))
    {
        return RejectMalicious{};
    }
    Packet out = p;
    ++out.Data().index;
    return ForwardData{std::move(out), d.route[d.index + 1]};
}

Packet
MakeRouteError(NodeId self, const SourceRoute& route, NodeId failedNext, std::uint32_t seq)
{
    RouteErrorBody body;
    body.linkFrom = self;
    body.linkTo = failedNext;
    auto here = std::find(route.begin(), route.end(), self);
    if (here != route.end())
    {
        body.path.assign(std::make_reverse_iterator(here + 1), route.rend());
    }
    if (body.path.empty())
    {
        body.path = {self};
    }
    Packet rerr;
    rerr.src = self;
    rerr.dst = body.path.back();
    rerr.seq = seq;
    rerr.body = std::move(body);
    return rerr;
}

Packet
DsrRouting::HandleBrokenLink(const Packet& p, NodeId failedNext)
{
    m_cache.PurgeLink(m_self, failedNext);
    static const SourceRoute kNone;
    return MakeRouteError(m_self, p.IsData() ? p.Data().route : kNone, failedNext, p.seq);
}

RerrAction
DsrRouting::HandleRerr(const Packet& p)
{
    const auto& body = p.Rerr();
    m_cache.PurgeLink(body.linkFrom, body.linkTo);
    if (body.cursor >= body.path.size() || body.path[body.cursor] != m_self ||
        body.cursor + 1 == body.path.size())
    {
        return ErrorConsumed{};
    }
    Packet out = p;
    ++out.Rerr().cursor;
    const NodeId next = body.path[body.cursor + 1];
    return RelayError{std::move(out), next};
}

} // namespace ocean
