#ifndef OCEAN_DSR_ROUTING_H
#define OCEAN_DSR_ROUTING_H

#include "ocean/core_model.h"
#include "ocean/route_ranker.h"

#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace ocean
{

struct DsrParams
{
    std::uint32_t hopLimit = 16;
    Duration cacheLifetime = Seconds(30.0);
};

struct CachedRoute
{
    SourceRoute route;
    SimTime learnedAt{};
};

/// Routes from the owning node, grouped by destination.
class RouteCache
{
  public:
    explicit RouteCache(Duration lifetime = Seconds(30.0));

    /// Re-inserting an identical route refreshes its timestamp.
    void Insert(const SourceRoute& route, SimTime now);

    /**
     * Shortest fresh route to dst whose next hop is not in `faulty`; ties go to
     * the most recently learned route, then to lexicographic hop order.
     */
    std::optional<SourceRoute> Select(NodeId dst, SimTime now,
                                      const std::set<NodeId>& faulty) const;

    /// Removes every cached route traversing the link in either direction.
    std::size_t PurgeLink(NodeId a, NodeId b);

    void EvictStale(SimTime now);

    std::vector<CachedRoute> RoutesTo(NodeId dst) const;

    std::size_t Size() const;

  private:
    Duration m_lifetime;
    std::map<NodeId, std::vector<CachedRoute>> m_routes;
};

enum class SuppressReason
{
    Duplicate,
    AvoidIntersection,
    SelfAvoided,
    HopLimit,
    Malformed,
};

struct Suppress
{
    SuppressReason reason;
};

struct Rebroadcast
{
    Packet packet;
};

struct Reply
{
    Packet rrep;
    NodeId nextHop;
};

using RreqAction = std::variant<Suppress, Rebroadcast, Reply>;

struct AcceptRoute
{
    SourceRoute route;
};

struct RelayReply
{
    Packet packet;
    NodeId nextHop;
};

struct DropReply
{
};

using RrepAction = std::variant<AcceptRoute, RelayReply, DropReply>;

struct ForwardData
{
    Packet packet;
    NodeId nextHop;
};

struct DeliverData
{
};

struct RejectMalicious
{
};

/// Route cursor does not point at this node: protocol error.
struct DropNoRoute
{
};

using DataAction = std::variant<ForwardData, DeliverData, RejectMalicious, DropNoRoute>;

struct RelayError
{
    Packet packet;
    NodeId nextHop;
};

struct ErrorConsumed
{
};

using RerrAction = std::variant<RelayError, ErrorConsumed>;

/**
 * DSR-style source routing for one node, extended with avoid lists, faulty-list
 * checks on replies and rejection of traffic relayed by faulty neighbors.
 *
 * Decisions are returned as actions; the caller owns transmission and timing.
 * The faulty list comes from the node's RouteRanker; a null ranker means the
 * node runs plain DSR without the misbehavior layer.
 */
class DsrRouting
{
  public:
    DsrRouting(NodeId self, DsrParams params, const RouteRanker* ranker);

    NodeId Self() const { return m_self; }

    Packet OriginateRreq(NodeId dst, SimTime now);

    /// Duplicate suppression (rule a). Returns true on first sighting.
    bool RecordRreq(NodeId originator, std::uint32_t seq);

    bool HasSeen(NodeId originator, std::uint32_t seq) const;

    /**
     * Full processing of a broadcast RREQ: duplicate suppression, avoid-list
     * intersection, reply at the destination, otherwise rebroadcast with this
     * node appended to the route record and its faulty list merged into the
     * avoid list.
     */
    RreqAction HandleRreq(const Packet& p, SimTime now);

    /// The rebroadcast copy of p (route record + self, avoid list + faulty list).
    Packet BuildRebroadcast(const Packet& p) const;

    /// RREP for a request that reached this node as destination.
    Reply BuildReply(const Packet& rreq) const;

    RrepAction HandleRrep(const Packet& p, SimTime now);

    std::optional<SourceRoute> SelectRoute(NodeId dst, SimTime now) const;

    DataAction HandleData(const Packet& p, NodeId prevHop) const;

    /**
     * Route error toward p's source for a failed hop to failedNext, and purge
     * of cached routes over that link. The returned packet's path starts at
     * this node; a path of one node means this node is the source.
     */
    Packet HandleBrokenLink(const Packet& p, NodeId failedNext);

    RerrAction HandleRerr(const Packet& p);

    RouteCache& Cache() { return m_cache; }
    const RouteCache& Cache() const { return m_cache; }

    /// Empty when running without the misbehavior layer.
    const std::set<NodeId>& Faulty() const;

    std::uint64_t ProtocolErrors() const { return m_protocolErrors; }

  private:
    NodeId m_self;
    DsrParams m_params;
    const RouteRanker* m_ranker;
    RouteCache m_cache;
    /// (originator << 32) | seq.
    std::unordered_set<std::uint64_t> m_seen;
    std::uint32_t m_nextSeq = 1;
    mutable std::uint64_t m_protocolErrors = 0;
};

/**
 * Route error naming the link (self, failedNext), addressed back to the start
 * of `route` along its reverse. The path is just [self] when self is the
 * start of the route or not on it.
 */
Packet MakeRouteError(NodeId self, const SourceRoute& route, NodeId failedNext, std::uint32_t seq);

/// Sorted union of two sorted id lists.
std::vector<NodeId> MergeSorted(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

bool Intersects(std::span<const NodeId> route, const std::vector<NodeId>& sortedSet);

bool Intersects(std::span<const NodeId> route, const std::set<NodeId>& set);

} // namespace ocean

#endif // OCEAN_DSR_ROUTING_H
