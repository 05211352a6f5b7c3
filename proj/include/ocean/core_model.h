#ifndef OCEAN_CORE_MODEL_H
#define OCEAN_CORE_MODEL_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ocean
{

using NodeId = std::uint32_t;

/// Simulated clock. Time points count microseconds since simulation start.
struct SimClock
{
    using rep = std::int64_t;
    using period = std::micro;
    using duration = std::chrono::duration<rep, period>;
    using time_point = std::chrono::time_point<SimClock>;
    static constexpr bool is_steady = true;
};

using Duration = SimClock::duration;
using SimTime = SimClock::time_point;

constexpr SimTime
AtMicros(std::int64_t us)
{
    return SimTime{Duration{us}};
}

constexpr Duration
Seconds(double s)
{
    return Duration{static_cast<std::int64_t>(s * 1e6 + (s >= 0 ? 0.5 : -0.5))};
}

inline double
ToSeconds(Duration d)
{
    return static_cast<double>(d.count()) * 1e-6;
}

inline double
ToSeconds(SimTime t)
{
    return ToSeconds(t.time_since_epoch());
}

/// Hop list from source to destination, both inclusive.
using SourceRoute = std::vector<NodeId>;

/// True when the route has at least two hops and no repeated node.
bool IsValidSourceRoute(std::span<const NodeId> hops);

/// True when the sequence is non-empty and repeats no node (route-record prefix).
bool IsValidRoutePrefix(std::span<const NodeId> hops);

/// True when consecutive hops (a,b) or (b,a) appear in the route.
bool RouteUsesLink(std::span<const NodeId> hops, NodeId a, NodeId b);

bool RouteContains(std::span<const NodeId> hops, NodeId n);

enum class PacketType
{
    RouteRequest,
    RouteReply,
    RouteError,
    Data,
};

const char* ToString(PacketType t);

struct RouteRequestBody
{
    std::vector<NodeId> routeRecord;
    /// Kept sorted and duplicate free.
    std::vector<NodeId> avoidList;
    std::uint32_t hopLimit = 16;
};

/// RREP and RERR travel hop by hop along an explicit path; `cursor` indexes the
/// node currently holding (or about to receive) the packet.
struct RouteReplyBody
{
    SourceRoute route;
    SourceRoute path;
    std::size_t cursor = 0;
};

struct RouteErrorBody
{
    NodeId linkFrom = 0;
    NodeId linkTo = 0;
    std::optional<NodeId> alarm;
    SourceRoute path;
    std::size_t cursor = 0;
};

struct DataBody
{
    SourceRoute route;
    std::size_t index = 0;
    std::uint32_t payloadSize = 64;
    /// Simulator-wide identity of the application payload.
    std::uint64_t uid = 0;
};

struct Packet
{
    NodeId src = 0;
    NodeId dst = 0;
    std::uint32_t seq = 0;
    std::variant<RouteRequestBody, RouteReplyBody, RouteErrorBody, DataBody> body;

    PacketType Type() const { return static_cast<PacketType>(body.index()); }

    bool IsData() const { return Type() == PacketType::Data; }

    const DataBody& Data() const { return std::get<DataBody>(body); }
    DataBody& Data() { return std::get<DataBody>(body); }
    const RouteRequestBody& Rreq() const { return std::get<RouteRequestBody>(body); }
    RouteRequestBody& Rreq() { return std::get<RouteRequestBody>(body); }
    const RouteReplyBody& Rrep() const { return std::get<RouteReplyBody>(body); }
    RouteReplyBody& Rrep() { return std::get<RouteReplyBody>(body); }
    const RouteErrorBody& Rerr() const { return std::get<RouteErrorBody>(body); }
    RouteErrorBody& Rerr() { return std::get<RouteErrorBody>(body); }
};

Packet MakeData(NodeId src, NodeId dst, std::uint32_t seq, SourceRoute route,
                std::uint32_t payloadSize, std::uint64_t uid);

using Digest = std::uint64_t;

/**
 * Checksum of a DATA packet's identifying fields: source, destination, sequence
 * number, source route and payload identity. The hop cursor is excluded since
 * it changes legitimately at every hop.
 *
 * Throws std::logic_error for non-DATA packets.
 */
Digest PacketDigest(const Packet& p);

/// Bytes on air: payload plus a fixed 40-byte header for DATA, header plus
/// 4 bytes per carried node id for control packets.
std::uint32_t WireSize(const Packet& p);

constexpr std::uint32_t kHeaderBytes = 40;

enum class Sign
{
    Positive,
    Negative,
};

struct ObservationEvent
{
    NodeId observer = 0;
    NodeId subject = 0;
    Sign sign = Sign::Positive;
    SimTime time{};

    bool operator==(const ObservationEvent&) const = default;
};

} // namespace ocean

#endif // OCEAN_CORE_MODEL_H
