#include "ocean/core_model.h"

#include <algorithm>
#include <stdexcept>

namespace ocean
{

namespace
{

constexpr std::uint64_t
Mix(std::uint64_t x)
{
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t
Combine(std::uint64_t h, std::uint64_t v)
{
    return Mix(h ^ (v + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2)));
}

} // namespace

bool
IsValidRoutePrefix(std::span<const NodeId> hops)
{
    if (hops.empty())
    {
        return false;
    }
    for (std::size_t i = 0; i < hops.size(); ++i)
    {
        for (std::size_t j = i + 1; j < hops.size(); ++j)
        {
            if (hops[i] == hops[j])
            {
                return false;
            }
        }
    }
    return true;
}

bool
IsValidSourceRoute(std::span<const NodeId> hops)
{
    return hops.size() >= 2 && IsValidRoutePrefix(hops);
}

bool
RouteUsesLink(std::span<const NodeId> hops, NodeId a, NodeId b)
{
    for (std::size_t i = 0; i + 1 < hops.size(); ++i)
    {
        if ((hops[i] == a && hops[i + 1] == b) || (hops[i] == b && hops[i + 1] == a))
        {
            return true;
        }
    }
    return false;
}

bool
RouteContains(std::span<const NodeId> hops, NodeId n)
{
    return std::find(hops.begin(), hops.end(), n) != hops.end();
}

const char*
ToString(PacketType t)
{
    switch (t)
    {
    case PacketType::RouteRequest:
        return "RREQ";
    case PacketType::RouteReply:
        return "RREP";
    case PacketType::RouteError:
        return "RERR";
    case PacketType::Data:
        return "DATA";
    }
    return "?";
}

Packet
MakeData(NodeId src, NodeId dst, std::uint32_t seq, SourceRoute route, std::uint32_t payloadSize,
         std::uint64_t uid)
{
    Packet p;
    p.src = src;
    p.dst = dst;
    p.seq = seq;
    p.body = DataBody{std::move(route), 0, payloadSize, uid};
    return p;
}

Digest
PacketDigest(const Packet& p)
{
    if (!p.IsData())
    {
        throw std::logic_error("PacketDigest: only DATA packets carry a checksum");
    }
    const auto& d = p.Data();
    std::uint64_t h = Mix(0x4f434541ULL);
    h = Combine(h, p.src);
    h = Combine(h, p.dst);
    h = Combine(h, p.seq);
    h = Combine(h, d.route.size());
    for (NodeId n : d.route)
    {
        h = Combine(h, n);
    }
    h = Combine(h, d.payloadSize);
    h = Combine(h, d.uid);
    return h;
}

std::uint32_t
WireSize(const Packet& p)
{
    constexpr std::uint32_t idBytes = 4;
    switch (p.Type())
    {
    case PacketType::Data:
        return kHeaderBytes + p.Data().payloadSize;
    case PacketType::RouteRequest: {
        const auto& r = p.Rreq();
        return kHeaderBytes + idBytes * static_cast<std::uint32_t>(r.routeRecord.size() +
                                                                   r.avoidList.size());
    }
    case PacketType::RouteReply:
        return kHeaderBytes + idBytes * static_cast<std::uint32_t>(p.Rrep().route.size());
    case PacketType::RouteError:
        return kHeaderBytes + 3 * idBytes;
    }
    return kHeaderBytes;
}

} // namespace ocean
