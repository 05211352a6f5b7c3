#include "ocean/oracle.h"

#include "ocean/simulator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

namespace ocean
{

namespace
{

bool
Contains(const std::vector<NodeId>& v, NodeId n)
{
    return std::find(v.begin(), v.end(), n) != v.end();
}

bool
Overlaps(const std::vector<NodeId>& a, const std::vector<NodeId>& b)
{
    return std::any_of(a.begin(), a.end(), [&](NodeId n) { return Contains(b, n); });
}

struct Broadcast
{
    double time;
    NodeId sender;
    std::vector<NodeId> record;
    std::vector<NodeId> avoid;

    bool operator>(const Broadcast& o) const
    {
        return time != o.time ? time > o.time : sender > o.sender;
    }
};

} // namespace

double
DiscoveryJitterSeconds(NodeId v)
{
    return std::ldexp(0.010, static_cast<int>(v));
}

std::set<SourceRoute>
EnumerateAcceptedRoutes(const DiscoveryCase& c)
{
    std::vector<std::vector<NodeId>> adj(c.numNodes);
    for (const auto& [a, b] : c.links)
    {
        if (!Contains(adj[a], b))
        {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    const auto& faulty = c.faulty;

    std::set<SourceRoute> accepted;
    std::vector<bool> heard(c.numNodes, false);
    std::priority_queue<Broadcast, std::vector<Broadcast>, std::greater<>> pending;
    pending.push(Broadcast{0.0, c.src, {c.src}, faulty[c.src]});

    while (!pending.empty())
    {
        const Broadcast b = pending.top();
        pending.pop();
        for (NodeId x : adj[b.sender])
        {
            if (x == c.src)
            {
                continue;
            }
            const bool first = !heard[x];
            heard[x] = true;
            if (!first && x != c.dst)
            {
                continue;
            }
            if (Contains(b.record, x) || Overlaps(b.record, b.avoid))
            {
                continue;
            }
            if (x == c.dst)
            {
                SourceRoute route = b.record;
                route.push_back(x);
                bool ok = true;
                // The reply visits relays from the destination side back to the source.
                for (std::size_t i = route.size() - 1; i-- > 0 && ok;)
                {
                    ok = !Overlaps(route, faulty[route[i]]);
                }
                if (ok)
                {
                    accepted.insert(route);
                }
                continue;
            }
            if (Contains(b.avoid, x) || b.record.size() >= c.hopLimit)
            {
                continue;
            }
            Broadcast next{b.time + DiscoveryJitterSeconds(x), x, b.record, b.avoid};
            next.record.push_back(x);
            for (NodeId f : faulty[x])
            {
                if (f != c.src && !Contains(next.avoid, f))
                {
                    next.avoid.push_back(f);
                }
            }
            pending.push(std::move(next));
        }
    }
    return accepted;
}

ScenarioConfig
DiscoveryScenario(const DiscoveryCase& c)
{
    ScenarioConfig cfg;
    cfg.numNodes = c.numNodes;
    cfg.staticLinks = c.links;
    cfg.pauseTime = std::numeric_limits<double>::infinity();
    cfg.mode = DefenseMode::Ocean;
    cfg.flows = {FlowSpec{c.src, c.dst}};
    cfg.flowStart = 1.0;
    cfg.simDuration = 5.0;
    cfg.rreqTimeout = 30.0;
    cfg.sendBufferTimeout = 30.0;
    cfg.hopLimit = c.hopLimit;
    for (NodeId v = 0; v < c.numNodes; ++v)
    {
        cfg.fixedJitter.push_back(DiscoveryJitterSeconds(v));
        for (NodeId f : c.faulty[v])
        {
            cfg.initialFaulty.emplace_back(v, f);
        }
    }
    return cfg;
}

DiscoveryCase
RandomDiscoveryCase(Rng& rng, std::uint32_t maxNodes, double faultyProb)
{
    while (true)
    {
        DiscoveryCase c;
        c.numNodes = 3 + static_cast<std::uint32_t>(rng.Below(maxNodes - 2));
        for (NodeId a = 0; a < c.numNodes; ++a)
        {
            for (NodeId b = a + 1; b < c.numNodes; ++b)
            {
                if (rng.Bernoulli(0.5))
                {
                    c.links.emplace_back(a, b);
                }
            }
        }
        c.src = static_cast<NodeId>(rng.Below(c.numNodes));
        do
        {
            c.dst = static_cast<NodeId>(rng.Below(c.numNodes));
        } while (c.dst == c.src);
        c.faulty.assign(c.numNodes, {});
        for (NodeId o = 0; o < c.numNodes; ++o)
        {
            for (NodeId s = 0; s < c.numNodes; ++s)
            {
                if (s != o && rng.Bernoulli(faultyProb))
                {
                    c.faulty[o].push_back(s);
                }
            }
        }
        // Keep graphs where the source and destination are connected.
        std::vector<bool> seen(c.numNodes, false);
        std::vector<NodeId> stack{c.src};
        seen[c.src] = true;
        while (!stack.empty())
        {
            const NodeId u = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : c.links)
            {
                const NodeId v = a == u ? b : (b == u ? a : u);
                if (v != u && !seen[v])
                {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        if (seen[c.dst])
        {
            return c;
        }
    }
}

std::set<SourceRoute>
SimulatedAcceptedRoutes(const DiscoveryCase& c)
{
    Simulator sim(DiscoveryScenario(c));
    sim.Run();
    const auto& routes = sim.AcceptedRoutes(c.src);
    return {routes.begin(), routes.end()};
}

std::string
Describe(const DiscoveryCase& c)
{
    std::ostringstream os;
    os << "nodes=" << c.numNodes << " src=" << c.src << " dst=" << c.dst << " links=";
    for (const auto& [a, b] : c.links)
    {
        os << a << "-" << b << " ";
    }
    os << "faulty=";
    for (NodeId v = 0; v < c.numNodes; ++v)
    {
        for (NodeId f : c.faulty[v])
        {
            os << v << ":" << f << " ";
        }
    }
    return os.str();
}

std::string
Describe(const std::set<SourceRoute>& routes)
{
    std::ostringstream os;
    os << "{";
    bool firstRoute = true;
    for (const auto& r : routes)
    {
        os << (firstRoute ? "" : " ") << "[";
        for (std::size_t i = 0; i < r.size(); ++i)
        {
            os << (i ? "," : "") << r[i];
        }
        os << "]";
        firstRoute = false;
    }
    os << "}";
    return os.str();
}

} // namespace ocean
