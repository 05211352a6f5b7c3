#include "ocean/simulator.h"

#include "ocean/behavior.h"
#include "ocean/chipcount.h"
#include "ocean/dsr_routing.h"
#include "ocean/neighbor_watch.h"
#include "ocean/sec_hand.h"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ocean
{

Duration
TxTime(std::uint32_t bytes, double bandwidth)
{
    const double us = std::ceil(static_cast<double>(bytes) * 8.0 * 1e6 / bandwidth - 1e-9);
    return Duration{static_cast<std::int64_t>(us)};
}

struct MacFrame
{
    Packet packet;
    std::optional<NodeId> to;
    std::uint32_t attempt = 0;
};

struct Node
{
    struct Buffered
    {
        Packet packet;
        SimTime since;
    };

    Node(NodeId self, const ScenarioConfig& cfg, BehaviorProfile p, std::uint64_t seed)
        : id(self),
          profile(std::move(p)),
          defended(cfg.mode != DefenseMode::Defenseless && profile.runsOcean),
          watching(defended || (cfg.economy && cfg.chips.scheme == ChipScheme::Pessimistic)),
          ranker(cfg.ranker),
          watch(self, Seconds(cfg.watchTimeout)),
          routing(self, DsrParams{cfg.hopLimit, Seconds(cfg.cacheLifetime)},
                  defended ? &ranker : nullptr),
          secHand(self),
          rng(seed, 0x6e6f6465ULL * 1000 + self)
    {
        if (cfg.economy)
        {
            chips.emplace(cfg.chips);
        }
    }

    NodeId id;
    BehaviorProfile profile;
    bool defended;
    bool watching;
    RouteRanker ranker;
    NeighborWatch watch;
    DsrRouting routing;
    std::optional<ChipLedger> chips;
    SecHand secHand;
    Rng rng;

    std::deque<MacFrame> mac;
    bool busy = false;
    std::map<NodeId, std::deque<Buffered>> buffer;
    std::map<NodeId, SimTime> lastRreq;
    std::optional<SimTime> pendingCheck;
    std::vector<SourceRoute> accepted;
};

namespace
{

RandomWaypoint
MakeMobility(const ScenarioConfig& cfg)
{
    cfg.Validate();
    if (!cfg.staticPositions.empty())
    {
        return RandomWaypoint(cfg.Mobility(), cfg.staticPositions);
    }
    if (!cfg.staticLinks.empty())
    {
        return RandomWaypoint(cfg.Mobility(), std::vector<Vec2>(cfg.numNodes));
    }
    return RandomWaypoint(cfg.Mobility(), cfg.numNodes, cfg.seed);
}

constexpr std::uint32_t kMaxRebuffers = 2;

} // namespace

Simulator::Simulator(const ScenarioConfig& cfg)
    : m_cfg(cfg),
      m_mobility(MakeMobility(cfg)),
      m_channel(cfg.seed, 0x6368616eULL),
      m_traffic(cfg.seed, 0x74726166ULL)
{
    m_end = SimTime{} + Seconds(m_cfg.simDuration);
    if (!m_cfg.staticLinks.empty())
    {
        m_links.resize(m_cfg.numNodes);
        for (const auto& [a, b] : m_cfg.staticLinks)
        {
            m_links[a].push_back(b);
            m_links[b].push_back(a);
        }
        for (auto& l : m_links)
        {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }
    AssignBehaviors();
    m_metrics.rejectedBy.assign(m_cfg.numNodes, 0);
    m_metrics.deniedBy.assign(m_cfg.numNodes, 0);
    for (const auto& n : m_nodes)
    {
        ++m_metrics.Class(n->profile.kind).nodes;
    }
}

Simulator::~Simulator() = default;

void
Simulator::AssignBehaviors()
{
    std::vector<BehaviorKind> kinds(m_cfg.numNodes, BehaviorKind::Cooperating);
    Rng placement(m_cfg.seed, 0x706c6163ULL);
    std::vector<NodeId> order(m_cfg.numNodes);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i)
    {
        std::swap(order[i - 1], order[placement.Below(i)]);
    }
    for (std::uint32_t k = 0; k < m_cfg.misbehaving; ++k)
    {
        kinds[order[k]] = m_cfg.misbehavior;
    }
    for (const auto& [n, kind] : m_cfg.behaviors)
    {
        kinds[n] = kind;
    }
    m_nodes.reserve(m_cfg.numNodes);
    for (NodeId n = 0; n < m_cfg.numNodes; ++n)
    {
        BehaviorProfile p;
        p.kind = kinds[n];
        if (p.kind != BehaviorKind::Cooperating)
        {
            p.runsOcean = m_cfg.misbehavingRunsOcean;
            p.tampersAvoidList = m_cfg.tamperAvoidList && p.kind == BehaviorKind::Misleading;
            p.rushVictims = m_cfg.rushVictims;
            if (p.Tampers())
            {
                p.routePadding = m_cfg.routePadding;
                p.bogusHop = m_cfg.bogusHop;
            }
        }
        m_nodes.push_back(std::make_unique<Node>(n, m_cfg, std::move(p), m_cfg.seed));
    }
    for (const auto& [o, s] : m_cfg.initialFaulty)
    {
        Node& n = *m_nodes[o];
        if (n.defended && n.ranker.MarkFaulty(s, SimTime{}))
        {
            ScheduleSecondChance(n);
        }
    }
}

BehaviorKind
Simulator::KindOf(NodeId n) const
{
    return m_nodes.at(n)->profile.kind;
}

const RouteRanker&
Simulator::Ranker(NodeId n) const
{
    return m_nodes.at(n)->ranker;
}

const std::vector<SourceRoute>&
Simulator::AcceptedRoutes(NodeId n) const
{
    return m_nodes.at(n)->accepted;
}

std::vector<NodeId>
Simulator::Neighbors(NodeId n, SimTime now)
{
    if (!m_links.empty())
    {
        return m_links[n];
    }
    if (m_snapshotTime != now)
    {
        m_snapshot.resize(m_cfg.numNodes);
        for (NodeId m = 0; m < m_cfg.numNodes; ++m)
        {
            m_snapshot[m] = m_mobility.Position(m, now);
        }
        m_snapshotTime = now;
    }
    std::vector<NodeId> out;
    const Vec2 here = m_snapshot[n];
    for (NodeId m = 0; m < m_cfg.numNodes; ++m)
    {
        if (m != n && Distance(here, m_snapshot[m]) <= m_cfg.radioRange)
        {
            out.push_back(m);
        }
    }
    return out;
}

std::optional<std::uint32_t>
Simulator::HopDistance(NodeId a, NodeId b, SimTime now)
{
    std::vector<std::vector<NodeId>> adj(m_cfg.numNodes);
    for (NodeId n = 0; n < m_cfg.numNodes; ++n)
    {
        adj[n] = Neighbors(n, now);
    }
    std::vector<std::int64_t> dist(m_cfg.numNodes, -1);
    std::deque<NodeId> frontier{a};
    dist[a] = 0;
    while (!frontier.empty())
    {
        const NodeId u = frontier.front();
        frontier.pop_front();
        if (u == b)
        {
            return static_cast<std::uint32_t>(dist[u]);
        }
        for (NodeId v : adj[u])
        {
            if (dist[v] < 0)
            {
                dist[v] = dist[u] + 1;
                frontier.push_back(v);
            }
        }
    }
    return std::nullopt;
}

RunMetrics
Simulator::Run()
{
    if (m_ran)
    {
        throw std::logic_error("Simulator::Run called twice");
    }
    m_ran = true;
    ScheduleTraffic();
    m_queue.Schedule(SimTime{} + Seconds(m_cfg.sampleInterval), [this] { Sample(); });
    while (!m_queue.Empty() && m_queue.NextTime() < m_end)
    {
        auto [t, handler] = m_queue.Pop();
        m_now = t;
        handler();
        ++m_metrics.events;
    }
    m_now = m_end;

    for (std::uint64_t uid = 0; uid < m_packets.size(); ++uid)
    {
        if (!m_packets[uid].fate)
        {
            SetFate(uid, Fate::InFlight);
        }
    }
    for (const auto& n : m_nodes)
    {
        m_metrics.protocolErrors += n->routing.ProtocolErrors();
        m_metrics.watchPositive += n->watch.Stats().positive;
        m_metrics.watchNegative += n->watch.Stats().negative;
    }
    std::uint64_t total = 0;
    for (auto c : m_metrics.fates)
    {
        total += c;
    }
    if (total != m_metrics.originated)
    {
        throw std::logic_error("packet conservation violated");
    }
    return m_metrics;
}

// Traffic

void
Simulator::ScheduleTraffic()
{
    const SimTime start = SimTime{} + Seconds(m_cfg.flowStart);
    if (!m_cfg.flows.empty())
    {
        for (std::size_t f = 0; f < m_cfg.flows.size(); ++f)
        {
            m_queue.Schedule(start, [this, f] { FlowTick(f, 0); });
        }
        return;
    }
    const double interval = 1.0 / m_cfg.sourceRate;
    for (std::size_t slot = 0; slot < m_cfg.concurrentConnections; ++slot)
    {
        const SimTime at = start + Seconds(m_traffic.Uniform(0.0, interval));
        m_queue.Schedule(at, [this, slot] { StartConnection(slot); });
    }
}

void
Simulator::FlowTick(std::size_t flow, std::uint64_t k)
{
    Originate(m_cfg.flows[flow].src, m_cfg.flows[flow].dst);
    const SimTime next =
        SimTime{} + Seconds(m_cfg.flowStart + static_cast<double>(k + 1) / m_cfg.sourceRate);
    m_queue.Schedule(next, [this, flow, k] { FlowTick(flow, k + 1); });
}

void
Simulator::StartConnection(std::size_t slot)
{
    const double interval = 1.0 / m_cfg.sourceRate;
    std::vector<std::vector<NodeId>> adj(m_cfg.numNodes);
    for (NodeId n = 0; n < m_cfg.numNodes; ++n)
    {
        adj[n] = Neighbors(n, m_now);
    }
    const auto hops = [&](NodeId a, NodeId b) -> std::int64_t {
        std::vector<std::int64_t> dist(m_cfg.numNodes, -1);
        std::deque<NodeId> frontier{a};
        dist[a] = 0;
        while (!frontier.empty())
        {
            const NodeId u = frontier.front();
            frontier.pop_front();
            if (u == b)
            {
                return dist[u];
            }
            for (NodeId v : adj[u])
            {
                if (dist[v] < 0)
                {
                    dist[v] = dist[u] + 1;
                    frontier.push_back(v);
                }
            }
        }
        return -1;
    };
    for (int attempt = 0; attempt < 100; ++attempt)
    {
        const auto src = static_cast<NodeId>(m_traffic.Below(m_cfg.numNodes));
        const auto dst = static_cast<NodeId>(m_traffic.Below(m_cfg.numNodes));
        if (src == dst)
        {
            continue;
        }
        const std::int64_t h = hops(src, dst);
        if (h < static_cast<std::int64_t>(m_cfg.minConnectionHops))
        {
            continue;
        }
        ++m_metrics.connections;
        for (std::uint32_t i = 0; i < m_cfg.packetsPerConnection; ++i)
        {
            m_queue.Schedule(m_now + Seconds(i * interval), [this, src, dst] { Originate(src, dst); });
        }
        m_queue.Schedule(m_now + Seconds(m_cfg.packetsPerConnection * interval),
                         [this, slot] { StartConnection(slot); });
        return;
    }
    ++m_metrics.connectionRetries;
    m_queue.Schedule(m_now + Seconds(interval), [this, slot] { StartConnection(slot); });
}

void
Simulator::Sample()
{
    double sum = 0.0;
    for (const auto& n : m_nodes)
    {
        sum += static_cast<double>(n->ranker.FaultySet().size());
        n->routing.Cache().EvictStale(m_now);
    }
    m_metrics.faultySeries.push_back(sum / static_cast<double>(m_nodes.size()));
    m_queue.Schedule(m_now + Seconds(m_cfg.sampleInterval), [this] { Sample(); });
}

// Origination and discovery

void
Simulator::Originate(NodeId src, NodeId dst)
{
    Node& n = *m_nodes[src];
    const std::uint64_t uid = m_packets.size();
    m_packets.push_back(PacketRecord{n.profile.kind, std::nullopt, 0});
    ++m_metrics.originated;
    ++m_metrics.Class(n.profile.kind).originated;
    Packet p = MakeData(src, dst, static_cast<std::uint32_t>(uid), {}, m_cfg.payload, uid);
    SendOrBuffer(n, std::move(p));
}

void
Simulator::SendOrBuffer(Node& n, Packet p)
{
    const NodeId dst = p.dst;
    if (auto route = n.routing.SelectRoute(dst, m_now))
    {
        p.Data().route = std::move(*route);
        p.Data().index = 0;
        auto action = n.routing.HandleData(p, n.id);
        if (auto* fwd = std::get_if<ForwardData>(&action))
        {
            Enqueue(n, std::move(fwd->packet), fwd->nextHop);
            return;
        }
        throw std::logic_error("source could not forward its own packet");
    }
    p.Data().route.clear();
    n.buffer[dst].push_back(Node::Buffered{std::move(p), m_now});
    auto last = n.lastRreq.find(dst);
    if (last == n.lastRreq.end() || m_now - last->second >= Seconds(m_cfg.rreqTimeout))
    {
        Discover(n, dst);
    }
}

void
Simulator::Discover(Node& n, NodeId dst)
{
    n.lastRreq[dst] = m_now;
    ++m_metrics.rreqs;
    Enqueue(n, n.routing.OriginateRreq(dst, m_now), std::nullopt);
    const NodeId id = n.id;
    m_queue.Schedule(m_now + Seconds(m_cfg.rreqTimeout), [this, id, dst] { RetryDiscovery(id, dst); });
}

void
Simulator::RetryDiscovery(NodeId id, NodeId dst)
{
    Node& n = *m_nodes[id];
    auto it = n.buffer.find(dst);
    if (it == n.buffer.end())
    {
        return;
    }
    auto& q = it->second;
    const Duration limit = Seconds(m_cfg.sendBufferTimeout);
    while (!q.empty() && m_now - q.front().since >= limit)
    {
        SetFate(q.front().packet.Data().uid, Fate::NoRoute);
        q.pop_front();
    }
    if (q.empty())
    {
        n.buffer.erase(it);
        return;
    }
    if (n.routing.SelectRoute(dst, m_now))
    {
        DrainBuffer(n, dst);
        return;
    }
    if (m_now - n.lastRreq[dst] >= Seconds(m_cfg.rreqTimeout))
    {
        Discover(n, dst);
    }
}

void
Simulator::DrainBuffer(Node& n, NodeId dst)
{
    auto it = n.buffer.find(dst);
    if (it == n.buffer.end())
    {
        return;
    }
    std::deque<Node::Buffered> pending = std::move(it->second);
    n.buffer.erase(it);
    for (auto& b : pending)
    {
        SendOrBuffer(n, std::move(b.packet));
    }
}

// MAC

void
Simulator::Enqueue(Node& n, Packet p, std::optional<NodeId> to)
{
    n.mac.push_back(MacFrame{std::move(p), to, 0});
    if (!n.busy)
    {
        StartTx(n);
    }
}

void
Simulator::StartTx(Node& n)
{
    if (n.mac.empty())
    {
        n.busy = false;
        return;
    }
    n.busy = true;
    MacFrame& o = n.mac.front();
    ++o.attempt;
    ++m_metrics.transmissions;
    if (m_trace)
    {
        TraceTx(n, o.packet, o.to, o.attempt);
    }
    auto receivers = Neighbors(n.id, m_now);
    const NodeId id = n.id;
    m_queue.Schedule(m_now + TxTime(WireSize(o.packet), m_cfg.bandwidth),
                     [this, id, receivers = std::move(receivers)] { EndTx(id, receivers); });
}

void
Simulator::EndTx(NodeId sender, const std::vector<NodeId>& receivers)
{
    Node& n = *m_nodes[sender];
    MacFrame o = std::move(n.mac.front());
    n.mac.pop_front();

    std::vector<NodeId> heard;
    heard.reserve(receivers.size());
    for (NodeId r : receivers)
    {
        if (!m_channel.Bernoulli(m_cfg.linkLossProb))
        {
            heard.push_back(r);
        }
    }
    bool reached = false;
    for (NodeId r : heard)
    {
        if (!o.to || *o.to == r)
        {
            reached = reached || o.to.has_value();
            Receive(*m_nodes[r], o.packet, sender);
        }
        else
        {
            Overhear(*m_nodes[r], o.packet, sender);
        }
    }
    if (o.to)
    {
        if (reached)
        {
            OnUnicastSuccess(n, o.packet, *o.to);
        }
        else if (o.attempt < m_cfg.retransmitBudget)
        {
            n.mac.push_front(std::move(o));
        }
        else
        {
            OnLinkFailure(n, std::move(o.packet), *o.to);
        }
    }
    StartTx(n);
}

void
Simulator::OnUnicastSuccess(Node& n, const Packet& p, NodeId to)
{
    if (!p.IsData())
    {
        return;
    }
    if (n.watching && n.watch.OnHandoff(p, to, m_now))
    {
        const NodeId id = n.id;
        m_queue.Schedule(m_now + n.watch.Timeout(), [this, id] { ExpireWatch(id); });
    }
    if (n.chips && n.chips->Params().scheme == ChipScheme::Optimistic &&
        (n.chips->Params().creditDestination || to != p.dst))
    {
        n.chips->CreditOnAccept(to, m_now);
    }
}

void
Simulator::OnLinkFailure(Node& n, Packet p, NodeId to)
{
    n.routing.Cache().PurgeLink(n.id, to);
    if (!p.IsData())
    {
        return;
    }
    const std::uint64_t uid = p.Data().uid;
    if (p.src == n.id)
    {
        PacketRecord& rec = m_packets[uid];
        if (rec.rebuffers < kMaxRebuffers)
        {
            ++rec.rebuffers;
            SendOrBuffer(n, std::move(p));
        }
        else
        {
            SetFate(uid, Fate::LinkLoss);
        }
        return;
    }
    SetFate(uid, Fate::LinkLoss);
    Packet rerr = n.routing.HandleBrokenLink(p, to);
    if (m_cfg.mode == DefenseMode::SecHand && n.defended)
    {
        n.secHand.TagBrokenLink(rerr, n.ranker);
        if (rerr.Rerr().alarm)
        {
            ++m_metrics.alarms;
        }
    }
    SendRerr(n, std::move(rerr));
}

Duration
Simulator::Jitter(Node& n)
{
    if (!m_cfg.fixedJitter.empty())
    {
        return Seconds(m_cfg.fixedJitter[n.id]);
    }
    const auto maxUs = static_cast<std::uint64_t>(std::llround(m_cfg.rreqJitterMax * 1e6));
    return Duration{static_cast<std::int64_t>(n.rng.Below(maxUs + 1))};
}

// Reception

void
Simulator::Receive(Node& r, const Packet& p, NodeId from)
{
    switch (p.Type())
    {
    case PacketType::RouteRequest:
        OnRreq(r, p);
        break;
    case PacketType::RouteReply:
        OnRrep(r, p);
        break;
    case PacketType::RouteError:
        OnRerr(r, p);
        break;
    case PacketType::Data:
        OnData(r, p, from);
        break;
    }
}

void
Simulator::Overhear(Node& r, const Packet& p, NodeId from)
{
    if (p.IsData() && r.watching)
    {
        if (auto ev = r.watch.OnOverhear(p, from, m_now))
        {
            if (r.defended)
            {
                r.ranker.ApplyEvent(*ev);
            }
            if (r.chips && r.chips->Params().scheme == ChipScheme::Pessimistic)
            {
                r.chips->CreditOnObservedForward(ev->subject, m_now);
            }
        }
    }
    else if (p.Type() == PacketType::RouteError && m_cfg.mode == DefenseMode::SecHand && r.defended)
    {
        if (r.secHand.OnOverhearAlarm(p, m_now, r.ranker))
        {
            ScheduleSecondChance(r);
        }
    }
}

void
Simulator::OnRreq(Node& r, const Packet& p)
{
    RreqDecision decision = RreqDecision::Participate;
    if (p.dst != r.id)
    {
        decision = DecideRreq(r.profile, p, r.id);
    }
    if (decision == RreqDecision::SilentDrop)
    {
        return;
    }
    if (decision == RreqDecision::RushTampered)
    {
        auto action = r.routing.HandleRreq(StripAvoidList(r.profile, p, r.id), m_now);
        if (auto* rb = std::get_if<Rebroadcast>(&action))
        {
            Packet out = StripAvoidList(r.profile, rb->packet, r.id);
            std::optional<NodeId> bogus;
            if (r.profile.bogusHop)
            {
                const auto near = Neighbors(r.id, m_now);
                std::vector<NodeId> far;
                for (NodeId m = 0; m < m_cfg.numNodes; ++m)
                {
                    if (m != r.id && !std::binary_search(near.begin(), near.end(), m) &&
                        !RouteContains(out.Rreq().routeRecord, m))
                    {
                        far.push_back(m);
                    }
                }
                if (!far.empty())
                {
                    bogus = far[r.rng.Below(far.size())];
                }
            }
            PadRouteRecord(r.profile, out, m_cfg.numNodes + r.id * m_cfg.routePadding, bogus);
            Enqueue(r, std::move(out), std::nullopt);
        }
        return;
    }
    auto action = r.routing.HandleRreq(p, m_now);
    if (auto* rb = std::get_if<Rebroadcast>(&action))
    {
        const NodeId id = r.id;
        m_queue.Schedule(m_now + Jitter(r), [this, id, pkt = std::move(rb->packet)]() mutable {
            Enqueue(*m_nodes[id], std::move(pkt), std::nullopt);
        });
    }
    else if (auto* reply = std::get_if<Reply>(&action))
    {
        ++m_metrics.rreps;
        reply->rrep.Rrep().cursor = 1;
        Enqueue(r, std::move(reply->rrep), reply->nextHop);
    }
}

void
Simulator::OnRrep(Node& r, const Packet& p)
{
    auto action = r.routing.HandleRrep(p, m_now);
    if (auto* acc = std::get_if<AcceptRoute>(&action))
    {
        r.accepted.push_back(acc->route);
        DrainBuffer(r, acc->route.back());
    }
    else if (auto* relay = std::get_if<RelayReply>(&action))
    {
        Enqueue(r, std::move(relay->packet), relay->nextHop);
    }
}

void
Simulator::OnRerr(Node& r, const Packet& p)
{
    if (m_cfg.mode == DefenseMode::SecHand && r.defended &&
        r.secHand.OnOverhearAlarm(p, m_now, r.ranker))
    {
        ScheduleSecondChance(r);
    }
    auto action = r.routing.HandleRerr(p);
    if (auto* relay = std::get_if<RelayError>(&action))
    {
        Enqueue(r, std::move(relay->packet), relay->nextHop);
    }
}

void
Simulator::OnData(Node& r, const Packet& p, NodeId from)
{
    const std::uint64_t uid = p.Data().uid;
    auto action = r.routing.HandleData(p, from);
    if (std::holds_alternative<DeliverData>(action))
    {
        SetFate(uid, Fate::Delivered);
        return;
    }
    if (std::holds_alternative<DropNoRoute>(action))
    {
        SetFate(uid, Fate::NoRoute);
        return;
    }
    if (DecideDataForward(r.profile, p, r.id) == DataDecision::SilentDrop)
    {
        SetFate(uid, Fate::Misbehavior);
        return;
    }
    if (std::holds_alternative<RejectMalicious>(action))
    {
        ++m_metrics.rejectedBy[r.id];
        SetFate(uid, Fate::Rejected);
        return;
    }
    if (r.chips && r.chips->AdmitForward(from, m_now) == Admission::Deny)
    {
        ++m_metrics.deniedBy[r.id];
        SetFate(uid, Fate::EconomyDenied);
        return;
    }
    auto& fwd = std::get<ForwardData>(action);
    Enqueue(r, std::move(fwd.packet), fwd.nextHop);
}

// Misbehavior layer

void
Simulator::ExpireWatch(NodeId id)
{
    Node& n = *m_nodes[id];
    for (const auto& entry : n.watch.ExpireEntries(m_now))
    {
        if (!n.defended)
        {
            continue;
        }
        ObservationEvent ev = n.watch.NegativeFor(entry);
        ev.time = m_now;
        if (n.ranker.ApplyEvent(ev))
        {
            OnBecameFaulty(n, entry.neighbor, entry);
        }
    }
}

void
Simulator::OnBecameFaulty(Node& n, NodeId accused, const ChecksumBufferEntry& context)
{
    ScheduleSecondChance(n);
    if (m_cfg.mode != DefenseMode::SecHand)
    {
        return;
    }
    Packet rerr = MakeRouteError(n.id, context.route, accused, 0);
    if (n.secHand.EmitAlarm(accused, rerr))
    {
        ++m_metrics.alarms;
        SendRerr(n, std::move(rerr));
    }
}

void
Simulator::SendRerr(Node& n, Packet rerr)
{
    auto& body = rerr.Rerr();
    if (body.path.size() < 2)
    {
        // The reporter is the traffic source: only an alarm is worth a
        // one-hop broadcast.
        if (body.alarm)
        {
            ++m_metrics.rerrs;
            Enqueue(n, std::move(rerr), std::nullopt);
        }
        return;
    }
    ++m_metrics.rerrs;
    body.cursor = 1;
    const NodeId next = body.path[1];
    Enqueue(n, std::move(rerr), next);
}

void
Simulator::ScheduleSecondChance(Node& n)
{
    if (!n.defended)
    {
        return;
    }
    std::optional<SimTime> due;
    for (NodeId f : n.ranker.FaultySet())
    {
        const SimTime t = n.ranker.Find(f)->lastEvent + n.ranker.Params().faultyTimeout;
        if (!due || t < *due)
        {
            due = t;
        }
    }
    if (!due || (n.pendingCheck && *n.pendingCheck <= *due))
    {
        return;
    }
    const SimTime at = std::max(*due, m_now);
    n.pendingCheck = at;
    const NodeId id = n.id;
    m_queue.Schedule(at, [this, id, at] { SecondChance(id, at); });
}

void
Simulator::SecondChance(NodeId id, SimTime due)
{
    Node& n = *m_nodes[id];
    if (n.pendingCheck != due)
    {
        return;
    }
    n.pendingCheck.reset();
    for (NodeId back : n.ranker.SecondChanceSweep(m_now))
    {
        n.secHand.OnReinstated(back);
    }
    ScheduleSecondChance(n);
}

// Bookkeeping

void
Simulator::SetFate(std::uint64_t uid, Fate f)
{
    PacketRecord& rec = m_packets.at(uid);
    if (rec.fate)
    {
        throw std::logic_error("packet " + std::to_string(uid) + " reached a second terminal state");
    }
    rec.fate = f;
    ++m_metrics.fates[static_cast<std::size_t>(f)];
    if (f == Fate::Delivered)
    {
        ++m_metrics.delivered;
        ++m_metrics.Class(rec.sourceKind).delivered;
    }
    if (m_trace)
    {
        nlohmann::json j{{"t", m_now.time_since_epoch().count()},
                         {"ev", "fate"},
                         {"uid", uid},
                         {"fate", ToString(f)}};
        *m_trace << j.dump() << '\n';
    }
}

void
Simulator::TraceTx(const Node& n, const Packet& p, std::optional<NodeId> to, std::uint32_t attempt)
{
    nlohmann::json j{{"t", m_now.time_since_epoch().count()},
                     {"ev", "tx"},
                     {"node", n.id},
                     {"type", ToString(p.Type())},
                     {"src", p.src},
                     {"dst", p.dst},
                     {"seq", p.seq},
                     {"attempt", attempt}};
    if (to)
    {
        j["to"] = *to;
    }
    switch (p.Type())
    {
    case PacketType::RouteRequest:
        j["record"] = p.Rreq().routeRecord;
        j["avoid"] = p.Rreq().avoidList;
        break;
    case PacketType::RouteReply:
        j["route"] = p.Rrep().route;
        break;
    case PacketType::RouteError:
        j["link"] = {p.Rerr().linkFrom, p.Rerr().linkTo};
        if (p.Rerr().alarm)
        {
            j["alarm"] = *p.Rerr().alarm;
        }
        break;
    case PacketType::Data:
        j["uid"] = p.Data().uid;
        j["route"] = p.Data().route;
        break;
    }
    *m_trace << j.dump() << '\n';
}

RunMetrics
RunScenario(const ScenarioConfig& cfg, std::ostream* trace)
{
    Simulator sim(cfg);
    sim.SetTrace(trace);
    return sim.Run();
}

} // namespace ocean
