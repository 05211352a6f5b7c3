#include "ocean/mobility.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ocean
{

namespace
{

constexpr SimTime kNever = SimTime::max();

SimTime
PauseUntil(SimTime from, double pauseSeconds)
{
    if (std::isinf(pauseSeconds))
    {
        return kNever;
    }
    return from + Seconds(pauseSeconds);
}

} // namespace

RandomWaypoint::RandomWaypoint(MobilityParams params, std::size_t nodes, std::uint64_t seed)
    : m_params(params),
      m_static(std::isinf(params.pauseTime))
{
    if (!(params.minSpeed > 0.0) || params.maxSpeed < params.minSpeed)
    {
        throw std::invalid_argument("speeds must satisfy 0 < min_speed <= max_speed");
    }
    m_states.resize(nodes);
    m_rngs.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i)
    {
        m_rngs.emplace_back(seed, 0x6d6f62ULL * 1000 + i);
        State& s = m_states[i];
        s.from = Vec2{m_rngs[i].Uniform(0.0, params.width), m_rngs[i].Uniform(0.0, params.height)};
        s.to = s.from;
        s.moving = false;
        s.pauseEnd = PauseUntil(SimTime{}, params.pauseTime);
    }
}

RandomWaypoint::RandomWaypoint(MobilityParams params, std::vector<Vec2> fixed)
    : m_params(params),
      m_static(true)
{
    m_states.resize(fixed.size());
    for (std::size_t i = 0; i < fixed.size(); ++i)
    {
        m_states[i].from = fixed[i];
        m_states[i].to = fixed[i];
        m_states[i].pauseEnd = kNever;
    }
}

void
RandomWaypoint::StartLeg(NodeId n, SimTime at)
{
    State& s = m_states[n];
    Rng& rng = m_rngs[n];
    s.from = s.to;
    s.to = Vec2{rng.Uniform(0.0, m_params.width), rng.Uniform(0.0, m_params.height)};
    s.speed = rng.Uniform(m_params.minSpeed, m_params.maxSpeed);
    s.legStart = at;
    const double seconds = Distance(s.from, s.to) / s.speed;
    // Legs last at least one tick so zero pause cannot stall the clock.
    s.legEnd = at + std::max(Seconds(seconds), Duration{1});
    s.moving = true;
}

void
RandomWaypoint::ForceLeg(NodeId n, Vec2 from, Vec2 to, double speed, SimTime at)
{
    State& s = m_states[n];
    s.from = from;
    s.to = to;
    s.speed = speed;
    s.legStart = at;
    s.legEnd = at + std::max(Seconds(Distance(from, to) / speed), Duration{1});
    s.moving = true;
}

void
RandomWaypoint::Advance(NodeId n, SimTime now)
{
    if (m_static)
    {
        return;
    }
    State& s = m_states[n];
    while (true)
    {
        if (s.moving)
        {
            if (now < s.legEnd)
            {
                return;
            }
            s.moving = false;
            s.from = s.to;
            s.pauseEnd = PauseUntil(s.legEnd, m_params.pauseTime);
        }
        if (now < s.pauseEnd)
        {
            return;
        }
        StartLeg(n, s.pauseEnd);
    }
}

void
RandomWaypoint::StepTo(SimTime now)
{
    for (NodeId n = 0; n < m_states.size(); ++n)
    {
        Advance(n, now);
    }
}

Vec2
RandomWaypoint::Position(NodeId n, SimTime now)
{
    Advance(n, now);
    const State& s = m_states[n];
    if (!s.moving)
    {
        return s.to;
    }
    const double total = static_cast<double>((s.legEnd - s.legStart).count());
    const double f = static_cast<double>((now - s.legStart).count()) / total;
    return Vec2{s.from.x + (s.to.x - s.from.x) * f, s.from.y + (s.to.y - s.from.y) * f};
}

} // namespace ocean
