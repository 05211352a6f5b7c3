#ifndef OCEAN_MOBILITY_H
#define OCEAN_MOBILITY_H

#include "ocean/core_model.h"
#include "ocean/rng.h"

#include <cmath>
#include <limits>
#include <vector>

namespace ocean
{

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

inline double
Distance(Vec2 a, Vec2 b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

struct MobilityParams
{
    double width = 1500.0;
    double height = 300.0;
    double minSpeed = 1.0;
    double maxSpeed = 20.0;
    /// Seconds; infinity keeps every node at its initial position.
    double pauseTime = 0.0;
};

/**
 * Random waypoint mobility. Each node pauses, then travels in a straight line
 * at a uniform random speed to a uniform random waypoint, and repeats.
 * Positions between waypoint events are interpolated linearly. Every node
 * draws from its own stream, so results do not depend on query order.
 */
class RandomWaypoint
{
  public:
    struct State
    {
        Vec2 from;
        Vec2 to;
        SimTime legStart{};
        SimTime legEnd{};
        /// Moving during [legStart, legEnd), then paused until pauseEnd.
        SimTime pauseEnd{};
        double speed = 0.0;
        bool moving = false;
    };

    RandomWaypoint(MobilityParams params, std::size_t nodes, std::uint64_t seed);

    /// Fixed positions; no movement regardless of pause time.
    RandomWaypoint(MobilityParams params, std::vector<Vec2> fixed);

    /// Advances every node to `now`. Times must not decrease.
    void StepTo(SimTime now);

    /// Position of node n at `now`, advancing it as needed.
    Vec2 Position(NodeId n, SimTime now);

    const State& StateOf(NodeId n) const { return m_states[n]; }

    /// Puts node n on a leg from `from` to `to` starting at `at`.
    void ForceLeg(NodeId n, Vec2 from, Vec2 to, double speed, SimTime at);

    std::size_t Size() const { return m_states.size(); }

    bool IsStatic() const { return m_static; }

  private:
    void Advance(NodeId n, SimTime now);
    void StartLeg(NodeId n, SimTime at);

    MobilityParams m_params;
    bool m_static;
    std::vector<State> m_states;
    std::vector<Rng> m_rngs;
};

} // namespace ocean

#endif // OCEAN_MOBILITY_H
