#ifndef OCEAN_ROUTE_RANKER_H
#define OCEAN_ROUTE_RANKER_H

#include "ocean/core_model.h"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ocean
{

struct RankerParams
{
    int neutral = 0;
    int positiveStep = 1;
    int negativeStep = -2;
    int faultyThreshold = -40;
    Duration faultyTimeout = Seconds(60.0);
    /// Ratings never drop below floorFactor * faultyThreshold.
    int floorFactor = 5;

    /// Throws std::invalid_argument naming the offending field.
    void Validate() const;

    int Floor() const { return floorFactor * faultyThreshold; }
};

struct NeighborRating
{
    int rating = 0;
    bool faulty = false;
    SimTime lastEvent{};
};

enum class FaultyTransition
{
    BecameFaulty,
};

/**
 * Rating table over a node's neighbors.
 *
 * Positive and negative observations move a neighbor's rating by fixed steps.
 * Falling strictly below the faulty threshold puts the neighbor on the faulty
 * list; it leaves the list only through the second-chance sweep, after
 * faultyTimeout without any observation, and then resumes at the threshold
 * rating so that one more negative event re-faults it.
 */
class RouteRanker
{
  public:
    explicit RouteRanker(RankerParams params = {});

    std::optional<FaultyTransition> ApplyEvent(const ObservationEvent& e);

    bool IsFaulty(NodeId n) const { return m_faulty.contains(n); }

    /// Sorted ascending.
    std::vector<NodeId> FaultyList() const { return {m_faulty.begin(), m_faulty.end()}; }

    const std::set<NodeId>& FaultySet() const { return m_faulty; }

    std::vector<NodeId> SecondChanceSweep(SimTime now);

    /**
     * Puts n on the faulty list without local observations (second-hand
     * accusation or a seeded initial state). The rating drops to the threshold
     * unless it is already lower. Returns true when n was not faulty before;
     * otherwise only refreshes lastEvent.
     */
    bool MarkFaulty(NodeId n, SimTime now);

    const NeighborRating* Find(NodeId n) const;

    /// Neutral rating for unknown neighbors.
    int RatingOf(NodeId n) const;

    const RankerParams& Params() const { return m_params; }

    std::size_t KnownNeighbors() const { return m_table.size(); }

  private:
    NeighborRating& Entry(NodeId n);

    RankerParams m_params;
    std::map<NodeId, NeighborRating> m_table;
    std::set<NodeId> m_faulty;
};

} // namespace ocean

#endif // OCEAN_ROUTE_RANKER_H
