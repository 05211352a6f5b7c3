#ifndef OCEAN_ORACLE_H
#define OCEAN_ORACLE_H

// Reference models that recompute protocol outcomes from first principles,
// without the production code paths, for cross-checking the simulator.

#include "ocean/core_model.h"
#include "ocean/rng.h"
#include "ocean/route_ranker.h"
#include "ocean/scenario.h"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ocean
{

// Rating replay

struct FoldEvent
{
    enum class Kind
    {
        Positive,
        Negative,
        /// Faulty-list insertion without an observation.
        Mark,
        /// Second-chance sweep; subject unused.
        Sweep,
    };

    Kind kind = Kind::Positive;
    NodeId subject = 0;
    std::int64_t timeUs = 0;
};

struct FoldState
{
    bool known = false;
    int rating = 0;
    bool faulty = false;
    std::int64_t lastUs = 0;
};

/// Straight fold of the rating rules over an event log; index = subject id.
std::vector<FoldState> FoldRatings(const RankerParams& params, const std::vector<FoldEvent>& log,
                                   std::size_t subjects);

/// Random log over `subjects` neighbors with non-decreasing timestamps.
std::vector<FoldEvent> RandomFoldLog(Rng& rng, std::size_t subjects, std::size_t length,
                                     std::int64_t maxGapUs);

/// Replays the log through a RouteRanker and compares with the fold.
/// Returns an empty string on agreement, else a description of the first difference.
std::string CompareRankerWithFold(const RankerParams& params, const std::vector<FoldEvent>& log,
                                  std::size_t subjects);

// Route discovery

struct DiscoveryCase
{
    std::uint32_t numNodes = 0;
    std::vector<std::pair<NodeId, NodeId>> links;
    NodeId src = 0;
    NodeId dst = 0;
    /// faulty[v] = sorted initial faulty list of node v.
    std::vector<std::vector<NodeId>> faulty;
    std::uint32_t hopLimit = 16;
};

/// Per-node rebroadcast delay used by discovery cases: 2^v * 10 ms. Every
/// set of relays then has a distinct total delay, so first arrivals are
/// determined by the relay sets alone.
double DiscoveryJitterSeconds(NodeId v);

/**
 * Routes the originator accepts after one flood on a static graph with fixed
 * faulty lists, all nodes cooperating: first-copy duplicate suppression,
 * avoid-list intersection, replies to every copy at the destination, the
 * self-in-avoid-list and hop-limit rules, and faulty-list checks on the reply
 * at every relay and at the originator.
 */
std::set<SourceRoute> EnumerateAcceptedRoutes(const DiscoveryCase& c);

/// Simulator scenario reproducing the case: explicit links, fixed jitter,
/// seeded faulty lists and one flow src -> dst.
ScenarioConfig DiscoveryScenario(const DiscoveryCase& c);

/// Connected graph of 3..maxNodes nodes; each ordered (observer, subject)
/// pair is faulty with probability faultyProb.
DiscoveryCase RandomDiscoveryCase(Rng& rng, std::uint32_t maxNodes, double faultyProb);

/// Runs the simulator on the case and returns the set of accepted routes.
std::set<SourceRoute> SimulatedAcceptedRoutes(const DiscoveryCase& c);

std::string Describe(const DiscoveryCase& c);
std::string Describe(const std::set<SourceRoute>& routes);

struct OracleReport
{
    std::size_t discoveryCases = 0;
    std::size_t foldSequences = 0;
    std::size_t mismatches = 0;
    std::string text;
};

OracleReport RunDiscoveryOracle(std::size_t cases, std::uint64_t seed);
OracleReport RunFoldOracle(std::size_t sequences, std::uint64_t seed);

/// Fixed micro-topologies plus seeded random discovery cases and rating logs.
OracleReport RunEmbeddedOracles();

} // namespace ocean

#endif // OCEAN_ORACLE_H
