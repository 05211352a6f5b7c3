#include "ocean/oracle.h"

#include "doctest.h"

using namespace ocean;

TEST_CASE("fold agrees with the ranker on random logs")
{
    RankerParams p;
    p.faultyThreshold = -6;
    p.faultyTimeout = Duration{5000};
    Rng rng(7, 0);
    for (int i = 0; i < 300; ++i)
    {
        const auto log = RandomFoldLog(rng, 4, 60, 3000);
        INFO(i);
        CHECK(CompareRankerWithFold(p, log, 4).empty());
    }
}

TEST_CASE("fold reproduces the rating arithmetic")
{
    RankerParams p;
    std::vector<FoldEvent> log;
    for (int i = 0; i < 21; ++i)
    {
        log.push_back({FoldEvent::Kind::Negative, 0, 0});
    }
    const auto s = FoldRatings(p, log, 1);
    CHECK(s[0].rating == -42);
    CHECK(s[0].faulty);
}

TEST_CASE("discovery on a five-node graph matches the enumerator")
{
    // 0 - 1 - 4, 0 - 2 - 4, 0 - 3 - 2; node 1 is faulty at 0.
    DiscoveryCase c;
    c.numNodes = 5;
    c.links = {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 2}};
    c.src = 0;
    c.dst = 4;
    c.faulty.assign(5, {});
    c.faulty[0] = {1};
    const auto expected = EnumerateAcceptedRoutes(c);
    CHECK(expected == SimulatedAcceptedRoutes(c));
    for (const auto& r : expected)
    {
        CHECK_FALSE(RouteContains(r, 1));
    }
    CHECK(expected.count(SourceRoute{0, 2, 4}) == 1);
}

TEST_CASE("relay faulty list blocks a reply")
{
    // 0 - 1 - 2 - 3 and 0 - 4 - 3; node 1 distrusts 2.
    DiscoveryCase c;
    c.numNodes = 5;
    c.links = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}};
    c.src = 0;
    c.dst = 3;
    c.faulty.assign(5, {});
    c.faulty[1] = {2};
    const auto routes = EnumerateAcceptedRoutes(c);
    CHECK(routes == std::set<SourceRoute>{{0, 4, 3}});
    CHECK(SimulatedAcceptedRoutes(c) == routes);
}

TEST_CASE("random discovery cases match the enumerator")
{
    const OracleReport r = RunDiscoveryOracle(30, 99);
    CHECK(r.discoveryCases == 30);
    CHECK(r.mismatches == 0);
}
