#include "ocean/behavior.h"

#include "doctest.h"

using namespace ocean;

namespace
{

Packet
Transit()
{
    Packet p = MakeData(1, 5, 1, {1, 4, 5}, 64, 1);
    p.Data().index = 1;
    return p;
}

Packet
Rreq(std::vector<NodeId> avoid)
{
    Packet p;
    p.src = 1;
    p.dst = 5;
    p.seq = 1;
    RouteRequestBody b;
    b.routeRecord = {1};
    b.avoidList = std::move(avoid);
    p.body = std::move(b);
    return p;
}

BehaviorProfile
Profile(BehaviorKind k)
{
    BehaviorProfile p;
    p.kind = k;
    return p;
}

} // namespace

TEST_CASE("misleading node drops transit data")
{
    CHECK(DecideDataForward(Profile(BehaviorKind::Misleading), Transit(), 4) ==
          DataDecision::SilentDrop);
}

TEST_CASE("misleading node sends its own data")
{
    const Packet own = MakeData(4, 5, 1, {4, 2, 5}, 64, 1);
    CHECK(DecideDataForward(Profile(BehaviorKind::Misleading), own, 4) == DataDecision::Forward);
}

TEST_CASE("cooperating and rushing nodes forward")
{
    CHECK(DecideDataForward(Profile(BehaviorKind::Cooperating), Transit(), 4) ==
          DataDecision::Forward);
    CHECK(DecideDataForward(Profile(BehaviorKind::Rushing), Transit(), 4) == DataDecision::Forward);
    CHECK(DecideDataForward(Profile(BehaviorKind::Selfish), Transit(), 4) ==
          DataDecision::SilentDrop);
}

TEST_CASE("selfish node drops route requests")
{
    CHECK(DecideRreq(Profile(BehaviorKind::Selfish), Rreq({}), 4) == RreqDecision::SilentDrop);
}

TEST_CASE("cooperating and misleading nodes participate")
{
    CHECK(DecideRreq(Profile(BehaviorKind::Cooperating), Rreq({4}), 4) ==
          RreqDecision::Participate);
    CHECK(DecideRreq(Profile(BehaviorKind::Misleading), Rreq({4}), 4) ==
          RreqDecision::Participate);
}

TEST_CASE("rushing node strips itself from the avoid list")
{
    const BehaviorProfile r = Profile(BehaviorKind::Rushing);
    const Packet p = Rreq({4});
    CHECK(DecideRreq(r, p, 4) == RreqDecision::RushTampered);
    const Packet stripped = StripAvoidList(r, p, 4);
    CHECK(stripped.Rreq().avoidList.empty());
    CHECK(stripped.Rreq().routeRecord == p.Rreq().routeRecord);
}

TEST_CASE("rushing node strips its victims too")
{
    BehaviorProfile r = Profile(BehaviorKind::Rushing);
    r.rushVictims = {7};
    const Packet p = Rreq({2, 7, 9});
    CHECK(DecideRreq(r, p, 4) == RreqDecision::RushTampered);
    CHECK(StripAvoidList(r, p, 4).Rreq().avoidList == std::vector<NodeId>{2, 9});
}

TEST_CASE("rushing node with nothing to strip participates normally")
{
    CHECK(DecideRreq(Profile(BehaviorKind::Rushing), Rreq({2}), 4) == RreqDecision::Participate);
}

TEST_CASE("tampering misleading node rushes")
{
    BehaviorProfile m = Profile(BehaviorKind::Misleading);
    m.tampersAvoidList = true;
    CHECK(DecideRreq(m, Rreq({4}), 4) == RreqDecision::RushTampered);
}

TEST_CASE("padding and bogus hops extend only the tail of the record")
{
    BehaviorProfile r = Profile(BehaviorKind::Rushing);
    r.routePadding = 2;
    r.bogusHop = true;
    Packet p = Rreq({});
    p.Rreq().routeRecord = {1, 4};
    PadRouteRecord(r, p, 100, NodeId{9});
    CHECK(p.Rreq().routeRecord == SourceRoute{1, 4, 9, 100, 101});
}

TEST_CASE("behavior names round-trip")
{
    for (auto k : {BehaviorKind::Cooperating, BehaviorKind::Misleading, BehaviorKind::Selfish,
                   BehaviorKind::Rushing})
    {
        CHECK(ParseBehaviorKind(ToString(k)) == k);
    }
    CHECK_FALSE(ParseBehaviorKind("evil"));
}
