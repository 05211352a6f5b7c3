#include "ocean/dsr_routing.h"
#include "ocean/sec_hand.h"

#include "doctest.h"

#include <stdexcept>

using namespace ocean;

TEST_CASE("alarm is set once per faulty episode")
{
    SecHand s(2);
    Packet r1 = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    CHECK(s.EmitAlarm(3, r1));
    CHECK(r1.Rerr().alarm == NodeId{3});
    Packet r2 = MakeRouteError(2, {1, 2, 3, 5}, 3, 2);
    CHECK_FALSE(s.EmitAlarm(3, r2));
    CHECK_FALSE(r2.Rerr().alarm);
    s.OnReinstated(3);
    CHECK(s.EmitAlarm(3, r2));
}

TEST_CASE("two detections produce two route errors with one alarm each")
{
    SecHand s(2);
    Packet a = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    Packet b = MakeRouteError(2, {1, 2, 4, 5}, 4, 2);
    CHECK(s.EmitAlarm(3, a));
    CHECK(s.EmitAlarm(4, b));
    CHECK(a.Rerr().alarm == NodeId{3});
    CHECK(b.Rerr().alarm == NodeId{4});
}

TEST_CASE("overheard alarm adds the accused to the faulty list")
{
    SecHand s(7);
    RouteRanker r;
    Packet rerr = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    rerr.Rerr().alarm = 3;
    CHECK(s.OnOverhearAlarm(rerr, AtMicros(100), r));
    CHECK(r.IsFaulty(3));
    CHECK(r.RatingOf(3) == -40);
    CHECK_FALSE(s.OnOverhearAlarm(rerr, AtMicros(200), r));
    CHECK(r.FaultyList().size() == 1);
    CHECK(r.Find(3)->lastEvent == AtMicros(200));
}

TEST_CASE("alarm naming the listener is ignored")
{
    SecHand s(3);
    RouteRanker r;
    Packet rerr = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    rerr.Rerr().alarm = 3;
    CHECK_FALSE(s.OnOverhearAlarm(rerr, AtMicros(100), r));
    CHECK(r.FaultyList().empty());
}

TEST_CASE("a node never accuses itself")
{
    SecHand s(3);
    Packet rerr = MakeRouteError(3, {1, 3, 5}, 5, 1);
    CHECK_FALSE(s.EmitAlarm(3, rerr));
}

TEST_CASE("broken link to a faulty neighbor is tagged")
{
    SecHand s(2);
    RouteRanker r;
    r.MarkFaulty(3, SimTime{});
    Packet rerr = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    s.TagBrokenLink(rerr, r);
    CHECK(rerr.Rerr().alarm == NodeId{3});
    Packet clean = MakeRouteError(2, {1, 2, 4, 5}, 4, 1);
    s.TagBrokenLink(clean, r);
    CHECK_FALSE(clean.Rerr().alarm);
}

TEST_CASE("alarms ride on route errors only")
{
    SecHand s(2);
    Packet data = MakeData(1, 5, 1, {1, 2, 5}, 64, 1);
    CHECK_THROWS_AS(s.EmitAlarm(3, data), std::logic_error);
}

TEST_CASE("alarm-added entries get the usual second chance")
{
    SecHand s(7);
    RouteRanker r;
    Packet rerr = MakeRouteError(2, {1, 2, 3, 5}, 3, 1);
    rerr.Rerr().alarm = 3;
    s.OnOverhearAlarm(rerr, AtMicros(0), r);
    CHECK(r.SecondChanceSweep(Seconds(60.0) + SimTime{}) == std::vector<NodeId>{3});
    CHECK_FALSE(r.IsFaulty(3));
}
