#include "ocean/neighbor_watch.h"

#include "doctest.h"

using namespace ocean;

namespace
{

Packet
Transit(std::uint32_t seq)
{
    Packet p = MakeData(1, 5, seq, {1, 2, 3, 5}, 64, seq);
    p.Data().index = 1;
    return p;
}

} // namespace

TEST_CASE("handoff creates an entry with the watch deadline")
{
    NeighborWatch w(2, Duration{1000});
    CHECK(w.OnHandoff(Transit(1), 3, AtMicros(100)));
    CHECK(w.Pending() == 1);
    REQUIRE(w.NextDeadline());
    CHECK(*w.NextDeadline() == AtMicros(1100));
}

TEST_CASE("handoff to the destination creates no entry")
{
    NeighborWatch w(3, Duration{1000});
    CHECK_FALSE(w.OnHandoff(Transit(1), 5, AtMicros(100)));
    CHECK(w.Pending() == 0);
    CHECK(w.Stats().skippedDestination == 1);
}

TEST_CASE("distinct handoffs to one neighbor are independent")
{
    NeighborWatch w(2, Duration{1000});
    w.OnHandoff(Transit(1), 3, AtMicros(0));
    w.OnHandoff(Transit(2), 3, AtMicros(10));
    CHECK(w.Pending() == 2);
    CHECK(w.OnOverhear(Transit(2), 3, AtMicros(20)));
    CHECK(w.Pending() == 1);
    const auto negatives = w.Expire(AtMicros(5000));
    REQUIRE(negatives.size() == 1);
    CHECK(negatives[0].subject == 3);
}

TEST_CASE("matching overhear yields a positive event and consumes the entry")
{
    NeighborWatch w(2, Duration{1000});
    w.OnHandoff(Transit(1), 3, AtMicros(0));
    Packet forwarded = Transit(1);
    forwarded.Data().index = 2;
    const auto e = w.OnOverhear(forwarded, 3, AtMicros(500));
    REQUIRE(e);
    CHECK(e->sign == Sign::Positive);
    CHECK(e->subject == 3);
    CHECK(e->observer == 2);
    CHECK(w.Pending() == 0);
    CHECK(w.Expire(AtMicros(5000)).empty());
}

TEST_CASE("tampered retransmission is ignored and the entry expires negative")
{
    NeighborWatch w(2, Duration{1000});
    w.OnHandoff(Transit(1), 3, AtMicros(0));
    Packet tampered = Transit(1);
    tampered.Data().route = {1, 2, 3, 4, 5};
    CHECK_FALSE(w.OnOverhear(tampered, 3, AtMicros(100)));
    CHECK(w.Pending() == 1);
    const auto negatives = w.Expire(AtMicros(1000));
    REQUIRE(negatives.size() == 1);
    CHECK(negatives[0].sign == Sign::Negative);
    CHECK(negatives[0].subject == 3);
}

TEST_CASE("overhear with nothing pending yields nothing")
{
    NeighborWatch w(2, Duration{1000});
    CHECK_FALSE(w.OnOverhear(Transit(1), 4, AtMicros(0)));
}

TEST_CASE("expiry is inclusive at the deadline")
{
    NeighborWatch w(2, Duration{1000});
    w.OnHandoff(Transit(1), 3, AtMicros(100));
    CHECK(w.Expire(AtMicros(1099)).empty());
    const auto negatives = w.Expire(AtMicros(1100));
    REQUIRE(negatives.size() == 1);
    CHECK(negatives[0].subject == 3);
    CHECK(w.Expire(AtMicros(1100)).empty());
}

TEST_CASE("expire on an empty buffer")
{
    NeighborWatch w(2, Duration{1000});
    CHECK(w.Expire(AtMicros(1000000)).empty());
}

TEST_CASE("one negative per dropped packet")
{
    NeighborWatch w(2, Duration{1000});
    for (std::uint32_t s = 1; s <= 5; ++s)
    {
        w.OnHandoff(Transit(s), 3, AtMicros(s));
    }
    const auto negatives = w.Expire(AtMicros(10000));
    CHECK(negatives.size() == 5);
    for (const auto& e : negatives)
    {
        CHECK(e.subject == 3);
        CHECK(e.sign == Sign::Negative);
    }
    CHECK(w.Stats().created == w.Stats().positive + w.Stats().negative + w.Pending());
}

TEST_CASE("late forward does not cancel an expired negative")
{
    NeighborWatch w(2, Duration{1000});
    w.OnHandoff(Transit(1), 3, AtMicros(0));
    CHECK(w.Expire(AtMicros(1000)).size() == 1);
    CHECK_FALSE(w.OnOverhear(Transit(1), 3, AtMicros(1500)));
    CHECK(w.Stats().negative == 1);
    CHECK(w.Stats().positive == 0);
}
