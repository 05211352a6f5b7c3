#include "ocean/oracle.h"

#include <algorithm>
#include <sstream>

namespace ocean
{

std::vector<FoldState>
FoldRatings(const RankerParams& params, const std::vector<FoldEvent>& log, std::size_t subjects)
{
    const int floor = params.floorFactor * params.faultyThreshold;
    const std::int64_t timeout = params.faultyTimeout.count();
    std::vector<FoldState> s(subjects);
    for (const FoldEvent& e : log)
    {
        if (e.kind == FoldEvent::Kind::Sweep)
        {
            for (FoldState& st : s)
            {
                if (st.faulty && e.timeUs - st.lastUs >= timeout)
                {
                    st.faulty = false;
                    st.rating = params.faultyThreshold;
                }
            }
            continue;
        }
        FoldState& st = s[e.subject];
        if (!st.known)
        {
            st.known = true;
            st.rating = params.neutral;
        }
        st.lastUs = e.timeUs;
        if (e.kind == FoldEvent::Kind::Mark)
        {
            if (!st.faulty)
            {
                st.faulty = true;
                if (st.rating > params.faultyThreshold)
                {
                    st.rating = params.faultyThreshold;
                }
            }
            continue;
        }
        st.rating += e.kind == FoldEvent::Kind::Positive ? params.positiveStep : params.negativeStep;
        if (st.rating < floor)
        {
            st.rating = floor;
        }
        if (st.rating < params.faultyThreshold)
        {
            st.faulty = true;
        }
    }
    return s;
}

std::vector<FoldEvent>
RandomFoldLog(Rng& rng, std::size_t subjects, std::size_t length, std::int64_t maxGapUs)
{
    std::vector<FoldEvent> log;
    log.reserve(length);
    std::int64_t t = 0;
    // Runs of one sign on one subject, so thresholds are actually crossed.
    while (log.size() < length)
    {
        const auto subject = static_cast<NodeId>(rng.Below(subjects));
        const std::uint64_t pick = rng.Below(100);
        FoldEvent::Kind kind;
        if (pick < 3)
        {
            kind = FoldEvent::Kind::Sweep;
        }
        else if (pick < 5)
        {
            kind = FoldEvent::Kind::Mark;
        }
        else if (pick < 45)
        {
            kind = FoldEvent::Kind::Positive;
        }
        else
        {
            kind = FoldEvent::Kind::Negative;
        }
        const std::size_t run = kind == FoldEvent::Kind::Negative ? 1 + rng.Below(30) : 1 + rng.Below(5);
        for (std::size_t k = 0; k < run && log.size() < length; ++k)
        {
            t += static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(maxGapUs) + 1));
            log.push_back(FoldEvent{kind, subject, t});
        }
    }
    return log;
}

std::string
CompareRankerWithFold(const RankerParams& params, const std::vector<FoldEvent>& log,
                      std::size_t subjects)
{
    RouteRanker ranker(params);
    for (const FoldEvent& e : log)
    {
        const SimTime t = AtMicros(e.timeUs);
        switch (e.kind)
        {
        case FoldEvent::Kind::Positive:
            ranker.ApplyEvent(ObservationEvent{0, e.subject, Sign::Positive, t});
            break;
        case FoldEvent::Kind::Negative:
            ranker.ApplyEvent(ObservationEvent{0, e.subject, Sign::Negative, t});
            break;
        case FoldEvent::Kind::Mark:
            ranker.MarkFaulty(e.subject, t);
            break;
        case FoldEvent::Kind::Sweep:
            ranker.SecondChanceSweep(t);
            break;
        }
    }
    const auto expect = FoldRatings(params, log, subjects);
    for (NodeId n = 0; n < subjects; ++n)
    {
        const FoldState& f = expect[n];
        const NeighborRating* r = ranker.Find(n);
        std::ostringstream diff;
        if (f.known != (r != nullptr))
        {
            diff << "subject " << n << ": known " << f.known << " vs " << (r != nullptr);
        }
        else if (r && (r->rating != f.rating || r->faulty != f.faulty ||
                       r->lastEvent.time_since_epoch().count() != f.lastUs))
        {
            diff << "subject " << n << ": rating " << r->rating << "/" << f.rating << " faulty "
                 << r->faulty << "/" << f.faulty << " last " << r->lastEvent.time_since_epoch().count()
                 << "/" << f.lastUs;
        }
        else if (ranker.IsFaulty(n) != f.faulty)
        {
            diff << "subject " << n << ": faulty list disagrees";
        }
        if (!diff.str().empty())
        {
            return diff.str();
        }
    }
    return {};
}

} // namespace ocean
