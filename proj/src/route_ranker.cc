#include "ocean/route_ranker.h"

#include <algorithm>
#include <stdexcept>

namespace ocean
{

void
RankerParams::Validate() const
{
    if (positiveStep <= 0)
    {
        throw std::invalid_argument("positive_step must be > 0");
    }
    if (negativeStep >= 0)
    {
        throw std::invalid_argument("negative_step must be < 0");
    }
    if (-negativeStep <= positiveStep)
    {
        throw std::invalid_argument("negative_step must exceed positive_step in magnitude");
    }
    if (faultyThreshold >= neutral)
    {
        throw std::invalid_argument("faulty_threshold must be below neutral");
    }
    if (faultyTimeout <= Duration::zero())
    {
        throw std::invalid_argument("faulty_timeout must be positive");
    }
    if (floorFactor < 1)
    {
        throw std::invalid_argument("rating_floor_factor must be >= 1");
    }
}

RouteRanker::RouteRanker(RankerParams params)
    : m_params(params)
{
    m_params.Validate();
}

NeighborRating&
RouteRanker::Entry(NodeId n)
{
    auto [it, inserted] = m_table.try_emplace(n);
    if (inserted)
    {
        it->second.rating = m_params.neutral;
    }
    return it->second;
}

std::optional<FaultyTransition>
RouteRanker::ApplyEvent(const ObservationEvent& e)
{
    NeighborRating& r = Entry(e.subject);
    const int step = e.sign == Sign::Positive ? m_params.positiveStep : m_params.negativeStep;
    r.rating = std::max(r.rating + step, m_params.Floor());
    r.lastEvent = e.time;
    if (r.rating < m_params.faultyThreshold && !r.faulty)
    {
        r.faulty = true;
        m_faulty.insert(e.subject);
        return FaultyTransition::BecameFaulty;
    }
    return std::nullopt;
}

std::vector<NodeId>
RouteRanker::SecondChanceSweep(SimTime now)
{
    std::vector<NodeId> reinstated;
    for (auto it = m_faulty.begin(); it != m_faulty.end();)
    {
        NeighborRating& r = m_table.at(*it);
        if (now - r.lastEvent >= m_params.faultyTimeout)
        {
            r.faulty = false;
            r.rating = m_params.faultyThreshold;
            reinstated.push_back(*it);
            it = m_faulty.erase(it);
        }
        else
        {
            ++it;
        }
    }
    return reinstated;
}

bool
RouteRanker::MarkFaulty(NodeId n, SimTime now)
{
    NeighborRating& r = Entry(n);
    r.lastEvent = now;
    if (r.faulty)
    {
        return false;
    }
    r.rating = std::min(r.rating, m_params.faultyThreshold);
    r.faulty = true;
    m_faulty.insert(n);
    return true;
}

const NeighborRating*
RouteRanker::Find(NodeId n) const
{
    auto it = m_table.find(n);
    return it == m_table.end() ? nullptr : &it->second;
}

int
RouteRanker::RatingOf(NodeId n) const
{
    const NeighborRating* r = Find(n);
    return r ? r->rating : m_params.neutral;
}

} // namespace ocean
