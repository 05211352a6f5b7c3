#ifndef OCEAN_EVENT_QUEUE_H
#define OCEAN_EVENT_QUEUE_H

#include "ocean/core_model.h"

#include <functional>
#include <queue>
#include <vector>

namespace ocean
{

/// Time-ordered callbacks. Events at equal times pop in insertion order.
class EventQueue
{
  public:
    using Handler = std::function<void()>;

    void Schedule(SimTime at, Handler h)
    {
        m_heap.push(Item{at, m_nextSeq++, std::move(h)});
    }

    bool Empty() const { return m_heap.empty(); }

    SimTime NextTime() const { return m_heap.top().time; }

    /// Removes the earliest event and returns (time, handler).
    std::pair<SimTime, Handler> Pop()
    {
        // top() is const; the handler is moved out before the pop discards it.
        Item& top = const_cast<Item&>(m_heap.top());
        std::pair<SimTime, Handler> out{top.time, std::move(top.handler)};
        m_heap.pop();
        return out;
    }

    std::size_t Size() const { return m_heap.size(); }

    std::uint64_t Scheduled() const { return m_nextSeq; }

  private:
    struct Item
    {
        SimTime time;
        std::uint64_t seq;
        Handler handler;
    };

    struct Later
    {
        bool operator()(const Item& a, const Item& b) const
        {
            return a.time != b.time ? a.time > b.time : a.seq > b.seq;
        }
    };

    std::priority_queue<Item, std::vector<Item>, Later> m_heap;
    std::uint64_t m_nextSeq = 0;
};

} // namespace ocean

#endif // OCEAN_EVENT_QUEUE_H
