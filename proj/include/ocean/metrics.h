#ifndef OCEAN_METRICS_H
#define OCEAN_METRICS_H

#include "ocean/behavior.h"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocean
{

/// Terminal outcome of one originated DATA packet.
enum class Fate
{
    Delivered,
    /// Silently dropped by a misbehaving relay.
    Misbehavior,
    /// Dropped by a relay because the previous hop was on its faulty list.
    Rejected,
    EconomyDenied,
    /// Expired in the send buffer without a route.
    NoRoute,
    LinkLoss,
    InFlight,
};

constexpr std::size_t kFateCount = 7;
constexpr std::size_t kBehaviorKinds = 4;

const char* ToString(Fate f);

struct ClassStats
{
    std::uint64_t nodes = 0;
    std::uint64_t originated = 0;
    std::uint64_t delivered = 0;

    /// Zero when nothing was originated.
    double DeliveryRatio() const
    {
        return originated == 0 ? 0.0 : static_cast<double>(delivered) / static_cast<double>(originated);
    }
};

struct RunMetrics
{
    /// Indexed by BehaviorKind of the packet's source.
    std::array<ClassStats, kBehaviorKinds> byClass{};
    std::array<std::uint64_t, kFateCount> fates{};
    std::uint64_t originated = 0;
    std::uint64_t delivered = 0;

    std::vector<std::uint64_t> rejectedBy;
    std::vector<std::uint64_t> deniedBy;
    /// Mean faulty-list size over all nodes, one sample per sample interval.
    std::vector<double> faultySeries;

    std::uint64_t alarms = 0;
    std::uint64_t connections = 0;
    std::uint64_t connectionRetries = 0;
    std::uint64_t rreqs = 0;
    std::uint64_t rreps = 0;
    std::uint64_t rerrs = 0;
    std::uint64_t transmissions = 0;
    std::uint64_t protocolErrors = 0;
    std::uint64_t watchPositive = 0;
    std::uint64_t watchNegative = 0;
    std::uint64_t events = 0;

    const ClassStats& Class(BehaviorKind k) const { return byClass[static_cast<std::size_t>(k)]; }
    ClassStats& Class(BehaviorKind k) { return byClass[static_cast<std::size_t>(k)]; }
    std::uint64_t FateCount(Fate f) const { return fates[static_cast<std::size_t>(f)]; }

    double OverallRatio() const
    {
        return originated == 0 ? 0.0 : static_cast<double>(delivered) / static_cast<double>(originated);
    }

    bool operator==(const RunMetrics&) const = default;
};

/// Fixed-order scalar view of a run, used for CSV columns and comparisons.
struct MetricColumn
{
    const char* name;
    double (*get)(const RunMetrics&);
};

const std::vector<MetricColumn>& MetricColumns();

/// Every field, serialized for byte-level comparisons.
std::string Serialize(const RunMetrics& m);

} // namespace ocean

#endif // OCEAN_METRICS_H
