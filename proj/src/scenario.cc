#include "ocean/scenario.h"

#include <cmath>
#include <set>

namespace ocean
{

const char*
ToString(DefenseMode m)
{
    switch (m)
    {
    case DefenseMode::Defenseless:
        return "defenseless";
    case DefenseMode::Ocean:
        return "ocean";
    case DefenseMode::SecHand:
        return "sechand";
    }
    return "?";
}

std::optional<DefenseMode>
ParseDefenseMode(std::string_view s)
{
    for (auto m : {DefenseMode::Defenseless, DefenseMode::Ocean, DefenseMode::SecHand})
    {
        if (s == ToString(m))
        {
            return m;
        }
    }
    return std::nullopt;
}

MobilityParams
ScenarioConfig::Mobility() const
{
    return MobilityParams{width, height, minSpeed, maxSpeed, pauseTime};
}

namespace
{

void
Require(bool ok, const char* field, const char* message)
{
    if (!ok)
    {
        throw ConfigError(field, message);
    }
}

bool
Finite(double v)
{
    return std::isfinite(v);
}

} // namespace

void
ScenarioConfig::Validate() const
{
    Require(numNodes >= 2, "num_nodes", "need at least two nodes");
    Require(Finite(width) && width > 0, "width", "must be positive");
    Require(Finite(height) && height > 0, "height", "must be positive");
    Require(Finite(radioRange) && radioRange > 0, "radio_range", "must be positive");
    Require(Finite(minSpeed) && minSpeed > 0, "min_speed", "must be positive");
    Require(Finite(maxSpeed) && maxSpeed >= minSpeed, "max_speed", "must be >= min_speed");
    Require(pauseTime >= 0 && !std::isnan(pauseTime), "pause_time", "must be >= 0 (inf allowed)");
    Require(staticPositions.empty() || staticPositions.size() == numNodes, "static_positions",
            "need exactly num_nodes positions");
    for (const auto& [a, b] : staticLinks)
    {
        Require(a < numNodes && b < numNodes && a != b, "static_links",
                "links must join two distinct existing nodes");
    }
    Require(Finite(bandwidth) && bandwidth > 0, "raw_bandwidth", "must be positive");
    Require(linkLossProb >= 0 && linkLossProb <= 1, "link_loss_prob", "must lie in [0, 1]");
    Require(retransmitBudget >= 1, "retransmit_budget", "must be >= 1");
    Require(packetsPerConnection >= 1, "packets_per_connection", "must be >= 1");
    Require(minConnectionHops >= 1, "min_connection_hops", "must be >= 1");
    Require(Finite(sourceRate) && sourceRate > 0, "source_rate", "must be positive");
    Require(payload >= 1, "payload", "must be >= 1");
    for (const auto& f : flows)
    {
        Require(f.src < numNodes && f.dst < numNodes && f.src != f.dst, "flows",
                "flows must join two distinct existing nodes");
    }
    Require(Finite(flowStart) && flowStart >= 0, "flow_start", "must be >= 0");
    Require(Finite(simDuration) && simDuration > 0, "sim_duration", "must be positive");
    Require(Finite(sampleInterval) && sampleInterval > 0, "sample_interval", "must be positive");
    Require(Finite(watchTimeout) && watchTimeout > 0, "watch_timeout", "must be positive");
    try
    {
        ranker.Validate();
    }
    catch (const std::invalid_argument& e)
    {
        std::string msg = e.what();
        throw ConfigError(msg.substr(0, msg.find(' ')), msg);
    }
    Require(hopLimit >= 1, "hop_limit", "must be >= 1");
    Require(Finite(cacheLifetime) && cacheLifetime > 0, "cache_lifetime", "must be positive");
    Require(Finite(rreqJitterMax) && rreqJitterMax >= 0, "rreq_jitter_max", "must be >= 0");
    Require(Finite(rreqTimeout) && rreqTimeout > 0, "rreq_timeout", "must be positive");
    Require(Finite(sendBufferTimeout) && sendBufferTimeout > 0, "send_buffer_timeout",
            "must be positive");
    Require(fixedJitter.empty() || fixedJitter.size() == numNodes, "fixed_jitter",
            "need exactly num_nodes values");
    for (double j : fixedJitter)
    {
        Require(Finite(j) && j >= 0, "fixed_jitter", "values must be >= 0");
    }
    for (const auto& [o, s] : initialFaulty)
    {
        Require(o < numNodes && s < numNodes && o != s, "initial_faulty",
                "pairs must name two distinct existing nodes");
    }
    try
    {
        chips.Validate();
    }
    catch (const std::invalid_argument& e)
    {
        std::string msg = e.what();
        throw ConfigError(msg.substr(0, msg.find(' ')), msg);
    }
    Require(misbehaving <= numNodes, "misbehaving", "cannot exceed num_nodes");
    std::set<NodeId> assigned;
    for (const auto& [n, k] : behaviors)
    {
        Require(n < numNodes, "behaviors", "node id out of range");
        Require(assigned.insert(n).second, "behaviors", "node assigned twice");
    }
}

} // namespace ocean
