#include "ocean/metrics.h"

#include <sstream>

namespace ocean
{

const char*
ToString(Fate f)
{
    switch (f)
    {
    case Fate::Delivered:
        return "delivered";
    case Fate::Misbehavior:
        return "misbehavior";
    case Fate::Rejected:
        return "rejected";
    case Fate::EconomyDenied:
        return "economy_denied";
    case Fate::NoRoute:
        return "no_route";
    case Fate::LinkLoss:
        return "link_loss";
    case Fate::InFlight:
        return "in_flight";
    }
    return "?";
}

namespace
{

double
Ratio(const RunMetrics& m, BehaviorKind k)
{
    return m.Class(k).DeliveryRatio();
}

double
AsDouble(std::uint64_t v)
{
    return static_cast<double>(v);
}

} // namespace

const std::vector<MetricColumn>&
MetricColumns()
{
    using K = BehaviorKind;
    static const std::vector<MetricColumn> columns = {
        {"coop_ratio", [](const RunMetrics& m) { return Ratio(m, K::Cooperating); }},
        {"misleading_ratio", [](const RunMetrics& m) { return Ratio(m, K::Misleading); }},
        {"selfish_ratio", [](const RunMetrics& m) { return Ratio(m, K::Selfish); }},
        {"rushing_ratio", [](const RunMetrics& m) { return Ratio(m, K::Rushing); }},
        {"overall_ratio", [](const RunMetrics& m) { return m.OverallRatio(); }},
        {"coop_originated", [](const RunMetrics& m) { return AsDouble(m.Class(K::Cooperating).originated); }},
        {"coop_delivered", [](const RunMetrics& m) { return AsDouble(m.Class(K::Cooperating).delivered); }},
        {"misleading_originated", [](const RunMetrics& m) { return AsDouble(m.Class(K::Misleading).originated); }},
        {"misleading_delivered", [](const RunMetrics& m) { return AsDouble(m.Class(K::Misleading).delivered); }},
        {"selfish_originated", [](const RunMetrics& m) { return AsDouble(m.Class(K::Selfish).originated); }},
        {"selfish_delivered", [](const RunMetrics& m) { return AsDouble(m.Class(K::Selfish).delivered); }},
        {"originated", [](const RunMetrics& m) { return AsDouble(m.originated); }},
        {"delivered", [](const RunMetrics& m) { return AsDouble(m.delivered); }},
        {"drop_misbehavior", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::Misbehavior)); }},
        {"drop_rejected", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::Rejected)); }},
        {"drop_economy", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::EconomyDenied)); }},
        {"drop_no_route", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::NoRoute)); }},
        {"drop_link_loss", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::LinkLoss)); }},
        {"in_flight", [](const RunMetrics& m) { return AsDouble(m.FateCount(Fate::InFlight)); }},
        {"alarms", [](const RunMetrics& m) { return AsDouble(m.alarms); }},
        {"mean_faulty",
         [](const RunMetrics& m) {
             double sum = 0.0;
             for (double v : m.faultySeries)
             {
                 sum += v;
             }
             return m.faultySeries.empty() ? 0.0 : sum / static_cast<double>(m.faultySeries.size());
         }},
        {"connections", [](const RunMetrics& m) { return AsDouble(m.connections); }},
        {"connection_retries", [](const RunMetrics& m) { return AsDouble(m.connectionRetries); }},
        {"rreqs", [](const RunMetrics& m) { return AsDouble(m.rreqs); }},
        {"watch_negative", [](const RunMetrics& m) { return AsDouble(m.watchNegative); }},
    };
    return columns;
}

std::string
Serialize(const RunMetrics& m)
{
    std::ostringstream os;
    os.precision(17);
    for (std::size_t k = 0; k < kBehaviorKinds; ++k)
    {
        os << "class" << k << '=' << m.byClass[k].nodes << ',' << m.byClass[k].originated << ','
           << m.byClass[k].delivered << '\n';
    }
    for (std::size_t f = 0; f < kFateCount; ++f)
    {
        os << ToString(static_cast<Fate>(f)) << '=' << m.fates[f] << '\n';
    }
    os << "originated=" << m.originated << "\ndelivered=" << m.delivered << "\nrejected_by=";
    for (auto v : m.rejectedBy)
    {
        os << v << ' ';
    }
    os << "\ndenied_by=";
    for (auto v : m.deniedBy)
    {
        os << v << ' ';
    }
    os << "\nfaulty_series=";
    for (auto v : m.faultySeries)
    {
        os << v << ' ';
    }
    os << "\nalarms=" << m.alarms << "\nconnections=" << m.connections
       << "\nconnection_retries=" << m.connectionRetries << "\nrreqs=" << m.rreqs
       << "\nrreps=" << m.rreps << "\nrerrs=" << m.rerrs << "\ntransmissions=" << m.transmissions
       << "\nprotocol_errors=" << m.protocolErrors << "\nwatch_positive=" << m.watchPositive
       << "\nwatch_negative=" << m.watchNegative << "\nevents=" << m.events << '\n';
    return os.str();
}

} // namespace ocean
