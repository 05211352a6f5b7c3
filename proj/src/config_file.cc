#include "ocean/config_file.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace ocean
{

namespace
{

std::string_view
Trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
    {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view>
Split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    if (Trim(s).empty())
    {
        return parts;
    }
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(Trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos)
        {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

[[noreturn]] void
Bad(std::string_view key, std::string_view value, const char* what)
{
    throw ConfigError(std::string(key), "cannot parse '" + std::string(value) + "': " + what);
}

double
ParseDouble(std::string_view key, std::string_view v)
{
    v = Trim(v);
    if (v == "inf" || v == "infinity")
    {
        return std::numeric_limits<double>::infinity();
    }
    std::string s(v);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
    {
        Bad(key, v, "expected a number");
    }
    return d;
}

template <typename Int>
Int
ParseInt(std::string_view key, std::string_view v)
{
    v = Trim(v);
    Int out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
    {
        Bad(key, v, "expected an integer");
    }
    return out;
}

bool
ParseBool(std::string_view key, std::string_view v)
{
    v = Trim(v);
    if (v == "true" || v == "1" || v == "yes" || v == "on")
    {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off")
    {
        return false;
    }
    Bad(key, v, "expected true/false");
}

std::string
FormatDouble(double d)
{
    if (std::isinf(d))
    {
        return "inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
}

std::pair<NodeId, NodeId>
ParsePair(std::string_view key, std::string_view item, char sep)
{
    auto parts = Split(item, sep);
    if (parts.size() != 2)
    {
        Bad(key, item, "expected a pair");
    }
    return {ParseInt<NodeId>(key, parts[0]), ParseInt<NodeId>(key, parts[1])};
}

template <typename T, typename F>
std::string
Join(const std::vector<T>& items, F&& fmt)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        if (i)
        {
            out += ',';
        }
        out += fmt(items[i]);
    }
    return out;
}

struct Field
{
    std::function<void(ScenarioConfig&, std::string_view key, std::string_view)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <typename T>
Field
Number(T ScenarioConfig::*member)
{
    return Field{[member](ScenarioConfig& c, std::string_view k, std::string_view v) {
                     if constexpr (std::is_floating_point_v<T>)
                     {
                         c.*member = ParseDouble(k, v);
                     }
                     else
                     {
                         c.*member = ParseInt<T>(k, v);
                     }
                 },
                 [member](const ScenarioConfig& c) {
                     if constexpr (std::is_floating_point_v<T>)
                     {
                         return FormatDouble(c.*member);
                     }
                     else
                     {
                         return std::to_string(c.*member);
                     }
                 }};
}

Field
Flag(bool ScenarioConfig::*member)
{
    return Field{[member](ScenarioConfig& c, std::string_view k,
                          std::string_view v) { c.*member = ParseBool(k, v); },
                 [member](const ScenarioConfig& c) {
                     return std::string(c.*member ? "true" : "false");
                 }};
}

using Registry = std::vector<std::pair<std::string, Field>>;

Registry
BuildRegistry()
{
    using C = ScenarioConfig;
    Registry r;
    r.emplace_back("num_nodes", Number(&C::numNodes));
    r.emplace_back("width", Number(&C::width));
    r.emplace_back("height", Number(&C::height));
    r.emplace_back("radio_range", Number(&C::radioRange));
    r.emplace_back("max_speed", Number(&C::maxSpeed));
    r.emplace_back("min_speed", Number(&C::minSpeed));
    r.emplace_back("pause_time", Number(&C::pauseTime));
    r.emplace_back(
        "static_positions",
        Field{[](C& c, std::string_view k, std::string_view v) {
                  c.staticPositions.clear();
                  for (auto item : Split(v, ';'))
                  {
                      auto xy = Split(item, ',');
                      if (xy.size() != 2)
                      {
                          Bad(k, item, "expected x,y");
                      }
                      c.staticPositions.push_back(Vec2{ParseDouble(k, xy[0]), ParseDouble(k, xy[1])});
                  }
              },
              [](const C& c) {
                  std::string out;
                  for (std::size_t i = 0; i < c.staticPositions.size(); ++i)
                  {
                      out += (i ? ";" : "") + FormatDouble(c.staticPositions[i].x) + "," +
                             FormatDouble(c.staticPositions[i].y);
                  }
                  return out;
              }});
    r.emplace_back("static_links",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             c.staticLinks.clear();
                             for (auto item : Split(v, ','))
                             {
                                 c.staticLinks.push_back(ParsePair(k, item, '-'));
                             }
                         },
                         [](const C& c) {
                             return Join(c.staticLinks, [](const auto& l) {
                                 return std::to_string(l.first) + "-" + std::to_string(l.second);
                             });
                         }});
    r.emplace_back("raw_bandwidth", Number(&C::bandwidth));
    r.emplace_back("link_loss_prob", Number(&C::linkLossProb));
    r.emplace_back("retransmit_budget", Number(&C::retransmitBudget));
    r.emplace_back("packets_per_connection", Number(&C::packetsPerConnection));
    r.emplace_back("min_connection_hops", Number(&C::minConnectionHops));
    r.emplace_back("source_rate", Number(&C::sourceRate));
    r.emplace_back("payload", Number(&C::payload));
    r.emplace_back("concurrent_connections", Number(&C::concurrentConnections));
    r.emplace_back("flows", Field{[](C& c, std::string_view k, std::string_view v) {
                                      c.flows.clear();
                                      for (auto item : Split(v, ','))
                                      {
                                          auto [s, d] = ParsePair(k, item, '>');
                                          c.flows.push_back(FlowSpec{s, d});
                                      }
                                  },
                                  [](const C& c) {
                                      return Join(c.flows, [](const FlowSpec& f) {
                                          return std::to_string(f.src) + ">" +
                                                 std::to_string(f.dst);
                                      });
                                  }});
    r.emplace_back("flow_start", Number(&C::flowStart));
    r.emplace_back("sim_duration", Number(&C::simDuration));
    r.emplace_back("seed", Number(&C::seed));
    r.emplace_back("sample_interval", Number(&C::sampleInterval));
    r.emplace_back("mode", Field{[](C& c, std::string_view k, std::string_view v) {
                                     auto m = ParseDefenseMode(Trim(v));
                                     if (!m)
                                     {
                                         Bad(k, v, "expected defenseless|ocean|sechand");
                                     }
                                     c.mode = *m;
                                 },
                                 [](const C& c) { return std::string(ToString(c.mode)); }});
    r.emplace_back("watch_timeout", Number(&C::watchTimeout));
    r.emplace_back("neutral", Field{[](C& c, std::string_view k,
                                       std::string_view v) { c.ranker.neutral = ParseInt<int>(k, v); },
                                    [](const C& c) { return std::to_string(c.ranker.neutral); }});
    r.emplace_back("positive_step",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.ranker.positiveStep = ParseInt<int>(k, v); },
                         [](const C& c) { return std::to_string(c.ranker.positiveStep); }});
    r.emplace_back("negative_step",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.ranker.negativeStep = ParseInt<int>(k, v); },
                         [](const C& c) { return std::to_string(c.ranker.negativeStep); }});
    r.emplace_back("faulty_threshold",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.ranker.faultyThreshold = ParseInt<int>(k, v); },
                         [](const C& c) { return std::to_string(c.ranker.faultyThreshold); }});
    r.emplace_back("faulty_timeout",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             const double s = ParseDouble(k, v);
                             if (!std::isfinite(s) || s <= 0)
                             {
                                 Bad(k, v, "expected a positive number of seconds");
                             }
                             c.ranker.faultyTimeout = Seconds(s);
                         },
                         [](const C& c) { return FormatDouble(ToSeconds(c.ranker.faultyTimeout)); }});
    r.emplace_back("rating_floor_factor",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.ranker.floorFactor = ParseInt<int>(k, v); },
                         [](const C& c) { return std::to_string(c.ranker.floorFactor); }});
    r.emplace_back("hop_limit", Number(&C::hopLimit));
    r.emplace_back("cache_lifetime", Number(&C::cacheLifetime));
    r.emplace_back("rreq_jitter_max", Number(&C::rreqJitterMax));
    r.emplace_back("rreq_timeout", Number(&C::rreqTimeout));
    r.emplace_back("send_buffer_timeout", Number(&C::sendBufferTimeout));
    r.emplace_back("fixed_jitter",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             c.fixedJitter.clear();
                             for (auto item : Split(v, ','))
                             {
                                 c.fixedJitter.push_back(ParseDouble(k, item));
                             }
                         },
                         [](const C& c) { return Join(c.fixedJitter, FormatDouble); }});
    r.emplace_back("initial_faulty",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             c.initialFaulty.clear();
                             for (auto item : Split(v, ','))
                             {
                                 c.initialFaulty.push_back(ParsePair(k, item, ':'));
                             }
                         },
                         [](const C& c) {
                             return Join(c.initialFaulty, [](const auto& p) {
                                 return std::to_string(p.first) + ":" + std::to_string(p.second);
                             });
                         }});
    r.emplace_back("economy",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             v = Trim(v);
                             if (v == "none")
                             {
                                 c.economy = false;
                             }
                             else if (v == "optimistic")
                             {
                                 c.economy = true;
                                 c.chips.scheme = ChipScheme::Optimistic;
                             }
                             else if (v == "pessimistic")
                             {
                                 c.economy = true;
                                 c.chips.scheme = ChipScheme::Pessimistic;
                             }
                             else
                             {
                                 Bad(k, v, "expected none|optimistic|pessimistic");
                             }
                         },
                         [](const C& c) {
                             if (!c.economy)
                             {
                                 return std::string("none");
                             }
                             return std::string(c.chips.scheme == ChipScheme::Optimistic
                                                    ? "optimistic"
                                                    : "pessimistic");
                         }});
    r.emplace_back("car", Field{[](C& c, std::string_view k,
                                   std::string_view v) { c.chips.car = ParseDouble(k, v); },
                                [](const C& c) { return FormatDouble(c.chips.car); }});
    r.emplace_back("spend_threshold",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.chips.spendThreshold = ParseDouble(k, v); },
                         [](const C& c) { return FormatDouble(c.chips.spendThreshold); }});
    r.emplace_back("initial_balance",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.chips.initialBalance = ParseDouble(k, v); },
                         [](const C& c) { return FormatDouble(c.chips.initialBalance); }});
    r.emplace_back("chip_ceiling",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.chips.ceiling = ParseDouble(k, v); },
                         [](const C& c) { return FormatDouble(c.chips.ceiling); }});
    r.emplace_back("credit_destination",
                   Field{[](C& c, std::string_view k,
                            std::string_view v) { c.chips.creditDestination = ParseBool(k, v); },
                         [](const C& c) { return std::string(c.chips.creditDestination ? "true" : "false"); }});
    r.emplace_back("misbehaving", Number(&C::misbehaving));
    r.emplace_back("misbehavior", Field{[](C& c, std::string_view k, std::string_view v) {
                                            auto kind = ParseBehaviorKind(Trim(v));
                                            if (!kind)
                                            {
                                                Bad(k, v, "expected a behavior kind");
                                            }
                                            c.misbehavior = *kind;
                                        },
                                        [](const C& c) { return std::string(ToString(c.misbehavior)); }});
    r.emplace_back("misbehaving_runs_ocean", Flag(&C::misbehavingRunsOcean));
    r.emplace_back("tamper_avoid_list", Flag(&C::tamperAvoidList));
    r.emplace_back("rush_victims",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             c.rushVictims.clear();
                             for (auto item : Split(v, ','))
                             {
                                 c.rushVictims.push_back(ParseInt<NodeId>(k, item));
                             }
                         },
                         [](const C& c) {
                             return Join(c.rushVictims, [](NodeId n) { return std::to_string(n); });
                         }});
    r.emplace_back("route_padding", Number(&C::routePadding));
    r.emplace_back("bogus_hop", Flag(&C::bogusHop));
    r.emplace_back("behaviors",
                   Field{[](C& c, std::string_view k, std::string_view v) {
                             c.behaviors.clear();
                             for (auto item : Split(v, ','))
                             {
                                 auto parts = Split(item, ':');
                                 if (parts.size() != 2)
                                 {
                                     Bad(k, item, "expected node:kind");
                                 }
                                 auto kind = ParseBehaviorKind(parts[1]);
                                 if (!kind)
                                 {
                                     Bad(k, item, "unknown behavior kind");
                                 }
                                 c.behaviors.emplace_back(ParseInt<NodeId>(k, parts[0]), *kind);
                             }
                         },
                         [](const C& c) {
                             return Join(c.behaviors, [](const auto& b) {
                                 return std::to_string(b.first) + ":" + ToString(b.second);
                             });
                         }});
    return r;
}

const Registry&
TheRegistry()
{
    static const Registry registry = BuildRegistry();
    return registry;
}

const Field*
FindField(std::string_view key)
{
    for (const auto& [name, field] : TheRegistry())
    {
        if (name == key)
        {
            return &field;
        }
    }
    return nullptr;
}

} // namespace

std::vector<ConfigEntry>
ParseKeyValueText(std::string_view text)
{
    std::vector<ConfigEntry> out;
    int lineNo = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        const auto end = text.find('\n', start);
        std::string_view line =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string_view::npos)
        {
            line = line.substr(0, hash);
        }
        line = Trim(line);
        if (!line.empty())
        {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
            {
                throw ConfigError("line " + std::to_string(lineNo), "expected key = value");
            }
            out.push_back(ConfigEntry{std::string(Trim(line.substr(0, eq))),
                                      std::string(Trim(line.substr(eq + 1))), lineNo});
        }
        if (end == std::string_view::npos)
        {
            break;
        }
        start = end + 1;
    }
    return out;
}

void
ApplyConfigKey(ScenarioConfig& cfg, std::string_view key, std::string_view value)
{
    const Field* f = FindField(key);
    if (f == nullptr)
    {
        throw ConfigError(std::string(key), "unknown key");
    }
    f->set(cfg, key, value);
}

std::string
FormatConfigKey(const ScenarioConfig& cfg, std::string_view key)
{
    const Field* f = FindField(key);
    if (f == nullptr)
    {
        throw ConfigError(std::string(key), "unknown key");
    }
    return f->get(cfg);
}

const std::vector<std::string>&
ConfigKeys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [name, field] : TheRegistry())
        {
            k.push_back(name);
        }
        return k;
    }();
    return keys;
}

bool
IsConfigKey(std::string_view key)
{
    return FindField(key) != nullptr;
}

ScenarioConfig
LoadScenarioText(std::string_view text)
{
    ScenarioConfig cfg;
    for (const auto& e : ParseKeyValueText(text))
    {
        ApplyConfigKey(cfg, e.key, e.value);
    }
    cfg.Validate();
    return cfg;
}

std::string
ReadFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw ConfigError(path, "cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ScenarioConfig
LoadScenarioFile(const std::string& path)
{
    return LoadScenarioText(ReadFile(path));
}

std::string
DumpConfig(const ScenarioConfig& cfg)
{
    std::string out;
    for (const auto& [name, field] : TheRegistry())
    {
        out += name + " = " + field.get(cfg) + "\n";
    }
    return out;
}

} // namespace ocean
