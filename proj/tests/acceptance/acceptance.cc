// Acceptance suite. Prints one PASS/FAIL line per criterion with indented
// detail lines underneath.

#include "ocean/config_file.h"
#include "ocean/oracle.h"
#include "ocean/simulator.h"
#include "ocean/sweep.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>

using namespace ocean;

namespace
{

// Every node a source on average and 15 simulated minutes per run.
const std::string kTraffic = "concurrent_connections = 40\nsim_duration = 900\n";

// Weak links for the false-positive experiments.
const std::string kLossy = "link_loss_prob = 0.05\n";

using Coords = std::map<std::string, std::string>;
using Metric = double (*)(const RunMetrics&);

double
Coop(const RunMetrics& m)
{
    return m.Class(BehaviorKind::Cooperating).DeliveryRatio();
}

double
Misleading(const RunMetrics& m)
{
    return m.Class(BehaviorKind::Misleading).DeliveryRatio();
}

double
Selfish(const RunMetrics& m)
{
    return m.Class(BehaviorKind::Selfish).DeliveryRatio();
}

std::string
Fixed(double v, int digits = 4)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

struct Sweep
{
    std::string name;
    SweepSpec spec;
    SweepResult result;

    std::size_t Point(const Coords& want) const
    {
        for (std::size_t p = 0; p < result.points.size(); ++p)
        {
            bool match = true;
            for (const auto& [key, value] : result.points[p].coords)
            {
                const auto it = want.find(key);
                match = match && (it == want.end() || it->second == value);
            }
            if (match)
            {
                return p;
            }
        }
        throw std::logic_error(name + ": no point matches");
    }

    /// Per-seed values in seed order; failed runs are skipped.
    std::vector<double> Values(const Coords& at, Metric f) const
    {
        std::vector<double> out;
        for (const RunRow* r : result.RowsOf(Point(at)))
        {
            if (r->metrics)
            {
                out.push_back(f(*r->metrics));
            }
        }
        return out;
    }

    double Mean(const Coords& at, Metric f) const { return MeanStddev(Values(at, f)).first; }

    std::size_t Failures() const
    {
        std::size_t n = 0;
        for (const auto& r : result.rows)
        {
            n += r.metrics ? 0 : 1;
        }
        return n;
    }
};

std::deque<Sweep> g_sweeps;

const Sweep&
RunNamed(const std::string& name, const std::string& text)
{
    Sweep s;
    s.name = name;
    s.spec = ParseSweepText(text);
    const auto start = std::chrono::steady_clock::now();
    s.result = RunSweep(s.spec, 0);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cerr << "[" << name << "] " << s.result.rows.size() << " runs in " << Fixed(took.count(), 1)
              << " s\n";
    g_sweeps.push_back(std::move(s));
    return g_sweeps.back();
}

/// One-sided exact sign test that a > b seed by seed; ties are dropped.
struct SignTest
{
    std::size_t wins = 0;
    std::size_t n = 0;
    double p = 1.0;
};

SignTest
Sign(const std::vector<double>& a, const std::vector<double>& b)
{
    SignTest t;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    {
        if (a[i] != b[i])
        {
            ++t.n;
            t.wins += a[i] > b[i] ? 1 : 0;
        }
    }
    double tail = 0.0;
    for (std::size_t k = t.wins; k <= t.n; ++k)
    {
        tail += std::exp(std::lgamma(t.n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(t.n - k + 1.0) -
                         static_cast<double>(t.n) * std::log(2.0));
    }
    t.p = t.n == 0 ? 1.0 : tail;
    return t;
}

std::string
Describe(const SignTest& t)
{
    return std::to_string(t.wins) + "/" + std::to_string(t.n) + " seeds, p = " + Fixed(t.p);
}

std::vector<double>
Difference(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    {
        out.push_back(a[i] - b[i]);
    }
    return out;
}

struct Report
{
    /// Copy of every line, written when --report is given.
    std::ostringstream copy;
    int failed = 0;
    /// Failures among the property suites (ids starting with 8).
    int propertyFailed = 0;

    void Line(const std::string& id, bool pass, const std::string& what,
              const std::vector<std::string>& details)
    {
        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << "  " << id << "  " << what << "\n";
        for (const auto& d : details)
        {
            os << "        " << d << "\n";
        }
        Print(os.str());
        failed += pass ? 0 : 1;
        propertyFailed += !pass && id.starts_with("8") ? 1 : 0;
    }

    void Print(const std::string& text)
    {
        std::cout << text << std::flush;
        copy << text;
    }
};

void
Criterion1(Report& report)
{
    const Sweep& s = RunNamed("fig1", kTraffic + R"(
misbehavior = misleading
pause_time = 0
sweep.curve = base,ocean,defenseless
curve.base = mode=ocean; misbehaving=0
curve.ocean = mode=ocean; misbehaving=10
curve.defenseless = mode=defenseless; misbehaving=10
runs_per_point = 20
)");
    const double base = s.Mean({{"curve", "base"}}, Coop);
    const double ocean = s.Mean({{"curve", "ocean"}}, Coop);
    const double dsr = s.Mean({{"curve", "defenseless"}}, Coop);
    const bool ok = s.Failures() == 0 && ocean >= 0.80 * base && ocean >= 1.5 * dsr;
    report.Line("1", ok, "misleading 10/40: OCEAN >= 0.80 x baseline and >= 1.5 x defenseless",
                {"cooperating ratio: no misbehavior " + Fixed(base) + ", OCEAN " + Fixed(ocean) +
                     ", defenseless " + Fixed(dsr),
                 "OCEAN / baseline " + Fixed(ocean / base, 3) + ", OCEAN / defenseless " +
                     Fixed(ocean / dsr, 3)});
}

void
Criterion2(Report& report)
{
    const Sweep& s = RunNamed("fig1-endpoint", kTraffic + R"(
mode = ocean
misbehavior = misleading
pause_time = 0
sweep.misbehaving = 36,40
runs_per_point = 10
)");
    const auto coopOriginated = [](const RunMetrics& m) {
        return static_cast<double>(m.Class(BehaviorKind::Cooperating).originated);
    };
    const auto coopShare = [](const RunMetrics& m) {
        return m.originated == 0 ? 0.0
                                 : static_cast<double>(m.Class(BehaviorKind::Cooperating).originated) /
                                       static_cast<double>(m.originated);
    };
    const auto overall = [](const RunMetrics& m) { return m.OverallRatio(); };
    const double share36 = s.Mean({{"misbehaving", "36"}}, coopShare);
    const double overall36 = s.Mean({{"misbehaving", "36"}}, overall);
    const double coop40 = s.Mean({{"misbehaving", "40"}}, coopOriginated);
    const double overall40 = s.Mean({{"misbehaving", "40"}}, overall);
    const bool ok = s.Failures() == 0 && share36 <= 0.15 && coop40 == 0.0 && overall36 <= 0.05 &&
                    overall40 <= 0.05;
    report.Line("2", ok,
                "misleading 90% and 100%: cooperating traffic and overall delivery fall to zero",
                {"90%: cooperating share of originated " + Fixed(share36) + " (<= 0.15), overall ratio " +
                     Fixed(overall36) + " (<= 0.05)",
                 "100%: cooperating originated " + Fixed(coop40, 0) + " (== 0), overall ratio " +
                     Fixed(overall40) + " (<= 0.05)"});
}

void
Criteria3And5(Report& report, const Sweep** thresholdsOut)
{
    const Sweep& s = RunNamed("fig2", kTraffic + kLossy + R"(
misbehavior = misleading
misbehaving = 10
pause_time = 0
sweep.faulty_threshold = -10,-80
sweep.mode = ocean,sechand
runs_per_point = 20
)");
    const auto at = [](const char* th, const char* mode) {
        return Coords{{"faulty_threshold", th}, {"mode", mode}};
    };
    const SignTest low = Sign(s.Values(at("-10", "ocean"), Coop), s.Values(at("-10", "sechand"), Coop));
    const SignTest high = Sign(s.Values(at("-80", "sechand"), Coop), s.Values(at("-80", "ocean"), Coop));
    const bool ok = s.Failures() == 0 && low.p < 0.1 && high.p < 0.1;
    report.Line("3", ok,
                "pause 0, link loss 0.05: OCEAN >= SEC-HAND at -10, SEC-HAND >= OCEAN at -80 (sign test p < 0.1)",
                {"threshold -10: OCEAN " + Fixed(s.Mean(at("-10", "ocean"), Coop)) + ", SEC-HAND " +
                     Fixed(s.Mean(at("-10", "sechand"), Coop)) + "; OCEAN ahead on " + Describe(low),
                 "threshold -80: OCEAN " + Fixed(s.Mean(at("-80", "ocean"), Coop)) + ", SEC-HAND " +
                     Fixed(s.Mean(at("-80", "sechand"), Coop)) + "; SEC-HAND ahead on " + Describe(high)});
    *thresholdsOut = &s;
}

void
Criteria4And5(Report& report, const Sweep& fig2)
{
    const Sweep& timeouts = RunNamed("fig3", kTraffic + kLossy + R"(
misbehavior = misleading
misbehaving = 10
pause_time = 0
sweep.faulty_timeout = 10,60,240
sweep.mode = ocean,sechand
runs_per_point = 20
)");
    const auto at = [](const char* t, const char* mode) {
        return Coords{{"faulty_timeout", t}, {"mode", mode}};
    };
    const auto gapLow = Difference(timeouts.Values(at("10", "ocean"), Coop),
                                   timeouts.Values(at("10", "sechand"), Coop));
    const auto gapHigh = Difference(timeouts.Values(at("240", "ocean"), Coop),
                                    timeouts.Values(at("240", "sechand"), Coop));
    const SignTest t4 = Sign(gapLow, gapHigh);
    std::vector<std::string> lines;
    for (const char* t : {"10", "60", "240"})
    {
        lines.push_back(std::string("timeout ") + t + " s: OCEAN " + Fixed(timeouts.Mean(at(t, "ocean"), Coop)) +
                        ", SEC-HAND " + Fixed(timeouts.Mean(at(t, "sechand"), Coop)));
    }
    lines.push_back("OCEAN minus SEC-HAND larger at 10 s than at 240 s on " + Describe(t4));
    report.Line("4", timeouts.Failures() == 0 && t4.p < 0.1,
                "link loss 0.05: SEC-HAND falls behind OCEAN at the low faulty timeout (sign test p < 0.1)",
                lines);

    const Sweep& flat = RunNamed("fig4", kTraffic + kLossy + R"(
mode = ocean
misbehavior = misleading
misbehaving = 10
pause_time = 0
sweep.faulty_threshold = -20,-40
runs_per_point = 20
)");

    std::vector<std::string> details;
    bool punish = true;
    for (const char* th : {"-10", "-80"})
    {
        const double o = fig2.Mean({{"faulty_threshold", th}, {"mode", "ocean"}}, Misleading);
        const double h = fig2.Mean({{"faulty_threshold", th}, {"mode", "sechand"}}, Misleading);
        punish = punish && h <= o;
        details.push_back(std::string("misleading ratio at threshold ") + th + ": SEC-HAND " + Fixed(h) +
                          ", OCEAN " + Fixed(o));
    }
    for (const char* t : {"10", "60", "240"})
    {
        const double o = timeouts.Mean(at(t, "ocean"), Misleading);
        const double h = timeouts.Mean(at(t, "sechand"), Misleading);
        punish = punish && h <= o;
        details.push_back(std::string("misleading ratio at timeout ") + t + " s: SEC-HAND " + Fixed(h) +
                          ", OCEAN " + Fixed(o));
    }

    std::vector<double> byThreshold = {
        fig2.Mean({{"faulty_threshold", "-10"}, {"mode", "ocean"}}, Misleading),
        flat.Mean({{"faulty_threshold", "-20"}}, Misleading),
        flat.Mean({{"faulty_threshold", "-40"}}, Misleading),
        fig2.Mean({{"faulty_threshold", "-80"}, {"mode", "ocean"}}, Misleading)};
    const auto [lo, hi] = std::minmax_element(byThreshold.begin(), byThreshold.end());
    const bool isFlat = *hi - *lo <= 0.15;
    details.push_back("OCEAN misleading ratio at -10,-20,-40,-80: " + Fixed(byThreshold[0]) + ", " +
                      Fixed(byThreshold[1]) + ", " + Fixed(byThreshold[2]) + ", " + Fixed(byThreshold[3]) +
                      "; range " + Fixed(*hi - *lo) + " (<= 0.15)");

    std::vector<double> byTimeout;
    for (const char* t : {"10", "60", "240"})
    {
        byTimeout.push_back(timeouts.Mean(at(t, "ocean"), Misleading));
    }
    const bool decreasing = byTimeout[0] > byTimeout[1] && byTimeout[1] > byTimeout[2];
    details.push_back("OCEAN misleading ratio at timeout 10,60,240 s: " + Fixed(byTimeout[0]) + ", " +
                      Fixed(byTimeout[1]) + ", " + Fixed(byTimeout[2]) + " (strictly decreasing)");

    report.Line("5", flat.Failures() == 0 && punish && isFlat && decreasing,
                "misleading nodes: SEC-HAND <= OCEAN, OCEAN flat over thresholds, falling with timeout",
                details);
}

/// Six nodes: 0 originates, 1 attacks, 2-5-3 is the honest detour and 3 is the rushed node.
ScenarioConfig
RushTopology(NodeId dst, bool tamper)
{
    std::ostringstream os;
    os << "num_nodes = 6\npause_time = inf\nstatic_links = 0-1,1-3,0-2,2-5,5-3,3-4\n"
          "fixed_jitter = 0.01,0.01,0.01,0.01,0.01,0.01\nmode = ocean\nbehaviors = 1:misleading\n"
          "initial_faulty = 0:1\nsim_duration = 20\n"
       << "flows = 0>" << dst << "\ntamper_avoid_list = " << (tamper ? "true" : "false") << "\n";
    return LoadScenarioText(os.str());
}

struct RushOutcome
{
    std::uint64_t delivered = 0;
    std::uint64_t originated = 0;
    bool usesHonest = false;
    std::string routes;
};

RushOutcome
RunRush(NodeId dst, bool tamper)
{
    const ScenarioConfig cfg = RushTopology(dst, tamper);
    Simulator sim(cfg);
    const RunMetrics m = sim.Run();
    RushOutcome out{m.delivered, m.originated, false, {}};
    for (const auto& r : sim.AcceptedRoutes(0))
    {
        out.usesHonest = out.usesHonest || RouteContains(r, 2);
        std::string s;
        for (NodeId n : r)
        {
            s += (s.empty() ? "" : "-") + std::to_string(n);
        }
        if (out.routes.find(s) == std::string::npos)
        {
            out.routes += (out.routes.empty() ? "" : " ") + s;
        }
    }
    if (out.routes.empty())
    {
        out.routes = "none";
    }
    return out;
}

void
Criterion6(Report& report)
{
    const Sweep& s = RunNamed("fig6", kTraffic + R"(
mode = ocean
misbehavior = misleading
misbehaving = 5
pause_time = 0
sweep.tamper_avoid_list = false,true
runs_per_point = 20
)");
    const double off = s.Mean({{"tamper_avoid_list", "false"}}, Coop);
    const double on = s.Mean({{"tamper_avoid_list", "true"}}, Coop);
    const bool small = std::abs(on - off) <= 0.10;

    const RushOutcome relayClean = RunRush(4, false);
    const RushOutcome relayAttacked = RunRush(4, true);
    const RushOutcome destAttacked = RunRush(3, true);
    const bool attackWorks = relayClean.usesHonest && relayClean.delivered > 0 && !relayAttacked.usesHonest &&
                             relayAttacked.delivered == 0;
    const bool attackFails = destAttacked.usesHonest && destAttacked.delivered == destAttacked.originated &&
                             destAttacked.originated > 0;
    const auto line = [](const char* what, const RushOutcome& r) {
        return std::string(what) + ": delivered " + std::to_string(r.delivered) + "/" +
               std::to_string(r.originated) + ", accepted routes " + r.routes;
    };
    report.Line("6", s.Failures() == 0 && small && attackWorks && attackFails,
                "rushing: |tamper on - off| <= 0.10 at 5 attackers; 6-node attack succeeds at a relay, fails at the destination",
                {"5 attackers, cooperating ratio: tampering off " + Fixed(off) + ", on " + Fixed(on) +
                     ", difference " + Fixed(std::abs(on - off)),
                 line("rushed node relays, no tampering", relayClean),
                 line("rushed node relays, tampering", relayAttacked),
                 line("rushed node is the destination, tampering", destAttacked)});
}

void
Criterion7(Report& report)
{
    const Sweep& s = RunNamed("fig7", kTraffic + R"(
mode = defenseless
misbehavior = selfish
misbehaving = 5
pause_time = 0
sweep.car = 0.005,0.05,0.5,2
sweep.economy = optimistic,pessimistic
runs_per_point = 20
)");
    const std::vector<std::string> cars = {"0.005", "0.05", "0.5", "2"};
    std::vector<std::string> details;
    bool ok = s.Failures() == 0;
    for (const char* scheme : {"optimistic", "pessimistic"})
    {
        const auto at = [&](const std::string& car) { return Coords{{"car", car}, {"economy", scheme}}; };
        std::string row = std::string(scheme) + " coop/selfish:";
        for (const auto& car : cars)
        {
            row += " " + car + ": " + Fixed(s.Mean(at(car), Coop)) + "/" + Fixed(s.Mean(at(car), Selfish));
        }
        details.push_back(row);
        const double selfLow = s.Mean(at(cars.front()), Selfish);
        const double selfHigh = s.Mean(at(cars.back()), Selfish);
        const double coopLow = s.Mean(at(cars.front()), Coop);
        const double coopHigh = s.Mean(at(cars.back()), Coop);
        const bool span = selfHigh >= 4.0 * selfLow;
        const bool coopDrop = coopLow <= 0.7 * coopHigh;
        ok = ok && span && coopDrop;
        details.push_back(std::string(scheme) + ": selfish span " +
                          (selfLow > 0 ? Fixed(selfHigh / selfLow, 2) + "x" : std::string("unbounded")) +
                          " (>= 4x), cooperating low/high " + Fixed(coopLow / coopHigh, 3) + " (<= 0.7)");
    }
    for (const auto& car : cars)
    {
        const double opt = s.Mean({{"car", car}, {"economy", "optimistic"}}, Coop);
        const double pes = s.Mean({{"car", car}, {"economy", "pessimistic"}}, Coop);
        ok = ok && opt >= pes;
        details.push_back("CAR " + car + ": optimistic cooperating " + Fixed(opt) + " vs pessimistic " +
                          Fixed(pes) + (opt >= pes ? "" : " (optimistic below)"));
    }

    // Reference only: optimistic crediting restricted to relays that forward.
    const Sweep& relayOnly = RunNamed("fig7-relay-credit", kTraffic + R"(
mode = defenseless
misbehavior = selfish
misbehaving = 5
pause_time = 0
economy = optimistic
credit_destination = false
sweep.car = 0.005,2
runs_per_point = 5
)");
    details.push_back("reference, optimistic without destination credit, 5 seeds: coop/selfish 0.005: " +
                      Fixed(relayOnly.Mean({{"car", "0.005"}}, Coop)) + "/" +
                      Fixed(relayOnly.Mean({{"car", "0.005"}}, Selfish)) + " 2: " +
                      Fixed(relayOnly.Mean({{"car", "2"}}, Coop)) + "/" +
                      Fixed(relayOnly.Mean({{"car", "2"}}, Selfish)));
    report.Line("7", ok, "economy: selfish span >= 4x, cooperating drop to <= 0.7x, optimistic >= pessimistic",
                details);
}

void
Criterion8(Report& report)
{
    const OracleReport fold = RunFoldOracle(10000, 2024);
    report.Line("8a", fold.mismatches == 0 && fold.foldSequences == 10000,
                "rating replay oracle, 10000 random event sequences",
                {std::to_string(fold.foldSequences - fold.mismatches) + " of " +
                 std::to_string(fold.foldSequences) + " agree exactly"});

    const OracleReport discovery = RunDiscoveryOracle(200, 2024);
    report.Line("8b", discovery.mismatches == 0 && discovery.discoveryCases == 200,
                "route-discovery oracle, 200 static topologies of <= 6 nodes",
                {std::to_string(discovery.discoveryCases - discovery.mismatches) + " of " +
                 std::to_string(discovery.discoveryCases) + " accepted-route sets agree exactly"});

    const std::string line = "num_nodes = 4\nstatic_links = 0-1,1-2,2-3\npause_time = inf\n"
                             "flows = 2>0,1>3\nsim_duration = 30\nmode = defenseless\n";
    const RunMetrics dead = RunScenario(LoadScenarioText(line + "economy = pessimistic\ncar = 0\n"));
    const RunMetrics opt = RunScenario(LoadScenarioText(line + "economy = optimistic\ncar = 0\n"));
    const RunMetrics car = RunScenario(LoadScenarioText(line + "economy = pessimistic\ncar = 0.5\n"));
    report.Line("8c", dead.originated > 0 && dead.delivered == 0 && opt.delivered > 0 && car.delivered > 0,
                "chipcount deadlock between two mutual relays",
                {"pessimistic CAR 0: " + std::to_string(dead.delivered) + "/" + std::to_string(dead.originated),
                 "optimistic CAR 0: " + std::to_string(opt.delivered) + "/" + std::to_string(opt.originated),
                 "pessimistic CAR 0.5: " + std::to_string(car.delivered) + "/" +
                     std::to_string(car.originated)});

    std::size_t reruns = 0, identical = 0;
    for (const Sweep& s : g_sweeps)
    {
        for (std::size_t p = 0; p < s.result.points.size(); ++p)
        {
            const RunRow* first = s.result.RowsOf(p).front();
            ScenarioConfig cfg = s.result.points[p].cfg;
            cfg.seed = first->seed;
            ++reruns;
            identical += first->metrics && Serialize(RunScenario(cfg)) == Serialize(*first->metrics) ? 1 : 0;
        }
    }
    for (NodeId dst : {NodeId{4}, NodeId{3}})
    {
        const ScenarioConfig cfg = RushTopology(dst, true);
        ++reruns;
        identical += Serialize(RunScenario(cfg)) == Serialize(RunScenario(cfg)) ? 1 : 0;
    }
    report.Line("8d", reruns == identical, "determinism: first seed of every acceptance point rerun",
                {std::to_string(identical) + " of " + std::to_string(reruns) + " reruns byte-identical"});

    std::size_t runs = 0, balanced = 0;
    for (const Sweep& s : g_sweeps)
    {
        for (const auto& r : s.result.rows)
        {
            ++runs;
            if (!r.metrics)
            {
                continue;
            }
            const RunMetrics& m = *r.metrics;
            std::uint64_t fates = 0, classOriginated = 0, classDelivered = 0;
            for (auto f : m.fates)
            {
                fates += f;
            }
            bool perClass = true;
            for (const auto& c : m.byClass)
            {
                classOriginated += c.originated;
                classDelivered += c.delivered;
                perClass = perClass && c.delivered <= c.originated;
            }
            balanced += fates == m.originated && classOriginated == m.originated &&
                                classDelivered == m.delivered && m.FateCount(Fate::Delivered) == m.delivered &&
                                perClass
                            ? 1
                            : 0;
        }
    }
    report.Line("8e", runs == balanced && runs > 0, "conservation: packet fates sum to originated in every run",
                {std::to_string(balanced) + " of " + std::to_string(runs) + " acceptance runs balance exactly"});
}

} // namespace

int
main(int argc, char** argv)
{
    // Default exit status counts the property suites only; --strict counts
    // every criterion.
    bool strict = false;
    std::string reportPath;
    for (int i = 1; i < argc; ++i)
    {
        const std::string_view arg = argv[i];
        if (arg == "--strict")
        {
            strict = true;
        }
        else if (arg == "--report" && i + 1 < argc)
        {
            reportPath = argv[++i];
        }
        else
        {
            std::cerr << "usage: acceptance [--strict] [--report FILE]\n";
            return 1;
        }
    }
    Report report;
    int status = 0;
    try
    {
        Criterion1(report);
        Criterion2(report);
        const Sweep* fig2 = nullptr;
        Criteria3And5(report, &fig2);
        Criteria4And5(report, *fig2);
        Criterion6(report);
        Criterion7(report);
        Criterion8(report);
        report.Print(report.failed == 0 ? std::string("all criteria pass\n")
                                        : std::to_string(report.failed) + " criteria fail\n");
        status = strict ? report.failed : report.propertyFailed;
    }
    catch (const std::exception& e)
    {
        report.Print(std::string("FAIL  suite aborted: ") + e.what() + "\n");
        status = 1;
    }
    if (!reportPath.empty())
    {
        std::ofstream(reportPath) << report.copy.str();
    }
    return status;
}
