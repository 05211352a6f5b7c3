// Command-line driver: single runs, parameter sweeps and the brute-force oracles.

#include "ocean/config_file.h"
#include "ocean/oracle.h"
#include "ocean/simulator.h"
#include "ocean/sweep.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace ocean;

namespace
{

void
WriteText(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

nlohmann::json
ToJson(const RunMetrics& m)
{
    nlohmann::json j;
    for (const auto& c : MetricColumns())
    {
        j[c.name] = c.get(m);
    }
    j["rejected_by"] = m.rejectedBy;
    j["denied_by"] = m.deniedBy;
    j["faulty_series"] = m.faultySeries;
    j["transmissions"] = m.transmissions;
    j["protocol_errors"] = m.protocolErrors;
    j["events"] = m.events;
    return j;
}

struct RunOptions
{
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string mode;
    bool quiet = false;
    bool trace = false;
};

int
DoRun(const RunOptions& o)
{
    ScenarioConfig cfg;
    std::string text = o.config.empty() ? std::string() : ReadFile(o.config);
    for (const auto& e : ParseKeyValueText(text))
    {
        ApplyConfigKey(cfg, e.key, e.value);
    }
    if (o.seed)
    {
        cfg.seed = *o.seed;
    }
    if (!o.mode.empty())
    {
        ApplyConfigKey(cfg, "mode", o.mode);
    }
    cfg.Validate();

    std::ofstream traceFile;
    if (!o.out.empty())
    {
        fs::create_directories(o.out);
        if (o.trace)
        {
            traceFile.open(fs::path(o.out) / "trace.jsonl", std::ios::binary);
        }
    }
    else if (o.trace)
    {
        throw ConfigError("--trace", "requires --out");
    }
    const RunMetrics m = RunScenario(cfg, traceFile.is_open() ? &traceFile : nullptr);
    const nlohmann::json j = ToJson(m);
    if (!o.out.empty())
    {
        WriteText(fs::path(o.out) / "metrics.json", j.dump(2) + "\n");
        WriteText(fs::path(o.out) / "config.txt", DumpConfig(cfg));
    }
    if (!o.quiet)
    {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int
DoSweep(const std::string& config, const std::string& out, unsigned jobs, bool quiet)
{
    const SweepSpec spec = LoadSweepFile(config);
    SweepProgress progress;
    if (!quiet)
    {
        progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\r" << done << "/" << total << std::flush;
            if (done == total)
            {
                std::cerr << "\n";
            }
        };
    }
    const SweepResult result = RunSweep(spec, jobs, progress);
    const std::string summary = FormatSummary(spec, result);
    fs::create_directories(out);
    WriteText(fs::path(out) / "data.csv", FormatCsv(result));
    WriteText(fs::path(out) / "summary.txt", summary);
    if (!quiet)
    {
        std::cout << summary;
    }
    return 0;
}

int
DoOracle(bool quiet)
{
    const OracleReport report = RunEmbeddedOracles();
    if (!quiet)
    {
        std::cout << report.text;
    }
    return report.mismatches == 0 ? 0 : 2;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"OCEAN routing-misbehavior simulator"};
    app.require_subcommand(1);

    RunOptions run;
    auto* runCmd = app.add_subcommand("run", "Run one scenario");
    runCmd->add_option("--config", run.config, "Scenario file (key = value)");
    runCmd->add_option("--seed", run.seed, "Override the seed");
    runCmd->add_option("--mode", run.mode, "defenseless | ocean | sechand");
    runCmd->add_option("--out", run.out, "Directory for metrics.json, config.txt, trace.jsonl");
    runCmd->add_flag("--quiet", run.quiet, "No output on stdout");
    runCmd->add_flag("--trace", run.trace, "Write a per-packet trace (needs --out)");

    std::string sweepConfig;
    std::string sweepOut;
    unsigned jobs = 1;
    bool sweepQuiet = false;
    auto* sweepCmd = app.add_subcommand("sweep", "Run a parameter sweep");
    sweepCmd->add_option("--config", sweepConfig, "Sweep file")->required();
    sweepCmd->add_option("--out", sweepOut, "Output directory")->required();
    sweepCmd->add_option("--jobs", jobs, "Parallel runs (0 = all cores)");
    sweepCmd->add_flag("--quiet", sweepQuiet, "No progress or summary output");

    bool oracleQuiet = false;
    auto* oracleCmd = app.add_subcommand("oracle", "Run the brute-force oracles");
    oracleCmd->add_flag("--quiet", oracleQuiet, "Only the exit code");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (*runCmd)
        {
            return DoRun(run);
        }
        if (*sweepCmd)
        {
            return DoSweep(sweepConfig, sweepOut, jobs, sweepQuiet);
        }
        return DoOracle(oracleQuiet);
    }
    catch (const ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
