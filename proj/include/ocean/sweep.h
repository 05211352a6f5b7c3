#ifndef OCEAN_SWEEP_H
#define OCEAN_SWEEP_H

#include "ocean/config_file.h"
#include "ocean/metrics.h"
#include "ocean/scenario.h"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocean
{

struct SweepAxis
{
    /// A config key, or "curve" to select a named bundle of assignments.
    std::string key;
    std::vector<std::string> values;
};

/**
 * Experiment grid over one or two parameters.
 *
 * File format (flat key/value, `#` comments):
 *
 *     num_nodes = 40                # base assignments, any config key
 *     sweep.misbehaving = 0,10,20   # first axis
 *     sweep.curve = ocean,dsr       # second axis may be a curve bundle
 *     curve.ocean = mode=ocean
 *     curve.dsr = mode=defenseless; misbehavior=misleading
 *     runs_per_point = 20
 *     seed_base = 1
 */
struct SweepSpec
{
    std::vector<ConfigEntry> base;
    std::vector<SweepAxis> axes;
    std::map<std::string, std::vector<ConfigEntry>> curves;
    std::uint32_t runsPerPoint = 20;
    std::uint64_t seedBase = 1;

    void Validate() const;
};

SweepSpec ParseSweepText(std::string_view text);
SweepSpec LoadSweepFile(const std::string& path);

struct SweepPoint
{
    /// (axis key, value) per axis, in axis order.
    std::vector<std::pair<std::string, std::string>> coords;
    /// Seed unset; each run overrides it.
    ScenarioConfig cfg;
};

/// Row-major over axes (last axis fastest). Throws ConfigError for a point
/// whose assignments do not validate.
std::vector<SweepPoint> ExpandPoints(const SweepSpec& spec);

struct RunRow
{
    std::size_t point = 0;
    std::uint64_t seed = 0;
    std::optional<RunMetrics> metrics;
    std::string error;
};

struct PointAggregate
{
    std::size_t runs = 0;
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<double> cv;
};

struct SweepResult
{
    std::vector<SweepPoint> points;
    /// Ordered by (point, seed) whatever the completion order.
    std::vector<RunRow> rows;

    /// Over successful rows of point p, one entry per MetricColumns() column.
    PointAggregate Aggregate(std::size_t p) const;
    /// Rows of point p, seeds ascending.
    std::vector<const RunRow*> RowsOf(std::size_t p) const;
};

using SweepProgress = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every (point, seed); jobs = 0 picks the hardware concurrency.
SweepResult RunSweep(const SweepSpec& spec, unsigned jobs = 1, const SweepProgress& progress = {});

/// Sample mean and standard deviation (n - 1 denominator; zero for n < 2).
std::pair<double, double> MeanStddev(const std::vector<double>& xs);

std::string FormatCsv(const SweepResult& result);
std::string FormatSummary(const SweepSpec& spec, const SweepResult& result);

} // namespace ocean

#endif // OCEAN_SWEEP_H
