#include "ocean/sweep.h"

#include "ocean/simulator.h"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace ocean
{

namespace
{

std::string_view
Trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos)
    {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string>
SplitList(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size())
    {
        const auto pos = s.find(sep, start);
        const auto item = Trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (!item.empty())
        {
            out.emplace_back(item);
        }
        if (pos == std::string_view::npos)
        {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::string
Number(double v)
{
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

std::string
CsvField(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
    {
        return s;
    }
    std::string out = "\"";
    for (char c : s)
    {
        out += c;
        if (c == '"')
        {
            out += '"';
        }
    }
    return out + "\"";
}

} // namespace

void
SweepSpec::Validate() const
{
    if (runsPerPoint < 1)
    {
        throw ConfigError("runs_per_point", "must be >= 1");
    }
    if (axes.empty() || axes.size() > 2)
    {
        throw ConfigError("sweep", "need one or two sweep.<key> axes");
    }
    for (const auto& a : axes)
    {
        if (a.values.empty())
        {
            throw ConfigError("sweep." + a.key, "empty value list");
        }
        if (a.key == "curve")
        {
            for (const auto& v : a.values)
            {
                if (!curves.contains(v))
                {
                    throw ConfigError("sweep.curve", "undefined curve '" + v + "'");
                }
            }
        }
        else if (!IsConfigKey(a.key))
        {
            throw ConfigError("sweep." + a.key, "unknown key");
        }
    }
}

SweepSpec
ParseSweepText(std::string_view text)
{
    SweepSpec spec;
    for (const auto& e : ParseKeyValueText(text))
    {
        if (e.key.starts_with("sweep."))
        {
            spec.axes.push_back(SweepAxis{e.key.substr(6), SplitList(e.value, ',')});
        }
        else if (e.key.starts_with("curve."))
        {
            std::vector<ConfigEntry> bundle;
            for (const auto& item : SplitList(e.value, ';'))
            {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                {
                    throw ConfigError(e.key, "expected key=value items separated by ';'");
                }
                ConfigEntry c{std::string(Trim(item.substr(0, eq))),
                              std::string(Trim(std::string_view(item).substr(eq + 1))), e.line};
                if (!IsConfigKey(c.key))
                {
                    throw ConfigError(e.key, "unknown key '" + c.key + "'");
                }
                bundle.push_back(std::move(c));
            }
            spec.curves[e.key.substr(6)] = std::move(bundle);
        }
        else if (e.key == "runs_per_point")
        {
            try
            {
                spec.runsPerPoint = static_cast<std::uint32_t>(std::stoul(e.value));
            }
            catch (const std::exception&)
            {
                throw ConfigError("runs_per_point", "expected an integer");
            }
        }
        else if (e.key == "seed_base")
        {
            try
            {
                spec.seedBase = std::stoull(e.value);
            }
            catch (const std::exception&)
            {
                throw ConfigError("seed_base", "expected an integer");
            }
        }
        else if (IsConfigKey(e.key))
        {
            spec.base.push_back(e);
        }
        else
        {
            throw ConfigError(e.key, "unknown key");
        }
    }
    spec.Validate();
    return spec;
}

SweepSpec
LoadSweepFile(const std::string& path)
{
    return ParseSweepText(ReadFile(path));
}

std::vector<SweepPoint>
ExpandPoints(const SweepSpec& spec)
{
    spec.Validate();
    ScenarioConfig base;
    for (const auto& e : spec.base)
    {
        ApplyConfigKey(base, e.key, e.value);
    }
    std::vector<SweepPoint> points;
    const std::size_t n0 = spec.axes[0].values.size();
    const std::size_t n1 = spec.axes.size() > 1 ? spec.axes[1].values.size() : 1;
    for (std::size_t i = 0; i < n0; ++i)
    {
        for (std::size_t j = 0; j < n1; ++j)
        {
            SweepPoint pt;
            pt.cfg = base;
            const std::size_t idx[2] = {i, j};
            for (std::size_t a = 0; a < spec.axes.size(); ++a)
            {
                const auto& axis = spec.axes[a];
                const auto& value = axis.values[idx[a]];
                pt.coords.emplace_back(axis.key, value);
                if (axis.key == "curve")
                {
                    for (const auto& c : spec.curves.at(value))
                    {
                        ApplyConfigKey(pt.cfg, c.key, c.value);
                    }
                }
                else
                {
                    ApplyConfigKey(pt.cfg, axis.key, value);
                }
            }
            pt.cfg.Validate();
            points.push_back(std::move(pt));
        }
    }
    return points;
}

std::pair<double, double>
MeanStddev(const std::vector<double>& xs)
{
    if (xs.empty())
    {
        return {0.0, 0.0};
    }
    double sum = 0.0;
    for (double x : xs)
    {
        sum += x;
    }
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2)
    {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double x : xs)
    {
        ss += (x - mean) * (x - mean);
    }
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

std::vector<const RunRow*>
SweepResult::RowsOf(std::size_t p) const
{
    std::vector<const RunRow*> out;
    for (const auto& r : rows)
    {
        if (r.point == p)
        {
            out.push_back(&r);
        }
    }
    return out;
}

PointAggregate
SweepResult::Aggregate(std::size_t p) const
{
    const auto& cols = MetricColumns();
    PointAggregate agg;
    std::vector<std::vector<double>> values(cols.size());
    for (const RunRow* r : RowsOf(p))
    {
        if (!r->metrics)
        {
            continue;
        }
        ++agg.runs;
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            values[c].push_back(cols[c].get(*r->metrics));
        }
    }
    for (const auto& v : values)
    {
        auto [mean, sd] = MeanStddev(v);
        agg.mean.push_back(mean);
        agg.stddev.push_back(sd);
        agg.cv.push_back(mean == 0.0 ? 0.0 : sd / mean);
    }
    return agg;
}

SweepResult
RunSweep(const SweepSpec& spec, unsigned jobs, const SweepProgress& progress)
{
    SweepResult result;
    result.points = ExpandPoints(spec);
    for (std::size_t p = 0; p < result.points.size(); ++p)
    {
        for (std::uint32_t k = 0; k < spec.runsPerPoint; ++k)
        {
            result.rows.push_back(RunRow{p, spec.seedBase + k, std::nullopt, {}});
        }
    }
    if (jobs == 0)
    {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progressMutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < result.rows.size(); i = next++)
        {
            RunRow& row = result.rows[i];
            ScenarioConfig cfg = result.points[row.point].cfg;
            cfg.seed = row.seed;
            try
            {
                row.metrics = RunScenario(cfg);
            }
            catch (const std::exception& e)
            {
                row.error = e.what();
            }
            const std::size_t d = ++done;
            if (progress)
            {
                std::lock_guard lock(progressMutex);
                progress(d, result.rows.size());
            }
        }
    };
    if (jobs == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
        {
            pool.emplace_back(worker);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }
    return result;
}

std::string
FormatCsv(const SweepResult& result)
{
    const auto& cols = MetricColumns();
    std::ostringstream os;
    os << "row,point";
    const auto& coords = result.points.empty() ? std::vector<std::pair<std::string, std::string>>{}
                                               : result.points.front().coords;
    for (const auto& [key, value] : coords)
    {
        os << ',' << key;
    }
    os << ",seed,status";
    for (const auto& c : cols)
    {
        os << ',' << c.name;
    }
    os << '\n';
    const auto prefix = [&](const char* kind, std::size_t p) {
        os << kind << ',' << p;
        for (const auto& [key, value] : result.points[p].coords)
        {
            os << ',' << CsvField(value);
        }
    };
    for (std::size_t p = 0; p < result.points.size(); ++p)
    {
        for (const RunRow* r : result.RowsOf(p))
        {
            prefix("run", p);
            os << ',' << r->seed << ',';
            if (r->metrics)
            {
                os << "ok";
                for (const auto& c : cols)
                {
                    os << ',' << Number(c.get(*r->metrics));
                }
            }
            else
            {
                os << CsvField("error: " + r->error);
                for (std::size_t c = 0; c < cols.size(); ++c)
                {
                    os << ',';
                }
            }
            os << '\n';
        }
        const PointAggregate agg = result.Aggregate(p);
        const std::pair<const char*, const std::vector<double>*> kinds[] = {
            {"mean", &agg.mean}, {"stddev", &agg.stddev}, {"cv", &agg.cv}};
        for (const auto& [kind, values] : kinds)
        {
            prefix(kind, p);
            os << ",," << agg.runs;
            for (double v : *values)
            {
                os << ',' << Number(v);
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string
FormatSummary(const SweepSpec& spec, const SweepResult& result)
{
    const auto& cols = MetricColumns();
    std::size_t coop = 0, mis = 0, sel = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
        const std::string name = cols[c].name;
        coop = name == "coop_ratio" ? c : coop;
        mis = name == "misleading_ratio" ? c : mis;
        sel = name == "selfish_ratio" ? c : sel;
    }
    std::ostringstream os;
    os << "points " << result.points.size() << ", runs per point " << spec.runsPerPoint
       << ", seeds " << spec.seedBase << ".." << spec.seedBase + spec.runsPerPoint - 1 << "\n";
    std::size_t failures = 0;
    for (const auto& r : result.rows)
    {
        failures += r.metrics ? 0 : 1;
    }
    os << "failed runs " << failures << "\n\n";
    os << std::left;
    for (std::size_t p = 0; p < result.points.size(); ++p)
    {
        std::string label;
        for (const auto& [key, value] : result.points[p].coords)
        {
            label += key + "=" + value + " ";
        }
        const PointAggregate agg = result.Aggregate(p);
        os << std::setw(40) << label << std::fixed << std::setprecision(4)
           << "coop " << agg.mean[coop] << " (sd " << agg.stddev[coop] << ")  misleading "
           << agg.mean[mis] << "  selfish " << agg.mean[sel] << "\n";
    }
    return os.str();
}

} // namespace ocean
