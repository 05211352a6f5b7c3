#include "ocean/oracle.h"

#include <sstream>

namespace ocean
{

OracleReport
RunDiscoveryOracle(std::size_t cases, std::uint64_t seed)
{
    OracleReport report;
    std::ostringstream os;
    Rng rng(seed, 0x6f7261ULL);
    for (std::size_t i = 0; i < cases; ++i)
    {
        const DiscoveryCase c = RandomDiscoveryCase(rng, 6, 0.2);
        const auto expect = EnumerateAcceptedRoutes(c);
        const auto got = SimulatedAcceptedRoutes(c);
        ++report.discoveryCases;
        if (expect != got)
        {
            ++report.mismatches;
            os << "discovery mismatch: " << Describe(c) << "\n  oracle " << Describe(expect)
               << "\n  simulator " << Describe(got) << "\n";
        }
    }
    os << "discovery oracle: " << report.discoveryCases << " cases, "
       << report.discoveryCases - report.mismatches << " agree\n";
    report.text = os.str();
    return report;
}

OracleReport
RunFoldOracle(std::size_t sequences, std::uint64_t seed)
{
    OracleReport report;
    std::ostringstream os;
    Rng rng(seed, 0x666f6c64ULL);
    const RankerParams defaults;
    RankerParams small;
    small.faultyThreshold = -10;
    small.faultyTimeout = Seconds(5.0);
    small.floorFactor = 2;
    for (std::size_t i = 0; i < sequences; ++i)
    {
        const RankerParams& params = i % 2 == 0 ? defaults : small;
        const std::size_t subjects = 1 + rng.Below(6);
        const auto log = RandomFoldLog(rng, subjects, 20 + rng.Below(400), 2'000'000);
        ++report.foldSequences;
        const std::string diff = CompareRankerWithFold(params, log, subjects);
        if (!diff.empty())
        {
            ++report.mismatches;
            os << "rating mismatch in sequence " << i << ": " << diff << "\n";
        }
    }
    os << "rating replay oracle: " << report.foldSequences << " sequences, "
       << report.foldSequences - report.mismatches << " agree\n";
    report.text = os.str();
    return report;
}

OracleReport
RunEmbeddedOracles()
{
    OracleReport out;
    std::ostringstream os;

    // Hand-built cases: a 5-node graph where the destination answers despite an
    // avoid list, and a relay whose faulty list blocks a reply.
    std::vector<DiscoveryCase> fixed;
    {
        DiscoveryCase c;
        c.numNodes = 5;
        c.links = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
        c.src = 0;
        c.dst = 4;
        c.faulty = {{}, {}, {}, {}, {}};
        c.faulty[1] = {3};
        fixed.push_back(c);
        c.faulty = {{}, {}, {}, {}, {}};
        c.faulty[2] = {1};
        fixed.push_back(c);
        c.faulty = {{2}, {}, {}, {}, {}};
        fixed.push_back(c);
    }
    for (const auto& c : fixed)
    {
        const auto expect = EnumerateAcceptedRoutes(c);
        const auto got = SimulatedAcceptedRoutes(c);
        ++out.discoveryCases;
        os << "fixed case " << Describe(c) << "-> " << Describe(expect);
        if (expect != got)
        {
            ++out.mismatches;
            os << "  MISMATCH simulator " << Describe(got);
        }
        os << "\n";
    }
    for (const OracleReport& r : {RunDiscoveryOracle(200, 1), RunFoldOracle(1000, 1)})
    {
        out.discoveryCases += r.discoveryCases;
        out.foldSequences += r.foldSequences;
        out.mismatches += r.mismatches;
        os << r.text;
    }
    out.text = os.str();
    return out;
}

} // namespace ocean
