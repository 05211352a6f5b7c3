#ifndef OCEAN_RNG_H
#define OCEAN_RNG_H

#include <cstdint>
#include <random>

namespace ocean
{

/// splitmix64 step, used to derive independent stream seeds.
constexpr std::uint64_t
SplitMix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Seeded generator with platform-independent draws. The standard
 * distributions are implementation defined, so uniform draws are derived from
 * the raw engine output directly.
 */
class Rng
{
  public:
    Rng(std::uint64_t seed, std::uint64_t stream)
        : m_engine(SplitMix64(seed ^ SplitMix64(stream + 0x5851f42d4c957f2dULL)))
    {
    }

    /// Uniform in [0, 1).
    double Uniform01() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }

    double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t Below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
        {
            x = m_engine();
        } while (x >= limit);
        return x % n;
    }

    bool Bernoulli(double p) { return p > 0.0 && Uniform01() < p; }

  private:
    std::mt19937_64 m_engine;
};

} // namespace ocean

#endif // OCEAN_RNG_H
