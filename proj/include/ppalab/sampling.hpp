#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ppalab/setgeom.hpp"

namespace ppalab {

/// splitmix64 step; the whole toolkit draws randomness from this so results
/// are bit-reproducible across platforms and standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniformInt(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Point point(int dim, double lo, double hi) {
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = uniform(lo, hi);
        return p;
    }

  private:
    std::uint64_t state_;
};

namespace detail {
inline double fractional(double x) { return x - std::floor(x); }
}  // namespace detail

/// Kronecker low-discrepancy sequence in the closed ball B(center, radius),
/// phase-shifted by the seed. Cube points outside the ball are pushed to the
/// sphere, which keeps the extremal shell well covered.
inline std::vector<Point> lowDiscrepancyBall(const Point& center, double radius, int count,
                                             std::uint64_t seed) {
    static const double kAlpha[4] = {0.41421356237309515, 0.7320508075688772,
                                     0.23606797749978969, 0.6457513110645906};
    const int d = static_cast<int>(center.size());
    std::uint64_t s = seed;
    double phase[4];
    for (int j = 0; j < d; ++j)
        phase[j] = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Point v(d);
        for (int j = 0; j < d; ++j)
            v[j] = 2.0 * detail::fractional(phase[j] + (i + 1) * kAlpha[j]) - 1.0;
        const double n = v.norm();
        if (n > 1.0) v /= n;
        out.push_back(center + radius * v);
    }
    return out;
}

/// The 2d points center +- radius * e_j.
inline std::vector<Point> axisExtremePoints(const Point& center, double radius) {
    const int d = static_cast<int>(center.size());
    std::vector<Point> out;
    out.reserve(2 * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        for (double s : {1.0, -1.0}) {
            Point p = center;
            p[j] += s * radius;
            out.push_back(std::move(p));
        }
    return out;
}

/// Axis points at geometrically shrinking distances radius * 2^{-k}. Probes
/// need these to expose ratios that blow up only as the base point is
/// approached (divergence detection).
inline std::vector<Point> shrinkingAxisPoints(const Point& center, double radius,
                                              int levels = 40) {
    std::vector<Point> out;
    double r = radius;
    for (int k = 0; k < levels; ++k) {
        r *= 0.5;
        for (Point& p : axisExtremePoints(center, r)) out.push_back(std::move(p));
    }
    return out;
}

/// Standard probe cloud: axis extremes, shrinking axis points, and a seeded
/// low-discrepancy fill of the ball.
inline std::vector<Point> probeCloud(const Point& center, double radius, int count,
                                     std::uint64_t seed) {
    std::vector<Point> out = axisExtremePoints(center, radius);
    for (Point& p : shrinkingAxisPoints(center, radius)) out.push_back(std::move(p));
    for (Point& p : lowDiscrepancyBall(center, radius, count, seed)) out.push_back(std::move(p));
    return out;
}

}  // namespace ppalab
