#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "ppalab/error.hpp"

namespace ppalab {

using Point = Eigen::VectorXd;

inline constexpr double kAbsTol = 1e-9;
inline constexpr int kMaxDim = 4;

inline double infinity() { return std::numeric_limits<double>::infinity(); }

Point makePoint(std::initializer_list<double> coords);

// ---------------------------------------------------------------------------
// ValueSet: finitely representable subsets of R^d, d <= 4.
// ---------------------------------------------------------------------------

struct EmptySet {};

struct Singleton {
    Point p;
};

struct Box {
    Point lo, hi;  // lo <= hi componentwise
};

struct FinitePoints {
    std::vector<Point> pts;  // nonempty, shared dimension
};

/// direction +1 encodes [anchor, inf), -1 encodes (-inf, anchor]. Only d = 1.
struct HalfLine1D {
    double anchor = 0.0;
    int direction = +1;
};

struct Interval1D {
    double lo = 0.0, hi = 0.0;  // closed; lo <= hi; may be +-inf one-sided
};

struct IntervalUnion1D {
    std::vector<Interval1D> parts;  // sorted, pairwise disjoint, finite
};

class ValueSet {
  public:
    using Variant =
        std::variant<EmptySet, Singleton, Box, FinitePoints, HalfLine1D, IntervalUnion1D>;

    ValueSet() : v_(EmptySet{}) {}

    static ValueSet empty() { return ValueSet(); }
    static ValueSet singleton(Point p);
    static ValueSet singleton(double x);
    static ValueSet box(Point lo, Point hi);
    static ValueSet interval(double lo, double hi);
    static ValueSet finitePoints(std::vector<Point> pts);
    static ValueSet halfLine(double anchor, int direction);
    /// Normalizes: sorts, merges overlapping pieces, classifies the variant.
    static ValueSet fromIntervals(std::vector<Interval1D> parts);

    bool isEmpty() const { return std::holds_alternative<EmptySet>(v_); }
    bool isBounded() const;
    /// 0 for the empty set (compatible with any dimension).
    int dim() const;

    const Variant& raw() const { return v_; }

  private:
    explicit ValueSet(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// Euclidean distance from p to the set; +inf iff the set is empty.
double distance(const Point& p, const ValueSet& s);

/// Nearest point of a nonempty set. Ties: FinitePoints lowest index,
/// 1D unions toward the smaller coordinate.
Point project(const Point& p, const ValueSet& s);

enum class ExcessKind { Finite, EmptyTarget, UnboundedSource };

struct ExcessResult {
    double value = 0.0;
    ExcessKind kind = ExcessKind::Finite;
};

/// One-sided excess sup_{x in c} d(x, target) with the conventions
/// ex(empty, D) = 0 for nonempty D and ex(C, empty) = +inf.
/// Infinite results distinguish an empty target from an unbounded source.
ExcessResult excessDetail(const ValueSet& c, const ValueSet& target);
double excess(const ValueSet& c, const ValueSet& target);

bool contains(const ValueSet& s, const Point& p, double tol = kAbsTol);

/// min_{u in a, v in b} ||u - v||; +inf if either set is empty.
double setDistance(const ValueSet& a, const ValueSet& b);

/// Image of the set under v -> factor * v.
ValueSet scaleSet(double factor, const ValueSet& s);

/// Image of the set under v -> v + shift.
ValueSet translateSet(const ValueSet& s, const Point& shift);

/// Minkowski sum; throws RepresentationError when the sum leaves the variants.
ValueSet minkowskiSum(const ValueSet& a, const ValueSet& b);

/// Intersection with the closed ball B(center, radius). Exact in 1D and for
/// point sets; multi-dimensional boxes are not supported.
ValueSet intersectBall(const ValueSet& s, const Point& center, double radius);

struct LinearRange {
    double lo = 0.0, hi = 0.0;  // may be +-inf
};

/// Exact range of <v, dir> over the set. Throws EmptySetError on empty sets.
LinearRange innerProductRange(const ValueSet& s, const Point& dir);

/// Extreme points of a bounded set (box vertices, interval endpoints, ...).
std::vector<Point> extremePoints(const ValueSet& s);

/// 1D sets as a sorted list of closed intervals (half-lines get an infinite
/// endpoint). Throws DimensionError for d != 1.
std::vector<Interval1D> asIntervals(const ValueSet& s);

/// ex(a,b) and ex(b,a) both zero (same closed set up to tolerance).
bool sameSet(const ValueSet& a, const ValueSet& b, double tol = kAbsTol);

// ---------------------------------------------------------------------------
// Solution sets
// ---------------------------------------------------------------------------

/// S = A^{-1}(0), optionally with the minimum value f* of a driving function.
struct SolutionSet {
    ValueSet set;
    std::optional<double> optimalValue;

    double distanceTo(const Point& p) const { return distance(p, set); }
};

}  // namespace ppalab
