#include "ppalab/setgeom.hpp"

#include <algorithm>
#include <cmath>

namespace ppalab {

namespace {

constexpr double kMergeTol = 1e-12;

void requireFinite(const Point& p, const char* what) {
    if (!p.allFinite()) throw PreconditionError(std::string(what) + " must be finite");
}

void requireDim(int d, const char* what) {
    if (d < 1 || d > kMaxDim)
        throw DimensionError(std::string(what) + ": dimension must be in [1, 4]");
}

void requireCompatible(int pd, const ValueSet& s) {
    const int sd = s.dim();
    if (sd != 0 && sd != pd) throw DimensionError("point/set dimension mismatch");
}

double intervalDistance(double x, const Interval1D& iv) {
    if (x < iv.lo) return iv.lo - x;
    if (x > iv.hi) return x - iv.hi;
    return 0.0;
}

double clampToInterval(double x, const Interval1D& iv) {
    return std::min(std::max(x, iv.lo), iv.hi);
}

}  // namespace

Point makePoint(std::initializer_list<double> coords) {
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) p[i++] = c;
    return p;
}

// --- construction -----------------------------------------------------------

ValueSet ValueSet::singleton(Point p) {
    requireDim(static_cast<int>(p.size()), "Singleton");
    requireFinite(p, "Singleton point");
    return ValueSet(Variant(Singleton{std::move(p)}));
}

ValueSet ValueSet::singleton(double x) { return singleton(makePoint({x})); }

ValueSet ValueSet::box(Point lo, Point hi) {
    if (lo.size() != hi.size()) throw DimensionError("Box corners differ in dimension");
    requireDim(static_cast<int>(lo.size()), "Box");
    requireFinite(lo, "Box corner");
    requireFinite(hi, "Box corner");
    if (((hi - lo).array() < 0).any()) throw PreconditionError("Box requires lo <= hi");
    return ValueSet(Variant(Box{std::move(lo), std::move(hi)}));
}

ValueSet ValueSet::interval(double lo, double hi) {
    return box(makePoint({lo}), makePoint({hi}));
}

ValueSet ValueSet::finitePoints(std::vector<Point> pts) {
    if (pts.empty()) return ValueSet::empty();
    const int d = static_cast<int>(pts.front().size());
    requireDim(d, "FinitePoints");
    for (const Point& p : pts) {
        if (static_cast<int>(p.size()) != d)
            throw DimensionError("FinitePoints members differ in dimension");
        requireFinite(p, "FinitePoints member");
    }
    return ValueSet(Variant(FinitePoints{std::move(pts)}));
}

ValueSet ValueSet::halfLine(double anchor, int direction) {
    if (direction != 1 && direction != -1)
        throw PreconditionError("HalfLine direction must be +1 or -1");
    if (!std::isfinite(anchor)) throw PreconditionError("HalfLine anchor must be finite");
    return ValueSet(Variant(HalfLine1D{anchor, direction}));
}

ValueSet ValueSet::fromIntervals(std::vector<Interval1D> parts) {
    std::erase_if(parts, [](const Interval1D& iv) { return iv.lo > iv.hi; });
    if (parts.empty()) return ValueSet::empty();
    std::sort(parts.begin(), parts.end(),
              [](const Interval1D& a, const Interval1D& b) { return a.lo < b.lo; });
    std::vector<Interval1D> merged;
    for (const Interval1D& iv : parts) {
        if (!merged.empty() && iv.lo <= merged.back().hi + kMergeTol)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    const bool loInf = std::isinf(merged.front().lo);
    const bool hiInf = std::isinf(merged.back().hi);
    if (loInf && hiInf && merged.size() == 1)
        throw RepresentationError("1D set equals the whole line");
    if (loInf || hiInf) {
        if (merged.size() > 1)
            throw RepresentationError("half-line plus detached bounded pieces");
        const Interval1D iv = merged.front();
        return hiInf ? halfLine(iv.lo, +1) : halfLine(iv.hi, -1);
    }
    if (merged.size() == 1 && merged.front().lo == merged.front().hi)
        return singleton(merged.front().lo);
    return ValueSet(Variant(IntervalUnion1D{std::move(merged)}));
}

bool ValueSet::isBounded() const {
    return !std::holds_alternative<HalfLine1D>(v_);
}

int ValueSet::dim() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EmptySet>) return 0;
            else if constexpr (std::is_same_v<T, Singleton>) return static_cast<int>(s.p.size());
            else if constexpr (std::is_same_v<T, Box>) return static_cast<int>(s.lo.size());
            else if constexpr (std::is_same_v<T, FinitePoints>)
                return static_cast<int>(s.pts.front().size());
            else
                return 1;  // HalfLine1D, IntervalUnion1D
        },
        v_);
}

// --- distance / projection --------------------------------------------------

double distance(const Point& p, const ValueSet& s) {
    requireFinite(p, "query point");
    requireCompatible(static_cast<int>(p.size()), s);
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptySet>) {
                return infinity();
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return (p - v.p).norm();
            } else if constexpr (std::is_same_v<T, Box>) {
                const Point q = p.cwiseMax(v.lo).cwiseMin(v.hi);
                return (p - q).norm();
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                double best = infinity();
                for (const Point& q : v.pts) best = std::min(best, (p - q).norm());
                return best;
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                const double x = p[0];
                return v.direction > 0 ? std::max(0.0, v.anchor - x)
                                       : std::max(0.0, x - v.anchor);
            } else {
                double best = infinity();
                for (const Interval1D& iv : v.parts)
                    best = std::min(best, intervalDistance(p[0], iv));
                return best;
            }
        },
        s.raw());
}

Point project(const Point& p, const ValueSet& s) {
    requireFinite(p, "query point");
    requireCompatible(static_cast<int>(p.size()), s);
    if (s.isEmpty()) throw EmptySetError("project onto an empty set");
    return std::visit(
        [&](const auto& v) -> Point {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return v.p;
            } else if constexpr (std::is_same_v<T, Box>) {
                return p.cwiseMax(v.lo).cwiseMin(v.hi);
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                std::size_t best = 0;
                double bestDist = (p - v.pts[0]).norm();
                for (std::size_t i = 1; i < v.pts.size(); ++i) {
                    const double d = (p - v.pts[i]).norm();
                    if (d < bestDist) {  // strict: ties keep the lowest index
                        bestDist = d;
                        best = i;
                    }
                }
                return v.pts[best];
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                const double x = p[0];
                const double q = v.direction > 0 ? std::max(x, v.anchor)
                                                 : std::min(x, v.anchor);
                return makePoint({q});
            } else if constexpr (std::is_same_v<T, IntervalUnion1D>) {
                double best = infinity(), bestQ = 0.0;
                for (const Interval1D& iv : v.parts) {
                    const double q = clampToInterval(p[0], iv);
                    const double d = std::abs(p[0] - q);
                    if (d < best) {  // strict: ties resolve to the smaller coordinate
                        best = d;
                        bestQ = q;
                    }
                }
                return makePoint({bestQ});
            } else {
                throw EmptySetError("project onto an empty set");
            }
        },
        s.raw());
}

bool contains(const ValueSet& s, const Point& p, double tol) {
    return distance(p, s) <= tol;
}

// --- 1D interval views -------------------------------------------------------

std::vector<Interval1D> asIntervals(const ValueSet& s) {
    if (s.dim() > 1) throw DimensionError("asIntervals requires a 1D set");
    return std::visit(
        [](const auto& v) -> std::vector<Interval1D> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptySet>) {
                return {};
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return {{v.p[0], v.p[0]}};
            } else if constexpr (std::is_same_v<T, Box>) {
                return {{v.lo[0], v.hi[0]}};
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                std::vector<Interval1D> out;
                out.reserve(v.pts.size());
                for (const Point& p : v.pts) out.push_back({p[0], p[0]});
                std::sort(out.begin(), out.end(),
                          [](const Interval1D& a, const Interval1D& b) { return a.lo < b.lo; });
                return out;
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                if (v.direction > 0) return {{v.anchor, infinity()}};
                return {{-infinity(), v.anchor}};
            } else {
                return v.parts;
            }
        },
        s.raw());
}

// --- excess ------------------------------------------------------------------

namespace {

// sup over one source interval of the distance to the target interval list.
// Candidates: the source endpoints and target gap midpoints inside the source.
double excessIntervalOverList(const Interval1D& src, const std::vector<Interval1D>& target) {
    if (std::isinf(src.lo) || std::isinf(src.hi)) {
        // Unbounded source: finite excess only when the target contains a
        // half-line pointing the same way.
        if (std::isinf(src.lo) && !std::isinf(target.front().lo)) return infinity();
        if (std::isinf(src.hi) && !std::isinf(target.back().hi)) return infinity();
    }
    double best = 0.0;
    auto consider = [&](double x) {
        if (!std::isfinite(x)) return;
        if (x < src.lo || x > src.hi) return;
        double d = infinity();
        for (const Interval1D& iv : target) d = std::min(d, intervalDistance(x, iv));
        best = std::max(best, d);
    };
    consider(src.lo);
    consider(src.hi);
    if (std::isinf(src.lo)) consider(target.front().lo);
    if (std::isinf(src.hi)) consider(target.back().hi);
    for (std::size_t i = 0; i + 1 < target.size(); ++i)
        consider(0.5 * (target[i].hi + target[i + 1].lo));
    return best;
}

std::vector<Point> boxVertices(const Box& b) {
    const int d = static_cast<int>(b.lo.size());
    std::vector<Point> out;
    out.reserve(std::size_t{1} << d);
    for (int mask = 0; mask < (1 << d); ++mask) {
        Point v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? b.hi[i] : b.lo[i];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

ExcessResult excessDetail(const ValueSet& c, const ValueSet& target) {
    if (target.isEmpty()) return {infinity(), ExcessKind::EmptyTarget};
    if (c.isEmpty()) return {0.0, ExcessKind::Finite};
    const int cd = c.dim(), td = target.dim();
    if (cd != td) throw DimensionError("excess: set dimension mismatch");

    if (cd == 1) {
        const auto src = asIntervals(c);
        const auto tgt = asIntervals(target);
        double best = 0.0;
        for (const Interval1D& iv : src) {
            const double e = excessIntervalOverList(iv, tgt);
            if (std::isinf(e)) return {infinity(), ExcessKind::UnboundedSource};
            best = std::max(best, e);
        }
        return {best, ExcessKind::Finite};
    }

    // Multi-dimensional sources are bounded; the sup is evaluated on the
    // source's extreme points (exact for convex targets).
    std::vector<Point> samples = std::visit(
        [&](const auto& v) -> std::vector<Point> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Singleton>) return {v.p};
            else if constexpr (std::is_same_v<T, Box>) return boxVertices(v);
            else if constexpr (std::is_same_v<T, FinitePoints>) return v.pts;
            else throw RepresentationError("unsupported multi-d excess source");
        },
        c.raw());
    double best = 0.0;
    for (const Point& p : samples) best = std::max(best, distance(p, target));
    return {best, ExcessKind::Finite};
}

double excess(const ValueSet& c, const ValueSet& target) {
    return excessDetail(c, target).value;
}

bool sameSet(const ValueSet& a, const ValueSet& b, double tol) {
    if (a.isEmpty() || b.isEmpty()) return a.isEmpty() == b.isEmpty();
    return excess(a, b) <= tol && excess(b, a) <= tol;
}

// --- set-to-set distance -----------------------------------------------------

double setDistance(const ValueSet& a, const ValueSet& b) {
    if (a.isEmpty() || b.isEmpty()) return infinity();
    const int d = a.dim();
    if (d != b.dim()) throw DimensionError("setDistance: dimension mismatch");
    if (d == 1) {
        double best = infinity();
        for (const Interval1D& ia : asIntervals(a))
            for (const Interval1D& ib : asIntervals(b)) {
                if (ia.lo > ib.hi)
                    best = std::min(best, ia.lo - ib.hi);
                else if (ib.lo > ia.hi)
                    best = std::min(best, ib.lo - ia.hi);
                else
                    return 0.0;
            }
        return best;
    }
    // Multi-d combinations: boxes and point sets.
    const auto* boxA = std::get_if<Box>(&a.raw());
    const auto* boxB = std::get_if<Box>(&b.raw());
    if (boxA && boxB) {
        double sq = 0.0;
        for (int i = 0; i < d; ++i) {
            double gap = 0.0;
            if (boxA->lo[i] > boxB->hi[i]) gap = boxA->lo[i] - boxB->hi[i];
            else if (boxB->lo[i] > boxA->hi[i]) gap = boxB->lo[i] - boxA->hi[i];
            sq += gap * gap;
        }
        return std::sqrt(sq);
    }
    auto pointsOf = [](const ValueSet& s) -> std::optional<std::vector<Point>> {
        if (const auto* p = std::get_if<Singleton>(&s.raw())) return std::vector<Point>{p->p};
        if (const auto* fp = std::get_if<FinitePoints>(&s.raw())) return fp->pts;
        return std::nullopt;
    };
    if (auto pa = pointsOf(a)) {
        double best = infinity();
        for (const Point& p : *pa) best = std::min(best, distance(p, b));
        return best;
    }
    if (auto pb = pointsOf(b)) {
        double best = infinity();
        for (const Point& p : *pb) best = std::min(best, distance(p, a));
        return best;
    }
    throw RepresentationError("setDistance: unsupported variant combination");
}

// --- affine images -----------------------------------------------------------

ValueSet scaleSet(double factor, const ValueSet& s) {
    if (!std::isfinite(factor)) throw PreconditionError("scale factor must be finite");
    return std::visit(
        [&](const auto& v) -> ValueSet {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptySet>) {
                return ValueSet::empty();
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return ValueSet::singleton(factor * v.p);
            } else if constexpr (std::is_same_v<T, Box>) {
                const Point a = factor * v.lo, b = factor * v.hi;
                return ValueSet::box(a.cwiseMin(b), a.cwiseMax(b));
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                std::vector<Point> pts;
                pts.reserve(v.pts.size());
                for (const Point& p : v.pts) pts.push_back(factor * p);
                return ValueSet::finitePoints(std::move(pts));
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                if (factor == 0.0) return ValueSet::singleton(0.0);
                const int dir = factor > 0 ? v.direction : -v.direction;
                return ValueSet::halfLine(factor * v.anchor, dir);
            } else {
                std::vector<Interval1D> parts;
                parts.reserve(v.parts.size());
                for (const Interval1D& iv : v.parts) {
                    const double a = factor * iv.lo, b = factor * iv.hi;
                    parts.push_back({std::min(a, b), std::max(a, b)});
                }
                return ValueSet::fromIntervals(std::move(parts));
            }
        },
        s.raw());
}

ValueSet translateSet(const ValueSet& s, const Point& shift) {
    if (s.isEmpty()) return s;
    requireCompatible(static_cast<int>(shift.size()), s);
    return std::visit(
        [&](const auto& v) -> ValueSet {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return ValueSet::singleton(v.p + shift);
            } else if constexpr (std::is_same_v<T, Box>) {
                return ValueSet::box(v.lo + shift, v.hi + shift);
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                std::vector<Point> pts;
                pts.reserve(v.pts.size());
                for (const Point& p : v.pts) pts.push_back(p + shift);
                return ValueSet::finitePoints(std::move(pts));
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                return ValueSet::halfLine(v.anchor + shift[0], v.direction);
            } else if constexpr (std::is_same_v<T, IntervalUnion1D>) {
                std::vector<Interval1D> parts = v.parts;
                for (Interval1D& iv : parts) {
                    iv.lo += shift[0];
                    iv.hi += shift[0];
                }
                return ValueSet::fromIntervals(std::move(parts));
            } else {
                return ValueSet::empty();
            }
        },
        s.raw());
}

// --- Minkowski sums ----------------------------------------------------------

ValueSet minkowskiSum(const ValueSet& a, const ValueSet& b) {
    if (a.isEmpty() || b.isEmpty()) return ValueSet::empty();
    const int d = a.dim();
    if (d != b.dim()) throw DimensionError("minkowskiSum: dimension mismatch");

    if (d == 1) {
        std::vector<Interval1D> parts;
        for (const Interval1D& ia : asIntervals(a))
            for (const Interval1D& ib : asIntervals(b)) {
                const double lo = ia.lo + ib.lo;  // -inf + finite stays -inf
                const double hi = ia.hi + ib.hi;
                if (std::isnan(lo) || std::isnan(hi))
                    throw RepresentationError("minkowskiSum: opposing half-lines");
                parts.push_back({lo, hi});
            }
        return ValueSet::fromIntervals(std::move(parts));
    }

    if (const auto* sa = std::get_if<Singleton>(&a.raw())) return translateSet(b, sa->p);
    if (const auto* sb = std::get_if<Singleton>(&b.raw())) return translateSet(a, sb->p);
    const auto* boxA = std::get_if<Box>(&a.raw());
    const auto* boxB = std::get_if<Box>(&b.raw());
    if (boxA && boxB) return ValueSet::box(boxA->lo + boxB->lo, boxA->hi + boxB->hi);
    const auto* fpA = std::get_if<FinitePoints>(&a.raw());
    const auto* fpB = std::get_if<FinitePoints>(&b.raw());
    if (fpA && fpB) {
        if (fpA->pts.size() * fpB->pts.size() > 4096)
            throw RepresentationError("minkowskiSum: point cross-sum too large");
        std::vector<Point> pts;
        pts.reserve(fpA->pts.size() * fpB->pts.size());
        for (const Point& p : fpA->pts)
            for (const Point& q : fpB->pts) pts.push_back(p + q);
        return ValueSet::finitePoints(std::move(pts));
    }
    throw RepresentationError("minkowskiSum: result not representable");
}

// --- ball intersection -------------------------------------------------------

ValueSet intersectBall(const ValueSet& s, const Point& center, double radius) {
    if (radius < 0) throw PreconditionError("ball radius must be nonnegative");
    if (s.isEmpty()) return s;
    const int d = s.dim();
    requireCompatible(static_cast<int>(center.size()), s);

    if (const auto* sp = std::get_if<Singleton>(&s.raw()))
        return (sp->p - center).norm() <= radius + kMergeTol ? s : ValueSet::empty();
    if (const auto* fp = std::get_if<FinitePoints>(&s.raw())) {
        std::vector<Point> kept;
        for (const Point& p : fp->pts)
            if ((p - center).norm() <= radius + kMergeTol) kept.push_back(p);
        return ValueSet::finitePoints(std::move(kept));
    }
    if (d == 1) {
        const Interval1D ball{center[0] - radius, center[0] + radius};
        std::vector<Interval1D> parts;
        for (const Interval1D& iv : asIntervals(s)) {
            const Interval1D clipped{std::max(iv.lo, ball.lo), std::min(iv.hi, ball.hi)};
            if (clipped.lo <= clipped.hi) parts.push_back(clipped);
        }
        return ValueSet::fromIntervals(std::move(parts));
    }
    throw RepresentationError("intersectBall: multi-d boxes unsupported");
}

// --- linear functionals / extreme points --------------------------------------

LinearRange innerProductRange(const ValueSet& s, const Point& dir) {
    if (s.isEmpty()) throw EmptySetError("innerProductRange of an empty set");
    requireCompatible(static_cast<int>(dir.size()), s);
    return std::visit(
        [&](const auto& v) -> LinearRange {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                const double t = dir.dot(v.p);
                return {t, t};
            } else if constexpr (std::is_same_v<T, Box>) {
                double lo = 0.0, hi = 0.0;
                for (int i = 0; i < dir.size(); ++i) {
                    if (dir[i] >= 0) {
                        lo += dir[i] * v.lo[i];
                        hi += dir[i] * v.hi[i];
                    } else {
                        lo += dir[i] * v.hi[i];
                        hi += dir[i] * v.lo[i];
                    }
                }
                return {lo, hi};
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                double lo = infinity(), hi = -infinity();
                for (const Point& p : v.pts) {
                    const double t = dir.dot(p);
                    lo = std::min(lo, t);
                    hi = std::max(hi, t);
                }
                return {lo, hi};
            } else if constexpr (std::is_same_v<T, HalfLine1D>) {
                const double c = dir[0];
                if (c == 0.0) return {0.0, 0.0};
                const double at = c * v.anchor;
                const bool up = (c > 0) == (v.direction > 0);
                return up ? LinearRange{at, infinity()} : LinearRange{-infinity(), at};
            } else {
                double lo = infinity(), hi = -infinity();
                for (const Interval1D& iv : v.parts)
                    for (double e : {iv.lo, iv.hi}) {
                        const double t = dir[0] * e;
                        lo = std::min(lo, t);
                        hi = std::max(hi, t);
                    }
                return {lo, hi};
            }
        },
        s.raw());
}

std::vector<Point> extremePoints(const ValueSet& s) {
    if (!s.isBounded()) throw RepresentationError("extremePoints of an unbounded set");
    return std::visit(
        [](const auto& v) -> std::vector<Point> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptySet>) {
                return {};
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return {v.p};
            } else if constexpr (std::is_same_v<T, Box>) {
                return boxVertices(v);
            } else if constexpr (std::is_same_v<T, FinitePoints>) {
                return v.pts;
            } else if constexpr (std::is_same_v<T, IntervalUnion1D>) {
                std::vector<Point> out;
                for (const Interval1D& iv : v.parts) {
                    out.push_back(makePoint({iv.lo}));
                    if (iv.hi != iv.lo) out.push_back(makePoint({iv.hi}));
                }
                return out;
            } else {
                return {};
            }
        },
        s.raw());
}

}  // namespace ppalab
