#include "ppalab/operators.hpp"

#include <algorithm>
#include <cmath>

namespace ppalab {

namespace {

constexpr double kGraphEps = 1e-12;
constexpr double kMonotoneSlack = 1e-9;

Interval1D signInterval(double x) {
    if (x > 0) return {1.0, 1.0};
    if (x < 0) return {-1.0, -1.0};
    return {-1.0, 1.0};
}

void requireMapDim(const SetValuedMap& map, const Point& x) {
    if (static_cast<int>(x.size()) != map.dim())
        throw DimensionError("argument dimension does not match the operator");
}

bool symmetricPsd(const Eigen::MatrixXd& m, double slack = 1e-9) {
    if (m.rows() != m.cols()) return false;
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    return es.eigenvalues().minCoeff() >= -slack;
}

std::vector<GraphPiece> reflectGraph(const std::vector<GraphPiece>& pieces) {
    std::vector<GraphPiece> out;
    out.reserve(pieces.size());
    for (const GraphPiece& piece : pieces) {
        if (const auto* s = std::get_if<GraphSegment>(&piece)) {
            out.push_back(GraphSegment{{s->a.y(), s->a.x()}, {s->b.y(), s->b.x()}});
        } else if (const auto* v = std::get_if<GraphVRay>(&piece)) {
            out.push_back(GraphHRay{v->x, v->fromY, v->dir});
        } else {
            const auto& h = std::get<GraphHRay>(piece);
            out.push_back(GraphVRay{h.y, h.fromX, h.dir});
        }
    }
    return out;
}

std::vector<Interval1D> graphSliceAt(const std::vector<GraphPiece>& pieces, double x) {
    std::vector<Interval1D> parts;
    for (const GraphPiece& piece : pieces) {
        if (const auto* s = std::get_if<GraphSegment>(&piece)) {
            const double xlo = std::min(s->a.x(), s->b.x());
            const double xhi = std::max(s->a.x(), s->b.x());
            if (x < xlo - kGraphEps || x > xhi + kGraphEps) continue;
            if (xhi - xlo <= kGraphEps) {
                parts.push_back({std::min(s->a.y(), s->b.y()), std::max(s->a.y(), s->b.y())});
            } else {
                const double t = (x - s->a.x()) / (s->b.x() - s->a.x());
                const double y = s->a.y() + t * (s->b.y() - s->a.y());
                parts.push_back({y, y});
            }
        } else if (const auto* v = std::get_if<GraphVRay>(&piece)) {
            if (std::abs(x - v->x) > kGraphEps) continue;
            if (v->dir > 0)
                parts.push_back({v->fromY, infinity()});
            else
                parts.push_back({-infinity(), v->fromY});
        } else {
            const auto& h = std::get<GraphHRay>(piece);
            const bool inRange = h.dir > 0 ? x >= h.fromX - kGraphEps : x <= h.fromX + kGraphEps;
            if (inRange) parts.push_back({h.y, h.y});
        }
    }
    return parts;
}

ValueSet evaluateInverseOf(const SetValuedMap& inner, const Point& y);

ValueSet evaluateModel(const SetValuedMap& map, const Point& x) {
    return std::visit(
        [&](const auto& m) -> ValueSet {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ZeroModel>) {
                return ValueSet::singleton(Point(Point::Zero(x.size())));
            } else if constexpr (std::is_same_v<T, IdentityModel>) {
                return ValueSet::singleton(x);
            } else if constexpr (std::is_same_v<T, LinearModel>) {
                return ValueSet::singleton(Point(m.m * x));
            } else if constexpr (std::is_same_v<T, AffineModel>) {
                return ValueSet::singleton(Point(m.m * x + m.c));
            } else if constexpr (std::is_same_v<T, SignModel> ||
                                 std::is_same_v<T, AbsSumSubgradModel>) {
                const int d = static_cast<int>(x.size());
                if (d == 1) {
                    const Interval1D iv = signInterval(x[0]);
                    return ValueSet::fromIntervals({iv});
                }
                Point lo(d), hi(d);
                for (int i = 0; i < d; ++i) {
                    const Interval1D iv = signInterval(x[i]);
                    lo[i] = iv.lo;
                    hi[i] = iv.hi;
                }
                return ValueSet::box(lo, hi);
            } else if constexpr (std::is_same_v<T, PowerGradientModel>) {
                Point y(x.size());
                for (int i = 0; i < x.size(); ++i) y[i] = std::pow(x[i], m.power);
                return ValueSet::singleton(std::move(y));
            } else if constexpr (std::is_same_v<T, Graph1DModel>) {
                return ValueSet::fromIntervals(graphSliceAt(m.pieces, x[0]));
            } else if constexpr (std::is_same_v<T, CrossSignTrigModel>) {
                const Interval1D s0 = signInterval(x[1]);
                const Interval1D s1 = signInterval(x[0]);
                const double t0 = 3.0 * x[1] + std::sin(std::abs(x[0]));
                const double t1 = 3.0 * x[0] + std::cos(std::abs(x[1]));
                return ValueSet::box(makePoint({s0.lo + t0, s1.lo + t1}),
                                     makePoint({s0.hi + t0, s1.hi + t1}));
            } else if constexpr (std::is_same_v<T, SumModel>) {
                ValueSet acc = imageOrEmpty(m.members.front(), x);
                for (std::size_t i = 1; i < m.members.size(); ++i) {
                    if (acc.isEmpty()) break;
                    acc = minkowskiSum(acc, imageOrEmpty(m.members[i], x));
                }
                return acc;
            } else if constexpr (std::is_same_v<T, InverseModel>) {
                return evaluateInverseOf(*m.inner, x);
            } else {
                const auto& sm = static_cast<const ScaledModel&>(m);
                return scaleSet(sm.factor, imageOrEmpty(*sm.inner, x));
            }
        },
        map.model());
}

ValueSet evaluateInverseOf(const SetValuedMap& inner, const Point& y) {
    return std::visit(
        [&](const auto& m) -> ValueSet {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ZeroModel>) {
                if (y.norm() <= kGraphEps)
                    throw RepresentationError("inverse of the zero map at 0 is the whole space");
                return ValueSet::empty();
            } else if constexpr (std::is_same_v<T, IdentityModel>) {
                return ValueSet::singleton(y);
            } else if constexpr (std::is_same_v<T, LinearModel> ||
                                 std::is_same_v<T, AffineModel>) {
                Eigen::MatrixXd mat;
                Point rhs = y;
                if constexpr (std::is_same_v<T, AffineModel>) {
                    mat = m.m;
                    rhs -= m.c;
                } else {
                    mat = m.m;
                }
                if (mat.rows() != mat.cols())
                    throw RepresentationError("inverse of a rectangular linear map");
                Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
                if (!lu.isInvertible())
                    throw RepresentationError("inverse of a singular linear map");
                return ValueSet::singleton(Point(lu.solve(rhs)));
            } else if constexpr (std::is_same_v<T, SignModel> ||
                                 std::is_same_v<T, AbsSumSubgradModel>) {
                const int d = static_cast<int>(y.size());
                if (d == 1) {
                    std::vector<Interval1D> parts;
                    if (std::abs(y[0] - 1.0) <= kGraphEps)
                        parts.push_back({0.0, infinity()});
                    else if (std::abs(y[0] + 1.0) <= kGraphEps)
                        parts.push_back({-infinity(), 0.0});
                    else if (std::abs(y[0]) < 1.0)
                        parts.push_back({0.0, 0.0});
                    return ValueSet::fromIntervals(std::move(parts));
                }
                for (int i = 0; i < d; ++i) {
                    if (std::abs(std::abs(y[i]) - 1.0) <= kGraphEps)
                        throw RepresentationError("sign preimage has an unbounded factor");
                    if (std::abs(y[i]) > 1.0) return ValueSet::empty();
                }
                return ValueSet::singleton(Point(Point::Zero(d)));
            } else if constexpr (std::is_same_v<T, PowerGradientModel>) {
                Point x(y.size());
                for (int i = 0; i < y.size(); ++i)
                    x[i] = std::copysign(std::pow(std::abs(y[i]), 1.0 / m.power), y[i]);
                return ValueSet::singleton(std::move(x));
            } else if constexpr (std::is_same_v<T, Graph1DModel>) {
                return ValueSet::fromIntervals(graphSliceAt(reflectGraph(m.pieces), y[0]));
            } else if constexpr (std::is_same_v<T, InverseModel>) {
                return evaluateModel(*m.inner, y);
            } else if constexpr (std::is_same_v<T, ScaledModel>) {
                if (m.factor == 0.0)
                    throw RepresentationError("inverse of a zero-scaled map");
                return evaluateInverseOf(*m.inner, Point(y / m.factor));
            } else {
                throw RepresentationError("inverse evaluation unsupported for this model");
            }
        },
        inner.model());
}

}  // namespace

// --- construction -----------------------------------------------------------

SetValuedMap SetValuedMap::zero(int dim) { return {Model(ZeroModel{}), dim}; }

SetValuedMap SetValuedMap::identity(int dim) { return {Model(IdentityModel{}), dim}; }

SetValuedMap SetValuedMap::linear(Eigen::MatrixXd m) {
    if (m.size() == 0) throw PreconditionError("linear model needs a nonempty matrix");
    const int dim = static_cast<int>(m.cols());
    return {Model(LinearModel{std::move(m)}), dim};
}

SetValuedMap SetValuedMap::affine(Eigen::MatrixXd m, Eigen::VectorXd c) {
    if (m.rows() != c.size()) throw DimensionError("affine offset does not match the matrix");
    const int dim = static_cast<int>(m.cols());
    return {Model(AffineModel{std::move(m), std::move(c)}), dim};
}

SetValuedMap SetValuedMap::sign(int dim) { return {Model(SignModel{}), dim}; }

SetValuedMap SetValuedMap::absSumSubgradient(int dim) {
    return {Model(AbsSumSubgradModel{}), dim};
}

SetValuedMap SetValuedMap::powerGradient(int power, int dim) {
    if (power < 1 || power > 9 || power % 2 == 0)
        throw PreconditionError("power gradient requires an odd power in [1, 9]");
    return {Model(PowerGradientModel{power}), dim};
}

SetValuedMap SetValuedMap::graph1D(std::vector<GraphPiece> pieces) {
    if (pieces.empty()) throw PreconditionError("graph model needs at least one piece");
    return {Model(Graph1DModel{std::move(pieces)}), 1};
}

SetValuedMap SetValuedMap::crossSignTrig() { return {Model(CrossSignTrigModel{}), 2}; }

SetValuedMap SetValuedMap::sum(std::vector<SetValuedMap> members) {
    if (members.empty()) throw PreconditionError("sum model needs members");
    const int dim = members.front().dim();
    for (const SetValuedMap& m : members)
        if (m.dim() != dim) throw DimensionError("sum members differ in dimension");
    return {Model(SumModel{std::move(members)}), dim};
}

SetValuedMap SetValuedMap::inverseOf(SetValuedMap inner) {
    const int dim = inner.dim();
    return {Model(InverseModel{std::make_shared<const SetValuedMap>(std::move(inner))}), dim};
}

SetValuedMap SetValuedMap::scaled(double factor, SetValuedMap inner) {
    if (!std::isfinite(factor)) throw PreconditionError("scale factor must be finite");
    const int dim = inner.dim();
    return {Model(ScaledModel{factor, std::make_shared<const SetValuedMap>(std::move(inner))}),
            dim};
}

// --- evaluation ---------------------------------------------------------------

ValueSet evaluate(const SetValuedMap& map, const Point& x) {
    requireMapDim(map, x);
    ValueSet image = evaluateModel(map, x);
    if (image.isEmpty()) throw DomainError("point outside the operator's domain");
    return image;
}

ValueSet imageOrEmpty(const SetValuedMap& map, const Point& x) {
    requireMapDim(map, x);
    try {
        return evaluateModel(map, x);
    } catch (const DomainError&) {
        return ValueSet::empty();
    }
}

// --- resolvent ----------------------------------------------------------------

namespace {

double softThreshold(double x, double gamma) {
    return std::copysign(std::max(std::abs(x) - gamma, 0.0), x);
}

// Monotone root of z + gamma z^p = t by safeguarded bisection.
double powerResolvent1D(double t, double gamma, int p) {
    if (t == 0.0) return 0.0;
    auto g = [&](double z) { return z + gamma * std::pow(z, p) - t; };
    double lo = std::min(0.0, t), hi = std::max(0.0, t);
    double flo = g(lo);
    if (flo > 0 || g(hi) < 0) throw Error("power resolvent: bracket lost");
    for (int it = 0; it < 200 && hi - lo > kResolventTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Intersection of the graph with the line z + gamma*y = x; a maximal monotone
// graph meets it exactly once.
double graphResolvent(const std::vector<GraphPiece>& pieces, double gamma, double x) {
    std::vector<double> roots;
    auto addRoot = [&](double z) {
        for (double r : roots)
            if (std::abs(r - z) <= 1e-9) return;
        roots.push_back(z);
    };
    for (const GraphPiece& piece : pieces) {
        if (const auto* s = std::get_if<GraphSegment>(&piece)) {
            const double dx = s->b.x() - s->a.x(), dy = s->b.y() - s->a.y();
            const double coeff = dx + gamma * dy;
            const double rhs = x - s->a.x() - gamma * s->a.y();
            if (std::abs(coeff) <= kGraphEps) {
                if (std::abs(rhs) <= 1e-9) addRoot(s->a.x());
                continue;
            }
            const double t = rhs / coeff;
            if (t >= -kGraphEps && t <= 1 + kGraphEps)
                addRoot(s->a.x() + std::clamp(t, 0.0, 1.0) * dx);
        } else if (const auto* v = std::get_if<GraphVRay>(&piece)) {
            const double y = (x - v->x) / gamma;
            if ((y - v->fromY) * v->dir >= -1e-12) addRoot(v->x);
        } else {
            const auto& h = std::get<GraphHRay>(piece);
            const double z = x - gamma * h.y;
            if ((z - h.fromX) * h.dir >= -1e-12) addRoot(z);
        }
    }
    if (roots.empty())
        throw MonotonicityError("resolvent line misses the graph (model not maximal)");
    if (roots.size() > 1)
        throw MonotonicityError("resolvent line meets the graph twice (model not monotone)");
    return roots.front();
}

}  // namespace

Point resolvent(const SetValuedMap& map, double gamma, const Point& x) {
    if (!(gamma > 0)) throw PreconditionError("resolvent requires gamma > 0");
    requireMapDim(map, x);
    return std::visit(
        [&](const auto& m) -> Point {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ZeroModel>) {
                return x;
            } else if constexpr (std::is_same_v<T, IdentityModel>) {
                return x / (1.0 + gamma);
            } else if constexpr (std::is_same_v<T, LinearModel> ||
                                 std::is_same_v<T, AffineModel>) {
                const Eigen::MatrixXd* mat;
                Point rhs = x;
                if constexpr (std::is_same_v<T, AffineModel>) {
                    mat = &m.m;
                    rhs -= gamma * m.c;
                } else {
                    mat = &m.m;
                }
                if (!symmetricPsd(*mat))
                    throw MonotonicityError("linear model is not monotone");
                const Eigen::MatrixXd sys =
                    Eigen::MatrixXd::Identity(mat->rows(), mat->cols()) + gamma * (*mat);
                return sys.partialPivLu().solve(rhs);
            } else if constexpr (std::is_same_v<T, SignModel> ||
                                 std::is_same_v<T, AbsSumSubgradModel>) {
                Point z(x.size());
                for (int i = 0; i < x.size(); ++i) z[i] = softThreshold(x[i], gamma);
                return z;
            } else if constexpr (std::is_same_v<T, PowerGradientModel>) {
                Point z(x.size());
                for (int i = 0; i < x.size(); ++i)
                    z[i] = m.power == 1 ? x[i] / (1.0 + gamma)
                                        : powerResolvent1D(x[i], gamma, m.power);
                return z;
            } else if constexpr (std::is_same_v<T, Graph1DModel>) {
                return makePoint({graphResolvent(m.pieces, gamma, x[0])});
            } else if constexpr (std::is_same_v<T, InverseModel>) {
                // Moreau: J_{gamma A^{-1}}(x) = x - gamma J_{A/gamma}(x/gamma)
                return x - gamma * resolvent(*m.inner, 1.0 / gamma, Point(x / gamma));
            } else if constexpr (std::is_same_v<T, ScaledModel>) {
                if (m.factor < 0)
                    throw MonotonicityError("negatively scaled model is not monotone");
                if (m.factor == 0.0) return x;
                return resolvent(*m.inner, gamma * m.factor, x);
            } else {
                throw MonotonicityError("resolvent unsupported for this model");
            }
        },
        map.model());
}

// --- monotonicity diagnostics ---------------------------------------------------

MonotoneReport checkMonotone(const SetValuedMap& map, const std::vector<PointPair>& samples) {
    MonotoneReport report;
    report.worstMargin = infinity();
    int usable = 0;
    for (const auto& [x, y] : samples) {
        const Point delta = x - y;
        if (delta.norm() < 1e-15) continue;
        const ValueSet ax = imageOrEmpty(map, x);
        const ValueSet ay = imageOrEmpty(map, y);
        if (ax.isEmpty() || ay.isEmpty()) continue;
        ++usable;
        const LinearRange rx = innerProductRange(ax, delta);
        const LinearRange ry = innerProductRange(ay, delta);
        const double margin = rx.lo - ry.hi;  // -inf when a half-line works against us
        if (margin < report.worstMargin) {
            report.worstMargin = margin;
            report.witness = PointPair{x, y};
        }
    }
    if (usable == 0) throw PreconditionError("no usable sample pairs");
    report.verdict =
        report.worstMargin >= -kMonotoneSlack ? SampleVerdict::Holds : SampleVerdict::Violated;
    return report;
}

PairMonotoneReport checkPairMonotone(const OperatorPair& pair,
                                     const std::vector<PointPair>& samples) {
    if (pair.first.dim() != pair.second.dim())
        throw DimensionError("pair members differ in dimension");
    PairMonotoneReport report;
    report.margin = infinity();
    int usable = 0;
    bool undecidable = false;
    for (const auto& [x, y] : samples) {
        const double nsq = (x - y).squaredNorm();
        if (nsq < 1e-24) continue;  // coincident pairs are skipped
        const ValueSet bx = imageOrEmpty(pair.first, x), by = imageOrEmpty(pair.first, y);
        const ValueSet cx = imageOrEmpty(pair.second, x), cy = imageOrEmpty(pair.second, y);
        if (bx.isEmpty() || by.isEmpty() || cx.isEmpty() || cy.isEmpty()) continue;
        if (!bx.isBounded() || !by.isBounded() || !cx.isBounded() || !cy.isBounded()) {
            undecidable = true;
            continue;
        }
        ++usable;
        for (const Point& pbx : extremePoints(bx))
            for (const Point& pby : extremePoints(by))
                for (const Point& pcx : extremePoints(cx))
                    for (const Point& pcy : extremePoints(cy)) {
                        const double v = (pbx - pby).dot(pcx - pcy) / nsq;
                        if (v < report.margin) {
                            report.margin = v;
                            report.witness = PointPair{x, y};
                        }
                    }
    }
    if (usable == 0) {
        if (undecidable) {
            report.verdict = SampleVerdict::Undecidable;
            return report;
        }
        throw PreconditionError("all sample pairs coincident or outside the domain");
    }
    report.verdict =
        report.margin >= -kMonotoneSlack ? SampleVerdict::Holds : SampleVerdict::Violated;
    return report;
}

double checkCoercive(const SetValuedMap& map, const std::vector<PointPair>& samples) {
    double best = infinity();
    int usable = 0;
    for (const auto& [x, y] : samples) {
        const double n = (x - y).norm();
        if (n < 1e-15) continue;
        const ValueSet ax = imageOrEmpty(map, x);
        const ValueSet ay = imageOrEmpty(map, y);
        if (ax.isEmpty() || ay.isEmpty()) continue;
        ++usable;
        best = std::min(best, setDistance(ax, ay) / n);
    }
    if (usable == 0) throw PreconditionError("no usable sample pairs");
    return best;
}

// --- matrix certificates ---------------------------------------------------------

MatrixCertificate matrixRLipschitz(const Eigen::MatrixXd& a) {
    if (a.size() == 0) throw PreconditionError("certificate needs a nonempty matrix");
    const int n = static_cast<int>(a.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();

    MatrixCertificate cert;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] * sv[i] > kRankCutoff) ++rank;
    for (int i = rank; i < sv.size(); ++i) cert.droppedEigenvalues.push_back(sv[i] * sv[i]);
    for (int i = static_cast<int>(sv.size()); i < n; ++i) cert.droppedEigenvalues.push_back(0.0);

    const Eigen::MatrixXd v = svd.matrixV();
    cert.rangeBasis = v.leftCols(rank);
    cert.kernelBasis = v.rightCols(n - rank);
    if (rank == 0) {
        // Effectively the zero matrix: dom A^{-1} = {0}, modulus identically 0.
        cert.lipschitzL = 0.0;
        cert.smallestPositiveEig = 0.0;
        cert.transposeNorm = 0.0;
        return cert;
    }
    cert.transposeNorm = sv[0];
    cert.smallestPositiveEig = sv[rank - 1] * sv[rank - 1];
    cert.lipschitzL = cert.transposeNorm / cert.smallestPositiveEig;
    return cert;
}

Point matchedPreimage(const Eigen::MatrixXd& a, const MatrixCertificate& cert, const Point& x,
                      const Point& ybar, const Point& xprime) {
    if (x.size() != a.cols() || xprime.size() != a.cols() || ybar.size() != a.rows())
        throw DimensionError("matchedPreimage: dimension mismatch");
    const double tol = 1e-9 * std::max(1.0, ybar.norm());
    if ((a * xprime - ybar).norm() > tol)
        throw PreconditionError("matchedPreimage: xprime is not a preimage of ybar");
    Point out = Point::Zero(x.size());
    if (cert.rangeBasis.cols() > 0)
        out += cert.rangeBasis * (cert.rangeBasis.transpose() * xprime);
    if (cert.kernelBasis.cols() > 0)
        out += cert.kernelBasis * (cert.kernelBasis.transpose() * x);
    return out;
}

// --- convex function models -------------------------------------------------------

ConvexFunctionModel ConvexFunctionModel::quadratic(Eigen::MatrixXd q, Eigen::VectorXd b) {
    if (q.rows() != q.cols() || q.rows() != b.size())
        throw DimensionError("quadratic model: shape mismatch");
    if ((q - q.transpose()).norm() > 1e-9 * std::max(1.0, q.norm()))
        throw PreconditionError("quadratic model requires a symmetric matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw PreconditionError("quadratic model requires a PSD matrix");
    const Point xstar = q.completeOrthogonalDecomposition().solve(Point(-b));
    if ((q * xstar + b).norm() > 1e-8 * (1.0 + b.norm()))
        throw PreconditionError("quadratic model is unbounded below");
    const double inf = 0.5 * xstar.dot(q * xstar) + b.dot(xstar);
    const int d = static_cast<int>(q.rows());
    return {Kind(QuadraticFn{std::move(q), std::move(b)}), d, inf};
}

ConvexFunctionModel ConvexFunctionModel::absSum(int dim) {
    return {Kind(AbsSumFn{dim}), dim, 0.0};
}

ConvexFunctionModel ConvexFunctionModel::powerEven(int power, int dim) {
    if (power < 2 || power > 10 || power % 2 != 0)
        throw PreconditionError("powerEven requires an even exponent in [2, 10]");
    return {Kind(PowerEvenFn{power, dim}), dim, 0.0};
}

ConvexFunctionModel ConvexFunctionModel::leastSquares(Eigen::MatrixXd a, Eigen::VectorXd b) {
    if (a.rows() != b.size()) throw DimensionError("least squares: shape mismatch");
    const Point xstar = a.completeOrthogonalDecomposition().solve(b);
    const double inf = 0.5 * (a * xstar - b).squaredNorm();
    const int d = static_cast<int>(a.cols());
    return {Kind(LeastSquaresFn{std::move(a), std::move(b)}), d, inf};
}

double ConvexFunctionModel::value(const Point& x) const {
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, QuadraticFn>) {
                return 0.5 * x.dot(k.q * x) + k.b.dot(x);
            } else if constexpr (std::is_same_v<T, AbsSumFn>) {
                return x.cwiseAbs().sum();
            } else if constexpr (std::is_same_v<T, PowerEvenFn>) {
                double s = 0.0;
                for (int i = 0; i < x.size(); ++i) s += std::pow(x[i], k.power);
                return s / k.power;
            } else {
                return 0.5 * (k.a * x - k.b).squaredNorm();
            }
        },
        kind_);
}

SetValuedMap ConvexFunctionModel::subdifferential() const {
    return std::visit(
        [&](const auto& k) -> SetValuedMap {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, QuadraticFn>) {
                if (k.b.isZero(0)) return SetValuedMap::linear(k.q);
                return SetValuedMap::affine(k.q, k.b);
            } else if constexpr (std::is_same_v<T, AbsSumFn>) {
                return SetValuedMap::absSumSubgradient(k.dim);
            } else if constexpr (std::is_same_v<T, PowerEvenFn>) {
                return SetValuedMap::powerGradient(k.power - 1, k.dim);
            } else {
                return SetValuedMap::affine(Eigen::MatrixXd(k.a.transpose() * k.a),
                                            Eigen::VectorXd(-k.a.transpose() * k.b));
            }
        },
        kind_);
}

}  // namespace ppalab
