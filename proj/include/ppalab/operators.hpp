#pragma once

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ppalab/setgeom.hpp"

namespace ppalab {

class SetValuedMap;

// ---------------------------------------------------------------------------
// Graph pieces for hand-built 1D operators
// ---------------------------------------------------------------------------

/// Closed segment between two plane points (any orientation, may be vertical).
struct GraphSegment {
    Eigen::Vector2d a, b;
};

/// Vertical ray {x} x [fromY, +inf) for dir = +1, {x} x (-inf, fromY] for -1.
struct GraphVRay {
    double x = 0.0, fromY = 0.0;
    int dir = +1;
};

/// Horizontal ray [fromX, +inf) x {y} for dir = +1, (-inf, fromX] x {y} for -1.
struct GraphHRay {
    double y = 0.0, fromX = 0.0;
    int dir = +1;
};

using GraphPiece = std::variant<GraphSegment, GraphVRay, GraphHRay>;

// ---------------------------------------------------------------------------
// Operator models
// ---------------------------------------------------------------------------

struct ZeroModel {};
struct IdentityModel {};
struct LinearModel {
    Eigen::MatrixXd m;
};
struct AffineModel {
    Eigen::MatrixXd m;
    Eigen::VectorXd c;
};
/// Componentwise maximal monotone sign: {1} if x_i > 0, [-1,1] if x_i = 0,
/// {-1} if x_i < 0.
struct SignModel {};
/// Subdifferential of x -> sum_i |x_i|; images coincide with SignModel.
struct AbsSumSubgradModel {};
/// x -> {x_i^p} componentwise, p odd in [1, 9].
struct PowerGradientModel {
    int power = 1;
};
struct Graph1DModel {
    std::vector<GraphPiece> pieces;
};
/// R^2 map (Sign(x2)+3x2+sin|x1|, Sign(x1)+3x1+cos|x2|); individually
/// non-monotone, forms a 6-strongly monotone pair with (3x2, 3x1).
struct CrossSignTrigModel {};
struct SumModel {
    std::vector<SetValuedMap> members;
};
struct InverseModel {
    std::shared_ptr<const SetValuedMap> inner;
};
struct ScaledModel {
    double factor = 1.0;
    std::shared_ptr<const SetValuedMap> inner;
};

class SetValuedMap {
  public:
    using Model = std::variant<ZeroModel, IdentityModel, LinearModel, AffineModel, SignModel,
                               AbsSumSubgradModel, PowerGradientModel, Graph1DModel,
                               CrossSignTrigModel, SumModel, InverseModel, ScaledModel>;

    static SetValuedMap zero(int dim);
    static SetValuedMap identity(int dim);
    static SetValuedMap linear(Eigen::MatrixXd m);
    static SetValuedMap affine(Eigen::MatrixXd m, Eigen::VectorXd c);
    static SetValuedMap sign(int dim);
    static SetValuedMap absSumSubgradient(int dim);
    static SetValuedMap powerGradient(int power, int dim);
    static SetValuedMap graph1D(std::vector<GraphPiece> pieces);
    static SetValuedMap crossSignTrig();
    static SetValuedMap sum(std::vector<SetValuedMap> members);
    static SetValuedMap inverseOf(SetValuedMap inner);
    static SetValuedMap scaled(double factor, SetValuedMap inner);

    int dim() const { return dim_; }
    const Model& model() const { return model_; }

  private:
    SetValuedMap(Model model, int dim) : model_(std::move(model)), dim_(dim) {}
    Model model_;
    int dim_ = 1;
};

// ---------------------------------------------------------------------------
// Evaluation and resolvents
// ---------------------------------------------------------------------------

/// The exact image A(x). Throws DomainError when the image is empty.
ValueSet evaluate(const SetValuedMap& map, const Point& x);

/// Like evaluate, but an empty image comes back as the empty ValueSet.
ValueSet imageOrEmpty(const SetValuedMap& map, const Point& x);

/// The unique z with x in z + gamma*A(z), for the maximally monotone models.
/// Closed forms where available; PowerGradient uses safeguarded bisection to
/// 1e-12; graph models intersect the graph with the line z + gamma*y = x.
Point resolvent(const SetValuedMap& map, double gamma, const Point& x);

inline constexpr double kResolventTol = 1e-12;

// ---------------------------------------------------------------------------
// Monotonicity / coercivity diagnostics
// ---------------------------------------------------------------------------

using PointPair = std::pair<Point, Point>;

enum class SampleVerdict { Holds, Violated, Undecidable };

struct MonotoneReport {
    SampleVerdict verdict = SampleVerdict::Holds;
    double worstMargin = 0.0;  // min over samples/selections of <xbar-ybar, x-y>
    std::optional<PointPair> witness;
};

MonotoneReport checkMonotone(const SetValuedMap& map, const std::vector<PointPair>& samples);

struct OperatorPair {
    SetValuedMap first, second;
    double strongModulus = 0.0;  // gamma of strong pair monotonicity, 0 = plain
};

struct PairMonotoneReport {
    SampleVerdict verdict = SampleVerdict::Holds;
    double margin = 0.0;  // min of <B(x)-B(y), C(x)-C(y)> / ||x-y||^2
    std::optional<PointPair> witness;
};

PairMonotoneReport checkPairMonotone(const OperatorPair& pair,
                                     const std::vector<PointPair>& samples);

/// min over samples/selections of ||A(x)-A(y)|| / ||x-y|| (coercivity gamma).
double checkCoercive(const SetValuedMap& map, const std::vector<PointPair>& samples);

// ---------------------------------------------------------------------------
// Matrix inverse certificates
// ---------------------------------------------------------------------------

struct MatrixCertificate {
    double lipschitzL = 0.0;         // ||A^T|| / k
    double smallestPositiveEig = 0.0;  // k, smallest eigenvalue of A^T A above cutoff
    double transposeNorm = 0.0;      // spectral norm of A^T
    Eigen::MatrixXd rangeBasis;      // orthonormal basis of Im(A^T A), n x r
    Eigen::MatrixXd kernelBasis;     // orthonormal basis of Ker(A), n x (n-r)
    std::vector<double> droppedEigenvalues;  // rank decisions below the cutoff
};

inline constexpr double kRankCutoff = 1e-10;  // on eigenvalues of A^T A

MatrixCertificate matrixRLipschitz(const Eigen::MatrixXd& a);

/// The preimage xbar = Proj_Im(xprime) + Proj_Ker(x); satisfies A xbar = ybar
/// and ||x - xbar|| <= L ||A x - ybar||. Requires A xprime = ybar (1e-9).
Point matchedPreimage(const Eigen::MatrixXd& a, const MatrixCertificate& cert, const Point& x,
                      const Point& ybar, const Point& xprime);

// ---------------------------------------------------------------------------
// Convex function models (drive PPA runs through their subdifferentials)
// ---------------------------------------------------------------------------

struct QuadraticFn {
    Eigen::MatrixXd q;  // symmetric PSD
    Eigen::VectorXd b;
};
struct AbsSumFn {
    int dim = 1;
};
struct PowerEvenFn {
    int power = 2;  // even exponent >= 2; f = sum_i x_i^power / power
    int dim = 1;
};
struct LeastSquaresFn {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
};

class ConvexFunctionModel {
  public:
    using Kind = std::variant<QuadraticFn, AbsSumFn, PowerEvenFn, LeastSquaresFn>;

    static ConvexFunctionModel quadratic(Eigen::MatrixXd q, Eigen::VectorXd b);
    static ConvexFunctionModel absSum(int dim);
    static ConvexFunctionModel powerEven(int power, int dim);
    static ConvexFunctionModel leastSquares(Eigen::MatrixXd a, Eigen::VectorXd b);

    double value(const Point& x) const;
    double infValue() const { return infValue_; }
    SetValuedMap subdifferential() const;
    int dim() const { return dim_; }
    const Kind& kind() const { return kind_; }

  private:
    ConvexFunctionModel(Kind kind, int dim, double infValue)
        : kind_(std::move(kind)), dim_(dim), infValue_(infValue) {}
    Kind kind_;
    int dim_;
    double infValue_;
};

}  // namespace ppalab
