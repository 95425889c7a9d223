#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "hdsnr/errors.hpp"
#include "hdsnr/rng.hpp"

namespace hdsnr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Observed data for the linear model y = X beta + eps: an n-vector of
/// responses and an n x d design matrix whose rows are the predictors.
struct RegressionSample {
    Vector y;
    Matrix X;

    Index n() const { return X.rows(); }
    Index d() const { return X.cols(); }

    /// Throws DimensionError on shape mismatch or empty data, Error on
    /// non-finite entries.
    void validate() const;
};

/// Covariance structure of the predictor rows.
///
/// Identity       -- Sigma = I.
/// Known          -- explicit symmetric positive definite d x d matrix.
/// Ar1            -- sigma_ij = alpha^|i-j|, |alpha| < 1.
/// SampleScaled   -- Sigma = factor * Z'Z for an m x d matrix Z, factor > 0.
///
/// Positive definiteness of Known/SampleScaled matrices is checked lazily,
/// when a whitening root or precision application is first requested.
class CovarianceSpec {
public:
    enum class Kind { Identity, Known, Ar1, SampleScaled };

    static CovarianceSpec identity();
    static CovarianceSpec known(Matrix S);
    static CovarianceSpec ar1(double alpha);
    static CovarianceSpec sample_scaled(Matrix Z, double factor);

    Kind kind() const { return kind_; }
    double ar1_alpha() const;
    const Matrix& known_matrix() const;
    const Matrix& scaled_rows() const;
    double scale_factor() const;

    /// True when the spec pins the dimension (Known / SampleScaled).
    bool fixes_dimension() const;

    /// The dimension implied by the spec, or `d` when unconstrained.
    /// Throws DimensionError when the two disagree.
    Index resolve_dimension(Index d) const;

    /// Dense d x d covariance matrix.
    Matrix materialize(Index d) const;

    /// Sigma * v without materializing (O(d) for Identity/Ar1).
    Vector apply(const Vector& v) const;

    /// Sigma^{-1} * v; analytic tridiagonal form for Ar1, dense solve
    /// otherwise.  Throws CovarianceError when Sigma is near-singular.
    Vector apply_precision(const Vector& v) const;

    /// tr(Sigma^k) at dimension d, k in {0,1,2,3}.  Closed form for Ar1
    /// (never materializes Sigma), dense for Known/SampleScaled.
    double trace_power(int k, Index d) const;

private:
    CovarianceSpec() = default;

    Kind kind_ = Kind::Identity;
    double alpha_ = 0.0;
    double factor_ = 1.0;
    std::shared_ptr<const Matrix> matrix_;  // Known: S; SampleScaled: Z
};

/// Symmetric positive definite square root Sigma^{1/2} via eigendecomposition.
Matrix covariance_sqrt(const CovarianceSpec& spec, Index d);

/// Dense covariance matrix for `spec` at dimension d.
Matrix materialize_covariance(const CovarianceSpec& spec, Index d);

/// Symmetric inverse square root R = Sigma^{-1/2}, so that R'R = Sigma^{-1}.
/// Throws CovarianceError when the smallest eigenvalue is at or below
/// 1e-12 times the largest.
Matrix whitening_root(const CovarianceSpec& spec, Index d);

/// Distribution of the design matrix rows.
struct DesignDistribution {
    enum class Kind { GaussianIsotropic, Gaussian, Rademacher };

    Kind kind = Kind::GaussianIsotropic;
    CovarianceSpec covariance = CovarianceSpec::identity();

    static DesignDistribution gaussian_isotropic();
    static DesignDistribution gaussian(CovarianceSpec cov);
    static DesignDistribution rademacher();

    /// Row covariance implied by the distribution (identity for isotropic
    /// Gaussian and Rademacher designs).
    const CovarianceSpec& effective_covariance() const;
};

/// Model parameters: coefficients, residual variance, and the predictor
/// covariance they are coupled to.  The signal strength beta' Sigma beta is
/// derived, never stored.
struct ModelParams {
    Vector beta;
    double sigma2 = 1.0;
    CovarianceSpec covariance = CovarianceSpec::identity();
};

/// Recipe for generating a coefficient vector.
///
/// HalfUniformHalfNormal -- first floor(d/2) coordinates uniform(0,1), the
///   rest standard normal, rescaled so ||beta||^2 equals the target.
/// BumpSparse / BumpDense -- copies of the bump (1,2,3,4,3,2,1) centered at
///   multiples of `spacing`, rescaled so beta' Sigma beta equals the target.
///   Sparse places `bumps` randomly chosen distinct centers; dense places one
///   at every admissible multiple.
/// Explicit -- a fixed vector, passed through unchanged.
class BetaPattern {
public:
    enum class Kind { HalfUniformHalfNormal, BumpSparse, BumpDense, Explicit };

    static BetaPattern half_uniform_half_normal(double target_norm_sq);
    static BetaPattern bump_sparse(int bumps, int spacing, double target_tau1_sq);
    static BetaPattern bump_dense(int spacing, double target_tau1_sq);
    static BetaPattern explicit_vector(Vector values);

    Kind kind() const { return kind_; }
    double target() const { return target_; }
    int bumps() const { return bumps_; }
    int spacing() const { return spacing_; }
    const Vector& values() const { return values_; }

private:
    BetaPattern() = default;

    Kind kind_ = Kind::Explicit;
    double target_ = 1.0;
    int bumps_ = 0;
    int spacing_ = 0;
    Vector values_;
};

/// Draws design matrices for a fixed distribution and shape.  Construction
/// precomputes any matrix square root, so repeated sampling stays cheap.
class DesignSampler {
public:
    DesignSampler(DesignDistribution dist, Index n, Index d);

    Matrix sample(StreamRng rng) const;

    Index n() const { return n_; }
    Index d() const { return d_; }
    const DesignDistribution& distribution() const { return dist_; }

private:
    DesignDistribution dist_;
    Index n_;
    Index d_;
    Matrix root_;  // dense Sigma^{1/2} when needed
};

/// n x d design matrix drawn from `dist`, deterministic in `seed`.
/// Throws CovarianceError for a non-positive-definite Known covariance.
Matrix generate_design(const DesignDistribution& dist, Index n, Index d, std::uint64_t seed);

/// Coefficient vector from `pattern` at dimension d, normalized against
/// `cov` where the pattern requires it; deterministic in `seed`.
Vector generate_beta(const BetaPattern& pattern, Index d, const CovarianceSpec& cov,
                     std::uint64_t seed);

/// One draw of (y, X): X from the sampler's distribution, eps iid N(0, sigma2),
/// with disjoint substreams for X and eps.
RegressionSample simulate_with(const DesignSampler& sampler, const ModelParams& params,
                               std::uint64_t seed);

/// Convenience wrapper building the sampler on the fly.
RegressionSample simulate_sample(const ModelParams& params, const DesignDistribution& dist,
                                 Index n, std::uint64_t seed);

/// Lag-1 cross moment average over rows: the AR(1) coefficient estimator
/// sum_i sum_{j>=2} x_ij x_i(j-1) / (n (d-1)).  Requires d >= 2.
double estimate_ar1_alpha(const Matrix& X);

}  // namespace hdsnr
