// Copyright 2026 The schmidtkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "schmidtkit/schmidt.hpp"
#include "schmidtkit/state_model.hpp"

namespace schmidtkit {

/// A (d, infinity) pure state presented as a stream of coefficients.
/// coeff(alpha, k) is the amplitude on |alpha> tensor |f_k> with alpha in
/// [0, d) and k >= 1. The squared coefficients must be summable; sources
/// that can bound their tail analytically override tail_bound.
class CoefficientSource {
  public:
    virtual ~CoefficientSource() = default;

    virtual int dim() const = 0;

    virtual Complex coeff(int alpha, int k) const = 0;

    /// Upper bound on the squared-coefficient mass beyond the first n slots,
    /// sum_{k > n} sum_alpha |coeff(alpha, k)|^2, when the source can
    /// certify one.
    virtual std::optional<double> tail_bound(int n) const;
};

/// Rows of geometrically decaying coefficients. Row alpha carries weight
/// w_alpha and ratio q_alpha in (0, 1); its m-th term has squared magnitude
/// w_alpha^2 (1 - q_alpha) q_alpha^(m-1), so each row sums to w_alpha^2. The
/// weights are rescaled at construction so the total squared mass is 1.
/// With interleave (the default) row alpha occupies slots k with
/// k - 1 ≡ alpha (mod d); otherwise all rows occupy every slot. Tail bounds
/// are exact.
class GeometricSource : public CoefficientSource {
  public:
    GeometricSource(std::vector<double> weights, std::vector<double> ratios,
                    bool interleave = true);

    int dim() const override;
    Complex coeff(int alpha, int k) const override;
    std::optional<double> tail_bound(int n) const override;

  private:
    int terms_before(int alpha, int n) const;

    std::vector<double> weights_;
    std::vector<double> ratios_;
    bool interleave_;
};

/// Rows with power-law decay m^(-p_alpha), p_alpha > 1/2, normalized so the
/// total squared mass is 1. Same row weighting and interleaving conventions
/// as GeometricSource. The tail bound is the integral estimate
/// sum_{m > c} m^(-2p) <= c^(1-2p) / (2p - 1).
class PowerLawSource : public CoefficientSource {
  public:
    PowerLawSource(std::vector<double> weights, std::vector<double> exponents,
                   bool interleave = true);

    int dim() const override;
    Complex coeff(int alpha, int k) const override;
    std::optional<double> tail_bound(int n) const override;

  private:
    int terms_before(int alpha, int n) const;

    std::vector<double> weights_;
    std::vector<double> exponents_;
    std::vector<double> row_norms_;
    bool interleave_;
};

/// Adapts a finitely truncated PureState to the source interface; slots past
/// the stored range are zero and the tail bounds are exact partial sums.
class FiniteSource : public CoefficientSource {
  public:
    explicit FiniteSource(PureState state);

    int dim() const override;
    Complex coeff(int alpha, int k) const override;
    std::optional<double> tail_bound(int n) const override;

  private:
    PureState state_;
    std::vector<double> suffix_mass_;
};

/// A normalized truncation of a source to its first n slots, together with
/// the norm of the raw coefficient block that was captured.
struct Truncation {
    PureState state;
    double raw_norm = 0.0;
};

Truncation truncate(const CoefficientSource& source, int n);

/// The raw (unnormalized) coefficient block of the first n slots.
Matrix truncation_block(const CoefficientSource& source, int n);

/// Spectral distance between two reduced operators: the largest absolute
/// eigenvalue of their (Hermitian) difference. By Weyl's inequality it
/// bounds the movement of every individual eigenvalue.
double weyl_gap(const Matrix& delta_a, const Matrix& delta_b);

struct ConvergenceReport {
    struct Snapshot {
        int n = 0;
        // Singular values of the raw truncation block, zero-padded to d.
        // Their squares are the eigenvalues of the unnormalized reduced
        // operator, so successive snapshots obey the weyl_gap bound exactly.
        RealVector tau;
    };

    int final_n = 0;
    SchmidtData schmidt;
    // Spectral gap between the last two raw reduced operators (0 when the
    // loop finished on its first truncation).
    double delta_gap = 0.0;
    // Certified bound on the remaining eigenvalue movement: the source tail
    // bound at final_n when available, otherwise the last observed gap.
    double weyl_bound = 0.0;
    // True when a tail bound exists and every raw squared coefficient is
    // separated from the rank cutoff by more than the bound, so the reported
    // rank cannot change under further refinement.
    bool rank_certified = false;
    std::vector<Snapshot> iterations;
};

/// Raised when the doubling schedule hits n_max without meeting the
/// tolerance. Carries the partial report for inspection.
class NoConvergenceError : public Error {
  public:
    explicit NoConvergenceError(ConvergenceReport partial);
    const ConvergenceReport& partial() const { return partial_; }

  private:
    ConvergenceReport partial_;
};

/// Runs the doubling schedule n0, 2 n0, 4 n0, ... (clamped to n_max) until
/// the truncation error certificate drops below tol: the source tail bound
/// when one is available, otherwise the spectral gap between successive
/// reduced operators. Returns the Schmidt data of the final normalized
/// truncation along with the per-step snapshots.
ConvergenceReport converge_schmidt(const CoefficientSource& source, double tol, int n0,
                                   int n_max, double rank_tol = kDefaultRankTol);

}  // namespace schmidtkit
