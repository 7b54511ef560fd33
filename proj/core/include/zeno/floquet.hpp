#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "zeno/model.hpp"

namespace zeno {

/// Largest extended-space dimension (2M+1)(L+1) accepted by default.
inline constexpr Eigen::Index kDefaultFloquetDimensionCap = 12000;

/**
 Spectrum of the Floquet operator H(t) - i d/dt on the spatio-temporal
 basis |j; m>, m in [-M, M]. The matrix is real symmetric for this model,
 so eigenvectors are real. Column n of `eigenvectors` holds f_n with row
 index m_block * (L+1) + basis_index, m_block = m + M.
 */
struct FloquetSpectrum {
    int truncation{0};
    int basis_dim{0}; ///< L + 1
    Eigen::VectorXd quasi_energies; ///< ascending
    Eigen::MatrixXd eigenvectors;

    /// Sub-block of eigenvector rows belonging to temporal mode m.
    auto mode_rows(int m) const {
        return eigenvectors.middleRows(static_cast<Eigen::Index>(m + truncation) * basis_dim, basis_dim);
    }
};

/// Slicing of a total time t = steps * slice.
struct PropagationPlan {
    double slice{0.0};
    long steps{0};

    double total() const noexcept { return slice * static_cast<double>(steps); }
};

/// Default slice length: one modulation period / 32.
double default_slice(const ModelParams& p);

/// Plan covering t_total with the smallest number of slices no longer than
/// `nominal_slice`; slice * steps reproduces t_total.
PropagationPlan make_plan(double t_total, double nominal_slice);

/**
 Floquet matrix of dimension (2M+1)(L+1): diagonal blocks H_static + m nu,
 blocks (m, m +- 1) equal (Omega/2) |e><e|. Throws InfeasibleError above
 `dimension_cap`.
 */
Eigen::MatrixXd build_floquet_matrix(const ModelParams& p, int M,
                                     Eigen::Index dimension_cap = kDefaultFloquetDimensionCap);

FloquetSpectrum floquet_spectrum(const ModelParams& p, int M,
                                 Eigen::Index dimension_cap = kDefaultFloquetDimensionCap);

/// Quasi-energies inside the central zone [c - nu/2, c + nu/2), with c the
/// mean of the static diagonal.
Eigen::VectorXd central_quasi_energies(const FloquetSpectrum& s, const ModelParams& p);

/// Largest distance from a central quasi-energy of `a` to the nearest
/// quasi-energy of `b`.
double quasi_energy_shift(const FloquetSpectrum& a, const FloquetSpectrum& b, const ModelParams& p);

/// Worst mismatch of the replica relation eps + nu over the central zone.
double replica_symmetry_defect(const FloquetSpectrum& s, const ModelParams& p);

struct TruncationCheck {
    int truncation{0};
    double shift{0.0}; ///< central-zone shift under M -> M+2
};

/// Spectrum change under M -> M+2.
TruncationCheck check_truncation(const ModelParams& p, int M,
                                 Eigen::Index dimension_cap = kDefaultFloquetDimensionCap);

/**
 Starts at `start` and doubles M until the central quasi-energies move by
 less than `tolerance` under M -> M+2. Throws ConvergenceError when the
 dimension cap is reached first.
 */
int choose_truncation(const ModelParams& p, double tolerance = 1e-8, int start = 8,
                      Eigen::Index dimension_cap = kDefaultFloquetDimensionCap);

/**
 Time-sliced Floquet propagator. For one slice of length tau ending at t,

   psi(t) = sum_m e^{i m nu t} W_m psi(t - tau),
   W_m = sum_n f_n^(m) e^{-i eps_n tau} f_n^(0)T,

 which is the extended-space evolution exp(-i H_F tau) started in the m = 0
 block and folded back to physical time. W_m depends only on tau, so the
 eigenproblem is solved once; slice propagators are cached per drive phase
 when tau divides the modulation period.
 */
class FloquetPropagator {
public:
    FloquetPropagator(const ModelParams& p, int M, double slice,
                      Eigen::Index dimension_cap = kDefaultFloquetDimensionCap);
    FloquetPropagator(const ModelParams& p, FloquetSpectrum spectrum, double slice);

    const FloquetSpectrum& spectrum() const noexcept { return spectrum_; }
    double slice() const noexcept { return slice_; }

    /// One slice starting at absolute time t_start.
    void step(Eigen::VectorXcd& psi, double t_start);

    /// `steps` slices starting at t_start.
    SingleExcitationState propagate(const SingleExcitationState& s, double t_start, long steps);

private:
    const Eigen::MatrixXcd& slice_operator(double t_end);

    ModelParams params_;
    double slice_;
    FloquetSpectrum spectrum_;
    std::vector<Eigen::MatrixXcd> blocks_; // W_m, index m + M
    bool commensurate_{false};
    long phases_per_period_{0};
    std::map<long, Eigen::MatrixXcd> cache_;
    Eigen::MatrixXcd scratch_;
};

/**
 Evolves state0 from t = 0 to t_total using `plan` (whose total must equal
 t_total) and truncation M. Verifies first that the central quasi-energies
 move by at most `tolerance` under M -> M+2 (ConvergenceError otherwise).
 */
SingleExcitationState floquet_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                        double t_total, const PropagationPlan& plan, int M,
                                        double tolerance = 1e-8);

} // namespace zeno
