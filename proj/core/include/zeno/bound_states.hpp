#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zeno/model.hpp"

namespace zeno {

/// upper: E above the band (staggered profile); lower: E below the band.
enum class Branch { upper, lower };

Branch parse_branch(std::string_view name);
std::string_view to_string(Branch b);

/// |g J_0(Omega/nu)| at or below this fraction of max(g, 1) counts as decoupled.
inline constexpr double kDelocalizationThreshold = 1e-9;

/**
 Photon bound state localized at the TLS,

   U(j) = C s^j exp(-kappa |j|),  s = -1 (upper) or +1 (lower),

 with energy E = Delta +- 2 xi cosh kappa measured from omega_a. C is fixed
 by normalizing the photon profile on the infinite lattice, C^2 = tanh kappa.
 */
struct BoundState {
    double kappa{0.0};
    double energy{0.0};
    Branch branch{Branch::upper};
    double norm_const{0.0};

    cplx amplitude(int j) const;
    double density(int j) const;
    /// 1 / kappa, the decay length of the amplitude in sites.
    double width() const { return 1.0 / kappa; }
};

/// g^2 J_0^2 - 2 xi (xi sinh 2 kappa + sign Delta sinh kappa), sign = +1 upper / -1 lower.
double bound_condition_residual(const ModelParams& p, Branch b, double kappa);

/**
 Solves the existence condition for kappa > 0 by bracketing and bisection.
 Throws DelocalizedError when g J_0(Omega/nu) vanishes and NoBoundStateError
 when the branch has no positive root.
 */
BoundState bound_state_solve(const ModelParams& p, Branch branch);

struct ProfilePoint {
    int j{0};
    double density{0.0};
};

std::vector<ProfilePoint> bound_profile(const BoundState& bs, int j_min, int j_max);

struct LocalizationRow {
    double ratio{0.0};
    bool delocalized{false};
    double kappa{0.0};           ///< 0 on delocalized rows
    std::vector<double> density; ///< |U(j)|^2 for j_min..j_max; zeros on delocalized rows
};

/**
 |U(j)|^2 over a ratio grid (rows) and j_min..j_max (columns). Ratios where
 J_0 vanishes produce a delocalized marker row instead of an error.
 */
std::vector<LocalizationRow> localization_map(const ModelParams& p, std::span<const double> ratio_grid,
                                              int j_min, int j_max, Branch branch = Branch::upper,
                                              unsigned workers = 0);

/// Finite-lattice eigenstate closest to a bound state, for cross-validation.
struct LatticeBoundState {
    double energy{0.0};          ///< eigenvalue minus omega_a
    double overlap{0.0};         ///< |<analytic|photon part>| with both normalized
    double excited_weight{0.0};  ///< |u_e|^2 of the dressed eigenvector
};

/// Diagonalizes the effective Hamiltonian on `sites` cavities and compares the
/// extreme out-of-band eigenpair of the branch with the analytic state.
LatticeBoundState lattice_bound_state(const ModelParams& p, const BoundState& bs, int sites);

} // namespace zeno
