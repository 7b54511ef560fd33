#include "zeno/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zeno/effective_coupling.hpp"
#include "zeno/errors.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

Branch parse_branch(std::string_view name) {
    if (name == "upper") return Branch::upper;
    if (name == "lower") return Branch::lower;
    throw DomainError("unknown bound-state branch '" + std::string(name) + "'");
}

std::string_view to_string(Branch b) { return b == Branch::upper ? "upper" : "lower"; }

cplx BoundState::amplitude(int j) const {
    const double a = norm_const * std::exp(-kappa * std::abs(j));
    return (branch == Branch::upper && (j % 2 != 0)) ? -a : a;
}

double BoundState::density(int j) const { return norm_const * norm_const * std::exp(-2.0 * kappa * std::abs(j)); }

double bound_condition_residual(const ModelParams& p, Branch b, double kappa) {
    const double G = effective_g(p);
    const double sign = b == Branch::upper ? 1.0 : -1.0;
    return G * G - 2.0 * p.xi * (p.xi * std::sinh(2.0 * kappa) + sign * p.detuning() * std::sinh(kappa));
}

BoundState bound_state_solve(const ModelParams& p, Branch branch) {
    p.validate();
    const double G = effective_g(p);
    if (std::abs(G) <= kDelocalizationThreshold * std::max(p.g, 1.0)) {
        throw DelocalizedError("effective coupling g J0(Omega/nu) vanishes: kappa = 0, photon delocalized");
    }
    // f(kappa) = RHS - G^2 is -G^2 < 0 at kappa = 0 and grows like e^{2 kappa}.
    auto f = [&](double k) { return -bound_condition_residual(p, branch, k); };
    double lo = 0.0;
    double hi = 1e-3;
    int expand = 0;
    while (f(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++expand > 200 || !std::isfinite(f(hi))) {
            throw NoBoundStateError(std::string("no positive root of the bound-state condition on the ") +
                                    std::string(to_string(branch)) + " branch");
        }
    }
    for (int it = 0; it < 400 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    BoundState bs;
    bs.kappa = 0.5 * (lo + hi);
    if (!(bs.kappa > 0.0)) {
        throw NoBoundStateError("bound-state root collapsed to kappa = 0");
    }
    bs.branch = branch;
    const double sign = branch == Branch::upper ? 1.0 : -1.0;
    bs.energy = p.detuning() + sign * 2.0 * p.xi * std::cosh(bs.kappa);
    bs.norm_const = std::sqrt(std::tanh(bs.kappa));
    return bs;
}

std::vector<ProfilePoint> bound_profile(const BoundState& bs, int j_min, int j_max) {
    if (j_max < j_min) throw DomainError("bound_profile: empty j range");
    std::vector<ProfilePoint> out;
    out.reserve(static_cast<std::size_t>(j_max - j_min + 1));
    for (int j = j_min; j <= j_max; ++j) out.push_back({j, bs.density(j)});
    return out;
}

std::vector<LocalizationRow> localization_map(const ModelParams& p, std::span<const double> ratio_grid,
                                              int j_min, int j_max, Branch branch, unsigned workers) {
    p.validate();
    if (j_max < j_min) throw DomainError("localization_map: empty j range");
    const std::size_t cols = static_cast<std::size_t>(j_max - j_min + 1);
    return parallel_map<LocalizationRow>(ratio_grid.size(), workers, [&](std::size_t i) {
        LocalizationRow row;
        row.ratio = ratio_grid[i];
        try {
            const BoundState bs = bound_state_solve(p.with_ratio(row.ratio), branch);
            row.kappa = bs.kappa;
            row.density.reserve(cols);
            for (int j = j_min; j <= j_max; ++j) row.density.push_back(bs.density(j));
        } catch (const DelocalizedError&) {
            row.delocalized = true;
            row.density.assign(cols, 0.0);
        }
        return row;
    });
}

LatticeBoundState lattice_bound_state(const ModelParams& p, const BoundState& bs, int sites) {
    ModelParams q = p;
    q.sites = sites;
    q.validate();
    // Static model with the renormalized coupling |g J_0|; the sign of J_0 is a gauge.
    ModelParams bare = q;
    bare.g = std::abs(effective_g(q));
    bare.amplitude = 0.0;
    const Eigen::MatrixXd h = static_hamiltonian(bare);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::Index idx = bs.branch == Branch::upper ? h.rows() - 1 : 0;

    LatticeBoundState out;
    out.energy = es.eigenvalues()[idx] - q.omega_a;
    const Eigen::VectorXd v = es.eigenvectors().col(idx);
    out.excited_weight = v[q.sites] * v[q.sites];

    const int half = (q.sites - 1) / 2;
    Eigen::VectorXd analytic(q.sites);
    for (int j = -half; j <= half; ++j) analytic[j + half] = bs.amplitude(j).real();
    const Eigen::VectorXd photon = v.head(q.sites);
    out.overlap = std::abs(analytic.dot(photon)) / (analytic.norm() * photon.norm());
    return out;
}

} // namespace zeno
