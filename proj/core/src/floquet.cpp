#include "zeno/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

double zone_center(const ModelParams& p) {
    return (p.sites * p.omega_c + p.omega_a) / static_cast<double>(p.sites + 1);
}

double nearest_distance(const Eigen::VectorXd& sorted, double x) {
    const double* begin = sorted.data();
    const double* end = begin + sorted.size();
    const double* it = std::lower_bound(begin, end, x);
    double best = std::numeric_limits<double>::infinity();
    if (it != end) best = std::min(best, std::abs(*it - x));
    if (it != begin) best = std::min(best, std::abs(*(it - 1) - x));
    return best;
}

void check_normalized(const SingleExcitationState& s) {
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
        throw DomainError("initial state must be normalized (|norm^2 - 1| <= 1e-10)");
    }
}

} // namespace

double default_slice(const ModelParams& p) { return p.period() / 32.0; }

PropagationPlan make_plan(double t_total, double nominal_slice) {
    if (!(nominal_slice > 0.0)) throw DomainError("make_plan: slice must be > 0");
    if (!(t_total >= 0.0)) throw DomainError("make_plan: total time must be >= 0");
    PropagationPlan plan;
    if (t_total == 0.0) {
        plan.slice = nominal_slice;
        plan.steps = 0;
        return plan;
    }
    // Tolerate rounding when t_total is an exact multiple of the slice.
    plan.steps = static_cast<long>(std::ceil(t_total / nominal_slice - 1e-9));
    plan.steps = std::max(plan.steps, 1L);
    plan.slice = t_total / static_cast<double>(plan.steps);
    return plan;
}

Eigen::MatrixXd build_floquet_matrix(const ModelParams& p, int M, Eigen::Index dimension_cap) {
    p.validate();
    if (M < 1) throw DomainError("Floquet truncation M must be >= 1");
    const Eigen::Index n = p.dimension();
    const Eigen::Index modes = 2 * static_cast<Eigen::Index>(M) + 1;
    if (modes > dimension_cap / n + 1 || modes * n > dimension_cap) {
        throw InfeasibleError("Floquet dimension (2M+1)(L+1) = " + std::to_string(modes * n) +
                              " exceeds cap " + std::to_string(dimension_cap));
    }
    const Eigen::Index dim = modes * n;
    const Eigen::MatrixXd h0 = static_hamiltonian(p);
    Eigen::MatrixXd hf = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::Index tls = n - 1;
    for (Eigen::Index b = 0; b < modes; ++b) {
        const double m = static_cast<double>(b - M);
        hf.block(b * n, b * n, n, n) = h0;
        hf.block(b * n, b * n, n, n).diagonal().array() += m * p.nu;
        if (b + 1 < modes) {
            hf(b * n + tls, (b + 1) * n + tls) = 0.5 * p.amplitude;
            hf((b + 1) * n + tls, b * n + tls) = 0.5 * p.amplitude;
        }
    }
    return hf;
}

FloquetSpectrum floquet_spectrum(const ModelParams& p, int M, Eigen::Index dimension_cap) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_floquet_matrix(p, M, dimension_cap));
    if (es.info() != Eigen::Success) throw ConvergenceError("Floquet eigensolver failed");
    FloquetSpectrum s;
    s.truncation = M;
    s.basis_dim = p.dimension();
    s.quasi_energies = es.eigenvalues();
    s.eigenvectors = es.eigenvectors();
    return s;
}

Eigen::VectorXd central_quasi_energies(const FloquetSpectrum& s, const ModelParams& p) {
    const double c = zone_center(p);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < s.quasi_energies.size(); ++i) {
        const double e = s.quasi_energies[i];
        if (e >= c - 0.5 * p.nu && e < c + 0.5 * p.nu) out.push_back(e);
    }
    return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

double quasi_energy_shift(const FloquetSpectrum& a, const FloquetSpectrum& b, const ModelParams& p) {
    const Eigen::VectorXd central = central_quasi_energies(a, p);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < central.size(); ++i) {
        worst = std::max(worst, nearest_distance(b.quasi_energies, central[i]));
    }
    return worst;
}

double replica_symmetry_defect(const FloquetSpectrum& s, const ModelParams& p) {
    const Eigen::VectorXd central = central_quasi_energies(s, p);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < central.size(); ++i) {
        worst = std::max(worst, nearest_distance(s.quasi_energies, central[i] + p.nu));
        worst = std::max(worst, nearest_distance(s.quasi_energies, central[i] - p.nu));
    }
    return worst;
}

TruncationCheck check_truncation(const ModelParams& p, int M, Eigen::Index dimension_cap) {
    const FloquetSpectrum a = floquet_spectrum(p, M, dimension_cap);
    const FloquetSpectrum b = floquet_spectrum(p, M + 2, dimension_cap);
    return {M, quasi_energy_shift(a, b, p)};
}

int choose_truncation(const ModelParams& p, double tolerance, int start, Eigen::Index dimension_cap) {
    int M = std::max(start, 1);
    for (;;) {
        TruncationCheck c;
        try {
            c = check_truncation(p, M, dimension_cap);
        } catch (const InfeasibleError& e) {
            throw ConvergenceError(std::string("Floquet truncation did not converge before the "
                                               "dimension cap: ") + e.what());
        }
        if (c.shift < tolerance) return M;
        M *= 2;
    }
}

FloquetPropagator::FloquetPropagator(const ModelParams& p, int M, double slice,
                                     Eigen::Index dimension_cap)
    : FloquetPropagator(p, floquet_spectrum(p, M, dimension_cap), slice) {}

FloquetPropagator::FloquetPropagator(const ModelParams& p, FloquetSpectrum spectrum, double slice)
    : params_(p), slice_(slice), spectrum_(std::move(spectrum)) {
    const int M = spectrum_.truncation;
    if (!(slice > 0.0)) throw DomainError("Floquet slice must be > 0");
    const Eigen::Index n = spectrum_.basis_dim;
    const Eigen::Index dim = spectrum_.eigenvectors.cols();

    Eigen::MatrixXcd phased = spectrum_.mode_rows(0).transpose().cast<cplx>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        phased.row(k) *= std::polar(1.0, -spectrum_.quasi_energies[k] * slice_);
    }
    blocks_.reserve(static_cast<std::size_t>(2 * M + 1));
    for (int m = -M; m <= M; ++m) {
        blocks_.emplace_back(spectrum_.mode_rows(m) * phased);
    }
    scratch_.resize(n, n);

    const double per = p.period() / slice_;
    const double rounded = std::round(per);
    if (rounded >= 1.0 && std::abs(per - rounded) < 1e-9 * per) {
        commensurate_ = true;
        phases_per_period_ = static_cast<long>(rounded);
    }
}

const Eigen::MatrixXcd& FloquetPropagator::slice_operator(double t_end) {
    auto assemble = [&](Eigen::MatrixXcd& u, double t) {
        const int M = spectrum_.truncation;
        u.setZero(spectrum_.basis_dim, spectrum_.basis_dim);
        for (int m = -M; m <= M; ++m) {
            u += std::polar(1.0, m * params_.nu * t) * blocks_[static_cast<std::size_t>(m + M)];
        }
    };
    if (commensurate_) {
        const double q = t_end / slice_;
        const double k = std::round(q);
        if (std::abs(q - k) < 1e-9 * std::max(1.0, std::abs(q))) {
            long key = static_cast<long>(k) % phases_per_period_;
            if (key < 0) key += phases_per_period_;
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                Eigen::MatrixXcd u;
                assemble(u, static_cast<double>(key) * slice_);
                it = cache_.emplace(key, std::move(u)).first;
            }
            return it->second;
        }
    }
    assemble(scratch_, t_end);
    return scratch_;
}

void FloquetPropagator::step(Eigen::VectorXcd& psi, double t_start) {
    const Eigen::MatrixXcd& u = slice_operator(t_start + slice_);
    psi = u * psi;
}

SingleExcitationState FloquetPropagator::propagate(const SingleExcitationState& s, double t_start,
                                                   long steps) {
    Eigen::VectorXcd psi = s.amplitudes();
    if (psi.size() != spectrum_.basis_dim) throw DomainError("state size does not match the model");
    for (long i = 0; i < steps; ++i) step(psi, t_start + static_cast<double>(i) * slice_);
    return SingleExcitationState(std::move(psi));
}

SingleExcitationState floquet_propagate(const ModelParams& p, const SingleExcitationState& state0,
                                        double t_total, const PropagationPlan& plan, int M,
                                        double tolerance) {
    check_normalized(state0);
    if (std::abs(plan.total() - t_total) > 1e-12 * std::max(1.0, std::abs(t_total))) {
        throw DomainError("propagation plan does not cover the requested time");
    }
    FloquetSpectrum spec = floquet_spectrum(p, M);
    const double shift = quasi_energy_shift(spec, floquet_spectrum(p, M + 2), p);
    if (!(shift <= tolerance)) {
        throw ConvergenceError("Floquet truncation M=" + std::to_string(M) +
                               " not converged: quasi-energy shift " + std::to_string(shift) +
                               " under M -> M+2");
    }
    FloquetPropagator prop(p, std::move(spec), plan.slice);
    return prop.propagate(state0, 0.0, plan.steps);
}

} // namespace zeno
