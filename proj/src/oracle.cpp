#include "ccdyn/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ccdyn {

std::string BasisState::label() const {
    std::string s = "|";
    s += atom1_excited ? 'e' : 'g';
    s += atom2_excited ? 'e' : 'g';
    s += ';';
    s += std::to_string(n1);
    s += ',';
    s += std::to_string(n2);
    s += '>';
    return s;
}

HamiltonianMatrix single_excitation_hamiltonian(const SystemParams& p) {
    HamiltonianMatrix h;
    h.basis = {
        {false, false, 1, 0},  // |gg10>
        {false, false, 0, 1},  // |gg01>
        {true, false, 0, 0},   // |eg00>
        {false, true, 0, 0},   // |ge00>
    };
    const double wf = p.omega_f;
    const double wa = p.omega_a();
    h.matrix = Eigen::MatrixXcd::Zero(4, 4);
    h.matrix(0, 0) = wf;
    h.matrix(1, 1) = wf;
    h.matrix(2, 2) = wa;
    h.matrix(3, 3) = wa;
    h.matrix(0, 1) = h.matrix(1, 0) = p.hopping;
    h.matrix(0, 2) = h.matrix(2, 0) = p.g;
    h.matrix(1, 3) = h.matrix(3, 1) = p.g;
    return h;
}

HamiltonianMatrix fock_hamiltonian(const SystemParams& p, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("fock_hamiltonian: n_max must be >= 1");
    }
    const int nph = n_max + 1;
    const int dim = 4 * nph * nph;

    HamiltonianMatrix h;
    h.basis.reserve(dim);
    // Atom 1 slowest, then atom 2, then n1, then n2.
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int n1 = 0; n1 < nph; ++n1)
                for (int n2 = 0; n2 < nph; ++n2)
                    h.basis.push_back({a1 == 1, a2 == 1, n1, n2});

    auto index = [nph](bool a1, bool a2, int n1, int n2) {
        return ((int(a1) * 2 + int(a2)) * nph + n1) * nph + n2;
    };

    const double wf = p.omega_f;
    const double wa = p.omega_a();
    h.matrix = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const BasisState& s = h.basis[i];
        h.matrix(i, i) = wa * (int(s.atom1_excited) + int(s.atom2_excited)) +
                         wf * (s.n1 + s.n2);
        // a1 sigma1+ : photon out of cavity 1, atom 1 up.
        if (s.n1 >= 1 && !s.atom1_excited) {
            const int j = index(true, s.atom2_excited, s.n1 - 1, s.n2);
            h.matrix(j, i) += p.g * std::sqrt(double(s.n1));
            h.matrix(i, j) += p.g * std::sqrt(double(s.n1));
        }
        if (s.n2 >= 1 && !s.atom2_excited) {
            const int j = index(s.atom1_excited, true, s.n1, s.n2 - 1);
            h.matrix(j, i) += p.g * std::sqrt(double(s.n2));
            h.matrix(i, j) += p.g * std::sqrt(double(s.n2));
        }
        // a1^dag a2 : photon hops from cavity 2 to cavity 1.
        if (s.n2 >= 1 && s.n1 + 1 < nph) {
            const int j = index(s.atom1_excited, s.atom2_excited, s.n1 + 1, s.n2 - 1);
            const double amp = p.hopping * std::sqrt(double(s.n2) * double(s.n1 + 1));
            h.matrix(j, i) += amp;
            h.matrix(i, j) += amp;
        }
    }
    return h;
}

EigenPropagator::EigenPropagator(const HamiltonianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("EigenPropagator: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Eigen::VectorXcd EigenPropagator::evolve(const Eigen::VectorXcd& init,
                                         double t) const {
    if (init.size() != eigenvalues_.size()) {
        throw std::invalid_argument("EigenPropagator: dimension mismatch");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("EigenPropagator: non-finite time");
    }
    Eigen::VectorXcd modal = eigenvectors_.adjoint() * init;
    for (Eigen::Index k = 0; k < modal.size(); ++k) {
        modal[k] *= std::polar(1.0, -eigenvalues_[k] * t);
    }
    return eigenvectors_ * modal;
}

Eigen::Vector4cd to_vector(const LocalAmplitudes& s) {
    return {s.a, s.b, s.c, s.d};
}

LocalAmplitudes from_vector(const Eigen::Vector4cd& v) {
    return {v[0], v[1], v[2], v[3]};
}

}  // namespace ccdyn
