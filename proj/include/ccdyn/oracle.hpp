#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccdyn/amplitudes.hpp"
#include "ccdyn/params.hpp"

namespace ccdyn {

/// One basis ket |atom1, atom2; n1, n2>.
struct BasisState {
    bool atom1_excited = false;
    bool atom2_excited = false;
    int n1 = 0;
    int n2 = 0;

    int excitation() const {
        return int(atom1_excited) + int(atom2_excited) + n1 + n2;
    }
    std::string label() const;
};

/// Dense Hermitian matrix of the full Hamiltonian in a fixed basis
/// ordering (atom 1 slowest, then atom 2, then n1, then n2).
struct HamiltonianMatrix {
    Eigen::MatrixXcd matrix;
    std::vector<BasisState> basis;

    Eigen::Index dimension() const { return matrix.rows(); }
};

/// 4x4 block of the Hamiltonian restricted to the single-excitation
/// subspace, basis order [|gg10>, |gg01>, |eg00>, |ge00>].
HamiltonianMatrix single_excitation_hamiltonian(const SystemParams& p);

/// Full Hamiltonian on {g,e} x {g,e} x {0..n_max} x {0..n_max} with the
/// bosonic sqrt(n) matrix elements. n_max >= 1.
HamiltonianMatrix fock_hamiltonian(const SystemParams& p, int n_max);

/// Brute-force propagator: diagonalize once, evolve as V e^{-i lambda t} V^dag.
class EigenPropagator {
public:
    explicit EigenPropagator(const HamiltonianMatrix& h);

    Eigen::VectorXcd evolve(const Eigen::VectorXcd& init, double t) const;

    /// Sorted ascending.
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    Eigen::Index dimension() const { return eigenvalues_.size(); }

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// Maps between LocalAmplitudes and the 4-vector of the
/// single-excitation basis above.
Eigen::Vector4cd to_vector(const LocalAmplitudes& s);
LocalAmplitudes from_vector(const Eigen::Vector4cd& v);

}  // namespace ccdyn
