#pragma once

#include "qotp/complex_matrix.hpp"
#include "qotp/gate_table.hpp"

#include <array>
#include <vector>

namespace qotp {

// Normalized state vector of one or more qubits.
struct PureState {
    std::vector<cplx> amp;

    PureState() = default;
    explicit PureState(std::vector<cplx> a);

    std::size_t dim() const { return amp.size(); }
    std::size_t num_qubits() const;

    double norm_sq() const;
    ComplexMatrix projector() const;
};

PureState tensor(const PureState& a, const PureState& b);
cplx inner(const PureState& a, const PureState& b);

// (x, y, z) expectation values of a single-qubit state.
std::array<double, 3> bloch_vector(const PureState& s);
double expectation_x(const PureState& s);
double expectation_y(const PureState& s);
double expectation_z(const PureState& s);

// Single-qubit state encoding a one-input gate; the Z expectation carries
// the table's first line and the X expectation its second.
PureState g1_state(const GateTable& table);

// The eight elliptical single-qubit states used by the two-photon scheme.
PureState elliptical_state(int index);

// rho -> f * rho + (1 - f) * I/2 applied to qubit `qubit` of an n-qubit
// density matrix.
ComplexMatrix depolarize_qubit(const ComplexMatrix& rho, std::size_t qubit, double fidelity);
ComplexMatrix depolarize_all(const ComplexMatrix& rho, std::size_t num_qubits, double fidelity);

}  // namespace qotp
