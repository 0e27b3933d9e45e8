#pragma once

#include "qotp/complex_matrix.hpp"
#include "qotp/gate_table.hpp"
#include "qotp/pauli.hpp"
#include "qotp/rng.hpp"
#include "qotp/states.hpp"

#include <array>
#include <string>
#include <vector>

namespace qotp {

enum class Scheme { G1, LinearG2, EllipticalG2, GeneralGk };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Observable per gate input; all strings pairwise anti-commuting.
struct ObservableAssignment {
    std::vector<PauliString> observables;  // index = input, big-endian bits

    int k() const;
    std::size_t num_qubits() const { return observables.at(0).num_qubits(); }
    void validate() const;
};

// input 0 -> Z, input 1 -> X
ObservableAssignment g1_assignment();
// three-photon scheme: inputs 00,01,10,11 -> ZIZ, XIZ, IZX, IXX
ObservableAssignment linear_assignment();
// two-photon scheme: inputs 00,01,10,11 -> ZY, XY, IZ, IX
ObservableAssignment elliptical_assignment();
ObservableAssignment general_assignment(int k, bool xz_only = false);

ObservableAssignment scheme_assignment(Scheme s, int k);
std::size_t scheme_qubits(Scheme s, int k);

// rho_G = (I + 2^{-k/2} sum_i (-1)^{G(i)} sigma_i) / tr(I)
ComplexMatrix encode_general(const GateTable& table, const ObservableAssignment& assignment);

// Three-photon decomposition rows for a two-input gate (four per gate).
std::vector<std::array<GateTable, 3>> table_a_rows(const GateTable& g2);
// Two-photon rows: a one-input gate table for the first photon and an
// elliptical state index for the second (two per gate).
std::vector<std::pair<GateTable, int>> table_b_rows(const GateTable& g2);

// One shippable program instance for a single gate.
struct GateOtp {
    Scheme scheme = Scheme::G1;
    // one entry per photon for the product schemes; a single entry holding
    // the whole register for GeneralGk (its encodings are not product states)
    std::vector<PureState> qubit_states;
    GateTable table;               // table physically encoded in the states
    int representative_index = 0;  // which decomposition row was sampled
    int pad = 0;                   // output flip bit the receiver must apply
    double fidelity = 1.0;         // per-qubit preparation fidelity
    bool consumed = false;

    // the gate the sender means: physical table with the pad folded in
    GateTable logical_table() const { return pad ? table.flip_all() : table; }
};

GateOtp encode_g1(const GateTable& table, Rng& rng, double fidelity = 1.0);
GateOtp encode_linear_g2(const GateTable& table, Rng& rng, double fidelity = 1.0);
GateOtp encode_elliptical_g2(const GateTable& table, Rng& rng, double fidelity = 1.0);
GateOtp encode_general_gk(const GateTable& table, Rng& rng, double fidelity = 1.0);

// Encodes `logical` under `scheme`; with pad = 1 the shipped states encode
// the all-lines-flipped table so the instance is useless without the pad.
GateOtp make_otp(Scheme scheme, const GateTable& logical, Rng& rng, double fidelity = 1.0,
                 int pad = 0);

// Samples the preparation noise into the shipped states (a uniformly random
// Pauli on each qubit with probability 1 - fidelity) and resets the stored
// fidelity to 1. Used by the sender so transmitted states are plain vectors.
GateOtp corrupt_preparation(GateOtp otp, Rng& rng);

enum class Basis { Unmeasured, Z, X, Y };

struct MeasurementPlan {
    std::vector<Basis> per_qubit;
    std::vector<std::size_t> parity_set;  // qubits whose outcome bits are XORed
};

MeasurementPlan measurement_plan(Scheme scheme, int k, std::size_t input);

struct MeasurementRecord {
    std::vector<int> qubit_bits;  // -1 for unmeasured qubits
    int raw = 0;                  // XOR over the parity set, before the pad
};

// Born-rule measurement of the plan for `input`; consumes the instance.
// The returned record holds the raw parity; evaluate_otp applies the pad.
MeasurementRecord measure_otp(GateOtp& otp, std::size_t input, Rng& rng);
int evaluate_otp(GateOtp& otp, std::size_t input, Rng& rng);

// Representative-averaged density matrix the receiver sees for a table
// under a scheme (equals the general encoding for the scheme's assignment).
ComplexMatrix scheme_density_matrix(Scheme scheme, const GateTable& table,
                                    double fidelity = 1.0);

// Exact per-input success probabilities, no sampling.
std::vector<double> success_probability(Scheme scheme, const GateTable& table,
                                        double fidelity = 1.0);

}  // namespace qotp
