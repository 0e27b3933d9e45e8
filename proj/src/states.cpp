#include "qotp/states.hpp"

#include "qotp/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace qotp {

PureState::PureState(std::vector<cplx> a) : amp(std::move(a)) {
    if (amp.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
    if (std::abs(norm_sq() - 1.0) > 1e-12)
        throw std::invalid_argument("PureState: vector not normalized");
}

std::size_t PureState::num_qubits() const {
    std::size_t n = 0;
    while ((std::size_t(1) << n) < dim()) ++n;
    return n;
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s;
}

ComplexMatrix PureState::projector() const {
    ComplexMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) m(i, j) = amp[i] * std::conj(amp[j]);
    return m;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<cplx> v(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a.amp[i] * b.amp[j];
    PureState out;
    out.amp = std::move(v);
    return out;
}

cplx inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

double expectation_z(const PureState& s) {
    return std::norm(s.amp[0]) - std::norm(s.amp[1]);
}
double expectation_x(const PureState& s) {
    return 2.0 * std::real(std::conj(s.amp[0]) * s.amp[1]);
}
double expectation_y(const PureState& s) {
    return 2.0 * std::imag(std::conj(s.amp[0]) * s.amp[1]);
}

std::array<double, 3> bloch_vector(const PureState& s) {
    if (s.dim() != 2) throw std::invalid_argument("bloch_vector: single qubit only");
    return {expectation_x(s), expectation_y(s), expectation_z(s)};
}

PureState g1_state(const GateTable& table) {
    if (table.k() != 1) throw std::invalid_argument("g1_state: table must have k = 1");
    const double rt2 = std::sqrt(2.0);
    const double n = 1.0 / std::sqrt(2.0 + rt2);
    const double big = n * (1.0 + 1.0 / rt2);
    const double small = n / rt2;
    const int g0 = table.value(0), g1 = table.value(1);
    // |0>+|+>, |0>+|->, |1>+|+>, |1>-|->  (all scaled by n)
    if (g0 == 0 && g1 == 0) return PureState({big, small});
    if (g0 == 0 && g1 == 1) return PureState({big, -small});
    if (g0 == 1 && g1 == 0) return PureState({small, big});
    return PureState({-small, big});
}

PureState elliptical_state(int index) {
    if (index < 0 || index > 7) throw std::invalid_argument("elliptical_state: index 0..7");
    const double h = 0.5;
    const double q = 1.0 / std::sqrt(2.0);
    switch (index) {
        case 0: return PureState({cplx(h, -q), h});
        case 1: return PureState({cplx(-h, -q), h});
        case 2: return PureState({h, cplx(h, q)});
        case 3: return PureState({h, cplx(-h, q)});
        case 4: return PureState({cplx(h, q), h});
        case 5: return PureState({cplx(-h, q), h});
        case 6: return PureState({h, cplx(h, -q)});
        default: return PureState({h, cplx(-h, -q)});
    }
}

ComplexMatrix depolarize_qubit(const ComplexMatrix& rho, std::size_t qubit, double fidelity) {
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("depolarize_qubit: fidelity outside [0,1]");
    if (fidelity == 1.0) return rho;
    // f*rho + (1-f)/2 * sum_P (P rho P) with P in {I,X,Y,Z} scaled: the
    // twirl (rho + X rho X + Y rho Y + Z rho Z)/4 replaces the qubit by I/2.
    std::size_t n = 0;
    while ((std::size_t(1) << n) < rho.rows()) ++n;
    ComplexMatrix acc = rho;
    for (char letter : {'X', 'Y', 'Z'}) {
        std::vector<ComplexMatrix> f;
        for (std::size_t i = 0; i < n; ++i)
            f.push_back(i == qubit ? pauli_letter_matrix(letter)
                                   : ComplexMatrix::identity(2));
        ComplexMatrix p = kron(f);
        acc += matmul(matmul(p, rho), p);
    }
    acc *= cplx(0.25, 0.0);
    ComplexMatrix out = rho;
    out *= cplx(fidelity, 0.0);
    acc *= cplx(1.0 - fidelity, 0.0);
    out += acc;
    return out;
}

ComplexMatrix depolarize_all(const ComplexMatrix& rho, std::size_t num_qubits, double fidelity) {
    ComplexMatrix out = rho;
    for (std::size_t q = 0; q < num_qubits; ++q) out = depolarize_qubit(out, q, fidelity);
    return out;
}

}  // namespace qotp
