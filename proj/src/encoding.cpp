#include "qotp/encoding.hpp"

#include "qotp/eig.hpp"
#include "qotp/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qotp {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::G1: return "g1";
        case Scheme::LinearG2: return "linear";
        case Scheme::EllipticalG2: return "elliptical";
        case Scheme::GeneralGk: return "general";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "g1") return Scheme::G1;
    if (name == "linear") return Scheme::LinearG2;
    if (name == "elliptical") return Scheme::EllipticalG2;
    if (name == "general") return Scheme::GeneralGk;
    throw std::invalid_argument("unknown scheme: " + name);
}

int ObservableAssignment::k() const {
    std::size_t n = observables.size();
    int k = 0;
    while ((std::size_t(1) << k) < n) ++k;
    if ((std::size_t(1) << k) != n || k < 1)
        throw std::invalid_argument("assignment must cover 2^k inputs");
    return k;
}

void ObservableAssignment::validate() const {
    (void)k();
    const std::size_t nq = observables[0].num_qubits();
    for (const auto& o : observables)
        if (o.num_qubits() != nq)
            throw std::invalid_argument("assignment: mixed qubit counts");
    for (std::size_t i = 0; i < observables.size(); ++i)
        for (std::size_t j = i + 1; j < observables.size(); ++j)
            if (!anticommutes(observables[i], observables[j]))
                throw std::invalid_argument("assignment: observables " + observables[i].str() +
                                            " and " + observables[j].str() +
                                            " do not anti-commute");
}

ObservableAssignment g1_assignment() {
    return {{PauliString("Z"), PauliString("X")}};
}

ObservableAssignment linear_assignment() {
    return {{PauliString("ZIZ"), PauliString("XIZ"), PauliString("IZX"), PauliString("IXX")}};
}

ObservableAssignment elliptical_assignment() {
    return {{PauliString("ZY"), PauliString("XY"), PauliString("IZ"), PauliString("IX")}};
}

ObservableAssignment general_assignment(int k, bool xz_only) {
    return {anticommuting_family(k, xz_only)};
}

ObservableAssignment scheme_assignment(Scheme s, int k) {
    switch (s) {
        case Scheme::G1:
            if (k != 1) throw std::invalid_argument("G1 scheme needs k = 1");
            return g1_assignment();
        case Scheme::LinearG2:
            if (k != 2) throw std::invalid_argument("linear scheme needs k = 2");
            return linear_assignment();
        case Scheme::EllipticalG2:
            if (k != 2) throw std::invalid_argument("elliptical scheme needs k = 2");
            return elliptical_assignment();
        case Scheme::GeneralGk: return general_assignment(k);
    }
    throw std::invalid_argument("bad scheme");
}

std::size_t scheme_qubits(Scheme s, int k) {
    switch (s) {
        case Scheme::G1: return 1;
        case Scheme::LinearG2: return 3;
        case Scheme::EllipticalG2: return 2;
        case Scheme::GeneralGk: return std::size_t(1) << (k - 1);
    }
    throw std::invalid_argument("bad scheme");
}

ComplexMatrix encode_general(const GateTable& table, const ObservableAssignment& assignment) {
    assignment.validate();
    if (assignment.k() != table.k())
        throw std::invalid_argument("encode_general: assignment does not cover the table");
    const std::size_t dim = std::size_t(1) << assignment.num_qubits();
    if (dim > kMaxDenseDim) throw ResourceLimitError("encode_general: dimension too large");
    const double w = std::pow(2.0, -0.5 * table.k());
    ComplexMatrix acc = ComplexMatrix::identity(dim);
    for (std::size_t i = 0; i < table.lines(); ++i) {
        ComplexMatrix s = materialize(assignment.observables[i]);
        s *= cplx(w * (table.value(i) == 0 ? 1.0 : -1.0), 0.0);
        acc += s;
    }
    acc *= cplx(1.0 / double(dim), 0.0);
    return acc;
}

std::vector<std::array<GateTable, 3>> table_a_rows(const GateTable& g2) {
    if (g2.k() != 2) throw std::invalid_argument("table_a_rows: k = 2 required");
    std::vector<std::array<GateTable, 3>> rows;
    for (const auto& c : GateTable::all(1)) {
        std::string a(2, '0'), b(2, '0');
        for (int x2 = 0; x2 < 2; ++x2) {
            a[x2] = char('0' + (g2.value(x2) ^ c.value(0)));
            b[x2] = char('0' + (g2.value(2 + x2) ^ c.value(1)));
        }
        rows.push_back({GateTable(a), GateTable(b), c});
    }
    return rows;
}

std::vector<std::pair<GateTable, int>> table_b_rows(const GateTable& g2) {
    if (g2.k() != 2) throw std::invalid_argument("table_b_rows: k = 2 required");
    const int j = 2 * g2.value(2) + g2.value(3);
    GateTable first(std::string() + char('0' + g2.value(0)) + char('0' + g2.value(1)));
    return {{first, j}, {first.flip_all(), j + 4}};
}

namespace {

GateOtp product_otp(Scheme scheme, const GateTable& table, std::vector<PureState> states,
                    int rep, double fidelity) {
    GateOtp otp;
    otp.scheme = scheme;
    otp.qubit_states = std::move(states);
    otp.table = table;
    otp.representative_index = rep;
    otp.fidelity = fidelity;
    return otp;
}

void check_fidelity(double f) {
    if (f <= 0.0 || f > 1.0) throw std::invalid_argument("fidelity must be in (0, 1]");
}

}  // namespace

GateOtp encode_g1(const GateTable& table, Rng&, double fidelity) {
    check_fidelity(fidelity);
    if (table.k() != 1) throw std::invalid_argument("encode_g1: k = 1 required");
    return product_otp(Scheme::G1, table, {g1_state(table)}, 0, fidelity);
}

GateOtp encode_linear_g2(const GateTable& table, Rng& rng, double fidelity) {
    check_fidelity(fidelity);
    auto rows = table_a_rows(table);
    const int r = int(rng.index(rows.size()));
    const auto& row = rows[r];
    return product_otp(Scheme::LinearG2, table,
                       {g1_state(row[0]), g1_state(row[1]), g1_state(row[2])}, r, fidelity);
}

GateOtp encode_elliptical_g2(const GateTable& table, Rng& rng, double fidelity) {
    check_fidelity(fidelity);
    auto rows = table_b_rows(table);
    const int r = int(rng.index(rows.size()));
    return product_otp(Scheme::EllipticalG2, table,
                       {g1_state(rows[r].first), elliptical_state(rows[r].second)}, r,
                       fidelity);
}

GateOtp encode_general_gk(const GateTable& table, Rng& rng, double fidelity) {
    check_fidelity(fidelity);
    auto rho = encode_general(table, general_assignment(table.k()));
    auto e = eig_hermitian(rho);
    // the state is maximally mixed on its support: ship a uniformly chosen
    // support eigenvector, so the average over representatives is exact
    const std::size_t rank = rho.rows() / 2;
    const int r = int(rng.index(rank));
    std::vector<cplx> amp(rho.rows());
    for (std::size_t i = 0; i < rho.rows(); ++i) amp[i] = e.vectors(i, std::size_t(r));
    GateOtp otp;
    otp.scheme = Scheme::GeneralGk;
    otp.qubit_states = {PureState(std::move(amp))};
    otp.table = table;
    otp.representative_index = r;
    otp.fidelity = fidelity;
    return otp;
}

GateOtp make_otp(Scheme scheme, const GateTable& logical, Rng& rng, double fidelity, int pad) {
    if (pad != 0 && pad != 1) throw std::invalid_argument("pad must be a bit");
    const GateTable physical = pad ? logical.flip_all() : logical;
    GateOtp otp;
    switch (scheme) {
        case Scheme::G1: otp = encode_g1(physical, rng, fidelity); break;
        case Scheme::LinearG2: otp = encode_linear_g2(physical, rng, fidelity); break;
        case Scheme::EllipticalG2: otp = encode_elliptical_g2(physical, rng, fidelity); break;
        case Scheme::GeneralGk: otp = encode_general_gk(physical, rng, fidelity); break;
    }
    otp.pad = pad;
    return otp;
}

MeasurementPlan measurement_plan(Scheme scheme, int k, std::size_t input) {
    if (input >= (std::size_t(1) << k))
        throw std::invalid_argument("measurement_plan: input wider than the gate");
    const auto assignment = scheme_assignment(scheme, k);
    const auto& obs = assignment.observables[input];
    MeasurementPlan plan;
    plan.per_qubit.assign(obs.num_qubits(), Basis::Unmeasured);
    for (std::size_t q = 0; q < obs.num_qubits(); ++q) {
        switch (obs.letters[q]) {
            case 'I': break;
            case 'Z': plan.per_qubit[q] = Basis::Z; plan.parity_set.push_back(q); break;
            case 'X': plan.per_qubit[q] = Basis::X; plan.parity_set.push_back(q); break;
            case 'Y': plan.per_qubit[q] = Basis::Y; plan.parity_set.push_back(q); break;
        }
    }
    return plan;
}

namespace {

double basis_expectation(const PureState& s, Basis b) {
    switch (b) {
        case Basis::Z: return expectation_z(s);
        case Basis::X: return expectation_x(s);
        case Basis::Y: return expectation_y(s);
        default: return 0.0;
    }
}

// applies the Pauli letter to one qubit of an n-qubit amplitude vector
void apply_pauli_inplace(std::vector<cplx>& amp, std::size_t qubit, Basis b,
                         std::size_t num_qubits) {
    const std::size_t stride = std::size_t(1) << (num_qubits - 1 - qubit);
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (i & stride) continue;  // visit each pair once, from the 0 side
        const std::size_t j = i | stride;
        const cplx a0 = amp[i], a1 = amp[j];
        switch (b) {
            case Basis::Z: amp[j] = -a1; break;
            case Basis::X: amp[i] = a1; amp[j] = a0; break;
            case Basis::Y: amp[i] = cplx(0.0, -1.0) * a1; amp[j] = cplx(0.0, 1.0) * a0; break;
            default: break;
        }
    }
}

// projective single-qubit measurement on a (possibly entangled) register
int measure_register_qubit(std::vector<cplx>& amp, std::size_t qubit, Basis basis,
                           std::size_t num_qubits, Rng& rng) {
    std::vector<cplx> flipped = amp;
    apply_pauli_inplace(flipped, qubit, basis, num_qubits);
    // branch vectors for outcomes +1 (bit 0) and -1 (bit 1)
    std::vector<cplx> plus(amp.size()), minus(amp.size());
    double p_minus = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        plus[i] = 0.5 * (amp[i] + flipped[i]);
        minus[i] = 0.5 * (amp[i] - flipped[i]);
        p_minus += std::norm(minus[i]);
    }
    const int bit = rng.bernoulli(p_minus) ? 1 : 0;
    const auto& branch = bit ? minus : plus;
    const double norm = std::sqrt(bit ? p_minus : 1.0 - p_minus);
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] = branch[i] / norm;
    return bit;
}

}  // namespace

GateOtp corrupt_preparation(GateOtp otp, Rng& rng) {
    if (otp.fidelity >= 1.0) return otp;
    const double p_err = 1.0 - otp.fidelity;
    for (auto& state : otp.qubit_states) {
        const std::size_t nq = state.num_qubits();
        for (std::size_t q = 0; q < nq; ++q) {
            if (!rng.bernoulli(p_err)) continue;
            switch (rng.index(4)) {
                case 1: apply_pauli_inplace(state.amp, q, Basis::X, nq); break;
                case 2: apply_pauli_inplace(state.amp, q, Basis::Y, nq); break;
                case 3: apply_pauli_inplace(state.amp, q, Basis::Z, nq); break;
                default: break;
            }
        }
    }
    otp.fidelity = 1.0;
    return otp;
}

MeasurementRecord measure_otp(GateOtp& otp, std::size_t input, Rng& rng) {
    if (otp.consumed) throw OtpConsumedError("gate OTP already consumed");
    otp.consumed = true;

    const int k = otp.table.k();
    const auto plan = measurement_plan(otp.scheme, k, input);
    MeasurementRecord rec;
    rec.qubit_bits.assign(plan.per_qubit.size(), -1);

    if (otp.scheme != Scheme::GeneralGk) {
        // product of single-qubit states: each photon measured on its own
        for (std::size_t q : plan.parity_set) {
            const Basis b = plan.per_qubit[q];
            int bit;
            if (otp.fidelity < 1.0 && rng.bernoulli(1.0 - otp.fidelity)) {
                bit = rng.bit();  // depolarized photon: fair coin in any basis
            } else {
                const double exp_b = basis_expectation(otp.qubit_states[q], b);
                bit = rng.bernoulli(0.5 * (1.0 - exp_b)) ? 1 : 0;
            }
            rec.qubit_bits[q] = bit;
            rec.raw ^= bit;
        }
        return rec;
    }

    // entangled register: preparation noise as a random-Pauli unravelling of
    // the depolarizing channel, then sequential projective measurement
    std::vector<cplx> amp = otp.qubit_states.at(0).amp;
    const std::size_t nq = plan.per_qubit.size();
    if (otp.fidelity < 1.0) {
        for (std::size_t q = 0; q < nq; ++q) {
            if (!rng.bernoulli(1.0 - otp.fidelity)) continue;
            switch (rng.index(4)) {
                case 1: apply_pauli_inplace(amp, q, Basis::X, nq); break;
                case 2: apply_pauli_inplace(amp, q, Basis::Y, nq); break;
                case 3: apply_pauli_inplace(amp, q, Basis::Z, nq); break;
                default: break;
            }
        }
    }
    for (std::size_t q : plan.parity_set) {
        const int bit = measure_register_qubit(amp, q, plan.per_qubit[q], nq, rng);
        rec.qubit_bits[q] = bit;
        rec.raw ^= bit;
    }
    return rec;
}

int evaluate_otp(GateOtp& otp, std::size_t input, Rng& rng) {
    return measure_otp(otp, input, rng).raw ^ otp.pad;
}

ComplexMatrix scheme_density_matrix(Scheme scheme, const GateTable& table, double fidelity) {
    check_fidelity(fidelity);
    ComplexMatrix rho;
    switch (scheme) {
        case Scheme::G1: {
            rho = g1_state(table).projector();
            break;
        }
        case Scheme::LinearG2: {
            rho = ComplexMatrix(8, 8);
            for (const auto& row : table_a_rows(table)) {
                auto v = tensor(tensor(g1_state(row[0]), g1_state(row[1])), g1_state(row[2]));
                auto p = v.projector();
                p *= cplx(0.25, 0.0);
                rho += p;
            }
            break;
        }
        case Scheme::EllipticalG2: {
            rho = ComplexMatrix(4, 4);
            for (const auto& [first, e] : table_b_rows(table)) {
                auto v = tensor(g1_state(first), elliptical_state(e));
                auto p = v.projector();
                p *= cplx(0.5, 0.0);
                rho += p;
            }
            break;
        }
        case Scheme::GeneralGk: {
            rho = encode_general(table, general_assignment(table.k()));
            break;
        }
    }
    if (fidelity < 1.0) {
        std::size_t nq = 0;
        while ((std::size_t(1) << nq) < rho.rows()) ++nq;
        rho = depolarize_all(rho, nq, fidelity);
    }
    return rho;
}

std::vector<double> success_probability(Scheme scheme, const GateTable& table,
                                        double fidelity) {
    const auto assignment = scheme_assignment(scheme, table.k());
    const auto rho = scheme_density_matrix(scheme, table, fidelity);
    std::vector<double> out;
    out.reserve(table.lines());
    for (std::size_t i = 0; i < table.lines(); ++i) {
        const auto sigma = materialize(assignment.observables[i]);
        const double expec = trace_of_product(rho, sigma).real();
        const double sign = table.value(i) == 0 ? 1.0 : -1.0;
        out.push_back(0.5 * (1.0 + sign * expec));
    }
    return out;
}

}  // namespace qotp
