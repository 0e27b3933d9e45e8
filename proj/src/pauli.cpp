#include "qotp/pauli.hpp"

#include <stdexcept>

namespace qotp {

namespace {

ComplexMatrix make_pauli(char letter) {
    ComplexMatrix m(2, 2);
    switch (letter) {
        case 'I': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 'X': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'Y': m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
        case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + letter);
    }
    return m;
}

void validate_letters(const std::string& letters) {
    if (letters.empty()) throw std::invalid_argument("PauliString: empty letters");
    for (char c : letters)
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument(std::string("PauliString: bad letter ") + c);
}

}  // namespace

PauliString::PauliString(int s, std::string l) : sign(s), letters(std::move(l)) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("PauliString: sign must be +-1");
    validate_letters(letters);
}

PauliString::PauliString(const std::string& text) {
    std::size_t start = 0;
    sign = +1;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-' ? -1 : +1;
        start = 1;
    }
    letters = text.substr(start);
    validate_letters(letters);
}

const ComplexMatrix& pauli_letter_matrix(char letter) {
    static const ComplexMatrix I = make_pauli('I');
    static const ComplexMatrix X = make_pauli('X');
    static const ComplexMatrix Y = make_pauli('Y');
    static const ComplexMatrix Z = make_pauli('Z');
    switch (letter) {
        case 'I': return I;
        case 'X': return X;
        case 'Y': return Y;
        case 'Z': return Z;
        default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + letter);
    }
}

ComplexMatrix materialize(const PauliString& p) {
    ComplexMatrix acc = pauli_letter_matrix(p.letters[0]);
    for (std::size_t i = 1; i < p.letters.size(); ++i)
        acc = kron(acc, pauli_letter_matrix(p.letters[i]));
    if (p.sign < 0) acc *= cplx(-1.0, 0.0);
    return acc;
}

bool anticommutes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("anticommutes: qubit count mismatch");
    int odd = 0;
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        char la = a.letters[i], lb = b.letters[i];
        if (la != 'I' && lb != 'I' && la != lb) odd ^= 1;
    }
    return odd == 1;
}

namespace {

// Recursive split on {I, X, Z}: the last qubit carries Z for the first half
// of the family and X for the second half, with a smaller family on the
// left / right sub-block respectively. Gives 2^k strings on 2^k - 1 qubits,
// ordered so that index i corresponds to gate input i (big-endian bits).
std::vector<std::string> xz_family(int k) {
    if (k == 1) return {"Z", "X"};
    auto sub = xz_family(k - 1);
    const std::size_t w = sub[0].size();
    std::vector<std::string> out;
    out.reserve(2 * sub.size());
    const std::string pad(w, 'I');
    for (const auto& b : sub) out.push_back(b + pad + "Z");
    for (const auto& c : sub) out.push_back(pad + c + "X");
    return out;
}

// Chain construction on m = 2^{k-1} qubits: Z^m first, then the pairs
// Z^{i-1} X I... and Z^{i-1} Y I..., truncated to 2^k strings. Leading with
// Z^m keeps the k = 1 family equal to {Z, X}.
std::vector<std::string> chain_family(int k) {
    const std::size_t m = std::size_t(1) << (k - 1);
    const std::size_t want = std::size_t(1) << k;
    std::vector<std::string> out;
    out.reserve(want);
    out.push_back(std::string(m, 'Z'));
    for (std::size_t i = 0; i < m && out.size() < want; ++i) {
        std::string x(m, 'I'), y(m, 'I');
        for (std::size_t j = 0; j < i; ++j) { x[j] = 'Z'; y[j] = 'Z'; }
        x[i] = 'X';
        y[i] = 'Y';
        out.push_back(x);
        if (out.size() < want) out.push_back(y);
    }
    return out;
}

}  // namespace

std::vector<PauliString> anticommuting_family(int k, bool xz_only) {
    if (k < 1) throw std::invalid_argument("anticommuting_family: k must be >= 1");
    if (k > 16) throw std::invalid_argument("anticommuting_family: k too large");
    auto raw = xz_only ? xz_family(k) : chain_family(k);
    std::vector<PauliString> out;
    out.reserve(raw.size());
    for (auto& s : raw) out.emplace_back(+1, std::move(s));
    return out;
}

}  // namespace qotp
