#pragma once

#include "qotp/complex_matrix.hpp"

#include <string>
#include <vector>

namespace qotp {

// Signed tensor product of single-qubit Pauli letters, e.g. "-XIZ".
struct PauliString {
    int sign = +1;        // +1 or -1
    std::string letters;  // over {I, X, Y, Z}, one per qubit

    PauliString() = default;
    PauliString(int s, std::string l);
    // parses an optional leading +/- followed by letters
    explicit PauliString(const std::string& text);

    std::size_t num_qubits() const { return letters.size(); }
    std::string str() const { return (sign < 0 ? "-" : "") + letters; }

    bool operator==(const PauliString& o) const = default;
};

const ComplexMatrix& pauli_letter_matrix(char letter);

ComplexMatrix materialize(const PauliString& p);

// Two strings anti-commute iff the number of positions where both letters
// are non-identity and different is odd.
bool anticommutes(const PauliString& a, const PauliString& b);

// 2^k pairwise anti-commuting strings.
//   xz_only = false: 2^{k-1} qubits, letters from {I, X, Y, Z}
//   xz_only = true:  2^k - 1 qubits, letters from {I, X, Z}
// Index 0 measures as sigma_Z-like and index order matches the gate-input
// indexing used by the encoders (input 0 -> Z on a single qubit).
std::vector<PauliString> anticommuting_family(int k, bool xz_only);

}  // namespace qotp
