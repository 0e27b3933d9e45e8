#pragma once

#include "qotp/complex_matrix.hpp"

#include <vector>

namespace qotp {

// Matrices above this dimension are rejected instead of running for hours.
inline constexpr std::size_t kMaxDenseDim = 1024;

struct EigenDecomposition {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, same order as values

    ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Throws
// std::invalid_argument if the input is not Hermitian within `hermitian_tol`.
EigenDecomposition eig_hermitian(const ComplexMatrix& m, double hermitian_tol = 1e-12);

// Sum of absolute eigenvalues (Hermitian input required).
double trace_norm(const ComplexMatrix& m);

// (1/2) || a - b ||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues above `cutoff` are mapped to 1/sqrt(lambda); the kernel maps
// to zero. Throws NotPsdError if an eigenvalue is below -cutoff.
ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& m, double cutoff = 1e-10);

// Projector onto the span of eigenvectors with |lambda| > cutoff.
ComplexMatrix support_projector(const ComplexMatrix& m, double cutoff = 1e-10);

// -sum lambda log2(lambda) over eigenvalues above cutoff (PSD input).
double von_neumann_entropy(const ComplexMatrix& rho, double cutoff = 1e-10);

std::size_t rank_above(const ComplexMatrix& m, double cutoff = 1e-10);

// Largest singular value; accepts any square matrix.
double operator_norm(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

}  // namespace qotp
