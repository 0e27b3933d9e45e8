#include "qotp/eig.hpp"

#include "qotp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qotp {

ComplexMatrix EigenDecomposition::reconstruct() const {
    const std::size_t n = values.size();
    ComplexMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = values[i];
    return matmul(matmul(vectors, lam), vectors.dagger());
}

namespace {

constexpr double kOffDiagTol = 1e-12;
constexpr int kMaxSweeps = 100;

double max_offdiag(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

// One complex Jacobi rotation zeroing a(p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    double t;
    if (app == aqq) {
        t = 1.0;
    } else {
        const double tau = (app - aqq) / (2.0 * r);
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx s = t * c * phase;  // |s|^2 + c^2 = 1

    const std::size_t n = a.rows();
    // columns: A <- A J with J[p][p]=c, J[p][q]=-conj? ; apply as pair updates
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip + std::conj(s) * aiq;
        a(i, q) = -s * aip + c * aiq;
    }
    // rows: A <- J^dagger A
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj + s * aqj;
        a(q, j) = -std::conj(s) * apj + c * aqj;
    }
    // accumulate eigenvectors: V <- V J
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip + std::conj(s) * viq;
        v(i, q) = -s * vip + c * viq;
    }
    // clean up rounding residue on the pivot
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& m, double hermitian_tol) {
    if (!m.is_square()) throw std::invalid_argument("eig_hermitian: non-square matrix");
    if (m.rows() > kMaxDenseDim)
        throw ResourceLimitError("eig_hermitian: dimension " + std::to_string(m.rows()) +
                                 " exceeds cap " + std::to_string(kMaxDenseDim));
    if (!m.is_hermitian(hermitian_tol))
        throw std::invalid_argument("eig_hermitian: matrix not Hermitian within tolerance");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (max_offdiag(a) <= kOffDiagTol) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > kOffDiagTol) rotate(a, v, p, q);
    }

    EigenDecomposition out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return diag[x] > diag[y];
    });

    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

double trace_norm(const ComplexMatrix& m) {
    auto e = eig_hermitian(m);
    double s = 0.0;
    for (double lam : e.values) s += std::abs(lam);
    return s;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * trace_norm(a - b);
}

ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& m, double cutoff) {
    auto e = eig_hermitian(m);
    const std::size_t n = e.values.size();
    for (double lam : e.values)
        if (lam < -cutoff)
            throw NotPsdError("inv_sqrt_on_support: eigenvalue " + std::to_string(lam) +
                              " below -cutoff");
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d(i, i) = e.values[i] > cutoff ? 1.0 / std::sqrt(e.values[i]) : 0.0;
    return matmul(matmul(e.vectors, d), e.vectors.dagger());
}

ComplexMatrix support_projector(const ComplexMatrix& m, double cutoff) {
    auto e = eig_hermitian(m);
    const std::size_t n = e.values.size();
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = std::abs(e.values[i]) > cutoff ? 1.0 : 0.0;
    return matmul(matmul(e.vectors, d), e.vectors.dagger());
}

double von_neumann_entropy(const ComplexMatrix& rho, double cutoff) {
    auto e = eig_hermitian(rho);
    double s = 0.0;
    for (double lam : e.values) {
        if (lam < -cutoff) throw NotPsdError("von_neumann_entropy: negative eigenvalue");
        if (lam > cutoff) s -= lam * std::log2(lam);
    }
    return s;
}

std::size_t rank_above(const ComplexMatrix& m, double cutoff) {
    auto e = eig_hermitian(m);
    std::size_t r = 0;
    for (double lam : e.values)
        if (std::abs(lam) > cutoff) ++r;
    return r;
}

double operator_norm(const ComplexMatrix& m) {
    auto gram = matmul(m.dagger(), m);
    auto e = eig_hermitian(gram, 1e-9);
    double top = e.values.empty() ? 0.0 : std::max(0.0, e.values.front());
    return std::sqrt(top);
}

double min_eigenvalue(const ComplexMatrix& m) {
    auto e = eig_hermitian(m);
    return e.values.back();
}

}  // namespace qotp
