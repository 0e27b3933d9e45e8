#include "qotp/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qotp {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) return false;
    return max_abs_diff(dagger()) <= tol;
}

namespace {
void check_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
}
void check_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() == 0 || b.rows() == 0) throw std::invalid_argument("kron: empty factor");
}
}  // namespace

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_mul(a, b);
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    ComplexMatrix c(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = a(i, l);
            if (av == cplx(0.0, 0.0)) continue;
            const cplx* brow = b.data() + l * m;
            cplx* crow = c.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_kron(a, b);
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx av = a(ia, ja);
            if (av == cplx(0.0, 0.0)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
        }
    return c;
}

}  // namespace serial

namespace par {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_mul(a, b);
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    ComplexMatrix c(n, m);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = a(i, l);
            if (av == cplx(0.0, 0.0)) continue;
            const cplx* brow = b.data() + l * m;
            cplx* crow = c.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_kron(a, b);
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ib = 0; ib < b.rows(); ++ib) {
            for (std::size_t ja = 0; ja < a.cols(); ++ja) {
                const cplx av = a(ia, ja);
                if (av == cplx(0.0, 0.0)) continue;
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
            }
        }
    return c;
}

}  // namespace par

namespace {
// below this row count the threading overhead dominates
constexpr std::size_t kParallelCutoff = 96;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows() >= kParallelCutoff ? par::matmul(a, b) : serial::matmul(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows() * b.rows() >= kParallelCutoff ? par::kron(a, b) : serial::kron(a, b);
}

ComplexMatrix kron(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) throw std::invalid_argument("kron: empty factor list");
    ComplexMatrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

ComplexMatrix tensor_power(const ComplexMatrix& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("tensor_power: zero exponent");
    ComplexMatrix acc = a;
    for (std::size_t i = 1; i < n; ++i) acc = kron(acc, a);
    return acc;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("trace_of_product: shape mismatch");
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

}  // namespace qotp
