#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qotp {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Small sizes only (<= 1024); everything
// here favours clarity over blocking tricks.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix dagger() const;
    cplx trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }

    // max entrywise |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& o) const;
    double max_abs() const;

    bool is_hermitian(double tol = 1e-12) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

// Reference kernels. Always single-threaded; kept as the ground truth the
// parallel versions are tested and benchmarked against.
namespace serial {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace serial

// OpenMP kernels.
namespace par {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace par

// Dispatchers: parallel above a size cutoff, serial below it.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const std::vector<ComplexMatrix>& factors);

// A^{\otimes n}
ComplexMatrix tensor_power(const ComplexMatrix& a, std::size_t n);

// tr(A B) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qotp
