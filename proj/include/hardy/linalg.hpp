#pragma once

#include <cstddef>
#include <vector>

namespace hardy {

/// Dense symmetric matrix with full row-major storage.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Sets entries (i, j) and (j, i) together.
    void set(std::size_t i, std::size_t j, double v)
    {
        data_[i * n_ + j] = v;
        data_[j * n_ + i] = v;
    }

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct EigenMinResult {
    double value = 0.0;
    int iterations = 0; ///< bisection steps
};

/// Smallest eigenvalue of a symmetric matrix.
///
/// Householder reduction to tridiagonal form (skipped when the input is
/// already tridiagonal), then bisection on the Sturm sequence count. The
/// result is within 1e-10 * ||A||_inf of the exact value and is bitwise
/// reproducible.
EigenMinResult symmetric_eigen_min(const SymmetricMatrix& a);

/// Smallest eigenvalue of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal (off.size() == diag.size() - 1).
EigenMinResult tridiagonal_eigen_min(const std::vector<double>& diag, const std::vector<double>& off);

} // namespace hardy
