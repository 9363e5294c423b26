#include "hardy/linalg.hpp"

#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardy {

namespace {

bool is_tridiagonal(const SymmetricMatrix& a)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (a(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

// Householder reduction of a symmetric matrix to tridiagonal form.
void householder_tridiagonalize(const SymmetricMatrix& input, std::vector<double>& diag, std::vector<double>& off)
{
    const std::size_t n = input.size();
    std::vector<double> a = input.data();
    diag.assign(n, 0.0);
    off.assign(n > 0 ? n - 1 : 0, 0.0);
    std::vector<double> v(n), p(n);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    for (std::size_t k = 0; k + 2 < n; ++k) {
        diag[k] = at(k, k);
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            norm2 += at(i, k) * at(i, k);
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            off[k] = 0.0;
            continue;
        }
        const double x0 = at(k + 1, k);
        const double alpha = x0 > 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = at(i, k);
        }
        v[k + 1] -= alpha;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm2 += v[i] * v[i];
        }
        off[k] = alpha;
        if (vnorm2 == 0.0) {
            continue;
        }
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] *= inv;
        }
        // B <- H B H with H = I - 2 v v^T, written as B - v w^T - w v^T.
        double beta = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = 0.0;
            const double* row = &a[i * n];
            for (std::size_t j = k + 1; j < n; ++j) {
                s += row[j] * v[j];
            }
            p[i] = s;
            beta += v[i] * s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            p[i] = 2.0 * p[i] - 2.0 * beta * v[i];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double* row = &a[i * n];
            const double vi = v[i];
            const double wi = p[i];
            for (std::size_t j = k + 1; j < n; ++j) {
                row[j] -= vi * p[j] + wi * v[j];
            }
        }
    }
    if (n >= 2) {
        diag[n - 2] = at(n - 2, n - 2);
        off[n - 2] = at(n - 1, n - 2);
    }
    if (n >= 1) {
        diag[n - 1] = at(n - 1, n - 1);
    }
}

// Number of eigenvalues strictly below x (Sturm count via the LDL^T pivots).
std::size_t count_below(const std::vector<double>& d, const std::vector<double>& e, double x)
{
    const double tiny = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double q = d[0] - x;
    if (q < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0) {
            q = tiny;
        }
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace

EigenMinResult tridiagonal_eigen_min(const std::vector<double>& diag, const std::vector<double>& off)
{
    const std::size_t n = diag.size();
    if (n == 0) {
        throw DomainError("tridiagonal_eigen_min: empty matrix");
    }
    if (off.size() + 1 != n) {
        throw DomainError("tridiagonal_eigen_min: off-diagonal length must be n - 1");
    }
    if (n == 1) {
        return {diag[0], 0};
    }
    // Gershgorin interval.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::fabs(off[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double pad = 1e-300 + 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi));
    lo -= pad;
    hi += pad;
    int iterations = 0;
    // Invariant: count_below(lo) == 0, count_below(hi) >= 1.
    while (iterations < 2000) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        ++iterations;
        if (count_below(diag, off, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {0.5 * (lo + hi), iterations};
}

EigenMinResult symmetric_eigen_min(const SymmetricMatrix& a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        throw DomainError("symmetric_eigen_min: empty matrix");
    }
    std::vector<double> diag, off;
    if (is_tridiagonal(a)) {
        diag.resize(n);
        off.resize(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            diag[i] = a(i, i);
            if (i + 1 < n) {
                off[i] = a(i + 1, i);
            }
        }
    } else {
        householder_tridiagonalize(a, diag, off);
    }
    return tridiagonal_eigen_min(diag, off);
}

} // namespace hardy
