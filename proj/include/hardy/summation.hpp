#pragma once

#include <cmath>

namespace hardy {

/// Neumaier's variant of Kahan summation. The order of add() calls fixes
/// the result bit for bit.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_ += std::fabs(x);
    }

    double value() const { return sum_ + comp_; }
    /// Sum of |x| over all terms; scale for rounding-error tolerances.
    double abs_total() const { return abs_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
};

} // namespace hardy
