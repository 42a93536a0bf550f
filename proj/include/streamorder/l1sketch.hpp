#pragma once

// Stream-friendly linear l1-norm sketch: d Cauchy random projections whose
// columns are regenerated on demand from (seed, row, index), with the
// median-of-absolute-coordinates estimator (median |Cauchy| = tan(pi/4) = 1,
// so no rescaling is needed). Supports estimating ||x - y||_1 for an implicit
// vector y without ever materializing x.

#include "streamorder/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamorder {

inline constexpr double kSketchRowConstant = 48.0; // rows = ceil(c * eps^-2 * ln(1/delta))

class L1Sketch {
public:
    // ln(1/delta) is passed through explicitly by the named constructor so
    // callers can use delta values like 1/(3 * n!) without underflow.
    L1Sketch(uint64_t dim, double eps, double delta, uint64_t seed,
             double c_rows = kSketchRowConstant);
    static L1Sketch with_log_inv_delta(uint64_t dim, double eps, double log_inv_delta,
                                       uint64_t seed, double c_rows = kSketchRowConstant);

    uint64_t dim() const { return dim_; }
    uint64_t rows() const { return (uint64_t)acc_.size(); }
    double eps() const { return eps_; }
    double delta() const { return delta_; }
    uint64_t seed() const { return seed_; }
    const std::vector<double>& accumulators() const { return acc_; }

    // acc += value * column(seed, index); linear in `value`.
    void update(uint64_t index, double value);

    // Estimate of ||x||_1 for the streamed x: median of |acc|.
    double estimate() const;

    // Estimate of ||x - y||_1 where y is given as a sparse list of
    // (index, value) pairs in strictly ascending index order. S(y) is
    // accumulated in that canonical order, so feeding back exactly the
    // streamed updates yields an exact zero.
    double estimate_diff(const std::vector<std::pair<uint64_t, double>>& y) const;

    double column_value(uint64_t row, uint64_t index) const {
        return cauchy_variate(seed_, row, index);
    }

    // Entrywise sum of two sketches of the same shape and seed.
    L1Sketch& operator+=(const L1Sketch& other);

    // Binary blob: little-endian u64 dim, u64 rows, f64 eps, f64 delta,
    // u64 seed, then rows f64 accumulators.
    std::vector<uint8_t> serialize() const;
    static L1Sketch deserialize(const std::vector<uint8_t>& blob);

private:
    L1Sketch() = default;

    uint64_t dim_ = 0;
    double eps_ = 0.0;
    double delta_ = 0.0;
    uint64_t seed_ = 0;
    std::vector<double> acc_;
};

// Median of |values| (upper median for even counts); shared by the sketch and
// the candidate-order search.
double median_abs(std::vector<double> values);

} // namespace streamorder
