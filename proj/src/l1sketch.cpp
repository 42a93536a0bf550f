#include "streamorder/l1sketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace streamorder {

namespace {

uint64_t rows_for(double eps, double log_inv_delta, double c_rows) {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("sketch eps must lie in (0,1)");
    if (log_inv_delta <= 0.0)
        throw std::invalid_argument("sketch ln(1/delta) must be positive");
    double d = std::ceil(c_rows / (eps * eps) * log_inv_delta);
    if (!(d >= 1.0) || d > 4e7)
        throw std::invalid_argument("sketch row count out of range: " + std::to_string(d));
    return (uint64_t)d;
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back((uint8_t)(v >> (8 * i)));
}

void put_f64(std::vector<uint8_t>& out, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

uint64_t get_u64(const std::vector<uint8_t>& in, size_t& pos) {
    if (pos + 8 > in.size()) throw std::invalid_argument("sketch blob truncated");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= (uint64_t)in[pos + i] << (8 * i);
    pos += 8;
    return v;
}

double get_f64(const std::vector<uint8_t>& in, size_t& pos) {
    uint64_t bits = get_u64(in, pos);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

L1Sketch::L1Sketch(uint64_t dim, double eps, double delta, uint64_t seed, double c_rows)
    : dim_(dim), eps_(eps), delta_(delta), seed_(seed) {
    if (delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("sketch delta must lie in (0,1)");
    acc_.assign(rows_for(eps, std::log(1.0 / delta), c_rows), 0.0);
}

L1Sketch L1Sketch::with_log_inv_delta(uint64_t dim, double eps, double log_inv_delta,
                                      uint64_t seed, double c_rows) {
    L1Sketch s;
    s.dim_ = dim;
    s.eps_ = eps;
    s.delta_ = std::exp(-log_inv_delta); // informational; may underflow to 0
    s.seed_ = seed;
    s.acc_.assign(rows_for(eps, log_inv_delta, c_rows), 0.0);
    return s;
}

void L1Sketch::update(uint64_t index, double value) {
    if (index >= dim_) throw std::out_of_range("sketch update index out of range");
    const uint64_t d = rows();
    for (uint64_t r = 0; r < d; ++r)
        acc_[r] += value * cauchy_variate(seed_, r, index);
}

double L1Sketch::estimate() const {
    return median_abs(acc_);
}

double L1Sketch::estimate_diff(const std::vector<std::pair<uint64_t, double>>& y) const {
    const uint64_t d = rows();
    std::vector<double> residual(acc_);
    uint64_t prev_plus_one = 0;
    for (const auto& [index, value] : y) {
        if (index >= dim_) throw std::out_of_range("sketch y index out of range");
        if (index + 1 <= prev_plus_one)
            throw std::invalid_argument("sketch y indices must strictly ascend");
        prev_plus_one = index + 1;
        if (value == 0.0) continue;
        for (uint64_t r = 0; r < d; ++r)
            residual[r] -= value * cauchy_variate(seed_, r, index);
    }
    return median_abs(std::move(residual));
}

L1Sketch& L1Sketch::operator+=(const L1Sketch& other) {
    if (dim_ != other.dim_ || rows() != other.rows() || seed_ != other.seed_)
        throw std::invalid_argument("cannot add sketches with different shapes or seeds");
    for (size_t r = 0; r < acc_.size(); ++r) acc_[r] += other.acc_[r];
    return *this;
}

std::vector<uint8_t> L1Sketch::serialize() const {
    std::vector<uint8_t> out;
    out.reserve(40 + 8 * acc_.size());
    put_u64(out, dim_);
    put_u64(out, rows());
    put_f64(out, eps_);
    put_f64(out, delta_);
    put_u64(out, seed_);
    for (double a : acc_) put_f64(out, a);
    return out;
}

L1Sketch L1Sketch::deserialize(const std::vector<uint8_t>& blob) {
    size_t pos = 0;
    L1Sketch s;
    s.dim_ = get_u64(blob, pos);
    uint64_t d = get_u64(blob, pos);
    s.eps_ = get_f64(blob, pos);
    s.delta_ = get_f64(blob, pos);
    s.seed_ = get_u64(blob, pos);
    if (d == 0 || d > 4e7) throw std::invalid_argument("sketch blob has bad row count");
    s.acc_.resize(d);
    for (uint64_t r = 0; r < d; ++r) s.acc_[r] = get_f64(blob, pos);
    if (pos != blob.size()) throw std::invalid_argument("sketch blob has trailing bytes");
    return s;
}

double median_abs(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty vector");
    for (double& v : values) v = std::fabs(v);
    size_t mid = values.size() / 2; // upper median for even counts
    std::nth_element(values.begin(), values.begin() + (ptrdiff_t)mid, values.end());
    return values[mid];
}

} // namespace streamorder
