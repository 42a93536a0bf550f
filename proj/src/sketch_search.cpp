#include "streamorder/sketch_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streamorder {

namespace {

// Upper median of |values| on the float scratch path.
float median_abs_f(std::vector<float>& scratch, const std::vector<float>& values) {
    scratch.resize(values.size());
    for (size_t i = 0; i < values.size(); ++i) scratch[i] = std::fabs(values[i]);
    size_t mid = scratch.size() / 2;
    std::nth_element(scratch.begin(), scratch.begin() + (ptrdiff_t)mid, scratch.end());
    return scratch[mid];
}

} // namespace

OrderSearchResult search_min_estimate_order(const L1Sketch& sketch, uint32_t n, double scale) {
    const uint64_t pairs = (uint64_t)n * (n - 1) / 2;
    if (sketch.dim() != pairs)
        throw std::invalid_argument("sketch dimension does not match vertex count");

    OrderSearchResult result;
    if (n <= 1) {
        result.order.assign(n, 0);
        result.estimate = sketch.rows() ? sketch.estimate() : 0.0;
        result.candidates = 1;
        return result;
    }

    const size_t d = (size_t)sketch.rows();
    const double* acc = sketch.accumulators().data();

    // Materialize the pair columns once (column-major, contiguous per pair).
    std::vector<float> cols((size_t)pairs * d);
    std::vector<double> identity_sum(d, 0.0);
    for (uint64_t j = 0; j < pairs; ++j) {
        float* col = cols.data() + (size_t)j * d;
        for (size_t r = 0; r < d; ++r) {
            double c = sketch.column_value(r, j);
            col[r] = (float)c;
            identity_sum[r] += (double)col[r];
        }
    }

    // The identity ordering places u before v for every id pair u < v, so its
    // y vector sets every pair entry to `scale`.
    std::vector<float> diff(d);
    for (size_t r = 0; r < d; ++r) diff[r] = (float)(acc[r] - scale * identity_sum[r]);

    std::vector<float> scratch;
    Order perm(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;

    float best = median_abs_f(scratch, diff);
    Order best_order = perm;
    uint64_t candidates = 1;

    const float scale_f = (float)scale;
    const size_t need = d / 2 + 1; // entries <= best required for median <= best
    std::vector<int> dir(n, -1);   // per-value direction for the transposition walk

    for (;;) {
        // Largest value whose neighbor in its direction is smaller.
        int mobile_pos = -1;
        uint32_t mobile_val = 0;
        for (uint32_t i = 0; i < n; ++i) {
            uint32_t v = perm[i];
            int j = (int)i + dir[v];
            if (j < 0 || j >= (int)n) continue;
            if (perm[(uint32_t)j] < v && (mobile_pos < 0 || v > mobile_val)) {
                mobile_pos = (int)i;
                mobile_val = v;
            }
        }
        if (mobile_pos < 0) break;

        int step = dir[mobile_val];
        uint32_t other = perm[(uint32_t)(mobile_pos + step)];
        std::swap(perm[(uint32_t)mobile_pos], perm[(uint32_t)(mobile_pos + step)]);
        for (uint32_t v = mobile_val + 1; v < n; ++v) dir[v] = -dir[v];

        // Only the pair {other, mobile_val} flips: moving right puts the
        // smaller id first (its y entry turns on), moving left turns it off.
        uint64_t j = Tournament::pair_index(other, mobile_val, n);
        const float* col = cols.data() + (size_t)j * d;
        const float s = (step > 0) ? -scale_f : scale_f;

        size_t cnt_le = 0;
        const float bound = best;
        float* dp = diff.data();
        for (size_t r = 0; r < d; ++r) {
            float v = dp[r] + s * col[r];
            dp[r] = v;
            cnt_le += (std::fabs(v) <= bound) ? 1u : 0u;
        }
        ++candidates;

        if (cnt_le >= need) {
            float med = median_abs_f(scratch, diff);
            if (med < best ||
                (med == best && std::lexicographical_compare(perm.begin(), perm.end(),
                                                             best_order.begin(), best_order.end()))) {
                best = med;
                best_order = perm;
            }
        }
    }

    result.order = std::move(best_order);
    result.estimate = (double)best;
    result.candidates = candidates;
    return result;
}

std::vector<std::pair<uint64_t, double>> order_indicator_vector(const Order& order, double scale) {
    const uint32_t n = (uint32_t)order.size();
    std::vector<uint32_t> pos = position_of(order);
    std::vector<std::pair<uint64_t, double>> y;
    y.reserve((size_t)n * (n - 1) / 2);
    for (uint32_t u = 0; u + 1 < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (pos[u] < pos[v])
                y.emplace_back(Tournament::pair_index(u, v, n), scale);
    return y;
}

} // namespace streamorder
