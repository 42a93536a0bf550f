#pragma once

// Ordered partition of the vertex set into consecutive blocks, used by the
// pivot-based orderers: blocks are refined in place and their left-to-right
// order is the partial output ordering.

#include "streamorder/graphcore.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace streamorder {

struct OrderedPartition {
    std::vector<std::vector<VertexId>> groups;
    std::vector<uint32_t> group_of;

    explicit OrderedPartition(uint32_t n) : group_of(n, 0) {
        groups.emplace_back(n);
        std::iota(groups[0].begin(), groups[0].end(), VertexId{0});
    }

    void renumber() {
        for (uint32_t g = 0; g < (uint32_t)groups.size(); ++g)
            for (VertexId v : groups[g]) group_of[v] = g;
    }

    uint64_t max_group_size() const {
        uint64_t mx = 0;
        for (const auto& g : groups) mx = std::max<uint64_t>(mx, g.size());
        return mx;
    }

    // Replace group g by the given non-empty pieces, preserving block order.
    void split(uint32_t g, std::vector<std::vector<VertexId>>&& pieces) {
        groups.erase(groups.begin() + g);
        groups.insert(groups.begin() + g, std::make_move_iterator(pieces.begin()),
                      std::make_move_iterator(pieces.end()));
        renumber();
    }

    Order flatten() const {
        Order order;
        order.reserve(group_of.size());
        for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());
        return order;
    }
};

} // namespace streamorder
