#pragma once

#include <cmath>
#include <vector>

#include "ranet/errors.hpp"

namespace ranet::sim {

// Relay chain sizing: how many nodes bridge target_distance when each radio
// link spans at most radio_range meters. Node i sits at min(i*range, distance).
struct ChainPlan {
    double target_distance = 0.0;
    double radio_range = 100.0;
    std::size_t node_count = 0;
    std::vector<double> node_positions;
};

inline ChainPlan plan_chain(double distance, double range) {
    if (!(distance > 0.0) || !(range > 0.0)) {
        throw InvalidPlanError("plan_chain: distance and range must be positive");
    }
    std::size_t count = static_cast<std::size_t>(std::ceil(distance / range));
    // Guard the exact-multiple boundary against floating division artifacts.
    if (count > 1 && (static_cast<double>(count) - 1.0) * range >= distance) {
        --count;
    }
    ChainPlan plan;
    plan.target_distance = distance;
    plan.radio_range = range;
    plan.node_count = count;
    plan.node_positions.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        plan.node_positions.push_back(std::min(static_cast<double>(i) * range, distance));
    }
    return plan;
}

} // namespace ranet::sim
