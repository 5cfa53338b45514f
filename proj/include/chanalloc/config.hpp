#ifndef CHANALLOC_CONFIG_HPP_
#define CHANALLOC_CONFIG_HPP_

#include <cstdint>
#include <vector>

namespace chanalloc {

/// Everything needed to generate and solve one instance. Defaults follow the
/// stock scenario: a 20 km square, interference ranges between 1 and 4 km,
/// protection radii drawn from [1, 3] km.
struct RunConfig {
    std::uint64_t seed = 1;
    double area_side = 20.0; // km
    std::size_t num_pus = 5;
    std::size_t num_sus = 5;
    std::size_t num_channels = 5;
    double d_min = 1.0; // km
    double d_max = 4.0; // km
    double protection_radius_min = 1.0; // km
    double protection_radius_max = 3.0; // km
    std::size_t channel_cap = 0; // 0 = number of channels (cap inactive)
    std::vector<std::size_t> grid_intervals { 20 };
    double epsilon = 1e-6;
    std::size_t main_objective = 1; // 1-based user index
    unsigned threads = 1;
    double time_budget_seconds = 0.0; // 0 = unlimited
};

} // namespace chanalloc

#endif // CHANALLOC_CONFIG_HPP_
