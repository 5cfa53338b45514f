#ifndef CHANALLOC_TOPOLOGY_HPP_
#define CHANALLOC_TOPOLOGY_HPP_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chanalloc/geometry.hpp"
#include "chanalloc/rng.hpp"

namespace chanalloc {

/// Licensed channel holder. Secondary users must stay out of the circular
/// protection area around its position on its channel.
struct PrimaryUser {
    Point position;
    std::size_t channel = 0; // in [0, num_channels)
    double protection_radius = 0.0; // km, > 0

    friend bool operator==(const PrimaryUser&, const PrimaryUser&) = default;
};

/// Geometric network instance: primary and secondary users in a square area,
/// plus the transmit-power proxies d_min/d_max bounding every secondary
/// user's interference range.
struct Topology {
    double area_side = 0.0; // km
    std::size_t num_channels = 0;
    double d_min = 0.0; // km
    double d_max = 0.0; // km
    std::vector<PrimaryUser> pus;
    std::vector<Point> sus;

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Draws a random topology. All randomness flows from `seed` through one
/// mt19937_64 stream in a fixed order: for each primary user x, y, channel,
/// protection radius; then for each secondary user x, y. Same seed, same
/// topology, bit for bit.
inline Topology generate_topology(std::uint64_t seed, double area_side,
    std::size_t num_pus, std::size_t num_sus, std::size_t num_channels,
    double d_min, double d_max, std::pair<double, double> protection_radius_range)
{
    if (!(area_side > 0.0))
        throw std::invalid_argument("generate_topology: area_side must be positive");
    if (!(d_min > 0.0) || d_min > d_max)
        throw std::invalid_argument("generate_topology: require 0 < d_min <= d_max");
    if (num_pus > 0 && num_channels == 0)
        throw std::invalid_argument("generate_topology: primary users need at least one channel");
    const auto [dp_lo, dp_hi] = protection_radius_range;
    if (!(dp_lo > 0.0) || dp_lo > dp_hi)
        throw std::invalid_argument("generate_topology: protection radius interval must be positive and non-empty");

    Topology topo;
    topo.area_side = area_side;
    topo.num_channels = num_channels;
    topo.d_min = d_min;
    topo.d_max = d_max;
    topo.pus.reserve(num_pus);
    topo.sus.reserve(num_sus);

    Rng rng(seed);
    for (std::size_t k = 0; k < num_pus; ++k) {
        PrimaryUser pu;
        pu.position.x = rng.uniform(0.0, area_side);
        pu.position.y = rng.uniform(0.0, area_side);
        pu.channel = rng.uniform_index(num_channels);
        pu.protection_radius = rng.uniform(dp_lo, dp_hi);
        topo.pus.push_back(pu);
    }
    for (std::size_t n = 0; n < num_sus; ++n) {
        Point p;
        p.x = rng.uniform(0.0, area_side);
        p.y = rng.uniform(0.0, area_side);
        topo.sus.push_back(p);
    }
    return topo;
}

} // namespace chanalloc

#endif // CHANALLOC_TOPOLOGY_HPP_
