#ifndef CHANALLOC_CHANNEL_MODEL_HPP_
#define CHANALLOC_CHANNEL_MODEL_HPP_

#include <limits>

#include "chanalloc/matrix.hpp"
#include "chanalloc/topology.hpp"

namespace chanalloc {

/// Per-instance channel data derived from a topology:
///   - interference_radius: raw d_s per (user, channel), capped at d_max but
///     not floored, so it may be below d_min or negative when the user sits
///     inside a protection area (kept for diagnostics and for the conflict
///     predicate, which uses the raw value);
///   - availability: 1 iff d_s >= d_min;
///   - reward: d_s^2 (km^2) on available cells, 0 elsewhere;
///   - conflict: 1 iff two users' interference ranges overlap on a channel.
struct ChannelModel {
    std::size_t num_users = 0;
    std::size_t num_channels = 0;
    Matrix<double> interference_radius; // N x M, km
    Matrix<std::uint8_t> availability; // N x M
    Matrix<double> reward; // N x M, km^2
    ConflictTensor conflict; // N x N x M

    friend bool operator==(const ChannelModel&, const ChannelModel&) = default;
};

/// Interference-range radius of secondary user n on channel m:
/// min(d_max, min over primary users on m of (distance - protection radius)).
/// The inner minimum over no primary users is +inf, so the result is d_max
/// when channel m is unused by primaries. May be <= 0 inside a protection
/// area.
inline double compute_interference_radius(const Topology& topo, std::size_t n, std::size_t m)
{
    double nearest = std::numeric_limits<double>::infinity();
    for (const PrimaryUser& pu : topo.pus) {
        if (pu.channel != m)
            continue;
        const double margin = distance(topo.sus[n], pu.position) - pu.protection_radius;
        if (margin < nearest)
            nearest = margin;
    }
    return nearest < topo.d_max ? nearest : topo.d_max;
}

/// Builds availability, reward, and conflict matrices for a topology. A cell
/// is available iff its radius reaches d_min (boundary counts as available).
/// Conflicts are recorded from the raw radii for every user pair and channel,
/// including channels one side cannot use; such entries never bind because an
/// unavailable channel cannot be assigned.
inline ChannelModel build_channel_model(const Topology& topo)
{
    const std::size_t n_users = topo.sus.size();
    const std::size_t n_channels = topo.num_channels;

    ChannelModel model;
    model.num_users = n_users;
    model.num_channels = n_channels;
    model.interference_radius = Matrix<double>(n_users, n_channels);
    model.availability = Matrix<std::uint8_t>(n_users, n_channels);
    model.reward = Matrix<double>(n_users, n_channels);
    model.conflict = ConflictTensor(n_users, n_channels);

    for (std::size_t n = 0; n < n_users; ++n) {
        for (std::size_t m = 0; m < n_channels; ++m) {
            const double ds = compute_interference_radius(topo, n, m);
            model.interference_radius(n, m) = ds;
            if (ds >= topo.d_min) {
                model.availability(n, m) = 1;
                model.reward(n, m) = ds * ds;
            } else {
                model.availability(n, m) = 0;
                model.reward(n, m) = 0.0;
            }
        }
    }

    for (std::size_t n = 0; n + 1 < n_users; ++n) {
        for (std::size_t i = n + 1; i < n_users; ++i) {
            const double dist = distance(topo.sus[n], topo.sus[i]);
            for (std::size_t m = 0; m < n_channels; ++m) {
                const double reach = model.interference_radius(n, m) + model.interference_radius(i, m);
                const std::uint8_t interferes = reach >= dist ? 1 : 0;
                model.conflict(n, i, m) = interferes;
                model.conflict(i, n, m) = interferes;
            }
        }
    }

    return model;
}

} // namespace chanalloc

#endif // CHANALLOC_CHANNEL_MODEL_HPP_
