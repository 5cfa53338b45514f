#ifndef CHANALLOC_FIXTURES_HPP_
#define CHANALLOC_FIXTURES_HPP_

#include <cmath>

#include "chanalloc/channel_model.hpp"
#include "chanalloc/matrix.hpp"

namespace chanalloc {

/// Two users, two channels, every cell worth 16 km^2, and the users in
/// conflict on both channels. The smallest instance with a real trade-off:
/// whatever one user takes, the other loses.
inline ChannelModel two_user_demo_model()
{
    ChannelModel model;
    model.num_users = 2;
    model.num_channels = 2;
    model.interference_radius = Matrix<double>(2, 2, 4.0);
    model.availability = Matrix<std::uint8_t>(2, 2, 1);
    model.reward = Matrix<double>(2, 2, 16.0);
    model.conflict = ConflictTensor(2, 2);
    for (std::size_t m = 0; m < 2; ++m) {
        model.conflict(0, 1, m) = 1;
        model.conflict(1, 0, m) = 1;
    }
    return model;
}

/// Three users, three channels. User 1 conflicts with users 2 and 3 on
/// channels 1 and 3; channel 2 is conflict-free, worth little to user 1 and
/// nothing to user 3 (unavailable there). Users 2 and 3 never conflict.
inline ChannelModel three_user_demo_model()
{
    ChannelModel model;
    model.num_users = 3;
    model.num_channels = 3;
    model.interference_radius = Matrix<double>::from_rows({
        { 4.0, std::sqrt(2.0982), 4.0 },
        { 4.0, 4.0, 4.0 },
        { 4.0, 0.0, 4.0 },
    });
    model.availability = Matrix<std::uint8_t>::from_rows({
        { 1, 1, 1 },
        { 1, 1, 1 },
        { 1, 0, 1 },
    });
    model.reward = Matrix<double>(3, 3);
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t m = 0; m < 3; ++m) {
            const double ds = model.interference_radius(n, m);
            model.reward(n, m) = model.availability(n, m) ? ds * ds : 0.0;
        }
    model.conflict = ConflictTensor(3, 3);
    for (std::size_t m : { std::size_t { 0 }, std::size_t { 2 } }) {
        model.conflict(0, 1, m) = 1;
        model.conflict(1, 0, m) = 1;
        model.conflict(0, 2, m) = 1;
        model.conflict(2, 0, m) = 1;
    }
    return model;
}

/// Payoff matrix of a small continuous two-objective example, used to
/// exercise the reference-point derivations without a solve.
inline Matrix<double> sample_payoff_matrix()
{
    return Matrix<double>::from_rows({
        { 80.0, 300.0 },
        { 16.0, 360.0 },
    });
}

} // namespace chanalloc

#endif // CHANALLOC_FIXTURES_HPP_
