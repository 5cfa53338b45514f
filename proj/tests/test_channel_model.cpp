#include <catch2/catch_amalgamated.hpp>

#include "chanalloc/channel_model.hpp"
#include "chanalloc/topology.hpp"

using namespace chanalloc;

namespace {

Topology bare_topology(std::size_t num_channels, double d_min, double d_max)
{
    Topology topo;
    topo.area_side = 20.0;
    topo.num_channels = num_channels;
    topo.d_min = d_min;
    topo.d_max = d_max;
    return topo;
}

} // namespace

TEST_CASE("interference radius follows the nearest protecting primary")
{
    Topology topo = bare_topology(2, 1.0, 4.0);
    topo.sus.push_back({ 0.0, 0.0 });

    SECTION("no primary on the channel gives d_max")
    {
        CHECK(compute_interference_radius(topo, 0, 0) == 4.0);
    }

    SECTION("a distant primary leaves the cap binding")
    {
        topo.pus.push_back({ { 10.0, 0.0 }, 0, 3.0 });
        CHECK(compute_interference_radius(topo, 0, 0) == 4.0); // min(4, 10-3)
        CHECK(compute_interference_radius(topo, 0, 1) == 4.0); // other channel unaffected
    }

    SECTION("inside a protection area the radius goes negative")
    {
        topo.pus.push_back({ { 2.0, 0.0 }, 0, 3.0 });
        CHECK(compute_interference_radius(topo, 0, 0) == -1.0);
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.availability(0, 0) == 0);
        CHECK(model.reward(0, 0) == 0.0);
    }

    SECTION("the nearest margin wins among several primaries")
    {
        topo.pus.push_back({ { 10.0, 0.0 }, 0, 3.0 }); // margin 7
        topo.pus.push_back({ { 3.0, 0.0 }, 0, 1.5 }); // margin 1.5
        CHECK(compute_interference_radius(topo, 0, 0) == 1.5);
    }
}

TEST_CASE("availability and reward follow the d_min threshold")
{
    Topology topo = bare_topology(1, 1.0, 4.0);
    topo.sus.push_back({ 0.0, 0.0 });

    SECTION("radius below d_min closes the channel")
    {
        topo.pus.push_back({ { 2.0, 0.0 }, 0, 1.5 }); // d_s = 0.5
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.interference_radius(0, 0) == 0.5);
        CHECK(model.availability(0, 0) == 0);
        CHECK(model.reward(0, 0) == 0.0);
    }

    SECTION("radius exactly d_min counts as available")
    {
        topo.pus.push_back({ { 2.5, 0.0 }, 0, 1.5 }); // d_s = 1.0 = d_min
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.availability(0, 0) == 1);
        CHECK(model.reward(0, 0) == 1.0);
    }

    SECTION("unconstrained radius rewards d_max squared")
    {
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.availability(0, 0) == 1);
        CHECK(model.reward(0, 0) == 16.0);
    }
}

TEST_CASE("conflicts compare pair distance against summed radii")
{
    Topology topo = bare_topology(2, 1.0, 4.0);
    topo.sus.push_back({ 0.0, 0.0 });

    SECTION("ranges reaching each other interfere")
    {
        topo.sus.push_back({ 5.0, 0.0 }); // both d_s = 4, 4+4 >= 5
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.conflict(0, 1, 0) == 1);
        CHECK(model.conflict(0, 1, 1) == 1);
    }

    SECTION("ranges falling short do not")
    {
        topo.sus.push_back({ 9.0, 0.0 }); // 4+4 < 9
        const ChannelModel model = build_channel_model(topo);
        CHECK(model.conflict(0, 1, 0) == 0);
    }

    SECTION("conflicts are recorded even when one side cannot use the channel")
    {
        topo.sus.push_back({ 3.0, 0.0 });
        topo.pus.push_back({ { 0.0, 2.3 }, 0, 1.5 });
        const ChannelModel model = build_channel_model(topo);
        REQUIRE(model.availability(0, 0) == 0); // d_s = 0.8 < d_min
        REQUIRE(model.availability(1, 0) == 1);
        // raw radii: 0.8 + ~2.28 >= 3, so the pair is still marked.
        CHECK(model.conflict(0, 1, 0) == 1);
    }
}

TEST_CASE("conflict tensor is symmetric with a zero diagonal and matches its definition")
{
    const Topology topo = generate_topology(99, 20.0, 6, 7, 4, 1.0, 4.0, { 1.0, 3.0 });
    const ChannelModel model = build_channel_model(topo);
    for (std::size_t n = 0; n < model.num_users; ++n) {
        for (std::size_t k = 0; k < model.num_users; ++k) {
            for (std::size_t m = 0; m < model.num_channels; ++m) {
                CHECK(model.conflict(n, k, m) == model.conflict(k, n, m));
                if (n == k) {
                    CHECK(model.conflict(n, k, m) == 0);
                } else {
                    const bool expected = distance(topo.sus[n], topo.sus[k])
                        <= model.interference_radius(n, m) + model.interference_radius(k, m);
                    CHECK(model.conflict(n, k, m) == (expected ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("reward equals availability times squared radius, within the configured band")
{
    const Topology topo = generate_topology(1234, 20.0, 10, 8, 3, 1.0, 4.0, { 1.0, 3.0 });
    const ChannelModel model = build_channel_model(topo);
    for (std::size_t n = 0; n < model.num_users; ++n) {
        for (std::size_t m = 0; m < model.num_channels; ++m) {
            const double ds = model.interference_radius(n, m);
            if (model.availability(n, m)) {
                CHECK(model.reward(n, m) == ds * ds);
                CHECK(model.reward(n, m) >= 1.0);
                CHECK(model.reward(n, m) <= 16.0);
            } else {
                CHECK(model.reward(n, m) == 0.0);
            }
        }
    }
}

TEST_CASE("removing every primary from a channel never shrinks radii or availability")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Topology topo = generate_topology(seed, 20.0, 8, 5, 3, 1.0, 4.0, { 1.0, 3.0 });
        const ChannelModel before = build_channel_model(topo);

        Topology cleared = topo;
        std::erase_if(cleared.pus, [](const PrimaryUser& pu) { return pu.channel == 0; });
        const ChannelModel after = build_channel_model(cleared);

        for (std::size_t n = 0; n < before.num_users; ++n) {
            CHECK(after.interference_radius(n, 0) >= before.interference_radius(n, 0));
            CHECK(after.availability(n, 0) >= before.availability(n, 0));
        }
    }
}
