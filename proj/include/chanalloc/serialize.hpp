#ifndef CHANALLOC_SERIALIZE_HPP_
#define CHANALLOC_SERIALIZE_HPP_

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chanalloc/channel_model.hpp"
#include "chanalloc/pareto.hpp"
#include "chanalloc/problem.hpp"
#include "chanalloc/topology.hpp"

namespace chanalloc {

using nlohmann::json;

/// Shortest round-trip decimal form; identical input bits give identical
/// text, which the golden tests rely on.
inline std::string format_double(double v)
{
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace detail {

    template <typename T>
    json matrix_to_json(const Matrix<T>& m)
    {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(m(r, c));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    template <typename T>
    Matrix<T> matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const char* what)
    {
        if (!j.is_array() || j.size() != rows)
            throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + " rows");
        Matrix<T> m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const json& row = j[r];
            if (!row.is_array() || row.size() != cols)
                throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(cols) + " columns");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = row[c].get<T>();
        }
        return m;
    }

    inline void require_schema(const json& j, const char* schema)
    {
        if (!j.is_object() || j.value("schema", std::string {}) != schema)
            throw std::invalid_argument(std::string("expected schema \"") + schema + "\"");
    }

} // namespace detail

// --- Topology: chanalloc/topology-v1 ---------------------------------------

inline json to_json(const Topology& topo)
{
    json pus = json::array();
    for (const PrimaryUser& pu : topo.pus)
        pus.push_back({ { "x", pu.position.x }, { "y", pu.position.y },
            { "channel", pu.channel }, { "protection_radius", pu.protection_radius } });
    json sus = json::array();
    for (const Point& su : topo.sus)
        sus.push_back({ { "x", su.x }, { "y", su.y } });
    return json {
        { "schema", "chanalloc/topology-v1" },
        { "area_side", topo.area_side },
        { "num_channels", topo.num_channels },
        { "d_min", topo.d_min },
        { "d_max", topo.d_max },
        { "primary_users", std::move(pus) },
        { "secondary_users", std::move(sus) },
    };
}

inline Topology topology_from_json(const json& j)
{
    detail::require_schema(j, "chanalloc/topology-v1");
    Topology topo;
    topo.area_side = j.at("area_side").get<double>();
    topo.num_channels = j.at("num_channels").get<std::size_t>();
    topo.d_min = j.at("d_min").get<double>();
    topo.d_max = j.at("d_max").get<double>();
    for (const json& p : j.at("primary_users")) {
        PrimaryUser pu;
        pu.position = { p.at("x").get<double>(), p.at("y").get<double>() };
        pu.channel = p.at("channel").get<std::size_t>();
        pu.protection_radius = p.at("protection_radius").get<double>();
        if (pu.channel >= topo.num_channels)
            throw std::invalid_argument("topology: primary user channel out of range");
        topo.pus.push_back(pu);
    }
    for (const json& p : j.at("secondary_users"))
        topo.sus.push_back({ p.at("x").get<double>(), p.at("y").get<double>() });
    return topo;
}

// --- ChannelModel: chanalloc/channel-model-v1 -------------------------------
// The conflict tensor is stored channel-major: conflict[m] is the N x N
// symmetric 0/1 matrix for channel m.

inline json to_json(const ChannelModel& model)
{
    json conflict = json::array();
    for (std::size_t m = 0; m < model.num_channels; ++m) {
        json channel = json::array();
        for (std::size_t n = 0; n < model.num_users; ++n) {
            json row = json::array();
            for (std::size_t k = 0; k < model.num_users; ++k)
                row.push_back(static_cast<int>(model.conflict(n, k, m)));
            channel.push_back(std::move(row));
        }
        conflict.push_back(std::move(channel));
    }
    return json {
        { "schema", "chanalloc/channel-model-v1" },
        { "num_users", model.num_users },
        { "num_channels", model.num_channels },
        { "interference_radius", detail::matrix_to_json(model.interference_radius) },
        { "availability", detail::matrix_to_json(model.availability) },
        { "reward", detail::matrix_to_json(model.reward) },
        { "conflict", std::move(conflict) },
    };
}

inline ChannelModel channel_model_from_json(const json& j)
{
    detail::require_schema(j, "chanalloc/channel-model-v1");
    ChannelModel model;
    model.num_users = j.at("num_users").get<std::size_t>();
    model.num_channels = j.at("num_channels").get<std::size_t>();
    model.interference_radius = detail::matrix_from_json<double>(
        j.at("interference_radius"), model.num_users, model.num_channels, "interference_radius");
    model.availability = detail::matrix_from_json<std::uint8_t>(
        j.at("availability"), model.num_users, model.num_channels, "availability");
    model.reward = detail::matrix_from_json<double>(
        j.at("reward"), model.num_users, model.num_channels, "reward");
    model.conflict = ConflictTensor(model.num_users, model.num_channels);
    const json& conflict = j.at("conflict");
    if (!conflict.is_array() || conflict.size() != model.num_channels)
        throw std::invalid_argument("channel model: expected one conflict matrix per channel");
    for (std::size_t m = 0; m < model.num_channels; ++m) {
        const Matrix<std::uint8_t> per_channel = detail::matrix_from_json<std::uint8_t>(
            conflict[m], model.num_users, model.num_users, "conflict");
        for (std::size_t n = 0; n < model.num_users; ++n)
            for (std::size_t k = 0; k < model.num_users; ++k) {
                if (per_channel(n, k) != per_channel(k, n))
                    throw std::invalid_argument("channel model: conflict matrix must be symmetric");
                if (n == k && per_channel(n, k) != 0)
                    throw std::invalid_argument("channel model: conflict diagonal must be zero");
                model.conflict(n, k, m) = per_channel(n, k);
            }
    }
    return model;
}

// --- AllocationProblem: chanalloc/problem-v1 --------------------------------

inline json to_json(const AllocationProblem& problem)
{
    json conflicts = json::array();
    for (const ConflictPair& c : problem.conflicts())
        conflicts.push_back({ c.user_a, c.user_b, c.channel });
    json forbidden = json::array();
    for (std::size_t n = 0; n < problem.num_users(); ++n)
        for (std::size_t m = 0; m < problem.num_channels(); ++m)
            if (problem.forbidden()(n, m))
                forbidden.push_back({ n, m });
    return json {
        { "schema", "chanalloc/problem-v1" },
        { "num_users", problem.num_users() },
        { "num_channels", problem.num_channels() },
        { "c_max", problem.channel_cap() },
        { "reward", detail::matrix_to_json(problem.reward()) },
        { "conflicts", std::move(conflicts) },
        { "forbidden", std::move(forbidden) },
    };
}

inline AllocationProblem problem_from_json(const json& j)
{
    detail::require_schema(j, "chanalloc/problem-v1");
    const auto users = j.at("num_users").get<std::size_t>();
    const auto channels = j.at("num_channels").get<std::size_t>();
    Matrix<double> reward = detail::matrix_from_json<double>(j.at("reward"), users, channels, "reward");
    Matrix<std::uint8_t> forbidden(users, channels, 0);
    for (const json& cell : j.at("forbidden")) {
        const auto n = cell.at(0).get<std::size_t>();
        const auto m = cell.at(1).get<std::size_t>();
        if (n >= users || m >= channels)
            throw std::invalid_argument("problem: forbidden cell out of range");
        forbidden(n, m) = 1;
    }
    std::vector<ConflictPair> conflicts;
    for (const json& c : j.at("conflicts"))
        conflicts.push_back({ c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>(),
            c.at(2).get<std::size_t>() });
    return AllocationProblem(std::move(reward), std::move(forbidden), std::move(conflicts),
        j.at("c_max").get<std::size_t>());
}

// --- ParetoSet: chanalloc/pareto-v1 and CSV ---------------------------------

inline json to_json(const ParetoSet& set)
{
    json points = json::array();
    for (const ParetoPoint& pt : set.points) {
        json witness = json::array();
        for (std::size_t r = 0; r < pt.witness.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < pt.witness.cols(); ++c)
                row.push_back(static_cast<int>(pt.witness(r, c)));
            witness.push_back(std::move(row));
        }
        points.push_back({ { "objectives", pt.objectives },
            { "witness", std::move(witness) },
            { "grid_index", pt.grid_index } });
    }
    return json {
        { "schema", "chanalloc/pareto-v1" },
        { "points", std::move(points) },
        { "subproblems_total", set.subproblems_total },
        { "subproblems_solved", set.subproblems_solved },
        { "subproblems_infeasible", set.subproblems_infeasible },
        { "duplicates_merged", set.duplicates_merged },
        { "dominated_filtered", set.dominated_filtered },
        { "truncated", set.truncated },
    };
}

/// Reads back the points of a pareto-v1 document (witness and grid index
/// included when present); counts are ignored. Used for oracle diffs.
inline std::vector<ParetoPoint> pareto_points_from_json(const json& j)
{
    detail::require_schema(j, "chanalloc/pareto-v1");
    std::vector<ParetoPoint> points;
    for (const json& p : j.at("points")) {
        ParetoPoint pt;
        pt.objectives = p.at("objectives").get<std::vector<double>>();
        if (p.contains("witness")) {
            const json& w = p.at("witness");
            const std::size_t rows = w.size();
            const std::size_t cols = rows ? w[0].size() : 0;
            pt.witness = detail::matrix_from_json<std::uint8_t>(w, rows, cols, "witness");
        }
        if (p.contains("grid_index"))
            pt.grid_index = p.at("grid_index").get<std::vector<std::size_t>>();
        points.push_back(std::move(pt));
    }
    return points;
}

/// CSV form: one row per point with the objective components, the flattened
/// witness matrix (row-major), then the producing grid index.
inline std::string pareto_csv(const ParetoSet& set, std::size_t num_users, std::size_t num_channels)
{
    std::ostringstream out;
    const std::size_t grid_cols = set.points.empty() ? 0 : set.points.front().grid_index.size();
    for (std::size_t i = 0; i < num_users; ++i)
        out << (i ? "," : "") << "f" << (i + 1);
    for (std::size_t n = 0; n < num_users; ++n)
        for (std::size_t m = 0; m < num_channels; ++m)
            out << ",a" << (n + 1) << "_" << (m + 1);
    for (std::size_t g = 0; g < grid_cols; ++g)
        out << ",n" << (g + 2);
    out << "\n";
    for (const ParetoPoint& pt : set.points) {
        for (std::size_t i = 0; i < pt.objectives.size(); ++i)
            out << (i ? "," : "") << format_double(pt.objectives[i]);
        for (std::size_t idx = 0; idx < pt.witness.size(); ++idx)
            out << "," << static_cast<int>(pt.witness[idx]);
        for (std::size_t g = 0; g < pt.grid_index.size(); ++g)
            out << "," << pt.grid_index[g];
        out << "\n";
    }
    return out.str();
}

// --- File helpers ------------------------------------------------------------

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << content;
}

inline json load_json(const std::string& path)
{
    return json::parse(read_text(path));
}

} // namespace chanalloc

#endif // CHANALLOC_SERIALIZE_HPP_
