#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "chanalloc/serialize.hpp"

using namespace chanalloc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir()
{
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "chanalloc-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path)
{
    return fs::exists(path) ? read_text(path.string()) : std::string {};
}

RunResult run_cli(const std::string& args)
{
    static int counter = 0;
    const fs::path out = work_dir() / ("stdout." + std::to_string(counter));
    const fs::path err = work_dir() / ("stderr." + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(CHANALLOC_CLI_PATH) + " " + args + " > "
        + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

std::string data_file(const std::string& name)
{
    return std::string(CHANALLOC_DATA_DIR) + "/" + name;
}

std::string path_in_work(const std::string& name)
{
    return (work_dir() / name).string();
}

} // namespace

TEST_CASE("generate writes byte-identical files for the same seed")
{
    const std::string t1 = path_in_work("topo1.json"), t2 = path_in_work("topo2.json");
    const std::string m1 = path_in_work("model1.json"), m2 = path_in_work("model2.json");
    const std::string flags = "generate --seed 7 --pus 4 --sus 4 --channels 3";
    REQUIRE(run_cli(flags + " --topology-out " + t1 + " --model-out " + m1).exit_code == 0);
    REQUIRE(run_cli(flags + " --topology-out " + t2 + " --model-out " + m2).exit_code == 0);
    CHECK(slurp(t1) == slurp(t2));
    CHECK(slurp(m1) == slurp(m2));
    CHECK_FALSE(slurp(m1).empty());
}

TEST_CASE("generate without primaries leaves every channel open")
{
    const std::string model_path = path_in_work("open.json");
    const RunResult res = run_cli("generate --seed 3 --pus 0 --sus 3 --channels 3 --model-out " + model_path);
    REQUIRE(res.exit_code == 0);
    const ChannelModel model = channel_model_from_json(load_json(model_path));
    for (std::size_t i = 0; i < model.availability.size(); ++i)
        CHECK(model.availability[i] == 1);
}

TEST_CASE("generate warns when there are no secondary users")
{
    const RunResult res = run_cli("generate --seed 3 --pus 2 --sus 0 --channels 3 --model-out "
        + path_in_work("empty.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.err.find("warning") != std::string::npos);
}

TEST_CASE("solve reproduces the two-user demo front from its fixture")
{
    const std::string csv = path_in_work("two.csv"), jsn = path_in_work("two.json");
    const RunResult res = run_cli("solve --model " + data_file("two_user_demo.json")
        + " --grid 20 --csv-out " + csv + " --json-out " + jsn);
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("pareto points: 3") != std::string::npos);
    CHECK(res.out.find("subproblems: 21 total") != std::string::npos);
    const auto points = pareto_points_from_json(load_json(jsn));
    REQUIRE(points.size() == 3);
    CHECK(points[0].objectives == std::vector<double> { 32.0, 0.0 });
    CHECK(points[2].objectives == std::vector<double> { 0.0, 32.0 });
}

TEST_CASE("solve reproduces the three-user demo front from its fixture")
{
    const RunResult res = run_cli("solve --model " + data_file("three_user_demo.json")
        + " --grid 20 --json-out " + path_in_work("three.json"));
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("pareto points: 3") != std::string::npos);
    CHECK(res.out.find("subproblems: 441 total") != std::string::npos);
}

TEST_CASE("solve emits identical front bytes across runs")
{
    const std::string c1 = path_in_work("d1.csv"), c2 = path_in_work("d2.csv");
    const std::string flags = "solve --seed 11 --pus 3 --sus 3 --channels 3 --grid 8 --csv-out ";
    REQUIRE(run_cli(flags + c1).exit_code == 0);
    REQUIRE(run_cli(flags + c2 + " --threads 2").exit_code == 0);
    CHECK(slurp(c1) == slurp(c2));
}

TEST_CASE("solve refuses single-objective instances with an explanation")
{
    const std::string model_path = path_in_work("single.json");
    REQUIRE(run_cli("generate --seed 2 --pus 1 --sus 1 --channels 3 --model-out " + model_path)
                .exit_code
        == 0);
    const RunResult res = run_cli("solve --model " + model_path);
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("two secondary users") != std::string::npos);
}

TEST_CASE("oracle accepts the demo fronts")
{
    CHECK(run_cli("oracle --model " + data_file("two_user_demo.json") + " --grid 20").exit_code == 0);
    CHECK(run_cli("oracle --model " + data_file("three_user_demo.json") + " --grid 12").exit_code == 0);
}

TEST_CASE("oracle rejects a tampered front")
{
    const std::string front = path_in_work("front.json");
    REQUIRE(run_cli("solve --model " + data_file("two_user_demo.json") + " --grid 20 --json-out "
                + front)
                .exit_code
        == 0);
    json doc = load_json(front);
    doc["points"].push_back({ { "objectives", { 1.0, 0.0 } } }); // dominated by (32, 0)
    const std::string tampered = path_in_work("tampered.json");
    write_text(tampered, doc.dump());
    const RunResult res = run_cli("oracle --model " + data_file("two_user_demo.json") + " --front "
        + tampered);
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("not in reference front") != std::string::npos);
}

TEST_CASE("oracle refuses instances beyond the enumeration budget")
{
    const std::string model_path = path_in_work("big.json");
    REQUIRE(run_cli("generate --seed 4 --pus 2 --sus 5 --channels 5 --model-out " + model_path)
                .exit_code
        == 0);
    const RunResult res = run_cli("oracle --model " + model_path);
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("budget") != std::string::npos);
}

TEST_CASE("benchmark aggregates trials and writes reports")
{
    const std::string csv = path_in_work("bench.csv");
    const RunResult res = run_cli("benchmark --seed 9 --pus 2 --sus 2 --channels 2 --grid 4 "
                                  "--trials 3 --report-csv "
        + csv);
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("trials: 3") != std::string::npos);
    const std::string report = slurp(csv);
    CHECK(std::count(report.begin(), report.end(), '\n') == 4); // header + 3 records
}

TEST_CASE("benchmark q-sweep prints one row per resolution")
{
    const RunResult res = run_cli("benchmark --seed 9 --pus 2 --sus 2 --channels 2 --q-sweep 4 2");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("q,subproblems_total") != std::string::npos);
    CHECK(res.out.find("\n4,") != std::string::npos);
    CHECK(res.out.find("\n2,") != std::string::npos);
}

TEST_CASE("options load from a config file")
{
    const std::string cfg = path_in_work("run.ini");
    write_text(cfg, "[generate]\nseed=21\npus=2\nsus=2\nchannels=2\n");
    const std::string direct = path_in_work("direct.json");
    const std::string via_cfg = path_in_work("via_cfg.json");
    REQUIRE(run_cli("generate --seed 21 --pus 2 --sus 2 --channels 2 --model-out " + direct)
                .exit_code
        == 0);
    REQUIRE(run_cli("--config " + cfg + " generate --model-out " + via_cfg).exit_code == 0);
    CHECK(slurp(direct) == slurp(via_cfg));
}

TEST_CASE("usage errors exit with code 1")
{
    CHECK(run_cli("solve --no-such-flag").exit_code == 1);
    CHECK(run_cli("generate --d-min 5 --d-max 1").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}
