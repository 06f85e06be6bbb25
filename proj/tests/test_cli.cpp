#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdisp/cli.hpp"
#include "kdisp/io.hpp"
#include "support.hpp"

using namespace kdisp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run kdisp_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("kdisp-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        const std::string p = (path / name).string();
        write_file(p, content);
        return p;
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string instance_json(const std::vector<Point>& pts) {
    InstanceFile f;
    f.points = pts;
    return serialize_instance(f);
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
    return c;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("solve") {
    TempDir dir;
    const auto square = dir.file("square.json", instance_json(test::square_points()));
    const auto hexagon = dir.file("hexagon.json", instance_json(generate_regular(6)));

    Run r = kdisp_run({"solve", "--in", square, "--k", "3"});
    REQUIRE(r.code == cli::kExitOk);
    ResultRecord rec = parse_result(r.out);
    CHECK(rec.radius == 0.5);
    CHECK(rec.radius_sq4 == 1.0);
    CHECK(rec.k == 3);
    CHECK(rec.centers.size() == 3);
    CHECK(rec.decide_calls >= 1);

    r = kdisp_run({"solve", "--in", hexagon, "--k", "3", "--engine", "naive"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(parse_result(r.out).radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

    r = kdisp_run({"solve", "--in", hexagon, "--k", "3", "--parallel", "--threads", "2"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(parse_result(r.out).radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

    CHECK(kdisp_run({"solve", "--in", square, "--k", "5"}).code == cli::kExitBadParameters);
    CHECK(kdisp_run({"solve", "--in", square, "--k", "1"}).code == cli::kExitBadParameters);
    CHECK(kdisp_run({"solve", "--in", square, "--k", "3", "--engine", "quick"}).code == cli::kExitBadParameters);
    CHECK(kdisp_run({"solve", "--in", square}).code == cli::kExitBadParameters);
}

TEST_CASE("centers refer to the input order") {
    TempDir dir;
    // counter-clockwise input
    const std::vector<Point> pts{{0, 0}, {2, 0}, {2, 1}, {0, 1}};
    const auto path = dir.file("ccw.json", instance_json(pts));
    const Run r = kdisp_run({"solve", "--in", path, "--k", "2"});
    REQUIRE(r.code == cli::kExitOk);
    const ResultRecord rec = parse_result(r.out);
    REQUIRE(rec.centers.size() == 2);
    CHECK(squared_distance(pts[rec.centers[0]], pts[rec.centers[1]]) == rec.radius_sq4);
    CHECK(rec.radius_sq4 == 5.0);
}

TEST_CASE("bad instances exit 2") {
    TempDir dir;
    const auto collinear = dir.file("collinear.json", instance_json({{0, 0}, {2, 0}, {1, 0}, {1, 2}}));
    CHECK(kdisp_run({"approx", "--in", collinear}).code == cli::kExitBadInput);
    CHECK(kdisp_run({"solve", "--in", collinear, "--k", "2"}).code == cli::kExitBadInput);
    const auto garbage = dir.file("garbage.json", "{\"points\": [[0, 0], [1]]}");
    CHECK(kdisp_run({"approx", "--in", garbage}).code == cli::kExitBadInput);
    const auto broken = dir.file("broken.json", "{\"points\": [");
    CHECK(kdisp_run({"approx", "--in", broken}).code == cli::kExitBadInput);
    CHECK(kdisp_run({"approx", "--in", dir / "missing.json"}).code == cli::kExitBadInput);
}

TEST_CASE("approx") {
    TempDir dir;
    const auto square = dir.file("square.json", instance_json(test::square_points()));
    Run r = kdisp_run({"approx", "--in", square});
    REQUIRE(r.code == cli::kExitOk);
    ResultRecord rec = parse_result(r.out);
    CHECK(rec.radius == 0.5);
    CHECK(rec.algorithm == "approx3");
    CHECK(rec.vertex_accesses >= 3);

    const auto tri = dir.file("tri.json", instance_json({{0, 0}, {1, 2}, {2, 0}}));
    r = kdisp_run({"approx", "--in", tri});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(parse_result(r.out).centers == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("decide and oracle") {
    TempDir dir;
    const auto square = dir.file("square.json", instance_json(test::square_points()));
    Run r = kdisp_run({"decide", "--in", square, "--k", "3", "--r", "0.5"});
    REQUIRE(r.code == cli::kExitOk);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["feasible"] == true);
    CHECK(doc["centers"].size() == 3);

    r = kdisp_run({"decide", "--in", square, "--k", "3", "--r", "0.6"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(nlohmann::json::parse(r.out)["feasible"] == false);
    CHECK(kdisp_run({"decide", "--in", square, "--k", "3", "--r", "-1"}).code == cli::kExitBadParameters);

    r = kdisp_run({"oracle", "--in", square, "--k", "3"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(parse_result(r.out).radius_sq4 == 1.0);

    const auto big = dir.file("big.json", instance_json(generate_valtr(60, 1)));
    CHECK(kdisp_run({"oracle", "--in", big, "--k", "20"}).code == cli::kExitBadParameters);
}

TEST_CASE("gen is reproducible and round-trips") {
    TempDir dir;
    const Run a = kdisp_run({"gen", "--shape", "valtr", "--n", "100", "--seed", "7"});
    const Run b = kdisp_run({"gen", "--shape", "valtr", "--n", "100", "--seed", "7"});
    REQUIRE(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(parse_instance(a.out).points == generate_valtr(100, 7));

    const std::string path = dir / "hex.json";
    REQUIRE(kdisp_run({"gen", "--shape", "regular", "--n", "6", "--out", path}).code == cli::kExitOk);
    const InstanceFile hex = read_instance(path);
    CHECK(hex.points == generate_regular(6));
    CHECK(serialize_instance(hex) == read_file(path));

    CHECK(kdisp_run({"gen", "--shape", "valtr", "--n", "2"}).code == cli::kExitBadParameters);
    CHECK(kdisp_run({"gen", "--shape", "blob", "--n", "5"}).code == cli::kExitBadParameters);
}

TEST_CASE("render") {
    TempDir dir;
    const auto square = dir.file("square.json", instance_json(test::square_points()));
    const std::string result = dir / "result.json";
    REQUIRE(kdisp_run({"solve", "--in", square, "--k", "3", "--out", result}).code == cli::kExitOk);
    Run r = kdisp_run({"render", "--in", square, "--result", result});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(count(r.out, "class=\"disk\"") == 3);
    CHECK(count(r.out, "class=\"vertex\"") == 4);
    CHECK(count(r.out, "r=\"0.5\"") == 3);

    const std::string two = dir / "two.json";
    REQUIRE(kdisp_run({"solve", "--in", square, "--k", "2", "--out", two}).code == cli::kExitOk);
    const std::string svg = dir / "two.svg";
    REQUIRE(kdisp_run({"render", "--in", square, "--result", two, "--out", svg}).code == cli::kExitOk);
    CHECK(count(read_file(svg), "class=\"disk\"") == 2);

    const auto tri = dir.file("tri.json", instance_json({{0, 0}, {1, 2}, {2, 0}}));
    ResultRecord far;
    far.k = 2;
    far.centers = {0, 7};
    const auto bad = dir.file("bad.json", serialize_result(far));
    CHECK(kdisp_run({"render", "--in", tri, "--result", bad}).code == cli::kExitBadInput);
}

TEST_CASE("result records round-trip") {
    ResultRecord r;
    r.algorithm = "exact";
    r.k = 4;
    r.radius = 0.1;
    r.radius_sq4 = 0.04000000000000001;
    r.centers = {1, 5, 9, 12};
    r.decide_calls = 7;
    r.nodes = 1234567890123ULL;
    r.wall_ms = 3.25;
    const ResultRecord back = parse_result(serialize_result(r));
    CHECK(back.radius_sq4 == r.radius_sq4);
    CHECK(back.centers == r.centers);
    CHECK(back.nodes == r.nodes);
    CHECK(back.wall_ms == r.wall_ms);
}

TEST_CASE("bench") {
    TempDir dir;
    const auto spec = dir.file("spec.json", R"({
        "grid": {"shape": "valtr", "n": [256, 512, 1024, 2048], "k": [4], "seeds": [1]},
        "cases": [{"shape": "circle", "n": 64, "k": 2, "seed": 3}, {"n": 5, "k": 9}]
    })");
    const std::string csv = dir / "bench.csv";
    REQUIRE(kdisp_run({"bench", "--spec", spec, "--out", csv}).code == cli::kExitOk);
    std::istringstream in(read_file(csv));
    std::string line;
    std::getline(in, line);
    const auto header = split(line, ',');
    REQUIRE(header.size() == 14);
    CHECK(header[5] == "decide_calls");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) rows.push_back(split(line, ','));
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) CHECK(row.size() == header.size());
    // cases first, then the grid
    CHECK(rows[0][0] == "circle");
    CHECK(rows[1][13].rfind("error", 0) == 0);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(rows[i][13] == "ok");
        CHECK(std::stoul(rows[i][5]) <= std::stoul(rows[i][6]));
        CHECK(std::stod(rows[i][7]) <= std::stod(rows[i][8]));
    }
}

TEST_CASE("bench node budget for k = 2..8") {
    TempDir dir;
    const auto spec = dir.file("spec.json", R"({"grid": {"n": [64], "k": [2, 3, 4, 5, 6, 7, 8], "seeds": [1, 2]}})");
    const Run r = kdisp_run({"bench", "--spec", spec});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(count(r.out, ",ok\n") == 14);
}

TEST_CASE("help and unknown commands") {
    CHECK(kdisp_run({"--help"}).code == cli::kExitOk);
    CHECK(kdisp_run({}).code == cli::kExitBadParameters);
    CHECK(kdisp_run({"frobnicate"}).code == cli::kExitBadParameters);
}

} // TEST_SUITE
