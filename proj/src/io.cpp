#include "kdisp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kdisp {

using nlohmann::json;

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw Error("cannot format number");
    return std::string(buf, end);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadInput(std::string("malformed JSON: ") + e.what());
    }
}

double finite_number(const json& v, const char* what) {
    if (!v.is_number()) throw BadInput(std::string(what) + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw BadInput(std::string(what) + " must be finite");
    return d;
}

} // namespace

InstanceFile parse_instance(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw BadInput("instance must be an object with a \"points\" array");

    InstanceFile inst;
    for (const json& p : doc["points"]) {
        if (!p.is_array() || p.size() != 2) throw BadInput("each point must be [x, y]");
        inst.points.push_back({finite_number(p[0], "x"), finite_number(p[1], "y")});
    }
    if (doc.contains("name") && doc["name"].is_string()) inst.name = doc["name"].get<std::string>();
    if (doc.contains("shape") && doc["shape"].is_string()) inst.shape = doc["shape"].get<std::string>();
    if (doc.contains("seed") && doc["seed"].is_number_unsigned()) inst.seed = doc["seed"].get<std::uint64_t>();
    return inst;
}

std::string serialize_instance(const InstanceFile& instance) {
    // One point per line.
    std::string out = "{\n";
    if (instance.name) out += "  \"name\": " + json(*instance.name).dump() + ",\n";
    if (instance.shape) out += "  \"shape\": " + json(*instance.shape).dump() + ",\n";
    if (instance.seed) out += "  \"seed\": " + std::to_string(*instance.seed) + ",\n";
    out += "  \"points\": [";
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        out += i == 0 ? "\n    [" : ",\n    [";
        out += format_double(instance.points[i].x) + ", " + format_double(instance.points[i].y) + "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

InstanceFile read_instance(const std::string& path) { return parse_instance(read_file(path)); }

ResultRecord parse_result(const std::string& text) {
    const json doc = parse_json(text);
    try {
        ResultRecord r;
        r.algorithm = doc.at("algorithm").get<std::string>();
        r.k = doc.at("k").get<std::size_t>();
        r.radius_sq4 = doc.at("radius_sq4").get<double>();
        r.radius = doc.at("radius").get<double>();
        r.centers = doc.at("centers").get<std::vector<std::size_t>>();
        r.ladder_size = doc.value("ladder_size", std::size_t{0});
        r.decide_calls = doc.value("decide_calls", std::size_t{0});
        r.nodes = doc.value("nodes", std::uint64_t{0});
        r.max_nodes_per_decide = doc.value("max_nodes_per_decide", std::uint64_t{0});
        r.vertex_accesses = doc.value("vertex_accesses", std::size_t{0});
        r.wall_ms = doc.value("wall_ms", 0.0);
        return r;
    } catch (const json::exception& e) {
        throw BadInput(std::string("malformed result: ") + e.what());
    }
}

std::string serialize_result(const ResultRecord& r) {
    json doc;
    doc["algorithm"] = r.algorithm;
    doc["k"] = r.k;
    doc["radius"] = r.radius;
    doc["radius_sq4"] = r.radius_sq4;
    doc["centers"] = r.centers;
    doc["ladder_size"] = r.ladder_size;
    doc["decide_calls"] = r.decide_calls;
    doc["nodes"] = r.nodes;
    doc["max_nodes_per_decide"] = r.max_nodes_per_decide;
    doc["vertex_accesses"] = r.vertex_accesses;
    doc["wall_ms"] = r.wall_ms;
    return doc.dump(2) + "\n";
}

ResultRecord read_result(const std::string& path) { return parse_result(read_file(path)); }

std::string render_svg(const std::vector<Point>& points, const ResultRecord& result) {
    for (std::size_t c : result.centers) {
        if (c >= points.size()) throw BadInput("result center " + std::to_string(c) + " is not a vertex of the instance");
    }
    if (points.empty()) throw BadInput("empty instance");

    double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double radius = result.centers.size() > 1 ? result.radius : 0.0;
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double margin = radius + 0.05 * (span > 0 ? span : 1.0);
    min_x -= margin;
    min_y -= margin;
    const double width = max_x - min_x + margin;
    const double height = max_y - min_y + margin;
    const double stroke = 0.004 * std::max(width, height);

    // SVG y grows downwards.
    auto X = [&](double x) { return format_double(x - min_x); };
    auto Y = [&](double y) { return format_double(max_y + margin - y); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(width) << ' '
        << format_double(height) << "\" width=\"800\" height=\""
        << format_double(800.0 * height / width) << "\">\n";
    svg << "  <polygon fill=\"#f4f4f4\" stroke=\"#333\" stroke-width=\"" << format_double(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        svg << (i ? " " : "") << X(points[i].x) << ',' << Y(points[i].y);
    }
    svg << "\"/>\n";
    for (std::size_t c : result.centers) {
        svg << "  <circle class=\"disk\" cx=\"" << X(points[c].x) << "\" cy=\"" << Y(points[c].y) << "\" r=\""
            << format_double(radius) << "\" fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"#1f5f9f\" stroke-width=\""
            << format_double(stroke) << "\"/>\n";
    }
    for (const Point& p : points) {
        svg << "  <circle class=\"vertex\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\""
            << format_double(2 * stroke) << "\" fill=\"#000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace kdisp
