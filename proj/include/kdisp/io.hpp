#ifndef KDISP_IO_HPP
#define KDISP_IO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdisp/errors.hpp"
#include "kdisp/geometry.hpp"

namespace kdisp {

/// Malformed or unreadable file content.
class BadInput : public Error {
public:
    using Error::Error;
};

/// {"points": [[x, y], ...], "name": ..., "shape": ..., "seed": ...}
struct InstanceFile {
    std::vector<Point> points;
    std::optional<std::string> name;
    std::optional<std::string> shape;
    std::optional<std::uint64_t> seed;
};

InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& instance);
InstanceFile read_instance(const std::string& path);

/// One solver run. Center indices refer to the instance file's point list.
struct ResultRecord {
    std::string algorithm;
    std::size_t k = 0;
    double radius = 0.0;
    double radius_sq4 = 0.0;
    std::vector<std::size_t> centers;
    std::size_t ladder_size = 0;
    std::size_t decide_calls = 0;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes_per_decide = 0;
    std::size_t vertex_accesses = 0;
    double wall_ms = 0.0;
};

ResultRecord parse_result(const std::string& text);
std::string serialize_result(const ResultRecord& record);
ResultRecord read_result(const std::string& path);

/// Polygon outline, every vertex, and one disk per result center.
std::string render_svg(const std::vector<Point>& points, const ResultRecord& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

} // namespace kdisp

#endif
