#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcov {

// How pairwise distances are derived from coordinates. Euc2dRounded is the
// TSPLIB nearest-integer convention; Euc2dExact keeps the raw Euclidean value
// and is the default for solving, since rounding distorts feasibility right
// at the flight-range boundary.
enum class Metric { Euc2dRounded, Euc2dExact };

struct Point {
    double x = 0;
    double y = 0;
};

// A parsed instance. Nodes are kept in file order and indexed 0..n-1; the
// node at base_index (the first one by default) is the depot every route must
// start from and return to. All remaining nodes are targets.
struct Instance {
    std::string name;
    std::vector<Point> coords;
    std::uint32_t base_index = 0;
    Metric metric = Metric::Euc2dExact;

    std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(coords.size()); }
    std::uint32_t num_targets() const { return num_nodes() - 1; }
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Parses the TSPLIB subset used here: header keys (NAME, TYPE, COMMENT,
// DIMENSION, EDGE_WEIGHT_TYPE) followed by NODE_COORD_SECTION with "id x y"
// lines. Only EDGE_WEIGHT_TYPE EUC_2D is accepted. Node ids may be 1-based
// or 0-based; they are validated and the coordinates are stored in file
// order. The trailing EOF marker is optional.
Instance parse_tsplib(std::istream& in);
Instance parse_tsplib_string(const std::string& text);
Instance parse_tsplib_file(const std::filesystem::path& path);

// Writes an instance back out in TSPLIB form. Coordinates are printed in
// shortest round-trip form, so parse(write(inst)) reproduces the exact
// doubles.
std::string write_tsplib(const Instance& inst);

// Symmetric, zero-diagonal matrix of pairwise distances in instance units.
struct DistanceMatrix {
    std::uint32_t n = 0;
    std::vector<double> d; // row-major n*n

    double at(std::uint32_t i, std::uint32_t j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

DistanceMatrix build_distance_matrix(const Instance& inst);

// Distance from the base to its farthest node.
double critical_distance(const DistanceMatrix& dm, std::uint32_t base);

} // namespace maxcov
