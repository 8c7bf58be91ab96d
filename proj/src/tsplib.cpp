#include "maxcov/tsplib.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "maxcov/format.hpp"

namespace maxcov {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

Instance parse_tsplib(std::istream& in) {
    Instance inst;
    std::string raw;
    std::size_t line_no = 0;

    long dimension = 0;
    bool have_dimension = false;
    bool have_euc2d = false;
    bool in_section = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line == "NODE_COORD_SECTION") {
            in_section = true;
            break;
        }

        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError("malformed header line: \"" + line + "\"", line_no);
        }
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));

        if (key == "NAME") {
            inst.name = value;
        } else if (key == "DIMENSION") {
            try {
                std::size_t consumed = 0;
                dimension = std::stol(value, &consumed);
                if (consumed != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw ParseError("malformed DIMENSION value: \"" + value + "\"", line_no);
            }
            have_dimension = true;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EUC_2D") {
                throw ParseError("unsupported edge weight type: " + value, line_no);
            }
            have_euc2d = true;
        } else {
            // NAME-like metadata (TYPE, COMMENT, ...) is recorded or ignored.
            continue;
        }
    }

    if (!in_section) throw ParseError("missing NODE_COORD_SECTION", line_no);
    if (!have_dimension) throw ParseError("missing DIMENSION header", line_no);
    if (dimension < 2) {
        throw ParseError("instance needs at least 2 nodes, DIMENSION is " +
                             std::to_string(dimension),
                         line_no);
    }
    if (!have_euc2d) throw ParseError("missing EDGE_WEIGHT_TYPE header", line_no);

    const auto n = static_cast<std::size_t>(dimension);
    inst.coords.reserve(n);
    std::vector<long> ids;
    ids.reserve(n);
    std::set<long> seen;

    while (inst.coords.size() < n) {
        if (!std::getline(in, raw)) {
            throw ParseError("unexpected end of file: expected " + std::to_string(n) +
                                 " coordinate lines, got " + std::to_string(inst.coords.size()),
                             line_no);
        }
        ++line_no;
        std::string line = trim(raw);
        if (line.empty()) continue;

        std::istringstream fields(line);
        long id = 0;
        double x = 0;
        double y = 0;
        if (!(fields >> id)) {
            throw ParseError("malformed node line (expected integer id): \"" + line + "\"",
                             line_no);
        }
        if (!(fields >> x >> y)) {
            throw ParseError("non-numeric coordinate: \"" + line + "\"", line_no);
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError("trailing characters after coordinates: \"" + extra + "\"", line_no);
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw ParseError("non-finite coordinate: \"" + line + "\"", line_no);
        }
        if (!seen.insert(id).second) {
            throw ParseError("duplicate node id " + std::to_string(id), line_no);
        }
        ids.push_back(id);
        inst.coords.push_back({x, y});
    }

    // Ids must be 1..n or 0..n-1; coordinates stay in file order either way.
    long min_id = *std::min_element(ids.begin(), ids.end());
    long max_id = *std::max_element(ids.begin(), ids.end());
    bool one_based = (min_id == 1 && max_id == dimension);
    bool zero_based = (min_id == 0 && max_id == dimension - 1);
    if (!one_based && !zero_based) {
        throw ParseError("node ids must cover 1..n or 0..n-1 exactly", line_no);
    }

    // Anything after the coordinate block (an EOF marker, display sections)
    // is ignored.
    return inst;
}

Instance parse_tsplib_string(const std::string& text) {
    std::istringstream in(text);
    return parse_tsplib(in);
}

Instance parse_tsplib_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path.string());
    }
    return parse_tsplib(in);
}

std::string write_tsplib(const Instance& inst) {
    std::string out;
    out += "NAME: " + inst.name + "\n";
    out += "TYPE: TSP\n";
    out += "DIMENSION: " + std::to_string(inst.num_nodes()) + "\n";
    out += "EDGE_WEIGHT_TYPE: EUC_2D\n";
    out += "NODE_COORD_SECTION\n";
    for (std::uint32_t i = 0; i < inst.num_nodes(); ++i) {
        out += std::to_string(i + 1) + " " + double_to_string(inst.coords[i].x) + " " +
               double_to_string(inst.coords[i].y) + "\n";
    }
    out += "EOF\n";
    return out;
}

DistanceMatrix build_distance_matrix(const Instance& inst) {
    const std::uint32_t n = inst.num_nodes();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            double dx = inst.coords[i].x - inst.coords[j].x;
            double dy = inst.coords[i].y - inst.coords[j].y;
            double dist = std::sqrt(dx * dx + dy * dy);
            if (inst.metric == Metric::Euc2dRounded) {
                dist = std::floor(dist + 0.5);
            }
            dm.d[static_cast<std::size_t>(i) * n + j] = dist;
            dm.d[static_cast<std::size_t>(j) * n + i] = dist;
        }
    }
    return dm;
}

double critical_distance(const DistanceMatrix& dm, std::uint32_t base) {
    double cd = 0;
    for (std::uint32_t j = 0; j < dm.n; ++j) {
        if (j == base) continue;
        cd = std::max(cd, dm.at(base, j));
    }
    return cd;
}

} // namespace maxcov
