// Generates the synthetic coverage benchmark instances bundled under data/.
// The layout is a central base inside a broad target cloud, a ring of far
// two-target pods, and one outlier defining the critical distance. All
// randomness comes from the seed, so a given seed always reproduces the same
// file byte for byte.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <vector>

#include <CLI11.hpp>

#include "maxcov/rng.hpp"
#include "maxcov/tsplib.hpp"

namespace {

using namespace maxcov;

struct GenOptions {
    std::uint64_t seed = 113;
    std::uint32_t nodes = 150;
    std::uint32_t clusters = 9;
    double cluster_sigma = 35.0;
    std::uint32_t pods = 12;
    std::uint32_t pod_size = 2;
    double pod_r0 = 0.58;
    double pod_r1 = 0.85;
    std::uint32_t sprinkle = 6;
    double outlier_factor = 2.25;
    std::string name = "ch150";
    std::string out_path;
};

double gauss(Rng& rng) {
    double u1 = 1.0 - rng.uniform01(); // (0, 1]
    double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

Instance generate(const GenOptions& opt) {
    Rng rng(opt.seed);
    const double cx = 650.0, cy = 650.0;
    const double cloud_radius = 300.0;
    const double two_pi = 2.0 * std::numbers::pi;

    Instance inst;
    inst.name = opt.name;
    inst.coords.push_back({cx, cy}); // base

    const std::uint32_t n_clustered =
        opt.nodes - 2 - opt.sprinkle - opt.pods * opt.pod_size;

    std::vector<Point> centers;
    for (std::uint32_t c = 0; c < opt.clusters; ++c) {
        double r = cloud_radius * (0.10 + 0.23 * rng.uniform01());
        double a = two_pi * rng.uniform01();
        centers.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }

    std::vector<Point> cloud;
    for (std::uint32_t k = 0; k < n_clustered; ++k) {
        const Point& c = centers[k % opt.clusters];
        cloud.push_back({c.x + opt.cluster_sigma * gauss(rng),
                         c.y + opt.cluster_sigma * gauss(rng)});
    }

    // far pods: co-located target pairs a dedicated flight must go out for
    for (std::uint32_t p = 0; p < opt.pods; ++p) {
        double r = cloud_radius * (opt.pod_r0 + (opt.pod_r1 - opt.pod_r0) * rng.uniform01());
        double a = two_pi * rng.uniform01();
        double px = cx + r * std::cos(a), py = cy + r * std::sin(a);
        for (std::uint32_t k = 0; k < opt.pod_size; ++k) {
            cloud.push_back({px + 5.0 * gauss(rng), py + 5.0 * gauss(rng)});
        }
    }

    for (std::uint32_t k = 0; k < opt.sprinkle; ++k) {
        double r = cloud_radius * (0.12 + 0.18 * rng.uniform01());
        double a = two_pi * rng.uniform01();
        cloud.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }

    for (std::size_t k = cloud.size(); k > 1; --k) {
        std::size_t j = rng.uniform_int(0, k - 1);
        std::swap(cloud[k - 1], cloud[j]);
    }

    double max_cloud = 0;
    for (const auto& p : cloud) {
        max_cloud = std::max(max_cloud, std::hypot(p.x - cx, p.y - cy));
    }

    double oa = two_pi * rng.uniform01();
    double od = opt.outlier_factor * max_cloud;
    Point outlier{cx + od * std::cos(oa), cy + od * std::sin(oa)};

    for (const auto& p : cloud) inst.coords.push_back(p);
    inst.coords.push_back(outlier);

    double min_x = 1e18, min_y = 1e18;
    for (const auto& p : inst.coords) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    for (auto& p : inst.coords) {
        p.x = round4(p.x - min_x + 10.0);
        p.y = round4(p.y - min_y + 10.0);
    }
    return inst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"make_instance: generate a clustered coverage benchmark instance"};
    GenOptions opt;
    app.add_option("--seed", opt.seed, "Generator seed");
    app.add_option("--nodes", opt.nodes, "Total node count including the base")
        ->check(CLI::Range(10u, 10000u));
    app.add_option("--clusters", opt.clusters, "Cluster count");
    app.add_option("--sigma", opt.cluster_sigma, "Cluster spread");
    app.add_option("--pods", opt.pods, "Far pod count");
    app.add_option("--pod-size", opt.pod_size, "Targets per pod");
    app.add_option("--sprinkle", opt.sprinkle, "Loose inner targets");
    app.add_option("--outlier-factor", opt.outlier_factor,
                   "Outlier distance as a multiple of the cloud radius");
    app.add_option("--name", opt.name, "Instance NAME field");
    app.add_option("--out", opt.out_path, "Output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (opt.nodes < 2 + opt.sprinkle + opt.pods * opt.pod_size + 1) {
        std::cerr << "node budget too small for the requested structure\n";
        return 1;
    }

    Instance inst = generate(opt);
    std::string text = write_tsplib(inst);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << opt.out_path << "\n";
            return 1;
        }
        out << text;
    }
    return 0;
}
