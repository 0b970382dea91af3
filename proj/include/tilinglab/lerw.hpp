#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tilinglab/region.hpp"

namespace tilinglab {

// mt19937_64 keyed by (seed, stream) through seed_seq.
std::mt19937_64 keyed_rng(std::uint64_t seed, std::uint64_t stream);

struct TreeSample {
    std::vector<Point> vertices;
    std::vector<int> parent;  // -1 at the root
    int root = 0;
    std::uint64_t seed = 0;

    int index_of(Point v) const;
};

struct LerwPath {
    std::vector<Point> vertices;
    bool operator==(const LerwPath&) const = default;
};

// Wilson's algorithm on the graph, rooted at root.
TreeSample sample_ust(const GridSubgraph& h, Point root, std::uint64_t seed);

// Chronological loop erasure.
LerwPath loop_erase(const std::vector<Point>& walk);

LerwPath branch(const TreeSample& tree, Point v);

// Simple random walk on h from source until it hits target, loop-erased.
LerwPath sample_lerw(const GridSubgraph& h, Point source, Point target, std::uint64_t seed,
                     std::uint64_t stream = 0);

// All spanning trees as edge-midpoint lists (exhaustive; throws CapExceeded).
std::vector<std::vector<Point>> enumerate_spanning_trees(const GridSubgraph& h, std::size_t cap = 100000);

struct TwoHoleCheck {
    std::uint64_t tilings_q = 0;
    std::uint64_t trees_through_w = 0;
    bool equal = false;
};

// b a B0 cell (a vertex of H) on the outer boundary, w a white cell of p.
TwoHoleCheck two_hole_bijection_check(const TemperleyanPolyomino& p, Point b, Point w);

struct ExponentFit {
    std::vector<int> sizes;
    std::vector<double> means, mean_errors;
    int samples = 0;
    double exponent = 0;
    double standard_error = 0;  // bootstrap
    std::uint64_t seed = 0;
};

// Branch from (0,0) to the far boundary of [0,4N] x [-2N,2N] (walk reflected
// at x = 0, absorbed on the other three sides); counts branch vertices at
// Euclidean distance <= N from the source.
ExponentFit growth_exponent(const std::vector<int>& sizes, int samples_per_size, std::uint64_t seed,
                            int bootstrap = 400);

// Vertices of the half-plane LERW from (0,0) to the far boundary of the box
// [0, width] x [-height, height]. Exposed for the profile and for tests.
std::vector<Point> half_plane_branch(int width, int height, std::mt19937_64& rng);

struct AngularBin {
    double theta = 0;
    double value = 0;  // mean of P(x,y) r^(3/4) over the bin
    double error = 0;
    double ratio = 0;  // value / value of the bin at theta = 0
    double cos_quarter = 0;
};

struct AngularProfile {
    int n = 0, samples = 0;
    std::vector<double> axis_r, axis_p;  // P((x,0)) for x in [8, N/4]
    double radial_slope = 0;
    std::vector<AngularBin> bins;
};

// Box [0,N] x [-N/2,N/2], source (0,0). Angular bins cover (-pi/2, pi/2) over
// the annulus N/16 <= r <= N/4; an odd bin count puts one bin at theta = 0.
AngularProfile angular_profile(int n, int samples, int bins, std::uint64_t seed);

struct RatioPoint {
    double eps = 0, alpha = 0, beta = 0;  // alpha, beta as realized on the lattice
    double log_ratio = 0;                 // log N(Q) - log N(P)
    double error = 0;
};

struct RatioFit {
    std::vector<RatioPoint> points;
    // coefficients of log(1/eps), log alpha, log(alpha^2 + beta^2), constant;
    // the log alpha and log(alpha^2+beta^2) columns are merged into one
    // log alpha column when every beta is 0
    double c_eps = 0, c_alpha = 0, c_radius = 0, c_const = 0;
    bool radius_separated = false;
};

// Square [0,K] x [-K/2,K/2] at mesh eps, base square at the middle of the
// right side, black hole b = i beta on the left side, white hole w = alpha on
// the axis.
RatioPoint ratio_point(double k_side, double eps, double alpha, double beta);
RatioFit ratio_experiment(const std::vector<double>& alphas, const std::vector<double>& betas,
                          const std::vector<double>& eps_list, double k_side = 4);

}  // namespace tilinglab
