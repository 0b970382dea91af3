#pragma once

#include <string>
#include <vector>

#include "tilinglab/grid.hpp"
#include "tilinglab/region.hpp"

namespace tilinglab {

// A boundary discontinuity of the height data: jump is the value after the
// point minus the value before it (counterclockwise), angle the interior angle.
struct JumpPoint {
    PointD at;
    double jump = 0;
    double angle = 0;
    // Local energy coefficient jump^2 / angle.
    double coefficient() const { return jump * jump / angle; }
};

struct HarmonicField {
    RectilinearPolygon polygon;
    double mesh = 0;
    PointD origin;  // position of grid node (0, 0)
    MaskedGrid grid;
    std::vector<JumpPoint> jumps;
    CgResult solve;

    PointD node(int i, int j) const { return {origin.x + i * mesh, origin.y + j * mesh}; }
    double at(int i, int j) const { return grid.value[grid.index(i, j)]; }
    // Bilinear interpolation inside the grid.
    double value(PointD p) const;
};

struct CornerEstimate {
    PointD at;
    double expected = 0;
    // Energy in the annulus delta <= r < 2 delta divided by log 2.
    double measured = 0;
};

struct EnergyReport {
    double delta = 0;
    double energy = 0;
    double mesh = 0;
    std::vector<CornerEstimate> corner_breakdown;
    std::string region_id;
};

std::vector<JumpPoint> jump_points(const RectilinearPolygon& u);

HarmonicField solve_height(const RectilinearPolygon& u, double mesh, double tol = 1e-10);

EnergyReport dirichlet_energy_delta(const HarmonicField& f, double delta, std::string region_id = "");

// Sum of the local coefficients, i.e. 4(V-4)/(3 pi) + 24/pi for a base point
// at a convex corner.
double corner_law_coefficient(const RectilinearPolygon& u);

struct CornerFit {
    std::vector<double> deltas, energies, meshes;
    double slope = 0;
    double intercept = 0;
    double expected = 0;
};

// Least-squares slope of E_delta against log(1/delta). Each delta is solved on
// its own mesh delta / cells_per_delta (capped at min side / 16).
CornerFit corner_law_fit(const RectilinearPolygon& u, const std::vector<double>& deltas, int cells_per_delta = 8);

// Closed form for the alpha x (tau alpha) rectangle with boundary data
// 0, 1, 2, 3 and base point at the lower left corner.
double rect_energy_closed(double alpha, double tau, double delta);
// Same expression without the (6/pi) log 2 from the expansion of wp' at 0.
double rect_energy_closed_literal(double alpha, double tau, double delta);

// Half-plane data 0 on the negative axis and 1 on the positive one; energy in
// delta < |z| < 1/delta. Computed on the upper half unit disk and doubled (the
// inversion z -> 1/conj(z) maps the two halves onto each other).
double half_plane_step_energy(double delta, double mesh);

struct Main2Result {
    double predicted = 0;  // c0 A/eps^2 + c1 Perim/eps - (pi/48) E_eps
    double log_count = 0;
    double log_count_error = 0;
    double residual = 0;  // log_count - predicted
};

// The polygon traced by the closure of p scaled by eps; the base point is the
// convex corner of the base square on the boundary (or the middle of its
// boundary side).
RectilinearPolygon temperleyan_polygon(const TemperleyanPolyomino& p, double eps);

double main2_leading(const TemperleyanPolyomino& p, double energy_at_eps);
Main2Result main2_assemble(const TemperleyanPolyomino& p, const EnergyReport& energy);

struct CorollaryResult {
    double predicted = 0;  // (4G/pi) N + (log(sqrt2-1)/2) B - (pi/48) E
    double log_trees = 0;
    double residual = 0;
    long vertices = 0, boundary_edges = 0;
};

CorollaryResult corollary_laplacian(const GridSubgraph& h, const EnergyReport& energy);
CorollaryResult corollary_laplacian(const GridSubgraph& h, double energy_at_eps);

}  // namespace tilinglab
