#pragma once

#include <cstddef>
#include <vector>

#include "tilinglab/simd.hpp"

namespace tilinglab {

// Node grid of nx columns by ny rows. Unknown nodes carry mask 1; every other
// node holds a fixed (Dirichlet) value, zero outside the domain. The outer
// frame of the grid must not contain unknowns.
struct MaskedGrid {
    int nx = 0, ny = 0;
    std::vector<double> mask;
    std::vector<double> value;

    MaskedGrid() = default;
    MaskedGrid(int nx_, int ny_) : nx(nx_), ny(ny_), mask(std::size_t(nx_) * ny_, 0.0), value(mask.size(), 0.0) {}

    std::size_t index(int i, int j) const { return std::size_t(j) * nx + i; }
    std::size_t size() const { return mask.size(); }
    std::size_t unknowns() const;
};

struct CgResult {
    int iterations = 0;
    double relative_residual = 0;
    bool converged = false;
};

// Solves (4 - neighbours) u = source at the unknowns with the fixed values as
// boundary data; source may be empty. The solution is written into
// grid.value. The stopping test is ||r|| <= tol * ||b||.
CgResult solve_grid(MaskedGrid& grid, const std::vector<double>& source, double tol = 1e-10, int max_iter = 0,
                    const simd::Kernels& k = simd::active_kernels());

// Max over unknowns of |(4 - neighbours) u - source|.
double grid_residual(const MaskedGrid& grid, const std::vector<double>& source);

}  // namespace tilinglab
