#pragma once

#include <vector>

#include "tilinglab/grid.hpp"

namespace tilinglab {

// Lattice box [-M, M]^2 with the slit (-infinity, -1] of the x-axis, truncated
// at the box, held at Dirichlet data.
struct SlitBox {
    int half_width = 8;
    explicit SlitBox(int m);
};

struct SlitField {
    int half_width = 0;
    int shift = 0;  // lattice point x sits at column x + half_width + shift + 1
    MaskedGrid grid;
    CgResult solve;

    bool in_box(int x, int y) const;
    double operator()(int x, int y) const;
};

// G(0, .) with Delta G = delta_0, where (Delta f)(z) is the sum over the four
// neighbours of f minus 4 f(z). Dirichlet 0 on the slit and the box boundary.
SlitField slit_greens(const SlitBox& box, double tol = 1e-12);

// Harmonic off the slit, 0 on [-n, -1], 1 on the rest of the slit and on the
// box boundary. shift = -1 solves on the box translated by -1 so that
// f(z - 1) is available for every z in the untranslated box.
SlitField slit_fn(const SlitBox& box, int n, int shift = 0, double tol = 1e-12);

struct FnConstruction {
    SlitField fn, fn1;     // f_n on the box, f_{n+1} on the box translated by -1
    double laplacian_at_0;  // Laplacian of g_n(z) = f_n(z) - f_{n+1}(z - 1) at 0
    std::vector<double> assembled;  // -g_n / (f_{n+1}(0) + f_{n+1}(-1+i) + f_{n+1}(-1-i)), row-major over the box
    int half_width = 0;

    double g(int x, int y) const;
    double greens(int x, int y) const;
};

FnConstruction fn_construction(int n, const SlitBox& box);

// |G(0, x)| sqrt(x) for x in [lo, hi] on the positive axis.
std::vector<double> slit_decay_profile(const SlitField& g, int lo, int hi);
// max / min - 1 over the profile.
double plateau_spread(const std::vector<double>& profile);

}  // namespace tilinglab
