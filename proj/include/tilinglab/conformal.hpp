#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace tilinglab {

using cplx = std::complex<double>;

enum class Domain { Plane, RHP, SlitPlane, UnitDisk };

// Limiting coupling functions for the model domains. The base point is
// infinity except on the unit disk, where it is 1.
cplx f_plus(Domain d, cplx v, cplx z);
cplx f_minus(Domain d, cplx v, cplx z);
inline cplx f_zero(Domain d, cplx v, cplx z) { return (f_plus(d, v, z) + f_minus(d, v, z)) / 2.0; }
inline cplx f_one(Domain d, cplx v, cplx z) { return (f_plus(d, v, z) - f_minus(d, v, z)) / 2.0; }

// lim_{z -> v} F_+(v, z) - 2 / (pi (z - v)).
cplx f_plus_star(Domain d, cplx v);

struct ConformalMap {
    std::function<cplx(cplx)> f;
    std::function<cplx(cplx)> df;
};

using CouplingPair = std::function<std::pair<cplx, cplx>(cplx, cplx)>;

// Pull back (F+, F-) on U along f: V -> U.
std::pair<cplx, cplx> transport(const ConformalMap& f, const CouplingPair& on_u, cplx v, cplx z);

// 2 Im of the integral of F_+^* along the polyline, starting from 0 at path.front().
double limiting_height(Domain d, const std::vector<cplx>& path);

// f(z) = z^2 + b z^3 + c z^4 + O(z^5), b imaginary and c real.
struct Jet {
    cplx b;
    double c = 0;
};

double schwarzian_sqrt(const Jet& j);
// Schwarzian of sqrt(f) at 0 from Taylor coefficients on a circle of radius r.
double schwarzian_sqrt_numeric(const std::function<cplx(cplx)>& f, double r);
// Coefficients of z, z^2, z^3 in sqrt(f) and of z^{1/2}, z, z^{3/2} in f^{-1}.
std::vector<cplx> sqrt_jet(const Jet& j);
std::vector<cplx> inverse_jet(const Jet& j);

Jet fpq_jet(cplx p, cplx q);
std::pair<cplx, cplx> pq_from_jet(const Jet& j);

// f_{p,q}(z) = 2 sqrt(q/p) int_0^z u sqrt((u-p)/(u-q)) du from the closed
// antiderivative, continued along the segment [0, z].
cplx fpq_eval(cplx p, cplx q, cplx z);
cplx fpq_schwarzian(cplx p, cplx q);
double fpq_energy_delta(cplx p, cplx q, double delta);

// Energy change per unit eps when f(p) and f(q) both move by -2 eps, by
// central differences of fpq_energy_delta along the constrained flow.
// p = i a, q = i c.
double fpq_energy_flow_rate(double a, double c, double h = 1e-5);

// Elbow maps at the start of a cut.
cplx elbow_edge(double q, cplx z);    // sqrt(2 q z^2 + q^2) - q
cplx elbow_corner(cplx q, cplx z);    // three-quarter plane minus a slit
Jet elbow_edge_jet(double q);
Jet elbow_corner_jet(cplx q);

enum class CutKind { EdgeStart, CornerStart, EdgeEnd, CornerEnd };

// Local delta-normalized energy of a cut. For the start kinds j is the number
// of steps taken; for the end kinds it is the number of steps remaining.
double cut_boundary_energy(CutKind kind, int j, double eps, double delta);
// Energy change as the cut advances one step from j.
double cut_energy_step(CutKind kind, int j, double eps, double delta);
// Schwarzian of sqrt(f_j) at the tip of the cut.
double cut_schwarzian(CutKind kind, int j, double eps);
// Leading per-step coefficient A with step ~ A / j, and C = -(pi / 48) A.
double cut_coefficient(CutKind kind);
double cut_constant(CutKind kind);

struct TwoHoleDisk {
    cplx b0, b1;  // boundary zeros, |b| = 1; the white hole is at 0
};
struct TwoHoleRHP {
    cplx b5;  // boundary zero on the imaginary axis; the second zero is at infinity, the hole at 1
};

std::pair<cplx, cplx> two_hole_coupling(const TwoHoleDisk& s, cplx v, cplx z);
std::pair<cplx, cplx> two_hole_coupling(const TwoHoleRHP& s, cplx v, cplx z);

// Predicted log N(Q)/N(P) up to terms independent of alpha and beta.
double lerw_ratio_law(double alpha, double beta, double eps);
// (eps / r)^{3/4} cos(theta)^{1/4} with r e^{i theta} = alpha + i beta.
double lerw_hit_probability(double alpha, double beta, double eps);

}  // namespace tilinglab
