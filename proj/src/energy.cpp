#include "tilinglab/energy.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "tilinglab/error.hpp"
#include "tilinglab/kasteleyn.hpp"
#include "tilinglab/treelap.hpp"

namespace tilinglab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCatalan = 0.915965594177219015054603514932;

double dist(PointD a, PointD b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool on_mesh(double v, double origin, double h) {
    double t = (v - origin) / h;
    return std::abs(t - std::round(t)) < 1e-7;
}

}  // namespace

double HarmonicField::value(PointD p) const {
    double tx = (p.x - origin.x) / mesh, ty = (p.y - origin.y) / mesh;
    int i = std::clamp(static_cast<int>(std::floor(tx)), 0, grid.nx - 2);
    int j = std::clamp(static_cast<int>(std::floor(ty)), 0, grid.ny - 2);
    double fx = tx - i, fy = ty - j;
    return (1 - fx) * (1 - fy) * at(i, j) + fx * (1 - fy) * at(i + 1, j) + (1 - fx) * fy * at(i, j + 1) +
           fx * fy * at(i + 1, j + 1);
}

std::vector<JumpPoint> jump_points(const RectilinearPolygon& u) {
    std::vector<JumpPoint> out;
    PointD b = u.base_point();
    bool base_at_corner = false;
    for (int i = 0; i < u.vertex_count(); ++i) {
        JumpPoint j;
        j.at = u.corners()[i];
        j.jump = u.convex(i) ? 1 : -1;
        j.angle = u.convex(i) ? kPi / 2 : 3 * kPi / 2;
        if (dist(j.at, b) < 1e-12 * u.perimeter()) {
            j.jump -= 4;
            base_at_corner = true;
        }
        out.push_back(j);
    }
    if (!base_at_corner) out.push_back({b, -4, kPi});
    return out;
}

HarmonicField solve_height(const RectilinearPolygon& u, double mesh, double tol) {
    if (!(mesh > 0) || mesh > u.min_side() / 16 * (1 + 1e-12))
        throw Error(ErrorKind::MeshTooCoarse, "mesh must be at most min side / 16");
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (PointD c : u.corners()) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    for (PointD c : u.corners())
        if (!on_mesh(c.x, xmin, mesh) || !on_mesh(c.y, ymin, mesh))
            throw Error(ErrorKind::MeshTooCoarse, "polygon corners must lie on the mesh");

    HarmonicField f{u, mesh, {xmin - mesh, ymin - mesh}, {}, jump_points(u), {}};
    int nx = static_cast<int>(std::lround((xmax - xmin) / mesh)) + 3;
    int ny = static_cast<int>(std::lround((ymax - ymin) / mesh)) + 3;
    f.grid = MaskedGrid(nx, ny);
    const double tol_b = 1e-9 * mesh;

    std::vector<char> kind(f.grid.size(), 0);  // 0 outside, 1 unknown, 2 boundary, 3 jump
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            PointD p = f.node(i, j);
            std::size_t c = f.grid.index(i, j);
            if (u.boundary_position(p, tol_b)) {
                bool is_jump = false;
                for (const auto& jp : f.jumps)
                    if (dist(jp.at, p) < tol_b) is_jump = true;
                if (is_jump) {
                    kind[c] = 3;
                } else {
                    kind[c] = 2;
                    f.grid.value[c] = boundary_height(u, p);
                }
            } else if (u.contains(p)) {
                kind[c] = 1;
                f.grid.mask[c] = 1;
            }
        }
    // jump nodes take the mean of the adjacent boundary nodes
    for (int j = 1; j + 1 < ny; ++j)
        for (int i = 1; i + 1 < nx; ++i) {
            std::size_t c = f.grid.index(i, j);
            if (kind[c] != 3) continue;
            double s = 0;
            int k = 0;
            for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                std::size_t d = f.grid.index(i + di, j + dj);
                if (kind[d] == 2) {
                    s += f.grid.value[d];
                    ++k;
                }
            }
            f.grid.value[c] = k ? s / k : 0;
        }
    f.solve = solve_grid(f.grid, {}, tol);
    if (!f.solve.converged) throw Error(ErrorKind::DomainError, "harmonic solve did not converge");
    return f;
}

EnergyReport dirichlet_energy_delta(const HarmonicField& f, double delta, std::string region_id) {
    if (!(delta >= 4 * f.mesh * (1 - 1e-9))) throw Error(ErrorKind::DeltaTooSmall, "delta must be at least 4 mesh");
    const auto& g = f.grid;
    const double h = f.mesh;
    std::vector<double> weight(g.size(), 0.0);
    std::vector<char> inside(g.size(), 0);
    for (int j = 0; j + 1 < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i) {
            PointD c = f.node(i, j);
            c.x += h / 2;
            c.y += h / 2;
            if (!f.polygon.contains(c)) continue;
            inside[g.index(i, j)] = 1;
            bool keep = true;
            for (const auto& jp : f.jumps)
                if (dist(c, jp.at) < delta) keep = false;
            if (keep) weight[g.index(i, j)] = 1;
        }
    EnergyReport r;
    r.delta = delta;
    r.mesh = h;
    r.region_id = std::move(region_id);
    r.energy = simd::active_kernels().grad_energy(g.value.data(), weight.data(), g.nx, g.size());

    const double* u = g.value.data();
    const std::size_t w = g.nx;
    for (const auto& jp : f.jumps) {
        int i0 = std::max(0, static_cast<int>(std::floor((jp.at.x - 2 * delta - f.origin.x) / h)) - 1);
        int i1 = std::min(g.nx - 2, static_cast<int>(std::ceil((jp.at.x + 2 * delta - f.origin.x) / h)) + 1);
        int j0 = std::max(0, static_cast<int>(std::floor((jp.at.y - 2 * delta - f.origin.y) / h)) - 1);
        int j1 = std::min(g.ny - 2, static_cast<int>(std::ceil((jp.at.y + 2 * delta - f.origin.y) / h)) + 1);
        double s = 0;
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i) {
                std::size_t k = g.index(i, j);
                if (weight[k] == 0) continue;
                PointD c = f.node(i, j);
                c.x += h / 2;
                c.y += h / 2;
                if (dist(c, jp.at) >= 2 * delta) continue;
                double gx = (u[k + 1] - u[k]) + (u[k + w + 1] - u[k + w]);
                double gy = (u[k + w] - u[k]) + (u[k + w + 1] - u[k + 1]);
                s += 0.25 * (gx * gx + gy * gy);
            }
        r.corner_breakdown.push_back({jp.at, jp.coefficient(), s / std::log(2.0)});
    }
    return r;
}

double corner_law_coefficient(const RectilinearPolygon& u) {
    double s = 0;
    for (const auto& jp : jump_points(u)) s += jp.coefficient();
    return s;
}

CornerFit corner_law_fit(const RectilinearPolygon& u, const std::vector<double>& deltas, int cells_per_delta) {
    if (deltas.size() < 4) throw Error(ErrorKind::InsufficientDeltas, "need at least 4 delta values");
    auto [lo, hi] = std::minmax_element(deltas.begin(), deltas.end());
    if (!(*lo > 0) || *hi < 8 * *lo * (1 - 1e-12))
        throw Error(ErrorKind::InsufficientDeltas, "delta values must span a factor of at least 8");
    if (cells_per_delta < 4) throw Error(ErrorKind::DeltaTooSmall, "need at least 4 cells per delta");
    CornerFit fit;
    fit.expected = corner_law_coefficient(u);
    std::map<double, HarmonicField> solved;
    for (double d : deltas) {
        double mesh = std::min(d / cells_per_delta, u.min_side() / 16);
        auto it = solved.find(mesh);
        if (it == solved.end()) it = solved.emplace(mesh, solve_height(u, mesh)).first;
        fit.deltas.push_back(d);
        fit.meshes.push_back(mesh);
        fit.energies.push_back(dirichlet_energy_delta(it->second, d).energy);
    }
    double n = static_cast<double>(deltas.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        double x = std::log(1 / fit.deltas[i]), y = fit.energies[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

namespace {

double log_eta(double tau) {
    double q = std::exp(-2 * kPi * tau);
    double s = -kPi * tau / 12;
    double qk = q;
    while (qk > 1e-18) {
        s += std::log1p(-qk);
        qk *= q;
    }
    return s;
}

}  // namespace

double rect_energy_closed_literal(double alpha, double tau, double delta) {
    if (!(alpha > 0) || !(tau > 0) || !(delta > 0)) throw Error(ErrorKind::DomainError, "parameters must be positive");
    return 24 / kPi * std::log(2 * alpha / delta) -
           2 / kPi * (std::log(0.5) + 12 * std::log(2 * kPi) + 24 * log_eta(tau));
}

double rect_energy_closed(double alpha, double tau, double delta) {
    return rect_energy_closed_literal(alpha, tau, delta) + 6 / kPi * std::log(2.0);
}

double half_plane_step_energy(double delta, double mesh) {
    if (!(delta < 0.5) || !(mesh > 0)) throw Error(ErrorKind::DomainError, "need 0 < delta < 1/2");
    if (!(delta >= 4 * mesh * (1 - 1e-9))) throw Error(ErrorKind::DeltaTooSmall, "delta must be at least 4 mesh");
    int half = static_cast<int>(std::lround(1 / mesh));
    if (std::abs(half * mesh - 1) > 1e-9) throw Error(ErrorKind::MeshTooCoarse, "mesh must divide 1");
    // nodes x = (i - half - 1) mesh, y = (j - 1) mesh
    MaskedGrid g(2 * half + 3, half + 3);
    auto exact = [](double x, double y) {
        if (x == 0 && y == 0) return 0.5;
        return 1 - std::atan2(y, x) / kPi;
    };
    for (int j = 1; j <= half + 1; ++j)
        for (int i = 1; i <= 2 * half + 1; ++i) {
            double x = (i - half - 1) * mesh, y = (j - 1) * mesh;
            std::size_t c = g.index(i, j);
            if (j == 1 || j == half + 1 || i == 1 || i == 2 * half + 1)
                g.value[c] = exact(x, y);
            else
                g.mask[c] = 1;
        }
    if (!solve_grid(g, {}).converged) throw Error(ErrorKind::DomainError, "harmonic solve did not converge");
    std::vector<double> weight(g.size(), 0.0);
    for (int j = 1; j <= half; ++j)
        for (int i = 1; i <= 2 * half; ++i) {
            double x = (i - half - 0.5) * mesh, y = (j - 0.5) * mesh;
            double r = std::hypot(x, y);
            if (r >= delta && r < 1) weight[g.index(i, j)] = 1;
        }
    return 2 * simd::active_kernels().grad_energy(g.value.data(), weight.data(), g.nx, g.size());
}

RectilinearPolygon temperleyan_polygon(const TemperleyanPolyomino& p, double eps) {
    if (!(eps > 0)) throw Error(ErrorKind::DomainError, "eps must be positive");
    Polyomino cl = p.closure();
    PolyominoBoundary b = trace_boundary(cl);
    std::vector<PointD> corners;
    for (Point c : b.corners) corners.push_back({c.x * eps, c.y * eps});
    Point s = p.base_square();
    std::optional<PointD> base;
    for (std::size_t i = 0; i < b.corners.size() && !base; ++i) {
        Point c = b.corners[i];
        if (b.convex[i] && c.x >= s.x && c.x <= s.x + 1 && c.y >= s.y && c.y <= s.y + 1)
            base = PointD{c.x * eps, c.y * eps};
    }
    if (!base) {
        const std::pair<Point, PointD> sides[] = {{{0, -1}, {0.5, 0}}, {{1, 0}, {1, 0.5}}, {{0, 1}, {0.5, 1}},
                                                  {{-1, 0}, {0, 0.5}}};
        for (auto [d, m] : sides)
            if (!base && !cl.contains(s + d)) base = PointD{(s.x + m.x) * eps, (s.y + m.y) * eps};
    }
    if (!base) throw Error(ErrorKind::BaseNotOnBoundary, "base square is not on the boundary");
    return RectilinearPolygon(corners, *base);
}

double main2_leading(const TemperleyanPolyomino& p, double energy_at_eps) {
    const double c0 = kCatalan / kPi;
    const double c1 = kCatalan / (2 * kPi) + std::log(std::sqrt(2.0) - 1) / 4;
    return c0 * static_cast<double>(p.size()) + c1 * static_cast<double>(p.polyomino().perimeter()) -
           kPi / 48 * energy_at_eps;
}

Main2Result main2_assemble(const TemperleyanPolyomino& p, const EnergyReport& energy) {
    Main2Result r;
    r.predicted = main2_leading(p, energy.energy);
    LogCount lc = log_count_tilings(build_kasteleyn(p));
    r.log_count = lc.value;
    r.log_count_error = lc.error_bound;
    r.residual = r.log_count - r.predicted;
    return r;
}

namespace {

double log_reduced_laplacian_det(const GridSubgraph& h) {
    LaplacianMatrix l = laplacian(h);
    int removed = h.vertex_index(h.base());
    int n = static_cast<int>(l.vertices.size());
    std::vector<int> map(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (i != removed) map[i] = k++;
    std::vector<Eigen::Triplet<double>> t;
    for (int i = 0; i < n; ++i) {
        if (map[i] < 0) continue;
        for (auto [j, v] : l.rows[i])
            if (map[j] >= 0) t.emplace_back(map[i], map[j], static_cast<double>(v));
    }
    Eigen::SparseMatrix<double> a(k, k);
    a.setFromTriplets(t.begin(), t.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw Error(ErrorKind::SingularMatrix, "Laplacian factorization failed");
    double s = 0;
    auto d = ldlt.vectorD();
    for (int i = 0; i < k; ++i) {
        if (!(d[i] > 0)) throw Error(ErrorKind::Disconnected, "graph is disconnected");
        s += std::log(d[i]);
    }
    return s;
}

}  // namespace

CorollaryResult corollary_laplacian(const GridSubgraph& h, double energy_at_eps) {
    CorollaryResult r;
    r.vertices = static_cast<long>(h.vertices().size());
    r.boundary_edges = h.boundary_length();
    r.predicted = 4 * kCatalan / kPi * r.vertices + std::log(std::sqrt(2.0) - 1) / 2 * r.boundary_edges -
                  kPi / 48 * energy_at_eps;
    r.log_trees = r.vertices > 1 ? log_reduced_laplacian_det(h) : 0.0;
    r.residual = r.log_trees - r.predicted;
    return r;
}

CorollaryResult corollary_laplacian(const GridSubgraph& h, const EnergyReport& energy) {
    return corollary_laplacian(h, energy.energy);
}

}  // namespace tilinglab
