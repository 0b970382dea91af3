#include "tilinglab/conformal.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tilinglab/error.hpp"

namespace tilinglab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

void check_pole(cplx v, cplx z) {
    if (z == v) throw Error(ErrorKind::PoleAt, "z coincides with the pole at v");
}

bool on_negative_axis(cplx z) { return z.imag() == 0 && z.real() <= 0; }

// Nearest of +w, -w to prev.
cplx follow_sqrt(cplx w, cplx prev) { return std::abs(w - prev) <= std::abs(w + prev) ? w : -w; }

cplx follow_log(cplx w, cplx prev) {
    double k = std::round((prev.imag() - w.imag()) / (2 * kPi));
    return w + cplx(0, 2 * kPi * k);
}

}  // namespace

cplx f_plus(Domain d, cplx v, cplx z) {
    check_pole(v, z);
    switch (d) {
        case Domain::Plane:
        case Domain::RHP:
            return 2.0 / (kPi * (z - v));
        case Domain::SlitPlane:
            if (on_negative_axis(z)) throw Error(ErrorKind::BranchCutHit, "z lies on the slit");
            return 1.0 / (kPi * std::sqrt(v) * (std::sqrt(z) - std::sqrt(v)));
        case Domain::UnitDisk:
            return 2.0 * (1.0 - z) / (kPi * (1.0 - v) * (z - v));
    }
    return 0;
}

cplx f_minus(Domain d, cplx v, cplx z) {
    cplx vb = std::conj(v);
    switch (d) {
        case Domain::Plane:
            return 0;
        case Domain::RHP:
            return -2.0 / (kPi * (z + vb));
        case Domain::SlitPlane:
            if (on_negative_axis(z)) throw Error(ErrorKind::BranchCutHit, "z lies on the slit");
            return -1.0 / (kPi * std::sqrt(vb) * (std::sqrt(z) + std::sqrt(vb)));
        case Domain::UnitDisk: {
            // pulled back from the half-plane through (1 + z) / (1 - z)
            cplx dg = std::conj(2.0 / ((1.0 - v) * (1.0 - v)));
            cplx gz = (1.0 + z) / (1.0 - z), gv = (1.0 + v) / (1.0 - v);
            return dg * (-2.0 / (kPi * (gz + std::conj(gv))));
        }
    }
    return 0;
}

cplx f_plus_star(Domain d, cplx v) {
    switch (d) {
        case Domain::Plane:
        case Domain::RHP:
            return 0;
        case Domain::SlitPlane:
            return 1.0 / (2 * kPi * v);
        case Domain::UnitDisk:
            return -2.0 / (kPi * (1.0 - v));
    }
    return 0;
}

std::pair<cplx, cplx> transport(const ConformalMap& f, const CouplingPair& on_u, cplx v, cplx z) {
    cplx d = f.df(v);
    auto [fp, fm] = on_u(f.f(v), f.f(z));
    return {d * fp, std::conj(d) * fm};
}

double limiting_height(Domain d, const std::vector<cplx>& path) {
    if (path.size() < 2) return 0;
    // 16-point Gauss-Legendre on each of 64 pieces per segment
    static const std::array<double, 8> x = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                            0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                            0.9445750230732326, 0.9894009349916499};
    static const std::array<double, 8> w = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                            0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                            0.0622535239386479, 0.0271524594117541};
    cplx singular = d == Domain::UnitDisk ? cplx(1, 0) : cplx(0, 0);
    cplx total = 0;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        cplx a = path[s], b = path[s + 1];
        // closest approach of the segment to the singular point
        cplx ab = b - a;
        double t = std::abs(ab) == 0 ? 0 : std::clamp(std::real((singular - a) * std::conj(ab)) / std::norm(ab), 0.0, 1.0);
        if (d != Domain::Plane && d != Domain::RHP && std::abs(a + t * ab - singular) < 1e-12)
            throw Error(ErrorKind::PathThroughSingularity, "path passes through the base point");
        if (d == Domain::SlitPlane) {
            // crossing the negative real axis leaves the slit plane
            if ((a.imag() > 0) != (b.imag() > 0) && ab.imag() != 0) {
                double tt = -a.imag() / ab.imag();
                if ((a + tt * ab).real() < 0) throw Error(ErrorKind::BranchCutHit, "path crosses the slit");
            }
        }
        const int pieces = 64;
        for (int k = 0; k < pieces; ++k) {
            cplx lo = a + ab * (double(k) / pieces), hi = a + ab * (double(k + 1) / pieces);
            cplx mid = (lo + hi) / 2.0, half = (hi - lo) / 2.0;
            for (std::size_t n = 0; n < x.size(); ++n)
                total += half * w[n] * (f_plus_star(d, mid + half * x[n]) + f_plus_star(d, mid - half * x[n]));
        }
    }
    return 2 * total.imag();
}

double schwarzian_sqrt(const Jet& j) { return 3 * j.c - 2.25 * (j.b * j.b).real(); }

double schwarzian_sqrt_numeric(const std::function<cplx(cplx)>& f, double r) {
    const int n = 64;
    std::array<cplx, 4> a{};
    for (int k = 0; k < n; ++k) {
        double th = 2 * kPi * k / n;
        cplx z = std::polar(r, th);
        cplx g = z * std::sqrt(f(z) / (z * z));
        for (int m = 1; m <= 3; ++m) a[m] += g * std::polar(1.0, -m * th) / std::pow(r, m) / double(n);
    }
    cplx s = 6.0 * a[3] / a[1] - 6.0 * (a[2] / a[1]) * (a[2] / a[1]);
    return s.real();
}

std::vector<cplx> sqrt_jet(const Jet& j) { return {1.0, j.b / 2.0, j.c / 2 - j.b * j.b / 8.0}; }

std::vector<cplx> inverse_jet(const Jet& j) { return {1.0, -j.b / 2.0, 5.0 * j.b * j.b / 8.0 - j.c / 2}; }

Jet fpq_jet(cplx p, cplx q) {
    if (p == 0.0 || q == 0.0 || p == q) throw Error(ErrorKind::DegenerateParameters, "0, p, q must be distinct");
    Jet j;
    j.b = (1.0 / q - 1.0 / p) / 3.0;
    j.c = ((3.0 / (4.0 * q * q) - 1.0 / (2.0 * p * q) - 1.0 / (4.0 * p * p)) / 4.0).real();
    return j;
}

std::pair<cplx, cplx> pq_from_jet(const Jet& j) {
    if (j.b == 0.0) throw Error(ErrorKind::ZeroB, "b = 0 has no f_{p,q} representative");
    cplx dp = 16 * j.c - 27.0 * j.b * j.b, dq = 16 * j.c + 9.0 * j.b * j.b;
    if (dp == 0.0 || dq == 0.0) throw Error(ErrorKind::DegenerateParameters, "p or q is infinite");
    return {12.0 * j.b / dp, 12.0 * j.b / dq};
}

cplx fpq_eval(cplx p, cplx q, cplx z) {
    if (p == 0.0 || q == 0.0 || p == q) throw Error(ErrorKind::DegenerateParameters, "0, p, q must be distinct");
    cplx s = std::sqrt(q / p);
    cplx a = p * p + 2.0 * p * q - 3.0 * q * q;
    // branches at 0 fixed so that sqrt(-p) / sqrt(-q) = 1 / s, i.e. f ~ z^2
    cplx rp = std::sqrt(-p), rq = s * rp;
    cplx lg = std::log(rp + rq);
    auto antider = [&](cplx u, cplx sp, cplx sq, cplx l) {
        return 0.25 * s * (sp * sq * (4.0 * u - 2.0 * p + 6.0 * q) - 2.0 * a * l);
    };
    cplx f0 = antider(0, rp, rq, lg);
    const int steps = 2000;
    for (int k = 1; k <= steps; ++k) {
        cplx u = z * (double(k) / steps);
        if (k < steps && (std::abs(u - p) < 1e-14 || std::abs(u - q) < 1e-14))
            throw Error(ErrorKind::PathThroughSingularity, "segment [0, z] passes through p or q");
        rp = follow_sqrt(std::sqrt(u - p), rp);
        rq = follow_sqrt(std::sqrt(u - q), rq);
        cplx sum = rp + rq;
        if (sum != 0.0) lg = follow_log(std::log(sum), lg);
    }
    return antider(z, rp, rq, lg) - f0;
}

cplx fpq_schwarzian(cplx p, cplx q) { return (5.0 * p + 7.0 * q) * (p - q) / (16.0 * p * p * q * q); }

double fpq_energy_delta(cplx p, cplx q, double delta) {
    if (p == 0.0 || q == 0.0 || p == q) throw Error(ErrorKind::DegenerateParameters, "0, p, q must be distinct");
    double mag = 9 * std::pow(std::abs(p), 11) / (std::pow(4.0, 8) * std::pow(std::abs(q), 19) * std::pow(std::abs(p - q), 8));
    return 20 / (3 * kPi) * std::log(delta) + std::log(mag) / (3 * kPi);
}

double fpq_energy_flow_rate(double a, double c, double h) {
    auto ends = [](double aa, double cc) {
        cplx p(0, aa), q(0, cc);
        return std::pair<double, double>{fpq_eval(p, q, p).real(), fpq_eval(p, q, q).real()};
    };
    auto [fp0, fq0] = ends(a, c);
    // Newton on (a, c) so that f(p) and f(q) both move by -2e
    auto solve = [&](double e) {
        double x = a, y = c;
        for (int it = 0; it < 50; ++it) {
            auto [fp, fq] = ends(x, y);
            double r1 = fp - (fp0 - 2 * e), r2 = fq - (fq0 - 2 * e);
            if (std::abs(r1) + std::abs(r2) < 1e-14) break;
            double dx = 1e-7 * std::max(1.0, std::abs(x)), dy = 1e-7 * std::max(1.0, std::abs(y));
            auto [fpx, fqx] = ends(x + dx, y);
            auto [fpy, fqy] = ends(x, y + dy);
            double j11 = (fpx - fp) / dx, j12 = (fpy - fp) / dy, j21 = (fqx - fq) / dx, j22 = (fqy - fq) / dy;
            double det = j11 * j22 - j12 * j21;
            x -= (j22 * r1 - j12 * r2) / det;
            y -= (j11 * r2 - j21 * r1) / det;
        }
        return fpq_energy_delta(cplx(0, x), cplx(0, y), 1.0);
    };
    return (solve(h) - solve(-h)) / (2 * h);
}

cplx elbow_edge(double q, cplx z) { return q * std::sqrt(1.0 + 2.0 * z * z / q) - q; }

cplx elbow_corner(cplx q, cplx z) {
    cplx r = std::sqrt(-q);
    cplx s = r * std::sqrt(1.0 - z / q);  // (z - q)^{1/2} with s(0) = sqrt(-q)
    return 2.0 * r * (2.0 / 3.0 * s * s * s + 2.0 * q * s) + 8.0 * q * q / 3.0;
}

Jet elbow_edge_jet(double q) { return {0.0, -1 / (2 * q)}; }

Jet elbow_corner_jet(cplx q) { return {1.0 / (3.0 * q), (3.0 / (16.0 * q * q)).real()}; }

double cut_coefficient(CutKind kind) {
    switch (kind) {
        case CutKind::EdgeStart:
            return 6 / kPi;
        case CutKind::CornerStart:
            return 10 / (3 * kPi);
        case CutKind::EdgeEnd:
            return 18 / kPi;
        case CutKind::CornerEnd:
            return 46 / (3 * kPi);
    }
    return 0;
}

double cut_constant(CutKind kind) { return -kPi / 48 * cut_coefficient(kind); }

double cut_boundary_energy(CutKind kind, int j, double eps, double delta) {
    if (j < 1) throw Error(ErrorKind::DomainError, "cut step index must be positive");
    double a = cut_coefficient(kind);
    switch (kind) {
        case CutKind::EdgeStart:
            return a * std::log(1 / delta) + a * std::log(2 * eps * j) + 2 / kPi * std::log(2.0);
        case CutKind::CornerStart:
            return a * std::log(1 / delta) + a * std::log(eps * j) + 4 / kPi * std::log(1.5);
        case CutKind::EdgeEnd:
        case CutKind::CornerEnd:
            return a * std::log(eps / delta) - a * std::log(eps * j);
    }
    return 0;
}

double cut_energy_step(CutKind kind, int j, double eps, double delta) {
    if (kind == CutKind::EdgeStart || kind == CutKind::CornerStart)
        return cut_boundary_energy(kind, j + 1, eps, delta) - cut_boundary_energy(kind, j, eps, delta);
    if (j < 2) throw Error(ErrorKind::DomainError, "no step left at the end of the cut");
    return cut_boundary_energy(kind, j - 1, eps, delta) - cut_boundary_energy(kind, j, eps, delta);
}

double cut_schwarzian(CutKind kind, int j, double eps) {
    switch (kind) {
        case CutKind::EdgeStart:
            return schwarzian_sqrt(elbow_edge_jet(2 * eps * j));
        case CutKind::CornerStart:
            return schwarzian_sqrt(elbow_corner_jet(cplx(0, std::sqrt(0.75 * eps * j))));
        case CutKind::EdgeEnd:
            return -9 / (4 * eps * j);
        case CutKind::CornerEnd:
            return -23 / (12 * eps * j);
    }
    return 0;
}

std::pair<cplx, cplx> two_hole_coupling(const TwoHoleDisk& s, cplx v, cplx z) {
    check_pole(v, z);
    if (on_negative_axis(z)) throw Error(ErrorKind::BranchCutHit, "z lies on the cut from the hole");
    cplx vb = std::conj(v);
    cplx num = (z - s.b0) * (z - s.b1);
    cplx fp = 2.0 * num / (kPi * (z - v) * (v - s.b0) * (v - s.b1)) * std::sqrt(v) / std::sqrt(z);
    // sign chosen to agree with the half-plane form pulled back through (z - 1) / (z + 1)
    cplx fm = 2.0 * num / (kPi * (1.0 - z * vb) * (vb * s.b0 - 1.0) * (vb * s.b1 - 1.0)) * std::sqrt(vb) / std::sqrt(z);
    return {fp, fm};
}

std::pair<cplx, cplx> two_hole_coupling(const TwoHoleRHP& s, cplx v, cplx z) {
    check_pole(v, z);
    if (z.imag() == 0 && z.real() >= 0 && z.real() <= 1)
        throw Error(ErrorKind::BranchCutHit, "z lies on the cut from the hole");
    auto root = [](cplx u) { return std::sqrt(u - 1.0) * std::sqrt(u + 1.0); };
    cplx vb = std::conj(v);
    cplx fp = 2.0 * (z - s.b5) / (kPi * (z - v) * (v - s.b5)) * root(v) / root(z);
    cplx fm = -2.0 * (z - s.b5) / (kPi * (z + vb) * (vb + s.b5)) * root(vb) / root(z);
    return {fp, fm};
}

double lerw_ratio_law(double alpha, double beta, double eps) {
    if (alpha <= 0) throw Error(ErrorKind::DomainError, "alpha must be positive");
    return -0.75 * std::log(1 / eps) + 0.25 * std::log(alpha) - 0.5 * std::log(alpha * alpha + beta * beta);
}

double lerw_hit_probability(double alpha, double beta, double eps) {
    if (alpha < 0) throw Error(ErrorKind::DomainError, "alpha must be nonnegative");
    double r = std::hypot(alpha, beta);
    double c = alpha / r;
    return std::pow(eps / r, 0.75) * std::pow(c, 0.25);
}

}  // namespace tilinglab
