#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "tilinglab/conformal.hpp"
#include "tilinglab/coupling.hpp"
#include "tilinglab/energy.hpp"
#include "tilinglab/error.hpp"
#include "tilinglab/kasteleyn.hpp"
#include "tilinglab/lerw.hpp"
#include "tilinglab/report.hpp"
#include "tilinglab/slitgreens.hpp"
#include "tilinglab/treelap.hpp"

namespace tilinglab {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

[[noreturn]] void config_error(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::ConfigError, path + ": " + msg);
}

class Params {
public:
    explicit Params(const json& j) : j_(j) {
        if (!j_.is_object()) config_error("parameters", "expected an object");
    }

    bool has(const std::string& k) const { return j_.contains(k); }

    int integer(const std::string& k, std::optional<int> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        return as_int(j_[k], path(k));
    }
    double real(const std::string& k, std::optional<double> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        return as_real(j_[k], path(k));
    }
    bool flag(const std::string& k, bool def) const {
        if (!has(k)) return def;
        if (!j_[k].is_boolean()) config_error(path(k), "expected a boolean");
        return j_[k].get<bool>();
    }
    std::string text(const std::string& k, std::optional<std::string> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        if (!j_[k].is_string()) config_error(path(k), "expected a string");
        return j_[k].get<std::string>();
    }
    std::uint64_t seed() const {
        if (!has("seed")) config_error(path("seed"), "a seed is required for stochastic experiments");
        if (!j_["seed"].is_number_integer() || j_["seed"].get<long long>() < 0)
            config_error(path("seed"), "expected a non-negative integer");
        return j_["seed"].get<std::uint64_t>();
    }
    std::vector<int> integers(const std::string& k, std::optional<std::vector<int>> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        std::vector<int> out;
        for (std::size_t i = 0; i < list(k).size(); ++i) out.push_back(as_int(list(k)[i], path(k, i)));
        return out;
    }
    std::vector<double> reals(const std::string& k, std::optional<std::vector<double>> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        std::vector<double> out;
        for (std::size_t i = 0; i < list(k).size(); ++i) out.push_back(as_real(list(k)[i], path(k, i)));
        return out;
    }
    std::vector<std::string> texts(const std::string& k, std::optional<std::vector<std::string>> def = std::nullopt) const {
        if (!has(k)) return required(k, def);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < list(k).size(); ++i) {
            if (!list(k)[i].is_string()) config_error(path(k, i), "expected a string");
            out.push_back(list(k)[i].get<std::string>());
        }
        return out;
    }
    std::string file(const std::string& k) const {
        std::string p = text(k);
        std::ifstream in(p);
        if (!in) config_error(path(k), "file not found: " + p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::string path(const std::string& k) const { return "parameters." + k; }
    std::string path(const std::string& k, std::size_t i) const { return path(k) + "[" + std::to_string(i) + "]"; }

private:
    template <class T>
    T required(const std::string& k, const std::optional<T>& def) const {
        if (!def) config_error(path(k), "missing required field");
        return *def;
    }
    const json& list(const std::string& k) const {
        const json& v = j_[k];
        if (!v.is_array()) config_error(path(k), "expected a list");
        if (v.empty()) config_error(path(k), "list must be nonempty");
        return v;
    }
    static int as_int(const json& v, const std::string& p) {
        if (!v.is_number_integer()) config_error(p, "expected an integer");
        return v.get<int>();
    }
    static double as_real(const json& v, const std::string& p) {
        if (v.is_string()) {
            // "1/64" style fractions
            std::string s = v.get<std::string>();
            auto slash = s.find('/');
            try {
                if (slash == std::string::npos) return std::stod(s);
                return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
            } catch (const std::exception&) {
                config_error(p, "expected a number or fraction");
            }
        }
        if (!v.is_number()) config_error(p, "expected a number");
        return v.get<double>();
    }

    const json& j_;
};

std::pair<int, int> parse_grid(const std::string& s, const std::string& p) {
    auto x = s.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(s);
        int m = std::stoi(s.substr(0, x)), n = std::stoi(s.substr(x + 1));
        if (m < 1 || n < 1) throw std::invalid_argument(s);
        return {m, n};
    } catch (const std::exception&) {
        config_error(p, "expected a grid like 3x4");
    }
}

TemperleyanPolyomino temperleyan_rectangle(int m, int n) {
    std::vector<Point> cells;
    for (int y = 0; y < 2 * n - 1; ++y)
        for (int x = 0; x < 2 * m - 1; ++x)
            if (x || y) cells.push_back({x, y});
    return TemperleyanPolyomino(Polyomino(cells), {0, 0});
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int default_precision() {
    if (const char* e = std::getenv("TILINGLAB_PRECISION")) {
        try {
            int b = std::stoi(e);
            if (b >= 64) return b;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::ConfigError, "TILINGLAB_PRECISION: expected an integer >= 64");
    }
    return 128;
}

void count(const Params& p, Report& r) {
    std::vector<std::pair<std::string, std::string>> regions;
    if (p.has("regions"))
        for (auto& f : p.texts("regions")) {
            std::ifstream in(f);
            if (!in) config_error(p.path("regions"), "file not found: " + f);
            std::stringstream s;
            s << in.rdbuf();
            regions.push_back({f, s.str()});
        }
    if (p.has("region_text")) regions.push_back({"inline", p.text("region_text")});
    if (regions.empty()) config_error(p.path("regions"), "missing required field");
    bool enumerate = p.flag("enumerate", false);
    bool ok = true;
    for (auto& [id, text] : regions) {
        Polyomino cells = parse_region_ascii(text).cells;
        auto k = build_kasteleyn(cells);
        BigInt exact = count_tilings_exact(k);
        auto lc = log_count_tilings(k);
        ojson row{{"region", id}, {"cells", cells.size()}, {"count", exact.get_str()}, {"log_count", lc.value}};
        if (enumerate) {
            std::size_t e = enumerate_tilings(cells).size();
            row["enumerated"] = e;
            ok = ok && exact == BigInt(static_cast<unsigned long>(e));
        }
        row["method"] = "bareiss exact; log via " + lc.method;
        row["error_bound"] = lc.error_bound;
        r.add_row(row);
    }
    if (enumerate) r.criteria.push_back({"kasteleyn count equals enumeration", ok, ""});
}

void temperley(const Params& p, Report& r) {
    bool ok = true;
    auto grids = p.texts("grids");
    for (std::size_t i = 0; i < grids.size(); ++i) {
        auto [m, n] = parse_grid(grids[i], p.path("grids", i));
        auto c = verify_temperley(GridSubgraph::grid(m, n));
        ok = ok && c.equal;
        r.add_row({{"grid", grids[i]}, {"trees", c.trees.get_str()}, {"tilings", c.tilings.get_str()},
                   {"equal", c.equal}, {"method", "exact determinants"}, {"error_bound", 0}});
    }
    r.criteria.push_back({"spanning trees equal tilings", ok, ""});
}

void coupling(const Params& p, Report& r) {
    bool ok = true;
    auto grids = p.texts("grids");
    for (std::size_t i = 0; i < grids.size(); ++i) {
        auto [m, n] = parse_grid(grids[i], p.path("grids", i));
        auto h = GridSubgraph::grid(m, n);
        auto tp = temperleyan_from_subgraph(h);
        auto k = build_kasteleyn(tp);
        auto c = coupling_matrix(k);
        DiscreteGreens g(h);
        DualGreens dg(h);
        long bad = 0, entries = 0;
        for (Point w : k.whites())
            for (Point b : k.blacks()) {
                ++entries;
                if (!(coupling_via_greens(g, dg, w, b) == c.at(w, b))) ++bad;
            }
        ok = ok && bad == 0;
        r.add_row({{"grid", grids[i]}, {"cells", tp.size()}, {"entries", entries}, {"mismatches", bad},
                   {"method", "exact rational"}, {"error_bound", 0}});
    }
    r.criteria.push_back({"coupling via Green's functions equals inverse Kasteleyn", ok, ""});
}

void rect_expansion(const Params& p, Report& r) {
    auto sizes = p.integers("sizes", std::vector<int>{16, 24, 32, 48, 64});
    int bits = p.integer("precision", default_precision());
    double bound = p.real("bound_constant", 10.0);
    bool ok = true;
    for (int m : sizes)
        for (int n : sizes) {
            if (m < 2 || n < 2) config_error(p.path("sizes"), "sizes must be at least 2");
            BigFloat lt = rectangle_log_trees({m, n}, bits), ex = rectform_expansion({m, n}, bits);
            double res = (lt - ex).to_double();
            ok = ok && std::abs(res) * m * n <= bound;
            r.add_row({{"m", m}, {"n", n}, {"log_trees", lt.str(25)}, {"expansion", ex.str(25)}, {"residual", res},
                       {"residual_times_mn", res * m * n}, {"method", fmt("mpfr %d bit", bits)},
                       {"error_bound", std::ldexp(double(m) * n, -bits + 8)}});
        }
    r.criteria.push_back({fmt("|residual| <= %g/(mn) (bound constant is an implementer choice)", bound), ok, ""});
}

RectilinearPolygon polygon_param(const Params& p) {
    if (p.has("polygon")) return parse_polygon_json(p.file("polygon"));
    if (p.has("rectangle")) {
        auto wh = p.reals("rectangle");
        if (wh.size() != 2) config_error(p.path("rectangle"), "expected [width, height]");
        return RectilinearPolygon::rectangle(wh[0], wh[1]);
    }
    config_error(p.path("polygon"), "missing required field (or give rectangle)");
}

bool is_base_corner_rectangle(const RectilinearPolygon& u) {
    if (u.vertex_count() != 4) return false;
    PointD b = u.base_point(), c = u.corners()[0];
    return b.x == c.x && b.y == c.y;
}

void energy(const Params& p, Report& r) {
    auto u = polygon_param(p);
    double mesh = p.real("mesh", 1.0 / 256);
    auto deltas = p.reals("deltas", std::vector<double>{1.0 / 16, 1.0 / 32});
    double tol = p.real("tolerance", 0.03);
    auto f = solve_height(u, mesh);
    bool closed = is_base_corner_rectangle(u);
    bool ok = true;
    for (double d : deltas) {
        auto e = dirichlet_energy_delta(f, d);
        ojson row{{"delta", d}, {"energy", e.energy}, {"mesh", mesh}};
        if (closed) {
            double w = u.side_length(0), h = u.side_length(1);
            double c = rect_energy_closed(w, h / w, d);
            row["closed_form"] = c;
            row["relative_error"] = e.energy / c - 1;
            ok = ok && std::abs(e.energy / c - 1) <= tol;
        }
        row["method"] = fmt("CG on grid, relative residual %.1e", f.solve.relative_residual);
        row["error_bound"] = nullptr;
        r.add_row(row);
        for (const auto& ce : e.corner_breakdown)
            r.add_row({{"delta", d}, {"corner_x", ce.at.x}, {"corner_y", ce.at.y}, {"corner_expected", ce.expected},
                       {"corner_measured", ce.measured}, {"method", "annulus energy / log 2"}});
    }
    if (closed) r.criteria.push_back({fmt("rectangle energy within %g of closed form", tol), ok, ""});
}

void corner_law(const Params& p, Report& r) {
    auto u = polygon_param(p);
    auto deltas = p.reals("deltas", std::vector<double>{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64});
    int k = p.integer("cells_per_delta", 8);
    double tol = p.real("tolerance", 0.02);
    auto fit = corner_law_fit(u, deltas, k);
    for (std::size_t i = 0; i < fit.deltas.size(); ++i)
        r.add_row({{"delta", fit.deltas[i]}, {"energy", fit.energies[i]}, {"mesh", fit.meshes[i]},
                   {"method", "CG on grid"}});
    double expected = 4.0 * (u.vertex_count() - 4) / (3 * kPi) + 24 / kPi;
    r.add_row({{"slope", fit.slope}, {"expected", expected}, {"relative_error", fit.slope / expected - 1},
               {"method", "least squares against log(1/delta)"}});
    r.criteria.push_back({fmt("slope within %g of 4(V-4)/(3pi)+24/pi", tol), std::abs(fit.slope / expected - 1) <= tol, ""});
}

void main2(const Params& p, Report& r) {
    int m = p.integer("m", 32);
    auto aspects = p.integers("aspects", std::vector<int>{1, 2, 3});
    int k = p.integer("mesh_factor", 4);
    double tol = p.real("tolerance", 0.02);
    double eps = 1.0 / (2 * m);
    double lo = 1e300, hi = -1e300;
    for (int a : aspects) {
        auto tp = temperleyan_rectangle(m, a * m);
        auto f = solve_height(temperleyan_polygon(tp, eps), eps / k);
        auto e = dirichlet_energy_delta(f, eps);
        auto res = main2_assemble(tp, e);
        lo = std::min(lo, res.residual);
        hi = std::max(hi, res.residual);
        r.add_row({{"aspect", a}, {"eps", eps}, {"energy", e.energy}, {"log_count", res.log_count},
                   {"predicted", res.predicted}, {"residual", res.residual}, {"method", "log det plus CG energy"},
                   {"error_bound", res.log_count_error}});
    }
    r.criteria.push_back({fmt("residual spread <= %g", tol), hi - lo <= tol, fmt("spread %.5f", hi - lo)});
}

void conformal(const Params& p, Report& r) {
    int draws = p.integer("draws", 20);
    std::mt19937_64 rng(p.seed());
    std::uniform_real_distribution<double> pa(0.4, 2.5), qa(-2.5, -0.4);
    double worst_rate = 0, worst_s = 0;
    for (int i = 0; i < draws; ++i) {
        double a = pa(rng), c = qa(rng);
        cplx pp(0, a), q(0, c);
        double s = schwarzian_sqrt(fpq_jet(pp, q));
        double formula = ((5.0 * pp + 7.0 * q) * (pp - q) / (16.0 * pp * pp * q * q)).real();
        double rate = fpq_energy_flow_rate(a, c);
        worst_s = std::max(worst_s, std::abs(s - formula));
        worst_rate = std::max(worst_rate, std::abs(rate / (8 / kPi * s) - 1));
        r.add_row({{"p", a}, {"q", c}, {"schwarzian", s}, {"formula", formula}, {"rate", rate},
                   {"rate_over_schwarzian", rate / s}, {"method", "central differences"}, {"error_bound", nullptr}});
    }
    for (CutKind k : {CutKind::EdgeStart, CutKind::CornerStart, CutKind::EdgeEnd, CutKind::CornerEnd})
        r.add_row({{"cut_kind", static_cast<int>(k)}, {"coefficient", cut_coefficient(k)}, {"constant", cut_constant(k)},
                   {"method", "closed form"}, {"error_bound", 0}});
    r.criteria.push_back({"energy rate equals (8/pi) times the Schwarzian", worst_rate <= 1e-4, fmt("%.2e", worst_rate)});
    r.criteria.push_back({"Schwarzian jet matches the closed form", worst_s <= 1e-10, fmt("%.2e", worst_s)});
}

void lerw_exponent(const Params& p, Report& r) {
    auto sizes = p.integers("sizes", std::vector<int>{64, 128, 256, 512});
    int samples = p.integer("samples", 500);
    int boot = p.integer("bootstrap", 400);
    auto f = growth_exponent(sizes, samples, p.seed(), boot);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        r.add_row({{"N", sizes[i]}, {"mean_count", f.means[i]}, {"method", "Monte Carlo mean"},
                   {"error_bound", f.mean_errors[i]}});
    r.add_row({{"exponent", f.exponent}, {"method", "log-log least squares, bootstrap SE"},
               {"error_bound", f.standard_error}});
    r.criteria.push_back({"exponent in [1.20, 1.30]", f.exponent >= 1.20 && f.exponent <= 1.30,
                          fmt("%.4f +- %.4f", f.exponent, f.standard_error)});
}

void lerw_profile(const Params& p, Report& r) {
    int n = p.integer("N", 256);
    auto prof = angular_profile(n, p.integer("samples", 10000), p.integer("bins", 9), p.seed());
    bool shape = true;
    for (const auto& b : prof.bins) {
        r.add_row({{"theta", b.theta}, {"value", b.value}, {"ratio", b.ratio}, {"cos_quarter", b.cos_quarter},
                   {"method", "Monte Carlo"}, {"error_bound", b.error}});
        if (std::abs(b.theta) <= kPi / 3 + 1e-12) shape = shape && std::abs(b.ratio / b.cos_quarter - 1) <= 0.2;
    }
    r.add_row({{"radial_slope", prof.radial_slope}, {"method", "log-log least squares on the axis"}});
    r.criteria.push_back({"radial slope in [-0.85, -0.65]", prof.radial_slope >= -0.85 && prof.radial_slope <= -0.65,
                          fmt("%.4f", prof.radial_slope)});
    r.criteria.push_back({"angular ratio within 20% of cos^(1/4) for |theta| <= pi/3", shape, ""});
}

void two_hole(const Params& p, Report& r) {
    auto sides = p.integers("sides", std::vector<int>{3, 5});
    bool ok = true;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        int s = sides[i];
        if (s < 3 || s % 2 == 0) config_error(p.path("sides", i), "expected an odd side >= 3");
        auto h = GridSubgraph::grid((s + 1) / 2, (s + 1) / 2);
        auto tp = temperleyan_from_subgraph(h);
        for (Point b : tp.polyomino().cells()) {
            if (cell_class(b) != CellClass::B0 || !h.on_outer_face(b)) continue;
            for (Point w : tp.polyomino().cells()) {
                if (is_black_cell(w)) continue;
                auto c = two_hole_bijection_check(tp, b, w);
                ok = ok && c.equal;
                r.add_row({{"side", s}, {"b_x", b.x}, {"b_y", b.y}, {"w_x", w.x}, {"w_y", w.y}, {"tilings_q", c.tilings_q},
                           {"trees_through_w", c.trees_through_w}, {"equal", c.equal}, {"method", "exact enumeration"},
                           {"error_bound", 0}});
            }
        }
    }
    r.criteria.push_back({"tilings equal trees through w for every boundary b", ok, ""});
}

void ratio(const Params& p, Report& r) {
    auto fit = ratio_experiment(p.reals("alphas", std::vector<double>{0.5, 0.75, 1.0}),
                                p.reals("betas", std::vector<double>{0.0, 0.5}),
                                p.reals("eps", std::vector<double>{1.0 / 16, 1.0 / 32, 1.0 / 64}), p.real("K", 4));
    for (const auto& pt : fit.points)
        r.add_row({{"eps", pt.eps}, {"alpha", pt.alpha}, {"beta", pt.beta}, {"log_ratio", pt.log_ratio},
                   {"method", "kasteleyn log det"}, {"error_bound", pt.error}});
    r.add_row({{"c_eps", fit.c_eps}, {"c_alpha", fit.c_alpha}, {"c_radius", fit.c_radius}, {"c_const", fit.c_const},
               {"method", "least squares"}});
    r.criteria.push_back({"slope vs log(1/eps) in [-0.80, -0.70]", fit.c_eps >= -0.80 && fit.c_eps <= -0.70,
                          fmt("%.4f", fit.c_eps)});
    if (fit.radius_separated)
        r.criteria.push_back({"coefficient on log(alpha^2+beta^2) negative", fit.c_radius < 0, fmt("%.4f", fit.c_radius)});
}

void slit(const Params& p, Report& r) {
    int m = p.integer("size", 512);
    if (m < 16) config_error(p.path("size"), "expected at least 16");
    auto g = slit_greens(SlitBox(m));
    int lo = m / 8, hi = m / 4;
    auto prof = slit_decay_profile(g, lo, hi);
    for (int x = lo; x <= hi; ++x)
        r.add_row({{"x", x}, {"G", g(x, 0)}, {"G_sqrt_x", prof[x - lo]},
                   {"method", fmt("CG, relative residual %.1e", g.solve.relative_residual)}, {"error_bound", nullptr}});
    double spread = plateau_spread(prof);
    std::string detail = fmt("spread %.4f", spread);
    if (p.flag("compare_half", true)) {
        auto h = slit_greens(SlitBox(m / 2));
        double sh = plateau_spread(slit_decay_profile(h, lo / 2, hi / 2));
        detail += fmt("; M/2 spread %.4f; |G(0,%d)| at M vs M/2: %.6g vs %.6g", sh, hi / 2, std::abs(g(hi / 2, 0)),
                      std::abs(h(hi / 2, 0)));
    }
    r.criteria.push_back({"plateau of |G(0,x)| sqrt(x) within 10% over [M/8, M/4]", spread <= 0.10, detail});
}

const std::map<std::string, std::function<void(const Params&, Report&)>>& registry() {
    static const std::map<std::string, std::function<void(const Params&, Report&)>> r{
        {"count", count},         {"temperley", temperley},         {"coupling", coupling},
        {"rect-expansion", rect_expansion}, {"energy", energy},     {"corner-law", corner_law},
        {"main2", main2},         {"conformal", conformal},         {"lerw-exponent", lerw_exponent},
        {"lerw-profile", lerw_profile}, {"two-hole", two_hole},     {"ratio", ratio},
        {"slit-greens", slit}};
    return r;
}

}  // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : registry()) out.push_back(k);
    return out;
}

Report run_experiment(const nlohmann::json& config) {
    if (!config.is_object()) throw Error(ErrorKind::ConfigError, "config: expected a JSON object");
    for (auto it = config.begin(); it != config.end(); ++it)
        if (it.key() != "experiment" && it.key() != "parameters" && it.key() != "output")
            throw Error(ErrorKind::ConfigError, it.key() + ": unknown field");
    if (!config.contains("experiment") || !config["experiment"].is_string())
        throw Error(ErrorKind::ConfigError, "experiment: missing or not a string");
    std::string id = config["experiment"].get<std::string>();
    auto it = registry().find(id);
    if (it == registry().end()) throw Error(ErrorKind::ConfigError, "experiment: unknown experiment '" + id + "'");
    static const json empty = json::object();
    const json& params = config.contains("parameters") ? config["parameters"] : empty;
    Params p(params);

    Report r;
    r.experiment = id;
    r.inputs = ojson::parse(params.dump());
    r.version = library_version();
    auto t0 = std::chrono::steady_clock::now();
    it->second(p, r);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace tilinglab
