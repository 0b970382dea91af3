#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilinglab {

struct Point {
    int x = 0, y = 0;
    auto operator<=>(const Point&) const = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

struct PointHash {
    std::size_t operator()(const Point& p) const {
        return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^ static_cast<unsigned>(p.y));
    }
};

// Row-major order by (y, x), used to pick "lowest-leftmost".
inline bool lower_left_less(Point a, Point b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

enum class CellClass { B0, B1, W0, W1 };

CellClass cell_class(Point c);
const char* cell_class_name(CellClass c);
inline bool is_black_cell(Point c) { return ((c.x + c.y) & 1) == 0; }

// Subgraph of the grid 2Z^2. Edges are identified by their midpoints, faces by
// their centers, so vertices, edges and faces are exactly the B0, W and B1
// cells of the superposition.
class GridSubgraph {
public:
    GridSubgraph(std::vector<Point> vertices, std::vector<Point> edge_midpoints,
                 std::optional<Point> base = std::nullopt);

    static GridSubgraph from_vertex_pairs(const std::vector<Point>& vertices,
                                          const std::vector<std::pair<Point, Point>>& edges,
                                          std::optional<Point> base = std::nullopt);
    // m vertices along x, n along y, vertices at (2i, 2j).
    static GridSubgraph grid(int m, int n, std::optional<Point> base = std::nullopt);
    // All unit edges between the given vertices.
    static GridSubgraph induced(const std::vector<Point>& vertices, std::optional<Point> base = std::nullopt);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Point>& edges() const { return edges_; }
    const std::vector<Point>& faces() const { return faces_; }
    Point base() const { return base_; }

    bool has_vertex(Point v) const { return vindex_.count(v) != 0; }
    bool has_edge(Point mid) const { return eset_.count(mid) != 0; }
    bool has_face(Point center) const { return fset_.count(center) != 0; }
    int vertex_index(Point v) const;
    std::vector<Point> neighbors(Point v) const;

    bool on_outer_face(Point v) const;
    // Number of boundary edge sides: sum over edges of (2 - adjacent faces).
    int boundary_length() const;

private:
    void validate();

    std::vector<Point> vertices_, edges_, faces_;
    std::map<Point, int> vindex_;
    std::map<Point, int> eset_, fset_;
    Point base_;
};

// Finite set of unit cells [x, x+1] x [y, y+1].
class Polyomino {
public:
    Polyomino() = default;
    explicit Polyomino(std::vector<Point> cells);

    const std::vector<Point>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool contains(Point c) const { return index_.count(c) != 0; }
    int index_of(Point c) const;

    std::vector<Point> whites() const;
    std::vector<Point> blacks() const;
    long perimeter() const;
    Polyomino without(const std::vector<Point>& removed) const;
    Polyomino with(const std::vector<Point>& added) const;

private:
    std::vector<Point> cells_;
    std::map<Point, int> index_;
};

// Ordered boundary corners of a simply connected polyomino (lattice points,
// counterclockwise, starting from the lowest-leftmost corner) and whether
// each is convex.
struct PolyominoBoundary {
    std::vector<Point> corners;
    std::vector<bool> convex;
};
PolyominoBoundary trace_boundary(const Polyomino& p);

class TemperleyanPolyomino {
public:
    TemperleyanPolyomino(Polyomino cells, Point base, std::optional<double> scale = std::nullopt);

    const Polyomino& polyomino() const { return cells_; }
    Point base_square() const { return base_; }
    std::optional<double> scale() const { return scale_; }
    void set_scale(double eps) { scale_ = eps; }

    CellClass class_of(Point c) const { return cell_class(c); }
    std::size_t size() const { return cells_.size(); }
    // Cells together with the base square.
    Polyomino closure() const { return cells_.with({base_}); }
    GridSubgraph subgraph() const;
    bool boundary_parity_ok() const;

private:
    Polyomino cells_;
    Point base_;
    std::optional<double> scale_;
};

TemperleyanPolyomino temperleyan_from_subgraph(const GridSubgraph& h);

struct PointD {
    double x = 0, y = 0;
};

class RectilinearPolygon {
public:
    RectilinearPolygon(std::vector<PointD> corners, PointD base_point);

    const std::vector<PointD>& corners() const { return corners_; }
    PointD base_point() const { return base_; }
    int vertex_count() const { return static_cast<int>(corners_.size()); }
    bool convex(int i) const { return convex_[i]; }
    int concave_count() const;
    double min_side() const;
    double area() const;
    bool contains(PointD p) const;
    // Arc-length position along the counterclockwise boundary from corner 0,
    // or nullopt if p is farther than tol from the boundary.
    std::optional<double> boundary_position(PointD p, double tol = 1e-9) const;
    double side_length(int i) const;
    double perimeter() const;

    static RectilinearPolygon rectangle(double w, double h);

private:
    std::vector<PointD> corners_;
    std::vector<bool> convex_;
    PointD base_;
};

double boundary_turning(const RectilinearPolygon& u, PointD x);
// Boundary values (2/pi) * turning, i.e. the number of quarter turns.
int boundary_height(const RectilinearPolygon& u, PointD x);

TemperleyanPolyomino approximate_polygon(const RectilinearPolygon& u, double eps);

// ASCII region format: '#' cell, '.' empty, 'X' base square; the top text line
// is the highest row and the bounding box is shifted to the origin.
struct RegionFile {
    Polyomino cells;
    std::optional<Point> base;
};
RegionFile parse_region_ascii(const std::string& text);
std::string render_region_ascii(const Polyomino& cells, std::optional<Point> base = std::nullopt);
TemperleyanPolyomino temperleyan_from_ascii(const std::string& text);

RectilinearPolygon parse_polygon_json(const std::string& text);
std::string polygon_to_json(const RectilinearPolygon& u);

}  // namespace tilinglab
