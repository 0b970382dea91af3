#pragma once

#include <map>
#include <vector>

#include "tilinglab/kasteleyn.hpp"
#include "tilinglab/numbers.hpp"
#include "tilinglab/region.hpp"

namespace tilinglab {

// Exact inverse of a Kasteleyn matrix. at(w, b) is the entry paired with
// white w and black b, so sum_b K(w', b) C(w, b) = [w == w'].
class CouplingMatrix {
public:
    CouplingMatrix(std::vector<Point> whites, std::vector<Point> blacks, std::vector<std::vector<QComplex>> inv);

    const QComplex& at(Point white, Point black) const;
    const std::vector<Point>& whites() const { return whites_; }
    const std::vector<Point>& blacks() const { return blacks_; }
    // Full-matrix convention: zero for same-colored cells, symmetric otherwise.
    QComplex full(Point a, Point b) const;

private:
    std::vector<Point> whites_, blacks_;
    std::map<Point, int> wi_, bi_;
    std::vector<std::vector<QComplex>> inv_;  // indexed [black][white]
};

CouplingMatrix coupling_matrix(const KasteleynMatrix& k);

// True when K * C is exactly the identity.
bool verify_inverse(const KasteleynMatrix& k, const CouplingMatrix& c);

// Probability that every listed domino appears in a uniform tiling.
Rational local_probability(const CouplingMatrix& c, const KasteleynMatrix& k, const std::vector<Domino>& dominos);

// Base-rooted Green's function on the vertices of H: G(x, b) = 0 and
// sum over neighbors of (G(x, y) - G(x, y')) = [y == x] for y != b.
class DiscreteGreens {
public:
    explicit DiscreteGreens(const GridSubgraph& h);

    Rational operator()(Point x, Point y) const;
    const GridSubgraph& graph() const { return h_; }
    // Graph Laplacian of G(x, .) at y.
    Rational laplacian_at(Point x, Point y) const;

private:
    GridSubgraph h_;
    std::vector<int> red_;
    std::vector<std::vector<Rational>> inv_;
};

inline DiscreteGreens discrete_greens(const GridSubgraph& h) { return DiscreteGreens(h); }

// Green's function on the bounded faces of H, zero on the outer face.
class DualGreens {
public:
    explicit DualGreens(const GridSubgraph& h);

    Rational operator()(Point f, Point g) const;
    Rational laplacian_at(Point f, Point g) const;

private:
    GridSubgraph h_;
    std::map<Point, int> idx_;
    std::vector<std::vector<Rational>> inv_;
};

QComplex coupling_via_greens(const DiscreteGreens& g, const DualGreens& dual, Point white, Point black);
QComplex coupling_via_greens(const GridSubgraph& h, Point white, Point black);

struct HeightField {
    std::map<Point, int> values;
    Point anchor;
};

// Heights on cell corners; the anchor is the lowest-leftmost corner.
HeightField height_function(const Polyomino& p, const Tiling& t);
inline HeightField height_function(const TemperleyanPolyomino& p, const Tiling& t) {
    return height_function(p.polyomino(), t);
}

std::map<Point, Rational> average_height(const TemperleyanPolyomino& p);
std::map<Point, Rational> average_height_enumeration(const Polyomino& p);

}  // namespace tilinglab
