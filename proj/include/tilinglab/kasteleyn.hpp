#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tilinglab/numbers.hpp"
#include "tilinglab/region.hpp"

namespace tilinglab {

// Bipartite Kasteleyn matrix: rows are white cells, columns black cells.
// Every nonzero entry is a power of i.
class KasteleynMatrix {
public:
    struct Entry {
        int col;
        int power;  // entry value is i^power
    };

    KasteleynMatrix(std::vector<Point> whites, std::vector<Point> blacks, std::vector<std::vector<Entry>> rows);

    int dim() const { return static_cast<int>(whites_.size()); }
    const std::vector<Point>& whites() const { return whites_; }
    const std::vector<Point>& blacks() const { return blacks_; }
    const std::vector<Entry>& row(int r) const { return rows_[r]; }
    int row_of(Point w) const;
    int col_of(Point b) const;

    // i^power of entry (r, c), or -1 when the entry is zero.
    int power(int r, int c) const;
    GaussInt entry(int r, int c) const;
    void flip(int r, int c);

    std::vector<std::vector<GaussInt>> dense() const;
    Eigen::SparseMatrix<std::complex<double>> to_sparse() const;

private:
    std::vector<Point> whites_, blacks_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<std::pair<Point, int>> wlookup_, blookup_;
};

// Weight seen from a white cell: right 1, up i, left -1, down -i.
int kasteleyn_power(Point white, Point black);

KasteleynMatrix build_kasteleyn(const Polyomino& p);
inline KasteleynMatrix build_kasteleyn(const TemperleyanPolyomino& p) { return build_kasteleyn(p.polyomino()); }

// Fraction-free elimination; pivot on largest norm, ties to lowest row.
GaussInt bareiss_determinant(std::vector<std::vector<GaussInt>> m);
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

BigInt count_tilings_exact(const KasteleynMatrix& k);

struct LogCount {
    double value = 0;
    std::string method;
    double error_bound = 0;
};

LogCount log_count_tilings(const KasteleynMatrix& k, int precision_bits = 53);

struct HoleSpec {
    Point removed_black;
    Point removed_white;
    // Lattice points (cell corners), from a point on the outer boundary of the
    // region to a corner of removed_white.
    std::vector<Point> flip_path;
};

KasteleynMatrix kasteleyn_with_holes(const Polyomino& p, const HoleSpec& holes);
KasteleynMatrix kasteleyn_with_holes(const TemperleyanPolyomino& p, const HoleSpec& holes);

// Shortest lattice path from the outer boundary of p to a corner of w.
std::vector<Point> default_flip_path(const Polyomino& p, Point w);
std::vector<Point> random_flip_path(const Polyomino& p, Point w, std::uint64_t seed);

struct Domino {
    Point white, black;
    auto operator<=>(const Domino&) const = default;
};
using Tiling = std::vector<Domino>;

std::vector<Tiling> enumerate_tilings(const Polyomino& p, std::size_t cap = 1000000);
std::uint64_t count_tilings_enumeration(const Polyomino& p);

}  // namespace tilinglab
