#pragma once

#include <utility>
#include <vector>

#include "tilinglab/bigfloat.hpp"
#include "tilinglab/numbers.hpp"
#include "tilinglab/region.hpp"

namespace tilinglab {

// Sparse integer Laplacian over the vertices of H (degree on the diagonal,
// -1 per edge).
struct LaplacianMatrix {
    std::vector<Point> vertices;
    std::vector<std::vector<std::pair<int, long>>> rows;

    std::vector<std::vector<BigInt>> reduced_dense(int removed) const;
};

LaplacianMatrix laplacian(const GridSubgraph& h);

BigInt spanning_tree_count(const GridSubgraph& h);
// Multigraph on vertices 0..n-1; loops are ignored.
BigInt spanning_tree_count(int n, const std::vector<std::pair<int, int>>& edges);

struct TemperleyCheck {
    BigInt trees;
    BigInt tilings;
    bool equal = false;
};

TemperleyCheck verify_temperley(const GridSubgraph& h);

struct RectangleSpec {
    int m = 1, n = 1;
    Rational tau() const { return Rational(n) / m; }
};

// log of the spanning-tree count of the m x n grid from the eigenvalue product.
BigFloat rectangle_log_trees(RectangleSpec spec, int precision_bits = 128);

BigFloat catalan_constant(int precision_bits = 128);
BigFloat dedekind_eta(const BigFloat& q, int precision_bits = 128);

// Five-term asymptotic expansion of the rectangle tree count. The constant
// term is (5/4) log 2; rectform_expansion_literal keeps -(1/4) log 2.
BigFloat rectform_expansion(RectangleSpec spec, int precision_bits = 128);
BigFloat rectform_expansion_literal(RectangleSpec spec, int precision_bits = 128);

}  // namespace tilinglab
