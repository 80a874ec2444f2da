#pragma once

#include <utility>
#include <vector>

#include "idealpack/ideal.hpp"

namespace idealpack {

/// A hypergraph (clutter): vertices from a variable context plus an
/// antichain of nonempty edges, each a sorted vertex-index list. Edges are
/// kept sorted by their support sets. The `unit` state stands in for "some
/// edge was contracted away entirely"; it corresponds to the unit ideal and
/// carries no edges of its own.
struct Hypergraph {
    VariableContext ctx;
    std::vector<std::vector<int>> edges;
    bool unit = false;

    int num_vertices() const { return ctx.size(); }
    int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Constructs a hypergraph, sorting edge vertex lists, discarding
/// non-minimal edges and fixing the canonical edge order.
Hypergraph make_hypergraph(VariableContext ctx, std::vector<std::vector<int>> edges);

/// 0/1 matrix with explicit dimensions. Rows/columns follow the fixed
/// ordering conventions (vertices in context order, edges and primes in
/// support-lex order).
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries; // rows x cols, each 0 or 1

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), entries(r, std::vector<int>(c, 0)) {}

    bool operator==(const BinaryMatrix& other) const = default;
};

BinaryMatrix transpose(const BinaryMatrix& m);

/// I(H): one square-free generator per edge.
MonomialIdeal edge_ideal(const Hypergraph& H);

/// Inverse of edge_ideal; rejects non-square-free ideals.
Hypergraph hypergraph_of(const MonomialIdeal& I);

/// I^v: generated by the products over each minimal prime. Degenerate
/// conventions making the involution total: (0)^v = (1) and (1)^v = (0).
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// H^v, the blocker: edges are the minimal vertex covers of H.
Hypergraph blocker(const Hypergraph& H);

/// n x t incidence matrix B, B[i][j] = 1 iff vertex i lies in edge j.
BinaryMatrix incidence_matrix(const Hypergraph& H);

/// s x n prime decomposition matrix A, A[i][j] = 1 iff x_j lies in prime i.
BinaryMatrix prime_matrix(const MonomialIdeal& I);

/// Deletes the vertices in `del` (dropping edges that meet them) and
/// contracts the vertices in `contract` (erasing them from edges), then
/// re-minimizes. The ambient vertex set stays fixed. A fully contracted
/// edge puts the result into the unit state.
Hypergraph minor(const Hypergraph& H, const std::vector<int>& del,
                 const std::vector<int>& contract);

/// Rebuilds H on only the vertices that appear in some edge.
Hypergraph compactify(const Hypergraph& H);

struct CoversAndIndependentSets {
    std::vector<std::vector<int>> minimal_covers;
    std::vector<std::vector<int>> maximal_independent_sets; // complements, same order
};

/// Minimal vertex covers (= supports of the minimal primes of I(H)) and
/// their complements, the maximal independent sets.
CoversAndIndependentSets covers_and_sets(const Hypergraph& H);

/// Every edge has the same cardinality. Edgeless hypergraphs count as
/// uniform; the unit state does not.
bool is_uniform(const Hypergraph& H);

/// All minimal primes of the (square-free) ideal share one height.
bool is_equidimensional(const MonomialIdeal& I);

} // namespace idealpack
