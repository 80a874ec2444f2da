#include "idealpack/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace idealpack {

namespace {

std::vector<Monomial> edge_monomials(const Hypergraph& H) {
    std::vector<Monomial> gens;
    gens.reserve(H.edges.size());
    for (const auto& e : H.edges)
        gens.push_back(Monomial::from_support(H.ctx.size(), e));
    return gens;
}

} // namespace

Hypergraph make_hypergraph(VariableContext ctx, std::vector<std::vector<int>> edges) {
    const int n = ctx.size();
    for (auto& e : edges) {
        if (e.empty()) throw UnsupportedInputError("hypergraph edges must be nonempty");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 0 || v >= n) throw UnsupportedInputError("edge vertex out of range");
    }
    // Keep only inclusion-minimal edges, then sort by support.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::vector<int>> minimal;
    for (const auto& e : edges) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (std::includes(e.begin(), e.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end());
    return Hypergraph{std::move(ctx), std::move(minimal), false};
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.entries[j][i] = m.entries[i][j];
    return t;
}

MonomialIdeal edge_ideal(const Hypergraph& H) {
    if (H.unit)
        return MonomialIdeal(H.ctx, {Monomial::one(H.ctx.size())});
    return MonomialIdeal(H.ctx, edge_monomials(H));
}

Hypergraph hypergraph_of(const MonomialIdeal& I) {
    if (!I.is_square_free())
        throw UnsupportedInputError("hypergraph_of requires a square-free ideal");
    if (I.is_unit()) return Hypergraph{I.context(), {}, true};
    std::vector<std::vector<int>> edges;
    edges.reserve(I.generators().size());
    for (const auto& g : I.generators()) edges.push_back(g.support());
    return make_hypergraph(I.context(), std::move(edges));
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!I.is_square_free())
        throw UnsupportedInputError("alexander_dual requires a square-free ideal");
    // Degenerate pair: the dual of the zero ideal is the unit ideal and
    // conversely, which keeps the involution and the minor-duality
    // identities total.
    if (I.is_zero())
        return MonomialIdeal(I.context(), {Monomial::one(I.context().size())});
    if (I.is_unit()) return MonomialIdeal(I.context(), {});
    return MonomialIdeal(I.context(), prime_decompose(I).primes);
}

Hypergraph blocker(const Hypergraph& H) {
    return hypergraph_of(alexander_dual(edge_ideal(H)));
}

BinaryMatrix incidence_matrix(const Hypergraph& H) {
    if (H.unit)
        throw UnsupportedInputError("the unit hypergraph has no incidence matrix");
    BinaryMatrix B(H.ctx.size(), H.num_edges());
    for (int j = 0; j < H.num_edges(); ++j)
        for (int v : H.edges[j]) B.entries[v][j] = 1;
    return B;
}

BinaryMatrix prime_matrix(const MonomialIdeal& I) {
    const PrimeDecomposition dec = prime_decompose(I);
    BinaryMatrix A(static_cast<int>(dec.primes.size()), I.context().size());
    for (std::size_t i = 0; i < dec.primes.size(); ++i)
        for (int v : dec.primes[i].support()) A.entries[i][v] = 1;
    return A;
}

Hypergraph minor(const Hypergraph& H, const std::vector<int>& del,
                 const std::vector<int>& contract) {
    const int n = H.ctx.size();
    std::vector<char> is_del(n, 0), is_con(n, 0);
    for (int v : del) {
        if (v < 0 || v >= n) throw UnsupportedInputError("minor vertex out of range");
        is_del[v] = 1;
    }
    for (int v : contract) {
        if (v < 0 || v >= n) throw UnsupportedInputError("minor vertex out of range");
        if (is_del[v])
            throw UnsupportedInputError("deletion and contraction sets overlap at " +
                                        H.ctx.name(v));
        is_con[v] = 1;
    }
    if (H.unit) return H;

    std::vector<std::vector<int>> edges;
    for (const auto& e : H.edges) {
        bool deleted = false;
        std::vector<int> shrunk;
        for (int v : e) {
            if (is_del[v]) { deleted = true; break; }
            if (!is_con[v]) shrunk.push_back(v);
        }
        if (deleted) continue;
        if (shrunk.empty()) return Hypergraph{H.ctx, {}, true};
        edges.push_back(std::move(shrunk));
    }
    return make_hypergraph(H.ctx, std::move(edges));
}

Hypergraph compactify(const Hypergraph& H) {
    if (H.unit) return H;
    std::set<int> used;
    for (const auto& e : H.edges) used.insert(e.begin(), e.end());
    std::vector<std::string> names;
    std::vector<int> remap(H.ctx.size(), -1);
    for (int v : used) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(H.ctx.name(v));
    }
    if (names.empty()) names.push_back(H.ctx.name(0)); // contexts cannot be empty
    std::vector<std::vector<int>> edges;
    edges.reserve(H.edges.size());
    for (const auto& e : H.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(remap[v]);
        edges.push_back(std::move(mapped));
    }
    return make_hypergraph(VariableContext(std::move(names)), std::move(edges));
}

CoversAndIndependentSets covers_and_sets(const Hypergraph& H) {
    if (H.unit || H.edges.empty())
        throw UnsupportedInputError("covers_and_sets requires a nonempty edge set");
    const PrimeDecomposition dec = prime_decompose(edge_ideal(H));
    CoversAndIndependentSets out;
    for (const auto& p : dec.primes) {
        std::vector<int> cover = p.support();
        std::vector<int> complement;
        std::vector<char> in_cover(H.ctx.size(), 0);
        for (int v : cover) in_cover[v] = 1;
        for (int v = 0; v < H.ctx.size(); ++v)
            if (!in_cover[v]) complement.push_back(v);
        out.minimal_covers.push_back(std::move(cover));
        out.maximal_independent_sets.push_back(std::move(complement));
    }
    return out;
}

bool is_uniform(const Hypergraph& H) {
    if (H.unit) return false;
    for (const auto& e : H.edges)
        if (e.size() != H.edges.front().size()) return false;
    return true;
}

bool is_equidimensional(const MonomialIdeal& I) {
    const PrimeDecomposition dec = prime_decompose(I);
    for (int h : dec.heights)
        if (h != dec.height) return false;
    return true;
}

} // namespace idealpack
