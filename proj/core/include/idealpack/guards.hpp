#pragma once

#include <cstdint>
#include <string>

#include "idealpack/errors.hpp"

namespace idealpack {

// Resource guards for the search-shaped operations. All caps are plain
// configuration: exceeding one raises GuardExceededError, it never silently
// truncates a search.
struct Guards {
    int ip_var_cap = 24;            // solve_ip: number of variables
    int vertex_enum_cap = 12;       // vertex_enumerate: ambient dimension
    int packing_vertex_cap = 14;    // is_packed: 3^n substitution scan
    int family_vertex_cap = 6;      // exhaustive family enumeration
    int family_edge_cap = 6;        // edges per enumerated hypergraph
    int sympower_m_cap = 8;         // symbolic/ordinary power exponent
    std::int64_t sympower_term_cap = 2'000'000;   // intermediate generator budget
    std::int64_t lattice_point_cap = 200'000'000; // box scan budget
    std::int64_t search_node_cap = 50'000'000;    // backtracking node budget

    static Guards small();
    static Guards defaults() { return Guards{}; }
    static Guards large();

    /// Profile by name: "small", "default" or "large".
    static Guards profile(const std::string& name);
};

inline Guards Guards::small() {
    Guards g;
    g.ip_var_cap = 16;
    g.vertex_enum_cap = 10;
    g.packing_vertex_cap = 10;
    g.family_vertex_cap = 5;
    g.family_edge_cap = 5;
    g.sympower_m_cap = 4;
    g.sympower_term_cap = 200'000;
    g.lattice_point_cap = 20'000'000;
    g.search_node_cap = 5'000'000;
    return g;
}

inline Guards Guards::large() {
    Guards g;
    g.ip_var_cap = 32;
    g.vertex_enum_cap = 14;
    g.packing_vertex_cap = 18;
    g.family_vertex_cap = 7;
    g.family_edge_cap = 8;
    g.sympower_m_cap = 12;
    g.sympower_term_cap = 20'000'000;
    g.lattice_point_cap = 2'000'000'000;
    g.search_node_cap = 500'000'000;
    return g;
}

inline Guards Guards::profile(const std::string& name) {
    if (name == "small") return small();
    if (name == "default" || name.empty()) return defaults();
    if (name == "large") return large();
    throw UnsupportedInputError("unknown guard profile: " + name);
}

} // namespace idealpack
