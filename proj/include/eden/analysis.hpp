// analysis.hpp -- structural analysis of edge presentations: connectivity,
// period, mixing, non-wandering part, periodic counts, entropy, and the
// cyclic-class decomposition of non-wandering presentations.

#ifndef EDEN_ANALYSIS_HPP
#define EDEN_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "eden/shift.hpp"

namespace eden {

struct SccDecomposition {
    std::vector<std::vector<int>> components;  // sorted vertex lists, canonical order
    std::vector<bool> recurrent;               // has an internal edge
    std::vector<int> component_of;             // vertex -> component index
};

SccDecomposition scc_decompose(const EdgePresentation& p);

bool is_irreducible(const EdgePresentation& p);

/// gcd of all cycle lengths of an irreducible presentation.
int period(const EdgePresentation& p);

bool is_mixing(const EdgePresentation& p);

/// True iff every edge stays inside a recurrent strongly connected component.
bool is_nonwandering(const EdgePresentation& p);

/// Edges whose endpoints lie in different components (or touch a
/// non-recurrent vertex); empty iff the presentation is non-wandering.
std::vector<Edge> wandering_edges(const EdgePresentation& p);

/// Restriction to the recurrent components with intra-component edges only.
EdgePresentation nonwandering_part(const EdgePresentation& p);

/// Number of points fixed by the n-th power of the shift (period-n points in
/// the "admitting n as a period" sense), computed as trace(A^n).
BigInt count_periodic(const EdgePresentation& p, int n);

/// Points of least period exactly n (Moebius inversion of count_periodic).
BigInt count_least_period(const EdgePresentation& p, int n);

struct EntropyResult {
    double value = 0.0;
    double lower = 0.0;   // certified enclosure of the true entropy
    double upper = 0.0;

    double radius() const { return (upper - lower) / 2; }
};

/// Natural log of the Perron root of the adjacency matrix; for reducible
/// presentations the max over recurrent components. Enclosure width <= 1e-9.
EntropyResult entropy(const EdgePresentation& p);

struct SpectralComponent {
    std::vector<int> vertices;               // sorted
    int cycle_period = 1;                    // k: number of cyclic classes
    std::vector<std::vector<int>> classes;   // partition; edges map class i to i+1 mod k
};

struct SpectralDecomposition {
    std::vector<SpectralComponent> components;
    std::vector<int> wandering_vertices;     // empty iff non-wandering

    int total_classes() const;
    // Flattened class id of a vertex, or -1 for wandering vertices.
    int class_id_of(int vertex) const;
    int component_of(int vertex) const;
    std::pair<int, int> class_coords(int class_id) const;  // (component, class)
    int flat_id(int component, int cls) const;
};

/// Requires a non-wandering presentation (pass nonwandering_part first).
SpectralDecomposition spectral_decomposition(const EdgePresentation& p);

/// Least N >= 1 such that every ordered vertex pair is joined by paths of
/// every length >= N. Requires a mixing presentation.
int mixing_gap(const EdgePresentation& p);

/// The subgraph on `vertices` whose edges are the k-step paths of p between
/// them; used to inspect a cyclic class under the k-th power of the shift.
/// Edge symbols are not meaningful (structure only).
EdgePresentation power_subgraph(const EdgePresentation& p, const std::vector<int>& vertices,
                                int k);

/// Edge symbols along a shortest cycle through v (ties by sorted edge
/// order). v must lie on a cycle.
std::vector<Symbol> shortest_cycle_symbols(const EdgePresentation& p, int v);

/// Tails that extend a path with the given endpoints to a bi-infinite path:
/// a cycle reached backwards from the start vertex and one reached forwards
/// from the end vertex, with their connector words.
struct BiInfiniteExtension {
    Word left_cycle;
    Word left_connector;    // labels from the left cycle's anchor to the start vertex
    Word right_connector;   // labels from the end vertex to the right cycle's anchor
    Word right_cycle;
};

BiInfiniteExtension extend_to_biinfinite(const EdgePresentation& p, int start_vertex,
                                         int end_vertex);

}  // namespace eden

#endif  // EDEN_ANALYSIS_HPP
