#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "poincare/lcm_lattice.hpp"
#include "poincare/monomial.hpp"

namespace poincare {

/// A face is a bitmask over vertex indices 0..63.
using FaceMask = std::uint64_t;

inline constexpr std::size_t max_complex_vertices = 64;
/// Operations that enumerate every subset of the vertex set refuse larger inputs.
inline constexpr std::size_t max_enumerated_vertices = 26;

/// Lexicographic order on the sorted vertex lists of two faces of equal size.
inline bool face_lex_less(FaceMask a, FaceMask b) {
    if (a == b) return false;
    FaceMask diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::size_t> face_vertices(FaceMask face);

/// Downward-closed family of faces on the vertex set {0, ..., n-1}.
///
/// The vertex set is fixed at construction and may contain vertices that
/// are not faces. Three degenerate cases are kept apart: the void complex
/// (no faces), the irrelevant complex {∅}, and complexes with vertices.
/// Faces are grouped by cardinality and sorted by face_lex_less.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(0) {}
    explicit SimplicialComplex(std::size_t vertex_count);

    static SimplicialComplex void_complex(std::size_t vertex_count) { return SimplicialComplex(vertex_count); }
    static SimplicialComplex irrelevant(std::size_t vertex_count);
    /// Smallest complex containing the given faces.
    static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<FaceMask>& facets);
    /// Exactly the given faces; throws std::invalid_argument unless the
    /// family is downward closed.
    static SimplicialComplex from_faces(std::size_t vertex_count, const std::vector<FaceMask>& faces);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    bool is_void() const noexcept { return by_size_[0].empty(); }
    bool is_irrelevant() const noexcept { return !is_void() && face_count() == 1; }
    bool contains(FaceMask face) const;
    /// Faces with `cardinality` vertices, i.e. of dimension cardinality - 1.
    const std::vector<FaceMask>& faces_of_size(std::size_t cardinality) const;
    /// Number of faces of dimension d >= -1.
    std::size_t face_count(int dimension) const;
    std::size_t face_count() const;
    /// Largest face dimension; -1 for {∅}. Throws for the void complex.
    int dimension() const;
    std::vector<FaceMask> faces() const;
    /// Inclusion-maximal faces in lexicographic order.
    std::vector<FaceMask> facets() const;

    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
    void set_vertex_labels(std::vector<std::string> labels);

    /// Face families agree; labels are ignored.
    bool same_faces(const SimplicialComplex& other) const {
        return vertex_count_ == other.vertex_count_ && by_size_ == other.by_size_;
    }

private:
    void insert_closed(std::vector<FaceMask> faces);

    std::size_t vertex_count_;
    std::vector<std::vector<FaceMask>> by_size_;
    std::vector<std::string> labels_;
};

/// Facets given as vertex-index lists.
SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets);

/// {F ⊆ V : V \ F is not a face}, on the same vertex set.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Faces F ∪ F' with the second complex's vertices placed after the first's.
/// Throws std::invalid_argument when both complexes carry vertex labels
/// and some label occurs in both.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Faces F of V ∪ V' with F ∩ V in the first complex or F ∩ V' in the second.
SimplicialComplex dual_join(const SimplicialComplex& a, const SimplicialComplex& b);
/// The same complex computed as the dual of the join of the duals.
SimplicialComplex dual_join_via_duals(const SimplicialComplex& a, const SimplicialComplex& b);

enum class BerglundStrategy {
    automatic,   ///< enumeration up to berglund_enumeration_limit vertices, search above
    enumeration, ///< every subset tested, pruned by downward closure
    search       ///< queue-based extension of faces by later vertices
};

inline constexpr std::size_t berglund_enumeration_limit = 20;

/// Δ_M on vertex set M (in the given order): the subsets S with
/// lcm(S) != lcm(M) or S disconnected in the common-factor graph.
/// `generators` must be nonempty, exclude 1, and hold at most 64 monomials.
SimplicialComplex berglund_complex(const std::vector<Monomial>& generators,
                                   BerglundStrategy strategy = BerglundStrategy::automatic);

/// Δ_{M_α} for a lattice node α != 1; vertex i is the i-th generator of the
/// node's divisor set in generator order.
SimplicialComplex berglund_complex(const LcmLattice& lattice, NodeId node,
                                   BerglundStrategy strategy = BerglundStrategy::automatic);

} // namespace poincare
