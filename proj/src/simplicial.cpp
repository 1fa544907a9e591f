#include "poincare/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace poincare {

namespace {

FaceMask all_vertices(std::size_t n) { return n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

void check_vertex_count(std::size_t n) {
    if (n > max_complex_vertices)
        throw std::length_error("complexes are limited to " + std::to_string(max_complex_vertices) + " vertices");
}

void check_enumerable(std::size_t n) {
    if (n > max_enumerated_vertices)
        throw std::length_error("subset enumeration is limited to " + std::to_string(max_enumerated_vertices) +
                                " vertices");
}

} // namespace

std::vector<std::size_t> face_vertices(FaceMask face) {
    std::vector<std::size_t> out;
    while (face) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(face)));
        face &= face - 1;
    }
    return out;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count) : vertex_count_(vertex_count) {
    check_vertex_count(vertex_count);
    by_size_.resize(vertex_count + 1);
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t vertex_count) {
    SimplicialComplex c(vertex_count);
    c.by_size_[0].push_back(0);
    return c;
}

void SimplicialComplex::insert_closed(std::vector<FaceMask> faces) {
    for (auto& bucket : by_size_) bucket.clear();
    for (FaceMask f : faces) by_size_[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& bucket : by_size_) std::sort(bucket.begin(), bucket.end(), face_lex_less);
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, const std::vector<FaceMask>& facets) {
    SimplicialComplex c(vertex_count);
    const FaceMask universe = all_vertices(vertex_count);
    std::unordered_set<FaceMask> seen;
    std::vector<FaceMask> stack;
    for (FaceMask f : facets) {
        if (f & ~universe) throw std::out_of_range("facet uses a vertex outside the vertex set");
        if (seen.insert(f).second) stack.push_back(f);
    }
    while (!stack.empty()) {
        FaceMask f = stack.back();
        stack.pop_back();
        for (FaceMask rest = f; rest; rest &= rest - 1) {
            FaceMask sub = f & ~(rest & (~rest + 1));
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    c.insert_closed(std::vector<FaceMask>(seen.begin(), seen.end()));
    return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count, const std::vector<FaceMask>& faces) {
    SimplicialComplex c(vertex_count);
    const FaceMask universe = all_vertices(vertex_count);
    std::unordered_set<FaceMask> set;
    for (FaceMask f : faces) {
        if (f & ~universe) throw std::out_of_range("face uses a vertex outside the vertex set");
        set.insert(f);
    }
    for (FaceMask f : set)
        for (FaceMask rest = f; rest; rest &= rest - 1)
            if (!set.count(f & ~(rest & (~rest + 1))))
                throw std::invalid_argument("face family is not downward closed");
    c.insert_closed(std::vector<FaceMask>(set.begin(), set.end()));
    return c;
}

bool SimplicialComplex::contains(FaceMask face) const {
    const auto size = static_cast<std::size_t>(std::popcount(face));
    if (size > vertex_count_) return false;
    const auto& bucket = by_size_[size];
    return std::binary_search(bucket.begin(), bucket.end(), face, face_lex_less);
}

const std::vector<FaceMask>& SimplicialComplex::faces_of_size(std::size_t cardinality) const {
    static const std::vector<FaceMask> none;
    return cardinality < by_size_.size() ? by_size_[cardinality] : none;
}

std::size_t SimplicialComplex::face_count(int dimension) const {
    if (dimension < -1) return 0;
    return faces_of_size(static_cast<std::size_t>(dimension + 1)).size();
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& bucket : by_size_) total += bucket.size();
    return total;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw std::logic_error("the void complex has no dimension");
    for (std::size_t k = by_size_.size(); k-- > 0;)
        if (!by_size_[k].empty()) return static_cast<int>(k) - 1;
    return -1;
}

std::vector<FaceMask> SimplicialComplex::faces() const {
    std::vector<FaceMask> out;
    for (const auto& bucket : by_size_) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

std::vector<FaceMask> SimplicialComplex::facets() const {
    std::vector<FaceMask> out;
    for (std::size_t k = 0; k < by_size_.size(); ++k) {
        for (FaceMask f : by_size_[k]) {
            bool maximal = true;
            if (k + 1 < by_size_.size()) {
                for (FaceMask g : by_size_[k + 1])
                    if ((g & f) == f) {
                        maximal = false;
                        break;
                    }
            }
            if (maximal) out.push_back(f);
        }
    }
    return out;
}

void SimplicialComplex::set_vertex_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != vertex_count_)
        throw std::invalid_argument("one label per vertex required");
    labels_ = std::move(labels);
}

SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets) {
    std::vector<FaceMask> masks;
    for (const auto& facet : facets) {
        FaceMask m = 0;
        for (auto v : facet) {
            if (v >= vertex_count) throw std::out_of_range("facet vertex out of range");
            m |= FaceMask{1} << v;
        }
        masks.push_back(m);
    }
    return SimplicialComplex::from_facets(vertex_count, masks);
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    const std::size_t n = complex.vertex_count();
    check_enumerable(n);
    const FaceMask universe = all_vertices(n);
    std::vector<FaceMask> faces;
    for (FaceMask f = 0; f <= universe; ++f) {
        if (!complex.contains(universe & ~f)) faces.push_back(f);
        if (f == universe) break;
    }
    auto dual = SimplicialComplex::from_faces(n, faces);
    dual.set_vertex_labels(complex.vertex_labels());
    return dual;
}

namespace {

std::vector<std::string> joined_labels(const SimplicialComplex& a, const SimplicialComplex& b) {
    const auto& la = a.vertex_labels();
    const auto& lb = b.vertex_labels();
    if (la.empty() || lb.empty()) return {};
    for (const auto& name : lb)
        if (std::find(la.begin(), la.end(), name) != la.end())
            throw std::invalid_argument("vertex sets overlap at '" + name + "'");
    std::vector<std::string> out = la;
    out.insert(out.end(), lb.begin(), lb.end());
    return out;
}

} // namespace

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto labels = joined_labels(a, b);
    const std::size_t shift = a.vertex_count();
    check_vertex_count(shift + b.vertex_count());
    std::vector<FaceMask> faces;
    const auto fa = a.faces();
    const auto fb = b.faces();
    faces.reserve(fa.size() * fb.size());
    for (FaceMask f : fa)
        for (FaceMask g : fb) faces.push_back(f | (g << shift));
    auto result = SimplicialComplex::from_faces(shift + b.vertex_count(), faces);
    result.set_vertex_labels(std::move(labels));
    return result;
}

SimplicialComplex dual_join(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto labels = joined_labels(a, b);
    const std::size_t shift = a.vertex_count();
    const std::size_t n = shift + b.vertex_count();
    check_enumerable(n);
    const FaceMask low = all_vertices(shift);
    std::vector<FaceMask> faces;
    for (FaceMask f = 0; f < (FaceMask{1} << n); ++f)
        if (a.contains(f & low) || b.contains(f >> shift)) faces.push_back(f);
    auto result = SimplicialComplex::from_faces(n, faces);
    result.set_vertex_labels(std::move(labels));
    return result;
}

SimplicialComplex dual_join_via_duals(const SimplicialComplex& a, const SimplicialComplex& b) {
    return alexander_dual(join(alexander_dual(a), alexander_dual(b)));
}

namespace {

// Face test for Δ_M over local generator indices.
class BerglundPredicate {
public:
    explicit BerglundPredicate(const std::vector<Monomial>& generators) {
        const std::size_t k = generators.size();
        std::map<VarIndex, Exponent> top;
        for (const auto& g : generators)
            for (auto [v, e] : g.factors()) top[v] = std::max(top[v], e);

        // cover(v): generators attaining the top exponent of v. lcm(S) = lcm(M)
        // exactly when S meets every cover.
        std::unordered_set<FaceMask> covers;
        for (auto [v, e] : top) {
            FaceMask c = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (generators[i].exponent(v) == e) c |= FaceMask{1} << i;
            covers.insert(c);
        }
        covers_.assign(covers.begin(), covers.end());

        adjacency_.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (has_common_factor(generators[i], generators[j])) {
                    adjacency_[i] |= FaceMask{1} << j;
                    adjacency_[j] |= FaceMask{1} << i;
                }
    }

    bool is_face(FaceMask s) const {
        if (s == 0) return true;
        for (FaceMask c : covers_)
            if ((s & c) == 0) return true;
        return !connected(s);
    }

private:
    bool connected(FaceMask s) const {
        FaceMask reached = s & (~s + 1);
        FaceMask frontier = reached;
        while (frontier) {
            auto v = static_cast<std::size_t>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            FaceMask fresh = adjacency_[v] & s & ~reached;
            reached |= fresh;
            frontier |= fresh;
        }
        return reached == s;
    }

    std::vector<FaceMask> covers_;
    std::vector<FaceMask> adjacency_;
};

std::vector<FaceMask> enumerate_faces(const BerglundPredicate& pred, std::size_t k) {
    check_enumerable(k);
    const FaceMask count = FaceMask{1} << k;
    std::vector<char> is_face(count, 0);
    std::vector<FaceMask> faces;
    for (FaceMask s = 0; s < count; ++s) {
        // Dropping the highest vertex gives a subset already decided.
        FaceMask prefix = s == 0 ? 0 : s & ~(FaceMask{1} << (63 - std::countl_zero(s)));
        if (s != 0 && !is_face[prefix]) continue;
        if (pred.is_face(s)) {
            is_face[s] = 1;
            faces.push_back(s);
        }
    }
    return faces;
}

std::vector<FaceMask> search_faces(const BerglundPredicate& pred, std::size_t k) {
    struct Entry {
        FaceMask face;
        std::size_t next;
    };
    std::vector<FaceMask> faces{0};
    std::deque<Entry> queue{{0, 0}};
    while (!queue.empty()) {
        auto [face, next] = queue.front();
        queue.pop_front();
        for (std::size_t j = next; j < k; ++j) {
            FaceMask candidate = face | (FaceMask{1} << j);
            if (pred.is_face(candidate)) {
                faces.push_back(candidate);
                queue.push_back({candidate, j + 1});
            }
        }
    }
    return faces;
}

} // namespace

SimplicialComplex berglund_complex(const std::vector<Monomial>& generators, BerglundStrategy strategy) {
    const std::size_t k = generators.size();
    if (k == 0) throw std::invalid_argument("Berglund complex of an empty generator set");
    check_vertex_count(k);
    for (const auto& g : generators)
        if (g.is_one()) throw std::invalid_argument("the unit monomial cannot be a generator");

    BerglundPredicate pred(generators);
    if (strategy == BerglundStrategy::automatic)
        strategy = k <= berglund_enumeration_limit ? BerglundStrategy::enumeration : BerglundStrategy::search;
    auto faces = strategy == BerglundStrategy::enumeration ? enumerate_faces(pred, k) : search_faces(pred, k);
    return SimplicialComplex::from_faces(k, faces);
}

SimplicialComplex berglund_complex(const LcmLattice& lattice, NodeId node, BerglundStrategy strategy) {
    if (node == lattice.bottom()) throw std::invalid_argument("the bottom node 1 has an empty divisor set");
    std::vector<Monomial> local;
    lattice.divisor_set(node).for_each([&](std::size_t g) { local.push_back(lattice.generators()[g]); });
    return berglund_complex(local, strategy);
}

} // namespace poincare
