#ifndef VK4_OBSTRUCTION_HPP
#define VK4_OBSTRUCTION_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vk4/complex2.hpp"
#include "vk4/exact.hpp"
#include "vk4/intsolve.hpp"

namespace vk4 {

// Canonically ordered simplex tables and deleted pairs of a complex.
// Two simplices are deleted ("getrennt") when they share no vertex.
// pairs22 holds vertex-disjoint triangle pairs (i < j), pairs21 holds
// vertex-disjoint (triangle, edge) pairs; both lists are sorted.
struct PairTables {
    std::vector<std::array<int, 3>> tris;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::pair<int, int>> pairs22;
    std::vector<std::pair<int, int>> pairs21;
};

PairTables deleted_pairs(const Complex2& k);

struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A simplexwise-linear map into Q^4, one exact rational point per
// vertex. Generic means: all vertex images distinct, every 2-simplex
// image nondegenerate, and for every deleted (2,2) pair the plane-pair
// system is nonsingular with any closed-hull hit lying in both open
// interiors.
struct RationalMap {
    std::vector<QPoint> coords;
    unsigned seed = 0;
};

// Deterministic in (k, seed): integer coordinates in [-10^4, 10^4] from
// a seeded stream; on a genericity failure only the offending vertices
// are redrawn, at most 64 rounds, then GenericityError.
RationalMap sample_generic_map(const Complex2& k, unsigned seed);

// True when the map satisfies the genericity contract; offending vertex
// ids are appended to *offenders when given.
bool certify_generic(const Complex2& k, const RationalMap& f,
                     std::vector<int>* offenders = nullptr);

// Signed count of transversal intersections of two disjoint placed
// triangles in Q^4; the sign is the determinant convention of
// simplex_intersect (edges of the first triangle first). Throws on a
// non-generic configuration.
Int pair_intersection_number(const RationalMap& f, const std::array<int, 3>& a,
                             const std::array<int, 3>& b);

// Intersection-number cochain on the deleted (2,2) pairs, aligned with
// PairTables::pairs22.
struct Cochain4 {
    std::vector<Int> values;
};

Cochain4 vk_cocycle(const RationalMap& f, const Complex2& k, const PairTables& pt);
Cochain4 vk_cocycle(const RationalMap& f, const Complex2& k);

// Matrix of the finger-move coboundaries: rows are (2,2) pairs, columns
// are (2,1) pairs. The column (sigma, e) has entry [e : boundary(tau)]
// in row {sigma, tau} for every triangle tau containing e and disjoint
// from sigma.
SparseIntMatrix coboundary_matrix(const Complex2& k, const PairTables& pt);
SparseIntMatrix coboundary_matrix(const Complex2& k);

struct ObstructionVerdict {
    bool vanishes_Z = false;
    bool vanishes_mod2 = false;
    std::optional<std::vector<Int>> witness;  // over the (2,1) columns
    int refutation_row = -1;
    Cochain4 cocycle;
    unsigned seed = 0;
    size_t pairs22 = 0;
    size_t pairs21 = 0;
};

ObstructionVerdict obstruction_verdict(const Complex2& k, unsigned seed);

// Sum of all cocycle values mod 2; map-independent exactly when every
// coboundary column has even row-sum (as for the full 7-vertex
// 2-skeleton).
int total_mod2(const Complex2& k, unsigned seed);

nlohmann::ordered_json verdict_to_json(const ObstructionVerdict& v);

}  // namespace vk4

#endif
