#ifndef VK4_INTERSECT_HPP
#define VK4_INTERSECT_HPP

#include <optional>
#include <vector>

#include "vk4/exact.hpp"

namespace vk4 {

// Exact classification of {(p,q) in S x T : p = q as ambient points} for
// two nondegenerate simplices of dimension <= 2 in Q^3 or Q^4, computed
// in product barycentric coordinates (alpha for S, then beta for T).
//
// dim is the dimension of the intersection polytope: -1 empty, 0 a
// single point, 1 a segment, 2 a polygon. points holds extreme points
// of the polytope in (alpha, beta) coordinates (all of them for dim
// <= 1; for dim 2 at least its vertices). solution_dim is the dimension
// of the affine-hull solution space (0 means the hulls meet
// transversally in one point).
struct PairMeet {
    int dim = -1;
    int solution_dim = 0;
    std::vector<std::vector<Rat>> points;
};

PairMeet simplex_pair_meet(const std::vector<QPoint>& s, const std::vector<QPoint>& t);

enum class HitKind { Empty, Point, Degenerate };

// Exact intersection of two simplices of dimension <= 2. "Point" carries
// barycentric coordinates on both simplices; the sign is present only
// for a transversal hit of complementary-dimension simplices through
// both open interiors, and is the sign of the determinant of the stacked
// edge vectors (edges of s first, in increasing-vertex order).
struct SimplexHit {
    HitKind kind = HitKind::Empty;
    QPoint point;
    std::vector<Rat> bary_s, bary_t;
    std::optional<int> sign;
};

SimplexHit simplex_intersect(const std::vector<QPoint>& s, const std::vector<QPoint>& t);

}  // namespace vk4

#endif
