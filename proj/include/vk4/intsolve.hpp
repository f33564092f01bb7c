#ifndef VK4_INTSOLVE_HPP
#define VK4_INTSOLVE_HPP

#include <map>
#include <vector>

#include "vk4/exact.hpp"

namespace vk4 {

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Int>> row;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row(r) {}
    void add(int r, int c, const Int& v);
    std::vector<Int> apply(const std::vector<Int>& x) const;
};

enum class Ring { Z, Mod2 };

// Outcome of A x = c over the requested ring. Over Z the witness is an
// exact integer solution, found by diagonalizing A with unimodular row
// and column operations (sparse unit pivots first, then a dense
// Smith-style reduction of whatever core remains); solvability is then
// a per-pivot divisibility test, refuted by the index of the failing
// diagonal constraint. Over Z/2 a sparse Gaussian elimination is used
// and the witness has 0/1 entries. A returned witness has always been
// re-multiplied against A and verified before return.
struct LinearSolveOutcome {
    bool solvable = false;
    std::vector<Int> witness;   // size cols when solvable
    int refutation_row = -1;    // diagonal constraint index when unsolvable
};

LinearSolveOutcome solve_integer_system(const SparseIntMatrix& a, const std::vector<Int>& c,
                                        Ring ring);

}  // namespace vk4

#endif
