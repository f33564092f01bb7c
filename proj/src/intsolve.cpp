#include "vk4/intsolve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vk4 {

void SparseIntMatrix::add(int r, int c, const Int& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseIntMatrix::add");
    if (v == 0) return;
    auto it = row[r].find(c);
    if (it == row[r].end()) {
        row[r].emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row[r].erase(it);
    }
}

std::vector<Int> SparseIntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: size mismatch");
    std::vector<Int> y(rows, Int(0));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) y[r] += v * x[c];
    return y;
}

namespace {

Int trunc_div(const Int& a, const Int& d) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Elimination state for the Z solver. Row operations are applied to the
// right-hand side as they happen; column operations (which re-express
// the unknowns) are recorded and replayed in reverse on the solution.
struct ZElim {
    std::vector<std::map<int, Int>> rows;
    std::vector<Int> rhs;
    std::vector<std::set<int>> col_rows;  // active rows holding each column
    std::vector<bool> row_active, col_active;
    struct ColOp {
        int from, to;  // col_to += k * col_from
        Int k;
    };
    std::vector<ColOp> col_ops;
    struct Pivot {
        int r, c;
        Int d;
    };
    std::vector<Pivot> pivots;

    explicit ZElim(const SparseIntMatrix& a, const std::vector<Int>& c)
        : rows(a.row), rhs(c), col_rows(a.cols),
          row_active(a.rows, true), col_active(a.cols, true) {
        for (int r = 0; r < a.rows; ++r)
            for (const auto& [cc, v] : rows[r]) col_rows[cc].insert(r);
    }

    void set_entry(int r, int c, const Int& v) {
        auto it = rows[r].find(c);
        if (v == 0) {
            if (it != rows[r].end()) {
                rows[r].erase(it);
                col_rows[c].erase(r);
            }
        } else {
            if (it == rows[r].end()) {
                rows[r].emplace(c, v);
                col_rows[c].insert(r);
            } else {
                it->second = v;
            }
        }
    }

    // row_k -= f * row_i
    void row_op(int k, int i, const Int& f) {
        if (f == 0) return;
        for (const auto& [c, v] : rows[i]) {
            auto it = rows[k].find(c);
            if (it == rows[k].end()) {
                rows[k].emplace(c, -f * v);
                col_rows[c].insert(k);
            } else {
                it->second -= f * v;
                if (it->second == 0) {
                    rows[k].erase(it);
                    col_rows[c].erase(k);
                }
            }
        }
        rhs[k] -= f * rhs[i];
    }

    // col_to -= f * col_from, recorded for replay
    void col_op(int to, int from, const Int& f) {
        if (f == 0) return;
        for (int r : std::vector<int>(col_rows[from].begin(), col_rows[from].end())) {
            Int nv = -f * rows[r][from];
            auto it = rows[r].find(to);
            if (it != rows[r].end()) nv += it->second;
            set_entry(r, to, nv);
        }
        col_ops.push_back({from, to, -f});
    }

    void clear_column_with_pivot(int pr, int pc) {
        const Int d = rows[pr][pc];
        for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
            if (r == pr) continue;
            row_op(r, pr, rows[r][pc] / d);
        }
    }

    void clear_row_with_pivot(int pr, int pc) {
        const Int d = rows[pr][pc];
        std::vector<int> cols_to_clear;
        for (const auto& [c, v] : rows[pr])
            if (c != pc) cols_to_clear.push_back(c);
        for (int c : cols_to_clear) col_op(c, pc, rows[pr][c] / d);
    }

    void finalize_pivot(int pr, int pc) {
        pivots.push_back({pr, pc, rows[pr][pc]});
        row_active[pr] = false;
        col_active[pc] = false;
        for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    }

    // Sparse phase: pivots of absolute value 1, chosen from the sparsest
    // active column to limit fill-in.
    void eliminate_unit_pivots() {
        for (;;) {
            int best_c = -1, best_r = -1;
            size_t best_score = SIZE_MAX;
            for (int c = 0; c < static_cast<int>(col_rows.size()); ++c) {
                if (!col_active[c] || col_rows[c].empty()) continue;
                for (int r : col_rows[c]) {
                    if (!row_active[r]) continue;
                    const Int& v = rows[r].at(c);
                    if (v != 1 && v != -1) continue;
                    size_t score = (col_rows[c].size() - 1) * (rows[r].size() - 1);
                    if (score < best_score) {
                        best_score = score;
                        best_c = c;
                        best_r = r;
                        if (score == 0) break;
                    }
                }
                if (best_score == 0) break;
            }
            if (best_r < 0) return;
            clear_column_with_pivot(best_r, best_c);
            clear_row_with_pivot(best_r, best_c);
            finalize_pivot(best_r, best_c);
        }
    }

    // Dense phase for whatever core has no unit entries: local
    // Smith-style reduction by repeated remainder steps.
    void eliminate_core() {
        for (;;) {
            int pr = -1, pc = -1;
            Int best;
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (!row_active[r]) continue;
                for (const auto& [c, v] : rows[r]) {
                    if (!col_active[c]) continue;
                    Int a = abs(v);
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr < 0) return;
            const Int d = rows[pr][pc];

            bool reduced = false;
            for (int r : std::vector<int>(col_rows[pc].begin(), col_rows[pc].end())) {
                if (r == pr || !row_active[r]) continue;
                const Int& v = rows[r].at(pc);
                if (v % d != 0) {
                    row_op(r, pr, trunc_div(v, d));
                    reduced = true;
                    break;
                }
            }
            if (reduced) continue;
            for (const auto& [c, v] : rows[pr]) {
                if (c == pc || !col_active[c]) continue;
                if (v % d != 0) {
                    col_op(c, pc, trunc_div(v, d));
                    reduced = true;
                    break;
                }
            }
            if (reduced) continue;

            clear_column_with_pivot(pr, pc);
            clear_row_with_pivot(pr, pc);
            finalize_pivot(pr, pc);
            eliminate_unit_pivots();  // new units may have appeared
        }
    }
};

LinearSolveOutcome solve_over_z(const SparseIntMatrix& a, const std::vector<Int>& c) {
    ZElim e(a, c);
    e.eliminate_unit_pivots();
    e.eliminate_core();

    LinearSolveOutcome out;
    std::vector<Int> y(a.cols, Int(0));
    int constraint = 0;
    for (const auto& p : e.pivots) {
        if (e.rhs[p.r] % p.d != 0) {
            out.solvable = false;
            out.refutation_row = constraint;
            return out;
        }
        y[p.c] = e.rhs[p.r] / p.d;
        ++constraint;
    }
    for (int r = 0; r < a.rows; ++r) {
        if (!e.row_active[r]) continue;
        if (e.rhs[r] != 0) {
            out.solvable = false;
            out.refutation_row = constraint;
            return out;
        }
        ++constraint;
    }

    // x = V y: replay the recorded column operations in reverse.
    for (auto it = e.col_ops.rbegin(); it != e.col_ops.rend(); ++it) y[it->from] += it->k * y[it->to];

    if (a.apply(y) != c) throw std::logic_error("integer solver produced an unverified witness");
    out.solvable = true;
    out.witness = std::move(y);
    return out;
}

LinearSolveOutcome solve_mod2(const SparseIntMatrix& a, const std::vector<Int>& c) {
    // Rows as sorted column-index vectors; XOR-merge elimination.
    std::vector<std::vector<int>> rows(a.rows);
    std::vector<int> rhs(a.rows, 0);
    for (int r = 0; r < a.rows; ++r) {
        for (const auto& [col, v] : a.row[r])
            if (v % 2 != 0) rows[r].push_back(col);
        Int m = c[r] % 2;
        rhs[r] = (m != 0) ? 1 : 0;
    }

    auto xor_into = [](std::vector<int>& dst, const std::vector<int>& src) {
        std::vector<int> merged;
        merged.reserve(dst.size() + src.size());
        std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                      std::back_inserter(merged));
        dst = std::move(merged);
    };

    std::vector<std::set<int>> col_rows(a.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int col : rows[r]) col_rows[col].insert(r);

    std::vector<bool> row_active(a.rows, true);
    std::vector<int> pivot_row_of_col(a.cols, -1);
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order

    for (;;) {
        int best_c = -1, best_r = -1;
        size_t best_score = SIZE_MAX;
        for (int col = 0; col < a.cols; ++col) {
            if (pivot_row_of_col[col] >= 0 || col_rows[col].empty()) continue;
            for (int r : col_rows[col]) {
                if (!row_active[r]) continue;
                size_t score = (col_rows[col].size() - 1) * (rows[r].size() - 1);
                if (score < best_score) {
                    best_score = score;
                    best_c = col;
                    best_r = r;
                    if (score == 0) break;
                }
            }
            if (best_score == 0) break;
        }
        if (best_r < 0) break;
        for (int r : std::vector<int>(col_rows[best_c].begin(), col_rows[best_c].end())) {
            if (r == best_r) continue;
            for (int col : rows[best_r]) {
                if (col_rows[col].count(r)) col_rows[col].erase(r);
                else col_rows[col].insert(r);
            }
            xor_into(rows[r], rows[best_r]);
            rhs[r] ^= rhs[best_r];
        }
        row_active[best_r] = false;
        for (int col : rows[best_r]) col_rows[col].erase(best_r);
        pivot_row_of_col[best_c] = best_r;
        pivots.push_back({best_r, best_c});
    }

    LinearSolveOutcome out;
    int constraint = static_cast<int>(pivots.size());
    for (int r = 0; r < a.rows; ++r) {
        if (!row_active[r]) continue;
        if (rhs[r] != 0) {
            out.solvable = false;
            out.refutation_row = constraint;
            return out;
        }
        ++constraint;
    }
    std::vector<Int> x(a.cols, Int(0));
    // Diagonalized within its column span: each pivot row now holds the
    // pivot column plus columns that never got a pivot (free, set to 0),
    // plus possibly other pivot columns eliminated later. Solve in
    // reverse elimination order.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        int parity = rhs[it->first];
        for (int col : rows[it->first]) {
            if (col == it->second) continue;
            if (x[col] == 1) parity ^= 1;
        }
        x[it->second] = parity;
    }
    auto y = a.apply(x);
    for (int r = 0; r < a.rows; ++r) {
        Int diff = (y[r] - c[r]) % 2;
        if (diff != 0) throw std::logic_error("mod-2 solver produced an unverified witness");
    }
    out.solvable = true;
    out.witness = std::move(x);
    return out;
}

}  // namespace

LinearSolveOutcome solve_integer_system(const SparseIntMatrix& a, const std::vector<Int>& c,
                                        Ring ring) {
    if (static_cast<int>(c.size()) != a.rows)
        throw std::invalid_argument("solve_integer_system: dimension mismatch");
    return ring == Ring::Z ? solve_over_z(a, c) : solve_mod2(a, c);
}

}  // namespace vk4
