#include "vk4/exact.hpp"

#include <stdexcept>

namespace vk4 {

QPoint qpoint(std::initializer_list<long> coords) {
    QPoint p;
    p.reserve(coords.size());
    for (long c : coords) p.emplace_back(c);
    return p;
}

QPoint sub(const QPoint& a, const QPoint& b) {
    QPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QPoint add(const QPoint& a, const QPoint& b) {
    QPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QPoint scale(const Rat& s, const QPoint& a) {
    QPoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(const QPoint& a, const QPoint& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat det(const std::vector<QPoint>& rows) {
    const size_t n = rows.size();
    std::vector<std::vector<Rat>> m(n);
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("det: matrix not square");
        m[i] = rows[i];
    }
    // Plain fraction elimination; n <= 6 so no need for Bareiss.
    Rat result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = -result;
        }
        result *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

int rank_of(std::vector<QPoint> vecs) {
    if (vecs.empty()) return 0;
    const size_t d = vecs[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < d && row < vecs.size(); ++col) {
        size_t piv = row;
        while (piv < vecs.size() && vecs[piv][col] == 0) ++piv;
        if (piv == vecs.size()) continue;
        std::swap(vecs[piv], vecs[row]);
        const Rat inv = Rat(1) / vecs[row][col];
        for (size_t r = 0; r < vecs.size(); ++r) {
            if (r == row || vecs[r][col] == 0) continue;
            const Rat f = vecs[r][col] * inv;
            for (size_t c = col; c < d; ++c) vecs[r][c] -= f * vecs[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool affinely_independent(const std::vector<QPoint>& pts) {
    if (pts.size() <= 1) return true;
    std::vector<QPoint> diffs;
    diffs.reserve(pts.size() - 1);
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return rank_of(diffs) == static_cast<int>(pts.size()) - 1;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

double rat_double(const Rat& q) {
    return q.get_d();
}

LinearSolution solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row(m, -1);
    std::vector<int> row_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (size_t c = col; c < n; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        row_of_col[col] = static_cast<int>(row);
        ++row;
    }
    LinearSolution sol;
    for (size_t r = row; r < m; ++r)
        if (b[r] != 0) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(n, Rat(0));
    for (size_t r = 0; r < row; ++r) sol.particular[pivot_col_of_row[r]] = b[r];
    for (size_t col = 0; col < n; ++col) {
        if (row_of_col[col] >= 0) continue;
        std::vector<Rat> v(n, Rat(0));
        v[col] = 1;
        for (size_t c = 0; c < n; ++c) {
            if (row_of_col[c] < 0) continue;
            v[c] = -a[row_of_col[c]][col];
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

}  // namespace vk4
