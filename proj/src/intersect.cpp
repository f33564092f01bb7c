#include "vk4/intersect.hpp"

#include <algorithm>
#include <stdexcept>

namespace vk4 {

namespace {

int sgn(const Rat& q) {
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

std::vector<Rat> eval_param(const std::vector<Rat>& base,
                            const std::vector<std::vector<Rat>>& dirs,
                            const std::vector<Rat>& params) {
    std::vector<Rat> u = base;
    for (size_t k = 0; k < dirs.size(); ++k)
        for (size_t i = 0; i < u.size(); ++i) u[i] += params[k] * dirs[k][i];
    return u;
}

bool feasible(const std::vector<Rat>& u) {
    for (const auto& v : u)
        if (v < 0) return false;
    return true;
}

}  // namespace

PairMeet simplex_pair_meet(const std::vector<QPoint>& s, const std::vector<QPoint>& t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("empty simplex");
    const size_t d = s[0].size();
    if (!affinely_independent(s) || !affinely_independent(t))
        throw std::invalid_argument("simplex_pair_meet: degenerate simplex");
    const size_t ns = s.size(), nt = t.size(), n = ns + nt;

    // Coordinate equations followed by the two barycentric sum rows.
    std::vector<std::vector<Rat>> a(d + 2, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(d + 2, Rat(0));
    for (size_t row = 0; row < d; ++row) {
        for (size_t i = 0; i < ns; ++i) a[row][i] = s[i][row];
        for (size_t j = 0; j < nt; ++j) a[row][ns + j] = -t[j][row];
    }
    for (size_t i = 0; i < ns; ++i) a[d][i] = 1;
    for (size_t j = 0; j < nt; ++j) a[d + 1][ns + j] = 1;
    b[d] = 1;
    b[d + 1] = 1;

    const LinearSolution sol = solve_linear(std::move(a), std::move(b));
    PairMeet out;
    if (!sol.consistent) return out;
    const int m = static_cast<int>(sol.nullspace.size());
    out.solution_dim = m;

    if (m == 0) {
        if (!feasible(sol.particular)) return out;
        out.dim = 0;
        out.points.push_back(sol.particular);
        return out;
    }

    if (m == 1) {
        const auto& w = sol.nullspace[0];
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (size_t i = 0; i < n; ++i) {
            if (w[i] == 0) {
                if (sol.particular[i] < 0) return out;
                continue;
            }
            Rat bound = -sol.particular[i] / w[i];
            if (w[i] > 0) {
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        if (!has_lo || !has_hi)
            throw std::logic_error("simplex_pair_meet: unbounded feasible line");
        if (lo > hi) return out;
        out.points.push_back(eval_param(sol.particular, sol.nullspace, {lo}));
        if (lo == hi) {
            out.dim = 0;
            return out;
        }
        out.points.push_back(eval_param(sol.particular, sol.nullspace, {hi}));
        out.dim = 1;
        return out;
    }

    if (m == 2) {
        const auto& w1 = sol.nullspace[0];
        const auto& w2 = sol.nullspace[1];
        // Constraint i: p_i + sigma w1_i + tau w2_i >= 0.
        for (size_t i = 0; i < n; ++i)
            if (w1[i] == 0 && w2[i] == 0 && sol.particular[i] < 0) return out;
        std::vector<std::vector<Rat>> cands;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                const Rat det2 = w1[i] * w2[j] - w1[j] * w2[i];
                if (det2 == 0) continue;
                // Solve the two active constraints as equalities.
                const Rat rs = -sol.particular[i], rt = -sol.particular[j];
                const Rat sigma = (rs * w2[j] - rt * w2[i]) / det2;
                const Rat tau = (w1[i] * rt - w1[j] * rs) / det2;
                auto u = eval_param(sol.particular, sol.nullspace, {sigma, tau});
                if (!feasible(u)) continue;
                if (std::find(cands.begin(), cands.end(), u) == cands.end())
                    cands.push_back(std::move(u));
            }
        }
        if (cands.empty()) return out;
        out.points = cands;
        if (cands.size() == 1) {
            out.dim = 0;
            return out;
        }
        // Collinear candidate set means a segment, otherwise a polygon.
        bool collinear = true;
        for (size_t k = 2; k < cands.size() && collinear; ++k) {
            std::vector<QPoint> diffs = {sub(cands[1], cands[0]), sub(cands[k], cands[0])};
            if (rank_of(diffs) == 2) collinear = false;
        }
        out.dim = collinear ? 1 : 2;
        return out;
    }

    throw std::logic_error("simplex_pair_meet: solution space of dimension > 2");
}

SimplexHit simplex_intersect(const std::vector<QPoint>& s, const std::vector<QPoint>& t) {
    SimplexHit hit;
    const PairMeet meet = simplex_pair_meet(s, t);
    if (meet.dim < 0) return hit;
    if (meet.dim >= 1) {
        hit.kind = HitKind::Degenerate;
        return hit;
    }
    hit.kind = HitKind::Point;
    const auto& u = meet.points[0];
    const size_t ns = s.size(), nt = t.size(), d = s[0].size();
    hit.bary_s.assign(u.begin(), u.begin() + ns);
    hit.bary_t.assign(u.begin() + ns, u.end());
    hit.point.assign(d, Rat(0));
    for (size_t i = 0; i < ns; ++i)
        for (size_t c = 0; c < d; ++c) hit.point[c] += u[i] * s[i][c];

    const bool complementary = (ns - 1) + (nt - 1) == d;
    if (complementary && meet.solution_dim == 0) {
        bool interior = true;
        for (const auto& v : u)
            if (v == 0) interior = false;
        if (interior) {
            std::vector<QPoint> rows;
            for (size_t i = 1; i < ns; ++i) rows.push_back(sub(s[i], s[0]));
            for (size_t j = 1; j < nt; ++j) rows.push_back(sub(t[j], t[0]));
            hit.sign = sgn(det(rows));
        }
    }
    return hit;
}

}  // namespace vk4
