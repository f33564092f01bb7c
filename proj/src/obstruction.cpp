#include "vk4/obstruction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "vk4/intersect.hpp"

namespace vk4 {

namespace {

bool disjoint33(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

bool disjoint32(const std::array<int, 3>& a, const std::array<int, 2>& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

std::vector<QPoint> place(const RationalMap& f, const std::array<int, 3>& t) {
    return {f.coords[t[0]], f.coords[t[1]], f.coords[t[2]]};
}

}  // namespace

PairTables deleted_pairs(const Complex2& k) {
    PairTables pt;
    pt.tris = k.all_triangles();
    pt.edges = k.all_edges();
    const int nt = static_cast<int>(pt.tris.size());
    const int ne = static_cast<int>(pt.edges.size());
    for (int i = 0; i < nt; ++i)
        for (int j = i + 1; j < nt; ++j)
            if (disjoint33(pt.tris[i], pt.tris[j])) pt.pairs22.emplace_back(i, j);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ne; ++j)
            if (disjoint32(pt.tris[i], pt.edges[j])) pt.pairs21.emplace_back(i, j);
    return pt;
}

bool certify_generic(const Complex2& k, const RationalMap& f, std::vector<int>* offenders) {
    bool ok = true;
    auto offend = [&](std::initializer_list<int> vs) {
        ok = false;
        if (offenders)
            for (int v : vs) offenders->push_back(v);
    };

    const int nv = k.vertex_count();
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (f.coords[u] == f.coords[v]) offend({u, v});

    const auto tris = k.all_triangles();
    for (const auto& t : tris)
        if (!affinely_independent(place(f, t))) offend({t[0], t[1], t[2]});
    if (!ok) return false;

    const PairTables pt = deleted_pairs(k);
    for (const auto& [i, j] : pt.pairs22) {
        const auto& a = pt.tris[i];
        const auto& b = pt.tris[j];
        const PairMeet meet = simplex_pair_meet(place(f, a), place(f, b));
        bool bad = meet.solution_dim != 0;
        if (!bad && meet.dim == 0) {
            for (const auto& c : meet.points[0])
                if (c == 0) bad = true;  // hit on a boundary
        }
        if (bad) offend({a[0], a[1], a[2], b[0], b[1], b[2]});
    }
    return ok;
}

RationalMap sample_generic_map(const Complex2& k, unsigned seed) {
    std::mt19937_64 rng(0x4b371a2cu ^ (static_cast<uint64_t>(seed) * 0x9e3779b97f4a7c15ULL));
    auto draw = [&rng]() { return Rat(static_cast<long>(rng() % 20001) - 10000); };

    RationalMap f;
    f.seed = seed;
    f.coords.assign(k.vertex_count(), QPoint(4));
    for (auto& p : f.coords)
        for (auto& c : p) c = draw();

    for (int round = 0; round < 64; ++round) {
        std::vector<int> offenders;
        if (certify_generic(k, f, &offenders)) return f;
        std::set<int> redraw(offenders.begin(), offenders.end());
        for (int v : redraw)
            for (auto& c : f.coords[v]) c = draw();
    }
    throw GenericityError("genericity not reached after 64 redraw rounds");
}

Int pair_intersection_number(const RationalMap& f, const std::array<int, 3>& a,
                             const std::array<int, 3>& b) {
    const SimplexHit hit = simplex_intersect(place(f, a), place(f, b));
    if (hit.kind == HitKind::Empty) return 0;
    if (hit.kind == HitKind::Point && hit.sign) return Int(*hit.sign);
    throw std::runtime_error("degenerate configuration in pair_intersection_number");
}

Cochain4 vk_cocycle(const RationalMap& f, const Complex2& k, const PairTables& pt) {
    Cochain4 c;
    c.values.reserve(pt.pairs22.size());
    for (const auto& [i, j] : pt.pairs22)
        c.values.push_back(pair_intersection_number(f, pt.tris[i], pt.tris[j]));
    return c;
}

Cochain4 vk_cocycle(const RationalMap& f, const Complex2& k) {
    return vk_cocycle(f, k, deleted_pairs(k));
}

namespace {

// [e : boundary(t)] for a sorted triple t: +{t1,t2} -{t0,t2} +{t0,t1}.
int incidence(const std::array<int, 2>& e, const std::array<int, 3>& t) {
    if (e[0] == t[1] && e[1] == t[2]) return 1;
    if (e[0] == t[0] && e[1] == t[2]) return -1;
    if (e[0] == t[0] && e[1] == t[1]) return 1;
    return 0;
}

}  // namespace

SparseIntMatrix coboundary_matrix(const Complex2& k, const PairTables& pt) {
    SparseIntMatrix m(static_cast<int>(pt.pairs22.size()), static_cast<int>(pt.pairs21.size()));

    std::map<std::pair<int, int>, int> row_of_pair;
    for (size_t r = 0; r < pt.pairs22.size(); ++r) row_of_pair[pt.pairs22[r]] = static_cast<int>(r);

    std::map<std::array<int, 2>, std::vector<int>> tris_of_edge;
    for (size_t t = 0; t < pt.tris.size(); ++t) {
        const auto& tri = pt.tris[t];
        tris_of_edge[{tri[0], tri[1]}].push_back(static_cast<int>(t));
        tris_of_edge[{tri[0], tri[2]}].push_back(static_cast<int>(t));
        tris_of_edge[{tri[1], tri[2]}].push_back(static_cast<int>(t));
    }

    for (size_t col = 0; col < pt.pairs21.size(); ++col) {
        const auto& [sigma, e] = pt.pairs21[col];
        auto it = tris_of_edge.find(pt.edges[e]);
        if (it == tris_of_edge.end()) continue;
        for (int tau : it->second) {
            if (tau == sigma) continue;
            if (!disjoint33(pt.tris[sigma], pt.tris[tau])) continue;
            auto key = std::minmax(sigma, tau);
            auto row = row_of_pair.find({key.first, key.second});
            if (row == row_of_pair.end()) continue;
            m.add(row->second, static_cast<int>(col), Int(incidence(pt.edges[e], pt.tris[tau])));
        }
    }
    return m;
}

SparseIntMatrix coboundary_matrix(const Complex2& k) {
    return coboundary_matrix(k, deleted_pairs(k));
}

ObstructionVerdict obstruction_verdict(const Complex2& k, unsigned seed) {
    ObstructionVerdict v;
    v.seed = seed;
    const PairTables pt = deleted_pairs(k);
    v.pairs22 = pt.pairs22.size();
    v.pairs21 = pt.pairs21.size();

    const RationalMap f = sample_generic_map(k, seed);
    v.cocycle = vk_cocycle(f, k, pt);
    const SparseIntMatrix m = coboundary_matrix(k, pt);

    const LinearSolveOutcome z = solve_integer_system(m, v.cocycle.values, Ring::Z);
    v.vanishes_Z = z.solvable;
    if (z.solvable)
        v.witness = z.witness;
    else
        v.refutation_row = z.refutation_row;

    if (z.solvable) {
        v.vanishes_mod2 = true;  // an integer witness reduces mod 2
    } else {
        const LinearSolveOutcome m2 = solve_integer_system(m, v.cocycle.values, Ring::Mod2);
        v.vanishes_mod2 = m2.solvable;
    }
    return v;
}

int total_mod2(const Complex2& k, unsigned seed) {
    const RationalMap f = sample_generic_map(k, seed);
    const Cochain4 c = vk_cocycle(f, k);
    Int s = 0;
    for (const auto& x : c.values) s += x;
    return (s % 2 != 0) ? 1 : 0;
}

nlohmann::ordered_json verdict_to_json(const ObstructionVerdict& v) {
    nlohmann::ordered_json j;
    j["vanishes_Z"] = v.vanishes_Z;
    j["vanishes_mod2"] = v.vanishes_mod2;
    j["pairs_22"] = v.pairs22;
    j["pairs_21"] = v.pairs21;
    j["seed"] = v.seed;
    if (v.witness) {
        auto w = nlohmann::ordered_json::array();
        for (const auto& x : *v.witness) {
            if (x.fits_slong_p())
                w.push_back(x.get_si());
            else
                w.push_back(x.get_str());
        }
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (v.vanishes_Z)
        j["refutation_row"] = nullptr;
    else
        j["refutation_row"] = v.refutation_row;
    return j;
}

}  // namespace vk4
