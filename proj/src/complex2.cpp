#include "vk4/complex2.hpp"

#include <algorithm>
#include <stdexcept>

namespace vk4 {

namespace {

std::array<int, 2> sorted2(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

std::array<int, 3> sorted3(int u, int v, int w) {
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

int Complex2::add_vertex(const std::string& name) {
    if (index_.count(name)) throw std::invalid_argument("duplicate vertex name: " + name);
    names_.push_back(name);
    aliases_.emplace_back();
    index_[name] = static_cast<int>(names_.size()) - 1;
    return index_[name];
}

void Complex2::add_alias(int v, const std::string& alias) {
    if (index_.count(alias)) throw std::invalid_argument("alias clashes with existing name: " + alias);
    aliases_[v].push_back(alias);
    index_[alias] = v;
}

void Complex2::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("degenerate edge");
    edges_.insert(sorted2(u, v));
}

void Complex2::add_triangle(int u, int v, int w) {
    auto t = sorted3(u, v, w);
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("degenerate triangle");
    triangles_.insert(t);
    add_edge(t[0], t[1]);
    add_edge(t[0], t[2]);
    add_edge(t[1], t[2]);
}

void Complex2::add_cell(AttachedCell cell) {
    cells_.push_back(std::move(cell));
}

int Complex2::vertex(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool Complex2::has_edge(int u, int v) const {
    return edges_.count(sorted2(u, v)) > 0;
}

bool Complex2::has_triangle(int u, int v, int w) const {
    return triangles_.count(sorted3(u, v, w)) > 0;
}

bool Complex2::is_cell_interior(int v) const {
    for (const auto& c : cells_)
        for (int iv : c.interior_vertices)
            if (iv == v) return true;
    return false;
}

std::vector<std::array<int, 3>> Complex2::all_triangles() const {
    std::vector<std::array<int, 3>> out(triangles_.begin(), triangles_.end());
    for (const auto& c : cells_)
        out.insert(out.end(), c.interior_triangles.begin(), c.interior_triangles.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 2>> Complex2::all_edges() const {
    return {edges_.begin(), edges_.end()};
}

namespace {

// The canonical ring triangulation of a cell: boundary path P_0..P_{n-1},
// ring d_0..d_{n-1}, apex c.
std::vector<std::array<int, 3>> ring_triangles(const std::vector<int>& boundary,
                                               const std::vector<int>& interior) {
    const int n = static_cast<int>(boundary.size());
    const int apex = interior[n];
    std::vector<std::array<int, 3>> tris;
    tris.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        tris.push_back(sorted3(boundary[i], boundary[j], interior[i]));
        tris.push_back(sorted3(boundary[j], interior[i], interior[j]));
        tris.push_back(sorted3(interior[i], interior[j], apex));
    }
    std::sort(tris.begin(), tris.end());
    return tris;
}

std::vector<std::array<int, 2>> ring_edges(const std::vector<int>& boundary,
                                           const std::vector<int>& interior) {
    const int n = static_cast<int>(boundary.size());
    const int apex = interior[n];
    std::vector<std::array<int, 2>> es;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        es.push_back(sorted2(boundary[i], interior[i]));
        es.push_back(sorted2(boundary[j], interior[i]));
        es.push_back(sorted2(interior[i], interior[j]));
        es.push_back(sorted2(interior[i], apex));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

}  // namespace

std::vector<std::string> Complex2::validate() const {
    std::vector<std::string> bad;
    const int nv = vertex_count();
    auto in_range = [nv](int v) { return v >= 0 && v < nv; };

    for (const auto& e : edges_) {
        if (!in_range(e[0]) || !in_range(e[1]))
            bad.push_back("edge index out of range");
        else if (e[0] >= e[1])
            bad.push_back("edge not in canonical order");
    }
    for (const auto& t : triangles_) {
        if (!in_range(t[0]) || !in_range(t[2])) {
            bad.push_back("triangle index out of range");
            continue;
        }
        if (!(t[0] < t[1] && t[1] < t[2])) {
            bad.push_back("triangle not in canonical order");
            continue;
        }
        for (auto e : {sorted2(t[0], t[1]), sorted2(t[0], t[2]), sorted2(t[1], t[2])})
            if (!edges_.count(e))
                bad.push_back("triangle missing face " + names_[e[0]] + names_[e[1]]);
    }

    std::set<int> interior_all;
    for (size_t ci = 0; ci < cells_.size(); ++ci) {
        const auto& c = cells_[ci];
        const std::string tag = "cell " + std::to_string(ci) + ": ";
        const int n = static_cast<int>(c.boundary.size());
        if (n < 1) {
            bad.push_back(tag + "empty boundary path");
            continue;
        }
        bool ids_ok = true;
        for (int v : c.boundary)
            if (!in_range(v)) ids_ok = false;
        for (int v : c.interior_vertices)
            if (!in_range(v)) ids_ok = false;
        if (!ids_ok) {
            bad.push_back(tag + "vertex index out of range");
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const int u = c.boundary[i], v = c.boundary[(i + 1) % n];
            if (u == v || !edges_.count(sorted2(u, v)))
                bad.push_back(tag + "boundary path leaves the stored edges at step " +
                              std::to_string(i));
        }
        if (static_cast<int>(c.interior_vertices.size()) != n + 1) {
            bad.push_back(tag + "interior vertex count is not boundary length + 1");
            continue;
        }
        for (int v : c.interior_vertices) {
            if (!interior_all.insert(v).second)
                bad.push_back(tag + "interior vertex shared between cells: " + names_[v]);
        }
        if (c.interior_triangles != ring_triangles(c.boundary, c.interior_vertices))
            bad.push_back(tag + "interior is not the canonical ring triangulation");
        for (const auto& e : ring_edges(c.boundary, c.interior_vertices))
            if (!edges_.count(e))
                bad.push_back(tag + "interior edge missing from complex");
        for (const auto& t : c.interior_triangles)
            if (triangles_.count(t))
                bad.push_back(tag + "base triangle duplicates a cell interior triangle");
    }

    // Interior vertices must be fresh: they may not occur in base
    // triangles, base-only edges, or any attaching path.
    if (!interior_all.empty()) {
        for (const auto& t : triangles_)
            for (int v : t)
                if (interior_all.count(v))
                    bad.push_back("cell-interior vertex " + names_[v] + " used by a base triangle");
        for (const auto& c : cells_)
            for (int v : c.boundary)
                if (interior_all.count(v))
                    bad.push_back("cell-interior vertex " + names_[v] + " on an attaching path");
    }
    return bad;
}

nlohmann::ordered_json Complex2::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = names_;
    auto edge_list = nlohmann::ordered_json::array();
    for (const auto& e : edges_) edge_list.push_back({e[0], e[1]});
    j["edges"] = edge_list;
    auto tri_list = nlohmann::ordered_json::array();
    for (const auto& t : triangles_) tri_list.push_back({t[0], t[1], t[2]});
    j["triangles"] = tri_list;
    auto cell_list = nlohmann::ordered_json::array();
    for (const auto& c : cells_) {
        nlohmann::ordered_json jc;
        jc["boundary"] = c.boundary;
        std::vector<std::string> interior_names;
        for (int v : c.interior_vertices) interior_names.push_back(names_[v]);
        jc["interior_vertices"] = interior_names;
        auto itris = nlohmann::ordered_json::array();
        for (const auto& t : c.interior_triangles) itris.push_back({t[0], t[1], t[2]});
        jc["interior_triangles"] = itris;
        cell_list.push_back(jc);
    }
    j["cells"] = cell_list;
    return j;
}

Complex2 Complex2::from_json(const nlohmann::json& j) {
    Complex2 k;
    for (const auto& name : j.at("vertices")) k.add_vertex(name.get<std::string>());
    for (const auto& e : j.at("edges")) k.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& t : j.at("triangles"))
        k.add_triangle(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
    if (j.contains("cells")) {
        for (const auto& jc : j.at("cells")) {
            AttachedCell c;
            for (const auto& v : jc.at("boundary")) c.boundary.push_back(v.get<int>());
            for (const auto& name : jc.at("interior_vertices")) {
                int v = k.vertex(name.get<std::string>());
                if (v < 0) throw std::invalid_argument("cell interior vertex not in vertex list");
                c.interior_vertices.push_back(v);
            }
            for (const auto& t : jc.at("interior_triangles"))
                c.interior_triangles.push_back(
                    sorted3(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()));
            std::sort(c.interior_triangles.begin(), c.interior_triangles.end());
            k.add_cell(std::move(c));
        }
    }
    return k;
}

Complex2 build_base_block(const std::string& prefix) {
    Complex2 k;
    for (int i = 0; i <= 6; ++i) k.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int l = j + 1; l <= 6; ++l)
                if (!(i == 4 && j == 5 && l == 6)) k.add_triangle(i, j, l);
    return k;
}

Complex2 build_Z() {
    Complex2 z;
    // x0..x5, then o (the image of x6 ~ y6), then y0..y5.
    for (int i = 0; i <= 5; ++i) z.add_vertex("x" + std::to_string(i));
    const int o = z.add_vertex("o");
    z.add_alias(o, "x6");
    z.add_alias(o, "y6");
    for (int i = 0; i <= 5; ++i) z.add_vertex("y" + std::to_string(i));

    auto xv = [o](int i) { return i == 6 ? o : i; };
    auto yv = [o](int i) { return i == 6 ? o : 7 + i; };
    for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int l = j + 1; l <= 6; ++l) {
                if (i == 4 && j == 5 && l == 6) continue;
                z.add_triangle(xv(i), xv(j), xv(l));
                z.add_triangle(yv(i), yv(j), yv(l));
            }
    return z;
}

LoopPath loop_a(const Complex2& z) {
    const int o = z.vertex("o"), x4 = z.vertex("x4"), x5 = z.vertex("x5");
    if (o < 0 || x4 < 0 || x5 < 0) throw std::invalid_argument("not a Z-shaped complex");
    return LoopPath{{{o, x4}, {x4, x5}, {x5, o}}};
}

LoopPath loop_b(const Complex2& z) {
    const int o = z.vertex("o"), y4 = z.vertex("y4"), y5 = z.vertex("y5");
    if (o < 0 || y4 < 0 || y5 < 0) throw std::invalid_argument("not a Z-shaped complex");
    return LoopPath{{{o, y4}, {y4, y5}, {y5, o}}};
}

Complex2 attach_disk(const Complex2& z, const Word& phi, std::vector<std::string>* warnings) {
    if (phi.is_identity() && warnings)
        warnings->push_back("phi = 1 is excluded by the construction; attaching anyway");
    auto [ea, eb] = exponent_sums(phi);
    if ((ea != 0 || eb != 0) && warnings)
        warnings->push_back("phi is not in [F,F]; K_phi lies outside the studied family");

    Complex2 k = z;
    if (phi.is_identity()) return k;

    const int o = k.vertex("o"), x4 = k.vertex("x4"), x5 = k.vertex("x5"),
              y4 = k.vertex("y4"), y5 = k.vertex("y5");
    if (o < 0 || x4 < 0 || x5 < 0 || y4 < 0 || y5 < 0)
        throw std::invalid_argument("attach_disk requires a Z-shaped complex");

    AttachedCell cell;
    cell.boundary.push_back(o);
    for (Letter l : phi.letters()) {
        // Three edges per letter; inverse letters traverse the loop
        // backwards. Every letter returns to the basepoint o.
        switch (l) {
            case 1: cell.boundary.push_back(x4); cell.boundary.push_back(x5); break;
            case -1: cell.boundary.push_back(x5); cell.boundary.push_back(x4); break;
            case 2: cell.boundary.push_back(y4); cell.boundary.push_back(y5); break;
            case -2: cell.boundary.push_back(y5); cell.boundary.push_back(y4); break;
        }
        cell.boundary.push_back(o);
    }
    cell.boundary.pop_back();  // cyclic: final o equals position 0

    const int n = static_cast<int>(cell.boundary.size());
    const std::string prefix = "d" + std::to_string(k.cells().size()) + "_";
    for (int i = 0; i < n; ++i)
        cell.interior_vertices.push_back(k.add_vertex(prefix + std::to_string(i)));
    cell.interior_vertices.push_back(k.add_vertex(prefix + "apex"));

    cell.interior_triangles = ring_triangles(cell.boundary, cell.interior_vertices);
    for (const auto& e : ring_edges(cell.boundary, cell.interior_vertices))
        k.add_edge(e[0], e[1]);
    k.add_cell(std::move(cell));
    return k;
}

Complex2 quotient_points(const Complex2& k, const std::string& p, const std::string& q) {
    const int vp = k.vertex(p), vq = k.vertex(q);
    if (vp < 0 || vq < 0) throw std::invalid_argument("quotient_points: vertex not found");
    if (vp == vq) throw std::invalid_argument("quotient_points: identical vertices");
    if (k.is_cell_interior(vp) || k.is_cell_interior(vq))
        throw std::invalid_argument("quotient_points: cell-interior vertices cannot be identified");
    if (k.has_edge(vp, vq))
        throw std::invalid_argument("identification creates degenerate simplex");

    Complex2 out;
    std::vector<int> remap(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) {
        if (v == vq) continue;
        remap[v] = out.add_vertex(k.name_of(v));
        for (const auto& al : k.aliases_of(v)) out.add_alias(remap[v], al);
    }
    remap[vq] = remap[vp];
    out.add_alias(remap[vp], k.name_of(vq));
    for (const auto& al : k.aliases_of(vq)) out.add_alias(remap[vp], al);

    for (const auto& e : k.edges()) out.add_edge(remap[e[0]], remap[e[1]]);
    for (const auto& t : k.triangles()) out.add_triangle(remap[t[0]], remap[t[1]], remap[t[2]]);
    for (const auto& c : k.cells()) {
        AttachedCell nc;
        for (int v : c.boundary) nc.boundary.push_back(remap[v]);
        for (int v : c.interior_vertices) nc.interior_vertices.push_back(remap[v]);
        nc.interior_triangles = ring_triangles(nc.boundary, nc.interior_vertices);
        out.add_cell(std::move(nc));
    }
    return out;
}

namespace {

int resolve_role(const Complex2& k, const std::string& name) {
    int v = k.vertex(name);
    if (v < 0 && (name == "x6" || name == "y6")) v = k.vertex("o");
    return v;
}

}  // namespace

Complex2 named_subcomplex(const Complex2& k, SubcomplexName name) {
    int x1 = resolve_role(k, "x1"), x2 = resolve_role(k, "x2"), x3 = resolve_role(k, "x3");
    int y1 = resolve_role(k, "y1"), y2 = resolve_role(k, "y2"), y3 = resolve_role(k, "y3");
    if (x1 < 0 || x2 < 0 || x3 < 0 || y1 < 0 || y2 < 0 || y3 < 0 ||
        !k.has_triangle(x1, x2, x3) || !k.has_triangle(y1, y2, y3))
        throw std::invalid_argument("not a K_phi complex: named simplices absent");

    // H drops every attached cell (with its interior) and the two open
    // triangles x1x2x3, y1y2y3; their boundaries stay.
    Complex2 h;
    std::vector<int> remap(k.vertex_count(), -1);
    for (int v = 0; v < k.vertex_count(); ++v) {
        if (k.is_cell_interior(v)) continue;
        remap[v] = h.add_vertex(k.name_of(v));
        for (const auto& al : k.aliases_of(v)) h.add_alias(remap[v], al);
    }
    for (const auto& e : k.edges())
        if (remap[e[0]] >= 0 && remap[e[1]] >= 0) h.add_edge(remap[e[0]], remap[e[1]]);
    const auto drop1 = sorted3(x1, x2, x3);
    const auto drop2 = sorted3(y1, y2, y3);
    for (const auto& t : k.triangles()) {
        if (t == drop1 || t == drop2) continue;
        if (remap[t[0]] >= 0 && remap[t[1]] >= 0 && remap[t[2]] >= 0)
            h.add_triangle(remap[t[0]], remap[t[1]], remap[t[2]]);
    }
    if (name == SubcomplexName::H) return h;

    const char side = name == SubcomplexName::hatX ? 'x' : 'y';
    std::set<int> keep;
    for (int i = 1; i <= 6; ++i) {
        int v = resolve_role(h, std::string(1, side) + std::to_string(i));
        if (v < 0) throw std::invalid_argument("not a K_phi complex: named simplices absent");
        keep.insert(v);
    }
    Complex2 sub;
    std::vector<int> remap2(h.vertex_count(), -1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (!keep.count(v)) continue;
        remap2[v] = sub.add_vertex(h.name_of(v));
        for (const auto& al : h.aliases_of(v)) sub.add_alias(remap2[v], al);
    }
    for (const auto& e : h.edges())
        if (remap2[e[0]] >= 0 && remap2[e[1]] >= 0) sub.add_edge(remap2[e[0]], remap2[e[1]]);
    for (const auto& t : h.triangles())
        if (remap2[t[0]] >= 0 && remap2[t[1]] >= 0 && remap2[t[2]] >= 0)
            sub.add_triangle(remap2[t[0]], remap2[t[1]], remap2[t[2]]);
    return sub;
}

Word read_boundary_word(const Complex2& k_phi) {
    if (k_phi.cells().empty()) return Word();
    const auto& path = k_phi.cells().front().boundary;
    const int o = k_phi.vertex("o"), x4 = k_phi.vertex("x4"), x5 = k_phi.vertex("x5"),
              y4 = k_phi.vertex("y4"), y5 = k_phi.vertex("y5");
    if (path.size() % 3 != 0) throw std::invalid_argument("attaching path length not divisible by 3");
    std::vector<Letter> letters;
    for (size_t i = 0; i < path.size(); i += 3) {
        if (path[i] != o) throw std::invalid_argument("attaching path does not return to o");
        const int u = path[i + 1], v = path[i + 2];
        if (u == x4 && v == x5) letters.push_back(1);
        else if (u == x5 && v == x4) letters.push_back(-1);
        else if (u == y4 && v == y5) letters.push_back(2);
        else if (u == y5 && v == y4) letters.push_back(-2);
        else throw std::invalid_argument("attaching path is not built from the loops a, b");
    }
    return Word::from_letters(letters);
}

Complex2 full_skeleton7() {
    Complex2 k;
    for (int i = 0; i <= 6; ++i) k.add_vertex("v" + std::to_string(i));
    for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int l = j + 1; l <= 6; ++l) k.add_triangle(i, j, l);
    return k;
}

}  // namespace vk4
