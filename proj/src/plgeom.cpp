#include "vk4/plgeom.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>

#include "vk4/intersect.hpp"

namespace vk4 {

namespace {

// Abstract simplices of a complex as vertex-id lists (dims 0, 1, 2).
std::vector<std::vector<int>> all_simplices(const Complex2& k) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < k.vertex_count(); ++v) out.push_back({v});
    for (const auto& e : k.all_edges()) out.push_back({e[0], e[1]});
    for (const auto& t : k.all_triangles()) out.push_back({t[0], t[1], t[2]});
    return out;
}

std::string simplex_label(const Complex2& k, const std::vector<int>& s) {
    std::string lab = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) lab += ",";
        lab += k.name_of(s[i]);
    }
    lab += "}";
    return lab;
}

std::vector<QPoint> placed(const GeometricComplex& g, const std::vector<int>& s) {
    std::vector<QPoint> pts;
    pts.reserve(s.size());
    for (int v : s) pts.push_back(g.placement[v]);
    return pts;
}

// Is the product-barycentric point supported on the shared face and
// diagonal there? sw/tw give, per position, the index into the shared
// vertex list (-1 when the vertex is not shared).
bool on_shared_diagonal(const std::vector<Rat>& u, size_t ns, const std::vector<int>& sw,
                        const std::vector<int>& tw, size_t nshared) {
    std::vector<Rat> alpha_shared(nshared, Rat(0));
    for (size_t i = 0; i < sw.size(); ++i) {
        if (sw[i] < 0) {
            if (u[i] != 0) return false;
        } else {
            alpha_shared[sw[i]] = u[i];
        }
    }
    for (size_t j = 0; j < tw.size(); ++j) {
        if (tw[j] < 0) {
            if (u[sw.size() + j] != 0) return false;
        } else {
            if (u[sw.size() + j] != alpha_shared[tw[j]]) return false;
        }
    }
    return true;
}

QPoint ambient_of(const std::vector<Rat>& u, const std::vector<QPoint>& s) {
    QPoint p(s[0].size(), Rat(0));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t c = 0; c < p.size(); ++c) p[c] += u[i] * s[i][c];
    return p;
}

}  // namespace

EmbedReport verify_embedding(const GeometricComplex& g, EmbedMode mode) {
    EmbedReport rep;
    const auto simplices = all_simplices(g.complex);

    std::vector<bool> degenerate(simplices.size(), false);
    for (size_t i = 0; i < simplices.size(); ++i) {
        if (!affinely_independent(placed(g, simplices[i]))) {
            degenerate[i] = true;
            rep.ok = false;
            rep.violations.push_back({simplex_label(g.complex, simplices[i]), "",
                                      g.placement[simplices[i][0]]});
            rep.violations.back().first += " has a degenerate image";
        }
    }

    for (size_t i = 0; i < simplices.size(); ++i) {
        if (degenerate[i]) continue;
        for (size_t j = i + 1; j < simplices.size(); ++j) {
            if (degenerate[j]) continue;
            const auto& s = simplices[i];
            const auto& t = simplices[j];

            // Shared vertex positions.
            std::vector<int> sw(s.size(), -1), tw(t.size(), -1);
            int nshared = 0;
            for (size_t a = 0; a < s.size(); ++a)
                for (size_t b = 0; b < t.size(); ++b)
                    if (s[a] == t[b]) {
                        sw[a] = nshared;
                        tw[b] = nshared;
                        ++nshared;
                    }
            if (mode == EmbedMode::AlmostEmbedding && nshared > 0) continue;

            const PairMeet meet = simplex_pair_meet(placed(g, s), placed(g, t));
            const int expected = nshared - 1;
            if (meet.dim <= expected) continue;

            rep.ok = false;
            EmbedViolation v{simplex_label(g.complex, s), simplex_label(g.complex, t), {}};
            for (const auto& u : meet.points) {
                if (!on_shared_diagonal(u, s.size(), sw, tw, nshared)) {
                    v.witness = ambient_of(u, placed(g, s));
                    break;
                }
            }
            if (!v.witness && !meet.points.empty())
                v.witness = ambient_of(meet.points[0], placed(g, s));
            rep.violations.push_back(std::move(v));
        }
    }
    return rep;
}

namespace {

const std::array<std::array<long, 4>, 6> kJoinCoords = {{
    {1, 0, 0, 0},    // x1
    {0, 1, 0, 0},    // x2
    {-1, -1, 0, 0},  // x3
    {0, 0, 1, 0},    // x4
    {0, 0, 0, 1},    // x5
    {0, 0, -1, -1},  // x6
}};

}  // namespace

JoinSphere join_sphere() {
    JoinSphere js;
    for (int i = 1; i <= 6; ++i) js.skeleton.add_vertex("x" + std::to_string(i));
    // Circle C1 on {x1,x2,x3}, circle C2 on {x4,x5,x6}; faces of the join
    // are joins of faces.
    const std::array<std::array<int, 2>, 3> c1e = {{{0, 1}, {0, 2}, {1, 2}}};
    const std::array<std::array<int, 2>, 3> c2e = {{{3, 4}, {3, 5}, {4, 5}}};
    for (const auto& e : c1e) js.skeleton.add_edge(e[0], e[1]);
    for (const auto& e : c2e) js.skeleton.add_edge(e[0], e[1]);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) js.skeleton.add_edge(u, v);
    for (const auto& e : c1e)
        for (int v = 3; v < 6; ++v) js.skeleton.add_triangle(e[0], e[1], v);
    for (int u = 0; u < 3; ++u)
        for (const auto& e : c2e) js.skeleton.add_triangle(u, e[0], e[1]);
    for (const auto& e1 : c1e)
        for (const auto& e2 : c2e) js.tetrahedra.push_back({e1[0], e1[1], e2[0], e2[1]});

    for (const auto& c : kJoinCoords) {
        QPoint p;
        for (long x : c) p.emplace_back(x);
        js.placement.push_back(std::move(p));
    }
    return js;
}

HRealization realize_H(const Word& phi) {
    std::vector<std::string> warnings;
    const Complex2 h = named_subcomplex(attach_disk(build_Z(), phi, &warnings), SubcomplexName::H);

    // v6 is the join vertex playing the role of o; both copies are
    // translated so that it sits at the origin, and the y-copy is the
    // reflection of the x-copy through o. The supporting hyperplane
    // <n, u> = 0 with n = (0,0,1,1) meets each copy exactly at o, so the
    // two sides share that single point.
    QPoint v6;
    for (long x : kJoinCoords[5]) v6.emplace_back(x);

    for (int round = 0; round <= 16; ++round) {
        const Rat s(1, 1 << std::min(round, 16));
        GeometricComplex g;
        g.complex = h;
        g.placement.assign(h.vertex_count(), QPoint(4, Rat(0)));
        for (int v = 0; v < h.vertex_count(); ++v) {
            const std::string& name = h.name_of(v);
            if (name == "o") continue;  // stays at the origin
            const char side = name[0];
            const int idx = name[1] - '0';
            QPoint p(4, Rat(0));
            if (idx == 0) {
                // cone apex at the copy center: the image of the origin
                p = scale(side == 'x' ? Rat(-1) : Rat(1), v6);
            } else {
                QPoint vi;
                for (long x : kJoinCoords[idx - 1]) vi.emplace_back(x);
                p = sub(vi, v6);
                if (side == 'y') p = scale(Rat(-1), p);
            }
            g.placement[v] = scale(s, p);
        }
        EmbedReport rep = verify_embedding(g, EmbedMode::Embedding);
        if (rep.ok) {
            rep.notes.push_back(
                "H realized as two scaled join-sphere copies sharing exactly the basepoint o, "
                "cone apexes x0, y0 at the copy centers; replaces the ball-pushing construction "
                "inside a single round 3-sphere and is verified exactly");
            return HRealization{std::move(g), std::move(rep), round};
        }
    }
    throw std::runtime_error("realization failed after retry budget");
}

namespace {

QPoint q3(long x, long y, long z) {
    return qpoint({x, y, z});
}

QPoint q3r(const Rat& x, const Rat& y, const Rat& z) {
    return {x, y, z};
}

}  // namespace

LinkCurves build_link_curves(const Word& phi) {
    LinkCurves lc;
    // Triangles in disjoint balls around (-10,0,0) and (10,0,0),
    // counterclockwise seen from +z.
    lc.g1.pts = {q3(-12, -2, 0), q3(-8, -2, 0), q3(-10, 2, 0)};
    lc.g2.pts = {q3(8, -2, 0), q3(12, -2, 0), q3(10, 2, 0)};

    const QPoint base = q3(0, 10, 0);
    const long n = static_cast<long>(phi.size());
    if (n == 0) {
        // Identity word: a small split triangle away from g1 and g2.
        lc.g3.pts = {q3(0, 10, 1), q3(1, 10, 1), q3(0, 11, 1)};
        return lc;
    }

    lc.g3.pts.push_back(base);
    long i = 0;
    for (Letter l : phi.letters()) {
        const long center = (std::abs(l) == 1) ? -10 : 10;
        // Distinct dive abscissas inside the target triangle, spread in
        // (center-1, center+1).
        const Rat x = Rat(center) + Rat(2 * i - (n - 1), n + 1);
        const QPoint lo = q3r(x, 0, -1);
        const QPoint hi = q3r(x, 0, 1);
        const QPoint lo_out = q3r(x, 5, -1);
        const QPoint hi_out = q3r(x, 5, 1);
        if (l > 0) {
            // Positive letters dive upward through the triangle: +1.
            lc.g3.pts.push_back(hi_out);
            lc.g3.pts.push_back(lo_out);
            lc.g3.pts.push_back(lo);
            lc.g3.pts.push_back(hi);
        } else {
            lc.g3.pts.push_back(hi);
            lc.g3.pts.push_back(lo);
            lc.g3.pts.push_back(lo_out);
            lc.g3.pts.push_back(hi_out);
        }
        lc.g3.pts.push_back(base);
        ++i;
    }
    lc.g3.pts.pop_back();  // cyclic closure back to the basepoint
    return lc;
}

bool curves_disjoint(const PLCurve& c1, const PLCurve& c2) {
    const size_t n1 = c1.pts.size(), n2 = c2.pts.size();
    for (size_t i = 0; i < n1; ++i) {
        const std::vector<QPoint> s = {c1.pts[i], c1.pts[(i + 1) % n1]};
        for (size_t j = 0; j < n2; ++j) {
            const std::vector<QPoint> t = {c2.pts[j], c2.pts[(j + 1) % n2]};
            if (simplex_pair_meet(s, t).dim >= 0) return false;
        }
    }
    return true;
}

Int pl_linking_number(const PLCurve& c1, const PLCurve& c2) {
    if (c1.pts.size() < 3 || c2.pts.size() < 3)
        throw std::invalid_argument("pl_linking_number: closed polygons need >= 3 points");
    if (!curves_disjoint(c1, c2))
        throw std::invalid_argument("pl_linking_number: curves intersect");

    std::mt19937_64 rng(0x6d5c3b2a19080706ULL);
    const size_t n1 = c1.pts.size(), n2 = c2.pts.size();
    for (int attempt = 0; attempt < 64; ++attempt) {
        QPoint apex(3);
        for (auto& c : apex) c = Rat(static_cast<long>(rng() % 401) - 200);

        bool good = true;
        Int total = 0;
        for (size_t i = 0; i < n1 && good; ++i) {
            const std::vector<QPoint> cone_tri = {apex, c1.pts[i], c1.pts[(i + 1) % n1]};
            if (!affinely_independent(cone_tri)) {
                good = false;
                break;
            }
            for (size_t j = 0; j < n2 && good; ++j) {
                const std::vector<QPoint> seg = {c2.pts[j], c2.pts[(j + 1) % n2]};
                const SimplexHit hit = simplex_intersect(cone_tri, seg);
                if (hit.kind == HitKind::Empty) continue;
                if (hit.kind == HitKind::Point && hit.sign)
                    total += *hit.sign;
                else
                    good = false;  // boundary touch or overlap: retry apex
            }
        }
        if (good) return total;
    }
    throw NoGenericApex("no generic apex found");
}

void write_off(std::ostream& os, const GeometricComplex& g) {
    const auto tris = g.complex.all_triangles();
    os << "nOFF\n4\n";
    os << "# exact coordinates (vertex name, then rationals):\n";
    for (int v = 0; v < g.complex.vertex_count(); ++v) {
        os << "# " << g.complex.name_of(v);
        for (const auto& c : g.placement[v]) os << " " << rat_str(c);
        os << "\n";
    }
    os << g.complex.vertex_count() << " " << tris.size() << " " << g.complex.all_edges().size()
       << "\n";
    char buf[64];
    for (int v = 0; v < g.complex.vertex_count(); ++v) {
        for (size_t c = 0; c < g.placement[v].size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", rat_double(g.placement[v][c]));
            os << (c ? " " : "") << buf;
        }
        os << "\n";
    }
    for (const auto& t : tris) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

nlohmann::ordered_json curve_to_json(const PLCurve& c) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : c.pts) {
        nlohmann::ordered_json trip = nlohmann::ordered_json::array();
        for (const auto& x : p) trip.push_back(rat_str(x));
        pts.push_back(trip);
    }
    nlohmann::ordered_json j;
    j["points"] = pts;
    return j;
}

}  // namespace vk4
