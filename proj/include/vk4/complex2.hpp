#ifndef VK4_COMPLEX2_HPP
#define VK4_COMPLEX2_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vk4/words.hpp"

namespace vk4 {

// A polygonal 2-cell attached along a closed edge path of the base
// complex. The interior carries the canonical ring triangulation: for a
// boundary path of length n, interior_vertices lists the ring vertices
// d_0..d_{n-1} in path order followed by the apex, and the triangles are
//   {P_i, P_{i+1}, d_i}, {P_{i+1}, d_i, d_{i+1}}, {d_i, d_{i+1}, apex}.
// This is an honest simplicial disk even when the attaching word
// revisits vertices and edges of the base complex.
struct AttachedCell {
    std::vector<int> boundary;                        // closed path, global vertex ids
    std::vector<int> interior_vertices;               // ring in order, apex last
    std::vector<std::array<int, 3>> interior_triangles;  // sorted triples, global ids
};

// Simplicial 2-complex with optional attached cells. Vertices carry
// symbolic names; simplices are stored as sorted index tuples, and the
// increasing-index order is the positive orientation everywhere.
class Complex2 {
  public:
    int add_vertex(const std::string& name);
    void add_edge(int u, int v);
    void add_triangle(int u, int v, int w);
    void add_cell(AttachedCell cell);
    void add_alias(int v, const std::string& alias);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name_of(int v) const { return names_[v]; }
    const std::vector<std::string>& aliases_of(int v) const { return aliases_[v]; }

    // Index of the vertex with the given primary name or alias; -1 if absent.
    int vertex(const std::string& name) const;

    const std::set<std::array<int, 2>>& edges() const { return edges_; }
    const std::set<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<AttachedCell>& cells() const { return cells_; }

    bool has_edge(int u, int v) const;
    bool has_triangle(int u, int v, int w) const;
    bool is_cell_interior(int v) const;

    // Base triangles plus all cell interiors, sorted; these are the
    // 2-simplices of the complex.
    std::vector<std::array<int, 3>> all_triangles() const;
    std::vector<std::array<int, 2>> all_edges() const;

    // Empty list iff every structural invariant holds (downward closure,
    // closed attaching paths, fresh interior vertices, canonical ring
    // triangulation of every cell).
    std::vector<std::string> validate() const;

    nlohmann::ordered_json to_json() const;
    static Complex2 from_json(const nlohmann::json& j);

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::string>> aliases_;
    std::map<std::string, int> index_;
    std::set<std::array<int, 2>> edges_;
    std::set<std::array<int, 3>> triangles_;
    std::vector<AttachedCell> cells_;
};

// Closed edge path of directed edges; head of each edge is the tail of
// the next.
struct LoopPath {
    std::vector<std::pair<int, int>> edges;
};

// All 2-simplices on {prefix0..prefix6} except {prefix4,prefix5,prefix6}:
// 7 vertices, 21 edges, 34 triangles.
Complex2 build_base_block(const std::string& prefix);

// Disjoint union of the x- and y-blocks with x6 ~ y6 identified; the
// merged vertex is the basepoint o (aliases x6, y6). 13 vertices, 42
// edges, 68 triangles.
Complex2 build_Z();

// The loops a = o x4, x4 x5, x5 o and b = o y4, y4 y5, y5 o.
LoopPath loop_a(const Complex2& z);
LoopPath loop_b(const Complex2& z);

// K_phi = Z with a 2-cell attached along the word phi (3 edges per
// letter, inverse letters traverse reversed). phi = 1 and phi outside
// [F,F] are reported as warnings, not errors.
Complex2 attach_disk(const Complex2& z, const Word& phi,
                     std::vector<std::string>* warnings = nullptr);

// Identify two base vertices (the Segal-Skopenkov-Spiez variant for
// x1 ~ y1). The merged vertex keeps p's name and gains q's names as
// aliases; duplicate simplices collapse. Throws if p and q cobound an
// edge or triangle ("identification creates degenerate simplex").
Complex2 quotient_points(const Complex2& k, const std::string& p, const std::string& q);

enum class SubcomplexName { H, hatX, hatY };

// H = K_phi minus the attached cell and the two triangles x1x2x3,
// y1y2y3 (their boundaries stay); hatX / hatY are the full induced
// subcomplexes of H on {x1..x5, o} and {y1..y5, o}.
Complex2 named_subcomplex(const Complex2& k, SubcomplexName name);

// Decode the attaching path of the first cell back into a word in a, b.
Word read_boundary_word(const Complex2& k_phi);

// Full 2-skeleton of the 7-vertex simplex (the van Kampen-Flores
// complex): 7 vertices, 21 edges, 35 triangles.
Complex2 full_skeleton7();

}  // namespace vk4

#endif
