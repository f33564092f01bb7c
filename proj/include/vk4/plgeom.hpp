#ifndef VK4_PLGEOM_HPP
#define VK4_PLGEOM_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vk4/complex2.hpp"
#include "vk4/exact.hpp"
#include "vk4/words.hpp"

namespace vk4 {

// Closed polygon in Q^3; consecutive points are distinct.
struct PLCurve {
    std::vector<QPoint> pts;
};

struct GeometricComplex {
    Complex2 complex;
    std::vector<QPoint> placement;  // one point per vertex
};

enum class EmbedMode { Embedding, AlmostEmbedding };

struct EmbedViolation {
    std::string first, second;
    std::optional<QPoint> witness;
};

// Exhaustive exact pair check. Embedding mode requires every pair of
// simplices to intersect exactly in the image of their shared face;
// almost-embedding mode requires only vertex-disjoint pairs to have
// disjoint images. Degenerate simplex images are reported as violations.
struct EmbedReport {
    bool ok = true;
    std::vector<EmbedViolation> violations;
    std::vector<std::string> notes;
};

EmbedReport verify_embedding(const GeometricComplex& g, EmbedMode mode);

// The join of two triangle-boundary circles placed in complementary
// coordinate 2-planes through the origin: the boundary complex of the
// convex hull of the two triangles, a PL 3-sphere with face vector
// (6, 15, 18, 9).
struct JoinSphere {
    Complex2 skeleton;                           // vertices, edges, triangles
    std::vector<std::array<int, 4>> tetrahedra;  // the 9 facets
    std::vector<QPoint> placement;               // Q^4
};

JoinSphere join_sphere();

// Explicit embedding of H = K_phi minus the three open cells: two
// scaled join-sphere copies sharing exactly the basepoint o, with the
// cone apexes x0, y0 at the copy centers. Deterministic; shrinks both
// copies by 1/2 about o and retries (at most 16 rounds) if the exact
// verification pass ever fails.
struct HRealization {
    GeometricComplex geom;
    EmbedReport report;
    int shrink_rounds = 0;
};

HRealization realize_H(const Word& phi);

// The three proof curves in Q^3: g1, g2 are triangles in disjoint balls
// (images of the boundaries of x1x2x3 and y1y2y3), and g3 reads phi by
// threading a meridian loop around g1 per a-letter and around g2 per
// b-letter, returning to a basepoint between letters.
struct LinkCurves {
    PLCurve g1, g2, g3;
};

LinkCurves build_link_curves(const Word& phi);

struct NoGenericApex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed count of transversal crossings of c2 through the cone over c1
// from a certified-generic apex (deterministic search, exact tests).
// Symmetric in (c1, c2); negated by reversing either orientation.
Int pl_linking_number(const PLCurve& c1, const PLCurve& c2);

// True when no segment of c1 meets any segment of c2.
bool curves_disjoint(const PLCurve& c1, const PLCurve& c2);

// Geomview nOFF output: float coordinates in the body, exact rationals
// in a comment block.
void write_off(std::ostream& os, const GeometricComplex& g);

nlohmann::ordered_json curve_to_json(const PLCurve& c);

}  // namespace vk4

#endif
