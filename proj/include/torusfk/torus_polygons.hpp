#ifndef TORUSFK_TORUS_POLYGONS_HPP
#define TORUSFK_TORUS_POLYGONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "torusfk/useries.hpp"

namespace torusfk
{

struct Point
{
    mpq_class x;
    mpq_class y;

    friend bool operator==(const Point&, const Point&) = default;
};

// An oriented closed curve on R^2/Z^2 given by one period of a lift: the
// PL path vertices[0] -> .. -> vertices[m-1] -> vertices[0] + shift.
// Parameters s in R run along the lift; s = n + (j + t)/m is the point
// t of segment j in period n.
struct TorusCurve
{
    std::string name;
    std::vector<Point> vertices;
    long shift_x = 0;
    long shift_y = 0;
    mpq_class phase;      // grading: lift of the angle of the line divided by pi
    long grading = 0;     // integer shift of the grading
    mpq_class star;       // parameter of the marked point, in (0, 1)

    std::size_t segments() const { return vertices.size(); }
    Point at(const mpq_class& s) const;
    // Direction of the segment containing parameter s (half-open on the right).
    Point direction(const mpq_class& s) const;
};

// A point of A cap B on the torus: A(sa) = B(sb) + (tx, ty) with sa, sb in [0, 1).
struct TorusIntersection
{
    int a = 0;
    int b = 0;
    mpq_class sa;
    mpq_class sb;
    long tx = 0;
    long ty = 0;
    Point where;
    int degree = 0; // as a generator of hom(A, B)
};

struct PolygonScene
{
    std::vector<TorusCurve> curves;
    Point z;

    int curve_index(std::string_view name) const;
    std::vector<TorusIntersection> intersections(int a, int b) const;
    // Algebraic intersection number of the homology classes.
    long pairing(int a, int b) const;
};

// Three lines y = 0 (+x), x = 0 (+y), x - y = 1/2 (direction (-1, -1)),
// the basepoint (3/4, 3/4), and the zigzag push-off g1p of x = 0 crossing it
// at heights 1/8 (degree 0) and 5/8 (degree 1). Curves: g0, g1, g2, g1p.
PolygonScene preset_scene();

// Number of corners of the complementary region of the straight curves
// (those with a single segment) containing p.
int region_corner_count(const PolygonScene& scene, const Point& p);

struct PolygonWitness
{
    std::vector<int> curves;          // Gamma_0 .. Gamma_d
    std::vector<Point> corners;       // y_0 .. y_d (lifts)
    std::vector<int> degrees;         // i(y_0) .. i(y_d)
    std::vector<mpq_class> edge_span; // |delta s| along Gamma_k from y_k to y_{k+1}
    std::vector<bool> edge_positive;  // traversal agrees with the orientation
    std::vector<int> edge_stars;
    std::vector<Point> boundary;      // counterclockwise PL boundary
    int multiplicity = 0;             // of z
    int wrap = 0;                     // floor of the longest edge span
    int q = 0;
    int r = 0;
    int s = 0;

    int sign() const { return (q + r + s) % 2 ? -1 : 1; }
    bool degree_relation() const;
};

// All deck classes of embedded counterclockwise polygons with convex corners
// whose k-th edge runs along a lift of curves[k], every edge span below
// wrap_bound + 1. corner_degree optionally pins i(y_k).
std::vector<PolygonWitness> enumerate_polygons(const PolygonScene& scene, const std::vector<int>& curves,
                                               int wrap_bound,
                                               const std::vector<std::optional<int>>& corner_degree = {});

// Sign (-1)^{q + r + s}, recomputed from the witness data.
int polygon_sign(const PolygonWitness& w);

// Coefficient of e21 in mu2(e01, e20) and of the degree-0 self-intersection
// in mu3(e01, e20, e12), truncated at U^{P(P+1)/2}.
IntSeries mu2_series(const PolygonScene& scene, int wrap_bound);
IntSeries mu3_series(const PolygonScene& scene, int wrap_bound);

std::vector<PolygonWitness> triangle_witnesses(const PolygonScene& scene, int wrap_bound);
std::vector<PolygonWitness> quadrilateral_witnesses(const PolygonScene& scene, int wrap_bound);

// One line per witness: corners, degrees, spans, multiplicity, q, r, s, sign.
std::string format_witness(const PolygonScene& scene, const PolygonWitness& w);
// Static figure of lifted witnesses with the z lattice.
std::string witnesses_svg(const PolygonScene& scene, const std::vector<PolygonWitness>& witnesses);

// Scene text: "curve <name> shift <sx> <sy> phase <q> grading <n> star <q>"
// followed by "vertex <x> <y>" lines, and one "z <x> <y>" line.
std::string dump_scene(const PolygonScene& scene);
PolygonScene load_scene(std::string_view text);

} // namespace torusfk

#endif
