#include "torusfk/torus_polygons.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace torusfk
{

namespace
{

mpz_class floor_q(const mpq_class& q)
{
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

mpz_class ceil_q(const mpq_class& q)
{
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const mpq_class& t, const Point& a) { return {t * a.x, t * a.y}; }
mpq_class cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
mpq_class dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
int sgn(const mpq_class& q) { return sgn(q.get_num()); }

Point lattice(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

Point vertex(const TorusCurve& c, long k)
{
    // k-th vertex of the lift, any integer k
    const long m = static_cast<long>(c.segments());
    long n = k / m, j = k % m;
    if (j < 0) {
        j += m;
        --n;
    }
    return c.vertices[j] + lattice(n * c.shift_x, n * c.shift_y);
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

std::string point_str(const Point& p) { return "(" + q_str(p.x) + ", " + q_str(p.y) + ")"; }

// Closed segments [a, b] and [c, d] meet.
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const int o1 = sgn(cross(b - a, c - a)), o2 = sgn(cross(b - a, d - a));
    const int o3 = sgn(cross(d - c, a - c)), o4 = sgn(cross(d - c, b - c));
    auto within = [](const Point& p, const Point& q, const Point& r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
               r.y <= std::max(p.y, q.y);
    };
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) || (o3 == 0 && within(c, d, a)) ||
           (o4 == 0 && within(c, d, b));
}

// Winding number of a closed polygon around p; throws when p is on it.
int winding(const std::vector<Point>& poly, const Point& p)
{
    int w = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        const mpq_class c = cross(b - a, p - a);
        if (c == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
            p.y <= std::max(a.y, b.y))
            throw Error("basepoint lies on a polygon boundary");
        if (a.y <= p.y) {
            if (b.y > p.y && c > 0)
                ++w;
        } else if (b.y <= p.y && c < 0) {
            --w;
        }
    }
    return w;
}

mpq_class signed_area2(const std::vector<Point>& poly)
{
    mpq_class a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return a;
}

// Degree of a transverse point of X cap Y as a generator of hom(X, Y).
int crossing_degree(const TorusCurve& X, const Point& dx, const TorusCurve& Y, Point dy)
{
    const mpq_class diff = (Y.phase + Y.grading) - (X.phase + X.grading);
    if (diff.get_den() != 1)
        return static_cast<int>(floor_q(diff).get_si()) + 1;
    if (dot(dx, dy) < 0)
        dy = mpq_class(-1) * dy;
    const mpq_class c = cross(dx, dy);
    if (c == 0)
        throw Error("curves " + X.name + " and " + Y.name + " are not transverse");
    return static_cast<int>(diff.get_num().get_si()) + (c > 0 ? 1 : 0);
}

struct Edge
{
    int curve;
    long tx, ty;
    mpq_class from, to;
};

void append_edge(const TorusCurve& c, const Edge& e, std::vector<Point>& out)
{
    const Point shift = lattice(e.tx, e.ty);
    out.push_back(c.at(e.from) + shift);
    const long m = static_cast<long>(c.segments());
    if (e.to > e.from) {
        const long lo = floor_q(e.from * m).get_si() + 1, hi = ceil_q(e.to * m).get_si() - 1;
        for (long k = lo; k <= hi; ++k)
            out.push_back(vertex(c, k) + shift);
    } else {
        const long hi = ceil_q(e.from * m).get_si() - 1, lo = floor_q(e.to * m).get_si() + 1;
        for (long k = hi; k >= lo; --k)
            out.push_back(vertex(c, k) + shift);
    }
}

int stars_between(const TorusCurve& c, const mpq_class& a, const mpq_class& b)
{
    const mpq_class lo = std::min(a, b), hi = std::max(a, b);
    const mpq_class x = lo - c.star, y = hi - c.star;
    if (x.get_den() == 1 || y.get_den() == 1)
        throw Error("marked point of " + c.name + " sits on a polygon corner");
    return static_cast<int>(mpz_class(ceil_q(y) - floor_q(x) - 1).get_si());
}

// Embedded, counterclockwise, convex at every corner.
bool admissible(const std::vector<Point>& poly, const std::vector<std::size_t>& corner_at)
{
    const std::size_t n = poly.size();
    if (n < 3 || signed_area2(poly) <= 0)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (poly[i] == poly[(i + 1) % n])
            return false;
    for (std::size_t idx : corner_at) {
        const Point& prev = poly[(idx + n - 1) % n];
        const Point& cur = poly[idx];
        const Point& next = poly[(idx + 1) % n];
        if (cross(cur - prev, next - cur) <= 0)
            return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = poly[i], &b = poly[(i + 1) % n];
        // adjacent segments may only share their common vertex
        const Point& c = poly[(i + 2) % n];
        if (cross(b - a, c - b) == 0 && dot(b - a, c - b) < 0)
            return false;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (segments_meet(a, b, poly[j], poly[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

int count_basepoints(const std::vector<Point>& poly, const Point& z)
{
    mpq_class x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
    for (const auto& p : poly) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    int count = 0;
    for (long i = floor_q(x0 - z.x).get_si(); i <= ceil_q(x1 - z.x).get_si(); ++i)
        for (long j = floor_q(y0 - z.y).get_si(); j <= ceil_q(y1 - z.y).get_si(); ++j)
            count += winding(poly, z + lattice(i, j));
    return count;
}

} // namespace

Point TorusCurve::at(const mpq_class& s) const
{
    const long m = static_cast<long>(segments());
    const mpq_class sm = s * m;
    const long k = floor_q(sm).get_si();
    const mpq_class t = sm - k;
    const Point a = vertex(*this, k), b = vertex(*this, k + 1);
    return a + t * (b - a);
}

Point TorusCurve::direction(const mpq_class& s) const
{
    const long k = floor_q(s * static_cast<long>(segments())).get_si();
    return vertex(*this, k + 1) - vertex(*this, k);
}

int PolygonScene::curve_index(std::string_view name) const
{
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == name)
            return static_cast<int>(i);
    throw Error("unknown curve: " + std::string(name));
}

long PolygonScene::pairing(int a, int b) const
{
    const auto &A = curves.at(a), &B = curves.at(b);
    return A.shift_x * B.shift_y - A.shift_y * B.shift_x;
}

std::vector<TorusIntersection> PolygonScene::intersections(int a, int b) const
{
    const TorusCurve &A = curves.at(a), &B = curves.at(b);
    if (a == b)
        throw Error("self-intersections are taken against a push-off");
    auto bbox = [](const TorusCurve& c) {
        mpq_class x0 = c.vertices[0].x, x1 = x0, y0 = c.vertices[0].y, y1 = y0;
        for (std::size_t k = 0; k <= c.segments(); ++k) {
            const Point p = vertex(c, static_cast<long>(k));
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        return std::array<mpq_class, 4>{x0, x1, y0, y1};
    };
    const auto ba = bbox(A), bb = bbox(B);
    const long tx0 = floor_q(ba[0] - bb[1]).get_si() - 1, tx1 = ceil_q(ba[1] - bb[0]).get_si() + 1;
    const long ty0 = floor_q(ba[2] - bb[3]).get_si() - 1, ty1 = ceil_q(ba[3] - bb[2]).get_si() + 1;
    const long ma = static_cast<long>(A.segments()), mb = static_cast<long>(B.segments());

    std::vector<TorusIntersection> out;
    for (long j = 0; j < ma; ++j) {
        const Point p = vertex(A, j), dp = vertex(A, j + 1) - p;
        for (long tx = tx0; tx <= tx1; ++tx)
            for (long ty = ty0; ty <= ty1; ++ty)
                for (long k = 0; k < mb; ++k) {
                    const Point r = vertex(B, k) + lattice(tx, ty), dr = vertex(B, k + 1) + lattice(tx, ty) - r;
                    const mpq_class den = cross(dp, dr);
                    if (den == 0) {
                        if (cross(dp, r - p) == 0 && segments_meet(p, p + dp, r, r + dr))
                            throw Error("curves " + A.name + " and " + B.name + " overlap");
                        continue;
                    }
                    const mpq_class t = cross(r - p, dr) / den, u = cross(r - p, dp) / den;
                    if (t < 0 || t >= 1 || u < 0 || u >= 1)
                        continue;
                    TorusIntersection x;
                    x.a = a;
                    x.b = b;
                    x.sa = (j + t) / ma;
                    x.sb = (k + u) / mb;
                    x.tx = tx;
                    x.ty = ty;
                    x.where = p + t * dp;
                    x.degree = crossing_degree(A, dp, B, dr);
                    out.push_back(std::move(x));
                }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.sa < r.sa; });
    return out;
}

PolygonScene preset_scene()
{
    PolygonScene s;
    auto line = [](std::string name, Point base, long sx, long sy, mpq_class phase, mpq_class star) {
        TorusCurve c;
        c.name = std::move(name);
        c.vertices = {std::move(base)};
        c.shift_x = sx;
        c.shift_y = sy;
        c.phase = std::move(phase);
        c.star = std::move(star);
        return c;
    };
    s.curves.push_back(line("g0", lattice(0, 0), 1, 0, 0, mpq_class(3, 4)));
    s.curves.push_back(line("g1", lattice(0, 0), 0, 1, mpq_class(1, 2), mpq_class(3, 4)));
    s.curves.push_back(line("g2", {mpq_class(1, 2), 0}, -1, -1, mpq_class(1, 4), mpq_class(1, 4)));
    // zigzag of amplitude 1/16 about x = 0, crossing it at heights 5/8 and 9/8
    TorusCurve p;
    p.name = "g1p";
    p.vertices = {{mpq_class(-1, 16), mpq_class(3, 8)}, {mpq_class(1, 16), mpq_class(7, 8)}};
    p.shift_x = 0;
    p.shift_y = 1;
    p.phase = mpq_class(1, 2);
    p.star = mpq_class(3, 8); // height 3/4, level with the star of g1
    s.curves.push_back(std::move(p));
    s.z = {mpq_class(3, 4), mpq_class(3, 4)};
    return s;
}

int region_corner_count(const PolygonScene& scene, const Point& p)
{
    // clip a large square by the two nearest lifts of each straight curve
    std::vector<Point> poly = {lattice(-4, -4), lattice(4, -4), lattice(4, 4), lattice(-4, 4)};
    for (auto& v : poly)
        v = v + p;
    auto clip = [](const std::vector<Point>& in, const Point& d, const Point& o, const mpq_class& lo,
                   const mpq_class& hi) {
        // keep lo <= cross(d, x - o) <= hi
        auto pass = [&](const std::vector<Point>& pts, bool upper) {
            std::vector<Point> res;
            auto val = [&](const Point& x) -> mpq_class {
                const mpq_class c = cross(d, x - o);
                return upper ? hi - c : c - lo;
            };
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Point &a = pts[i], &b = pts[(i + 1) % pts.size()];
                const mpq_class va = val(a), vb = val(b);
                if (va >= 0)
                    res.push_back(a);
                if ((va > 0 && vb < 0) || (va < 0 && vb > 0))
                    res.push_back(a + (va / (va - vb)) * (b - a));
            }
            return res;
        };
        return pass(pass(in, false), true);
    };
    for (const auto& c : scene.curves) {
        if (c.segments() != 1)
            continue;
        const Point d = lattice(c.shift_x, c.shift_y);
        const mpz_class g = gcd(mpz_class(c.shift_x), mpz_class(c.shift_y));
        const mpq_class v = cross(d, p - c.vertices[0]) / mpq_class(g);
        if (v.get_den() == 1)
            return 0;
        const mpq_class k = mpq_class(floor_q(v));
        poly = clip(poly, d, c.vertices[0], k * g, (k + 1) * g);
    }
    // drop repeated and collinear vertices
    std::vector<Point> clean;
    for (const auto& v : poly)
        if (clean.empty() || !(clean.back() == v))
            clean.push_back(v);
    if (clean.size() > 1 && clean.front() == clean.back())
        clean.pop_back();
    int corners = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        const Point &a = clean[(i + clean.size() - 1) % clean.size()], &b = clean[i],
                    &c = clean[(i + 1) % clean.size()];
        if (cross(b - a, c - b) != 0)
            ++corners;
    }
    return corners;
}

bool PolygonWitness::degree_relation() const
{
    const int d = static_cast<int>(degrees.size()) - 1;
    int sum = 0;
    for (int k = 1; k <= d; ++k)
        sum += degrees[k];
    return degrees[0] == sum + 2 - d;
}

int polygon_sign(const PolygonWitness& w)
{
    const int d = static_cast<int>(w.degrees.size()) - 1;
    int q = w.edge_positive[d] ? 0 : w.degrees[0] + w.degrees[d];
    int r = 0;
    for (int k = 1; k < d; ++k)
        if (!w.edge_positive[k])
            r += w.degrees[k];
    int s = 0;
    for (int n : w.edge_stars)
        s += n;
    return ((q + r + s) % 2 + 2) % 2 ? -1 : 1;
}

std::vector<PolygonWitness> enumerate_polygons(const PolygonScene& scene, const std::vector<int>& curves,
                                               int wrap_bound, const std::vector<std::optional<int>>& corner_degree)
{
    const int d = static_cast<int>(curves.size()) - 1;
    if (d < 1)
        throw Error("a polygon needs at least two edges");
    if (wrap_bound < 0)
        throw Error("negative wrap bound");
    if (!corner_degree.empty() && static_cast<int>(corner_degree.size()) != d + 1)
        throw Error("corner constraints must name every corner");
    for (int c : curves)
        if (c < 0 || c >= static_cast<int>(scene.curves.size()))
            throw Error("curve index out of range");

    // table k: Gamma_k cap Gamma_{k+1}, giving y_{k+1} (y_0 for k = d)
    std::vector<std::vector<TorusIntersection>> table(d + 1);
    for (int k = 0; k <= d; ++k)
        table[k] = scene.intersections(curves[k], curves[(k + 1) % (d + 1)]);
    auto pinned = [&](int corner, int degree) {
        return corner_degree.empty() || !corner_degree[corner] || *corner_degree[corner] == degree;
    };

    const mpq_class bound = wrap_bound + 1;
    std::vector<PolygonWitness> out;
    std::vector<Edge> edges(d + 1);
    std::vector<int> degrees(d + 1);

    auto finish = [&]() {
        PolygonWitness w;
        w.curves = curves;
        w.degrees = degrees;
        std::vector<std::size_t> corner_at;
        for (int k = 0; k <= d; ++k) {
            corner_at.push_back(w.boundary.size());
            append_edge(scene.curves[curves[k]], edges[k], w.boundary);
        }
        if (!admissible(w.boundary, corner_at))
            return;
        for (int k = 0; k <= d; ++k) {
            const TorusCurve& c = scene.curves[curves[k]];
            const mpq_class span = abs(edges[k].to - edges[k].from);
            w.corners.push_back(w.boundary[corner_at[k]]);
            w.edge_span.push_back(span);
            w.edge_positive.push_back(edges[k].to > edges[k].from);
            w.edge_stars.push_back(stars_between(c, edges[k].from, edges[k].to));
            w.wrap = std::max(w.wrap, static_cast<int>(floor_q(span).get_si()));
        }
        w.multiplicity = count_basepoints(w.boundary, scene.z);
        w.q = w.edge_positive[d] ? 0 : w.degrees[0] + w.degrees[d];
        for (int k = 1; k < d; ++k)
            if (!w.edge_positive[k])
                w.r += w.degrees[k];
        for (int n : w.edge_stars)
            w.s += n;
        out.push_back(std::move(w));
    };

    // walk from y_k along the lift (tx, ty) of Gamma_k, entered at parameter sigma
    std::function<void(int, long, long, const mpq_class&)> walk = [&](int k, long tx, long ty,
                                                                       const mpq_class& sigma) {
        const TorusCurve& c = scene.curves[curves[k]];
        for (const auto& x : table[k]) {
            const long n0 = ceil_q(sigma - bound - x.sa).get_si(), n1 = floor_q(sigma + bound - x.sa).get_si();
            for (long n = n0; n <= n1; ++n) {
                const mpq_class end = x.sa + n;
                const mpq_class span = abs(end - sigma);
                if (span == 0 || span >= bound)
                    continue;
                const long nx = tx + x.tx + n * c.shift_x, ny = ty + x.ty + n * c.shift_y;
                edges[k] = {curves[k], tx, ty, sigma, end};
                if (k < d) {
                    if (!pinned(k + 1, x.degree))
                        continue;
                    degrees[k + 1] = x.degree;
                    walk(k + 1, nx, ny, x.sb);
                    continue;
                }
                // back on the base lift of Gamma_0
                const TorusCurve& g0 = scene.curves[curves[0]];
                long m = 0;
                if (g0.shift_x != 0) {
                    if (nx % g0.shift_x != 0)
                        continue;
                    m = nx / g0.shift_x;
                } else {
                    if (g0.shift_y == 0 || ny % g0.shift_y != 0)
                        continue;
                    m = ny / g0.shift_y;
                }
                if (m * g0.shift_x != nx || m * g0.shift_y != ny)
                    continue;
                const int deg0 = 1 - x.degree; // hom(Gamma_0, Gamma_d) is dual to hom(Gamma_d, Gamma_0)
                if (!pinned(0, deg0))
                    continue;
                const mpq_class s0 = x.sb + m;
                const mpq_class close = abs(edges[0].to - s0);
                if (close == 0 || close >= bound)
                    continue;
                degrees[0] = deg0;
                const Edge first = edges[0];
                edges[0].from = s0;
                finish();
                edges[0] = first;
            }
        }
    };

    for (const auto& x : table[0]) {
        if (!pinned(1, x.degree))
            continue;
        degrees[1] = x.degree;
        // y_1 on the base lift of Gamma_0 with parameter in [0, 1): one per deck class
        edges[0] = {curves[0], 0, 0, 0, x.sa};
        walk(1, x.tx, x.ty, x.sb);
    }
    return out;
}

std::vector<PolygonWitness> triangle_witnesses(const PolygonScene& scene, int wrap_bound)
{
    return enumerate_polygons(scene, {scene.curve_index("g2"), scene.curve_index("g0"), scene.curve_index("g1")},
                              wrap_bound);
}

std::vector<PolygonWitness> quadrilateral_witnesses(const PolygonScene& scene, int wrap_bound)
{
    return enumerate_polygons(scene,
                              {scene.curve_index("g1p"), scene.curve_index("g2"), scene.curve_index("g0"),
                               scene.curve_index("g1")},
                              wrap_bound, {0, std::nullopt, std::nullopt, std::nullopt});
}

namespace
{

IntSeries sum_witnesses(const std::vector<PolygonWitness>& ws, int wrap_bound)
{
    IntSeries out(wrap_bound * (wrap_bound + 1) / 2);
    for (const auto& w : ws)
        if (w.multiplicity <= out.order())
            out[w.multiplicity] += w.sign();
    return out;
}

} // namespace

IntSeries mu2_series(const PolygonScene& scene, int wrap_bound)
{
    return sum_witnesses(triangle_witnesses(scene, wrap_bound), wrap_bound);
}

IntSeries mu3_series(const PolygonScene& scene, int wrap_bound)
{
    return sum_witnesses(quadrilateral_witnesses(scene, wrap_bound), wrap_bound);
}

std::string format_witness(const PolygonScene& scene, const PolygonWitness& w)
{
    std::ostringstream os;
    os << "curves";
    for (int c : w.curves)
        os << ' ' << scene.curves[c].name;
    os << " | corners";
    for (const auto& p : w.corners)
        os << ' ' << point_str(p);
    os << " | degrees";
    for (int g : w.degrees)
        os << ' ' << g;
    os << " | spans";
    for (std::size_t k = 0; k < w.edge_span.size(); ++k)
        os << ' ' << (w.edge_positive[k] ? "+" : "-") << q_str(w.edge_span[k]);
    os << " | stars";
    for (int n : w.edge_stars)
        os << ' ' << n;
    os << " | m " << w.multiplicity << " wrap " << w.wrap << " q " << w.q << " r " << w.r << " s " << w.s
       << " sign " << (w.sign() > 0 ? "+1" : "-1");
    return os.str();
}

std::string witnesses_svg(const PolygonScene& scene, const std::vector<PolygonWitness>& witnesses)
{
    mpq_class x0 = -1, x1 = 1, y0 = -1, y1 = 1;
    for (const auto& w : witnesses)
        for (const auto& p : w.boundary) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    const long lx = floor_q(x0).get_si() - 1, hx = ceil_q(x1).get_si() + 1;
    const long ly = floor_q(y0).get_si() - 1, hy = ceil_q(y1).get_si() + 1;
    const double scale = 40.0;
    // SVG y grows downward
    auto X = [&](const mpq_class& x) { return (x.get_d() - lx) * scale; };
    auto Y = [&](const mpq_class& y) { return (hy - y.get_d()) * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (hx - lx) * scale << "\" height=\""
       << (hy - ly) * scale << "\">\n";
    for (long i = lx; i <= hx; ++i)
        os << "<line x1=\"" << X(i) << "\" y1=\"0\" x2=\"" << X(i) << "\" y2=\"" << (hy - ly) * scale
           << "\" stroke=\"#ddd\"/>\n";
    for (long j = ly; j <= hy; ++j)
        os << "<line x1=\"0\" y1=\"" << Y(j) << "\" x2=\"" << (hx - lx) * scale << "\" y2=\"" << Y(j)
           << "\" stroke=\"#ddd\"/>\n";
    for (long i = lx; i < hx; ++i)
        for (long j = ly; j < hy; ++j)
            os << "<circle cx=\"" << X(scene.z.x + i) << "\" cy=\"" << Y(scene.z.y + j)
               << "\" r=\"2\" fill=\"black\"/>\n";
    for (const auto& w : witnesses) {
        os << "<polygon fill=\"" << (w.sign() > 0 ? "#4a90d9" : "#d94a4a") << "\" fill-opacity=\"0.25\" stroke=\""
           << (w.sign() > 0 ? "#1f5fa8" : "#a81f1f") << "\" points=\"";
        for (const auto& p : w.boundary)
            os << X(p.x) << ',' << Y(p.y) << ' ';
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string dump_scene(const PolygonScene& scene)
{
    std::ostringstream os;
    for (const auto& c : scene.curves) {
        os << "curve " << c.name << " shift " << c.shift_x << ' ' << c.shift_y << " phase " << q_str(c.phase)
           << " grading " << c.grading << " star " << q_str(c.star) << '\n';
        for (const auto& v : c.vertices)
            os << "vertex " << q_str(v.x) << ' ' << q_str(v.y) << '\n';
    }
    os << "z " << q_str(scene.z.x) << ' ' << q_str(scene.z.y) << '\n';
    return os.str();
}

PolygonScene load_scene(std::string_view text)
{
    auto rational = [](const std::string& s) {
        try {
            mpq_class q(s);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw Error("not a rational number: " + s);
        }
    };
    PolygonScene scene;
    bool have_z = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        auto fail = [&](const std::string& why) {
            return Error("scene line " + std::to_string(lineno) + ": " + why);
        };
        if (key == "curve") {
            TorusCurve c;
            std::string k1, k2, k3, k4, phase, star;
            if (!(ls >> c.name >> k1 >> c.shift_x >> c.shift_y >> k2 >> phase >> k3 >> c.grading >> k4 >> star) ||
                k1 != "shift" || k2 != "phase" || k3 != "grading" || k4 != "star")
                throw fail("expected: curve <name> shift <sx> <sy> phase <q> grading <n> star <q>");
            if (c.shift_x == 0 && c.shift_y == 0)
                throw fail("null homology class");
            c.phase = rational(phase);
            c.star = rational(star);
            if (c.star <= 0 || c.star >= 1)
                throw fail("star parameter must lie in (0, 1)");
            for (const auto& other : scene.curves)
                if (other.name == c.name)
                    throw fail("duplicate curve " + c.name);
            scene.curves.push_back(std::move(c));
        } else if (key == "vertex") {
            if (scene.curves.empty())
                throw fail("vertex before any curve");
            std::string x, y;
            if (!(ls >> x >> y))
                throw fail("expected: vertex <x> <y>");
            scene.curves.back().vertices.push_back({rational(x), rational(y)});
        } else if (key == "z") {
            std::string x, y;
            if (!(ls >> x >> y))
                throw fail("expected: z <x> <y>");
            scene.z = {rational(x), rational(y)};
            have_z = true;
        } else {
            throw fail("unknown keyword " + key);
        }
    }
    if (!have_z)
        throw Error("scene has no basepoint");
    for (const auto& c : scene.curves)
        if (c.vertices.empty())
            throw Error("curve " + c.name + " has no vertices");
    return scene;
}

} // namespace torusfk
