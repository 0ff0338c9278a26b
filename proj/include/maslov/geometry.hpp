#pragma once

#include "maslov/errors.hpp"
#include "maslov/rational.hpp"

#include <optional>
#include <vector>

namespace maslov {

/// Sign of twice the signed area of triangle (a,b,c). Exact.
int orient2d(const Point& a, const Point& b, const Point& c);

struct Box {
    Rational xmin, xmax, ymin, ymax;

    void expand(const Point& p);
    void expand(const Box& b);
    void pad(const Rational& margin);
    bool contains(const Point& p) const;
    bool intersects(const Box& b) const;
};

Box box_of(const std::vector<Point>& pts);

enum class PathKind { ClosedLoop, OpenArc, InfiniteLine, PeriodicLift };

/// A PL curve in the plane. Vertex data depends on the kind:
///   ClosedLoop   — vertices form a cycle (last connects back to first);
///   OpenArc      — vertices form a chain;
///   InfiniteLine — straight line base + t*direction, vertices unused;
///   PeriodicLift — vertices are a fundamental chain with
///                  vertices.back() == vertices.front() + period; the curve is
///                  the union of all integer period-translates of the chain.
struct PLPath {
    PathKind kind = PathKind::ClosedLoop;
    std::vector<Point> vertices;
    Point base{};        // InfiniteLine
    Point direction{};   // InfiniteLine
    Point period{};      // PeriodicLift

    bool operator==(const PLPath&) const = default;

    bool is_closed_or_periodic() const {
        return kind == PathKind::ClosedLoop || kind == PathKind::PeriodicLift;
    }

    /// Structural checks: distinct consecutive vertices, periodic tiling
    /// consistency, nonzero line direction. Throws Degenerate on violation.
    void validate_structure() const;

    /// Embeddedness: no two non-adjacent segments intersect, adjacent segments
    /// share only their common vertex, no 180-degree reversals. For periodic
    /// lifts also checks the chain against its neighboring translates.
    /// Throws NonTransverse on violation.
    void validate_embedded() const;
};

PLPath make_loop(std::vector<Point> vertices);
PLPath make_arc(std::vector<Point> vertices);
PLPath make_line(Point base, Point direction);
PLPath make_periodic(std::vector<Point> fundamental, Point period);

/// One concrete segment of a PLPath, with the curve parameter of its start.
/// The parameter is cumulative L1 length (InfiniteLine: L1-scaled ray
/// parameter; PeriodicLift: extended over all translates).
struct Segment {
    Point a;
    Point b;
    Rational param_a;

    Point dir() const { return b - a; }
    Rational param_of(const Point& p) const { return param_a + l1(p - a); }
};

/// Total L1 length of one period / one loop (finite kinds: whole curve).
Rational curve_length(const PLPath& path);

/// Segments of `path` that can meet `window`. Finite kinds return everything;
/// InfiniteLine is clipped to a span covering the window; PeriodicLift
/// enumerates the translates whose boxes touch the window.
std::vector<Segment> segments_in_window(const PLPath& path, const Box& window);

/// All segments of a finite path. Throws Degenerate for infinite kinds.
std::vector<Segment> segments(const PLPath& path);

bool point_on_segment(const Point& a, const Point& b, const Point& p);

/// True if p lies on the curve.
bool point_on_path(const PLPath& path, const Point& p);

/// Curve parameter of a point known to lie on the curve. For closed loops the
/// result is in [0, length). Throws OnCurve complaint (Degenerate) if not on it.
Rational param_of_point(const PLPath& path, const Point& p);

/// Point at curve parameter t. Closed loops take t modulo the loop length;
/// open arcs require t in [0, length]; periodic lifts extend over all
/// translates; infinite lines accept any t (L1-scaled).
Point point_at(const PLPath& path, const Rational& t);

/// Cumulative parameters of the curve vertices (empty for infinite lines);
/// feeds the cached point_at overload below.
std::vector<Rational> vertex_params(const PLPath& path);

/// point_at with the vertex params precomputed; binary search instead of a
/// segment walk, for callers evaluating many parameters on one curve.
Point point_at(const PLPath& path, const std::vector<Rational>& params,
               const Rational& t);

/// Points visited when moving monotonically from parameter a to parameter b:
/// the endpoints plus every curve vertex strictly between, in travel order.
std::vector<Point> points_along(const PLPath& path, const Rational& a, const Rational& b);

/// The same curve translated by v.
PLPath translated(const PLPath& path, const Point& v);

/// Direction of the segment of the curve through p.
Point tangent_at(const PLPath& path, const Point& p);

enum class SegCross { None, Proper, Touch };

/// Classifies the intersection of closed segments [p1,p2] and [q1,q2]:
/// Proper means a single interior-interior transversal crossing.
SegCross segment_cross(const Point& p1, const Point& p2,
                       const Point& q1, const Point& q2);

/// Intersection point of the supporting lines (must not be parallel).
Point line_intersection(const Point& p1, const Point& p2,
                        const Point& q1, const Point& q2);

/// Exact squared Euclidean distance from p to segment [a,b].
Rational segment_dist2(const Point& a, const Point& b, const Point& p);

struct IntersectionPoint {
    Point location;
    int sign = 0;                 // orientation of (alpha tangent, beta tangent)
    Rational alpha_position;
    Rational beta_position;

    bool operator==(const IntersectionPoint&) const = default;
};

/// All transversal crossings of alpha and beta, sorted by alpha_position.
/// For PeriodicLift alpha the crossings are the ones with alpha_position in
/// the fundamental window [0, curve_length(alpha)); beta positions refer to
/// the lift of beta passing through the reported location.
/// Throws NonTransverse on any collinear overlap, tangency or vertex contact.
std::vector<IntersectionPoint> intersect_curves(const PLPath& alpha, const PLPath& beta);

/// Exact winding number of a closed polyline around z (half-open crossing
/// rule on a +x ray). Throws OnCurve if z lies on the polyline.
long long winding_number(const std::vector<Point>& loop, const Point& z);
long long winding_number(const PLPath& loop, const Point& z);

/// Positive rational lower bound on the distance from z to every segment in
/// `features` that does not contain z, and to every point in `other_points`.
/// Returns 1 when there is nothing to measure against. Throws Degenerate when
/// some non-incident feature passes through z.
Rational min_feature_distance(const Point& z,
                              const std::vector<Segment>& features,
                              const std::vector<Point>& other_points = {});

/// Convenience: features from whole curves, window chosen around z.
Rational min_feature_distance(const Point& z,
                              const std::vector<const PLPath*>& curves,
                              const std::vector<Point>& other_points = {});

}  // namespace maslov
