#pragma once

#include "ltree/space.hpp"

namespace ltree {

/// Closed interval [lo, hi] of the group, metric |t - t'|.
class IntervalSpace : public Space {
public:
    IntervalSpace(GroupElement lo, GroupElement hi);

    const GroupElement& lo() const { return lo_; }
    const GroupElement& hi() const { return hi_; }

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Intersection intersect_at(const Segment& s1, const Segment& s2,
                              const Point& x) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;

private:
    GroupElement lo_, hi_;
};

/// Finite simplicial tree with positive edge lengths and the path metric.
class TreeSpace : public Space {
public:
    TreeSpace(GroupId g, std::vector<TreeEdgeSpec> edges, std::string label);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Point vertex_point(int v) const;
    std::optional<int> vertex_by_name(std::string_view name) const;
    const GroupElement& vertex_distance(int u, int v) const { return vdist_[u][v]; }

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;

protected:
    std::vector<ParamSpan> common_param_spans(const Segment& u1,
                                              const Segment& u2) const override;

private:
    struct Edge {
        int u, v;
        GroupElement len;
    };

    TreePoint canonical(TreePoint p) const;
    // (vertex path, entry/exit data) between canonical points
    std::vector<TreeLeg> legs_between(const TreePoint& p, const TreePoint& q) const;

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;       // vertex -> edge ids
    std::vector<std::vector<GroupElement>> vdist_;  // all-pairs vertex distances
    std::vector<std::vector<int>> parent_;          // parent_[root][v] on path to root
    std::vector<std::vector<int>> parent_edge_;     // edge used to reach parent
    std::string label_;
};

/// Three copies of I = { t : 0 <= 2t <= lambda0 } glued along a missing
/// branch point; satisfies axioms (1) and (2) but not (3).
class X1Space : public Space {
public:
    explicit X1Space(GroupElement lambda0);

    const GroupElement& lambda0() const { return lambda0_; }

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Intersection intersect_at(const Segment& s1, const Segment& s2,
                              const Point& x) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;

private:
    GroupElement lambda0_;
};

/// Polar Manhattan plane (0,2] x [0,1] over the rationals; uniquely geodesic,
/// satisfies axioms (1) and (3) but not (2).
class X2Space : public Space {
public:
    X2Space();

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;

protected:
    std::vector<ParamSpan> common_param_spans(const Segment& u1,
                                              const Segment& u2) const override;
};

/// Circle [0, 3a]/~ with the shortest-arc metric, a not divisible by 2;
/// satisfies (1) and (3) but not (2).
class X3Space : public Space {
public:
    explicit X3Space(GroupElement a);

    const GroupElement& a() const { return a_; }
    const GroupElement& circumference() const { return three_a_; }

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Intersection intersect_at(const Segment& s1, const Segment& s2,
                              const Point& x) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;

private:
    GroupElement wrap(GroupElement v) const;  // into [0, 3a), one wrap each way
    // signed displacement of minimal magnitude from p to q
    GroupElement min_delta(const GroupElement& p, const GroupElement& q) const;

    GroupElement a_, three_a_;
};

/// l1 square fixture. Multiple geodesics exist; geodesic() returns the
/// axis-ordered staircase. Exists to exercise the uniqueness checker's
/// failure path.
class GridSpace : public Space {
public:
    explicit GridSpace(GroupElement side);

    const GroupElement& side() const { return side_; }

    std::string describe() const override;
    void require_point(const Point& p) const override;
    GroupElement distance(const Point& p, const Point& q) const override;
    Segment geodesic(const Point& p, const Point& q) const override;
    Point eval_body(const Segment& s, const GroupElement& t) const override;
    bool body_contains(const Segment& s, const Point& p) const override;
    Point sample_point(SampleStream& rng) const override;
    std::vector<Point> landmarks() const override;
    std::string format_point(const Point& p) const override;
    Point parse_point(std::string_view text) const override;
    Segment join(const Segment& s1, const Segment& s2) const override;

protected:
    std::vector<ParamSpan> common_param_spans(const Segment& u1,
                                              const Segment& u2) const override;

private:
    GroupElement side_;
};

}  // namespace ltree
