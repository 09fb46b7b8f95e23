#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltree/group.hpp"
#include "ltree/point.hpp"
#include "ltree/sampling.hpp"

namespace ltree {

enum class SpaceKind { Interval, Tree, X1, X2, X3, L1Grid };

std::string_view space_kind_name(SpaceKind k);

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// ---- segment descriptors -------------------------------------------------

/// Straight run: value(t) = origin + dir * t. Used by intervals, and by the
/// circle space with wrap-around at 3a.
struct AffineBody {
    GroupElement origin;
    int dir = 1;
    bool operator==(const AffineBody&) const = default;
};

struct TreeLeg {
    int edge = 0;
    GroupElement from;
    GroupElement to;
    bool operator==(const TreeLeg&) const = default;
};
struct TreeBody {
    std::vector<TreeLeg> legs;
    bool operator==(const TreeBody&) const = default;
};

struct GridLeg {
    bool horizontal = true;  // horizontal: w fixed, u moves; vertical: u fixed
    GroupElement fixed;
    GroupElement from;
    GroupElement to;
    bool operator==(const GridLeg&) const = default;
};
struct GridBody {
    std::vector<GridLeg> legs;
    bool operator==(const GridBody&) const = default;
};

/// Branch-space path. Same branch (bi == bj): runs from (x, bi) up to
/// (y, bi), x <= y. Cross branch: the two-piece map of the segment lemma.
struct X1Body {
    GroupElement x;
    GroupElement y;
    int bi = 1;
    int bj = 1;
    bool operator==(const X1Body&) const = default;
};

/// Polar path from the inner endpoint: an arc at the inner radius followed
/// by a radial spoke. phi0 = r_in * |a_out - a_in| is the arc length.
struct X2Body {
    GroupElement r_in, a_in;
    GroupElement r_out, a_out;
    GroupElement phi0;
    bool operator==(const X2Body&) const = default;
};

using SegmentBody = std::variant<AffineBody, TreeBody, GridBody, X1Body, X2Body>;

// ---- segment ---------------------------------------------------------------

/// A parametrized segment: an isometric image of [0, D] with eval, membership
/// and reversal. Immutable value; shares ownership of its space.
class Segment {
public:
    const Space& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    const Point& start() const { return start_; }
    const Point& end() const { return end_; }
    const GroupElement& length() const { return length_; }

    /// Point at parameter t, 0 <= t <= length. Throws std::out_of_range.
    Point eval(const GroupElement& t) const;

    /// Same image, opposite orientation: reversed().eval(t) == eval(D - t).
    Segment reversed() const;

    /// Exact membership by piecewise inversion.
    bool contains(const Point& p) const;

    bool operator==(const Segment& o) const;

    const SegmentBody& body() const { return body_; }
    bool is_reversed() const { return reversed_; }

private:
    friend class Space;
    Segment(SpacePtr sp, Point s, Point e, GroupElement len, SegmentBody b, bool rev)
        : space_(std::move(sp)), start_(std::move(s)), end_(std::move(e)),
          length_(std::move(len)), body_(std::move(b)), reversed_(rev) {}

    SpacePtr space_;
    Point start_, end_;
    GroupElement length_;
    SegmentBody body_;
    bool reversed_;
};

/// Union of two segments joined end-to-start, when that union is a segment;
/// nullopt otherwise. The union is a segment exactly when
/// d(start(s1), end(s2)) = |s1| + |s2|. Throws if end(s1) != start(s2).
std::optional<Segment> concat(const Segment& s1, const Segment& s2);

// ---- intersection descriptors ----------------------------------------------

/// The set { (v, branch) : v >= lower, v in I } — an increasing union with a
/// minimum but no last point.
struct NoMaxSet {
    int branch = 1;
    GroupElement lower;
};

/// Closed-form description of s1 ∩ s2 for segments sharing endpoint x.
///   SegmentSet:      the intersection is the segment [x, reach].
///   NoMaxSet:        increasing union without a maximum (branch space only).
///   DisjointBeyond:  a common point exists outside the initial overlap, so
///                    the intersection is disconnected.
struct Intersection {
    enum class Kind { SegmentSet, NoMax, DisjointBeyond };
    Kind kind = Kind::SegmentSet;
    Point reach;
    std::optional<NoMaxSet> no_max;
    std::optional<Point> stray;

    static Intersection segment(Point w) {
        Intersection r;
        r.kind = Kind::SegmentSet;
        r.reach = std::move(w);
        return r;
    }
    static Intersection no_maximum(NoMaxSet s, Point anchor) {
        Intersection r;
        r.kind = Kind::NoMax;
        r.reach = std::move(anchor);
        r.no_max = std::move(s);
        return r;
    }
    static Intersection disjoint(Point anchor_reach, Point stray_point) {
        Intersection r;
        r.kind = Kind::DisjointBeyond;
        r.reach = std::move(anchor_reach);
        r.stray = std::move(stray_point);
        return r;
    }
};

// ---- space -------------------------------------------------------------------

class Space : public std::enable_shared_from_this<Space> {
public:
    virtual ~Space() = default;

    SpaceKind kind() const { return kind_; }
    GroupId group() const { return group_; }

    /// The CLI spec string this space was built from, e.g. "x1:1".
    virtual std::string describe() const = 0;

    /// Throws std::domain_error unless p is a point of this space.
    virtual void require_point(const Point& p) const = 0;

    virtual GroupElement distance(const Point& p, const Point& q) const = 0;

    /// The canonical segment from p to q; unique in every built-in space
    /// except the l1 grid, where it is the axis-ordered staircase.
    virtual Segment geodesic(const Point& p, const Point& q) const = 0;

    virtual Point eval_body(const Segment& s, const GroupElement& t) const = 0;
    virtual bool body_contains(const Segment& s, const Point& p) const = 0;

    /// s1 ∩ s2 where x is an endpoint of both. Throws std::invalid_argument
    /// when the precondition fails.
    virtual Intersection intersect_at(const Segment& s1, const Segment& s2,
                                      const Point& x) const;

    virtual Point sample_point(SampleStream& rng) const = 0;

    /// n deterministic points for (space, seed, n).
    std::vector<Point> sample(std::uint64_t seed, int n) const;

    /// Canonical probe points, ordered; checks enumerate tuples of these
    /// before random sampling so failure witnesses are reproducible.
    virtual std::vector<Point> landmarks() const = 0;

    virtual std::string format_point(const Point& p) const;
    virtual Point parse_point(std::string_view text) const;

    /// Concatenated segment map for an isometric union (lengths verified by
    /// the caller). Default: the unique geodesic.
    virtual Segment join(const Segment& s1, const Segment& s2) const;

protected:
    Space(SpaceKind k, GroupId g) : kind_(k), group_(g) {}

    Segment make_segment(Point s, Point e, GroupElement len, SegmentBody b,
                         bool rev = false) const {
        return Segment(shared_from_this(), std::move(s), std::move(e), std::move(len),
                       std::move(b), rev);
    }

    /// Shared machinery for intersect_at: parameter spans of points common to
    /// u1 and u2, both oriented to start at the shared endpoint, expressed in
    /// u1's parameter. Spaces using the default intersect_at implement this.
    struct ParamSpan {
        GroupElement lo, hi;
    };
    virtual std::vector<ParamSpan> common_param_spans(const Segment& u1,
                                                      const Segment& u2) const;

    SampleBounds bounds_;

private:
    SpaceKind kind_;
    GroupId group_;
};

// ---- factories ------------------------------------------------------------------

struct TreeEdgeSpec {
    std::string from, to;
    GroupElement length;
};

SpacePtr make_interval(GroupElement lo, GroupElement hi);
SpacePtr make_tree(GroupId g, std::vector<TreeEdgeSpec> edges, std::string label = {});
SpacePtr make_x1(GroupElement lambda0);
SpacePtr make_x2();
SpacePtr make_x3(GroupElement a);
SpacePtr make_l1grid(GroupElement side);

/// Builds a space from the CLI syntax: interval:a..b, tree:@file, x1:LAMBDA,
/// x2, x3:A, l1grid:SIDE. Throws std::invalid_argument / parse_error with the
/// violated precondition named.
SpacePtr make_space(GroupId g, std::string_view spec);

}  // namespace ltree
