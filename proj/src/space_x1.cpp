#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const X1Point& x1_point(const Point& p) {
    auto* xp = std::get_if<X1Point>(&p);
    if (!xp) throw std::domain_error("x1: foreign point");
    return *xp;
}

/// Segment images have two shapes: a closed interval on one branch, or, for
/// cross-branch segments, an upper set on each of the two branches.
struct Shape {
    bool cross;
    int bi, bj;
    GroupElement vi, vj;  // same-branch: [vi, vj] on bi; cross: lower bounds
};

Shape shape_of(const Segment& s) {
    const auto& body = std::get<X1Body>(s.body());
    return Shape{body.bi != body.bj, body.bi, body.bj, body.x, body.y};
}

}  // namespace

X1Space::X1Space(GroupElement lambda0)
    : Space(SpaceKind::X1, lambda0.group()), lambda0_(std::move(lambda0)) {
    if (lambda0_.sign() <= 0) throw std::invalid_argument("x1: lambda0 must be positive");
    if (max_half(lambda0_).has_value())
        throw std::invalid_argument(
            "x1 requires a lambda0 whose set { t : 0 <= 2t <= lambda0 } has no "
            "maximum; max_half(" + format_element(lambda0_) + ") exists in " +
            std::string(group_name(lambda0_.group())));
    if (group() == GroupId::Triadic) bounds_.numerator_bound = bounds_.triadic_numerator_bound;
}

std::string X1Space::describe() const { return "x1:" + format_element(lambda0_); }

void X1Space::require_point(const Point& p) const {
    const X1Point& xp = x1_point(p);
    if (xp.x.group() != group()) throw std::domain_error("x1: point from wrong group");
    if (xp.branch < 1 || xp.branch > 3) throw std::domain_error("x1: branch must be 1..3");
    if (xp.x.sign() < 0 || lambda0_ < xp.x.twice())
        throw std::domain_error("x1: coordinate " + format_element(xp.x) + " outside I");
}

GroupElement X1Space::distance(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const X1Point &p = x1_point(pp), &q = x1_point(qq);
    if (p.branch == q.branch) return (q.x - p.x).abs();
    return lambda0_ - p.x - q.x;
}

Segment X1Space::geodesic(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const X1Point &p = x1_point(pp), &q = x1_point(qq);
    if (p.branch == q.branch) {
        bool flip = q.x < p.x;
        const X1Point &lo = flip ? q : p, &hi = flip ? p : q;
        return make_segment(pp, qq, hi.x - lo.x, X1Body{lo.x, hi.x, lo.branch, lo.branch},
                            flip);
    }
    return make_segment(pp, qq, lambda0_ - p.x - q.x, X1Body{p.x, q.x, p.branch, q.branch});
}

Point X1Space::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& body = std::get<X1Body>(s.body());
    GroupElement v = body.x + t;
    if (body.bi == body.bj) return X1Point{std::move(v), body.bi};
    auto doubled = v.twice();
    if (doubled < lambda0_) return X1Point{std::move(v), body.bi};
    if (lambda0_ < doubled) return X1Point{lambda0_ - v, body.bj};
    // 2(x + t) = lambda0 would put lambda0 in 2*Lambda, excluded by construction
    throw std::logic_error("x1 eval: parameter hit the missing branch point");
}

bool X1Space::body_contains(const Segment& s, const Point& pp) const {
    const X1Point& p = x1_point(pp);
    Shape sh = shape_of(s);
    if (!sh.cross) return p.branch == sh.bi && sh.vi <= p.x && p.x <= sh.vj;
    if (p.branch == sh.bi) return sh.vi <= p.x;
    if (p.branch == sh.bj) return sh.vj <= p.x;
    return false;
}

Intersection X1Space::intersect_at(const Segment& s1, const Segment& s2, const Point& x) const {
    require_point(x);
    if (!((s1.start() == x || s1.end() == x) && (s2.start() == x || s2.end() == x)))
        throw std::invalid_argument("intersect_at: x must be an endpoint of both segments");
    if (s1.length().is_zero() || s2.length().is_zero()) return Intersection::segment(x);

    const X1Point& anchor = x1_point(x);
    Shape a = shape_of(s1), b = shape_of(s2);

    if (!a.cross && !b.cross) {
        // both intervals on the anchor's branch
        GroupElement lo = a.vi < b.vi ? b.vi : a.vi;
        GroupElement hi = a.vj < b.vj ? a.vj : b.vj;
        GroupElement w = anchor.x == lo ? hi : lo;
        return Intersection::segment(X1Point{std::move(w), anchor.branch});
    }
    if (a.cross != b.cross) {
        const Shape& seg = a.cross ? b : a;     // the interval
        const Shape& crs = a.cross ? a : b;     // the cross
        GroupElement bound = crs.bi == seg.bi ? crs.vi : crs.vj;
        GroupElement lo = seg.vi < bound ? bound : seg.vi;
        GroupElement hi = seg.vj;
        GroupElement w = anchor.x == lo ? hi : lo;
        return Intersection::segment(X1Point{std::move(w), seg.bi});
    }
    // both cross segments
    bool share_i1 = a.bi == b.bi || a.bi == b.bj;
    bool share_j1 = a.bj == b.bi || a.bj == b.bj;
    if (share_i1 && share_j1) {
        // same branch pair: the intersection is again a cross segment
        GroupElement bound_i = a.bi == b.bi ? (a.vi < b.vi ? b.vi : a.vi)
                                            : (a.vi < b.vj ? b.vj : a.vi);
        GroupElement bound_j = a.bj == b.bj ? (a.vj < b.vj ? b.vj : a.vj)
                                            : (a.vj < b.vi ? b.vi : a.vj);
        if (anchor.branch == a.bi)
            return Intersection::segment(X1Point{std::move(bound_j), a.bj});
        return Intersection::segment(X1Point{std::move(bound_i), a.bi});
    }
    // exactly one shared branch: an upper set of I with no last point
    int shared = share_i1 ? a.bi : a.bj;
    GroupElement lower_a = share_i1 ? a.vi : a.vj;
    GroupElement lower_b = b.bi == shared ? b.vi : b.vj;
    GroupElement lower = lower_a < lower_b ? lower_b : lower_a;
    return Intersection::no_maximum(NoMaxSet{shared, std::move(lower)}, x);
}

Point X1Space::sample_point(SampleStream& rng) const {
    int branch = 1 + static_cast<int>(rng.next_below(3));
    for (;;) {
        GroupElement v = sample_in_range(GroupElement::zero(group()), lambda0_, rng, bounds_);
        if (v.twice() <= lambda0_) return X1Point{std::move(v), branch};
    }
}

std::vector<Point> X1Space::landmarks() const {
    GroupElement z = GroupElement::zero(group());
    return {X1Point{z, 1}, X1Point{z, 2}, X1Point{z, 3}};
}

std::string X1Space::format_point(const Point& p) const {
    const X1Point& xp = x1_point(p);
    return format_element(xp.x) + "@" + std::to_string(xp.branch);
}

Point X1Space::parse_point(std::string_view text) const {
    auto at = text.rfind('@');
    if (at == std::string_view::npos || at + 2 != text.size())
        throw parse_error("x1 point: expected x@i with i in 1..3", text.size());
    int branch = text[at + 1] - '0';
    Point p{X1Point{parse_element(group(), text.substr(0, at)), branch}};
    require_point(p);
    return p;
}

}  // namespace ltree
