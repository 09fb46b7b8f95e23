#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const GroupElement& value_of(const Point& p) {
    auto* ip = std::get_if<IntervalPoint>(&p);
    if (!ip) throw std::domain_error("interval: foreign point");
    return ip->value;
}

}  // namespace

IntervalSpace::IntervalSpace(GroupElement lo, GroupElement hi)
    : Space(SpaceKind::Interval, lo.group()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.group() != hi_.group())
        throw std::invalid_argument("interval: endpoints from different groups");
    if (hi_ < lo_) throw std::invalid_argument("interval: requires a <= b");
}

std::string IntervalSpace::describe() const {
    return "interval:" + format_element(lo_) + ".." + format_element(hi_);
}

void IntervalSpace::require_point(const Point& p) const {
    const GroupElement& v = value_of(p);
    if (v.group() != group()) throw std::domain_error("interval: point from wrong group");
    if (v < lo_ || hi_ < v)
        throw std::domain_error("interval: value " + format_element(v) + " outside " + describe());
}

GroupElement IntervalSpace::distance(const Point& p, const Point& q) const {
    require_point(p);
    require_point(q);
    return (value_of(q) - value_of(p)).abs();
}

Segment IntervalSpace::geodesic(const Point& p, const Point& q) const {
    require_point(p);
    require_point(q);
    const GroupElement &a = value_of(p), &b = value_of(q);
    int dir = b < a ? -1 : 1;
    return make_segment(p, q, (b - a).abs(), AffineBody{a, dir});
}

Point IntervalSpace::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& body = std::get<AffineBody>(s.body());
    GroupElement v = body.dir > 0 ? body.origin + t : body.origin - t;
    return IntervalPoint{std::move(v)};
}

bool IntervalSpace::body_contains(const Segment& s, const Point& p) const {
    const auto& body = std::get<AffineBody>(s.body());
    const GroupElement& v = value_of(p);
    GroupElement far = body.dir > 0 ? body.origin + s.length() : body.origin - s.length();
    const GroupElement& a = body.dir > 0 ? body.origin : far;
    const GroupElement& b = body.dir > 0 ? far : body.origin;
    return a <= v && v <= b;
}

Intersection IntervalSpace::intersect_at(const Segment& s1, const Segment& s2,
                                         const Point& x) const {
    require_point(x);
    if (!((s1.start() == x || s1.end() == x) && (s2.start() == x || s2.end() == x)))
        throw std::invalid_argument("intersect_at: x must be an endpoint of both segments");
    if (s1.length().is_zero() || s2.length().is_zero()) return Intersection::segment(x);

    Segment u1 = s1.start() == x ? s1 : s1.reversed();
    Segment u2 = s2.start() == x ? s2 : s2.reversed();
    const GroupElement& xv = value_of(x);
    int d1 = value_of(u1.end()) < xv ? -1 : 1;
    int d2 = value_of(u2.end()) < xv ? -1 : 1;
    if (d1 != d2) return Intersection::segment(x);
    return Intersection::segment(u1.length() <= u2.length() ? u1.end() : u2.end());
}

Point IntervalSpace::sample_point(SampleStream& rng) const {
    return IntervalPoint{sample_in_range(lo_, hi_, rng, bounds_)};
}

std::vector<Point> IntervalSpace::landmarks() const {
    if (lo_ == hi_) return {IntervalPoint{lo_}};
    return {IntervalPoint{lo_}, IntervalPoint{hi_}};
}

std::string IntervalSpace::format_point(const Point& p) const {
    return format_element(value_of(p));
}

Point IntervalSpace::parse_point(std::string_view text) const {
    Point p = IntervalPoint{parse_element(group(), text)};
    require_point(p);
    return p;
}

}  // namespace ltree
