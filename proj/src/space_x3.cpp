#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const X3Point& x3_point(const Point& p) {
    auto* xp = std::get_if<X3Point>(&p);
    if (!xp) throw std::domain_error("x3: foreign point");
    return *xp;
}

}  // namespace

X3Space::X3Space(GroupElement a)
    : Space(SpaceKind::X3, a.group()), a_(std::move(a)), three_a_(a_.scaled(3)) {
    if (a_.sign() <= 0) throw std::invalid_argument("x3: a must be positive");
    if (a_.try_halve().has_value())
        throw std::invalid_argument("x3 requires a not divisible by 2; " + format_element(a_) +
                                    " has an exact half in " +
                                    std::string(group_name(a_.group())));
}

std::string X3Space::describe() const { return "x3:" + format_element(a_); }

GroupElement X3Space::wrap(GroupElement v) const {
    if (v.sign() < 0) v = v + three_a_;
    if (!(v < three_a_)) v = v - three_a_;
    return v;
}

void X3Space::require_point(const Point& p) const {
    const X3Point& xp = x3_point(p);
    if (xp.pos.group() != group()) throw std::domain_error("x3: point from wrong group");
    if (xp.pos.sign() < 0 || !(xp.pos < three_a_))
        throw std::domain_error("x3: representative " + format_element(xp.pos) +
                                " outside [0, 3a)");
}

GroupElement X3Space::min_delta(const GroupElement& p, const GroupElement& q) const {
    GroupElement delta = q - p;  // in (-3a, 3a)
    GroupElement best = delta;
    for (const GroupElement& cand : {delta + three_a_, delta - three_a_})
        if (cand.abs() < best.abs()) best = cand;
    return best;
}

GroupElement X3Space::distance(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    return min_delta(x3_point(pp).pos, x3_point(qq).pos).abs();
}

Segment X3Space::geodesic(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const X3Point &p = x3_point(pp), &q = x3_point(qq);
    GroupElement delta = min_delta(p.pos, q.pos);
    int dir = delta.sign() < 0 ? -1 : 1;
    return make_segment(pp, qq, delta.abs(), AffineBody{p.pos, dir});
}

Point X3Space::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& body = std::get<AffineBody>(s.body());
    return X3Point{wrap(body.dir > 0 ? body.origin + t : body.origin - t)};
}

bool X3Space::body_contains(const Segment& s, const Point& pp) const {
    const auto& body = std::get<AffineBody>(s.body());
    const X3Point& p = x3_point(pp);
    // arc positions are origin + dir*t for t in [0, D]
    GroupElement along = body.dir > 0 ? wrap(p.pos - body.origin) : wrap(body.origin - p.pos);
    return along <= s.length();
}

Intersection X3Space::intersect_at(const Segment& s1, const Segment& s2, const Point& x) const {
    require_point(x);
    if (!((s1.start() == x || s1.end() == x) && (s2.start() == x || s2.end() == x)))
        throw std::invalid_argument("intersect_at: x must be an endpoint of both segments");
    if (s1.length().is_zero() || s2.length().is_zero()) return Intersection::segment(x);

    Segment u1 = s1.start() == x ? s1 : s1.reversed();
    Segment u2 = s2.start() == x ? s2 : s2.reversed();
    auto dir_from_start = [](const Segment& u) {
        int d = std::get<AffineBody>(u.body()).dir;
        return u.is_reversed() ? -d : d;
    };
    // arcs are shorter than half the circle, so opposite directions meet only
    // at x and equal directions nest
    if (dir_from_start(u1) != dir_from_start(u2)) return Intersection::segment(x);
    return Intersection::segment(u1.length() <= u2.length() ? u1.end() : u2.end());
}

Point X3Space::sample_point(SampleStream& rng) const {
    for (;;) {
        GroupElement v = sample_in_range(GroupElement::zero(group()), three_a_, rng, bounds_);
        if (v < three_a_) return X3Point{std::move(v)};
    }
}

std::vector<Point> X3Space::landmarks() const {
    // ordered so the first axiom-(2) violation is the canonical [0,a] ∪ [a,2a]
    return {X3Point{GroupElement::zero(group())}, X3Point{a_}, X3Point{a_.twice()}};
}

std::string X3Space::format_point(const Point& p) const {
    return format_element(x3_point(p).pos);
}

Point X3Space::parse_point(std::string_view text) const {
    GroupElement v = parse_element(group(), text);
    if (v == three_a_) v = GroupElement::zero(group());  // 3a ~ 0
    Point p{X3Point{std::move(v)}};
    require_point(p);
    return p;
}

}  // namespace ltree
