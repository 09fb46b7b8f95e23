#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const X2Point& x2_point(const Point& p) {
    auto* xp = std::get_if<X2Point>(&p);
    if (!xp) throw std::domain_error("x2: foreign point");
    return *xp;
}

GroupElement rat(long n) { return GroupElement::rational(n, 1); }

/// Directed piece of a segment, oriented from the shared endpoint: either an
/// arc at fixed radius or a radial spoke at fixed angle.
struct Piece {
    bool arc;
    GroupElement fixed;  // arc: radius; spoke: angle
    GroupElement from, to;
    GroupElement at;     // parameter of `from`
};

GroupElement piece_length(const Piece& p) {
    GroupElement span = (p.to - p.from).abs();
    return p.arc ? rat_mul(p.fixed, span) : span;
}

std::vector<Piece> pieces_from_start(const Segment& u) {
    const auto& b = std::get<X2Body>(u.body());
    std::vector<Piece> out;
    GroupElement radial = b.r_out - b.r_in;
    if (!u.is_reversed()) {
        out.push_back({true, b.r_in, b.a_in, b.a_out, GroupElement::rational(0, 1)});
        out.push_back({false, b.a_out, b.r_in, b.r_out, b.phi0});
    } else {
        out.push_back({false, b.a_out, b.r_out, b.r_in, GroupElement::rational(0, 1)});
        out.push_back({true, b.r_in, b.a_out, b.a_in, radial});
    }
    std::erase_if(out, [](const Piece& p) { return p.from == p.to; });
    return out;
}

}  // namespace

X2Space::X2Space() : Space(SpaceKind::X2, GroupId::Rational) {}

std::string X2Space::describe() const { return "x2"; }

void X2Space::require_point(const Point& p) const {
    const X2Point& xp = x2_point(p);
    if (xp.radius.group() != GroupId::Rational || xp.angle.group() != GroupId::Rational)
        throw std::domain_error("x2: point from wrong group");
    if (xp.radius.sign() <= 0 || rat(2) < xp.radius)
        throw std::domain_error("x2: radius must satisfy 0 < t <= 2");
    if (xp.angle.sign() < 0 || rat(1) < xp.angle)
        throw std::domain_error("x2: angle must satisfy 0 <= phi <= 1");
}

GroupElement X2Space::distance(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const X2Point &p = x2_point(pp), &q = x2_point(qq);
    const GroupElement& tmin = p.radius < q.radius ? p.radius : q.radius;
    return (q.radius - p.radius).abs() + rat_mul(tmin, (q.angle - p.angle).abs());
}

Segment X2Space::geodesic(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const X2Point &p = x2_point(pp), &q = x2_point(qq);
    bool flip = q.radius < p.radius;
    const X2Point &in = flip ? q : p, &out = flip ? p : q;
    GroupElement phi0 = rat_mul(in.radius, (out.angle - in.angle).abs());
    GroupElement len = phi0 + (out.radius - in.radius);
    return make_segment(pp, qq, std::move(len),
                        X2Body{in.radius, in.angle, out.radius, out.angle, phi0}, flip);
}

Point X2Space::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& b = std::get<X2Body>(s.body());
    if (t < b.phi0) {
        // angle moves linearly along the inner arc; phi0 > 0 in this branch
        GroupElement step = rat_div(rat_mul(t, b.a_out - b.a_in), b.phi0);
        return X2Point{b.r_in, b.a_in + step};
    }
    return X2Point{t - b.phi0 + b.r_in, b.a_out};
}

bool X2Space::body_contains(const Segment& s, const Point& pp) const {
    const X2Point& p = x2_point(pp);
    const auto& b = std::get<X2Body>(s.body());
    const GroupElement& alo = b.a_in < b.a_out ? b.a_in : b.a_out;
    const GroupElement& ahi = b.a_in < b.a_out ? b.a_out : b.a_in;
    if (p.radius == b.r_in && alo <= p.angle && p.angle <= ahi) return true;
    return p.angle == b.a_out && b.r_in <= p.radius && p.radius <= b.r_out;
}

std::vector<Space::ParamSpan> X2Space::common_param_spans(const Segment& u1,
                                                          const Segment& u2) const {
    auto p1 = pieces_from_start(u1);
    auto p2 = pieces_from_start(u2);
    std::vector<ParamSpan> spans;

    auto param_at_coord = [](const Piece& p, const GroupElement& coord) {
        GroupElement span = (coord - p.from).abs();
        return p.arc ? p.at + rat_mul(p.fixed, span) : p.at + span;
    };

    for (const auto& a : p1) {
        GroupElement a_lo = a.from < a.to ? a.from : a.to;
        GroupElement a_hi = a.from < a.to ? a.to : a.from;
        for (const auto& b : p2) {
            GroupElement b_lo = b.from < b.to ? b.from : b.to;
            GroupElement b_hi = b.from < b.to ? b.to : b.from;
            if (a.arc == b.arc) {
                if (!(a.fixed == b.fixed)) continue;  // distinct radii / angles
                GroupElement lo = a_lo < b_lo ? b_lo : a_lo;
                GroupElement hi = a_hi < b_hi ? a_hi : b_hi;
                if (lo <= hi) spans.push_back({param_at_coord(a, lo), param_at_coord(a, hi)});
            } else {
                // one arc, one spoke: at most the single point (radius, angle)
                const Piece& arc = a.arc ? a : b;
                const Piece& spoke = a.arc ? b : a;
                GroupElement s_lo = spoke.from < spoke.to ? spoke.from : spoke.to;
                GroupElement s_hi = spoke.from < spoke.to ? spoke.to : spoke.from;
                GroupElement arc_lo = arc.from < arc.to ? arc.from : arc.to;
                GroupElement arc_hi = arc.from < arc.to ? arc.to : arc.from;
                if (arc_lo <= spoke.fixed && spoke.fixed <= arc_hi && s_lo <= arc.fixed &&
                    arc.fixed <= s_hi) {
                    GroupElement t = a.arc ? param_at_coord(a, spoke.fixed)
                                           : param_at_coord(a, arc.fixed);
                    spans.push_back({t, t});
                }
            }
        }
    }
    return spans;
}

Point X2Space::sample_point(SampleStream& rng) const {
    GroupElement zero = rat(0);
    GroupElement radius = zero;
    for (int i = 0; radius.is_zero() && i < 100; ++i)
        radius = sample_in_range(zero, rat(2), rng, bounds_);
    if (radius.is_zero()) radius = rat(2);
    return X2Point{std::move(radius), sample_in_range(zero, rat(1), rng, bounds_)};
}

std::vector<Point> X2Space::landmarks() const {
    // ordered so that the first axiom-(2) violation found is the canonical
    // fork at (1,0)
    return {X2Point{rat(2), rat(0)}, X2Point{rat(1), rat(0)}, X2Point{rat(2), rat(1)},
            X2Point{rat(1), rat(1)}};
}

std::string X2Space::format_point(const Point& p) const {
    const X2Point& xp = x2_point(p);
    return format_element(xp.radius) + "," + format_element(xp.angle);
}

Point X2Space::parse_point(std::string_view text) const {
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw parse_error("x2 point: expected t,phi", text.size());
    Point p{X2Point{parse_element(GroupId::Rational, text.substr(0, comma)),
                    parse_element(GroupId::Rational, text.substr(comma + 1))}};
    require_point(p);
    return p;
}

}  // namespace ltree
