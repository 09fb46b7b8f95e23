#include <algorithm>

#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const GridPoint& grid_point(const Point& p) {
    auto* gp = std::get_if<GridPoint>(&p);
    if (!gp) throw std::domain_error("l1grid: foreign point");
    return *gp;
}

GroupElement leg_length(const GridLeg& leg) { return (leg.to - leg.from).abs(); }

GridPoint leg_point(const GridLeg& leg, const GroupElement& coord) {
    if (leg.horizontal) return GridPoint{coord, leg.fixed};
    return GridPoint{leg.fixed, coord};
}

}  // namespace

GridSpace::GridSpace(GroupElement side)
    : Space(SpaceKind::L1Grid, side.group()), side_(std::move(side)) {
    if (side_.sign() <= 0) throw std::invalid_argument("l1grid: side must be positive");
}

std::string GridSpace::describe() const { return "l1grid:" + format_element(side_); }

void GridSpace::require_point(const Point& p) const {
    const GridPoint& gp = grid_point(p);
    if (gp.u.group() != group() || gp.w.group() != group())
        throw std::domain_error("l1grid: point from wrong group");
    if (gp.u.sign() < 0 || side_ < gp.u || gp.w.sign() < 0 || side_ < gp.w)
        throw std::domain_error("l1grid: point outside the square");
}

GroupElement GridSpace::distance(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const GridPoint &p = grid_point(pp), &q = grid_point(qq);
    return (q.u - p.u).abs() + (q.w - p.w).abs();
}

Segment GridSpace::geodesic(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const GridPoint &p = grid_point(pp), &q = grid_point(qq);
    // canonical choice among the staircases: the u-axis run comes first
    std::vector<GridLeg> legs;
    if (!(p.u == q.u)) legs.push_back({true, p.w, p.u, q.u});
    if (!(p.w == q.w)) legs.push_back({false, q.u, p.w, q.w});
    GroupElement len = (q.u - p.u).abs() + (q.w - p.w).abs();
    return make_segment(pp, qq, std::move(len), GridBody{std::move(legs)});
}

Point GridSpace::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& body = std::get<GridBody>(s.body());
    if (body.legs.empty()) return s.is_reversed() ? s.end() : s.start();
    GroupElement remaining = t;
    for (const auto& leg : body.legs) {
        GroupElement len = leg_length(leg);
        if (remaining <= len) {
            GroupElement coord =
                leg.from <= leg.to ? leg.from + remaining : leg.from - remaining;
            return leg_point(leg, std::move(coord));
        }
        remaining = remaining - len;
    }
    throw std::logic_error("l1grid eval: parameter beyond final leg");
}

bool GridSpace::body_contains(const Segment& s, const Point& pp) const {
    const GridPoint& p = grid_point(pp);
    const auto& body = std::get<GridBody>(s.body());
    if (body.legs.empty()) return pp == s.start();
    for (const auto& leg : body.legs) {
        const GroupElement& moving = leg.horizontal ? p.u : p.w;
        const GroupElement& fixed = leg.horizontal ? p.w : p.u;
        const GroupElement& a = leg.from <= leg.to ? leg.from : leg.to;
        const GroupElement& b = leg.from <= leg.to ? leg.to : leg.from;
        if (fixed == leg.fixed && a <= moving && moving <= b) return true;
    }
    return false;
}

std::vector<Space::ParamSpan> GridSpace::common_param_spans(const Segment& u1,
                                                            const Segment& u2) const {
    struct DirectedLeg {
        GridLeg leg;
        GroupElement at;
    };
    auto directed = [&](const Segment& u) {
        std::vector<DirectedLeg> out;
        auto legs = std::get<GridBody>(u.body()).legs;
        if (u.is_reversed()) {
            std::reverse(legs.begin(), legs.end());
            for (auto& l : legs) std::swap(l.from, l.to);
        }
        GroupElement at = GroupElement::zero(group());
        for (auto& l : legs) {
            GroupElement len = leg_length(l);
            out.push_back({std::move(l), at});
            at = at + len;
        }
        return out;
    };
    auto param_at = [](const DirectedLeg& dl, const GroupElement& coord) {
        return dl.at + (coord - dl.leg.from).abs();
    };

    std::vector<ParamSpan> spans;
    for (const auto& l1 : directed(u1)) {
        GroupElement a1 = l1.leg.from < l1.leg.to ? l1.leg.from : l1.leg.to;
        GroupElement b1 = l1.leg.from < l1.leg.to ? l1.leg.to : l1.leg.from;
        for (const auto& l2 : directed(u2)) {
            GroupElement a2 = l2.leg.from < l2.leg.to ? l2.leg.from : l2.leg.to;
            GroupElement b2 = l2.leg.from < l2.leg.to ? l2.leg.to : l2.leg.from;
            if (l1.leg.horizontal == l2.leg.horizontal) {
                if (!(l1.leg.fixed == l2.leg.fixed)) continue;
                GroupElement lo = a1 < a2 ? a2 : a1;
                GroupElement hi = b1 < b2 ? b1 : b2;
                if (lo <= hi) spans.push_back({param_at(l1, lo), param_at(l1, hi)});
            } else {
                // perpendicular legs cross in at most one point
                const GroupElement& cross1 = l2.leg.fixed;  // moving coord on l1
                const GroupElement& cross2 = l1.leg.fixed;  // moving coord on l2
                if (a1 <= cross1 && cross1 <= b1 && a2 <= cross2 && cross2 <= b2) {
                    GroupElement t = param_at(l1, cross1);
                    spans.push_back({t, t});
                }
            }
        }
    }
    return spans;
}

Segment GridSpace::join(const Segment& s1, const Segment& s2) const {
    // the honest union map: s1's legs from its start, then s2's
    auto oriented = [&](const Segment& s) {
        auto legs = std::get<GridBody>(s.body()).legs;
        if (s.is_reversed()) {
            std::reverse(legs.begin(), legs.end());
            for (auto& l : legs) std::swap(l.from, l.to);
        }
        return legs;
    };
    std::vector<GridLeg> legs = oriented(s1);
    for (auto& l : oriented(s2)) {
        if (!legs.empty() && legs.back().horizontal == l.horizontal &&
            legs.back().fixed == l.fixed && legs.back().to == l.from) {
            legs.back().to = l.to;  // collinear continuation
        } else {
            legs.push_back(std::move(l));
        }
    }
    return make_segment(s1.start(), s2.end(), s1.length() + s2.length(),
                        GridBody{std::move(legs)});
}

Point GridSpace::sample_point(SampleStream& rng) const {
    GroupElement zero = GroupElement::zero(group());
    GroupElement u = sample_in_range(zero, side_, rng, bounds_);
    GroupElement w = sample_in_range(zero, side_, rng, bounds_);
    return GridPoint{std::move(u), std::move(w)};
}

std::vector<Point> GridSpace::landmarks() const {
    GroupElement zero = GroupElement::zero(group());
    return {GridPoint{zero, zero}, GridPoint{side_, side_}, GridPoint{zero, side_},
            GridPoint{side_, zero}};
}

std::string GridSpace::format_point(const Point& p) const {
    const GridPoint& gp = grid_point(p);
    return format_element(gp.u) + ";" + format_element(gp.w);
}

Point GridSpace::parse_point(std::string_view text) const {
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw parse_error("l1grid point: expected u;w", text.size());
    Point p{GridPoint{parse_element(group(), text.substr(0, semi)),
                      parse_element(group(), text.substr(semi + 1))}};
    require_point(p);
    return p;
}

}  // namespace ltree
