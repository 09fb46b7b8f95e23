#include "ltree/space.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ltree/spaces.hpp"

namespace ltree {

std::string_view space_kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::Interval: return "interval";
        case SpaceKind::Tree: return "tree";
        case SpaceKind::X1: return "x1";
        case SpaceKind::X2: return "x2";
        case SpaceKind::X3: return "x3";
        case SpaceKind::L1Grid: return "l1grid";
    }
    return "?";
}

// ---- Segment ----------------------------------------------------------------

Point Segment::eval(const GroupElement& t) const {
    if (t.sign() < 0 || t > length_)
        throw std::out_of_range("segment parameter " + format_element(t) +
                                " outside [0, " + format_element(length_) + "]");
    return space_->eval_body(*this, reversed_ ? length_ - t : t);
}

Segment Segment::reversed() const {
    return Segment(space_, end_, start_, length_, body_, !reversed_);
}

bool Segment::contains(const Point& p) const {
    space_->require_point(p);
    return space_->body_contains(*this, p);
}

bool Segment::operator==(const Segment& o) const {
    return space_ == o.space_ && reversed_ == o.reversed_ && length_ == o.length_ &&
           start_ == o.start_ && end_ == o.end_ && body_ == o.body_;
}

std::optional<Segment> concat(const Segment& s1, const Segment& s2) {
    if (s1.space_ptr() != s2.space_ptr())
        throw std::invalid_argument("concat: segments from different spaces");
    if (!(s1.end() == s2.start()))
        throw std::invalid_argument("concat: end(s1) must equal start(s2)");
    GroupElement total = s1.space().distance(s1.start(), s2.end());
    if (total != s1.length() + s2.length()) return std::nullopt;
    return s1.space().join(s1, s2);
}

// ---- Space shared machinery ----------------------------------------------------

std::vector<Point> Space::sample(std::uint64_t seed, int n) const {
    std::vector<Point> out;
    out.reserve(n < 0 ? 0 : n);
    for (int i = 0; i < n; ++i) {
        SampleStream s(seed, static_cast<std::uint64_t>(i));
        out.push_back(sample_point(s));
    }
    return out;
}

Segment Space::join(const Segment& s1, const Segment& s2) const {
    // Uniquely geodesic spaces: the union with additive length is the
    // geodesic, and the parametrization from a fixed end is unique.
    return geodesic(s1.start(), s2.end());
}

std::vector<Space::ParamSpan> Space::common_param_spans(const Segment&, const Segment&) const {
    throw std::logic_error("common_param_spans not implemented for this space");
}

Intersection Space::intersect_at(const Segment& s1, const Segment& s2, const Point& x) const {
    require_point(x);
    auto is_endpoint = [&](const Segment& s) { return s.start() == x || s.end() == x; };
    if (s1.space_ptr().get() != this || s2.space_ptr().get() != this)
        throw std::invalid_argument("intersect_at: foreign segment");
    if (!is_endpoint(s1) || !is_endpoint(s2))
        throw std::invalid_argument("intersect_at: x must be an endpoint of both segments");

    if (s1.length().is_zero() || s2.length().is_zero()) return Intersection::segment(x);

    Segment u1 = s1.start() == x ? s1 : s1.reversed();
    Segment u2 = s2.start() == x ? s2 : s2.reversed();

    auto spans = common_param_spans(u1, u2);
    for (auto& sp : spans)
        if (sp.hi < sp.lo) std::swap(sp.lo, sp.hi);
    std::sort(spans.begin(), spans.end(),
              [](const ParamSpan& a, const ParamSpan& b) { return a.lo < b.lo; });

    std::vector<ParamSpan> merged;
    for (auto& sp : spans) {
        if (!merged.empty() && sp.lo <= merged.back().hi) {
            if (merged.back().hi < sp.hi) merged.back().hi = sp.hi;
        } else {
            merged.push_back(sp);
        }
    }
    if (merged.empty() || !merged.front().lo.is_zero())
        throw std::logic_error("intersect_at: common endpoint not found in piece analysis");

    Point reach = u1.eval(merged.front().hi);
    if (merged.size() == 1) return Intersection::segment(std::move(reach));
    return Intersection::disjoint(std::move(reach), u1.eval(merged[1].lo));
}

std::string Space::format_point(const Point&) const {
    throw std::logic_error("format_point not implemented for this space");
}

Point Space::parse_point(std::string_view) const {
    throw std::logic_error("parse_point not implemented for this space");
}

// ---- space spec parsing ------------------------------------------------------------

namespace {

std::vector<TreeEdgeSpec> read_tree_file(GroupId g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("tree: cannot open edge file " + path);
    std::vector<TreeEdgeSpec> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string u, v, len;
        if (!(ls >> u)) continue;  // blank line
        if (u[0] == '#') continue;
        if (!(ls >> v >> len))
            throw std::invalid_argument("tree: malformed edge line " + std::to_string(lineno) +
                                        ": expected 'u v length'");
        edges.push_back({u, v, parse_element(g, len)});
    }
    return edges;
}

}  // namespace

SpacePtr make_space(GroupId g, std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view kind = spec.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{}
                                                           : spec.substr(colon + 1);
    if (kind == "interval") {
        auto dots = arg.find("..");
        if (dots == std::string_view::npos)
            throw std::invalid_argument("interval: expected interval:a..b");
        return make_interval(parse_element(g, arg.substr(0, dots)),
                             parse_element(g, arg.substr(dots + 2)));
    }
    if (kind == "tree") {
        if (arg.empty() || arg[0] != '@')
            throw std::invalid_argument("tree: expected tree:@file");
        std::string path(arg.substr(1));
        return make_tree(g, read_tree_file(g, path), "@" + path);
    }
    if (kind == "x1") {
        if (arg.empty()) throw std::invalid_argument("x1: expected x1:lambda0");
        return make_x1(parse_element(g, arg));
    }
    if (kind == "x2") {
        if (!arg.empty()) throw std::invalid_argument("x2 takes no parameter");
        if (g != GroupId::Rational)
            throw std::invalid_argument(
                "x2 requires an ordered field: the segment map divides by arc "
                "lengths, so the group must be rational");
        return make_x2();
    }
    if (kind == "x3") {
        if (arg.empty()) throw std::invalid_argument("x3: expected x3:a");
        return make_x3(parse_element(g, arg));
    }
    if (kind == "l1grid") {
        if (arg.empty()) throw std::invalid_argument("l1grid: expected l1grid:side");
        return make_l1grid(parse_element(g, arg));
    }
    throw std::invalid_argument("unknown space kind '" + std::string(kind) + "'");
}

SpacePtr make_interval(GroupElement lo, GroupElement hi) {
    return std::make_shared<IntervalSpace>(std::move(lo), std::move(hi));
}

SpacePtr make_tree(GroupId g, std::vector<TreeEdgeSpec> edges, std::string label) {
    return std::make_shared<TreeSpace>(g, std::move(edges), std::move(label));
}

SpacePtr make_x1(GroupElement lambda0) { return std::make_shared<X1Space>(std::move(lambda0)); }

SpacePtr make_x2() { return std::make_shared<X2Space>(); }

SpacePtr make_x3(GroupElement a) { return std::make_shared<X3Space>(std::move(a)); }

SpacePtr make_l1grid(GroupElement side) { return std::make_shared<GridSpace>(std::move(side)); }

}  // namespace ltree
