#include <algorithm>
#include <deque>
#include <map>

#include "ltree/spaces.hpp"

namespace ltree {

namespace {

const TreePoint& tree_point(const Point& p) {
    auto* tp = std::get_if<TreePoint>(&p);
    if (!tp) throw std::domain_error("tree: foreign point");
    return *tp;
}

GroupElement leg_length(const TreeLeg& leg) { return (leg.to - leg.from).abs(); }

}  // namespace

TreeSpace::TreeSpace(GroupId g, std::vector<TreeEdgeSpec> edges, std::string label)
    : Space(SpaceKind::Tree, g), label_(std::move(label)) {
    std::map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<int>(names_.size()));
        if (inserted) names_.push_back(name);
        return it->second;
    };
    for (const auto& e : edges) {
        if (e.from == e.to) throw std::invalid_argument("tree: self-loop at " + e.from);
        if (e.length.group() != g)
            throw std::invalid_argument("tree: edge length from wrong group");
        if (e.length.sign() <= 0)
            throw std::invalid_argument("tree: edge lengths must be positive");
        edges_.push_back({intern(e.from), intern(e.to), e.length});
    }
    if (names_.empty()) {
        // a single isolated vertex makes the degenerate one-point space
        names_.push_back("v0");
    }
    int n = vertex_count();
    if (static_cast<int>(edges_.size()) != n - 1)
        throw std::invalid_argument("tree: edge count must be vertex count - 1 (acyclic, connected)");

    incident_.assign(n, {});
    for (int e = 0; e < edge_count(); ++e) {
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }

    // all-pairs vertex distances and parent pointers by BFS from every root
    vdist_.assign(n, std::vector<GroupElement>(n, GroupElement::zero(g)));
    parent_.assign(n, std::vector<int>(n, -1));
    parent_edge_.assign(n, std::vector<int>(n, -1));
    for (int root = 0; root < n; ++root) {
        std::vector<bool> seen(n, false);
        std::deque<int> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : incident_[v]) {
                int w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
                if (seen[w]) continue;
                seen[w] = true;
                vdist_[root][w] = vdist_[root][v] + edges_[e].len;
                parent_[root][w] = v;
                parent_edge_[root][w] = e;
                queue.push_back(w);
            }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw std::invalid_argument("tree: not connected");
    }
}

Point TreeSpace::vertex_point(int v) const {
    if (edge_count() == 0) return TreePoint{0, GroupElement::zero(group())};
    int e = incident_[v].front();
    return TreePoint{e, edges_[e].u == v ? GroupElement::zero(group()) : edges_[e].len};
}

std::optional<int> TreeSpace::vertex_by_name(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

TreePoint TreeSpace::canonical(TreePoint p) const {
    if (p.offset.is_zero()) return std::get<TreePoint>(vertex_point(edges_[p.edge].u));
    if (p.offset == edges_[p.edge].len) return std::get<TreePoint>(vertex_point(edges_[p.edge].v));
    return p;
}

std::string TreeSpace::describe() const {
    return "tree:" + (label_.empty() ? std::to_string(vertex_count()) + "v" : label_);
}

void TreeSpace::require_point(const Point& p) const {
    const TreePoint& tp = tree_point(p);
    if (edge_count() == 0) {
        if (tp.edge != 0 || !tp.offset.is_zero())
            throw std::domain_error("tree: point outside the one-vertex tree");
        return;
    }
    if (tp.edge < 0 || tp.edge >= edge_count()) throw std::domain_error("tree: bad edge id");
    if (tp.offset.group() != group()) throw std::domain_error("tree: offset from wrong group");
    if (tp.offset.sign() < 0 || edges_[tp.edge].len < tp.offset)
        throw std::domain_error("tree: offset outside edge");
    if (!(canonical(tp) == tp))
        throw std::domain_error("tree: vertex point not in canonical form");
}

GroupElement TreeSpace::distance(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const TreePoint &p = tree_point(pp), &q = tree_point(qq);
    if (p.edge == q.edge) return (q.offset - p.offset).abs();
    const Edge &ep = edges_[p.edge], &eq = edges_[q.edge];
    // exit p's edge via one endpoint, enter q's edge via one endpoint
    GroupElement best = GroupElement::zero(group());
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        int xv = i == 0 ? ep.u : ep.v;
        GroupElement dx = i == 0 ? p.offset : ep.len - p.offset;
        for (int j = 0; j < 2; ++j) {
            int yv = j == 0 ? eq.u : eq.v;
            GroupElement dy = j == 0 ? q.offset : eq.len - q.offset;
            GroupElement cand = dx + vdist_[xv][yv] + dy;
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    }
    return best;
}

std::vector<TreeLeg> TreeSpace::legs_between(const TreePoint& p, const TreePoint& q) const {
    std::vector<TreeLeg> legs;
    auto push = [&](int edge, GroupElement from, GroupElement to) {
        if (from == to) return;
        legs.push_back({edge, std::move(from), std::move(to)});
    };
    if (p.edge == q.edge) {
        push(p.edge, p.offset, q.offset);
        return legs;
    }
    const Edge &ep = edges_[p.edge], &eq = edges_[q.edge];
    // best exit/entry combo (ties resolved in enumeration order)
    int bx = ep.u, by = eq.u;
    GroupElement bdx = p.offset, bdy = q.offset;
    std::optional<GroupElement> best;
    for (int i = 0; i < 2; ++i) {
        int xv = i == 0 ? ep.u : ep.v;
        GroupElement dx = i == 0 ? p.offset : ep.len - p.offset;
        for (int j = 0; j < 2; ++j) {
            int yv = j == 0 ? eq.u : eq.v;
            GroupElement dy = j == 0 ? q.offset : eq.len - q.offset;
            GroupElement cand = dx + vdist_[xv][yv] + dy;
            if (!best || cand < *best) {
                best = cand;
                bx = xv;
                by = yv;
                bdx = dx;
                bdy = dy;
            }
        }
    }
    // p to the exit vertex
    push(p.edge, p.offset, bx == ep.u ? GroupElement::zero(group()) : ep.len);
    // vertex path bx -> by, walked by climbing parent pointers rooted at by
    std::vector<int> path{bx};
    for (int v = bx; v != by; v = parent_[by][v]) path.push_back(parent_[by][v]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int e = parent_edge_[by][path[i]];
        const Edge& edge = edges_[e];
        if (edge.u == path[i])
            push(e, GroupElement::zero(group()), edge.len);
        else
            push(e, edge.len, GroupElement::zero(group()));
    }
    // entry vertex to q
    push(q.edge, by == eq.u ? GroupElement::zero(group()) : eq.len, q.offset);
    return legs;
}

Segment TreeSpace::geodesic(const Point& pp, const Point& qq) const {
    require_point(pp);
    require_point(qq);
    const TreePoint &p = tree_point(pp), &q = tree_point(qq);
    auto legs = legs_between(p, q);
    GroupElement len = GroupElement::zero(group());
    for (const auto& leg : legs) len = len + leg_length(leg);
    return make_segment(pp, qq, std::move(len), TreeBody{std::move(legs)});
}

Point TreeSpace::eval_body(const Segment& s, const GroupElement& t) const {
    const auto& body = std::get<TreeBody>(s.body());
    if (body.legs.empty()) return s.is_reversed() ? s.end() : s.start();
    GroupElement remaining = t;
    for (const auto& leg : body.legs) {
        GroupElement len = leg_length(leg);
        if (remaining <= len) {
            GroupElement off =
                leg.from <= leg.to ? leg.from + remaining : leg.from - remaining;
            return Point{canonical(TreePoint{leg.edge, std::move(off)})};
        }
        remaining = remaining - len;
    }
    // t == length handled above; anything else is an internal error
    throw std::logic_error("tree eval: parameter beyond final leg");
}

bool TreeSpace::body_contains(const Segment& s, const Point& pp) const {
    const TreePoint& p = tree_point(pp);
    const auto& body = std::get<TreeBody>(s.body());
    if (body.legs.empty()) return pp == s.start();
    for (const auto& leg : body.legs) {
        const GroupElement& a = leg.from <= leg.to ? leg.from : leg.to;
        const GroupElement& b = leg.from <= leg.to ? leg.to : leg.from;
        if (leg.edge == p.edge && a <= p.offset && p.offset <= b) return true;
        // vertex positions are canonicalized, so also match leg endpoints
        const Edge& e = edges_[leg.edge];
        if (a.is_zero() && pp == vertex_point(e.u)) return true;
        if (b == e.len && pp == vertex_point(e.v)) return true;
    }
    return false;
}

std::vector<Space::ParamSpan> TreeSpace::common_param_spans(const Segment& u1,
                                                            const Segment& u2) const {
    struct DirectedLeg {
        TreeLeg leg;
        GroupElement at;  // parameter of leg.from
    };
    auto directed = [&](const Segment& u) {
        std::vector<DirectedLeg> out;
        const auto& body = std::get<TreeBody>(u.body());
        std::vector<TreeLeg> legs = body.legs;
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

    auto param_at = [&](const DirectedLeg& dl, const GroupElement& offset) {
        return dl.at + (offset - dl.leg.from).abs();
    };

    std::vector<ParamSpan> spans;
    auto legs1 = directed(u1);
    auto legs2 = directed(u2);
    for (const auto& l1 : legs1) {
        const GroupElement& a1 = l1.leg.from <= l1.leg.to ? l1.leg.from : l1.leg.to;
        const GroupElement& b1 = l1.leg.from <= l1.leg.to ? l1.leg.to : l1.leg.from;
        for (const auto& l2 : legs2) {
            const GroupElement& a2 = l2.leg.from <= l2.leg.to ? l2.leg.from : l2.leg.to;
            const GroupElement& b2 = l2.leg.from <= l2.leg.to ? l2.leg.to : l2.leg.from;
            if (l1.leg.edge == l2.leg.edge) {
                GroupElement lo = a1 < a2 ? a2 : a1;
                GroupElement hi = b1 < b2 ? b1 : b2;
                if (lo <= hi) spans.push_back({param_at(l1, lo), param_at(l1, hi)});
                continue;
            }
            // distinct edges can only meet at a shared vertex
            const Edge &e1 = edges_[l1.leg.edge], &e2 = edges_[l2.leg.edge];
            for (int v : {e1.u, e1.v}) {
                if (v != e2.u && v != e2.v) continue;
                GroupElement o1 = v == e1.u ? GroupElement::zero(group()) : e1.len;
                GroupElement o2 = v == e2.u ? GroupElement::zero(group()) : e2.len;
                if (a1 <= o1 && o1 <= b1 && a2 <= o2 && o2 <= b2) {
                    GroupElement t = param_at(l1, o1);
                    spans.push_back({t, t});
                }
            }
        }
    }
    return spans;
}

Point TreeSpace::sample_point(SampleStream& rng) const {
    if (edge_count() == 0) return vertex_point(0);
    int e = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(edge_count())));
    GroupElement off =
        sample_in_range(GroupElement::zero(group()), edges_[e].len, rng, bounds_);
    return Point{canonical(TreePoint{e, std::move(off)})};
}

std::vector<Point> TreeSpace::landmarks() const {
    std::vector<Point> out;
    for (int v = 0; v < vertex_count(); ++v) out.push_back(vertex_point(v));
    return out;
}

std::string TreeSpace::format_point(const Point& pp) const {
    const TreePoint& p = tree_point(pp);
    if (edge_count() == 0) return names_[0];
    if (p.offset.is_zero()) return names_[edges_[p.edge].u];
    if (p.offset == edges_[p.edge].len) return names_[edges_[p.edge].v];
    return std::to_string(p.edge) + "#" + format_element(p.offset);
}

Point TreeSpace::parse_point(std::string_view text) const {
    if (auto v = vertex_by_name(text)) return vertex_point(*v);
    auto hash = text.find('#');
    if (hash == std::string_view::npos)
        throw parse_error("tree point: expected vertex name or edge#offset", 0);
    int edge = 0;
    for (char c : text.substr(0, hash)) {
        if (c < '0' || c > '9') throw parse_error("tree point: bad edge id", 0);
        edge = edge * 10 + (c - '0');
    }
    Point p{canonical(TreePoint{edge, parse_element(group(), text.substr(hash + 1))})};
    require_point(p);
    return p;
}

}  // namespace ltree
