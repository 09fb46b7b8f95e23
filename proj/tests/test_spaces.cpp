#include <doctest.h>

#include "ltree/checker.hpp"
#include "ltree/spaces.hpp"

using namespace ltree;

namespace {

GroupElement Z(long v) { return GroupElement::integer(v); }
GroupElement Q(long p, long q = 1) { return GroupElement::rational(p, q); }
GroupElement D3(long p, unsigned k) { return GroupElement::triadic(p, k); }

Point x1p(GroupElement x, int branch) { return X1Point{std::move(x), branch}; }
Point x2p(GroupElement t, GroupElement phi) { return X2Point{std::move(t), std::move(phi)}; }
Point x3p(GroupElement v) { return X3Point{std::move(v)}; }
Point ip(GroupElement v) { return IntervalPoint{std::move(v)}; }
Point gp(GroupElement u, GroupElement w) { return GridPoint{std::move(u), std::move(w)}; }

SpacePtr star_tree() {
    return make_tree(GroupId::Rational,
                     {{"c", "u", Q(1)}, {"c", "v", Q(1)}, {"c", "w", Q(1)}});
}

std::vector<SpacePtr> builtin_spaces() {
    return {make_interval(Z(0), Z(10)), star_tree(), make_x1(D3(1, 0)), make_x2(),
            make_x3(Z(1)),             make_l1grid(Z(2))};
}

}  // namespace

TEST_CASE("space construction validates parameters") {
    CHECK_THROWS_AS((void)make_x1(GroupElement::dyadic(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS((void)make_x1(D3(2, 1)), std::invalid_argument);  // 2/3 halves to 1/3
    CHECK_NOTHROW((void)make_x1(D3(1, 0)));
    CHECK_NOTHROW((void)make_x1(GroupElement::lex_int(1, 0)));
    CHECK_NOTHROW((void)make_x1(GroupElement::zsqrt2(0, 1)));

    CHECK_THROWS_AS((void)make_space(GroupId::Int, "x2"), std::invalid_argument);
    CHECK_NOTHROW((void)make_space(GroupId::Rational, "x2"));

    CHECK_THROWS_AS((void)make_x3(Q(1)), std::invalid_argument);  // 1/2 exists in Q
    CHECK_NOTHROW((void)make_x3(Z(3)));
    CHECK_THROWS_AS((void)make_x3(Z(2)), std::invalid_argument);
    CHECK_NOTHROW((void)make_x3(D3(1, 1)));

    CHECK_THROWS_AS((void)make_interval(Z(3), Z(1)), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)make_tree(GroupId::Int, {{"a", "b", Z(1)}, {"b", "a", Z(2)}}),
        std::invalid_argument);  // cycle
    CHECK_THROWS_AS(
        (void)make_tree(GroupId::Int,
                        {{"a", "b", Z(1)}, {"c", "d", Z(1)}, {"a", "c", Z(1)}, {"b", "d", Z(1)}}),
        std::invalid_argument);
    CHECK_THROWS_AS((void)make_tree(GroupId::Int, {{"a", "b", Z(0)}}), std::invalid_argument);
}

TEST_CASE("distance: spec examples") {
    auto x1 = make_x1(D3(1, 0));
    CHECK(x1->distance(x1p(D3(0, 0), 1), x1p(D3(0, 0), 2)) == D3(1, 0));
    CHECK(x1->distance(x1p(D3(1, 1), 2), x1p(D3(4, 2), 3)) == D3(2, 2));  // 1 - 1/3 - 4/9

    auto x2 = make_x2();
    CHECK(x2->distance(x2p(Q(1), Q(0)), x2p(Q(2), Q(1))) == Q(2));

    auto x3 = make_x3(Z(1));
    CHECK(x3->distance(x3p(Z(0)), x3p(Z(2))) == Z(1));  // not 2: the short way wraps

    auto iv = make_interval(Z(0), Z(10));
    CHECK(iv->distance(ip(Z(3)), ip(Z(8))) == Z(5));
    CHECK_THROWS_AS((void)iv->distance(ip(Z(3)), x3p(Z(0))), std::domain_error);
    CHECK_THROWS_AS((void)iv->distance(ip(Z(3)), ip(Z(11))), std::domain_error);
}

TEST_CASE("tree distances and geodesics on the unit star") {
    auto space = star_tree();
    const auto& tree = static_cast<const TreeSpace&>(*space);
    Point c = tree.vertex_point(*tree.vertex_by_name("c"));
    Point u = tree.vertex_point(*tree.vertex_by_name("u"));
    Point v = tree.vertex_point(*tree.vertex_by_name("v"));

    CHECK(space->distance(u, v) == Q(2));
    CHECK(space->distance(u, c) == Q(1));

    Segment seg = space->geodesic(u, v);
    CHECK(seg.length() == Q(2));
    CHECK(seg.eval(Q(1)) == c);  // midpoint of the path is the center
    CHECK(seg.eval(Q(0)) == u);
    CHECK(seg.eval(Q(2)) == v);
    CHECK(seg.contains(c));
    CHECK_FALSE(seg.contains(tree.vertex_point(*tree.vertex_by_name("w"))));
}

TEST_CASE("geodesic eval: x1 case split") {
    auto x1 = make_x1(D3(1, 0));
    Segment seg = x1->geodesic(x1p(D3(0, 0), 1), x1p(D3(0, 0), 2));
    CHECK(seg.length() == D3(1, 0));
    CHECK(seg.eval(D3(1, 1)) == x1p(D3(1, 1), 1));  // 2*(1/3) < 1
    CHECK(seg.eval(D3(2, 1)) == x1p(D3(1, 1), 2));  // 2*(2/3) > 1

    // same-branch segments order their endpoints internally
    Segment back = x1->geodesic(x1p(D3(4, 2), 1), x1p(D3(1, 1), 1));
    CHECK(back.length() == D3(1, 2));
    CHECK(back.eval(D3(0, 0)) == x1p(D3(4, 2), 1));
    CHECK(back.eval(D3(1, 2)) == x1p(D3(1, 1), 1));
}

TEST_CASE("geodesic eval: x2 two-piece map") {
    auto x2 = make_x2();
    Segment seg = x2->geodesic(x2p(Q(1), Q(0)), x2p(Q(2), Q(1)));
    CHECK(seg.length() == Q(2));
    CHECK(seg.eval(Q(1, 2)) == x2p(Q(1), Q(1, 2)));
    CHECK(seg.eval(Q(3, 2)) == x2p(Q(3, 2), Q(1)));
    CHECK(seg.eval(Q(2)) == x2p(Q(2), Q(1)));
    CHECK(seg.eval(Q(0)) == x2p(Q(1), Q(0)));
}

TEST_CASE("geodesic eval: x3 goes through the identification") {
    auto x3 = make_x3(Z(1));
    Segment seg = x3->geodesic(x3p(Z(0)), x3p(Z(2)));
    CHECK(seg.length() == Z(1));
    CHECK(seg.eval(Z(1)) == x3p(Z(2)));
    // interior of the short arc: the segment is [2a, 3a], not [0, 2a]
    CHECK(seg.contains(x3p(Z(2))));
    CHECK_FALSE(seg.contains(x3p(Z(1))));
}

TEST_CASE("geodesic eval: interval endpoints") {
    auto iv = make_interval(Z(1), Z(4));
    Segment seg = iv->geodesic(ip(Z(1)), ip(Z(4)));
    CHECK(seg.eval(Z(0)) == ip(Z(1)));
    CHECK(seg.eval(Z(3)) == ip(Z(4)));
}

TEST_CASE("reverse: involution and mirrored case split") {
    auto iv = make_interval(Z(0), Z(3));
    Segment fwd = iv->geodesic(ip(Z(0)), ip(Z(3)));
    Segment rev = fwd.reversed();
    CHECK(rev.eval(Z(0)) == ip(Z(3)));
    CHECK(rev.eval(Z(3)) == ip(Z(0)));
    CHECK(rev.reversed() == fwd);

    auto x1 = make_x1(D3(1, 0));
    Segment seg = x1->geodesic(x1p(D3(0, 0), 1), x1p(D3(0, 0), 2));
    CHECK(seg.reversed().eval(D3(1, 1)) == x1p(D3(1, 1), 2));
}

TEST_CASE("concat: spec examples") {
    auto iv = make_interval(Z(0), Z(10));
    Segment a = iv->geodesic(ip(Z(0)), ip(Z(2)));
    Segment b = iv->geodesic(ip(Z(2)), ip(Z(5)));
    auto joined = concat(a, b);
    REQUIRE(joined.has_value());
    CHECK(joined->length() == Z(5));
    CHECK(joined->eval(Z(0)) == ip(Z(0)));
    CHECK(joined->eval(Z(5)) == ip(Z(5)));
    CHECK(joined->eval(Z(2)) == ip(Z(2)));

    auto x3 = make_x3(Z(1));
    Segment c = x3->geodesic(x3p(Z(0)), x3p(Z(1)));
    Segment d = x3->geodesic(x3p(Z(1)), x3p(Z(2)));
    CHECK_FALSE(concat(c, d).has_value());  // d(0, 2a) = a, not 2a

    auto x2 = make_x2();
    Segment s1 = x2->geodesic(x2p(Q(1), Q(0)), x2p(Q(2), Q(0)));
    Segment s2 = x2->geodesic(x2p(Q(1), Q(0)), x2p(Q(2), Q(1)));
    CHECK_FALSE(concat(s1.reversed(), s2).has_value());  // d((2,0),(2,1)) = 2 != 3

    CHECK_THROWS_AS((void)concat(a, d), std::invalid_argument);    // different spaces
    Segment far = iv->geodesic(ip(Z(7)), ip(Z(9)));
    CHECK_THROWS_AS((void)concat(a, far), std::invalid_argument);  // endpoint mismatch
}

TEST_CASE("concat keeps the honest union map on the grid") {
    auto grid = make_l1grid(Z(2));
    Segment a = grid->geodesic(gp(Z(0), Z(0)), gp(Z(0), Z(1)));  // vertical
    Segment b = grid->geodesic(gp(Z(0), Z(1)), gp(Z(1), Z(1)));  // horizontal
    auto joined = concat(a, b);
    REQUIRE(joined.has_value());
    // the union is the w-first staircase, not the canonical u-first one
    CHECK(joined->eval(Z(1)) == gp(Z(0), Z(1)));
    CHECK(joined->contains(gp(Z(0), Z(1))));
    CHECK_FALSE(joined->contains(gp(Z(1), Z(0))));
}

TEST_CASE("contains: spec examples and split property") {
    auto x1 = make_x1(D3(1, 0));
    Segment seg = x1->geodesic(x1p(D3(0, 0), 1), x1p(D3(0, 0), 2));
    CHECK(seg.contains(x1p(D3(1, 1), 1)));
    CHECK_FALSE(seg.contains(x1p(D3(0, 0), 3)));

    auto iv = make_interval(Z(0), Z(10));
    Segment s05 = iv->geodesic(ip(Z(0)), ip(Z(5)));
    CHECK_FALSE(s05.contains(ip(Z(7))));

    for (const auto& space : builtin_spaces()) {
        for (int i = 0; i < 200; ++i) {
            SampleStream stream(91, i);
            Point p = space->sample_point(stream);
            Point q = space->sample_point(stream);
            Segment s = space->geodesic(p, q);
            GroupElement t =
                sample_in_range(GroupElement::zero(space->group()), s.length(), stream);
            Point mid = s.eval(t);
            CHECK(s.contains(mid));
            CHECK(space->distance(p, mid) + space->distance(mid, q) == s.length());
            Point other = space->sample_point(stream);
            if (s.contains(other))
                CHECK(space->distance(p, other) + space->distance(other, q) == s.length());
        }
    }
}

TEST_CASE("intersect_at: spec examples") {
    auto space = star_tree();
    const auto& tree = static_cast<const TreeSpace&>(*space);
    Point c = tree.vertex_point(*tree.vertex_by_name("c"));
    Point u = tree.vertex_point(*tree.vertex_by_name("u"));
    Point v = tree.vertex_point(*tree.vertex_by_name("v"));
    Point w = tree.vertex_point(*tree.vertex_by_name("w"));
    Segment s1 = space->geodesic(u, v);
    Segment s2 = space->geodesic(u, w);
    Intersection meet = space->intersect_at(s1, s2, u);
    CHECK(meet.kind == Intersection::Kind::SegmentSet);
    CHECK(meet.reach == c);

    auto x1 = make_x1(D3(1, 0));
    Segment t1 = x1->geodesic(x1p(D3(0, 0), 1), x1p(D3(0, 0), 2));
    Segment t2 = x1->geodesic(x1p(D3(0, 0), 1), x1p(D3(0, 0), 3));
    Intersection nm = x1->intersect_at(t1, t2, x1p(D3(0, 0), 1));
    CHECK(nm.kind == Intersection::Kind::NoMax);
    REQUIRE(nm.no_max.has_value());
    CHECK(nm.no_max->branch == 1);
    CHECK(nm.no_max->lower == D3(0, 0));

    auto iv = make_interval(Z(0), Z(10));
    Segment i1 = iv->geodesic(ip(Z(0)), ip(Z(3)));
    Segment i2 = iv->geodesic(ip(Z(0)), ip(Z(5)));
    Intersection nested = iv->intersect_at(i1, i2, ip(Z(0)));
    CHECK(nested.kind == Intersection::Kind::SegmentSet);
    CHECK(nested.reach == ip(Z(3)));

    CHECK_THROWS_AS((void)iv->intersect_at(i1, i2, ip(Z(1))), std::invalid_argument);
}

TEST_CASE("intersect_at: grid staircases can re-meet disconnectedly") {
    auto grid = make_l1grid(Z(2));
    Segment s1 = grid->geodesic(gp(Z(0), Z(0)), gp(Z(1), Z(1)));  // u-first from (0,0)
    Segment s2 = grid->geodesic(gp(Z(1), Z(1)), gp(Z(0), Z(0)));  // u-first from (1,1)
    Intersection meet = grid->intersect_at(s1, s2, gp(Z(0), Z(0)));
    CHECK(meet.kind == Intersection::Kind::DisjointBeyond);
    REQUIRE(meet.stray.has_value());
    CHECK(*meet.stray == gp(Z(1), Z(1)));
}

TEST_CASE("sample: determinism and domain constraints") {
    auto x2 = make_x2();
    CHECK(x2->sample(0, 0).empty());
    auto pts = x2->sample(7, 200);
    auto again = x2->sample(7, 200);
    CHECK(pts.size() == 200);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i] == again[i]);
        CHECK_NOTHROW(x2->require_point(pts[i]));
    }
    for (const auto& space : builtin_spaces()) {
        for (const auto& p : space->sample(3, 100)) CHECK_NOTHROW(space->require_point(p));
    }
}

TEST_CASE("metric axioms hold exactly on sampled triples for every space") {
    for (const auto& space : builtin_spaces()) {
        CAPTURE(space->describe());
        for (int i = 0; i < 600; ++i) {
            SampleStream stream(17, i);
            Point p = space->sample_point(stream);
            Point q = space->sample_point(stream);
            Point r = space->sample_point(stream);
            GroupElement dpq = space->distance(p, q);
            CHECK(dpq == space->distance(q, p));
            CHECK(dpq.is_zero() == (p == q));
            CHECK(dpq.sign() >= 0);
            CHECK(space->distance(p, r) <= dpq + space->distance(q, r));
        }
    }
}

TEST_CASE("segment isometry on sampled parameter pairs for every space") {
    for (const auto& space : builtin_spaces()) {
        CAPTURE(space->describe());
        GroupElement zero = GroupElement::zero(space->group());
        for (int i = 0; i < 400; ++i) {
            SampleStream stream(19, i);
            Point p = space->sample_point(stream);
            Point q = space->sample_point(stream);
            Segment s = space->geodesic(p, q);
            CHECK(s.length() == space->distance(p, q));
            CHECK(s.eval(zero) == p);
            CHECK(s.eval(s.length()) == q);
            GroupElement t1 = sample_in_range(zero, s.length(), stream);
            GroupElement t2 = sample_in_range(zero, s.length(), stream);
            CHECK(space->distance(s.eval(t1), s.eval(t2)) == (t2 - t1).abs());
        }
    }
}

TEST_CASE("x1 strong triangle inequality across three distinct branches") {
    auto x1 = make_x1(D3(1, 0));
    for (int i = 0; i < 500; ++i) {
        SampleStream stream(23, i);
        Point p = x1->sample_point(stream);
        Point q = x1->sample_point(stream);
        Point r = x1->sample_point(stream);
        int bp = std::get<X1Point>(p).branch;
        int bq = std::get<X1Point>(q).branch;
        int br = std::get<X1Point>(r).branch;
        if (bp == bq || bq == br || bp == br) continue;
        CHECK(x1->distance(p, r) < x1->distance(p, q) + x1->distance(q, r));
    }
}

TEST_CASE("x3 distance equals the brute-force minimum over k in -2..2") {
    auto x3 = make_x3(Z(3));
    GroupElement circumference = Z(9);
    for (int i = 0; i < 1000; ++i) {
        SampleStream stream(29, i);
        Point p = x3->sample_point(stream);
        Point q = x3->sample_point(stream);
        GroupElement delta = std::get<X3Point>(q).pos - std::get<X3Point>(p).pos;
        std::optional<GroupElement> best;
        for (int k = -2; k <= 2; ++k) {
            GroupElement cand = (delta + circumference.scaled(k)).abs();
            if (!best || cand < *best) best = cand;
        }
        CHECK(x3->distance(p, q) == *best);
    }
}

TEST_CASE("point literals round-trip through the space codec") {
    for (const auto& space : builtin_spaces()) {
        CAPTURE(space->describe());
        for (const auto& p : space->sample(31, 100)) {
            std::string text = space->format_point(p);
            CHECK(space->parse_point(text) == p);
        }
    }
}

TEST_CASE("make_space round-trips the spec string") {
    CHECK(make_space(GroupId::Int, "interval:0..10")->describe() == "interval:0..10");
    CHECK(make_space(GroupId::Triadic, "x1:1")->describe() == "x1:1");
    CHECK(make_space(GroupId::Rational, "x2")->describe() == "x2");
    CHECK(make_space(GroupId::Int, "x3:1")->describe() == "x3:1");
    CHECK(make_space(GroupId::Int, "l1grid:4")->describe() == "l1grid:4");
    CHECK_THROWS((void)make_space(GroupId::Int, "sphere:1"));
}
