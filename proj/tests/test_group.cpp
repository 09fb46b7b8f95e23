#include <doctest.h>

#include <optional>
#include <vector>

#include "ltree/group.hpp"
#include "ltree/sampling.hpp"

using namespace ltree;

namespace {

const std::vector<GroupId> kAllGroups = {GroupId::Int,     GroupId::Rational, GroupId::Dyadic,
                                         GroupId::Triadic, GroupId::ZSqrt2,   GroupId::LexInt};

GroupElement Z(long v) { return GroupElement::integer(v); }
GroupElement Q(long p, long q) { return GroupElement::rational(p, q); }
GroupElement D2(long p, unsigned k) { return GroupElement::dyadic(p, k); }
GroupElement D3(long p, unsigned k) { return GroupElement::triadic(p, k); }
GroupElement R2(long a, long b) { return GroupElement::zsqrt2(a, b); }
GroupElement LX(long x, long y) { return GroupElement::lex_int(x, y); }

// Independent oracle: brute-force maximum of { t in Z : 0 <= 2t <= lambda0 }.
std::optional<BigInt> brute_force_int_half_max(long lambda0) {
    std::optional<BigInt> best;
    for (long t = 0; 2 * t <= lambda0; ++t) best = t;
    return best;
}

// Rational sandwich for sqrt2 from continued-fraction convergents with
// denominator > 10^6: lower^2 < 2 < upper^2, checked exactly below.
struct Sqrt2Sandwich {
    BigInt lp = 1607521, lq = 1136689;   // lp^2 - 2*lq^2 = -1
    BigInt up = 3880899, uq = 2744210;   // up^2 - 2*uq^2 = +1
};

// Conclusive sign of a + b*sqrt2 via the sandwich, or nullopt if the bounds
// straddle zero (cannot happen for the coefficient sizes sampled here).
std::optional<int> sandwich_sign(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) return 0;
    Sqrt2Sandwich s;
    // value bounds: a + b*L and a + b*U in some order
    auto num_lo = b >= 0 ? a * s.lq + b * s.lp : a * s.uq + b * s.up;
    auto den_lo = b >= 0 ? s.lq : s.uq;
    auto num_hi = b >= 0 ? a * s.uq + b * s.up : a * s.lq + b * s.lp;
    auto den_hi = b >= 0 ? s.uq : s.lq;
    (void)den_lo;
    (void)den_hi;  // denominators positive; signs come from numerators
    if (num_lo > 0) return 1;
    if (num_hi < 0) return -1;
    return std::nullopt;
}

int ordering_to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("compare: spec examples") {
    CHECK(ordering_to_int(Z(3).compare(Z(5))) == -1);
    // (1,1) vs (2,0): difference (-1,1); b=1>0, a=-1, a^2=1 < 2*b^2=2 => positive
    CHECK(ordering_to_int(R2(1, 1).compare(R2(2, 0))) == 1);
    CHECK(ordering_to_int(LX(0, 7).compare(LX(1, -100))) == -1);
    CHECK_THROWS_AS((void)Z(1).compare(Q(1, 1)), std::domain_error);
}

TEST_CASE("add: spec examples") {
    CHECK(D3(1, 1) + D3(1, 1) == D3(2, 1));
    CHECK(R2(1, 1) + R2(1, -1) == R2(2, 0));
    CHECK(Z(2) + Z(-5) == Z(-3));
    CHECK_THROWS_AS((void)(Z(1) + LX(1, 0)), std::domain_error);
}

TEST_CASE("canonical forms") {
    CHECK(Q(4, 6) == Q(2, 3));
    CHECK(Q(1, -2) == Q(-1, 2));
    CHECK(format_element(Q(0, -5)) == "0");
    CHECK(D2(6, 1) == D2(3, 0));
    CHECK(format_element(D2(6, 1)) == "3");
    CHECK(D3(6, 2) == D3(2, 1));
    CHECK(format_element(D3(18, 2)) == "2");
}

TEST_CASE("try_halve: spec examples and soundness") {
    auto h = D3(2, 1).try_halve();
    REQUIRE(h.has_value());
    CHECK(*h == D3(1, 1));

    CHECK_FALSE(D3(1, 1).try_halve().has_value());
    CHECK(*D2(1, 0).try_halve() == D2(1, 1));  // 1/2 exists in Z[1/2]

    // when none: no sampled candidate doubles to t
    SampleStream s(7, 0);
    for (int i = 0; i < 1000; ++i) {
        GroupElement c = sample_element(GroupId::Triadic, s);
        CHECK(c + c != D3(1, 1));
    }

    // when some: h + h == t, across all groups
    for (GroupId g : kAllGroups) {
        SampleStream str(11, static_cast<unsigned>(g));
        for (int i = 0; i < 200; ++i) {
            GroupElement t = sample_element(g, str);
            if (auto half = t.try_halve()) CHECK(*half + *half == t);
        }
    }
}

TEST_CASE("max_half: int agrees with brute-force enumeration on 1..200") {
    for (long lambda0 = 1; lambda0 <= 200; ++lambda0) {
        auto expected = brute_force_int_half_max(lambda0);
        auto got = max_half(Z(lambda0));
        REQUIRE(expected.has_value());
        REQUIRE(got.has_value());
        CHECK(got->int_value() == *expected);
    }
    CHECK(max_half(Z(5))->int_value() == 2);
}

TEST_CASE("max_half: exact halves for rational and dyadic") {
    CHECK(*max_half(Q(1, 1)) == Q(1, 2));
    CHECK(*max_half(D2(1, 0)) == D2(1, 1));
    SampleStream s(3, 1);
    for (int i = 0; i < 500; ++i) {
        for (GroupId g : {GroupId::Rational, GroupId::Dyadic}) {
            GroupElement l = sample_element(g, s).abs();
            if (l.is_zero()) continue;
            auto m = max_half(l);
            REQUIRE(m.has_value());
            CHECK(m->twice() == l);
        }
    }
}

TEST_CASE("max_half: triadic 1 has none; the chain t_k stays inside S and increases") {
    CHECK_FALSE(max_half(D3(1, 0)).has_value());
    // oracle: t_k = ((3^k - 1)/2) / 3^k for k = 1..20
    GroupElement lambda0 = D3(1, 0);
    std::optional<GroupElement> prev;
    for (unsigned k = 1; k <= 20; ++k) {
        BigInt num = (big_pow(3, k) - 1) / 2;
        GroupElement t = GroupElement::triadic(num, k);
        CHECK(t.sign() >= 0);
        CHECK(t.twice() <= lambda0);
        if (prev) CHECK(*prev < t);
        prev = t;
    }
}

TEST_CASE("max_half: lex-int (1,0) has none; (0,m) lies in S for every m") {
    CHECK_FALSE(max_half(LX(1, 0)).has_value());
    for (long m = 0; m <= 50; ++m) {
        GroupElement t = LX(0, m);
        CHECK(t.sign() >= 0);
        CHECK(t.twice() <= LX(1, 0));
    }
    CHECK(*max_half(LX(2, 5)) == LX(1, 2));
    CHECK(*max_half(LX(2, -5)) == LX(1, -3));  // floor on the second coordinate
    CHECK(*max_half(LX(0, 9)) == LX(0, 4));
}

TEST_CASE("max_half: zsqrt2 (0,1) has none; local improvement inside coefficient boxes") {
    GroupElement lambda0 = R2(0, 1);
    CHECK_FALSE(max_half(lambda0).has_value());

    auto in_S = [&](const GroupElement& t) {
        return t.sign() >= 0 && t.twice() <= lambda0;
    };
    // max of S over the |a|,|b| <= 50 box, then a strictly larger S-member in
    // the |a|,|b| <= 150 box; so nothing in the small box is a maximum of S.
    std::optional<GroupElement> small_max;
    for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b) {
            GroupElement t = R2(a, b);
            if (in_S(t) && (!small_max || t > *small_max)) small_max = t;
        }
    REQUIRE(small_max.has_value());
    std::optional<GroupElement> big_max;
    for (long a = -150; a <= 150; ++a)
        for (long b = -150; b <= 150; ++b) {
            GroupElement t = R2(a, b);
            if (in_S(t) && (!big_max || t > *big_max)) big_max = t;
        }
    REQUIRE(big_max.has_value());
    CHECK(*big_max > *small_max);

    CHECK(*max_half(R2(0, 2)) == R2(0, 1));
    CHECK_FALSE(max_half(R2(3, 2)).has_value());
}

TEST_CASE("max_half: precondition and soundness on samples") {
    CHECK_THROWS_AS((void)max_half(Z(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)max_half(Q(-1, 2)), std::invalid_argument);

    for (GroupId g : kAllGroups) {
        SampleStream s(23, static_cast<unsigned>(g));
        int used = 0;
        for (int i = 0; used < 100 && i < 2000; ++i) {
            GroupElement l = sample_element(g, s).abs();
            if (l.is_zero()) continue;
            ++used;
            auto m = max_half(l);
            if (!m) continue;
            CHECK(m->sign() >= 0);
            CHECK(m->twice() <= l);
            // sampled members of S never exceed the claimed maximum
            for (int j = 0; j < 10; ++j) {
                GroupElement c = sample_in_range(GroupElement::zero(g), l, s);
                if (c.twice() <= l) CHECK(c <= *m);
            }
        }
    }
}

TEST_CASE("codec: spec examples") {
    GroupElement t = parse_element(GroupId::Triadic, "6/3^2");
    CHECK(t == D3(2, 1));
    CHECK(format_element(t) == "2/3^1");

    CHECK(parse_element(GroupId::ZSqrt2, "2,-1") == R2(2, -1));
    CHECK_THROWS_AS((void)parse_element(GroupId::Rational, "3/0"), parse_error);

    try {
        (void)parse_element(GroupId::Rational, "3/0");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS((void)parse_element(GroupId::Int, "12x"), parse_error);
    CHECK_THROWS_AS((void)parse_element(GroupId::LexInt, "4"), parse_error);
    CHECK_THROWS_AS((void)parse_element(GroupId::Dyadic, "1/3^2"), parse_error);
}

TEST_CASE("codec: format/parse round-trip on sampled elements") {
    for (GroupId g : kAllGroups) {
        SampleStream s(31, static_cast<unsigned>(g));
        for (int i = 0; i < 500; ++i) {
            GroupElement v = sample_element(g, s);
            std::string text = format_element(v);
            CHECK(parse_element(g, text) == v);
            CHECK(format_element(parse_element(g, text)) == text);
        }
    }
}

TEST_CASE("order: trichotomy, antisymmetry, transitivity on samples") {
    for (GroupId g : kAllGroups) {
        SampleStream s(41, static_cast<unsigned>(g));
        for (int i = 0; i < 2000; ++i) {
            GroupElement u = sample_element(g, s), v = sample_element(g, s),
                         w = sample_element(g, s);
            int uv = ordering_to_int(u.compare(v));
            CHECK(ordering_to_int(v.compare(u)) == -uv);
            CHECK((uv == 0) == (u - v).is_zero());
            if (u <= v && v <= w) CHECK(u <= w);
        }
    }
}

TEST_CASE("order: translation invariance, 10^4 triples per group") {
    for (GroupId g : kAllGroups) {
        SampleStream s(43, static_cast<unsigned>(g));
        for (int i = 0; i < 10000; ++i) {
            GroupElement u = sample_element(g, s), v = sample_element(g, s),
                         w = sample_element(g, s);
            if (u <= v) CHECK(u + w <= v + w);
        }
    }
}

TEST_CASE("zsqrt2 order agrees with the rational sqrt2 sandwich on 10^4 pairs") {
    // the sandwich itself is exact: lp/lq < sqrt2 < up/uq
    Sqrt2Sandwich sw;
    CHECK(sw.lp * sw.lp < 2 * sw.lq * sw.lq);
    CHECK(sw.up * sw.up > 2 * sw.uq * sw.uq);
    CHECK(sw.lq > 1000000);
    CHECK(sw.uq > 1000000);

    SampleStream s(47, 0);
    for (int i = 0; i < 10000; ++i) {
        GroupElement u = sample_element(GroupId::ZSqrt2, s), v = sample_element(GroupId::ZSqrt2, s);
        GroupElement d = u - v;
        auto oracle = sandwich_sign(d.coeff_unit(), d.coeff_sqrt2());
        REQUIRE(oracle.has_value());
        CHECK(ordering_to_int(u.compare(v)) == *oracle);
    }
}

TEST_CASE("sampling: sample_in_range respects bounds and is deterministic") {
    for (GroupId g : kAllGroups) {
        GroupElement lo = GroupElement::zero(g);
        GroupElement hi = GroupElement::from_int(g, 7);
        SampleStream s1(13, 5), s2(13, 5);
        for (int i = 0; i < 300; ++i) {
            GroupElement a = sample_in_range(lo, hi, s1);
            GroupElement b = sample_in_range(lo, hi, s2);
            CHECK(a == b);
            CHECK(lo <= a);
            CHECK(a <= hi);
        }
    }
}
