#include "ltree/checker.hpp"

#include <array>

#include "ltree/spaces.hpp"

namespace ltree {

namespace {

std::vector<Point> capped_landmarks(const Space& space, std::size_t cap = 5) {
    auto marks = space.landmarks();
    if (marks.size() > cap) marks.resize(cap);
    return marks;
}

/// Deterministic tuple stream: every landmark tuple first (so the canonical
/// counterexamples are found reproducibly, independent of the seed), then
/// cfg.samples random tuples. Tuple i draws only from SampleStream(seed, i).
class TupleSource {
public:
    TupleSource(SpacePtr space, const CheckConfig& cfg, int arity)
        : space_(std::move(space)), arity_(arity), samples_(cfg.samples),
          marks_(capped_landmarks(*space_)) {
        probes_ = 1;
        for (int i = 0; i < arity_; ++i) probes_ *= static_cast<long>(marks_.size());
    }

    long probe_count() const { return probes_; }
    long total() const { return probes_ + samples_; }

    std::vector<Point> get(long i, SampleStream& s) const {
        std::vector<Point> out(arity_);
        if (i < probes_) {
            long code = i;
            for (int k = arity_ - 1; k >= 0; --k) {
                out[k] = marks_[code % marks_.size()];
                code /= static_cast<long>(marks_.size());
            }
        } else {
            for (int k = 0; k < arity_; ++k) out[k] = space_->sample_point(s);
        }
        return out;
    }

private:
    SpacePtr space_;
    int arity_;
    long samples_;
    std::vector<Point> marks_;
    long probes_ = 0;
};

CheckReport base_report(const char* name, const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport r;
    r.name = name;
    r.seed = cfg.seed;
    if (space) {
        r.space_desc = space->describe();
        r.group = std::string(group_name(space->group()));
        r.space = space;
    }
    return r;
}

Witness make_witness(std::string relation,
                     std::vector<std::pair<std::string, Point>> points,
                     std::vector<std::pair<std::string, GroupElement>> values) {
    Witness w;
    w.relation = std::move(relation);
    w.points = std::move(points);
    w.values = std::move(values);
    return w;
}

std::pair<BigInt, BigInt> zsqrt2_mul(const std::pair<BigInt, BigInt>& a,
                                     const std::pair<BigInt, BigInt>& b) {
    return {a.first * b.first + 2 * a.second * b.second,
            a.first * b.second + a.second * b.first};
}

}  // namespace

WitnessChain no_max_witness_above(const GroupElement& lambda0, const GroupElement& lower,
                                  int depth) {
    if (depth < 1) throw std::invalid_argument("no_max_witness: depth must be >= 1");
    if (auto m = max_half(lambda0))
        throw std::invalid_argument("maximum exists: " + format_element(*m));

    WitnessChain chain{lambda0, {}};
    chain.elements.reserve(depth);
    switch (lambda0.group()) {
        case GroupId::Triadic: {
            // t_k = (p*3^k - 1)/2 / 3^(m+k): doubled it is lambda0 - 3^-(m+k)
            const BigInt& p = lambda0.num();
            unsigned m = lambda0.exponent();
            for (unsigned k = 1; static_cast<int>(chain.elements.size()) < depth; ++k) {
                BigInt num = (p * big_pow(3, k) - 1) / 2;
                GroupElement t = GroupElement::triadic(std::move(num), m + k);
                if (t < lower) continue;
                chain.elements.push_back(std::move(t));
            }
            break;
        }
        case GroupId::ZSqrt2: {
            // t = (lambda0 - eps)/2 for positive eps -> 0 with the parity of
            // lambda0; powers of sqrt2 - 1 supply the eps values
            bool a_even = (lambda0.coeff_unit() & 1) == 0;
            bool b_even = (lambda0.coeff_sqrt2() & 1) == 0;
            std::pair<BigInt, BigInt> eps =
                a_even ? std::pair<BigInt, BigInt>{2, -1}            // parity (0,1): 2 - sqrt2
                : b_even ? std::pair<BigInt, BigInt>{3, -2}          // parity (1,0): (sqrt2-1)^2
                         : std::pair<BigInt, BigInt>{-1, 1};         // parity (1,1): sqrt2 - 1
            const std::pair<BigInt, BigInt> mu{3, -2};  // parity-preserving shrink factor
            auto as_element = [](const std::pair<BigInt, BigInt>& e) {
                return GroupElement::zsqrt2(e.first, e.second);
            };
            while (lambda0 < as_element(eps)) eps = zsqrt2_mul(eps, mu);
            while (static_cast<int>(chain.elements.size()) < depth) {
                auto t = (lambda0 - as_element(eps)).try_halve();
                if (!t) throw std::logic_error("no_max_witness: parity mismatch");
                if (!(*t < lower)) chain.elements.push_back(std::move(*t));
                eps = zsqrt2_mul(eps, mu);
            }
            break;
        }
        case GroupId::LexInt: {
            // (c, m), (c, m+1), ... with c = (x-1)/2: doubled stays below (x, y)
            BigInt c = (lambda0.lex_first() - 1) / 2;
            BigInt m0 = 0;
            if (lower.lex_first() == c) m0 = lower.lex_second();
            if (c == 0 && m0 < 0) m0 = 0;
            for (int j = 0; j < depth; ++j) chain.elements.push_back(GroupElement::lex_int(c, m0 + j));
            break;
        }
        default:
            throw std::logic_error("no_max_witness: unreachable group");
    }
    return chain;
}

WitnessChain no_max_witness(const GroupElement& lambda0, int depth) {
    return no_max_witness_above(lambda0, GroupElement::zero(lambda0.group()), depth);
}

Axiom3Data axiom3_construct(const Space& space, const Point& x, const Point& y_in,
                            const Point& z_in) {
    Axiom3Data d;
    d.x = x;
    d.y = y_in;
    d.z = z_in;
    d.a = space.distance(x, d.y);
    d.b = space.distance(x, d.z);
    if (d.b < d.a) {
        std::swap(d.y, d.z);
        std::swap(d.a, d.b);
    }
    Segment sprime = space.geodesic(x, d.z);
    d.ztilde = sprime.eval(d.a);
    d.d_y_ztilde = space.distance(d.y, d.ztilde);

    GroupElement zero = GroupElement::zero(space.group());
    if (d.d_y_ztilde.is_zero()) {
        d.have_half = true;
        d.r = zero;
        d.ell = zero;
    } else if (auto m = max_half(d.d_y_ztilde)) {
        d.have_half = true;
        d.r = *m;
        d.ell = d.d_y_ztilde - d.r;
    }
    if (d.have_half) {
        d.identities_ok = !(d.ell < d.r) && !(d.a < d.ell);
        Segment s = space.geodesic(x, d.y);
        d.yprime = s.eval(d.a - d.ell);
        d.zprime = sprime.eval(d.a - d.ell);
        d.yz_equal = d.yprime == d.zprime;
    }
    return d;
}

CheckReport check_metric(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("metric", space, cfg);
    TupleSource ts(space, cfg, 3);
    for (long i = 0; i < ts.total(); ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point &p = t[0], &q = t[1], &r = t[2];
        rep.samples_run = i + 1;

        GroupElement dpq = space->distance(p, q);
        GroupElement dqp = space->distance(q, p);
        GroupElement dqr = space->distance(q, r);
        GroupElement dpr = space->distance(p, r);

        if (dpq.is_zero() != (p == q) || dpq.sign() < 0) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness("positive-definiteness", {{"p", p}, {"q", q}, {"r", r}},
                                       {{"d(p,q)", dpq}});
            return rep;
        }
        if (!(dpq == dqp)) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness("symmetry", {{"p", p}, {"q", q}, {"r", r}},
                                       {{"d(p,q)", dpq}, {"d(q,p)", dqp}});
            return rep;
        }
        if (dpq + dqr < dpr) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness(
                "triangle-inequality", {{"p", p}, {"q", q}, {"r", r}},
                {{"d(p,r)", dpr}, {"d(p,q)", dpq}, {"d(q,r)", dqr}});
            return rep;
        }
    }
    return rep;
}

CheckReport check_axiom1(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("axiom1", space, cfg);
    TupleSource ts(space, cfg, 2);
    GroupElement zero = GroupElement::zero(space->group());
    for (long i = 0; i < ts.total(); ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point &p = t[0], &q = t[1];
        rep.samples_run = i + 1;

        GroupElement dist = space->distance(p, q);
        Segment seg = space->geodesic(p, q);
        auto fail = [&](const char* relation, std::vector<std::pair<std::string, GroupElement>> vals) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness(relation, {{"p", p}, {"q", q}}, std::move(vals));
        };
        if (!(seg.length() == dist)) {
            fail("segment-length", {{"d(p,q)", dist}, {"length", seg.length()}});
            return rep;
        }
        if (!(seg.eval(zero) == p)) {
            fail("endpoint-start", {});
            return rep;
        }
        if (!(seg.eval(seg.length()) == q)) {
            fail("endpoint-end", {});
            return rep;
        }
        for (int k = 0; k < 4; ++k) {
            GroupElement t1 = sample_in_range(zero, seg.length(), stream);
            GroupElement t2 = sample_in_range(zero, seg.length(), stream);
            GroupElement along = (t2 - t1).abs();
            GroupElement between = space->distance(seg.eval(t1), seg.eval(t2));
            if (!(between == along)) {
                fail("segment-isometry",
                     {{"t", t1}, {"t'", t2}, {"|t-t'|", along}, {"d(eval t, eval t')", between}});
                return rep;
            }
        }
    }
    return rep;
}

CheckReport check_axiom2(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("axiom2", space, cfg);
    TupleSource ts(space, cfg, 3);
    long candidates = 0;
    long limit = ts.probe_count() + 100 * cfg.samples + 100;
    for (long i = 0; i < limit && candidates < cfg.samples; ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point &p = t[0], &q = t[1], &r = t[2];

        Segment s1 = space->geodesic(p, q);
        Segment s2 = space->geodesic(q, r);
        Intersection meet = space->intersect_at(s1, s2, q);
        if (meet.kind != Intersection::Kind::SegmentSet || !(meet.reach == q))
            continue;  // segments share more than the one endpoint
        ++candidates;
        rep.samples_run = candidates;

        if (!concat(s1, s2).has_value()) {
            GroupElement dpr = space->distance(p, r);
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness("union-not-segment", {{"p", p}, {"q", q}, {"r", r}},
                                       {{"|s1|", s1.length()},
                                        {"|s2|", s2.length()},
                                        {"|s1|+|s2|", s1.length() + s2.length()},
                                        {"d(p,r)", dpr}});
            return rep;
        }
    }
    if (candidates < cfg.samples)
        rep.note = "constructed " + std::to_string(candidates) + " candidate pairs";
    return rep;
}

CheckReport check_axiom3(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("axiom3", space, cfg);
    TupleSource ts(space, cfg, 3);
    for (long i = 0; i < ts.total(); ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point& x = t[0];
        rep.samples_run = i + 1;

        Axiom3Data data = axiom3_construct(*space, x, t[1], t[2]);
        auto points = [&] {
            return std::vector<std::pair<std::string, Point>>{
                {"x", x}, {"y", data.y}, {"z", data.z}};
        };
        if (!data.identities_ok) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness("construction-identity", points(),
                                       {{"a", data.a},
                                        {"b", data.b},
                                        {"d(y,ztilde)", data.d_y_ztilde},
                                        {"r", data.r},
                                        {"ell", data.ell}});
            return rep;
        }

        Segment s = space->geodesic(x, data.y);
        Segment sprime = space->geodesic(x, data.z);
        Intersection meet = space->intersect_at(s, sprime, x);

        if (meet.kind == Intersection::Kind::NoMax) {
            rep.status = CheckReport::Status::Fail;
            Witness w = make_witness("intersection-no-maximum", points(),
                                     {{"lower", meet.no_max->lower}});
            if (auto* x1 = dynamic_cast<const X1Space*>(space.get()))
                w.chain = no_max_witness_above(x1->lambda0(), meet.no_max->lower,
                                               cfg.chain_depth);
            rep.witness = std::move(w);
            return rep;
        }
        if (meet.kind == Intersection::Kind::DisjointBeyond) {
            rep.status = CheckReport::Status::Fail;
            auto pts = points();
            pts.push_back({"stray", *meet.stray});
            rep.witness = make_witness("intersection-disconnected", std::move(pts), {});
            return rep;
        }
        // the constructive route pins the intersection to [x, y'] whenever the
        // half-maximum exists and y' = z' (y' = z' itself needs axiom 2, so a
        // mismatch there is not an axiom-3 violation)
        if (data.have_half && data.yz_equal && !(meet.reach == data.yprime)) {
            rep.status = CheckReport::Status::Fail;
            auto pts = points();
            pts.push_back({"y'", data.yprime});
            pts.push_back({"reach", meet.reach});
            rep.witness = make_witness("construction-mismatch", std::move(pts),
                                       {{"r", data.r}, {"ell", data.ell}});
            return rep;
        }
    }
    return rep;
}

CheckReport check_unique(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("unique", space, cfg);
    TupleSource ts(space, cfg, 3);
    for (long i = 0; i < ts.total(); ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point &p = t[0], &q = t[1], &m = t[2];
        rep.samples_run = i + 1;

        Segment seg = space->geodesic(p, q);
        if (seg.contains(m)) continue;
        GroupElement direct = seg.length();
        GroupElement via = space->distance(p, m) + space->distance(m, q);
        if (!(direct < via)) {
            rep.status = CheckReport::Status::Fail;
            rep.witness = make_witness("off-segment-equality", {{"p", p}, {"q", q}, {"m", m}},
                                       {{"d(p,q)", direct},
                                        {"d(p,m)", space->distance(p, m)},
                                        {"d(m,q)", space->distance(m, q)}});
            return rep;
        }
    }
    return rep;
}

CheckReport check_fork(const SpacePtr& space, const CheckConfig& cfg) {
    CheckReport rep = base_report("fork", space, cfg);
    CheckReport uniq = check_unique(space, cfg);
    if (!uniq.passed()) {
        rep.status = CheckReport::Status::Skip;
        rep.note = "precondition failed: space is not uniquely geodesic under this seed";
        return rep;
    }

    GroupElement zero = GroupElement::zero(space->group());
    TupleSource ts(space, cfg, 3);
    for (long i = 0; i < ts.total(); ++i) {
        SampleStream stream(cfg.seed, i);
        auto t = ts.get(i, stream);
        const Point &x = t[0], &y = t[1], &p = t[2];
        rep.samples_run = i + 1;

        Segment s = space->geodesic(x, y);
        std::array<GroupElement, 3> params = {zero, s.length(),
                                              sample_in_range(zero, s.length(), stream)};
        for (const auto& tz : params) {
            Point z = s.eval(tz);
            Segment sxz = space->geodesic(x, z);
            Segment syz = space->geodesic(y, z);
            Segment szp = space->geodesic(z, p);
            Intersection ix = space->intersect_at(sxz, szp, z);
            Intersection iy = space->intersect_at(syz, szp, z);
            auto is_point = [&](const Intersection& meet) {
                return meet.kind == Intersection::Kind::SegmentSet && meet.reach == z;
            };
            if (!is_point(ix) && !is_point(iy)) {
                rep.status = CheckReport::Status::Fail;
                std::vector<std::pair<std::string, Point>> pts = {
                    {"x", x}, {"y", y}, {"z", z}, {"p", p}};
                if (ix.kind == Intersection::Kind::SegmentSet) pts.push_back({"x'", ix.reach});
                if (iy.kind == Intersection::Kind::SegmentSet) pts.push_back({"y'", iy.reach});
                rep.witness = make_witness("double-fork", std::move(pts), {});
                return rep;
            }
        }
    }
    return rep;
}

CheckReport condition_a_probe(GroupId group, const CheckConfig& cfg) {
    CheckReport rep;
    rep.name = "condition-a";
    rep.group = std::string(group_name(group));
    rep.seed = cfg.seed;
    for (long i = 0; i < cfg.samples; ++i) {
        SampleStream stream(cfg.seed, i);
        GroupElement lambda0 = GroupElement::zero(group);
        while (lambda0.is_zero()) lambda0 = sample_element(group, stream).abs();
        rep.samples_run = i + 1;
        if (!max_half(lambda0).has_value()) {
            rep.status = CheckReport::Status::Fail;
            Witness w = make_witness("no-half-maximum", {}, {{"lambda0", lambda0}});
            w.chain = no_max_witness(lambda0, cfg.chain_depth);
            rep.witness = std::move(w);
            return rep;
        }
    }
    return rep;
}

}  // namespace ltree
