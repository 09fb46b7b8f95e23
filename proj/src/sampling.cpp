#include "ltree/sampling.hpp"

namespace ltree {

namespace {

// ceil / floor of (num/den) * base^k as integers, den > 0.
BigInt ceil_scaled(const BigInt& num, const BigInt& den, const BigInt& scale) {
    return ceil_div(num * scale, den);
}
BigInt floor_scaled(const BigInt& num, const BigInt& den, const BigInt& scale) {
    return floor_div(num * scale, den);
}

GroupElement sample_power_grid(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                               const SampleBounds& b, int base) {
    // Pick a grid 1/base^k, refine until it meets [lo, hi].
    unsigned k = s.next_geometric(b.exponent_mean);
    const BigInt lo_num = lo.num(), hi_num = hi.num();
    const BigInt lo_den = big_pow(base, lo.exponent()), hi_den = big_pow(base, hi.exponent());
    for (;; ++k) {
        BigInt scale = big_pow(base, k);
        BigInt nmin = ceil_scaled(lo_num, lo_den, scale);
        BigInt nmax = floor_scaled(hi_num, hi_den, scale);
        if (nmin > nmax) continue;  // grid too coarse for this interval
        BigInt n = s.next_int(nmin, nmax);
        return base == 2 ? GroupElement::dyadic(n, k) : GroupElement::triadic(n, k);
    }
}

GroupElement sample_rational_range(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                                   const SampleBounds& b) {
    BigInt q = s.next_int(1, b.numerator_bound);
    for (;; q *= 2) {
        BigInt nmin = ceil_scaled(lo.num(), lo.den(), q);
        BigInt nmax = floor_scaled(hi.num(), hi.den(), q);
        if (nmin > nmax) continue;
        return GroupElement::rational(s.next_int(nmin, nmax), q);
    }
}

GroupElement sample_zsqrt2_range(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                                 const SampleBounds& b) {
    // Fix the sqrt2 coefficient, then solve the integer range for the unit
    // coefficient: lo <= a + c*sqrt2 <= hi.
    const BigInt bound = b.numerator_bound;
    BigInt cmin = lo.coeff_sqrt2() - bound, cmax = hi.coeff_sqrt2() + bound;
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigInt c = s.next_int(cmin, cmax);
        BigInt amin = lo.coeff_unit() + ceil_sqrt2_multiple(lo.coeff_sqrt2() - c);
        BigInt amax = hi.coeff_unit() + floor_sqrt2_multiple(hi.coeff_sqrt2() - c);
        if (amin > amax) continue;  // no lattice point at this coefficient
        return GroupElement::zsqrt2(s.next_int(amin, amax), c);
    }
    return lo;
}

GroupElement sample_lex_range(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                              const SampleBounds& b) {
    const BigInt bound = b.numerator_bound;
    const BigInt &lx = lo.lex_first(), &ly = lo.lex_second();
    const BigInt &hx = hi.lex_first(), &hy = hi.lex_second();
    if (lx == hx) return GroupElement::lex_int(lx, s.next_int(ly, hy));
    BigInt x = s.next_int(lx, hx);
    if (x == lx) return GroupElement::lex_int(x, ly + s.next_int(0, bound));
    if (x == hx) return GroupElement::lex_int(x, hy - s.next_int(0, bound));
    return GroupElement::lex_int(x, s.next_int(-bound, bound));
}

}  // namespace

GroupElement sample_element(GroupId g, SampleStream& s, const SampleBounds& b) {
    const BigInt n = b.numerator_bound;
    switch (g) {
        case GroupId::Int:
            return GroupElement::integer(s.next_int(-n, n));
        case GroupId::Rational:
            return GroupElement::rational(s.next_int(-n, n), s.next_int(1, n));
        case GroupId::Dyadic:
            return GroupElement::dyadic(s.next_int(-n, n), s.next_geometric(b.exponent_mean));
        case GroupId::Triadic: {
            const BigInt t = b.triadic_numerator_bound;
            return GroupElement::triadic(s.next_int(-t, t), s.next_geometric(b.exponent_mean));
        }
        case GroupId::ZSqrt2:
            return GroupElement::zsqrt2(s.next_int(-n, n), s.next_int(-n, n));
        case GroupId::LexInt:
            return GroupElement::lex_int(s.next_int(-n, n), s.next_int(-n, n));
    }
    throw std::logic_error("unknown group");
}

GroupElement sample_in_range(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                             const SampleBounds& b) {
    if (lo.group() != hi.group()) throw std::domain_error("sample_in_range: mixed groups");
    if (lo > hi) throw std::invalid_argument("sample_in_range: lo > hi");
    if (lo == hi) return lo;
    switch (lo.group()) {
        case GroupId::Int:
            return GroupElement::integer(s.next_int(lo.int_value(), hi.int_value()));
        case GroupId::Rational:
            return sample_rational_range(lo, hi, s, b);
        case GroupId::Dyadic:
            return sample_power_grid(lo, hi, s, b, 2);
        case GroupId::Triadic:
            return sample_power_grid(lo, hi, s, b, 3);
        case GroupId::ZSqrt2:
            return sample_zsqrt2_range(lo, hi, s, b);
        case GroupId::LexInt:
            return sample_lex_range(lo, hi, s, b);
    }
    throw std::logic_error("unknown group");
}

}  // namespace ltree
