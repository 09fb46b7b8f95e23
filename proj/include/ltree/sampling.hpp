#pragma once

#include "ltree/group.hpp"
#include "ltree/rng.hpp"

namespace ltree {

/// Sampling distribution knobs. Numerators are uniform within the bound
/// (3^6 for triadic, 2^8 elsewhere by default); denominator exponents are
/// geometric so that deep denominators, where half-maximum effects live,
/// show up regularly.
struct SampleBounds {
    long numerator_bound = 256;
    long triadic_numerator_bound = 729;
    unsigned exponent_mean = 3;
};

/// An unconstrained element of the group.
GroupElement sample_element(GroupId g, SampleStream& s, const SampleBounds& b = {});

/// An element of [lo, hi] (inclusive), lo <= hi required. Exact; distribution
/// is uniform on a randomly chosen denominator grid.
GroupElement sample_in_range(const GroupElement& lo, const GroupElement& hi, SampleStream& s,
                             const SampleBounds& b = {});

}  // namespace ltree
