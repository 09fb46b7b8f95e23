#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltree/space.hpp"

namespace ltree {

struct CheckConfig {
    std::uint64_t seed = 0;
    long samples = 1000;
    int chain_depth = 20;
};

/// Strictly increasing elements of S = { t : 0 <= 2t <= lambda0 },
/// certifying that S has no maximum.
struct WitnessChain {
    GroupElement lambda0;
    std::vector<GroupElement> elements;
};

/// Structured counterexample. Typed points and values so a failing relation
/// can be re-evaluated exactly; formatting happens at report time.
struct Witness {
    std::string relation;
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, GroupElement>> values;
    std::optional<WitnessChain> chain;
};

struct CheckReport {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    std::string space_desc;  // empty for group-level checks
    std::string group;
    Status status = Status::Pass;
    std::string note;  // set when skipped
    long samples_run = 0;
    std::uint64_t seed = 0;
    std::optional<Witness> witness;
    SpacePtr space;  // nullptr for group-level checks

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

// Seeded suites. A pass means no counterexample in the probed and sampled
// tuples; a fail carries a certificate that re-verifies exactly.
CheckReport check_metric(const SpacePtr& space, const CheckConfig& cfg);
CheckReport check_axiom1(const SpacePtr& space, const CheckConfig& cfg);
CheckReport check_axiom2(const SpacePtr& space, const CheckConfig& cfg);
CheckReport check_axiom3(const SpacePtr& space, const CheckConfig& cfg);
CheckReport check_unique(const SpacePtr& space, const CheckConfig& cfg);
CheckReport check_fork(const SpacePtr& space, const CheckConfig& cfg);
CheckReport condition_a_probe(GroupId group, const CheckConfig& cfg);

/// Chain of `depth` elements, strictly increasing inside S. Requires
/// max_half(lambda0) = none; otherwise throws naming the maximum.
WitnessChain no_max_witness(const GroupElement& lambda0, int depth);

/// Same, restricted to { t in S : t >= lower }.
WitnessChain no_max_witness_above(const GroupElement& lambda0, const GroupElement& lower,
                                  int depth);

/// One run of the intersection construction for segments [x,y], [x,z]
/// (inputs swapped internally so that d(x,y) <= d(x,z)). Exposed so tests can
/// verify its internal identities directly.
struct Axiom3Data {
    Point x, y, z;  // post-swap
    GroupElement a, b, d_y_ztilde;
    Point ztilde;
    bool have_half = false;  // the half set of d(y, ztilde) has a maximum
    GroupElement r, ell;     // valid when have_half
    Point yprime, zprime;    // valid when have_half
    bool identities_ok = true;  // ell >= r and ell <= a
    bool yz_equal = false;      // yprime == zprime (needs axiom 2 to be forced)
};
Axiom3Data axiom3_construct(const Space& space, const Point& x, const Point& y, const Point& z);

}  // namespace ltree
