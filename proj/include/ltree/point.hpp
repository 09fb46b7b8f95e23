#pragma once

#include <variant>

#include "ltree/group.hpp"

namespace ltree {

struct IntervalPoint {
    GroupElement value;
    bool operator==(const IntervalPoint&) const = default;
};

/// Position on a tree edge, measured from the edge's designated `from`
/// vertex. Vertex positions are canonicalized by the owning space.
struct TreePoint {
    int edge = 0;
    GroupElement offset;
    bool operator==(const TreePoint&) const = default;
};

/// Branch-point coordinates: x in I = { t : 0 <= 2t <= lambda0 }, branch 1..3.
struct X1Point {
    GroupElement x;
    int branch = 1;
    bool operator==(const X1Point&) const = default;
};

/// Polar pair (radius, angle), 0 < radius <= 2, 0 <= angle <= 1.
struct X2Point {
    GroupElement radius;
    GroupElement angle;
    bool operator==(const X2Point&) const = default;
};

/// Circle representative in [0, 3a).
struct X3Point {
    GroupElement pos;
    bool operator==(const X3Point&) const = default;
};

struct GridPoint {
    GroupElement u;
    GroupElement w;
    bool operator==(const GridPoint&) const = default;
};

using Point = std::variant<IntervalPoint, TreePoint, X1Point, X2Point, X3Point, GridPoint>;

}  // namespace ltree
