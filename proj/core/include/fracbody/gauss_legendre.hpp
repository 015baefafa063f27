#pragma once

#include <cstddef>
#include <vector>

namespace fracbody {

/// Nodes and weights of an m-point Gauss-Legendre rule on [-1, 1].
/// Nodes are exactly antisymmetric (node[m-1-k] == -node[k]) with matching
/// weights; this symmetry is relied on by the box and sphere grids.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence; results are cached per m.
const GaussLegendre& gauss_legendre(int m);

/// Rule mapped to [a, b].
GaussLegendre gauss_legendre_on(int m, double a, double b);

}  // namespace fracbody
