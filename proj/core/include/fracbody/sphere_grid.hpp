#pragma once

#include "fracbody/vec.hpp"

#include <cstddef>
#include <vector>

namespace fracbody {

/// Quadrature nodes and weights on S^(n-1), shared by every body of a run.
///
/// Construction guarantees:
///   - sum of weights = surface area (2, 2*pi, 4*pi for n = 1, 2, 3)
///   - every node has unit norm
///   - the node set is closed under negation with equal weights; mate[i]
///     is the index of -node[i]
struct SphereGrid {
    int n = 0;
    int level = 0;
    std::vector<Vec> nodes;
    std::vector<double> weights;
    std::vector<std::size_t> mate;  ///< antipodal partner index

    std::size_t size() const { return nodes.size(); }

    /// Quadrature sum of g over the sphere.
    template <typename G>
    double integrate(G&& g) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
        return sum;
    }
};

/// n = 1: the two-point sphere {+1, -1}, weights 1.
/// n = 2: 4*level uniform angles, uniform (trapezoid) weights.
/// n = 3: product rule, 2*level Gauss-Legendre points in cos(theta) times
///        4*level uniform azimuths, exactly symmetrized.
SphereGrid sphere_grid(int n, int level);

}  // namespace fracbody
