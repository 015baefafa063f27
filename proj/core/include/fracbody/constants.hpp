#pragma once

namespace fracbody {

/// Volume of the n-dimensional unit ball, pi^(n/2) / Gamma(n/2 + 1).
double omega_n(int n);

/// Surface area of S^(n-1): 2, 2*pi, 4*pi for n = 1, 2, 3 (equals n*omega_n).
double sphere_area(int n);

/// p-th absolute moment of a sphere direction against a fixed unit vector,
/// integral over S^(n-1) of |<xi, eta>|^p. Rotation invariance makes the
/// choice of eta immaterial; computed by spherical quadrature at `level`
/// (n = 1 is the two-point sphere, value 2 for every p).
double alpha_np(int n, double p, int level = 64);

/// Same moment against an explicit reference direction (unit vector).
double alpha_np_against(int n, double p, const double* eta, int level = 64);

}  // namespace fracbody
