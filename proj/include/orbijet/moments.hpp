#pragma once

#include "orbijet/rational.hpp"

#include <vector>

namespace orbijet::moments {

// Exponent vector (p_1,...,p_k), all entries >= 0.
using MultiIndex = std::vector<long>;

// Moment of x_1^{p_1}...x_k^{p_k} against the weighted simplex measure
// with density proportional to (x_1...x_k)^{r-1}:
//   (kr-1)!/(r-1)!^k * prod_s (p_s+r-1)! / (|p|+kr-1)!
Rational simplex_moment(const MultiIndex& p, int k, int r);

// Integral of |u_1|^{2p} over the unit sphere of C^r (invariant
// probability measure): p!(r-1)!/(p+r-1)!
Rational sphere_power_moment(long p, int r);

// Integral of |u_1|^2...|u_p|^2 over the unit sphere of C^r, valid for
// p <= r: (r-1)!/(p+r-1)!
Rational sphere_product_moment(long p, int r);

// Total mass of the fiber volume form on the weighted projective fiber:
// 1/(k!)^r.
Rational fiber_volume(int k, int r);

// Normalized trace weight of the averaged jet curvature:
// (1/(kr)) * (1 + 1/2 + ... + 1/k).
Rational harmonic_weight(int k, int r);

// Leading coefficient of the asymptotic section count for order-k jets
// of weighted degree m: m^{n+kr-1}/(n+kr-1)! * (log k)^n / (n! k!^r).
// Float-only (log k is irrational); double precision. Requires k >= 2
// and m >= 1.
double gg_prefactor(int n, int r, int k, long m);

}  // namespace orbijet::moments
