#pragma once

/**
 * Exact-rational evaluation of Gamma_a, q_a and pi_{a,n} for rational alpha.
 * Backs the floating-point path in tests so numerical error and logic error
 * stay separable; practical up to n of a few dozen (numerators grow fast).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "core/planar_tree.hpp"

namespace fordalpha {

using Rational = boost::multiprecision::cpp_rational;

Rational gamma_alpha_rational(std::int64_t n, const Rational& alpha);
Rational q_alpha_rational(std::int64_t n1, std::int64_t n2, const Rational& alpha);
Rational exact_pi_rational(const PlanarTree& tree, const Rational& alpha);
Rational mu_mass_rational(const PlanarTree& tree, const Rational& alpha);

double to_double(const Rational& r);

}  // namespace fordalpha
