#include "core/rational_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace fordalpha {

namespace {

Rational factorial_rational(std::int64_t n) {
  Rational f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Rational gamma_alpha_rational(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("gamma_alpha_rational: n must be >= 1");
  Rational g = 1;
  for (std::int64_t k = 1; k < n; ++k) g *= (Rational(k) - alpha);
  return g;
}

Rational q_alpha_rational(std::int64_t n1, std::int64_t n2, const Rational& alpha) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("q_alpha_rational: subtree sizes must be >= 1");
  const std::int64_t n = n1 + n2;
  const Rational bracket = alpha / 2 + (Rational(1) - 2 * alpha) * n1 * n2 /
                                           (Rational(n) * (n - 1));
  return factorial_rational(n) * gamma_alpha_rational(n1, alpha) *
         gamma_alpha_rational(n2, alpha) /
         (factorial_rational(n1) * factorial_rational(n2) *
          gamma_alpha_rational(n, alpha)) *
         bracket;
}

Rational exact_pi_rational(const PlanarTree& tree, const Rational& alpha) {
  const auto& nodes = tree.nodes();
  std::vector<std::int64_t> leaves(nodes.size());
  for (std::size_t i = nodes.size(); i-- > 0;) {
    leaves[i] = nodes[i].is_leaf()
                    ? 1
                    : leaves[static_cast<std::size_t>(nodes[i].left)] +
                          leaves[static_cast<std::size_t>(nodes[i].right)];
  }
  Rational pi = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) continue;
    pi *= q_alpha_rational(leaves[static_cast<std::size_t>(nodes[i].left)],
                           leaves[static_cast<std::size_t>(nodes[i].right)], alpha);
  }
  return pi;
}

Rational mu_mass_rational(const PlanarTree& tree, const Rational& alpha) {
  const std::int64_t m = tree.leaf_count();
  return alpha * gamma_alpha_rational(m, alpha) / factorial_rational(m) *
         exact_pi_rational(tree, alpha);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace fordalpha
