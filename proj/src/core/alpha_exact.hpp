#pragma once

/**
 * Closed-form quantities of the alpha model.
 *
 * Gamma_a(n) = (n-1-a)(n-2-a)...(1-a), Gamma_a(1) = 1, kept in log domain so
 * n ~ 10^6 survives (the linear product overflows near n = 170).
 *
 * q_a(n1,n2) is the probability that an (n1+n2)-leaf tree splits into ordered
 * subtree sizes (n1, n2) at the vertex next to the root:
 *
 *   q_a(n1,n2) = n! G(n1) G(n2) / (n1! n2! G(n)) * (a/2 + (1-2a) n1 n2 / (n (n-1)))
 *
 * The leading ratio is evaluated through log-gamma, the bracket separately in
 * linear domain. pi_{a,n}(t) is the product of q over the branch
 * decomposition, and mu_a(t) = a G(|t|)/|t|! * pi_{a,|t|}(t) is the outgrowth
 * law of the infinite-volume limit, with size marginal p(m) = a G(m)/m!
 * obeying p(m+1)/p(m) = (m-a)/(m+1).
 */

#include <cstdint>
#include <map>
#include <string>

#include "core/planar_tree.hpp"

namespace fordalpha {

// Natural log of a nonnegative quantity; -inf encodes zero.
struct LogWeight {
  double log_value = 0.0;
  double value() const;
  static LogWeight from_value(double v);
  static LogWeight zero();
  bool is_zero() const;
};

// Growth steps accept 0 <= alpha <= 1; limit-measure quantities need
// alpha > 0 (with alpha = 0 infinitely many spines appear and no limit
// measure on single-spine trees exists).
void require_alpha_growth(double alpha);
void require_alpha_limit(double alpha);

LogWeight log_gamma_alpha(std::int64_t n, double alpha);
double gamma_alpha(std::int64_t n, double alpha);

double q_alpha(std::int64_t n1, std::int64_t n2, double alpha);

double log_exact_pi(const PlanarTree& tree, double alpha);
double exact_pi(const PlanarTree& tree, double alpha);

double mu_mass(const PlanarTree& tree, double alpha);
double mu_size_pmf(std::int64_t m, double alpha);
double mu_size_cumulative(std::int64_t m_max, double alpha);
double mu_size_tail(std::int64_t m_max, double alpha);

inline constexpr std::int64_t kDefaultOracleCap = 9;

// Forward dynamic programming over the grafting chain, from the unique
// two-leaf tree up to T_n; keys are canonical encodings. Independent of the
// q-product path, which is exactly what makes it an oracle for exact_pi.
// Refuses n above the cap (|T_n| is the (n-1)-st Catalan number).
std::map<std::string, double> growth_chain_distribution(
    std::int64_t n, double alpha, std::int64_t oracle_cap = kDefaultOracleCap);

}  // namespace fordalpha
