#include "core/alpha_exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace fordalpha {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double catalan_estimate(std::int64_t n) {
  // |T_n| = C(n-1) = (2n-2)! / ((n-1)! n!)
  return std::exp(std::lgamma(2.0 * n - 1.0) - std::lgamma(static_cast<double>(n)) -
                  std::lgamma(n + 1.0));
}

}  // namespace

double LogWeight::value() const { return std::exp(log_value); }

LogWeight LogWeight::from_value(double v) {
  if (v < 0.0) throw std::invalid_argument("LogWeight: negative value");
  return LogWeight{std::log(v)};
}

LogWeight LogWeight::zero() { return LogWeight{kNegInf}; }

bool LogWeight::is_zero() const { return log_value == kNegInf; }

void require_alpha_growth(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

void require_alpha_limit(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument(
        "alpha must lie in (0, 1]: the infinite-volume limit requires alpha > 0 "
        "(at alpha = 0 infinitely many spines appear)");
}

LogWeight log_gamma_alpha(std::int64_t n, double alpha) {
  require_alpha_growth(alpha);
  if (n < 1) throw std::invalid_argument("gamma_alpha: n must be >= 1");
  if (n == 1) return LogWeight{0.0};
  if (alpha == 1.0) return LogWeight::zero();  // the (1 - alpha) factor
  // (n-1-a)...(1-a) = Gamma(n-a) / Gamma(1-a)
  return LogWeight{std::lgamma(static_cast<double>(n) - alpha) - std::lgamma(1.0 - alpha)};
}

double gamma_alpha(std::int64_t n, double alpha) { return log_gamma_alpha(n, alpha).value(); }

double q_alpha(std::int64_t n1, std::int64_t n2, double alpha) {
  require_alpha_growth(alpha);
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("q_alpha: subtree sizes must be >= 1");
  const std::int64_t n = n1 + n2;
  if (n < 2) throw std::invalid_argument("q_alpha: total size must be >= 2");
  if (n == 2) return 1.0;  // the unique split of the two-leaf tree
  if (alpha == 1.0) {
    // Mass concentrates on combs: only splits peeling off one leaf survive.
    return (n1 == 1 || n2 == 1) ? 0.5 : 0.0;
  }
  const double dn = static_cast<double>(n);
  const double bracket =
      alpha / 2.0 + (1.0 - 2.0 * alpha) * static_cast<double>(n1) *
                        static_cast<double>(n2) / (dn * (dn - 1.0));
  const double log_ratio = std::lgamma(dn + 1.0) - std::lgamma(n1 + 1.0) -
                           std::lgamma(n2 + 1.0) + log_gamma_alpha(n1, alpha).log_value +
                           log_gamma_alpha(n2, alpha).log_value -
                           log_gamma_alpha(n, alpha).log_value;
  return std::exp(log_ratio) * bracket;
}

double log_exact_pi(const PlanarTree& tree, double alpha) {
  require_alpha_growth(alpha);
  const auto& nodes = tree.nodes();
  // Preorder guarantees children come after their parent, so one reverse
  // sweep fills subtree leaf counts.
  std::vector<std::int64_t> leaves(nodes.size());
  for (std::size_t i = nodes.size(); i-- > 0;) {
    leaves[i] = nodes[i].is_leaf()
                    ? 1
                    : leaves[static_cast<std::size_t>(nodes[i].left)] +
                          leaves[static_cast<std::size_t>(nodes[i].right)];
  }
  double log_pi = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) continue;
    const double q = q_alpha(leaves[static_cast<std::size_t>(nodes[i].left)],
                             leaves[static_cast<std::size_t>(nodes[i].right)], alpha);
    log_pi += std::log(q);
  }
  return log_pi;
}

double exact_pi(const PlanarTree& tree, double alpha) {
  return std::exp(log_exact_pi(tree, alpha));
}

double mu_mass(const PlanarTree& tree, double alpha) {
  require_alpha_limit(alpha);
  const std::int64_t m = tree.leaf_count();
  const double log_weight =
      std::log(alpha) + log_gamma_alpha(m, alpha).log_value - std::lgamma(m + 1.0);
  return std::exp(log_weight + log_exact_pi(tree, alpha));
}

double mu_size_pmf(std::int64_t m, double alpha) {
  require_alpha_limit(alpha);
  if (m < 1) throw std::invalid_argument("mu_size_pmf: m must be >= 1");
  return std::exp(std::log(alpha) + log_gamma_alpha(m, alpha).log_value -
                  std::lgamma(m + 1.0));
}

double mu_size_cumulative(std::int64_t m_max, double alpha) {
  require_alpha_limit(alpha);
  if (m_max < 1) throw std::invalid_argument("mu_size_cumulative: m_max must be >= 1");
  // Ratio recurrence with Kahan compensation; p(m) decays like m^(-1-a).
  double p = alpha;
  double sum = 0.0, comp = 0.0;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double y = p - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    p *= (static_cast<double>(m) - alpha) / static_cast<double>(m + 1);
    if (p == 0.0) break;
  }
  return sum < 1.0 ? sum : 1.0;
}

double mu_size_tail(std::int64_t m_max, double alpha) {
  const double tail = 1.0 - mu_size_cumulative(m_max, alpha);
  return tail > 0.0 ? tail : 0.0;
}

std::map<std::string, double> growth_chain_distribution(std::int64_t n, double alpha,
                                                        std::int64_t oracle_cap) {
  require_alpha_growth(alpha);
  if (n < 1) throw std::invalid_argument("growth_chain_distribution: n must be >= 1");
  if (n > oracle_cap) {
    throw std::invalid_argument(
        "growth-chain oracle refuses n = " + std::to_string(n) + " (|T_" +
        std::to_string(n) + "| ~ " + std::to_string(catalan_estimate(n)) +
        " shapes); cap is " + std::to_string(oracle_cap));
  }
  std::unordered_map<std::string, double> current;
  current.emplace(encode(PlanarTree::leaf()), 1.0);
  for (std::int64_t size = 1; size < n; ++size) {
    const double denom = static_cast<double>(size) - alpha;
    std::unordered_map<std::string, double> next;
    for (const auto& [text, prob] : current) {
      const PlanarTree tree = decode(text);
      for (std::int64_t idx = 0; idx < tree.node_count(); ++idx) {
        // The edge above node idx: internal when the lower endpoint branches.
        double edge_weight;
        if (size == 1) {
          edge_weight = 1.0;  // single leaf edge; the first step is deterministic
        } else {
          edge_weight = (tree.node(idx).is_leaf() ? (1.0 - alpha) : alpha) / denom;
        }
        if (edge_weight == 0.0) continue;
        for (const bool new_leaf_left : {false, true}) {
          const PlanarTree grown = graft_above(tree, idx, new_leaf_left);
          next[encode(grown)] += prob * edge_weight * 0.5;
        }
      }
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

}  // namespace fordalpha
