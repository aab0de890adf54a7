#include "pec/peg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pec/rng.hpp"

namespace pec {

std::vector<int> variable_degree_sequence(const DegreeDistribution& dist, std::size_t n_vars) {
  dist.validate();
  // Edge-to-node conversion: node fraction at degree i proportional to
  // lambda_i / i.
  double norm = 0.0;
  for (const auto& [degree, fraction] : dist.lambda) norm += fraction / degree;

  struct Quota {
    int degree;
    std::size_t count;
    double remainder;
  };
  std::vector<Quota> quotas;
  std::size_t assigned = 0;
  for (const auto& [degree, fraction] : dist.lambda) {
    const double exact = (fraction / degree) / norm * static_cast<double>(n_vars);
    const auto base = static_cast<std::size_t>(exact);
    quotas.push_back({degree, base, exact - static_cast<double>(base)});
    assigned += base;
  }
  // Largest remainder so the counts sum exactly to n_vars.
  std::vector<std::size_t> order(quotas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (quotas[a].remainder != quotas[b].remainder) {
      return quotas[a].remainder > quotas[b].remainder;
    }
    return quotas[a].degree < quotas[b].degree;
  });
  for (std::size_t i = 0; assigned < n_vars; ++i) {
    ++quotas[order[i % quotas.size()]].count;
    ++assigned;
  }

  std::vector<int> degrees;
  degrees.reserve(n_vars);
  for (const auto& q : quotas) {
    degrees.insert(degrees.end(), q.count, q.degree);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

// Breadth-first expansion of the subtree rooted at variable `v`; fills
// dist_check with BFS depth (in check hops) or -1 when unreached.
void expand_subtree(std::uint32_t v, const std::vector<std::vector<std::uint32_t>>& var_adj,
                    const std::vector<std::vector<std::uint32_t>>& check_adj,
                    std::vector<int>& dist_check, std::vector<int>& dist_var,
                    std::vector<std::uint32_t>& frontier, std::vector<std::uint32_t>& next) {
  std::fill(dist_check.begin(), dist_check.end(), -1);
  std::fill(dist_var.begin(), dist_var.end(), -1);
  dist_var[v] = 0;
  frontier.clear();
  int depth = 0;
  for (auto c : var_adj[v]) {
    dist_check[c] = 1;
    frontier.push_back(c);
  }
  depth = 1;
  while (!frontier.empty()) {
    next.clear();
    for (auto c : frontier) {
      for (auto u : check_adj[c]) {
        if (dist_var[u] >= 0) continue;
        dist_var[u] = depth;
        for (auto c2 : var_adj[u]) {
          if (dist_check[c2] < 0) {
            dist_check[c2] = depth + 1;
            next.push_back(c2);
          }
        }
      }
    }
    frontier.swap(next);
    ++depth;
  }
}

}  // namespace

ParityCheckMatrix peg_construct(std::size_t n_vars, std::size_t n_checks,
                                const DegreeDistribution& dist, std::uint64_t seed) {
  if (n_vars == 0 || n_checks == 0) {
    throw std::invalid_argument("peg_construct: dimensions must be positive");
  }
  const std::vector<int> degrees = variable_degree_sequence(dist, n_vars);
  const std::size_t total_edges =
      static_cast<std::size_t>(std::accumulate(degrees.begin(), degrees.end(), 0LL));
  if (total_edges < n_checks) {
    throw std::invalid_argument("peg_construct: fewer edges than checks, degree sequence infeasible");
  }

  // The seed shuffles which column carries which degree; everything after
  // this point is deterministic.
  std::vector<std::uint32_t> column_of_rank(n_vars);
  std::iota(column_of_rank.begin(), column_of_rank.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = n_vars - 1; i > 0; --i) {
    std::swap(column_of_rank[i], column_of_rank[rng.next_below(i + 1)]);
  }

  std::vector<std::vector<std::uint32_t>> var_adj(n_vars);
  std::vector<std::vector<std::uint32_t>> check_adj(n_checks);
  std::vector<std::size_t> check_degree(n_checks, 0);

  std::vector<int> dist_check(n_checks);
  std::vector<int> dist_var(n_vars);
  std::vector<std::uint32_t> frontier, next;
  frontier.reserve(n_checks);
  next.reserve(n_checks);

  auto pick_min_degree = [&](auto&& is_candidate) {
    std::size_t best = n_checks;
    for (std::size_t c = 0; c < n_checks; ++c) {
      if (!is_candidate(c)) continue;
      if (best == n_checks || check_degree[c] < check_degree[best]) best = c;
    }
    return best;
  };

  for (std::size_t rank = 0; rank < n_vars; ++rank) {
    const std::uint32_t v = column_of_rank[rank];
    const int degree = degrees[rank];
    for (int e = 0; e < degree; ++e) {
      std::size_t chosen;
      if (var_adj[v].empty()) {
        chosen = pick_min_degree([](std::size_t) { return true; });
      } else {
        expand_subtree(v, var_adj, check_adj, dist_check, dist_var, frontier, next);
        bool any_unreached = false;
        for (std::size_t c = 0; c < n_checks && !any_unreached; ++c) {
          any_unreached = dist_check[c] < 0;
        }
        if (any_unreached) {
          chosen = pick_min_degree([&](std::size_t c) { return dist_check[c] < 0; });
        } else {
          const int max_depth = *std::max_element(dist_check.begin(), dist_check.end());
          if (max_depth <= 1) {
            throw std::invalid_argument(
                "peg_construct: variable degree exceeds distinct check count");
          }
          chosen = pick_min_degree([&](std::size_t c) { return dist_check[c] == max_depth; });
        }
      }
      var_adj[v].push_back(static_cast<std::uint32_t>(chosen));
      check_adj[chosen].push_back(v);
      ++check_degree[chosen];
    }
  }

  for (std::size_t c = 0; c < n_checks; ++c) {
    if (check_adj[c].empty()) {
      throw std::invalid_argument("peg_construct: a check node received no edges");
    }
  }
  return ParityCheckMatrix(n_vars, std::move(check_adj));
}

}  // namespace pec
