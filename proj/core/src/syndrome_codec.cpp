#include "pec/syndrome_codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pec {

namespace {

constexpr double kMinCrossover = 1e-12;
constexpr double kMessageClamp = 35.0;
constexpr double kTanhClamp = 1.0 - 1e-14;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("crossover probability must lie in [0, 0.5]");
  }
}

}  // namespace

SyndromeCodec::SyndromeCodec(ParityCheckMatrix matrix, int max_iterations, DecodeAlgo algo)
    : matrix_(std::move(matrix)), max_iterations_(max_iterations), algo_(algo) {
  if (max_iterations_ < 1) throw std::invalid_argument("max_iterations must be >= 1");
  const std::uint64_t g = std::gcd(matrix_.n_checks(), matrix_.n_vars());
  rate_num_ = static_cast<std::uint32_t>(matrix_.n_checks() / g);
  rate_den_ = static_cast<std::uint32_t>(matrix_.n_vars() / g);

  check_ptr_.assign(matrix_.n_checks() + 1, 0);
  edge_var_.reserve(matrix_.n_edges());
  for (std::size_t c = 0; c < matrix_.n_checks(); ++c) {
    for (auto v : matrix_.vars_of_check(c)) edge_var_.push_back(v);
    check_ptr_[c + 1] = static_cast<std::uint32_t>(edge_var_.size());
  }
  var_ptr_.assign(matrix_.n_vars() + 1, 0);
  for (auto v : edge_var_) ++var_ptr_[v + 1];
  for (std::size_t v = 0; v < matrix_.n_vars(); ++v) var_ptr_[v + 1] += var_ptr_[v];
  var_edge_.resize(edge_var_.size());
  {
    std::vector<std::uint32_t> fill(var_ptr_.begin(), var_ptr_.end() - 1);
    for (std::uint32_t e = 0; e < edge_var_.size(); ++e) {
      var_edge_[fill[edge_var_[e]]++] = e;
    }
  }
}

BitBlock SyndromeCodec::encode(const BitBlock& y) const {
  if (y.width() != n_vars()) throw std::invalid_argument("encode: word width mismatch");
  BitBlock s(n_checks());
  for (std::size_t c = 0; c < n_checks(); ++c) {
    int bit = 0;
    for (std::uint32_t e = check_ptr_[c]; e < check_ptr_[c + 1]; ++e) {
      bit ^= y.get(edge_var_[e]);
    }
    s.set(c, bit != 0);
  }
  return s;
}

DecodeResult SyndromeCodec::decode(const BitBlock& syndrome, const BitBlock& side_info,
                                   double p) const {
  if (algo_ == DecodeAlgo::ml_exhaustive) {
    return ml_decode_bruteforce(matrix_, syndrome, side_info, p);
  }
  return bp_decode(syndrome, side_info, p);
}

DecodeResult SyndromeCodec::bp_decode(const BitBlock& syndrome, const BitBlock& side_info,
                                      double p) const {
  if (syndrome.width() != n_checks()) throw std::invalid_argument("bp_decode: syndrome width");
  if (side_info.width() != n_vars()) throw std::invalid_argument("bp_decode: side info width");
  check_probability(p);

  // Side information already consistent: nothing to correct.
  if (encode(side_info) == syndrome) {
    return {side_info, true, 0};
  }

  const std::size_t n = n_vars();
  const std::size_t edges = edge_var_.size();
  const double pc = std::clamp(p, kMinCrossover, 0.5);
  const double channel_llr = std::log((1.0 - pc) / pc);

  std::vector<double> llr0(n);
  for (std::size_t v = 0; v < n; ++v) {
    llr0[v] = side_info.get(v) ? -channel_llr : channel_llr;
  }

  std::vector<double> v2c(edges), c2v(edges), total(n);
  std::vector<double> tanh_buf(matrix_.max_check_degree());
  for (std::uint32_t e = 0; e < edges; ++e) v2c[e] = llr0[edge_var_[e]];

  BitBlock hard(n);
  for (int iter = 1; iter <= max_iterations_; ++iter) {
    // Check-node update (tanh product rule, prefix/suffix products so zero
    // messages never divide).
    for (std::size_t c = 0; c < n_checks(); ++c) {
      const std::uint32_t begin = check_ptr_[c];
      const std::uint32_t end = check_ptr_[c + 1];
      const std::size_t deg = end - begin;
      for (std::size_t i = 0; i < deg; ++i) {
        tanh_buf[i] = std::tanh(0.5 * v2c[begin + i]);
      }
      const double sign = syndrome.get(c) ? -1.0 : 1.0;
      double prefix = sign;
      for (std::size_t i = 0; i < deg; ++i) {
        c2v[begin + i] = prefix;
        prefix *= tanh_buf[i];
      }
      double suffix = 1.0;
      for (std::size_t i = deg; i-- > 0;) {
        const double prod = std::clamp(c2v[begin + i] * suffix, -kTanhClamp, kTanhClamp);
        c2v[begin + i] = 2.0 * std::atanh(prod);
        suffix *= tanh_buf[i];
      }
    }

    // Variable-node update and hard decision.
    for (std::size_t v = 0; v < n; ++v) {
      double sum = llr0[v];
      for (std::uint32_t i = var_ptr_[v]; i < var_ptr_[v + 1]; ++i) sum += c2v[var_edge_[i]];
      total[v] = sum;
      hard.set(v, sum < 0.0);
      for (std::uint32_t i = var_ptr_[v]; i < var_ptr_[v + 1]; ++i) {
        const std::uint32_t e = var_edge_[i];
        v2c[e] = std::clamp(sum - c2v[e], -kMessageClamp, kMessageClamp);
      }
    }

    if (encode(hard) == syndrome) {
      return {hard, true, iter};
    }
  }
  return {hard, false, max_iterations_};
}

SyndromeCodec SyndromeCodec::replicate(std::size_t copies) const {
  return SyndromeCodec(ParityCheckMatrix::direct_sum(matrix_, copies), max_iterations_, algo_);
}

namespace {

// Dense GF(2) coset enumeration over one connected component (<= 24 vars).
// Local variable i maps to mask bit (n_local - 1 - i), so integer order on
// masks equals lexicographic order on the bit sequence.
struct ComponentSolver {
  std::vector<std::uint32_t> vars;  // global ids, ascending

  // Returns false when H_comp * y = s_comp has no solution.
  bool solve(const ParityCheckMatrix& matrix, const std::vector<std::uint32_t>& checks,
             const BitBlock& syndrome, const BitBlock& side_info, std::uint32_t& best_out) {
    const std::size_t nl = vars.size();
    std::vector<std::uint32_t> local_of(matrix.n_vars(), 0);
    for (std::size_t i = 0; i < nl; ++i) local_of[vars[i]] = static_cast<std::uint32_t>(i);
    auto bit_of = [&](std::size_t local) { return 1u << (nl - 1 - local); };

    std::vector<std::uint32_t> rows;
    std::vector<int> rhs;
    for (auto c : checks) {
      std::uint32_t row = 0;
      for (auto v : matrix.vars_of_check(c)) row |= bit_of(local_of[v]);
      rows.push_back(row);
      rhs.push_back(syndrome.get(c));
    }

    // Gaussian elimination to reduced row echelon form.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nl && r < rows.size(); ++col) {
      const std::uint32_t mask = bit_of(col);
      std::size_t pivot = r;
      while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[r], rows[pivot]);
      std::swap(rhs[r], rhs[pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != r && (rows[i] & mask)) {
          rows[i] ^= rows[r];
          rhs[i] ^= rhs[r];
        }
      }
      pivot_col_of_row.push_back(col);
      ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rhs[i]) return false;  // inconsistent syndrome
    }

    std::uint32_t particular = 0;
    std::vector<bool> is_pivot(nl, false);
    for (std::size_t i = 0; i < r; ++i) {
      is_pivot[pivot_col_of_row[i]] = true;
      if (rhs[i]) particular |= bit_of(pivot_col_of_row[i]);
    }
    std::vector<std::uint32_t> basis;
    for (std::size_t col = 0; col < nl; ++col) {
      if (is_pivot[col]) continue;
      std::uint32_t vec = bit_of(col);
      for (std::size_t i = 0; i < r; ++i) {
        if (rows[i] & bit_of(col)) vec |= bit_of(pivot_col_of_row[i]);
      }
      basis.push_back(vec);
    }

    std::uint32_t z_mask = 0;
    for (std::size_t i = 0; i < nl; ++i) {
      if (side_info.get(vars[i])) z_mask |= bit_of(i);
    }

    // Gray-code walk over the coset.
    std::uint32_t current = particular;
    std::uint32_t best = current;
    int best_dist = std::popcount(current ^ z_mask);
    const std::uint64_t count = 1ull << basis.size();
    for (std::uint64_t g = 1; g < count; ++g) {
      current ^= basis[std::countr_zero(g)];
      const int dist = std::popcount(current ^ z_mask);
      if (dist < best_dist || (dist == best_dist && current < best)) {
        best_dist = dist;
        best = current;
      }
    }
    best_out = best;
    return true;
  }
};

}  // namespace

DecodeResult ml_decode_bruteforce(const ParityCheckMatrix& matrix, const BitBlock& syndrome,
                                  const BitBlock& side_info, double p) {
  if (syndrome.width() != matrix.n_checks()) {
    throw std::invalid_argument("ml_decode: syndrome width mismatch");
  }
  if (side_info.width() != matrix.n_vars()) {
    throw std::invalid_argument("ml_decode: side info width mismatch");
  }
  check_probability(p);

  // Connected components of the Tanner graph via union-find on variables.
  std::vector<std::uint32_t> parent(matrix.n_vars());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t c = 0; c < matrix.n_checks(); ++c) {
    const auto& vs = matrix.vars_of_check(c);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      parent[find(vs[i])] = find(vs[0]);
    }
  }

  std::vector<std::vector<std::uint32_t>> component_vars(matrix.n_vars());
  for (std::uint32_t v = 0; v < matrix.n_vars(); ++v) component_vars[find(v)].push_back(v);
  std::vector<std::vector<std::uint32_t>> component_checks(matrix.n_vars());
  for (std::uint32_t c = 0; c < matrix.n_checks(); ++c) {
    component_checks[find(matrix.vars_of_check(c)[0])].push_back(c);
  }

  BitBlock estimate(matrix.n_vars());
  for (std::uint32_t root = 0; root < matrix.n_vars(); ++root) {
    if (component_vars[root].empty()) continue;
    if (component_vars[root].size() > 24) {
      throw std::invalid_argument(
          "ml_decode: component exceeds 24 variables, exhaustive enumeration rejected");
    }
    ComponentSolver solver{component_vars[root]};
    std::uint32_t best = 0;
    if (!solver.solve(matrix, component_checks[root], syndrome, side_info, best)) {
      return {side_info, false, 0};
    }
    const std::size_t nl = solver.vars.size();
    for (std::size_t i = 0; i < nl; ++i) {
      estimate.set(solver.vars[i], (best >> (nl - 1 - i)) & 1);
    }
  }
  return {estimate, true, 0};
}

}  // namespace pec
