#include "pec/parity_check.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pec {

ParityCheckMatrix::ParityCheckMatrix(std::size_t n_vars,
                                     std::vector<std::vector<std::uint32_t>> check_vars)
    : n_vars_(n_vars), check_vars_(std::move(check_vars)) {
  if (n_vars_ == 0 || check_vars_.empty()) {
    throw std::invalid_argument("parity-check matrix dimensions must be positive");
  }
  for (auto& vars : check_vars_) {
    std::set<std::uint32_t> seen;
    for (auto v : vars) {
      if (v >= n_vars_) throw std::invalid_argument("variable index out of range");
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate edge in check row");
    }
    std::sort(vars.begin(), vars.end());
    n_edges_ += vars.size();
  }
  build_var_adjacency();
  for (std::size_t v = 0; v < n_vars_; ++v) {
    if (var_checks_[v].empty()) {
      throw std::invalid_argument("every variable must have degree >= 1");
    }
  }
  digest_ = sha256(to_alist());
}

void ParityCheckMatrix::build_var_adjacency() {
  var_checks_.assign(n_vars_, {});
  for (std::size_t c = 0; c < check_vars_.size(); ++c) {
    for (auto v : check_vars_[c]) var_checks_[v].push_back(static_cast<std::uint32_t>(c));
  }
}

std::size_t ParityCheckMatrix::max_check_degree() const {
  std::size_t d = 0;
  for (const auto& vars : check_vars_) d = std::max(d, vars.size());
  return d;
}

std::size_t ParityCheckMatrix::max_var_degree() const {
  std::size_t d = 0;
  for (const auto& checks : var_checks_) d = std::max(d, checks.size());
  return d;
}

std::size_t ParityCheckMatrix::girth() const {
  // BFS from every variable node over the bipartite graph. The shortest
  // cycle through the start node is found when an already-visited vertex is
  // reached over a second disjoint path; scanning all starts yields the girth.
  const std::size_t n_total = n_vars_ + n_checks();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;

  std::vector<std::size_t> dist(n_total);
  std::vector<std::uint32_t> parent(n_total);
  for (std::size_t start = 0; start < n_vars_; ++start) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::deque<std::uint32_t> queue;
    dist[start] = 0;
    parent[start] = std::numeric_limits<std::uint32_t>::max();
    queue.push_back(static_cast<std::uint32_t>(start));
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      const bool is_var = u < n_vars_;
      const auto& nbrs = is_var ? var_checks_[u] : check_vars_[u - n_vars_];
      for (auto raw : nbrs) {
        const std::uint32_t w = is_var ? raw + static_cast<std::uint32_t>(n_vars_) : raw;
        if (w == parent[u]) continue;
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          // Cycle through `start` (or at least no longer than one through it).
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kInf ? 0 : best;
}

ParityCheckMatrix ParityCheckMatrix::direct_sum(const ParityCheckMatrix& base,
                                                std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("direct_sum requires copies >= 1");
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(base.n_checks() * copies);
  for (std::size_t k = 0; k < copies; ++k) {
    const std::uint32_t offset = static_cast<std::uint32_t>(k * base.n_vars());
    for (std::size_t c = 0; c < base.n_checks(); ++c) {
      std::vector<std::uint32_t> row = base.vars_of_check(c);
      for (auto& v : row) v += offset;
      rows.push_back(std::move(row));
    }
  }
  return ParityCheckMatrix(base.n_vars() * copies, std::move(rows));
}

std::string ParityCheckMatrix::to_alist() const {
  std::ostringstream out;
  out << n_vars_ << ' ' << n_checks() << '\n';
  out << max_var_degree() << ' ' << max_check_degree() << '\n';
  for (std::size_t v = 0; v < n_vars_; ++v) {
    out << var_checks_[v].size() << (v + 1 < n_vars_ ? ' ' : '\n');
  }
  for (std::size_t c = 0; c < n_checks(); ++c) {
    out << check_vars_[c].size() << (c + 1 < n_checks() ? ' ' : '\n');
  }
  for (std::size_t v = 0; v < n_vars_; ++v) {
    for (std::size_t i = 0; i < var_checks_[v].size(); ++i) {
      out << var_checks_[v][i] + 1 << (i + 1 < var_checks_[v].size() ? ' ' : '\n');
    }
  }
  for (std::size_t c = 0; c < n_checks(); ++c) {
    for (std::size_t i = 0; i < check_vars_[c].size(); ++i) {
      out << check_vars_[c][i] + 1 << (i + 1 < check_vars_[c].size() ? ' ' : '\n');
    }
  }
  return out.str();
}

ParityCheckMatrix ParityCheckMatrix::from_alist(const std::string& text) {
  std::istringstream in(text);
  long long n_vars = 0, n_checks = 0;
  if (!(in >> n_vars >> n_checks) || n_vars <= 0 || n_checks <= 0) {
    throw std::runtime_error("alist: bad dimension line");
  }
  long long max_var_deg = 0, max_check_deg = 0;
  if (!(in >> max_var_deg >> max_check_deg)) throw std::runtime_error("alist: bad degree line");

  std::vector<long long> var_deg(static_cast<std::size_t>(n_vars));
  std::vector<long long> check_deg(static_cast<std::size_t>(n_checks));
  for (auto& d : var_deg) {
    if (!(in >> d) || d < 0) throw std::runtime_error("alist: bad variable degree");
  }
  for (auto& d : check_deg) {
    if (!(in >> d) || d < 0) throw std::runtime_error("alist: bad check degree");
  }

  // Column lists. Padded files carry max_var_deg entries per column with zero
  // fill; unpadded files carry exactly the degree. Read accordingly.
  std::vector<std::string> lines;
  {
    std::string rest;
    std::getline(in, rest);  // finish current line
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  if (lines.size() != static_cast<std::size_t>(n_vars + n_checks)) {
    throw std::runtime_error("alist: unexpected number of adjacency lines");
  }

  auto parse_line = [](const std::string& line) {
    std::istringstream ls(line);
    std::vector<long long> vals;
    long long v;
    while (ls >> v) vals.push_back(v);
    return vals;
  };

  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(n_checks));
  for (std::size_t c = 0; c < static_cast<std::size_t>(n_checks); ++c) {
    const auto vals = parse_line(lines[static_cast<std::size_t>(n_vars) + c]);
    for (auto v : vals) {
      if (v == 0) continue;  // padding
      if (v < 1 || v > n_vars) throw std::runtime_error("alist: column index out of range");
      rows[c].push_back(static_cast<std::uint32_t>(v - 1));
    }
    if (rows[c].size() != static_cast<std::size_t>(check_deg[c])) {
      throw std::runtime_error("alist: row list does not match declared degree");
    }
  }
  ParityCheckMatrix matrix(static_cast<std::size_t>(n_vars), std::move(rows));

  // Cross-check the column lists against the declared variable degrees.
  for (std::size_t v = 0; v < static_cast<std::size_t>(n_vars); ++v) {
    const auto vals = parse_line(lines[v]);
    std::size_t nonzero = 0;
    for (auto x : vals) {
      if (x != 0) ++nonzero;
    }
    if (nonzero != static_cast<std::size_t>(var_deg[v]) ||
        nonzero != matrix.checks_of_var(v).size()) {
      throw std::runtime_error("alist: column list does not match row lists");
    }
  }
  return matrix;
}

void ParityCheckMatrix::save_alist_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write alist file: " + path);
  out << to_alist();
}

ParityCheckMatrix ParityCheckMatrix::load_alist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open alist file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_alist(buf.str());
}

}  // namespace pec
