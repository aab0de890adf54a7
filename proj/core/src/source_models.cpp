#include "pec/source_models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pec {

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

BernoulliSource::BernoulliSource(double p, std::uint64_t seed) : p_(p), rng_(seed) {
  if (p < 0.0 || p > 0.5) {
    throw std::invalid_argument("BernoulliSource: p must lie in [0, 0.5]");
  }
}

PlaintextSequence BernoulliSource::sample_blocks(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("sample_blocks: empty request");
  PlaintextSequence blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitBlock b(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (rng_.bernoulli(p_)) b.set(j, true);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

FiniteDistribution::FiniteDistribution(std::vector<std::pair<BitBlock, double>> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw std::invalid_argument("FiniteDistribution: empty support");
  const std::size_t width = support_.front().first.width();
  double sum = 0.0;
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& [block, prob] : support_) {
    if (block.width() != width) {
      throw std::invalid_argument("FiniteDistribution: mixed block widths");
    }
    if (!(prob > 0.0 && prob <= 1.0)) {
      throw std::invalid_argument("FiniteDistribution: probabilities must lie in (0, 1]");
    }
    if (!seen.insert({block.bytes().begin(), block.bytes().end()}).second) {
      throw std::invalid_argument("FiniteDistribution: duplicate support entry");
    }
    sum += prob;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("FiniteDistribution: probabilities must sum to 1");
  }
  cumulative_.reserve(support_.size());
  double acc = 0.0;
  for (const auto& [block, prob] : support_) {
    acc += prob;
    cumulative_.push_back(acc);
  }
  cumulative_.back() = 1.0;
}

FiniteDistribution FiniteDistribution::uniform(std::size_t count, std::size_t width) {
  if (count == 0) throw std::invalid_argument("uniform: empty support");
  if (width < 64 && count > (1ull << width)) {
    throw std::invalid_argument("uniform: support larger than the block space");
  }
  std::vector<std::pair<BitBlock, double>> support;
  support.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    support.emplace_back(BitBlock::from_uint(v, width), 1.0 / static_cast<double>(count));
  }
  return FiniteDistribution(std::move(support));
}

FiniteDistribution FiniteDistribution::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution file: " + path);
  std::vector<std::pair<BitBlock, double>> support;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string hex;
    double prob;
    if (!(ls >> hex >> prob)) throw std::runtime_error("bad distribution line: " + line);
    support.emplace_back(BitBlock::from_hex(hex), prob);
  }
  return FiniteDistribution(std::move(support));
}

void FiniteDistribution::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write distribution file: " + path);
  for (const auto& [block, prob] : support_) {
    out << block.to_hex() << ' ';
    out.precision(17);
    out << prob << '\n';
  }
}

bool FiniteDistribution::contains(const BitBlock& block) const {
  for (const auto& [b, prob] : support_) {
    if (b == block) return true;
  }
  return false;
}

BitBlock FiniteDistribution::sample(SplitMix64& rng) const {
  const double u = rng.next_double();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t idx =
      std::min(static_cast<std::size_t>(it - cumulative_.begin()), support_.size() - 1);
  return support_[idx].first;
}

double guessing_entropy(const FiniteDistribution& dist) {
  std::vector<double> probs;
  probs.reserve(dist.support().size());
  for (const auto& [block, prob] : dist.support()) probs.push_back(prob);
  std::sort(probs.begin(), probs.end(), std::greater<>());
  double g = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    g += static_cast<double>(i + 1) * probs[i];
  }
  return g;
}

}  // namespace pec
