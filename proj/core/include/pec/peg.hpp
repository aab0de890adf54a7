#pragma once

#include <cstdint>
#include <vector>

#include "pec/degree_distribution.hpp"
#include "pec/parity_check.hpp"

namespace pec {

/// Variable-node degree sequence implied by the edge-perspective lambda:
/// node fraction at degree i is proportional to lambda_i / i, rounded with
/// the largest-remainder method so counts sum exactly to n_vars. The returned
/// sequence is sorted in non-decreasing order.
std::vector<int> variable_degree_sequence(const DegreeDistribution& dist, std::size_t n_vars);

/// Progressive Edge Growth construction of a Tanner graph.
///
/// Edges of each variable node are placed one at a time at the check node
/// maximizing the local girth: a breadth-first expansion of the subtree
/// rooted at the variable selects checks outside the subtree, or failing
/// that at maximal depth. Ties are broken by lowest current check degree,
/// then lowest check index, so placement is fully deterministic. The seed
/// only permutes which column ends up with which degree; codes built from
/// different seeds are relabelings of one another.
///
/// Throws if the degree sequence leaves some check with no edge to receive.
ParityCheckMatrix peg_construct(std::size_t n_vars, std::size_t n_checks,
                                const DegreeDistribution& dist, std::uint64_t seed);

}  // namespace pec
