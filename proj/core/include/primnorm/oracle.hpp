#pragma once

#include <cstdint>

#include "primnorm/group.hpp"

namespace primnorm {

/// Limits for the brute-force oracles. Inputs beyond them are refused with
/// BudgetExceeded.
struct OracleBudget {
  std::size_t max_symmetric_degree = 8;
  std::uint64_t max_group_order = 100'000;
};

/// {s in S_n : x^s in G for every generator x}, by walking S_n in
/// lexicographic image order.
Group brute_force_normaliser(const Group& g, std::size_t n, const OracleBudget& budget = {});

/// G ∩ H by testing every element of the smaller group for membership in the other.
Group brute_force_intersection(const Group& g, const Group& h, const OracleBudget& budget = {});

/// True iff every generator of n conjugates every generator of g into g.
bool verify_normalises(const Group& n, const Group& g);

}  // namespace primnorm
