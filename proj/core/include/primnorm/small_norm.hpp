#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primnorm/group.hpp"

namespace primnorm {

/// max{2, floor(log2 n) + 1}.
std::size_t generating_set_bound(std::size_t n);

/// 2 floor(log2 n) + 26.
std::size_t base_size_bound(std::size_t n);

/// A generating set of size at most generating_set_bound(n). Tries pairs
/// from a seeded random sample first (random elements move many points,
/// which helps the backtrack), then larger tuples, then the reduced input
/// generators. Throws InternalError if the bound cannot be met.
std::vector<Permutation> small_generating_set(const Group& g, std::uint64_t seed = 0x6e6e6e);

/// Repeatedly appends the smallest point moved by the current stabiliser.
std::vector<Point> greedy_base(const Group& g);

/// greedy_base if it meets base_size_bound(n); otherwise the first base of
/// minimal length found by exhaustive search over point tuples.
std::vector<Point> small_base(const Group& g);

/// Switches for the sound prunes of the normaliser backtrack. Disabling any
/// of them never changes the result, only the amount of search.
struct BacktrackOptions {
  /// x_i and its prospective conjugate y_i must have the same cycle type.
  bool prune_cycle_type = true;
  /// The partial map must stay injective while it grows.
  bool prune_injectivity = true;
  /// Rows of base images are restricted to images that some group element
  /// realises, y_i is solved as soon as its row is complete, and the
  /// partial map is extended through it immediately.
  bool prune_early_resolution = true;
  /// A freely chosen image sigma(a) = d must be least in its orbit under the
  /// stabiliser in G of the images assigned so far (checked near the root).
  /// Sound because sigma g is in N for g in G; the result is <G, accepted>.
  bool prune_coset_minimality = true;
  /// Only search sigma with sigma(beta_1) = beta_1 and return <G, accepted>.
  /// Sound because G is transitive and contained in the normaliser.
  bool orbit_reduction = true;
  /// Keep every accepted sigma (sorted) in the result.
  bool record_accepted = false;
  std::size_t threads = 1;
  /// Abort with BudgetExceeded after this many search nodes; 0 = unlimited.
  std::uint64_t node_budget = 0;
};

struct BacktrackStats {
  std::uint64_t nodes = 0;
  std::uint64_t accepted = 0;
};

struct BacktrackResult {
  Group normaliser;
  BacktrackStats stats;
  std::vector<Permutation> accepted;
};

/// N_{S_n}(G) for transitive G, given a generating set x and a base.
/// Enumerates assignments of base preimages and generator base images,
/// resolves each generator's conjugate through the chain, extends the
/// partial map by transitivity and keeps sigma when x^sigma lies in G for
/// every generator.
BacktrackResult normaliser_backtrack(const Group& g, std::span<const Permutation> x, std::span<const Point> base,
                                     const BacktrackOptions& opts = {});

/// reduce_generators, small_generating_set, small_base, then normaliser_backtrack.
BacktrackResult normaliser_small(const Group& g, const BacktrackOptions& opts = {});

}  // namespace primnorm
