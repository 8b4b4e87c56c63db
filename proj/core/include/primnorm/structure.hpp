#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primnorm/group.hpp"
#include "primnorm/types.hpp"

namespace primnorm {

/// Parameters (m, k, l) of a large primitive group: n == C(m, k)^l.
struct LargeParameters {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  friend auto operator<=>(const LargeParameters&, const LargeParameters&) = default;
};

/// Groups up to this order are handled by exhaustive conjugacy-class
/// enumeration; larger ones by seeded random sampling.
inline constexpr std::uint64_t kExhaustiveOrderLimit = 10'000;

struct SamplingOptions {
  std::uint64_t seed = 0x5eed'50c1e;
  /// Sampling stops after this many consecutive samples change nothing.
  std::size_t stable_rounds = 64;
  std::size_t max_samples = 20'000;
};

/// The distinct minimal normal subgroups of a nontrivial group, ordered by
/// first generator.
std::vector<Group> minimal_normal_subgroups(const Group& g, const SamplingOptions& opts = {});

/// The product of all minimal normal subgroups.
Group socle(const Group& g, const SamplingOptions& opts = {});

bool is_abelian(const Group& g);

/// Splits a socle (a direct product of isomorphic simple groups) into its
/// simple direct factors. Throws PreconditionError if the input is not such
/// a product.
std::vector<Group> simple_direct_factors(const Group& s, const SamplingOptions& opts = {});

bool is_simple_nonabelian(const Group& t, const SamplingOptions& opts = {});

/// Throws ImprimitiveError carrying the orbits (intransitive input) or a
/// nontrivial block system. `op` names the caller in the message.
void require_primitive(const Group& g, const char* op);

/// n^(1 + floor(log2 n)).
BigInt small_order_bound(std::size_t n);

/// |G| < n^(1 + floor(log2 n)). Requires g primitive.
bool is_small(const Group& g);

/// Requires g primitive.
bool is_almost_simple(const Group& g);

/// All (m, k, l) with C(m, k)^l == n, m >= 5, 1 <= k <= m/2, l >= 1, in
/// lexicographic order.
std::vector<LargeParameters> large_parameters(std::size_t n);

/// True when g is M11, M12, M23 or M24 in its 4-transitive action.
bool is_mathieu_4transitive(const Group& g);

/// Whether g is k-transitive, via orbit lengths of a chain based at 0..k-1.
bool is_k_transitive(const Group& g, std::size_t k);

BigInt binomial(std::size_t m, std::size_t k);

/// Which of the small / large / almost simple cases a primitive group falls under.
struct Classification {
  BigInt order;
  /// n^(1 + floor(log2 n)).
  BigInt small_bound;
  bool small = false;
  bool almost_simple = false;
  bool mathieu = false;
  /// The certified parameters, if any.
  std::optional<LargeParameters> large;
  /// Every (m, k, l) with C(m, k)^l == n.
  std::vector<LargeParameters> candidates;
};

/// Throws ImprimitiveError for imprimitive input.
Classification classify(const Group& g, const SamplingOptions& opts = {});

}  // namespace primnorm
