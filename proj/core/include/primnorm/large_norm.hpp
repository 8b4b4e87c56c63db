#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primnorm/group.hpp"
#include "primnorm/homs.hpp"
#include "primnorm/small_norm.hpp"
#include "primnorm/structure.hpp"

namespace primnorm {

enum class Parity { alternating, symmetric };

// k-subsets ------------------------------------------------------------------------

/// Colexicographic rank of a sorted k-subset of {0..m-1}: sum of C(s_i, i+1).
std::size_t subset_rank(std::span<const Point> sorted_subset);

/// All k-subsets of {0..m-1}, sorted, listed in colexicographic order.
std::vector<std::vector<Point>> subsets_colex(std::size_t m, std::size_t k);

/// The permutation of k-subsets induced by p.
Permutation induced_on_subsets(const Permutation& p, std::size_t k);

/// A_{k,m} or S_{k,m}: A_m or S_m acting on the C(m,k) k-subsets.
/// Generators are the images of an m-cycle (an (m-1)-cycle for even m in
/// the alternating case) and of a transposition or 3-cycle.
Group subsets_action(std::size_t m, std::size_t k, Parity parity);

/// The two natural-degree generators used by subsets_action.
std::vector<Permutation> standard_generators(std::size_t m, Parity parity);

// Wreath products ------------------------------------------------------------------

enum class WreathAction { imprimitive, product };

inline constexpr std::size_t kMaxWreathDegree = std::size_t{1} << 20;

struct WreathSpec {
  LargeParameters params;
  WreathAction action = WreathAction::product;
  Parity parity = Parity::symmetric;
  /// C(m, k).
  std::size_t base_degree = 0;
  std::size_t degree = 0;
  /// Two generators of the base copy in coordinate 0, then an l-cycle and a
  /// swap of the first two coordinates (both trivial when l == 1).
  std::vector<Permutation> generators;
};

/// Point of Delta^l for a coordinate tuple; the first coordinate is least significant.
std::size_t tuple_index(std::span<const std::size_t> coords, std::size_t base_degree);

/// Lifts a permutation of Delta to Delta^l acting on `coordinate` only.
Permutation embed_in_coordinate(const Permutation& p, std::size_t coordinate, std::size_t l);

/// Product action on C(m,k)^l points, or imprimitive action on C(m,k) * l
/// points (block i holds points [i C(m,k), (i+1) C(m,k))). Throws
/// InvalidArgument when the degree exceeds kMaxWreathDegree.
std::pair<Group, WreathSpec> wreath(std::size_t m, std::size_t k, std::size_t l, WreathAction action,
                                    Parity parity = Parity::symmetric);

// Certificates ---------------------------------------------------------------------

/// An isomorphism from a group isomorphic to A_m onto A_{k,m}. The domain
/// generators are a generating pair of `factor`. Throws InvalidArgument when
/// |factor| != m!/2 or no isomorphism is found.
GeneratorImageMap iso_socle_to_standard(const Group& factor, std::size_t m, std::size_t k,
                                        std::uint64_t seed = 0x1505);

/// An automorphism of A_{k,6} that S_6 does not induce, as images of the
/// subsets_action(6, k, alternating) generators.
GeneratorImageMap outer_aut_a6(std::size_t k);

struct PAContext {
  Group g;
  Group socle;
  LargeParameters params;
  /// A_{k,m}^l on Delta^l, generated coordinate by coordinate.
  Group standard;
  /// S -> standard, already twisted when m == 6.
  GeneratorImageMap iota;
  /// Maps the points of G to the points of Delta^l.
  PointBijection f;
  /// Coordinates twisted by the outer automorphism (bit i = coordinate i).
  std::uint64_t twist = 0;
};

/// The certificate that G is large with the given parameters, or nullopt.
std::optional<PAContext> verify_large(const Group& g, const LargeParameters& params,
                                      const SamplingOptions& sampling = {});

/// Tries every parameter triple for the degree in order and returns the first certificate.
std::optional<PAContext> find_large_certificate(const Group& g, const SamplingOptions& sampling = {});

// Normalisers ----------------------------------------------------------------------

/// N_{S_n}(soc G): the wreath generators moved to G's points through f.
Group normaliser_of_socle_pa(const PAContext& ctx);

struct CosetResult {
  Group normaliser;
  std::uint64_t cosets = 0;
};

inline constexpr std::size_t kDefaultCosetCap = 1'000'000;

/// N_M(G) for G <= M: enumerates right cosets of G in M and keeps the
/// representatives that normalise G. Throws BudgetExceeded past `cap` cosets.
CosetResult normaliser_via_cosets(const Group& g, const Group& m, std::size_t cap = kDefaultCosetCap);

enum class Branch { small, large_pa, large_as };

const char* branch_name(Branch b);

struct NormaliserResult {
  Group normaliser;
  Branch branch = Branch::small;
  std::optional<LargeParameters> params;
  std::uint64_t nodes = 0;
  std::uint64_t cosets = 0;
};

struct NormaliserOptions {
  enum class Force { none, small, large };
  Force force = Force::none;
  BacktrackOptions backtrack;
  std::size_t coset_cap = kDefaultCosetCap;
  SamplingOptions sampling;
};

/// Almost-simple transitive G: transported S_{k,m} plus cosets when G is
/// primitive and large, otherwise the backtrack. Checks that the socle is
/// simple and nonabelian.
NormaliserResult normaliser_almost_simple(const Group& g, const NormaliserOptions& opts = {});

/// Large G: the almost-simple path for l == 1, otherwise N_{S_n}(soc G) followed by cosets.
NormaliserResult normaliser_large(const Group& g, const NormaliserOptions& opts = {});
NormaliserResult normaliser_large(const PAContext& ctx, const NormaliserOptions& opts = {});

/// N_{S_n}(G) for primitive G. Large groups take the large path unless
/// forced otherwise. Throws ImprimitiveError with a block system.
NormaliserResult normaliser_in_sym(const Group& g, const NormaliserOptions& opts = {});

inline constexpr std::size_t kDefaultIntersectionCap = 200'000;

/// N_H(G) = N_{S_n}(G) ∩ H, as the stabiliser in H of the coset N in
/// <N, H>. Exponential in the worst case; throws BudgetExceeded once the
/// H-orbit of cosets passes `cap`.
NormaliserResult normaliser_in_subgroup(const Group& g, const Group& h, const NormaliserOptions& opts = {},
                                        std::size_t cap = kDefaultIntersectionCap);

}  // namespace primnorm
