#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "primnorm/permutation.hpp"
#include "primnorm/types.hpp"

namespace primnorm {

/// Base and strong generating set, built by deterministic Schreier-Sims.
///
/// Level i has base point base()[i], the strong generators fixing the
/// first i base points, and a Schreier vector for the orbit of the base
/// point under them. Transversal elements are materialised on demand.
class StabilizerChain {
 public:
  StabilizerChain() = default;

  /// Builds a chain for <generators>. The base starts with `base_prefix`
  /// (kept even where redundant) and is extended by the smallest point
  /// moved by some generator that fixes the current base.
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<Point>& base() const noexcept { return base_; }

  const std::vector<Permutation>& level_generators(std::size_t level) const { return levels_[level].gens; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point p) const { return levels_[level].label[p] != kAbsent; }

  /// The coset representative u with base()[level]^u == p. Requires in_orbit(level, p).
  Permutation transversal(std::size_t level, Point p) const;

  /// Applies the inverse of transversal(level, p) to x without materialising it.
  Point apply_inverse_transversal(std::size_t level, Point p, Point x) const;

  /// Union of all strong generators, without duplicates.
  std::vector<Permutation> strong_generators() const;

  BigInt order() const;

  /// Strips p through the chain; returns the residue and the level at which
  /// stripping stopped (length() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;

  bool contains(const Permutation& p) const;

  /// The unique element y with base()^y == images, if any. Requires images.size() == length().
  std::optional<Permutation> base_image_element(std::span<const Point> images) const;

  /// True when some group element maps base()[0..k) to images[0..k), k = images.size().
  bool has_base_image_prefix(std::span<const Point> images) const;

  /// Uniform random element (product of uniformly chosen transversal elements).
  Permutation random_element(std::mt19937_64& rng) const;

  /// Calls f on every element, in a fixed order. Stops early if f returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& f) const;

 private:
  static constexpr std::int32_t kAbsent = -2;
  static constexpr std::int32_t kRoot = -1;

  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> inverse_gens;
    std::vector<std::int32_t> label;  // generator index reaching the point, kRoot, or kAbsent
    std::vector<Point> parent;        // point^gens[label] == this point
    std::vector<Point> orbit;
  };

  void rebuild_orbit(Level& level) const;
  void add_level(Point base_point);

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with a lazily built, shared
/// stabiliser chain. Copies share the cache; the value is immutable.
class Group {
 public:
  Group() : Group(0, {}) {}
  Group(std::size_t degree, std::vector<Permutation> generators);

  static Group trivial(std::size_t degree) { return Group(degree, {}); }
  static Group symmetric(std::size_t degree);
  static Group alternating(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return chain().length() == 0; }

  /// True iff every generator of `other` lies in this group.
  bool contains_group(const Group& other) const;

  /// Mutual containment.
  friend bool same_group(const Group& a, const Group& b);

 private:
  struct ChainCache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

bool same_group(const Group& a, const Group& b);

/// A partition of {0..n-1} into blocks, each sorted; blocks sorted by first point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  bool is_trivial(std::size_t degree) const {
    return blocks.size() <= 1 || block_size() == 1 || degree <= 1;
  }
};

// Generating sets ------------------------------------------------------------

/// A generating set of <x> of size at most n, obtained by keeping only the
/// elements that do not sift through the chain built so far.
std::vector<Permutation> reduce_generators(std::span<const Permutation> x, std::size_t degree);

// Stabilisers and base images --------------------------------------------------

/// The stabiliser of `alpha`, generated by the strong generators at level 1
/// of a chain whose base starts at alpha.
Group point_stabiliser(const Group& g, Point alpha);

/// The pointwise stabiliser of a sequence of points.
Group pointwise_stabiliser(const Group& g, std::span<const Point> points);

/// Chain of g whose base begins with `prefix`.
StabilizerChain chain_with_base_prefix(const Group& g, std::span<const Point> prefix);

std::optional<Permutation> base_image_element(const StabilizerChain& chain, std::span<const Point> images);

// Orbits and blocks -------------------------------------------------------------

/// Orbits of <generators> on {0..n-1}, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> generators);
std::vector<std::vector<Point>> orbits(const Group& g);
std::vector<Point> orbit_of(Point p, std::span<const Permutation> generators);
bool is_transitive(const Group& g);

/// Finest block system in which `first` and `second` share a block. Requires g transitive.
BlockSystem minimal_block_system(const Group& g, Point first, Point second);

/// Returns a nontrivial block system if one exists. Requires g transitive.
std::optional<BlockSystem> find_nontrivial_block_system(const Group& g);
bool is_primitive(const Group& g);

// Normal closure ---------------------------------------------------------------

/// <s^g>: the smallest subgroup containing s that is normalised by g.
Group normal_closure(const Group& g, std::span<const Permutation> s);

/// Like normal_closure, but gives up (returning nullopt) as soon as the
/// partial closure contains every generator of `abort_if_contains`.
std::optional<Group> normal_closure_unless_contains(const Group& g, std::span<const Permutation> s,
                                                    std::span<const Group> abort_if_contains);

/// The group generated by the union of the generators of the given groups.
Group join(std::size_t degree, std::span<const Group> groups);

/// True iff x^s lies in g for every generator x of g and every s in `conjugators`.
bool normalises(std::span<const Permutation> conjugators, const Group& g);

/// All elements, sorted; refuses groups larger than `limit`.
std::vector<Permutation> elements(const Group& g, std::uint64_t limit = 1'000'000);

}  // namespace primnorm
