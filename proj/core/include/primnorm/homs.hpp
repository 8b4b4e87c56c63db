#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "primnorm/group.hpp"

namespace primnorm {

/// A homomorphism given by generator images: domain_generators[i] maps to images[i].
struct GeneratorImageMap {
  std::size_t domain_degree = 0;
  std::size_t codomain_degree = 0;
  std::vector<Permutation> domain_generators;
  std::vector<Permutation> images;
};

/// A generator-image map together with the stabiliser chain of its graph
/// group <(g_i, g_i phi)> on the disjoint union of domain and codomain
/// points. Construction verifies that the map extends to a homomorphism
/// and throws InvalidArgument otherwise.
class Homomorphism {
 public:
  explicit Homomorphism(GeneratorImageMap map);

  const GeneratorImageMap& map() const noexcept { return map_; }
  const Group& domain() const noexcept { return domain_; }
  /// The image group <images>.
  const Group& image() const noexcept { return image_; }

  /// Image of g. Throws InvalidArgument if g is not in the domain group.
  Permutation evaluate(const Permutation& g) const;

  bool is_injective() const { return image_.order() == domain_.order(); }

 private:
  GeneratorImageMap map_;
  Group domain_;
  Group image_;
  Group graph_;
};

/// Maps whose domain is spanned by `generators` and that send each to the same element.
Homomorphism identity_hom(const Group& g);

/// phi then psi (right-action composition: g -> (g phi) psi).
Homomorphism hom_compose(const Homomorphism& phi, const Homomorphism& psi);

/// Throws InvalidArgument when phi is not injective.
Homomorphism hom_invert(const Homomorphism& phi);

/// Throws InvalidArgument when h is not a subgroup of the domain.
Homomorphism hom_restrict(const Homomorphism& phi, const Group& h);

/// A bijection between two point sets: forward[a] is the image of a.
struct PointBijection {
  std::vector<Point> forward;

  Point operator()(Point a) const { return forward[a]; }
  PointBijection inverse() const;
};

/// Given transitive H on Omega, K on Gamma and an isomorphism phi: H -> K,
/// returns f with f(a^h) == f(a)^(h phi) for all a and h, or nullopt when
/// phi does not map point stabilisers to point stabilisers. Candidates for
/// the image of point 0 are tried in increasing order.
std::optional<PointBijection> perm_iso_from_group_iso(const Group& h, const Group& k, const Homomorphism& phi);

/// Checks f(a^x) == f(a)^(x phi) for every point and every domain generator.
bool is_permutation_isomorphism(const PointBijection& f, const Homomorphism& phi);

/// t(x) = f^-1(y(f(x))): moves y from the codomain of f to its domain.
Permutation transport_back(const Permutation& y, const PointBijection& f, const PointBijection& f_inverse);

}  // namespace primnorm
