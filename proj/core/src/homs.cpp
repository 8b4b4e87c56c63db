#include "primnorm/homs.hpp"

#include <string>

#include "primnorm/errors.hpp"

namespace primnorm {

namespace {

Permutation graph_element(const Permutation& g, const Permutation& img) {
  const std::size_t m = g.degree();
  std::vector<Point> table(m + img.degree());
  for (Point x = 0; x < m; ++x) table[x] = g[x];
  for (Point x = 0; x < img.degree(); ++x) table[m + x] = static_cast<Point>(m + img[x]);
  return Permutation(std::move(table));
}

}  // namespace

Homomorphism::Homomorphism(GeneratorImageMap map) : map_(std::move(map)) {
  if (map_.domain_generators.size() != map_.images.size())
    throw InvalidArgument("generator-image map: " + std::to_string(map_.domain_generators.size()) +
                          " generators but " + std::to_string(map_.images.size()) + " images");
  domain_ = Group(map_.domain_degree, map_.domain_generators);
  image_ = Group(map_.codomain_degree, map_.images);
  std::vector<Permutation> graph_gens;
  graph_gens.reserve(map_.images.size());
  for (std::size_t i = 0; i < map_.images.size(); ++i)
    graph_gens.push_back(graph_element(map_.domain_generators[i], map_.images[i]));
  graph_ = Group(map_.domain_degree + map_.codomain_degree, std::move(graph_gens));
  if (graph_.order() != domain_.order())
    throw InvalidArgument("generator images do not define a homomorphism");
}

Permutation Homomorphism::evaluate(const Permutation& g) const {
  if (g.degree() != map_.domain_degree) throw InvalidArgument("hom_evaluate: degree mismatch");
  const StabilizerChain& chain = graph_.chain();
  std::vector<Point> target;
  target.reserve(chain.length());
  for (Point b : chain.base()) {
    if (b >= map_.domain_degree) throw InternalError("graph group base left the domain");
    target.push_back(g[b]);
  }
  const auto y = chain.base_image_element(target);
  bool matches = y.has_value();
  for (Point x = 0; matches && x < map_.domain_degree; ++x) matches = (*y)[x] == g[x];
  if (!matches) throw InvalidArgument("hom_evaluate: element is not in the domain group");
  std::vector<Point> table(map_.codomain_degree);
  for (Point x = 0; x < map_.codomain_degree; ++x)
    table[x] = static_cast<Point>((*y)[static_cast<Point>(map_.domain_degree + x)] - map_.domain_degree);
  return Permutation(std::move(table));
}

Homomorphism identity_hom(const Group& g) {
  return Homomorphism({g.degree(), g.degree(), g.generators(), g.generators()});
}

Homomorphism hom_compose(const Homomorphism& phi, const Homomorphism& psi) {
  if (phi.map().codomain_degree != psi.map().domain_degree) throw InvalidArgument("hom_compose: degree mismatch");
  GeneratorImageMap out{phi.map().domain_degree, psi.map().codomain_degree, phi.map().domain_generators, {}};
  for (const auto& img : phi.map().images) out.images.push_back(psi.evaluate(img));
  return Homomorphism(std::move(out));
}

Homomorphism hom_invert(const Homomorphism& phi) {
  if (!phi.is_injective())
    throw InvalidArgument("hom_invert: map is not injective (orders " + phi.domain().order().str() + " and " +
                          phi.image().order().str() + ")");
  return Homomorphism({phi.map().codomain_degree, phi.map().domain_degree, phi.map().images,
                       phi.map().domain_generators});
}

Homomorphism hom_restrict(const Homomorphism& phi, const Group& h) {
  if (h.degree() != phi.map().domain_degree) throw InvalidArgument("hom_restrict: degree mismatch");
  if (!phi.domain().contains_group(h)) throw InvalidArgument("hom_restrict: not a subgroup of the domain");
  GeneratorImageMap out{h.degree(), phi.map().codomain_degree, h.generators(), {}};
  for (const auto& g : h.generators()) out.images.push_back(phi.evaluate(g));
  return Homomorphism(std::move(out));
}

PointBijection PointBijection::inverse() const {
  PointBijection inv;
  inv.forward.resize(forward.size());
  for (std::size_t a = 0; a < forward.size(); ++a) inv.forward[forward[a]] = static_cast<Point>(a);
  return inv;
}

namespace {

// Defines f by f(0) = gamma and f(a^x) = f(a)^(x phi) along the orbit of 0;
// nullopt on any inconsistency.
std::optional<PointBijection> propagate_from(Point gamma, const Homomorphism& phi) {
  const auto& gens = phi.map().domain_generators;
  const auto& imgs = phi.map().images;
  const std::size_t n = phi.map().domain_degree;
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> f(n, kUnset);
  std::vector<bool> used(phi.map().codomain_degree, false);
  f[0] = gamma;
  used[gamma] = true;
  std::vector<Point> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point a = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Point b = gens[i][a];
      const Point fb = imgs[i][f[a]];
      if (f[b] == kUnset) {
        if (used[fb]) return std::nullopt;
        f[b] = fb;
        used[fb] = true;
        queue.push_back(b);
      } else if (f[b] != fb) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return PointBijection{std::move(f)};
}

}  // namespace

bool is_permutation_isomorphism(const PointBijection& f, const Homomorphism& phi) {
  const auto& gens = phi.map().domain_generators;
  const auto& imgs = phi.map().images;
  if (f.forward.size() != phi.map().domain_degree || phi.map().codomain_degree != f.forward.size()) return false;
  std::vector<bool> used(f.forward.size(), false);
  for (Point a : f.forward) {
    if (a >= used.size() || used[a]) return false;
    used[a] = true;
  }
  for (Point a = 0; a < f.forward.size(); ++a)
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (f(gens[i][a]) != imgs[i][f(a)]) return false;
  return true;
}

std::optional<PointBijection> perm_iso_from_group_iso(const Group& h, const Group& k, const Homomorphism& phi) {
  if (!is_transitive(h) || !is_transitive(k))
    throw PreconditionError("perm_iso_from_group_iso requires transitive groups");
  if (phi.map().domain_degree != h.degree() || phi.map().codomain_degree != k.degree() ||
      !same_group(phi.domain(), h) || !same_group(phi.image(), k) || !phi.is_injective())
    throw InvalidArgument("perm_iso_from_group_iso: map is not an isomorphism between the given groups");
  if (h.degree() != k.degree()) return std::nullopt;
  if (h.degree() == 0) return PointBijection{};

  const Group stab = point_stabiliser(h, 0);
  std::vector<Permutation> stab_images;
  for (const auto& s : stab.generators()) stab_images.push_back(phi.evaluate(s));

  for (Point gamma = 0; gamma < k.degree(); ++gamma) {
    bool fixed = true;
    for (const auto& s : stab_images) fixed = fixed && s[gamma] == gamma;
    if (!fixed) continue;
    if (auto f = propagate_from(gamma, phi)) return f;
  }
  return std::nullopt;
}

Permutation transport_back(const Permutation& y, const PointBijection& f, const PointBijection& f_inverse) {
  std::vector<Point> table(f.forward.size());
  for (Point x = 0; x < table.size(); ++x) table[x] = f_inverse(y[f(x)]);
  return Permutation(std::move(table));
}

}  // namespace primnorm
