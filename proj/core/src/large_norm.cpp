#include "primnorm/large_norm.hpp"

#include <algorithm>
#include <string>

#include "primnorm/errors.hpp"

namespace primnorm {

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::small: return "small";
    case Branch::large_pa: return "large-PA";
    case Branch::large_as: return "large-AS";
  }
  return "?";
}

Group normaliser_of_socle_pa(const PAContext& ctx) {
  const auto& p = ctx.params;
  const auto [w, spec] = wreath(p.m, p.k, p.l, WreathAction::product);
  const PointBijection f_inv = ctx.f.inverse();
  std::vector<Permutation> gens;
  for (const auto& y : spec.generators) {
    Permutation t = transport_back(y, ctx.f, f_inv);
    if (!t.is_identity()) gens.push_back(std::move(t));
  }
  if (!normalises(gens, ctx.socle))
    throw InternalError("transported wreath generators do not normalise the socle; the certificate is invalid");
  return Group(ctx.g.degree(), std::move(gens));
}

CosetResult normaliser_via_cosets(const Group& g, const Group& m, std::size_t cap) {
  if (g.degree() != m.degree()) throw InvalidArgument("normaliser_via_cosets: degree mismatch");
  if (!m.contains_group(g)) throw InvalidArgument("normaliser_via_cosets: G is not a subgroup of M");
  const std::size_t n = g.degree();
  std::vector<Permutation> reps{Permutation(n)};
  std::vector<Permutation> inverses{Permutation(n)};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const auto& s : m.generators()) {
      Permutation c = reps[head] * s;
      const bool known =
          std::any_of(inverses.begin(), inverses.end(), [&](const Permutation& r) { return g.contains(c * r); });
      if (known) continue;
      if (reps.size() >= cap)
        throw BudgetExceeded("coset enumeration passed " + std::to_string(cap) +
                             " representatives: the index of G in M is too large");
      inverses.push_back(c.inverse());
      reps.push_back(std::move(c));
    }
  }
  std::vector<Permutation> gens = g.generators();
  for (const auto& h : reps)
    if (!h.is_identity() && normalises(std::span(&h, 1), g)) gens.push_back(h);
  return {Group(n, reduce_generators(gens, n)), reps.size()};
}

namespace {

NormaliserResult small_result(const Group& g, const NormaliserOptions& opts) {
  auto r = normaliser_small(g, opts.backtrack);
  return {std::move(r.normaliser), Branch::small, std::nullopt, r.stats.nodes, 0};
}

void check_result(const Group& g, const NormaliserResult& r) {
  if (!r.normaliser.contains_group(g) || !normalises(r.normaliser.generators(), g))
    throw InternalError(std::string("the ") + branch_name(r.branch) + " branch returned a group that does not normalise G");
}

}  // namespace

NormaliserResult normaliser_large(const PAContext& ctx, const NormaliserOptions& opts) {
  const Group m = normaliser_of_socle_pa(ctx);
  const Group joined = join(ctx.g.degree(), std::vector<Group>{m, ctx.g});
  auto cr = normaliser_via_cosets(ctx.g, joined, opts.coset_cap);
  NormaliserResult r{std::move(cr.normaliser), ctx.params.l == 1 ? Branch::large_as : Branch::large_pa, ctx.params,
                     0, cr.cosets};
  check_result(ctx.g, r);
  return r;
}

NormaliserResult normaliser_large(const Group& g, const NormaliserOptions& opts) {
  auto ctx = find_large_certificate(g, opts.sampling);
  if (!ctx) throw PreconditionError("normaliser_large: no large certificate for this group");
  return normaliser_large(*ctx, opts);
}

NormaliserResult normaliser_almost_simple(const Group& g, const NormaliserOptions& opts) {
  if (g.is_trivial() || !is_transitive(g)) throw PreconditionError("normaliser_almost_simple requires a transitive group");
  if (!is_simple_nonabelian(socle(g, opts.sampling), opts.sampling))
    throw PreconditionError("normaliser_almost_simple: the socle is not simple and nonabelian");
  // The transported S_{k,m} contains N only when G is primitive: for k = m/2
  // complementation commutes with G but lies outside it.
  const bool primitive = is_primitive(g);
  if (opts.force == NormaliserOptions::Force::large && !primitive)
    throw PreconditionError("normaliser_almost_simple: the large shortcut needs a primitive group");
  if (opts.force != NormaliserOptions::Force::small && primitive) {
    for (const auto& p : large_parameters(g.degree())) {
      if (p.l != 1) continue;
      if (auto ctx = verify_large(g, p, opts.sampling)) return normaliser_large(*ctx, opts);
    }
    if (opts.force == NormaliserOptions::Force::large)
      throw PreconditionError("normaliser_almost_simple: forced large, but no certificate exists");
  }
  auto r = small_result(g, opts);
  check_result(g, r);
  return r;
}

NormaliserResult normaliser_in_sym(const Group& g, const NormaliserOptions& opts) {
  const std::size_t n = g.degree();
  if (n <= 1) return {Group::trivial(n), Branch::small, std::nullopt, 0, 0};
  require_primitive(g, "normaliser_in_sym");
  if (opts.force != NormaliserOptions::Force::small) {
    if (auto ctx = find_large_certificate(g, opts.sampling)) return normaliser_large(*ctx, opts);
    if (opts.force == NormaliserOptions::Force::large)
      throw PreconditionError("forced the large branch, but the group has no large certificate");
  }
  auto r = small_result(g, opts);
  check_result(g, r);
  return r;
}

NormaliserResult normaliser_in_subgroup(const Group& g, const Group& h, const NormaliserOptions& opts,
                                        std::size_t cap) {
  if (g.degree() != h.degree()) throw InvalidArgument("normaliser_in_subgroup: degree mismatch");
  NormaliserResult r = normaliser_in_sym(g, opts);
  const Group& n_sym = r.normaliser;
  if (h.contains_group(n_sym)) return r;
  if (n_sym.contains_group(h)) {
    r.normaliser = h;
    return r;
  }
  // Orbit of the coset N under right multiplication by H; Schreier generators
  // of its stabiliser generate H ∩ N.
  const std::size_t deg = g.degree();
  std::vector<Permutation> reps{Permutation(deg)};
  std::vector<Permutation> inverses{Permutation(deg)};
  std::vector<Permutation> schreier;
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const auto& s : h.generators()) {
      Permutation c = reps[head] * s;
      bool known = false;
      for (const auto& inv : inverses) {
        Permutation q = c * inv;
        if (n_sym.contains(q)) {
          if (!q.is_identity()) schreier.push_back(std::move(q));
          known = true;
          break;
        }
      }
      if (known) continue;
      if (reps.size() >= cap)
        throw BudgetExceeded("normaliser_in_subgroup: more than " + std::to_string(cap) + " cosets");
      inverses.push_back(c.inverse());
      reps.push_back(std::move(c));
    }
  }
  r.normaliser = Group(deg, reduce_generators(schreier, deg));
  r.cosets += reps.size();
  if (!h.contains_group(r.normaliser) || !normalises(r.normaliser.generators(), g))
    throw InternalError("normaliser_in_subgroup produced an element outside H or outside the normaliser");
  return r;
}

}  // namespace primnorm
