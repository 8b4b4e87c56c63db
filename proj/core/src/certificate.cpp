#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "primnorm/errors.hpp"
#include "primnorm/large_norm.hpp"

namespace primnorm {

namespace {

BigInt factorial(std::size_t m) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= i;
  return r;
}

// Orders of a few short words; an isomorphism has to preserve all of them.
std::vector<std::uint64_t> word_orders(const Permutation& a, const Permutation& b) {
  const Permutation a2 = a * a, b2 = b * b;
  const Permutation ab = a * b;
  return {ab.order(),
          (a * b2).order(),
          (a2 * b).order(),
          (ab * ab * b).order(),
          (ab * b2 * a).order(),
          (a.inverse() * b.inverse() * ab).order(),
          (a2 * b2).order(),
          (ab * a * b2 * a2 * b).order()};
}

// Passes exactly the images of 3-cycles in A_m, up to the outer automorphism
// of A_6: products of two conjugate 3-cycles have order 1, 2, 3 or 5.
bool looks_like_three_cycle(const Group& t, const Permutation& b, std::mt19937_64& rng) {
  if (b.order() != 3) return false;
  for (int i = 0; i < 48; ++i) {
    const auto o = (b * b.conjugate(t.chain().random_element(rng))).order();
    if (o != 1 && o != 2 && o != 3 && o != 5) return false;
  }
  return true;
}

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

// One element of A_m for each even cycle type of the given order.
std::vector<Permutation> even_class_representatives(std::size_t m, std::uint64_t order) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  partitions(m, m, cur, all);
  std::vector<Permutation> reps;
  for (const auto& part : all) {
    std::uint64_t l = 1;
    std::size_t even_cycles = 0;
    for (std::size_t c : part) {
      l = std::lcm(l, static_cast<std::uint64_t>(c));
      even_cycles += (c % 2 == 0);
    }
    if (l != order || even_cycles % 2) continue;
    std::vector<std::vector<Point>> cycles;
    Point next = 0;
    for (std::size_t c : part) {
      std::vector<Point> cycle(c);
      std::iota(cycle.begin(), cycle.end(), next);
      next += static_cast<Point>(c);
      if (c > 1) cycles.push_back(std::move(cycle));
    }
    reps.push_back(Permutation::from_cycles(m, cycles));
  }
  return reps;
}

std::vector<Permutation> three_cycles(std::size_t m) {
  std::vector<Permutation> out;
  for (Point i = 0; i < m; ++i)
    for (Point j = 0; j < m; ++j)
      for (Point k = 0; k < m; ++k)
        if (i < j && i < k && j != k) out.push_back(Permutation::from_cycles(m, {{i, j, k}}));
  return out;
}

std::size_t count_subsets(std::size_t m, std::size_t k) { return static_cast<std::size_t>(binomial(m, k)); }

}  // namespace

GeneratorImageMap iso_socle_to_standard(const Group& factor, std::size_t m, std::size_t k, std::uint64_t seed) {
  if (m < 5 || k < 1 || 2 * k > m) throw InvalidArgument("iso_socle_to_standard: bad parameters");
  if (factor.order() != factorial(m) / 2)
    throw InvalidArgument("iso_socle_to_standard: order " + factor.order().str() + " is not " +
                          BigInt(factorial(m) / 2).str());
  const std::size_t n = factor.degree();
  const BigInt target_order = factorial(m) / 2;
  std::mt19937_64 rng(seed);
  const auto& chain = factor.chain();
  const auto candidates_b = three_cycles(m);

  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // b: an element that behaves like a 3-cycle.
    std::optional<Permutation> b;
    for (int i = 0; i < 4000 && !b; ++i) {
      const Permutation x = chain.random_element(rng);
      const auto o = x.order();
      if (o % 3) continue;
      const Permutation y = x.pow(static_cast<std::int64_t>(o / 3));
      if (looks_like_three_cycle(factor, y, rng)) b = y;
    }
    if (!b) continue;

    // a: a partner generating the factor, preferring few candidate cycle types.
    std::optional<Permutation> a;
    std::vector<Permutation> reps;
    for (int i = 0, found = 0; i < 200 && found < 6; ++i) {
      const Permutation x = chain.random_element(rng);
      if (Group(n, {x, *b}).order() != target_order) continue;
      ++found;
      auto r = even_class_representatives(m, x.order());
      if (!a || r.size() < reps.size()) {
        a = x;
        reps = std::move(r);
      }
    }
    if (!a) continue;

    const auto wanted = word_orders(*a, *b);
    for (const auto& a_img : reps) {
      for (const auto& b_img : candidates_b) {
        if (word_orders(a_img, b_img) != wanted) continue;
        if (Group(m, {a_img, b_img}).order() != target_order) continue;
        try {
          Homomorphism check({n, m, {*a, *b}, {a_img, b_img}});
        } catch (const InvalidArgument&) {
          continue;
        }
        return {n, count_subsets(m, k), {*a, *b}, {induced_on_subsets(a_img, k), induced_on_subsets(b_img, k)}};
      }
    }
  }
  throw InvalidArgument("iso_socle_to_standard: no isomorphism onto A_" + std::to_string(m) + " found");
}

GeneratorImageMap outer_aut_a6(std::size_t k) {
  if (k < 1 || k > 3) throw InvalidArgument("outer_aut_a6 needs k in {1, 2, 3}");
  // A 5-cycle and a 3-cycle, sent to a 5-cycle and a product of two 3-cycles.
  const auto gens = standard_generators(6, Parity::alternating);
  const Permutation b_img = Permutation::from_cycles(6, {{0, 2, 4}, {1, 3, 5}});
  GeneratorImageMap tau{count_subsets(6, k), count_subsets(6, k), {}, {}};
  for (const auto& g : gens) tau.domain_generators.push_back(induced_on_subsets(g, k));
  tau.images = {induced_on_subsets(gens[0], k), induced_on_subsets(b_img, k)};
  return tau;
}

namespace {

bool order_compatible(const BigInt& order, const LargeParameters& p) {
  const BigInt half = factorial(p.m) / 2;
  BigInt low = 1, high = factorial(p.l);
  for (std::size_t i = 0; i < p.l; ++i) {
    low *= half;
    high *= half * 2;
  }
  return order % low == 0 && high % order == 0;
}

std::optional<PAContext> certify(const Group& g, const Group& s, const std::vector<Group>& factors,
                                 const LargeParameters& p) {
  const std::size_t n = g.degree();
  const std::size_t d = count_subsets(p.m, p.k);
  if (factors.size() != p.l) return std::nullopt;
  BigInt power = 1;
  for (std::size_t i = 0; i < p.l; ++i) power *= d;
  if (power != n) return std::nullopt;
  for (const auto& t : factors)
    if (t.order() != factorial(p.m) / 2) return std::nullopt;

  std::vector<GeneratorImageMap> isos;
  try {
    for (const auto& t : factors) isos.push_back(iso_socle_to_standard(t, p.m, p.k));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }

  const Group factor_standard = subsets_action(p.m, p.k, Parity::alternating);
  std::vector<Permutation> standard_gens;
  for (std::size_t i = 0; i < p.l; ++i)
    for (const auto& x : factor_standard.generators())
      standard_gens.push_back(embed_in_coordinate(x, i, p.l));
  const Group standard(n, standard_gens);

  std::vector<Permutation> socle_gens;
  for (const auto& iso : isos)
    socle_gens.insert(socle_gens.end(), iso.domain_generators.begin(), iso.domain_generators.end());
  const Group socle_group(n, socle_gens);

  std::optional<Homomorphism> tau;
  if (p.m == 6) tau.emplace(outer_aut_a6(p.k));
  const std::uint64_t twists = p.m == 6 ? (std::uint64_t{1} << p.l) : 1;

  for (std::uint64_t mask = 0; mask < twists; ++mask) {
    GeneratorImageMap iota{n, n, socle_gens, {}};
    for (std::size_t i = 0; i < p.l; ++i)
      for (const auto& img : isos[i].images)
        iota.images.push_back(embed_in_coordinate((mask >> i) & 1 ? tau->evaluate(img) : img, i, p.l));
    std::optional<Homomorphism> hom;
    try {
      hom.emplace(iota);
    } catch (const InvalidArgument&) {
      throw InternalError("factor isomorphisms do not combine to a homomorphism of the socle");
    }
    if (auto f = perm_iso_from_group_iso(socle_group, standard, *hom))
      return PAContext{g, s, p, standard, std::move(iota), std::move(*f), mask};
  }
  return std::nullopt;
}

struct SocleData {
  Group socle;
  std::vector<Group> factors;
};

std::optional<SocleData> nonabelian_socle(const Group& g, const SamplingOptions& sampling) {
  Group s = socle(g, sampling);
  if (is_abelian(s)) return std::nullopt;
  try {
    auto factors = simple_direct_factors(s, sampling);
    return SocleData{std::move(s), std::move(factors)};
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<PAContext> verify_large(const Group& g, const LargeParameters& params, const SamplingOptions& sampling) {
  if (params.m < 5 || params.k < 1 || 2 * params.k > params.m || params.l < 1) return std::nullopt;
  if (g.is_trivial() || !order_compatible(g.order(), params) || !is_transitive(g)) return std::nullopt;
  const auto data = nonabelian_socle(g, sampling);
  if (!data) return std::nullopt;
  return certify(g, data->socle, data->factors, params);
}

std::optional<PAContext> find_large_certificate(const Group& g, const SamplingOptions& sampling) {
  if (g.is_trivial() || !is_transitive(g)) return std::nullopt;
  std::vector<LargeParameters> plausible;
  for (const auto& p : large_parameters(g.degree()))
    if (order_compatible(g.order(), p)) plausible.push_back(p);
  if (plausible.empty()) return std::nullopt;
  const auto data = nonabelian_socle(g, sampling);
  if (!data) return std::nullopt;
  for (const auto& p : plausible)
    if (auto ctx = certify(g, data->socle, data->factors, p)) return ctx;
  return std::nullopt;
}

}  // namespace primnorm
