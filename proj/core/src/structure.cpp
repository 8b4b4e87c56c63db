#include "primnorm/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "primnorm/errors.hpp"

namespace primnorm {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

// Maintains the inclusion-minimal normal closures seen so far.
class MinimalClosures {
 public:
  explicit MinimalClosures(const Group& g) : g_(g) {}

  // Returns true when the candidate set changed.
  bool offer(const Permutation& y) {
    if (y.is_identity()) return false;
    const Permutation gens[] = {y};
    std::optional<Group> k = normal_closure_unless_contains(g_, gens, candidates_);
    if (!k) return false;
    const BigInt order = k->order();
    std::erase_if(candidates_, [&](const Group& c) { return c.order() > order && c.contains_group(*k); });
    candidates_.push_back(std::move(*k));
    return true;
  }

  std::vector<Group> take() {
    std::sort(candidates_.begin(), candidates_.end(), [](const Group& a, const Group& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.generators() < b.generators();
    });
    return std::move(candidates_);
  }

 private:
  const Group& g_;
  std::vector<Group> candidates_;
};

std::vector<Permutation> conjugacy_class_representatives(const Group& g) {
  const auto elems = elements(g, kExhaustiveOrderLimit);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> reps;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    reps.push_back(x);
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (const auto& s : g.generators()) {
        Permutation c = cls[head].conjugate(s);
        if (seen.insert(c).second) cls.push_back(std::move(c));
      }
  }
  return reps;
}

}  // namespace

std::vector<Group> minimal_normal_subgroups(const Group& g, const SamplingOptions& opts) {
  if (g.is_trivial()) throw PreconditionError("minimal_normal_subgroups requires a nontrivial group");
  MinimalClosures closures(g);

  if (g.order() <= kExhaustiveOrderLimit) {
    for (const auto& x : conjugacy_class_representatives(g))
      if (is_prime(x.order())) closures.offer(x);
    return closures.take();
  }

  std::mt19937_64 rng(opts.seed);
  std::size_t stable = 0;
  for (std::size_t sample = 0; sample < opts.max_samples && stable < opts.stable_rounds; ++sample) {
    const Permutation x = g.chain().random_element(rng);
    bool changed = false;
    const std::uint64_t ord = x.order();
    for (std::uint64_t p : prime_divisors(ord)) changed |= closures.offer(x.pow(static_cast<std::int64_t>(ord / p)));
    stable = changed ? 0 : stable + 1;
  }
  return closures.take();
}

Group socle(const Group& g, const SamplingOptions& opts) {
  const auto mins = minimal_normal_subgroups(g, opts);
  Group joined = join(g.degree(), mins);
  return Group(g.degree(), reduce_generators(joined.generators(), g.degree()));
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

namespace {

bool factors_multiply_to(const std::vector<Group>& factors, const Group& s) {
  BigInt prod = 1;
  for (const auto& f : factors) prod *= f.order();
  if (prod != s.order()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (const auto& a : factors[i].generators())
        for (const auto& b : factors[j].generators())
          if (a * b != b * a) return false;
  return true;
}

}  // namespace

std::vector<Group> simple_direct_factors(const Group& s, const SamplingOptions& opts) {
  if (s.is_trivial()) return {};
  const std::size_t n = s.degree();

  if (is_abelian(s)) {
    const auto gens = reduce_generators(s.generators(), n);
    const std::uint64_t p = gens.front().order();
    if (!is_prime(p)) throw PreconditionError("abelian socle is not elementary abelian");
    std::vector<Group> factors;
    Group span = Group::trivial(n);
    std::vector<Permutation> spanned;
    for (const auto& x : gens) {
      if (x.order() != p) throw PreconditionError("abelian socle is not elementary abelian");
      if (span.contains(x)) continue;
      factors.emplace_back(n, std::vector<Permutation>{x});
      spanned.push_back(x);
      span = Group(n, spanned);
    }
    if (!factors_multiply_to(factors, s)) throw PreconditionError("input is not a direct product of simple groups");
    return factors;
  }

  SamplingOptions attempt = opts;
  for (int tries = 0; tries < 4; ++tries) {
    std::vector<Group> factors = minimal_normal_subgroups(s, attempt);
    if (factors_multiply_to(factors, s)) return factors;
    attempt.seed += 0x9e3779b97f4a7c15ull;
    attempt.stable_rounds *= 2;
  }
  throw PreconditionError("input is not a direct product of simple groups");
}

bool is_simple_nonabelian(const Group& t, const SamplingOptions& opts) {
  if (t.is_trivial() || is_abelian(t)) return false;
  const auto mins = minimal_normal_subgroups(t, opts);
  return mins.size() == 1 && mins.front().order() == t.order();
}

BigInt small_order_bound(std::size_t n) {
  if (n == 0) return 0;
  const std::size_t log2n = static_cast<std::size_t>(std::bit_width(n)) - 1;
  BigInt bound = 1;
  for (std::size_t i = 0; i < 1 + log2n; ++i) bound *= n;
  return bound;
}

void require_primitive(const Group& g, const char* op) {
  if (g.degree() <= 1) return;
  std::vector<std::vector<std::size_t>> witness;
  if (!is_transitive(g)) {
    for (const auto& o : orbits(g)) witness.emplace_back(o.begin(), o.end());
    throw ImprimitiveError(std::string(op) + ": the group is intransitive", std::move(witness));
  }
  if (auto bs = find_nontrivial_block_system(g)) {
    for (const auto& b : bs->blocks) witness.emplace_back(b.begin(), b.end());
    throw ImprimitiveError(std::string(op) + ": the group is imprimitive", std::move(witness));
  }
}

bool is_small(const Group& g) {
  require_primitive(g, "is_small");
  return g.order() < small_order_bound(g.degree());
}

bool is_almost_simple(const Group& g) {
  require_primitive(g, "is_almost_simple");
  if (g.is_trivial()) return false;
  return is_simple_nonabelian(socle(g));
}

BigInt binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

std::vector<LargeParameters> large_parameters(std::size_t n) {
  std::vector<LargeParameters> out;
  if (n < 2) return out;
  const BigInt target = n;
  for (std::size_t m = 5; m <= n; ++m) {
    for (std::size_t k = 1; k <= m / 2; ++k) {
      const BigInt c = binomial(m, k);
      if (c > target) break;
      BigInt power = c;
      std::size_t l = 1;
      while (power < target) {
        power *= c;
        ++l;
      }
      if (power == target) out.push_back({m, k, l});
    }
  }
  return out;
}

bool is_k_transitive(const Group& g, std::size_t k) {
  const std::size_t n = g.degree();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<Point> prefix(k);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  const StabilizerChain chain = chain_with_base_prefix(g, prefix);
  for (std::size_t i = 0; i < k; ++i)
    if (chain.orbit(i).size() != n - i) return false;
  return true;
}

bool is_mathieu_4transitive(const Group& g) {
  BigInt expected;
  switch (g.degree()) {
    case 11: expected = 7920; break;
    case 12: expected = 95040; break;
    case 23: expected = 10200960; break;
    case 24: expected = 244823040; break;
    default: return false;
  }
  return g.order() == expected && is_k_transitive(g, 4);
}

}  // namespace primnorm
