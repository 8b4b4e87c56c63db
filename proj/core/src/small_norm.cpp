#include "primnorm/small_norm.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "primnorm/errors.hpp"
#include "primnorm/structure.hpp"

namespace primnorm {

std::size_t generating_set_bound(std::size_t n) {
  const std::size_t log2n = n ? static_cast<std::size_t>(std::bit_width(n)) - 1 : 0;
  return std::max<std::size_t>(2, log2n + 1);
}

std::size_t base_size_bound(std::size_t n) {
  const std::size_t log2n = n ? static_cast<std::size_t>(std::bit_width(n)) - 1 : 0;
  return 2 * log2n + 26;
}

// Generating sets ------------------------------------------------------------------

namespace {

bool generates(const Group& g, const std::vector<Permutation>& cand) {
  return Group(g.degree(), cand).order() == g.order();
}

// Calls f on each k-subset of {0..n-1} in lexicographic order until f returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Permutation> small_generating_set(const Group& g, std::uint64_t seed) {
  const std::size_t n = g.degree();
  const std::size_t bound = generating_set_bound(n);
  auto reduced = reduce_generators(g.generators(), n);
  if (reduced.size() <= 1) return reduced;

  std::mt19937_64 rng(seed);
  constexpr std::size_t kSample = 16;
  std::vector<Permutation> sample;
  for (std::size_t i = 0; i < kSample; ++i) sample.push_back(g.chain().random_element(rng));

  std::vector<Permutation> found;
  auto try_subset = [&](const std::vector<std::size_t>& idx, const std::vector<Permutation>& pool) {
    std::vector<Permutation> cand;
    for (std::size_t i : idx) cand.push_back(pool[i]);
    if (!generates(g, cand)) return false;
    found = std::move(cand);
    return true;
  };

  if (for_each_subset(sample.size(), 2, [&](const auto& idx) { return try_subset(idx, sample); })) return found;

  for (std::size_t t = 2; t <= std::min(bound, reduced.size()); ++t) {
    // Fresh random t-tuples first.
    for (int attempt = 0; attempt < 512; ++attempt) {
      std::vector<Permutation> cand;
      for (std::size_t i = 0; i < t; ++i) cand.push_back(g.chain().random_element(rng));
      if (generates(g, cand)) return cand;
    }
    // Exhaustive enumeration of t-subsets of the group where that is affordable.
    if (g.order() <= kExhaustiveOrderLimit && binomial(static_cast<std::size_t>(g.order()), t) <= 2'000'000) {
      const auto elems = elements(g, kExhaustiveOrderLimit);
      if (for_each_subset(elems.size(), t, [&](const auto& idx) { return try_subset(idx, elems); })) return found;
    }
  }
  if (reduced.size() <= bound) return reduced;
  throw InternalError("no generating set within max{2, log n} found for a group of degree " + std::to_string(n));
}

// Bases ----------------------------------------------------------------------------

std::vector<Point> greedy_base(const Group& g) {
  std::vector<Point> base;
  for (;;) {
    const StabilizerChain chain = chain_with_base_prefix(g, base);
    if (chain.length() <= base.size()) return base;
    std::optional<Point> next;
    for (const auto& s : chain.level_generators(base.size())) {
      auto p = s.smallest_moved_point();
      if (p && (!next || *p < *next)) next = p;
    }
    if (!next) return base;
    base.push_back(*next);
  }
}

std::vector<Point> small_base(const Group& g) {
  std::vector<Point> greedy = greedy_base(g);
  const std::size_t bound = base_size_bound(g.degree());
  if (greedy.size() <= bound) return greedy;
  const std::size_t n = g.degree();
  for (std::size_t b = 1; b <= bound; ++b) {
    std::vector<Point> found;
    // Ordered tuples of distinct points; a base stays a base under reordering,
    // so subsets suffice.
    const bool ok = for_each_subset(n, b, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> cand(idx.begin(), idx.end());
      if (chain_with_base_prefix(g, cand).length() != b) return false;
      found = std::move(cand);
      return true;
    });
    if (ok) return found;
  }
  throw InternalError("no base within 2 floor(log n) + 26 exists; the group cannot be primitive and non-large");
}

// Backtrack --------------------------------------------------------------------------

namespace {

constexpr std::int32_t kUnset = -1;
// Coset minimality is checked while at most this many points are assigned.
constexpr std::size_t kMinimalityDepth = 5;

struct Problem {
  std::size_t n = 0, t = 0, b = 0;
  Group g;
  std::vector<Permutation> x, x_inv;
  std::vector<std::vector<std::size_t>> x_types;
  std::vector<Point> beta;
  StabilizerChain chain;
  std::vector<std::vector<Permutation>> trans;  // trans[j][o], o in orbit j
  BacktrackOptions opts;
  std::atomic<std::uint64_t>* nodes = nullptr;
};

struct SubtreeResult {
  std::vector<Permutation> generators;
  std::vector<Permutation> accepted;
  std::uint64_t accepted_count = 0;
};

class Searcher {
 public:
  explicit Searcher(const Problem& p)
      : p_(p),
        fwd_(p.n, kUnset),
        inv_(p.n, kUnset),
        img_count_(p.n, 0),
        delta_(p.t, std::vector<Point>(p.b, 0)),
        y_(p.t),
        y_inv_(p.t),
        prefix_(p.t, std::vector<Permutation>(p.b + 1, Permutation(p.n))),
        alpha_(p.b, 0) {}

  SubtreeResult run(Point alpha1) {
    result_ = SubtreeResult{};
    local_ = Group::trivial(p_.n);
    const std::size_t mark = trail_.size();
    tick();
    if (assign(alpha1, p_.beta[0])) {
      alpha_[0] = alpha1;
      if (p_.opts.prune_early_resolution)
        lazy_row(0, 0);
      else
        eager_alpha(1);
    }
    undo(mark);
    return std::move(result_);
  }

 private:
  void tick() {
    const auto count = p_.nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    if (p_.opts.node_budget && count > p_.opts.node_budget)
      throw BudgetExceeded("backtrack exceeded its node budget of " + std::to_string(p_.opts.node_budget));
  }

  // Sets sigma(a) = v. Fails when a already has another image, or (with the
  // injectivity prune) when v already has a preimage.
  bool assign(Point a, Point v) {
    if (fwd_[a] != kUnset) return fwd_[a] == static_cast<std::int32_t>(v);
    if (p_.opts.prune_injectivity && img_count_[v] > 0) return false;
    fwd_[a] = static_cast<std::int32_t>(v);
    if (img_count_[v]++ == 0)
      inv_[v] = static_cast<std::int32_t>(a);
    else
      ++collisions_;
    trail_.push_back(a);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Point a = trail_.back();
      trail_.pop_back();
      const auto v = static_cast<Point>(fwd_[a]);
      fwd_[a] = kUnset;
      if (--img_count_[v] == 0)
        inv_[v] = kUnset;
      else
        --collisions_;
    }
  }

  // Whether d is least in its orbit under the pointwise stabiliser of the
  // images assigned so far.
  bool minimal_image(Point d) {
    if (!p_.opts.prune_coset_minimality || trail_.size() > kMinimalityDepth) return true;
    std::vector<Point> images;
    for (Point a : trail_) images.push_back(static_cast<Point>(fwd_[a]));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    auto it = least_in_orbit_.find(images);
    if (it == least_in_orbit_.end()) {
      std::vector<Point> least(p_.n);
      const Group stab = pointwise_stabiliser(p_.g, images);
      for (const auto& orbit : orbits(stab))
        for (Point q : orbit) least[q] = orbit.front();
      it = least_in_orbit_.emplace(std::move(images), std::move(least)).first;
    }
    return it->second[d] == d;
  }

  // Closes the partial map under sigma(mu^x_i) = sigma(mu)^y_i for resolved rows.
  bool propagate() {
    for (std::size_t head = 0; head < trail_.size(); ++head) {
      const Point mu = trail_[head];
      const auto s = static_cast<Point>(fwd_[mu]);
      for (std::size_t i = 0; i < resolved_; ++i) {
        if (!assign(p_.x[i][mu], y_[i][s])) return false;
        if (!assign(p_.x_inv[i][mu], y_inv_[i][s])) return false;
      }
    }
    return true;
  }

  bool resolve(std::size_t i, const Permutation& yi) {
    if (p_.opts.prune_cycle_type && yi.cycle_type() != p_.x_types[i]) return false;
    y_[i] = yi;
    y_inv_[i] = yi.inverse();
    return true;
  }

  // Rows of D, one base image at a time, restricted to realisable prefixes.
  void lazy_row(std::size_t i, std::size_t j) {
    if (j == p_.b) {
      if (!resolve(i, prefix_[i][p_.b])) return;
      resolved_ = i + 1;
      const std::size_t mark = trail_.size();
      if (propagate()) {
        if (i + 1 == p_.t)
          leaf();
        else
          lazy_row(i + 1, 0);
      }
      undo(mark);
      resolved_ = i;
      return;
    }

    // With injectivity, alpha_j is the unique preimage of beta_j once that exists.
    std::int32_t gamma = kUnset;
    std::int32_t forced = kUnset;
    if (p_.opts.prune_injectivity && img_count_[p_.beta[j]] == 1) {
      gamma = static_cast<std::int32_t>(p_.x[i][static_cast<Point>(inv_[p_.beta[j]])]);
      forced = fwd_[static_cast<Point>(gamma)];
    }
    const Permutation& pre = prefix_[i][j];
    for (Point o : p_.chain.orbit(j)) {
      const Point d = pre[o];
      if (forced != kUnset && d != static_cast<Point>(forced)) continue;
      if (forced == kUnset && gamma != kUnset && !minimal_image(d)) continue;
      tick();
      const std::size_t mark = trail_.size();
      if (gamma == kUnset || assign(static_cast<Point>(gamma), d)) {
        delta_[i][j] = d;
        prefix_[i][j + 1] = p_.trans[j][o] * pre;
        lazy_row(i, j + 1);
      }
      undo(mark);
    }
  }

  // Literal enumeration: all of A first, then D entry by entry.
  void eager_alpha(std::size_t j) {
    if (j == p_.b) {
      eager_delta(0, 0);
      return;
    }
    for (Point a = 0; a < p_.n; ++a) {
      tick();
      const std::size_t mark = trail_.size();
      if (assign(a, p_.beta[j])) {
        alpha_[j] = a;
        eager_alpha(j + 1);
      }
      undo(mark);
    }
  }

  void eager_delta(std::size_t i, std::size_t j) {
    if (j == p_.b) {
      ++i;
      j = 0;
    }
    if (i == p_.t) {
      eager_leaf();
      return;
    }
    const Point gamma = p_.x[i][alpha_[j]];
    if (fwd_[gamma] != kUnset) {
      tick();
      delta_[i][j] = static_cast<Point>(fwd_[gamma]);
      eager_delta(i, j + 1);
      return;
    }
    for (Point d = 0; d < p_.n; ++d) {
      if (!minimal_image(d)) continue;
      tick();
      const std::size_t mark = trail_.size();
      if (assign(gamma, d)) {
        delta_[i][j] = d;
        eager_delta(i, j + 1);
      }
      undo(mark);
    }
  }

  void eager_leaf() {
    if (collisions_) return;
    for (std::size_t i = 0; i < p_.t; ++i) {
      auto yi = p_.chain.base_image_element(delta_[i]);
      if (!yi || !resolve(i, *yi)) return;
    }
    resolved_ = p_.t;
    const std::size_t mark = trail_.size();
    if (propagate()) leaf();
    undo(mark);
    resolved_ = 0;
  }

  void leaf() {
    if (trail_.size() != p_.n || collisions_) return;
    std::vector<Point> table(p_.n);
    for (Point a = 0; a < p_.n; ++a) table[a] = static_cast<Point>(fwd_[a]);
    Permutation sigma(std::move(table));
    for (std::size_t i = 0; i < p_.t; ++i)
      if (!p_.chain.contains(p_.x[i].conjugate(sigma))) return;
    ++result_.accepted_count;
    if (p_.opts.record_accepted) result_.accepted.push_back(sigma);
    if (!local_.contains(sigma)) {
      result_.generators.push_back(sigma);
      local_ = Group(p_.n, result_.generators);
    }
  }

  const Problem& p_;
  std::vector<std::int32_t> fwd_, inv_;
  std::vector<std::uint32_t> img_count_;
  std::size_t collisions_ = 0;
  std::vector<Point> trail_;
  std::vector<std::vector<Point>> delta_;
  std::vector<Permutation> y_, y_inv_;
  std::size_t resolved_ = 0;
  std::vector<std::vector<Permutation>> prefix_;
  std::vector<Point> alpha_;
  SubtreeResult result_;
  Group local_;
  std::map<std::vector<Point>, std::vector<Point>> least_in_orbit_;
};

}  // namespace

BacktrackResult normaliser_backtrack(const Group& g, std::span<const Permutation> x, std::span<const Point> base,
                                     const BacktrackOptions& opts) {
  const std::size_t n = g.degree();
  if (!is_transitive(g)) throw PreconditionError("normaliser_backtrack requires a transitive group");
  BacktrackResult out;
  if (n <= 1) {
    out.normaliser = Group::trivial(n);
    out.stats.accepted = 1;
    if (opts.record_accepted) out.accepted.push_back(Permutation(n));
    return out;
  }

  Problem p;
  p.n = n;
  p.g = g;
  p.t = x.size();
  p.b = base.size();
  p.opts = opts;
  for (const auto& xi : x) {
    if (xi.degree() != n) throw InvalidArgument("generator degree mismatch");
    p.x.push_back(xi);
    p.x_inv.push_back(xi.inverse());
    p.x_types.push_back(xi.cycle_type());
  }
  if (!same_group(Group(n, p.x), g)) throw InvalidArgument("the given elements do not generate the group");
  p.beta.assign(base.begin(), base.end());
  p.chain = chain_with_base_prefix(g, p.beta);
  if (p.chain.length() != p.b) throw InvalidArgument("the given points are not a base");
  p.trans.resize(p.b);
  for (std::size_t j = 0; j < p.b; ++j) {
    p.trans[j].assign(n, Permutation());
    for (Point o : p.chain.orbit(j)) p.trans[j][o] = p.chain.transversal(j, o);
  }
  std::atomic<std::uint64_t> nodes{0};
  p.nodes = &nodes;

  std::vector<Point> candidates;
  if (opts.orbit_reduction)
    candidates.push_back(p.beta[0]);
  else
    for (Point a = 0; a < n; ++a) candidates.push_back(a);

  std::vector<SubtreeResult> results(candidates.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.threads, candidates.size()));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](std::size_t w) {
    try {
      Searcher s(p);
      for (std::size_t c = w; c < candidates.size(); c += workers) results[c] = s.run(candidates[c]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Permutation> gens;
  if (opts.orbit_reduction || opts.prune_coset_minimality) gens = p.x;
  for (auto& r : results) {
    out.stats.accepted += r.accepted_count;
    gens.insert(gens.end(), r.generators.begin(), r.generators.end());
    out.accepted.insert(out.accepted.end(), r.accepted.begin(), r.accepted.end());
  }
  std::sort(out.accepted.begin(), out.accepted.end());
  out.stats.nodes = nodes.load();
  out.normaliser = Group(n, reduce_generators(gens, n));
  if (!out.normaliser.contains_group(g)) throw InternalError("backtrack result does not contain the input group");
  return out;
}

BacktrackResult normaliser_small(const Group& g, const BacktrackOptions& opts) {
  const Group reduced(g.degree(), reduce_generators(g.generators(), g.degree()));
  auto gens = small_generating_set(reduced);
  const auto base = small_base(reduced);
  // A first generator that moves the first base point lets the first row
  // extend the partial map immediately.
  if (!base.empty())
    std::stable_partition(gens.begin(), gens.end(), [&](const Permutation& x) { return x[base.front()] != base.front(); });
  return normaliser_backtrack(reduced, gens, base, opts);
}

}  // namespace primnorm
