#include "primnorm/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "primnorm/errors.hpp"

namespace primnorm {

namespace {

void check_degree(const Permutation& p, std::size_t degree) {
  if (p.degree() != degree)
    throw InvalidArgument("degree mismatch: expected " + std::to_string(degree) + ", got " +
                          std::to_string(p.degree()));
}

}  // namespace

// StabilizerChain ---------------------------------------------------------------

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.label.assign(degree_, kAbsent);
  level.parent.assign(degree_, 0);
  level.orbit.clear();
  level.label[level.base_point] = kRoot;
  level.parent[level.base_point] = level.base_point;
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point x = level.orbit[head];
    for (std::size_t g = 0; g < level.gens.size(); ++g) {
      Point y = level.gens[g][x];
      if (level.label[y] == kAbsent) {
        level.label[y] = static_cast<std::int32_t>(g);
        level.parent[y] = x;
        level.orbit.push_back(y);
      }
    }
  }
}

void StabilizerChain::add_level(Point base_point) {
  base_.push_back(base_point);
  Level level;
  level.base_point = base_point;
  levels_.push_back(std::move(level));
}

Permutation StabilizerChain::transversal(std::size_t level, Point p) const {
  const Level& L = levels_[level];
  std::vector<std::int32_t> path;
  for (Point q = p; L.label[q] != kRoot; q = L.parent[q]) path.push_back(L.label[q]);
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u *= L.gens[static_cast<std::size_t>(*it)];
  return u;
}

Point StabilizerChain::apply_inverse_transversal(std::size_t level, Point p, Point x) const {
  const Level& L = levels_[level];
  for (Point q = p; L.label[q] != kRoot; q = L.parent[q]) x = L.inverse_gens[static_cast<std::size_t>(L.label[q])][x];
  return x;
}

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  StabilizerChain chain;
  chain.degree_ = degree;

  std::vector<Permutation> gens;
  {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& g : generators) {
      check_degree(g, degree);
      if (!g.is_identity() && seen.insert(g).second) gens.push_back(g);
    }
  }

  std::vector<bool> in_base(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidArgument("base point " + std::to_string(b + 1) + " out of range");
    if (in_base[b]) throw InvalidArgument("repeated base point " + std::to_string(b + 1));
    in_base[b] = true;
    chain.add_level(b);
  }

  auto fixes_base = [&chain](const Permutation& p) {
    return std::all_of(chain.base_.begin(), chain.base_.end(), [&p](Point b) { return p[b] == b; });
  };
  // Level l holds the strong generators fixing base points 0..l-1.
  auto install = [&chain](const Permutation& p, std::size_t from) {
    Permutation inv = p.inverse();
    for (std::size_t l = from; l < chain.levels_.size(); ++l) {
      chain.levels_[l].gens.push_back(p);
      chain.levels_[l].inverse_gens.push_back(inv);
      if (p[chain.base_[l]] != chain.base_[l]) break;
    }
  };

  for (const auto& g : gens) {
    if (fixes_base(g)) chain.add_level(*g.smallest_moved_point());
    install(g, 0);
  }
  for (auto& level : chain.levels_) chain.rebuild_orbit(level);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  Permutation h(degree);
  while (i >= 0) {
    const auto lvl = static_cast<std::size_t>(i);
    bool restarted = false;
    const std::vector<Point> orbit = chain.levels_[lvl].orbit;
    for (Point gamma : orbit) {
      const Permutation u = chain.transversal(lvl, gamma);
      const std::size_t ngens = chain.levels_[lvl].gens.size();
      for (std::size_t s = 0; s < ngens && !restarted; ++s) {
        const Permutation& gen = chain.levels_[lvl].gens[s];
        const Point delta = gen[gamma];
        // Schreier generator u_gamma * s * u_delta^-1.
        std::vector<Point> img(degree);
        for (Point x = 0; x < degree; ++x) img[x] = chain.apply_inverse_transversal(lvl, delta, gen[u[x]]);
        h = Permutation(std::move(img));
        if (h.is_identity()) continue;
        auto [residue, drop] = chain.sift(h, lvl + 1);
        if (residue.is_identity()) continue;
        if (drop == chain.levels_.size()) chain.add_level(*residue.smallest_moved_point());
        Permutation inv = residue.inverse();
        for (std::size_t l = lvl + 1; l <= drop; ++l) {
          chain.levels_[l].gens.push_back(residue);
          chain.levels_[l].inverse_gens.push_back(inv);
          chain.rebuild_orbit(chain.levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
      }
      if (restarted) break;
    }
    if (!restarted) --i;
  }
  return chain;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& level : levels_)
    for (const auto& g : level.gens)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& level : levels_) o *= level.orbit.size();
  return o;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& p, std::size_t from_level) const {
  check_degree(p, degree_);
  Permutation h = p;
  std::vector<Point> img(degree_);
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Point gamma = h[base_[l]];
    if (levels_[l].label[gamma] == kAbsent) return {std::move(h), l};
    if (gamma == base_[l]) continue;
    for (Point x = 0; x < degree_; ++x) img[x] = apply_inverse_transversal(l, gamma, h[x]);
    h = Permutation(img);
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).first.is_identity();
}

std::optional<Permutation> StabilizerChain::base_image_element(std::span<const Point> images) const {
  if (images.size() != levels_.size())
    throw InvalidArgument("base image tuple has length " + std::to_string(images.size()) + ", base has length " +
                          std::to_string(levels_.size()));
  std::vector<Point> cur(images.begin(), images.end());
  for (std::size_t j = 0; j < cur.size(); ++j) {
    if (cur[j] >= degree_ || levels_[j].label[cur[j]] == kAbsent) return std::nullopt;
    for (std::size_t k = j + 1; k < cur.size(); ++k) cur[k] = apply_inverse_transversal(j, cur[j], cur[k]);
  }
  Permutation y(degree_);
  for (std::size_t j = cur.size(); j-- > 0;) y *= transversal(j, cur[j]);
  return y;
}

bool StabilizerChain::has_base_image_prefix(std::span<const Point> images) const {
  if (images.size() > levels_.size()) return false;
  std::vector<Point> cur(images.begin(), images.end());
  for (std::size_t j = 0; j < cur.size(); ++j) {
    if (cur[j] >= degree_ || levels_[j].label[cur[j]] == kAbsent) return false;
    for (std::size_t k = j + 1; k < cur.size(); ++k) cur[k] = apply_inverse_transversal(j, cur[j], cur[k]);
  }
  return true;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation y(degree_);
  for (std::size_t j = levels_.size(); j-- > 0;) {
    const auto& orb = levels_[j].orbit;
    std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
    y *= transversal(j, orb[pick(rng)]);
  }
  return y;
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& f) const {
  const std::size_t b = levels_.size();
  std::vector<std::vector<Permutation>> trans(b);
  for (std::size_t j = 0; j < b; ++j)
    for (Point p : levels_[j].orbit) trans[j].push_back(transversal(j, p));
  if (b == 0) {
    f(Permutation(degree_));
    return;
  }
  // Elements are v_{b-1} * ... * v_0 with v_j ranging over level j's transversal.
  std::vector<std::size_t> idx(b, 0);
  std::vector<Permutation> partial(b + 1, Permutation(degree_));
  std::size_t level = b;  // partial[l] == v_{b-1} * ... * v_l
  for (;;) {
    while (level > 0) {
      --level;
      partial[level] = partial[level + 1] * trans[level][idx[level]];
    }
    if (!f(partial[0])) return;
    // Odometer increment, least significant digit at level 0.
    while (level < b && ++idx[level] == trans[level].size()) {
      idx[level] = 0;
      ++level;
    }
    if (level == b) return;
    partial[level] = partial[level + 1] * trans[level][idx[level]];
  }
}

// Group ----------------------------------------------------------------------------

struct Group::ChainCache {
  std::once_flag once;
  StabilizerChain chain;
};

Group::Group(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  for (const auto& g : generators_) check_degree(g, degree_);
}

Group Group::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    if (degree > 2) gens.push_back(Permutation::from_cycles(degree, {cyc}));
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
  }
  return Group(degree, std::move(gens));
}

Group Group::alternating(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 3) {
    std::vector<Point> cyc;
    for (Point i = degree % 2 ? 0 : 1; i < degree; ++i) cyc.push_back(i);
    if (degree > 3) gens.push_back(Permutation::from_cycles(degree, {cyc}));
    gens.push_back(Permutation::from_cycles(degree, {{0, 1, 2}}));
  }
  return Group(degree, std::move(gens));
}

const StabilizerChain& Group::chain() const {
  std::call_once(cache_->once, [this] { cache_->chain = StabilizerChain::build(degree_, generators_); });
  return cache_->chain;
}

bool Group::contains(const Permutation& p) const {
  check_degree(p, degree_);
  return chain().contains(p);
}

bool Group::contains_group(const Group& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Permutation& g) { return chain().contains(g); });
}

bool same_group(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains_group(b);
}

// Generating sets -------------------------------------------------------------------

std::vector<Permutation> reduce_generators(std::span<const Permutation> x, std::size_t degree) {
  std::vector<Permutation> kept;
  StabilizerChain chain = StabilizerChain::build(degree, {});
  for (const auto& p : x) {
    check_degree(p, degree);
    if (p.is_identity() || chain.contains(p)) continue;
    kept.push_back(p);
    chain = StabilizerChain::build(degree, kept);
  }
  if (kept.size() > degree && degree > 0) {
    // Second pass: drop generators that are redundant given the others.
    const BigInt target = chain.order();
    for (std::size_t i = kept.size(); i-- > 0 && kept.size() > degree;) {
      std::vector<Permutation> rest = kept;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (StabilizerChain::build(degree, rest).order() == target) kept = std::move(rest);
    }
  }
  return kept;
}

// Stabilisers -------------------------------------------------------------------------

StabilizerChain chain_with_base_prefix(const Group& g, std::span<const Point> prefix) {
  // Seeding with the strong generators of the cached chain keeps rebuilds cheap.
  const auto strong = g.chain().strong_generators();
  return StabilizerChain::build(g.degree(), strong.empty() ? g.generators() : strong, prefix);
}

Group pointwise_stabiliser(const Group& g, std::span<const Point> points) {
  for (Point p : points)
    if (p >= g.degree()) throw InvalidArgument("point " + std::to_string(p + 1) + " out of range");
  std::vector<Point> prefix;
  for (Point p : points)
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end()) prefix.push_back(p);
  if (prefix.empty()) return g;
  const StabilizerChain chain = chain_with_base_prefix(g, prefix);
  if (chain.length() <= prefix.size()) return Group::trivial(g.degree());
  return Group(g.degree(), chain.level_generators(prefix.size()));
}

Group point_stabiliser(const Group& g, Point alpha) {
  const Point pts[] = {alpha};
  return pointwise_stabiliser(g, pts);
}

std::optional<Permutation> base_image_element(const StabilizerChain& chain, std::span<const Point> images) {
  return chain.base_image_element(images);
}

// Orbits and blocks ---------------------------------------------------------------------

std::vector<Point> orbit_of(Point p, std::span<const Permutation> generators) {
  const std::size_t n = generators.empty() ? p + 1 : generators.front().degree();
  std::vector<bool> seen(n, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto& g : generators) {
      Point y = g[orb[head]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> generators) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    std::vector<Point> orb{p};
    seen[p] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const auto& g : generators) {
        Point y = g[orb[head]];
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const Group& g) { return orbits(g.degree(), g.generators()); }

bool is_transitive(const Group& g) { return orbits(g).size() <= 1; }

BlockSystem minimal_block_system(const Group& g, Point first, Point second) {
  const std::size_t n = g.degree();
  if (first >= n || second >= n) throw InvalidArgument("seed point out of range");
  if (!is_transitive(g)) throw PreconditionError("minimal_block_system requires a transitive group");

  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&parent](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::deque<std::pair<Point, Point>> queue;
  if (first != second) {
    parent[find(second)] = find(first);
    queue.emplace_back(first, second);
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Point ra = find(s[a]), rb = find(s[b]);
      if (ra != rb) {
        parent[rb] = ra;
        queue.emplace_back(ra, rb);
      }
    }
  }

  std::vector<std::vector<Point>> by_root(n);
  for (Point x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  BlockSystem bs;
  for (auto& blk : by_root)
    if (!blk.empty()) bs.blocks.push_back(std::move(blk));
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

std::optional<BlockSystem> find_nontrivial_block_system(const Group& g) {
  for (Point b = 1; b < g.degree(); ++b) {
    BlockSystem bs = minimal_block_system(g, 0, b);
    if (!bs.is_trivial(g.degree())) return bs;
  }
  return std::nullopt;
}

bool is_primitive(const Group& g) {
  if (!is_transitive(g)) return false;
  return !find_nontrivial_block_system(g).has_value();
}

// Normal closure --------------------------------------------------------------------------

std::optional<Group> normal_closure_unless_contains(const Group& g, std::span<const Permutation> s,
                                                    std::span<const Group> abort_if_contains) {
  std::vector<Permutation> gens;
  for (const auto& x : s) {
    check_degree(x, g.degree());
    if (!x.is_identity()) gens.push_back(x);
  }
  Group h(g.degree(), reduce_generators(gens, g.degree()));
  auto should_abort = [&](const Group& cur) {
    return std::any_of(abort_if_contains.begin(), abort_if_contains.end(),
                       [&cur](const Group& a) { return !a.is_trivial() && cur.contains_group(a); });
  };
  if (should_abort(h)) return std::nullopt;

  std::vector<Permutation> hg = h.generators();
  for (std::size_t i = 0; i < hg.size(); ++i) {
    for (const auto& c : g.generators()) {
      Permutation conj = hg[i].conjugate(c);
      if (h.contains(conj)) continue;
      hg.push_back(std::move(conj));
      h = Group(g.degree(), hg);
      if (should_abort(h)) return std::nullopt;
    }
  }
  return h;
}

Group normal_closure(const Group& g, std::span<const Permutation> s) {
  return *normal_closure_unless_contains(g, s, {});
}

Group join(std::size_t degree, std::span<const Group> groups) {
  std::vector<Permutation> gens;
  for (const auto& grp : groups) {
    if (grp.degree() != degree) throw InvalidArgument("join: degree mismatch");
    gens.insert(gens.end(), grp.generators().begin(), grp.generators().end());
  }
  return Group(degree, std::move(gens));
}

bool normalises(std::span<const Permutation> conjugators, const Group& g) {
  for (const auto& s : conjugators) {
    if (s.degree() != g.degree()) return false;
    for (const auto& x : g.generators())
      if (!g.contains(x.conjugate(s))) return false;
  }
  return true;
}

std::vector<Permutation> elements(const Group& g, std::uint64_t limit) {
  if (g.order() > limit)
    throw BudgetExceeded("group of order " + g.order().str() + " exceeds enumeration limit " + std::to_string(limit));
  std::vector<Permutation> out;
  g.chain().for_each_element([&out](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace primnorm
