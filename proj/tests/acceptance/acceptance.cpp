// One PASS/FAIL line per acceptance criterion; detail lines are indented.
// Exits nonzero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "primnorm/errors.hpp"
#include "primnorm/large_norm.hpp"
#include "primnorm/oracle.hpp"
#include "primnorm/small_norm.hpp"
#include "primnorm/structure.hpp"
#include "test_support.hpp"

using namespace primnorm;
using primnorm::testing::corpus;
using primnorm::testing::CorpusEntry;
using primnorm::testing::load;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      std::cout << "  fail: " << what << "\n";
    }
  }
  bool ok() const { return failures_ == 0; }

 private:
  int failures_ = 0;
};

void note(const std::string& s) { std::cout << "  " << s << "\n"; }

// 1. Oracle equivalence on degrees 5 to 8.
bool oracle_equivalence(Check& c) {
  std::size_t count = 0;
  for (const auto& e : primnorm::testing::corpus_with_degree(5, 8)) {
    const Group g = e.file.group();
    if (!is_primitive(g)) continue;
    ++count;
    const Group n = normaliser_in_sym(g).normaliser;
    const Group o = brute_force_normaliser(g, g.degree());
    c.expect(n.order() == o.order() && same_group(n, o), e.id + ": |N| = " + n.order().str() + ", oracle " +
                                                                o.order().str());
  }
  note(std::to_string(count) + " primitive groups of degree 5..8");
  c.expect(count >= 15, "fewer than 15 groups");
  return c.ok();
}

// 2. Named values, each also derived by the oracle in this run.
bool named_values(Check& c) {
  for (const auto& [id, expected] : std::vector<std::pair<std::string, int>>{{"c05", 20}, {"psl2_07", 336}, {"agl1_08", 168}}) {
    const Group g = load(id).group();
    const Group o = brute_force_normaliser(g, g.degree());
    const Group n = normaliser_in_sym(g).normaliser;
    note(id + ": oracle " + o.order().str() + ", computed " + n.order().str());
    c.expect(o.order() == expected, id + ": oracle order differs from " + std::to_string(expected));
    c.expect(same_group(n, o), id + ": computed normaliser differs from the oracle");
  }
  return c.ok();
}

// 3. The product-action pipeline on A5 wr C2.
bool large_pa(Check& c) {
  const Group g = load("a05wrc2").group();
  const auto ctx = find_large_certificate(g);
  c.expect(ctx.has_value(), "no certificate");
  if (!ctx) return false;
  const Group m = normaliser_of_socle_pa(*ctx);
  const auto r = normaliser_large(*ctx);
  note("|M| = " + m.order().str() + ", |N| = " + r.normaliser.order().str() + ", cosets " + std::to_string(r.cosets));
  c.expect(m.order() == 28800, "|M| is not 28800");
  c.expect(r.normaliser.order() == 14400, "|N| is not 14400");
  c.expect(verify_normalises(m, ctx->socle), "M does not normalise the socle");
  c.expect(verify_normalises(r.normaliser, g), "N does not normalise G");

  // Independently: split all of M into cosets of G and test a representative of each.
  const auto elems = elements(m);
  std::vector<bool> seen(elems.size(), false);
  auto index = [&](const Permutation& p) {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  const auto g_elems = elements(g);
  std::size_t cosets = 0, normalising = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    ++cosets;
    for (const auto& h : g_elems) seen[index(h * elems[i])] = true;
    bool ok = true;
    for (const auto& x : g.generators()) ok = ok && g.contains(x.conjugate(elems[i]));
    normalising += ok;
  }
  const BigInt n_order = BigInt(normalising) * g.order();
  note("exhaustive: " + std::to_string(cosets) + " cosets, " + std::to_string(normalising) + " normalise G, |N| = " +
       n_order.str());
  c.expect(cosets == 4, "G does not have 4 cosets in M");
  c.expect(n_order == r.normaliser.order(), "exhaustive coset test disagrees");
  return c.ok();
}

// 4. The m = 6 twist on A6^2.
bool a6_twist(Check& c) {
  for (const char* id : {"a06wrc2", "a06wrc2_scr"}) {
    const Group g = load(id).group();
    const auto ctx = find_large_certificate(g);
    c.expect(ctx.has_value(), std::string(id) + ": no certificate");
    if (!ctx) continue;
    const Group m = normaliser_of_socle_pa(*ctx);
    bool each = true;
    for (const auto& y : m.generators()) each = each && normalises(std::span(&y, 1), ctx->socle);
    note(std::string(id) + ": twist mask " + std::to_string(ctx->twist) + ", |M| = " + m.order().str());
    c.expect(each, std::string(id) + ": a transported generator does not normalise the socle");
    c.expect(m.order() == BigInt(720) * 720 * 2, std::string(id) + ": |M| is not 720^2 * 2");
  }
  return c.ok();
}

// 5. Both branches agree wherever both apply.
bool branch_agreement(Check& c) {
  NormaliserOptions small, large;
  small.force = NormaliserOptions::Force::small;
  large.force = NormaliserOptions::Force::large;
  std::size_t count = 0;
  for (const auto& e : corpus()) {
    const Group g = e.file.group();
    if (!is_small(g) || !find_large_certificate(g)) continue;
    ++count;
    const auto t = Clock::now();
    const auto a = normaliser_in_sym(g, small);
    const auto b = normaliser_in_sym(g, large);
    std::ostringstream s;
    s << e.id << ": |N| = " << a.normaliser.order() << " (small, " << a.nodes << " nodes), " << b.normaliser.order()
      << " (" << branch_name(b.branch) << "), " << seconds_since(t) << " s";
    note(s.str());
    c.expect(same_group(a.normaliser, b.normaliser), e.id + ": branches differ");
  }
  c.expect(count > 0, "no group is both small and large");
  return c.ok();
}

// 6. Base size bound on non-large groups.
bool base_bound(Check& c) {
  std::ostringstream sizes;
  for (const auto& e : corpus()) {
    const Group g = e.file.group();
    if (find_large_certificate(g)) continue;
    const std::size_t n = g.degree();
    const std::size_t bound = 2 * (std::bit_width(n) - 1) + 26;
    const auto b = small_base(g);
    sizes << " " << e.id << "=" << greedy_base(g).size() << "/" << b.size();
    c.expect(b.size() <= bound, e.id + ": base of size " + std::to_string(b.size()) + " > " + std::to_string(bound));
    c.expect(pointwise_stabiliser(g, b).is_trivial(), e.id + ": small_base is not a base");
  }
  note("greedy/small base sizes:" + sizes.str());
  return c.ok();
}

// The last term of the derived series.
Group perfect_core(const Group& g) {
  Group d = g;
  for (;;) {
    std::vector<Permutation> comm;
    const auto& s = d.generators();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) comm.push_back(s[i].inverse() * s[j].inverse() * s[i] * s[j]);
    const Group next = normal_closure(d, comm);
    if (next.order() == d.order()) return d;
    d = next;
  }
}

// Nonabelian simplicity: the normal closure of every conjugacy class
// representative is the whole group. Alternating groups in their natural
// action are recognised by degree and order and are simple from degree 5 on.
std::optional<bool> simple_nonabelian(const Group& d) {
  const auto& gens = d.generators();
  const bool abelian = std::all_of(gens.begin(), gens.end(), [&](const Permutation& x) {
    return std::all_of(gens.begin(), gens.end(), [&](const Permutation& y) { return x * y == y * x; });
  });
  if (abelian) return false;
  if (d.degree() >= 5 && d.order() == Group::alternating(d.degree()).order()) return true;
  if (d.order() > 1'000'000) return std::nullopt;
  const auto elems = elements(d);
  std::vector<bool> seen(elems.size(), false);
  auto index = [&](const Permutation& p) {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& s : d.generators()) {
        const auto k = index(elems[queue[h]].conjugate(s));
        if (!seen[k]) {
          seen[k] = true;
          queue.push_back(k);
        }
      }
    if (elems[i].is_identity()) continue;
    if (normal_closure(d, std::span(&elems[i], 1)).order() != d.order()) return false;
  }
  return true;
}

std::optional<LargeParameters> expected_large(const std::string& id) {
  // Names from the corpus generator: sNN / aNN natural, {a,s}NN_pairs, wreaths and squares.
  std::smatch m;
  const std::string base = std::regex_replace(id, std::regex("_scr$"), "");
  if (std::regex_match(base, m, std::regex("[as](\\d\\d)"))) {
    const std::size_t deg = std::stoul(m[1]);
    if (deg >= 5) return LargeParameters{deg, 1, 1};
    return std::nullopt;
  }
  if (std::regex_match(base, m, std::regex("[as](\\d\\d)_pairs"))) return LargeParameters{std::stoul(m[1]), 2, 1};
  if (std::regex_match(base, m, std::regex("[as](\\d\\d)(wr[cs]2|sq_\\w+)"))) return LargeParameters{std::stoul(m[1]), 1, 2};
  return std::nullopt;
}

// 7. The trichotomy flags against independent computations.
bool trichotomy(Check& c) {
  std::size_t sampled = 0;
  for (const auto& e : corpus()) {
    const Group g = e.file.group();
    const auto cl = classify(g);
    const std::size_t n = g.degree();
    BigInt bound = 1;
    for (std::size_t i = 0; i < 1 + (std::bit_width(n) - 1); ++i) bound *= n;
    c.expect(cl.small == (g.order() < bound), e.id + ": small flag disagrees with the order arithmetic");
    c.expect(cl.small || cl.large || cl.almost_simple, e.id + ": no flag set");

    const auto simple = simple_nonabelian(perfect_core(g));
    if (simple)
      c.expect(cl.almost_simple == *simple, e.id + ": almost simple flag disagrees with the perfect core");
    else
      ++sampled;

    const auto expected = expected_large(e.id);
    c.expect(cl.large == expected, e.id + ": large flag disagrees with the construction");
    if (cl.large) {
      const auto ctx = verify_large(g, *cl.large);
      c.expect(ctx && is_permutation_isomorphism(ctx->f, Homomorphism(ctx->iota)),
               e.id + ": certificate does not check");
    }
  }
  if (sampled) note(std::to_string(sampled) + " groups too large for the exhaustive simplicity check");
  return c.ok();
}

// 8. Disabling every prune leaves the result unchanged.
bool pruning_soundness(Check& c) {
  BacktrackOptions off;
  off.prune_cycle_type = off.prune_injectivity = off.prune_early_resolution = false;
  off.prune_coset_minimality = off.orbit_reduction = false;
  std::size_t count = 0;
  for (const auto& e : primnorm::testing::corpus_with_degree(0, 8)) {
    const Group g = e.file.group();
    const auto on = normaliser_small(g);
    const auto bare = normaliser_small(g, off);
    ++count;
    c.expect(same_group(on.normaliser, bare.normaliser), e.id + ": prunes change the result");
    note(e.id + ": nodes " + std::to_string(on.stats.nodes) + " with prunes, " + std::to_string(bare.stats.nodes) +
         " without");
  }
  c.expect(count > 0, "no groups of degree <= 8");
  return c.ok();
}

// 9. Every group of degree <= 32 within ten minutes.
bool performance(Check& c) {
  double worst = 0;
  std::string worst_id;
  for (const auto& e : primnorm::testing::corpus_with_degree(0, 32)) {
    const Group g = e.file.group();
    const auto t = Clock::now();
    try {
      const auto r = normaliser_in_sym(g);
      const double s = seconds_since(t);
      std::ostringstream line;
      line << e.id << ": n=" << g.degree() << " branch=" << branch_name(r.branch) << " nodes=" << r.nodes
           << " cosets=" << r.cosets << " |N|=" << r.normaliser.order() << " " << s << " s";
      note(line.str());
      c.expect(s < 600, e.id + ": took longer than 10 minutes");
      if (s > worst) worst = s, worst_id = e.id;
    } catch (const Error& ex) {
      c.expect(false, e.id + ": " + ex.what());
    }
  }
  note("slowest: " + worst_id + " " + std::to_string(worst) + " s");
  return c.ok();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria{
      {"oracle equivalence on degrees 5-8", oracle_equivalence},
      {"named normaliser orders 20, 336, 168", named_values},
      {"product-action pipeline on A5 wr C2", large_pa},
      {"A6^2 twist and |M| = 720^2*2", a6_twist},
      {"small and large branches agree", branch_agreement},
      {"base size <= 2 floor(log2 n) + 26", base_bound},
      {"classification flags", trichotomy},
      {"prunes do not change the result", pruning_soundness},
      {"degree <= 32 within 10 minutes each", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(c);
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    std::printf("%s criterion %zu: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t));
    std::fflush(stdout);
    failed += !ok;
  }
  return failed ? 1 : 0;
}
