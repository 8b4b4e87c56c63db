#include "primnorm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "primnorm/errors.hpp"

namespace primnorm {

namespace {

// Grows a generating set one non-member at a time.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : n_(n), group_(Group::trivial(n)) {}

  void add(const Permutation& p) {
    if (group_.contains(p)) return;
    gens_.push_back(p);
    group_ = Group(n_, gens_);
  }

  Group take() { return Group(n_, reduce_generators(gens_, n_)); }

 private:
  std::size_t n_;
  std::vector<Permutation> gens_;
  Group group_;
};

}  // namespace

Group brute_force_normaliser(const Group& g, std::size_t n, const OracleBudget& budget) {
  if (g.degree() != n) throw InvalidArgument("brute_force_normaliser: degree mismatch");
  if (n > budget.max_symmetric_degree)
    throw BudgetExceeded("brute_force_normaliser: degree " + std::to_string(n) + " exceeds the oracle limit of " +
                         std::to_string(budget.max_symmetric_degree));
  Accumulator acc(n);
  std::vector<Point> table(n);
  std::iota(table.begin(), table.end(), Point{0});
  do {
    const Permutation s(table);
    bool ok = true;
    for (const auto& x : g.generators()) {
      if (!g.contains(x.conjugate(s))) {
        ok = false;
        break;
      }
    }
    if (ok) acc.add(s);
  } while (std::next_permutation(table.begin(), table.end()));
  return acc.take();
}

Group brute_force_intersection(const Group& g, const Group& h, const OracleBudget& budget) {
  if (g.degree() != h.degree()) throw InvalidArgument("brute_force_intersection: degree mismatch");
  const bool g_smaller = g.order() <= h.order();
  const Group& small = g_smaller ? g : h;
  const Group& other = g_smaller ? h : g;
  if (small.order() > budget.max_group_order)
    throw BudgetExceeded("brute_force_intersection: order " + small.order().str() + " exceeds the oracle limit of " +
                         std::to_string(budget.max_group_order));
  Accumulator acc(g.degree());
  small.chain().for_each_element([&](const Permutation& p) {
    if (other.contains(p)) acc.add(p);
    return true;
  });
  return acc.take();
}

bool verify_normalises(const Group& n, const Group& g) {
  if (n.degree() != g.degree()) throw InvalidArgument("verify_normalises: degree mismatch");
  return normalises(n.generators(), g);
}

}  // namespace primnorm
