#include <algorithm>
#include <numeric>
#include <string>

#include "primnorm/errors.hpp"
#include "primnorm/large_norm.hpp"

namespace primnorm {

namespace {

std::size_t small_binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

void check_subset_parameters(std::size_t m, std::size_t k) {
  if (m < 2 || k < 1 || 2 * k > m)
    throw InvalidArgument("subset action needs m >= 2 and 1 <= k <= m/2 (got m = " + std::to_string(m) +
                          ", k = " + std::to_string(k) + ")");
}

}  // namespace

std::size_t subset_rank(std::span<const Point> sorted_subset) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) r += small_binomial(sorted_subset[i], i + 1);
  return r;
}

std::vector<std::vector<Point>> subsets_colex(std::size_t m, std::size_t k) {
  std::vector<std::vector<Point>> out(small_binomial(m, k));
  std::vector<Point> s(k);
  std::iota(s.begin(), s.end(), Point{0});
  for (;;) {
    out[subset_rank(s)] = s;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Permutation induced_on_subsets(const Permutation& p, std::size_t k) {
  if (k == 1) return p;
  const auto subsets = subsets_colex(p.degree(), k);
  std::vector<Point> table(subsets.size());
  std::vector<Point> img(k);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i) img[i] = p[subsets[r][i]];
    std::sort(img.begin(), img.end());
    table[r] = static_cast<Point>(subset_rank(img));
  }
  return Permutation(std::move(table));
}

std::vector<Permutation> standard_generators(std::size_t m, Parity parity) {
  std::vector<Point> cycle(m);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  if (parity == Parity::symmetric)
    return {Permutation::from_cycles(m, {cycle}), Permutation::from_cycles(m, {{0, 1}})};
  if (m < 3) return {};
  if (m % 2 == 0) cycle.erase(cycle.begin());
  return {Permutation::from_cycles(m, {cycle}), Permutation::from_cycles(m, {{0, 1, 2}})};
}

Group subsets_action(std::size_t m, std::size_t k, Parity parity) {
  check_subset_parameters(m, k);
  std::vector<Permutation> gens;
  for (const auto& s : standard_generators(m, parity)) gens.push_back(induced_on_subsets(s, k));
  return Group(small_binomial(m, k), std::move(gens));
}

std::size_t tuple_index(std::span<const std::size_t> coords, std::size_t base_degree) {
  std::size_t idx = 0;
  for (std::size_t i = coords.size(); i-- > 0;) idx = idx * base_degree + coords[i];
  return idx;
}

Permutation embed_in_coordinate(const Permutation& p, std::size_t coordinate, std::size_t l) {
  const std::size_t d = p.degree();
  std::size_t low = 1;
  for (std::size_t i = 0; i < coordinate; ++i) low *= d;
  std::size_t n = low;
  for (std::size_t i = coordinate; i < l; ++i) n *= d;
  std::vector<Point> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t digit = (x / low) % d;
    table[x] = static_cast<Point>(x + (p[static_cast<Point>(digit)] - digit) * low);
  }
  return Permutation(std::move(table));
}

namespace {

// Permutes coordinates of Delta^l: coordinate i of the image is coordinate src[i] of the point.
Permutation coordinate_permutation(std::size_t d, std::size_t l, std::span<const std::size_t> src) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i) n *= d;
  std::vector<std::size_t> coords(l), out(l);
  std::vector<Point> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    for (std::size_t i = 0; i < l; ++i, y /= d) coords[i] = y % d;
    for (std::size_t i = 0; i < l; ++i) out[i] = coords[src[i]];
    table[x] = static_cast<Point>(tuple_index(out, d));
  }
  return Permutation(std::move(table));
}

// Moves block i of an imprimitive layout to block pi[i].
Permutation block_permutation(std::size_t d, std::span<const std::size_t> pi) {
  std::vector<Point> table(d * pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t x = 0; x < d; ++x) table[i * d + x] = static_cast<Point>(pi[i] * d + x);
  return Permutation(std::move(table));
}

}  // namespace

std::pair<Group, WreathSpec> wreath(std::size_t m, std::size_t k, std::size_t l, WreathAction action, Parity parity) {
  check_subset_parameters(m, k);
  if (l < 1) throw InvalidArgument("wreath needs l >= 1");
  WreathSpec spec;
  spec.params = {m, k, l};
  spec.action = action;
  spec.parity = parity;
  spec.base_degree = small_binomial(m, k);
  const std::size_t d = spec.base_degree;

  std::size_t n = 1;
  if (action == WreathAction::product) {
    for (std::size_t i = 0; i < l; ++i) {
      if (n > kMaxWreathDegree / d) throw InvalidArgument("wreath degree exceeds " + std::to_string(kMaxWreathDegree));
      n *= d;
    }
  } else {
    if (d > kMaxWreathDegree / l) throw InvalidArgument("wreath degree exceeds " + std::to_string(kMaxWreathDegree));
    n = d * l;
  }
  spec.degree = n;

  // l-cycle i -> i+1 and the swap of coordinates 0 and 1.
  std::vector<std::size_t> shift(l), swap(l);
  std::iota(swap.begin(), swap.end(), std::size_t{0});
  for (std::size_t i = 0; i < l; ++i) shift[(i + 1) % l] = i;
  if (l >= 2) std::swap(swap[0], swap[1]);

  for (const auto& s : standard_generators(m, parity)) {
    const Permutation base = induced_on_subsets(s, k);
    if (action == WreathAction::product) {
      spec.generators.push_back(embed_in_coordinate(base, 0, l));
    } else {
      std::vector<Point> table(n);
      std::iota(table.begin(), table.end(), Point{0});
      for (Point x = 0; x < d; ++x) table[x] = base[x];
      spec.generators.emplace_back(std::move(table));
    }
  }
  if (action == WreathAction::product) {
    spec.generators.push_back(coordinate_permutation(d, l, shift));
    spec.generators.push_back(coordinate_permutation(d, l, swap));
  } else {
    std::vector<std::size_t> forward(l);
    for (std::size_t i = 0; i < l; ++i) forward[shift[i]] = i;
    spec.generators.push_back(block_permutation(d, forward));
    spec.generators.push_back(block_permutation(d, swap));
  }
  return {Group(n, spec.generators), spec};
}

}  // namespace primnorm
