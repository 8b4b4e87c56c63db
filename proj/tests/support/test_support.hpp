#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "primnorm/group.hpp"
#include "primnorm/io.hpp"

namespace primnorm::testing {

inline std::filesystem::path corpus_dir() { return PRIMNORM_TEST_CORPUS_DIR; }

/// A permutation from 1-based cycles, as written in the literature.
inline Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  for (auto& c : cycles)
    for (auto& x : c) --x;
  return Permutation::from_cycles(n, cycles);
}

inline GroupFile load(const std::string& id) { return read_group_file(corpus_dir() / (id + ".grp")); }

struct CorpusEntry {
  std::string id;
  GroupFile file;
};

/// Every corpus file, sorted by id.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".grp") out.push_back({e.path().stem().string(), read_group_file(e.path())});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

inline std::vector<CorpusEntry> corpus_with_degree(std::size_t lo, std::size_t hi) {
  auto all = corpus();
  std::erase_if(all, [&](const CorpusEntry& e) { return e.file.degree < lo || e.file.degree > hi; });
  return all;
}

}  // namespace primnorm::testing
