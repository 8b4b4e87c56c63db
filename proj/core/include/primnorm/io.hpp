#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primnorm/errors.hpp"
#include "primnorm/group.hpp"

namespace primnorm {

/// A malformed group file. Line and column are 1-based.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Contents of a group file:
///
///     # comment
///     name: PSL(2,7)
///     degree: 8
///     order: 168          (optional)
///     gen: (1,2,3,4,5,6,7)
///     gen: [8,2,...]      (one-line image list)
///
/// Points are 1-based in the file and 0-based in memory.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::optional<BigInt> order;
  std::vector<Permutation> generators;

  Group group() const { return Group(degree, generators); }
};

/// With allow_unknown_keys, lines with other keys (as in result records) are skipped.
GroupFile parse_group_file(std::string_view text, const std::string& source = "<input>",
                           bool allow_unknown_keys = false);
GroupFile read_group_file(const std::filesystem::path& path);

/// Disjoint cycle notation with 1-based points; "()" for the identity.
std::string format_cycles(const Permutation& p);

/// Parses one permutation in cycle or image-list form.
Permutation parse_permutation(std::string_view text, std::size_t degree);

std::string format_group_file(const GroupFile& file);

}  // namespace primnorm
