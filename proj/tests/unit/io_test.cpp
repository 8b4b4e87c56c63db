#include "primnorm/io.hpp"

#include <gtest/gtest.h>

#include "primnorm/errors.hpp"
#include "test_support.hpp"

using namespace primnorm;
using primnorm::testing::cyc;

TEST(Parse, CyclesAndImageLists) {
  EXPECT_EQ(parse_permutation("(1,2,3)(4,5)", 6), cyc(6, {{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(parse_permutation("[2,3,1]", 3), cyc(3, {{1, 2, 3}}));
  EXPECT_EQ(parse_permutation("()", 4), Permutation(4));
  EXPECT_EQ(parse_permutation(" ( 1 , 4 ) ", 4), cyc(4, {{1, 4}}));
}

TEST(Parse, RejectsBadPermutations) {
  EXPECT_THROW(parse_permutation("(1,2", 3), InvalidArgument);
  EXPECT_THROW(parse_permutation("(1,5)", 4), InvalidArgument);
  EXPECT_THROW(parse_permutation("(1,2)(2,3)", 4), InvalidArgument);
  EXPECT_THROW(parse_permutation("(0,1)", 4), InvalidArgument);
  EXPECT_THROW(parse_permutation("[1,1,2]", 3), InvalidArgument);
  EXPECT_THROW(parse_permutation("[1,2]", 3), InvalidArgument);
}

TEST(Parse, GroupFile) {
  const auto f = parse_group_file(
      "# a comment\n"
      "name: C5\n"
      "degree: 5\n"
      "order: 5\n"
      "\n"
      "gen: (1,2,3,4,5)  # trailing comment\n");
  EXPECT_EQ(f.name, "C5");
  EXPECT_EQ(f.degree, 5u);
  ASSERT_TRUE(f.order.has_value());
  EXPECT_EQ(*f.order, 5);
  ASSERT_EQ(f.generators.size(), 1u);
  EXPECT_EQ(f.group().order(), 5);
}

TEST(Parse, GeneratorsMayPrecedeTheDegree) {
  const auto f = parse_group_file("gen: (1,2)\ndegree: 3\n");
  EXPECT_EQ(f.generators.at(0), cyc(3, {{1, 2}}));
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_group_file("degree: 3\ngen: (1,2\n", "t.grp");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GE(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("t.grp"), std::string::npos);
  }
  EXPECT_THROW(parse_group_file("gen: (1,2)\n"), ParseError);
  EXPECT_THROW(parse_group_file("degree: three\n"), ParseError);
  EXPECT_THROW(parse_group_file("degree: 3\ncolour: red\n"), ParseError);
  EXPECT_NO_THROW(parse_group_file("degree: 3\ncolour: red\n", "<input>", true));
  EXPECT_THROW(parse_group_file("degree: 3\ndegree: 4\n"), ParseError);
  EXPECT_THROW(parse_group_file("degree 3\n"), ParseError);
}

TEST(Format, RoundTrip) {
  const Permutation p = cyc(9, {{1, 9, 4}, {2, 3}});
  EXPECT_EQ(format_cycles(p), "(1,9,4)(2,3)");
  EXPECT_EQ(format_cycles(Permutation(3)), "()");
  GroupFile f{"PSL(2,7)", 8, BigInt(168), primnorm::testing::load("psl2_07").generators};
  const auto back = parse_group_file(format_group_file(f));
  EXPECT_EQ(back.name, f.name);
  EXPECT_EQ(back.degree, f.degree);
  EXPECT_EQ(back.order, f.order);
  EXPECT_EQ(back.generators, f.generators);
}

TEST(Read, MissingFile) { EXPECT_THROW(read_group_file("/nonexistent/x.grp"), InvalidArgument); }
