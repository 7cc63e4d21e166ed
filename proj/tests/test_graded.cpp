#include <gtest/gtest.h>

#include "reeb/error.hpp"
#include "reeb/graded.hpp"

using namespace reeb;

TEST(Window, Parse) {
  EXPECT_EQ(parse_window("-3:50"), (Window{-3, 50}));
  EXPECT_EQ(parse_window("-10:-2"), (Window{-10, -2}));
  EXPECT_EQ(to_string(Window{-3, 50}), "-3:50");
  EXPECT_THROW(parse_window("3"), Error);
  EXPECT_THROW(parse_window("a:b"), Error);
  EXPECT_TRUE((Window{5, 4}).empty());
}

TEST(BettiTable, NeverStoresZero) {
  BettiTable b{{0, 1}, {2, 0}};
  EXPECT_EQ(b.entries().size(), 1U);
  b.add(0, -1);
  EXPECT_TRUE(b.empty());
  EXPECT_THROW(b.set(1, -1), Error);
  b.set(3, 2);
  EXPECT_EQ(b[3], 2);
  EXPECT_EQ(b[4], 0);
  EXPECT_EQ(b.min_degree(), 3);
}

TEST(GradedRanks, UnknownAndWindow) {
  GradedRanks r({0, 10});
  r.set(3, 2);
  r.mark_unknown(5);
  EXPECT_EQ(r.at(3), 2);
  EXPECT_EQ(r.at(4), 0);
  EXPECT_FALSE(r.at(5).has_value());
  EXPECT_TRUE(r.is_unknown(5));
  try {
    r.at(11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WindowMismatch);
  }
  const auto sub = r.restricted({4, 6});
  EXPECT_EQ(sub.window(), (Window{4, 6}));
  EXPECT_TRUE(sub.ranks().empty());
  EXPECT_TRUE(sub.is_unknown(5));
}
