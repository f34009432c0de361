#include "ybfk/suite.hpp"

#include <gtest/gtest.h>

using namespace ybfk;

TEST(Suite, ThirteenNamedCriteria) {
  EXPECT_EQ(criterion_count(), 13);
  for (int id = 1; id <= criterion_count(); ++id)
    EXPECT_FALSE(criterion_name(id).empty());
  EXPECT_THROW(criterion_name(14), std::out_of_range);
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  for (int id : {4, 6, 9}) {
    SuiteConfig one{5, 1}, many{5, 6};
    EXPECT_EQ(to_json(run_criterion(id, one)).dump(), to_json(run_criterion(id, many)).dump()) << id;
  }
}
