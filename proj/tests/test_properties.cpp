#include <gtest/gtest.h>

#include "strathom/properties.hpp"

using namespace strathom;

namespace {

constexpr std::size_t kInstances = 200;

void expect_ok(const props::PropertyReport& r, std::size_t count) {
  EXPECT_GE(r.instances, count) << r.name;
  for (const auto& f : r.failures) ADD_FAILURE() << r.name << ": " << f;
}

class Suite : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(Suite, RationalField) {
  auto suites = props::all<Rational>();
  const auto& s = suites.at(static_cast<std::size_t>(GetParam()));
  expect_ok(s.run(kInstances, 5150 + static_cast<std::uint32_t>(GetParam())), kInstances);
}

TEST_P(Suite, PrimeField) {
  ScopedPrimeField g(101);
  auto suites = props::all<Fp>();
  const auto& s = suites.at(static_cast<std::size_t>(GetParam()));
  expect_ok(s.run(kInstances, 8080 + static_cast<std::uint32_t>(GetParam())), kInstances);
}

INSTANTIATE_TEST_SUITE_P(Properties, Suite, ::testing::Range(0, 7), [](const auto& info) {
  std::string n = props::all<Rational>().at(static_cast<std::size_t>(info.param)).name;
  for (auto& c : n)
    if (c == '-') c = '_';
  return n;
});
