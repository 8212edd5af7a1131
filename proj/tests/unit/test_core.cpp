#include <gtest/gtest.h>

#include <variant>

#include "spr/budget.hpp"
#include "spr/errors.hpp"
#include "spr/generators.hpp"
#include "spr/instance.hpp"
#include "spr/io.hpp"
#include "test_support.hpp"

namespace spr {
namespace {

using testing::data_path;
using testing::matching_of;

RawInstance example1_raw() { return example1_instance().to_raw(); }

TEST(Instance, Example1IsValid) {
  auto result = validate_instance(example1_raw());
  ASSERT_TRUE(std::holds_alternative<SprInstance>(result));
  const auto& inst = std::get<SprInstance>(result);
  EXPECT_EQ(inst.num_students(), 2u);
  EXPECT_EQ(inst.num_projects(), 2u);
  EXPECT_EQ(inst.num_resources(), 1u);
  EXPECT_EQ(inst.capacity(0), 1);
}

TEST(Instance, ZeroCapacityIsReported) {
  auto raw = example1_raw();
  raw.resources[0].capacity = 0;
  auto result = validate_instance(raw);
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  const auto& issues = std::get<ValidationReport>(result).issues;
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_NE(issues[0].find("capacity must be positive"), std::string::npos);
}

TEST(Instance, UndeclaredProjectIsNamed) {
  auto raw = example1_raw();
  raw.students[0].prefs.push_back("p_missing");
  auto result = validate_instance(raw);
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  const auto& issues = std::get<ValidationReport>(result).issues;
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_NE(issues[0].find("p_missing"), std::string::npos);
}

TEST(Instance, EveryViolationIsListed) {
  auto raw = example1_raw();
  raw.resources[0].capacity = -1;
  raw.resources[0].compatible.clear();
  raw.projects[0].prefs.push_back("s_b");
  raw.students.push_back({"s_a", {}});
  auto result = validate_instance(raw);
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  EXPECT_EQ(std::get<ValidationReport>(result).issues.size(), 4u);
  EXPECT_THROW(make_instance(raw), InvalidInstance);
}

TEST(Contracts, Example1HasFour) {
  const auto inst = example1_instance();
  const auto x = acceptable_contracts(inst);
  EXPECT_EQ(x.size(), 4u);
  EXPECT_TRUE(x.contains(0, 1));
}

TEST(Contracts, EmptyProjectListContributesNothing) {
  auto raw = example1_raw();
  raw.projects[1].prefs.clear();
  const auto inst = make_instance(raw);
  const auto x = acceptable_contracts(inst);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_FALSE(x.contains(0, 1));
  EXPECT_FALSE(x.contains(1, 1));
}

TEST(Contracts, StudentOnlyListedByProjectStillCounts) {
  // acceptability for the project alone decides membership in X
  auto raw = example1_raw();
  raw.students[0].prefs = {"p_a"};
  const auto x = acceptable_contracts(make_instance(raw));
  EXPECT_EQ(x.size(), 4u);
}

TEST(RequiredCapacity, EmptyMatchingIsZero) {
  const auto inst = example1_instance();
  EXPECT_EQ(required_capacity(inst, Matching(2)), (SeatVector{0, 0}));
}

TEST(RequiredCapacity, Example1SingleMatch) {
  const auto inst = example1_instance();
  EXPECT_EQ(required_capacity(inst, matching_of(inst, {{"s_a", "p_a"}})), (SeatVector{1, 0}));
}

TEST(Matching, ValidityRespectsContractsAndStudentLists) {
  auto raw = example1_raw();
  raw.students[0].prefs = {"p_a"};  // s_a finds p_b unacceptable
  const auto inst = make_instance(raw);
  EXPECT_TRUE(is_valid_matching(inst, matching_of(inst, {{"s_a", "p_a"}})));
  EXPECT_FALSE(is_valid_matching(inst, matching_of(inst, {{"s_a", "p_b"}})));
  EXPECT_THROW(require_valid_matching(inst, matching_of(inst, {{"s_a", "p_b"}})), ContractViolation);
}

TEST(Io, CanonicalRoundTripIsByteIdentical) {
  const std::string text = read_file(data_path("example1.json"));
  EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  EXPECT_EQ(serialize_instance(example1_instance()), text);
}

TEST(Io, RandomInstancesRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto text = serialize_instance(random_instance({}, seed));
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(Io, SyntaxErrorCarriesLocation) {
  try {
    parse_instance("{\"students\": [");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.location().empty());
  }
}

TEST(Io, WrongTypeIsParseError) {
  EXPECT_THROW(parse_instance(R"({"students": 3, "projects": [], "resources": []})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"students": [], "projects": []})"), ParseError);
}

TEST(Io, MissingFileIsParseError) { EXPECT_THROW(load_instance(data_path("missing.json")), ParseError); }

TEST(Io, MatchingAndAllocationRoundTrip) {
  const auto inst = example1_instance();
  const auto y = matching_of(inst, {{"s_b", "p_a"}});
  EXPECT_EQ(parse_matching(inst, serialize_matching(inst, y)), y);
  Allocation mu{{1}};
  EXPECT_EQ(parse_allocation(inst, serialize_allocation(inst, mu)), mu);
  EXPECT_THROW(parse_allocation(inst, R"({"placement": {}})"), InvalidInstance);
  EXPECT_THROW(parse_matching(inst, R"({"assignment": {"s_z": "p_a"}})"), InvalidInstance);
}

TEST(Budget, ParsesUniformAndKeyedForms) {
  auto b = Budget::parse("1e3");
  EXPECT_EQ(b.max_dp_states, 1000u);
  EXPECT_EQ(b.max_matchings, 1000u);
  b = Budget::parse("states=5,couples=7");
  EXPECT_EQ(b.max_dp_states, 5u);
  EXPECT_EQ(b.max_couples, 7u);
  EXPECT_EQ(b.max_matchings, Budget{}.max_matchings);
  EXPECT_THROW(Budget::parse("bogus=1"), std::invalid_argument);
  EXPECT_THROW(Budget::parse("12x"), std::invalid_argument);
}

}  // namespace
}  // namespace spr
