#include "fiscalstab/taxonomy.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fiscalstab/error.hpp"

namespace ft = fiscalstab::taxonomy;
using ft::StabiliserClass;

namespace {

ft::StabiliserDescriptor fiscal_base() {
  ft::StabiliserDescriptor d;
  d.is_institutional_device = d.counters_change = d.overproportional =
      d.reduces_gap_actual_desired = true;
  d.controls_gdp_change = d.aims_reduce_gdp_volatility = true;
  d.formal_normative = true;
  return d;
}

ft::StabiliserDescriptor random_descriptor(std::mt19937_64& rng) {
  // Bias booleans toward true so deep classes are actually exercised.
  std::bernoulli_distribution b(0.85);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> three(0, 2);
  ft::StabiliserDescriptor d;
  d.is_institutional_device = b(rng);
  d.counters_change = b(rng);
  d.overproportional = b(rng);
  d.reduces_gap_actual_desired = b(rng);
  d.controls_gdp_change = b(rng);
  d.aims_reduce_gdp_volatility = b(rng);
  d.formal_normative = b(rng);
  d.action_mode = coin(rng) ? ft::ActionMode::explicit_action : ft::ActionMode::implicit_action;
  d.control_shape = coin(rng) ? ft::ControlShape::linear : ft::ControlShape::nonlinear;
  d.action_continuity =
      coin(rng) ? ft::ActionContinuity::discrete : ft::ActionContinuity::continuous;
  d.target = static_cast<ft::Target>(three(rng));
  return d;
}

}  // namespace

TEST(Classify, AutomaticRevenueSpecies) {
  auto d = fiscal_base();
  d.action_mode = ft::ActionMode::implicit_action;
  d.control_shape = ft::ControlShape::nonlinear;
  d.action_continuity = ft::ActionContinuity::discrete;
  d.target = ft::Target::revenue;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SFAv);
}

TEST(Classify, NonAutomaticExpenditureSpecies) {
  auto d = fiscal_base();
  d.action_mode = ft::ActionMode::explicit_action;
  d.control_shape = ft::ControlShape::linear;
  d.target = ft::Target::expenditure;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SFnAc);
}

TEST(Classify, MissingSufficiencyPredicate) {
  auto d = fiscal_base();
  d.counters_change = false;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::NotStabiliser);
}

TEST(Classify, LevelsAboveTheFamily) {
  auto d = fiscal_base();
  d.formal_normative = false;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SM);
  d.aims_reduce_gdp_volatility = false;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::S);
}

TEST(Classify, SpeciesGatingFallsBackToGenus) {
  auto d = fiscal_base();
  d.action_mode = ft::ActionMode::implicit_action;
  d.target = ft::Target::revenue;
  d.control_shape = ft::ControlShape::linear;  // wrong shape for the automatic branch
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SFA);

  d.control_shape = ft::ControlShape::nonlinear;
  d.action_continuity = ft::ActionContinuity::continuous;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SFA);

  d.action_continuity = ft::ActionContinuity::discrete;
  d.target = ft::Target::none;
  EXPECT_EQ(ft::classify_stabiliser(d), StabiliserClass::SFA);

  auto n = fiscal_base();
  n.target = ft::Target::revenue;
  n.control_shape = ft::ControlShape::nonlinear;
  EXPECT_EQ(ft::classify_stabiliser(n), StabiliserClass::SFnA);
}

TEST(Classify, SubsumptionAndExclusivityOnRandomDescriptors) {
  std::mt19937_64 rng(2024);
  std::set<StabiliserClass> terminal, on_path;
  for (int i = 0; i < 10000; ++i) {
    const auto d = random_descriptor(rng);
    const auto cls = ft::classify_stabiliser(d);
    terminal.insert(cls);
    for (auto c = std::optional<StabiliserClass>(cls); c && *c != StabiliserClass::NotStabiliser;
         c = ft::parent(*c)) {
      EXPECT_TRUE(ft::holds(*c, d)) << ft::to_string(*c);
      on_path.insert(*c);
    }
    EXPECT_FALSE(ft::holds(StabiliserClass::SFnA, d) && ft::holds(StabiliserClass::SFA, d));
  }
  for (auto c : ft::kStabiliserClasses) EXPECT_EQ(on_path.count(c), 1u) << ft::to_string(c);
  // action_mode is binary, so every fiscal stabiliser refines to SFnA or SFA.
  EXPECT_EQ(terminal.count(StabiliserClass::SF), 0u);
  EXPECT_EQ(terminal.size(), 9u);
}

TEST(ParseDescriptor, KeyValuePairs) {
  const auto d = ft::parse_descriptor({{"counters_change", "true"},
                                       {"overproportional", "1"},
                                       {"action_mode", "implicit"},
                                       {"control_shape", "NonLinear"},
                                       {"target", "expenditure"}});
  EXPECT_TRUE(d.counters_change);
  EXPECT_TRUE(d.overproportional);
  EXPECT_FALSE(d.formal_normative);
  EXPECT_EQ(d.action_mode, ft::ActionMode::implicit_action);
  EXPECT_EQ(d.control_shape, ft::ControlShape::nonlinear);
  EXPECT_EQ(d.target, ft::Target::expenditure);

  EXPECT_THROW(ft::parse_descriptor({{"colour", "red"}}), fiscalstab::InputError);
  EXPECT_THROW(ft::parse_descriptor({{"target", "both"}}), fiscalstab::InputError);
  EXPECT_THROW(ft::parse_descriptor({{"formal_normative", "maybe"}}), fiscalstab::InputError);
}
