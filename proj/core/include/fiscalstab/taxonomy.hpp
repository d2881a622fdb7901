#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiscalstab::taxonomy {

enum class ActionMode { explicit_action, implicit_action };
enum class ControlShape { linear, nonlinear };
enum class ActionContinuity { discrete, continuous };
enum class Target { none, revenue, expenditure };

/// Predicate vector describing one policy instrument.
///
/// Field-to-predicate mapping:
///   stabiliser (S)         is_institutional_device, reduces_gap_actual_desired,
///                          counters_change, overproportional
///   macroeconomic (SM)     S + controls_gdp_change + aims_reduce_gdp_volatility
///   fiscal (SF)            SM + formal_normative
///   non-automatic (SFnA)   SF + action_mode == explicit
///   automatic (SFA)        SF + action_mode == implicit
///   SFnAv / SFnAc          SFnA + control_shape == linear + discrete
///                          + target revenue / expenditure
///   SFAv / SFAc            SFA + control_shape == nonlinear + discrete
///                          + target revenue / expenditure
struct StabiliserDescriptor {
  bool is_institutional_device = false;
  bool counters_change = false;
  bool overproportional = false;
  bool reduces_gap_actual_desired = false;
  bool controls_gdp_change = false;
  bool aims_reduce_gdp_volatility = false;
  bool formal_normative = false;
  ActionMode action_mode = ActionMode::explicit_action;
  ControlShape control_shape = ControlShape::linear;
  ActionContinuity action_continuity = ActionContinuity::discrete;
  Target target = Target::none;
};

enum class StabiliserClass { NotStabiliser, S, SM, SF, SFnA, SFnAv, SFnAc, SFA, SFAv, SFAc };

inline constexpr std::array<StabiliserClass, 9> kStabiliserClasses = {
    StabiliserClass::S,     StabiliserClass::SM,    StabiliserClass::SF,
    StabiliserClass::SFnA,  StabiliserClass::SFnAv, StabiliserClass::SFnAc,
    StabiliserClass::SFA,   StabiliserClass::SFAv,  StabiliserClass::SFAc};

/// Full predicate conjunction of `cls`, including every ancestor's.
/// NotStabiliser holds exactly when S does not.
bool holds(StabiliserClass cls, const StabiliserDescriptor& d);

/// Parent in the hierarchy; nullopt for S and NotStabiliser.
std::optional<StabiliserClass> parent(StabiliserClass cls);

/// Finest class whose conjunction holds. Total: never throws.
StabiliserClass classify_stabiliser(const StabiliserDescriptor& d);

std::string_view to_string(StabiliserClass cls);

/// Builds a descriptor from key=value pairs. Booleans take true/false/1/0/yes/no.
/// Unknown keys and bad values throw InputError. Missing keys keep defaults.
StabiliserDescriptor parse_descriptor(const std::vector<std::pair<std::string, std::string>>& kv);

}  // namespace fiscalstab::taxonomy
