#include "fiscalstab/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "fiscalstab/error.hpp"

namespace fiscalstab::taxonomy {
namespace {

bool stabiliser(const StabiliserDescriptor& d) {
  return d.is_institutional_device && d.reduces_gap_actual_desired && d.counters_change &&
         d.overproportional;
}

bool macro(const StabiliserDescriptor& d) {
  return stabiliser(d) && d.controls_gdp_change && d.aims_reduce_gdp_volatility;
}

bool fiscal(const StabiliserDescriptor& d) { return macro(d) && d.formal_normative; }

bool non_automatic(const StabiliserDescriptor& d) {
  return fiscal(d) && d.action_mode == ActionMode::explicit_action;
}

bool automatic(const StabiliserDescriptor& d) {
  return fiscal(d) && d.action_mode == ActionMode::implicit_action;
}

bool species(const StabiliserDescriptor& d, ControlShape shape, Target target) {
  return d.control_shape == shape && d.action_continuity == ActionContinuity::discrete &&
         d.target == target;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string v = lower(raw);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError("expected a boolean, got '" + raw + "'", 0, key);
}

template <typename Enum>
Enum parse_enum(const std::string& key, const std::string& raw,
                std::initializer_list<std::pair<const char*, Enum>> options) {
  const std::string v = lower(raw);
  for (const auto& [name, value] : options) {
    if (v == name) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : options) allowed += (allowed.empty() ? "" : "|") + std::string(name);
  throw InputError("expected one of " + allowed + ", got '" + raw + "'", 0, key);
}

}  // namespace

bool holds(StabiliserClass cls, const StabiliserDescriptor& d) {
  switch (cls) {
    case StabiliserClass::NotStabiliser: return !stabiliser(d);
    case StabiliserClass::S: return stabiliser(d);
    case StabiliserClass::SM: return macro(d);
    case StabiliserClass::SF: return fiscal(d);
    case StabiliserClass::SFnA: return non_automatic(d);
    case StabiliserClass::SFnAv:
      return non_automatic(d) && species(d, ControlShape::linear, Target::revenue);
    case StabiliserClass::SFnAc:
      return non_automatic(d) && species(d, ControlShape::linear, Target::expenditure);
    case StabiliserClass::SFA: return automatic(d);
    case StabiliserClass::SFAv:
      return automatic(d) && species(d, ControlShape::nonlinear, Target::revenue);
    case StabiliserClass::SFAc:
      return automatic(d) && species(d, ControlShape::nonlinear, Target::expenditure);
  }
  return false;
}

std::optional<StabiliserClass> parent(StabiliserClass cls) {
  switch (cls) {
    case StabiliserClass::NotStabiliser:
    case StabiliserClass::S: return std::nullopt;
    case StabiliserClass::SM: return StabiliserClass::S;
    case StabiliserClass::SF: return StabiliserClass::SM;
    case StabiliserClass::SFnA:
    case StabiliserClass::SFA: return StabiliserClass::SF;
    case StabiliserClass::SFnAv:
    case StabiliserClass::SFnAc: return StabiliserClass::SFnA;
    case StabiliserClass::SFAv:
    case StabiliserClass::SFAc: return StabiliserClass::SFA;
  }
  return std::nullopt;
}

StabiliserClass classify_stabiliser(const StabiliserDescriptor& d) {
  // Walk down the tree; each level only needs its own extra predicate.
  if (!holds(StabiliserClass::S, d)) return StabiliserClass::NotStabiliser;
  if (!holds(StabiliserClass::SM, d)) return StabiliserClass::S;
  if (!holds(StabiliserClass::SF, d)) return StabiliserClass::SM;

  if (holds(StabiliserClass::SFnA, d)) {
    if (holds(StabiliserClass::SFnAv, d)) return StabiliserClass::SFnAv;
    if (holds(StabiliserClass::SFnAc, d)) return StabiliserClass::SFnAc;
    return StabiliserClass::SFnA;
  }
  if (holds(StabiliserClass::SFA, d)) {
    if (holds(StabiliserClass::SFAv, d)) return StabiliserClass::SFAv;
    if (holds(StabiliserClass::SFAc, d)) return StabiliserClass::SFAc;
    return StabiliserClass::SFA;
  }
  return StabiliserClass::SF;  // unreachable: action_mode is two-valued
}

std::string_view to_string(StabiliserClass cls) {
  switch (cls) {
    case StabiliserClass::NotStabiliser: return "NotStabiliser";
    case StabiliserClass::S: return "S";
    case StabiliserClass::SM: return "SM";
    case StabiliserClass::SF: return "SF";
    case StabiliserClass::SFnA: return "SFnA";
    case StabiliserClass::SFnAv: return "SFnAv";
    case StabiliserClass::SFnAc: return "SFnAc";
    case StabiliserClass::SFA: return "SFA";
    case StabiliserClass::SFAv: return "SFAv";
    case StabiliserClass::SFAc: return "SFAc";
  }
  return "?";
}

StabiliserDescriptor parse_descriptor(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  StabiliserDescriptor d;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto flag = [&d](bool StabiliserDescriptor::*member) -> Setter {
    return [&d, member](const std::string& k, const std::string& v) {
      d.*member = parse_bool(k, v);
    };
  };
  const std::map<std::string, Setter> setters = {
      {"is_institutional_device", flag(&StabiliserDescriptor::is_institutional_device)},
      {"counters_change", flag(&StabiliserDescriptor::counters_change)},
      {"overproportional", flag(&StabiliserDescriptor::overproportional)},
      {"reduces_gap_actual_desired", flag(&StabiliserDescriptor::reduces_gap_actual_desired)},
      {"controls_gdp_change", flag(&StabiliserDescriptor::controls_gdp_change)},
      {"aims_reduce_gdp_volatility", flag(&StabiliserDescriptor::aims_reduce_gdp_volatility)},
      {"formal_normative", flag(&StabiliserDescriptor::formal_normative)},
      {"action_mode",
       [&d](const std::string& k, const std::string& v) {
         d.action_mode = parse_enum<ActionMode>(
             k, v, {{"explicit", ActionMode::explicit_action},
                    {"implicit", ActionMode::implicit_action}});
       }},
      {"control_shape",
       [&d](const std::string& k, const std::string& v) {
         d.control_shape = parse_enum<ControlShape>(
             k, v, {{"linear", ControlShape::linear}, {"nonlinear", ControlShape::nonlinear}});
       }},
      {"action_continuity",
       [&d](const std::string& k, const std::string& v) {
         d.action_continuity = parse_enum<ActionContinuity>(
             k, v, {{"discrete", ActionContinuity::discrete},
                    {"continuous", ActionContinuity::continuous}});
       }},
      {"target",
       [&d](const std::string& k, const std::string& v) {
         d.target = parse_enum<Target>(k, v, {{"none", Target::none},
                                              {"revenue", Target::revenue},
                                              {"expenditure", Target::expenditure}});
       }},
  };

  for (const auto& [key, value] : kv) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw InputError("unknown descriptor key", 0, key);
    it->second(key, value);
  }
  return d;
}

}  // namespace fiscalstab::taxonomy
