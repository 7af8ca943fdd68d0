#pragma once

#include <arrowing/gadget.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace arrowing {

// Shorthand such as "k4" or "k1_3" when g is isomorphic to a named family
// member, otherwise "g" followed by a hash of the canonical edge list.
std::string pattern_name(const Graph& g);

nlohmann::json gadget_to_json(const Gadget& gadget);
Gadget gadget_from_json(const nlohmann::json& j);

// <f>__<h>__<kind>.json
std::string archive_file_name(const Graph& f, const Graph& h, GadgetKind kind);

// Writes the gadget into dir (created when missing) and returns the path.
std::string store_gadget(const std::string& dir, const Gadget& gadget);

// Reads a stored gadget.  With `reverify` the verification is run again and
// the loaded gadget is only marked verified if it passes.
std::optional<Gadget> load_gadget(const std::string& dir, const Graph& f, const Graph& h, GadgetKind kind,
    bool reverify = true, SearchBudget budget = gadget_budget);

} // namespace arrowing
