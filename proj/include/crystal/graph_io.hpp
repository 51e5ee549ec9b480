#pragma once

#include <iosfwd>

#include <json.hpp>

#include "crystal/crystal.hpp"

namespace crystal {

// DOT digraph of the crystal: one node per element with its canonical label,
// one directed edge per f-arrow labeled by the node color.
void emit_dot(const FiniteCrystal& B, std::ostream& os);

// {"elements":[...],"edges":[{"from":k,"to":k,"color":i}...]}
nlohmann::json graph_to_json(const FiniteCrystal& B);

// {"family":"A"|"C","n":int,"coeffs":[...]} (+ "delta" for affine weights)
nlohmann::json weight_to_json(const CartanData& cd, const Weight& w);
nlohmann::json weight_to_json(const CartanData& cd, const AffineWeight& w);
Weight weight_from_json(const CartanData& cd, const nlohmann::json& j);

}  // namespace crystal
