#include "crystal/graph_io.hpp"

#include <ostream>
#include <stdexcept>

namespace crystal {

void emit_dot(const FiniteCrystal& B, std::ostream& os) {
  os << "digraph crystal {\n";
  os << "  rankdir=TB;\n";
  for (ElemId b = 0; b < B.size(); ++b)
    os << "  n" << b << " [label=\"" << B.label(b) << "\"];\n";
  for (ElemId b = 0; b < B.size(); ++b)
    for (int i = 0; i < B.num_nodes(); ++i)
      if (auto dn = B.lower(b, i))
        os << "  n" << b << " -> n" << *dn << " [label=\"" << i << "\"];\n";
  os << "}\n";
}

nlohmann::json graph_to_json(const FiniteCrystal& B) {
  nlohmann::json elements = nlohmann::json::array();
  for (ElemId b = 0; b < B.size(); ++b) elements.push_back(B.label(b));
  nlohmann::json edges = nlohmann::json::array();
  for (ElemId b = 0; b < B.size(); ++b)
    for (int i = 0; i < B.num_nodes(); ++i)
      if (auto dn = B.lower(b, i))
        edges.push_back({{"from", b}, {"to", *dn}, {"color", i}});
  return nlohmann::json{{"elements", elements}, {"edges", edges}};
}

nlohmann::json weight_to_json(const CartanData& cd, const Weight& w) {
  return nlohmann::json{{"family", family_name(cd.family)}, {"n", cd.n}, {"coeffs", w.c}};
}

nlohmann::json weight_to_json(const CartanData& cd, const AffineWeight& w) {
  nlohmann::json j = weight_to_json(cd, w.cl);
  j["delta"] = w.delta;
  return j;
}

Weight weight_from_json(const CartanData& cd, const nlohmann::json& j) {
  if (!j.is_object() || j.value("family", "") != family_name(cd.family) ||
      j.value("n", -1) != cd.n)
    throw std::invalid_argument("weight_from_json: wrong Cartan data");
  Weight w(j.at("coeffs").get<std::vector<int>>());
  if (w.nodes() != cd.num_nodes()) throw std::invalid_argument("weight_from_json: bad size");
  return w;
}

}  // namespace crystal
