#include "crystal/crystal.hpp"

#include <stdexcept>

namespace crystal {

Weight FiniteCrystal::eps_weight(ElemId b) const {
  Weight w = Weight::zero(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) w.c[i] = eps(b, i);
  return w;
}

Weight FiniteCrystal::phi_weight(ElemId b) const {
  Weight w = Weight::zero(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) w.c[i] = phi(b, i);
  return w;
}

Weight FiniteCrystal::weight(ElemId b) const {
  return phi_weight(b) - eps_weight(b);
}

TensorCrystal::TensorCrystal(CrystalPtr left, CrystalPtr right)
    : FiniteCrystal(left->cartan()), left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->cartan() == right_->cartan()))
    throw std::invalid_argument("tensor factors over different Cartan data");
}

std::optional<ElemId> TensorCrystal::raise(ElemId b, int i) const {
  auto [l, r] = decode(b);
  if (left_->phi(l, i) >= right_->eps(r, i)) {
    auto el = left_->raise(l, i);
    if (!el) return std::nullopt;
    return encode(*el, r);
  }
  auto er = right_->raise(r, i);
  if (!er) return std::nullopt;
  return encode(l, *er);
}

std::optional<ElemId> TensorCrystal::lower(ElemId b, int i) const {
  auto [l, r] = decode(b);
  if (left_->phi(l, i) > right_->eps(r, i)) {
    auto fl = left_->lower(l, i);
    if (!fl) return std::nullopt;
    return encode(*fl, r);
  }
  auto fr = right_->lower(r, i);
  if (!fr) return std::nullopt;
  return encode(l, *fr);
}

int TensorCrystal::eps(ElemId b, int i) const {
  auto [l, r] = decode(b);
  int e1 = left_->eps(l, i), e2 = right_->eps(r, i), p1 = left_->phi(l, i);
  return std::max(e1, e1 + e2 - p1);
}

int TensorCrystal::phi(ElemId b, int i) const {
  auto [l, r] = decode(b);
  int p1 = left_->phi(l, i), p2 = right_->phi(r, i), e2 = right_->eps(r, i);
  return std::max(p2, p1 + p2 - e2);
}

std::string TensorCrystal::label(ElemId b) const {
  auto [l, r] = decode(b);
  return left_->label(l) + "⊗" + right_->label(r);
}

nlohmann::json TensorCrystal::elem_to_json(ElemId b) const {
  auto [l, r] = decode(b);
  return nlohmann::json{{"l", left_->elem_to_json(l)}, {"r", right_->elem_to_json(r)}};
}

std::optional<ElemId> TensorCrystal::elem_from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("l") || !j.contains("r")) return std::nullopt;
  auto l = left_->elem_from_json(j["l"]);
  auto r = right_->elem_from_json(j["r"]);
  if (!l || !r) return std::nullopt;
  return encode(*l, *r);
}

bool structurally_equal(const FiniteCrystal& a, const FiniteCrystal& b) {
  if (&a == &b) return true;
  if (!(a.cartan() == b.cartan()) || a.size() != b.size()) return false;
  for (ElemId x = 0; x < a.size(); ++x)
    if (a.label(x) != b.label(x)) return false;
  return true;
}

TensorPtr tensor_chain(const std::vector<CrystalPtr>& factors) {
  if (factors.size() < 2) throw std::invalid_argument("tensor_chain needs >= 2 factors");
  CrystalPtr acc = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k)
    acc = std::make_shared<TensorCrystal>(acc, factors[k]);
  return std::static_pointer_cast<const TensorCrystal>(acc);
}

}  // namespace crystal
