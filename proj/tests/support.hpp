#pragma once

#include "crystal/crystal.hpp"

// crystal wrappers for fault injection and negative tests

namespace crystal_test {

using namespace crystal;

// redirects f_{node} on one element into a self-loop
class CorruptArrow final : public FiniteCrystal {
 public:
  CorruptArrow(CrystalPtr base, ElemId at, int node)
      : FiniteCrystal(base->cartan()), base_(std::move(base)), at_(at), node_(node) {}
  std::size_t size() const override { return base_->size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override { return base_->raise(b, i); }
  std::optional<ElemId> lower(ElemId b, int i) const override {
    if (b == at_ && i == node_) return at_;
    return base_->lower(b, i);
  }
  int eps(ElemId b, int i) const override { return base_->eps(b, i); }
  int phi(ElemId b, int i) const override { return base_->phi(b, i); }
  std::string label(ElemId b) const override { return base_->label(b); }
  nlohmann::json elem_to_json(ElemId b) const override { return base_->elem_to_json(b); }
  std::optional<ElemId> elem_from_json(const nlohmann::json& j) const override {
    return base_->elem_from_json(j);
  }

 private:
  CrystalPtr base_;
  ElemId at_;
  int node_;
};

// two copies side by side (never a simple crystal)
class DisjointUnion final : public FiniteCrystal {
 public:
  DisjointUnion(CrystalPtr a, CrystalPtr b)
      : FiniteCrystal(a->cartan()), a_(std::move(a)), b_(std::move(b)) {}
  std::size_t size() const override { return a_->size() + b_->size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override { return map(b, i, true); }
  std::optional<ElemId> lower(ElemId b, int i) const override { return map(b, i, false); }
  int eps(ElemId b, int i) const override {
    return b < a_->size() ? a_->eps(b, i) : b_->eps(b - a_->size(), i);
  }
  int phi(ElemId b, int i) const override {
    return b < a_->size() ? a_->phi(b, i) : b_->phi(b - a_->size(), i);
  }
  std::string label(ElemId b) const override {
    return b < a_->size() ? "L" + a_->label(b) : "R" + b_->label(b - a_->size());
  }
  nlohmann::json elem_to_json(ElemId b) const override {
    return b < a_->size() ? a_->elem_to_json(b) : b_->elem_to_json(b - a_->size());
  }
  std::optional<ElemId> elem_from_json(const nlohmann::json&) const override {
    return std::nullopt;
  }

 private:
  std::optional<ElemId> map(ElemId b, int i, bool up) const {
    if (b < a_->size()) {
      auto r = up ? a_->raise(b, i) : a_->lower(b, i);
      return r;
    }
    auto r = up ? b_->raise(b - a_->size(), i) : b_->lower(b - a_->size(), i);
    if (!r) return std::nullopt;
    return *r + static_cast<ElemId>(a_->size());
  }
  CrystalPtr a_, b_;
};

// element-removing view; arrows into the hole vanish
class DropElement final : public FiniteCrystal {
 public:
  DropElement(CrystalPtr base, ElemId dropped)
      : FiniteCrystal(base->cartan()), base_(std::move(base)), dropped_(dropped) {}
  std::size_t size() const override { return base_->size() - 1; }
  std::optional<ElemId> raise(ElemId b, int i) const override {
    return from_base(base_->raise(to_base(b), i));
  }
  std::optional<ElemId> lower(ElemId b, int i) const override {
    return from_base(base_->lower(to_base(b), i));
  }
  int eps(ElemId b, int i) const override { return base_->eps(to_base(b), i); }
  int phi(ElemId b, int i) const override { return base_->phi(to_base(b), i); }
  std::string label(ElemId b) const override { return base_->label(to_base(b)); }
  nlohmann::json elem_to_json(ElemId b) const override {
    return base_->elem_to_json(to_base(b));
  }
  std::optional<ElemId> elem_from_json(const nlohmann::json&) const override {
    return std::nullopt;
  }

 private:
  ElemId to_base(ElemId b) const { return b < dropped_ ? b : b + 1; }
  std::optional<ElemId> from_base(std::optional<ElemId> b) const {
    if (!b || *b == dropped_) return std::nullopt;
    return *b < dropped_ ? *b : *b - 1;
  }
  CrystalPtr base_;
  ElemId dropped_;
};

}  // namespace crystal_test
