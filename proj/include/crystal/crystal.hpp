#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "crystal/cartan.hpp"

namespace crystal {

using ElemId = std::uint32_t;

// A finite crystal: an indexed element universe with partial raising and
// lowering operators per node, string-length statistics eps_i/phi_i, and the
// classical weight phi - eps. The operator value 0 of the theory is
// represented by an empty optional, never by an error.
class FiniteCrystal {
 public:
  explicit FiniteCrystal(CartanData cd) : cartan_(std::move(cd)) {}
  virtual ~FiniteCrystal() = default;

  const CartanData& cartan() const { return cartan_; }
  int num_nodes() const { return cartan_.num_nodes(); }

  virtual std::size_t size() const = 0;
  virtual std::optional<ElemId> raise(ElemId b, int i) const = 0;  // e~_i
  virtual std::optional<ElemId> lower(ElemId b, int i) const = 0;  // f~_i
  virtual int eps(ElemId b, int i) const = 0;
  virtual int phi(ElemId b, int i) const = 0;

  Weight eps_weight(ElemId b) const;
  Weight phi_weight(ElemId b) const;
  Weight weight(ElemId b) const;  // phi_weight - eps_weight

  virtual std::string label(ElemId b) const = 0;
  virtual nlohmann::json elem_to_json(ElemId b) const = 0;
  virtual std::optional<ElemId> elem_from_json(const nlohmann::json& j) const = 0;

 protected:
  CartanData cartan_;
};

using CrystalPtr = std::shared_ptr<const FiniteCrystal>;

// Tensor product B1 (x) B2 under the signature rule: raising acts on the
// left factor iff phi_i(b1) >= eps_i(b2), lowering iff phi_i(b1) > eps_i(b2).
// Element ids are left * |B2| + right; n-fold products left-nest.
class TensorCrystal final : public FiniteCrystal {
 public:
  TensorCrystal(CrystalPtr left, CrystalPtr right);

  const CrystalPtr& left() const { return left_; }
  const CrystalPtr& right() const { return right_; }

  ElemId encode(ElemId l, ElemId r) const {
    return static_cast<ElemId>(l * right_->size() + r);
  }
  std::pair<ElemId, ElemId> decode(ElemId b) const {
    return {static_cast<ElemId>(b / right_->size()),
            static_cast<ElemId>(b % right_->size())};
  }

  std::size_t size() const override { return left_->size() * right_->size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override;
  std::optional<ElemId> lower(ElemId b, int i) const override;
  int eps(ElemId b, int i) const override;
  int phi(ElemId b, int i) const override;
  std::string label(ElemId b) const override;
  nlohmann::json elem_to_json(ElemId b) const override;
  std::optional<ElemId> elem_from_json(const nlohmann::json& j) const override;

 private:
  CrystalPtr left_, right_;
};

using TensorPtr = std::shared_ptr<const TensorCrystal>;

// Left-nested product of two or more factors.
TensorPtr tensor_chain(const std::vector<CrystalPtr>& factors);

// Same Cartan data and the same element universe in the same order (labels
// are canonical), hence interchangeable including element ids.
bool structurally_equal(const FiniteCrystal& a, const FiniteCrystal& b);

}  // namespace crystal
