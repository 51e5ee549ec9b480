#pragma once

#include <unordered_map>
#include <vector>

#include "crystal/crystal.hpp"

namespace crystal {

// Symmetric-tensor crystal B^{1,l} of A_{n-1}^(1): rows (a_0,...,a_{n-1}) of
// nonnegative integers summing to l, indices cyclic mod n. Raising at r moves
// a unit from slot r to slot r-1; eps_r = a_r, phi_r = a_{r-1}.
class ARowCrystal final : public FiniteCrystal {
 public:
  ARowCrystal(int n, int l);

  int degree() const { return l_; }
  const std::vector<int>& row(ElemId b) const { return elems_.at(b); }
  std::optional<ElemId> find(const std::vector<int>& row) const;

  std::size_t size() const override { return elems_.size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override;
  std::optional<ElemId> lower(ElemId b, int i) const override;
  int eps(ElemId b, int i) const override;
  int phi(ElemId b, int i) const override;
  std::string label(ElemId b) const override;
  nlohmann::json elem_to_json(ElemId b) const override;
  std::optional<ElemId> elem_from_json(const nlohmann::json& j) const override;

 private:
  int l_;
  std::vector<std::vector<int>> elems_;
  std::unordered_map<std::string, ElemId> index_;
};

// Element of the C_n^(1) crystal B^{1,l}: coordinates x_1..x_n, xbar_1..xbar_n.
struct CSpin {
  std::vector<int> x, xbar;

  int s() const;  // sum of all coordinates
  friend bool operator==(const CSpin& a, const CSpin& b) {
    return a.x == b.x && a.xbar == b.xbar;
  }
  friend bool operator<(const CSpin& a, const CSpin& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.xbar < b.xbar;
  }
};

// C_n^(1) crystal B^{1,l} for odd l: tuples with s(b) in {l, l-2, ..., 1}.
// Operator results that leave the set (negative coordinate or s > l) are 0.
// Display order is (x_1,...,x_n | xbar_n,...,xbar_1).
class CSpinCrystal final : public FiniteCrystal {
 public:
  CSpinCrystal(int n, int l);

  int degree() const { return l_; }
  const CSpin& elem(ElemId b) const { return elems_.at(b); }
  std::optional<ElemId> find(const CSpin& e) const;

  std::size_t size() const override { return elems_.size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override;
  std::optional<ElemId> lower(ElemId b, int i) const override;
  int eps(ElemId b, int i) const override;
  int phi(ElemId b, int i) const override;
  std::string label(ElemId b) const override;
  nlohmann::json elem_to_json(ElemId b) const override;
  std::optional<ElemId> elem_from_json(const nlohmann::json& j) const override;

 private:
  std::optional<ElemId> reindex(CSpin e) const;  // validity check + lookup

  int l_;
  std::vector<CSpin> elems_;
  std::unordered_map<std::string, ElemId> index_;
};

// Label of a minimal-class element: b^mu_k (barred = false) or b^mu_kbar.
struct MinimalClassElem {
  ElemId id;
  int k;  // 1..n
  bool barred;
};

// The class B^{<=mu} of the C-type crystal, built from the coordinate
// formulas: b^mu_k present iff mu_{k-1} > 0, b^mu_kbar iff mu_k > 0. Every
// element is validated against eps(b) == mu; a violation is a transcription
// bug and throws.
std::vector<MinimalClassElem> minimal_class(const CSpinCrystal& B, const Weight& mu);

// Weight-lattice automorphism of TypeA: Lambda_i -> Lambda_{i-1} (cyclic).
Weight sigma(const CartanData& cd, const Weight& w);
Weight sigma_pow(const CartanData& cd, const Weight& w, int k);

}  // namespace crystal
