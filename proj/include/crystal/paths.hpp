#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "crystal/crystal.hpp"
#include "crystal/families.hpp"
#include "crystal/rmatrix.hpp"

namespace crystal {

// Eventually periodic boundary condition: entries b_1, b_2, ... read off a
// period of minimal elements with phi(b_{j+1}) = eps(b_j) at every seam.
class ReferencePath {
 public:
  ReferencePath(CrystalPtr crys, std::vector<ElemId> period);

  const FiniteCrystal& crystal() const { return *crys_; }
  const CrystalPtr& crystal_ptr() const { return crys_; }
  const std::vector<ElemId>& period() const { return period_; }
  ElemId at(std::int64_t j) const {  // j >= 1
    return period_[static_cast<std::size_t>((j - 1) % static_cast<std::int64_t>(period_.size()))];
  }

 private:
  CrystalPtr crys_;
  std::vector<ElemId> period_;
};

using RefPtr = std::shared_ptr<const ReferencePath>;

// A path: finitely many explicit entries over the implicit reference tail.
// Canonical form keeps depth minimal (deepest stored entry differs from the
// reference), so equality is structural.
class Path {
 public:
  explicit Path(RefPtr ref);                              // the reference path itself
  Path(RefPtr ref, std::vector<ElemId> entries_1_to_d);   // entries[j-1] = p(j)

  const ReferencePath& ref() const { return *ref_; }
  const RefPtr& ref_ptr() const { return ref_; }
  int depth() const { return static_cast<int>(entries_.size()); }
  ElemId at(std::int64_t j) const {
    return j <= depth() ? entries_[static_cast<std::size_t>(j - 1)] : ref_->at(j);
  }
  const std::vector<ElemId>& entries() const { return entries_; }

  friend bool operator==(const Path& a, const Path& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.entries_.size() != b.entries_.size()) return a.entries_.size() < b.entries_.size();
    return a.entries_ < b.entries_;
  }

 private:
  void canonicalize();

  RefPtr ref_;
  std::vector<ElemId> entries_;
};

// eps/phi of the truncated semi-infinite product; the tail contributes
// eps = 0 and phi = phi(reference at depth+1) by the seam identity.
int path_eps(const Path& p, int i);
int path_phi(const Path& p, int i);

// Crystal action. Raising lands inside the explicit window or vanishes (the
// signature otherwise descends through the tail forever); lowering may extend
// the window by one slot.
std::optional<Path> path_raise(const Path& p, int i);
std::optional<Path> path_lower(const Path& p, int i);

bool is_hw_path(const Path& p);

// E(p) = sum_j j * (H(p(j+1) (x) p(j)) - H at the reference); finitely many
// nonzero terms. The table must live on crystal (x) crystal of the path's
// crystal.
std::int64_t path_energy(const Path& p, const HTable& h_square);

Weight path_weight_cl(const Path& p);  // phi(ref(1)) + sum of entry deviations
AffineWeight path_weight(const Path& p, const HTable& h_square);  // delta = -E

// All highest weight paths of deviation depth <= N: backwards transfer over
// the chain eps(p(j)) = phi(p(j+1)) through minimal elements, cross-checked
// against the raise-kill oracle.
std::vector<Path> enumerate_hw_paths(const RefPtr& ref, int N);

// Level-restriction against the running weight lambda_j = lambda + wt p[j].
bool is_restricted(const Weight& lambda, const Path& p);
// Equivalent one-shot test: u_lambda (x) p is killed by every raising
// operator, i.e. eps_i(p) <= <h_i, lambda>.
bool is_restricted_oracle(const Weight& lambda, const Path& p);

std::vector<Path> enumerate_restricted(const Weight& lambda, const RefPtr& ref, int N);

// Every path of deviation depth <= N (test/oracle helper; grows as |B|^N).
std::vector<Path> enumerate_all_paths(const RefPtr& ref, int N);

// {"ref":{"period":[...]},"entries":[...]} with entries position-descending.
nlohmann::json path_to_json(const Path& p);

// Reference path constructors.
//
// C-type: period 2n over B^{1,l}, built from the minimal classes of
// lambda + Lambda_i; lambda must be dominant of level (l-1)/2.
ReferencePath make_ref_C(std::shared_ptr<const CSpinCrystal> B, const Weight& lambda);
// A-type two-component: entries (lambda_{i+j} + mu_{i+2j}) (x) (mu_{i+2j-1})
// over B^{1,l} (x) B^{1,m}, lambda of level l-m, mu of level m.
ReferencePath make_ref_A(TensorPtr B, const Weight& lambda, const Weight& mu);
// A-type single component: entries (mu_{i+j}) over B^{1,m}.
ReferencePath make_ref_A_single(std::shared_ptr<const ARowCrystal> B, const Weight& mu);
// A-type multi-component over B^{1,l_1} (x) ... (x) B^{1,l_s} (left-nested),
// lambdas[k] of level l_{k+1} - l_{k+2}; the k-th factor of entry j is the
// row (sum_{t>=k} lambda^{(t)}_{i+tj-k+1}).
ReferencePath make_ref_A_multi(CrystalPtr nested, const std::vector<Weight>& lambdas);

}  // namespace crystal
