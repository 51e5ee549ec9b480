#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "crystal/paths.hpp"

namespace crystal {

// The class-wise projection B_min -> B^{1,1} of the C-type crystal:
// b^mu_k -> b with x_i = delta_{ik}, b^mu_kbar -> b with xbar_i = delta_{ik}.
// Built as a total lookup over B_min; the classes are checked disjoint.
class MapT {
 public:
  MapT(std::shared_ptr<const CSpinCrystal> B, std::shared_ptr<const CSpinCrystal> Bdag);

  ElemId apply(ElemId b) const;
  const std::shared_ptr<const CSpinCrystal>& domain() const { return B_; }
  const std::shared_ptr<const CSpinCrystal>& target() const { return Bdag_; }

 private:
  std::shared_ptr<const CSpinCrystal> B_, Bdag_;
  std::map<ElemId, ElemId> lut_;
};

// Per-position projection of a path over B^{1,l} (x) B^{1,m} onto B^{1,m}:
// position j keeps the right factor, cyclically reindexed by j-1.
Path map_dagger(const Path& p, const RefPtr& ref_dag);

// Outcome of a depth-bounded instance check of the path-space isomorphism.
struct BijectionReport {
  int depth = 0;
  bool pass = false;
  struct DepthRow {
    int depth;
    std::size_t hw_count;
    std::size_t restricted_count;
    std::size_t matched;
  };
  std::vector<DepthRow> rows;                 // cumulative per truncation depth
  std::vector<std::string> failures;
  std::map<AffineWeight, std::size_t> census;  // W(p) of hw paths with multiplicity
  std::int64_t min_energy = 0;                 // diagnostic; may be negative

  nlohmann::json to_json() const;
  std::string summary() const;
};

// Generic engine: image of the highest-weight paths under the supplied map
// must equal the restricted paths, with W(p) = lambda + W(p_dagger)
// elementwise.
BijectionReport verify_main(const RefPtr& ref, const HTable& h_square,
                            const RefPtr& ref_dag, const HTable& h_square_dag,
                            const Weight& lambda, int N,
                            const std::function<Path(const Path&)>& dagger);

// C-type instance: checks the four structural conditions of the projection t
// (class bijections, weight preservation, energy correspondence on chained
// minimal pairs, reference image) and then runs the engine.
BijectionReport verify_case1(int n, int l, const Weight& lambda, int N);

// A-type instance: bijectivity, weight relation, and the two-route energy
// identity (path energies and the closed partial-sum expression).
BijectionReport verify_ex2(int n, int l, int m, const Weight& lambda, const Weight& mu,
                           int N);

// Perfect-crystal sanity instance: the A-type single-component path space has
// exactly one highest weight path at every truncation depth.
BijectionReport verify_kmn2(int n, const Weight& mu, int N);

// Experimental, non-normative: the multi-component projection (drop the first
// tensor factor, reindex the rest) run through the generic engine, taking the
// s-component space to the (s-1)-component one. degrees must be
// non-increasing; lambdas[k] has level degrees[k] - degrees[k+1].
BijectionReport verify_multi(int n, const std::vector<int>& degrees,
                             const std::vector<Weight>& lambdas, int N);

}  // namespace crystal
