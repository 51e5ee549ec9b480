#pragma once

#include <vector>

#include "crystal/crystal.hpp"
#include "crystal/families.hpp"

namespace crystal {

// The crystal isomorphism B1 (x) B2 -> B2 (x) B1 as an explicit bijection of
// element ids. Weight preserving and equivariant for every operator.
struct RMap {
  TensorPtr domain;    // B1 (x) B2
  TensorPtr codomain;  // B2 (x) B1
  std::vector<ElemId> forward;
  std::vector<ElemId> inverse;

  ElemId operator()(ElemId b) const { return forward.at(b); }
};

// Identity map on a homogeneous square B (x) B; it is the unique isomorphism
// there.
RMap identity_rmap(TensorPtr square);

// Seeds the pairing at a weight of multiplicity one on both sides
// (lexicographically largest such coefficient vector) and propagates along
// operator edges requiring equivariance. Throws on any conflict, which
// signals non-isomorphic inputs or an operator bug.
RMap compute_R(TensorPtr t12, TensorPtr t21);

// Integer energy table on a tensor product, normalized by its anchor entry.
struct HTable {
  TensorPtr product;
  std::vector<int> value;
  ElemId anchor = 0;

  int at(ElemId b) const { return value.at(b); }
};

// Closed form for A-type rows, degrees may differ:
// max_j ( sum_{k<j} (b'_k - b_k) + b'_j ).
int closed_H_A(const std::vector<int>& b, const std::vector<int>& bp);

// Closed form for C-type tuples of equal degree: the max of the four linear
// families theta, theta', eta, eta'.
int closed_H_C(const CSpin& b, const CSpin& bp);

// Energy by breadth-first propagation of the 0-arrow case split from the
// anchor; verifies consistency across every edge afterwards.
HTable compute_H_bfs(TensorPtr t, const RMap& r, ElemId anchor, int anchor_value);

// Table filled from the applicable closed form (A rows, or C tuples of equal
// degree); throws if no closed form covers the component types.
HTable closed_H_table(TensorPtr t);

// Anchor element hw1 (x) hw2 from the principal classical highest weight
// elements of the two factors.
ElemId canonical_anchor(const TensorCrystal& t);

// Closed-form table when available, else BFS anchored at the canonical
// anchor with value 0.
HTable canonical_H_table(TensorPtr t, const RMap& r);

// Full equivariance + bijectivity sweep; exactly the defining properties, so
// a table passing it equals the computed one.
bool rmap_valid(const RMap& r);

// The defining recursion on every raise edge plus the anchor entry.
bool h_table_consistent(const HTable& h, const RMap& r, int anchor_value);

struct DecompositionReport {
  bool ok = false;
  bool alt_ok = false;
  long long constant = 0;      // H_BB minus the four-term sum
  long long alt_constant = 0;  // same for the alternative decomposition
  std::vector<std::string> failures;
};

// Verifies that the energy of (B1 (x) B2)^(x2) splits into the four
// single-pair energies up to one global constant, over every pair of
// elements; also checks the alternative splitting.
DecompositionReport decompose_H(CrystalPtr b1, CrystalPtr b2);

}  // namespace crystal
