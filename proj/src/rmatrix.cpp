#include "crystal/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "crystal/checks.hpp"

namespace crystal {

RMap identity_rmap(TensorPtr square) {
  if (!structurally_equal(*square->left(), *square->right()))
    throw std::invalid_argument("identity_rmap: product is not homogeneous");
  RMap r;
  r.domain = square;
  r.codomain = square;
  r.forward.resize(square->size());
  for (ElemId b = 0; b < square->size(); ++b) r.forward[b] = b;
  r.inverse = r.forward;
  return r;
}

RMap compute_R(TensorPtr t12, TensorPtr t21) {
  if (!structurally_equal(*t12->left(), *t21->right()) ||
      !structurally_equal(*t12->right(), *t21->left()))
    throw std::invalid_argument("compute_R: factor mismatch between products");
  const std::size_t sz = t12->size();
  if (sz != t21->size()) throw std::invalid_argument("compute_R: size mismatch");

  // multiplicity-one weight present on both sides, lexicographically largest
  std::map<Weight, std::vector<ElemId>> by_wt12, by_wt21;
  for (ElemId b = 0; b < sz; ++b) {
    by_wt12[t12->weight(b)].push_back(b);
    by_wt21[t21->weight(b)].push_back(b);
  }
  ElemId seed12 = 0, seed21 = 0;
  bool found = false;
  for (auto it = by_wt12.rbegin(); it != by_wt12.rend(); ++it) {
    if (it->second.size() != 1) continue;
    auto other = by_wt21.find(it->first);
    if (other == by_wt21.end() || other->second.size() != 1) continue;
    seed12 = it->second.front();
    seed21 = other->second.front();
    found = true;
    break;
  }
  if (!found) throw std::runtime_error("compute_R: no multiplicity-one weight found");

  constexpr ElemId kUnset = static_cast<ElemId>(-1);
  RMap r;
  r.domain = t12;
  r.codomain = t21;
  r.forward.assign(sz, kUnset);
  r.inverse.assign(sz, kUnset);

  auto bind = [&](ElemId x, ElemId y, std::queue<ElemId>& q) {
    if (r.forward[x] != kUnset) {
      if (r.forward[x] != y)
        throw std::runtime_error("compute_R: equivariance conflict at " + t12->label(x));
      return;
    }
    if (r.inverse[y] != kUnset)
      throw std::runtime_error("compute_R: image collision at " + t21->label(y));
    r.forward[x] = y;
    r.inverse[y] = x;
    q.push(x);
  };

  std::queue<ElemId> q;
  bind(seed12, seed21, q);
  while (!q.empty()) {
    ElemId x = q.front();
    q.pop();
    ElemId y = r.forward[x];
    for (int i = 0; i < t12->num_nodes(); ++i) {
      auto fx = t12->lower(x, i);
      auto fy = t21->lower(y, i);
      if (fx.has_value() != fy.has_value())
        throw std::runtime_error("compute_R: f-arrow mismatch at " + t12->label(x));
      if (fx) bind(*fx, *fy, q);
      auto ex = t12->raise(x, i);
      auto ey = t21->raise(y, i);
      if (ex.has_value() != ey.has_value())
        throw std::runtime_error("compute_R: e-arrow mismatch at " + t12->label(x));
      if (ex) bind(*ex, *ey, q);
    }
  }
  for (ElemId b = 0; b < sz; ++b)
    if (r.forward[b] == kUnset)
      throw std::runtime_error("compute_R: product not connected at " + t12->label(b));
  return r;
}

int closed_H_A(const std::vector<int>& b, const std::vector<int>& bp) {
  if (b.size() != bp.size()) throw std::invalid_argument("closed_H_A: rank mismatch");
  const int n = static_cast<int>(b.size());
  int best = bp[0];
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    acc += bp[j - 1] - b[j - 1];
    best = std::max(best, acc + bp[j]);
  }
  return best;
}

int closed_H_C(const CSpin& b, const CSpin& bp) {
  if (b.x.size() != bp.x.size()) throw std::invalid_argument("closed_H_C: rank mismatch");
  const int n = static_cast<int>(b.x.size());
  const int ds = bp.s() - b.s();
  if (ds % 2 != 0) throw std::invalid_argument("closed_H_C: mismatched tuple parity");
  int best = ds / 2;  // theta_1
  int acc_bar = 0, acc_x = 0;
  for (int j = 1; j <= n; ++j) {
    // sums over k < j
    int theta = acc_bar + ds / 2;
    int thetap = acc_x - ds / 2;
    int eta = acc_bar + (b.xbar[j - 1] - b.x[j - 1]) + ds / 2;
    int etap = acc_x + (bp.x[j - 1] - bp.xbar[j - 1]) - ds / 2;
    best = std::max({best, theta, thetap, eta, etap});
    acc_bar += b.xbar[j - 1] - bp.xbar[j - 1];
    acc_x += bp.x[j - 1] - b.x[j - 1];
  }
  return best;
}

HTable compute_H_bfs(TensorPtr t, const RMap& r, ElemId anchor, int anchor_value) {
  if (r.domain != t) throw std::invalid_argument("compute_H_bfs: RMap domain mismatch");
  const auto& B1 = *t->left();
  const auto& B2 = *t->right();
  const auto& C2 = *r.codomain->left();
  const auto& C1 = *r.codomain->right();

  auto zero_cond = [&](ElemId x) {
    auto [l, rgt] = t->decode(x);
    return B1.phi(l, 0) >= B2.eps(rgt, 0);
  };
  auto zero_cond_img = [&](ElemId x) {
    auto [l, rgt] = r.codomain->decode(r.forward[x]);
    return C2.phi(l, 0) >= C1.eps(rgt, 0);
  };
  // increment of H along e_i applied at x (source of the raise)
  auto delta = [&](ElemId x, int i) -> int {
    if (i != 0) return 0;
    bool c1 = zero_cond(x), c2 = zero_cond_img(x);
    if (c1 && c2) return 1;
    if (!c1 && !c2) return -1;
    return 0;
  };

  constexpr int kUnset = INT32_MIN;
  HTable h;
  h.product = t;
  h.anchor = anchor;
  h.value.assign(t->size(), kUnset);
  h.value[anchor] = anchor_value;
  std::queue<ElemId> q;
  q.push(anchor);
  while (!q.empty()) {
    ElemId x = q.front();
    q.pop();
    for (int i = 0; i < t->num_nodes(); ++i) {
      if (auto up = t->raise(x, i)) {
        int v = h.value[x] + delta(x, i);
        if (h.value[*up] == kUnset) {
          h.value[*up] = v;
          q.push(*up);
        }
      }
      if (auto dn = t->lower(x, i)) {
        // H(x) = H(e_i(dn)) = H(dn) + delta(dn, i)
        int v = h.value[x] - delta(*dn, i);
        if (h.value[*dn] == kUnset) {
          h.value[*dn] = v;
          q.push(*dn);
        }
      }
    }
  }
  for (ElemId x = 0; x < t->size(); ++x) {
    if (h.value[x] == kUnset)
      throw std::runtime_error("compute_H_bfs: product not connected at " + t->label(x));
    for (int i = 0; i < t->num_nodes(); ++i) {
      if (auto up = t->raise(x, i)) {
        if (h.value[*up] != h.value[x] + delta(x, i))
          throw std::runtime_error("compute_H_bfs: inconsistent recursion at " + t->label(x) +
                                   " node " + std::to_string(i));
      }
    }
  }
  return h;
}

bool rmap_valid(const RMap& r) {
  const auto& dom = *r.domain;
  const auto& cod = *r.codomain;
  if (r.forward.size() != dom.size() || r.inverse.size() != cod.size()) return false;
  for (ElemId b = 0; b < dom.size(); ++b) {
    if (r.forward[b] >= cod.size() || r.inverse[r.forward[b]] != b) return false;
    if (dom.weight(b) != cod.weight(r.forward[b])) return false;
    for (int i = 0; i < dom.num_nodes(); ++i) {
      auto fx = dom.lower(b, i);
      auto fy = cod.lower(r.forward[b], i);
      if (fx.has_value() != fy.has_value()) return false;
      if (fx && r.forward[*fx] != *fy) return false;
      auto ex = dom.raise(b, i);
      auto ey = cod.raise(r.forward[b], i);
      if (ex.has_value() != ey.has_value()) return false;
      if (ex && r.forward[*ex] != *ey) return false;
    }
  }
  return true;
}

bool h_table_consistent(const HTable& h, const RMap& r, int anchor_value) {
  const auto& t = *h.product;
  if (h.value.size() != t.size() || r.domain != h.product) return false;
  if (h.at(h.anchor) != anchor_value) return false;
  const auto& B1 = *t.left();
  const auto& B2 = *t.right();
  const auto& C2 = *r.codomain->left();
  const auto& C1 = *r.codomain->right();
  for (ElemId x = 0; x < t.size(); ++x) {
    for (int i = 0; i < t.num_nodes(); ++i) {
      auto up = t.raise(x, i);
      if (!up) continue;
      int d = 0;
      if (i == 0) {
        auto [l, rgt] = t.decode(x);
        bool c1 = B1.phi(l, 0) >= B2.eps(rgt, 0);
        auto [il, ir] = r.codomain->decode(r.forward[x]);
        bool c2 = C2.phi(il, 0) >= C1.eps(ir, 0);
        d = (c1 && c2) ? 1 : (!c1 && !c2) ? -1 : 0;
      }
      if (h.at(*up) != h.at(x) + d) return false;
    }
  }
  return true;
}

HTable closed_H_table(TensorPtr t) {
  HTable h;
  h.product = t;
  h.value.resize(t->size());
  if (auto a1 = std::dynamic_pointer_cast<const ARowCrystal>(t->left())) {
    auto a2 = std::dynamic_pointer_cast<const ARowCrystal>(t->right());
    if (!a2) throw std::invalid_argument("closed_H_table: mixed component types");
    for (ElemId b = 0; b < t->size(); ++b) {
      auto [l, r] = t->decode(b);
      h.value[b] = closed_H_A(a1->row(l), a2->row(r));
    }
  } else if (auto c1 = std::dynamic_pointer_cast<const CSpinCrystal>(t->left())) {
    auto c2 = std::dynamic_pointer_cast<const CSpinCrystal>(t->right());
    if (!c2) throw std::invalid_argument("closed_H_table: mixed component types");
    if (c1->degree() != c2->degree())
      throw std::invalid_argument("closed_H_table: C-type closed form needs equal degrees");
    for (ElemId b = 0; b < t->size(); ++b) {
      auto [l, r] = t->decode(b);
      h.value[b] = closed_H_C(c1->elem(l), c2->elem(r));
    }
  } else {
    throw std::invalid_argument("closed_H_table: no closed form for nested products");
  }
  h.anchor = canonical_anchor(*t);
  return h;
}

ElemId canonical_anchor(const TensorCrystal& t) {
  ElemId hw1 = principal_classical_hw(*t.left());
  ElemId hw2 = principal_classical_hw(*t.right());
  return t.encode(hw1, hw2);
}

HTable canonical_H_table(TensorPtr t, const RMap& r) {
  bool family_pair =
      (std::dynamic_pointer_cast<const ARowCrystal>(t->left()) &&
       std::dynamic_pointer_cast<const ARowCrystal>(t->right())) ||
      (std::dynamic_pointer_cast<const CSpinCrystal>(t->left()) &&
       std::dynamic_pointer_cast<const CSpinCrystal>(t->right()) &&
       std::dynamic_pointer_cast<const CSpinCrystal>(t->left())->degree() ==
           std::dynamic_pointer_cast<const CSpinCrystal>(t->right())->degree());
  if (family_pair) {
    HTable closed = closed_H_table(t);
    // BFS agrees with the closed form exactly once anchored to it (checked in
    // the test suite); return the closed values directly.
    return closed;
  }
  return compute_H_bfs(t, r, canonical_anchor(*t), 0);
}

DecompositionReport decompose_H(CrystalPtr b1, CrystalPtr b2) {
  auto t12 = std::make_shared<TensorCrystal>(b1, b2);
  auto t21 = std::make_shared<TensorCrystal>(b2, b1);
  auto b11 = std::make_shared<TensorCrystal>(b1, b1);
  auto b22 = std::make_shared<TensorCrystal>(b2, b2);
  CrystalPtr B = t12;
  auto bb = std::make_shared<TensorCrystal>(B, B);

  RMap r12 = compute_R(t12, t21);
  RMap r21 = compute_R(t21, t12);
  HTable h12 = canonical_H_table(t12, r12);
  HTable h21 = canonical_H_table(t21, r21);
  HTable h11 = canonical_H_table(b11, identity_rmap(b11));
  HTable h22 = canonical_H_table(b22, identity_rmap(b22));
  HTable hbb = compute_H_bfs(bb, identity_rmap(bb), canonical_anchor(*bb), 0);

  DecompositionReport rep;
  rep.ok = rep.alt_ok = true;
  bool have_const = false, have_alt = false;
  for (ElemId xx = 0; xx < bb->size(); ++xx) {
    auto [x, xp] = bb->decode(xx);
    auto [e1, e2] = t12->decode(x);    // b1 (x) b2
    auto [f1, f2] = t12->decode(xp);   // b'1 (x) b'2
    auto [tb2, tb1] = t21->decode(r12(x));
    auto [tbp2, tbp1] = t21->decode(r12(xp));
    (void)tb2;
    (void)tbp1;

    long long rhs = h12.at(x) + h11.at(b11->encode(tb1, f1)) +
                    h22.at(b22->encode(e2, tbp2)) + h12.at(xp);
    long long diff = hbb.at(xx) - rhs;
    if (!have_const) {
      rep.constant = diff;
      have_const = true;
    } else if (diff != rep.constant && rep.ok) {
      rep.ok = false;
      rep.failures.push_back("four-term split drifts at " + bb->label(xx));
    }

    // alternative: route the middle pair b2 (x) b'1 through the inverse map
    ElemId mid = t21->encode(e2, f1);
    auto [c1, c2] = t12->decode(r21(mid));  // bcheck'1 (x) bcheck2
    long long alt = h21.at(mid) + h11.at(b11->encode(e1, c1)) +
                    h22.at(b22->encode(c2, f2)) + h12.at(t12->encode(c1, c2));
    long long adiff = hbb.at(xx) - alt;
    if (!have_alt) {
      rep.alt_constant = adiff;
      have_alt = true;
    } else if (adiff != rep.alt_constant && rep.alt_ok) {
      rep.alt_ok = false;
      rep.failures.push_back("alternative split drifts at " + bb->label(xx));
    }
  }
  return rep;
}

}  // namespace crystal
