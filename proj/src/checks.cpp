#include "crystal/checks.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystal {

int eps_by_counting(const FiniteCrystal& B, ElemId b, int i) {
  int count = 0;
  ElemId cur = b;
  const int cap = static_cast<int>(B.size()) + 1;
  while (auto up = B.raise(cur, i)) {
    cur = *up;
    if (++count > cap) throw std::runtime_error("eps_by_counting: unbounded i-string");
  }
  return count;
}

int phi_by_counting(const FiniteCrystal& B, ElemId b, int i) {
  int count = 0;
  ElemId cur = b;
  const int cap = static_cast<int>(B.size()) + 1;
  while (auto dn = B.lower(cur, i)) {
    cur = *dn;
    if (++count > cap) throw std::runtime_error("phi_by_counting: unbounded i-string");
  }
  return count;
}

AxiomReport check_axioms(const FiniteCrystal& B) {
  AxiomReport rep;
  rep.elements_checked = B.size();
  const int nodes = B.num_nodes();
  auto flag = [&](ElemId b, int i, const char* kind, std::string detail) {
    rep.violations.push_back({b, i, kind, std::move(detail)});
  };

  for (ElemId b = 0; b < B.size(); ++b) {
    const Weight wb = B.weight(b);
    for (int i = 0; i < nodes; ++i) {
      // f_i b = b'  <=>  e_i b' = b
      if (auto dn = B.lower(b, i)) {
        auto back = B.raise(*dn, i);
        if (!back || *back != b)
          flag(b, i, "pairing", "e_i(f_i b) != b at " + B.label(b));
      }
      if (auto up = B.raise(b, i)) {
        auto back = B.lower(*up, i);
        if (!back || *back != b)
          flag(b, i, "pairing", "f_i(e_i b) != b at " + B.label(b));
        // weight shift of e_i is the i-th Cartan column
        Weight shift = B.weight(*up) - wb;
        for (int j = 0; j < nodes; ++j) {
          if (shift.at(j) != B.cartan().cartan[j][i]) {
            flag(b, i, "weight-shift",
                 "wt(e_i b) - wt(b) != alpha_i at " + B.label(b));
            break;
          }
        }
      }
      try {
        int ec = eps_by_counting(B, b, i);
        if (B.eps(b, i) != ec)
          flag(b, i, "eps",
               B.label(b) + ": eps=" + std::to_string(B.eps(b, i)) +
                   " counted=" + std::to_string(ec));
        int pc = phi_by_counting(B, b, i);
        if (B.phi(b, i) != pc)
          flag(b, i, "phi",
               B.label(b) + ": phi=" + std::to_string(B.phi(b, i)) +
                   " counted=" + std::to_string(pc));
      } catch (const std::runtime_error& e) {
        flag(b, i, "string", B.label(b) + ": " + e.what());
      }
      if (wb.at(i) != B.phi(b, i) - B.eps(b, i))
        flag(b, i, "i-wt", "pairing <h_i,wt b> != phi - eps at " + B.label(b));
    }
  }
  return rep;
}

LevelInfo level_and_minimal(const FiniteCrystal& B) {
  if (B.size() == 0) throw std::invalid_argument("level of empty crystal");
  const CartanData& cd = B.cartan();
  LevelInfo info;
  std::vector<int> lv(B.size());
  int best = -1;
  for (ElemId b = 0; b < B.size(); ++b) {
    int le = level(cd, B.eps_weight(b));
    int lp = level(cd, B.phi_weight(b));
    if (le != lp)
      throw std::logic_error("level_and_minimal: <c,eps(b)> != <c,phi(b)> at " + B.label(b));
    lv[b] = le;
    if (best < 0 || le < best) best = le;
  }
  info.level = best;
  for (ElemId b = 0; b < B.size(); ++b)
    if (lv[b] == best) info.minimal.push_back(b);
  return info;
}

std::vector<ElemId> minimal_of_tensor(const TensorCrystal& T) {
  const auto& B1 = *T.left();
  const auto& B2 = *T.right();
  LevelInfo l1 = level_and_minimal(B1), l2 = level_and_minimal(B2);
  std::vector<ElemId> out;
  const int nodes = T.num_nodes();
  if (l1.level >= l2.level) {
    for (ElemId b1 : l1.minimal)
      for (ElemId b2 = 0; b2 < B2.size(); ++b2) {
        bool ok = true;
        for (int i = 0; i < nodes && ok; ++i) ok = B1.phi(b1, i) >= B2.eps(b2, i);
        if (ok) out.push_back(T.encode(b1, b2));
      }
  } else {
    for (ElemId b2 : l2.minimal)
      for (ElemId b1 = 0; b1 < B1.size(); ++b1) {
        bool ok = true;
        for (int i = 0; i < nodes && ok; ++i) ok = B1.phi(b1, i) <= B2.eps(b2, i);
        if (ok) out.push_back(T.encode(b1, b2));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassicalComponent> classical_components(const FiniteCrystal& B) {
  const int nodes = B.num_nodes();
  std::vector<int> comp(B.size(), -1);
  std::vector<ClassicalComponent> out;
  for (ElemId seed = 0; seed < B.size(); ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = static_cast<int>(out.size());
    ClassicalComponent cc;
    std::queue<ElemId> q;
    q.push(seed);
    comp[seed] = id;
    while (!q.empty()) {
      ElemId b = q.front();
      q.pop();
      cc.members.push_back(b);
      for (int i = 1; i < nodes; ++i) {
        for (auto nb : {B.raise(b, i), B.lower(b, i)}) {
          if (nb && comp[*nb] < 0) {
            comp[*nb] = id;
            q.push(*nb);
          }
        }
      }
    }
    std::sort(cc.members.begin(), cc.members.end());
    std::vector<ElemId> hws;
    for (ElemId b : cc.members) {
      bool hw = true;
      for (int i = 1; i < nodes && hw; ++i) hw = B.eps(b, i) == 0;
      if (hw) hws.push_back(b);
    }
    if (hws.size() != 1)
      throw std::logic_error("classical component without unique highest weight element");
    cc.highest = hws.front();
    Weight w = B.weight(cc.highest);
    cc.classical_wt.assign(w.c.begin() + 1, w.c.end());
    out.push_back(std::move(cc));
  }
  return out;
}

SimplicityReport is_simple(const FiniteCrystal& B) {
  auto comps = classical_components(B);
  SimplicityReport rep;
  if (comps.size() == 1) {
    rep.simple = true;
    rep.principal = 0;
    return rep;
  }
  std::ostringstream why;
  for (int c0 = 0; c0 < static_cast<int>(comps.size()); ++c0) {
    bool ok = true;
    for (int j = 0; j < static_cast<int>(comps.size()) && ok; ++j) {
      if (j == c0) continue;
      if (comps[j].classical_wt == comps[c0].classical_wt) {
        why << "component " << j << " repeats the weight of component " << c0 << "; ";
        ok = false;
        break;
      }
      std::vector<int> diff(comps[j].classical_wt.size());
      for (std::size_t t = 0; t < diff.size(); ++t)
        diff[t] = comps[j].classical_wt[t] - comps[c0].classical_wt[t];
      auto dec = classical_root_decomposition_cl(B.cartan(), diff);
      if (!dec) {
        ok = false;
        break;
      }
      for (const Rat& r : *dec) {
        if (!r.is_integer() || r.num > 0) {
          why << "candidate " << c0 << ": component " << j
              << " not below it in the root order; ";
          ok = false;
          break;
        }
      }
      if (!ok) break;
      ElemId hw = comps[j].highest;
      if (!B.raise(hw, 0) || !B.lower(hw, 0)) {
        why << "candidate " << c0 << ": hw of component " << j
            << " is 0-extremal (" << B.label(hw) << "); ";
        ok = false;
      }
    }
    if (ok) {
      rep.simple = true;
      rep.principal = c0;
      return rep;
    }
  }
  rep.witness = why.str();
  return rep;
}

SurjectivityReport check_cfin_condition3(const FiniteCrystal& B) {
  LevelInfo info = level_and_minimal(B);
  std::set<Weight> eps_im, phi_im;
  for (ElemId b : info.minimal) {
    eps_im.insert(B.eps_weight(b));
    phi_im.insert(B.phi_weight(b));
  }
  SurjectivityReport rep;
  for (const Weight& mu : dominant_weights_of_level(B.cartan(), info.level)) {
    if (!eps_im.count(mu)) rep.missing_eps.push_back(mu);
    if (!phi_im.count(mu)) rep.missing_phi.push_back(mu);
  }
  rep.ok = rep.missing_eps.empty() && rep.missing_phi.empty();
  return rep;
}

ElemId weyl_act(const FiniteCrystal& B, const std::vector<int>& word, ElemId b) {
  ElemId cur = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 0 || i >= B.num_nodes()) throw std::invalid_argument("weyl_act: node out of range");
    int m = B.weight(cur).at(i);
    if (m >= 0) {
      for (int k = 0; k < m; ++k) {
        auto dn = B.lower(cur, i);
        if (!dn) throw std::logic_error("weyl_act: string shorter than <h_i,wt>");
        cur = *dn;
      }
    } else {
      for (int k = 0; k < -m; ++k) {
        auto up = B.raise(cur, i);
        if (!up) throw std::logic_error("weyl_act: string shorter than -<h_i,wt>");
        cur = *up;
      }
    }
  }
  return cur;
}

bool is_extremal_bounded(const FiniteCrystal& B, ElemId b, int maxlen) {
  std::set<ElemId> seen{b};
  std::vector<ElemId> frontier{b};
  const int nodes = B.num_nodes();
  auto i_extremal_all = [&](ElemId x) {
    for (int i = 0; i < nodes; ++i)
      if (B.raise(x, i) && B.lower(x, i)) return false;
    return true;
  };
  if (!i_extremal_all(b)) return false;
  for (int len = 0; len < maxlen && !frontier.empty(); ++len) {
    std::vector<ElemId> next;
    for (ElemId x : frontier) {
      for (int i = 0; i < nodes; ++i) {
        ElemId y = weyl_act(B, {i}, x);
        if (seen.insert(y).second) {
          if (!i_extremal_all(y)) return false;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

ElemId principal_classical_hw(const FiniteCrystal& B) {
  // the component whose weight dominates every other one in the root order;
  // simplicity is not needed for this, only the existence of a top component
  auto comps = classical_components(B);
  for (int c0 = 0; c0 < static_cast<int>(comps.size()); ++c0) {
    bool top = true;
    for (int j = 0; j < static_cast<int>(comps.size()) && top; ++j) {
      if (j == c0) continue;
      std::vector<int> diff(comps[j].classical_wt.size());
      for (std::size_t t = 0; t < diff.size(); ++t)
        diff[t] = comps[j].classical_wt[t] - comps[c0].classical_wt[t];
      auto dec = classical_root_decomposition_cl(B.cartan(), diff);
      for (const Rat& r : *dec)
        if (r.num > 0) {
          top = false;
          break;
        }
    }
    if (top) return comps[c0].highest;
  }
  throw std::logic_error("principal_classical_hw: no dominance-top classical component");
}

namespace {

// Weyl dimension of the rank-2 irrep with highest weight (p on node a, q on
// node b); kind = A_{ab}*A_{ba} in {0, 1, 2}. For kind 2 node a must carry
// the long root (the column of -2).
long long rank2_dim(int kind, long long p, long long q) {
  switch (kind) {
    case 0:
      return (p + 1) * (q + 1);
    case 1:
      return (p + 1) * (q + 1) * (p + q + 2) / 2;
    case 2:
      return (p + 1) * (q + 1) * (p + q + 2) * (2 * p + q + 3) / 6;
    default:
      throw std::logic_error("rank2_dim: unsupported kind");
  }
}

}  // namespace

Rank2Report check_regular_rank2(const FiniteCrystal& B) {
  Rank2Report rep;
  rep.ok = true;
  const int nodes = B.num_nodes();
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      int prod = B.cartan().cartan[a][b] * B.cartan().cartan[b][a];
      if (prod > 2) {
        ++rep.pairs_skipped;
        continue;
      }
      int na = a, nb = b;
      if (prod == 2 && B.cartan().cartan[a][b] == -2) std::swap(na, nb);
      // components under colors {a,b}
      std::vector<int> comp(B.size(), -1);
      int ncomp = 0;
      for (ElemId seed = 0; seed < B.size(); ++seed) {
        if (comp[seed] >= 0) continue;
        int id = ncomp++;
        std::queue<ElemId> q;
        q.push(seed);
        comp[seed] = id;
        while (!q.empty()) {
          ElemId x = q.front();
          q.pop();
          for (int i : {a, b})
            for (auto nbr : {B.raise(x, i), B.lower(x, i)})
              if (nbr && comp[*nbr] < 0) {
                comp[*nbr] = id;
                q.push(*nbr);
              }
        }
      }
      std::vector<long long> csize(ncomp, 0);
      std::vector<std::vector<ElemId>> chw(ncomp), clw(ncomp);
      for (ElemId x = 0; x < B.size(); ++x) {
        ++csize[comp[x]];
        if (B.eps(x, a) == 0 && B.eps(x, b) == 0) chw[comp[x]].push_back(x);
        if (B.phi(x, a) == 0 && B.phi(x, b) == 0) clw[comp[x]].push_back(x);
      }
      ++rep.pairs_checked;
      for (int c = 0; c < ncomp; ++c) {
        if (chw[c].size() != 1 || clw[c].size() != 1) {
          rep.ok = false;
          rep.failures.push_back("pair {" + std::to_string(a) + "," + std::to_string(b) +
                                 "}: component without unique hw/lw");
          continue;
        }
        long long p = B.phi(chw[c][0], na), q = B.phi(chw[c][0], nb);
        long long want = rank2_dim(prod, p, q);
        if (want != csize[c]) {
          rep.ok = false;
          rep.failures.push_back("pair {" + std::to_string(a) + "," + std::to_string(b) +
                                 "}: component size " + std::to_string(csize[c]) +
                                 " != dim " + std::to_string(want) + " at hw " +
                                 B.label(chw[c][0]));
        }
      }
    }
  }
  return rep;
}

}  // namespace crystal
