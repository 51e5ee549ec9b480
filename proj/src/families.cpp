#include "crystal/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

std::string key_of(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

void tuples_summing_to(int slots, int total, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    tuples_summing_to(slots - 1, total - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ARowCrystal::ARowCrystal(int n, int l) : FiniteCrystal(CartanData::make(Family::A, n)), l_(l) {
  if (l < 1) throw std::invalid_argument("ARowCrystal: degree must be positive");
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  tuples_summing_to(n, l, cur, rows);
  std::sort(rows.begin(), rows.end());
  elems_ = std::move(rows);
  for (ElemId i = 0; i < elems_.size(); ++i) index_[key_of(elems_[i])] = i;
}

std::optional<ElemId> ARowCrystal::find(const std::vector<int>& row) const {
  auto it = index_.find(key_of(row));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElemId> ARowCrystal::raise(ElemId b, int i) const {
  const auto& a = elems_.at(b);
  const int n = cartan_.n;
  std::vector<int> out = a;
  out[i] -= 1;
  out[(i + n - 1) % n] += 1;
  if (out[i] < 0) return std::nullopt;
  return find(out);
}

std::optional<ElemId> ARowCrystal::lower(ElemId b, int i) const {
  const auto& a = elems_.at(b);
  const int n = cartan_.n;
  std::vector<int> out = a;
  out[i] += 1;
  out[(i + n - 1) % n] -= 1;
  if (out[(i + n - 1) % n] < 0) return std::nullopt;
  return find(out);
}

int ARowCrystal::eps(ElemId b, int i) const { return elems_.at(b)[i]; }

int ARowCrystal::phi(ElemId b, int i) const {
  const int n = cartan_.n;
  return elems_.at(b)[(i + n - 1) % n];
}

std::string ARowCrystal::label(ElemId b) const {
  const auto& a = elems_.at(b);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

nlohmann::json ARowCrystal::elem_to_json(ElemId b) const {
  return nlohmann::json{{"a", elems_.at(b)}};
}

std::optional<ElemId> ARowCrystal::elem_from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("a") || !j["a"].is_array()) return std::nullopt;
  std::vector<int> row = j["a"].get<std::vector<int>>();
  if (static_cast<int>(row.size()) != cartan_.n) return std::nullopt;
  return find(row);
}

int CSpin::s() const {
  return std::accumulate(x.begin(), x.end(), 0) +
         std::accumulate(xbar.begin(), xbar.end(), 0);
}

CSpinCrystal::CSpinCrystal(int n, int l) : FiniteCrystal(CartanData::make(Family::C, n)), l_(l) {
  if (l < 1 || l % 2 == 0)
    throw std::invalid_argument("CSpinCrystal: degree must be odd and positive");
  std::vector<std::vector<int>> tuples;
  for (int s = 1; s <= l; s += 2) {
    std::vector<int> cur;
    tuples_summing_to(2 * n, s, cur, tuples);
  }
  std::sort(tuples.begin(), tuples.end());
  for (const auto& t : tuples) {
    CSpin e;
    e.x.assign(t.begin(), t.begin() + n);
    e.xbar.assign(t.begin() + n, t.end());
    elems_.push_back(std::move(e));
  }
  for (ElemId i = 0; i < elems_.size(); ++i) {
    std::vector<int> flat = elems_[i].x;
    flat.insert(flat.end(), elems_[i].xbar.begin(), elems_[i].xbar.end());
    index_[key_of(flat)] = i;
  }
}

std::optional<ElemId> CSpinCrystal::find(const CSpin& e) const {
  std::vector<int> flat = e.x;
  flat.insert(flat.end(), e.xbar.begin(), e.xbar.end());
  auto it = index_.find(key_of(flat));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElemId> CSpinCrystal::reindex(CSpin e) const {
  for (int v : e.x)
    if (v < 0) return std::nullopt;
  for (int v : e.xbar)
    if (v < 0) return std::nullopt;
  if (e.s() > l_) return std::nullopt;
  return find(e);
}

std::optional<ElemId> CSpinCrystal::raise(ElemId b, int i) const {
  const int n = cartan_.n;
  CSpin e = elems_.at(b);
  if (i == 0) {
    if (e.x[0] >= e.xbar[0] + 2) {
      e.x[0] -= 2;
    } else if (e.x[0] == e.xbar[0] + 1) {
      e.x[0] -= 1;
      e.xbar[0] += 1;
    } else {  // x_1 <= xbar_1
      e.xbar[0] += 2;
    }
  } else if (i == n) {
    e.x[n - 1] += 1;
    e.xbar[n - 1] -= 1;
  } else {
    // coordinates x_{i+1}, xbar_{i+1} sit at index i
    if (e.x[i] > e.xbar[i]) {
      e.x[i - 1] += 1;
      e.x[i] -= 1;
    } else {
      e.xbar[i] += 1;
      e.xbar[i - 1] -= 1;
    }
  }
  return reindex(std::move(e));
}

std::optional<ElemId> CSpinCrystal::lower(ElemId b, int i) const {
  const int n = cartan_.n;
  CSpin e = elems_.at(b);
  if (i == 0) {
    if (e.x[0] >= e.xbar[0]) {
      e.x[0] += 2;
    } else if (e.x[0] == e.xbar[0] - 1) {
      e.x[0] += 1;
      e.xbar[0] -= 1;
    } else {  // x_1 <= xbar_1 - 2
      e.xbar[0] -= 2;
    }
  } else if (i == n) {
    e.x[n - 1] -= 1;
    e.xbar[n - 1] += 1;
  } else {
    if (e.x[i] >= e.xbar[i]) {
      e.x[i - 1] -= 1;
      e.x[i] += 1;
    } else {
      e.xbar[i] -= 1;
      e.xbar[i - 1] += 1;
    }
  }
  return reindex(std::move(e));
}

int CSpinCrystal::eps(ElemId b, int i) const {
  const int n = cartan_.n;
  const CSpin& e = elems_.at(b);
  if (i == 0) return (l_ - e.s()) / 2 + std::max(e.x[0] - e.xbar[0], 0);
  if (i == n) return e.xbar[n - 1];
  return e.xbar[i - 1] + std::max(e.x[i] - e.xbar[i], 0);
}

int CSpinCrystal::phi(ElemId b, int i) const {
  const int n = cartan_.n;
  const CSpin& e = elems_.at(b);
  if (i == 0) return (l_ - e.s()) / 2 + std::max(e.xbar[0] - e.x[0], 0);
  if (i == n) return e.x[n - 1];
  return e.x[i - 1] + std::max(e.xbar[i] - e.x[i], 0);
}

std::string CSpinCrystal::label(ElemId b) const {
  const CSpin& e = elems_.at(b);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.x.size(); ++i) {
    if (i) os << ',';
    os << e.x[i];
  }
  os << '|';
  for (std::size_t i = e.xbar.size(); i-- > 0;) {
    os << e.xbar[i];
    if (i) os << ',';
  }
  os << ')';
  return os.str();
}

nlohmann::json CSpinCrystal::elem_to_json(ElemId b) const {
  const CSpin& e = elems_.at(b);
  return nlohmann::json{{"x", e.x}, {"xb", e.xbar}};
}

std::optional<ElemId> CSpinCrystal::elem_from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("x") || !j.contains("xb")) return std::nullopt;
  CSpin e;
  e.x = j["x"].get<std::vector<int>>();
  e.xbar = j["xb"].get<std::vector<int>>();
  if (static_cast<int>(e.x.size()) != cartan_.n ||
      static_cast<int>(e.xbar.size()) != cartan_.n)
    return std::nullopt;
  return find(e);
}

std::vector<MinimalClassElem> minimal_class(const CSpinCrystal& B, const Weight& mu) {
  const CartanData& cd = B.cartan();
  const int n = cd.n;
  const int l = B.degree();
  if (mu.nodes() != cd.num_nodes()) throw std::invalid_argument("mu/cartan mismatch");
  if (!mu.dominant() || level(cd, mu) != (l + 1) / 2)
    throw std::invalid_argument("mu must be dominant of level (l+1)/2");

  std::vector<MinimalClassElem> out;
  auto validate = [&](std::optional<ElemId> id, const char* what) {
    if (!id) throw std::logic_error(std::string("minimal_class: invalid element for ") + what);
    if (B.eps_weight(*id) != mu)
      throw std::logic_error(std::string("minimal_class: eps(b) != mu for ") + what);
    return *id;
  };

  // b^mu_k: x_k incremented, x_{k-1} and xbar_{k-1} decremented (k >= 2);
  // the k=1 boundary touches no coordinate besides x_1 since mu_0 is not a
  // tuple coordinate.
  for (int k = 1; k <= n; ++k) {
    if (mu.at(k - 1) <= 0) continue;
    CSpin e;
    e.x.assign(mu.c.begin() + 1, mu.c.end());
    e.xbar = e.x;
    e.x[k - 1] += 1;
    if (k >= 2) {
      e.x[k - 2] -= 1;
      e.xbar[k - 2] -= 1;
    }
    out.push_back({validate(B.find(e), "b^mu_k"), k, false});
  }
  // b^mu_kbar: x_k decremented, xbar untouched.
  for (int k = 1; k <= n; ++k) {
    if (mu.at(k) <= 0) continue;
    CSpin e;
    e.x.assign(mu.c.begin() + 1, mu.c.end());
    e.xbar = e.x;
    e.x[k - 1] -= 1;
    out.push_back({validate(B.find(e), "b^mu_kbar"), k, true});
  }
  return out;
}

Weight sigma(const CartanData& cd, const Weight& w) {
  if (cd.family != Family::A) throw std::invalid_argument("sigma is defined for TypeA only");
  const int n = cd.n;
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i) out.c[i] = w.at((i + 1) % n);
  return out;
}

Weight sigma_pow(const CartanData& cd, const Weight& w, int k) {
  if (cd.family != Family::A) throw std::invalid_argument("sigma is defined for TypeA only");
  const int n = cd.n;
  int shift = ((k % n) + n) % n;
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i) out.c[i] = w.at((i + shift) % n);
  return out;
}

}  // namespace crystal
