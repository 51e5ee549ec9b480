#include "crystal/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "crystal/checks.hpp"

namespace crystal {

ReferencePath::ReferencePath(CrystalPtr crys, std::vector<ElemId> period)
    : crys_(std::move(crys)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("reference path: empty period");
  LevelInfo info = level_and_minimal(*crys_);
  std::set<ElemId> minimal(info.minimal.begin(), info.minimal.end());
  const auto T = static_cast<std::int64_t>(period_.size());
  for (std::int64_t j = 1; j <= T; ++j) {
    if (!minimal.count(at(j)))
      throw std::invalid_argument("reference path: entry " + crys_->label(at(j)) +
                                  " is not minimal");
    if (crys_->phi_weight(at(j + 1)) != crys_->eps_weight(at(j)))
      throw std::invalid_argument("reference path: seam phi/eps mismatch at position " +
                                  std::to_string(j));
  }
}

Path::Path(RefPtr ref) : ref_(std::move(ref)) {}

Path::Path(RefPtr ref, std::vector<ElemId> entries_1_to_d)
    : ref_(std::move(ref)), entries_(std::move(entries_1_to_d)) {
  canonicalize();
}

void Path::canonicalize() {
  while (!entries_.empty() &&
         entries_.back() == ref_->at(static_cast<std::int64_t>(entries_.size())))
    entries_.pop_back();
}

namespace {

// phi of the abstracted tail ...(x) ref(m+2) (x) ref(m+1): the seam identity
// collapses the fold to phi(ref(m+1)); eps of the tail is 0.
struct FoldState {
  int eps = 0;
  int phi = 0;
};

// prefix[k] = stats of tail (x) p(m) (x) ... (x) p(k), for k = m+1 .. 1.
std::vector<FoldState> prefix_stats(const Path& p, int i, int m) {
  const FiniteCrystal& B = p.ref().crystal();
  std::vector<FoldState> pre(static_cast<std::size_t>(m) + 2);
  pre[m + 1] = {0, B.phi(p.ref().at(m + 1), i)};
  for (int k = m; k >= 1; --k) {
    const FoldState& up = pre[k + 1];
    int e = B.eps(p.at(k), i), f = B.phi(p.at(k), i);
    pre[k].eps = std::max(up.eps, up.eps + e - up.phi);
    pre[k].phi = std::max(f, up.phi + f - e);
  }
  return pre;
}

}  // namespace

int path_eps(const Path& p, int i) { return prefix_stats(p, i, p.depth())[1].eps; }
int path_phi(const Path& p, int i) { return prefix_stats(p, i, p.depth())[1].phi; }

std::optional<Path> path_raise(const Path& p, int i) {
  const FiniteCrystal& B = p.ref().crystal();
  const int m = p.depth() + 1;
  auto pre = prefix_stats(p, i, m);
  for (int k = 1; k <= m; ++k) {
    if (pre[k + 1].phi >= B.eps(p.at(k), i)) continue;  // signature points deeper
    // the seam identity rules out landing on the reference slot
    if (k > p.depth()) throw std::logic_error("path_raise: raise landed on the reference slot");
    auto up = B.raise(p.at(k), i);
    if (!up) throw std::logic_error("path_raise: selected factor has eps = 0");
    std::vector<ElemId> en = p.entries();
    en[k - 1] = *up;
    return Path(p.ref_ptr(), std::move(en));
  }
  return std::nullopt;  // the signature escapes into the tail
}

std::optional<Path> path_lower(const Path& p, int i) {
  const FiniteCrystal& B = p.ref().crystal();
  const int m = p.depth() + 1;
  auto pre = prefix_stats(p, i, m);
  for (int k = 1; k <= m; ++k) {
    if (pre[k + 1].phi > B.eps(p.at(k), i)) continue;
    auto dn = B.lower(p.at(k), i);
    if (!dn) return std::nullopt;
    std::vector<ElemId> en(static_cast<std::size_t>(std::max(p.depth(), k)));
    for (std::size_t idx = 0; idx < en.size(); ++idx)
      en[idx] = idx < p.entries().size() ? p.entries()[idx]
                                         : p.ref().at(static_cast<std::int64_t>(idx) + 1);
    en[k - 1] = *dn;
    return Path(p.ref_ptr(), std::move(en));
  }
  // the seam identity makes phi(prefix) = eps(reference slot) at k = m
  throw std::logic_error("path_lower: signature escaped past the lookahead slot");
}

bool is_hw_path(const Path& p) {
  for (int i = 0; i < p.ref().crystal().num_nodes(); ++i)
    if (path_eps(p, i) > 0) return false;
  return true;
}

std::int64_t path_energy(const Path& p, const HTable& h_square) {
  const auto& square = *h_square.product;
  if (!structurally_equal(*square.left(), p.ref().crystal()) ||
      !structurally_equal(*square.left(), *square.right()))
    throw std::invalid_argument("path_energy: table is not on crystal (x) crystal");
  std::int64_t e = 0;
  for (std::int64_t j = 1; j <= p.depth(); ++j) {
    int hp = h_square.at(square.encode(p.at(j + 1), p.at(j)));
    int hr = h_square.at(square.encode(p.ref().at(j + 1), p.ref().at(j)));
    e += j * (hp - hr);
  }
  return e;
}

Weight path_weight_cl(const Path& p) {
  const FiniteCrystal& B = p.ref().crystal();
  Weight w = B.phi_weight(p.ref().at(1));
  for (std::int64_t j = 1; j <= p.depth(); ++j)
    w += B.weight(p.at(j)) - B.weight(p.ref().at(j));
  return w;
}

AffineWeight path_weight(const Path& p, const HTable& h_square) {
  return AffineWeight{path_weight_cl(p), -path_energy(p, h_square)};
}

namespace {

void hw_rec(const RefPtr& ref, const std::map<Weight, std::vector<ElemId>>& by_eps,
            int j, const Weight& target_eps, std::vector<ElemId>& entries,
            std::set<Path>& out) {
  if (j == 0) {
    std::vector<ElemId> rev(entries.rbegin(), entries.rend());
    out.insert(Path(ref, std::move(rev)));
    return;
  }
  auto it = by_eps.find(target_eps);
  if (it == by_eps.end()) return;
  for (ElemId b : it->second) {
    entries.push_back(b);
    hw_rec(ref, by_eps, j - 1, ref->crystal().phi_weight(b), entries, out);
    entries.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_hw_paths(const RefPtr& ref, int N) {
  const FiniteCrystal& B = ref->crystal();
  LevelInfo info = level_and_minimal(B);
  std::map<Weight, std::vector<ElemId>> by_eps;
  for (ElemId b : info.minimal) by_eps[B.eps_weight(b)].push_back(b);

  std::set<Path> out;
  std::vector<ElemId> entries;  // positions N, N-1, ..., 1
  hw_rec(ref, by_eps, N, B.phi_weight(ref->at(N + 1)), entries, out);

  std::vector<Path> res(out.begin(), out.end());
  for (const Path& p : res) {
    if (!is_hw_path(p))
      throw std::logic_error("enumerate_hw_paths: characterization/oracle mismatch");
    // wt p[j] = phi(p(j+1)) down the whole chain
    Weight w = B.phi_weight(ref->at(p.depth() + 1));
    for (std::int64_t j = p.depth(); j >= 1; --j) {
      w += B.weight(p.at(j));
      if (w != B.phi_weight(p.at(j)))
        throw std::logic_error("enumerate_hw_paths: wt p[j] != phi(p(j+1)) at j=" +
                               std::to_string(j - 1));
    }
  }
  return res;
}

bool is_restricted(const Weight& lambda, const Path& p) {
  const FiniteCrystal& B = p.ref().crystal();
  Weight lam_j = lambda + B.phi_weight(p.ref().at(p.depth() + 1));
  for (std::int64_t j = p.depth(); j >= 1; --j) {
    if (!lam_j.all_ge(B.eps_weight(p.at(j)))) return false;
    lam_j += B.weight(p.at(j));
  }
  return true;
}

bool is_restricted_oracle(const Weight& lambda, const Path& p) {
  for (int i = 0; i < p.ref().crystal().num_nodes(); ++i)
    if (path_eps(p, i) > lambda.at(i)) return false;
  return true;
}

namespace {

void restricted_rec(const RefPtr& ref, int j, const Weight& lam_j,
                    std::vector<ElemId>& entries, std::set<Path>& out) {
  if (j == 0) {
    std::vector<ElemId> rev(entries.rbegin(), entries.rend());
    out.insert(Path(ref, std::move(rev)));
    return;
  }
  const FiniteCrystal& B = ref->crystal();
  for (ElemId b = 0; b < B.size(); ++b) {
    if (!lam_j.all_ge(B.eps_weight(b))) continue;
    entries.push_back(b);
    restricted_rec(ref, j - 1, lam_j + B.weight(b), entries, out);
    entries.pop_back();
  }
}

void all_paths_rec(const RefPtr& ref, int j, std::vector<ElemId>& entries,
                   std::set<Path>& out) {
  if (j == 0) {
    std::vector<ElemId> rev(entries.rbegin(), entries.rend());
    out.insert(Path(ref, std::move(rev)));
    return;
  }
  for (ElemId b = 0; b < ref->crystal().size(); ++b) {
    entries.push_back(b);
    all_paths_rec(ref, j - 1, entries, out);
    entries.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_restricted(const Weight& lambda, const RefPtr& ref, int N) {
  if (!lambda.dominant()) throw std::invalid_argument("enumerate_restricted: lambda not dominant");
  const FiniteCrystal& B = ref->crystal();
  std::set<Path> out;
  std::vector<ElemId> entries;
  restricted_rec(ref, N, lambda + B.phi_weight(ref->at(N + 1)), entries, out);
  return {out.begin(), out.end()};
}

std::vector<Path> enumerate_all_paths(const RefPtr& ref, int N) {
  std::set<Path> out;
  std::vector<ElemId> entries;
  all_paths_rec(ref, N, entries, out);
  return {out.begin(), out.end()};
}

nlohmann::json path_to_json(const Path& p) {
  const FiniteCrystal& B = p.ref().crystal();
  nlohmann::json period = nlohmann::json::array();
  for (ElemId b : p.ref().period()) period.push_back(B.elem_to_json(b));
  nlohmann::json entries = nlohmann::json::array();
  for (int j = p.depth(); j >= 1; --j) entries.push_back(B.elem_to_json(p.at(j)));
  return nlohmann::json{{"ref", {{"period", period}}}, {"entries", entries}};
}

ReferencePath make_ref_C(std::shared_ptr<const CSpinCrystal> B, const Weight& lambda) {
  const CartanData& cd = B->cartan();
  const int n = cd.n, l = B->degree();
  if (lambda.nodes() != cd.num_nodes() || !lambda.dominant() ||
      level(cd, lambda) != (l - 1) / 2)
    throw std::invalid_argument("make_ref_C: lambda must be dominant of level (l-1)/2");

  auto pick = [&](const Weight& mu, int k, bool barred) -> ElemId {
    for (const MinimalClassElem& e : minimal_class(*B, mu))
      if (e.k == k && e.barred == barred) return e.id;
    throw std::logic_error("make_ref_C: requested class element absent");
  };

  std::vector<ElemId> period(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) {
    const int r = j % (2 * n);
    ElemId b;
    if (r >= 1 && r <= n) {
      const int i = r;
      b = pick(lambda + Weight::fundamental(cd.num_nodes(), i), i, true);
    } else {
      const int i = ((1 - r) % (2 * n) + 2 * n) % (2 * n);
      b = pick(lambda + Weight::fundamental(cd.num_nodes(), i - 1), i, false);
    }
    period[j - 1] = b;
  }
  return ReferencePath(std::move(B), std::move(period));
}

ReferencePath make_ref_A(TensorPtr B, const Weight& lambda, const Weight& mu) {
  auto b1 = std::dynamic_pointer_cast<const ARowCrystal>(B->left());
  auto b2 = std::dynamic_pointer_cast<const ARowCrystal>(B->right());
  if (!b1 || !b2) throw std::invalid_argument("make_ref_A: product of A-type rows expected");
  const CartanData& cd = B->cartan();
  const int n = cd.n, l = b1->degree(), m = b2->degree();
  if (l < m) throw std::invalid_argument("make_ref_A: needs degree(left) >= degree(right)");
  if (!lambda.dominant() || level(cd, lambda) != l - m)
    throw std::invalid_argument("make_ref_A: lambda must be dominant of level l-m");
  if (!mu.dominant() || level(cd, mu) != m)
    throw std::invalid_argument("make_ref_A: mu must be dominant of level m");

  auto wrap = [&](int i) { return ((i % n) + n) % n; };
  std::vector<ElemId> period(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<int> left(n), right(n);
    for (int i = 0; i < n; ++i) {
      left[i] = lambda.at(wrap(i + j)) + mu.at(wrap(i + 2 * j));
      right[i] = mu.at(wrap(i + 2 * j - 1));
    }
    auto lid = b1->find(left), rid = b2->find(right);
    if (!lid || !rid) throw std::logic_error("make_ref_A: constructed row not in crystal");
    period[j - 1] = B->encode(*lid, *rid);
  }
  ReferencePath ref(B, std::move(period));
  for (int j = 1; j <= n; ++j) {
    Weight expect = sigma_pow(cd, lambda, j) + sigma_pow(cd, mu, 2 * j);
    if (B->eps_weight(ref.at(j)) != expect)
      throw std::logic_error("make_ref_A: eps(entry) != sigma^j lambda + sigma^{2j} mu");
  }
  return ref;
}

ReferencePath make_ref_A_single(std::shared_ptr<const ARowCrystal> B, const Weight& mu) {
  const CartanData& cd = B->cartan();
  const int n = cd.n;
  if (!mu.dominant() || level(cd, mu) != B->degree())
    throw std::invalid_argument("make_ref_A_single: mu must be dominant of level m");
  auto wrap = [&](int i) { return ((i % n) + n) % n; };
  std::vector<ElemId> period(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<int> row(n);
    for (int i = 0; i < n; ++i) row[i] = mu.at(wrap(i + j));
    auto id = B->find(row);
    if (!id) throw std::logic_error("make_ref_A_single: constructed row not in crystal");
    period[j - 1] = *id;
  }
  return ReferencePath(std::move(B), std::move(period));
}

ReferencePath make_ref_A_multi(CrystalPtr nested, const std::vector<Weight>& lambdas) {
  // unravel the left-nested chain into factors
  std::vector<std::shared_ptr<const ARowCrystal>> factors;
  std::vector<TensorPtr> spine;
  CrystalPtr cur = nested;
  while (auto t = std::dynamic_pointer_cast<const TensorCrystal>(cur)) {
    spine.push_back(t);
    factors.push_back(std::dynamic_pointer_cast<const ARowCrystal>(t->right()));
    if (!factors.back())
      throw std::invalid_argument("make_ref_A_multi: A-type row factors expected");
    cur = t->left();
  }
  factors.push_back(std::dynamic_pointer_cast<const ARowCrystal>(cur));
  if (!factors.back())
    throw std::invalid_argument("make_ref_A_multi: A-type row factors expected");
  std::reverse(factors.begin(), factors.end());
  std::reverse(spine.begin(), spine.end());

  const int s = static_cast<int>(factors.size());
  const CartanData& cd = nested->cartan();
  const int n = cd.n;
  if (static_cast<int>(lambdas.size()) != s)
    throw std::invalid_argument("make_ref_A_multi: one weight per factor expected");
  for (int k = 0; k < s; ++k) {
    int lk = factors[k]->degree();
    int lk1 = k + 1 < s ? factors[k + 1]->degree() : 0;
    if (lk < lk1)
      throw std::invalid_argument("make_ref_A_multi: degrees must be non-increasing");
    if (!lambdas[k].dominant() || level(cd, lambdas[k]) != lk - lk1)
      throw std::invalid_argument("make_ref_A_multi: weight level mismatch at factor " +
                                  std::to_string(k + 1));
  }

  auto wrap = [&](int i) { return ((i % n) + n) % n; };
  std::vector<ElemId> period(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<ElemId> comp(s);
    for (int k = 1; k <= s; ++k) {
      std::vector<int> row(n, 0);
      for (int i = 0; i < n; ++i)
        for (int t = k; t <= s; ++t) row[i] += lambdas[t - 1].at(wrap(i + t * j - k + 1));
      auto id = factors[k - 1]->find(row);
      if (!id) throw std::logic_error("make_ref_A_multi: constructed row not in crystal");
      comp[k - 1] = *id;
    }
    ElemId enc = comp[0];
    for (int k = 1; k < s; ++k) enc = spine[k - 1]->encode(enc, comp[k]);
    period[j - 1] = enc;
  }
  return ReferencePath(std::move(nested), std::move(period));
}

}  // namespace crystal
