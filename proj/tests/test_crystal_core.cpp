#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "crystal/checks.hpp"
#include "crystal/families.hpp"
#include "support.hpp"

using namespace crystal;
using crystal_test::CorruptArrow;
using crystal_test::DisjointUnion;
using crystal_test::DropElement;

namespace {

std::shared_ptr<ARowCrystal> arow(int n, int l) { return std::make_shared<ARowCrystal>(n, l); }
std::shared_ptr<CSpinCrystal> cspin(int n, int l) { return std::make_shared<CSpinCrystal>(n, l); }

// brute-force argmin of <c, eps(.)> over a crystal
std::vector<ElemId> minimal_brute(const FiniteCrystal& B) {
  int best = -1;
  std::vector<ElemId> out;
  for (ElemId b = 0; b < B.size(); ++b) {
    int lv = level(B.cartan(), B.eps_weight(b));
    if (best < 0 || lv < best) {
      best = lv;
      out.clear();
    }
    if (lv == best) out.push_back(b);
  }
  return out;
}

bool connected_all_colors(const FiniteCrystal& B) {
  std::vector<bool> seen(B.size(), false);
  std::vector<ElemId> stack{0};
  seen[0] = true;
  std::size_t cnt = 0;
  while (!stack.empty()) {
    ElemId b = stack.back();
    stack.pop_back();
    ++cnt;
    for (int i = 0; i < B.num_nodes(); ++i)
      for (auto nb : {B.raise(b, i), B.lower(b, i)})
        if (nb && !seen[*nb]) {
          seen[*nb] = true;
          stack.push_back(*nb);
        }
  }
  return cnt == B.size();
}

}  // namespace

TEST_CASE("tensor step follows the signature rule") {
  auto b = arow(2, 1);
  auto t = std::make_shared<TensorCrystal>(b, b);
  ElemId e10 = *b->find({1, 0});
  ElemId x = t->encode(e10, e10);
  // phi_1(left)=1 > eps_1(right)=0, so lowering acts on the left
  auto low = t->lower(x, 1);
  REQUIRE(low);
  CHECK(t->decode(*low).first == *b->find({0, 1}));
  CHECK(t->decode(*low).second == e10);

  // raising vanishes when both factors have eps_i = 0
  for (ElemId y = 0; y < t->size(); ++y)
    for (int i = 0; i < t->num_nodes(); ++i) {
      auto [l, r] = t->decode(y);
      if (b->eps(l, i) == 0 && b->eps(r, i) == 0) CHECK_FALSE(t->raise(y, i));
      // raise then lower returns the argument
      if (auto up = t->raise(y, i)) CHECK(*t->lower(*up, i) == y);
      if (auto dn = t->lower(y, i)) CHECK(*t->raise(*dn, i) == y);
    }
}

TEST_CASE("tensor statistics obey the max rule and match operator counting") {
  auto b2 = arow(2, 2);
  auto b1 = arow(2, 1);
  auto t = std::make_shared<TensorCrystal>(b2, b1);
  ElemId x = t->encode(*b2->find({1, 1}), *b1->find({1, 0}));
  CHECK(t->eps_weight(x) == Weight({1, 1}));
  CHECK(t->phi_weight(x) == Weight({0, 2}));
  for (int i = 0; i < 2; ++i) {
    CHECK(t->eps(x, i) == eps_by_counting(*t, x, i));
    CHECK(t->phi(x, i) == phi_by_counting(*t, x, i));
  }

  for (ElemId y = 0; y < t->size(); ++y) {
    auto [l, r] = t->decode(y);
    // max rule collapses when phi(b1) = eps(b2) componentwise
    if (b2->phi_weight(l) == b1->eps_weight(r)) {
      CHECK(t->eps_weight(y) == b2->eps_weight(l));
      CHECK(t->phi_weight(y) == b1->phi_weight(r));
    }
    // phi - eps is the weight pairing on every node
    CHECK(t->phi_weight(y) - t->eps_weight(y) == t->weight(y));
  }
}

TEST_CASE("axiom checker passes on family crystals and flags corruption") {
  auto a = arow(3, 2);
  CHECK(a->size() == 6);
  CHECK(check_axioms(*a).pass());

  auto c = cspin(2, 3);
  CHECK(c->size() == 24);
  CHECK(check_axioms(*c).pass());

  // redirect f_0 on one element; the report names the offending pair
  ElemId bad = 3;
  CorruptArrow corrupted(c, bad, 0);
  AxiomReport rep = check_axioms(corrupted);
  CHECK_FALSE(rep.pass());
  bool named = false;
  for (const auto& v : rep.violations) named |= (v.elem == bad && v.node == 0);
  CHECK(named);
}

TEST_CASE("level and minimal elements") {
  SUBCASE("A-type: level l, every element minimal") {
    for (int l : {1, 2, 3}) {
      auto a = arow(3, l);
      LevelInfo info = level_and_minimal(*a);
      CHECK(info.level == l);
      CHECK(info.minimal.size() == a->size());
    }
  }
  SUBCASE("C-type: level (l+1)/2") {
    auto c3 = cspin(2, 3);
    CHECK(level_and_minimal(*c3).level == 2);
    auto c1 = cspin(2, 1);
    LevelInfo info = level_and_minimal(*c1);
    CHECK(info.level == 1);
    CHECK(info.minimal.size() == 4);
  }
}

TEST_CASE("minimal elements of a tensor product match the case split and brute force") {
  SUBCASE("A-type pairs") {
    for (int n : {2, 3})
      for (int l : {1, 2, 3})
        for (int m : {1, 2, 3}) {
          auto t = std::make_shared<TensorCrystal>(arow(n, l), arow(n, m));
          CHECK(minimal_of_tensor(*t) == minimal_brute(*t));
          LevelInfo info = level_and_minimal(*t);
          CHECK(info.level == std::max(l, m));
          CHECK(info.minimal == minimal_of_tensor(*t));
        }
  }
  SUBCASE("C-type pair") {
    auto t = std::make_shared<TensorCrystal>(cspin(2, 3), cspin(2, 1));
    CHECK(minimal_of_tensor(*t) == minimal_brute(*t));
    CHECK(level_and_minimal(*t).level == 2);
  }
  SUBCASE("homogeneous squares: both lemma branches agree") {
    auto b = arow(2, 2);
    auto t = std::make_shared<TensorCrystal>(b, b);
    auto mins = minimal_of_tensor(*t);
    CHECK(mins == minimal_brute(*t));
    // chained minimal pairs belong to the minimal set
    for (ElemId b1 = 0; b1 < b->size(); ++b1)
      for (ElemId b2 = 0; b2 < b->size(); ++b2)
        if (b->phi_weight(b1) == b->eps_weight(b2))
          CHECK(std::count(mins.begin(), mins.end(), t->encode(b1, b2)) == 1);
  }
}

TEST_CASE("classical components") {
  SUBCASE("A-type rows form one component with hw (l,0,...,0)") {
    for (int l : {1, 2, 3}) {
      auto a = arow(3, l);
      auto comps = classical_components(*a);
      REQUIRE(comps.size() == 1);
      CHECK(a->row(comps[0].highest) == std::vector<int>{l, 0, 0});
    }
  }
  SUBCASE("C-type l=3 splits into weights 3Lb_1 and Lb_1") {
    auto c = cspin(2, 3);
    auto comps = classical_components(*c);
    REQUIRE(comps.size() == 2);
    std::set<std::vector<int>> wts;
    for (const auto& cc : comps) wts.insert(cc.classical_wt);
    CHECK(wts == std::set<std::vector<int>>{{3, 0}, {1, 0}});
  }
}

TEST_CASE("simplicity criterion") {
  CHECK(is_simple(*arow(3, 2)).simple);
  CHECK(is_simple(*cspin(2, 3)).simple);
  CHECK(is_simple(*cspin(2, 1)).simple);
  CHECK(is_simple(*cspin(3, 3)).simple);

  auto c1 = cspin(2, 1);
  SimplicityReport dup = is_simple(DisjointUnion(c1, c1));
  CHECK_FALSE(dup.simple);

  // simple implies connected, including pairwise products
  CHECK(connected_all_colors(*arow(3, 2)));
  CHECK(connected_all_colors(*cspin(2, 3)));
  CHECK(connected_all_colors(TensorCrystal(arow(3, 2), arow(3, 1))));
  CHECK(connected_all_colors(TensorCrystal(cspin(2, 3), cspin(2, 1))));
  CHECK_FALSE(connected_all_colors(DisjointUnion(c1, c1)));

  // the hull weight has multiplicity one
  for (CrystalPtr B : {CrystalPtr(arow(3, 2)), CrystalPtr(cspin(2, 3))}) {
    Weight hull = B->weight(principal_classical_hw(*B));
    int mult = 0;
    for (ElemId b = 0; b < B->size(); ++b)
      if (B->weight(b) == hull) ++mult;
    CHECK(mult == 1);
  }
}

TEST_CASE("principal component of a product is found without the base criterion") {
  auto t = std::make_shared<TensorCrystal>(arow(3, 2), arow(3, 1));
  ElemId hw = principal_classical_hw(*t);
  auto [l, r] = t->decode(hw);
  auto left = std::dynamic_pointer_cast<const ARowCrystal>(t->left());
  auto right = std::dynamic_pointer_cast<const ARowCrystal>(t->right());
  CHECK(left->row(l) == std::vector<int>{2, 0, 0});
  CHECK(right->row(r) == std::vector<int>{1, 0, 0});
}

TEST_CASE("minimal-element surjectivity onto dominant weights") {
  CHECK(check_cfin_condition3(*arow(3, 2)).ok);
  CHECK(check_cfin_condition3(*arow(2, 3)).ok);
  CHECK(check_cfin_condition3(*cspin(2, 3)).ok);
  CHECK(check_cfin_condition3(*cspin(2, 1)).ok);

  // deleting the only element of a singleton class breaks surjectivity
  auto c = cspin(2, 3);
  CSpin b1;
  b1.x = {1, 0};
  b1.xbar = {0, 0};
  DropElement broken(c, *c->find(b1));
  SurjectivityReport rep = check_cfin_condition3(broken);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.missing_eps.size() == 1);
  CHECK(rep.missing_eps[0] == Weight({2, 0, 0}));
}

TEST_CASE("Weyl action") {
  auto a = arow(2, 1);
  ElemId e10 = *a->find({1, 0});
  CHECK(weyl_act(*a, {1}, e10) == *a->find({0, 1}));

  for (CrystalPtr B : {CrystalPtr(arow(3, 2)), CrystalPtr(cspin(2, 3))}) {
    for (ElemId b = 0; b < B->size(); ++b)
      for (int i = 0; i < B->num_nodes(); ++i) {
        if (B->weight(b).at(i) == 0) CHECK(weyl_act(*B, {i}, b) == b);
        CHECK(weyl_act(*B, {i, i}, b) == b);  // involution
      }
  }
  CHECK_THROWS_AS(weyl_act(*a, {7}, e10), std::invalid_argument);
}

TEST_CASE("bounded extremality") {
  auto a = arow(3, 2);
  CHECK(is_extremal_bounded(*a, *a->find({2, 0, 0}), 8));
  CHECK_FALSE(is_extremal_bounded(*a, *a->find({1, 1, 0}), 8));
}

TEST_CASE("three-factor products left-nest and associate") {
  auto b1 = arow(2, 2), b2 = arow(2, 1), b3 = arow(2, 1);
  auto left = std::make_shared<TensorCrystal>(std::make_shared<TensorCrystal>(b1, b2), b3);
  auto right = std::make_shared<TensorCrystal>(
      CrystalPtr(b1), CrystalPtr(std::make_shared<TensorCrystal>(b2, b3)));
  CHECK(tensor_chain({b1, b2, b3})->size() == left->size());

  auto to_right = [&](ElemId x) {
    ElemId inner = static_cast<ElemId>(x / b3->size()), c3 = static_cast<ElemId>(x % b3->size());
    ElemId c1 = static_cast<ElemId>(inner / b2->size()),
           c2 = static_cast<ElemId>(inner % b2->size());
    auto rt = std::dynamic_pointer_cast<const TensorCrystal>(right->right());
    return right->encode(c1, rt->encode(c2, c3));
  };
  for (ElemId x = 0; x < left->size(); ++x) {
    for (int i = 0; i < left->num_nodes(); ++i) {
      CHECK(left->eps(x, i) == right->eps(to_right(x), i));
      CHECK(left->phi(x, i) == right->phi(to_right(x), i));
      auto dl = left->lower(x, i);
      auto dr = right->lower(to_right(x), i);
      CHECK(dl.has_value() == dr.has_value());
      if (dl && dr) CHECK(to_right(*dl) == *dr);
      auto ul = left->raise(x, i);
      auto ur = right->raise(to_right(x), i);
      CHECK(ul.has_value() == ur.has_value());
      if (ul && ur) CHECK(to_right(*ul) == *ur);
    }
  }
}

TEST_CASE("component weight differences decompose integrally over classical roots") {
  std::vector<CrystalPtr> crystals{arow(2, 3), arow(3, 2), arow(4, 2), cspin(2, 1),
                                   cspin(2, 3), cspin(3, 3)};
  crystals.push_back(std::make_shared<TensorCrystal>(arow(3, 2), arow(3, 1)));
  crystals.push_back(std::make_shared<TensorCrystal>(cspin(2, 3), cspin(2, 1)));
  for (const CrystalPtr& B : crystals) {
    auto comps = classical_components(*B);
    for (const auto& ci : comps)
      for (const auto& cj : comps) {
        std::vector<int> diff(ci.classical_wt.size());
        for (std::size_t t = 0; t < diff.size(); ++t)
          diff[t] = ci.classical_wt[t] - cj.classical_wt[t];
        auto dec = classical_root_decomposition_cl(B->cartan(), diff);
        REQUIRE(dec);
        for (const Rat& r : *dec) CHECK(r.is_integer());
      }
  }
}

TEST_CASE("axioms hold on products of two and three factors") {
  CHECK(check_axioms(TensorCrystal(arow(3, 2), arow(3, 1))).pass());
  CHECK(check_axioms(TensorCrystal(cspin(2, 3), cspin(2, 1))).pass());
  CHECK(check_axioms(*tensor_chain({arow(3, 2), arow(3, 1), arow(3, 1)})).pass());
  CHECK(check_axioms(*tensor_chain({cspin(2, 1), cspin(2, 1), cspin(2, 1)})).pass());
}

TEST_CASE("rank-2 decomposition diagnostic") {
  CHECK(check_regular_rank2(*arow(3, 2)).ok);
  CHECK(check_regular_rank2(*arow(4, 2)).ok);
  CHECK(check_regular_rank2(*cspin(2, 3)).ok);
  CHECK(check_regular_rank2(*cspin(3, 3)).ok);
  Rank2Report rep = check_regular_rank2(*arow(2, 2));  // the only pair is affine
  CHECK(rep.pairs_checked == 0);
  CHECK(rep.pairs_skipped == 1);
}
