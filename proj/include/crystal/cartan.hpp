#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

// Affine families in scope: A = A_{n-1}^(1) with nodes {0..n-1} (n >= 2),
// C = C_n^(1) with nodes {0..n} (n >= 1).
enum class Family { A, C };

std::string family_name(Family f);

// Affine Cartan data: marks a_i, comarks a_i^vee, the affine Cartan matrix
// <h_i, alpha_j>, and its classical submatrix (node 0 removed). Hard-coded
// per family; immutable after construction.
struct CartanData {
  Family family;
  int n;  // rank parameter, not the node count
  std::vector<int> marks;
  std::vector<int> comarks;
  std::vector<std::vector<int>> cartan;     // affine, nodes x nodes
  std::vector<std::vector<int>> cartan_cl;  // classical, (nodes-1)^2

  static CartanData make(Family f, int n);

  int num_nodes() const { return static_cast<int>(marks.size()); }

  bool operator==(const CartanData& o) const {
    return family == o.family && n == o.n;
  }
};

// Element of P_cl stored by Lambda_i coefficients; coeff[i] = <h_i, w>.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coeffs) : c(std::move(coeffs)) {}

  static Weight zero(int nodes) { return Weight(std::vector<int>(nodes, 0)); }
  static Weight fundamental(int nodes, int i);

  int nodes() const { return static_cast<int>(c.size()); }
  int at(int i) const { return c.at(i); }
  bool dominant() const;
  bool all_ge(const Weight& o) const;  // componentwise >=

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  std::string str() const;  // "1,0,0"
};

// Element of P: classical part plus delta-degree.
struct AffineWeight {
  Weight cl;
  std::int64_t delta = 0;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.cl == b.cl && a.delta == b.delta;
  }
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (a.cl != b.cl) return a.cl < b.cl;
    return a.delta < b.delta;
  }
};

// <w, c> with c the canonical central element: sum of comark_i * coeff_i.
int level(const CartanData& cd, const Weight& w);

// All nonnegative weights of the given level, in lexicographic coefficient
// order. With all comarks 1 these are the compositions of l into |I| parts.
std::vector<Weight> dominant_weights_of_level(const CartanData& cd, int l);

// Coefficients c_i (i != 0) with w = sum_{i!=0} c_i alpha_i in the classical
// weight space (node-0 coordinate dropped). Solves through the classical
// Cartan matrix; nullopt only if the system is inconsistent, which cannot
// happen for the nonsingular classical matrices in scope.
std::optional<std::vector<Rat>> classical_root_decomposition(
    const CartanData& cd, const Weight& w);

// Same, but taking the already-restricted coefficients over I \ {0}.
std::optional<std::vector<Rat>> classical_root_decomposition_cl(
    const CartanData& cd, const std::vector<int>& cl_coeffs);

}  // namespace crystal
