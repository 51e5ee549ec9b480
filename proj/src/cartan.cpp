#include "crystal/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace crystal {

std::string family_name(Family f) { return f == Family::A ? "A" : "C"; }

namespace {

std::vector<std::vector<int>> cartan_matrix_a(int nodes) {
  // Cyclic A_{n-1}^(1); the n=2 case degenerates to off-diagonal -2.
  std::vector<std::vector<int>> m(nodes, std::vector<int>(nodes, 0));
  for (int i = 0; i < nodes; ++i) m[i][i] = 2;
  if (nodes == 2) {
    m[0][1] = m[1][0] = -2;
    return m;
  }
  for (int i = 0; i < nodes; ++i) {
    m[i][(i + 1) % nodes] -= 1;
    m[i][(i + nodes - 1) % nodes] -= 1;
  }
  return m;
}

std::vector<std::vector<int>> cartan_matrix_c(int nodes) {
  // 0 => 1 - 2 - ... - (n-1) <= n; ends are the long roots.
  std::vector<std::vector<int>> m(nodes, std::vector<int>(nodes, 0));
  for (int i = 0; i < nodes; ++i) m[i][i] = 2;
  if (nodes == 2) {  // C_1^(1)
    m[0][1] = m[1][0] = -2;
    return m;
  }
  for (int i = 0; i + 1 < nodes; ++i) {
    m[i][i + 1] = -1;
    m[i + 1][i] = -1;
  }
  m[1][0] = -2;
  m[nodes - 2][nodes - 1] = -2;
  return m;
}

}  // namespace

CartanData CartanData::make(Family f, int n) {
  if (f == Family::A && n < 2) throw std::invalid_argument("TypeA requires n >= 2");
  if (f == Family::C && n < 1) throw std::invalid_argument("TypeC requires n >= 1");

  CartanData cd;
  cd.family = f;
  cd.n = n;
  const int nodes = (f == Family::A) ? n : n + 1;
  cd.comarks.assign(nodes, 1);
  if (f == Family::A) {
    cd.marks.assign(nodes, 1);
    cd.cartan = cartan_matrix_a(nodes);
  } else {
    cd.marks.assign(nodes, 2);
    cd.marks.front() = 1;
    cd.marks.back() = 1;
    cd.cartan = cartan_matrix_c(nodes);
  }

  cd.cartan_cl.assign(nodes - 1, std::vector<int>(nodes - 1, 0));
  for (int i = 1; i < nodes; ++i)
    for (int j = 1; j < nodes; ++j) cd.cartan_cl[i - 1][j - 1] = cd.cartan[i][j];

  if (cd.marks[0] != 1) throw std::logic_error("CartanData: marks[0] != 1");
  for (int i = 0; i < nodes; ++i) {
    int s = 0;
    for (int j = 0; j < nodes; ++j) s += cd.cartan[i][j] * cd.marks[j];
    if (s != 0) throw std::logic_error("CartanData: null root identity fails");
  }
  return cd;
}

Weight Weight::fundamental(int nodes, int i) {
  Weight w = zero(nodes);
  w.c.at(i) = 1;
  return w;
}

bool Weight::dominant() const {
  for (int x : c)
    if (x < 0) return false;
  return true;
}

bool Weight::all_ge(const Weight& o) const {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < o.c[i]) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

int level(const CartanData& cd, const Weight& w) {
  if (w.nodes() != cd.num_nodes()) throw std::invalid_argument("weight/cartan mismatch");
  int l = 0;
  for (int i = 0; i < cd.num_nodes(); ++i) l += cd.comarks[i] * w.at(i);
  return l;
}

namespace {

void compositions_rec(int nodes, int pos, int rest, std::vector<int>& cur,
                      std::vector<Weight>& out) {
  if (pos == nodes - 1) {
    cur[pos] = rest;
    out.push_back(Weight(cur));
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    cur[pos] = v;
    compositions_rec(nodes, pos + 1, rest - v, cur, out);
  }
}

}  // namespace

std::vector<Weight> dominant_weights_of_level(const CartanData& cd, int l) {
  if (l < 0) throw std::invalid_argument("negative level");
  // Comarks are all 1 for both families, so level = coefficient sum.
  std::vector<Weight> out;
  std::vector<int> cur(cd.num_nodes(), 0);
  compositions_rec(cd.num_nodes(), 0, l, cur, out);
  return out;
}

std::optional<std::vector<Rat>> classical_root_decomposition_cl(
    const CartanData& cd, const std::vector<int>& cl_coeffs) {
  const int m = cd.num_nodes() - 1;
  if (static_cast<int>(cl_coeffs.size()) != m)
    throw std::invalid_argument("classical coefficient size mismatch");

  // Solve cartan_cl * c = cl_coeffs by Gaussian elimination over Rat.
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = Rat(cd.cartan_cl[i][j]);
    aug[i][m] = Rat(cl_coeffs[i]);
  }
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (!aug[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;  // cannot happen for the matrices in scope
    std::swap(aug[col], aug[pivot]);
    Rat p = aug[col][col];
    for (int j = col; j <= m; ++j) aug[col][j] = aug[col][j] / p;
    for (int r = 0; r < m; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Rat f = aug[r][col];
      for (int j = col; j <= m; ++j) aug[r][j] = aug[r][j] - f * aug[col][j];
    }
  }
  std::vector<Rat> sol(m);
  for (int i = 0; i < m; ++i) sol[i] = aug[i][m];
  return sol;
}

std::optional<std::vector<Rat>> classical_root_decomposition(
    const CartanData& cd, const Weight& w) {
  if (w.nodes() != cd.num_nodes()) throw std::invalid_argument("weight/cartan mismatch");
  std::vector<int> cl(w.c.begin() + 1, w.c.end());
  return classical_root_decomposition_cl(cd, cl);
}

}  // namespace crystal
