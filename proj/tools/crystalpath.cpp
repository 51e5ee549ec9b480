// crystalpath: finite crystals of affine type A/C on the command line.
// Subcommands: graph (DOT/JSON export), verify (property suites with exit
// codes 0 pass / 1 verified failure / 2 usage error), census (TSV counts of
// highest-weight or restricted paths).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystal/cache.hpp"
#include "crystal/checks.hpp"
#include "crystal/graph_io.hpp"
#include "crystal/isomorphism.hpp"
#include "crystal/paths.hpp"

using namespace crystal;

namespace {

struct Config {
  std::string family = "A";
  int n = 0;
  int l = 0;
  int m = 0;
  int l3 = 0;
  std::string lambda_csv, mu_csv, nu_csv, restrict_csv;
  int depth = 4;
  std::string format = "pretty";
  std::string out;
  std::string cache_dir;
  std::string example;
  int anchor_value = 0;
  bool json = false;
  bool experimental = false;
  bool inject_fault = false;  // test hook
};

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  throw std::invalid_argument("unknown family '" + s + "' (expected A or C)");
}

Weight parse_weight(const CartanData& cd, const std::string& csv, const char* what) {
  if (csv.empty()) throw std::invalid_argument(std::string("missing weight --") + what);
  std::vector<int> coeffs;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
  if (static_cast<int>(coeffs.size()) != cd.num_nodes())
    throw std::invalid_argument(std::string("--") + what + " needs " +
                                std::to_string(cd.num_nodes()) + " coefficients");
  return Weight(coeffs);
}

CrystalPtr build_single(const Config& cfg) {
  if (parse_family(cfg.family) == Family::A) return std::make_shared<ARowCrystal>(cfg.n, cfg.l);
  return std::make_shared<CSpinCrystal>(cfg.n, cfg.l);
}

CrystalPtr build_crystal(const Config& cfg) {
  CrystalPtr b = build_single(cfg);
  if (cfg.m > 0) {
    CrystalPtr b2 = parse_family(cfg.family) == Family::A
                        ? CrystalPtr(std::make_shared<ARowCrystal>(cfg.n, cfg.m))
                        : CrystalPtr(std::make_shared<CSpinCrystal>(cfg.n, cfg.m));
    b = std::make_shared<TensorCrystal>(b, b2);
  }
  return b;
}

std::string cache_dir_of(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("CRYSTALPATH_CACHE_DIR")) return env;
  return "";
}

// test hook: redirect f_0 on element 0 into a self-loop
class FaultyCrystal final : public FiniteCrystal {
 public:
  explicit FaultyCrystal(CrystalPtr base) : FiniteCrystal(base->cartan()), base_(std::move(base)) {}
  std::size_t size() const override { return base_->size(); }
  std::optional<ElemId> raise(ElemId b, int i) const override { return base_->raise(b, i); }
  std::optional<ElemId> lower(ElemId b, int i) const override {
    if (b == 0 && i == 0) return ElemId{0};
    return base_->lower(b, i);
  }
  int eps(ElemId b, int i) const override { return base_->eps(b, i); }
  int phi(ElemId b, int i) const override { return base_->phi(b, i); }
  std::string label(ElemId b) const override { return base_->label(b); }
  nlohmann::json elem_to_json(ElemId b) const override { return base_->elem_to_json(b); }
  std::optional<ElemId> elem_from_json(const nlohmann::json& j) const override {
    return base_->elem_from_json(j);
  }

 private:
  CrystalPtr base_;
};

int cmd_graph(const Config& cfg) {
  CrystalPtr B = build_crystal(cfg);
  std::ostringstream buf;
  if (cfg.format == "dot" || cfg.format == "pretty") {
    emit_dot(*B, buf);
  } else if (cfg.format == "json") {
    buf << graph_to_json(*B).dump(2) << "\n";
  } else {
    throw std::invalid_argument("graph: --format must be dot or json");
  }
  if (cfg.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream os(cfg.out);
    if (!os) throw std::invalid_argument("cannot open output file " + cfg.out);
    os << buf.str();
  }
  return 0;
}

RefPtr build_ref(const Config& cfg, const CrystalPtr& B) {
  const CartanData& cd = B->cartan();
  if (parse_family(cfg.family) == Family::C) {
    auto spin = std::dynamic_pointer_cast<const CSpinCrystal>(B);
    if (!spin)
      throw std::invalid_argument("no reference-path constructor for C-type products");
    return std::make_shared<const ReferencePath>(
        make_ref_C(spin, parse_weight(cd, cfg.lambda_csv, "lambda")));
  }
  if (cfg.n == 2 && !cfg.experimental)
    throw std::invalid_argument(
        "path spaces for TypeA n=2 are experimental; pass --experimental");
  if (cfg.m > 0) {
    return std::make_shared<const ReferencePath>(
        make_ref_A(std::dynamic_pointer_cast<const TensorCrystal>(B),
                   parse_weight(cd, cfg.lambda_csv, "lambda"),
                   parse_weight(cd, cfg.mu_csv, "mu")));
  }
  return std::make_shared<const ReferencePath>(make_ref_A_single(
      std::dynamic_pointer_cast<const ARowCrystal>(B), parse_weight(cd, cfg.mu_csv, "mu")));
}

HTable square_table(const Config& cfg, const CrystalPtr& B) {
  auto square = std::make_shared<TensorCrystal>(B, B);
  CacheKey key{cfg.family, cfg.n, cfg.l, cfg.m, "square"};
  return cached_square_H(square, key, cache_dir_of(cfg));
}

int cmd_census(const Config& cfg, const std::string& kind) {
  CrystalPtr B = build_crystal(cfg);
  RefPtr ref = build_ref(cfg, B);
  HTable h = square_table(cfg, B);

  std::vector<Path> paths;
  if (kind == "hw") {
    paths = enumerate_hw_paths(ref, cfg.depth);
  } else if (kind == "restricted") {
    Weight lam = parse_weight(B->cartan(), cfg.restrict_csv, "restrict");
    paths = enumerate_restricted(lam, ref, cfg.depth);
  } else {
    throw std::invalid_argument("census: --kind must be hw or restricted");
  }

  std::map<std::tuple<int, Weight, std::int64_t>, std::size_t> rows;
  for (const Path& p : paths) {
    AffineWeight w = path_weight(p, h);
    rows[{p.depth(), w.cl, w.delta}] += 1;
  }
  std::ostringstream os;
  os << "depth\tweight\tdelta\tcount\n";
  for (const auto& [key, cnt] : rows) {
    os << std::get<0>(key) << '\t' << std::get<1>(key).str() << '\t' << std::get<2>(key)
       << '\t' << cnt << '\n';
  }
  std::cout << os.str();
  return 0;
}

void print_report(const Config& cfg, const BijectionReport& rep) {
  if (cfg.json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.summary() << "\n";
}

void gate_small_rank_paths(const Config& cfg) {
  if (cfg.n == 2 && !cfg.experimental)
    throw std::invalid_argument(
        "path spaces for TypeA n=2 are experimental; pass --experimental");
}

int verify_main_instance(const Config& cfg) {
  const int N = cfg.depth;
  if (cfg.example == "identity") {
    gate_small_rank_paths(cfg);
    auto B = std::make_shared<ARowCrystal>(cfg.n, cfg.l);
    const CartanData& cd = B->cartan();
    Weight mu = parse_weight(cd, cfg.mu_csv, "mu");
    auto ref = std::make_shared<const ReferencePath>(make_ref_A_single(B, mu));
    auto square = std::make_shared<TensorCrystal>(B, B);
    HTable h = closed_H_table(square);
    BijectionReport rep = verify_main(ref, h, ref, h, Weight::zero(cd.num_nodes()), N,
                                      [](const Path& p) { return p; });
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (cfg.example == "case1") {
    auto B = std::make_shared<CSpinCrystal>(cfg.n, cfg.l);
    auto Bdag = std::make_shared<CSpinCrystal>(cfg.n, 1);
    Weight lambda = parse_weight(B->cartan(), cfg.lambda_csv, "lambda");
    MapT t(B, Bdag);
    auto ref = std::make_shared<const ReferencePath>(make_ref_C(B, lambda));
    std::vector<ElemId> dag_period;
    for (ElemId b : ref->period()) dag_period.push_back(t.apply(b));
    auto ref_dag = std::make_shared<const ReferencePath>(Bdag, dag_period);
    HTable h = closed_H_table(std::make_shared<TensorCrystal>(B, B));
    HTable h_dag = closed_H_table(std::make_shared<TensorCrystal>(Bdag, Bdag));
    BijectionReport rep =
        verify_main(ref, h, ref_dag, h_dag, lambda, N, [&](const Path& p) {
          std::vector<ElemId> entries(static_cast<std::size_t>(p.depth()));
          for (int j = 1; j <= p.depth(); ++j) entries[j - 1] = t.apply(p.at(j));
          return Path(ref_dag, std::move(entries));
        });
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (cfg.example == "ex2") {
    gate_small_rank_paths(cfg);
    auto B1 = std::make_shared<ARowCrystal>(cfg.n, cfg.l);
    auto B2 = std::make_shared<ARowCrystal>(cfg.n, cfg.m);
    auto B = std::make_shared<TensorCrystal>(B1, B2);
    const CartanData& cd = B->cartan();
    Weight lambda = parse_weight(cd, cfg.lambda_csv, "lambda");
    Weight mu = parse_weight(cd, cfg.mu_csv, "mu");
    auto ref = std::make_shared<const ReferencePath>(make_ref_A(B, lambda, mu));
    auto ref_dag = std::make_shared<const ReferencePath>(make_ref_A_single(B2, mu));
    auto square = std::make_shared<TensorCrystal>(CrystalPtr(B), CrystalPtr(B));
    CacheKey key{cfg.family, cfg.n, cfg.l, cfg.m, "square"};
    HTable h = cached_square_H(square, key, cache_dir_of(cfg));
    HTable h_dag = closed_H_table(std::make_shared<TensorCrystal>(B2, B2));
    BijectionReport rep = verify_main(ref, h, ref_dag, h_dag, lambda, N,
                                      [&](const Path& p) { return map_dagger(p, ref_dag); });
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (cfg.example == "multi") {
    gate_small_rank_paths(cfg);
    const CartanData cd = CartanData::make(Family::A, cfg.n);
    std::vector<int> degrees{cfg.l, cfg.m};
    std::vector<Weight> lambdas{parse_weight(cd, cfg.lambda_csv, "lambda"),
                                parse_weight(cd, cfg.mu_csv, "mu")};
    if (cfg.l3 > 0) {
      degrees.push_back(cfg.l3);
      lambdas.push_back(parse_weight(cd, cfg.nu_csv, "nu"));
    }
    BijectionReport rep = verify_multi(cfg.n, degrees, lambdas, N);
    std::cout << "experimental multi-component instance (non-normative)\n";
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  throw std::invalid_argument("verify main: --example must be case1, ex2, identity or multi");
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  if (suite == "axioms") {
    CrystalPtr B = build_crystal(cfg);
    if (cfg.inject_fault) B = std::make_shared<FaultyCrystal>(B);
    AxiomReport rep = check_axioms(*B);
    for (const auto& v : rep.violations)
      std::cout << "violation: elem " << B->label(v.elem) << " node " << v.node << " ["
                << v.kind << "] " << v.detail << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << " axioms on " << rep.elements_checked
              << " elements\n";
    return rep.pass() ? 0 : 1;
  }
  if (suite == "simple") {
    // products are simple iff both factors are; the classical-decomposition
    // criterion itself applies to the base crystals
    bool simple;
    std::string witness;
    if (cfg.m > 0) {
      Config c1 = cfg, c2 = cfg;
      c1.m = 0;
      c2.l = cfg.m;
      c2.m = 0;
      SimplicityReport r1 = is_simple(*build_single(c1));
      SimplicityReport r2 = is_simple(*build_single(c2));
      simple = r1.simple && r2.simple;
      witness = r1.witness + r2.witness;
      if (simple) std::cout << "both factors simple; the product inherits it\n";
    } else {
      SimplicityReport rep = is_simple(*build_single(cfg));
      simple = rep.simple;
      witness = rep.witness;
    }
    Rank2Report d = check_regular_rank2(*build_crystal(cfg));
    std::cout << "rank-2 decomposition diagnostic: " << (d.ok ? "ok" : "MISMATCH") << " ("
              << d.pairs_checked << " pairs checked, " << d.pairs_skipped << " affine pairs skipped)\n";
    std::cout << (simple ? "PASS simple" : "FAIL not simple: " + witness) << "\n";
    return simple ? 0 : 1;
  }
  if (suite == "cfin") {
    CrystalPtr B = build_crystal(cfg);
    SurjectivityReport rep = check_cfin_condition3(*B);
    for (const Weight& w : rep.missing_eps) std::cout << "eps misses " << w.str() << "\n";
    for (const Weight& w : rep.missing_phi) std::cout << "phi misses " << w.str() << "\n";
    std::cout << (rep.ok ? "PASS" : "FAIL") << " minimal-element surjectivity\n";
    return rep.ok ? 0 : 1;
  }
  if (suite == "rmatrix" || suite == "energy" || suite == "hoftensor") {
    if (cfg.m <= 0 && suite != "energy")
      throw std::invalid_argument(suite + " needs --m (a two-factor product)");
    Config c1 = cfg;
    c1.m = 0;
    CrystalPtr b1 = build_single(c1);
    Config c2 = cfg;
    c2.l = cfg.m > 0 ? cfg.m : cfg.l;
    c2.m = 0;
    CrystalPtr b2 = build_single(c2);

    if (suite == "hoftensor") {
      DecompositionReport rep = decompose_H(b1, b2);
      for (const auto& f : rep.failures) std::cout << f << "\n";
      std::cout << (rep.ok && rep.alt_ok ? "PASS" : "FAIL")
                << " four-term split (constant " << rep.constant << ", alternative "
                << rep.alt_constant << ")\n";
      return rep.ok && rep.alt_ok ? 0 : 1;
    }

    auto t12 = std::make_shared<TensorCrystal>(b1, b2);
    auto t21 = std::make_shared<TensorCrystal>(b2, b1);
    if (suite == "rmatrix") {
      CacheKey key{cfg.family, cfg.n, cfg.l, cfg.m, "pair"};
      RMap r12 = cached_R(t12, t21, key, cache_dir_of(cfg));
      RMap r21 = compute_R(t21, t12);
      bool ok = rmap_valid(r12) && rmap_valid(r21);
      for (ElemId b = 0; b < t12->size() && ok; ++b)
        ok = r21.forward[r12.forward[b]] == b;
      if (ok && cfg.family == "A" && cfg.l >= cfg.m) {
        auto a1 = std::dynamic_pointer_cast<const ARowCrystal>(b1);
        auto a2 = std::dynamic_pointer_cast<const ARowCrystal>(b2);
        const int n = cfg.n;
        for (ElemId x : minimal_of_tensor(*t12)) {
          auto [la, ra] = t12->decode(x);
          const auto& a = a1->row(la);
          const auto& bb = a2->row(ra);
          std::vector<int> imgl(n), imgr(n);
          for (int i = 0; i < n; ++i) {
            imgl[i] = bb[(i + 1) % n];
            imgr[i] = a[i] - bb[(i + 1) % n] + bb[i];
          }
          auto el = a2->find(imgl);
          auto er = a1->find(imgr);
          if (!el || !er || r12.forward[x] != t21->encode(*el, *er)) {
            ok = false;
            std::cout << "minimal-element rule mismatch at " << t12->label(x) << "\n";
          }
        }
      }
      std::cout << (ok ? "PASS" : "FAIL") << " R-matrix on " << t12->size() << " elements\n";
      return ok ? 0 : 1;
    }

    // energy: BFS table equals the closed form once anchored to it
    if (cfg.family == "C" && cfg.m > 0 && cfg.m != cfg.l)
      throw std::invalid_argument("energy: C-type closed form needs a homogeneous square");
    TensorPtr prod = cfg.m > 0 ? t12 : std::make_shared<TensorCrystal>(b1, b1);
    RMap r = prod->left() == prod->right() ? identity_rmap(prod)
                                           : compute_R(prod, std::make_shared<TensorCrystal>(
                                                                 prod->right(), prod->left()));
    HTable closed = closed_H_table(prod);
    ElemId anchor = canonical_anchor(*prod);
    HTable bfs = compute_H_bfs(prod, r, anchor, closed.at(anchor) + cfg.anchor_value);
    bool ok = true;
    for (ElemId b = 0; b < prod->size() && ok; ++b)
      ok = bfs.at(b) - closed.at(b) == cfg.anchor_value;
    std::cout << (ok ? "PASS" : "FAIL") << " energy recursion vs closed form on "
              << prod->size() << " elements (offset " << cfg.anchor_value << ")\n";
    return ok ? 0 : 1;
  }
  if (suite == "case1") {
    Weight lambda = parse_weight(CartanData::make(Family::C, cfg.n), cfg.lambda_csv, "lambda");
    BijectionReport rep = verify_case1(cfg.n, cfg.l, lambda, cfg.depth);
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (suite == "ex2") {
    gate_small_rank_paths(cfg);
    const CartanData cd = CartanData::make(Family::A, cfg.n);
    BijectionReport rep = verify_ex2(cfg.n, cfg.l, cfg.m, parse_weight(cd, cfg.lambda_csv, "lambda"),
                                     parse_weight(cd, cfg.mu_csv, "mu"), cfg.depth);
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (suite == "kmn2") {
    gate_small_rank_paths(cfg);
    const CartanData cd = CartanData::make(Family::A, cfg.n);
    BijectionReport rep = verify_kmn2(cfg.n, parse_weight(cd, cfg.mu_csv, "mu"), cfg.depth);
    print_report(cfg, rep);
    return rep.pass ? 0 : 1;
  }
  if (suite == "main") return verify_main_instance(cfg);
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite crystals of affine types A and C: graphs, R-matrices, energy functions, path spaces"};
  app.require_subcommand(1);

  Config cfg;
  std::string suite, kind = "hw";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "A or C");
    sub->add_option("--n", cfg.n, "rank parameter")->required();
    sub->add_option("--l", cfg.l, "degree of the (first) factor");
    sub->add_option("--m", cfg.m, "degree of the second factor (0 = single)");
    sub->add_option("--lambda", cfg.lambda_csv, "weight coefficients, comma separated");
    sub->add_option("--mu", cfg.mu_csv, "weight coefficients, comma separated");
    sub->add_option("--depth", cfg.depth, "truncation depth N");
    sub->add_option("--cache-dir", cfg.cache_dir, "table cache directory (or CRYSTALPATH_CACHE_DIR)");
    sub->add_flag("--json", cfg.json, "JSON report instead of text");
    sub->add_flag("--experimental", cfg.experimental, "allow TypeA n=2 path spaces");
  };

  CLI::App* graph = app.add_subcommand("graph", "export the crystal graph");
  add_common(graph);
  graph->add_option("--format", cfg.format, "dot or json");
  graph->add_option("--out", cfg.out, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "axioms|simple|cfin|rmatrix|energy|hoftensor|case1|ex2|main|kmn2")
      ->required();
  add_common(verify);
  verify->add_option("--example", cfg.example,
                     "main suite instance: case1|ex2|identity|multi");
  verify->add_option("--l3", cfg.l3, "third factor degree (main --example multi)");
  verify->add_option("--nu", cfg.nu_csv, "third weight (main --example multi)");
  verify->add_option("--anchor-value", cfg.anchor_value, "energy suite anchor offset");
  verify->add_flag("--inject-fault", cfg.inject_fault, "test hook: corrupt one arrow")
      ->group("");

  CLI::App* census = app.add_subcommand("census", "count paths by depth/weight/delta");
  add_common(census);
  census->add_option("--kind", kind, "hw or restricted");
  census->add_option("--restrict", cfg.restrict_csv, "restriction weight (kind=restricted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (graph->parsed()) return cmd_graph(cfg);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (census->parsed()) return cmd_census(cfg, kind);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
