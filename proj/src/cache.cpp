#include "crystal/cache.hpp"

#include <fstream>

namespace crystal {

namespace fs = std::filesystem;

nlohmann::json CacheKey::to_json() const {
  return nlohmann::json{{"family", family}, {"n", n}, {"l", l}, {"m", m}, {"kind", kind}};
}

std::string CacheKey::slug() const {
  std::string s = family + "_n" + std::to_string(n) + "_l" + std::to_string(l);
  if (m > 0) s += "_m" + std::to_string(m);
  s += "_" + kind;
  return s;
}

bool CacheKey::matches(const nlohmann::json& j) const {
  return j.is_object() && j == to_json();
}

namespace {

void atomic_write(const fs::path& file, const nlohmann::json& j) {
  fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    os << j.dump(2) << "\n";
  }
  fs::rename(tmp, file);
}

}  // namespace

HTable cached_square_H(TensorPtr square, const CacheKey& key, const fs::path& cache_dir) {
  const ElemId anchor = canonical_anchor(*square);
  if (!cache_dir.empty()) {
    fs::path file = cache_dir / ("H_" + key.slug() + ".json");
    if (fs::exists(file)) {
      try {
        nlohmann::json j;
        std::ifstream(file) >> j;
        if (key.matches(j.at("key")) &&
            square->elem_from_json(j.at("anchor").at("elem")) == anchor &&
            j.at("anchor").at("value").get<int>() == 0) {
          HTable h;
          h.product = square;
          h.anchor = anchor;
          h.value.assign(square->size(), 0);
          std::vector<bool> seen(square->size(), false);
          for (const auto& pair : j.at("values")) {
            auto id = square->elem_from_json(pair.at(0));
            if (!id) throw std::runtime_error("unknown element");
            h.value[*id] = pair.at(1).get<int>();
            seen[*id] = true;
          }
          for (bool s : seen)
            if (!s) throw std::runtime_error("incomplete table");
          // The recursion plus the anchor pins the table uniquely on a
          // connected product, so a consistent load equals the computed one.
          if (!h_table_consistent(h, identity_rmap(square), 0))
            throw std::runtime_error("stale table");
          return h;
        }
      } catch (const std::exception&) {
        // fall through to recompute
      }
    }
  }
  HTable h = compute_H_bfs(square, identity_rmap(square), anchor, 0);
  if (!cache_dir.empty()) {
    nlohmann::json values = nlohmann::json::array();
    for (ElemId b = 0; b < square->size(); ++b)
      values.push_back({square->elem_to_json(b), h.value[b]});
    nlohmann::json j{{"key", key.to_json()},
                     {"anchor", {{"elem", square->elem_to_json(anchor)}, {"value", 0}}},
                     {"values", values}};
    atomic_write(cache_dir / ("H_" + key.slug() + ".json"), j);
  }
  return h;
}

RMap cached_R(TensorPtr t12, TensorPtr t21, const CacheKey& key, const fs::path& cache_dir) {
  if (!cache_dir.empty()) {
    fs::path file = cache_dir / ("R_" + key.slug() + ".json");
    if (fs::exists(file)) {
      try {
        nlohmann::json j;
        std::ifstream(file) >> j;
        if (key.matches(j.at("key"))) {
          RMap r;
          r.domain = t12;
          r.codomain = t21;
          r.forward.assign(t12->size(), 0);
          r.inverse.assign(t21->size(), 0);
          std::vector<bool> seen(t12->size(), false);
          for (const auto& pair : j.at("pairs")) {
            auto dom = t12->elem_from_json(pair.at(0));
            auto img = t21->elem_from_json(pair.at(1));
            if (!dom || !img) throw std::runtime_error("unknown element");
            r.forward[*dom] = *img;
            r.inverse[*img] = *dom;
            seen[*dom] = true;
          }
          for (bool s : seen)
            if (!s) throw std::runtime_error("incomplete map");
          // equivariant bijections on a connected product are unique
          if (!rmap_valid(r)) throw std::runtime_error("stale map");
          return r;
        }
      } catch (const std::exception&) {
      }
    }
  }
  RMap r = compute_R(t12, t21);
  if (!cache_dir.empty()) {
    nlohmann::json pairs = nlohmann::json::array();
    for (ElemId b = 0; b < t12->size(); ++b)
      pairs.push_back({t12->elem_to_json(b), t21->elem_to_json(r.forward[b])});
    nlohmann::json j{{"key", key.to_json()}, {"pairs", pairs}};
    atomic_write(cache_dir / ("R_" + key.slug() + ".json"), j);
  }
  return r;
}

}  // namespace crystal
