#include "lnq/cache.hpp"

#include <stdexcept>

#include "json.hpp"
#include "lnq/report.hpp"

namespace lnq {

namespace {
using ordered_json = nlohmann::ordered_json;
constexpr int kCacheVersion = 1;
}  // namespace

std::string poset_cache_json(const SubspacePoset& poset) {
  ordered_json j;
  j["version"] = kCacheVersion;
  j["p"] = poset.field().p();
  j["k"] = poset.field().k();
  j["modulus"] = poset.field().modulus();
  j["n"] = poset.n();
  j["vertices"] = ordered_json::array();
  for (const Subspace& s : poset.vertices()) {
    ordered_json jv;
    jv["dim"] = s.dim;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < s.dim; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < s.ambient; ++c) row.push_back(s.at(r, c));
      rows.push_back(std::move(row));
    }
    jv["rows"] = std::move(rows);
    j["vertices"].push_back(std::move(jv));
  }
  return j.dump(1) + "\n";
}

SubspacePoset poset_from_cache_json(const std::string& text, std::size_t max_vertices) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("poset cache: invalid JSON: ") + e.what());
  }
  if (!j.contains("version") || j["version"].get<int>() != kCacheVersion)
    throw std::invalid_argument("poset cache: unsupported version");
  const long p = j.at("p").get<long>();
  const int k = j.at("k").get<int>();
  const int n = j.at("n").get<int>();
  FieldCtx field(p, k);
  if (j.at("modulus").get<std::vector<std::uint32_t>>() != field.modulus())
    throw std::invalid_argument("poset cache: modulus differs from the canonical modulus");

  std::vector<Subspace> vertices;
  for (const auto& jv : j.at("vertices")) {
    Subspace s;
    s.dim = jv.at("dim").get<int>();
    s.ambient = n;
    for (const auto& row : jv.at("rows")) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("poset cache: row width differs from n");
      for (const auto& value : row) s.rows.push_back(value.get<std::uint32_t>());
    }
    if (s.rows.size() != static_cast<std::size_t>(s.dim) * n)
      throw std::invalid_argument("poset cache: row count differs from dim");
    vertices.push_back(std::move(s));
  }
  return SubspacePoset(n, std::move(field), std::move(vertices), max_vertices);
}

void write_poset_cache(const std::string& path, const SubspacePoset& poset) {
  write_text_file(path, poset_cache_json(poset));
}

SubspacePoset load_poset_cache(const std::string& path, std::size_t max_vertices) {
  return poset_from_cache_json(read_text_file(path), max_vertices);
}

}  // namespace lnq
