#pragma once

#include <cstddef>
#include <string>

#include "lnq/geometry.hpp"

namespace lnq {

// Poset cache format: JSON with {version, p, k, modulus, n, vertices}. The
// vertex list is in canonical order, each vertex as {dim, rows} with rows the
// RREF entries as integers. Writing is deterministic, so re-running an
// enumeration yields a byte-identical file.
std::string poset_cache_json(const SubspacePoset& poset);
SubspacePoset poset_from_cache_json(const std::string& text,
                                    std::size_t max_vertices = SubspacePoset::kDefaultVertexCap);

void write_poset_cache(const std::string& path, const SubspacePoset& poset);
SubspacePoset load_poset_cache(const std::string& path,
                               std::size_t max_vertices = SubspacePoset::kDefaultVertexCap);

}  // namespace lnq
