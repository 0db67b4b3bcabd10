#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "lnq/gfq.hpp"

namespace lnq {

// A subspace of GF(q)^N, held as its unique reduced row echelon form: unit
// pivots, zeros above and below each pivot, pivot columns strictly
// increasing. The zero subspace has an empty row list.
struct Subspace {
  int dim = 0;
  int ambient = 0;
  std::vector<std::uint32_t> rows;  // dim * ambient FieldElt values, row-major

  std::uint32_t at(int r, int c) const { return rows[static_cast<std::size_t>(r) * ambient + c]; }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Canonical vertex comparator: ascending dimension, then lexicographic on the
// flattened RREF encoding. RREF uniqueness makes ties impossible.
bool canonical_less(const Subspace& a, const Subspace& b);

// x <= y in the subspace order, i.e. x is contained in y. Tests each basis
// row of x for membership in the row space of y by elimination.
bool subspace_leq(const Subspace& x, const Subspace& y, const FieldCtx& field);

// z covers y: y <= z and dim z = dim y + 1.
bool subspace_covers(const Subspace& z, const Subspace& y, const FieldCtx& field);

// (dim(x meet y), dim(x join y)): the join dimension is the rank of the
// stacked bases; the meet dimension comes from the modular identity.
std::pair<int, int> meet_join_dims(const Subspace& x, const Subspace& y,
                                   const FieldCtx& field);

// The vertex set of L_N(q) in canonical order, with the dimension grading
// and Hasse-diagram cover lists. Immutable after construction; the order
// closure used by the split machinery is built lazily on first use.
class SubspacePoset {
 public:
  static constexpr std::size_t kDefaultVertexCap = 100000;

  SubspacePoset(int n, FieldCtx field, std::size_t max_vertices = kDefaultVertexCap);
  // Rebuild from an externally supplied vertex list (cache load); the list
  // is validated: RREF form, canonical order, per-dimension counts.
  SubspacePoset(int n, FieldCtx field, std::vector<Subspace> vertices,
                std::size_t max_vertices = kDefaultVertexCap);

  int n() const { return n_; }
  const FieldCtx& field() const { return field_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  const Subspace& vertex(std::size_t i) const { return vertices_[i]; }
  int dim_of(std::size_t i) const { return vertices_[i].dim; }

  // Index of a subspace in canonical order; throws if absent.
  std::size_t index_of(const Subspace& s) const;
  // Half-open index range [first, last) of the dimension-d block.
  std::pair<std::size_t, std::size_t> dim_block(int d) const;
  std::size_t dim_count(int d) const;

  // Vertices covering / covered by vertex i (Hasse edges), ascending order.
  const std::vector<std::uint32_t>& covers_up(std::size_t i) const { return covers_up_[i]; }
  const std::vector<std::uint32_t>& covers_down(std::size_t i) const { return covers_down_[i]; }

  // Full order relation, ascending id lists including i itself.
  const std::vector<std::uint32_t>& up_set(std::size_t i) const;
  const std::vector<std::uint32_t>& down_set(std::size_t i) const;
  bool leq(std::size_t a, std::size_t b) const;

 private:
  // Heap-held so the poset stays movable despite the once-flag.
  struct Closure {
    std::once_flag once;
    std::vector<std::vector<std::uint32_t>> up_sets;
    std::vector<std::vector<std::uint32_t>> down_sets;
  };

  void build_edges();
  void ensure_closure() const;

  int n_;
  FieldCtx field_;
  std::vector<Subspace> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> dim_blocks_;
  std::vector<std::vector<std::uint32_t>> covers_up_;
  std::vector<std::vector<std::uint32_t>> covers_down_;
  std::unique_ptr<Closure> closure_ = std::make_unique<Closure>();
};

}  // namespace lnq
