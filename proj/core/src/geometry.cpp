#include "lnq/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lnq/qscalar.hpp"
#include "lnq/rational.hpp"

namespace lnq {

namespace {

using Row = std::vector<std::uint32_t>;

// Reduce v against the RREF rows of y; returns true when v lies in the row
// space (reduces to zero).
bool reduce_to_zero(Row v, const Subspace& y, const FieldCtx& field) {
  for (int r = 0; r < y.dim; ++r) {
    int pivot = -1;
    for (int c = 0; c < y.ambient; ++c) {
      if (y.at(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    const FieldElt coef{v[pivot]};
    if (coef.v == 0) continue;
    for (int c = 0; c < y.ambient; ++c) {
      const FieldElt prod = field.mul(coef, {y.at(r, c)});
      v[c] = field.sub({v[c]}, prod).v;
    }
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t t) { return t == 0; });
}

int rank_gf(std::vector<Row> rows, const FieldCtx& field, int width) {
  int rank = 0;
  for (int col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldElt inv = field.inv({rows[rank][col]});
    for (int c = col; c < width; ++c)
      rows[rank][c] = field.mul({rows[rank][c]}, inv).v;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const FieldElt coef{rows[r][col]};
      for (int c = col; c < width; ++c) {
        const FieldElt prod = field.mul(coef, {rows[rank][c]});
        rows[r][c] = field.sub({rows[r][c]}, prod).v;
      }
    }
    ++rank;
  }
  return rank;
}

bool is_valid_rref(const Subspace& s, const FieldCtx& field) {
  if (s.dim < 0 || s.dim > s.ambient) return false;
  if (s.rows.size() != static_cast<std::size_t>(s.dim) * s.ambient) return false;
  int prev_pivot = -1;
  std::vector<int> pivots;
  for (int r = 0; r < s.dim; ++r) {
    int pivot = -1;
    for (int c = 0; c < s.ambient; ++c) {
      if (s.at(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot <= prev_pivot) return false;  // also rejects all-zero rows
    if (s.at(r, pivot) != 1) return false;
    pivots.push_back(pivot);
    prev_pivot = pivot;
  }
  for (int r = 0; r < s.dim; ++r)
    for (int r2 = 0; r2 < s.dim; ++r2)
      if (r2 != r && s.at(r2, pivots[r]) != 0) return false;
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    if (s.rows[i] >= static_cast<std::uint64_t>(field.q())) return false;
  return true;
}

}  // namespace

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.rows < b.rows;
}

bool subspace_leq(const Subspace& x, const Subspace& y, const FieldCtx& field) {
  if (x.ambient != y.ambient)
    throw std::invalid_argument("subspace_leq: ambient dimensions differ");
  if (x.dim > y.dim) return false;
  for (int r = 0; r < x.dim; ++r) {
    Row v(x.rows.begin() + static_cast<std::size_t>(r) * x.ambient,
          x.rows.begin() + static_cast<std::size_t>(r + 1) * x.ambient);
    if (!reduce_to_zero(std::move(v), y, field)) return false;
  }
  return true;
}

bool subspace_covers(const Subspace& z, const Subspace& y, const FieldCtx& field) {
  return z.dim == y.dim + 1 && subspace_leq(y, z, field);
}

std::pair<int, int> meet_join_dims(const Subspace& x, const Subspace& y,
                                   const FieldCtx& field) {
  if (x.ambient != y.ambient)
    throw std::invalid_argument("meet_join_dims: ambient dimensions differ");
  std::vector<Row> stacked;
  stacked.reserve(x.dim + y.dim);
  for (int r = 0; r < x.dim; ++r)
    stacked.emplace_back(x.rows.begin() + static_cast<std::size_t>(r) * x.ambient,
                         x.rows.begin() + static_cast<std::size_t>(r + 1) * x.ambient);
  for (int r = 0; r < y.dim; ++r)
    stacked.emplace_back(y.rows.begin() + static_cast<std::size_t>(r) * y.ambient,
                         y.rows.begin() + static_cast<std::size_t>(r + 1) * y.ambient);
  const int join = rank_gf(std::move(stacked), field, x.ambient);
  const int meet = x.dim + y.dim - join;
  return {meet, join};
}

SubspacePoset::SubspacePoset(int n, FieldCtx field, std::size_t max_vertices)
    : n_(n), field_(std::move(field)) {
  if (n_ < 1) throw std::invalid_argument("SubspacePoset: n must be >= 1");

  const Rat q(field_.q());
  Rat predicted(0);
  for (int i = 0; i <= n_; ++i) predicted += q_binomial(n_, i, q);
  if (predicted > Rat(static_cast<unsigned long>(max_vertices)))
    throw std::invalid_argument("SubspacePoset: vertex count " + rat_str(predicted) +
                                " exceeds the cap of " + std::to_string(max_vertices));

  // Enumerate every RREF matrix by pivot pattern: choose pivot columns, then
  // fill the free entries (right of the pivot, outside pivot columns) over
  // GF(q). Each subspace arises exactly once.
  const long qv = field_.q();
  for (int m = 0; m <= n_; ++m) {
    std::vector<int> cols(m);
    for (int i = 0; i < m; ++i) cols[i] = i;
    while (true) {
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_pivot(n_, false);
      for (int c : cols) is_pivot[c] = true;
      for (int r = 0; r < m; ++r)
        for (int c = cols[r] + 1; c < n_; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(r, c);

      std::vector<std::uint32_t> assignment(free_pos.size(), 0);
      while (true) {
        Subspace s;
        s.dim = m;
        s.ambient = n_;
        s.rows.assign(static_cast<std::size_t>(m) * n_, 0);
        for (int r = 0; r < m; ++r) s.rows[static_cast<std::size_t>(r) * n_ + cols[r]] = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          s.rows[static_cast<std::size_t>(free_pos[t].first) * n_ + free_pos[t].second] =
              assignment[t];
        vertices_.push_back(std::move(s));

        std::size_t carry = 0;
        while (carry < assignment.size()) {
          if (++assignment[carry] < static_cast<std::uint64_t>(qv)) break;
          assignment[carry] = 0;
          ++carry;
        }
        if (carry == assignment.size()) break;
      }

      // next pivot-column combination
      int i = m - 1;
      while (i >= 0 && cols[i] == n_ - m + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
    }
  }

  std::sort(vertices_.begin(), vertices_.end(), canonical_less);
  build_edges();
}

SubspacePoset::SubspacePoset(int n, FieldCtx field, std::vector<Subspace> vertices,
                             std::size_t max_vertices)
    : n_(n), field_(std::move(field)), vertices_(std::move(vertices)) {
  if (n_ < 1) throw std::invalid_argument("SubspacePoset: n must be >= 1");
  if (vertices_.size() > max_vertices)
    throw std::invalid_argument("SubspacePoset: vertex list exceeds the cap");
  for (const Subspace& s : vertices_) {
    if (s.ambient != n_ || !is_valid_rref(s, field_))
      throw std::invalid_argument("SubspacePoset: vertex list contains a non-RREF entry");
  }
  if (!std::is_sorted(vertices_.begin(), vertices_.end(), canonical_less))
    throw std::invalid_argument("SubspacePoset: vertex list is not in canonical order");
  build_edges();
}

void SubspacePoset::build_edges() {
  dim_blocks_.assign(n_ + 1, {0, 0});
  std::size_t pos = 0;
  for (int d = 0; d <= n_; ++d) {
    const std::size_t first = pos;
    while (pos < vertices_.size() && vertices_[pos].dim == d) ++pos;
    dim_blocks_[d] = {first, pos};
    const Rat expected = q_binomial(n_, d, Rat(field_.q()));
    internal_check(Rat(static_cast<unsigned long>(pos - first)) == expected,
                   "per-dimension vertex count must equal the q-binomial");
  }
  internal_check(pos == vertices_.size(), "vertices must be graded by dimension");

  covers_up_.assign(vertices_.size(), {});
  covers_down_.assign(vertices_.size(), {});
  for (int d = 0; d + 1 <= n_; ++d) {
    const auto [lo_first, lo_last] = dim_blocks_[d];
    const auto [hi_first, hi_last] = dim_blocks_[d + 1];
    for (std::size_t y = lo_first; y < lo_last; ++y)
      for (std::size_t z = hi_first; z < hi_last; ++z)
        if (subspace_leq(vertices_[y], vertices_[z], field_)) {
          covers_up_[y].push_back(static_cast<std::uint32_t>(z));
          covers_down_[z].push_back(static_cast<std::uint32_t>(y));
        }
  }
}

std::size_t SubspacePoset::index_of(const Subspace& s) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s, canonical_less);
  if (it == vertices_.end() || !(*it == s))
    throw std::invalid_argument("SubspacePoset::index_of: subspace not in poset");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::pair<std::size_t, std::size_t> SubspacePoset::dim_block(int d) const {
  if (d < 0 || d > n_) throw std::out_of_range("dim_block: dimension out of range");
  return dim_blocks_[d];
}

std::size_t SubspacePoset::dim_count(int d) const {
  const auto [first, last] = dim_block(d);
  return last - first;
}

void SubspacePoset::ensure_closure() const {
  std::call_once(closure_->once, [this] {
    auto& up_sets = closure_->up_sets;
    auto& down_sets = closure_->down_sets;
    up_sets.assign(vertices_.size(), {});
    down_sets.assign(vertices_.size(), {});
    // Walk dimensions top-down; up_set(v) = {v} union up_sets of covers.
    std::vector<char> mark(vertices_.size(), 0);
    for (std::size_t i = vertices_.size(); i-- > 0;) {
      std::vector<std::uint32_t> acc{static_cast<std::uint32_t>(i)};
      mark[i] = 1;
      for (const std::uint32_t up : covers_up_[i])
        for (const std::uint32_t z : up_sets[up])
          if (!mark[z]) {
            mark[z] = 1;
            acc.push_back(z);
          }
      std::sort(acc.begin(), acc.end());
      for (const std::uint32_t z : acc) mark[z] = 0;
      up_sets[i] = std::move(acc);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (const std::uint32_t z : up_sets[i])
        down_sets[z].push_back(static_cast<std::uint32_t>(i));
    // down_sets entries come out sorted because i runs in ascending order
  });
}

const std::vector<std::uint32_t>& SubspacePoset::up_set(std::size_t i) const {
  ensure_closure();
  return closure_->up_sets[i];
}

const std::vector<std::uint32_t>& SubspacePoset::down_set(std::size_t i) const {
  ensure_closure();
  return closure_->down_sets[i];
}

bool SubspacePoset::leq(std::size_t a, std::size_t b) const {
  ensure_closure();
  const auto& ups = closure_->up_sets[a];
  return std::binary_search(ups.begin(), ups.end(), static_cast<std::uint32_t>(b));
}

}  // namespace lnq
