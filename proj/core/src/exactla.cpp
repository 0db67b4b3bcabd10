#include "lnq/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace lnq {

// ---------------------------------------------------------------- vectors

ExactVector ExactVector::unit(std::size_t length, std::size_t index) {
  ExactVector out(length);
  out.v_[index] = 1;
  return out;
}

bool ExactVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rat& t) { return t == 0; });
}

Rat ExactVector::dot(const ExactVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("dot: length mismatch");
  Rat acc(0);
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != 0 && other.v_[i] != 0) acc += v_[i] * other.v_[i];
  return acc;
}

ExactVector& ExactVector::operator+=(const ExactVector& other) {
  if (size() != other.size()) throw std::invalid_argument("vector add: length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += other.v_[i];
  return *this;
}

ExactVector& ExactVector::operator-=(const ExactVector& other) {
  if (size() != other.size()) throw std::invalid_argument("vector sub: length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= other.v_[i];
  return *this;
}

ExactVector& ExactVector::operator*=(const Rat& scalar) {
  for (Rat& t : v_) t *= scalar;
  return *this;
}

ExactVector ExactVector::primitive() const {
  mpz_class den_lcm(1), num_gcd(0);
  for (const Rat& t : v_) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.get_den_mpz_t());
    den_lcm = l;
  }
  ExactVector out(size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    out.v_[i] = v_[i] * Rat(den_lcm);
    out.v_[i].canonicalize();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), out.v_[i].get_num_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return out;  // zero vector
  int sign = 0;
  for (std::size_t i = 0; i < out.v_.size(); ++i) {
    if (out.v_[i] != 0) {
      sign = out.v_[i] > 0 ? 1 : -1;
      break;
    }
  }
  const Rat scale = Rat(sign) / Rat(num_gcd);
  for (Rat& t : out.v_) {
    t *= scale;
    t.canonicalize();
  }
  return out;
}

// ---------------------------------------------------------------- matrices

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

ExactMatrix ExactMatrix::dense(std::size_t rows, std::size_t cols) {
  ExactMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.storage_ = Storage::kDense;
  m.dense_.assign(rows * cols, Rat(0));
  return m;
}

ExactMatrix ExactMatrix::sparse(std::size_t rows, std::size_t cols,
                                std::vector<Entry> entries) {
  ExactMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.storage_ = Storage::kSparse;
  std::erase_if(entries, [](const Entry& e) { return e.value == 0; });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].row == entries[i + 1].row && entries[i].col == entries[i + 1].col)
      throw std::invalid_argument("sparse: duplicate coordinate");
  for (const Entry& e : entries)
    if (e.row >= rows || e.col >= cols)
      throw std::invalid_argument("sparse: entry out of bounds");
  m.sparse_ = std::move(entries);
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), Rat(1)});
  return sparse(n, n, std::move(entries));
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rat>& d) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0)
      entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), d[i]});
  return sparse(d.size(), d.size(), std::move(entries));
}

ExactMatrix ExactMatrix::zero_sparse(std::size_t rows, std::size_t cols) {
  return sparse(rows, cols, {});
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return dense(0, 0);
  ExactMatrix m = dense(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.dense_[r * m.cols_ + c] = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_cols(const std::vector<ExactVector>& cols) {
  if (cols.empty()) return dense(0, 0);
  ExactMatrix m = dense(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("from_cols: ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m.dense_[r * m.cols_ + c] = cols[c][r];
  }
  return m;
}

ExactMatrix& ExactMatrix::set_domain_tag(std::string tag) {
  tag_ = std::move(tag);
  return *this;
}

Rat ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("at: index out of range");
  if (storage_ == Storage::kDense) return dense_[r * cols_ + c];
  const Entry probe{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), Rat(0)};
  const auto it = std::lower_bound(
      sparse_.begin(), sparse_.end(), probe, [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
      });
  if (it != sparse_.end() && it->row == r && it->col == c) return it->value;
  return Rat(0);
}

void ExactMatrix::set(std::size_t r, std::size_t c, Rat value) {
  if (storage_ != Storage::kDense)
    throw std::logic_error("set: only dense matrices are mutable");
  if (r >= rows_ || c >= cols_) throw std::out_of_range("set: index out of range");
  dense_[r * cols_ + c] = std::move(value);
}

ExactMatrix ExactMatrix::to_dense() const {
  if (storage_ == Storage::kDense) return *this;
  ExactMatrix m = dense(rows_, cols_);
  for (const Entry& e : sparse_) m.dense_[e.row * cols_ + e.col] = e.value;
  m.tag_ = tag_;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  if (storage_ == Storage::kSparse) {
    std::vector<Entry> entries;
    entries.reserve(sparse_.size());
    for (const Entry& e : sparse_) entries.push_back({e.col, e.row, e.value});
    ExactMatrix m = sparse(cols_, rows_, std::move(entries));
    m.tag_ = tag_;
    return m;
  }
  ExactMatrix m = dense(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.dense_[c * rows_ + r] = dense_[r * cols_ + c];
  m.tag_ = tag_;
  return m;
}

Rat ExactMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Rat acc(0);
  if (storage_ == Storage::kSparse) {
    for (const Entry& e : sparse_)
      if (e.row == e.col) acc += e.value;
  } else {
    for (std::size_t i = 0; i < rows_; ++i) acc += dense_[i * cols_ + i];
  }
  return acc;
}

bool ExactMatrix::is_zero() const {
  if (storage_ == Storage::kSparse) return sparse_.empty();
  return std::all_of(dense_.begin(), dense_.end(), [](const Rat& t) { return t == 0; });
}

bool ExactMatrix::is_diagonal() const {
  if (storage_ == Storage::kSparse) {
    return std::all_of(sparse_.begin(), sparse_.end(),
                       [](const Entry& e) { return e.row == e.col; });
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && dense_[r * cols_ + c] != 0) return false;
  return true;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  ExactVector out(rows_);
  if (storage_ == Storage::kSparse) {
    for (const Entry& e : sparse_)
      if (v[e.col] != 0) out[e.row] += e.value * v[e.col];
  } else {
    for (std::size_t r = 0; r < rows_; ++r) {
      Rat acc(0);
      for (std::size_t c = 0; c < cols_; ++c)
        if (dense_[r * cols_ + c] != 0 && v[c] != 0) acc += dense_[r * cols_ + c] * v[c];
      out[r] = acc;
    }
  }
  return out;
}

ExactVector ExactMatrix::row_vector(std::size_t r) const {
  ExactVector out(cols_);
  if (storage_ == Storage::kSparse) {
    for (const Entry& e : sparse_)
      if (e.row == r) out[e.col] = e.value;
  } else {
    for (std::size_t c = 0; c < cols_; ++c) out[c] = dense_[r * cols_ + c];
  }
  return out;
}

ExactVector ExactMatrix::col_vector(std::size_t c) const {
  ExactVector out(rows_);
  if (storage_ == Storage::kSparse) {
    for (const Entry& e : sparse_)
      if (e.col == c) out[e.row] = e.value;
  } else {
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dense_[r * cols_ + c];
  }
  return out;
}

std::optional<ExactMatrix::Entry> ExactMatrix::first_nonzero() const {
  if (storage_ == Storage::kSparse) {
    if (sparse_.empty()) return std::nullopt;
    return sparse_.front();
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (dense_[r * cols_ + c] != 0)
        return Entry{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                     dense_[r * cols_ + c]};
  return std::nullopt;
}

std::optional<ExactMatrix::Entry> ExactMatrix::first_difference(const ExactMatrix& other) const {
  require_same_shape(*this, other, "first_difference");
  const ExactMatrix diff = *this - other;
  return diff.first_nonzero();
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "add");
  if (a.storage_ == ExactMatrix::Storage::kSparse &&
      b.storage_ == ExactMatrix::Storage::kSparse) {
    std::vector<ExactMatrix::Entry> entries = a.sparse_;
    entries.insert(entries.end(), b.sparse_.begin(), b.sparse_.end());
    // merge duplicates
    std::sort(entries.begin(), entries.end(),
              [](const ExactMatrix::Entry& x, const ExactMatrix::Entry& y) {
                return x.row != y.row ? x.row < y.row : x.col < y.col;
              });
    std::vector<ExactMatrix::Entry> merged;
    for (auto& e : entries) {
      if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
        merged.back().value += e.value;
      else
        merged.push_back(std::move(e));
    }
    return ExactMatrix::sparse(a.rows_, a.cols_, std::move(merged));
  }
  ExactMatrix out = a.to_dense();
  if (b.storage_ == ExactMatrix::Storage::kSparse) {
    for (const auto& e : b.sparse_) out.dense_[e.row * out.cols_ + e.col] += e.value;
  } else {
    for (std::size_t i = 0; i < out.dense_.size(); ++i) out.dense_[i] += b.dense_[i];
  }
  out.tag_.clear();
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + (Rat(-1) * b);
}

ExactMatrix operator*(const Rat& s, const ExactMatrix& m) {
  if (m.storage_ == ExactMatrix::Storage::kSparse) {
    if (s == 0) return ExactMatrix::zero_sparse(m.rows_, m.cols_);
    std::vector<ExactMatrix::Entry> entries = m.sparse_;
    for (auto& e : entries) e.value *= s;
    return ExactMatrix::sparse(m.rows_, m.cols_, std::move(entries));
  }
  ExactMatrix out = m;
  for (Rat& t : out.dense_) t *= s;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("mul: dimension mismatch");
  const bool as = a.storage_ == ExactMatrix::Storage::kSparse;
  const bool bs = b.storage_ == ExactMatrix::Storage::kSparse;
  if (as && bs) {
    // sparse * sparse -> sparse, one dense row buffer at a time
    std::vector<std::size_t> b_row_begin(b.rows_ + 1, 0);
    for (const auto& e : b.sparse_) ++b_row_begin[e.row + 1];
    for (std::size_t r = 0; r < b.rows_; ++r) b_row_begin[r + 1] += b_row_begin[r];

    std::vector<ExactMatrix::Entry> out_entries;
    std::vector<Rat> buffer(b.cols_, Rat(0));
    std::vector<std::uint32_t> touched;
    std::size_t ai = 0;
    while (ai < a.sparse_.size()) {
      const std::uint32_t row = a.sparse_[ai].row;
      touched.clear();
      for (; ai < a.sparse_.size() && a.sparse_[ai].row == row; ++ai) {
        const auto& ea = a.sparse_[ai];
        for (std::size_t bi = b_row_begin[ea.col]; bi < b_row_begin[ea.col + 1]; ++bi) {
          const auto& eb = b.sparse_[bi];
          if (buffer[eb.col] == 0 && eb.value != 0) touched.push_back(eb.col);
          buffer[eb.col] += ea.value * eb.value;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (const std::uint32_t c : touched) {
        if (buffer[c] != 0) out_entries.push_back({row, c, buffer[c]});
        buffer[c] = 0;
      }
    }
    return ExactMatrix::sparse(a.rows_, b.cols_, std::move(out_entries));
  }
  ExactMatrix out = ExactMatrix::dense(a.rows_, b.cols_);
  if (as) {  // sparse * dense
    for (const auto& e : a.sparse_)
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Rat& bv = b.dense_[e.col * b.cols_ + c];
        if (bv != 0) out.dense_[e.row * out.cols_ + c] += e.value * bv;
      }
    return out;
  }
  if (bs) {  // dense * sparse
    for (const auto& e : b.sparse_)
      for (std::size_t r = 0; r < a.rows_; ++r) {
        const Rat& av = a.dense_[r * a.cols_ + e.row];
        if (av != 0) out.dense_[r * out.cols_ + e.col] += av * e.value;
      }
    return out;
  }
  // dense * dense, ikj order
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& av = a.dense_[i * a.cols_ + k];
      if (av == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bv = b.dense_[k * b.cols_ + j];
        if (bv != 0) out.dense_[i * out.cols_ + j] += av * bv;
      }
    }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  ExactMatrix diff = a - b;
  return diff.is_zero();
}

const std::vector<ExactMatrix::Entry>& ExactMatrix::sparse_entries() const {
  if (storage_ != Storage::kSparse)
    throw std::logic_error("sparse_entries: matrix is dense");
  return sparse_;
}

ExactMatrix power(const ExactMatrix& m, unsigned e) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power: matrix not square");
  ExactMatrix acc = ExactMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

// ------------------------------------------------- elimination primitives

namespace {

struct Echelon {
  std::vector<std::vector<Rat>> rows;  // integer entries, row echelon form
  std::vector<int> pivot_cols;
};

// Fraction-free Bareiss elimination. Rows are first scaled to integers; the
// pivot is always the first nonzero entry in column order. The one-step
// division by the previous pivot stays exact (entries are minors of the
// scaled matrix); integrality is checked.
Echelon bareiss(const ExactMatrix& m) {
  Echelon ech;
  ech.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rat> row(m.cols());
    mpz_class den_lcm(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c] = m.at(r, c);
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), row[c].get_den_mpz_t());
      den_lcm = l;
    }
    for (Rat& t : row) {
      t *= Rat(den_lcm);
      t.canonicalize();
    }
    ech.rows.push_back(std::move(row));
  }

  const std::size_t nrows = ech.rows.size();
  const std::size_t ncols = m.cols();
  Rat prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && ech.rows[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(ech.rows[rank], ech.rows[pivot]);
    const Rat piv = ech.rows[rank][col];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      const Rat factor = ech.rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        Rat t = (piv * ech.rows[r][c] - factor * ech.rows[rank][c]) / prev;
        t.canonicalize();
        internal_check(rat_is_integer(t), "Bareiss step must stay integral");
        ech.rows[r][c] = std::move(t);
      }
    }
    prev = piv;
    ech.pivot_cols.push_back(static_cast<int>(col));
    ++rank;
  }
  ech.rows.resize(rank);
  return ech;
}

}  // namespace

int rank(const ExactMatrix& m) {
  return static_cast<int>(bareiss(m).pivot_cols.size());
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const Echelon ech = bareiss(m);
  const std::size_t ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (const int c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    ExactVector v(ncols);
    v[free_col] = 1;
    for (std::size_t i = ech.pivot_cols.size(); i-- > 0;) {
      const int pc = ech.pivot_cols[i];
      Rat acc(0);
      for (std::size_t c = pc + 1; c < ncols; ++c)
        if (ech.rows[i][c] != 0 && v[c] != 0) acc += ech.rows[i][c] * v[c];
      v[pc] = -acc / ech.rows[i][pc];
    }
    basis.push_back(v.primitive());
  }
  return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  ExactMatrix work = m.to_dense();
  ExactMatrix out = ExactMatrix::identity(n).to_dense();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        Rat t = work.at(col, c);
        work.set(col, c, work.at(pivot, c));
        work.set(pivot, c, t);
        t = out.at(col, c);
        out.set(col, c, out.at(pivot, c));
        out.set(pivot, c, t);
      }
    }
    const Rat inv_piv = Rat(1) / work.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work.set(col, c, work.at(col, c) * inv_piv);
      out.set(col, c, out.at(col, c) * inv_piv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rat factor = work.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work.set(r, c, work.at(r, c) - factor * work.at(col, c));
        out.set(r, c, out.at(r, c) - factor * out.at(col, c));
      }
    }
  }
  return out;
}

int rank_of_vectors(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(ExactMatrix::from_rows(vectors));
}

bool span_contains(const std::vector<ExactVector>& basis, const ExactVector& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  std::vector<ExactVector> extended = basis;
  extended.push_back(v);
  return rank_of_vectors(basis) == rank_of_vectors(extended);
}

int intersection_dim(const std::vector<ExactVector>& a, const std::vector<ExactVector>& b) {
  if (rank_of_vectors(a) != static_cast<int>(a.size()) ||
      rank_of_vectors(b) != static_cast<int>(b.size()))
    throw std::invalid_argument("intersection_dim: input lists must be independent");
  std::vector<ExactVector> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  return static_cast<int>(a.size() + b.size()) - rank_of_vectors(merged);
}

bool spans_equal(const std::vector<ExactVector>& a, const std::vector<ExactVector>& b) {
  const int ra = rank_of_vectors(a);
  const int rb = rank_of_vectors(b);
  if (ra != rb) return false;
  std::vector<ExactVector> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  return rank_of_vectors(merged) == ra;
}

}  // namespace lnq
