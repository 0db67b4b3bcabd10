#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lnq/rational.hpp"

namespace lnq {

class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t length) : v_(length, Rat(0)) {}
  explicit ExactVector(std::vector<Rat> values) : v_(std::move(values)) {}
  static ExactVector unit(std::size_t length, std::size_t index);

  std::size_t size() const { return v_.size(); }
  const Rat& operator[](std::size_t i) const { return v_[i]; }
  Rat& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Rat>& values() const { return v_; }

  bool is_zero() const;
  Rat dot(const ExactVector& other) const;

  ExactVector& operator+=(const ExactVector& other);
  ExactVector& operator-=(const ExactVector& other);
  ExactVector& operator*=(const Rat& scalar);
  friend ExactVector operator+(ExactVector a, const ExactVector& b) { return a += b; }
  friend ExactVector operator-(ExactVector a, const ExactVector& b) { return a -= b; }
  friend ExactVector operator*(const Rat& s, ExactVector v) { return v *= s; }
  friend bool operator==(const ExactVector&, const ExactVector&) = default;

  // Divides out the content: integer entries, gcd 1, first nonzero positive.
  ExactVector primitive() const;

 private:
  std::vector<Rat> v_;
};

// Matrix over arbitrary-precision rationals, dense row-major or sparse
// coordinate storage. Sparse storage never holds explicit zeros; the two
// storages compare equal iff entrywise equal. Immutable in spirit: builders
// fill entries, verification only reads.
class ExactMatrix {
 public:
  enum class Storage { kDense, kSparse };
  struct Entry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    Rat value;
  };

  ExactMatrix() = default;

  static ExactMatrix dense(std::size_t rows, std::size_t cols);
  // Entries may arrive in any order; zeros are dropped, duplicates rejected.
  static ExactMatrix sparse(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  static ExactMatrix identity(std::size_t n);                  // sparse
  static ExactMatrix diagonal(const std::vector<Rat>& d);      // sparse
  static ExactMatrix zero_sparse(std::size_t rows, std::size_t cols);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
  static ExactMatrix from_cols(const std::vector<ExactVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Storage storage() const { return storage_; }
  const std::string& domain_tag() const { return tag_; }
  ExactMatrix& set_domain_tag(std::string tag);

  Rat at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Rat value);  // dense only

  ExactMatrix to_dense() const;
  ExactMatrix transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

  ExactVector apply(const ExactVector& v) const;  // M v
  ExactVector row_vector(std::size_t r) const;
  ExactVector col_vector(std::size_t c) const;

  // Row-major scan helpers used to produce check witnesses.
  std::optional<Entry> first_nonzero() const;
  std::optional<Entry> first_difference(const ExactMatrix& other) const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rat& s, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  const std::vector<Entry>& sparse_entries() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage storage_ = Storage::kDense;
  std::vector<Rat> dense_;      // row-major when dense
  std::vector<Entry> sparse_;   // row-major sorted when sparse
  std::string tag_;
};

ExactMatrix power(const ExactMatrix& m, unsigned e);

// Fraction-free (Bareiss) elimination with the pivot fixed as the first
// nonzero entry in column order. rank + nullity = cols.
int rank(const ExactMatrix& m);
// Basis of the right nullspace; each vector is primitive integer with first
// nonzero entry positive, ordered by free column.
std::vector<ExactVector> nullspace(const ExactMatrix& m);
// Dense inverse by exact Gauss-Jordan; throws std::domain_error if singular.
ExactMatrix inverse(const ExactMatrix& m);

int rank_of_vectors(const std::vector<ExactVector>& vectors);
bool span_contains(const std::vector<ExactVector>& basis, const ExactVector& v);
// |A| + |B| - rank([A B]); both inputs must be independent lists, otherwise
// std::invalid_argument.
int intersection_dim(const std::vector<ExactVector>& a, const std::vector<ExactVector>& b);
bool spans_equal(const std::vector<ExactVector>& a, const std::vector<ExactVector>& b);

}  // namespace lnq
