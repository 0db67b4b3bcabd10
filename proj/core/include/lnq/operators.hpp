#pragma once

#include <mutex>
#include <vector>

#include "lnq/exactla.hpp"
#include "lnq/geometry.hpp"
#include "lnq/qscalar.hpp"

namespace lnq {

// Every matrix the verification engine works with, indexed by the canonical
// vertex order of one poset. Eagerly built: the dimension projectors E*_i,
// the dual adjacency matrix A* and its inverse, the raising/lowering pair
// R/L, the weighted adjacency matrix A, the four equitable-presentation
// variants A^+/A^-/A_+/A_-, and the symmetrizing diagonal D^2. The primitive
// idempotents E_i of A are built lazily on first use (the Lagrange products
// dominate the cost). Immutable after construction; lazy state is guarded by
// a once-flag.
class OperatorSet {
 public:
  OperatorSet(const SubspacePoset& poset, Params params);

  const SubspacePoset& poset() const { return *poset_; }
  const Params& params() const { return params_; }
  std::size_t size() const { return poset_->size(); }

  const ExactMatrix& e_star(int i) const;      // 0 <= i <= N
  ExactMatrix e_star_or_zero(int i) const;     // E*_{-1} = E*_{N+1} = 0
  const ExactMatrix& dual_adjacency() const { return a_star_; }
  const ExactMatrix& dual_adjacency_inv() const { return a_star_inv_; }
  const ExactMatrix& raising() const { return raising_; }
  const ExactMatrix& lowering() const { return lowering_; }
  const ExactMatrix& adjacency() const { return adjacency_; }

  const ExactMatrix& a_plus_sup() const { return a_plus_sup_; }    // A^+
  const ExactMatrix& a_minus_sup() const { return a_minus_sup_; }  // A^-
  const ExactMatrix& a_plus_sub() const { return a_plus_sub_; }    // A_+
  const ExactMatrix& a_minus_sub() const { return a_minus_sub_; }  // A_-

  const ExactMatrix& d_squared() const { return d_squared_; }
  const ExactMatrix& d_squared_inv() const { return d_squared_inv_; }

  // Primitive idempotent E_i of A for theta_i (Lagrange product).
  const ExactMatrix& idempotent(int i) const;
  ExactMatrix idempotent_or_zero(int i) const;  // E_{-1} = E_{N+1} = 0
  // prod_{j != i} (A - theta_j I), the unnormalized Lagrange numerator.
  const ExactMatrix& drop_one_product(int i) const;
  // prod_{j=0..N} (A - theta_j I).
  const ExactMatrix& full_theta_product() const;

 private:
  void build_idempotents() const;

  const SubspacePoset* poset_;
  Params params_;
  std::vector<ExactMatrix> e_star_;
  ExactMatrix a_star_, a_star_inv_;
  ExactMatrix raising_, lowering_;
  ExactMatrix adjacency_;
  ExactMatrix a_plus_sup_, a_minus_sup_, a_plus_sub_, a_minus_sub_;
  ExactMatrix d_squared_, d_squared_inv_;

  mutable std::once_flag idem_once_;
  mutable std::vector<ExactMatrix> idempotents_;
  mutable std::vector<ExactMatrix> drop_one_;
  mutable ExactMatrix full_product_;
};

}  // namespace lnq
