#include "lnq/operators.hpp"

#include <stdexcept>

namespace lnq {

OperatorSet::OperatorSet(const SubspacePoset& poset, Params params)
    : poset_(&poset), params_(std::move(params)) {
  if (poset.field().q() != params_.q())
    throw std::invalid_argument("OperatorSet: poset field and params disagree on q");
  if (poset.n() != params_.n())
    throw std::invalid_argument("OperatorSet: poset rank and params disagree on N");

  const std::size_t nx = poset.size();
  const int n = params_.n();
  const Rat q = params_.q_rat();
  const Rat& phi = params_.phi();

  e_star_.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<ExactMatrix::Entry> entries;
    const auto [first, last] = poset.dim_block(i);
    for (std::size_t v = first; v < last; ++v)
      entries.push_back({static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v), Rat(1)});
    e_star_.push_back(ExactMatrix::sparse(nx, nx, std::move(entries)).set_domain_tag("X"));
  }

  std::vector<Rat> dual_diag(nx), dual_diag_inv(nx);
  for (std::size_t v = 0; v < nx; ++v) {
    dual_diag[v] = rat_pow(q, -poset.dim_of(v));
    dual_diag_inv[v] = rat_pow(q, poset.dim_of(v));
  }
  a_star_ = ExactMatrix::diagonal(dual_diag).set_domain_tag("X");
  a_star_inv_ = ExactMatrix::diagonal(dual_diag_inv).set_domain_tag("X");

  // A* and its inverse must reconstruct from the projectors.
  ExactMatrix recon = ExactMatrix::zero_sparse(nx, nx);
  ExactMatrix recon_inv = ExactMatrix::zero_sparse(nx, nx);
  for (int i = 0; i <= n; ++i) {
    recon = recon + rat_pow(q, -i) * e_star_[i];
    recon_inv = recon_inv + rat_pow(q, i) * e_star_[i];
  }
  internal_check(recon == a_star_ && recon_inv == a_star_inv_,
                 "A* must equal sum q^{-i} E*_i");
  internal_check(a_star_ * a_star_inv_ == ExactMatrix::identity(nx),
                 "A* inverse must invert A*");

  {
    std::vector<ExactMatrix::Entry> r_entries;
    for (std::size_t y = 0; y < nx; ++y)
      for (const std::uint32_t z : poset.covers_down(y))
        r_entries.push_back({static_cast<std::uint32_t>(y), z, Rat(1)});
    raising_ = ExactMatrix::sparse(nx, nx, std::move(r_entries)).set_domain_tag("X");
    lowering_ = raising_.transpose();
    // L[y][z] = 1 iff z covers y, directly from the cover lists
    std::vector<ExactMatrix::Entry> l_entries;
    for (std::size_t y = 0; y < nx; ++y)
      for (const std::uint32_t z : poset.covers_up(y))
        l_entries.push_back({static_cast<std::uint32_t>(y), z, Rat(1)});
    internal_check(lowering_ == ExactMatrix::sparse(nx, nx, std::move(l_entries)),
                   "L must be the transpose of R");
  }

  {
    // Entrywise construction of the weighted adjacency matrix.
    std::vector<ExactMatrix::Entry> entries;
    const Rat diag_coeff = (phi - 1) / (q - 1);
    for (std::size_t y = 0; y < nx; ++y) {
      const Rat qdim = rat_pow(q, poset.dim_of(y));
      for (const std::uint32_t z : poset.covers_down(y))
        entries.push_back({static_cast<std::uint32_t>(y), z, Rat(1)});
      for (const std::uint32_t z : poset.covers_up(y))
        entries.push_back({static_cast<std::uint32_t>(y), z, phi * qdim});
      entries.push_back(
          {static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(y), diag_coeff * qdim});
    }
    adjacency_ = ExactMatrix::sparse(nx, nx, std::move(entries)).set_domain_tag("X");
    // Re-derive through the operator identity; the two routes must agree.
    const ExactMatrix via_formula =
        raising_ + phi * (a_star_inv_ * lowering_) + diag_coeff * a_star_inv_;
    internal_check(adjacency_ == via_formula,
                   "entrywise A must match R + phi (A*)^{-1} L + (phi-1)/(q-1) (A*)^{-1}");
  }

  {
    const Rat inv_qm1 = Rat(1) / (q - 1);
    a_plus_sup_ = inv_qm1 * a_star_inv_ - raising_;
    a_minus_sup_ = inv_qm1 * a_star_inv_ + a_star_inv_ * lowering_;
    a_plus_sub_ = inv_qm1 * a_star_inv_ + (Rat(1) / phi) * raising_;
    a_minus_sub_ = inv_qm1 * a_star_inv_ - phi * (a_star_inv_ * lowering_);
    internal_check(adjacency_ == phi * a_minus_sup_ - a_plus_sup_,
                   "A must equal phi A^- minus A^+");
    internal_check(adjacency_ == phi * a_plus_sub_ - a_minus_sub_,
                   "A must equal phi A_+ minus A_-");
  }

  {
    // s^2_0 = 1, s^2_{i+1} = s^2_i q^i phi: the square of the symmetrizer
    // recurrence, which keeps everything rational.
    std::vector<Rat> s2(n + 1);
    s2[0] = 1;
    for (int i = 0; i + 1 <= n; ++i) s2[i + 1] = s2[i] * rat_pow(q, i) * phi;
    std::vector<Rat> diag(nx), diag_inv(nx);
    for (std::size_t v = 0; v < nx; ++v) {
      diag[v] = s2[poset.dim_of(v)];
      diag_inv[v] = Rat(1) / diag[v];
    }
    d_squared_ = ExactMatrix::diagonal(diag).set_domain_tag("X");
    d_squared_inv_ = ExactMatrix::diagonal(diag_inv).set_domain_tag("X");
    internal_check(adjacency_.transpose() == d_squared_ * adjacency_ * d_squared_inv_,
                   "A transpose must equal D^2 A D^{-2}");
  }
}

const ExactMatrix& OperatorSet::e_star(int i) const {
  if (i < 0 || i > params_.n()) throw std::out_of_range("e_star: index out of range");
  return e_star_[i];
}

ExactMatrix OperatorSet::e_star_or_zero(int i) const {
  if (i < 0 || i > params_.n()) return ExactMatrix::zero_sparse(size(), size());
  return e_star_[i];
}

void OperatorSet::build_idempotents() const {
  std::call_once(idem_once_, [this] {
    const int n = params_.n();
    const std::size_t nx = size();
    const auto thetas = params_.theta_seq();
    internal_check(params_.thetas_distinct(), "theta values must be pairwise distinct");

    const ExactMatrix a_dense = adjacency_.to_dense();
    std::vector<ExactMatrix> factors;
    factors.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
      factors.push_back(a_dense - ExactMatrix::diagonal(std::vector<Rat>(nx, thetas[i])));

    // prefix[t] = product of the first t factors, suffix[t] = product of
    // factors t..N; drop-one products and the full product come for free.
    std::vector<ExactMatrix> prefix(n + 2), suffix(n + 2);
    prefix[0] = ExactMatrix::identity(nx);
    for (int t = 0; t <= n; ++t) prefix[t + 1] = prefix[t] * factors[t];
    suffix[n + 1] = ExactMatrix::identity(nx);
    for (int t = n; t >= 0; --t) suffix[t] = factors[t] * suffix[t + 1];

    full_product_ = prefix[n + 1];
    drop_one_.resize(n + 1);
    idempotents_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      drop_one_[i] = prefix[i] * suffix[i + 1];
      Rat denom(1);
      for (int j = 0; j <= n; ++j)
        if (j != i) denom *= thetas[i] - thetas[j];
      idempotents_[i] = (Rat(1) / denom) * drop_one_[i];
      idempotents_[i].set_domain_tag("X");
    }
  });
}

const ExactMatrix& OperatorSet::idempotent(int i) const {
  if (i < 0 || i > params_.n()) throw std::out_of_range("idempotent: index out of range");
  build_idempotents();
  return idempotents_[i];
}

ExactMatrix OperatorSet::idempotent_or_zero(int i) const {
  if (i < 0 || i > params_.n()) return ExactMatrix::zero_sparse(size(), size());
  return idempotent(i);
}

const ExactMatrix& OperatorSet::drop_one_product(int i) const {
  if (i < 0 || i > params_.n())
    throw std::out_of_range("drop_one_product: index out of range");
  build_idempotents();
  return drop_one_[i];
}

const ExactMatrix& OperatorSet::full_theta_product() const {
  build_idempotents();
  return full_product_;
}

}  // namespace lnq
