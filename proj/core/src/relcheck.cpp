#include "lnq/relcheck.hpp"

#include <chrono>
#include <functional>
#include <utility>

namespace lnq {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::optional<std::string> witness;
};

CheckResult run_timed(std::string id, std::string anchor,
                      const std::function<Outcome()>& body) {
  CheckResult out;
  out.id = std::move(id);
  out.paper_anchor = std::move(anchor);
  const auto start = Clock::now();
  Outcome o = body();
  out.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  out.passed = o.passed;
  out.witness = std::move(o.witness);
  return out;
}

std::string entry_text(const SubspacePoset& poset, const ExactMatrix::Entry& e) {
  return "(" + vertex_label(poset, e.row) + ", " + vertex_label(poset, e.col) +
         ") = " + rat_str(e.value);
}

Outcome equal_outcome(const SubspacePoset& poset, const ExactMatrix& got,
                      const ExactMatrix& expected) {
  const auto diff = got.first_difference(expected);
  if (!diff) return {true, std::nullopt};
  return {false, "first violated entry (" + vertex_label(poset, diff->row) + ", " +
                     vertex_label(poset, diff->col) + "): expected " +
                     rat_str(expected.at(diff->row, diff->col)) + ", got " +
                     rat_str(got.at(diff->row, diff->col))};
}

Outcome zero_outcome(const SubspacePoset& poset, const ExactMatrix& m) {
  const auto nz = m.first_nonzero();
  if (!nz) return {true, std::nullopt};
  return {false, "first violated entry " + entry_text(poset, *nz) + ", expected 0"};
}

Outcome nonzero_outcome(const SubspacePoset& poset, const ExactMatrix& m,
                        const std::string& label) {
  const auto nz = m.first_nonzero();
  if (nz) return {true, label + " certificate " + entry_text(poset, *nz)};
  return {false, label + " is identically zero"};
}

}  // namespace

std::string vertex_label(const SubspacePoset& poset, std::size_t index) {
  return "#" + std::to_string(index) + "(dim " + std::to_string(poset.dim_of(index)) + ")";
}

CheckResult check_equal(const SubspacePoset& poset, std::string id, std::string anchor,
                        const ExactMatrix& got, const ExactMatrix& expected) {
  return run_timed(std::move(id), std::move(anchor),
                   [&] { return equal_outcome(poset, got, expected); });
}

CheckResult check_zero(const SubspacePoset& poset, std::string id, std::string anchor,
                       const ExactMatrix& m) {
  return run_timed(std::move(id), std::move(anchor), [&] { return zero_outcome(poset, m); });
}

CheckResult check_nonzero(const SubspacePoset& poset, std::string id, std::string anchor,
                          const ExactMatrix& m) {
  return run_timed(std::move(id), std::move(anchor),
                   [&] { return nonzero_outcome(poset, m, "nonzero"); });
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

std::vector<CheckResult> check_subconstituent(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Params& p = ops.params();
  const int n = p.n();
  const Rat q = p.q_rat();
  const std::size_t nx = ops.size();
  const ExactMatrix& As = ops.dual_adjacency();
  const ExactMatrix& AsInv = ops.dual_adjacency_inv();
  const ExactMatrix& R = ops.raising();
  const ExactMatrix& L = ops.lowering();
  const ExactMatrix& A = ops.adjacency();
  const ExactMatrix I = ExactMatrix::identity(nx);

  std::vector<CheckResult> out;

  out.push_back(run_timed("subconstituent/estar_orthogonality", "Lemma 4.2", [&] {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const ExactMatrix prod = ops.e_star(i) * ops.e_star(j);
        const ExactMatrix expect =
            (i == j) ? ops.e_star(i) : ExactMatrix::zero_sparse(nx, nx);
        Outcome o = equal_outcome(poset, prod, expect);
        if (!o.passed) {
          o.witness = "E*_" + std::to_string(i) + " E*_" + std::to_string(j) + ": " +
                      *o.witness;
          return o;
        }
      }
    return Outcome{true, std::nullopt};
  }));

  out.push_back(run_timed("subconstituent/estar_resolution", "Lemma 4.2", [&] {
    ExactMatrix sum = ExactMatrix::zero_sparse(nx, nx);
    for (int i = 0; i <= n; ++i) sum = sum + ops.e_star(i);
    return equal_outcome(poset, sum, I);
  }));

  out.push_back(run_timed("subconstituent/dual_from_estar", "Eq. (5.2)", [&] {
    ExactMatrix sum = ExactMatrix::zero_sparse(nx, nx);
    ExactMatrix sum_inv = ExactMatrix::zero_sparse(nx, nx);
    for (int i = 0; i <= n; ++i) {
      sum = sum + rat_pow(q, -i) * ops.e_star(i);
      sum_inv = sum_inv + rat_pow(q, i) * ops.e_star(i);
    }
    Outcome o = equal_outcome(poset, sum, As);
    if (!o.passed) return o;
    return equal_outcome(poset, sum_inv, AsInv);
  }));

  out.push_back(run_timed("subconstituent/estar_lagrange", "Eq. (5.3)", [&] {
    for (int i = 0; i <= n; ++i) {
      ExactMatrix prod = ExactMatrix::identity(nx).to_dense();
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        const Rat denom = p.theta_star(i) - p.theta_star(j);
        prod = prod * ((Rat(1) / denom) *
                       (As - p.theta_star(j) * ExactMatrix::identity(nx)));
      }
      Outcome o = equal_outcome(poset, prod, ops.e_star(i));
      if (!o.passed) {
        o.witness = "E*_" + std::to_string(i) + ": " + *o.witness;
        return o;
      }
    }
    return Outcome{true, std::nullopt};
  }));

  out.push_back(run_timed("subconstituent/dual_commutation_l", "Lemma 6.6", [&] {
    return equal_outcome(poset, As * L, q * (L * As));
  }));

  out.push_back(run_timed("subconstituent/dual_commutation_r", "Lemma 6.6", [&] {
    return equal_outcome(poset, As * R, (Rat(1) / q) * (R * As));
  }));

  out.push_back(run_timed("subconstituent/lr_commutator", "Lemma 6.6", [&] {
    const ExactMatrix lhs = L * R - R * L;
    const ExactMatrix rhs = (Rat(1) / (q - 1)) * (rat_pow(q, n) * As - AsInv);
    return equal_outcome(poset, lhs, rhs);
  }));

  out.push_back(run_timed("subconstituent/raising_shifts", "Lemma 6.4", [&] {
    std::string certificates;
    for (int i = 0; i + 1 <= n; ++i) {
      const ExactMatrix lhs = R * ops.e_star(i);
      Outcome o = equal_outcome(poset, lhs, ops.e_star(i + 1) * R);
      if (!o.passed) return o;
      const auto nz = lhs.first_nonzero();
      if (!nz) return Outcome{false, "R E*_" + std::to_string(i) + " is identically zero"};
      if (!certificates.empty()) certificates += "; ";
      certificates += "R E*_" + std::to_string(i) + " " + entry_text(poset, *nz);
    }
    Outcome o = zero_outcome(poset, R * ops.e_star(n));
    if (!o.passed) return Outcome{false, "R E*_N: " + *o.witness};
    o = zero_outcome(poset, ops.e_star(0) * R);
    if (!o.passed) return Outcome{false, "E*_0 R: " + *o.witness};
    return Outcome{true, certificates};
  }));

  out.push_back(run_timed("subconstituent/lowering_shifts", "Lemma 6.4", [&] {
    std::string certificates;
    for (int i = 1; i <= n; ++i) {
      const ExactMatrix lhs = L * ops.e_star(i);
      Outcome o = equal_outcome(poset, lhs, ops.e_star(i - 1) * L);
      if (!o.passed) return o;
      const auto nz = lhs.first_nonzero();
      if (!nz) return Outcome{false, "L E*_" + std::to_string(i) + " is identically zero"};
      if (!certificates.empty()) certificates += "; ";
      certificates += "L E*_" + std::to_string(i) + " " + entry_text(poset, *nz);
    }
    Outcome o = zero_outcome(poset, L * ops.e_star(0));
    if (!o.passed) return Outcome{false, "L E*_0: " + *o.witness};
    o = zero_outcome(poset, ops.e_star(n) * L);
    if (!o.passed) return Outcome{false, "E*_N L: " + *o.witness};
    return Outcome{true, certificates};
  }));

  out.push_back(run_timed("subconstituent/adjacency_shape", "Lemma 7.4", [&] {
    const ExactMatrix rhs =
        R + p.phi() * (AsInv * L) + (p.phi() - 1) / (q - 1) * AsInv;
    return equal_outcome(poset, A, rhs);
  }));

  out.push_back(run_timed("subconstituent/raising_recovery", "Lemma 7.5", [&] {
    ExactMatrix sum = ExactMatrix::zero_sparse(nx, nx);
    for (int i = 1; i <= n; ++i) sum = sum + ops.e_star(i) * A * ops.e_star(i - 1);
    return equal_outcome(poset, sum, R);
  }));

  out.push_back(run_timed("subconstituent/lowering_recovery", "Lemma 7.5", [&] {
    ExactMatrix sum = ExactMatrix::zero_sparse(nx, nx);
    for (int i = 1; i <= n; ++i)
      sum = sum + rat_pow(q, 1 - i) * (ops.e_star(i - 1) * A * ops.e_star(i));
    return equal_outcome(poset, (Rat(1) / p.phi()) * sum, L);
  }));

  out.push_back(run_timed("subconstituent/block_tridiagonal", "Lemma 7.6", [&] {
    std::string certificates;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const int gap = i > j ? i - j : j - i;
        if (gap == 0) continue;
        const ExactMatrix block = ops.e_star(i) * A * ops.e_star(j);
        const std::string label =
            "E*_" + std::to_string(i) + " A E*_" + std::to_string(j);
        if (gap > 1) {
          Outcome o = zero_outcome(poset, block);
          if (!o.passed) return Outcome{false, label + ": " + *o.witness};
        } else {
          const auto nz = block.first_nonzero();
          if (!nz) return Outcome{false, label + " is identically zero"};
          if (!certificates.empty()) certificates += "; ";
          certificates += label + " " + entry_text(poset, *nz);
        }
      }
    return Outcome{true, certificates};
  }));

  return out;
}

std::vector<CheckResult> check_qserre(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Rat beta = ops.params().beta();
  const ExactMatrix& As = ops.dual_adjacency();
  const ExactMatrix& A = ops.adjacency();

  std::vector<CheckResult> out;
  out.push_back(run_timed("qserre/q_serre_relation", "Eq. (8.2)", [&] {
    const ExactMatrix As2 = As * As;
    const ExactMatrix As3 = As2 * As;
    const ExactMatrix lhs = As3 * A - (beta + 1) * (As2 * (A * As)) +
                            (beta + 1) * (As * (A * As2)) - A * As3;
    const auto nz = lhs.first_nonzero();
    if (!nz) return Outcome{true, std::nullopt};
    return Outcome{false, "left side is nonzero at " + entry_text(poset, *nz)};
  }));
  return out;
}

std::vector<CheckResult> check_tridiagonal(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Rat beta = ops.params().beta();
  const Rat rho = ops.params().rho();
  const ExactMatrix& As = ops.dual_adjacency();
  const ExactMatrix& A = ops.adjacency();

  std::vector<CheckResult> out;
  out.push_back(run_timed("tridiagonal/tridiagonal_relation", "Eq. (8.10)", [&] {
    const ExactMatrix A2 = A * A;
    const ExactMatrix A3 = A2 * A;
    const ExactMatrix lhs = A3 * As - (beta + 1) * (A2 * (As * A)) +
                            (beta + 1) * (A * (As * A2)) - As * A3;
    const ExactMatrix rhs = rho * (A * As - As * A);
    return equal_outcome(poset, lhs, rhs);
  }));
  return out;
}

std::vector<CheckResult> check_uq_relations(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Params& p = ops.params();
  const Rat q = p.q_rat();
  const std::size_t nx = ops.size();
  const ExactMatrix& As = ops.dual_adjacency();
  const ExactMatrix& A = ops.adjacency();
  const ExactMatrix I = ExactMatrix::identity(nx);
  const ExactMatrix scaled_I = (rat_pow(q, p.n()) / (q - 1)) * I;

  std::vector<CheckResult> out;
  const auto push_eq = [&](const char* id, const char* anchor, const ExactMatrix& lhs,
                           const ExactMatrix& rhs) {
    out.push_back(run_timed(id, anchor, [&] { return equal_outcome(poset, lhs, rhs); }));
  };

  const ExactMatrix& Ap = ops.a_plus_sup();
  const ExactMatrix& Am = ops.a_minus_sup();
  const ExactMatrix& Bp = ops.a_plus_sub();
  const ExactMatrix& Bm = ops.a_minus_sub();

  push_eq("uq/minus_dual", "Eq. (8.7)", q * (Am * As) - As * Am, I);
  push_eq("uq/dual_plus", "Eq. (8.8)", q * (As * Ap) - Ap * As, I);
  push_eq("uq/plus_minus", "Eq. (8.9)", q * (Ap * Am) - Am * Ap, scaled_I);
  push_eq("uq/alt_minus_dual", "Eq. (15.2)", q * (Bm * As) - As * Bm, I);
  push_eq("uq/dual_alt_plus", "Eq. (15.3)", q * (As * Bp) - Bp * As, I);
  push_eq("uq/alt_plus_minus", "Eq. (15.4)", q * (Bp * Bm) - Bm * Bp, scaled_I);
  push_eq("uq/adjacency_split_sup", "Eq. (8.6)", A, p.phi() * Am - Ap);
  push_eq("uq/adjacency_split_sub", "Eq. (15.1)", A, p.phi() * Bp - Bm);

  out.push_back(run_timed("uq/equitable_module_certificate", "Theorems 13.6, 15.3", [&] {
    for (const CheckResult& r : out)
      if (!r.passed)
        return Outcome{false, "a prerequisite equitable relation failed: " + r.id};
    return Outcome{
        true,
        "the six relations certify both equitable sl2 module structures on V in "
        "square-root-free form"};
  }));
  return out;
}

std::vector<CheckResult> check_diagonalizability(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Params& p = ops.params();
  const int n = p.n();
  const std::size_t nx = ops.size();
  const ExactMatrix& A = ops.adjacency();

  std::vector<CheckResult> out;

  out.push_back(run_timed("diagonalizability/theta_distinct", "Lemma 10.4", [&] {
    if (p.thetas_distinct()) return Outcome{true, std::nullopt};
    return Outcome{false, "theta sequence has a repeated value"};
  }));

  out.push_back(run_timed("diagonalizability/transpose_conjugation", "Lemma 10.1", [&] {
    return equal_outcome(poset, A.transpose(),
                         ops.d_squared() * A * ops.d_squared_inv());
  }));

  out.push_back(run_timed("diagonalizability/minimal_polynomial", "Prop. 10.8", [&] {
    return zero_outcome(poset, ops.full_theta_product());
  }));

  out.push_back(run_timed("diagonalizability/minimal_polynomial_tight", "Prop. 10.8", [&] {
    std::string certificates;
    for (int i = 0; i <= n; ++i) {
      const auto nz = ops.drop_one_product(i).first_nonzero();
      if (!nz)
        return Outcome{false, "dropping the theta_" + std::to_string(i) +
                                  " factor still annihilates V"};
      if (!certificates.empty()) certificates += "; ";
      certificates += "drop theta_" + std::to_string(i) + " " + entry_text(poset, *nz);
    }
    return Outcome{true, certificates};
  }));

  out.push_back(run_timed("diagonalizability/idempotent_algebra", "Lemma 11.2", [&] {
    ExactMatrix sum = ExactMatrix::zero_sparse(nx, nx).to_dense();
    for (int i = 0; i <= n; ++i) {
      sum = sum + ops.idempotent(i);
      for (int j = 0; j <= n; ++j) {
        const ExactMatrix prod = ops.idempotent(i) * ops.idempotent(j);
        const ExactMatrix expect =
            (i == j) ? ops.idempotent(i) : ExactMatrix::dense(nx, nx);
        Outcome o = equal_outcome(poset, prod, expect);
        if (!o.passed) {
          o.witness =
              "E_" + std::to_string(i) + " E_" + std::to_string(j) + ": " + *o.witness;
          return o;
        }
      }
    }
    return equal_outcome(poset, sum, ExactMatrix::identity(nx));
  }));

  out.push_back(run_timed("diagonalizability/spectral_decomposition", "Lemma 11.2", [&] {
    ExactMatrix sum = ExactMatrix::dense(nx, nx);
    for (int i = 0; i <= n; ++i) sum = sum + p.theta(i) * ops.idempotent(i);
    return equal_outcome(poset, sum, A);
  }));

  out.push_back(run_timed("diagonalizability/eigenspace_dimensions", "Lemma 11.3", [&] {
    for (int i = 0; i <= n; ++i) {
      const Rat expected = q_binomial(n, i, p.q_rat());
      const ExactMatrix& E = ops.idempotent(i);
      const Rat tr = E.trace();
      const int rk = rank(E);
      if (tr != expected || Rat(rk) != expected)
        return Outcome{false, "E_" + std::to_string(i) + ": trace " + rat_str(tr) +
                                  ", rank " + std::to_string(rk) + ", expected " +
                                  rat_str(expected)};
    }
    return Outcome{true, std::nullopt};
  }));

  return out;
}

std::vector<CheckResult> check_qpoly(const OperatorSet& ops) {
  const SubspacePoset& poset = ops.poset();
  const Params& p = ops.params();
  const int n = p.n();
  const ExactMatrix& As = ops.dual_adjacency();

  std::vector<CheckResult> out;

  std::vector<ExactMatrix> left;  // E_i A*
  left.reserve(n + 1);
  for (int i = 0; i <= n; ++i) left.push_back(ops.idempotent(i) * As);

  out.push_back(run_timed("qpoly/dual_pattern_zero", "Eq. (12.1)", [&] {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const int gap = i > j ? i - j : j - i;
        if (gap <= 1) continue;
        Outcome o = zero_outcome(poset, left[i] * ops.idempotent(j));
        if (!o.passed)
          return Outcome{false, "E_" + std::to_string(i) + " A* E_" + std::to_string(j) +
                                    ": " + *o.witness};
      }
    return Outcome{true, std::nullopt};
  }));

  out.push_back(run_timed("qpoly/dual_pattern_nonzero", "Eq. (12.1)", [&] {
    std::string certificates;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const int gap = i > j ? i - j : j - i;
        if (gap != 1) continue;
        const std::string label =
            "E_" + std::to_string(i) + " A* E_" + std::to_string(j);
        const auto nz = (left[i] * ops.idempotent(j)).first_nonzero();
        if (!nz) return Outcome{false, label + " is identically zero"};
        if (!certificates.empty()) certificates += "; ";
        certificates += label + " " + entry_text(poset, *nz);
      }
    return Outcome{true, certificates};
  }));

  out.push_back(run_timed("qpoly/dual_inclusion", "Prop. 12.4", [&] {
    for (int i = 0; i <= n; ++i) {
      ExactMatrix neighbor = ops.idempotent_or_zero(i - 1) + ops.idempotent(i) +
                             ops.idempotent_or_zero(i + 1);
      Outcome o = equal_outcome(poset, neighbor * (As * ops.idempotent(i)),
                                As * ops.idempotent(i));
      if (!o.passed) {
        o.witness = "A* E_" + std::to_string(i) + ": " + *o.witness;
        return o;
      }
    }
    return Outcome{true, std::nullopt};
  }));

  out.push_back(run_timed("qpoly/dual_adjacency_certificate", "Theorem 12.8", [&] {
    for (const CheckResult& r : out)
      if (!r.passed) return Outcome{false, "a prerequisite pattern check failed: " + r.id};
    return Outcome{true,
                   "A* is a dual adjacency matrix for the ordering {E_i}; the matrix A "
                   "is Q-polynomial with respect to the zero subspace"};
  }));

  return out;
}

}  // namespace lnq
