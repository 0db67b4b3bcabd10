#include "lnq/tmod.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>

namespace lnq {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(std::string id, std::string anchor,
                  const std::function<std::pair<bool, std::optional<std::string>>()>& body) {
  CheckResult out;
  out.id = std::move(id);
  out.paper_anchor = std::move(anchor);
  const auto start = Clock::now();
  auto [passed, witness] = body();
  out.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  out.passed = passed;
  out.witness = std::move(witness);
  return out;
}

long expected_multiplicity(const Params& p, int r) {
  const Rat q = p.q_rat();
  Rat m = q_binomial(p.n(), r, q);
  if (r >= 1) m -= q_binomial(p.n(), r - 1, q);
  internal_check(rat_is_integer(m) && m > 0, "endpoint multiplicity must be a positive integer");
  return static_cast<long>(m.get_num().get_si());
}

// Component of v inside the dimension-d index block; zero elsewhere check is
// the caller's business.
bool block_support_only(const SubspacePoset& poset, const ExactVector& v, int d) {
  const auto [first, last] = poset.dim_block(d);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool inside = i >= first && i < last;
    if (!inside && v[i] != 0) return false;
  }
  return true;
}

std::string module_label(std::size_t index, const TModule& m) {
  return "module " + std::to_string(index) + " (endpoint " + std::to_string(m.endpoint) + ")";
}

// (d+1)x(d+1) matrix representing A on the raised basis, from the verified
// coefficient formulas: subdiagonal 1, diagonal a_i, superdiagonal xi_i.
ExactMatrix adjacency_representation(const ModuleScalars& sc) {
  const int d = sc.diameter();
  ExactMatrix rep = ExactMatrix::dense(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    rep.set(i, i, sc.a(i));
    if (i + 1 <= d) {
      rep.set(i + 1, i, Rat(1));
      rep.set(i, i + 1, sc.xi(i + 1));
    }
  }
  return rep;
}

}  // namespace

std::vector<ExactVector> kernel_generators(const OperatorSet& ops, int endpoint) {
  const SubspacePoset& poset = ops.poset();
  if (endpoint < 0 || 2 * endpoint > poset.n())
    throw std::out_of_range("kernel_generators: endpoint out of range");
  const auto [first, last] = poset.dim_block(endpoint);
  const std::size_t width = last - first;

  // Columns of L indexed by the endpoint block; its nullspace is
  // ker L intersect E*_r V in block coordinates.
  ExactMatrix restricted = ExactMatrix::dense(ops.size(), width);
  const ExactMatrix lowering_dense = ops.lowering().to_dense();
  for (std::size_t r = 0; r < ops.size(); ++r)
    for (std::size_t c = 0; c < width; ++c)
      restricted.set(r, c, lowering_dense.at(r, first + c));

  std::vector<ExactVector> generators;
  for (const ExactVector& coeffs : nullspace(restricted)) {
    ExactVector v(ops.size());
    for (std::size_t c = 0; c < width; ++c) v[first + c] = coeffs[c];
    generators.push_back(std::move(v));
  }

  // Fraction-free Gram-Schmidt within the endpoint.
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const Rat gram = generators[j].dot(generators[j]);
      const Rat mixed = generators[k].dot(generators[j]);
      if (mixed == 0) continue;
      ExactVector updated = gram * generators[k] - mixed * generators[j];
      generators[k] = std::move(updated);
    }
    generators[k] = generators[k].primitive();
    internal_check(!generators[k].is_zero(), "kernel generators must stay independent");
  }
  return generators;
}

TModule generate_module(const OperatorSet& ops, const ExactVector& w, int endpoint) {
  TModule m;
  m.endpoint = endpoint;
  m.diameter = ops.poset().n() - 2 * endpoint;
  m.basis.push_back(w);
  for (int i = 0; i < m.diameter; ++i)
    m.basis.push_back(ops.raising().apply(m.basis.back()));
  for (const ExactVector& v : m.basis)
    internal_check(!v.is_zero(), "raised module basis vectors must be nonzero");
  return m;
}

std::vector<CheckResult> run_module_suite(const OperatorSet& ops, Decomposition* out) {
  const SubspacePoset& poset = ops.poset();
  const Params& p = ops.params();
  const int n = p.n();
  const Rat q = p.q_rat();

  std::vector<CheckResult> results;
  Decomposition dec;

  std::vector<long> observed_mults;
  for (int r = 0; 2 * r <= n; ++r) {
    const auto gens = kernel_generators(ops, r);
    observed_mults.push_back(static_cast<long>(gens.size()));
    for (const ExactVector& w : gens)
      dec.modules.push_back(generate_module(ops, w, r));
    EndpointMultiplicity em;
    em.endpoint = r;
    em.diameter = n - 2 * r;
    em.multiplicity = static_cast<long>(gens.size());
    em.leonard = leonard_params(p, r);
    dec.endpoints.push_back(em);
  }

  results.push_back(timed("modules/kernel_multiplicities", "Lemma 9.5", [&] {
    for (int r = 0; 2 * r <= n; ++r) {
      const long expected = expected_multiplicity(p, r);
      if (observed_mults[r] != expected)
        return std::pair{false, std::optional<std::string>(
                                    "endpoint " + std::to_string(r) + ": kernel dimension " +
                                    std::to_string(observed_mults[r]) + ", expected " +
                                    std::to_string(expected))};
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/prefix_sums", "Lemma 9.6", [&] {
    Rat acc(0);
    for (int i = 0; 2 * i <= n; ++i) {
      acc += Rat(observed_mults[i]);
      const Rat expected = q_binomial(n, i, q);
      if (acc != expected)
        return std::pair{false, std::optional<std::string>(
                                    "prefix sum through endpoint " + std::to_string(i) +
                                    " is " + rat_str(acc) + ", expected " + rat_str(expected))};
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/thin_support", "Lemma 9.2", [&] {
    for (std::size_t m = 0; m < dec.modules.size(); ++m) {
      const TModule& mod = dec.modules[m];
      for (int i = 0; i <= mod.diameter; ++i) {
        if (!block_support_only(poset, mod.basis[i], mod.endpoint + i))
          return std::pair{false, std::optional<std::string>(
                                      module_label(m, mod) + ": basis vector " +
                                      std::to_string(i) +
                                      " is not supported on its dimension block")};
        if (mod.basis[i].is_zero())
          return std::pair{false, std::optional<std::string>(module_label(m, mod) +
                                                             ": basis vector " +
                                                             std::to_string(i) + " is zero")};
      }
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/estar_support", "Section 14", [&] {
    // E*_j W is nonzero exactly for endpoint <= j <= N - endpoint; with thin
    // support verified this reduces to the raised basis hitting each level.
    for (std::size_t m = 0; m < dec.modules.size(); ++m) {
      const TModule& mod = dec.modules[m];
      for (int j = 0; j <= n; ++j) {
        const bool expected = j >= mod.endpoint && j <= n - mod.endpoint;
        bool nonzero = false;
        if (j >= mod.endpoint && j - mod.endpoint <= mod.diameter)
          nonzero = !mod.basis[j - mod.endpoint].is_zero();
        if (nonzero != expected)
          return std::pair{false, std::optional<std::string>(
                                      module_label(m, mod) + ": E*_" + std::to_string(j) +
                                      " support disagrees with the endpoint window")};
      }
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/representation_rl", "Lemma 9.4", [&] {
    for (std::size_t m = 0; m < dec.modules.size(); ++m) {
      const TModule& mod = dec.modules[m];
      const ModuleScalars sc(p, mod.endpoint);
      const auto fail = [&](const std::string& what) {
        return std::pair{false, std::optional<std::string>(module_label(m, mod) + ": " + what)};
      };
      if (!ops.lowering().apply(mod.basis[0]).is_zero())
        return fail("generator is not annihilated by L");
      for (int i = 1; i <= mod.diameter; ++i) {
        const ExactVector got = ops.lowering().apply(mod.basis[i]);
        const ExactVector expect = sc.x(i) * mod.basis[i - 1];
        if (!(got == expect))
          return fail("L R^" + std::to_string(i) + " w differs from x_" + std::to_string(i) +
                      " R^" + std::to_string(i - 1) + " w");
      }
      if (!ops.raising().apply(mod.basis[mod.diameter]).is_zero())
        return fail("R does not annihilate the top basis vector");
      for (int i = 0; i <= mod.diameter; ++i) {
        const ExactVector got = ops.dual_adjacency().apply(mod.basis[i]);
        const ExactVector expect = rat_pow(q, -(mod.endpoint + i)) * mod.basis[i];
        if (!(got == expect)) return fail("A* eigenvalue on level " + std::to_string(i));
      }
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/representation_a", "Prop. 10.4", [&] {
    for (std::size_t m = 0; m < dec.modules.size(); ++m) {
      const TModule& mod = dec.modules[m];
      const ModuleScalars sc(p, mod.endpoint);
      for (int i = 0; i <= mod.diameter; ++i) {
        const ExactVector got = ops.adjacency().apply(mod.basis[i]);
        ExactVector expect = sc.a(i) * mod.basis[i];
        if (i + 1 <= mod.diameter) expect += mod.basis[i + 1];
        if (i >= 1) expect += sc.xi(i) * mod.basis[i - 1];
        if (!(got == expect))
          return std::pair{false, std::optional<std::string>(
                                      module_label(m, mod) + ": A action on level " +
                                      std::to_string(i) + " violates the tridiagonal form")};
      }
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/module_spectra", "Prop. 10.5", [&] {
    for (std::size_t m = 0; m < dec.modules.size(); ++m) {
      const TModule& mod = dec.modules[m];
      const int r = mod.endpoint;
      const int d = mod.diameter;
      const ModuleScalars sc(p, r);
      const ExactMatrix rep = adjacency_representation(sc);
      const auto fail = [&](const std::string& what) {
        return std::pair{false, std::optional<std::string>(module_label(m, mod) + ": " + what)};
      };

      ExactMatrix full = ExactMatrix::identity(d + 1).to_dense();
      for (int i = r; i <= n - r; ++i)
        full = full * (rep - p.theta(i) * ExactMatrix::identity(d + 1));
      if (!full.is_zero()) return fail("theta product does not annihilate the module");

      for (int skip = r; skip <= n - r; ++skip) {
        ExactMatrix partial = ExactMatrix::identity(d + 1).to_dense();
        for (int i = r; i <= n - r; ++i) {
          if (i == skip) continue;
          partial = partial * (rep - p.theta(i) * ExactMatrix::identity(d + 1));
        }
        if (partial.is_zero())
          return fail("spectrum is not tight: dropping theta_" + std::to_string(skip) +
                      " still annihilates");
      }

      // Similarity against the companion tridiagonal matrix B via
      // diag(eta_0..eta_d), eta_i = c_1 ... c_i.
      ExactMatrix b_mat = ExactMatrix::dense(d + 1, d + 1);
      for (int i = 0; i <= d; ++i) {
        b_mat.set(i, i, sc.a(i));
        if (i + 1 <= d) {
          b_mat.set(i + 1, i, sc.c(i + 1));
          b_mat.set(i, i + 1, sc.b(i));
        }
      }
      std::vector<Rat> eta(d + 1, Rat(1));
      for (int i = 1; i <= d; ++i) eta[i] = eta[i - 1] * sc.c(i);
      const ExactMatrix diag_eta = ExactMatrix::diagonal(eta);
      if (!(b_mat * diag_eta == diag_eta * rep))
        return fail("companion similarity B diag(eta) = diag(eta) rep fails");
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/orthogonal_decomposition", "Lemma 9.1", [&] {
    std::size_t total = 0;
    for (const TModule& mod : dec.modules) total += mod.basis.size();
    if (total != ops.size())
      return std::pair{false, std::optional<std::string>(
                                  "module dimensions sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(ops.size()))};
    for (std::size_t m1 = 0; m1 < dec.modules.size(); ++m1)
      for (std::size_t m2 = m1 + 1; m2 < dec.modules.size(); ++m2) {
        const TModule& a = dec.modules[m1];
        const TModule& b = dec.modules[m2];
        for (int i = 0; i <= a.diameter; ++i)
          for (int j = 0; j <= b.diameter; ++j) {
            if (a.endpoint + i != b.endpoint + j) continue;  // disjoint blocks
            if (a.basis[i].dot(b.basis[j]) != 0)
              return std::pair{false, std::optional<std::string>(
                                          module_label(m1, a) + " and " + module_label(m2, b) +
                                          " are not orthogonal at level " +
                                          std::to_string(a.endpoint + i))};
          }
      }
    return std::pair{true, std::optional<std::string>{}};
  }));

  results.push_back(timed("modules/leonard_systems", "Section 14", [&] {
    for (const EndpointMultiplicity& em : dec.endpoints) {
      const int r = em.endpoint;
      const int d = em.diameter;
      const ModuleScalars sc(p, r);
      const auto fail = [&](const std::string& what) {
        return std::pair{false,
                         std::optional<std::string>("endpoint " + std::to_string(r) + ": " + what)};
      };
      // leonard_params re-checks the eigenvalue recurrence internally.
      const LeonardParams lp = leonard_params(p, r);
      if (lp.h_star != lp.theta_star0) return fail("h* and theta*_0 disagree");
      if (d == 0) continue;  // irreducibility conditions are vacuous

      // First tridiagonal pattern: the adjacency action on the raised basis.
      for (int i = 1; i <= d; ++i)
        if (sc.xi(i) == 0) return fail("superdiagonal xi_" + std::to_string(i) + " vanishes");

      // Second pattern: the dual adjacency action on an eigenbasis of the
      // adjacency representation must be irreducible tridiagonal.
      const ExactMatrix rep = adjacency_representation(sc);
      std::vector<ExactVector> eigvecs;
      for (int i = 0; i <= d; ++i) {
        const auto basis =
            nullspace(rep - p.theta(r + i) * ExactMatrix::identity(d + 1));
        if (basis.size() != 1)
          return fail("eigenspace of theta_" + std::to_string(r + i) +
                      " on the module is not one-dimensional");
        eigvecs.push_back(basis[0]);
      }
      const ExactMatrix s_mat = ExactMatrix::from_cols(eigvecs);
      std::vector<Rat> dual_diag(d + 1);
      for (int i = 0; i <= d; ++i) dual_diag[i] = rat_pow(q, -(r + i));
      const ExactMatrix dual_rep =
          inverse(s_mat) * (ExactMatrix::diagonal(dual_diag) * s_mat);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          const int gap = i > j ? i - j : j - i;
          if (gap > 1 && dual_rep.at(i, j) != 0)
            return fail("dual action is not tridiagonal on the eigenbasis");
          if (gap == 1 && dual_rep.at(i, j) == 0)
            return fail("dual tridiagonal pattern is reducible");
        }
    }
    return std::pair{true, std::optional<std::string>{}};
  }));

  if (out) *out = std::move(dec);
  return results;
}

Decomposition decompose(const OperatorSet& ops) {
  Decomposition dec;
  const auto results = run_module_suite(ops, &dec);
  for (const CheckResult& r : results)
    if (!r.passed)
      throw std::logic_error("module decomposition check failed: " + r.id +
                             (r.witness ? " (" + *r.witness + ")" : ""));
  return dec;
}

}  // namespace lnq
