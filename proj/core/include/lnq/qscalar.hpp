#pragma once

#include <vector>

#include "lnq/rational.hpp"

namespace lnq {

struct PrimePower {
  long p = 0;
  int k = 0;
};

// Factors q as p^k with p prime, k >= 1. Throws std::invalid_argument when q
// is not a prime power >= 2.
PrimePower factor_prime_power(long q);

// [n]_q = (q^n - 1)/(q - 1). q may be any rational != 1.
Rat q_int(long n, const Rat& q);

// [n]!_q = [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1.
Rat q_factorial(long n, const Rat& q);

// Gaussian binomial coefficient; for integer q the result is checked to be a
// positive integer.
Rat q_binomial(long n, long i, const Rat& q);

// The parameter triple of the verification run: the rank N of the subspace
// lattice, the field size q, and the positive weight phi used to build the
// weighted adjacency matrix.
class Params {
 public:
  Params(int n, long q, Rat phi);

  int n() const { return n_; }
  long q() const { return q_; }
  const Rat& phi() const { return phi_; }
  long p() const { return p_; }
  int k() const { return k_; }

  Rat q_rat() const { return Rat(q_); }
  Rat beta() const;  // q + q^{-1}
  Rat rho() const;   // phi q^{N-2} (q+1)^2

  // theta_i = (phi q^{N-i} - q^i)/(q - 1), 0 <= i <= N.
  Rat theta(int i) const;
  // theta*_i = q^{-i}, 0 <= i <= N.
  Rat theta_star(int i) const;

  std::vector<Rat> theta_seq() const;
  // The theta sequence is pairwise distinct for every positive phi; checked
  // on construction.
  bool thetas_distinct() const;

 private:
  int n_;
  long q_;
  Rat phi_;
  long p_;
  int k_;
};

// Scalar families attached to an irreducible module of endpoint r and
// diameter d = N - 2r: x_i (LR eigenvalue ladder), a_i (diagonal), xi_i
// (superdiagonal of the adjacency action), and the c_i/b_i entries of the
// companion tridiagonal matrix B.
class ModuleScalars {
 public:
  ModuleScalars(const Params& params, int endpoint);

  int endpoint() const { return r_; }
  int diameter() const { return d_; }

  Rat x(int i) const;   // 1 <= i <= d
  Rat a(int i) const;   // 0 <= i <= d
  Rat xi(int i) const;  // 1 <= i <= d; equals c(i) * b(i-1), checked
  Rat c(int i) const;   // 1 <= i <= d
  Rat b(int i) const;   // 0 <= i <= d-1

 private:
  Params params_;
  int r_;
  int d_;
};

// Parameter record of the Leonard system living on an endpoint-r module
// (dual q-Krawtchouk type).
struct LeonardParams {
  int d = 0;
  Rat h, h_star, s, theta0, theta_star0;
};

// Computes the record and checks the eigenvalue recurrence
// theta_i(Phi) = theta_0(Phi) + h (1 - q^i)(1 - s q^{i+1}) q^{-i} = theta_{i+r}
// for 0 <= i <= d.
LeonardParams leonard_params(const Params& params, int endpoint);

}  // namespace lnq
