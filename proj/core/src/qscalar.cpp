#include "lnq/qscalar.hpp"

#include <stdexcept>
#include <string>

namespace lnq {

PrimePower factor_prime_power(long q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  int k = 0;
  long m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

Rat q_int(long n, const Rat& q) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  if (q == 1) throw std::invalid_argument("q_int: q = 1 is rejected");
  Rat num = rat_pow(q, n) - 1;
  return num / (q - 1);
}

Rat q_factorial(long n, const Rat& q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  Rat out(1);
  for (long i = 1; i <= n; ++i) out *= q_int(i, q);
  return out;
}

Rat q_binomial(long n, long i, const Rat& q) {
  if (n < 0 || i < 0 || i > n)
    throw std::invalid_argument("q_binomial: need 0 <= i <= n");
  Rat out = q_factorial(n, q) / (q_factorial(i, q) * q_factorial(n - i, q));
  if (rat_is_integer(q))
    internal_check(rat_is_integer(out) && out > 0,
                   "q-binomial must be a positive integer for integer q");
  return out;
}

Params::Params(int n, long q, Rat phi) : n_(n), q_(q), phi_(std::move(phi)) {
  if (n_ < 1) throw std::invalid_argument("Params: n must be >= 1");
  const PrimePower pp = factor_prime_power(q_);
  p_ = pp.p;
  k_ = pp.k;
  if (phi_ <= 0) throw std::invalid_argument("Params: phi must be positive");
  internal_check(thetas_distinct(), "theta sequence must be pairwise distinct");
}

Rat Params::beta() const { return Rat(q_) + Rat(1, q_); }

Rat Params::rho() const {
  return phi_ * rat_pow(Rat(q_), n_ - 2) * Rat((q_ + 1) * (q_ + 1));
}

Rat Params::theta(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("theta: index out of range");
  return (phi_ * rat_pow(Rat(q_), n_ - i) - rat_pow(Rat(q_), i)) / Rat(q_ - 1);
}

Rat Params::theta_star(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("theta_star: index out of range");
  return rat_pow(Rat(q_), -i);
}

std::vector<Rat> Params::theta_seq() const {
  std::vector<Rat> out;
  out.reserve(n_ + 1);
  for (int i = 0; i <= n_; ++i) out.push_back(theta(i));
  return out;
}

bool Params::thetas_distinct() const {
  const auto seq = theta_seq();
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return false;
  return true;
}

ModuleScalars::ModuleScalars(const Params& params, int endpoint)
    : params_(params), r_(endpoint), d_(params.n() - 2 * endpoint) {
  if (endpoint < 0 || 2 * endpoint > params.n())
    throw std::out_of_range("ModuleScalars: endpoint out of range");
}

Rat ModuleScalars::x(int i) const {
  if (i < 1 || i > d_) throw std::out_of_range("ModuleScalars::x: index out of range");
  const Rat q = params_.q_rat();
  const long n = params_.n();
  return rat_pow(q, 1 - i) * (rat_pow(q, i) - 1) / (q - 1) *
         (rat_pow(q, n - r_) - rat_pow(q, i + r_ - 1)) / (q - 1);
}

Rat ModuleScalars::a(int i) const {
  if (i < 0 || i > d_) throw std::out_of_range("ModuleScalars::a: index out of range");
  const Rat q = params_.q_rat();
  return (params_.phi() - 1) / (q - 1) * rat_pow(q, i + r_);
}

Rat ModuleScalars::xi(int i) const {
  if (i < 1 || i > d_) throw std::out_of_range("ModuleScalars::xi: index out of range");
  const Rat out = params_.phi() * rat_pow(params_.q_rat(), r_ + i - 1) * x(i);
  internal_check(out == c(i) * b(i - 1), "xi_i must equal c_i * b_{i-1}");
  return out;
}

Rat ModuleScalars::c(int i) const {
  if (i < 1 || i > d_) throw std::out_of_range("ModuleScalars::c: index out of range");
  const Rat q = params_.q_rat();
  return rat_pow(q, r_) * (rat_pow(q, i) - 1) / (q - 1);
}

Rat ModuleScalars::b(int i) const {
  if (i < 0 || i > d_ - 1) throw std::out_of_range("ModuleScalars::b: index out of range");
  const Rat q = params_.q_rat();
  return params_.phi() * (rat_pow(q, params_.n() - r_) - rat_pow(q, i + r_)) / (q - 1);
}

LeonardParams leonard_params(const Params& params, int endpoint) {
  if (endpoint < 0 || 2 * endpoint > params.n())
    throw std::out_of_range("leonard_params: endpoint out of range");
  const Rat q = params.q_rat();
  const long n = params.n();
  const int r = endpoint;
  LeonardParams out;
  out.d = params.n() - 2 * r;
  out.h = params.phi() * rat_pow(q, n - r) / (q - 1);
  out.h_star = rat_pow(q, -r);
  out.s = -rat_pow(q, 2 * r - n - 1) / params.phi();
  out.theta0 = (params.phi() * rat_pow(q, n - r) - rat_pow(q, r)) / (q - 1);
  out.theta_star0 = rat_pow(q, -r);
  for (int i = 0; i <= out.d; ++i) {
    const Rat lhs = out.theta0 + out.h * (1 - rat_pow(q, i)) *
                                     (1 - out.s * rat_pow(q, i + 1)) * rat_pow(q, -i);
    internal_check(lhs == params.theta(i + r),
                   "Leonard eigenvalue recurrence must reproduce theta_{i+r}");
  }
  return out;
}

}  // namespace lnq
