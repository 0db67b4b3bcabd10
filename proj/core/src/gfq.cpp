#include "lnq/gfq.hpp"

#include <stdexcept>
#include <string>

#include "lnq/rational.hpp"

namespace lnq {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), constant first

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + 1ull * a[i] * b[j]) % p);
  }
  return out;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, long p) {
  const int dm = degree(m);
  for (int df = degree(f); df >= dm; df = degree(f)) {
    const std::uint32_t lead = f[df];
    for (int i = 0; i <= dm; ++i) {
      const long t = (static_cast<long>(f[df - dm + i]) -
                      static_cast<long>(lead) * m[i]) % p;
      f[df - dm + i] = static_cast<std::uint32_t>((t + 1ll * p * p) % p);
    }
  }
  f.resize(dm > 0 ? dm : 1, 0);
  return f;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

// Irreducibility over GF(p) by trial division: a composite of degree k has a
// monic factor of degree <= k/2.
bool is_irreducible(const Poly& f, long p) {
  const int k = degree(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    // every monic polynomial of degree d
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long m = 0; m < count; ++m) {
      Poly g(d + 1, 0);
      long rem = m;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rem % p);
        rem /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(long p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
  if (k < 1) throw std::invalid_argument("FieldCtx: k must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > (1l << 30)) throw std::invalid_argument("FieldCtx: q too large");
  }

  // Smallest monic irreducible modulus in lexicographic order on the tuple
  // (c_0, ..., c_{k-1}); the loop below enumerates those tuples in order.
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  bool found = false;
  for (long m = 0; m < q_ && !found; ++m) {
    Poly cand(k + 1, 0);
    cand[k] = 1;
    long rem = m;
    for (int i = k - 1; i >= 0; --i) {
      cand[i] = static_cast<std::uint32_t>(rem % p);
      rem /= p;
    }
    if (is_irreducible(cand, p)) {
      modulus_ = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("FieldCtx: no irreducible modulus found");

  if (q_ <= (1l << 16) && q_ > 2) {
    // Build log/antilog tables from a multiplicative generator.
    for (long g = 2; g < q_ && !tables_; ++g) {
      std::vector<std::uint32_t> powers;
      powers.reserve(q_ - 1);
      FieldElt acc = one();
      const FieldElt gen{static_cast<std::uint32_t>(g)};
      bool generator = true;
      for (long i = 0; i < q_ - 1; ++i) {
        powers.push_back(acc.v);
        acc = mul_direct(acc, gen);
        if (acc.v == 1 && i + 1 < q_ - 1) {  // order divides i+1 < q-1
          generator = false;
          break;
        }
      }
      if (generator && acc.v == 1) {
        exp_table_ = std::move(powers);
        log_table_.assign(q_, -1);
        for (long i = 0; i < q_ - 1; ++i)
          log_table_[exp_table_[i]] = static_cast<std::int32_t>(i);
        tables_ = true;
      }
    }
    internal_check(tables_, "multiplicative generator must exist for GF(q)");
  }
}

FieldElt FieldCtx::element(std::uint32_t value) const {
  if (value >= static_cast<std::uint64_t>(q_))
    throw std::out_of_range("FieldCtx::element: value out of range");
  return {value};
}

FieldElt FieldCtx::add(FieldElt a, FieldElt b) const {
  std::uint32_t out = 0, mult = 1;
  std::uint32_t av = a.v, bv = b.v;
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t digit =
        static_cast<std::uint32_t>((av % p_ + bv % p_) % p_);
    out += digit * mult;
    av /= static_cast<std::uint32_t>(p_);
    bv /= static_cast<std::uint32_t>(p_);
    mult *= static_cast<std::uint32_t>(p_);
  }
  return {out};
}

FieldElt FieldCtx::neg(FieldElt a) const {
  std::uint32_t out = 0, mult = 1;
  std::uint32_t av = a.v;
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t digit = static_cast<std::uint32_t>((p_ - av % p_) % p_);
    out += digit * mult;
    av /= static_cast<std::uint32_t>(p_);
    mult *= static_cast<std::uint32_t>(p_);
  }
  return {out};
}

FieldElt FieldCtx::sub(FieldElt a, FieldElt b) const { return add(a, neg(b)); }

FieldElt FieldCtx::mul_direct(FieldElt a, FieldElt b) const {
  Poly fa(k_, 0), fb(k_, 0);
  std::uint32_t av = a.v, bv = b.v;
  for (int i = 0; i < k_; ++i) {
    fa[i] = av % p_;
    fb[i] = bv % p_;
    av /= static_cast<std::uint32_t>(p_);
    bv /= static_cast<std::uint32_t>(p_);
  }
  const Poly prod = poly_mod(poly_mul(fa, fb, p_), modulus_, p_);
  std::uint32_t out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += (i < static_cast<int>(prod.size()) ? prod[i] : 0) * mult;
    mult *= static_cast<std::uint32_t>(p_);
  }
  return {out};
}

FieldElt FieldCtx::mul(FieldElt a, FieldElt b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (tables_) {
    const long e = (log_table_[a.v] + log_table_[b.v]) % (q_ - 1);
    return {exp_table_[e]};
  }
  return mul_direct(a, b);
}

FieldElt FieldCtx::inv(FieldElt a) const {
  if (a.v == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
  if (tables_) {
    const long e = (q_ - 1 - log_table_[a.v]) % (q_ - 1);
    return {exp_table_[e]};
  }
  // a^(q-2) by square-and-multiply
  FieldElt out = one(), base = a;
  long e = q_ - 2;
  while (e > 0) {
    if (e & 1) out = mul_direct(out, base);
    base = mul_direct(base, base);
    e >>= 1;
  }
  return out;
}

}  // namespace lnq
