#pragma once

#include <vector>

#include "lnq/relcheck.hpp"

namespace lnq {

// An irreducible module of the subconstituent algebra, generated by raising
// a kernel vector: basis (w, Rw, ..., R^d w) with w in ker L intersect
// E*_r V and d = N - 2r. Basis vector i is supported on the dim-(r+i) block.
struct TModule {
  int endpoint = 0;
  int diameter = 0;
  std::vector<ExactVector> basis;
};

struct EndpointMultiplicity {
  int endpoint = 0;
  int diameter = 0;
  long multiplicity = 0;
  LeonardParams leonard;
};

struct Decomposition {
  std::vector<TModule> modules;  // grouped by endpoint, ascending
  std::vector<EndpointMultiplicity> endpoints;
};

// Orthogonal (not normalized) basis of ker L intersect E*_r V, obtained by
// fraction-free Gram-Schmidt on the nullspace basis. Its size realizes the
// endpoint multiplicity.
std::vector<ExactVector> kernel_generators(const OperatorSet& ops, int endpoint);

// Raise a kernel generator into a full module basis. Raising only; the
// representation identities are verified by the suite below.
TModule generate_module(const OperatorSet& ops, const ExactVector& w, int endpoint);

// Kernel multiplicities, module generation, the R/L/A*/A representation
// checks, per-module spectra with the companion-matrix similarity, the
// orthogonal direct-sum invariants, and the Leonard system records.
// Populates *out when non-null.
std::vector<CheckResult> run_module_suite(const OperatorSet& ops, Decomposition* out);

// Convenience wrapper used by tests: build the decomposition, throwing
// std::logic_error if any module-suite check fails.
Decomposition decompose(const OperatorSet& ops);

}  // namespace lnq
