#pragma once

#include <array>
#include <string>
#include <vector>

#include "lnq/relcheck.hpp"

namespace lnq {

// The four split bases come from q-exponentials of a nilpotent operator
// applied to the standard basis: lowering for the "down" pair, raising
// composed with the dual adjacency matrix for the "up" pair, with phi twists
// distinguishing the second member of each pair.
enum class SplitVariant { kDownDown, kUpDown, kDownUp, kUpUp };

constexpr std::array<SplitVariant, 4> kSplitVariants = {
    SplitVariant::kDownDown, SplitVariant::kUpDown, SplitVariant::kDownUp,
    SplitVariant::kUpUp};

std::string variant_tag(SplitVariant v);  // "dd", "ud", "du", "uu"

// Truncated q-exponential series applied to a vector. plus_mode selects the
// q^{i(i-1)/2}/[i]!_q coefficients; otherwise 1/[i]!_q. The series is cut at
// i = n after checking that one more application of op annihilates v.
ExactVector q_exp_apply(const ExactMatrix& op, const ExactVector& v, bool plus_mode,
                        int n, const Rat& q);

// op^{n+1} must vanish identically; throws std::domain_error otherwise.
void verify_nilpotency(const ExactMatrix& op, int n);

// Split vector of one vertex: evaluates both the series form and the order-
// theoretic closed form and requires exact agreement.
ExactVector split_vector(const OperatorSet& ops, std::size_t vertex, SplitVariant v);

struct SplitBasis {
  SplitVariant variant = SplitVariant::kDownDown;
  std::vector<ExactVector> vectors;  // indexed by vertex in canonical order
  bool upper_triangular = false;     // orientation of the change-of-basis matrix
};

// All |X| split vectors with the triangularity/unit-diagonal certificate.
SplitBasis build_split_basis(const OperatorSet& ops, SplitVariant v);

struct SplitDecomposition {
  SplitVariant variant = SplitVariant::kDownDown;
  // levels[i] spans the q^i/(q-1) eigenspace of the variant operator.
  std::vector<std::vector<ExactVector>> levels;
};

SplitDecomposition build_decomposition(const OperatorSet& ops, const SplitBasis& basis);

struct SplitSummary {
  std::vector<std::pair<std::string, std::vector<long>>> level_dims;  // tag -> dims
};

// The full split suite: series/closed-form agreement, basis triangularity,
// the four action tables, eigenspace dimensions, directness, shift
// inclusions, the triple sum equalities, and the intersection
// characterization of every level.
std::vector<CheckResult> run_split_suite(const OperatorSet& ops, SplitSummary* out);

}  // namespace lnq
