#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lnq/operators.hpp"

namespace lnq {

// One verified identity. Every check is exact: a single differing entry
// fails it and is reported as the witness. Passing nonzero-ness claims also
// carry a witness, the located certificate entry.
struct CheckResult {
  std::string id;
  std::string paper_anchor;
  bool passed = false;
  std::optional<std::string> witness;
  std::int64_t elapsed_us = 0;
};

// Render "#12(dim 2)" for witness strings.
std::string vertex_label(const SubspacePoset& poset, std::size_t index);

// Equality / zero / nonzero primitives shared by all suites.
CheckResult check_equal(const SubspacePoset& poset, std::string id, std::string anchor,
                        const ExactMatrix& got, const ExactMatrix& expected);
CheckResult check_zero(const SubspacePoset& poset, std::string id, std::string anchor,
                       const ExactMatrix& m);
CheckResult check_nonzero(const SubspacePoset& poset, std::string id, std::string anchor,
                          const ExactMatrix& m);

// Lemma 4.2 / Eqs. (5.2)-(5.3) / Lemma 6.4 / Lemma 6.6 / Lemmas 7.4-7.6:
// the projector algebra, the A*-E* reconstruction identities, the
// raising/lowering shift relations, and the subconstituent relations tying
// A*, R, L and A together.
std::vector<CheckResult> check_subconstituent(const OperatorSet& ops);

// Eq. (8.2): the q-Serre relation in A*, A.
std::vector<CheckResult> check_qserre(const OperatorSet& ops);

// Eq. (8.10): the dual tridiagonal relation with scalar rho from Eq. (8.3).
std::vector<CheckResult> check_tridiagonal(const OperatorSet& ops);

// Eqs. (8.6)-(8.9) and (15.1)-(15.4): the two square-root-free equitable
// presentations carried by A^+/A^- and A_+/A_-.
std::vector<CheckResult> check_uq_relations(const OperatorSet& ops);

// Lemma 10.1 / Prop. 10.8 / Lemmas 11.2-11.3: symmetrizability, the minimal
// polynomial of A with the theta spectrum, and the primitive idempotent
// algebra with eigenspace dimensions.
std::vector<CheckResult> check_diagonalizability(const OperatorSet& ops);

// Eq. (12.1) / Theorem 12.8: the dual block-tridiagonal pattern of A* on the
// eigenspaces of A, and the dual adjacency certificate.
std::vector<CheckResult> check_qpoly(const OperatorSet& ops);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace lnq
