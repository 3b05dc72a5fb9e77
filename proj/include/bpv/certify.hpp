#pragma once

#include <string>
#include <vector>

#include "bpv/invariants.hpp"
#include "bpv/jet.hpp"

namespace bpv {

struct IdentityRecord {
  std::string id;
  unsigned seed = 0;  ///< seed of the field the point belongs to
  SpacetimePoint point;
  double residual = 0.0;
};

struct IdentitySummary {
  std::vector<IdentityRecord> records;
  /// Points where the identity's domain condition failed or the difference
  /// stencil crossed psi_x = 0; these are not counted as passes.
  int skipped = 0;
  double max_residual = 0.0;
};

/// Each identity at `points` random points of `fields` random fields. Field k
/// and its points are drawn from a generator seeded with seed + k; psi_x
/// keeps one sign per field, alternating between fields.
IdentitySummary certify_identities(const std::vector<std::string>& ids, unsigned seed, int fields, int points,
                                   const FdOptions& opt = {});

struct InvarianceRecord {
  unsigned seed = 0;  ///< field seed
  int element = 0;    ///< group element index for that field
  MultiIndex worst;   ///< index with the largest residual
  double residual = 0.0;  ///< max over indices of |I(g.z) - I(z)| / (1 + |I(z)|)
};

/// Invariance of every non-phantom I_a, |a| <= max_order, under `elements`
/// random group elements per field, for `fields` random fields.
std::vector<InvarianceRecord> certify_invariance(unsigned seed, int fields, int elements, int max_order = 4);

void write_identity_csv(const std::string& path, const std::vector<IdentityRecord>& rows);
void write_invariance_csv(const std::string& path, const std::vector<InvarianceRecord>& rows);

}  // namespace bpv
