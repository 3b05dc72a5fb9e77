#include "bpv/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bpv/csv.hpp"
#include "bpv/errors.hpp"
#include "bpv/sampling.hpp"

namespace bpv {

IdentitySummary certify_identities(const std::vector<std::string>& ids, unsigned seed, int fields, int points,
                                   const FdOptions& opt) {
  IdentitySummary out;
  for (int k = 0; k < fields; ++k) {
    const unsigned fs = seed + static_cast<unsigned>(k);
    std::mt19937_64 rng(fs);
    const AnalyticField field = random_analytic_field(rng, 4, k % 2 == 1);
    for (int q = 0; q < points; ++q) {
      const SpacetimePoint p = random_point(rng);
      for (const std::string& id : ids) {
        try {
          const double r = check_syzygy(id, field, p, opt);
          out.records.push_back({id, fs, p, r});
          out.max_residual = std::max(out.max_residual, r);
        } catch (const DomainError&) {
          ++out.skipped;
        } catch (const StencilCrossingError&) {
          ++out.skipped;
        }
      }
    }
  }
  return out;
}

std::vector<InvarianceRecord> certify_invariance(unsigned seed, int fields, int elements, int max_order) {
  const std::vector<MultiIndex> idx = invariant_indices(max_order);
  std::vector<InvarianceRecord> out;
  out.reserve(static_cast<std::size_t>(fields) * elements);
  for (int k = 0; k < fields; ++k) {
    const unsigned fs = seed + static_cast<unsigned>(k);
    std::mt19937_64 rng(fs);
    const AnalyticField field = random_analytic_field(rng, 4, k % 2 == 1);
    for (int e = 0; e < elements; ++e) {
      const Jet z = analytic_jet(field, random_point(rng), max_order);
      const Jet w = prolong_action(random_group_element(rng), z);
      InvarianceRecord rec{fs, e, idx.front(), 0.0};
      for (const MultiIndex& a : idx) {
        const double i0 = normalized_invariant(z, a);
        const double r = std::abs(normalized_invariant(w, a) - i0) / (1.0 + std::abs(i0));
        if (!(r <= rec.residual)) {  // NaN propagates as a failure
          rec.residual = r;
          rec.worst = a;
        }
      }
      out.push_back(rec);
    }
  }
  return out;
}

void write_identity_csv(const std::string& path, const std::vector<IdentityRecord>& rows) {
  CsvWriter csv(path, {"identity", "seed", "t", "x", "y", "residual"});
  for (const IdentityRecord& r : rows) {
    csv.cell(r.id).cell(static_cast<long>(r.seed)).cell(r.point.t).cell(r.point.x).cell(r.point.y).cell(r.residual);
    csv.end_row();
  }
}

void write_invariance_csv(const std::string& path, const std::vector<InvarianceRecord>& rows) {
  CsvWriter csv(path, {"seed", "element", "worst_index", "residual"});
  for (const InvarianceRecord& r : rows) {
    csv.cell(static_cast<long>(r.seed)).cell(static_cast<long>(r.element)).cell("I" + r.worst.str()).cell(r.residual);
    csv.end_row();
  }
}

}  // namespace bpv
