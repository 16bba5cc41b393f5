#include <algorithm>
#include <set>

#include "chomp/analysis.hpp"
#include "chomp/oracle.hpp"

namespace chomp::analysis {

std::uint64_t triple_universe_size(int n_max) {
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; a <= static_cast<std::uint64_t>(n_max); ++a) total += (a + 1) * (a + 2) / 2;
  return total;
}

std::vector<LabeledTriple> triple_universe(const TripleIndex& index) {
  std::vector<LabeledTriple> out;
  out.reserve(triple_universe_size(index.n_max()));
  const auto ext = index.triples();
  std::size_t next = 0;
  for (int a = 1; a <= index.n_max(); ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        // Both sequences are ascending, so one merge pass labels everything.
        const bool hit = next < ext.size() && ext[next] == Triple{a, b, c};
        if (hit) ++next;
        out.push_back(LabeledTriple{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                    static_cast<std::uint16_t>(c), hit});
      }
    }
  }
  return out;
}

std::vector<Triple> extending_triples(const TripleIndex& index) {
  return std::vector<Triple>(index.triples().begin(), index.triples().end());
}

ExtensionAudit audit_unique_extension(const TripleIndex& index, std::optional<int> three_row_bound) {
  ExtensionAudit audit;
  audit.n_max = index.n_max();
  audit.triples_total = triple_universe_size(index.n_max());
  audit.triples_extending = index.triple_count();
  for (std::size_t i = 0; i < index.triple_count(); ++i) {
    const std::size_t m = index.extensions_at(i).size();
    audit.max_multiplicity = std::max(audit.max_multiplicity, m);
    if (m >= 2) audit.violations.push_back(index.triples()[i]);
  }
  audit.fraction = audit.triples_total ? static_cast<double>(audit.triples_extending) / audit.triples_total : 0.0;

  const int bound = three_row_bound.value_or(std::min(index.n_max(), 50));
  if (bound <= 0) return audit;
  audit.three_row_bound = std::min(bound, index.n_max());

  std::set<Triple> three_row_p;
  for (const Position& p : oracle::oracle_pset(audit.three_row_bound, 3)) three_row_p.insert(Triple{p[0], p[1], p[2]});
  audit.three_row_p_count = three_row_p.size();
  for (const Triple& t : three_row_p) {
    if (!index.contains(t.a, t.b, t.c)) audit.three_row_not_extending.push_back(t);
  }
  for (const Triple& t : index.triples()) {
    if (t.a > audit.three_row_bound) break;
    ++audit.extending_within_bound;
    if (!three_row_p.count(t)) ++audit.extending_three_row_n;
  }
  return audit;
}

}  // namespace chomp::analysis
