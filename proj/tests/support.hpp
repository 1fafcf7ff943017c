#pragma once

#include <set>
#include <string>
#include <vector>

#include "hgroup.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Table table_of(const hgroup::FiniteGroup& g) {
  return oracle::flat_to_table(g.table(), g.order(), g.order());
}

inline oracle::Raw to_raw(const hgroup::HypergroupData& d) {
  const std::size_t m = d.base_size(), h = d.group.order();
  return {m, h, table_of(d.group), oracle::flat_to_table(d.phi, m, h),
          oracle::flat_to_table(d.psi, m, h), oracle::flat_to_table(d.xi, m, m),
          oracle::flat_to_table(d.lam, m, m)};
}

inline std::set<std::string> failed_names(const hgroup::AxiomReport& r) {
  std::set<std::string> out;
  for (auto a : r.failed_axioms()) out.insert(hgroup::to_string(a));
  return out;
}

/// Restricts an oracle result to P1..P4 and A1..A5.
inline std::set<std::string> defining_only(const std::set<std::string>& names) {
  std::set<std::string> out;
  for (hgroup::Axiom a : hgroup::kDefiningAxioms)
    if (names.count(hgroup::to_string(a))) out.insert(hgroup::to_string(a));
  return out;
}

inline hgroup::Index z4_index_of(const hgroup::GroupTriple& t, hgroup::Index element) {
  return *t.transversal_position(element);
}

}  // namespace support
