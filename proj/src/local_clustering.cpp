#include "loclu/local_clustering.hpp"

#include <algorithm>

#include "loclu/errors.hpp"

namespace loclu {

CandidateSet local_clustering(const CandidateSet& candidates, const AttributeMatrix& attrs,
                              std::size_t attribute, const DipConfig& cfg) {
  cfg.validate();
  if (attribute >= attrs.cols) throw InvalidInput("local_clustering: attribute out of range");
  if (candidates.members.empty()) throw InvalidInput("local_clustering: empty candidate set");
  for (std::size_t i = 0; i < candidates.members.size(); ++i) {
    if (candidates.members[i] >= attrs.rows)
      throw InvalidInput("local_clustering: member id out of range");
    if (i > 0 && candidates.members[i] <= candidates.members[i - 1])
      throw InvalidInput("local_clustering: members must be sorted and unique");
  }
  if (!std::binary_search(candidates.members.begin(), candidates.members.end(),
                          candidates.seed_id))
    throw InvalidInput("local_clustering: seed not in candidate set");

  const double seed_value = attrs.at(candidates.seed_id, attribute);
  std::vector<std::uint32_t> members = candidates.members;

  while (true) {
    const DipResult r = dip_test(attrs.gather_column(members, attribute), cfg);
    if (*r.p_value > cfg.alpha) break;

    std::vector<std::uint32_t> kept;
    kept.reserve(members.size());
    if (seed_value < r.modal_low) {
      for (std::uint32_t m : members)
        if (attrs.at(m, attribute) < r.modal_low) kept.push_back(m);
    } else if (seed_value > r.modal_high) {
      for (std::uint32_t m : members)
        if (attrs.at(m, attribute) > r.modal_high) kept.push_back(m);
    } else {
      for (std::uint32_t m : members) {
        const double x = attrs.at(m, attribute);
        if (x >= r.modal_low && x <= r.modal_high) kept.push_back(m);
      }
    }
    if (kept.size() == members.size()) break;  // stalled shrink; forced stop
    members = std::move(kept);
  }
  return {std::move(members), candidates.seed_id};
}

}  // namespace loclu
