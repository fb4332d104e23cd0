#include "trimoduli/moduli.hpp"

namespace trimoduli {

auto to_string(ModuliRegion region) -> std::string_view {
  switch (region) {
  case ModuliRegion::ObtuseAll: return "obtuse";
  case ModuliRegion::Acute: return "acute";
  case ModuliRegion::Full: return "full";
  }
  return "unknown";
}

auto region_contains(ModuliRegion region, const SimilarityKey &k) -> bool {
  switch (region) {
  case ModuliRegion::ObtuseAll: return classify_angle(k) == AngleClass::Obtuse;
  case ModuliRegion::Acute: return classify_angle(k) == AngleClass::Acute;
  case ModuliRegion::Full: return true;
  }
  return false;
}

auto uniform_target(ModuliRegion region) -> double {
  // Numerator and denominator are both taken on the labeled space.
  const double obtuse = obtuse_region_measure() / measure_teich();
  switch (region) {
  case ModuliRegion::ObtuseAll: return obtuse;
  case ModuliRegion::Acute: return 1.0 - obtuse;
  case ModuliRegion::Full: return 1.0;
  }
  return 0.0;
}

auto WeightedShapeSet::from_entries(std::vector<Entry> entries) -> WeightedShapeSet {
  std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.key < y.key; });
  WeightedShapeSet set;
  set.entries_.reserve(entries.size());
  for (const Entry &e : entries) {
    if (e.weight == 0) throw GuardError("weighted set: zero weight");
    if (!set.entries_.empty() && set.entries_.back().key == e.key)
      set.entries_.back().weight += e.weight;
    else
      set.entries_.push_back(e);
    set.total_ += e.weight;
  }
  return set;
}

auto WeightedShapeSet::weight_of(const SimilarityKey &k) const -> std::uint64_t {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const Entry &e, const SimilarityKey &key) { return e.key < key; });
  return it != entries_.end() && it->key == k ? it->weight : 0;
}

auto dirac_ratio(const WeightedShapeSet &s, ModuliRegion region) -> double {
  if (s.empty()) throw GuardError("dirac_ratio: empty weighted set");
  std::uint64_t inside = 0;
  for (const auto &e : s.entries())
    if (region_contains(region, e.key)) inside += e.weight;
  return static_cast<double>(inside) / static_cast<double>(s.total_weight());
}

} // namespace trimoduli
