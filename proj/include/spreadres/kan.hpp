#pragma once

// Aligned grid inclusions, their floor retractions, and the induced functors
// between representations of the two grids.

#include <vector>

#include "spreadres/rep.hpp"

namespace spreadres {

struct OutsideImageUpset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A product of strictly increasing maps between the chain factors of two grids.
class AlignedGridInclusion {
public:
  /// factor_maps[j][i] is the image of coordinate i on factor j. Throws
  /// std::invalid_argument unless both posets are grids of equal dimension and
  /// every factor map is strictly increasing into range.
  AlignedGridInclusion(PosetPtr source, PosetPtr target, std::vector<std::vector<int>> factor_maps);

  static AlignedGridInclusion identity(const PosetPtr& grid);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const PosetPtr& source_ptr() const { return source_; }
  const PosetPtr& target_ptr() const { return target_; }
  const std::vector<std::vector<int>>& factor_maps() const { return maps_; }
  bool origin_aligned() const;

  Elem map(Elem q) const { return image_of_[static_cast<std::size_t>(q)]; }
  const std::vector<Elem>& image_table() const { return image_of_; }
  Subset image() const { return image_; }
  Subset image_upset() const { return upset_; }

  /// Join of all q with map(q) <= p. Throws OutsideImageUpset off the upset of the image.
  Elem floor(Elem p) const;
  Subset floor_of(Subset s) const;
  Subset map_of(Subset s) const;

private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<std::vector<int>> maps_;
  std::vector<Elem> image_of_;
  std::vector<Elem> floor_of_;  // -1 outside the upset of the image
  Subset image_;
  Subset upset_;
};

/// Precomposition with floor on the upset of the image, zero elsewhere.
RepPtr lan(const AlignedGridInclusion& i, const Representation& m);
RepMorphism lan(const AlignedGridInclusion& i, const RepMorphism& f, const RepPtr& lan_source, const RepPtr& lan_target);

/// Extension by zero from the full subposet on an upset.
RepPtr padding(const PosetPtr& p, const InducedSubposet& upset, const Representation& m);

/// Left adjoint of lan: (C M)(q) = colim of M over { p : floor(p) <= q }.
/// Throws OutsideImageUpset if M is supported outside the upset of the image.
RepPtr contraction(const AlignedGridInclusion& i, const Representation& m);

/// Restriction along the inclusion.
RepPtr restriction(const AlignedGridInclusion& i, const Representation& m);

/// The natural map lan(res M) -> M with components M(map(floor p) <= p);
/// `lan_res` must be lan(i, *restriction(i, m)) and `target` must hold m.
RepMorphism counit(const AlignedGridInclusion& i, const Representation& m, const RepPtr& lan_res, const RepPtr& target);

struct SubgridResult {
  AlignedGridInclusion inclusion;
  std::vector<RepPtr> restricted;
};

/// The grid spanned by the factor projections of all generator and relation
/// grades of minimal projective presentations; factors without grades use {0}.
SubgridResult support_subgrid(const PosetPtr& grid, const std::vector<RepPtr>& reps);

/// Subgrid inclusion with the given coordinate sets per factor (sorted, deduplicated).
AlignedGridInclusion subgrid_inclusion(const PosetPtr& grid, std::vector<std::vector<int>> coords);

/// Every aligned inclusion between two grids of equal dimension, in
/// lexicographic order of the factor maps.
std::vector<AlignedGridInclusion> all_aligned_inclusions(const PosetPtr& source, const PosetPtr& target);

}  // namespace spreadres
