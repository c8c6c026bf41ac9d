#pragma once

// The braided Seifert surface S(b) as a handle complex: one 0-handle per
// strand and one half-twisted 1-handle per band, stacked by height.

#include <compare>
#include <string>
#include <vector>

#include "qpsurf/braid.hpp"

namespace qpsurf {

class BraidedSurface {
 public:
  explicit BraidedSurface(BandRepresentation rep) : rep_(std::move(rep)) {}

  int disks() const { return rep_.strands(); }
  int bands() const { return static_cast<int>(rep_.size()); }
  /// Band with 1-based handle index t; its height is t.
  const EmbeddedBand& band(int t) const { return rep_[t - 1]; }
  const BandRepresentation& representation() const { return rep_; }

  friend bool operator==(const BraidedSurface&, const BraidedSurface&) = default;

 private:
  BandRepresentation rep_;
};

struct ComponentType {
  int chi = 1;
  int boundary_circles = 1;
  friend bool operator==(const ComponentType&, const ComponentType&) = default;
  friend auto operator<=>(const ComponentType&, const ComponentType&) = default;
};

/// Homeomorphism type of a compact oriented surface with nonempty boundary
/// on every component. Components are kept sorted so that == is multiset
/// equality.
class SurfaceSummary {
 public:
  SurfaceSummary() = default;
  explicit SurfaceSummary(std::vector<ComponentType> components);

  int total_chi() const { return total_chi_; }
  const std::vector<ComponentType>& components() const { return components_; }
  int boundary_circles() const;

  std::string to_string() const;

  friend bool operator==(const SurfaceSummary&, const SurfaceSummary&) = default;

 private:
  int total_chi_ = 0;
  std::vector<ComponentType> components_;
};

int euler_characteristic(const BraidedSurface& surface);

/// Connected component label (0-based, in order of least disk) of every
/// 0-handle, from union-find over the handle graph.
std::vector<int> disk_components(const BraidedSurface& surface);

SurfaceSummary summary(const BraidedSurface& surface);

}  // namespace qpsurf
