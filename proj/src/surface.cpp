#include "qpsurf/surface.hpp"

#include <algorithm>
#include <numeric>

#include "qpsurf/error.hpp"

namespace qpsurf {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

SurfaceSummary::SurfaceSummary(std::vector<ComponentType> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    const int twice_genus = 2 - c.chi - c.boundary_circles;
    if (c.chi > 1 || c.boundary_circles < 1 || twice_genus < 0 || twice_genus % 2 != 0) {
      throw Error(ErrorKind::SummaryMismatch, "impossible surface component (chi " + std::to_string(c.chi) +
                                                  ", boundary " + std::to_string(c.boundary_circles) + ")");
    }
    total_chi_ += c.chi;
  }
  std::ranges::sort(components_);
}

int SurfaceSummary::boundary_circles() const {
  int n = 0;
  for (const auto& c : components_) n += c.boundary_circles;
  return n;
}

std::string SurfaceSummary::to_string() const {
  std::string out = "chi " + std::to_string(total_chi_) + " [";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += ", ";
    out += "(" + std::to_string(components_[k].chi) + "," + std::to_string(components_[k].boundary_circles) + ")";
  }
  return out + "]";
}

int euler_characteristic(const BraidedSurface& surface) { return surface.disks() - surface.bands(); }

std::vector<int> disk_components(const BraidedSurface& surface) {
  UnionFind uf(surface.disks());
  for (const auto& b : surface.representation().bands()) uf.unite(b.i - 1, b.j - 1);
  std::vector<int> label(surface.disks(), -1);
  std::vector<int> root_label(surface.disks(), -1);
  int next = 0;
  for (int s = 0; s < surface.disks(); ++s) {
    const int r = uf.find(s);
    if (root_label[r] < 0) root_label[r] = next++;
    label[s] = root_label[r];
  }
  return label;
}

SurfaceSummary summary(const BraidedSurface& surface) {
  const auto label = disk_components(surface);
  const int count = label.empty() ? 0 : *std::ranges::max_element(label) + 1;
  std::vector<ComponentType> comps(count, ComponentType{0, 0});
  for (int s = 0; s < surface.disks(); ++s) comps[label[s]].chi += 1;
  for (const auto& b : surface.representation().bands()) comps[label[b.i - 1]].chi -= 1;
  const auto perm = permutation(beta(surface.representation()));
  for (const auto& cycle : cycles(perm)) comps[label[cycle.front()]].boundary_circles += 1;
  return SurfaceSummary(std::move(comps));
}

}  // namespace qpsurf
