#include "qpsurf/invariants.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <queue>

#include "qpsurf/error.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

namespace {

using Poly = Laurent;
using PolyMatrix = LaurentMatrix<BigInt>;

// Right-multiply m by the reduced Burau matrix of one letter. Only the
// columns of the generator's block change.
void apply_letter(PolyMatrix& m, const Letter& l) {
  const int d = static_cast<int>(m.cols());  // n - 1
  const int c = l.index - 1;                 // 0-based centre row/column
  const Poly t = Poly::t();
  const Poly ti = Poly::monomial(-1);
  // Block entries g(r, col) for r, col in {c-1, c, c+1}.
  std::array<std::array<Poly, 3>, 3> g;
  if (l.sign == Sign::Positive) {
    g = {{{1, t, 0}, {0, -t, 0}, {0, 1, 1}}};
  } else {
    g = {{{1, 1, 0}, {0, -ti, 0}, {0, ti, 1}}};
  }
  auto in_range = [&](int k) { return k >= 0 && k < d; };
  std::array<Eigen::Matrix<Poly, Eigen::Dynamic, 1>, 3> cols;
  for (int bc = 0; bc < 3; ++bc) {
    const int col = c - 1 + bc;
    if (!in_range(col)) continue;
    Eigen::Matrix<Poly, Eigen::Dynamic, 1> acc = Eigen::Matrix<Poly, Eigen::Dynamic, 1>::Constant(m.rows(), Poly{});
    for (int br = 0; br < 3; ++br) {
      const int row = c - 1 + br;
      if (!in_range(row) || g[br][bc].is_zero()) continue;
      for (Eigen::Index x = 0; x < m.rows(); ++x) acc(x) += m(x, row) * g[br][bc];
    }
    cols[bc] = std::move(acc);
  }
  for (int bc = 0; bc < 3; ++bc) {
    const int col = c - 1 + bc;
    if (in_range(col)) m.col(col) = cols[bc];
  }
}

// ---------------------------------------------------------------------------
// Polyline model of S(b).
//
// 0-handle s lies in the half plane x = s, y >= 0, oriented with normal +x.
// 1-handle t spans heights [t-1, t]; its core runs at height h = t - 1/2
// from (i, 0, h) down to y = -1, across to x = j in front of the
// intermediate 0-handles, and back up to (j, 0, h). Along the crossing
// segment the surface normal turns from +y to -y through a half twist
// centred at x = (i+j)/2, passing through +z for a positive band.

struct Point {
  double x, y, z;
};

constexpr double kPush = 0.1;       // pushoff distance
constexpr double kTwistHalf = 0.25;  // half width of the twist region
constexpr double kDiskDepth = 1.0;   // how far curves reach into a 0-handle

double height(int t) { return t - 0.5; }

struct Step {
  int handle;
  bool forward;  // i -> j
};

void append_band(std::vector<Point>& core, std::vector<Point>& push, const EmbeddedBand& b, int t, bool forward) {
  const double h = height(t);
  const double xi = b.i;
  const double xj = b.j;
  const double xm = 0.5 * (xi + xj);
  const double tw = -value(b.sign) * kPush;
  std::vector<Point> c{{xi, 0, h}, {xi, -1, h}, {xj, -1, h}, {xj, 0, h}};
  std::vector<Point> p{{xi + kPush, 0, h},
                       {xi + kPush, -1 + kPush, h},
                       {xm - kTwistHalf, -1 + kPush, h},
                       {xm, -1, h + tw},
                       {xm + kTwistHalf, -1 - kPush, h},
                       {xj + kPush, -1 - kPush, h},
                       {xj + kPush, 0, h}};
  if (!forward) {
    std::reverse(c.begin(), c.end());
    std::reverse(p.begin(), p.end());
  }
  core.insert(core.end(), c.begin(), c.end());
  push.insert(push.end(), p.begin(), p.end());
}

void append_disk(std::vector<Point>& core, std::vector<Point>& push, int s, double from, double to) {
  for (double dx : {0.0, kPush}) {
    auto& out = dx == 0.0 ? core : push;
    out.push_back({s + dx, kDiskDepth, from});
    out.push_back({s + dx, kDiskDepth, to});
  }
}

// Closed core curve and its pushoff along the positive normal.
std::pair<std::vector<Point>, std::vector<Point>> realize(const BandRepresentation& rep,
                                                          const std::vector<Step>& steps) {
  std::vector<Point> core;
  std::vector<Point> push;
  const auto& last = steps.back();
  double arrival = height(last.handle);
  for (const auto& st : steps) {
    const auto& b = rep[st.handle - 1];
    const int s = st.forward ? b.i : b.j;
    append_disk(core, push, s, arrival, height(st.handle));
    append_band(core, push, b, st.handle, st.forward);
    arrival = height(st.handle);
  }
  return {core, push};
}

Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Point cross(Point a, Point b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }

// Linking number of two disjoint closed polylines: the signed count of
// crossings where `over` passes above `under`, viewed from direction `view`.
int linking_number(const std::vector<Point>& over, const std::vector<Point>& under, Point view) {
  const double len = std::sqrt(dot(view, view));
  view = {view.x / len, view.y / len, view.z / len};
  Point e1 = cross(view, Point{0, 0, 1});
  const double l1 = std::sqrt(dot(e1, e1));
  e1 = {e1.x / l1, e1.y / l1, e1.z / l1};
  const Point e2 = cross(view, e1);
  auto proj = [&](Point p) { return std::array<double, 2>{dot(p, e1), dot(p, e2)}; };

  int total = 0;
  const std::size_t np = over.size();
  const std::size_t nq = under.size();
  for (std::size_t a = 0; a < np; ++a) {
    const Point p0 = over[a];
    const Point p1 = over[(a + 1) % np];
    const auto P0 = proj(p0);
    const auto P1 = proj(p1);
    const std::array<double, 2> dp{P1[0] - P0[0], P1[1] - P0[1]};
    for (std::size_t b = 0; b < nq; ++b) {
      const Point q0 = under[b];
      const Point q1 = under[(b + 1) % nq];
      const auto Q0 = proj(q0);
      const auto Q1 = proj(q1);
      const std::array<double, 2> dq{Q1[0] - Q0[0], Q1[1] - Q0[1]};
      const double den = dp[0] * dq[1] - dp[1] * dq[0];
      if (std::abs(den) < 1e-14) continue;
      const std::array<double, 2> r{Q0[0] - P0[0], Q0[1] - P0[1]};
      const double u = (r[0] * dq[1] - r[1] * dq[0]) / den;
      const double w = (r[0] * dp[1] - r[1] * dp[0]) / den;
      if (u < 0 || u >= 1 || w < 0 || w >= 1) continue;
      const Point pu = {p0.x + u * (p1.x - p0.x), p0.y + u * (p1.y - p0.y), p0.z + u * (p1.z - p0.z)};
      const Point qw = {q0.x + w * (q1.x - q0.x), q0.y + w * (q1.y - q0.y), q0.z + w * (q1.z - q0.z)};
      if (dot(pu, view) <= dot(qw, view)) continue;
      const double s = dot(cross(sub(p1, p0), sub(q1, q0)), view);
      total += s > 0 ? 1 : -1;
    }
  }
  return total;
}

// Fundamental cycles: for each co-tree band, the band itself followed by the
// spanning-forest path back to its start.
std::vector<std::vector<Step>> fundamental_cycles(const BandRepresentation& rep) {
  const BraidedSurface surface(rep);
  const int n = rep.strands();
  // Forest adjacency built greedily in handle order, matching cotree_handles.
  std::vector<int> root(n);
  for (int s = 0; s < n; ++s) root[s] = s;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::vector<Step>> tree_adj(n);  // steps leaving each disk (0-based)
  std::vector<int> cotree;
  for (int t = 1; t <= static_cast<int>(rep.size()); ++t) {
    const auto& b = rep[t - 1];
    const int a = find(b.i - 1);
    const int c = find(b.j - 1);
    if (a == c) {
      cotree.push_back(t);
      continue;
    }
    root[std::max(a, c)] = std::min(a, c);
    tree_adj[b.i - 1].push_back({t, true});
    tree_adj[b.j - 1].push_back({t, false});
  }
  auto other_end = [&](const Step& st) {
    const auto& b = rep[st.handle - 1];
    return (st.forward ? b.j : b.i) - 1;
  };

  std::vector<std::vector<Step>> out;
  for (int t : cotree) {
    const auto& b = rep[t - 1];
    // BFS in the forest from j back to i.
    const int from = b.j - 1;
    const int to = b.i - 1;
    std::vector<int> prev_disk(n, -1);
    std::vector<Step> prev_step(n, Step{0, true});
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const auto& st : tree_adj[v]) {
        const int w = other_end(st);
        if (seen[w]) continue;
        seen[w] = true;
        prev_disk[w] = v;
        prev_step[w] = st;
        q.push(w);
      }
    }
    std::vector<Step> back;
    for (int v = to; v != from; v = prev_disk[v]) back.push_back(prev_step[v]);
    std::reverse(back.begin(), back.end());
    std::vector<Step> cycle{{t, true}};
    cycle.insert(cycle.end(), back.begin(), back.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

LaurentMatrix<BigInt> reduced_burau(const BraidWord& word) {
  const int d = word.strands() - 1;
  PolyMatrix m = PolyMatrix::Constant(d, d, Poly{});
  for (int k = 0; k < d; ++k) m(k, k) = Poly(1);
  for (const auto& l : word.letters()) apply_letter(m, l);
  return m;
}

Laurent alexander_from_braid(const BraidWord& word) {
  const int n = word.strands();
  if (n == 1) return Poly(1);
  PolyMatrix m = reduced_burau(word);
  for (int k = 0; k < n - 1; ++k) m(k, k) -= Poly(1);
  const Poly det = determinant<BigInt>(std::move(m));
  const Poly divisor = Poly::from_coefficients(0, std::vector<BigInt>(n, BigInt(1)));
  auto q = divide_exact(det, divisor);
  if (!q) {
    throw Error(ErrorKind::NonExactDivision, "det(burau - I) = " + det.to_string() + " not divisible by " +
                                                 divisor.to_string());
  }
  return q->canonical();
}

IntMatrix seifert_matrix(const BandRepresentation& rep) {
  const auto cycles = fundamental_cycles(rep);
  const auto g = static_cast<Eigen::Index>(cycles.size());
  std::vector<std::vector<Point>> cores;
  std::vector<std::vector<Point>> pushes;
  for (const auto& c : cycles) {
    auto [core, push] = realize(rep, c);
    cores.push_back(std::move(core));
    pushes.push_back(std::move(push));
  }
  const Point view{0.0731, -1.0, 0.0417};
  IntMatrix v(g, g);
  for (Eigen::Index a = 0; a < g; ++a) {
    for (Eigen::Index b = 0; b < g; ++b) {
      v(a, b) = linking_number(pushes[a], cores[b], view);
    }
  }
  return v;
}

Laurent alexander_from_seifert(const IntMatrix& v) {
  const Eigen::Index g = v.rows();
  PolyMatrix m(g, g);
  const Poly t = Poly::t();
  for (Eigen::Index a = 0; a < g; ++a) {
    for (Eigen::Index b = 0; b < g; ++b) {
      m(a, b) = Poly(BigInt(v(a, b)), 0) - t * Poly(BigInt(v(b, a)), 0);
    }
  }
  return determinant<BigInt>(std::move(m)).canonical();
}

}  // namespace qpsurf
