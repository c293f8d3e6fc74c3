#pragma once

#include <stdexcept>
#include <vector>

#include "regionid/linalg.hpp"

namespace regionid {

/// One linear inequality normal . z <= offset (or < when strict).
/// `strict` records how the row was derived; the geometry always takes
/// the closure (the difference is measure zero and closure keeps the true
/// parameter inside under rounding).
struct Halfspace {
  VecX normal;
  double offset = 0.0;
  bool strict = false;

  Halfspace() = default;
  Halfspace(VecX n, double off, bool str = false)
      : normal(std::move(n)), offset(off), strict(str) {}
  Halfspace(double n0, double n1, double off, bool str = false)
      : normal(2), offset(off), strict(str) {
    normal << n0, n1;
  }

  int dim() const { return static_cast<int>(normal.size()); }
};

/// Ordered rows over a shared variable list (theta components first, then
/// any floating eta components).
struct HalfspaceSet {
  int dim = 2;
  std::vector<Halfspace> rows;

  HalfspaceSet() = default;
  explicit HalfspaceSet(int d) : dim(d) {}

  void add(Halfspace h) { rows.push_back(std::move(h)); }
  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
};

struct UnboundedRegionError : std::runtime_error {
  UnboundedRegionError() : std::runtime_error("unbounded region") {}
};

struct ProjectionBlowupError : std::runtime_error {
  ProjectionBlowupError() : std::runtime_error("projection blow-up") {}
};

/// Convex region in the 2-D parameter plane, counterclockwise vertex list.
/// Empty list = infeasible region. Degenerate slivers (fewer than three
/// distinct vertices, zero area) are kept, not collapsed to empty: the
/// shrinking estimate may legitimately pinch down to a segment that still
/// contains the true parameter.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Vec2> verts) : vertices_(std::move(verts)) {
    normalize();
  }

  static ConvexPolygon box(const Vec2& lo, const Vec2& hi);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  bool unbounded() const { return unbounded_; }
  void mark_unbounded() { unbounded_ = true; }

 private:
  void normalize();

  std::vector<Vec2> vertices_;
  bool unbounded_ = false;
};

/// poly intersected with the closed halfplane {v : normal . v <= offset}.
/// Rows with zero normal act as feasibility markers: offset < 0 empties the
/// polygon, otherwise it passes through unchanged.
ConvexPolygon clip(const ConvexPolygon& poly, const Halfspace& hs);

/// Sequential clip over all rows (rows must be 2-D).
ConvexPolygon intersect_all(const ConvexPolygon& poly, const HalfspaceSet& hss);

/// Shoelace area; 0 for empty or degenerate. Throws UnboundedRegionError.
double area(const ConvexPolygon& poly);

/// True iff point lies within tol of the closed polygon.
bool contains(const ConvexPolygon& poly, const Vec2& point, double tol = 1e-9);

/// Fourier-Motzkin elimination of the trailing num_eta columns, one at a
/// time. Input rows range over (theta_1..theta_p, eta_1..eta_num_eta); the
/// result ranges over theta only, and is satisfied by exactly those theta
/// for which some eta satisfies every input row. Infeasibility surfaces as
/// a constant row 0 <= c with c < 0. Throws ProjectionBlowupError when an
/// intermediate system exceeds row_cap rows.
HalfspaceSet eliminate_eta(const HalfspaceSet& hss, int num_eta,
                           int row_cap = 4096);

/// Drops rows whose removal leaves the box-clipped region unchanged
/// (area equality to 1e-12).
HalfspaceSet remove_redundant(const HalfspaceSet& hss, const ConvexPolygon& box);

}  // namespace regionid
