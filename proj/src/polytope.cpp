#include "regionid/polytope.hpp"

#include <algorithm>
#include <cmath>

namespace regionid {

namespace {

constexpr double kVertexTol = 1e-12;
// Constant rows 0 <= c are infeasible only below this; keeps rounding noise
// from emptying a region the true parameter sits in.
constexpr double kConstantRowTol = 1e-9;
constexpr double kDedupTol = 1e-10;

double coord_scale(const std::vector<Vec2>& vs) {
  double m = 1.0;
  for (const auto& v : vs) m = std::max({m, std::abs(v.x()), std::abs(v.y())});
  return m;
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double signed_area(const std::vector<Vec2>& vs) {
  double s = 0.0;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vs[i];
    const Vec2& q = vs[(i + 1) % n];
    s += cross2(p, q);
  }
  return 0.5 * s;
}

double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

ConvexPolygon ConvexPolygon::box(const Vec2& lo, const Vec2& hi) {
  return ConvexPolygon({Vec2(lo.x(), lo.y()), Vec2(hi.x(), lo.y()),
                        Vec2(hi.x(), hi.y()), Vec2(lo.x(), hi.y())});
}

void ConvexPolygon::normalize() {
  if (vertices_.empty()) return;
  const double tol = kVertexTol * coord_scale(vertices_);

  // Drop consecutive near-duplicates (wrapping).
  std::vector<Vec2> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    if (out.empty() || (v - out.back()).norm() > tol) out.push_back(v);
  }
  while (out.size() > 1 && (out.front() - out.back()).norm() <= tol)
    out.pop_back();

  if (out.size() >= 3 && signed_area(out) < 0.0)
    std::reverse(out.begin(), out.end());

  // Remove interior collinear vertices (straight-through only, so degenerate
  // out-and-back slivers keep their endpoints).
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t n = out.size();
      const Vec2& a = out[(i + n - 1) % n];
      const Vec2& b = out[i];
      const Vec2& c = out[(i + 1) % n];
      const Vec2 e1 = b - a, e2 = c - b;
      if (std::abs(cross2(e1, e2)) <= tol * (e1.norm() + e2.norm()) &&
          e1.dot(e2) >= 0.0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  vertices_ = std::move(out);
}

ConvexPolygon clip(const ConvexPolygon& poly, const Halfspace& hs) {
  if (poly.empty()) return poly;

  const double nn = hs.normal.norm();
  if (nn <= kVertexTol) {
    // Constant feasibility row.
    if (hs.offset < -kConstantRowTol) return ConvexPolygon{};
    return poly;
  }
  const Vec2 n(hs.normal(0) / nn, hs.normal(1) / nn);
  const double c = hs.offset / nn;

  const auto& vs = poly.vertices();
  const double eps = kVertexTol * std::max(coord_scale(vs), std::abs(c));

  std::vector<double> d(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) d[i] = n.dot(vs[i]) - c;

  std::vector<Vec2> out;
  out.reserve(vs.size() + 2);
  const std::size_t m = vs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const bool pi = d[i] <= eps;
    const bool pj = d[j] <= eps;
    if (pi) out.push_back(vs[i]);
    if (pi != pj) {
      const double denom = d[i] - d[j];
      double t = (std::abs(denom) > 0.0) ? d[i] / denom : 0.5;
      t = std::clamp(t, 0.0, 1.0);
      out.push_back(vs[i] + t * (vs[j] - vs[i]));
    }
  }
  ConvexPolygon result(std::move(out));
  if (poly.unbounded() && !result.empty()) result.mark_unbounded();
  return result;
}

ConvexPolygon intersect_all(const ConvexPolygon& poly, const HalfspaceSet& hss) {
  ConvexPolygon cur = poly;
  for (const auto& row : hss.rows) {
    cur = clip(cur, row);
    if (cur.empty()) break;
  }
  return cur;
}

double area(const ConvexPolygon& poly) {
  if (poly.unbounded()) throw UnboundedRegionError{};
  if (poly.vertices().size() < 3) return 0.0;
  return std::abs(signed_area(poly.vertices()));
}

bool contains(const ConvexPolygon& poly, const Vec2& point, double tol) {
  const auto& vs = poly.vertices();
  if (vs.empty()) return false;
  if (vs.size() == 1) return (point - vs[0]).norm() <= tol;
  if (vs.size() == 2) return point_segment_dist(point, vs[0], vs[1]) <= tol;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vec2& p = vs[i];
    const Vec2& q = vs[(i + 1) % vs.size()];
    const Vec2 e = q - p;
    const double len = e.norm();
    if (len <= kVertexTol) continue;
    // CCW interior lies left of each edge.
    if (cross2(e, point - p) / len < -tol) return false;
  }
  return true;
}

namespace {

// Scale each row to a unit normal; all-zero normals stay as constant rows.
void normalize_rows(HalfspaceSet& hss) {
  for (auto& r : hss.rows) {
    const double nn = r.normal.norm();
    if (nn > kVertexTol) {
      r.normal /= nn;
      r.offset /= nn;
    } else {
      r.normal.setZero();
    }
  }
}

// Drop duplicate rows and trivially-true constant rows; keep one canonical
// infeasibility marker if any constant row is violated.
void dedupe_rows(HalfspaceSet& hss) {
  std::vector<Halfspace> kept;
  bool infeasible = false;
  for (auto& r : hss.rows) {
    if (r.normal.norm() <= kVertexTol) {
      if (r.offset < -kConstantRowTol) infeasible = true;
      continue;
    }
    bool dup = false;
    for (const auto& k : kept) {
      if ((k.normal - r.normal).norm() <= kDedupTol &&
          std::abs(k.offset - r.offset) <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(r));
  }
  if (infeasible) {
    Halfspace marker(VecX::Zero(hss.dim), -1.0, false);
    kept.insert(kept.begin(), std::move(marker));
  }
  hss.rows = std::move(kept);
}

}  // namespace

HalfspaceSet eliminate_eta(const HalfspaceSet& hss, int num_eta, int row_cap) {
  const int theta_dim = hss.dim - num_eta;
  HalfspaceSet cur = hss;
  normalize_rows(cur);
  dedupe_rows(cur);

  for (int col = hss.dim - 1; col >= theta_dim; --col) {
    std::vector<Halfspace> zero, pos, neg;
    for (auto& r : cur.rows) {
      const double c = (r.dim() > col) ? r.normal(col) : 0.0;
      Halfspace trunc(r.normal.head(col).eval(), r.offset, r.strict);
      if (std::abs(c) <= kVertexTol) {
        zero.push_back(std::move(trunc));
      } else if (c > 0.0) {
        trunc.normal /= c;
        trunc.offset /= c;
        pos.push_back(std::move(trunc));
      } else {
        trunc.normal /= -c;
        trunc.offset /= -c;
        neg.push_back(std::move(trunc));
      }
    }

    HalfspaceSet next(col);
    next.rows = std::move(zero);
    for (const auto& up : pos) {
      for (const auto& lo : neg) {
        // (eta <= offset_up - rest_up) paired with (-eta <= offset_lo - rest_lo)
        Halfspace combined(up.normal + lo.normal, up.offset + lo.offset,
                           up.strict || lo.strict);
        next.rows.push_back(std::move(combined));
        if (static_cast<int>(next.rows.size()) > row_cap)
          throw ProjectionBlowupError{};
      }
    }
    normalize_rows(next);
    dedupe_rows(next);
    cur = std::move(next);
  }
  cur.dim = theta_dim;
  return cur;
}

HalfspaceSet remove_redundant(const HalfspaceSet& hss, const ConvexPolygon& box) {
  const double base = area(intersect_all(box, hss));
  HalfspaceSet kept = hss;
  std::size_t i = 0;
  while (i < kept.rows.size()) {
    HalfspaceSet trial = kept;
    trial.rows.erase(trial.rows.begin() + static_cast<std::ptrdiff_t>(i));
    if (std::abs(area(intersect_all(box, trial)) - base) <= 1e-12) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace regionid
