#include "kakeya/kakeya_geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "kakeya/exact.hpp"
#include "kakeya/multipoly.hpp"
#include "kakeya/parallel.hpp"

namespace kakeya {

RLine canonical_line(const RSpace& V, uint64_t b, uint64_t w) {
  const RRing& R = V.ring();
  if (!V.primitive(w)) throw DomainError("canonical_line: direction not primitive");
  uint64_t best_dir = w;
  for (RElem u = 0; u < R.size(); ++u) {
    if (!R.is_unit(u)) continue;
    best_dir = std::min(best_dir, V.scalar_mul(u, w));
  }
  uint64_t best_pt = b;
  for (RElem a = 0; a < R.size(); ++a)
    best_pt = std::min(best_pt, V.axpy(b, a, w));
  return RLine{best_pt, best_dir};
}

std::vector<uint64_t> line_points(const RSpace& V, uint64_t b, uint64_t w) {
  const RRing& R = V.ring();
  if (!V.primitive(w)) throw DomainError("line_points: direction not primitive");
  std::vector<uint64_t> pts(R.size());
  for (RElem a = 0; a < R.size(); ++a) pts[a] = V.axpy(b, a, w);
  return pts;
}

std::vector<uint64_t> directions(const RSpace& V) {
  return V.enumerate(true);
}

uint64_t line_anchor(const RSpace& V, uint64_t v, uint64_t w, int pivot) {
  const RRing& R = V.ring();
  RElem a = R.mul(V.coord(v, pivot), R.inv(V.coord(w, pivot)));
  return V.axpy(v, R.neg(a), w);
}

uint64_t anchor_index(const RSpace& V, uint64_t anchor, int pivot) {
  uint64_t idx = 0;
  for (int i = V.n() - 1; i >= 0; --i) {
    if (i == pivot) continue;
    idx = idx * V.ring().size() + V.coord(anchor, i);
  }
  return idx;
}

uint64_t anchor_from_index(const RSpace& V, uint64_t idx, int pivot) {
  uint64_t v = 0;
  for (int i = 0; i < V.n(); ++i) {
    if (i == pivot) continue;
    v = V.with_coord(v, i, RElem(idx % V.ring().size()));
    idx /= V.ring().size();
  }
  return v;
}

uint64_t KakeyaProfile::count_at_least(int threshold) const {
  uint64_t c = 0;
  for (int b : best)
    if (b >= threshold) ++c;
  return c;
}

KakeyaProfile profile(const RSpace& V, const std::vector<uint64_t>& E, int jobs) {
  const RRing& R = V.ring();
  KakeyaProfile P;
  P.dirs = directions(V);
  P.best.assign(P.dirs.size(), 0);
  P.best_anchor.assign(P.dirs.size(), 0);
  P.max_per_line = int(R.size());
  uint64_t classes = 1;
  for (int i = 0; i < V.n() - 1; ++i) classes *= R.size();
  parallel_for(int64_t(P.dirs.size()), jobs, [&](int64_t di) {
    uint64_t w = P.dirs[di];
    int pivot = V.pivot_coord(w);
    std::vector<int> counter(classes, 0);
    for (uint64_t v : E) ++counter[anchor_index(V, line_anchor(V, v, w, pivot), pivot)];
    int best = 0;
    uint64_t best_idx = 0;
    for (uint64_t i = 0; i < classes; ++i)
      if (counter[i] > best) {
        best = counter[i];
        best_idx = i;
      }
    P.best[di] = best;
    P.best_anchor[di] = anchor_from_index(V, best_idx, pivot);
  });
  return P;
}

long long covering_beta(double eps, double nu, int k, int n, int q) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("covering_beta: eps must be in (0,1]");
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("covering_beta: nu must be in (0,1]");
  DyadicRational de = to_dyadic(eps, "eps"), dn = to_dyadic(nu, "nu");
  BigU p = big_from_u128((unsigned __int128)de.num * dn.num);
  for (int i = 0; i < k - 1; ++i) p.mul_small(uint64_t(q));
  p.div_small(uint64_t(k) * uint64_t(n));
  p.shr(de.exp2 + dn.exp2);
  if (!p.fits_u64() || p.to_u64() > uint64_t(1) << 62)
    throw ResourceError("covering_beta: result out of range");
  return (long long)p.to_u64();
}

uint64_t covering_bound(double eps, double nu, int k, int n, int q) {
  long long beta = covering_beta(eps, nu, k, n, q);
  if (beta > 1000000) throw ResourceError("covering_bound: beta out of range");
  return binom(int(beta) + n, n);
}

CoveringReport check_covering_theorem(const RSpace& V, const std::vector<uint64_t>& E,
                                      double eps, double nu, int jobs) {
  const RRing& R = V.ring();
  CoveringReport rep;
  rep.line_threshold = int(ceil_scaled(eps, R.size()));
  rep.required_omega = ceil_scaled(nu, V.size());
  KakeyaProfile P = profile(V, E, jobs);
  rep.omega = P.count_at_least(rep.line_threshold);
  rep.hypothesis_met = rep.omega >= rep.required_omega && !E.empty();
  rep.size = E.size();
  rep.bound = covering_bound(eps, nu, V.ring().k(), V.n(), V.ring().q());
  rep.pass = !rep.hypothesis_met || rep.size >= rep.bound;
  return rep;
}

std::vector<uint64_t> greedy_small_kakeya(int k, int n, int q, uint64_t seed) {
  Fq F(q);
  RRing R(F, k);
  RSpace V(R, n);
  std::vector<uint64_t> dirs = directions(V);
  Rng rng(seed);
  for (size_t i = dirs.size(); i > 1; --i)
    std::swap(dirs[i - 1], dirs[rng.below(i)]);

  std::vector<uint8_t> in_set(V.size(), 0);
  uint64_t classes = 1;
  for (int i = 0; i < n - 1; ++i) classes *= R.size();
  for (uint64_t w : dirs) {
    int pivot = V.pivot_coord(w);
    int best = -1;
    uint64_t best_anchor = 0;
    for (uint64_t idx = 0; idx < classes; ++idx) {
      uint64_t anchor = anchor_from_index(V, idx, pivot);
      int hits = 0;
      for (RElem a = 0; a < R.size(); ++a)
        if (in_set[V.axpy(anchor, a, w)]) ++hits;
      if (hits > best) {
        best = hits;
        best_anchor = anchor;
      }
    }
    for (RElem a = 0; a < R.size(); ++a) in_set[V.axpy(best_anchor, a, w)] = 1;
  }
  std::vector<uint64_t> E;
  for (uint64_t v = 0; v < V.size(); ++v)
    if (in_set[v]) E.push_back(v);
  return E;
}

namespace {
struct MinSearch {
  std::vector<std::vector<uint32_t>> line_masks;  // per direction, per class
  int best_size;
  uint32_t best_mask;
  uint64_t nodes = 0, budget;

  void rec(size_t di, uint32_t mask) {
    if (++nodes > budget) throw ResourceError("exhaustive_min_kakeya: node budget");
    int cur = std::popcount(mask);
    if (cur >= best_size) return;
    if (di == line_masks.size()) {
      best_size = cur;
      best_mask = mask;
      return;
    }
    // Try classes that add the fewest new points first.
    const auto& classes = line_masks[di];
    std::vector<std::pair<int, uint32_t>> order;
    order.reserve(classes.size());
    for (uint32_t lm : classes)
      order.emplace_back(std::popcount(lm & ~mask), lm);
    std::sort(order.begin(), order.end());
    for (auto& [added, lm] : order) {
      if (cur + added >= best_size) break;  // sorted: the rest add no less
      rec(di + 1, mask | lm);
    }
  }
};
}  // namespace

MinKakeyaResult exhaustive_min_kakeya(int k, int n, int q, uint64_t node_budget) {
  Fq F(q);
  RRing R(F, k);
  RSpace V(R, n);
  if (V.size() > 16) throw DomainError("exhaustive_min_kakeya: q^{kn} must be <= 16");
  uint64_t classes = 1;
  for (int i = 0; i < n - 1; ++i) classes *= R.size();

  MinSearch S;
  S.budget = node_budget;
  for (uint64_t w : directions(V)) {
    int pivot = V.pivot_coord(w);
    std::vector<uint32_t> masks;
    for (uint64_t idx = 0; idx < classes; ++idx) {
      uint64_t anchor = anchor_from_index(V, idx, pivot);
      uint32_t m = 0;
      for (RElem a = 0; a < R.size(); ++a) m |= uint32_t(1) << V.axpy(anchor, a, w);
      masks.push_back(m);
    }
    S.line_masks.push_back(std::move(masks));
  }
  // Seed the incumbent with the full space.
  S.best_size = int(V.size()) + 1;
  S.best_mask = 0;
  S.rec(0, 0);

  MinKakeyaResult res;
  res.size = S.best_size;
  res.nodes = S.nodes;
  for (uint64_t v = 0; v < V.size(); ++v)
    if (S.best_mask & (uint32_t(1) << v)) res.witness.push_back(v);
  return res;
}

}  // namespace kakeya
