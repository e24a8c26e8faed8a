#include "spinex/region.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "spinex/error.hpp"

namespace spinex {

int permutation_sign(std::span<const std::size_t> perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

RegionSignature radial_order(std::span<const ParticleSet> config, const Point3& center) {
  if (config.empty()) fail(ErrorCode::kDomain, "configuration must be nonempty");

  RegionSignature sig;
  sig.center = center;
  for (const auto& p : config) sig.radii.push_back((p.position() - center).norm());
  sig.order.resize(config.size());
  std::iota(sig.order.begin(), sig.order.end(), std::size_t{0});

  std::stable_sort(sig.order.begin(), sig.order.end(), [&](std::size_t l, std::size_t r) {
    if (sig.radii[l] != sig.radii[r]) return sig.radii[l] < sig.radii[r];
    const Point3& pl = config[l].position();
    const Point3& pr = config[r].position();
    return std::tie(pl.x(), pl.y(), pl.z(), config[l].tags()) <
           std::tie(pr.x(), pr.y(), pr.z(), config[r].tags());
  });

  for (std::size_t k = 1; k < sig.order.size(); ++k) {
    const double lo = sig.radii[sig.order[k - 1]];
    const double hi = sig.radii[sig.order[k]];
    if (hi - lo <= kRadiusTieTolerance * std::max(1.0, hi)) sig.has_ties = true;
  }
  sig.parity = permutation_sign(sig.order);
  bool identity = true;
  for (std::size_t k = 0; k < sig.order.size(); ++k) identity = identity && sig.order[k] == k;
  sig.in_region_a = identity && !sig.has_ties;
  return sig;
}

CanonicalConfig canonicalize(std::span<const ParticleSet> config, const Point3& center) {
  const RegionSignature sig = radial_order(config, center);
  CanonicalConfig out;
  out.parity = sig.parity;
  out.sets.reserve(config.size());
  for (std::size_t slot : sig.order) out.sets.push_back(config[slot]);
  return out;
}

namespace {

bool same_set(const ParticleSet& l, const ParticleSet& r, double tol) {
  return l.spin() == r.spin() && l.tags() == r.tags() && (l.position() - r.position()).norm() <= tol &&
         (l.spin_state() - r.spin_state()).norm() <= tol;
}

// Kuhn's augmenting-path matching on the "same_set within tol" relation.
bool augment(std::size_t i, const std::vector<std::vector<bool>>& adj, std::vector<bool>& visited,
             std::vector<long>& match_of_rhs) {
  for (std::size_t j = 0; j < adj[i].size(); ++j) {
    if (!adj[i][j] || visited[j]) continue;
    visited[j] = true;
    if (match_of_rhs[j] < 0 || augment(static_cast<std::size_t>(match_of_rhs[j]), adj, visited, match_of_rhs)) {
      match_of_rhs[j] = static_cast<long>(i);
      return true;
    }
  }
  return false;
}

}  // namespace

bool generic_equal(std::span<const ParticleSet> lhs, std::span<const ParticleSet> rhs, double tol) {
  if (lhs.size() != rhs.size()) return false;
  const std::size_t n = lhs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = same_set(lhs[i], rhs[j], tol);
  }
  std::vector<long> match_of_rhs(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> visited(n, false);
    if (!augment(i, adj, visited, match_of_rhs)) return false;
  }
  return true;
}

}  // namespace spinex
