#include <doctest.h>

#include <numeric>
#include <vector>

#include "spinex/random.hpp"
#include "spinex/region.hpp"

using namespace spinex;

namespace {

const SpinValue kHalf = make_spin(1);

ParticleSet at(double x, double y = 0, double z = 0, Tags tags = {}) {
  return ParticleSet({x, y, z}, kHalf, CVector::Unit(2, 0), std::move(tags));
}

std::vector<ParticleSet> random_config(Rng& rng, int n) {
  std::vector<ParticleSet> c;
  for (int k = 0; k < n; ++k) c.emplace_back(rng.point(5), kHalf, rng.unit_spinor(2));
  return c;
}

}  // namespace

TEST_CASE("radial_order: frozen cases") {
  const std::vector<ParticleSet> sorted = {at(1), at(0, 2), at(0, 0, 3)};
  const auto s = radial_order(sorted);
  CHECK(s.order == std::vector<std::size_t>{0, 1, 2});
  CHECK(s.parity == 1);
  CHECK(s.in_region_a);
  CHECK(s.radii == std::vector<double>{1, 2, 3});

  const std::vector<ParticleSet> swapped = {at(2), at(1), at(3)};
  const auto t = radial_order(swapped);
  CHECK(t.order == std::vector<std::size_t>{1, 0, 2});
  CHECK(t.parity == -1);
  CHECK_FALSE(t.in_region_a);
}

TEST_CASE("radial_order: ties are flagged and broken by coordinates") {
  const std::vector<ParticleSet> tie = {at(1), at(-1)};
  const auto s = radial_order(tie);
  CHECK(s.has_ties);
  CHECK_FALSE(s.in_region_a);
  CHECK(s.order == std::vector<std::size_t>{1, 0});  // (-1,0,0) < (1,0,0)
  CHECK(radial_order(tie).order == s.order);

  // Same position, different tags: the tag list decides.
  const std::vector<ParticleSet> tagged = {at(1, 0, 0, {{"charge", "1"}}), at(1, 0, 0, {{"charge", "0"}})};
  CHECK(radial_order(tagged).order == std::vector<std::size_t>{1, 0});

  // Center is a parameter: moving it breaks the tie.
  const auto shifted = radial_order(tie, Point3(0.5, 0, 0));
  CHECK_FALSE(shifted.has_ties);
  CHECK(shifted.order == std::vector<std::size_t>{0, 1});
}

TEST_CASE("radial_order rejects an empty config") {
  CHECK_THROWS(radial_order(std::vector<ParticleSet>{}));
}

TEST_CASE("canonicalize") {
  const std::vector<ParticleSet> ordered = {at(1), at(2), at(3)};
  const auto same = canonicalize(ordered);
  CHECK(same.parity == 1);
  CHECK(generic_equal(same.sets, ordered, 0.0));
  for (std::size_t k = 0; k < 3; ++k) CHECK(same.sets[k].position() == ordered[k].position());

  const std::vector<ParticleSet> swapped = {at(2), at(1), at(3)};
  const auto fixed = canonicalize(swapped);
  CHECK(fixed.parity == -1);
  for (std::size_t k = 0; k < 3; ++k) CHECK(fixed.sets[k].position() == ordered[k].position());
}

TEST_CASE("canonicalize: idempotence and parity multiplicativity") {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto config = random_config(rng, 5);
    const Point3 center = rng.point(1);
    const auto once = canonicalize(config, center);
    const auto twice = canonicalize(once.sets, center);
    CHECK(twice.parity == 1);
    for (std::size_t k = 0; k < 5; ++k) CHECK(twice.sets[k].position() == once.sets[k].position());
    CHECK(radial_order(once.sets, center).in_region_a);

    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = 4; k > 0; --k) std::swap(perm[k], perm[static_cast<std::size_t>(rng.integer(0, int(k)))]);
    std::vector<ParticleSet> permuted;
    for (std::size_t k : perm) permuted.push_back(config[k]);
    CHECK(canonicalize(permuted, center).parity == permutation_sign(perm) * once.parity);
  }
}

TEST_CASE("permutation_sign") {
  CHECK(permutation_sign(std::vector<std::size_t>{0, 1, 2}) == 1);
  CHECK(permutation_sign(std::vector<std::size_t>{1, 0, 2}) == -1);
  CHECK(permutation_sign(std::vector<std::size_t>{1, 2, 0}) == 1);
  CHECK(permutation_sign(std::vector<std::size_t>{3, 2, 1, 0}) == 1);
}

TEST_CASE("generic_equal") {
  const double tol = 1e-9;
  std::vector<ParticleSet> config = {at(1, 2, 3, {{"charge", "-1"}}), at(-1, 0, 4, {{"charge", "-1"}}), at(0, 5, 0)};
  std::vector<ParticleSet> exchanged = config;
  std::swap(exchanged[0], exchanged[1]);
  CHECK(generic_equal(config, exchanged, tol));
  CHECK(config[0].position() != exchanged[0].position());  // specific order differs

  std::vector<ParticleSet> moved = config;
  moved[2] = at(10 * tol, 5, 0);
  CHECK_FALSE(generic_equal(config, moved, tol));

  std::vector<ParticleSet> recharged = config;
  recharged[0] = at(1, 2, 3, {{"charge", "+1"}});
  CHECK_FALSE(generic_equal(config, recharged, tol));

  std::vector<ParticleSet> flipped = config;
  flipped[2] = ParticleSet({0, 5, 0}, kHalf, CVector::Unit(2, 1));
  CHECK_FALSE(generic_equal(config, flipped, tol));

  CHECK_FALSE(generic_equal(config, std::vector<ParticleSet>(config.begin(), config.begin() + 2), tol));
}

TEST_CASE("generic_equal is an equivalence on jittered copies") {
  Rng rng(45);
  const double tol = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_config(rng, 4);
    auto jitter = [&](const std::vector<ParticleSet>& c) {
      std::vector<ParticleSet> out;
      for (const auto& p : c) out.emplace_back(p.position() + Vec3::Constant(tol / 8), p.spin(), p.spin_state());
      std::swap(out[0], out[3]);
      return out;
    };
    const auto b = jitter(a);
    const auto c = jitter(b);
    CHECK(generic_equal(a, a, tol));
    CHECK(generic_equal(a, b, tol) == generic_equal(b, a, tol));
    CHECK(generic_equal(a, b, tol));
    CHECK(generic_equal(b, c, tol));
    CHECK(generic_equal(a, c, tol));
  }
}

TEST_CASE("generic_equal finds a matching that greedy pairing misses") {
  // lhs[0] is close to both rhs entries, lhs[1] only to rhs[0].
  const double tol = 0.15;
  const std::vector<ParticleSet> lhs = {at(0.05), at(-0.1)};
  const std::vector<ParticleSet> rhs = {at(0.0), at(0.15)};
  CHECK(generic_equal(lhs, rhs, tol));
}
