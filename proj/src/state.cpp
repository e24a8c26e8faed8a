#include "spinex/state.hpp"

#include <algorithm>
#include <cmath>

#include "spinex/error.hpp"

namespace spinex {

ParticleSet::ParticleSet(Point3 position, SpinValue spin, CVector spin_state, Tags tags)
    : position_(std::move(position)),
      spin_(spin),
      spin_state_(std::move(spin_state)),
      tags_(std::move(tags)) {
  if (!position_.allFinite()) fail(ErrorCode::kDomain, "position must be finite");
  if (spin_state_.size() != spin_.dimension()) {
    fail(ErrorCode::kDomain, "spin state dimension does not match 2s+1");
  }
  if (std::abs(spin_state_.norm() - 1.0) > kNormTolerance) {
    fail(ErrorCode::kDomain, "spin state must have unit norm");
  }
  std::stable_sort(tags_.begin(), tags_.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
}

MultiParticleState::MultiParticleState(std::vector<SpinValue> spins, std::vector<Tags> tags)
    : spins_(std::move(spins)), tags_(std::move(tags)) {
  if (tags_.size() != spins_.size()) fail(ErrorCode::kDomain, "one tag list per slot required");
  for (auto& t : tags_) {
    std::stable_sort(t.begin(), t.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  }
}

MultiParticleState::MultiParticleState(std::vector<SpinValue> spins)
    : MultiParticleState(spins, std::vector<Tags>(spins.size())) {}

MultiParticleState MultiParticleState::product(std::span<const ParticleSet> sets, Complex coeff) {
  std::vector<SpinValue> spins;
  std::vector<Tags> tags;
  ProductTerm term{coeff, {}, {}};
  for (const auto& p : sets) {
    spins.push_back(p.spin());
    tags.push_back(p.tags());
    term.positions.push_back(p.position());
    term.spinors.push_back(p.spin_state());
  }
  MultiParticleState state(std::move(spins), std::move(tags));
  state.add_term(std::move(term));
  return state;
}

void MultiParticleState::add_term(ProductTerm term) {
  if (term.positions.size() != size() || term.spinors.size() != size()) {
    fail(ErrorCode::kDomain, "term must have one position and one spinor per slot");
  }
  for (std::size_t j = 0; j < size(); ++j) {
    if (term.spinors[j].size() != spins_[j].dimension()) {
      fail(ErrorCode::kDomain, "spinor dimension does not match slot spin");
    }
    if (!term.positions[j].allFinite()) fail(ErrorCode::kDomain, "position must be finite");
  }
  terms_.push_back(std::move(term));
}

MultiParticleState MultiParticleState::transposed(std::size_t a, std::size_t b) const {
  if (a >= size() || b >= size()) fail(ErrorCode::kDomain, "slot index out of range");
  std::vector<SpinValue> spins = spins_;
  std::vector<Tags> tags = tags_;
  std::swap(spins[a], spins[b]);
  std::swap(tags[a], tags[b]);
  MultiParticleState out(std::move(spins), std::move(tags));
  for (ProductTerm t : terms_) {
    std::swap(t.positions[a], t.positions[b]);
    std::swap(t.spinors[a], t.spinors[b]);
    out.terms_.push_back(std::move(t));
  }
  return out;
}

namespace {

bool same_configuration(const ProductTerm& l, const ProductTerm& r) {
  for (std::size_t j = 0; j < l.positions.size(); ++j) {
    if (l.positions[j] != r.positions[j] || l.spinors[j] != r.spinors[j]) return false;
  }
  return true;
}

}  // namespace

MultiParticleState MultiParticleState::simplified(double prune_threshold) const {
  MultiParticleState out(spins_, tags_);
  for (const auto& t : terms_) {
    auto it = std::find_if(out.terms_.begin(), out.terms_.end(),
                           [&](const ProductTerm& u) { return same_configuration(t, u); });
    if (it == out.terms_.end()) {
      out.terms_.push_back(t);
    } else {
      it->coeff += t.coeff;
    }
  }
  std::erase_if(out.terms_, [&](const ProductTerm& t) { return std::abs(t.coeff) < prune_threshold; });
  return out;
}

MultiParticleState MultiParticleState::scaled(Complex factor) const {
  MultiParticleState out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

double MultiParticleState::max_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

bool positions_match(std::span<const Point3> p, std::span<const Point3> q, double tol) {
  if (p.size() != q.size()) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if ((p[j] - q[j]).norm() > tol) return false;
  }
  return true;
}

namespace {

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

const CanonicalState::Block* find_block(const CanonicalState& s, std::span<const Point3> positions,
                                        double tol) {
  for (const auto& blk : s.blocks) {
    if (positions_match(blk.positions, positions, tol)) return &blk;
  }
  return nullptr;
}

}  // namespace

CanonicalState canonical_form(const MultiParticleState& state, double position_tol) {
  long long dim = 1;
  for (SpinValue s : state.spins()) {
    dim *= s.dimension();
    if (dim > (1LL << 22)) fail(ErrorCode::kDomain, "state too large for dense canonical form");
  }

  CanonicalState out;
  for (const auto& t : state.terms()) {
    CVector amp = CVector::Constant(1, t.coeff);
    for (const auto& spinor : t.spinors) amp = kron(amp, spinor);

    auto it = std::find_if(out.blocks.begin(), out.blocks.end(), [&](const CanonicalState::Block& b) {
      return positions_match(b.positions, t.positions, position_tol);
    });
    if (it == out.blocks.end()) {
      out.blocks.push_back({t.positions, std::move(amp)});
    } else {
      it->amplitude += amp;
    }
  }
  return out;
}

double canonical_distance(const CanonicalState& lhs, const CanonicalState& rhs, Complex factor,
                          double position_tol) {
  double worst = 0.0;
  for (const auto& blk : lhs.blocks) {
    const auto* other = find_block(rhs, blk.positions, position_tol);
    worst = std::max(worst, other ? max_abs(CVector(blk.amplitude - factor * other->amplitude))
                                  : max_abs(blk.amplitude));
  }
  for (const auto& blk : rhs.blocks) {
    if (!find_block(lhs, blk.positions, position_tol)) {
      worst = std::max(worst, std::abs(factor) * max_abs(blk.amplitude));
    }
  }
  return worst;
}

std::optional<Complex> canonical_ratio(const CanonicalState& lhs, const CanonicalState& rhs,
                                       double position_tol) {
  Complex num = 0.0;
  double den = 0.0;
  for (const auto& blk : rhs.blocks) {
    const auto* other = find_block(lhs, blk.positions, position_tol);
    if (!other) return std::nullopt;
    num += blk.amplitude.dot(other->amplitude);  // conjugates the first operand
    den += blk.amplitude.squaredNorm();
  }
  for (const auto& blk : lhs.blocks) {
    if (!find_block(rhs, blk.positions, position_tol)) return std::nullopt;
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

}  // namespace spinex
