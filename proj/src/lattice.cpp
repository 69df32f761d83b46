#include "atoral/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "atoral/errors.hpp"

namespace atoral {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim)
    throw DimensionMismatch("lattice dimension must be in [1, " + std::to_string(kMaxDim) +
                            "], got " + std::to_string(dim));
}

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

LatticePoint::LatticePoint(std::size_t dim) {
  check_dim(dim);
  dim_ = static_cast<std::uint8_t>(dim);
}

LatticePoint::LatticePoint(std::initializer_list<std::int64_t> coords)
    : LatticePoint(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

LatticePoint::LatticePoint(std::span<const std::int64_t> coords) {
  check_dim(coords.size());
  dim_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

std::int64_t LatticePoint::sup_norm() const {
  std::int64_t m = 0;
  for (std::size_t j = 0; j < dim_; ++j) m = std::max(m, std::abs(c_[j]));
  return m;
}

std::int64_t LatticePoint::l1_norm() const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < dim_; ++j) s += std::abs(c_[j]);
  return s;
}

std::int64_t LatticePoint::degree() const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < dim_; ++j) s += c_[j];
  return s;
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (std::size_t j = 0; j < dim_; ++j) r.c_[j] = -r.c_[j];
  return r;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  check_same_dim(dim_, o.dim_);
  for (std::size_t j = 0; j < dim_; ++j) c_[j] += o.c_[j];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  check_same_dim(dim_, o.dim_);
  for (std::size_t j = 0; j < dim_; ++j) c_[j] -= o.c_[j];
  return *this;
}

LatticePoint LatticePoint::scaled(std::int64_t k) const {
  LatticePoint r = *this;
  for (std::size_t j = 0; j < dim_; ++j) r.c_[j] *= k;
  return r;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << c_[j];
  os << ')';
  return os.str();
}

std::int64_t distance(const LatticePoint& m, const LatticePoint& n) { return (m - n).sup_norm(); }

SupportSet::SupportSet(std::size_t dim, std::initializer_list<LatticePoint> pts) : dim_(dim) {
  for (const auto& p : pts) insert(p);
}

void SupportSet::insert(const LatticePoint& n) {
  check_same_dim(dim_, n.dim());
  points_.insert(n);
}

std::int64_t dist(const LatticePoint& n, const SupportSet& s) {
  if (s.empty()) throw EmptySet("dist: empty support set");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& m : s) best = std::min(best, distance(n, m));
  return best;
}

std::int64_t dist(const SupportSet& s, const SupportSet& t) {
  if (s.empty() || t.empty()) throw EmptySet("dist: empty support set");
  check_same_dim(s.dim(), t.dim());
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& m : s) {
    for (const auto& n : t) {
      best = std::min(best, distance(m, n));
      if (best == 0) return 0;
    }
  }
  return best;
}

SupportSet ball_neighborhood(const SupportSet& s, std::int64_t radius) {
  SupportSet out(s.dim());
  if (radius < 0) return out;
  for (const auto& n : s) {
    LatticePoint lo = n, hi = n;
    for (std::size_t j = 0; j < n.dim(); ++j) {
      lo[j] -= radius;
      hi[j] += radius;
    }
    for_each_in_box(lo, hi, [&](const LatticePoint& p) { out.insert(p); });
  }
  return out;
}

std::vector<LatticePoint> ball_points(std::size_t dim, std::int64_t radius) {
  return sublattice_ball_points(dim, radius, 1);
}

std::vector<LatticePoint> sublattice_ball_points(std::size_t dim, std::int64_t radius,
                                                 std::int64_t spacing) {
  check_dim(dim);
  if (spacing < 1) throw Error("sublattice spacing must be >= 1");
  std::vector<LatticePoint> out;
  if (radius < 0) return out;
  const std::int64_t k = radius / spacing;
  LatticePoint lo(dim), hi(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    lo[j] = -k;
    hi[j] = k;
  }
  for_each_in_box(lo, hi, [&](const LatticePoint& p) { out.push_back(p.scaled(spacing)); });
  return out;
}

}  // namespace atoral
