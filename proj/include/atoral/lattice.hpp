#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace atoral {

/// Largest lattice dimension supported by LatticePoint's inline storage.
inline constexpr std::size_t kMaxDim = 8;

/// An exponent vector n in Z^d, stored inline (no heap allocation) so that
/// it is cheap to use as a map key.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim);
  LatticePoint(std::initializer_list<std::int64_t> coords);
  explicit LatticePoint(std::span<const std::int64_t> coords);

  std::size_t dim() const { return dim_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coords() const { return {c_.data(), dim_}; }

  /// ||n|| = max_j |n_j|.
  std::int64_t sup_norm() const;
  /// sum_j |n_j|.
  std::int64_t l1_norm() const;
  /// Total degree sum_j n_j.
  std::int64_t degree() const;

  LatticePoint operator-() const;
  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  LatticePoint scaled(std::int64_t k) const;

  // Unused slots stay zero, so the defaulted comparison is lexicographic
  // within a fixed dimension.
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  std::string to_string() const;

 private:
  std::uint8_t dim_ = 0;
  std::array<std::int64_t, kMaxDim> c_{};
};

/// Sup-norm distance ||m - n||.
std::int64_t distance(const LatticePoint& m, const LatticePoint& n);

void check_dim(std::size_t dim);
void check_same_dim(std::size_t a, std::size_t b);

/// A finite subset of Z^d.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::size_t dim) : dim_(dim) {}
  SupportSet(std::size_t dim, std::initializer_list<LatticePoint> pts);

  std::size_t dim() const { return dim_; }
  const std::set<LatticePoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticePoint& n) const { return points_.count(n) != 0; }
  void insert(const LatticePoint& n);
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::set<LatticePoint> points_;
};

/// dist(S, T) = min ||m - n|| over m in S, n in T. Throws EmptySet.
std::int64_t dist(const SupportSet& s, const SupportSet& t);
/// dist({n}, S).
std::int64_t dist(const LatticePoint& n, const SupportSet& s);

/// B_R(S) = {n : dist(n, S) <= R}.
SupportSet ball_neighborhood(const SupportSet& s, std::int64_t radius);

/// All points of B_R = {n in Z^d : ||n|| <= R}, lexicographic order.
std::vector<LatticePoint> ball_points(std::size_t dim, std::int64_t radius);
/// B_{R,M} = B_R intersected with M Z^d.
std::vector<LatticePoint> sublattice_ball_points(std::size_t dim, std::int64_t radius,
                                                 std::int64_t spacing);

/// Calls fn(point) for every point of the box lo <= n <= hi (componentwise).
template <class Fn>
void for_each_in_box(const LatticePoint& lo, const LatticePoint& hi, Fn&& fn) {
  const std::size_t d = lo.dim();
  for (std::size_t j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return;
  LatticePoint cur = lo;
  while (true) {
    fn(static_cast<const LatticePoint&>(cur));
    std::size_t j = d;
    while (true) {
      if (j == 0) return;
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo[j];
    }
  }
}

}  // namespace atoral
