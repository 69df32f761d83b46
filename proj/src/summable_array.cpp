#include "atoral/summable_array.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace atoral {

RealSummableArray::RealSummableArray(std::size_t dim, double tail_bound) : dim_(dim) {
  check_dim(dim);
  set_tail_bound(tail_bound);
}

RealSummableArray RealSummableArray::from_integer(const IntLaurentPoly& p) {
  RealSummableArray v(p.dim());
  for (const auto& [e, c] : p) v.terms_.emplace_hint(v.terms_.end(), e, c.get_d());
  return v;
}

void RealSummableArray::set_tail_bound(double t) {
  if (!(t >= 0.0)) throw Error("tail bound must be nonnegative");
  tail_bound_ = t;
}

double RealSummableArray::coefficient(const LatticePoint& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

void RealSummableArray::add_term(const LatticePoint& e, double c) {
  check_same_dim(dim_, e.dim());
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double RealSummableArray::stored_l1() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::abs(c);
  return s;
}

double RealSummableArray::stored_sup() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

RealSummableArray RealSummableArray::translated(const LatticePoint& n) const {
  RealSummableArray r(dim_, tail_bound_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + n, c);
  return r;
}

RealSummableArray RealSummableArray::restricted(const SupportSet& s) const {
  check_same_dim(dim_, s.dim());
  RealSummableArray r(dim_, tail_bound_);
  for (const auto& [e, c] : terms_)
    if (s.contains(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

RealSummableArray RealSummableArray::pruned(double threshold) const {
  RealSummableArray r(dim_, tail_bound_);
  double dropped = 0.0;
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) < threshold)
      dropped += std::abs(c);
    else
      r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  r.tail_bound_ += dropped;
  return r;
}

namespace {

using TermList = std::vector<std::pair<LatticePoint, double>>;

template <class Map>
TermList as_list(const Map& m) {
  TermList out;
  out.reserve(m.size());
  for (const auto& [e, c] : m) {
    if constexpr (std::is_same_v<typename Map::mapped_type, double>)
      out.emplace_back(e, c);
    else
      out.emplace_back(e, c.get_d());
  }
  return out;
}

// Dense accumulation over the bounding box of the result when it is not much
// larger than the number of products; sparse map accumulation otherwise.
RealSummableArray::term_map convolve(std::size_t dim, const TermList& a, const TermList& b) {
  RealSummableArray::term_map out;
  if (a.empty() || b.empty()) return out;
  auto widen = [&](const TermList& t, LatticePoint& l, LatticePoint& h) {
    l = h = t.front().first;
    for (const auto& [e, c] : t)
      for (std::size_t j = 0; j < dim; ++j) {
        l[j] = std::min(l[j], e[j]);
        h[j] = std::max(h[j], e[j]);
      }
  };
  LatticePoint la, ha, lb, hb;
  widen(a, la, ha);
  widen(b, lb, hb);
  const LatticePoint lo = la + lb;
  const LatticePoint hi = ha + hb;
  std::vector<std::int64_t> extent(dim);
  double volume = 1.0;
  for (std::size_t j = 0; j < dim; ++j) {
    extent[j] = hi[j] - lo[j] + 1;
    volume *= static_cast<double>(extent[j]);
  }
  const double products = static_cast<double>(a.size()) * static_cast<double>(b.size());
  constexpr double kDenseFloor = 4096;
  constexpr double kDenseCeiling = 1 << 26;
  if (volume <= std::min(std::max(kDenseFloor, 4.0 * products), kDenseCeiling)) {
    std::vector<double> dense(static_cast<std::size_t>(volume), 0.0);
    auto index = [&](const LatticePoint& e) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < dim; ++j)
        idx = idx * static_cast<std::size_t>(extent[j]) + static_cast<std::size_t>(e[j] - lo[j]);
      return idx;
    };
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) dense[index(ea + eb)] += ca * cb;
    std::size_t k = 0;
    for_each_in_box(lo, hi, [&](const LatticePoint& e) {
      if (dense[k] != 0.0) out.emplace_hint(out.end(), e, dense[k]);
      ++k;
    });
    return out;
  }
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto [it, inserted] = out.try_emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

RealSummableArray make(std::size_t dim, RealSummableArray::term_map terms, double tail) {
  RealSummableArray r(dim, tail);
  for (auto& [e, c] : terms) r.add_term(e, c);
  return r;
}

}  // namespace

RealSummableArray mul(const RealSummableArray& a, const RealSummableArray& b) {
  check_same_dim(a.dim(), b.dim());
  const double tail = a.l1_norm() * b.tail_bound() + a.tail_bound() * b.l1_norm();
  return make(a.dim(), convolve(a.dim(), as_list(a.terms()), as_list(b.terms())), tail);
}

RealSummableArray mul(const IntLaurentPoly& a, const RealSummableArray& b) {
  check_same_dim(a.dim(), b.dim());
  const double tail = a.l1_norm().get_d() * b.tail_bound();
  return make(a.dim(), convolve(a.dim(), as_list(a.terms()), as_list(b.terms())), tail);
}

RealSummableArray mul(const RealSummableArray& a, const IntLaurentPoly& b) { return mul(b, a); }

RealSummableArray restrict_to(const RealSummableArray& v, const SupportSet& s) {
  return v.restricted(s);
}

RealSummableArray translate(const RealSummableArray& v, const LatticePoint& n) {
  return v.translated(n);
}

IntLaurentPoly round_to_int(const RealSummableArray& v, double tolerance) {
  IntLaurentPoly out(v.dim());
  for (const auto& [e, c] : v) {
    const double nearest = std::nearbyint(c);
    if (!std::isfinite(c) || std::abs(c - nearest) >= 0.5 - tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "coefficient " << c << " at " << e.to_string() << " has no unambiguous nearest integer";
      throw AmbiguousRounding(os.str());
    }
    if (nearest != 0.0) out.add_term(e, mpz_class(nearest));
  }
  return out;
}

}  // namespace atoral
