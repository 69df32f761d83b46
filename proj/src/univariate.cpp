#include "atoral/univariate.hpp"

#include <algorithm>

#include "atoral/errors.hpp"

namespace atoral::univariate {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly reversed(const Poly& p) {
  Poly r(p.rbegin(), p.rend());
  trim(r);
  return r;
}

Poly derivative(const Poly& p) {
  Poly r;
  for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * static_cast<long>(k));
  trim(r);
  return r;
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

mpq_class evaluate(const Poly& p, const mpq_class& z) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw ZeroPolynomial("univariate division by zero");
  Poly rem = a;
  trim(rem);
  Poly quo;
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, mpq_class(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const mpq_class factor = rem.back() / b.back();
    quo[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  Poly a = p;
  trim(a);
  if (a.empty()) return seq;
  seq.push_back(a);
  Poly b = derivative(a);
  while (!b.empty()) {
    seq.push_back(b);
    Poly r = divmod(seq[seq.size() - 2], b).second;
    for (auto& c : r) c = -c;
    b = std::move(r);
  }
  return seq;
}

namespace {

int sign_variations(const std::vector<Poly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sgn(evaluate(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Poly& p, const mpq_class& a, const mpq_class& b) {
  const auto seq = sturm_sequence(p);
  if (seq.empty()) throw ZeroPolynomial("Sturm count of the zero polynomial");
  if (evaluate(p, a) == 0 || evaluate(p, b) == 0) throw Error("Sturm count: endpoint is a root");
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Poly palindromic_reduction(const Poly& g) {
  const int n = degree(g);
  if (n < 0 || n % 2 != 0) throw Error("palindromic reduction needs even degree");
  const std::size_t m = static_cast<std::size_t>(n / 2);
  for (std::size_t k = 0; k <= m; ++k)
    if (g[k] != g[g.size() - 1 - k]) throw Error("palindromic reduction of a non-palindromic polynomial");
  // z^k + z^-k = D_k(u) with D_0 = 2, D_1 = u, D_{k+1} = u D_k - D_{k-1}.
  const Poly u{mpq_class(0), mpq_class(1)};
  Poly prev{mpq_class(2)}, cur = u;
  Poly result{g[m]};
  for (std::size_t k = 1; k <= m; ++k) {
    Poly term = cur;
    for (auto& c : term) c *= g[m + k];
    result = result + term;
    Poly next = (u * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  trim(result);
  return result;
}

}  // namespace atoral::univariate
