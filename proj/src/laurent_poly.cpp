#include "atoral/laurent_poly.hpp"

#include <sstream>

namespace atoral {

SupportGeometry support_geometry(const IntLaurentPoly& p) {
  SupportGeometry g{SupportSet(p.dim()), 0, 0};
  for (const auto& [e, c] : p) {
    g.support.insert(e);
    mpz_class a = abs(c);
    if (a > g.sup_norm) g.sup_norm = a;
    g.l1_norm += a;
  }
  return g;
}

bool is_integral(const RatLaurentPoly& p) {
  for (const auto& [e, c] : p)
    if (c.get_den() != 1) return false;
  return true;
}

IntLaurentPoly to_integer(const RatLaurentPoly& p) {
  IntLaurentPoly r(p.dim());
  for (const auto& [e, c] : p) {
    if (c.get_den() != 1) throw Error("coefficient " + c.get_str() + " is not an integer");
    r.add_term(e, c.get_num());
  }
  return r;
}

std::string variable_name(std::size_t j, std::size_t dim) {
  if (dim <= 3) return std::string(1, "xyz"[j]);
  return "x" + std::to_string(j + 1);
}

namespace {

template <class C>
std::string render(const LaurentPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    C mag = abs(c);
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit_monomial = true;
    for (std::size_t j = 0; j < p.dim(); ++j) unit_monomial = unit_monomial && e[j] == 0;
    const bool show_coef = mag != 1 || unit_monomial;
    if (show_coef) os << mag.get_str();
    bool wrote = show_coef;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (e[j] == 0) continue;
      if (wrote) os << '*';
      os << variable_name(j, p.dim());
      if (e[j] != 1) os << '^' << e[j];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntLaurentPoly& p) { return render(p); }
std::string to_string(const RatLaurentPoly& p) { return render(p); }

}  // namespace atoral
