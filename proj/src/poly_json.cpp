#include "atoral/poly_json.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace atoral {

json to_json(const IntLaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p) {
    auto coords = e.coords();
    terms.push_back({{"exp", std::vector<std::int64_t>(coords.begin(), coords.end())},
                     {"coef", c.get_str()}});
  }
  return {{"d", p.dim()}, {"terms", terms}};
}

namespace {

std::size_t read_dim(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs \"d\" and \"terms\"");
  const auto d = j.at("d").get<std::int64_t>();
  if (d < 1 || d > static_cast<std::int64_t>(kMaxDim))
    throw ParseError("polynomial JSON: bad dimension " + std::to_string(d));
  return static_cast<std::size_t>(d);
}

LatticePoint read_exp(const json& t, std::size_t d) {
  const auto exp = t.at("exp").get<std::vector<std::int64_t>>();
  if (exp.size() != d) throw ParseError("polynomial JSON: exponent of wrong length");
  return LatticePoint(std::span<const std::int64_t>(exp));
}

}  // namespace

IntLaurentPoly int_poly_from_json(const json& j) {
  try {
    const std::size_t d = read_dim(j);
    IntLaurentPoly p(d);
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coef");
      mpz_class v;
      if (c.is_string()) {
        if (v.set_str(c.get<std::string>(), 10) != 0)
          throw ParseError("polynomial JSON: bad integer \"" + c.get<std::string>() + "\"");
      } else if (c.is_number_integer()) {
        v = mpz_class(std::to_string(c.get<std::int64_t>()));
      } else {
        throw ParseError("polynomial JSON: coefficient must be an integer string");
      }
      p.add_term(read_exp(t, d), v);
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw ParseError("expected a real number");
  const std::string s = j.get<std::string>();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ParseError("bad real \"" + s + "\"");
  return v;
}

json to_json(const RealSummableArray& v) {
  json terms = json::array();
  for (const auto& [e, c] : v) {
    auto coords = e.coords();
    terms.push_back({{"exp", std::vector<std::int64_t>(coords.begin(), coords.end())},
                     {"coef", format_real(c)}});
  }
  return {{"d", v.dim()}, {"terms", terms}, {"tail_bound", format_real(v.tail_bound())}};
}

RealSummableArray real_array_from_json(const json& j) {
  try {
    const std::size_t d = read_dim(j);
    RealSummableArray v(d, j.contains("tail_bound") ? parse_real(j.at("tail_bound")) : 0.0);
    for (const auto& t : j.at("terms")) v.add_term(read_exp(t, d), parse_real(t.at("coef")));
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("array JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Inline expression parser (recursive descent).

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t dim) : s_(text), dim_(dim) {}

  IntLaurentPoly parse() {
    IntLaurentPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  IntLaurentPoly expr() {
    IntLaurentPoly acc(dim_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    while (true) {
      IntLaurentPoly t = term();
      acc += negate ? -t : t;
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        return acc;
    }
  }

  IntLaurentPoly term() {
    IntLaurentPoly acc = power();
    while (true) {
      if (eat('*')) {
        acc *= power();
        continue;
      }
      const char c = peek();
      if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c))) {
        acc *= power();  // implicit multiplication, e.g. 2x or 3(1+x)
        continue;
      }
      return acc;
    }
  }

  IntLaurentPoly power() {
    IntLaurentPoly base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    if (!neg) eat('+');
    const std::int64_t k = integer_literal_small();
    if (!neg) {
      IntLaurentPoly r = IntLaurentPoly::one(dim_);
      for (std::int64_t i = 0; i < k; ++i) r *= base;
      return r;
    }
    // Negative powers exist in the ring only for units +-x^n.
    if (base.size() != 1 || abs(base.begin()->second) != 1)
      fail("negative exponent applied to a non-unit");
    const auto& [e, c] = *base.begin();
    mpz_class sign = (k % 2 == 0) ? mpz_class(1) : c;
    return IntLaurentPoly::monomial(e.scaled(-k), sign);
  }

  IntLaurentPoly atom() {
    skip_ws();
    if (eat('(')) {
      IntLaurentPoly r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntLaurentPoly::constant(dim_, mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t j = variable_index();
      LatticePoint e(dim_);
      e[j] = 1;
      return IntLaurentPoly::monomial(e);
    }
    fail("expected a number, variable or '('");
  }

  std::int64_t integer_literal_small() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  std::size_t variable_index() {
    const char c = s_[pos_++];
    if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto idx = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (idx < 1 || idx > dim_) fail("variable index out of range");
      return idx - 1;
    }
    switch (c) {
      case 'x': return 0;
      case 'y': return 1;
      case 'z': return 2;
      default: --pos_; fail("unknown variable");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t dim_;
};

std::size_t infer_dim(std::string_view s) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == 'y') d = std::max<std::size_t>(d, 2);
    if (c == 'z') d = std::max<std::size_t>(d, 3);
    if (c == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t k = i + 1;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      d = std::max<std::size_t>(d, std::stoul(std::string(s.substr(i + 1, std::min<std::size_t>(k - i - 1, 3)))));
    }
  }
  return d;
}

}  // namespace

IntLaurentPoly parse_polynomial(std::string_view text, std::optional<std::size_t> dim) {
  std::size_t d = infer_dim(text);
  if (dim) {
    if (*dim < d) throw ParseError("expression uses more variables than dimension " + std::to_string(*dim));
    d = *dim;
  }
  if (d > kMaxDim) throw ParseError("too many variables");
  return ExprParser(text, d).parse();
}

}  // namespace atoral
