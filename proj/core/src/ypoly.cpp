#include "toric/ypoly.hpp"

#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

YPolynomial::YPolynomial(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

YPolynomial::YPolynomial(long constant) : YPolynomial(Rational(constant)) {}

YPolynomial::YPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

YPolynomial YPolynomial::y() { return monomial(Rational(1), 1); }

YPolynomial YPolynomial::monomial(const Rational& coeff, int k) {
  YPolynomial p;
  if (coeff != 0) {
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = coeff;
  }
  return p;
}

YPolynomial YPolynomial::one_plus_y() {
  return YPolynomial(std::vector<Rational>{Rational(1), Rational(1)});
}

Rational YPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

void YPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

YPolynomial YPolynomial::operator-() const {
  YPolynomial r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator*=(const YPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

Rational YPolynomial::evaluate(const Rational& y0) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * y0 + *it;
  return v;
}

std::string YPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << rational_str(a);
    } else {
      if (a != 1) out << rational_str(a) << "*";
      out << "y";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial r(a);
  r *= b;
  return r;
}
YPolynomial operator*(const Rational& s, YPolynomial a) { return a *= s; }

YPolynomial ypoly_pow(const YPolynomial& p, unsigned long e) {
  YPolynomial r(1);
  for (unsigned long i = 0; i < e; ++i) r *= p;
  return r;
}

YPolynomial parse_ypoly(const std::string& s) {
  if (s == "0") return YPolynomial();
  std::vector<Rational> coeffs;
  const auto add_term = [&](int k, const Rational& c) {
    if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, Rational(0));
    coeffs[k] += c;
  };
  std::size_t pos = 0;
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (pos <= s.size()) {
    const std::size_t sep = std::min(s.find(" + ", pos), s.find(" - ", pos));
    const std::string token =
        s.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
    const std::size_t ypos = token.find('y');
    Rational mag;
    int k = 0;
    if (ypos == std::string::npos) {
      mag = parse_rational(token);
    } else {
      if (ypos == 0) {
        mag = 1;
      } else {
        if (token[ypos - 1] != '*')
          fail(Err::InvalidInput, "bad polynomial term: '" + token + "'");
        mag = parse_rational(token.substr(0, ypos - 1));
      }
      k = 1;
      if (ypos + 1 < token.size()) {
        const std::string kpart = token.substr(ypos + 2);
        if (token[ypos + 1] != '^' || kpart.empty() || kpart.size() > 6 ||
            kpart.find_first_not_of("0123456789") != std::string::npos)
          fail(Err::InvalidInput, "bad polynomial term: '" + token + "'");
        k = std::stoi(kpart);
      }
    }
    add_term(k, negative ? Rational(-mag) : mag);
    if (sep == std::string::npos) break;
    negative = (s[sep + 1] == '-');
    pos = sep + 3;
  }
  return YPolynomial(std::move(coeffs));
}

std::pair<YPolynomial, YPolynomial> ypoly_divrem(const YPolynomial& a, const YPolynomial& b) {
  if (b.is_zero()) fail(Err::InvalidInput, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  int db = b.degree();
  Rational lead = b.coeff(db);
  if (a.degree() < db) return {YPolynomial(), a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[k] / lead;
    if (q == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  return {YPolynomial(std::move(quo)), YPolynomial(std::move(rem))};
}

YPolynomial ypoly_gcd(YPolynomial a, YPolynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = ypoly_divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational inv = Rational(1) / a.coeff(a.degree());
    a *= inv;
  }
  return a;
}

YPolynomial exact_divide_by_unit_power(const YPolynomial& p, unsigned int k) {
  YPolynomial q(p);
  for (unsigned int i = 0; i < k; ++i) {
    auto [quo, rem] = ypoly_divrem(q, YPolynomial::one_plus_y());
    if (!rem.is_zero())
      fail(Err::NotDivisible,
           "(" + p.str() + ") not divisible by (1 + y)^" + std::to_string(k));
    q = std::move(quo);
  }
  return q;
}

YRational::YRational(YPolynomial num, YPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Err::InvalidInput, "zero denominator in y-rational");
  reduce();
}

void YRational::reduce() {
  if (num_.is_zero()) {
    den_ = YPolynomial(1);
    return;
  }
  YPolynomial g = ypoly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = ypoly_divrem(num_, g).first;
    den_ = ypoly_divrem(den_, g).first;
  }
  Rational lead = den_.coeff(den_.degree());
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

const YPolynomial& YRational::as_polynomial() const {
  if (!is_polynomial())
    fail(Err::NotPolynomial, "not a polynomial: " + str());
  return num_;
}

YRational YRational::operator-() const {
  YRational r(*this);
  r.num_ = -r.num_;
  return r;
}

YRational& YRational::operator+=(const YRational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

YRational& YRational::operator-=(const YRational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

YRational& YRational::operator*=(const YRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

YRational& YRational::operator/=(const YRational& o) {
  if (o.is_zero()) fail(Err::InvalidInput, "division by zero y-rational");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

YRational YRational::inverse() const {
  if (is_zero()) fail(Err::InvalidInput, "inverse of zero y-rational");
  return YRational(den_, num_);
}

Rational YRational::evaluate(const Rational& y0) const {
  Rational d = den_.evaluate(y0);
  if (d == 0) fail(Err::InvalidInput, "denominator vanishes at y = " + rational_str(y0));
  return num_.evaluate(y0) / d;
}

std::string YRational::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

YRational operator+(YRational a, const YRational& b) { return a += b; }
YRational operator-(YRational a, const YRational& b) { return a -= b; }
YRational operator*(YRational a, const YRational& b) { return a *= b; }
YRational operator/(YRational a, const YRational& b) { return a /= b; }

YRational yrational_pow(const YRational& v, long e) {
  if (e < 0) return yrational_pow(v.inverse(), -e);
  YRational r(YPolynomial(1));
  for (long i = 0; i < e; ++i) r *= v;
  return r;
}

}  // namespace toric
