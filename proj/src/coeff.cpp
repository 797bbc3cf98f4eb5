#include "ghl/coeff.hpp"

#include <cctype>

#include "ghl/error.hpp"

namespace ghl {

Coeff::Coeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coeff Coeff::rational(long num, long den) {
  if (den == 0) throw InvalidParameter("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(q, 0);
}

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero coefficient");
  mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string Coeff::to_string() const {
  if (is_real()) return re_.get_str();
  std::string s = "(";
  if (sgn(re_) != 0) {
    s += re_.get_str();
    if (sgn(im_) > 0) s += "+";
  }
  if (im_ == 1) {
    s += "i";
  } else if (im_ == -1) {
    s += "-i";
  } else {
    s += im_.get_str() + "i";
  }
  return s + ")";
}

namespace {

mpq_class parse_rational(const std::string& t) {
  if (t.empty()) throw ParseError("empty rational");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Coeff Coeff::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty coefficient");
  if (t.front() == '(') {
    if (t.back() != ')') throw ParseError("unbalanced coefficient '" + text + "'");
    t = t.substr(1, t.size() - 2);
  }
  if (t.back() != 'i') {
    std::string r = t;
    if (!r.empty() && r.front() == '+') r.erase(0, 1);
    return Coeff(parse_rational(r), 0);
  }
  // split "a+bi" at the last sign that is not the leading one
  std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (!re_part.empty() && re_part.front() == '+') re_part.erase(0, 1);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part.front() == '+') im_part.erase(0, 1);
  return Coeff(re_part.empty() ? mpq_class(0) : parse_rational(re_part), parse_rational(im_part));
}

}  // namespace ghl
