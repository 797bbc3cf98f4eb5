#include "ghl/diffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "ghl/error.hpp"

namespace ghl {

// ---------------------------------------------------------------- monomials

DiffMonomial DiffMonomial::variable(int order, int exponent) {
  DiffMonomial m;
  if (exponent > 0) m.exps.emplace_back(order, exponent);
  return m;
}

DiffMonomial DiffMonomial::mu(int power) {
  DiffMonomial m;
  m.mu_power = power;
  return m;
}

int DiffMonomial::degree() const {
  int d = 0;
  for (const auto& [j, e] : exps) d += e;
  return d;
}

int DiffMonomial::top_order() const { return exps.empty() ? -1 : exps.back().first; }

int DiffMonomial::total_order() const {
  int s = 0;
  for (const auto& [j, e] : exps) s += j * e;
  return s;
}

int DiffMonomial::exponent_of(int order) const {
  for (const auto& [j, e] : exps)
    if (j == order) return e;
  return 0;
}

int DiffMonomial::weight(int w_v, int w_mu) const {
  int w = mu_power * w_mu;
  for (const auto& [j, e] : exps) w += e * (j + w_v);
  return w;
}

DiffMonomial DiffMonomial::operator*(const DiffMonomial& o) const {
  DiffMonomial r;
  r.mu_power = mu_power + o.mu_power;
  r.exps.reserve(exps.size() + o.exps.size());
  auto a = exps.begin();
  auto b = o.exps.begin();
  while (a != exps.end() || b != o.exps.end()) {
    if (b == o.exps.end() || (a != exps.end() && a->first < b->first)) {
      r.exps.push_back(*a++);
    } else if (a == exps.end() || b->first < a->first) {
      r.exps.push_back(*b++);
    } else {
      r.exps.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

DiffMonomial DiffMonomial::without(int order, int count) const {
  DiffMonomial r;
  r.mu_power = mu_power;
  for (const auto& [j, e] : exps) {
    if (j != order) {
      r.exps.emplace_back(j, e);
    } else if (e > count) {
      r.exps.emplace_back(j, e - count);
    }
  }
  return r;
}

std::string variable_name(std::string_view var, int order) {
  std::string s(var);
  if (order == 1) return s + "x";
  if (order == 2) return s + "xx";
  if (order >= 3) return s + std::to_string(order) + "x";
  return s;
}

std::string DiffMonomial::to_string(std::string_view var) const {
  std::string s;
  auto append = [&s](const std::string& f) {
    if (!s.empty()) s += "*";
    s += f;
  };
  if (mu_power > 0) append(mu_power == 1 ? "mu" : "mu^" + std::to_string(mu_power));
  for (const auto& [j, e] : exps) {
    std::string f = variable_name(var, j);
    if (e > 1) f += "^" + std::to_string(e);
    append(f);
  }
  return s;
}

// -------------------------------------------------------------- polynomials

DiffPoly::DiffPoly(const Coeff& c) {
  if (!c.is_zero()) terms_.emplace(DiffMonomial::one(), c);
}

DiffPoly DiffPoly::var(int order) { return monomial(DiffMonomial::variable(order)); }

DiffPoly DiffPoly::mu() { return monomial(DiffMonomial::mu()); }

DiffPoly DiffPoly::monomial(const DiffMonomial& m, const Coeff& c) {
  DiffPoly p;
  p.add_term(m, c);
  return p;
}

int DiffPoly::max_order() const {
  int k = -1;
  for (const auto& [m, c] : terms_) k = std::max(k, m.top_order());
  return k;
}

int DiffPoly::max_mu_power() const {
  int k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.mu_power);
  return k;
}

void DiffPoly::add_term(const DiffMonomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly DiffPoly::pow(int e) const {
  if (e < 0) throw InvalidParameter("negative power of a differential polynomial");
  DiffPoly result(1);
  DiffPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

DiffPoly DiffPoly::drop_mu() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_)
    if (m.mu_power == 0) r.terms_.emplace(m, c);
  return r;
}

namespace {

// Print order: total derivative order desc, mu power desc, then the exponent
// list read from the highest derivative down, descending.
bool print_before(const DiffMonomial& a, const DiffMonomial& b) {
  if (a.total_order() != b.total_order()) return a.total_order() > b.total_order();
  if (a.mu_power != b.mu_power) return a.mu_power > b.mu_power;
  return std::lexicographical_compare(b.exps.rbegin(), b.exps.rend(), a.exps.rbegin(),
                                      a.exps.rend());
}

}  // namespace

std::string DiffPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return print_before(a->first, b->first); });

  std::string out;
  for (const auto* t : order) {
    const DiffMonomial& m = t->first;
    const Coeff& c = t->second;
    if (!out.empty()) out += " ";
    std::string body = m.to_string(var);
    if (c.is_real()) {
      out += sgn(c.re()) < 0 ? "-" : "+";
      mpq_class a = abs(c.re());
      if (body.empty()) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += body;
      }
    } else {
      out += "+" + c.to_string();
      if (!body.empty()) out += "*" + body;
    }
  }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

std::string strip(std::string_view text) {
  std::string s;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (comment || std::isspace(static_cast<unsigned char>(c))) continue;
    s += c;
  }
  return s;
}

bool parse_variable(const std::string& name, std::string_view var, int& order) {
  if (name.size() < var.size() || name.compare(0, var.size(), var) != 0) return false;
  std::string rest = name.substr(var.size());
  if (rest.empty()) {
    order = 0;
  } else if (std::all_of(rest.begin(), rest.end(), [](char c) { return c == 'x'; })) {
    order = static_cast<int>(rest.size());
  } else if (rest.back() == 'x' && rest.size() >= 2 &&
             std::all_of(rest.begin(), rest.end() - 1,
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    order = std::stoi(rest.substr(0, rest.size() - 1));
  } else {
    return false;
  }
  return true;
}

DiffPoly parse_factor(const std::string& f, std::string_view var,
                      const std::map<std::string, DiffPoly>& aliases) {
  std::string base = f;
  int power = 1;
  // exponent only applies outside parentheses
  std::size_t caret = f.rfind('^');
  if (caret != std::string::npos && f.find(')', caret) == std::string::npos) {
    base = f.substr(0, caret);
    std::string e = f.substr(caret + 1);
    if (e.empty() || !std::all_of(e.begin(), e.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad exponent in '" + f + "'");
    power = std::stoi(e);
  }
  if (base.empty()) throw ParseError("empty factor");

  DiffPoly value;
  int order = 0;
  if (base == "mu") {
    value = DiffPoly::mu();
  } else if (base == "i") {
    value = DiffPoly(Coeff::i());
  } else if (auto a = aliases.find(base); a != aliases.end()) {
    value = a->second;
  } else if (base.front() == '(' || std::isdigit(static_cast<unsigned char>(base.front()))) {
    value = DiffPoly(Coeff::parse(base));
  } else if (parse_variable(base, var, order)) {
    value = DiffPoly::var(order);
  } else {
    throw ParseError("unknown factor '" + base + "'");
  }
  return power == 1 ? value : value.pow(power);
}

}  // namespace

DiffPoly parse_diffpoly(std::string_view text, std::string_view var,
                        const std::map<std::string, DiffPoly>& aliases) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  if (s == "0") return {};

  // split into signed terms at depth-0 '+' / '-'
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) terms.emplace_back(sign, cur);
    cur.clear();
  };
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses");
    if (depth == 0 && (c == '+' || c == '-')) {
      if (cur.empty() && k > 0) throw ParseError("repeated sign");
      flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  flush();

  DiffPoly out;
  for (const auto& [sg, body] : terms) {
    DiffPoly term(sg);
    std::string f;
    depth = 0;
    for (char c : body + "*") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '*' && depth == 0) {
        term = term * parse_factor(f, var, aliases);
        f.clear();
      } else {
        f += c;
      }
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- operations

DiffPoly combine(const DiffPoly& p, const DiffPoly& q, CombineKind kind) {
  switch (kind) {
    case CombineKind::add:
      return p + q;
    case CombineKind::sub:
      return p - q;
    case CombineKind::mul:
      return p * q;
  }
  return {};
}

namespace {

void add_derivative(DiffPoly& out, const DiffMonomial& m, const Coeff& c) {
  for (const auto& [j, e] : m.exps) {
    DiffMonomial d = m.without(j, 1) * DiffMonomial::variable(j + 1);
    out.add_term(d, c * Coeff(e));
  }
}

}  // namespace

DiffPoly total_derivative(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) add_derivative(out, m, c);
  return out;
}

DiffPoly formal_integral(const DiffPoly& p) {
  DiffPoly rest = p;
  DiffPoly result;
  // Every step removes one term linear in the current top variable and only
  // introduces terms of strictly lower top order, so this bound is generous.
  std::size_t budget = 64 * (p.size() + 16) * static_cast<std::size_t>(p.max_order() + 2);
  while (!rest.is_zero()) {
    if (budget-- == 0) throw NotExact("integration did not terminate");
    const int top = rest.max_order();
    if (top <= 0)
      throw NotExact("residue " + rest.to_string("v") + " has no differential-polynomial antiderivative");

    // among terms of maximal top order pick the lexicographically largest
    const DiffMonomial* pick = nullptr;
    const Coeff* coef = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (m.top_order() != top) continue;
      if (pick == nullptr ||
          std::lexicographical_compare(pick->exps.rbegin(), pick->exps.rend(), m.exps.rbegin(),
                                       m.exps.rend())) {
        pick = &m;
        coef = &c;
      }
    }
    if (pick->exponent_of(top) != 1)
      throw NotExact("top variable appears nonlinearly in " + pick->to_string("v"));

    const DiffMonomial m = pick->without(top, 1);
    const int e = m.exponent_of(top - 1);
    const DiffMonomial lower = m.without(top - 1, e);
    const DiffMonomial cand_m = lower * DiffMonomial::variable(top - 1, e + 1);
    const Coeff cand_c = *coef / Coeff(e + 1);

    result.add_term(cand_m, cand_c);
    DiffPoly d;
    add_derivative(d, cand_m, cand_c);
    rest -= d;
  }
  return result;
}

DiffPoly substitute_argument(const DiffPoly& p, const DiffPoly& arg) {
  std::vector<DiffPoly> derivs{arg};
  const int need = p.max_order();
  for (int j = 1; j <= need; ++j) derivs.push_back(total_derivative(derivs.back()));

  std::map<std::pair<int, int>, DiffPoly> powers;
  auto power = [&](int j, int e) -> const DiffPoly& {
    auto it = powers.find({j, e});
    if (it != powers.end()) return it->second;
    DiffPoly v = e == 1 ? derivs[j] : derivs[j].pow(e);
    return powers.emplace(std::make_pair(j, e), std::move(v)).first->second;
  };

  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    DiffPoly term = DiffPoly::monomial(DiffMonomial::mu(m.mu_power), c);
    for (const auto& [j, e] : m.exps) term = term * power(j, e);
    out += term;
  }
  return out;
}

Coeff coefficient_of(const DiffPoly& p, const DiffMonomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? Coeff(0) : it->second;
}

bool weight_check(const DiffPoly& p, int w_v, int expected) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.first.weight(w_v) == expected; });
}

bool is_real(const DiffPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second.is_real(); });
}

}  // namespace ghl
