#include "akchar/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "akchar/errors.hpp"

namespace akchar {

namespace {

bool term_less(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.exps < b.exps; }

// Merge two sorted term lists, with rhs scaled by sign.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& lhs,
                                         const std::vector<MultiPoly::Term>& rhs, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->exps < b->exps)) {
      out.push_back(*a++);
    } else if (a == lhs.end() || b->exps < a->exps) {
      out.push_back({b->exps, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (c != 0) out.push_back({a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(const Integer& c, std::size_t num_u) {
  MultiPoly p(num_u);
  if (c != 0) p.terms_.push_back({Exponents(num_u + 1, 0), c});
  return p;
}

MultiPoly MultiPoly::monomial(const Integer& c, int eq, std::vector<int> eu) {
  MultiPoly p(eu.size());
  for (int e : eu) {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative u-exponent");
  }
  if (c == 0) return p;
  Exponents exps;
  exps.reserve(eu.size() + 1);
  exps.push_back(eq);
  exps.insert(exps.end(), eu.begin(), eu.end());
  p.terms_.push_back({std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::q_power(int e, std::size_t num_u) {
  MultiPoly p(num_u);
  Exponents exps(num_u + 1, 0);
  exps[0] = e;
  p.terms_.push_back({std::move(exps), 1});
  return p;
}

MultiPoly MultiPoly::u_power(std::size_t i, int e, std::size_t num_u) {
  if (i == 0 || i > num_u) throw std::invalid_argument("MultiPoly::u_power: index out of range");
  if (e < 0) throw std::invalid_argument("MultiPoly: negative u-exponent");
  MultiPoly p(num_u);
  Exponents exps(num_u + 1, 0);
  exps[i] = e;
  p.terms_.push_back({std::move(exps), 1});
  return p;
}

MultiPoly MultiPoly::one_minus_q(std::size_t num_u) {
  return constant(1, num_u) - q_power(1, num_u);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](int e) { return e == 0; });
}

Integer MultiPoly::coeff(const Exponents& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exps, 0}, term_less);
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

int MultiPoly::min_q_degree() const {
  if (terms_.empty()) return 0;
  return terms_.front().exps[0];
}

int MultiPoly::max_q_degree() const {
  if (terms_.empty()) return 0;
  return terms_.back().exps[0];
}

void MultiPoly::check_same_ring(const MultiPoly& rhs, const char* op) const {
  if (num_u_ != rhs.num_u_) {
    std::ostringstream os;
    os << "MultiPoly " << op << ": operands have " << num_u_ << " and " << rhs.num_u_
       << " u-variables";
    throw DimensionMismatch(os.str());
  }
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_same_ring(rhs, "+");
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_same_ring(rhs, "-");
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_same_ring(rhs, "*");
  if (lhs.is_zero() || rhs.is_zero()) return MultiPoly(lhs.num_u_);
  if (rhs.terms_.size() == 1) {
    const auto& t = rhs.terms_[0];
    return lhs.times_monomial(t.coeff, t.exps[0], std::vector<int>(t.exps.begin() + 1, t.exps.end()));
  }
  std::map<Exponents, Integer> acc;
  Exponents e(lhs.num_u_ + 1);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps[i] + b.exps[i];
      acc[e] += a.coeff * b.coeff;
    }
  }
  MultiPoly out(lhs.num_u_);
  out.terms_.reserve(acc.size());
  for (auto& [exps, c] : acc) {
    if (c != 0) out.terms_.push_back({exps, std::move(c)});
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  return num_u_ == rhs.num_u_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::times_monomial(const Integer& c, int eq, const std::vector<int>& eu) const {
  if (eu.size() != num_u_) throw DimensionMismatch("MultiPoly::times_monomial: wrong u-arity");
  MultiPoly out(num_u_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) {
    t.exps[0] += eq;
    for (std::size_t i = 0; i < num_u_; ++i) t.exps[i + 1] += eu[i];
    t.coeff *= c;
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(1, num_u_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly pow(const MultiPoly& p, unsigned e) { return p.pow(e); }

MultiPoly MultiPoly::embed(std::size_t num_u) const {
  if (num_u < num_u_) throw DimensionMismatch("MultiPoly::embed: cannot drop variables");
  MultiPoly out(num_u);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.exps.resize(num_u + 1, 0);
  return out;
}

MultiPoly MultiPoly::substitute_u(std::size_t i, const Integer& value) const {
  if (i == 0 || i > num_u_) throw std::invalid_argument("MultiPoly::substitute_u: index out of range");
  MultiPolyBuilder b(num_u_ - 1);
  Integer factor;
  for (const auto& t : terms_) {
    mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(t.exps[i]));
    Exponents e = t.exps;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
    b.add(e, t.coeff * factor);
  }
  return std::move(b).build();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << '-';
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    std::string sep;
    if (mag != 1 || t.exps == Exponents(t.exps.size(), 0)) {
      os << mag.get_str();
      sep = " * ";
    }
    if (t.exps[0] != 0) {
      os << sep << 'q';
      if (t.exps[0] != 1) os << '^' << t.exps[0];
      sep = " * ";
    }
    for (std::size_t i = 1; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      os << sep << 'u' << i;
      if (t.exps[i] != 1) os << '^' << t.exps[i];
      sep = " * ";
    }
  }
  return os.str();
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  long small_int() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    long v = std::stol(d);
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "MultiPoly::parse: " << msg << " at offset " << pos_ << " in '" << s_ << "'";
    throw ParseError(os.str());
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t num_u) {
  PolyLexer lex(text);
  MultiPolyBuilder builder(num_u);
  if (lex.done()) lex.fail("empty input");
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    if (lex.accept('+')) {
      sign = 1;
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    Exponents exps(num_u + 1, 0);
    bool have_factor = false;
    do {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(lex.digits());
      } else if (c == 'q') {
        lex.accept('q');
        long e = lex.accept('^') ? lex.small_int() : 1;
        exps[0] += static_cast<int>(e);
      } else if (c == 'u') {
        lex.accept('u');
        long idx = std::stol(lex.digits());
        if (idx < 1 || static_cast<std::size_t>(idx) > num_u) lex.fail("u-index out of range");
        long e = lex.accept('^') ? lex.small_int() : 1;
        if (e < 0) lex.fail("negative u-exponent");
        exps[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      } else {
        lex.fail("expected coefficient, q or u<i>");
      }
      have_factor = true;
    } while (lex.accept('*'));
    if (!have_factor) lex.fail("empty term");
    builder.add(exps, sign * coeff);
  }
  return std::move(builder).build();
}

void MultiPolyBuilder::add(const Exponents& exps, const Integer& c) {
  if (exps.size() != num_u_ + 1) throw DimensionMismatch("MultiPolyBuilder: wrong exponent arity");
  if (c != 0) pending_.push_back({exps, c});
}

void MultiPolyBuilder::add(const MultiPoly& p) {
  if (p.num_u() != num_u_) throw DimensionMismatch("MultiPolyBuilder: wrong u-arity");
  pending_.insert(pending_.end(), p.terms().begin(), p.terms().end());
}

MultiPoly MultiPolyBuilder::build() && {
  MultiPoly p(num_u_);
  p.terms_ = std::move(pending_);
  p.normalize();
  return p;
}

}  // namespace akchar
