#include "akchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "akchar/errors.hpp"

namespace akchar {

namespace {

using Coeffs = std::vector<Integer>;

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
Coeffs divide_exact(Coeffs num, const Coeffs& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: divisor degree too large");
  Coeffs quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return quot;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::mutex g_cache_mutex;
std::map<unsigned, std::shared_ptr<const Coeffs>> g_cache;

std::shared_ptr<const Coeffs> cached_phi(unsigned m) {
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_cache.find(m);
    if (it != g_cache.end()) return it->second;
  }
  auto phi = std::make_shared<const Coeffs>(cyclotomic_polynomial(m));
  std::lock_guard lock(g_cache_mutex);
  return g_cache.emplace(m, std::move(phi)).first->second;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  Coeffs xm1(m + 1, 0);
  xm1[0] = -1;
  xm1[m] = 1;
  if (m == 1) return xm1;
  Coeffs divisor{1};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) divisor = multiply(divisor, *cached_phi(d));
  }
  return divide_exact(std::move(xm1), divisor);
}

unsigned euler_phi(unsigned m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloElem::CycloElem(unsigned m) : m_(m) {
  if (m == 0) throw std::invalid_argument("CycloElem: m must be positive");
  phi_ = cached_phi(m);
  coeffs_.assign(phi_->size() - 1, 0);
}

CycloElem::CycloElem(unsigned m, const std::vector<Integer>& coeffs) : CycloElem(m) {
  reduce(coeffs);
}

CycloElem CycloElem::from_integer(unsigned m, const Integer& c) {
  CycloElem z(m);
  z.coeffs_[0] = c;
  return z;
}

CycloElem CycloElem::root_power(unsigned m, long e) {
  CycloElem z(m);
  long r = e % static_cast<long>(m);
  if (r < 0) r += m;
  std::vector<Integer> full(static_cast<std::size_t>(r) + 1, 0);
  full.back() = 1;
  z.reduce(std::move(full));
  return z;
}

void CycloElem::reduce(std::vector<Integer> full) {
  const Coeffs& phi = *phi_;
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = full.size(); i-- > deg;) {
    const Integer c = full[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) full[i - deg + j] -= c * phi[j];
  }
  full.resize(deg, 0);
  coeffs_ = std::move(full);
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Integer CycloElem::to_integer() const {
  if (!is_integer()) throw std::domain_error("CycloElem::to_integer: element is not rational");
  return coeffs_[0];
}

void CycloElem::check_same_ring(const CycloElem& rhs) const {
  if (m_ != rhs.m_) {
    std::ostringstream os;
    os << "CycloElem: moduli " << m_ << " and " << rhs.m_ << " differ";
    throw DimensionMismatch(os.str());
  }
}

CycloElem CycloElem::operator-() const {
  CycloElem z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& rhs) {
  check_same_ring(rhs);
  reduce(multiply(coeffs_, rhs.coeffs_));
  return *this;
}

CycloElem& CycloElem::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool CycloElem::operator==(const CycloElem& rhs) const {
  return m_ == rhs.m_ && coeffs_ == rhs.coeffs_;
}

CycloElem CycloElem::pow(unsigned e) const {
  CycloElem result = from_integer(m_, 1);
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << Integer(abs(c)).get_str();
    if (i >= 1) os << " * z";
    if (i >= 2) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

CycloElem specialize_to_group(const MultiPoly& p, unsigned m) {
  if (p.num_u() != m) {
    std::ostringstream os;
    os << "specialize_to_group: polynomial has " << p.num_u() << " u-variables, modulus is " << m;
    throw DimensionMismatch(os.str());
  }
  // Accumulate in Z[x]/(x^m - 1) first, then reduce once mod Phi_m.
  std::vector<Integer> acc(m, 0);
  for (const auto& t : p.terms()) {
    unsigned long e = 0;
    for (std::size_t i = 1; i < t.exps.size(); ++i) {
      e += static_cast<unsigned long>(i - 1) * static_cast<unsigned long>(t.exps[i]);
    }
    acc[e % m] += t.coeff;
  }
  return CycloElem(m, acc);
}

}  // namespace akchar
