#include "sevenfold/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sevenfold/elimination.hpp"

namespace sevenfold {
namespace {

struct OrderTable {
  unsigned n = 1;
  std::vector<std::uint32_t> basis;
  std::vector<int> index_of;
  // exponent -> signed combination of basis indices
  std::vector<std::vector<std::pair<std::uint32_t, int>>> reduction;
  std::vector<Cyclotomic::Term> one;
};

std::vector<std::pair<unsigned, unsigned>> factor(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;  // (p, p^m)
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

long mod_inverse(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("no modular inverse");
  return ((x % m) + m) % m;
}

// Canonical expansion of η^a for η a primitive q-th root, q = p^m.
std::vector<std::pair<unsigned, int>> prime_power_reduction(unsigned p, unsigned q, unsigned a) {
  const unsigned low = q / p;
  const unsigned i = a % low, j = a / low;
  if (p == 2) {
    if (j == 0) return {{a, 1}};
    return {{i, -1}};
  }
  if (j != 0) return {{a, 1}};
  std::vector<std::pair<unsigned, int>> out;
  for (unsigned jj = 1; jj < p; ++jj) out.emplace_back(i + jj * low, -1);
  return out;
}

std::unique_ptr<OrderTable> build_table(unsigned n) {
  auto t = std::make_unique<OrderTable>();
  t->n = n;
  const auto primes = factor(n);
  std::vector<unsigned long> idem;
  for (auto [p, q] : primes) {
    const unsigned long rest = n / q;
    idem.push_back(rest * static_cast<unsigned long>(mod_inverse(static_cast<long>(rest % q), q)) % n);
  }

  // per-exponent expansion as (exponent, sign) before indexing
  std::vector<std::vector<std::pair<std::uint32_t, int>>> raw(n);
  std::vector<bool> in_basis(n, false);
  for (unsigned e = 0; e < n; ++e) {
    std::vector<std::pair<std::uint32_t, int>> acc{{0u, 1}};
    for (std::size_t k = 0; k < primes.size(); ++k) {
      auto [p, q] = primes[k];
      auto local = prime_power_reduction(p, q, e % q);
      std::vector<std::pair<std::uint32_t, int>> next;
      next.reserve(acc.size() * local.size());
      for (auto [x, s] : acc)
        for (auto [a, s2] : local)
          next.emplace_back(static_cast<std::uint32_t>((x + idem[k] * a) % n), s * s2);
      acc = std::move(next);
    }
    if (acc.size() == 1 && acc[0].second == 1 && acc[0].first == e) in_basis[e] = true;
    raw[e] = std::move(acc);
  }
  t->index_of.assign(n, -1);
  for (unsigned e = 0; e < n; ++e) {
    if (!in_basis[e]) continue;
    t->index_of[e] = static_cast<int>(t->basis.size());
    t->basis.push_back(e);
  }
  t->reduction.resize(n);
  for (unsigned e = 0; e < n; ++e) {
    for (auto [x, s] : raw[e]) {
      if (t->index_of[x] < 0) throw std::logic_error("cyclotomic basis table inconsistent");
      t->reduction[e].emplace_back(static_cast<std::uint32_t>(t->index_of[x]), s);
    }
    std::sort(t->reduction[e].begin(), t->reduction[e].end());
  }
  for (auto [b, s] : t->reduction[0]) t->one.emplace_back(t->basis[b], Rational(s));
  return t;
}

const OrderTable& table(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  thread_local const OrderTable* last = nullptr;
  if (last && last->n == n) return *last;
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<OrderTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  last = slot.get();
  return *last;
}

class Accumulator {
 public:
  explicit Accumulator(const OrderTable& t) : t_(t), acc_(t.basis.size()), touched_(t.basis.size(), 0) {}

  void add(std::uint32_t exponent, const Rational& c) {
    for (auto [b, s] : t_.reduction[exponent]) {
      if (s > 0)
        mpq_add(acc_[b].get_mpq_t(), acc_[b].get_mpq_t(), c.get_mpq_t());
      else
        mpq_sub(acc_[b].get_mpq_t(), acc_[b].get_mpq_t(), c.get_mpq_t());
      touched_[b] = 1;
    }
  }

  std::vector<Cyclotomic::Term> finish() {
    std::vector<Cyclotomic::Term> out;
    for (std::size_t b = 0; b < acc_.size(); ++b)
      if (touched_[b] && acc_[b] != 0) out.emplace_back(t_.basis[b], std::move(acc_[b]));
    return out;
  }

 private:
  const OrderTable& t_;
  std::vector<Rational> acc_;
  std::vector<char> touched_;
};

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (auto [p, q] : factor(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<std::uint32_t>& basis_exponents(unsigned n) { return table(n).basis; }

Cyclotomic::Cyclotomic(long v) {
  if (v != 0) terms_.emplace_back(0, Rational(v));
}

Cyclotomic::Cyclotomic(const Integer& v) {
  if (v != 0) terms_.emplace_back(0, Rational(v));
}

Cyclotomic::Cyclotomic(const Rational& v) {
  if (v != 0) terms_.emplace_back(0, v);
}

Cyclotomic Cyclotomic::from_exponents(unsigned n, std::span<const Rational> raw) {
  if (raw.size() != n) throw std::invalid_argument("from_exponents: expected n coefficients");
  Accumulator acc(table(n));
  for (unsigned e = 0; e < n; ++e)
    if (raw[e] != 0) acc.add(e, raw[e]);
  return Cyclotomic(n, acc.finish());
}

Cyclotomic Cyclotomic::from_coordinates(unsigned n, std::span<const Rational> coords) {
  const auto& t = table(n);
  if (coords.size() != t.basis.size()) throw std::invalid_argument("from_coordinates: expected phi(n) coordinates");
  std::vector<Term> terms;
  for (std::size_t b = 0; b < coords.size(); ++b)
    if (coords[b] != 0) terms.emplace_back(t.basis[b], coords[b]);
  return Cyclotomic(n, std::move(terms));
}

std::vector<Rational> Cyclotomic::coordinates() const {
  const auto& t = table(order_);
  std::vector<Rational> out(t.basis.size());
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(t.index_of[e])] = c;
  return out;
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0) throw std::invalid_argument("lifted: target order is not a multiple");
  const unsigned long f = m / order_;
  Accumulator acc(table(m));
  for (const auto& [e, c] : terms_) acc.add(static_cast<std::uint32_t>(e * f % m), c);
  return Cyclotomic(m, acc.finish());
}

std::optional<Cyclotomic> Cyclotomic::in_order(unsigned m) const {
  if (m == 0) throw std::invalid_argument("in_order: order must be positive");
  if (m % order_ == 0) return lifted(m);
  const unsigned g = std::gcd(order_, m);
  for (unsigned k = 1; k < order_; ++k) {
    if (k % g != 1 % g || std::gcd(k, order_) != 1) continue;
    if (!(galois(k) == *this)) return std::nullopt;
  }
  // Express in the lifted basis of Q(ζ_g).
  const auto& tg = table(g);
  const auto& tn = table(order_);
  Matrix<Rational> a(tn.basis.size(), tg.basis.size());
  for (std::size_t j = 0; j < tg.basis.size(); ++j) {
    auto col = Cyclotomic(g, {{tg.basis[j], Rational(1)}}).lifted(order_);
    for (const auto& [e, c] : col.terms_) a(static_cast<std::size_t>(tn.index_of[e]), j) = c;
  }
  auto x = solve(a, coordinates());
  if (!x) return std::nullopt;
  return from_coordinates(g, *x).lifted(m);
}

Cyclotomic Cyclotomic::minimal() const {
  if (order_ == 1) return *this;
  if (terms_.empty()) return Cyclotomic();
  for (unsigned d = 1; d < order_; ++d) {
    if (order_ % d != 0 || d % 4 == 2) continue;
    if (auto r = in_order(d)) return *r;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long n = order_;
  const long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1 && n != 1) throw std::domain_error("galois: exponent not coprime to the order");
  if (kk == 1 % n) return *this;
  Accumulator acc(table(order_));
  for (const auto& [e, c] : terms_) acc.add(static_cast<std::uint32_t>(static_cast<long>(e) * kk % n), c);
  return Cyclotomic(order_, acc.finish());
}

Cyclotomic Cyclotomic::conj() const { return galois(static_cast<long>(order_) - 1); }

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  if (r == 0) return Cyclotomic();
  Cyclotomic out = *this;
  for (auto& [e, c] : out.terms_) c *= r;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero cyclotomic");
  if (auto r = try_rational()) return Cyclotomic(Rational(1 / *r));
  const auto& t = table(order_);
  const std::size_t phi = t.basis.size();
  Matrix<Rational> a(phi, phi);
  for (std::size_t j = 0; j < phi; ++j) {
    auto col = *this * Cyclotomic(order_, {{t.basis[j], Rational(1)}});
    for (const auto& [e, c] : col.terms_) a(static_cast<std::size_t>(t.index_of[e]), j) = c;
  }
  auto x = solve(a, Cyclotomic(1).lifted(order_).coordinates());
  if (!x) throw std::logic_error("cyclotomic inverse: singular multiplication matrix");
  return from_coordinates(order_, *x);
}

std::optional<Rational> Cyclotomic::try_rational() const {
  if (terms_.empty()) return Rational(0);
  const auto& one = table(order_).one;
  if (terms_.size() != one.size()) return std::nullopt;
  const Rational c = terms_[0].second / one[0].second;
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (terms_[i].first != one[i].first) return std::nullopt;
    if (terms_[i].second != c * one[i].second) return std::nullopt;
  }
  return c;
}

std::optional<Integer> Cyclotomic::try_integer() const {
  auto r = try_rational();
  if (!r || !is_integral(*r)) return std::nullopt;
  return r->get_num();
}

Cyclotomic Cyclotomic::operator-() const { return scaled(Rational(-1)); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (b.terms_.empty()) return *this;
  if (order_ != b.order_) {
    const unsigned m = lcm_order(order_, b.order_);
    *this = lifted(m);
    if (b.order_ != m) return *this += b.lifted(m);
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this += -b; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Cyclotomic();
  if (a.order_ == 1) return b.scaled(a.terms_[0].second);
  if (b.order_ == 1) return a.scaled(b.terms_[0].second);
  if (a.order_ != b.order_) {
    const unsigned m = lcm_order(a.order_, b.order_);
    return a.lifted(m) * b.lifted(m);
  }
  const unsigned n = a.order_;
  std::vector<Rational> raw(n);
  std::vector<char> touched(n, 0);
  mpq_class prod;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) {
      const unsigned e = (e1 + e2) % n;
      mpq_mul(prod.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
      mpq_add(raw[e].get_mpq_t(), raw[e].get_mpq_t(), prod.get_mpq_t());
      touched[e] = 1;
    }
  Accumulator acc(table(n));
  for (unsigned e = 0; e < n; ++e)
    if (touched[e] && raw[e] != 0) acc.add(e, raw[e]);
  return Cyclotomic(n, acc.finish());
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) { return *this = *this / b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  const unsigned m = lcm_order(a.order_, b.order_);
  return a.lifted(m).terms_ == b.lifted(m).terms_;
}

std::string Cyclotomic::to_string() const {
  if (auto r = try_rational()) return r->get_str();
  const Cyclotomic m = minimal();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : m.terms_) {
    std::string piece;
    if (e == 0)
      piece = c.get_str();
    else {
      const std::string root = "E(" + std::to_string(m.order_) + ")^" + std::to_string(e);
      if (c == 1)
        piece = root;
      else if (c == -1)
        piece = "-" + root;
      else
        piece = c.get_str() + "*" + root;
    }
    if (!first && piece.front() != '-') os << '+';
    os << piece;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }
std::string to_string(const Cyclotomic& c) { return c.to_string(); }

Cyclotomic zeta(unsigned n, long k) {
  const long nn = n;
  std::vector<Rational> raw(n);
  raw[static_cast<std::size_t>(((k % nn) + nn) % nn)] = 1;
  return Cyclotomic::from_exponents(n, raw);
}

Cyclotomic xi(long k) { return zeta(19, k); }

Cyclotomic gauss_nu() {
  std::vector<Rational> raw(19);
  for (long k = 1; k <= 9; ++k) raw[static_cast<std::size_t>(k * k % 19)] += 1;
  return Cyclotomic::from_exponents(19, raw);
}

Cyclotomic i_sqrt19() { return Cyclotomic(1) + Cyclotomic(2) * gauss_nu(); }

Cyclotomic a_k(long k) { return zeta(9, k) + zeta(9, -k); }

Cyclotomic b_k(long k) { return -(zeta(10, k) + zeta(10, -k)); }

int legendre(long a, long p) {
  long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  long result = 1, base = r, e = (p - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace sevenfold
