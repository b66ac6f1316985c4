#include "sevenfold/jacobian.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sevenfold/elimination.hpp"
#include "sevenfold/linalg.hpp"
#include "sevenfold/sparse_fp.hpp"

namespace sevenfold::jacobian {
namespace {

std::uint64_t pack(const Exponents& e) {
  std::uint64_t key = 0;
  for (auto x : e) key = (key << 6) | x;
  return key;
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents c{};
  for (unsigned i = 0; i < kVars; ++i) c[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return c;
}

void enumerate_monomials(unsigned d, unsigned var, Exponents& cur, std::vector<Exponents>& out) {
  if (var == kVars - 1) {
    cur[var] = static_cast<std::uint8_t>(d);
    out.push_back(cur);
    return;
  }
  for (int k = static_cast<int>(d); k >= 0; --k) {
    cur[var] = static_cast<std::uint8_t>(k);
    enumerate_monomials(d - static_cast<unsigned>(k), var + 1, cur, out);
  }
  cur[var] = 0;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p - 1;
  for (std::uint32_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;  // p = 2
}

std::uint32_t rational_mod_p(const Rational& q, std::uint32_t p) {
  const Integer pp = static_cast<unsigned long>(p);
  Integer den = q.get_den() % pp;
  if (den == 0) throw std::invalid_argument("prime divides a coefficient denominator");
  Integer num = q.get_num() % pp;
  if (num < 0) num += pp;
  return static_cast<std::uint32_t>(num.get_ui() * static_cast<std::uint64_t>(inverse_mod(static_cast<std::uint32_t>(den.get_ui()), p)) % p);
}

// Rows m·∂_j f of the degree-d multiplication matrix, as (column, coefficient) lists.
template <class Emit>
void multiplication_rows(const Poly9& f, unsigned d, Emit&& emit) {
  const auto& target = MonomialBasis::of_degree(d);
  const auto& source = MonomialBasis::of_degree(d - 2);
  std::vector<Poly9> partials;
  for (unsigned j = 1; j <= kVars; ++j) partials.push_back(partial(f, j));
  for (std::size_t i = 0; i < source.size(); ++i)
    for (const auto& pj : partials) {
      std::vector<std::pair<std::size_t, const Cyclotomic*>> row;
      for (const auto& [e, c] : pj.terms()) row.emplace_back(target.index(add_exponents(e, source[i])), &c);
      emit(row);
    }
}

void require_cubic(const Poly9& f) {
  if (f.degree() != 3u) throw std::invalid_argument("expected a nonzero cubic form");
}

std::vector<Cyclotomic> trace_powers(const PackedMatrix19& g) {
  const auto g2 = g * g;
  return {g.trace(), g2.trace(), (g2 * g).trace()};
}

// Trace of g on span{∂_j f}, assuming g·f = f.
Cyclotomic trace_on_partials(const Matrix<Cyclotomic>& g, const std::vector<Poly9>& partials) {
  const auto& basis = MonomialBasis::of_degree(2);
  Matrix<Cyclotomic> a(basis.size(), partials.size());
  for (std::size_t j = 0; j < partials.size(); ++j)
    for (const auto& [e, c] : partials[j].terms()) a(basis.index(e), j) = c;
  Cyclotomic trace;
  for (std::size_t j = 0; j < partials.size(); ++j) {
    const auto image = act(g, partials[j]);
    std::vector<Cyclotomic> b(basis.size());
    for (const auto& [e, c] : image.terms()) b[basis.index(e)] = c;
    const auto x = solve(a, b);
    if (!x) throw std::domain_error("the span of the partials is not stable");
    trace += (*x)[j];
  }
  return trace;
}

const psl2::ProjectiveRep& light_rep() {
  static const psl2::ProjectiveRep rep = [] {
    auto r = psl2::build_rep();
    if (!r.certify_light().passed) throw std::logic_error("representation failed certification");
    return r;
  }();
  return rep;
}

}  // namespace

Exponents monomial(std::initializer_list<unsigned> vars) {
  Exponents e{};
  for (unsigned v : vars) {
    if (v < 1 || v > kVars) throw std::invalid_argument("variable index out of range");
    ++e[v - 1];
  }
  return e;
}

Poly9::Poly9(const Cyclotomic& c) {
  if (!c.is_zero()) terms_[Exponents{}] = c;
}

Poly9::Poly9(const Exponents& e, const Cyclotomic& c) {
  if (!c.is_zero()) terms_[e] = c;
}

Poly9 Poly9::variable(unsigned j) { return Poly9(monomial({j})); }

Cyclotomic Poly9::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::optional<unsigned> Poly9::degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return std::nullopt;
  return d;
}

bool Poly9::has_rational_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!c.try_rational()) return false;
  return true;
}

Poly9 Poly9::scaled(const Cyclotomic& c) const {
  Poly9 out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

void Poly9::add_term(const Exponents& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly9& Poly9::operator+=(const Poly9& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Poly9& Poly9::operator-=(const Poly9& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Poly9 operator*(const Poly9& a, const Poly9& b) {
  Poly9 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

std::string Poly9::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lexicographic order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = c.to_string();
    bool negative = !coef.empty() && coef[0] == '-' && c.try_rational();
    if (negative) coef = coef.substr(1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (unsigned i = 0; i < kVars; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool unit = coef == "1";
    if (mono.empty())
      os << coef;
    else if (unit)
      os << mono;
    else if (c.try_rational())
      os << coef << "*" << mono;
    else
      os << "(" << coef << ")*" << mono;
  }
  return os.str();
}

Poly9 pencil(const Rational& lambda) {
  Poly9 f;
  for (auto [a, b] : std::initializer_list<std::pair<unsigned, unsigned>>{
           {1, 6}, {6, 2}, {2, 7}, {7, 4}, {4, 5}, {5, 8}, {8, 9}, {9, 3}, {3, 1}})
    f += Poly9(monomial({a, a, b}));
  for (auto m : {monomial({1, 7, 8}), monomial({2, 3, 5}), monomial({4, 6, 9})}) f += Poly9(m, Cyclotomic(lambda));
  return f;
}

Poly9 adler_cubic() { return pencil(Rational(-2)); }

Poly9 partial(const Poly9& f, unsigned j) {
  if (j < 1 || j > kVars) throw std::invalid_argument("variable index out of range");
  Poly9 out;
  for (const auto& [e, c] : f.terms()) {
    if (!e[j - 1]) continue;
    Exponents d = e;
    --d[j - 1];
    out += Poly9(d, c * Cyclotomic(static_cast<long>(e[j - 1])));
  }
  return out;
}

Poly9 act(const Matrix<Cyclotomic>& g, const Poly9& f) {
  if (g.rows() != kVars || g.cols() != kVars) throw std::invalid_argument("act expects a 9x9 matrix");
  if (!inverse(g)) throw std::invalid_argument("act: singular matrix");
  std::vector<std::vector<Poly9>> powers(kVars);
  for (unsigned j = 0; j < kVars; ++j) {
    Poly9 form;
    for (unsigned k = 0; k < kVars; ++k) form += Poly9(monomial({k + 1}), g(k, j));
    powers[j].push_back(Poly9(Cyclotomic(1)));
    powers[j].push_back(form);
  }
  Poly9 out;
  for (const auto& [e, c] : f.terms()) {
    Poly9 term(Cyclotomic(1));
    for (unsigned j = 0; j < kVars; ++j) {
      while (powers[j].size() <= e[j]) powers[j].push_back(powers[j].back() * powers[j][1]);
      if (e[j]) term = term * powers[j][e[j]];
    }
    out += term.scaled(c);
  }
  return out;
}

std::optional<Cyclotomic> invariance_scalar(const Matrix<Cyclotomic>& g, const Poly9& f) {
  if (f.is_zero()) return std::nullopt;
  const auto image = act(g, f);
  const auto& [e, c] = *f.terms().begin();
  const Cyclotomic scalar = image.coefficient(e) / c;
  if (!(image == f.scaled(scalar))) return std::nullopt;
  return scalar;
}

const MonomialBasis& MonomialBasis::of_degree(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot.reset(new MonomialBasis(d));
  return *slot;
}

MonomialBasis::MonomialBasis(unsigned d) : degree_(d) {
  if (d > 63) throw std::invalid_argument("monomial degree too large");
  Exponents cur{};
  enumerate_monomials(d, 0, cur, monomials_);
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_[pack(monomials_[i])] = static_cast<std::uint32_t>(i);
}

std::size_t MonomialBasis::index(const Exponents& e) const {
  auto it = lookup_.find(pack(e));
  if (it == lookup_.end() || total_degree(e) != degree_) throw std::out_of_range("monomial of another degree");
  return it->second;
}

GradedSlice graded_slice(const Poly9& f, unsigned d) {
  require_cubic(f);
  GradedSlice s;
  s.degree = d;
  s.dim_s = MonomialBasis::of_degree(d).size();
  if (d >= 2) {
    s.spanning_rows = MonomialBasis::of_degree(d - 2).size() * kVars;
    if (f.has_rational_coefficients()) {
      Matrix<Rational> m(s.spanning_rows, s.dim_s);
      std::size_t r = 0;
      multiplication_rows(f, d, [&](const auto& row) {
        for (const auto& [col, c] : row) m(r, col) = *c->try_rational();
        ++r;
      });
      s.rank_i = rank(m);
    } else {
      Matrix<Cyclotomic> m(s.spanning_rows, s.dim_s);
      std::size_t r = 0;
      multiplication_rows(f, d, [&](const auto& row) {
        for (const auto& [col, c] : row) m(r, col) = *c;
        ++r;
      });
      s.rank_i = gauss_jordan(std::move(m)).rank();
    }
  }
  s.dim_r = s.dim_s - s.rank_i;
  return s;
}

std::size_t graded_dim(const Poly9& f, int d) {
  if (d < 0) return 0;
  return graded_slice(f, static_cast<unsigned>(d)).dim_r;
}

std::uint32_t reduce_mod_p(const Cyclotomic& c, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (auto q = c.try_rational()) return rational_mod_p(*q, p);
  const unsigned n = c.order();
  if ((p - 1) % n) throw std::invalid_argument("cyclotomic order does not divide p - 1");
  const std::uint32_t omega = pow_mod(least_primitive_root(p), (p - 1) / n, p);
  std::uint64_t sum = 0;
  for (const auto& [e, q] : c.terms()) sum = (sum + static_cast<std::uint64_t>(rational_mod_p(q, p)) * pow_mod(omega, e, p)) % p;
  return static_cast<std::uint32_t>(sum);
}

std::size_t graded_dim_mod_p(const Poly9& f, int d, std::uint32_t p) {
  require_cubic(f);
  if (d < 0) return 0;
  const auto& basis = MonomialBasis::of_degree(static_cast<unsigned>(d));
  if (d < 2) return basis.size();
  SparseMatrixFp m(p, basis.size());
  std::map<const Cyclotomic*, std::uint32_t> reduced;
  multiplication_rows(f, static_cast<unsigned>(d), [&](const auto& row) {
    std::vector<std::pair<std::uint32_t, long long>> entries;
    for (const auto& [col, c] : row) {
      auto [it, fresh] = reduced.try_emplace(c, 0);
      if (fresh) it->second = reduce_mod_p(*c, p);
      entries.emplace_back(static_cast<std::uint32_t>(col), it->second);
    }
    m.add_row(std::move(entries));
  });
  return basis.size() - sparse_rank_fp(m);
}

std::size_t hodge_number(const Poly9& f, unsigned q) {
  if (q > 7) throw std::invalid_argument("hodge_number: q must lie in 0..7");
  if (q >= 4) q = 7 - q;
  return graded_dim(f, 3 * (static_cast<int>(q) + 1) - 9);
}

characters::Character character_on_I2(const Poly9& f, psl2::GroupTag group) {
  require_cubic(f);
  const auto& rep = light_rep();
  std::vector<Poly9> partials;
  for (unsigned j = 1; j <= kVars; ++j) partials.push_back(partial(f, j));
  std::vector<Cyclotomic> values;
  for (const auto& cls : psl2::group_data(group).classes) {
    const auto g = rep.matrix(cls.rep);
    const auto s = invariance_scalar(g, f);
    if (!s || !(*s == Cyclotomic(1))) throw std::domain_error("cubic is not invariant under class " + cls.label);
    values.push_back(trace_on_partials(g, partials));
  }
  return characters::Character(characters::table(group), std::move(values));
}

characters::Character character_on_R3(const Poly9& f, psl2::GroupTag group) {
  const auto i2 = character_on_I2(f, group);
  if (graded_slice(f, 3).rank_i != 81) throw std::domain_error("dim I_3 is not 81");
  const auto& rep = light_rep();
  std::vector<Cyclotomic> values;
  const auto& classes = psl2::group_data(group).classes;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto t = trace_powers(rep.packed(classes[c].rep));
    const Cyclotomic s3 = (t[0] * t[0] * t[0] + Cyclotomic(3) * t[1] * t[0] + Cyclotomic(2) * t[2]).scaled(make_rational(1, 6));
    values.push_back(s3 - t[0] * i2[c]);
  }
  return characters::Character(characters::table(group), std::move(values));
}

SmoothnessCertificate smooth_certificate_mod_p(const Poly9& f, std::uint32_t p) {
  require_cubic(f);
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (!f.has_rational_coefficients()) throw std::invalid_argument("smoothness certificate needs rational coefficients");
  for (const auto& [e, c] : f.terms()) reduce_mod_p(c, p);  // bad-prime check
  SmoothnessCertificate cert;
  cert.prime = p;
  const auto& basis = MonomialBasis::of_degree(10);
  SparseMatrixFp m(p, basis.size());
  multiplication_rows(f, 10, [&](const auto& row) {
    std::vector<std::pair<std::uint32_t, long long>> entries;
    for (const auto& [col, c] : row) entries.emplace_back(static_cast<std::uint32_t>(col), rational_mod_p(*c->try_rational(), p));
    m.add_row(std::move(entries));
  });
  cert.rows = m.rows();
  cert.cols = m.cols();
  cert.rank = sparse_rank_fp(m);
  cert.dim_r10 = cert.cols - cert.rank;
  cert.status = cert.dim_r10 == 0 ? SmoothStatus::certified_smooth : SmoothStatus::inconclusive;
  return cert;
}

std::string to_string(SmoothStatus s) { return s == SmoothStatus::certified_smooth ? "certified smooth" : "inconclusive"; }

std::vector<PencilRow> pencil_scan(const std::vector<Rational>& lambdas, const std::vector<std::uint32_t>& primes,
                                   bool heavy) {
  std::vector<PencilRow> rows;
  for (const auto& lambda : lambdas) {
    PencilRow row;
    row.lambda = lambda;
    const auto f = pencil(lambda);
    for (int d = 0; d <= 4; ++d) row.dims.push_back(graded_dim(f, d));
    if (heavy) {
      bool all_inconclusive = !primes.empty();
      for (auto p : primes) {
        row.certificates.push_back(smooth_certificate_mod_p(f, p));
        all_inconclusive = all_inconclusive && row.certificates.back().status == SmoothStatus::inconclusive;
      }
      row.suspected_singular = all_inconclusive;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sevenfold::jacobian
