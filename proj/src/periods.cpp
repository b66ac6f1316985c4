#include "sevenfold/periods.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sevenfold/elimination.hpp"
#include "sevenfold/psl2.hpp"

namespace sevenfold::periods {
namespace {

constexpr unsigned kP = 19;
constexpr std::size_t kCoords = 18;  // φ(19)

Cyclotomic in19(const Cyclotomic& c) {
  auto r = c.in_order(kP);
  if (!r) throw std::domain_error("period vector entry outside Q(zeta_19)");
  return *r;
}

unsigned mod19(long v) { return static_cast<unsigned>(((v % 19) + 19) % 19); }

unsigned inv19(unsigned a) {
  for (unsigned x = 1; x < kP; ++x)
    if (a * x % kP == 1) return x;
  throw std::domain_error("inv19: zero");
}

}  // namespace

PeriodVector::PeriodVector() = default;

PeriodVector::PeriodVector(std::array<Cyclotomic, 9> coords) : c_(std::move(coords)) {}

PeriodVector PeriodVector::scaled(const Cyclotomic& s) const {
  PeriodVector out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

PeriodVector& PeriodVector::operator+=(const PeriodVector& b) {
  for (std::size_t i = 0; i < 9; ++i) c_[i] += b.c_[i];
  return *this;
}

PeriodVector& PeriodVector::operator-=(const PeriodVector& b) {
  for (std::size_t i = 0; i < 9; ++i) c_[i] -= b.c_[i];
  return *this;
}

bool operator==(const PeriodVector& a, const PeriodVector& b) {
  for (std::size_t i = 0; i < 9; ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::vector<Rational> PeriodVector::rational_coordinates() const {
  std::vector<Rational> out;
  out.reserve(9 * kCoords);
  for (const auto& c : c_) {
    auto q = in19(c).coordinates();
    out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

PeriodVector PeriodVector::from_rational_coordinates(const std::vector<Rational>& q) {
  if (q.size() != 9 * kCoords) throw std::invalid_argument("from_rational_coordinates: expected 162 entries");
  PeriodVector out;
  for (std::size_t i = 0; i < 9; ++i)
    out.c_[i] = Cyclotomic::from_coordinates(kP, std::span<const Rational>(q.data() + i * kCoords, kCoords)).minimal();
  return out;
}

std::string PeriodVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 9; ++i) os << (i ? ", " : "") << c_[i].to_string();
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PeriodVector& v) { return os << v.to_string(); }

PeriodVector apply(const Matrix<Cyclotomic>& g, const PeriodVector& z) {
  if (g.rows() != 9 || g.cols() != 9) throw std::invalid_argument("apply: expected a 9x9 matrix");
  PeriodVector out;
  for (std::size_t i = 0; i < 9; ++i) {
    Cyclotomic acc;
    for (std::size_t j = 0; j < 9; ++j)
      if (!g(i, j).is_zero() && !z[j].is_zero()) acc += g(i, j) * z[j];
    out[i] = acc;
  }
  return out;
}

Cyclotomic nu() { return gauss_nu(); }

Cyclotomic one_plus_two_nu() { return i_sqrt19(); }

PeriodVector build_v(long k) {
  PeriodVector v;
  for (long j = 1; j <= 9; ++j) v[static_cast<std::size_t>(j - 1)] = xi(k * j * j);
  return v;
}

PeriodVector build_wprime(long k) {
  static const long coeff[6] = {1, -5, 10, -10, 5, -1};
  PeriodVector acc;
  for (long m = 0; m < 6; ++m) acc += build_v(k + m).scaled(Cyclotomic(coeff[m]));
  return acc.scaled(one_plus_two_nu().inverse());
}

Cyclotomic ell(long k, const PeriodVector& z) {
  Cyclotomic acc;
  for (long j = 1; j <= 9; ++j) acc += xi(k * j * j) * z[static_cast<std::size_t>(j - 1)];
  return acc;
}

std::optional<std::pair<Integer, Integer>> in_z_nu(const Cyclotomic& c) {
  const Cyclotomic x = in19(c);
  if (!(x.galois(4) == x)) return std::nullopt;
  const Cyclotomic b = (x - x.conj()) / one_plus_two_nu();
  const Cyclotomic a = x - b * nu();
  auto ai = a.try_integer();
  auto bi = b.try_integer();
  if (!ai || !bi) return std::nullopt;
  return std::make_pair(*ai, *bi);
}

unsigned reduce_f19(const Cyclotomic& c) {
  auto ab = in_z_nu(c);
  if (!ab) throw std::domain_error("reduce_f19: not in Z[nu]");
  Integer r = (ab->first + 9 * ab->second) % 19;
  if (r < 0) r += 19;
  return static_cast<unsigned>(r.get_ui());
}

// ---------------------------------------------------------------- lattices

PeriodLattice::PeriodLattice(const std::vector<PeriodVector>& generators, bool z_nu_module)
    : generators_(generators), z_nu_(z_nu_module) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(generators.size());
  Integer den = 1;
  for (const auto& g : generators) {
    rows.push_back(g.rational_coordinates());
    for (const auto& q : rows.back()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  Matrix<Integer> m(rows.size(), 9 * kCoords);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const Rational s = rows[r][c] * den;
      m(r, c) = s.get_num();
    }
  auto h = sevenfold::hnf(m, false);
  if (h.rank() != 18) throw std::invalid_argument("PeriodLattice: generators do not span rank 18");
  Integer g = den;
  for (std::size_t r = 0; r < 18; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (h.h(r, c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.h(r, c).get_mpz_t());
  hnf_ = Matrix<Integer>(18, m.cols());
  for (std::size_t r = 0; r < 18; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) hnf_(r, c) = h.h(r, c) / g;
  den_ = den / g;
  pivots_ = h.pivot_cols;
}

std::vector<PeriodVector> PeriodLattice::basis() const {
  std::vector<PeriodVector> out;
  out.reserve(rank());
  for (std::size_t r = 0; r < rank(); ++r) {
    std::vector<Rational> q(hnf_.cols());
    for (std::size_t c = 0; c < hnf_.cols(); ++c) {
      q[c] = Rational(hnf_(r, c), den_);
      q[c].canonicalize();
    }
    out.push_back(PeriodVector::from_rational_coordinates(q));
  }
  return out;
}

bool PeriodLattice::contains(const PeriodVector& z) const {
  const auto q = z.rational_coordinates();
  std::vector<Integer> x(q.size());
  for (std::size_t c = 0; c < q.size(); ++c) {
    const Rational s = q[c] * den_;
    if (s.get_den() != 1) return false;
    x[c] = s.get_num();
  }
  for (std::size_t r = 0; r < rank(); ++r) {
    const std::size_t p = pivots_[r];
    if (x[p] == 0) continue;
    if (x[p] % hnf_(r, p) != 0) return false;
    const Integer f = x[p] / hnf_(r, p);
    for (std::size_t c = p; c < x.size(); ++c)
      if (hnf_(r, c) != 0) x[c] -= f * hnf_(r, c);
  }
  return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
}

bool PeriodLattice::contains(const PeriodLattice& other) const {
  const auto b = other.basis();
  return std::all_of(b.begin(), b.end(), [&](const PeriodVector& v) { return contains(v); });
}

Integer PeriodLattice::index_of(const PeriodLattice& sub) const {
  if (!contains(sub)) throw std::invalid_argument("index_of: not a sublattice");
  Rational ratio = 1;
  for (std::size_t r = 0; r < rank(); ++r)
    ratio *= Rational(sub.hnf_(r, sub.pivots_[r]), sub.den_) / Rational(hnf_(r, pivots_[r]), den_);
  ratio.canonicalize();
  if (ratio.get_den() != 1) throw std::logic_error("index_of: non-integral covolume ratio");
  return ratio.get_num();
}

bool PeriodLattice::nu_stable() const {
  const Cyclotomic n = nu();
  for (const auto& b : basis())
    if (!contains(b.scaled(n))) return false;
  return true;
}

bool operator==(const PeriodLattice& a, const PeriodLattice& b) { return a.den_ == b.den_ && a.hnf_ == b.hnf_; }

namespace {

std::vector<PeriodVector> with_nu_multiples(const std::vector<PeriodVector>& gens) {
  std::vector<PeriodVector> out;
  const Cyclotomic n = nu();
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.scaled(n));
  }
  return out;
}

// (v_k − v_{k+1})/(1+2ν), k = 0..7, so t_i = u_{i−1}.
const std::vector<PeriodVector>& t_lifts() {
  static const std::vector<PeriodVector> u = [] {
    std::vector<PeriodVector> out;
    const Cyclotomic inv = one_plus_two_nu().inverse();
    for (long k = 0; k < 8; ++k) out.push_back((build_v(k) - build_v(k + 1)).scaled(inv));
    return out;
  }();
  return u;
}

// Columns u₀ … u₇, v₀; coordinates over this Q(ζ₁₉)-basis of V.
const Matrix<Cyclotomic>& quotient_basis_inverse() {
  static const Matrix<Cyclotomic> inv = [] {
    Matrix<Cyclotomic> b(9, 9);
    const auto& u = t_lifts();
    const PeriodVector v0 = build_v(0);
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t k = 0; k < 8; ++k) b(i, k) = u[k][i];
      b(i, 8) = v0[i];
    }
    auto r = inverse(b);
    if (!r) throw std::logic_error("t-lifts and v0 are not a basis of V");
    return *r;
  }();
  return inv;
}

}  // namespace

PeriodLattice lattice_lambda0() {
  std::vector<PeriodVector> gens;
  for (long k = 0; k < 9; ++k) gens.push_back(build_v(k));
  return PeriodLattice(with_nu_multiples(gens), true);
}

PeriodLattice lattice_lambda8() {
  static std::mutex m;
  static std::optional<PeriodLattice> cache;
  std::lock_guard lock(m);
  if (cache) return *cache;
  std::vector<PeriodVector> gens = t_lifts();
  gens.push_back(build_v(0));
  for (const auto& g : gens)
    for (long k = 0; k < 9; ++k)
      if (!in_z_nu(ell(k, g))) throw std::logic_error("lattice_lambda8: generator has ell_k outside Z[nu]");
  PeriodLattice l(with_nu_multiples(gens), true);
  if (l.index_of(lattice_lambda0()) != ipow(19, 8)) throw std::logic_error("lattice_lambda8: index over Lambda0 is not 19^8");
  cache = l;
  return l;
}

F19Vector quotient_coordinates(const PeriodVector& z) {
  const PeriodVector c = apply(quotient_basis_inverse(), z);
  if (!in_z_nu(c[8])) throw std::domain_error("quotient_coordinates: vector outside Lambda8");
  F19Vector out{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (!in_z_nu(c[i])) throw std::domain_error("quotient_coordinates: vector outside Lambda8");
    out[i] = reduce_f19(c[i]);
  }
  return out;
}

PeriodVector lift(const F19Vector& t_coords) {
  PeriodVector acc;
  const auto& u = t_lifts();
  for (std::size_t i = 0; i < 8; ++i)
    if (t_coords[i] % kP) acc += u[i].scaled(Cyclotomic(static_cast<long>(t_coords[i] % kP)));
  return acc;
}

// ------------------------------------------------------------ F₁₉ algebra

namespace {

using Rows = std::vector<F19Vector>;

F19Matrix mul(const F19Matrix& a, const F19Matrix& b) {
  F19Matrix c{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      unsigned s = 0;
      for (std::size_t k = 0; k < 8; ++k) s = (s + a[i][k] * b[k][j]) % kP;
      c[i][j] = s;
    }
  return c;
}

// Reduced row echelon form; zero rows dropped.
Rows rref(Rows rows) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < 8 && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const unsigned inv = inv19(rows[r][c]);
    for (auto& x : rows[r]) x = x * inv % kP;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (std::size_t j = 0; j < 8; ++j) rows[i][j] = (rows[i][j] + (kP - f) * rows[r][j]) % kP;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t pivot_of(const F19Vector& row) {
  for (std::size_t c = 0; c < 8; ++c)
    if (row[c]) return c;
  return 8;
}

F19Vector reduce_mod(F19Vector x, const Rows& w) {
  for (const auto& row : w) {
    const unsigned f = x[pivot_of(row)];
    if (!f) continue;
    for (std::size_t j = 0; j < 8; ++j) x[j] = (x[j] + (kP - f) * row[j]) % kP;
  }
  return x;
}

// Right kernel of an 8×8 matrix given by its columns.
Rows kernel(const F19Matrix& m) {
  Rows rows(m.begin(), m.end());
  Rows e = rref(rows);
  std::vector<bool> is_pivot(8, false);
  for (const auto& r : e) is_pivot[pivot_of(r)] = true;
  Rows out;
  for (std::size_t f = 0; f < 8; ++f) {
    if (is_pivot[f]) continue;
    F19Vector v{};
    v[f] = 1;
    for (const auto& r : e) v[pivot_of(r)] = (kP - r[f]) % kP;
    out.push_back(v);
  }
  return out;
}

F19Matrix inverse19(const F19Matrix& a) {
  std::vector<std::array<unsigned, 16>> aug(8);
  for (std::size_t i = 0; i < 8; ++i) {
    aug[i].fill(0);
    for (std::size_t j = 0; j < 8; ++j) aug[i][j] = a[i][j];
    aug[i][8 + i] = 1;
  }
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t p = c;
    while (p < 8 && aug[p][c] == 0) ++p;
    if (p == 8) throw std::domain_error("inverse19: singular");
    std::swap(aug[p], aug[c]);
    const unsigned inv = inv19(aug[c][c]);
    for (auto& x : aug[c]) x = x * inv % kP;
    for (std::size_t i = 0; i < 8; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const unsigned f = aug[i][c];
      for (std::size_t j = 0; j < 16; ++j) aug[i][j] = (aug[i][j] + (kP - f) * aug[c][j]) % kP;
    }
  }
  F19Matrix out{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) out[i][j] = aug[i][8 + j];
  return out;
}

}  // namespace

std::vector<std::vector<F19Vector>> stable_subspaces(const F19Matrix& a) {
  std::vector<Rows> all{Rows{}};
  std::set<Rows> level{Rows{}};
  for (std::size_t d = 0; d < 8; ++d) {
    std::set<Rows> next;
    for (const auto& w : level) {
      for (unsigned lambda = 0; lambda < kP; ++lambda) {
        // x ↦ (A − λ)x mod W, as a matrix with rows indexed by output coordinate
        F19Matrix m{};
        for (std::size_t j = 0; j < 8; ++j) {
          F19Vector col{};
          for (std::size_t i = 0; i < 8; ++i) col[i] = (a[i][j] + (i == j ? kP - lambda : 0)) % kP;
          col = reduce_mod(col, w);
          for (std::size_t i = 0; i < 8; ++i) m[i][j] = col[i];
        }
        Rows comp;
        for (const auto& k : kernel(m)) comp.push_back(reduce_mod(k, w));
        comp = rref(comp);
        const std::size_t dim = comp.size();
        if (dim == 0) continue;
        if (dim > 4) throw std::runtime_error("stable_subspaces: eigenspace too large to enumerate");
        std::vector<unsigned> coef(dim, 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) total *= kP;
        for (std::size_t n = 1; n < total; ++n) {
          std::size_t t = n;
          for (std::size_t i = 0; i < dim; ++i) {
            coef[i] = static_cast<unsigned>(t % kP);
            t /= kP;
          }
          std::size_t lead = 0;
          while (coef[lead] == 0) ++lead;
          if (coef[lead] != 1) continue;
          F19Vector x{};
          for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < 8; ++j) x[j] = (x[j] + coef[i] * comp[i][j]) % kP;
          Rows grown = w;
          grown.push_back(x);
          next.insert(rref(grown));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

FlagQuotient flag_quotient() {
  FlagQuotient out;
  out.t_lifts = t_lifts();
  const auto t = psl2::matrix_T();
  for (std::size_t i = 0; i < 8; ++i) {
    const F19Vector col = quotient_coordinates(apply(t, out.t_lifts[i]));
    for (std::size_t r = 0; r < 8; ++r) out.tau_hat_t[r][i] = col[r];
  }
  // w_{8−k} = (−1)^k Σ_j C(k, j)(−1)^j t_{j+1}
  out.w.assign(8, F19Vector{});
  for (unsigned k = 0; k < 8; ++k) {
    F19Vector& w = out.w[7 - k];
    for (unsigned j = 0; j <= k; ++j) {
      const long sign = ((k + j) % 2) ? -1 : 1;
      w[j] = mod19(sign * binomial(k, j).get_si());
    }
  }
  F19Matrix wm{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t r = 0; r < 8; ++r) wm[r][i] = out.w[i][r];
  out.tau_hat_w = mul(inverse19(wm), mul(out.tau_hat_t, wm));
  out.single_jordan_block = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const unsigned want = (i == j || j == i + 1) ? 1 : 0;
      if (out.tau_hat_w[i][j] != want) out.single_jordan_block = false;
    }
  out.stable_subspaces = stable_subspaces(out.tau_hat_w);
  out.stable_subspaces_are_flag = out.stable_subspaces.size() == 9;
  for (std::size_t d = 0; d < out.stable_subspaces.size() && out.stable_subspaces_are_flag; ++d) {
    Rows flag;
    for (std::size_t i = 0; i < d; ++i) {
      F19Vector e{};
      e[i] = 1;
      flag.push_back(e);
    }
    if (out.stable_subspaces[d] != flag) out.stable_subspaces_are_flag = false;
  }
  return out;
}

PeriodLattice lattice_lambda(unsigned j) {
  if (j > 8) throw std::invalid_argument("lattice_lambda: j must be in 0..8");
  static std::mutex m;
  static std::map<unsigned, PeriodLattice> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(j); it != cache.end()) return it->second;
  }
  std::vector<PeriodVector> gens = lattice_lambda0().basis();
  if (j > 0) {
    const auto fq = flag_quotient();
    for (unsigned i = 0; i < j; ++i) gens.push_back(lift(fq.w[i]));
  }
  PeriodLattice l(gens, true);
  std::lock_guard lock(m);
  cache.emplace(j, l);
  return l;
}

PeriodLattice explicit_basis_lattice() {
  std::vector<PeriodVector> gens;
  for (long k = 0; k < 4; ++k) gens.push_back(build_wprime(k));
  for (long k = 4; k < 9; ++k) gens.push_back(build_v(k));
  return PeriodLattice(with_nu_multiples(gens), true);
}

// ----------------------------------------------------------- polarization

namespace {

Cyclotomic hermitian_sum(const PeriodVector& x, const PeriodVector& y) {
  Cyclotomic s;
  for (std::size_t k = 0; k < 9; ++k) s += x[k] * y[k].conj();
  return s;
}

}  // namespace

Rational polarization_eval(const PeriodVector& x, const PeriodVector& y, const Rational& a) {
  const Cyclotomic s = hermitian_sum(x, y);
  const Cyclotomic e = ((s - s.conj()) / one_plus_two_nu()).scaled(a);
  auto r = e.try_rational();
  if (!r) throw std::domain_error("polarization_eval: non-rational value " + e.to_string());
  return *r;
}

GramData gram_data(const PeriodLattice& lattice, const Rational& a) {
  const auto b = lattice.basis();
  const std::size_t n = b.size();
  GramData out;
  out.gram = Matrix<Rational>(n, n);
  out.integral = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational e = polarization_eval(b[i], b[j], a);
      out.gram(i, j) = e;
      out.gram(j, i) = -e;
      if (!is_integral(e)) out.integral = false;
    }
  out.pfaffian_abs = abs(pfaffian(out.gram));
  out.pfaffian_sq = out.pfaffian_abs * out.pfaffian_abs;
  return out;
}

Rational gram_pfaffian(const PeriodLattice& lattice, const Rational& a) { return gram_data(lattice, a).pfaffian_abs; }

bool stability(const Matrix<Cyclotomic>& g, const PeriodLattice& lattice) {
  std::vector<PeriodVector> image;
  for (const auto& b : lattice.basis()) image.push_back(apply(g, b));
  return PeriodLattice(image) == lattice;
}

bool unitarity(const Matrix<Cyclotomic>& g) {
  if (!g.is_square()) return false;
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic s;
      for (std::size_t k = 0; k < n; ++k)
        if (!g(k, i).is_zero() && !g(k, j).is_zero()) s += g(k, i) * g(k, j).conj();
      if (!(s == Cyclotomic(i == j ? 1 : 0))) return false;
    }
  return true;
}

bool preserves_form(const Matrix<Cyclotomic>& g, const std::vector<PeriodVector>& basis) {
  // compares s − s̄ directly, so non-rational values of E cannot throw
  std::vector<PeriodVector> image;
  for (const auto& b : basis) image.push_back(apply(g, b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Cyclotomic a = hermitian_sum(image[i], image[j]), b = hermitian_sum(basis[i], basis[j]);
      if (!(a - a.conj() == b - b.conj())) return false;
    }
  return true;
}

bool QEndomorphism::passed() const { return equals_outer_product && rank == 1 && nu_value == nu() && acts_by_nu; }

QEndomorphism q_endomorphism_check() {
  QEndomorphism out;
  const auto s = psl2::matrix_S();
  auto power = Matrix<Cyclotomic>::identity(9, Cyclotomic(1));
  out.q = Matrix<Cyclotomic>(9, 9);
  for (int j = 0; j < 9; ++j) {
    out.q = out.q + power;
    power = power * s;
  }
  const PeriodVector v0 = build_v(0);
  out.equals_outer_product = true;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (!(out.q(i, j) == v0[i] * xi(0))) out.equals_outer_product = false;
  out.rank = rank_kernel(out.q).rank;
  const PeriodVector tv0 = apply(psl2::matrix_T(), v0);
  out.nu_value = ell(0, tv0);
  out.acts_by_nu = apply(out.q, tv0) == v0.scaled(nu());
  return out;
}

std::vector<PrefactorResult> prefactor_check() {
  const Cyclotomic i = zeta(4);
  // √19 = −i(1+2ν)
  const Cyclotomic inv_sqrt19 = (-(i * one_plus_two_nu())).inverse();
  std::vector<PrefactorResult> out;
  for (auto [label, c] : {std::pair{"2/sqrt(19)", Cyclotomic(2) * inv_sqrt19}, std::pair{"i/sqrt(19)", i * inv_sqrt19}}) {
    PrefactorResult r;
    r.label = label;
    r.prefactor = c;
    out.push_back(r);
  }

  const auto b = lattice_lambda(4).basis();
  const std::size_t n = b.size();
  std::vector<std::vector<Cyclotomic>> diff(n, std::vector<Cyclotomic>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      const Cyclotomic s = hermitian_sum(b[r], b[c]);
      diff[r][c] = s - s.conj();
    }
  for (auto& res : out) {
    Matrix<Rational> gram(n, n);
    res.real_valued = true;
    res.integral = true;
    bool plus = true, minus = true;
    for (std::size_t r = 0; r < n && res.real_valued; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        auto v = (res.prefactor * diff[r][c]).try_rational();
        if (!v) {
          res.real_valued = false;
          break;
        }
        gram(r, c) = *v;
        gram(c, r) = -*v;
        if (!is_integral(*v)) res.integral = false;
        const Rational e = polarization_eval(b[r], b[c]);
        if (*v != e) plus = false;
        if (*v != -e) minus = false;
      }
    if (!res.real_valued) {
      res.integral = false;
      continue;
    }
    res.pfaffian_abs = abs(pfaffian(gram));
    res.sign_vs_e = plus ? 1 : (minus ? -1 : 0);
  }
  return out;
}

std::vector<LatticeRow> lattice_table() {
  const PeriodLattice l0 = lattice_lambda0();
  const auto t = psl2::matrix_T();
  const auto s = psl2::matrix_S();
  const auto m = psl2::matrix_M();
  std::vector<LatticeRow> rows;
  for (unsigned j = 0; j <= 8; ++j) {
    const PeriodLattice l = lattice_lambda(j);
    const GramData g = gram_data(l);
    LatticeRow row;
    row.j = j;
    row.index_over_lambda0 = l.index_of(l0);
    row.pfaffian_sq = g.pfaffian_sq;
    row.integral = g.integral;
    row.nu_stable = l.nu_stable();
    row.tau_stable = stability(t, l);
    row.sigma_stable = stability(s, l);
    row.mu_stable = stability(m, l);
    rows.push_back(row);
  }
  return rows;
}

Integer norm_one_plus_two_nu() {
  const Cyclotomic n = one_plus_two_nu() * one_plus_two_nu().conj();
  auto z = n.try_integer();
  if (!z) throw std::logic_error("norm of 1+2nu is not an integer");
  return *z;
}

}  // namespace sevenfold::periods
