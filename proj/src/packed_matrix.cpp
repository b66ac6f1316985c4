#include "sevenfold/packed_matrix.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sevenfold {
namespace {

constexpr unsigned N = PackedMatrix19::kOrder;
using Raw = std::array<__int128, N>;

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

unsigned magnitude_bits(const std::vector<PackedMatrix19::Cell>& cells) {
  std::uint64_t m = 0;
  for (const auto& c : cells)
    for (auto v : c) m = std::max<std::uint64_t>(m, v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : v);
  return static_cast<unsigned>(std::bit_width(m));
}

struct Slot {
  std::uint8_t exp;
  std::int64_t val;
};

std::vector<std::vector<Slot>> sparse_cells(const PackedMatrix19& m) {
  std::vector<std::vector<Slot>> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (unsigned s = 0; s < N; ++s)
        if (auto v = m.cell(r, c)[s]) out[r * m.cols() + c].push_back({static_cast<std::uint8_t>(s), v});
  return out;
}

}  // namespace

PackedMatrix19::PackedMatrix19(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, Cell{}) {}

PackedMatrix19 PackedMatrix19::identity(std::size_t n) {
  PackedMatrix19 m(n, n);
  // 1 = −Σ_{s≥1} ζ^s
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned s = 1; s < N; ++s) m.cells_[i * n + i][s] = -1;
  return m;
}

PackedMatrix19 PackedMatrix19::from_raw(std::size_t rows, std::size_t cols, std::vector<Raw> raw, __int128 den) {
  if (den == 0) throw std::domain_error("packed matrix with zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& c : raw)
      for (auto& v : c) v = -v;
  }
  __int128 g = den;
  for (auto& c : raw) {
    const __int128 c0 = c[0];
    if (c0 != 0) {
      for (unsigned s = 1; s < N; ++s) c[s] -= c0;
      c[0] = 0;
    }
    for (unsigned s = 1; s < N; ++s)
      if (c[s] != 0) g = gcd128(g, c[s]);
  }
  PackedMatrix19 m(rows, cols);
  if (!fits64(den / g)) throw std::overflow_error("packed matrix denominator overflow");
  m.den_ = static_cast<std::int64_t>(den / g);
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (unsigned s = 1; s < N; ++s) {
      const __int128 v = raw[i][s] / g;
      if (!fits64(v)) throw std::overflow_error("packed matrix numerator overflow");
      m.cells_[i][s] = static_cast<std::int64_t>(v);
    }
  return m;
}

PackedMatrix19 PackedMatrix19::from_matrix(const Matrix<Cyclotomic>& m) {
  Integer den = 1;
  std::vector<std::vector<Rational>> coords(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = m(r, c).in_order(N);
      if (!v) throw std::invalid_argument("packed matrix entry outside Q(zeta_19)");
      coords[r * m.cols() + c] = v->coordinates();
      for (const auto& q : coords[r * m.cols() + c]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
  if (!den.fits_slong_p()) throw std::overflow_error("packed matrix denominator overflow");
  std::vector<Raw> raw(coords.size(), Raw{});
  const auto& basis = basis_exponents(N);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t b = 0; b < coords[i].size(); ++b) {
      Integer v = coords[i][b].get_num() * (den / coords[i][b].get_den());
      if (!v.fits_slong_p()) throw std::overflow_error("packed matrix numerator overflow");
      raw[i][basis[b]] = v.get_si();
    }
  return from_raw(m.rows(), m.cols(), std::move(raw), den.get_si());
}

Cyclotomic PackedMatrix19::entry(std::size_t r, std::size_t c) const {
  std::vector<Rational> coords(N - 1);
  const auto& cell = cells_[r * cols_ + c];
  for (unsigned s = 1; s < N; ++s) coords[s - 1] = make_rational(cell[s], den_);
  return Cyclotomic::from_coordinates(N, coords);
}

Matrix<Cyclotomic> PackedMatrix19::to_matrix() const {
  Matrix<Cyclotomic> m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = entry(r, c);
  return m;
}

Cyclotomic PackedMatrix19::trace() const {
  Cyclotomic t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += entry(i, i);
  return t;
}

bool PackedMatrix19::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool PackedMatrix19::is_zero() const {
  for (const auto& c : cells_)
    for (auto v : c)
      if (v) return false;
  return true;
}

bool PackedMatrix19::same_support(const PackedMatrix19& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  auto nonzero = [](const Cell& c) { return std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; }); };
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (nonzero(cells_[i]) != nonzero(other.cells_[i])) return false;
  return true;
}

PackedMatrix19 PackedMatrix19::conj() const {
  PackedMatrix19 m = *this;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (unsigned s = 1; s < N; ++s) m.cells_[i][s] = cells_[i][N - s];
  return m;
}

PackedMatrix19 PackedMatrix19::transposed() const {
  PackedMatrix19 m(cols_, rows_);
  m.den_ = den_;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.cells_[c * rows_ + r] = cells_[r * cols_ + c];
  return m;
}

PackedMatrix19 PackedMatrix19::scaled(const Cyclotomic& c) const {
  Matrix<Cyclotomic> one(1, 1);
  one(0, 0) = c;
  const auto s = from_matrix(one);
  const auto& sc = s.cells_[0];
  std::vector<Raw> raw(cells_.size(), Raw{});
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (unsigned a = 1; a < N; ++a) {
      if (!cells_[i][a]) continue;
      for (unsigned b = 1; b < N; ++b) {
        if (!sc[b]) continue;
        unsigned e = a + b;
        if (e >= N) e -= N;
        raw[i][e] += static_cast<__int128>(cells_[i][a]) * sc[b];
      }
    }
  return from_raw(rows_, cols_, std::move(raw), static_cast<__int128>(den_) * s.den_);
}

PackedMatrix19 operator+(const PackedMatrix19& a, const PackedMatrix19& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("packed sum: shape mismatch");
  const __int128 g = gcd128(a.den_, b.den_);
  const __int128 fa = b.den_ / g, fb = a.den_ / g;
  std::vector<Raw> raw(a.cells_.size(), Raw{});
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (unsigned s = 1; s < N; ++s) raw[i][s] = fa * a.cells_[i][s] + fb * b.cells_[i][s];
  return PackedMatrix19::from_raw(a.rows_, a.cols_, std::move(raw), fa * a.den_);
}

PackedMatrix19 operator*(const PackedMatrix19& a, const PackedMatrix19& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("packed product: shape mismatch");
  if (magnitude_bits(a.cells_) + magnitude_bits(b.cells_) + std::bit_width(a.cols_ * N) > 126)
    throw std::overflow_error("packed product may overflow 128-bit accumulation");
  const auto sa = sparse_cells(a);
  const auto sb = sparse_cells(b);
  std::vector<Raw> raw(a.rows_ * b.cols_, Raw{});
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = sa[i * a.cols_ + k];
      if (x.empty()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = sb[k * b.cols_ + j];
        if (y.empty()) continue;
        auto& acc = raw[i * b.cols_ + j];
        for (const auto& [s, u] : x)
          for (const auto& [t, v] : y) {
            unsigned e = s + t;
            if (e >= N) e -= N;
            acc[e] += static_cast<__int128>(u) * v;
          }
      }
    }
  return PackedMatrix19::from_raw(a.rows_, b.cols_, std::move(raw), static_cast<__int128>(a.den_) * b.den_);
}

bool projectively_equal(const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b, Cyclotomic* scalar) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Cyclotomic c;
  bool found = false;
  for (std::size_t r = 0; r < a.rows() && !found; ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      if (b(r, k).is_zero()) return false;
      c = a(r, k) / b(r, k);
      found = true;
      break;
    }
  if (!found) return false;  // a = 0 is not a projective point
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!(a(r, k) == c * b(r, k))) return false;
  if (scalar) *scalar = c;
  return true;
}

PackedAccumulator19::PackedAccumulator19(std::size_t rows, std::size_t cols, std::int64_t den)
    : rows_(rows), cols_(cols), den_(den), raw_(rows * cols, Raw{}) {
  if (den <= 0) throw std::invalid_argument("accumulator denominator must be positive");
}

void PackedAccumulator19::add(const PackedMatrix19& m, std::int64_t weight) {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("accumulator: shape mismatch");
  if (den_ % m.denominator()) throw std::invalid_argument("accumulator: denominator does not divide");
  const __int128 f = static_cast<__int128>(weight) * (den_ / m.denominator());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& cell = m.cell(r, c);
      auto& acc = raw_[r * cols_ + c];
      for (unsigned s = 1; s < PackedMatrix19::kOrder; ++s)
        if (cell[s]) acc[s] += f * cell[s];
    }
}

void PackedAccumulator19::add_kronecker_conj(const PackedMatrix19& a, const PackedMatrix19& b, std::int64_t weight) {
  if (a.rows() * b.rows() != rows_ || a.cols() * b.cols() != cols_)
    throw std::invalid_argument("accumulator: kronecker shape mismatch");
  const __int128 dd = static_cast<__int128>(a.denominator()) * b.denominator();
  if (den_ % dd) throw std::invalid_argument("accumulator: denominator does not divide");
  const __int128 f = weight * (den_ / dd);
  const auto sa = sparse_cells(a);
  auto sb = sparse_cells(b);
  for (auto& cell : sb)
    for (auto& slot : cell) slot.exp = static_cast<std::uint8_t>((N - slot.exp) % N);
  const std::size_t br = b.rows(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = sa[i * a.cols() + j];
      if (x.empty()) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) {
          const auto& y = sb[k * bc + l];
          if (y.empty()) continue;
          auto& acc = raw_[(i * br + k) * cols_ + (j * bc + l)];
          for (const auto& [s, u] : x)
            for (const auto& [t, v] : y) {
              unsigned e = s + t;
              if (e >= N) e -= N;
              acc[e] += f * (static_cast<__int128>(u) * v);
            }
        }
    }
}

PackedMatrix19 PackedAccumulator19::result() const { return PackedMatrix19::from_raw(rows_, cols_, raw_, den_); }

}  // namespace sevenfold
