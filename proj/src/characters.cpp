#include "sevenfold/characters.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sevenfold::characters {
namespace {

using psl2::group_data;

void fill_classes(CharacterTable& t) {
  const auto& data = group_data(t.group);
  t.group_order = data.order();
  for (const auto& c : data.classes) {
    t.class_labels.push_back(c.label);
    t.class_sizes.push_back(c.size);
  }
}

CharacterTable make_g_table() {
  CharacterTable t;
  t.group = GroupTag::G;
  fill_classes(t);
  const Cyclotomic nu = gauss_nu(), nub = nu.conj();
  auto add = [&](std::string name, std::vector<Cyclotomic> row) {
    t.names.push_back(std::move(name));
    t.rows.push_back(std::move(row));
  };
  add("T1", std::vector<Cyclotomic>(12, Cyclotomic(1)));
  add("W9", {9, nu, nub, 0, 0, 0, 0, 1, -1, 1, -1, 1});
  add("W9bar", {9, nub, nu, 0, 0, 0, 0, 1, -1, 1, -1, 1});
  for (long k = 1; k <= 4; ++k)
    add("W18^" + std::to_string(k), {18, -1, -1, 0, 0, 0, 0, b_k(k), b_k(2 * k), b_k(3 * k), b_k(4 * k), b_k(5 * k)});
  for (long k = 1; k <= 4; ++k)
    add("W20^" + std::to_string(k), {20, 1, 1, a_k(k), a_k(2 * k), a_k(3 * k), a_k(4 * k), 0, 0, 0, 0, 0});
  add("W19", {19, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1, -1});
  return t;
}

CharacterTable make_h_table() {
  CharacterTable t;
  t.group = GroupTag::H;
  fill_classes(t);
  for (long k = 0; k <= 8; ++k) {
    std::vector<Cyclotomic> row{1};
    for (long j = 1; j <= 8; ++j) row.push_back(zeta(9, k * j));
    row.insert(row.end(), {1, 1});
    t.names.push_back("V" + std::to_string(k));
    t.rows.push_back(std::move(row));
  }
  const Cyclotomic nu = gauss_nu();
  std::vector<Cyclotomic> v9(11, Cyclotomic(0)), v9b(11, Cyclotomic(0));
  v9[0] = v9b[0] = 9;
  v9[9] = v9b[10] = nu;
  v9[10] = v9b[9] = nu.conj();
  t.names.push_back("V9");
  t.rows.push_back(std::move(v9));
  t.names.push_back("V9bar");
  t.rows.push_back(std::move(v9b));
  return t;
}

void require_same_table(const Character& a, const Character& b) {
  if (&a.table() != &b.table()) throw std::invalid_argument("characters live on different tables");
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace

std::size_t CharacterTable::index(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown irreducible: " + std::string(name));
}

const CharacterTable& table(GroupTag group) {
  static const CharacterTable g = make_g_table();
  static const CharacterTable h = make_h_table();
  return group == GroupTag::G ? g : h;
}

Character::Character(const CharacterTable& t, std::vector<Cyclotomic> values) : table_(&t), values_(std::move(values)) {
  if (values_.size() != t.class_count()) throw std::invalid_argument("character length does not match class count");
}

Character Character::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : values_) v.push_back(x.conj());
  return Character(*table_, std::move(v));
}

Character operator+(const Character& a, const Character& b) {
  require_same_table(a, b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Character(*a.table_, std::move(v));
}

Character operator-(const Character& a, const Character& b) {
  require_same_table(a, b);
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
  return Character(*a.table_, std::move(v));
}

Character operator*(const Integer& k, const Character& a) {
  auto v = a.values_;
  for (auto& x : v) x *= Cyclotomic(k);
  return Character(*a.table_, std::move(v));
}

bool operator==(const Character& a, const Character& b) { return a.table_ == b.table_ && a.values_ == b.values_; }

std::string Character::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i];
  os << ")";
  return os.str();
}

Character irreducible(GroupTag group, std::string_view name) {
  const auto& t = table(group);
  return Character(t, t.rows[t.index(name)]);
}

Character trivial(GroupTag group) { return Character(table(group), std::vector<Cyclotomic>(table(group).class_count(), 1)); }

Cyclotomic inner_product(const Character& a, const Character& b) {
  require_same_table(a, b);
  const auto& t = a.table();
  Cyclotomic sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += (a[c] * b[c].conj()).scaled(Rational(static_cast<long>(t.class_sizes[c])));
  }
  return sum.scaled(make_rational(1, static_cast<long>(t.group_order)));
}

Character sym3(const Character& x) {
  const auto& data = group_data(x.table().group);
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < x.values().size(); ++c) {
    const auto& a = x[c];
    const auto& sq = x[static_cast<std::size_t>(data.square_class[c])];
    const auto& cu = x[static_cast<std::size_t>(data.cube_class[c])];
    v.push_back((a * a * a + Cyclotomic(3) * sq * a + Cyclotomic(2) * cu).scaled(make_rational(1, 6)));
  }
  return Character(x.table(), std::move(v));
}

Character tensor(const Character& a, const Character& b) {
  require_same_table(a, b);
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < a.values().size(); ++c) v.push_back(a[c] * b[c]);
  return Character(a.table(), std::move(v));
}

Integer Decomposition::multiplicity(std::string_view name) const { return multiplicities.at(table->index(name)); }

Character Decomposition::reconstruct() const {
  Character sum(*table, std::vector<Cyclotomic>(table->class_count(), 0));
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    if (multiplicities[i] != 0) sum = sum + multiplicities[i] * Character(*table, table->rows[i]);
  return sum;
}

Integer Decomposition::dimension() const {
  Integer d = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) d += multiplicities[i] * *table->rows[i][0].try_integer();
  return d;
}

std::string Decomposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (multiplicities[i] != 1) out += multiplicities[i].get_str() + " ";
    out += table->names[i];
  }
  return out.empty() ? "0" : out;
}

Decomposition decompose(const Character& x) {
  Decomposition d;
  d.table = &x.table();
  for (const auto& row : x.table().rows) {
    const auto m = inner_product(x, Character(x.table(), row)).try_integer();
    if (!m || *m < 0) throw std::domain_error("not a character: multiplicity is not a nonnegative integer");
    d.multiplicities.push_back(*m);
  }
  if (!(d.reconstruct() == x)) throw std::domain_error("not a character: multiplicities do not reconstruct it");
  return d;
}

Decomposition make_decomposition(GroupTag group, const std::vector<std::pair<std::string, long>>& parts) {
  Decomposition d;
  d.table = &table(group);
  d.multiplicities.assign(d.table->names.size(), 0);
  for (const auto& [name, m] : parts) d.multiplicities[d.table->index(name)] += m;
  return d;
}

Character restrict_to_H(const Character& x) {
  if (x.table().group != GroupTag::G) throw std::invalid_argument("restrict_to_H expects a character of G");
  std::vector<Cyclotomic> v;
  for (int c : psl2::fusion_h_to_g()) v.push_back(x[static_cast<std::size_t>(c)]);
  return Character(table(GroupTag::H), std::move(v));
}

Character trace_character(const psl2::ProjectiveRep& rep) { return Character(table(GroupTag::G), rep.class_traces()); }

std::vector<Cyclotomic> projector_coefficients(const Character& w) {
  const auto& t = w.table();
  const Rational scale = w.degree().try_rational().value() / Rational(static_cast<long>(t.group_order));
  std::vector<Cyclotomic> out;
  for (const auto& v : w.values()) out.push_back(v.conj().scaled(scale));
  return out;
}

ClassSums class_sums(const psl2::ProjectiveRep& rep) {
  if (!rep.certified()) throw std::logic_error("class sums of an uncertified representation");
  const auto& mats = rep.all_matrices();
  const auto& data = group_data(GroupTag::G);
  const std::size_t nc = data.classes.size();
  std::vector<std::int64_t> den(nc, 1);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    auto& d = den[static_cast<std::size_t>(data.class_of_element[i])];
    d = lcm64(d, mats[i].denominator());
  }
  std::vector<PackedAccumulator19> acc;
  for (std::size_t c = 0; c < nc; ++c) acc.emplace_back(rep.dim(), rep.dim(), den[c]);
  for (std::size_t i = 0; i < mats.size(); ++i) acc[static_cast<std::size_t>(data.class_of_element[i])].add(mats[i]);
  ClassSums s{rep.dim(), {}};
  for (const auto& a : acc) s.sums.push_back(a.result());
  return s;
}

ClassSums conjugate(const ClassSums& s) {
  ClassSums out{s.dim, {}};
  for (const auto& m : s.sums) out.sums.push_back(m.conj());
  return out;
}

ClassSums tensor_conj_class_sums(const psl2::ProjectiveRep& rep) {
  if (!rep.certified()) throw std::logic_error("class sums of an uncertified representation");
  const auto& mats = rep.all_matrices();
  const auto& data = group_data(GroupTag::G);
  const std::size_t nc = data.classes.size(), n = rep.dim() * rep.dim();
  std::vector<std::int64_t> den(nc, 1);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    auto& d = den[static_cast<std::size_t>(data.class_of_element[i])];
    d = lcm64(d, mats[i].denominator() * mats[i].denominator());
  }
  std::vector<PackedAccumulator19> acc;
  for (std::size_t c = 0; c < nc; ++c) acc.emplace_back(n, n, den[c]);
  for (std::size_t i = 0; i < mats.size(); ++i)
    acc[static_cast<std::size_t>(data.class_of_element[i])].add_kronecker_conj(mats[i], mats[i]);
  ClassSums s{n, {}};
  for (const auto& a : acc) s.sums.push_back(a.result());
  return s;
}

Projector apply_projector(const ClassSums& sums, const Character& w) {
  if (w.table().group != GroupTag::G) throw std::invalid_argument("projector needs a character of G");
  if (sums.dim > 81) throw std::invalid_argument("apply_projector is limited to dimension 81");
  if (sums.sums.size() != w.values().size()) throw std::invalid_argument("class sums do not match the table");
  const auto coeffs = projector_coefficients(w);
  bool packed = true;
  for (const auto& c : coeffs) packed = packed && c.in_order(PackedMatrix19::kOrder).has_value();

  Projector p;
  if (packed) {
    PackedMatrix19 psi(sums.dim, sums.dim);
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (!coeffs[c].is_zero()) psi = psi + sums.sums[c].scaled(coeffs[c]);
    p.idempotent = psi * psi == psi;
    p.trace = psi.trace();
    p.matrix = psi.to_matrix();
  } else {
    p.matrix = Matrix<Cyclotomic>(sums.dim, sums.dim);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      if (coeffs[c].is_zero()) continue;
      const auto m = sums.sums[c].to_matrix();
      for (std::size_t i = 0; i < sums.dim; ++i)
        for (std::size_t j = 0; j < sums.dim; ++j)
          if (!m(i, j).is_zero()) p.matrix(i, j) += coeffs[c] * m(i, j);
    }
    p.idempotent = p.matrix * p.matrix == p.matrix;
    p.trace = p.matrix.trace();
  }
  if (p.idempotent) p.rank = p.trace.try_integer();
  return p;
}

Character h43_dual() {
  const auto w9 = irreducible(GroupTag::G, "W9");
  return sym3(w9) - tensor(w9, irreducible(GroupTag::G, "W9bar"));
}

std::vector<IntegralityRow> integrality_check() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> groups{
      {"chi0", {"T1"}},
      {"chi1", {"W9", "W9bar"}},
      {"chi2", {"W18^1", "W18^2", "W18^3", "W18^4"}},
      {"chi3", {"W19"}},
      {"chi4", {"W20^1", "W20^2", "W20^3", "W20^4"}},
  };
  const auto cohomology = decompose(trivial(GroupTag::G) + h43_dual());
  std::vector<IntegralityRow> out;
  for (const auto& [name, parts] : groups) {
    Character chi(table(GroupTag::G), std::vector<Cyclotomic>(12, 0));
    Integer dim = 0;
    for (const auto& p : parts) {
      chi = chi + irreducible(GroupTag::G, p);
      dim += cohomology.multiplicity(p) * *irreducible(GroupTag::G, p).degree().try_integer();
    }
    bool integral = true;
    for (const auto& v : chi.values()) integral = integral && v.try_integer().has_value();
    out.push_back({name, parts, chi, integral, *chi.degree().try_integer(), dim});
  }
  return out;
}

std::vector<W20Restriction> w20_restrictions() {
  const auto target = make_decomposition(GroupTag::H, {{"V3", 1}, {"V6", 1}, {"V9", 1}, {"V9bar", 1}});
  std::vector<W20Restriction> out;
  for (int k = 1; k <= 4; ++k) {
    const std::string name = "W20^" + std::to_string(k);
    auto d = decompose(restrict_to_H(irreducible(GroupTag::G, name)));
    const bool match = d == target;
    out.push_back({name, std::move(d), match});
  }
  return out;
}

}  // namespace sevenfold::characters
