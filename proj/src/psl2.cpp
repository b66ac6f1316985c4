#include "sevenfold/psl2.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sevenfold::psl2 {
namespace {

constexpr std::uint32_t kCodes = 19u * 19u * 19u * 19u;

int mod19(long v) { return static_cast<int>(((v % kQ) + kQ) % kQ); }

std::array<std::uint8_t, 4> normalized(int a, int b, int c, int d) {
  std::array<int, 4> e{mod19(a), mod19(b), mod19(c), mod19(d)};
  const int lead = e[0] ? e[0] : (e[1] ? e[1] : (e[2] ? e[2] : e[3]));
  if (lead > 9)
    for (auto& x : e) x = mod19(-x);
  return {static_cast<std::uint8_t>(e[0]), static_cast<std::uint8_t>(e[1]), static_cast<std::uint8_t>(e[2]),
          static_cast<std::uint8_t>(e[3])};
}

const char* letter_name(Letter l) {
  switch (l) {
    case Letter::tau: return "tau";
    case Letter::sigma: return "sigma";
    case Letter::mu: return "mu";
  }
  return "?";
}

constexpr std::array<Letter, 3> kLetters{Letter::tau, Letter::sigma, Letter::mu};

std::vector<int> build_lookup(const std::vector<GroupElement>& elements) {
  std::vector<int> lookup(kCodes, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) lookup[elements[i].code()] = static_cast<int>(i);
  return lookup;
}

}  // namespace

GroupElement::GroupElement(long a, long b, long c, long d) {
  if (mod19(a * d - b * c) != 1) throw std::invalid_argument("group element must have determinant 1 mod 19");
  e_ = normalized(static_cast<int>(a % kQ), static_cast<int>(b % kQ), static_cast<int>(c % kQ),
                  static_cast<int>(d % kQ));
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  GroupElement r;
  r.e_ = normalized(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
                    x.c() * y.b() + x.d() * y.d());
  return r;
}

GroupElement GroupElement::inverse() const { return GroupElement(d(), -b(), -c(), a()); }

GroupElement GroupElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GroupElement result, base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

unsigned GroupElement::order() const {
  unsigned n = 1;
  for (GroupElement x = *this; !x.is_identity(); x = x * *this) ++n;
  return n;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[[" << a() << "," << b() << "],[" << c() << "," << d() << "]]";
  return os.str();
}

int ConjugacyData::index_of(const GroupElement& g) const { return lookup[g.code()]; }

int ConjugacyData::class_of(const GroupElement& g) const {
  const int i = index_of(g);
  if (i < 0) throw std::invalid_argument("element not in group: " + g.to_string());
  return class_of_element[static_cast<std::size_t>(i)];
}

int ConjugacyData::power_class(int cls, long k) const {
  if (k < 0) throw std::invalid_argument("power_class: negative exponent");
  return class_of(classes.at(static_cast<std::size_t>(cls)).rep.pow(k));
}

ConjugacyData enumerate(GroupTag group) {
  ConjugacyData data;
  data.group = group;
  for (int a = 0; a < kQ; ++a)
    for (int b = 0; b < kQ; ++b)
      for (int c = 0; c < kQ; ++c)
        for (int d = 0; d < kQ; ++d) {
          if (mod19(a * d - b * c) != 1) continue;
          if (group == GroupTag::H && c != 0) continue;
          GroupElement g(a, b, c, d);
          if (g.a() == a && g.b() == b && g.c() == c && g.d() == d) data.elements.push_back(g);
        }
  data.lookup = build_lookup(data.elements);

  // conjugation orbits
  const std::size_t n = data.elements.size();
  std::vector<int> orbit(n, -1);
  int orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit[i] >= 0) continue;
    for (const auto& h : data.elements)
      orbit[static_cast<std::size_t>(data.index_of(h * data.elements[i] * h.inverse()))] = orbits;
    ++orbits;
  }

  std::vector<std::pair<std::string, GroupElement>> reps;
  const GroupElement w1(1, 1, 0, 1), x(9, 0, 0, 17);
  reps.emplace_back("1", GroupElement());
  if (group == GroupTag::G) {
    reps.emplace_back("w1", w1);
    reps.emplace_back("w2", w1.pow(2));
    for (int k = 1; k <= 4; ++k) reps.emplace_back(k == 1 ? "x" : "x" + std::to_string(k), x.pow(k));
    auto y = std::find_if(data.elements.begin(), data.elements.end(), [](const GroupElement& g) { return g.order() == 10; });
    if (y == data.elements.end()) throw std::logic_error("no element of order 10");
    for (int k = 1; k <= 5; ++k) reps.emplace_back(k == 1 ? "y" : "y" + std::to_string(k), y->pow(k));
  } else {
    for (int k = 1; k <= 8; ++k) reps.emplace_back(k == 1 ? "a" : "a" + std::to_string(k), x.pow(k));
    reps.emplace_back("b", w1);
    reps.emplace_back("b2", w1.pow(2));
  }

  std::vector<int> class_of_orbit(static_cast<std::size_t>(orbits), -1);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const int o = orbit[static_cast<std::size_t>(data.index_of(reps[k].second))];
    if (class_of_orbit[static_cast<std::size_t>(o)] >= 0)
      throw std::logic_error("class representatives " + reps[k].first + " collide");
    class_of_orbit[static_cast<std::size_t>(o)] = static_cast<int>(k);
  }
  if (static_cast<std::size_t>(orbits) != reps.size())
    throw std::logic_error("unexpected number of conjugacy classes: " + std::to_string(orbits));

  data.class_of_element.resize(n);
  for (const auto& [label, rep] : reps) data.classes.push_back({label, rep, 0, rep.order()});
  for (std::size_t i = 0; i < n; ++i) {
    const int c = class_of_orbit[static_cast<std::size_t>(orbit[i])];
    data.class_of_element[i] = c;
    ++data.classes[static_cast<std::size_t>(c)].size;
  }
  for (const auto& cls : data.classes) {
    data.square_class.push_back(data.class_of(cls.rep.pow(2)));
    data.cube_class.push_back(data.class_of(cls.rep.pow(3)));
  }
  return data;
}

const ConjugacyData& group_data(GroupTag group) {
  static const ConjugacyData g = enumerate(GroupTag::G);
  static const ConjugacyData h = enumerate(GroupTag::H);
  return group == GroupTag::G ? g : h;
}

std::vector<int> fusion_h_to_g() {
  const auto& g = group_data(GroupTag::G);
  std::vector<int> out;
  for (const auto& cls : group_data(GroupTag::H).classes) out.push_back(g.class_of(cls.rep));
  return out;
}

std::size_t count_conjugates_of_h() {
  const auto& g = group_data(GroupTag::G);
  const auto& h = group_data(GroupTag::H);
  std::set<std::vector<std::uint32_t>> conjugates;
  for (const auto& x : g.elements) {
    std::vector<std::uint32_t> codes;
    codes.reserve(h.order());
    const auto xi = x.inverse();
    for (const auto& y : h.elements) codes.push_back((x * y * xi).code());
    std::sort(codes.begin(), codes.end());
    conjugates.insert(std::move(codes));
  }
  return conjugates.size();
}

GroupElement Generators::image(Letter l) const {
  switch (l) {
    case Letter::tau: return tau;
    case Letter::sigma: return sigma;
    case Letter::mu: return mu;
  }
  throw std::invalid_argument("bad letter");
}

Generators literal_generators() {
  Generators g;
  g.mu = GroupElement(0, 1, 18, 0);
  return g;
}

CayleyTree::CayleyTree(const Generators& gens) : gens_(gens) {
  const auto& g = group_data(GroupTag::G);
  parent_.assign(g.order(), -1);
  letter_.assign(g.order(), Letter::tau);
  std::vector<std::size_t> depth(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  const int root = g.index_of(GroupElement());
  seen[static_cast<std::size_t>(root)] = true;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    order_.push_back(x);
    for (Letter l : kLetters) {
      const int y = g.index_of(g.elements[static_cast<std::size_t>(x)] * gens_.image(l));
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      parent_[static_cast<std::size_t>(y)] = x;
      letter_[static_cast<std::size_t>(y)] = l;
      depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
      diameter_ = std::max(diameter_, depth[static_cast<std::size_t>(y)]);
      queue.push_back(y);
    }
  }
}

Word CayleyTree::word_for(const GroupElement& g) const {
  const auto& data = group_data(GroupTag::G);
  int i = data.index_of(g);
  if (i < 0) throw std::invalid_argument("element not in group");
  if (parent_[static_cast<std::size_t>(i)] < 0 && !g.is_identity())
    throw std::invalid_argument("element not reached by the generators");
  Word w;
  while (parent_[static_cast<std::size_t>(i)] >= 0) {
    w.push_back(letter_[static_cast<std::size_t>(i)]);
    i = parent_[static_cast<std::size_t>(i)];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

GroupElement CayleyTree::evaluate(const Word& w) const {
  GroupElement g;
  for (Letter l : w) g = g * gens_.image(l);
  return g;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += letter_name(w[i]);
  }
  return s;
}

int abs19(long t) {
  const int r = mod19(t);
  return r <= 9 ? r : kQ - r;
}

Matrix<Cyclotomic> matrix_T() {
  Matrix<Cyclotomic> t(9, 9);
  for (long j = 1; j <= 9; ++j) t(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = xi(j * j);
  return t;
}

Matrix<Cyclotomic> matrix_S() {
  Matrix<Cyclotomic> s(9, 9);
  for (long k = 1; k <= 9; ++k) s(static_cast<std::size_t>(abs19(6 * k) - 1), static_cast<std::size_t>(k - 1)) = 1;
  return s;
}

namespace {

Matrix<Cyclotomic> mu_matrix(bool with_legendre) {
  const Cyclotomic scale = -(i_sqrt19() / Cyclotomic(19));
  Matrix<Cyclotomic> m(9, 9);
  for (long k = 1; k <= 9; ++k)
    for (long j = 1; j <= 9; ++j) {
      Cyclotomic v = scale * (xi(k * j) - xi(-k * j));
      if (with_legendre && legendre(k * j, kQ) < 0) v = -v;
      m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)) = v;
    }
  return m;
}

}  // namespace

Matrix<Cyclotomic> matrix_M() { return mu_matrix(true); }
Matrix<Cyclotomic> matrix_M_plain() { return mu_matrix(false); }

ProjectiveRep::ProjectiveRep(Matrix<Cyclotomic> t, Matrix<Cyclotomic> s, Matrix<Cyclotomic> m, Generators gens)
    : gen_{std::move(t), std::move(s), std::move(m)}, tree_(gens) {
  for (std::size_t i = 0; i < 3; ++i) packed_gen_[i] = PackedMatrix19::from_matrix(gen_[i]);
}

const Matrix<Cyclotomic>& ProjectiveRep::generator(Letter l) const { return gen_[static_cast<std::size_t>(l)]; }

PackedMatrix19 ProjectiveRep::packed(const GroupElement& g) const {
  if (!all_.empty()) return all_[static_cast<std::size_t>(group_data(GroupTag::G).index_of(g))];
  PackedMatrix19 m = PackedMatrix19::identity(dim());
  for (Letter l : tree_.word_for(g)) m = m * packed_gen_[static_cast<std::size_t>(l)];
  return m;
}

bool ProjectiveRep::check_edge(const PackedMatrix19& x, const PackedMatrix19& g, const PackedMatrix19& xg,
                               bool& exact) const {
  const PackedMatrix19 prod = x * g;
  if (prod == xg) return true;
  if (!prod.same_support(xg)) return false;
  if (projectively_equal(prod.to_matrix(), xg.to_matrix())) {
    exact = false;
    return true;
  }
  return false;
}

Certificate ProjectiveRep::certify_light() {
  Certificate c;
  c.scope = "class-representatives";
  c.exact = true;
  const auto& gens = generators();
  for (const auto& cls : group_data(GroupTag::G).classes) {
    const auto x = packed(cls.rep);
    for (Letter l : kLetters) {
      ++c.edges_checked;
      const auto xg_elem = cls.rep * gens.image(l);
      if (!check_edge(x, packed_gen_[static_cast<std::size_t>(l)], packed(xg_elem), c.exact)) {
        if (c.edges_failed++ == 0) c.first_failure = "x=" + cls.rep.to_string() + " g=" + letter_name(l);
      }
    }
  }
  // μ is an involution
  ++c.edges_checked;
  const auto& m = packed_gen_[static_cast<std::size_t>(Letter::mu)];
  const auto m2 = m * m;
  if (!m2.is_identity()) {
    Cyclotomic s;
    if (projectively_equal(m2.to_matrix(), Matrix<Cyclotomic>::identity(dim()), &s))
      c.exact = false;
    else if (c.edges_failed++ == 0)
      c.first_failure = "mu^2 is not scalar";
  }
  c.passed = c.edges_failed == 0;
  if (!certified_ || c.passed) {
    cert_ = c;
    certified_ = c.passed;
  }
  return c;
}

Certificate ProjectiveRep::certify_full() {
  const auto& data = group_data(GroupTag::G);
  std::vector<PackedMatrix19> mats(data.order());
  for (int idx : tree_.bfs_order()) {
    const int p = tree_.parent(idx);
    if (p < 0)
      mats[static_cast<std::size_t>(idx)] = PackedMatrix19::identity(dim());
    else
      mats[static_cast<std::size_t>(idx)] =
          mats[static_cast<std::size_t>(p)] * packed_gen_[static_cast<std::size_t>(tree_.parent_letter(idx))];
  }
  Certificate c;
  c.scope = "all-edges";
  c.exact = true;
  const auto& gens = generators();
  for (std::size_t i = 0; i < data.order(); ++i)
    for (Letter l : kLetters) {
      ++c.edges_checked;
      const auto j = static_cast<std::size_t>(data.index_of(data.elements[i] * gens.image(l)));
      if (!check_edge(mats[i], packed_gen_[static_cast<std::size_t>(l)], mats[j], c.exact)) {
        if (c.edges_failed++ == 0) c.first_failure = "x=" + data.elements[i].to_string() + " g=" + letter_name(l);
      }
    }
  c.passed = c.edges_failed == 0;
  cert_ = c;
  certified_ = c.passed;
  if (c.passed) all_ = std::move(mats);
  return c;
}

const std::vector<PackedMatrix19>& ProjectiveRep::all_matrices() const {
  if (all_.empty()) throw std::logic_error("element matrices are only stored after full certification");
  return all_;
}

std::vector<Cyclotomic> ProjectiveRep::class_traces() const {
  if (!certified_) throw std::logic_error("trace of an uncertified representation");
  std::vector<Cyclotomic> out;
  for (const auto& cls : group_data(GroupTag::G).classes) out.push_back(packed(cls.rep).trace());
  return out;
}

ProjectiveRep build_rep() { return ProjectiveRep(matrix_T(), matrix_S(), matrix_M()); }

bool is_unitary(const Matrix<Cyclotomic>& g) {
  Matrix<Cyclotomic> gbar = g.map([](const Cyclotomic& z) { return z.conj(); });
  return g.transposed() * gbar == Matrix<Cyclotomic>::identity(g.rows());
}

bool is_unitary(const PackedMatrix19& g) { return (g.transposed() * g.conj()).is_identity(); }

}  // namespace sevenfold::psl2
