#include "sevenfold/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "sevenfold/characters.hpp"
#include "sevenfold/jacobian.hpp"
#include "sevenfold/periods.hpp"
#include "sevenfold/psl2.hpp"

namespace sevenfold::report {
namespace {

using characters::decompose;
using characters::irreducible;
using characters::make_decomposition;
using psl2::GroupTag;

template <class T>
std::string join(const std::vector<T>& xs, std::string_view sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

// a + b·nu when the value lies in Q(ν), the generic form otherwise.
std::string render(const Cyclotomic& c) {
  if (auto q = c.try_rational()) return sevenfold::to_string(*q);
  auto x = c.in_order(19);
  if (!x || !(x->galois(4) == *x)) return c.to_string();
  const Cyclotomic nu = periods::nu();
  auto b = ((*x - x->conj()) / periods::one_plus_two_nu()).try_rational();
  auto a = b ? (*x - nu.scaled(*b)).try_rational() : std::nullopt;
  if (!a || !b) return c.to_string();
  std::string out = *a == 0 ? "" : sevenfold::to_string(*a);
  std::string nu_part = *b == 1 ? "nu" : (*b == -1 ? "-nu" : sevenfold::to_string(*b) + "*nu");
  if (out.empty()) return nu_part;
  return out + (nu_part.front() == '-' ? nu_part : "+" + nu_part);
}

std::string render(const characters::Character& ch) {
  std::vector<std::string> parts;
  for (const auto& v : ch.values()) parts.push_back(render(v));
  return "(" + join(parts) + ")";
}

class Suite {
 public:
  explicit Suite(std::string name) { out_.name = std::move(name); }

  void check(std::string id, std::string ref, std::string expected, const std::function<std::string()>& actual) {
    CheckResult r;
    r.id = std::move(id);
    r.suite = out_.name;
    r.paper_ref = std::move(ref);
    r.expected = std::move(expected);
    const auto start = std::chrono::steady_clock::now();
    try {
      r.actual = actual();
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.status = r.expected == r.actual ? Status::pass : Status::fail;
    out_.checks.push_back(std::move(r));
  }

  void heavy(bool enabled, std::string id, std::string ref, std::string expected,
             const std::function<std::string()>& actual) {
    if (enabled) return check(std::move(id), std::move(ref), std::move(expected), actual);
    CheckResult r;
    r.id = std::move(id);
    r.suite = out_.name;
    r.paper_ref = std::move(ref);
    r.expected = std::move(expected);
    r.status = Status::skipped;
    out_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(out_); }

 private:
  SuiteReport out_;
};

jacobian::Poly9 term(long c, std::initializer_list<unsigned> vars) {
  return jacobian::Poly9(jacobian::monomial(vars), Cyclotomic(c));
}

psl2::ProjectiveRep& light_rep() {
  static psl2::ProjectiveRep rep = [] {
    auto r = psl2::build_rep();
    r.certify_light();
    return r;
  }();
  return rep;
}

std::string lambda_label(const Rational& l) { return "lambda=" + sevenfold::to_string(l); }

// ------------------------------------------------------------------ suites

SuiteReport arithmetic_suite(const Options&) {
  Suite s("arithmetic");
  const Cyclotomic nu = periods::nu();
  s.check("quadratic-residue-exponents", "exponents k^2 mod 19 in the coordinates of v_k", "1,4,9,16,6,17,11,7,5",
          [] {
            std::vector<long> e;
            for (long k = 1; k <= 9; ++k) e.push_back(k * k % 19);
            return join(e);
          });
  s.check("nu-quadratic", "nu = (-1 + i sqrt19)/2 satisfies nu^2 + nu + 5 = 0", "0",
          [&] { return render(nu * nu + nu + Cyclotomic(5)); });
  s.check("nu-plus-conjugate", "nu + conj(nu) = -1", "-1", [&] { return render(nu + nu.conj()); });
  s.check("one-plus-two-nu-square", "(1 + 2 nu)^2 = -19", "-19",
          [] { return render(periods::one_plus_two_nu() * periods::one_plus_two_nu()); });
  s.check("norm-one-plus-two-nu", "Z[nu]/(1+2nu) is the field with 19 elements", "19",
          [] { return sevenfold::to_string(periods::norm_one_plus_two_nu()); });
  s.check("field-inverse", "(1 + xi)(1 + xi)^-1 = 1 in Q(zeta_19)", "1", [] {
    const Cyclotomic a = Cyclotomic(1) + xi(1);
    return render(a * a.inverse());
  });
  return s.take();
}

SuiteReport group_suite(const Options& o) {
  Suite s("group");
  s.check("order-G", "|PSL2(F19)| = 3420", "3420", [] { return std::to_string(psl2::group_data(GroupTag::G).order()); });
  s.check("classes-G", "PSL2(F19) has 12 conjugacy classes", "12",
          [] { return std::to_string(psl2::group_data(GroupTag::G).classes.size()); });
  s.check("order-H", "|H| = 171", "171", [] { return std::to_string(psl2::group_data(GroupTag::H).order()); });
  s.check("classes-H", "H has 11 conjugacy classes", "11",
          [] { return std::to_string(psl2::group_data(GroupTag::H).classes.size()); });
  s.check("class-sizes-H", "class sizes of H", "1,19,19,19,19,19,19,19,19,9,9", [] {
    std::vector<std::size_t> sizes;
    for (const auto& c : psl2::group_data(GroupTag::H).classes) sizes.push_back(c.size);
    return join(sizes);
  });
  s.check("power-class-w1", "w1^2 and w1^3 lie in the class w2", "w2,w2", [] {
    const auto& g = psl2::group_data(GroupTag::G);
    return g.classes[static_cast<std::size_t>(g.power_class(1, 2))].label + "," +
           g.classes[static_cast<std::size_t>(g.power_class(1, 3))].label;
  });
  s.check("mu-squared-projective", "the involution mu squares to a scalar", "scalar", [] {
    const auto m = psl2::matrix_M();
    const auto m2 = m * m;
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        if ((i == j && !(m2(i, j) == m2(0, 0))) || (i != j && !m2(i, j).is_zero())) return std::string("not scalar");
    return std::string("scalar");
  });
  s.check("certify-class-representatives", "tau, sigma, mu define a representation of PSL2(F19)", "passed", [] {
    return light_rep().certificate().passed ? std::string("passed") : "failed: " + light_rep().certificate().first_failure;
  });
  s.check("trace-w1", "character W9 at class w1 is nu", render(periods::nu()),
          [] { return render(light_rep().class_traces()[1]); });
  s.check("trace-y2", "character W9 at class y^2 is -1", "-1", [] { return render(light_rep().class_traces()[8]); });
  s.check("trace-character-w9", "the 9-dimensional representation has character W9",
          render(irreducible(GroupTag::G, "W9")), [] { return render(characters::trace_character(light_rep())); });
  s.heavy(o.heavy, "certify-all-edges", "homomorphism on all 3 x 3420 Cayley edges", "passed", [] {
    auto rep = psl2::build_rep();
    const auto c = rep.certify_full();
    return c.passed ? std::string("passed") : "failed: " + c.first_failure;
  });
  return s.take();
}

SuiteReport characters_suite(const Options& o) {
  Suite s("characters");
  const auto w9 = irreducible(GroupTag::G, "W9");
  const auto w9bar = irreducible(GroupTag::G, "W9bar");
  const Cyclotomic nu = periods::nu();
  {
    std::vector<Cyclotomic> v{165, Cyclotomic(3) - nu, Cyclotomic(3) - nu.conj(), 0, 0, 3, 0, 0, 0, 0, 0, 5};
    s.check("sym3-w9-values", "character of Sym^3 W9 on the 12 classes",
            render(characters::Character(characters::table(GroupTag::G), v)), [&] { return render(characters::sym3(w9)); });
  }
  s.check("sym3-w9-decomposition", "Sym^3 W9 = T1 + W9bar + W18^1 + W18^3 + W20^1 + W20^2 + 2 W20^3 + W20^4 + W19",
          make_decomposition(GroupTag::G, {{"T1", 1},
                                           {"W9bar", 1},
                                           {"W18^1", 1},
                                           {"W18^3", 1},
                                           {"W20^1", 1},
                                           {"W20^2", 1},
                                           {"W20^3", 2},
                                           {"W20^4", 1},
                                           {"W19", 1}})
              .to_string(),
          [&] { return decompose(characters::sym3(w9)).to_string(); });
  s.check("sym3-w9-multiplicity-w20^3", "W20^3 occurs twice in Sym^3 W9", "2", [&] {
    return render(characters::inner_product(characters::sym3(w9), irreducible(GroupTag::G, "W20^3")));
  });
  s.check("tensor-w9-w9bar", "I3 = W9 x W9bar = T1 + W20^1 + W20^2 + W20^3 + W20^4",
          make_decomposition(GroupTag::G, {{"T1", 1}, {"W20^1", 1}, {"W20^2", 1}, {"W20^3", 1}, {"W20^4", 1}}).to_string(),
          [&] { return decompose(characters::tensor(w9, w9bar)).to_string(); });
  s.check("tensor-degree-count", "9 x 9 = 81 = 1 + 20 + 20 + 20 + 20", "81",
          [&] { return sevenfold::to_string(decompose(characters::tensor(w9, w9bar)).dimension()); });
  s.check("h43-dual-decomposition", "H^{4,3}* = W9bar + W18^1 + W18^3 + W19 + W20^3",
          make_decomposition(GroupTag::G, {{"W9bar", 1}, {"W18^1", 1}, {"W18^3", 1}, {"W19", 1}, {"W20^3", 1}}).to_string(),
          [] { return decompose(characters::h43_dual()).to_string(); });
  auto restriction = [&](const std::string& name, const std::vector<std::pair<std::string, long>>& want) {
    s.check("restrict-" + name, "restriction of " + name + " to H", make_decomposition(GroupTag::H, want).to_string(),
            [name] { return decompose(characters::restrict_to_H(irreducible(GroupTag::G, name))).to_string(); });
  };
  restriction("W18^3", {{"V9", 1}, {"V9bar", 1}});
  restriction("W19", {{"V0", 1}, {"V9", 1}, {"V9bar", 1}});
  restriction("W20^3", {{"V3", 1}, {"V6", 1}, {"V9", 1}, {"V9bar", 1}});
  s.check("chi1-at-w1", "W9 + W9bar at class w1 is nu + conj(nu) = -1", "-1", [&] { return render((w9 + w9bar)[1]); });
  s.check("subtorus-dimensions", "isogeny factors of dimensions 1, 9, 36, 19, 20", "1,9,36,19,20", [] {
    std::vector<std::string> d;
    for (const auto& r : characters::integrality_check()) d.push_back(sevenfold::to_string(r.subtorus_dim));
    return join(d);
  });
  s.check("subtorus-characters-integral", "the five grouped characters are rational-valued", "true,true,true,true,true",
          [] {
            std::vector<std::string> d;
            for (const auto& r : characters::integrality_check()) d.push_back(yes(r.integral));
            return join(d);
          });
  s.heavy(o.heavy, "projector-w20^3-trace", "isotypic projector for W20^3 on W9 x W9bar has trace 20", "20", [] {
    auto rep = psl2::build_rep();
    rep.certify_full();
    const auto sums = characters::tensor_conj_class_sums(rep);
    const auto p = characters::apply_projector(sums, irreducible(GroupTag::G, "W20^3"));
    return render(p.trace) + (p.idempotent ? "" : " (not idempotent)");
  });
  return s.take();
}

SuiteReport jacobian_suite(const Options& o) {
  using namespace jacobian;
  Suite s("jacobian");
  const Poly9 f = adler_cubic();
  s.check("adler-cubic", "f = sum of x_a^2 x_b terms - 2(x1x7x8 + x2x3x5 + x4x6x9)",
          (term(1, {1, 1, 6}) + term(1, {6, 6, 2}) + term(1, {2, 2, 7}) + term(1, {7, 7, 4}) + term(1, {4, 4, 5}) +
           term(1, {5, 5, 8}) + term(1, {8, 8, 9}) + term(1, {9, 9, 3}) + term(1, {3, 3, 1}) + term(-2, {1, 7, 8}) +
           term(-2, {2, 3, 5}) + term(-2, {4, 6, 9}))
              .to_string(),
          [&] { return f.to_string(); });
  s.check("klein-cubic-terms", "the lambda = 0 member has 9 monomials", "9",
          [] { return std::to_string(pencil(Rational(0)).size()); });
  s.check("coefficient-x4^2x5", "x4^2 x5 has coefficient 1 on the whole pencil",
          join(std::vector<std::string>(o.lambdas.size(), "1")), [&] {
            std::vector<std::string> c;
            for (const auto& l : o.lambdas) c.push_back(render(pencil(l).coefficient(monomial({4, 4, 5}))));
            return join(c);
          });
  s.check("partial-x1", "df/dx1 = 2 x1 x6 + x3^2 - 2 x7 x8",
          (term(2, {1, 6}) + term(1, {3, 3}) - term(2, {7, 8})).to_string(), [&] { return partial(f, 1).to_string(); });
  auto scalar = [&](const Matrix<Cyclotomic>& g, const Poly9& p) {
    auto c = invariance_scalar(g, p);
    return c ? render(*c) : std::string("absent");
  };
  s.check("invariance-tau", "f is invariant under tau", "1", [&] { return scalar(psl2::matrix_T(), f); });
  s.check("invariance-sigma", "f is invariant under sigma", "1", [&] { return scalar(psl2::matrix_S(), f); });
  s.check("invariance-mu", "f is invariant under mu", "1", [&] { return scalar(psl2::matrix_M(), f); });
  s.check("invariance-mu-klein", "mu does not preserve the lambda = 0 member", "absent",
          [&] { return scalar(psl2::matrix_M(), pencil(Rational(0))); });
  s.check("rank-i3", "dim I3 = 81", "81", [&] { return std::to_string(graded_slice(f, 3).rank_i); });
  s.check("graded-dim-r0", "H^{5,2} = R0 is one-dimensional", "1", [&] { return std::to_string(graded_dim(f, 0)); });
  s.check("graded-dim-r3", "H^{4,3} = R3 has dimension 84", "84", [&] { return std::to_string(graded_dim(f, 3)); });
  s.check("hodge-numbers", "(h^{7,0}, h^{6,1}, h^{5,2}, h^{4,3}) = (0, 0, 1, 84)", "0,0,1,84", [&] {
    std::vector<std::size_t> h;
    for (unsigned q = 0; q <= 3; ++q) h.push_back(hodge_number(f, q));
    return join(h);
  });
  s.check("i2-character", "I2 is W9bar", make_decomposition(GroupTag::G, {{"W9bar", 1}}).to_string(),
          [&] { return decompose(character_on_I2(f, GroupTag::G)).to_string(); });
  s.check("r3-decomposition-G", "R3 = W9bar + W18^1 + W18^3 + W19 + W20^3 under G",
          decompose(characters::h43_dual()).to_string(),
          [&] { return decompose(character_on_R3(f, GroupTag::G)).to_string(); });
  const std::string h_expected =
      make_decomposition(GroupTag::H, {{"V0", 1}, {"V3", 1}, {"V6", 1}, {"V9", 4}, {"V9bar", 5}}).to_string();
  for (const auto& l : o.lambdas)
    s.check("r3-decomposition-H-" + lambda_label(l), "R3 = V0 + V3 + V6 + 4 V9 + 5 V9bar under H for every pencil member",
            h_expected, [l] { return decompose(character_on_R3(pencil(l), GroupTag::H)).to_string(); });
  for (auto p : o.primes) {
    s.heavy(o.heavy, "smooth-adler-p=" + std::to_string(p), "R10 = 0 modulo p certifies smoothness of f",
            to_string(SmoothStatus::certified_smooth), [&, p] { return to_string(smooth_certificate_mod_p(f, p).status); });
    s.heavy(o.heavy, "smooth-klein-p=" + std::to_string(p), "R10 = 0 modulo p certifies smoothness of the lambda = 0 member",
            to_string(SmoothStatus::certified_smooth),
            [p] { return to_string(smooth_certificate_mod_p(pencil(Rational(0)), p).status); });
  }
  return s.take();
}

SuiteReport lattice_suite(const Options&) {
  using namespace periods;
  Suite s("lattice");
  const Cyclotomic nu = periods::nu();
  auto eq = [](bool b) { return b ? std::string("equal") : std::string("different"); };
  auto combo = [](const std::vector<std::pair<Cyclotomic, long>>& terms) {
    PeriodVector acc;
    for (const auto& [c, k] : terms) acc += build_v(k).scaled(c);
    return acc;
  };
  const Cyclotomic one(1);

  s.check("wprime-unipotent", "w'_0 = (1 - tau)^5 v_0 / (1 + 2 nu)", "equal", [&] {
    auto one_minus_tau = Matrix<Cyclotomic>::identity(9, one) - psl2::matrix_T();
    PeriodVector x = build_v(0);
    for (int i = 0; i < 5; ++i) x = apply(one_minus_tau, x);
    return eq(x.scaled(one_plus_two_nu().inverse()) == build_wprime(0));
  });
  s.check("ell0-tau-v0", "multiplication by nu = l_0(tau v_0)", render(nu),
          [] { return render(ell(0, apply(psl2::matrix_T(), build_v(0)))); });
  s.check("nu-v0-consecutive", "printed identity nu v_0 = v_1 + ... + v_9", "0", [&] {
    PeriodVector sum;
    for (long k = 1; k <= 9; ++k) sum += build_v(k);
    const PeriodVector d = build_v(0).scaled(nu) - sum;
    return d == PeriodVector() ? std::string("0") : "nonzero, l_0 of the difference = " + render(ell(0, d));
  });
  s.check("nu-v0-squares", "nu v_0 = sum of v_{k^2}, k = 1..9", "0", [&] {
    PeriodVector sum;
    for (long k = 1; k <= 9; ++k) sum += build_v(k * k);
    return build_v(0).scaled(nu) - sum == PeriodVector() ? std::string("0") : std::string("nonzero");
  });
  s.check("v9-relation", "v_9 in terms of v_0 .. v_8 over Z[nu]", "equal", [&] {
    return eq(build_v(9) == combo({{one, 0}, {one + nu, 1}, {-2, 2}, {one - nu, 3}, {Cyclotomic(3) + nu, 4},
                                   {Cyclotomic(-2) + nu, 5}, {-(Cyclotomic(2) + nu), 6}, {2, 7}, {nu, 8}}));
  });
  s.check("v9-minus-v8-relation", "v_9 - v_8 in terms of v_0 .. v_8 over Z[nu]", "equal", [&] {
    return eq(build_v(9) - build_v(8) == combo({{one, 0}, {one + nu, 1}, {-2, 2}, {one - nu, 3}, {Cyclotomic(3) + nu, 4},
                                                {nu - Cyclotomic(2), 5}, {-(Cyclotomic(2) + nu), 6}, {2, 7}, {nu - one, 8}}));
  });
  s.check("lambda0-all-vk", "Lambda_0 = Z-span of all v_k = Z[nu]-span of v_0 .. v_8", "equal", [] {
    std::vector<PeriodVector> all;
    for (long k = 0; k < 19; ++k) all.push_back(build_v(k));
    return PeriodLattice(all) == lattice_lambda0() ? std::string("equal") : std::string("different");
  });
  s.check("lambda8-dual-check", "Lambda_8 basis vectors have every l_k in Z[nu]", "true", [] {
    for (const auto& b : lattice_lambda8().basis())
      for (long k = 0; k < 19; ++k)
        if (!in_z_nu(ell(k, b))) return std::string("false");
    return std::string("true");
  });
  s.check("lambda8-index", "[Lambda_8 : Lambda_0] = 19^8", sevenfold::to_string(ipow(19, 8)),
          [] { return sevenfold::to_string(lattice_lambda8().index_of(lattice_lambda0())); });
  s.check("lambda8-tau-stable", "tau stabilizes Lambda_8", "true",
          [] { return yes(stability(psl2::matrix_T(), lattice_lambda8())); });
  s.check("tau-hat-jordan-block", "tau-hat on w_1 .. w_8 is a single unipotent Jordan block", "true",
          [] { return yes(flag_quotient().single_jordan_block); });
  s.check("tau-hat-stable-subspaces", "the tau-hat-stable subspaces are exactly W_0 .. W_8", "9 (flag)", [] {
    const auto fq = flag_quotient();
    return std::to_string(fq.stable_subspaces.size()) + (fq.stable_subspaces_are_flag ? " (flag)" : " (not the flag)");
  });
  s.check("lambda-endpoints", "Lambda_j at j = 0 and j = 8 are Lambda_0 and Lambda_8", "equal,equal", [&] {
    return eq(lattice_lambda(0) == lattice_lambda0()) + "," + eq(lattice_lambda(8) == lattice_lambda8());
  });
  s.check("lambda4-explicit-basis", "Lambda_4 = Z[nu]w'_0 + .. + Z[nu]w'_3 + Z[nu]v_4 + .. + Z[nu]v_8", "equal",
          [&] { return eq(lattice_lambda(4) == explicit_basis_lattice()); });

  const auto table = lattice_table();
  {
    std::vector<std::string> want;
    for (unsigned j = 0; j <= 8; ++j)
      want.push_back(j <= 4 ? sevenfold::to_string(ipow(19, 8 - 2 * j)) : "1/" + sevenfold::to_string(ipow(19, 2 * j - 8)));
    s.check("pfaffian-squares", "P_j^2 = 19^(8 - 2j) for j = 0 .. 8", join(want), [&] {
      std::vector<std::string> got;
      for (const auto& r : table) got.push_back(sevenfold::to_string(r.pfaffian_sq));
      return join(got);
    });
  }
  s.check("pfaffian-lambda4", "principal polarization: |Pf| = 1 on Lambda_4", "1",
          [] { return sevenfold::to_string(gram_pfaffian(lattice_lambda(4))); });
  s.check("gram-integral-lambda4", "all Gram entries on Lambda_4 are integers", "true",
          [&] { return yes(table[4].integral); });
  s.check("principal-j", "only j = 4 has integral Gram matrix and |Pf| = 1", "4", [&] {
    std::vector<unsigned> js;
    for (const auto& r : table)
      if (r.integral && r.pfaffian_sq == 1) js.push_back(r.j);
    return join(js);
  });
  s.check("scaling-a2", "Pf^2 scales as a^18 on Lambda_4", sevenfold::to_string(ipow(2, 18)),
          [] { return sevenfold::to_string(gram_data(lattice_lambda(4), 2).pfaffian_sq); });
  s.check("stability-lambda4-tau", "Lambda_4 is tau-stable", "true", [&] { return yes(table[4].tau_stable); });
  s.check("stability-lambda4-sigma", "Lambda_4 is sigma-stable", "true", [&] { return yes(table[4].sigma_stable); });
  s.check("stability-lambda4-mu", "mu acts on the polarized lattice", "true", [&] { return yes(table[4].mu_stable); });
  s.check("form-invariance-lambda4", "E(gx, gy) = E(x, y) for g = tau, sigma, mu", "true,true,true", [] {
    const auto b = lattice_lambda(4).basis();
    return yes(preserves_form(psl2::matrix_T(), b)) + "," + yes(preserves_form(psl2::matrix_S(), b)) + "," +
           yes(preserves_form(psl2::matrix_M(), b));
  });
  s.check("lambda3-not-principal", "Lambda_3 is tau-stable with P_3^2 = 19^2", "true,361",
          [&] { return yes(table[3].tau_stable) + "," + sevenfold::to_string(table[3].pfaffian_sq); });
  s.check("tau-stable-all-j", "every Lambda_j is tau-stable", "0,1,2,3,4,5,6,7,8", [&] {
    std::vector<unsigned> js;
    for (const auto& r : table)
      if (r.tau_stable) js.push_back(r.j);
    return join(js);
  });
  s.check("nu-stable-all-j", "every Lambda_j is a Z[nu]-module", "0,1,2,3,4,5,6,7,8", [&] {
    std::vector<unsigned> js;
    for (const auto& r : table)
      if (r.nu_stable) js.push_back(r.j);
    return join(js);
  });
  s.check("tower-indices", "[Lambda_j : Lambda_0] = 19^j", "1,19,361,6859,130321,2476099,47045881,893871739,16983563041",
          [&] {
            std::vector<std::string> idx;
            for (const auto& r : table) idx.push_back(sevenfold::to_string(r.index_over_lambda0));
            return join(idx);
          });
  s.check("q-outer-product", "q = sum of sigma^j equals v_0 l_0 and has rank 1", "true,1", [] {
    const auto q = q_endomorphism_check();
    return yes(q.equals_outer_product) + "," + std::to_string(q.rank);
  });
  s.check("q-tau-acts-by-nu", "q tau v_0 = nu v_0", "true", [] { return yes(q_endomorphism_check().acts_by_nu); });
  {
    const auto pre = prefactor_check();
    for (const auto& r : pre) {
      const bool principal_form = r.label == "i/sqrt(19)";
      s.check("c1-prefactor-" + r.label,
              principal_form ? "c1 = (i/sqrt19) sum dx ^ dxbar is principal on Lambda_4 (equals -E)"
                         : "printed c1 = (2/sqrt19) sum dx ^ dxbar, flagged: not a real form",
              principal_form ? "principal" : "not real-valued", [r] {
                if (!r.real_valued) return std::string("not real-valued");
                if (r.principal()) return std::string("principal");
                return std::string("real, not principal");
              });
    }
  }
  return s.take();
}

SuiteReport pencil_suite(const Options& o) {
  Suite s("pencil");
  const auto rows = jacobian::pencil_scan(o.lambdas, o.primes, o.heavy);
  for (const auto& r : rows) {
    s.check("pencil-r3-" + lambda_label(r.lambda), "dim R3 = 84 along the pencil", "84",
            [&] { return std::to_string(r.dims.at(3)); });
    s.check("pencil-dims-" + lambda_label(r.lambda), "dim R0 .. R4 = 1, 9, 36, 84, 126", "1,9,36,84,126",
            [&] { return join(r.dims); });
  }
  for (const auto& r : rows)
    for (std::size_t i = 0; i < o.primes.size(); ++i)
      s.heavy(o.heavy, "pencil-smooth-" + lambda_label(r.lambda) + "-p=" + std::to_string(o.primes[i]),
              "R10 = 0 modulo p", jacobian::to_string(jacobian::SmoothStatus::certified_smooth),
              [&] { return jacobian::to_string(r.certificates.at(i).status); });
  return s.take();
}

using SuiteFn = SuiteReport (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"arithmetic", arithmetic_suite}, {"group", group_suite},     {"characters", characters_suite},
      {"jacobian", jacobian_suite},     {"lattice", lattice_suite}, {"pencil", pencil_suite},
  };
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks) n += c.status == Status::pass;
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks) n += c.status == Status::fail;
  return n;
}

std::size_t Report::skipped() const {
  std::size_t n = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks) n += c.status == Status::skipped;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run(std::string_view suite, const Options& options) {
  if (options.lambdas.empty()) throw std::invalid_argument("run: empty lambda list");
  if (options.primes.empty()) throw std::invalid_argument("run: empty prime list");
  for (auto p : options.primes)
    if (p < 5) throw std::invalid_argument("run: primes must be at least 5");
  Report out;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    out.suites.push_back(fn(options));
  }
  if (!found) throw std::invalid_argument("run: unknown suite '" + std::string(suite) + "'");
  return out;
}

Format parse_format(std::string_view s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

std::string render(const Report& report, Format format, bool with_durations) {
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["version"] = kSchemaVersion;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : report.suites) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      js["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : s.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["suite"] = c.suite;
        jc["paper_ref"] = c.paper_ref;
        jc["status"] = to_string(c.status);
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        if (with_durations)
          jc["duration_ms"] = std::llround(c.duration_ms);
        else
          jc["duration_ms"] = nullptr;
        js["checks"].push_back(std::move(jc));
      }
      doc["suites"].push_back(std::move(js));
    }
    doc["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}, {"skipped", report.skipped()}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : report.suites) {
    os << "== " << s.name << " ==\n";
    for (const auto& c : s.checks) {
      os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.id;
      if (with_durations && c.status != Status::skipped) os << " [" << std::llround(c.duration_ms) << " ms]";
      os << "\n     " << c.paper_ref << "\n";
      if (c.status == Status::fail) {
        os << "     expected: " << c.expected << "\n     actual:   " << c.actual << "\n";
      } else if (c.status == Status::pass) {
        os << "     value:    " << c.actual << "\n";
      }
    }
  }
  os << "passed " << report.passed() << ", failed " << report.failed() << ", skipped " << report.skipped() << "\n";
  return os.str();
}

void emit(const Report& report, Format format, const std::string& path, bool with_durations) {
  const std::string text = render(report, format, with_durations);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("emit: cannot open " + path);
  f << text;
  if (!f.flush()) throw std::runtime_error("emit: write failed for " + path);
}

}  // namespace sevenfold::report
