#include "hessring/suites.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "hessring/errors.hpp"
#include "hessring/gkm.hpp"
#include "hessring/graded_linalg.hpp"
#include "hessring/symfunc.hpp"

namespace hessring {

namespace {

struct Check {
  std::string id;
  std::function<CheckOutcome()> run;
};

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  std::vector<CheckRecord> records(checks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      auto start = std::chrono::steady_clock::now();
      CheckRecord rec;
      rec.id = checks[i].id;
      try {
        CheckOutcome out = checks[i].run();
        rec.status = out.pass ? "pass" : "fail";
        rec.witness = out.witness;
        rec.detail = out.detail;
      } catch (const guard_error& e) {
        rec.status = "skipped";
        rec.witness = e.what();
      } catch (const std::exception& e) {
        rec.status = "fail";
        rec.witness = e.what();
      }
      rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      records[i] = std::move(rec);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

CheckOutcome ok(long long cases) { return CheckOutcome{true, cases, "", ""}; }

CheckOutcome fail(long long cases, std::string witness) {
  return CheckOutcome{false, cases, std::move(witness), ""};
}

std::vector<HessFn> selected_h(const SuiteOptions& opt) {
  if (opt.h) return {*opt.h};
  return enumerate_hn(opt.n);
}

// ---- fixed-points suite -------------------------------------------------

void add_fixed_point_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  const int n = opt.n;
  checks.push_back({"minimal-hess-formulas-agree", [n]() {
                      CheckOutcome out;
                      for (const auto& w : enumerate_sn(n)) {
                        ++out.cases;
                        if (!(minimal_hess(w) == minimal_hess_via_positions(w)))
                          return fail(out.cases, "w=" + w.to_string());
                      }
                      return out;
                    }});
  checks.push_back({"d-empty-iff-prefix", [n]() {
                      CheckOutcome out;
                      for (const auto& w : enumerate_sn(n)) {
                        for (int j = 1; j <= n; ++j) {
                          ++out.cases;
                          bool empty = d_set(w, j).empty();
                          int maxv = 0;
                          for (int p = 1; p <= j; ++p) maxv = std::max(maxv, w.value_at(p));
                          bool prefix = (maxv == j);
                          if (empty != prefix)
                            return fail(out.cases,
                                        "w=" + w.to_string() + " j=" + std::to_string(j));
                        }
                      }
                      return out;
                    }});
  checks.push_back({"minimal-hess-jump-characterization", [n]() {
                      CheckOutcome out;
                      for (const auto& w : enumerate_sn(n)) {
                        HessFn hw = minimal_hess(w);
                        for (int j = 1; j <= n - 1; ++j) {
                          if (d_set(w, j).empty()) continue;
                          ++out.cases;
                          bool corner = hw.value_at(j) == w.position_of(w.value_at(j) - 1);
                          int prev = (j >= 2) ? hw.value_at(j - 1) : 0;
                          bool strict = prev < hw.value_at(j);
                          if (corner != strict)
                            return fail(out.cases,
                                        "w=" + w.to_string() + " j=" + std::to_string(j));
                        }
                      }
                      return out;
                    }});
  checks.push_back({"minimal-hess-is-subset-minimum", [n]() {
                      CheckOutcome out;
                      auto hs = enumerate_hn(n);
                      for (const auto& w : enumerate_sn(n)) {
                        HessFn hw = minimal_hess(w);
                        if (!is_fixed_point(hw, w))
                          return fail(out.cases, "w not fixed by h_w, w=" + w.to_string());
                        for (const auto& h : hs) {
                          ++out.cases;
                          if (is_fixed_point(h, w) && !subset_order(hw, h))
                            return fail(out.cases,
                                        "w=" + w.to_string() + " h=" + h.to_string());
                        }
                      }
                      return out;
                    }});
  for (const auto& h : selected_h(opt)) {
    checks.push_back({"fixed-point-criteria-agree h=" + h.to_string(), [h]() {
                        // fixed_points() raises on any disagreement.
                        auto fp = fixed_points(h);
                        return ok(static_cast<long long>(fp.size()));
                      }});
    checks.push_back({"fixed-point-count-equals-series-at-1 h=" + h.to_string(), [h]() {
                        auto fp = fixed_points(h);
                        Rational expected = hilbert_closed_form(h).eval(1);
                        if (to_rational(static_cast<long long>(fp.size())) != expected)
                          return fail(1, "h=" + h.to_string() + " count=" +
                                             std::to_string(fp.size()));
                        return ok(1);
                      }});
    bool splits = false;
    for (int r = 1; r < h.size(); ++r)
      if (h.value_at(r) == r) splits = true;
    if (splits)
      checks.push_back({"split-product h=" + h.to_string(),
                        [h]() { return check_split_product(h); }});
  }
}

// ---- presentation suite -------------------------------------------------

void add_presentation_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  const int n = opt.n;
  checks.push_back({"t0-specialization-and-degree", [n]() { return check_t0_specialization(n); }});
  if (n == 4) checks.push_back({"example-n4", []() { return check_example_n4(); }});
  checks.push_back({"swap-stability", [n]() { return swap_stability_check(n); }});
  checks.push_back({"peterson-reduction", [n]() { return peterson_reduction_check(n); }});
  checks.push_back({"powersum-transition", [n]() { return powersum_transition_check(n); }});
  for (const auto& h : selected_h(opt)) {
    checks.push_back({"fixed-point-vanishing h=" + h.to_string(), [h]() {
                        Presentation pres(h.size());
                        return pres.fixed_point_vanishing(h);
                      }});
    checks.push_back({"ideal-membership h=" + h.to_string(), [h]() {
                        check_guard(h.size() <= 5, "ideal-membership: n > 5");
                        Presentation pres(h.size());
                        return pres.ideal_membership_check(h);
                      }});
  }
}

// ---- hilbert suite ------------------------------------------------------

void add_hilbert_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  std::vector<HessFn> hs;
  if (opt.h) {
    hs = {*opt.h};
  } else if (opt.n == 5) {
    hs = hilbert_h5_sample();  // sweeping all 42 would be slow
  } else {
    hs = enumerate_hn(opt.n);
  }
  for (const auto& h : hs) {
    checks.push_back({"three-route-hilbert h=" + h.to_string(), [h, opt]() {
                        check_guard(h.size() <= 5, "three-route-hilbert: n > 5");
                        Presentation pres(h.size());
                        return check_three_route_hilbert(pres, h, opt.max_degree);
                      }});
    checks.push_back({"regular-sequence h=" + h.to_string(), [h]() {
                        check_guard(h.size() <= 4, "regular-sequence: n > 4");
                        Presentation pres(h.size());
                        if (!is_regular_sequence(pres.ideal_Icheck(h), h.size()))
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
  }
}

// ---- gkm suite ----------------------------------------------------------

void add_gkm_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  for (const auto& h : selected_h(opt)) {
    const int n = h.size();
    checks.push_back({"graph-regular h=" + h.to_string(), [h]() {
                        GkmGraph graph(h);
                        std::vector<int> deg(graph.vertices().size(), 0);
                        for (const auto& e : graph.edges()) {
                          ++deg[e.from];
                          ++deg[e.to];
                        }
                        int expected = complex_dim(h);
                        for (size_t r = 0; r < deg.size(); ++r)
                          if (deg[r] != expected)
                            return fail(static_cast<long long>(r),
                                        "vertex " + graph.vertices()[r].to_string());
                        return ok(static_cast<long long>(deg.size()));
                      }});
    checks.push_back({"g-classes-gkm h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 5, "g-classes-gkm: n > 5");
                        GkmGraph graph(h);
                        CheckOutcome out;
                        for (int j = 1; j <= n; ++j)
                          for (int k = 1; k <= n; ++k) {
                            ++out.cases;
                            if (!satisfies_gkm(graph, g_class(j, k, h)))
                              return fail(out.cases, "g_{" + std::to_string(j) + "," +
                                                         std::to_string(k) + "}");
                          }
                        return out;
                      }});
    checks.push_back({"fcheck-gkm-identity h=" + h.to_string(), [h, n]() {
                        CheckOutcome out;
                        for (int j = 1; j <= n; ++j) {
                          CheckOutcome one = fcheck_gkm_identity(h, j);
                          out.cases += one.cases;
                          if (!one.pass) return one;
                        }
                        return out;
                      }});
    checks.push_back({"chern-invariance h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 5, "chern-invariance: n > 5");
                        CheckOutcome out;
                        for (int i = 1; i <= n; ++i) {
                          GkmClass tau = chern_class(i, h);
                          for (const auto& v : enumerate_sn(n)) {
                            ++out.cases;
                            if (!(tymoczko_act(v, tau) == tau))
                              return fail(out.cases, "i=" + std::to_string(i) +
                                                         " v=" + v.to_string());
                          }
                        }
                        return out;
                      }});
    checks.push_back({"constant-class-action h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 5, "constant-class-action: n > 5");
                        CheckOutcome out;
                        for (int i = 1; i <= n; ++i) {
                          GkmClass ti = constant_class(i, h);
                          for (const auto& v : enumerate_sn(n)) {
                            ++out.cases;
                            if (!(tymoczko_act(v, ti) == constant_class(v.value_at(i), h)))
                              return fail(out.cases, "i=" + std::to_string(i) +
                                                         " v=" + v.to_string());
                          }
                        }
                        return out;
                      }});
    checks.push_back({"euler-equivariance h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 5, "euler-equivariance: n > 5");
                        CheckOutcome out;
                        std::vector<Permutation> vs;
                        if (n <= 4) {
                          vs = enumerate_sn(n);
                        } else {
                          for (int m = 1; m <= n - 1; ++m)
                            vs.push_back(Permutation::identity(n).adjacent_swap(m));
                        }
                        for (const auto& v : vs) {
                          std::vector<int> target(n);
                          for (int i = 1; i <= n; ++i) target[i - 1] = v.value_at(i) - 1;
                          for (const auto& w : enumerate_sn(n)) {
                            ++out.cases;
                            Mpoly lhs = euler_class(v.compose(w), h);
                            Mpoly rhs = euler_class(w, h).permute_vars(target);
                            if (!(lhs == rhs))
                              return fail(out.cases,
                                          "v=" + v.to_string() + " w=" + w.to_string());
                          }
                        }
                        return out;
                      }});
    checks.push_back({"tymoczko-group-action h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 4, "tymoczko-group-action: n > 4");
                        CheckOutcome out;
                        std::vector<GkmClass> sample = {chern_class(1, h), g_class(1, 1, h),
                                                        g_class(2, 1, h)};
                        for (const auto& c : sample) {
                          if (!(tymoczko_act(Permutation::identity(n), c) == c))
                            return fail(out.cases, "identity does not act trivially");
                          for (const auto& u : enumerate_sn(n))
                            for (const auto& v : enumerate_sn(n)) {
                              ++out.cases;
                              GkmClass lhs = tymoczko_act(u.compose(v), c);
                              GkmClass rhs = tymoczko_act(u, tymoczko_act(v, c));
                              if (!(lhs == rhs))
                                return fail(out.cases,
                                            "u=" + u.to_string() + " v=" + v.to_string());
                            }
                        }
                        return out;
                      }});
    checks.push_back({"action-preserves-gkm h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 5, "action-preserves-gkm: n > 5");
                        GkmGraph graph(h);
                        CheckOutcome out;
                        for (int j = 1; j <= n; ++j)
                          for (int k = 1; k <= n; ++k) {
                            GkmClass c = chern_class(1, h) * g_class(j, k, h);
                            for (int m = 1; m <= n - 1; ++m) {
                              ++out.cases;
                              Permutation v = Permutation::identity(n).adjacent_swap(m);
                              if (!satisfies_gkm(graph, tymoczko_act(v, c)))
                                return fail(out.cases,
                                            "j=" + std::to_string(j) + " k=" +
                                                std::to_string(k) + " m=" + std::to_string(m));
                            }
                          }
                        return out;
                      }});
    if (complex_dim(h) > 0)
      checks.push_back({"abbv-integral-of-1-vanishes h=" + h.to_string(), [h]() {
                          if (!abbv_integral(GkmClass::one(h)).is_zero())
                            return fail(1, "h=" + h.to_string());
                          return ok(1);
                        }});
    checks.push_back({"abbv-chern-clearing h=" + h.to_string(), [h, n]() {
                        check_guard(n <= 4, "abbv-chern-clearing: n > 4");
                        const int d = complex_dim(h);
                        CheckOutcome out;
                        // Every monomial in the Chern classes of degree <= 2d
                        // must integrate to a polynomial (here: a rational).
                        for (int total = 0; total <= d; ++total) {
                          for (const auto& mono : monomials_of_total(n, total)) {
                            ++out.cases;
                            Mpoly val = abbv_integral(chern_monomial(mono.exps, h));
                            if (!val.is_zero() && val.degree() != 2 * total - 2 * d)
                              return fail(out.cases, "degree mismatch at exps");
                          }
                        }
                        return out;
                      }});
    checks.push_back({"degree0-invariants h=" + h.to_string(), [h]() {
                        if (degree_zero_invariant_dimension(h) != 1)
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
    checks.push_back({"poincare-matches-symfunc h=" + h.to_string(), [h]() {
                        if (!(poincare_polynomial(h) == betti_from_xg(h)))
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
  }
}

// ---- symfunc suite ------------------------------------------------------

void add_symfunc_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  for (const auto& h : selected_h(opt)) {
    const int n = h.size();
    checks.push_back({"xg-symmetric h=" + h.to_string(), [h, n]() {
                        chromatic_qsym(incomparability_graph(h), n);  // validates internally
                        return ok(1);
                      }});
    checks.push_back({"sw-trivial-coefficient h=" + h.to_string(), [h, n]() {
                        SymFn x = chromatic_qsym(incomparability_graph(h), n);
                        Partition ones{std::vector<int>(n, 1)};
                        UniPoly coeff = expand_in_schur(x).coeff(ones);
                        if (!(coeff == sw_trivial_coeff(h)))
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
    checks.push_back({"sw-matches-hilbert h=" + h.to_string(), [h]() {
                        if (!(sw_trivial_coeff(h).compose_power(2) == hilbert_closed_form(h)))
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
    checks.push_back({"betti-cross-validation h=" + h.to_string(), [h]() {
                        UniPoly b = betti_from_xg(h);
                        if (!(b == poincare_polynomial(h)))
                          return fail(1, "h=" + h.to_string());
                        if (b.eval(1) != to_rational(factorial(h.size())))
                          return fail(1, "total != n! at h=" + h.to_string());
                        return ok(1);
                      }});
    checks.push_back({"xg-t1-coloring-count h=" + h.to_string(), [h, n]() {
                        SymFn x = chromatic_qsym(incomparability_graph(h), n);
                        Rational total(0);
                        for (const auto& [lambda, c] : x.coords) {
                          // Number of distinct monomials in m_lambda over n
                          // variables: permutations of the padded exponent
                          // vector.
                          std::vector<int> mult(n + 1, 0);
                          for (int p : lambda.parts) ++mult[p];
                          mult[0] = n - lambda.length();
                          Rational ways = to_rational(factorial(n));
                          for (int m = 0; m <= n; ++m) ways /= to_rational(factorial(mult[m]));
                          total += c.eval(1) * ways;
                        }
                        long long direct = proper_coloring_count(incomparability_graph(h), n);
                        if (total != to_rational(direct))
                          return fail(1, "h=" + h.to_string());
                        return ok(1);
                      }});
    checks.push_back({"omega-xg-schur-nonneg h=" + h.to_string(), [h, n]() {
                        SymFn x = chromatic_qsym(incomparability_graph(h), n);
                        SymFn w = omega(expand_in_schur(x));
                        for (const auto& [lambda, c] : w.coords)
                          if (!c.all_coeffs_nonneg_integers())
                            return fail(1, "lambda=" + lambda.to_string());
                        return ok(static_cast<long long>(w.coords.size()));
                      }});
  }
}

// ---- appendix suite -----------------------------------------------------

void add_appendix_checks(std::vector<Check>& checks, const SuiteOptions& opt) {
  const int n = opt.n;
  checks.push_back({"b-symmetry", [n]() { return b_symmetry_check(n); }});
  checks.push_back({"appendix-identity", [n]() { return appendix_identity_check(n); }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fixed-points", "presentation", "hilbert",
                                                 "gkm",          "symfunc",      "appendix"};
  return names;
}

std::vector<HessFn> hilbert_h5_sample() {
  const std::vector<std::vector<int>> raw = {
      {1, 2, 3, 4, 5}, {2, 2, 3, 4, 5}, {2, 3, 3, 4, 5}, {3, 3, 3, 4, 5},
      {2, 3, 4, 5, 5}, {3, 3, 4, 4, 5}, {2, 4, 4, 5, 5}, {4, 4, 4, 4, 5},
      {3, 4, 5, 5, 5}, {4, 4, 5, 5, 5}, {4, 5, 5, 5, 5}, {5, 5, 5, 5, 5}};
  std::vector<HessFn> out;
  for (const auto& v : raw) out.push_back(HessFn(v));
  return out;
}

CheckOutcome check_three_route_hilbert(const Presentation& pres, const HessFn& h,
                                       std::optional<int> max_degree) {
  const int n = h.size();
  // A graded quotient of Q[x] that vanishes in one degree vanishes above
  // it, so matching through top+2 pins the whole series.
  int top = 2 * complex_dim(h) + 2;
  if (max_degree) top = std::min(top, *max_degree);
  UniPoly closed = hilbert_closed_form(h);
  UniPoly icheck = hilbert_series(pres.ideal_Icheck(h), n, top);
  UniPoly jroute = hilbert_series(pres.ideal_J(h), n, top);
  UniPoly closed_trunc;
  {
    std::vector<Rational> c(closed.coeffs());
    if (static_cast<int>(c.size()) > top + 1) c.resize(top + 1);
    closed_trunc = UniPoly(std::move(c));
  }
  CheckOutcome out;
  out.cases = top / 2 + 1;
  if (!(icheck == closed_trunc))
    return fail(out.cases, "Icheck series != closed form at h=" + h.to_string());
  if (!(jroute == closed_trunc))
    return fail(out.cases, "J series != closed form at h=" + h.to_string());
  out.detail = "Icheck = J = closed form = " + closed.to_string("s");
  return out;
}

CheckOutcome check_t0_specialization(int n) {
  check_guard(n <= 6, "t0-specialization: n > 6");
  Presentation pres(n);
  CheckOutcome out;
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i <= n; ++i) {
      ++out.cases;
      if (!(pres.f(i, j).set_var_zero(n) == pres.fcheck(i, j)))
        return fail(out.cases, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (pres.f(i, j).degree() != 2 * (i - j + 1) ||
          pres.fcheck(i, j).degree() != 2 * (i - j + 1))
        return fail(out.cases, "degree law at (i,j)=(" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
      if (!pres.f(i, j).is_homogeneous() || !pres.fcheck(i, j).is_homogeneous())
        return fail(out.cases, "not homogeneous at (i,j)=(" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
    }
  }
  return out;
}

CheckOutcome check_example_n4() {
  Presentation pres(4);
  const int V = 5;
  auto x = [&](int i) { return Mpoly::variable(V, i - 1); };
  const Mpoly t = Mpoly::variable(V, 4);
  CheckOutcome out;
  auto expect = [&](const Mpoly& actual, const Mpoly& displayed, const std::string& name) {
    ++out.cases;
    if (!(actual == displayed)) {
      out.pass = false;
      if (out.witness.empty()) out.witness = name;
    }
  };
  for (int i = 1; i <= 4; ++i) expect(pres.f(i, i), pres.p(i), "f_{i,i}");
  expect(pres.f(2, 1), (x(1) - x(2) - t) * pres.p(1), "f_{2,1}");
  expect(pres.f(3, 2), (x(1) - x(2) - t) * pres.p(1) + (x(2) - x(3) - t) * pres.p(2),
         "f_{3,2}");
  expect(pres.f(4, 3),
         (x(1) - x(2) - t) * pres.p(1) + (x(2) - x(3) - t) * pres.p(2) +
             (x(3) - x(4) - t) * pres.p(3),
         "f_{4,3}");
  expect(pres.f(3, 1), (x(1) - x(3) - t) * (x(1) - x(2) - t) * pres.p(1), "f_{3,1}");
  expect(pres.f(4, 2),
         (x(1) - x(3) - t) * (x(1) - x(2) - t) * pres.p(1) +
             (x(2) - x(4) - t) *
                 ((x(1) - x(2) - t) * pres.p(1) + (x(2) - x(3) - t) * pres.p(2)),
         "f_{4,2}");
  expect(pres.f(4, 1), (x(1) - x(4) - t) * (x(1) - x(3) - t) * (x(1) - x(2) - t) * pres.p(1),
         "f_{4,1}");
  return out;
}

CheckOutcome check_split_product(const HessFn& h) {
  const int n = h.size();
  int r = 0;
  for (int j = 1; j < n; ++j)
    if (h.value_at(j) == j) {
      r = j;
      break;
    }
  if (r == 0) return ok(0);
  auto [h1, h2] = split_at(h, r);
  auto fp1 = fixed_points(h1);
  auto fp2 = fixed_points(h2);
  std::vector<Permutation> assembled;
  for (const auto& u : fp1)
    for (const auto& v : fp2) {
      std::vector<int> word(u.one_line());
      for (int k = 1; k <= n - r; ++k) word.push_back(v.value_at(k) + r);
      assembled.push_back(Permutation(std::move(word)));
    }
  std::sort(assembled.begin(), assembled.end());
  auto fp = fixed_points(h);
  std::sort(fp.begin(), fp.end());
  if (!(assembled == fp)) return fail(static_cast<long long>(fp.size()), "h=" + h.to_string());
  return ok(static_cast<long long>(fp.size()));
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<Check> checks;
  auto add = [&](const std::string& suite) {
    if (suite == "fixed-points") add_fixed_point_checks(checks, opt);
    else if (suite == "presentation") add_presentation_checks(checks, opt);
    else if (suite == "hilbert") add_hilbert_checks(checks, opt);
    else if (suite == "gkm") add_gkm_checks(checks, opt);
    else if (suite == "symfunc") add_symfunc_checks(checks, opt);
    else if (suite == "appendix") add_appendix_checks(checks, opt);
    else throw std::invalid_argument("unknown suite: " + suite);
  };
  if (name == "all") {
    for (const auto& s : suite_names()) add(s);
  } else {
    add(name);
  }
  Report report;
  report.suite = name;
  report.n = opt.n;
  if (opt.h) report.h = opt.h->to_string();
  report.checks = run_checks(checks, opt.jobs);
  return report;
}

}  // namespace hessring
