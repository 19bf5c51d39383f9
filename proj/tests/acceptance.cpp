// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion AC1..AC9. Exit status is
// nonzero when any criterion fails. An optional argument names the dmod CLI
// binary for the process-level determinism check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dmod/cli.hpp"
#include "test_util.hpp"

using namespace dmod;
using Status = IsogenyVerdict::Status;

namespace {

struct Criterion {
  std::string id;
  bool ok = true;
  std::vector<std::string> notes;
  long checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) notes.push_back("first failure: " + what);
    if (!cond) ok = false;
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<Criterion> g_results;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FieldPtr finite(uint32_t p, int n) { return Field::finite_default(make_const_field(p), n); }
FieldPtr F3x() { return Field::rational(make_const_field(3), 'x'); }

DrinfeldModule from_consts(const FieldPtr& K, std::initializer_list<int> b) {
  std::vector<Elem> c;
  for (int x : b) c.push_back(K->from_const(static_cast<uint32_t>(x)));
  return DrinfeldModule(SkewPoly(K, c));
}

DrinfeldModule cm_module(const FieldPtr& K) {
  return DrinfeldModule(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->one()}));
}

DrinfeldModule twist_a() {
  auto K = finite(2, 2);
  return DrinfeldModule(SkewPoly(K, {K->gen(), K->zero(), K->one()}));
}
DrinfeldModule twist_b() {
  auto K = finite(2, 2);
  return DrinfeldModule(SkewPoly(K, {K->mul(K->gen(), K->gen()), K->zero(), K->one()}));
}

// Sum of phi_{c_i} Frob^i computed directly in K{tau}.
SkewPoly eval_at_frobenius(const DrinfeldModule& M, const APolyX& P, long n) {
  SkewPoly acc(M.field());
  for (size_t i = 0; i < P.size(); ++i)
    acc = skew::add(acc, skew::mul(phi_action(M, P[i]), SkewPoly::tau_power(M.field(), n * static_cast<long>(i))));
  return acc;
}

// sum phi_{a_i} m_i, with the degree max law checked against each term.
bool max_law_holds(const OrthogonalBasis& B, const std::vector<FqPoly>& a) {
  DrinfeldModule act(B.act);
  SkewPoly sum(B.field());
  long best = kNegInf;
  for (size_t i = 0; i < a.size(); ++i) {
    SkewPoly term = skew::mul(phi_action(act, a[i]), B.elems[i]);
    best = std::max(best, term.deg());
    sum = skew::add(sum, term);
  }
  return sum.deg() == best;
}

// ---------------------------------------------------------------- AC1

void skew_pair_checks(Criterion& c, const SkewPoly& u, const SkewPoly& v) {
  auto dm = skew::right_divmod(u, v);
  c.expect(skew::add(skew::mul(dm.quot, v), dm.rem) == u, "u = q v + r");
  c.expect(dm.rem.deg() < v.deg(), "deg r < deg v");
  if (!u.is_zero()) c.expect(skew::mul(u, v).deg() == u.deg() + v.deg(), "degree additivity");
  SkewPoly g = skew::gcrd({u, v});
  c.expect(skew::right_divides(g, u) && skew::right_divides(g, v), "gcrd divides both");
  if (!u.is_zero()) {
    SkewPoly l = skew::lclm({u, v});
    c.expect(skew::right_divides(u, l) && skew::right_divides(v, l), "lclm common left multiple");
    c.expect(l.deg() + g.deg() == u.deg() + v.deg(), "deg lclm + deg gcrd = deg u + deg v");
  }
}

void ac1() {
  Criterion c{"AC1"};
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::vector<std::pair<std::string, FieldPtr>> fields = {
      {"F_2", finite(2, 1)}, {"F_4", finite(2, 2)}, {"F_8", finite(2, 3)}, {"F_9", finite(3, 2)}, {"F_3(x)", F3x()}};
  for (auto& [name, K] : fields) {
    auto tf = std::chrono::steady_clock::now();
    for (int it = 0; it < 1000; ++it) {
      long du, dv;
      // Over F_3(x) the lclm coefficients grow like x^(3^(du+dv)); keep du+dv <= 8.
      do {
        du = static_cast<long>(rng() % 8) - 1;
        dv = static_cast<long>(rng() % 7);
      } while (!K->is_finite() && du + dv > 8);
      int cd = K->is_finite() ? 0 : 1;
      skew_pair_checks(c, testutil::rand_skew(K, rng, du, cd), testutil::rand_skew(K, rng, dv, cd));
    }
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << name << " 1000 pairs" << (K->is_finite() ? "" : " (deg u + deg v <= 8)") << " "
       << seconds_since(tf) << "s";
    c.note(ss.str());
  }
  // Minimality against every monic polynomial of degree <= 3.
  long brute = 0;
  for (auto K : {finite(2, 1), finite(2, 2)}) {
    for (int it = 0; it < 40; ++it) {
      SkewPoly u = testutil::rand_skew(K, rng, 1 + static_cast<long>(rng() % 3), 0);
      SkewPoly v = testutil::rand_skew(K, rng, 1 + static_cast<long>(rng() % 3), 0);
      SkewPoly g = skew::gcrd({u, v}), l = skew::lclm({u, v});
      for (long d = 0; d <= 3; ++d)
        testutil::for_each_monic(K, d, [&](const SkewPoly& w) {
          ++brute;
          if (skew::right_divides(w, u) && skew::right_divides(w, v)) {
            c.expect(d <= g.deg() && skew::right_divides(w, g), "common right divisor divides gcrd");
          }
          if (d < l.deg()) c.expect(!(skew::right_divides(u, w) && skew::right_divides(v, w)), "no smaller common left multiple");
        });
    }
  }
  c.note(std::to_string(brute) + " brute-force comparisons");
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << "total " << seconds_since(t0) << "s";
  c.note(ss.str());
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC2

void ac2() {
  Criterion c{"AC2"};
  auto K = finite(2, 1);
  auto M = from_consts(K, {1, 1, 1});
  auto fr = frobenius_charpoly(M);
  c.expect(fr.char_poly == APolyX{{1, 1}, {1}, {1}}, "char poly of tau^2+tau+1 is X^2+X+(t+1)");
  c.expect(eval_at_frobenius(M, fr.char_poly, fr.n).is_zero(), "char_poly(Frob) = 0 for tau^2+tau+1");
  c.expect(eval_at_frobenius(M, {{1, 1}, {1}, {1}}, 1).is_zero(), "X^2+X+(t+1) kills tau");
  auto E = end_ring_finite(M);
  c.expect(E.elems.size() == 2, "End rank 2");
  std::vector<long> degs;
  for (auto& e : E.elems) degs.push_back(e.deg());
  c.expect(degs == std::vector<long>{0, 1}, "basis degrees {0,1}");
  for (auto& e : E.elems) c.expect(is_endomorphism(M, e), "basis element commutes with phi_t");
  auto R = multiplication_table(E);
  c.expect(R.table[1][1] == std::vector<FqPoly>{{1, 1}, {1}}, "m2^2 = (t+1) m1 + m2");
  // Same relation by direct multiplication.
  SkewPoly lhs = skew::mul(E.elems[1], E.elems[1]);
  SkewPoly rhs = skew::add(skew::mul(phi_action(M, {1, 1}), E.elems[0]), E.elems[1]);
  c.expect(lhs == rhs, "m2^2 = (t+1) m1 + m2 by evaluation");

  auto N = from_consts(K, {1, 0, 1});
  auto fn = frobenius_charpoly(N);
  c.expect(fn.char_poly == APolyX{{1, 1}, {}, {1}}, "char poly of tau^2+1 is X^2+(t+1)");
  c.expect(eval_at_frobenius(N, fn.char_poly, fn.n).is_zero(), "char_poly(Frob) = 0 for tau^2+1");
  auto inv = invariants(N);
  c.expect(inv.height == Height{2, 1}, "height 2");
  // Height oracle: v_tau(phi_{t+1}) / deg(t+1) with phi_{t+1} = tau^2.
  c.expect(phi_action(N, {1, 1}).valuation() == 2, "v_tau(phi_{t+1}) = 2");
  c.note("X^2+X+(t+1), X^2+(t+1), m2^2=(t+1)m1+m2, height 2");
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC3, AC4

std::vector<OrthogonalBasis> g_bases;

std::vector<DrinfeldModule> all_small_modules(const FieldPtr& K) {
  std::vector<DrinfeldModule> out;
  uint64_t n = K->size();
  for (long r = 1; r <= 2; ++r) {
    uint64_t total = 1;
    for (long i = 0; i < r; ++i) total *= n;
    for (uint64_t k = 0; k < total; ++k)
      for (uint64_t lead = 1; lead < n; ++lead) {
        std::vector<Elem> c;
        uint64_t x = k;
        for (long i = 0; i < r; ++i) {
          c.push_back(K->element(x % n));
          x /= n;
        }
        c.push_back(K->element(lead));
        out.emplace_back(SkewPoly(K, c));
      }
  }
  return out;
}

void ac3() {
  Criterion c{"AC3"};
  long count = 0, swept = 0;
  for (auto K : {finite(2, 1), finite(2, 2)}) {
    for (auto& M : all_small_modules(K)) {
      ++count;
      auto E = end_ring_finite(M);
      g_bases.push_back(E);
      auto fr = frobenius_minpoly_data(M);
      long rank_bound = fr.d * fr.e * fr.e;
      c.expect(static_cast<long>(E.elems.size()) == rank_bound, "rank d e^2 for " + M.phi_t().render());
      for (auto& e : E.elems) c.expect(is_endomorphism(M, e), "basis element is an endomorphism");
      // Brute-force module: every endomorphism of degree <= 2 rank_bound,
      // written in the computed basis.
      AMat rows;
      for (long d = 0; d <= 2 * rank_bound; ++d)
        for (auto& f : endos_of_degree(M, d)) {
          ++swept;
          auto co = orth_membership(E, f);
          c.expect(co.has_value(), "brute endomorphism lies in computed module");
          if (co) rows.push_back(*co);
        }
      auto ed = ala::elementary_divisors(M.K().fq(), rows);
      bool units = static_cast<long>(ed.size()) == rank_bound;
      for (auto& f : ed) units = units && f == FqPoly{1};
      c.expect(units, "unit elementary divisors for " + M.phi_t().render() + " over " + K->describe());
    }
  }
  c.note(std::to_string(count) + " modules (F_2: 6, F_4: 60), " + std::to_string(swept) + " swept endomorphisms");
  g_results.push_back(c);
}

void ac4() {
  Criterion c{"AC4"};
  // Further bases: separable closure, Hom, F_q(x).
  g_bases.push_back(end_ring_sep(from_consts(finite(2, 1), {1, 0, 1})).basis);
  g_bases.push_back(hom_module(twist_a(), twist_b()).basis);
  g_bases.push_back(end_ring_generic_rational(cm_module(F3x()), 64).basis);
  std::mt19937_64 rng(4);
  long tuples = 0;
  for (auto& B : g_bases) {
    c.expect(orthogonality_certificate(B), "orthogonality certificate");
    const ConstField& F = B.field()->fq();
    for (int it = 0; it < 500; ++it) {
      std::vector<FqPoly> a;
      for (size_t i = 0; i < B.elems.size(); ++i) a.push_back(testutil::rand_fqpoly(F, rng, 3));
      c.expect(max_law_holds(B, a), "max law");
      ++tuples;
    }
  }
  c.note(std::to_string(g_bases.size()) + " bases, " + std::to_string(tuples) + " tuples");
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC5

void ac5() {
  Criterion c{"AC5"};
  auto t0 = std::chrono::steady_clock::now();
  auto K = F3x();
  auto M = cm_module(K);
  auto G = end_ring_generic_rational(M, 64);
  SkewPoly j(K, {K->gen(), K->one()});
  c.expect(G.basis.elems.size() == 2, "rank 2");
  bool has_j = false;
  for (auto& e : G.basis.elems) has_j = has_j || e == j;
  c.expect(has_j, "basis contains x+tau");
  c.expect(skew::mul(j, j) == M.phi_t(), "(x+tau)^2 = phi_t");
  c.expect(is_endomorphism(M, j), "x+tau commutes with phi_t");
  auto model = good_model(M);
  auto& P = G.places;
  c.note("scan found " + fqp::render(P.first.place) + " char " + fqp::render(P.first.char_ideal) + " and " +
         fqp::render(P.second.place) + " char " + fqp::render(P.second.char_ideal));
  c.expect(P.first.is_ordinary && P.second.is_ordinary, "both scanned places ordinary");
  c.expect(P.first.char_ideal == FqPoly{2, 1}, "first place has char (t-1)");
  c.expect(P.second.place == FqPoly{2, 1, 1} && P.second.char_ideal == FqPoly{1, 0, 1}, "(x^2+x+2) with char (t^2+1)");
  // The place (x-1) itself.
  auto m1 = place_frobenius_data(model, {2, 1});
  c.expect(m1.is_ordinary, "(x-1) ordinary");
  c.expect(m1.char_ideal == FqPoly{2, 1}, "(x-1) char (t-1)");
  auto Ft = Field::rational(make_const_field(3), 't');
  Elem expect = Ft->frac({1}, {1, 2});  // 1/(1-t)
  c.expect(Ft->sub(m1.adjoint_trace, expect) == Ft->zero(), "adjoint trace 1/(1-t) at (x-1)");
  // 4/(1-t) from a1 a_{r-1}/a0 computed here: char poly X^2 + a1 X + a0.
  auto cp = m1.frob.char_poly;
  c.expect(cp.size() == 3, "quadratic Frobenius char poly at (x-1)");
  if (cp.size() == 3) {
    Elem a1 = Ft->from_poly(cp[1]), a0 = Ft->from_poly(cp[0]);
    Elem tr = Ft->div(Ft->mul(a1, a1), a0);
    c.expect(tr == Ft->frac({4 % 3}, {1, 2}), "a1^2/a0 = 4/(1-t)");
  }
  c.expect(eval_apoly(m1.residue_module, cp, SkewPoly::tau_power(m1.residue_module.field(), m1.frob.n)).is_zero(),
           "char poly kills Frobenius at (x-1)");
  double sec = seconds_since(t0);
  c.expect(sec < 10.0, "runtime under 10 s");
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << "(x-1): char (t-1), trace 1/(1-t); runtime " << sec << "s (limit 10s)";
  c.note(ss.str());
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC6

void ac6() {
  Criterion c{"AC6"};
  auto K = F3x();
  auto M = cm_module(K);
  auto model = good_model(M);
  SkewPoly one = SkewPoly::constant(K, K->one()), j(K, {K->gen(), K->one()});
  std::vector<SkewPoly> S = {one, j, skew::add(j, one), M.phi_t(), skew::add(skew::mul(j, M.phi_t()), one)};
  auto places = good_places(model, 10);
  c.expect(places.size() == 10, "10 good places");
  for (auto& pi : places) {
    auto Mb = reduce_at(model, pi);
    c.expect(reduce_endo(model, pi, M.phi_t()) == Mb.phi_t(), "phi_t reduces to the reduced module");
    for (auto& f : S) {
      SkewPoly rf = reduce_endo(model, pi, f);
      c.expect(rf.deg() == f.deg(), "degree preserved");
      c.expect(is_endomorphism(Mb, rf), "image is an endomorphism");
      for (auto& g : S) {
        SkewPoly rg = reduce_endo(model, pi, g);
        c.expect(reduce_endo(model, pi, skew::mul(f, g)) == skew::mul(rf, rg), "multiplicative");
        c.expect(reduce_endo(model, pi, skew::add(f, g)) == skew::add(rf, rg), "additive");
      }
    }
  }
  auto P = two_ordinary_distinct(model, 64);
  for (auto* pd : {&P.first, &P.second}) {
    auto Ek = end_ring_finite(pd->residue_module);
    AMat rows;
    for (auto& f : {one, j}) {
      auto co = orth_membership(Ek, reduce_endo(model, pd->place, f));
      c.expect(co.has_value(), "image in End of the reduction");
      if (co) rows.push_back(*co);
    }
    auto ed = ala::elementary_divisors(Ek.field()->fq(), rows);
    bool units = ed.size() == 2 && Ek.elems.size() == 2;
    for (auto& f : ed) units = units && f == FqPoly{1};
    c.expect(units, "unit elementary divisors at " + fqp::render(pd->place));
  }
  c.note("10 places, " + std::to_string(S.size()) + " endomorphisms; saturated at " + fqp::render(P.first.place) +
         " and " + fqp::render(P.second.place));
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC7

void ac7() {
  Criterion c{"AC7"};
  auto K2 = finite(2, 1);
  auto M = from_consts(K2, {1, 1, 1}), N = from_consts(K2, {1, 0, 1});
  auto v = are_isogenous(M, N);
  c.expect(v.status == Status::NotIsogenous, "(tau^2+tau+1, tau^2+1) not isogenous");
  c.expect(v.cert_phi && v.cert_psi && *v.cert_phi != *v.cert_psi, "distinct certificates");
  if (v.cert_phi && v.cert_psi) {
    c.expect(eval_at_frobenius(M, *v.cert_phi, 1).is_zero(), "certificate kills Frob of phi");
    c.expect(eval_at_frobenius(N, *v.cert_psi, 1).is_zero(), "certificate kills Frob of psi");
  }
  auto w = are_isogenous(twist_a(), twist_b());
  auto tau = SkewPoly::tau_power(twist_a().field(), 1);
  c.expect(w.status == Status::Isogenous && w.witness && *w.witness == tau, "twist pair witness tau");
  c.expect(skew::mul(tau, twist_a().phi_t()) == skew::mul(twist_b().phi_t(), tau), "tau intertwines");

  auto K = F3x();
  auto phi = cm_module(K);
  Elem x = K->gen();
  std::vector<Elem> co;
  for (long i = 0; i <= 2; ++i) co.push_back(K->div(K->mul(x, phi.phi_t().coeff(i)), K->twist(x, i)));
  DrinfeldModule conj(SkewPoly(K, co));
  auto r = are_isogenous_rational(phi, conj);
  c.expect(r.status == Status::Isogenous && r.witness, "CM vs x-conjugate isogenous");
  if (r.witness) c.expect(skew::mul(*r.witness, phi.phi_t()) == skew::mul(conj.phi_t(), *r.witness), "witness intertwines");
  DrinfeldModule pert(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->gen()}));
  auto n = are_isogenous_rational(phi, pert);
  c.expect(n.status == Status::NotIsogenous && n.place, "CM vs perturbed not isogenous at a place");
  std::string place = "-";
  if (n.place) {
    place = fqp::render(*n.place);
    auto a = reduce_at(good_model(phi), *n.place), b = reduce_at(good_model(pert), *n.place);
    auto ca = frobenius_minpoly_data(a).char_poly, cb = frobenius_minpoly_data(b).char_poly;
    c.expect(ca != cb, "char polys differ at the certifying place");
    long deg = static_cast<long>(n.place->size()) - 1;
    c.expect(eval_at_frobenius(a, ca, deg).is_zero() && eval_at_frobenius(b, cb, deg).is_zero(),
             "certificates kill the residue Frobenius");
  }
  // Hom ranks.
  auto rank_of = [](const OrthogonalBasis& B) { return static_cast<long>(B.elems.size()); };
  c.expect(rank_of(hom_module(M, N).basis) == 0, "Hom rank 0 for non-isogenous pair");
  c.expect(rank_of(hom_module(N, M).basis) == 0, "Hom rank 0 reversed");
  c.expect(rank_of(hom_module(M, M).basis) == rank_of(end_ring_finite(M)), "Hom(M,M) rank = End rank");
  c.expect(rank_of(hom_module(twist_a(), twist_b()).basis) == rank_of(end_ring_finite(twist_a())), "twist Hom rank");
  c.expect(rank_of(hom_module(N, N, true).basis) == rank_of(end_ring_sep(N).basis), "sep Hom rank = sep End rank");
  c.note("witness tau; CM~conj witness " + (r.witness ? r.witness->render() : std::string("-")) + "; perturbed cert at " + place);
  g_results.push_back(c);
}

// ---------------------------------------------------------------- AC8, AC9

const char* kDocs[] = {
    "q = 2\nfield = finite:1\nphi_t = [[1],[1],[1]]\npsi_t = [[1],[0],[1]]\n",
    "q = 2\nfield = finite:2\nphi_t = [[0,1],[0],[1]]\npsi_t = [[1,1],[0],[1]]\n",
    "q = 3\nfield = rational\nphi_t = [[0,0,1],[0,1,0,1],[1]]\npsi_t = [[0,0,1],[0,1,0,1],[0,1]]\n",
    "q = 3\nfield = rational\nphi_t = [1,[0,1],1]\n",
};

std::string run_process(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  return out + "\nrc=" + std::to_string(rc);
}

void ac8(const std::string& cli) {
  Criterion c{"AC8"};
  long runs = 0;
  for (auto* doc : kDocs)
    for (auto& cmd : cli::kCommands) {
      auto a = cli::run_command(cmd, doc), b = cli::run_command(cmd, doc);
      c.expect(a.out == b.out && a.err == b.err && a.exit_code == b.exit_code, cmd + " repeatable");
      runs += 2;
    }
  cli::CommandOptions sep;
  sep.sep = true;
  for (auto* doc : {kDocs[0], kDocs[1]})
    for (auto* cmd : {"end", "hom", "isogeny"}) {
      auto a = cli::run_command(cmd, doc, sep), b = cli::run_command(cmd, doc, sep);
      c.expect(a.out == b.out && a.exit_code == b.exit_code, std::string(cmd) + " --sep repeatable");
      runs += 2;
    }
  // Race step counts appear in the compared output.
  c.expect(cli::run_command("isogeny", kDocs[2]).out.find("steps_a=") != std::string::npos, "step counts printed");
  if (!cli.empty()) {
    std::string path = "acceptance_input.txt";
    FILE* f = std::fopen(path.c_str(), "w");
    if (f) {
      std::fputs(kDocs[2], f);
      std::fclose(f);
    }
    for (auto& cmd : cli::kCommands) {
      std::string line = cli + " " + cmd + " " + path + " 2>&1";
      c.expect(run_process(line) == run_process(line), "binary " + cmd + " repeatable");
      runs += 2;
    }
    std::remove(path.c_str());
  }
  c.note(std::to_string(runs) + " runs compared byte for byte" + std::string(cli.empty() ? " (library only)" : " (library and binary)"));
  g_results.push_back(c);
}

void ac9() {
  Criterion c{"AC9"};
  auto K = F3x();
  std::vector<DrinfeldModule> fixtures = {from_consts(finite(2, 1), {1, 1, 1}), from_consts(finite(2, 1), {1, 0, 1}),
                                          twist_a(), cm_module(K),
                                          DrinfeldModule(SkewPoly(K, {K->one(), K->gen(), K->one()})),
                                          DrinfeldModule(SkewPoly(K, {K->gen(), K->zero(), K->one()}))};
  for (auto& M : fixtures) {
    auto inv = invariants(M);
    cli::GaloisTag want = (M.K().is_finite() || inv.is_isotrivial) ? cli::GaloisTag::IsotrivialProcyclic
                          : inv.is_generic                         ? cli::GaloisTag::GenericOpenCentralizer
                                                                   : cli::GaloisTag::SpecialNonIsotrivial;
    c.expect(cli::galois_tag(M) == want, std::string("tag for ") + M.phi_t().render());
  }
  // The CLI report prints the same tag.
  auto r = cli::run_command("galois-report", kDocs[3]);
  c.expect(r.out.find("tag=SpecialNonIsotrivial") != std::string::npos, "CLI tag for special fixture");
  c.note("tag consistent with invariants on " + std::to_string(fixtures.size()) + " fixtures");
  c.note("not reproduced at desk scale: general algorithms over arbitrary finitely generated K, "
         "the going-down B-search, the full adelic Galois image");
  g_results.push_back(c);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::function<void()>> steps = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, [&] { ac8(cli); }, ac9};
  for (auto& s : steps) {
    try {
      s();
    } catch (const std::exception& e) {
      Criterion c{"AC" + std::to_string(g_results.size() + 1)};
      c.expect(false, std::string("exception: ") + e.what());
      g_results.push_back(c);
    }
    auto& c = g_results.back();
    std::cout << c.id << (c.ok ? " PASS" : " FAIL") << " (exact, " << c.checks << " checks)";
    for (auto& n : c.notes) std::cout << "; " << n;
    std::cout << std::endl;
  }
  bool all = true;
  for (auto& c : g_results) all = all && c.ok;
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << seconds_since(t0);
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " in " << ss.str() << "s" << std::endl;
  return all ? 0 : 1;
}
