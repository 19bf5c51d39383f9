// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dmod::cli {

const std::vector<std::string> kCommands = {"info", "end", "hom", "isogeny", "frobenius", "reduce", "galois-report"};

namespace {

constexpr long kDefaultDegreeBudget = 16;
constexpr long kDefaultPlaceBudget = 64;
constexpr long kDefaultStepBudget = 10000;

struct Cursor {
  const std::string& s;
  int line;
  int col0;  // column of s[0], 1-based
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col0 + static_cast<int>(i), msg); }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  uint64_t integer() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected an integer");
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      if (v > (1ull << 40)) fail("integer too large");
      ++i;
    }
    return v;
  }
  FqPoly poly(const ConstField& F) {
    expect('[');
    FqPoly f;
    if (!peek(']')) {
      do {
        size_t at = i;
        uint64_t c = integer();
        if (c >= F.q()) {
          i = at;
          ws();
          fail("constant " + std::to_string(c) + " is not a code of F_" + std::to_string(F.q()));
        }
        f.push_back(static_cast<uint32_t>(c));
      } while (eat(','));
    }
    expect(']');
    fqp::trim(f);
    return f;
  }
  Elem elem(const Field& K) {
    const ConstField& F = K.fq();
    if (!peek('[')) {
      size_t at = i;
      uint64_t c = integer();
      if (c >= F.q()) {
        i = at;
        ws();
        fail("constant out of range");
      }
      return K.from_const(static_cast<uint32_t>(c));
    }
    size_t at = i;
    FqPoly a = poly(F);
    if (K.is_finite()) {
      if (fqp::deg(a) >= K.degree()) {
        i = at;
        ws();
        fail("finite field element has too many coordinates");
      }
      return K.from_poly(a);
    }
    FqPoly b = {1};
    if (eat('/')) {
      size_t bt = i;
      b = poly(F);
      if (b.empty()) {
        i = bt;
        ws();
        fail("zero denominator");
      }
    }
    return K.frac(a, b);
  }
};

struct Entry {
  std::string value;
  int line = 0, col = 0;
};

const std::vector<std::string> kKeys = {"q", "field", "phi_t", "psi_t", "seed", "degree_budget", "place_budget", "step_budget"};

SkewPoly parse_coeff_list(const FieldPtr& K, const Entry& e) {
  Cursor c{e.value, e.line, e.col};
  c.expect('[');
  std::vector<Elem> co;
  size_t last = 0;
  do {
    c.ws();
    last = c.i;
    co.push_back(c.elem(*K));
  } while (c.eat(','));
  c.expect(']');
  if (!c.at_end()) c.fail("trailing characters");
  if (K->is_zero(co.back())) {
    c.i = last;
    c.fail("leading coefficient is zero");
  }
  if (co.size() < 2) {
    c.i = last;
    c.fail("rank must be at least 1");
  }
  return SkewPoly(K, co);
}

}  // namespace

Document parse_document(const std::string& text) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, static_cast<int>(b) + 1, "expected key = value");
    std::string key = s.substr(b, eq - b);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ParseError(line, static_cast<int>(b) + 1, "unknown key '" + key + "'");
    if (entries.count(key)) throw ParseError(line, static_cast<int>(b) + 1, "duplicate key '" + key + "'");
    std::string value = s.substr(eq + 1);
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
    entries[key] = Entry{value, line, static_cast<int>(eq) + 2};
  }
  auto need = [&](const std::string& k) -> const Entry& {
    auto it = entries.find(k);
    if (it == entries.end()) throw ParseError(line + 1, 1, "missing key '" + k + "'");
    return it->second;
  };
  auto integer = [](const Entry& e) {
    Cursor c{e.value, e.line, e.col};
    uint64_t v = c.integer();
    if (!c.at_end()) c.fail("trailing characters");
    return static_cast<long>(v);
  };
  Document doc;
  const Entry& eq = need("q");
  long q = integer(eq);
  try {
    doc.fq = make_const_field(static_cast<uint32_t>(q));
  } catch (const std::exception& ex) {
    throw ParseError(eq.line, eq.col, std::string("invalid q: ") + ex.what());
  }
  const Entry& ef = need("field");
  {
    Cursor c{ef.value, ef.line, ef.col};
    c.ws();
    std::string v = ef.value.substr(c.i);
    if (v.rfind("rational", 0) == 0) {
      char var = 'x';
      if (v.size() > 8) {
        if (v[8] != ':' || v.size() != 10 || !std::isalpha(static_cast<unsigned char>(v[9])) || v[9] == 't') {
          c.i += 8;
          c.fail("expected rational or rational:<letter other than t>");
        }
        var = v[9];
      }
      doc.K = Field::rational(doc.fq, var);
    } else if (v.rfind("finite:", 0) == 0) {
      c.i += 7;
      long n = static_cast<long>(c.integer());
      if (n < 1 || n > 64) c.fail("extension degree out of range");
      if (c.eat(':')) {
        size_t at = c.i;
        FqPoly m = c.poly(*doc.fq);
        if (!c.at_end()) c.fail("trailing characters");
        try {
          if (fqp::deg(m) != n) throw std::invalid_argument("modulus degree differs from n");
          doc.K = Field::finite(doc.fq, m);
        } catch (const std::invalid_argument& ex) {
          c.i = at;
          c.ws();
          c.fail(ex.what());
        }
      } else {
        if (!c.at_end()) c.fail("trailing characters");
        doc.K = Field::finite_default(doc.fq, static_cast<int>(n));
      }
    } else {
      c.fail("expected rational or finite:<n>");
    }
  }
  doc.phi = DrinfeldModule(parse_coeff_list(doc.K, need("phi_t")));
  if (entries.count("psi_t")) doc.psi = DrinfeldModule(parse_coeff_list(doc.K, entries["psi_t"]));
  if (entries.count("seed")) doc.seed = integer(entries["seed"]);
  for (const char* k : {"degree_budget", "place_budget", "step_budget"})
    if (entries.count(k)) doc.options[k] = integer(entries[k]);
  return doc;
}

Elem parse_elem(const Field& K, const std::string& s) {
  Cursor c{s, 1, 1};
  Elem e = c.elem(K);
  if (!c.at_end()) c.fail("trailing characters");
  return e;
}

SkewPoly parse_skew(const FieldPtr& K, const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (t == "0") return SkewPoly(K);
  std::vector<Elem> co;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t end = pos;
    int depth = 0;
    while (end < t.size() && !(depth == 0 && t[end] == '+')) {
      if (t[end] == '[') ++depth;
      if (t[end] == ']') --depth;
      ++end;
    }
    std::string term = t.substr(pos, end - pos);
    size_t star = term.find("*t^");
    long k = 0;
    std::string coeff = term;
    if (star != std::string::npos) {
      coeff = term.substr(0, star);
      std::string e = term.substr(star + 3);
      k = e.empty() ? 1 : std::stol(e);
    }
    if (static_cast<long>(co.size()) <= k) co.resize(static_cast<size_t>(k) + 1, K->zero());
    co[static_cast<size_t>(k)] = K->add(co[static_cast<size_t>(k)], parse_elem(*K, coeff));
    if (end >= t.size()) break;
    pos = end + 1;
  }
  return SkewPoly(K, co);
}

std::string pretty_apoly(const FqPoly& a, char var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << "+";
    first = false;
    if (a[i] != 1 || i == 0) os << a[i];
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string pretty_apolyx(const APolyX& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    const FqPoly& a = f[i];
    if (a.empty()) continue;
    if (!first) os << "+";
    first = false;
    bool single = std::count_if(a.begin(), a.end(), [](uint32_t c) { return c != 0; }) == 1;
    if (i == 0) {
      os << (single ? pretty_apoly(a) : "(" + pretty_apoly(a) + ")");
      continue;
    }
    if (!fqp::is_one(a)) os << (single ? pretty_apoly(a) : "(" + pretty_apoly(a) + ")");
    os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

const char* tag_name(GaloisTag t) {
  switch (t) {
    case GaloisTag::GenericOpenCentralizer:
      return "GenericOpenCentralizer";
    case GaloisTag::IsotrivialProcyclic:
      return "IsotrivialProcyclic";
    default:
      return "SpecialNonIsotrivial";
  }
}

GaloisTag galois_tag(const DrinfeldModule& M) {
  auto inv = invariants(M);
  if (M.K().is_finite() || inv.is_isotrivial) return GaloisTag::IsotrivialProcyclic;
  if (inv.is_generic) return GaloisTag::GenericOpenCentralizer;
  return GaloisTag::SpecialNonIsotrivial;
}

namespace {

struct Budgets {
  long degree, place, step;
};

class Report {
 public:
  std::ostringstream text;
  void kv(const std::string& k, const std::string& v) { kv_.emplace_back(k, v); }
  void kv(const std::string& k, long v) { kv_.emplace_back(k, std::to_string(v)); }
  void flag(const std::string& k, bool v) { kv_.emplace_back(k, v ? "true" : "false"); }
  std::string str() const {
    std::ostringstream os;
    os << text.str() << "---\n";
    for (auto& [k, v] : kv_) os << k << "=" << v << "\n";
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string height_str(const Height& h) {
  return h.den == 1 ? std::to_string(h.num) : std::to_string(h.num) + "/" + std::to_string(h.den);
}

std::string ideal_str(const FqPoly& p) { return p.empty() ? "generic" : "(" + pretty_apoly(p) + ")"; }

std::string combo_str(const std::vector<FqPoly>& c) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].empty()) continue;
    if (!first) os << " + ";
    first = false;
    if (!fqp::is_one(c[i])) os << "(" << pretty_apoly(c[i]) << ")";
    os << "m" << i + 1;
  }
  return first ? "0" : os.str();
}

std::string combo_kv(const std::vector<FqPoly>& c) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << fqp::render(c[i]);
  os << ']';
  return os.str();
}

std::string degrees_str(const OrthogonalBasis& B) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < B.elems.size(); ++i) os << (i ? "," : "") << B.elems[i].deg();
  os << ']';
  return os.str();
}

void emit_presentation(Report& R, const OrthogonalBasis& B, const std::string& prefix) {
  RingPresentation P = multiplication_table(B);
  R.text << "basis_degrees: " << degrees_str(B) << "\n";
  R.kv(prefix + "rank", static_cast<long>(B.elems.size()));
  R.kv(prefix + "basis_degrees", degrees_str(B));
  for (size_t i = 0; i < B.elems.size(); ++i) {
    R.text << "  m" << i + 1 << " = " << B.elems[i].render() << "\n";
    R.kv(prefix + "basis." + std::to_string(i + 1), B.elems[i].render());
  }
  R.text << "table:\n";
  for (size_t i = 0; i < B.elems.size(); ++i)
    for (size_t j = 0; j < B.elems.size(); ++j) {
      R.text << "  m" << i + 1 << "*m" << j + 1 << " = " << combo_str(P.table[i][j]) << "\n";
      R.kv(prefix + "table." + std::to_string(i + 1) + "." + std::to_string(j + 1), combo_kv(P.table[i][j]));
    }
  R.text << "center:";
  for (size_t k = 0; k < P.center.size(); ++k) {
    R.text << (k ? ", " : " ") << combo_str(P.center[k]);
    R.kv(prefix + "center." + std::to_string(k + 1), combo_kv(P.center[k]));
  }
  R.text << "\n";
  R.kv(prefix + "commutative", P.center.size() == B.elems.size() ? "true" : "false");
}

void header(Report& R, const std::string& cmd, const Document& doc, const Budgets& b) {
  R.text << "dmod " << cmd << "\n";
  R.text << "budgets: degree=" << b.degree << " place=" << b.place << " step=" << b.step << " seed=" << doc.seed << "\n";
  R.text << "field: " << doc.K->describe() << "\n";
  R.text << "phi_t: " << doc.phi->phi_t().render() << "\n";
  if (doc.psi) R.text << "psi_t: " << doc.psi->phi_t().render() << "\n";
  R.kv("command", cmd);
  R.kv("degree_budget", b.degree);
  R.kv("place_budget", b.place);
  R.kv("step_budget", b.step);
  R.kv("seed", doc.seed);
}

void cmd_info(Report& R, const DrinfeldModule& M) {
  auto inv = invariants(M);
  R.text << "rank: " << inv.rank << "\n";
  R.text << "characteristic: " << ideal_str(inv.char_ideal) << "\n";
  std::ostringstream sum;
  sum << "rank " << inv.rank;
  if (inv.is_generic) {
    sum << ", generic characteristic";
  } else {
    R.text << "height: " << height_str(inv.height) << "\n";
    sum << ", char " << ideal_str(inv.char_ideal) << ", height " << height_str(inv.height);
    sum << (inv.is_ordinary ? ", ordinary" : ", not ordinary");
  }
  sum << (inv.is_isotrivial ? ", isotrivial" : ", not isotrivial");
  R.text << "ordinary: " << (inv.is_generic ? "n/a" : yn(inv.is_ordinary)) << "\n";
  R.text << "isotrivial: " << yn(inv.is_isotrivial) << "\n";
  R.text << "summary: " << sum.str() << "\n";
  R.kv("rank", inv.rank);
  R.kv("char_ideal", fqp::render(inv.char_ideal));
  R.flag("generic", inv.is_generic);
  if (!inv.is_generic) R.kv("height", height_str(inv.height));
  R.flag("ordinary", inv.is_ordinary);
  R.flag("isotrivial", inv.is_isotrivial);
}

[[noreturn]] void special_rational_scope(const DrinfeldModule& M) {
  std::string msg = "scope: special characteristic over function fields limited to rank-2 report";
  if (M.rank() == 2) msg += "; rank-2 path: B = A'";
  throw ScopeError(msg);
}

void cmd_end(Report& R, const DrinfeldModule& M, const CommandOptions& o, const Budgets& b) {
  if (M.K().is_finite()) {
    if (o.sep) {
      SepEnd S = end_ring_sep(M);
      R.text << "ring: End over K^sep, realized over K_m\n";
      R.text << "m: " << S.m << "\n";
      R.kv("ring", "End_sep");
      R.kv("m", S.m);
      emit_presentation(R, S.basis, "");
    } else {
      R.text << "ring: End over K\n";
      R.text << "m: 1\n";
      R.kv("ring", "End_K");
      R.kv("m", 1);
      emit_presentation(R, end_ring_finite(M), "");
    }
    return;
  }
  if (o.sep) throw ScopeError("scope: --sep needs a finite base field");
  if (!invariants(M).is_generic) special_rational_scope(M);
  long budget = o.budget.value_or(b.place);
  GenericEnd G = end_ring_generic_rational(M, budget);
  R.text << "ring: End over K via reduction at " << fqp::render(G.places.first.place) << " and "
         << fqp::render(G.places.second.place) << "\n";
  R.text << "m: 1\n";
  R.kv("ring", "End_K");
  R.kv("m", 1);
  R.kv("place.1", fqp::render(G.places.first.place));
  R.kv("place.2", fqp::render(G.places.second.place));
  R.kv("places_visited", G.places.places_visited);
  emit_presentation(R, G.basis, "");
  R.text << "frobenius_fields_disjoint: " << yn(G.disjoint_frobenius) << "\n";
  R.flag("frobenius_fields_disjoint", G.disjoint_frobenius);
  if (!G.disjoint_frobenius && G.basis.elems.size() == 1 && !G.extension_candidates.empty()) {
    R.text << "note: possible endomorphisms over extensions of K\n";
    for (size_t i = 0; i < G.extension_candidates.size(); ++i)
      R.kv("extension_candidate." + std::to_string(i + 1), pretty_apolyx(G.extension_candidates[i]));
  }
}

void emit_verdict(Report& R, const IsogenyVerdict& v) {
  R.text << "verdict: " << status_name(v.status) << "\n";
  R.kv("status", status_name(v.status));
  if (v.witness) {
    R.text << "witness: " << v.witness->render() << "\n";
    R.kv("witness", v.witness->render());
  }
  if (v.place) {
    R.text << "place: " << fqp::render(*v.place) << "\n";
    R.kv("place", fqp::render(*v.place));
  }
  if (v.cert_phi) {
    R.text << "certificate: " << pretty_apolyx(*v.cert_phi) << " != " << pretty_apolyx(*v.cert_psi) << "\n";
    R.kv("cert_phi", ax::render(*v.cert_phi));
    R.kv("cert_psi", ax::render(*v.cert_psi));
  }
  R.text << "extension_degree: " << v.extension_degree << "\n";
  R.text << "steps: a=" << v.steps_a << " b=" << v.steps_b << "\n";
  R.text << "report: " << v.report << "\n";
  R.kv("extension_degree", v.extension_degree);
  R.kv("steps_a", v.steps_a);
  R.kv("steps_b", v.steps_b);
}

const DrinfeldModule& need_psi(const Document& doc) {
  if (!doc.psi) throw PreconditionError("this command needs psi_t");
  return *doc.psi;
}

void cmd_isogeny(Report& R, const Document& doc, const CommandOptions& o, const Budgets& b) {
  const DrinfeldModule& phi = *doc.phi;
  const DrinfeldModule& psi = need_psi(doc);
  if (phi.K().is_finite()) {
    emit_verdict(R, o.sep ? are_isogenous_sep(phi, psi) : are_isogenous(phi, psi));
    return;
  }
  RationalBudgets rb{o.witness_degree.value_or(b.degree), b.place, b.step};
  R.text << "witness_degree: " << rb.witness_degree << "\n";
  R.kv("witness_degree", rb.witness_degree);
  emit_verdict(R, are_isogenous_rational(phi, psi, rb));
}

void cmd_hom(Report& R, const Document& doc, const CommandOptions& o) {
  const DrinfeldModule& phi = *doc.phi;
  const DrinfeldModule& psi = need_psi(doc);
  if (!phi.K().is_finite()) throw ScopeError("scope: Hom modules are computed over finite base fields");
  check_comparable(phi, psi);
  HomModule H = hom_module(phi, psi, o.sep);
  emit_verdict(R, H.verdict);
  R.text << "module: Hom" << (o.sep ? " over K^sep" : " over K") << ", ext_degree " << H.ext_degree << "\n";
  R.text << "rank: " << H.basis.elems.size() << "\n";
  R.kv("hom_rank", static_cast<long>(H.basis.elems.size()));
  R.kv("hom_ext_degree", H.ext_degree);
  R.text << "basis_degrees: " << degrees_str(H.basis) << "\n";
  R.kv("hom_basis_degrees", degrees_str(H.basis));
  for (size_t i = 0; i < H.basis.elems.size(); ++i) {
    R.text << "  h" << i + 1 << " = " << H.basis.elems[i].render() << "\n";
    R.kv("hom_basis." + std::to_string(i + 1), H.basis.elems[i].render());
  }
}

void emit_frob(Report& R, const CharPolyFrob& c, const std::string& prefix) {
  R.kv(prefix + "min_poly", ax::render(c.min_poly));
  R.kv(prefix + "char_poly", ax::render(c.char_poly));
  R.kv(prefix + "d", c.d);
  R.kv(prefix + "e", c.e);
}

void cmd_frobenius(Report& R, const DrinfeldModule& M, const CommandOptions& o, const Budgets& b) {
  if (M.K().is_finite()) {
    CharPolyFrob c = frobenius_charpoly(M);
    R.text << "frobenius: tau^" << c.n << "\n";
    R.text << "min_poly: " << pretty_apolyx(c.min_poly) << "\n";
    R.text << "char_poly: " << pretty_apolyx(c.char_poly) << "\n";
    R.text << "d: " << c.d << " e: " << c.e << "\n";
    R.text << "stabilizing_exponent: " << stabilizing_exponent(M) << "\n";
    R.text << "endring_commutative: " << yn(c.endring_commutative) << "\n";
    R.kv("n", c.n);
    emit_frob(R, c, "");
    R.kv("stabilizing_exponent", stabilizing_exponent(M));
    R.flag("endring_commutative", c.endring_commutative);
    return;
  }
  long count = o.places.value_or(4);
  if (count > b.place) count = b.place;
  ReductionModel model = good_model(M);
  R.text << "bad_denominator: " << fqp::render(model.bad_denominator) << "\n";
  R.kv("bad_denominator", fqp::render(model.bad_denominator));
  R.kv("places", count);
  auto places = good_places(model, static_cast<size_t>(count));
  for (size_t i = 0; i < places.size(); ++i) {
    PlaceData P = place_frobenius_data(model, places[i]);
    std::string k = "place." + std::to_string(i + 1) + ".";
    R.text << "place " << fqp::render(P.place) << ": char_poly " << pretty_apolyx(P.frob.char_poly) << ", char "
           << ideal_str(P.char_ideal) << ", " << (P.is_ordinary ? "ordinary" : "not ordinary") << ", adjoint trace "
           << P.trace_field->render(P.adjoint_trace) << "\n";
    R.kv(k + "pi", fqp::render(P.place));
    emit_frob(R, P.frob, k);
    R.kv(k + "char_ideal", fqp::render(P.char_ideal));
    R.flag(k + "ordinary", P.is_ordinary);
    R.kv(k + "adjoint_trace", P.trace_field->render(P.adjoint_trace));
  }
}

void cmd_reduce(Report& R, const DrinfeldModule& M, const CommandOptions& o, const Budgets& b) {
  if (M.K().is_finite()) throw ScopeError("scope: reduction needs the base field F_q(x)");
  long count = std::min(o.survey.value_or(8), b.place);
  ReductionModel model = good_model(M);
  R.text << "bad_denominator: " << fqp::render(model.bad_denominator) << "\n";
  R.kv("bad_denominator", fqp::render(model.bad_denominator));
  R.kv("survey", count);
  auto places = good_places(model, static_cast<size_t>(count));
  for (size_t i = 0; i < places.size(); ++i) {
    DrinfeldModule red = reduce_at(model, places[i]);
    auto inv = invariants(red);
    std::string k = "place." + std::to_string(i + 1) + ".";
    R.text << "place " << fqp::render(places[i]) << ": " << red.phi_t().render() << "; char " << ideal_str(inv.char_ideal)
           << ", height " << height_str(inv.height) << (inv.is_ordinary ? ", ordinary" : ", not ordinary") << "\n";
    R.kv(k + "pi", fqp::render(places[i]));
    R.kv(k + "phi_t", red.phi_t().render());
    R.kv(k + "char_ideal", fqp::render(inv.char_ideal));
    R.kv(k + "height", height_str(inv.height));
    R.flag(k + "ordinary", inv.is_ordinary);
  }
}

void cmd_galois(Report& R, const DrinfeldModule& M, const Budgets& b) {
  GaloisTag tag = galois_tag(M);
  auto inv = invariants(M);
  R.text << "tag: " << tag_name(tag) << "\n";
  R.kv("tag", tag_name(tag));
  R.kv("rank", inv.rank);
  R.text << "note: descriptive classification; no adelic image is computed\n";
  if (M.K().is_finite()) {
    R.text << "image: pro-cyclic, generated by Frobenius\n";
    emit_presentation(R, end_ring_finite(M), "end.");
    return;
  }
  if (tag == GaloisTag::IsotrivialProcyclic) {
    R.text << "image: pro-cyclic up to a finite extension\n";
    return;
  }
  if (tag == GaloisTag::SpecialNonIsotrivial) {
    if (M.rank() != 2) special_rational_scope(M);
    R.text << "rank-2 special characteristic: B = A'\n";
    R.kv("B", "A'");
    ReductionModel model = good_model(M);
    auto places = good_places(model, 3);
    for (size_t i = 0; i < places.size(); ++i) {
      PlaceData P = place_frobenius_data(model, places[i]);
      R.text << "adjoint trace at " << fqp::render(P.place) << ": " << P.trace_field->render(P.adjoint_trace) << "\n";
      R.kv("adjoint_trace." + std::to_string(i + 1), fqp::render(P.place) + ":" + P.trace_field->render(P.adjoint_trace));
    }
    return;
  }
  GenericEnd G = end_ring_generic_rational(M, b.place);
  emit_presentation(R, G.basis, "end.");
  long k = static_cast<long>(G.basis.elems.size());
  if (k == 1) {
    R.text << "A' = A, r' = " << M.rank() << "; image open in GL_" << M.rank() << "\n";
    R.kv("r_prime", M.rank());
    return;
  }
  SkewPoly f = G.basis.elems.back();
  GoingUpResult U = going_up(M, f);
  R.text << "A' = A[s]/(" << pretty_apolyx(U.minpoly) << "), s = " << f.render() << ", r' = " << U.rank_prime << "\n";
  R.kv("A_prime_minpoly", ax::render(U.minpoly));
  R.kv("r_prime", U.rank_prime);
  if (U.t_in_s) {
    R.text << "A' = F_" << M.K().q() << "[s] with t = " << pretty_apoly(*U.t_in_s, 's') << "\n";
    R.kv("t_in_s", fqp::render(*U.t_in_s));
  }
  if (U.module_in_s) R.kv("phi_prime_s", U.module_in_s->phi_t().render());
  R.text << "image: open in the centralizer of End in GL_" << M.rank() << "\n";
}

}  // namespace

CommandResult run_command(const std::string& name, const std::string& text, const CommandOptions& o) {
  CommandResult res;
  if (std::find(kCommands.begin(), kCommands.end(), name) == kCommands.end()) {
    res.exit_code = kParse;
    res.err = "unknown command '" + name + "'\n";
    return res;
  }
  Document doc;
  try {
    doc = parse_document(text);
  } catch (const ParseError& e) {
    res.exit_code = kParse;
    res.err = "parse error at line " + std::to_string(e.line) + ", column " + std::to_string(e.col) + ": " + e.what() + "\n";
    return res;
  } catch (const std::invalid_argument& e) {
    res.exit_code = kParse;
    res.err = std::string("parse error: ") + e.what() + "\n";
    return res;
  }
  auto opt = [&](const std::optional<long>& flag, const char* key, long def) {
    if (flag) return *flag;
    auto it = doc.options.find(key);
    return it == doc.options.end() ? def : it->second;
  };
  Budgets b{opt(o.degree_budget, "degree_budget", kDefaultDegreeBudget), opt(o.place_budget, "place_budget", kDefaultPlaceBudget),
            opt(o.step_budget, "step_budget", kDefaultStepBudget)};
  Report R;
  try {
    header(R, name, doc, b);
    const DrinfeldModule& M = *doc.phi;
    if (name == "info")
      cmd_info(R, M);
    else if (name == "end")
      cmd_end(R, M, o, b);
    else if (name == "hom")
      cmd_hom(R, doc, o);
    else if (name == "isogeny")
      cmd_isogeny(R, doc, o, b);
    else if (name == "frobenius")
      cmd_frobenius(R, M, o, b);
    else if (name == "reduce")
      cmd_reduce(R, M, o, b);
    else
      cmd_galois(R, M, b);
  } catch (const PreconditionError& e) {
    res.exit_code = kPrecondition;
    res.err = std::string("precondition: ") + e.what() + "\n";
    return res;
  } catch (const InseparableError& e) {
    res.exit_code = kPrecondition;
    res.err = std::string("precondition: ") + e.what() + "\n";
    return res;
  } catch (const ScopeError& e) {
    res.exit_code = kScope;
    res.err = std::string(e.what()) + "\n";
    return res;
  } catch (const BudgetExhausted& e) {
    res.exit_code = kScope;
    res.err = std::string("scope: budget exhausted: ") + e.what() + "\n";
    return res;
  } catch (const std::invalid_argument& e) {
    res.exit_code = kScope;
    res.err = std::string("scope: ") + e.what() + "\n";
    return res;
  }
  res.out = R.str();
  return res;
}

}  // namespace dmod::cli
