#include "tac/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tac/charpoly.hpp"
#include "tac/errors.hpp"

namespace tac::cli {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::charpoly: return "charpoly";
    case Command::spectrum: return "spectrum";
    case Command::classify: return "classify";
    case Command::verify: return "verify";
    case Command::evolve: return "evolve";
    case Command::table1: return "table1";
  }
  return "?";
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::charpoly, Command::spectrum, Command::classify, Command::verify, Command::evolve,
                    Command::table1})
    if (to_string(c) == text) return c;
  throw InvalidInput("unknown command '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw InvalidInput("unknown format '" + text + "' (json, csv, text)");
}

int output_digits(int digits) { return std::max(17, digits - 10); }

int exact_digits(const Real& x) {
  return 1 + static_cast<int>(std::ceil(static_cast<double>(x.bits()) * std::log10(2.0)));
}

namespace {

std::string exact_str(const Real& x) { return x.str(exact_digits(x)); }

HalfInt require_j(const RunConfig& cfg) {
  if (!cfg.j) throw InvalidInput("--j is required for " + to_string(cfg.command));
  require_spin(*cfg.j);
  return *cfg.j;
}

Real parse_real(const std::string& name, const std::string& text, int digits) {
  Real r = Real::from_string(text, digits);
  if (!std::isfinite(r.to_double())) throw InvalidInput(name + " must be finite, got " + text);
  return r;
}

void check_digits(int digits) {
  if (digits < kMinDigits)
    throw InvalidInput("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                       std::to_string(digits));
}

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

json coefficients_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

std::string kind_name(RadicalExpr::Kind k) {
  switch (k) {
    case RadicalExpr::Kind::rational: return "rational";
    case RadicalExpr::Kind::add: return "add";
    case RadicalExpr::Kind::sub: return "sub";
    case RadicalExpr::Kind::mul: return "mul";
    case RadicalExpr::Kind::div: return "div";
    case RadicalExpr::Kind::neg: return "neg";
    case RadicalExpr::Kind::sqrt: return "sqrt";
    case RadicalExpr::Kind::cbrt: return "cbrt";
  }
  return "?";
}

RadicalExpr::Kind kind_from_name(const std::string& s) {
  using K = RadicalExpr::Kind;
  for (K k : {K::rational, K::add, K::sub, K::mul, K::div, K::neg, K::sqrt, K::cbrt})
    if (kind_name(k) == s) return k;
  throw InvalidInput("unknown radical node '" + s + "'");
}

SolvabilityKind solvability_from_name(const std::string& s) {
  for (SolvabilityKind k : {SolvabilityKind::trivial_zero, SolvabilityKind::radicals,
                            SolvabilityKind::hypergeometric, SolvabilityKind::numeric_only})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown solvability class '" + s + "'");
}

Exactness exactness_from_name(const std::string& s) {
  for (Exactness e : {Exactness::exact_rational, Exactness::radical, Exactness::numeric})
    if (to_string(e) == s) return e;
  throw InvalidInput("unknown exactness tag '" + s + "'");
}

std::string parity_name(const IntPolynomial& p) {
  if (p.is_even()) return "even";
  if (p.is_odd()) return "odd";
  return "mixed";
}

}  // namespace

json metadata_json(const RunConfig& cfg) {
  json meta = {{"tool", kToolName},
               {"version", kToolVersion},
               {"command", to_string(cfg.command)},
               {"chi", cfg.chi},
               {"omega", cfg.omega},
               {"precision", cfg.digits},
               {"basis", "m descending from +j"}};
  meta["j"] = cfg.j ? json(cfg.j->str()) : json(nullptr);
  if (cfg.command == Command::evolve) {
    meta["t_max"] = cfg.t_max;
    meta["steps"] = cfg.steps;
    meta["initial_state"] = "exp(i pi Jy/2)|j,j>";
    meta["time"] = "uniform grid in t, rows report chi*t";
  }
  return meta;
}

void write_metadata_comments(const RunConfig& cfg, std::ostream& out) {
  const json meta = metadata_json(cfg);
  for (const char* key : {"tool", "version", "command", "j", "chi", "omega", "precision", "t_max", "steps", "basis",
                          "initial_state", "time"}) {
    if (!meta.contains(key)) continue;
    const json& v = meta[key];
    out << "# " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

json radical_to_json(const RadicalExpr& e) {
  if (e.is_rational()) return json::array({"rational", e.rational_value().get_str()});
  json node = json::array({kind_name(e.kind())});
  for (int i = 0; i < e.arity(); ++i) node.push_back(radical_to_json(e.operand(i)));
  return node;
}

RadicalExpr radical_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("radical tree node must be a non-empty array");
  const RadicalExpr::Kind kind = kind_from_name(j.at(0).get<std::string>());
  if (kind == RadicalExpr::Kind::rational) return RadicalExpr::rational(mpq_class(j.at(1).get<std::string>()));
  if (j.size() == 2) return RadicalExpr::make(kind, radical_from_json(j.at(1)));
  return RadicalExpr::make(kind, radical_from_json(j.at(1)), radical_from_json(j.at(2)));
}

json spectrum_to_json(const SpectrumReport& r) {
  json eig = json::array();
  for (const auto& e : r.eigenvalues) {
    json item = {{"value", exact_str(e.value)},
                 {"multiplicity", e.multiplicity},
                 {"exactness", to_string(e.exactness)}};
    if (e.radical_form) {
      item["radical_form"] = e.radical_form->str();
      item["radical_tree"] = radical_to_json(*e.radical_form);
    }
    eig.push_back(std::move(item));
  }
  json blocks = json::array();
  for (const auto& b : r.block_eigenvalues) {
    json vals = json::array();
    for (const auto& v : b) vals.push_back(exact_str(v));
    blocks.push_back(std::move(vals));
  }
  return {{"j", r.j.str()},
          {"digits", r.digits},
          {"degenerate", r.degenerate},
          {"pairing_verified", r.pairing_verified},
          {"solvability", {{"kind", to_string(r.solvability.kind)}, {"mu_degree", r.solvability.mu_degree}}},
          {"eigenvalues", std::move(eig)},
          {"block_eigenvalues", std::move(blocks)}};
}

SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport r;
  r.j = HalfInt::parse(j.at("j").get<std::string>());
  r.digits = j.at("digits").get<int>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.pairing_verified = j.at("pairing_verified").get<bool>();
  r.solvability.kind = solvability_from_name(j.at("solvability").at("kind").get<std::string>());
  r.solvability.mu_degree = j.at("solvability").at("mu_degree").get<long>();
  for (const auto& item : j.at("eigenvalues")) {
    Eigenvalue e;
    e.value = Real::from_string(item.at("value").get<std::string>(), r.digits);
    e.multiplicity = item.at("multiplicity").get<long>();
    e.exactness = exactness_from_name(item.at("exactness").get<std::string>());
    if (item.contains("radical_tree")) e.radical_form = radical_from_json(item.at("radical_tree"));
    r.eigenvalues.push_back(std::move(e));
  }
  const json& blocks = j.at("block_eigenvalues");
  for (size_t b = 0; b < 2 && b < blocks.size(); ++b)
    for (const auto& v : blocks[b]) r.block_eigenvalues[b].push_back(Real::from_string(v.get<std::string>(), r.digits));
  return r;
}

bool same_report(const SpectrumReport& a, const SpectrumReport& b) {
  if (a.j != b.j || a.digits != b.digits || a.degenerate != b.degenerate ||
      a.pairing_verified != b.pairing_verified || a.solvability.kind != b.solvability.kind ||
      a.solvability.mu_degree != b.solvability.mu_degree || a.eigenvalues.size() != b.eigenvalues.size())
    return false;
  for (size_t i = 0; i < a.eigenvalues.size(); ++i) {
    const Eigenvalue& x = a.eigenvalues[i];
    const Eigenvalue& y = b.eigenvalues[i];
    if (!(x.value == y.value) || x.multiplicity != y.multiplicity || x.exactness != y.exactness) return false;
    if (x.radical_form.has_value() != y.radical_form.has_value()) return false;
    if (x.radical_form && x.radical_form->str() != y.radical_form->str()) return false;
  }
  for (int blk = 0; blk < 2; ++blk) {
    if (a.block_eigenvalues[blk].size() != b.block_eigenvalues[blk].size()) return false;
    for (size_t i = 0; i < a.block_eigenvalues[blk].size(); ++i)
      if (!(a.block_eigenvalues[blk][i] == b.block_eigenvalues[blk][i])) return false;
  }
  return true;
}

void write_csv(const TimeSeries& series, const RunConfig& cfg, std::ostream& out) {
  write_metadata_comments(cfg, out);
  const auto& names = TimeSeries::column_names();
  for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  const int sig = output_digits(series.digits);
  auto field = [&](const std::optional<Real>& v) { return v ? v->str(sig) : std::string(); };
  for (const auto& r : series.rows) {
    out << r.chi_t.str(sig) << ',' << r.jx_mean.str(sig) << ',' << r.var_jy.str(sig) << ',' << r.var_jz.str(sig)
        << ',' << field(r.xi_y) << ',' << field(r.xi_z) << ',' << r.corr_xz.str(sig) << ',' << field(r.xi_opt)
        << ',' << field(r.opt_angle) << '\n';
  }
}

DenseOperator closed_form_propagator_j2(const Real& chi_t, int digits) {
  const int w = digits + 10;
  const Real t = chi_t.with_digits(w);
  const Real a = sqrt(Real(3L, w)) * t;
  const Real c = cos(a), s = sin(a);
  const Real s2 = sin(a * 2L) / sqrt(Real(2L, w));
  const Real c2 = cos(a * 2L);
  const Real c3 = cos(t * 3L), s3 = sin(t * 3L);
  const Real zero = Real::zero(w);
  const Real rows[5][5] = {{c * c, zero, -s2, zero, s * s},
                           {zero, c3, zero, -s3, zero},
                           {s2, zero, c2, zero, -s2},
                           {zero, s3, zero, c3, zero},
                           {s * s, zero, s2, zero, c * c}};
  DenseOperator u(BasisOrdering(HalfInt::from_int(2)), digits);
  for (long r = 0; r < 5; ++r)
    for (long k = 0; k < 5; ++k) u(r, k) = Complex(rows[r][k].with_digits(digits), Real::zero(digits));
  return u;
}

bool Table1Row::acceptable() const {
  if (!structure_ok) return false;
  if (status == "MATCH") return true;
  return questionable && corrected_match.value_or(false);
}

Table1Row check_table1_row(HalfInt j) {
  const Table1Entry e = table1_reference(j);
  const IntPolynomial computed = char_poly_exact(j);
  Table1Row row;
  row.j = j;
  row.questionable = e.questionable;
  std::ostringstream detail;
  if (!e.literal) {
    row.status = "UNPARSEABLE";
    detail << "printed form does not parse";
  } else if (*e.literal == computed) {
    row.status = "MATCH";
  } else {
    row.status = "MISMATCH";
    detail << "printed degree " << e.literal->degree() << " vs computed " << computed.degree();
    for (long k = 0; k <= std::max(e.literal->degree(), computed.degree()); ++k) {
      if (e.literal->coefficient(k) != computed.coefficient(k)) {
        detail << "; first difference at l^" << k << ": printed " << e.literal->coefficient(k).get_str()
               << ", computed " << computed.coefficient(k).get_str();
        break;
      }
    }
  }
  if (e.corrected) {
    row.corrected_match = (*e.corrected == computed);
    detail << (detail.tellp() > 0 ? "; " : "") << "corrected candidate " << *e.corrected_text << ": "
           << (*row.corrected_match ? "MATCH" : "MISMATCH");
  }

  const bool parity_ok = j.is_integer() ? computed.is_odd() : computed.is_even();
  const mpz_class expected_lead = (dimension(j) % 2 == 0) ? 1 : -1;
  const bool lead_ok = computed.leading() == expected_lead;
  long squarefree_degree = 0;
  {
    const RatPolynomial f = to_rational(computed);
    squarefree_degree = computed.degree() - gcd(f, f.derivative()).degree();
  }
  const bool real_ok = distinct_real_root_count(computed) == squarefree_degree;
  const bool degenerate = discriminant(computed) == 0;
  const bool column_ok = degenerate == e.degenerate_column;
  row.structure_ok = parity_ok && lead_ok && real_ok && column_ok;
  if (!row.structure_ok)
    detail << (detail.tellp() > 0 ? "; " : "") << "structure: parity " << parity_ok << " leading " << lead_ok
           << " real roots " << real_ok << " degenerate column " << column_ok;
  row.detail = detail.str();
  return row;
}

std::vector<PropertyResult> verify_properties(HalfInt j, const Real& chi, const Real& omega, int digits,
                                              bool inject_fault) {
  validate_spin_and_precision(j, digits);
  if (j.twice() < 1) throw InvalidInput("verify needs j >= 1/2");
  if (chi.is_zero()) throw InvalidInput("chi must be nonzero");
  std::vector<PropertyResult> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  auto sci = [](const Real& x) { return x.str(3); };
  const Real tol12 = pow10_neg(12, digits);
  const Real tol10 = pow10_neg(10, digits);

  const DenseOperator h = build_h_ta(j, chi, digits);
  const DenseOperator r = chiral_operator(j, digits);
  {
    const Real a = anticommutator(h, r).max_abs();
    add("chiral_anticommutation", a < tol12, "max|{H,R}| = " + sci(a));
    const DenseOperator hf = h + build_cartesian(j, digits).z * omega;
    const Real b = anticommutator(hf, r).max_abs();
    add("chiral_anticommutation_field", b < tol12, "max|{H_f,R}| = " + sci(b) + " at omega = " + omega.str(17));
  }

  if (j.twice() == 1) add("zero_hamiltonian", h.max_abs().is_zero(), "max|H| = " + sci(h.max_abs()));

  const SpectrumReport report = spectrum(j, digits);
  if (inject_fault) {
    BlockDecomposition bd = block_decompose(j);
    if (bd.couplings[0].empty()) throw InvalidInput("fault injection needs a chain coupling (j >= 1)");
    for (auto& w : bd.couplings[0]) w = -w;
    std::array<IntPolynomial, 2> chains;
    for (int b = 0; b < 2; ++b)
      chains[b] = to_integer(chain_polynomial(bd.couplings[b], static_cast<long>(bd.labels[b].size())));
    try {
      const SpectrumReport faulty = spectrum_from_chains(j, chains, digits);
      add("spectrum_pairing", faulty.pairing_verified, "injected fault: sign-flipped couplings in chain 0");
    } catch (const std::exception& ex) {
      add("spectrum_pairing", false, std::string("injected fault: ") + ex.what());
    }
  } else {
    add("spectrum_pairing", report.pairing_verified,
        std::to_string(report.eigenvalues.size()) + " distinct eigenvalues, multiplicities sum to " +
            std::to_string(report.total_multiplicity()));
  }

  {
    Real s1 = Real::zero(digits), s2 = Real::zero(digits);
    for (const auto& e : report.eigenvalues) {
      s1 += e.value * e.multiplicity;
      s2 += e.value * e.value * e.multiplicity;
    }
    mpq_class tr2 = 0;
    for (const auto& chain : block_decompose(j).couplings)
      for (const auto& w : chain) tr2 += 2 * w;
    const Real exact(tr2, digits);
    const Real rel = abs(s2 - exact) / max(Real(1L, digits), exact);
    const Real tol = pow10_neg(digits - 10, digits);
    add("trace_moments", abs(s1) < tol && rel < tol,
        "sum lambda = " + sci(s1) + ", sum lambda^2 = " + s2.str(20) + " vs tr(H/chi)^2 = " + tr2.get_str());
  }

  const SpectralInterpolant interp(report, h, digits);
  const StateVector psi = coherent_initial_state(j, digits);
  const CartesianSet ops = build_cartesian(j, digits);
  const Real casimir = Real(j.twice() * (j.twice() + 2), digits) / 4L;
  const Propagator u0 = interp.at(Real::zero(digits));
  const Real e0 = expectation(psi, u0, h).re;
  const bool small = dimension(j) <= 21;
  Real unit_err = Real::zero(digits), cas_err = Real::zero(digits), energy_err = Real::zero(digits);
  Real oracle_err = Real::zero(digits), chiral_err = Real::zero(digits);
  for (const char* text : {"0.37", "1.91", "4.4"}) {
    const Real t = Real::from_string(text, digits);
    const Propagator u = interp.at(t);
    const DenseOperator id = DenseOperator::identity(u.matrix.basis(), digits);
    unit_err = max(unit_err, max_abs_diff(u.matrix.adjoint() * u.matrix, id));
    const ObservableSet obs = heisenberg_expectations(psi, u, ops);
    cas_err = max(cas_err, abs(obs.casimir() - casimir));
    energy_err = max(energy_err, abs(expectation(psi, u, h).re - e0));
    if (small) {
      oracle_err = max(oracle_err, max_abs_diff(propagator_taylor(h, t, digits).matrix, u.matrix));
      const DenseOperator back = r * u.matrix * r.adjoint();
      chiral_err = max(chiral_err, max_abs_diff(back, interp.at(-t).matrix));
    }
  }
  add("unitarity", unit_err < tol12, "max|U^dag U - I| = " + sci(unit_err));
  add("casimir_conservation", cas_err < tol10, "max|<J^2>(t) - j(j+1)| = " + sci(cas_err));
  add("energy_conservation", energy_err < tol10, "max|<H>(t) - <H>(0)| = " + sci(energy_err));
  if (small) {
    add("taylor_oracle_agreement", oracle_err < tol10, "max|U_spectral - U_taylor| = " + sci(oracle_err));
    add("chiral_dynamics", chiral_err < tol10, "max|R U(t) R^-1 - U(-t)| = " + sci(chiral_err));
  }

  if (j == HalfInt::from_int(2)) {
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    Real worst = Real::zero(digits);
    for (int k = 0; k < 100; ++k) {
      const Real t(dist(rng), digits);
      const Propagator u = interp.at(t);
      worst = max(worst, max_abs_diff(u.matrix, closed_form_propagator_j2(t, digits)));
    }
    add("closed_form_propagator", worst < tol12, "100 times in [0, 5], max entry error " + sci(worst));
  }
  return out;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out) {
  const HalfInt j = require_j(cfg);
  check_digits(cfg.digits);
  const IntPolynomial p = char_poly_exact(j);
  const mpz_class disc = p.degree() >= 1 ? discriminant(p) : mpz_class(1);
  std::array<mpz_class, 2> disc_block = {1, 1};
  if (j.twice() >= 1) disc_block = degeneracy_report(j).discriminant_block;
  const BlockDecomposition bd = block_decompose(j);
  const auto chains = block_char_polys(j);
  switch (format_or(cfg, Format::json)) {
    case Format::json: {
      json chain_json = json::array();
      for (int b = 0; b < 2; ++b) {
        json labels = json::array(), w = json::array();
        for (const auto& m : bd.labels[b]) labels.push_back(m.str());
        for (const auto& c : bd.couplings[b]) w.push_back(c.get_str());
        chain_json.push_back({{"labels", labels}, {"squared_couplings", w}, {"polynomial", coefficients_json(chains[b])}});
      }
      json doc = {{"meta", metadata_json(cfg)},
                  {"j", j.str()},
                  {"convention", "det(H/chi - lambda I), coefficients ascending in lambda"},
                  {"coefficients", coefficients_json(p)},
                  {"degree", p.degree()},
                  {"leading_coefficient", p.leading().get_str()},
                  {"parity", parity_name(p)},
                  {"text", to_string(p)},
                  {"discriminant", disc.get_str()},
                  {"discriminant_block", {disc_block[0].get_str(), disc_block[1].get_str()}},
                  {"degenerate", disc == 0},
                  {"chains", chain_json}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      write_metadata_comments(cfg, out);
      out << "power,coefficient\n";
      for (long k = 0; k <= p.degree(); ++k) out << k << ',' << p.coefficient(k).get_str() << '\n';
      break;
    case Format::text:
      out << "j = " << j.str() << "\nP(l) = " << to_string(p) << "\nparity: " << parity_name(p)
          << "\ndiscriminant: " << disc.get_str() << "\ndegenerate: " << (disc == 0 ? "yes" : "no") << '\n';
      break;
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const HalfInt j = require_j(cfg);
  const SpectrumReport r = spectrum(j, cfg.digits);
  const int sig = output_digits(cfg.digits);
  switch (format_or(cfg, Format::json)) {
    case Format::json: {
      json doc = spectrum_to_json(r);
      doc["meta"] = metadata_json(cfg);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      write_metadata_comments(cfg, out);
      out << "value,multiplicity,exactness,radical_form\n";
      for (const auto& e : r.eigenvalues)
        out << e.value.str(sig) << ',' << e.multiplicity << ',' << to_string(e.exactness) << ','
            << (e.radical_form ? e.radical_form->str() : "") << '\n';
      break;
    case Format::text:
      out << "j = " << j.str() << ", solvability " << to_string(r.solvability.kind) << " (mu-degree "
          << r.solvability.mu_degree << "), degenerate " << (r.degenerate ? "yes" : "no") << ", pairing "
          << (r.pairing_verified ? "verified" : "FAILED") << '\n';
      for (const auto& e : r.eigenvalues) {
        out << "  " << e.value.str(sig) << "  x" << e.multiplicity << "  " << to_string(e.exactness);
        if (e.radical_form) out << "  " << e.radical_form->str();
        out << '\n';
      }
      break;
  }
  return r.pairing_verified ? kExitOk : kExitPropertyFailure;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const HalfInt j = require_j(cfg);
  if (j.twice() < 1) throw InvalidInput("classification needs j >= 1/2");
  const SolvabilityClass c = classify_solvability(j);
  switch (format_or(cfg, Format::json)) {
    case Format::json:
      out << json{{"meta", metadata_json(cfg)},
                  {"j", j.str()},
                  {"solvability", to_string(c.kind)},
                  {"mu_degree", c.mu_degree}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      write_metadata_comments(cfg, out);
      out << "j,solvability,mu_degree\n" << j.str() << ',' << to_string(c.kind) << ',' << c.mu_degree << '\n';
      break;
    case Format::text:
      out << "j = " << j.str() << ": " << to_string(c.kind) << " (mu-degree " << c.mu_degree << ")\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const HalfInt j = require_j(cfg);
  check_digits(cfg.digits);
  const auto results = verify_properties(j, parse_real("chi", cfg.chi, cfg.digits),
                                         parse_real("omega", cfg.omega, cfg.digits), cfg.digits, cfg.inject_fault);
  long passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  const bool ok = passed == static_cast<long>(results.size());
  switch (format_or(cfg, Format::text)) {
    case Format::json: {
      json props = json::array();
      for (const auto& r : results) props.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      out << json{{"meta", metadata_json(cfg)}, {"properties", props}, {"all_pass", ok}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      write_metadata_comments(cfg, out);
      out << "property,result,detail\n";
      for (const auto& r : results) out << r.name << ',' << (r.pass ? "PASS" : "FAIL") << ",\"" << r.detail << "\"\n";
      break;
    case Format::text:
      for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
      out << passed << "/" << results.size() << " properties passed\n";
      break;
  }
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  const HalfInt j = require_j(cfg);
  check_digits(cfg.digits);
  if (!parse_real("omega", cfg.omega, cfg.digits).is_zero())
    throw InvalidInput("evolve supports the field-free Hamiltonian only (omega = 0)");
  if (cfg.steps < 2) throw InvalidInput("--steps must be at least 2");
  const TimeSeries series = time_series(j, parse_real("chi", cfg.chi, cfg.digits),
                                        parse_real("t-max", cfg.t_max, cfg.digits), cfg.steps, cfg.digits);
  if (format_or(cfg, Format::csv) == Format::json) {
    const int sig = output_digits(cfg.digits);
    json cols = json::object();
    for (const auto& name : TimeSeries::column_names()) {
      json arr = json::array();
      for (const auto& v : series.column(name)) arr.push_back(v ? json(v->str(sig)) : json(nullptr));
      cols[name] = std::move(arr);
    }
    out << json{{"meta", metadata_json(cfg)}, {"columns", cols}}.dump(2) << '\n';
  } else {
    write_csv(series, cfg, out);
  }
  return kExitOk;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  std::vector<HalfInt> spins = cfg.j ? std::vector<HalfInt>{*cfg.j} : table1_spins();
  std::vector<Table1Row> rows;
  for (HalfInt j : spins) rows.push_back(check_table1_row(j));
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.acceptable();
  switch (format_or(cfg, Format::text)) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json item = {{"j", r.j.str()}, {"status", r.status}, {"questionable", r.questionable},
                     {"structure_ok", r.structure_ok}, {"detail", r.detail}};
        item["corrected_match"] = r.corrected_match ? json(*r.corrected_match) : json(nullptr);
        arr.push_back(std::move(item));
      }
      out << json{{"meta", metadata_json(cfg)}, {"rows", arr}, {"all_acceptable", ok}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      write_metadata_comments(cfg, out);
      out << "j,status,questionable,corrected_match,structure_ok,detail\n";
      for (const auto& r : rows)
        out << r.j.str() << ',' << r.status << ',' << (r.questionable ? "yes" : "no") << ','
            << (r.corrected_match ? (*r.corrected_match ? "yes" : "no") : "") << ','
            << (r.structure_ok ? "yes" : "no") << ",\"" << r.detail << "\"\n";
      break;
    case Format::text:
      for (const auto& r : rows) {
        out << "J=" << r.j.str() << "  " << r.status;
        if (r.questionable) out << " (QUESTIONABLE)";
        if (!r.detail.empty()) out << "  " << r.detail;
        out << '\n';
      }
      break;
  }
  return ok ? kExitOk : kExitPropertyFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* target = &out;
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot open output file " + cfg.output_path);
      target = &file;
    }
    switch (cfg.command) {
      case Command::charpoly: return cmd_charpoly(cfg, *target);
      case Command::spectrum: return cmd_spectrum(cfg, *target);
      case Command::classify: return cmd_classify(cfg, *target);
      case Command::verify: return cmd_verify(cfg, *target);
      case Command::evolve: return cmd_evolve(cfg, *target);
      case Command::table1: return cmd_table1(cfg, *target);
    }
    return kExitInvalidInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NotAvailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << " (best residual " << e.best_residual() << ")\n";
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  }
}

}  // namespace tac::cli
