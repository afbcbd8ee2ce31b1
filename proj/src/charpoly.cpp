#include "tac/charpoly.hpp"

#include "tac/errors.hpp"

namespace tac {

mpq_class squared_coupling(HalfInt j, HalfInt m) {
  const mpq_class a0(ladder_factor(j, m));
  const mpq_class a1(ladder_factor(j, m + HalfInt::from_int(1)));
  return a0 * a1 / 4;
}

BlockDecomposition block_decompose(HalfInt j) {
  require_spin(j);
  BlockDecomposition out;
  out.j = j;
  // integer j: the chain through m = 0 comes first
  const int first = (j.is_integer() && j.twice() % 4 != 0) ? 1 : 0;
  for (int b = 0; b < 2; ++b) {
    const int offset = b == 0 ? first : 1 - first;
    for (long t = j.twice() - 2 * offset; t >= -j.twice(); t -= 4) out.labels[b].push_back(HalfInt::from_twice(t));
    const auto& chain = out.labels[b];
    for (size_t k = 0; k + 1 < chain.size(); ++k) out.couplings[b].push_back(squared_coupling(j, chain[k + 1]));
  }
  return out;
}

RatPolynomial chain_polynomial(const std::vector<mpq_class>& couplings, long size) {
  if (size <= 0) return RatPolynomial::constant(mpq_class(1));
  if (static_cast<long>(couplings.size()) != size - 1)
    throw InvalidInput("chain of size " + std::to_string(size) + " needs " + std::to_string(size - 1) + " couplings");
  const RatPolynomial lambda = RatPolynomial::monomial(1, mpq_class(1));
  RatPolynomial prev = RatPolynomial::constant(mpq_class(1));
  RatPolynomial cur = lambda;
  for (long k = 1; k < size; ++k) {
    RatPolynomial next = lambda * cur - prev * couplings[static_cast<size_t>(k - 1)];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::array<IntPolynomial, 2> block_char_polys(HalfInt j) {
  const BlockDecomposition blocks = block_decompose(j);
  std::array<IntPolynomial, 2> out;
  for (int b = 0; b < 2; ++b)
    out[b] = to_integer(chain_polynomial(blocks.couplings[b], static_cast<long>(blocks.labels[b].size())));
  return out;
}

IntPolynomial char_poly_exact(HalfInt j) {
  const BlockDecomposition blocks = block_decompose(j);
  RatPolynomial product = RatPolynomial::constant(mpq_class(1));
  for (int b = 0; b < 2; ++b)
    product = product * chain_polynomial(blocks.couplings[b], static_cast<long>(blocks.labels[b].size()));
  // det(H - lambda I) = (-1)^n det(lambda I - H)
  if (dimension(j) % 2 != 0) product = -product;
  return to_integer(product);
}

namespace {

mpz_class content(const IntPolynomial& p) {
  mpz_class g(0);
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

IntPolynomial exact_divide(const IntPolynomial& p, const mpz_class& d) {
  std::vector<mpz_class> c = p.coefficients();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw InternalConsistencyError("subresultant step was not an exact division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

mpz_class ipow(const mpz_class& base, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r = a.coefficients();
  const long db = b.degree();
  const mpz_class& lead = b.leading();
  long dr = a.degree();
  long steps = 0;
  while (dr >= db) {
    const mpz_class top = r[static_cast<size_t>(dr)];
    const long shift = dr - db;
    for (auto& v : r) v *= lead;
    for (long i = 0; i <= db; ++i) r[static_cast<size_t>(i + shift)] -= top * b.coefficients()[static_cast<size_t>(i)];
    ++steps;
    while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
  }
  const long missing = a.degree() - db + 1 - steps;
  IntPolynomial out(std::move(r));
  if (missing > 0) out *= ipow(lead, missing);
  return out;
}

}  // namespace

mpz_class resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  const mpz_class ca = content(a_in);
  const mpz_class cb = content(b_in);
  IntPolynomial a = exact_divide(a_in, ca);
  IntPolynomial b = exact_divide(b_in, cb);
  mpz_class g(1), h(1);
  int s = 1;
  const mpz_class t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 != 0 && b.degree() % 2 != 0) s = -1;
  }
  if (b.degree() == 0) return s * t * ipow(b.leading(), a.degree());
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 != 0 && b.degree() % 2 != 0) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = exact_divide(r, g * ipow(h, delta));
    g = a.leading();
    if (delta > 0) h = exact_quotient(ipow(g, delta), ipow(h, delta - 1));
    if (b.degree() <= 0) break;
  }
  const long da = a.degree();
  h = exact_quotient(ipow(b.leading(), da), ipow(h, da - 1));
  return s * t * h;
}

mpz_class discriminant(const IntPolynomial& p) {
  if (p.degree() < 1) throw InvalidInput("discriminant needs a polynomial of degree >= 1");
  const long n = p.degree();
  const mpz_class res = resultant(p, p.derivative());
  mpz_class d = exact_quotient(res, p.leading());
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

long distinct_real_root_count(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  std::vector<RatPolynomial> seq{to_rational(p), to_rational(p.derivative())};
  while (!seq.back().is_zero()) {
    RatPolynomial r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus_infinity) {
    long count = 0;
    int last = 0;
    for (const auto& q : seq) {
      int s = sgn(q.leading());
      if (!at_plus_infinity && q.degree() % 2 != 0) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

DegeneracyReport degeneracy_report(HalfInt j) {
  require_spin(j);
  DegeneracyReport rep;
  rep.j = j;
  const IntPolynomial full = char_poly_exact(j);
  rep.discriminant_full = full.degree() >= 1 ? discriminant(full) : mpz_class(1);
  const auto blocks = block_char_polys(j);
  for (int b = 0; b < 2; ++b)
    rep.discriminant_block[b] = blocks[b].degree() >= 2 ? discriminant(blocks[b]) : mpz_class(1);
  rep.degenerate = rep.discriminant_full == 0;
  return rep;
}

std::string to_string(SolvabilityKind kind) {
  switch (kind) {
    case SolvabilityKind::trivial_zero: return "TRIVIAL_ZERO";
    case SolvabilityKind::radicals: return "RADICALS";
    case SolvabilityKind::hypergeometric: return "HYPERGEOMETRIC";
    case SolvabilityKind::numeric_only: return "NUMERIC_ONLY";
  }
  return "UNKNOWN";
}

SolvabilityClass classify_solvability(HalfInt j) {
  require_spin(j);
  const IntPolynomial full = char_poly_exact(j);
  SolvabilityClass out;
  if (full.lambda_valuation() == full.degree()) return out;  // pure power of lambda
  for (const auto& block : block_char_polys(j)) {
    const IntPolynomial rest = block.strip_lambda(block.lambda_valuation());
    if (!rest.is_even()) throw InternalConsistencyError("chain polynomial is not even after removing lambda");
    out.mu_degree = std::max(out.mu_degree, rest.degree() / 2);
  }
  if (out.mu_degree <= 4)
    out.kind = SolvabilityKind::radicals;
  else if (out.mu_degree == 5)
    out.kind = SolvabilityKind::hypergeometric;
  else
    out.kind = SolvabilityKind::numeric_only;
  return out;
}

namespace {

struct RowText {
  long twice_j;
  const char* literal;
  const char* corrected;  // nullptr unless the printed row is wrong
  bool degenerate;
};

// Factored forms as printed, with lambda written as l.
constexpr RowText kTable1[] = {
    {1, "l^2", nullptr, true},
    {2, "l(1-l^2)", nullptr, false},
    {3, "(l^2-3)^2", nullptr, true},
    // Printed with (l^2-3); the explicit 5x5 matrix and the quoted
    // eigenvalues 0, +-3, +-2 sqrt(3) require (l^2-9).
    {4, "-l(l^2-3)(l^2-12)", "-l(l^2-9)(l^2-12)", false},
    {5, "l^2(l^2-28)^2", nullptr, true},
    {6, "-l(l^2-60)(l^2-6l-15)(l^2+6l-15)", nullptr, false},
    {7, "(l^4-126l^2+945)^2", nullptr, true},
    {8, "-l(l^2-28)(l^2-208)(l^2+10l-63)(l^2-10l-63)", nullptr, false},
    {9, "l^2(l^4-396l^2+19008)^2", nullptr, true},
    {10, "-l(l^2-108)(l^2-528)(l^6-651l^4+65619l^2-455625)", nullptr, false},
    {11, "(l^6-1001l^4+172315l^2-2338875)^2", nullptr, true},
    {12, "-l(l^2-336)(l^4-1176l^2+55440)(l^6-1491l^4+421155l^2-12006225)", nullptr, false},
    {13, "l^2(l^6-2184l^4+1012752l^2-74794752)^2", nullptr, true},
    {14, "-l(l^2-784)(l^4-2296l^2+353808)(l^8-3108l^6+2236710l^4-328692196l^2+3773030625)", nullptr, false},
    {15, "(l^8-4284l^6+4488102l^4-1062230652l^2+22347950625)^2", nullptr, true},
    // Printed row has degree 25 instead of 17 and quadratics in l^2 with
    // positive coefficients; the candidate is the exact factorization.
    {16,
     "-l(l^4+6624l^2+1900800)(l^4+16704l^2+28753920)"
     "(l^8+23184l^6+138054240l^4+204233529600l^2+33886369440000)^2",
     "-l(l^4-4176l^2+1797120)(l^4-1656l^2+118800)"
     "(l^8-5796l^6+8628390l^4-3191148900l^2+132368630625)",
     false},
    {17, "l^2(l^8-7752l^6+16263696l^4-9531032320l^2+995361177600)^2", nullptr, true},
    {18,
     "-l(l^4-7056l^2+6441984)(l^4-3096l^2+668304)"
     "(l^10-10197l^8+29403594l^6-25878927978l^4+5213177173701l^2-88322873900625)",
     nullptr, false},
    {19, "(l^10-13167l^8+50640282l^6-62764022286l^4+19627235976789l^2-584689432201875)^2", nullptr, true},
    {20,
     "-l(l^4-5456l^2+3165184)(l^6-11396l^4+20438704l^2-2031480000)"
     "(l^10-16797l^8+84869994l^6-145160193178l^4+68747106284901l^2-3870591128105625)",
     nullptr, false},
    {21, "l^2(l^10-21252l^8+140008176l^6-329460868800l^4+241815611520000l^2-33685691719680000)^2", nullptr,
     true},
    // The printed constant term has no operator in front of it.
    {22,
     "-l(l^4-8976l^2+10644480)(l^6-17556l^4+55226160l^2-15437822400)"
     "(l^12-26598l^10+225185103l^8-712278892116l^6+768687668037135l^4-202420859545362150l^2 "
     "4712996874211250625)",
     "-l(l^4-8976l^2+10644480)(l^6-17556l^4+55226160l^2-15437822400)"
     "(l^12-26598l^10+225185103l^8-712278892116l^6+768687668037135l^4-202420859545362150l^2"
     "+4712996874211250625)",
     false},
};

}  // namespace

std::vector<HalfInt> table1_spins() {
  std::vector<HalfInt> out;
  for (const auto& row : kTable1) out.push_back(HalfInt::from_twice(row.twice_j));
  return out;
}

Table1Entry table1_reference(HalfInt j) {
  for (const auto& row : kTable1) {
    if (row.twice_j != j.twice()) continue;
    Table1Entry e;
    e.j = j;
    e.literal_text = row.literal;
    try {
      e.literal = parse_factored(row.literal);
    } catch (const InvalidInput&) {
      e.literal.reset();
    }
    if (row.corrected != nullptr) {
      e.corrected_text = row.corrected;
      e.corrected = parse_factored(row.corrected);
      e.questionable = true;
    }
    e.degenerate_column = row.degenerate;
    return e;
  }
  throw NotAvailable("spin " + j.str() + " is not in the reference table (1/2 ... 11)");
}

}  // namespace tac
