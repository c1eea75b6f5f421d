// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion.
//   acceptance [--edr PATH] [--golden DIR] [N ...]

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "edr/completion.hpp"
#include "edr/matred.hpp"
#include "edr/registry.hpp"
#include "edr/stability.hpp"
#include "oracles.hpp"

using namespace edr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string edr_binary;
std::string golden_dir;

Element zint(const mpz_class& v) { return Ring::integers().from_integer(v); }

bool divides_int(const mpz_class& d, const mpz_class& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool is_identity(const oracle::IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const Ring z = Ring::integers();
  int oracle_checked = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    Matrix A(z, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = z.from_integer(oracle::rand_int(rng, -50, 50));
    const auto r = diagonal_reduce(A);
    const auto a = oracle::to_int(A), P = oracle::to_int(r.P), Q = oracle::to_int(r.Q), D = oracle::to_int(r.D);
    if (oracle::mul(oracle::mul(P, a), Q) != D) o.fail("P·A·Q != D");
    if (!is_identity(oracle::mul(P, oracle::to_int(r.Pinv))) || !is_identity(oracle::mul(oracle::to_int(r.Qinv), Q)))
      o.fail("stored inverse mismatch");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && D[i][j] != 0) o.fail("D not diagonal");
    const std::size_t k = std::min(m, n);
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (!divides_int(D[i][i], D[i + 1][i + 1])) o.fail("divisibility chain broken");
    if (std::max(m, n) <= 5) {
      ++oracle_checked;
      const auto g = oracle::minor_gcds(a);
      mpz_class prod = 1;
      for (std::size_t i = 0; i < k; ++i) {
        prod *= D[i][i];
        if (abs(prod) != g[i]) o.fail("minor-gcd oracle mismatch");
      }
    }
  }
  o.detail = o.ok ? "200 random integer matrices up to 6x6, " + std::to_string(oracle_checked) +
                        " checked against the minor-gcd oracle"
                  : o.detail;
  return o;
}

Outcome replay_2x2(const Matrix& A, const ReductionResult& r) {
  Outcome o;
  if (!verify_reduction(A, r)) o.fail("certificate does not verify");
  if (!r.D(0, 0).is_one() || !r.D(0, 1).is_zero() || !r.D(1, 0).is_zero()) o.fail("D is not diag(1, δ)");
  const Ring& R = A.ring();
  Matrix P = Matrix::identity(R, 2), Q = Matrix::identity(R, 2);
  for (const auto& f : r.factors) {
    if (!(f.M * f.Minv).is_identity() || !(f.Minv * f.M).is_identity()) o.fail("factor " + f.name + " not invertible");
    if (f.left) {
      P = f.M * P;
    } else {
      Q = Q * f.M;
    }
  }
  if (!r.factors.empty() && (P != r.P || Q != r.Q)) o.fail("factors do not compose to P, Q");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(1002);
  const Ring z = Ring::integers();
  int zi = 0;
  while (zi < 500) {
    const mpz_class a = oracle::rand_int(rng, -99, 99), b = oracle::rand_int(rng, -99, 99),
                    c = oracle::rand_int(rng, -99, 99);
    if (gcd(gcd(a, b), c) != 1) continue;
    ++zi;
    Matrix A(z, 2, 2);
    A(0, 0) = zint(a);
    A(1, 0) = zint(b);
    A(1, 1) = zint(c);
    const auto r = reduce_2x2(A);
    const auto sub = replay_2x2(A, r);
    if (!sub.ok) o.fail(sub.detail);
    if (abs(r.D(1, 1).integer()) != abs(a * c)) o.fail("det ideal changed over Z");
  }
  const long p = 5;
  const Ring f5 = Ring::gfpoly(p);
  int fi = 0;
  auto rand_pol = [&] {
    oracle::Pol c(std::uniform_int_distribution<int>(0, 5)(rng));
    for (auto& x : c) x = std::uniform_int_distribution<long>(0, p - 1)(rng);
    return oracle::trim(c);
  };
  auto to_el = [&](const oracle::Pol& c) {
    Poly q;
    for (long x : c) q.coeffs.push_back(static_cast<std::uint64_t>(x));
    return Element(f5, q);
  };
  while (fi < 200) {
    const auto a = rand_pol(), b = rand_pol(), c = rand_pol();
    if (oracle::pgcd(oracle::pgcd(a, b, p), c, p) != oracle::Pol{1}) continue;
    ++fi;
    Matrix A(f5, 2, 2);
    A(0, 0) = to_el(a);
    A(1, 0) = to_el(b);
    A(1, 1) = to_el(c);
    const auto r = reduce_2x2(A);
    const auto sub = replay_2x2(A, r);
    if (!sub.ok) o.fail(sub.detail);
    if (oracle::to_pol(r.D(1, 1)) != oracle::pmonic(oracle::pmul(a, c, p), p)) o.fail("det ideal changed over F5[x]");
  }
  if (o.ok) o.detail = "500 integer and 200 F5[x] triples reduce to diag(1, δ) with invertible factors";
  return o;
}

bool same_ideal_mod(long n, long a1, long a2, long a3, long d) {
  return std::gcd(std::gcd(std::gcd(a1, a2), std::gcd(a3, n)), n) == std::gcd(d, n);
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(1003);
  const Ring z = Ring::integers();
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::vector<Element> a;
    mpz_class g = 0;
    for (std::size_t k = 0; k < n; ++k) {
      a.push_back(zint(oracle::rand_int(rng, -40, 40) * oracle::rand_int(rng, 1, 4)));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.back().integer().get_mpz_t());
    }
    const auto c = complete_row(a, zint(g));
    for (std::size_t j = 0; j < n; ++j)
      if (c.matrix(0, j) != a[j]) o.fail("first row changed");
    if (oracle::det(oracle::to_int(c.matrix)) != g) o.fail("det != gcd over Z");
  }
  long cases = 0;
  for (long n = 2; n <= 12; ++n) {
    const Ring r = Ring::modular(n);
    for (long v = 0; v < n * n * n * n; ++v) {
      const long a1 = v % n, a2 = v / n % n, a3 = v / (n * n) % n, d = v / (n * n * n);
      if (!same_ideal_mod(n, a1, a2, a3, d)) continue;
      ++cases;
      try {
        const auto c = complete_row({r.from_integer(a1), r.from_integer(a2), r.from_integer(a3)}, r.from_integer(d));
        if (c.matrix(0, 0) != r.from_integer(a1) || c.matrix(0, 1) != r.from_integer(a2) ||
            c.matrix(0, 2) != r.from_integer(a3))
          o.fail("first row changed in Z/" + std::to_string(n));
        oracle::IntMatrix m(3, std::vector<mpz_class>(3));
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) m[i][j] = c.matrix(i, j).integer();
        mpz_class det = oracle::det(m) - d;
        if (!divides_int(n, det)) o.fail("det != d in Z/" + std::to_string(n));
      } catch (const std::exception& e) {
        o.fail(std::string("Z/") + std::to_string(n) + ": " + e.what());
      }
    }
  }
  if (o.ok) o.detail = "500 integer rows and " + std::to_string(cases) + " exhaustive Z/n rows (n <= 12) complete with det = d";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (long m = 2; m <= 30; ++m) {
    const auto v = check_property(Ring::modular(m), Property::stable_range_1);
    if (!v.holds) o.fail("Z/" + std::to_string(m) + " reported without stable range 1");
    if (v.holds != oracle::sr1_mod(m)) o.fail("Z/" + std::to_string(m) + " disagrees with brute force");
  }
  const auto zv = check_property(Ring::integers(), Property::stable_range_1);
  if (zv.holds || zv.witness.size() != 2 || zv.witness[0].integer() != 3 || zv.witness[1].integer() != 5) {
    o.fail("integer counterexample (3, 5) not reported");
  } else if (mpz_class(1 - 3) % 5 == 0 || mpz_class(-1 - 3) % 5 == 0) {
    o.fail("3 + 5y = ±1 is solvable");
  }
  std::mt19937_64 rng(1004);
  const Ring z = Ring::integers();
  for (int t = 0; t < 500;) {
    const mpz_class a = oracle::rand_int(rng, -500, 500), b = oracle::rand_int(rng, -500, 500);
    if (gcd(a, b) != 1) continue;
    ++t;
    const Element v = zint(a) + zint(b) * select_stable(zint(a), zint(b));
    const mpz_class m = abs(v.integer());
    if (m == 0 || m > 10000) {
      o.fail("select_stable returned " + v.integer().get_str());
      continue;
    }
    if (!oracle::sr1_mod_divisors(m.get_si())) o.fail("Z/" + m.get_str() + " lacks stable range 1");
  }
  for (int t = 0; t < 1000;) {
    const mpz_class a = oracle::rand_int(rng, -200, 200), b = oracle::rand_int(rng, -200, 200),
                    c = oracle::rand_int(rng, -200, 200);
    if (c == 0 || gcd(gcd(a, b), c) != 1) continue;
    ++t;
    const Element y = lift_unit(zint(a), zint(b), zint(c));
    if (gcd(a + b * y.integer(), c) != 1) o.fail("lift_unit postcondition");
  }
  if (o.ok) o.detail = "Z/m for m <= 30, witness (3, 5), 500 stable selections, 1000 unit lifts";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(1005);
  for (int t = 0; t < 200;) {
    const mpz_class c = oracle::rand_int(rng, -500, 500), a = oracle::rand_int(rng, -500, 500),
                    b = oracle::rand_int(rng, -500, 500);
    if (c == 0 || gcd(a, b) != 1) continue;
    ++t;
    const auto [r, s] = coprime_factorization(zint(c), zint(a), zint(b));
    const mpz_class ri = r.integer(), si = s.integer();
    if (ri * si != c) o.fail("c != r·s");
    if (gcd(ri, si) != 1 || gcd(ri, a) != 1 || gcd(si, b) != 1) o.fail("comaximality");
    const mpz_class e = clean_idempotent(zint(c), zint(a), zint(b)).integer();
    if (!divides_int(c, e * e - e)) o.fail("e^2 != e mod c");
    if (!divides_int(gcd(a, c), e)) o.fail("e not in (a, c)");
    if (!divides_int(gcd(b, c), 1 - e)) o.fail("1 - e not in (b, c)");
  }
  if (o.ok) o.detail = "200 coprime factorizations and clean idempotents verified";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(1006);
  for (int t = 0; t < 500;) {
    const mpz_class a = oracle::rand_int(rng, -100, 100), b = oracle::rand_int(rng, -100, 100),
                    c = oracle::rand_int(rng, -100, 100);
    if (gcd(gcd(a, b), c) != 1) continue;
    ++t;
    const auto [y, zz] = sr2_witness(zint(a), zint(b), zint(c));
    const Element u = zint(a) + zint(c) * y, v = zint(b) + zint(c) * zz;
    if (!is_unit(bezout(u, v).d)) o.fail("bezout certificate of the witness is not a unit");
    if (gcd(u.integer(), v.integer()) != 1) o.fail("witness not comaximal");
  }
  if (o.ok) o.detail = "500 stable-range-2 witnesses verified";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::string> small = {"zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:7", "zmod:8",
                                    "text(zmod:2,self)"};
  int products = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const Ring a = parse_ring(small[i]), b = parse_ring(small[j]);
      const Ring p = Ring::product({a, b});
      ++products;
      const bool lhs = check_property(p, Property::locally_stable).holds;
      const bool rhs = check_property(a, Property::locally_stable).holds &&
                       check_property(b, Property::locally_stable).holds;
      if (lhs != rhs) o.fail("product disagreement for " + p.expression());
      oracle::FiniteRing brute(p);
      if (brute.locally_stable() != lhs) o.fail("brute force disagrees on " + p.expression());
    }
  }
  for (long n = 2; n <= 12; ++n) {
    const Ring base = Ring::modular(n);
    const Ring ext = Ring::trivial_extension(base, ModuleKind::self);
    const bool e = check_property(ext, Property::locally_stable).holds;
    if (e != check_property(base, Property::locally_stable).holds) o.fail("trivial extension disagreement n=" + std::to_string(n));
    oracle::FiniteRing brute(ext);
    if (brute.locally_stable() != e) o.fail("brute force disagrees on " + ext.expression());
  }
  if (o.ok) o.detail = std::to_string(products) + " products and 11 trivial extensions agree, brute force confirms";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(1008);
  const Ring zq = Ring::trivial_extension(Ring::integers(), ModuleKind::rationals);
  for (int t = 0; t < 50; ++t) {
    Matrix A(zq, 2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        mpq_class q(oracle::rand_int(rng, -20, 20), oracle::rand_int(rng, 1, 20));
        q.canonicalize();
        mpz_class n = oracle::rand_int(rng, 0, 2) == 0 ? mpz_class(0) : oracle::rand_int(rng, -20, 20);
        A(i, j) = Element(zq, IntRationalPair{n, q});
      }
    }
    try {
      const auto r = diagonal_reduce(A);
      const auto rep = verify_reduction(A, r);
      if (!rep) o.fail(rep.failure);
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
  }
  if (o.ok) o.detail = "50 random 2x2 matrices over Z∝Q reduced with verified certificates";
  return o;
}

struct Proc {
  int code;
  std::string out;
};

Proc run_edr(const std::string& args) {
  const std::string cmd = edr_binary + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion9() {
  Outcome o;
  if (edr_binary.empty()) {
    o.fail("no --edr binary given");
    return o;
  }
  struct Golden {
    const char* file;
    std::string args;
  };
  const std::vector<Golden> dispatch = {
      {"snf_z.json", R"(snf --ring z --input '{"rows":[[2,4],[6,8]]}')"},
      {"check_zmod30.json", "check --ring zmod:30 --property stable-range-1"},
      {"complete_z.json", "complete --ring z --row 4,6 --d 2"},
  };
  for (const auto& g : dispatch) {
    const Proc first = run_edr(g.args), second = run_edr(g.args);
    if (first.code != 0) o.fail(std::string(g.file) + ": exit " + std::to_string(first.code));
    if (first.out != second.out) o.fail(std::string(g.file) + ": output differs across runs");
    if (!golden_dir.empty() && first.out != read_file(golden_dir + "/" + g.file)) {
      o.fail(std::string(g.file) + ": output differs from golden file");
    }
  }
  const std::vector<std::pair<std::string, int>> codes = {
      {"rings", 0},
      {R"(reduce2x2 --ring z --input '2 0; 4 6')", 1},
      {"complete --ring z --row 4,6 --d 5", 1},
      {R"(snf --ring z --input '1 2; 3')", 2},
      {R"(snf --ring zmod:6 --input '{"ring": "z", "rows": [[1]]}')", 2},
      {"check --ring zmod:6", 2},
  };
  for (const auto& [args, want] : codes) {
    const int got = run_edr(args).code;
    if (got != want) o.fail("'" + args + "' exited " + std::to_string(got) + ", expected " + std::to_string(want));
  }
  if (o.ok) o.detail = "golden JSON reproduced byte for byte, exit codes 0/1/2 as expected";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--edr" && i + 1 < argc) {
      edr_binary = argv[++i];
    } else if (a == "--golden" && i + 1 < argc) {
      golden_dir = argv[++i];
    } else {
      only.push_back(std::stoi(a));
    }
  }
  const std::vector<Criterion> all = {
      {1, "SNF correctness", 10, criterion1},
      {2, "2x2 elementary reduction", 10, criterion2},
      {3, "strong completion", 60, criterion3},
      {4, "stability suite", 30, criterion4},
      {5, "coprime factorization and clean idempotents", 5, criterion5},
      {6, "stable range 2 witnesses", 5, criterion6},
      {7, "product and trivial extension agreement", 30, criterion7},
      {8, "diagonal reduction over Z∝Q", 5, criterion8},
      {9, "CLI conformance", 2, criterion9},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.fail("took " + std::to_string(s) + " s, budget " + std::to_string(c.budget_s) + " s");
    all_ok = all_ok && o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << timing << "]" << std::endl;
  }
  return all_ok ? 0 : 1;
}
