#include <doctest.h>

#include <random>

#include "edr/matred.hpp"
#include "edr/registry.hpp"
#include "edr/stability.hpp"
#include "oracles.hpp"

using namespace edr;

namespace {

Matrix ints(const Ring& r, std::vector<std::vector<long long>> rows) { return Matrix::from_integers(r, rows); }

Matrix random_int_matrix(const Ring& r, std::mt19937_64& rng, std::size_t m, std::size_t n, long lo, long hi) {
  Matrix a(r, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = r.from_integer(oracle::rand_int(rng, lo, hi));
  return a;
}

std::vector<Element> diagonal(const Matrix& d) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

}  // namespace

TEST_CASE("column_reduce") {
  const Ring z = Ring::integers();
  auto cr = column_reduce(z.from_integer(12), z.from_integer(18));
  CHECK(cr.d == z.from_integer(6));
  CHECK(cr.Q == ints(z, {{-1, -3}, {1, 2}}));
  const Matrix row = ints(z, {{12, 18}});
  CHECK(row * cr.Q == ints(z, {{6, 0}}));
  CHECK(determinant(cr.Q).is_one());
  CHECK((cr.Q * cr.Qinv).is_identity());
  cr = column_reduce(z.from_integer(5), z.zero());
  CHECK(cr.d == z.from_integer(5));
  CHECK(cr.Q.is_identity());
  cr = column_reduce(z.zero(), z.zero());
  CHECK(cr.d.is_zero());
  CHECK(cr.Q.is_identity());
  const Ring m12 = parse_ring("zmod:12");
  cr = column_reduce(m12.from_integer(8), m12.from_integer(6));
  CHECK(cr.d == m12.from_integer(2));
  CHECK(ints(m12, {{8, 6}}) * cr.Q == ints(m12, {{2, 0}}));
  CHECK(is_unit(determinant(cr.Q)));
  CHECK((cr.Qinv * cr.Q).is_identity());
}

TEST_CASE("reduce_2x2 examples") {
  const Ring z = Ring::integers();
  auto r = reduce_2x2(Matrix::identity(z, 2));
  CHECK(r.D.is_identity());
  CHECK(r.P.is_identity());
  CHECK(r.Q.is_identity());
  const Matrix A = ints(z, {{2, 0}, {3, 5}});
  r = reduce_2x2(A);
  CHECK(r.D == ints(z, {{1, 0}, {0, 10}}));
  CHECK(verify_reduction(A, r));
  const Ring f5 = parse_ring("gfpoly:5");
  Matrix B(f5, 2, 2);
  B(0, 0) = parse_element(f5, "[0,1]");
  B(1, 0) = parse_element(f5, "[1,1]");
  B(1, 1) = parse_element(f5, "[2,1]");
  r = reduce_2x2(B);
  CHECK(r.D(0, 0).is_one());
  CHECK(r.D(1, 1) == parse_element(f5, "[0,2,1]"));
  CHECK(verify_reduction(B, r));
  CHECK_THROWS_AS(reduce_2x2(ints(z, {{2, 0}, {4, 6}})), PreconditionError);
  CHECK_THROWS_AS(reduce_2x2(ints(z, {{2, 1}, {4, 6}})), PreconditionError);
  CHECK_THROWS_AS(reduce_2x2(ints(z, {{2, 0, 1}, {4, 6, 1}})), PreconditionError);
}

TEST_CASE("reduce_2x2 factors replay to P and Q") {
  std::mt19937_64 rng(21);
  const Ring z = Ring::integers();
  for (int i = 0; i < 200; ++i) {
    const mpz_class a = oracle::rand_int(rng, -40, 40), b = oracle::rand_int(rng, -40, 40),
                    c = oracle::rand_int(rng, -40, 40);
    mpz_class g = gcd(gcd(a, b), c);
    if (g != 1) continue;
    Matrix A(z, 2, 2);
    A(0, 0) = z.from_integer(a);
    A(1, 0) = z.from_integer(b);
    A(1, 1) = z.from_integer(c);
    const auto r = reduce_2x2(A);
    CHECK(verify_reduction(A, r));
    CHECK(r.D(1, 1).integer() == abs(a * c));
    Matrix P = Matrix::identity(z, 2), Q = Matrix::identity(z, 2);
    for (const auto& f : r.factors) {
      CHECK((f.M * f.Minv).is_identity());
      CHECK((f.Minv * f.M).is_identity());
      if (f.left) {
        P = f.M * P;
      } else {
        Q = Q * f.M;
      }
    }
    if (!r.factors.empty()) {
      CHECK(P == r.P);
      CHECK(Q == r.Q);
    }
  }
}

TEST_CASE("reduce_2x2 on other rings") {
  for (const char* spec : {"zmod:12", "product(zmod:4,zmod:3)", "text(zmod:6,self)"}) {
    const Ring r = parse_ring(spec);
    const auto all = enumerate_elements(r);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
      auto pick = [&] { return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]; };
      Matrix A(r, 2, 2);
      A(0, 0) = pick();
      A(1, 0) = pick();
      A(1, 1) = pick();
      if (!generates_unit_ideal({A(0, 0), A(1, 0), A(1, 1)})) continue;
      const auto res = reduce_2x2(A);
      CHECK(verify_reduction(A, res));
      CHECK(res.D(0, 0).is_one());
      CHECK(are_associates(res.D(1, 1), determinant(A)));
    }
  }
  const Ring zq = parse_ring("text(z,q)");
  Matrix A(zq, 2, 2);
  A(0, 0) = parse_element(zq, "[2, \"1/3\"]");
  A(1, 0) = parse_element(zq, "[3, 0]");
  A(1, 1) = parse_element(zq, "[0, \"5/2\"]");
  const auto res = reduce_2x2(A);
  CHECK(verify_reduction(A, res));
  CHECK(are_associates(res.D(1, 1), determinant(A)));
}

TEST_CASE("diagonal_reduce examples") {
  const Ring z = Ring::integers();
  auto A = ints(z, {{2, 4}, {6, 8}});
  auto r = diagonal_reduce(A);
  CHECK(r.D == ints(z, {{2, 0}, {0, 4}}));
  CHECK(verify_reduction(A, r));
  A = ints(z, {{4, 6}});
  r = diagonal_reduce(A);
  CHECK(r.D == ints(z, {{2, 0}}));
  A = Matrix(z, 3, 2);
  r = diagonal_reduce(A);
  CHECK(r.D == A);
  CHECK(r.P.is_identity());
  CHECK(r.Q.is_identity());
  A = ints(z, {{0, 0, 0}, {0, 0, 7}, {0, 3, 0}});
  r = diagonal_reduce(A);
  CHECK(diagonal(r.D) == diagonal(ints(z, {{1, 0, 0}, {0, 21, 0}, {0, 0, 0}})));
  CHECK_THROWS_AS(diagonal_reduce(Matrix::identity(Ring::series(3), 2)), Unsupported);
  CHECK_THROWS_AS(diagonal_reduce(Matrix::identity(parse_ring("text(zmod:4,self)"), 2)), Unsupported);
}

TEST_CASE("diagonal_reduce matches the minor-gcd oracle") {
  std::mt19937_64 rng(99);
  const Ring z = Ring::integers();
  for (int i = 0; i < 120; ++i) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const Matrix A = random_int_matrix(z, rng, m, n, -9, 9);
    const auto r = diagonal_reduce(A);
    REQUIRE(verify_reduction(A, r));
    const auto g = oracle::minor_gcds(oracle::to_int(A));
    mpz_class prod = 1;
    for (std::size_t k = 0; k < g.size(); ++k) {
      prod *= r.D(k, k).integer();
      CHECK(abs(prod) == g[k]);
      CHECK(r.D(k, k).integer() >= 0);
    }
  }
}

TEST_CASE("idempotence on certified diagonal matrices") {
  std::mt19937_64 rng(12);
  for (const char* spec : {"z", "zmod:12", "gfpoly:3"}) {
    const Ring r = parse_ring(spec);
    for (int i = 0; i < 30; ++i) {
      Matrix A(r, 3, 3);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) A(a, b) = r.from_integer(oracle::rand_int(rng, -6, 6));
      if (r.kind() == RingKind::gfpoly) A(0, 1) = parse_element(r, "[1,2,1]");
      const auto first = diagonal_reduce(A);
      const auto second = diagonal_reduce(first.D);
      CHECK(second.D == first.D);
      CHECK(second.P.is_identity());
      CHECK(second.Q.is_identity());
    }
  }
}

TEST_CASE("modular reduction agrees with the integer lift") {
  const Ring z = Ring::integers(), m6 = parse_ring("zmod:6");
  for (int v = 0; v < 6 * 6 * 6 * 6; ++v) {
    const long long a = v % 6, b = v / 6 % 6, c = v / 36 % 6, d = v / 216;
    const Matrix A = ints(m6, {{a, b}, {c, d}});
    const auto r = diagonal_reduce(A);
    REQUIRE(verify_reduction(A, r));
    const auto lifted = diagonal_reduce(ints(z, {{a, b}, {c, d}}));
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(r.D(k, k) == canonical_associate(m6.from_integer(lifted.D(k, k).integer())));
    }
  }
}

TEST_CASE("diagonal_reduce across Bezout rings") {
  std::mt19937_64 rng(31);
  for (const char* spec : {"zmod:12", "zmod:8", "gfpoly:5", "product(zmod:4,z)", "text(zmod:6,self)", "text(z,q)"}) {
    const std::string name = spec;
    CAPTURE(name);
    const Ring r = parse_ring(spec);
    for (int i = 0; i < 40; ++i) {
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      Matrix A(r, m, n);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (r.kind() == RingKind::gfpoly) {
            Json c = Json::array();
            for (int k = 0; k < 3; ++k) c.push_back(Json::number(oracle::rand_int(rng, 0, 4)));
            A(a, b) = element_from_json(r, c);
          } else if (r.kind() == RingKind::trivial_extension && !r.is_finite()) {
            mpq_class q(oracle::rand_int(rng, -5, 5), oracle::rand_int(rng, 1, 4));
            q.canonicalize();
            A(a, b) = Element(r, IntRationalPair{oracle::rand_int(rng, -1, 1) * oracle::rand_int(rng, 0, 6), q});
          } else if (r.kind() == RingKind::product) {
            A(a, b) = Element(r, Element::Tuple{r.components()[0].from_integer(oracle::rand_int(rng, 0, 3)),
                                                r.components()[1].from_integer(oracle::rand_int(rng, -9, 9))});
          } else {
            A(a, b) = element_at(r, oracle::rand_int(rng, 0, r.cardinality()->get_si() - 1));
          }
        }
      }
      const auto res = diagonal_reduce(A);
      const auto report = verify_reduction(A, res);
      CAPTURE(report.failure);
      CHECK(report.ok);
      for (const auto& d : diagonal(res.D)) CHECK(canonical_associate(d) == d);
      if (m == n) CHECK(are_associates(determinant(res.D), determinant(A)));
    }
  }
}

TEST_CASE("verify_reduction rejects tampering") {
  const Ring z = Ring::integers();
  const Matrix A = ints(z, {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto r = diagonal_reduce(A);
  CHECK(verify_reduction(A, r));
  CHECK(r.D == ints(z, {{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  auto bad = r;
  bad.D(1, 1) = z.from_integer(7);
  auto rep = verify_reduction(A, bad);
  CHECK_FALSE(rep);
  CHECK(rep.failure == "P·A·Q != D");
  bad = r;
  bad.Pinv(0, 0) = bad.Pinv(0, 0) + z.one();
  rep = verify_reduction(A, bad);
  CHECK_FALSE(rep);
  CHECK(rep.failure == "P·Pinv != I");
  bad = r;
  bad.Qinv(2, 1) = bad.Qinv(2, 1) + z.one();
  CHECK(verify_reduction(A, bad).failure == "Q·Qinv != I");
  // a valid transformation to a diagonal without the chain
  ReductionResult swapped{Matrix::identity(z, 2), ints(z, {{3, 0}, {0, 2}}), Matrix::identity(z, 2),
                          Matrix::identity(z, 2), Matrix::identity(z, 2), false, {}};
  CHECK(verify_reduction(ints(z, {{3, 0}, {0, 2}}), swapped).failure == "d_1 does not divide d_2");
  swapped.D(0, 1) = z.one();
  CHECK_FALSE(verify_reduction(ints(z, {{3, 1}, {0, 2}}), swapped));
}

TEST_CASE("reduction JSON") {
  const Ring z = Ring::integers();
  const auto r = diagonal_reduce(ints(z, {{2, 4}, {6, 8}}));
  const std::string text = dump_json(reduction_to_json(r, true));
  const Json back = parse_json(text);
  for (const char* key : {"P", "D", "Q", "Pinv", "Qinv", "verified"}) CHECK(back.find(key) != nullptr);
  CHECK(matrix_from_json(z, *back.find("D")) == r.D);
  CHECK(back.find("verified")->as_bool());
}

TEST_CASE("determinant") {
  const Ring z = Ring::integers();
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Matrix A = random_int_matrix(z, rng, n, n, -20, 20);
    CHECK(determinant(A).integer() == oracle::det(oracle::to_int(A)));
  }
}
