#include "edr/matred.hpp"

#include <algorithm>

#include "edr/registry.hpp"
#include "edr/stability.hpp"

namespace edr {

namespace {

Matrix mat2(const Ring& r, const Element& a, const Element& b, const Element& c, const Element& d) {
  Matrix m(r, 2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Matrix swap2(const Ring& r) { return mat2(r, r.zero(), r.one(), r.one(), r.zero()); }

// Running transformation state: M = P·A·Q with stored inverses.
struct Tracker {
  Matrix M, P, Pinv, Q, Qinv;

  explicit Tracker(const Matrix& A)
      : M(A),
        P(Matrix::identity(A.ring(), A.rows())),
        Pinv(Matrix::identity(A.ring(), A.rows())),
        Q(Matrix::identity(A.ring(), A.cols())),
        Qinv(Matrix::identity(A.ring(), A.cols())) {}

  // Rows (i, j) <- G · rows (i, j); g = [[a, b], [c, d]], gi = G^-1.
  void left(std::size_t i, std::size_t j, const Matrix& g, const Matrix& gi) {
    M.mix_rows(i, j, g(0, 0), g(0, 1), g(1, 0), g(1, 1));
    P.mix_rows(i, j, g(0, 0), g(0, 1), g(1, 0), g(1, 1));
    Pinv.mix_cols(i, j, gi(0, 0), gi(0, 1), gi(1, 0), gi(1, 1));
  }

  // Cols (i, j) <- cols (i, j) · H.
  void right(std::size_t i, std::size_t j, const Matrix& h, const Matrix& hi) {
    M.mix_cols(i, j, h(0, 0), h(0, 1), h(1, 0), h(1, 1));
    Q.mix_cols(i, j, h(0, 0), h(0, 1), h(1, 0), h(1, 1));
    Qinv.mix_rows(i, j, hi(0, 0), hi(0, 1), hi(1, 0), hi(1, 1));
  }

  void swap_rows(std::size_t i, std::size_t j) {
    M.swap_rows(i, j);
    P.swap_rows(i, j);
    Pinv.swap_cols(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    M.swap_cols(i, j);
    Q.swap_cols(i, j);
    Qinv.swap_rows(i, j);
  }

  // Row i <- u·row i for a unit u.
  void scale_row(std::size_t i, const Element& u) {
    const Element ui = inverse(u);
    for (std::size_t k = 0; k < M.cols(); ++k) M(i, k) = u * M(i, k);
    for (std::size_t k = 0; k < P.cols(); ++k) P(i, k) = u * P(i, k);
    for (std::size_t k = 0; k < Pinv.rows(); ++k) Pinv(k, i) = Pinv(k, i) * ui;
  }

  ReductionResult result(bool normalized) const {
    return ReductionResult{P, M, Q, Pinv, Qinv, normalized, {}};
  }
};

constexpr int kSweepLimit = 10000;

// Moves a nonzero entry of the trailing block to (k, k). False if the
// block is zero.
bool place_pivot(Tracker& t, std::size_t k) {
  if (!t.M(k, k).is_zero()) return true;
  for (std::size_t i = k; i < t.M.rows(); ++i) {
    for (std::size_t j = k; j < t.M.cols(); ++j) {
      if (!t.M(i, j).is_zero()) {
        t.swap_rows(k, i);
        t.swap_cols(k, j);
        return true;
      }
    }
  }
  return false;
}

void clear_cross(Tracker& t, std::size_t k) {
  const Ring& r = t.M.ring();
  const Element one = r.one(), zero = r.zero();
  for (int iter = 0;; ++iter) {
    if (iter > kSweepLimit) throw InternalError("diagonal sweep did not settle in " + r.expression());
    bool dirty = false;
    for (std::size_t i = k + 1; i < t.M.rows(); ++i) {
      const Element e = t.M(i, k);
      if (e.is_zero()) continue;
      const Element p = t.M(k, k);
      if (auto q = try_divide(e, p)) {
        t.left(k, i, mat2(r, one, zero, -*q, one), mat2(r, one, zero, *q, one));
        continue;
      }
      const auto c = bezout(p, e);
      // [[x, y], [-e0, p0]] has determinant p0·x + e0·y = 1
      t.left(k, i, mat2(r, c.x, c.y, -c.b0, c.a0), mat2(r, c.a0, -c.y, c.b0, c.x));
    }
    for (std::size_t j = k + 1; j < t.M.cols(); ++j) {
      const Element e = t.M(k, j);
      if (e.is_zero()) continue;
      const Element p = t.M(k, k);
      if (auto q = try_divide(e, p)) {
        t.right(k, j, mat2(r, one, -*q, zero, one), mat2(r, one, *q, zero, one));
        continue;
      }
      auto cr = column_reduce(p, e);
      t.right(k, j, cr.Q, cr.Qinv);
      dirty = true;  // column ops may refill column k
    }
    if (!dirty) break;
    bool clean = true;
    for (std::size_t i = k + 1; i < t.M.rows(); ++i) clean = clean && t.M(i, k).is_zero();
    if (clean) break;
  }
}

// d_i | d_j for all i < j, via content extraction and reduce_2x2 on the
// content-1 cofactor [[a0, 0], [a0, c0]].
void enforce_chain(Tracker& t, std::size_t len) {
  const Ring& r = t.M.ring();
  const Element one = r.one(), zero = r.zero();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const Element a = t.M(i, i), c = t.M(j, j);
      if (divides(a, c)) continue;
      const auto cert = bezout(a, c);
      t.left(i, j, mat2(r, one, zero, one, one), mat2(r, one, zero, -one, one));
      const auto rb = reduce_2x2(mat2(r, cert.a0, zero, cert.a0, cert.b0));
      t.left(i, j, rb.P, rb.Pinv);
      t.right(i, j, rb.Q, rb.Qinv);
      if (!t.M(i, j).is_zero() || !t.M(j, i).is_zero() || t.M(i, i) != cert.d) {
        throw InternalError("divisibility step left a non-diagonal block");
      }
    }
  }
}

void normalize_diagonal(Tracker& t) {
  const std::size_t len = std::min(t.M.rows(), t.M.cols());
  for (std::size_t i = 0; i < len; ++i) {
    const Element d = t.M(i, i);
    if (d.is_zero()) continue;
    const Element canon = canonical_associate(d);
    if (canon == d) continue;
    t.scale_row(i, inverse(associate_unit(d, canon)));
  }
}

ReductionResult sweep(const Matrix& A) {
  Tracker t(A);
  const std::size_t len = std::min(A.rows(), A.cols());
  for (std::size_t k = 0; k < len; ++k) {
    if (!place_pivot(t, k)) break;
    clear_cross(t, k);
  }
  // zeros last
  for (std::size_t i = 0, next = 0; i < len; ++i) {
    if (t.M(i, i).is_zero()) continue;
    if (i != next) {
      t.swap_rows(i, next);
      t.swap_cols(i, next);
    }
    ++next;
  }
  enforce_chain(t, len);
  normalize_diagonal(t);
  if (!t.M.is_diagonal()) throw InternalError("sweep produced a non-diagonal matrix");
  return t.result(true);
}

Matrix map_matrix(const Matrix& m, const Ring& target, const std::function<Element(const Element&)>& f) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

ReductionResult reduce_modular(const Matrix& A) {
  const Ring& r = A.ring();
  const Ring z = Ring::integers();
  const auto lifted = diagonal_reduce(map_matrix(A, z, [&](const Element& e) { return z.from_integer(e.integer()); }));
  auto down = [&](const Matrix& m) {
    return map_matrix(m, r, [&](const Element& e) { return r.from_integer(e.integer()); });
  };
  Tracker t(A);
  t.M = down(lifted.D);
  t.P = down(lifted.P);
  t.Pinv = down(lifted.Pinv);
  t.Q = down(lifted.Q);
  t.Qinv = down(lifted.Qinv);
  normalize_diagonal(t);
  return t.result(true);
}

ReductionResult reduce_product(const Matrix& A) {
  const Ring& r = A.ring();
  const auto& comps = r.components();
  std::vector<ReductionResult> parts;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    parts.push_back(diagonal_reduce(
        map_matrix(A, comps[k], [&](const Element& e) { return e.tuple()[k]; })));
  }
  auto join = [&](auto pick) {
    const Matrix& shape = pick(parts[0]);
    Matrix out(r, shape.rows(), shape.cols());
    for (std::size_t i = 0; i < shape.rows(); ++i) {
      for (std::size_t j = 0; j < shape.cols(); ++j) {
        Element::Tuple t;
        for (const auto& p : parts) t.push_back(pick(p)(i, j));
        out(i, j) = Element(r, std::move(t));
      }
    }
    return out;
  };
  return ReductionResult{join([](const ReductionResult& x) -> const Matrix& { return x.P; }),
                         join([](const ReductionResult& x) -> const Matrix& { return x.D; }),
                         join([](const ReductionResult& x) -> const Matrix& { return x.Q; }),
                         join([](const ReductionResult& x) -> const Matrix& { return x.Pinv; }),
                         join([](const ReductionResult& x) -> const Matrix& { return x.Qinv; }),
                         true,
                         {}};
}

}  // namespace

ColumnReduction column_reduce(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  if (b.is_zero()) return {a, Matrix::identity(r, 2), Matrix::identity(r, 2)};
  const auto c = bezout(a, b);
  if (c.degenerate) return {r.zero(), Matrix::identity(r, 2), Matrix::identity(r, 2)};
  return {c.d, mat2(r, c.x, -c.b0, c.y, c.a0), mat2(r, c.a0, c.b0, -c.y, c.x)};
}

ReductionResult reduce_2x2(const Matrix& A) {
  if (A.rows() != 2 || A.cols() != 2) throw PreconditionError("reduce_2x2 expects a 2x2 matrix");
  if (!A(0, 1).is_zero()) throw PreconditionError("reduce_2x2 expects a lower triangular matrix [[a, 0], [b, c]]");
  const Ring& r = A.ring();
  const Element a = A(0, 0), b = A(1, 0), c = A(1, 1);
  if (!generates_unit_ideal({a, b, c})) {
    throw PreconditionError("reduce_2x2 requires aR + bR + cR = R");
  }
  const Matrix I = Matrix::identity(r, 2);
  if (A.is_identity()) return ReductionResult{I, A, I, I, I, true, {}};
  const Element one = r.one(), zero = r.zero();

  // (i) a·x + b·y + c·z = 1
  const auto ac = bezout(a, c);
  const auto gb = bezout(ac.d, b);
  const Element unit_inv = inverse(gb.d);
  const Element x = ac.x * gb.x * unit_inv;
  const Element z = ac.y * gb.x * unit_inv;
  const Element y = gb.y * unit_inv;
  if (a * x + b * y + c * z != one) throw InternalError("a·x + b·y + c·z != 1");

  // (ii) v = b + (ax + cz)·t stable
  const Element t = select_stable(b, a * x + c * z);
  const Matrix L1 = mat2(r, one, zero, x * t, one);
  const Matrix L1i = mat2(r, one, zero, -(x * t), one);
  const Matrix R1 = mat2(r, one, zero, z * t, one);
  const Matrix R1i = mat2(r, one, zero, -(z * t), one);
  const Element v = b + (a * x + c * z) * t;

  // (iii) Hermite step on (v, c), then swap columns: [[a', b'], [0, c']]
  const auto cr = column_reduce(v, c);
  const Matrix Sw = swap2(r);
  const Matrix T = L1 * A * R1 * cr.Q * Sw;
  const Element a1 = T(0, 0), b1 = T(0, 1), c1 = T(1, 1);
  if (!T(1, 0).is_zero()) throw InternalError("Hermite step did not triangularize");

  // (iv) b' + a'·w is a unit modulo c'
  const Element w = lift_unit(b1, a1, c1);
  const Element beta = b1 + a1 * w;
  const Matrix W = mat2(r, one, w, zero, one);
  const Matrix Wi = mat2(r, one, -w, zero, one);

  // (v) beta·p + c'·q = 1
  const auto bc = bezout(beta, c1);
  if (!is_unit(bc.d)) throw InternalError("b' + a'w is not a unit modulo c'");
  const Element p = bc.x * inverse(bc.d);
  const Element q = bc.y * inverse(bc.d);

  // (vi) diag(1, a'c') = S·M1·T·W·E·S
  const Matrix M1 = mat2(r, c1, -beta, p, q);
  const Matrix M1i = mat2(r, q, beta, -p, c1);
  const Matrix E = mat2(r, one, zero, -(p * a1), one);
  const Matrix Ei = mat2(r, one, zero, p * a1, one);
  const Matrix S = swap2(r);

  Matrix N = I, Ni = I;
  const Element delta = a1 * c1;
  const Element canon = canonical_associate(delta);
  if (canon != delta) {
    const Element u = associate_unit(delta, canon);  // delta = canon·u
    N = mat2(r, one, zero, zero, inverse(u));
    Ni = mat2(r, one, zero, zero, u);
  }

  ReductionResult res{N * S * M1 * L1,          Matrix(r, 2, 2),         R1 * cr.Q * Sw * W * E * S,
                      L1i * M1i * S * Ni,        S * Ei * Wi * Sw * cr.Qinv * R1i,
                      true,                      {}};
  res.D = res.P * A * res.Q;
  if (res.D != mat2(r, one, zero, zero, canon)) throw InternalError("reduce_2x2 did not reach diag(1, a'c')");
  res.factors = {
      {"L1", true, L1, L1i},   {"M1", true, M1, M1i},     {"S", true, S, S},    {"N", true, N, Ni},
      {"R1", false, R1, R1i},  {"Q2", false, cr.Q, cr.Qinv}, {"Sw", false, Sw, Sw},
      {"W", false, W, Wi},     {"E", false, E, Ei},       {"S", false, S, S},
  };
  return res;
}

ReductionResult diagonal_reduce(const Matrix& A) {
  const Ring& r = A.ring();
  switch (r.kind()) {
    case RingKind::product: return reduce_product(A);
    case RingKind::modular: return reduce_modular(A);
    case RingKind::series: throw Unsupported("diagonal reduction over " + r.expression());
    default: break;
  }
  if (!registry_entry(r).bezout_total) {
    throw Unsupported("diagonal reduction needs total Bezout certificates; " + r.expression() +
                      " does not provide them");
  }
  return sweep(A);
}

VerificationReport verify_reduction(const Matrix& A, const ReductionResult& r) {
  auto fail = [](std::string why) { return VerificationReport{false, std::move(why)}; };
  const std::size_t m = A.rows(), n = A.cols();
  if (r.P.rows() != m || r.P.cols() != m || r.Pinv.rows() != m || r.Pinv.cols() != m) {
    return fail("P or Pinv has the wrong shape");
  }
  if (r.Q.rows() != n || r.Q.cols() != n || r.Qinv.rows() != n || r.Qinv.cols() != n) {
    return fail("Q or Qinv has the wrong shape");
  }
  if (r.D.rows() != m || r.D.cols() != n) return fail("D has the wrong shape");
  for (const Matrix* x : {&r.P, &r.D, &r.Q, &r.Pinv, &r.Qinv}) {
    if (x->ring() != A.ring()) return fail("descriptor mismatch: " + x->ring().expression());
  }
  if (r.P * A * r.Q != r.D) return fail("P·A·Q != D");
  if (!(r.P * r.Pinv).is_identity() || !(r.Pinv * r.P).is_identity()) return fail("P·Pinv != I");
  if (!(r.Q * r.Qinv).is_identity() || !(r.Qinv * r.Q).is_identity()) return fail("Q·Qinv != I");
  if (!r.D.is_diagonal()) return fail("D is not diagonal");
  const std::size_t len = std::min(m, n);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (!divides(r.D(i, i), r.D(i + 1, i + 1))) {
      return fail("d_" + std::to_string(i + 1) + " does not divide d_" + std::to_string(i + 2));
    }
  }
  return {};
}

Json reduction_to_json(const ReductionResult& r, bool verified) {
  Json diag = Json::array();
  for (std::size_t i = 0; i < std::min(r.D.rows(), r.D.cols()); ++i) diag.push_back(element_to_json(r.D(i, i)));
  return Json::object({{"ring", Json::string(r.D.ring().expression())},
                       {"diagonal", diag},
                       {"P", matrix_to_json(r.P)},
                       {"D", matrix_to_json(r.D)},
                       {"Q", matrix_to_json(r.Q)},
                       {"Pinv", matrix_to_json(r.Pinv)},
                       {"Qinv", matrix_to_json(r.Qinv)},
                       {"normalized", Json::boolean(r.normalized)},
                       {"verified", Json::boolean(verified)}});
}

}  // namespace edr
