#include "edr/completion.hpp"

#include "edr/stability.hpp"

namespace edr {

namespace {

constexpr std::size_t kSelfCheckLimit = 12;

struct RowCombination {
  std::vector<Element> x;  // sum a_i x_i = d
  std::vector<Element> q;  // a_i = d q_i
};

RowCombination decompose(const std::vector<Element>& a, const Element& d) {
  RowCombination rc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto q = try_divide(a[i], d);
    if (!q) {
      throw PreconditionError("d = " + format_element(d) + " does not divide a_" + std::to_string(i + 1) +
                              " = " + format_element(a[i]));
    }
    rc.q.push_back(*q);
  }
  Element g = a[0];
  rc.x.push_back(d.ring().one());
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto cert = bezout(g, a[i]);
    for (auto& xi : rc.x) xi = xi * cert.x;
    rc.x.push_back(cert.y);
    g = cert.d;
  }
  auto v = try_divide(d, g);
  if (!v) throw PreconditionError("the row does not generate dR for d = " + format_element(d));
  for (auto& xi : rc.x) xi = xi * *v;
  return rc;
}

// Generator of w·R + g_k·R + ... via successive certificates.
Element ideal_gcd(Element w, const std::vector<Element>& g, std::size_t from) {
  for (std::size_t k = from; k < g.size(); ++k) w = bezout(w, g[k]).d;
  return w;
}

}  // namespace

CompletionResult complete_row(const std::vector<Element>& a, const Element& d) {
  if (a.empty()) throw PreconditionError("cannot complete an empty row");
  for (const auto& e : a) require_same_ring(e, d);
  const Ring& R = d.ring();
  const std::size_t n = a.size();
  const Element one = R.one(), zero = R.zero();

  if (n == 1) {
    if (a[0] != d) throw PreconditionError("a 1x1 completion needs a_1 = d");
    Matrix m(R, 1, 1);
    m(0, 0) = d;
    return {m, d, {}};
  }

  const RowCombination rc = decompose(a, d);
  const auto& x = rc.x;
  const auto& q = rc.q;
  CompletionResult res{Matrix(R, n, n), d, {{"x", x}, {"q", q}}};
  for (std::size_t j = 0; j < n; ++j) res.matrix(0, j) = a[j];

  if (n == 2) {
    res.matrix(1, 0) = -x[1];
    res.matrix(1, 1) = x[0];
    return res;
  }

  Element c = -one;
  for (std::size_t i = 0; i < n; ++i) c = c + x[i] * q[i];
  if (!(d * c).is_zero()) throw InternalError("d·c != 0 in the completion step");

  // g_i = q_i (i < n), g_n = q_n x_n - c; sum_{i<n} g_i x_i + g_n = 1
  std::vector<Element> g(q);
  g[n - 1] = q[n - 1] * x[n - 1] - c;

  Element h = g[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) h = h + g[i] * x[i];
  const Element lambda = select_stable(g[0], h);
  const Element w = g[0] + h * lambda;

  // G = g_2 + sum_{i>=3} g_i y_i, a unit modulo w
  std::vector<Element> y(n, zero);
  Element G = g[1];
  for (std::size_t i = 2; i < n; ++i) {
    const Element rest = ideal_gcd(w, g, i + 1);
    y[i] = lift_unit(G, g[i], rest);
    G = G + g[i] * y[i];
  }
  if (!unit_mod(G, w)) throw InternalError("combined generator is not a unit modulo w");

  // F = w - G x_2 lambda = g_1 + sum_{i>=3} g_i s_i
  std::vector<Element> s(n, zero);
  for (std::size_t i = 2; i < n; ++i) {
    const Element xi = i + 1 < n ? x[i] : one;
    s[i] = lambda * (xi - x[1] * y[i]);
  }
  Element F = g[0];
  for (std::size_t i = 2; i < n; ++i) F = F + g[i] * s[i];
  if (F != w - G * x[1] * lambda) throw InternalError("F does not match w - G·x_2·λ");

  const auto cert = bezout(F, G);
  if (!is_unit(cert.d)) throw InternalError("F and G are not comaximal");
  const Element u = cert.d;
  const Element ui = inverse(u);

  res.matrix(1, 0) = -(cert.y * ui);
  res.matrix(1, 1) = cert.x * ui;
  for (std::size_t i = 2; i < n; ++i) {
    // column residues of clearing g_i from the first two columns
    const Element scale = i + 1 < n ? one : x[n - 1];
    res.matrix(i, 0) = -(s[i] * scale);
    res.matrix(i, 1) = -(y[i] * scale);
    res.matrix(i, i) = one;
  }

  res.trace.push_back({"c", {c}});
  res.trace.push_back({"lambda", {lambda}});
  res.trace.push_back({"w", {w}});
  res.trace.push_back({"y", std::vector<Element>(y.begin() + 2, y.end())});
  res.trace.push_back({"s_i", std::vector<Element>(s.begin() + 2, s.end())});
  res.trace.push_back({"F", {F}});
  res.trace.push_back({"G", {G}});
  res.trace.push_back({"s", {cert.x}});
  res.trace.push_back({"t", {cert.y}});
  res.trace.push_back({"u", {u}});

  if (n <= kSelfCheckLimit && determinant(res.matrix) != d) {
    throw InternalError("completed matrix has determinant " + format_element(determinant(res.matrix)));
  }
  return res;
}

CompletionResult complete_unimodular(const std::vector<Element>& a) {
  if (a.empty()) throw PreconditionError("cannot complete an empty row");
  if (!generates_unit_ideal(a)) throw PreconditionError("row is not unimodular");
  return complete_row(a, a[0].ring().one());
}

Json completion_to_json(const CompletionResult& r, bool include_trace) {
  Json row = Json::array();
  for (std::size_t j = 0; j < r.matrix.cols(); ++j) row.push_back(element_to_json(r.matrix(0, j)));
  Json out = Json::object({{"ring", Json::string(r.d.ring().expression())},
                           {"row", row},
                           {"d", element_to_json(r.d)},
                           {"matrix", matrix_to_json(r.matrix)}});
  if (include_trace) {
    Json trace = Json::object();
    for (const auto& t : r.trace) {
      Json vals = Json::array();
      for (const auto& v : t.values) vals.push_back(element_to_json(v));
      trace.set(t.name, vals);
    }
    out.set("trace", trace);
  }
  return out;
}

}  // namespace edr
