#include "finite_table.hpp"

#include <string>

#include "gf_poly.hpp"

namespace edr {

FiniteTable::FiniteTable(int n, int zero, int one, const BinOp& add, const BinOp& mul)
    : n_(n), zero_(zero), one_(one) {
  if (n < 1 || n > kMaxSize) {
    throw Unsupported("finite table of size " + std::to_string(n) + " exceeds the limit " +
                      std::to_string(kMaxSize));
  }
  const auto sq = static_cast<std::size_t>(n) * n;
  add_.resize(sq);
  mul_.resize(sq);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      add_[idx(a, b)] = add_[idx(b, a)] = static_cast<std::uint16_t>(add(a, b));
      mul_[idx(a, b)] = mul_[idx(b, a)] = static_cast<std::uint16_t>(mul(a, b));
    }
  }
  neg_.assign(n, 0);
  unit_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (this->add(a, b) == zero_) neg_[a] = b;
      if (this->mul(a, b) == one_) unit_[a] = 1;
    }
  }
  std::map<std::vector<char>, int> ids;
  ideal_of_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<char> in(n, 0);
    for (int x = 0; x < n; ++x) in[this->mul(a, x)] = 1;
    auto [it, fresh] = ids.emplace(in, static_cast<int>(ideals_.size()));
    if (fresh) ideals_.push_back(std::move(in));
    ideal_of_[a] = it->second;
  }
}

FiniteTable FiniteTable::from_ring(const Ring& ring) {
  auto card = ring.cardinality();
  if (!card) throw Unsupported("exhaustive check on infinite ring " + ring.expression());
  if (*card > kMaxSize) {
    throw Unsupported(ring.expression() + " has " + card->get_str() +
                      " elements, above the exhaustive limit " + std::to_string(kMaxSize));
  }
  const auto elems = enumerate_elements(ring);
  auto index = [](const Element& e) { return static_cast<int>(enumeration_index(e).get_si()); };
  return FiniteTable(
      static_cast<int>(elems.size()), index(ring.zero()), index(ring.one()),
      [&](int a, int b) { return index(elems[a] + elems[b]); },
      [&](int a, int b) { return index(elems[a] * elems[b]); });
}

FiniteTable FiniteTable::polynomial_quotient(std::uint64_t p, const std::vector<std::uint64_t>& m) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 0) throw Unsupported("quotient by the zero polynomial is infinite");
  std::uint64_t n = 1;
  for (int i = 0; i < deg; ++i) {
    n *= p;
    if (n > kMaxSize) {
      throw Unsupported("quotient F_" + std::to_string(p) + "[x]/(m) exceeds the exhaustive limit");
    }
  }
  auto decode = [&](int k) {
    gf::Coeffs c;
    for (int i = 0; i < deg; ++i, k /= static_cast<int>(p)) c.push_back(k % p);
    gf::trim(c);
    return c;
  };
  auto encode = [&](const gf::Coeffs& c) {
    int k = 0;
    for (std::size_t i = c.size(); i-- > 0;) k = k * static_cast<int>(p) + static_cast<int>(c[i]);
    return k;
  };
  auto reduce = [&](const gf::Coeffs& c) { return gf::divmod(c, m, p).second; };
  return FiniteTable(
      static_cast<int>(n), 0, encode(reduce({1})),
      [&](int a, int b) { return encode(gf::add(decode(a), decode(b), p)); },
      [&](int a, int b) { return encode(reduce(gf::mul(decode(a), decode(b), p))); });
}

bool FiniteTable::comaximal(int a, int b) const {
  int i = ideal_id(a), j = ideal_id(b);
  if (i > j) std::swap(i, j);
  auto it = comax_.find({i, j});
  if (it != comax_.end()) return it->second;
  bool ok = false;
  const auto& I = ideals_[i];
  const auto& J = ideals_[j];
  for (int x = 0; x < n_ && !ok; ++x) {
    if (I[x] && J[sub(one_, x)]) ok = true;
  }
  comax_[{i, j}] = ok;
  return ok;
}

FiniteTable FiniteTable::quotient(int a, std::vector<int>* reps) const {
  const auto& I = ideal(ideal_id(a));
  std::vector<int> coset(n_, -1);
  std::vector<int> rep;
  for (int x = 0; x < n_; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int i = 0; i < n_; ++i) {
      if (I[i]) coset[add(x, i)] = id;
    }
  }
  if (reps) *reps = rep;
  return FiniteTable(
      static_cast<int>(rep.size()), coset[zero_], coset[one_],
      [&](int u, int v) { return coset[add(rep[u], rep[v])]; },
      [&](int u, int v) { return coset[mul(rep[u], rep[v])]; });
}

// Whether u + vt can be a unit depends only on u and the ideal vS, so one
// generator per principal ideal suffices.
std::optional<std::pair<int, int>> FiniteTable::stable_range_counterexample() const {
  std::vector<int> gen(ideal_count(), -1);
  for (int v = 0; v < n_; ++v) {
    if (gen[ideal_id(v)] < 0) gen[ideal_id(v)] = v;
  }
  for (int v : gen) {
    const auto& J = ideal(ideal_id(v));
    for (int u = 0; u < n_; ++u) {
      if (!comaximal(u, v)) continue;
      bool found = false;
      for (int t = 0; t < n_ && !found; ++t) {
        if (J[t] && is_unit(add(u, t))) found = true;
      }
      if (!found) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

std::optional<int> FiniteTable::clean_counterexample() const {
  std::vector<int> idem;
  for (int e = 0; e < n_; ++e) {
    if (is_idempotent(e)) idem.push_back(e);
  }
  for (int a = 0; a < n_; ++a) {
    bool ok = false;
    for (int e : idem) {
      if (is_unit(sub(a, e))) {
        ok = true;
        break;
      }
    }
    if (!ok) return a;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> FiniteTable::adequate_counterexample() const {
  // bad(s, c): some non-unit divisor s' of s has s'S + cS = S.
  const int whole = ideal_id(one_);
  std::vector<int> gen(ideal_count(), -1);
  for (int v = 0; v < n_; ++v) {
    if (gen[ideal_id(v)] < 0) gen[ideal_id(v)] = v;
  }
  for (int c = 0; c < n_; ++c) {
    if (c == zero_) continue;
    std::vector<std::pair<int, int>> factors;
    for (int r = 0; r < n_; ++r) {
      for (int s = 0; s < n_; ++s) {
        if (mul(r, s) == c) factors.emplace_back(r, s);
      }
    }
    std::vector<char> good_s(n_, 1);
    for (int s = 0; s < n_; ++s) {
      for (int id = 0; id < ideal_count(); ++id) {
        if (id == whole || !ideal(id)[s]) continue;
        if (comaximal(gen[id], c)) {
          good_s[s] = 0;
          break;
        }
      }
    }
    for (int a = 0; a < n_; ++a) {
      bool ok = false;
      for (auto [r, s] : factors) {
        if (good_s[s] && comaximal(r, a)) {
          ok = true;
          break;
        }
      }
      if (!ok) return std::make_pair(c, a);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> FiniteTable::local_counterexample(
    const std::function<bool(const FiniteTable&)>& pred) const {
  std::vector<int> verdict(ideal_count(), -1);
  auto holds = [&](int w) {
    int id = ideal_id(w);
    if (verdict[id] < 0) verdict[id] = pred(quotient(w)) ? 1 : 0;
    return verdict[id] == 1;
  };
  std::vector<int> gen(ideal_count(), -1);
  for (int v = 0; v < n_; ++v) {
    if (gen[ideal_id(v)] < 0) gen[ideal_id(v)] = v;
  }
  for (int b : gen) {
    const auto& J = ideal(ideal_id(b));
    for (int a = 0; a < n_; ++a) {
      if (!comaximal(a, b)) continue;
      bool found = false;
      for (int t = 0; t < n_ && !found; ++t) {
        if (J[t] && holds(add(a, t))) found = true;
      }
      if (!found) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace edr
