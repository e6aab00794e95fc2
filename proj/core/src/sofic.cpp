#include "qcw/sofic.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>

#include "qcw/int_matrix.hpp"

namespace qcw {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation identity_permutation(std::size_t d) {
  Permutation p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionError("permutations of different degree");
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

namespace {

std::size_t mismatches(const Permutation& p, const Permutation& q) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] != q[i];
  return n;
}

}  // namespace

mpq_class hamming(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionError("permutations of different degree");
  if (p.empty()) throw DimensionError("hamming distance on degree 0");
  mpq_class h(static_cast<unsigned long>(mismatches(p, q)), static_cast<unsigned long>(p.size()));
  h.canonicalize();
  return h;
}

PartialTable::PartialTable() {
  add_symbol("1");
  inverse_[0] = 0;
  products_.insert({0, 0, 0});
}

std::size_t PartialTable::add_symbol(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const std::size_t i = symbols_.size();
  symbols_.push_back(name);
  index_[name] = i;
  if (i != 0) {
    products_.insert({0, i, i});
    products_.insert({i, 0, i});
  }
  return i;
}

std::optional<std::size_t> PartialTable::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

void PartialTable::check(std::size_t i) const {
  if (i >= symbols_.size()) throw TableError("unknown symbol index " + std::to_string(i));
}

std::optional<std::size_t> PartialTable::inverse(std::size_t a) const {
  if (auto it = inverse_.find(a); it != inverse_.end()) return it->second;
  return std::nullopt;
}

void PartialTable::add_inverse(std::size_t a, std::size_t b) {
  check(a);
  check(b);
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    if (auto it = inverse_.find(x); it != inverse_.end() && it->second != y)
      throw TableError("symbol " + symbols_[x] + " already has inverse " + symbols_[it->second]);
  }
  inverse_[a] = b;
  inverse_[b] = a;
  add_product(a, b, 0);
  add_product(b, a, 0);
}

void PartialTable::add_product(std::size_t u, std::size_t v, std::size_t w) {
  check(u);
  check(v);
  check(w);
  auto identifies = [&](std::size_t a, std::size_t b) {
    return distinctions_.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  if ((u == 0 && identifies(v, w)) || (v == 0 && identifies(u, w)))
    throw TableError("product contradicts a confirmed distinction");
  products_.insert({u, v, w});
}

void PartialTable::add_distinction(std::size_t u, std::size_t v) {
  check(u);
  check(v);
  if (u == v) throw TableError("symbol " + symbols_[u] + " cannot be distinct from itself");
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}})
    if (products_.count({0, a, b}) || products_.count({a, 0, b}))
      throw TableError("distinction " + symbols_[u] + " != " + symbols_[v] + " contradicts an identity law");
  distinctions_.insert({std::min(u, v), std::max(u, v)});
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

PartialTable read_partial_table(std::istream& in) {
  PartialTable t;
  std::string line;
  std::size_t lineno = 0;
  auto sym = [&](const std::string& name) {
    auto i = t.find(name);
    if (!i) throw TableError("line " + std::to_string(lineno) + ": undeclared symbol '" + name + "'");
    return *i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    const std::size_t want = kw == "sym" ? 2 : kw == "inv" || kw == "neq" ? 3 : kw == "mul" ? 4 : 0;
    if (want == 0) throw TableError("line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
    if (tok.size() != want)
      throw TableError("line " + std::to_string(lineno) + ": '" + kw + "' takes " + std::to_string(want - 1) +
                       " arguments");
    if (kw == "sym")
      t.add_symbol(tok[1]);
    else if (kw == "inv")
      t.add_inverse(sym(tok[1]), sym(tok[2]));
    else if (kw == "neq")
      t.add_distinction(sym(tok[1]), sym(tok[2]));
    else
      t.add_product(sym(tok[1]), sym(tok[2]), sym(tok[3]));
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.inverse(i)) throw TableError("symbol '" + t.name(i) + "' has no inverse");
  return t;
}

PartialTable cyclic_group_table(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  PartialTable t;
  for (std::size_t i = 1; i < n; ++i) t.add_symbol("g" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) t.add_inverse(i, (n - i) % n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.add_product(i, j, (i + j) % n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t.add_distinction(i, j);
  return t;
}

SoficMap read_sofic_map(std::istream& in) {
  SoficMap s;
  std::string line;
  std::vector<std::string> head;
  while (head.empty() && std::getline(in, line)) head = tokens_of(line);
  if (head.size() != 1) throw std::invalid_argument("sofic map header must be the degree 'd'");
  try {
    std::size_t pos = 0;
    s.degree = std::stoul(head[0], &pos);
    if (pos != head[0].size() || head[0][0] == '-') throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad degree '" + head[0] + "'");
  }
  if (s.degree == 0) throw std::invalid_argument("degree must be >= 1");
  while (std::getline(in, line)) {
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != s.degree + 1)
      throw std::invalid_argument("permutation for '" + tok[0] + "' needs " + std::to_string(s.degree) + " entries");
    Permutation p;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i].find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad permutation entry '" + tok[i] + "'");
      p.push_back(std::stoul(tok[i]));
    }
    if (!is_permutation(p)) throw std::invalid_argument("'" + tok[0] + "' is not assigned a permutation");
    if (!s.sigma.emplace(tok[0], std::move(p)).second)
      throw std::invalid_argument("symbol '" + tok[0] + "' assigned twice");
  }
  return s;
}

std::string to_string(const SoficMap& s) {
  std::ostringstream os;
  os << s.degree << '\n';
  for (const auto& [name, p] : s.sigma) {
    os << name;
    for (auto x : p) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string to_string(SoficClause c) {
  switch (c) {
    case SoficClause::Identity:
      return "identity";
    case SoficClause::Product:
      return "product";
    case SoficClause::Distinction:
      return "distinction";
  }
  return "?";
}

namespace {

// Integer forms of the clause inequalities for mismatch count m at degree d:
// m/d < eps and m/d > 1 - eps.
bool product_ok(std::size_t m, std::size_t d, const mpq_class& eps) {
  return mpz_class(static_cast<unsigned long>(m)) * eps.get_den() <
         eps.get_num() * static_cast<unsigned long>(d);
}

bool distinction_ok(std::size_t m, std::size_t d, const mpq_class& eps) {
  return mpz_class(static_cast<unsigned long>(m)) * eps.get_den() >
         (eps.get_den() - eps.get_num()) * static_cast<unsigned long>(d);
}

}  // namespace

VerifyResult verify(const PartialTable& t, const SoficMap& s, const mpq_class& eps) {
  std::vector<const Permutation*> sigma(t.size(), nullptr);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto it = s.sigma.find(t.name(i));
    if (it == s.sigma.end()) throw CoverageError("sofic map does not assign symbol '" + t.name(i) + "'");
    if (it->second.size() != s.degree || !is_permutation(it->second))
      throw CoverageError("symbol '" + t.name(i) + "' is not assigned a permutation of degree " +
                          std::to_string(s.degree));
    sigma[i] = &it->second;
  }
  const std::size_t d = s.degree;
  VerifyResult r;
  const Permutation id = identity_permutation(d);
  if (*sigma[0] != id) {
    r.ok = false;
    r.violation = SoficViolation{SoficClause::Identity, {t.name(0)}, hamming(*sigma[0], id)};
    return r;
  }
  for (const auto& [u, v, w] : t.products()) {
    const std::size_t m = mismatches(compose(*sigma[u], *sigma[v]), *sigma[w]);
    if (!product_ok(m, d, eps)) {
      r.ok = false;
      r.violation = SoficViolation{SoficClause::Product, {t.name(u), t.name(v), t.name(w)},
                                   mpq_class(static_cast<unsigned long>(m), static_cast<unsigned long>(d))};
      r.violation->distance.canonicalize();
      return r;
    }
  }
  for (const auto& [u, v] : t.distinctions()) {
    const std::size_t m = mismatches(*sigma[u], *sigma[v]);
    if (!distinction_ok(m, d, eps)) {
      r.ok = false;
      r.violation = SoficViolation{SoficClause::Distinction, {t.name(u), t.name(v)},
                                   mpq_class(static_cast<unsigned long>(m), static_cast<unsigned long>(d))};
      r.violation->distance.canonicalize();
      return r;
    }
  }
  return r;
}

namespace {

struct Clauses {
  // clauses indexed by the largest symbol they mention
  std::vector<std::vector<std::array<std::size_t, 3>>> products;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> distinctions;
};

Clauses bucket(const PartialTable& t) {
  Clauses c;
  c.products.resize(t.size());
  c.distinctions.resize(t.size());
  for (const auto& p : t.products()) c.products[*std::max_element(p.begin(), p.end())].push_back(p);
  for (const auto& q : t.distinctions()) c.distinctions[std::max(q.first, q.second)].push_back(q);
  return c;
}

}  // namespace

std::optional<SoficMap> search(const PartialTable& t, const mpq_class& eps, std::size_t d_max) {
  if (d_max == 0) throw std::invalid_argument("d_max must be >= 1");
  const Clauses clauses = bucket(t);
  const std::size_t n = t.size();
  for (std::size_t d = 1; d <= d_max; ++d) {
    std::vector<Permutation> sigma(n, identity_permutation(d));
    auto consistent = [&](std::size_t level) {
      for (const auto& [u, v, w] : clauses.products[level])
        if (!product_ok(mismatches(compose(sigma[u], sigma[v]), sigma[w]), d, eps)) return false;
      for (const auto& [u, v] : clauses.distinctions[level])
        if (!distinction_ok(mismatches(sigma[u], sigma[v]), d, eps)) return false;
      return true;
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t level) -> bool {
      if (level == n) return true;
      Permutation p = identity_permutation(d);
      do {
        sigma[level] = p;
        if (consistent(level) && assign(level + 1)) return true;
      } while (std::next_permutation(p.begin(), p.end()));
      return false;
    };
    // the identity is pinned to id
    if (!consistent(0)) continue;
    if (assign(1)) {
      SoficMap s;
      s.degree = d;
      for (std::size_t i = 0; i < n; ++i) s.sigma[t.name(i)] = sigma[i];
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace qcw
