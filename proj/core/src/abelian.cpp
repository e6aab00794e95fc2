#include "qcw/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qcw {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

// Clears column t below and row t to the right of the pivot using truncated
// quotients. Returns true when every entry became zero.
bool eliminate(SmithForm& f, std::size_t t) {
  IntMatrix& s = f.s;
  const Integer pivot = s(t, t);
  bool clean = true;
  for (std::size_t i = t + 1; i < s.rows(); ++i) {
    if (s(i, t) == 0) continue;
    Integer q = s(i, t) / pivot;
    s.add_row_multiple(i, t, -q);
    f.u.add_row_multiple(i, t, -q);
    clean = clean && s(i, t) == 0;
  }
  for (std::size_t j = t + 1; j < s.cols(); ++j) {
    if (s(t, j) == 0) continue;
    Integer q = s(t, j) / pivot;
    s.add_col_multiple(j, t, -q);
    f.v.add_col_multiple(j, t, -q);
    clean = clean && s(t, j) == 0;
  }
  return clean;
}

std::optional<std::size_t> row_breaking_divisibility(const IntMatrix& s, std::size_t t) {
  for (std::size_t i = t + 1; i < s.rows(); ++i)
    for (std::size_t j = t + 1; j < s.cols(); ++j)
      if (s(i, j) != 0 && !mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) return i;
  return std::nullopt;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    bool active = true;
    while (true) {
      auto p = smallest_nonzero(f.s, t);
      if (!p) {
        active = false;
        break;
      }
      f.s.swap_rows(t, p->row);
      f.u.swap_rows(t, p->row);
      f.s.swap_cols(t, p->col);
      f.v.swap_cols(t, p->col);
      if (!eliminate(f, t)) continue;
      if (auto i = row_breaking_divisibility(f.s, t)) {
        f.s.add_row_multiple(t, *i, 1);
        f.u.add_row_multiple(t, *i, 1);
        continue;
      }
      break;
    }
    if (!active) break;
    if (f.s(t, t) < 0) {
      f.s.negate_row(t);
      f.u.negate_row(t);
    }
  }
  if (!verify_smith_form(a, f)) throw std::logic_error("smith_normal_form: postcondition failed");
  return f;
}

bool verify_smith_form(const IntMatrix& a, const SmithForm& f) {
  if (f.u.rows() != a.rows() || f.u.cols() != a.rows()) return false;
  if (f.v.rows() != a.cols() || f.v.cols() != a.cols()) return false;
  if (!(f.u * a * f.v == f.s)) return false;
  if (abs(f.u.determinant()) != 1 || abs(f.v.determinant()) != 1) return false;
  if (!f.s.is_diagonal()) return false;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < limit; ++i) {
    if (f.s(i, i) < 0) return false;
    if (i + 1 < limit) {
      const Integer& d = f.s(i, i);
      const Integer& e = f.s(i + 1, i + 1);
      if (d == 0) {
        if (e != 0) return false;
      } else if (!mpz_divisible_p(e.get_mpz_t(), d.get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

AbelianPresentation::AbelianPresentation(std::size_t n, std::vector<IntVector> rels)
    : generator_count(n) {
  for (auto& r : rels) add_relation(std::move(r));
}

void AbelianPresentation::add_relation(IntVector r) {
  if (r.size() != generator_count)
    throw DimensionError("relation of length " + std::to_string(r.size()) + " for " +
                         std::to_string(generator_count) + " generators");
  relations.push_back(std::move(r));
}

IntMatrix AbelianPresentation::relation_matrix() const {
  return IntMatrix::from_rows(relations, generator_count);
}

std::optional<Integer> AbelianInvariants::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string to_string(const AbelianInvariants& inv) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " x ";
    first = false;
  };
  if (inv.free_rank == 1) {
    sep();
    os << "Z";
  } else if (inv.free_rank > 1) {
    sep();
    os << "Z^" << inv.free_rank;
  }
  for (const auto& d : inv.torsion) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

using SparseRow = std::map<std::size_t, Integer>;

// Splits off generators that some relation expresses with a unit coefficient:
// if r = u*e_c + (rest) with u = +-1, then Z^n/<R> ~ Z^(n-1)/<R'> where R'
// substitutes e_c = -u*(rest) into the other relations. Returns the
// surviving relations as a dense matrix over the surviving generators.
IntMatrix unit_presolve(const AbelianPresentation& p) {
  std::vector<SparseRow> rows;
  std::set<SparseRow> seen;
  for (const auto& r : p.relations) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) s.emplace(c, r[c]);
    if (!s.empty() && seen.insert(s).second) rows.push_back(std::move(s));
  }
  std::vector<std::set<std::size_t>> rows_with(p.generator_count);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) rows_with[c].insert(i);
  std::vector<bool> alive_row(rows.size(), true);
  std::vector<bool> alive_col(p.generator_count, true);

  while (true) {
    std::size_t best_row = rows.size();
    std::size_t best_col = 0;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive_row[i]) continue;
      for (const auto& [c, v] : rows[i]) {
        if (abs(v) != 1) continue;
        const std::size_t cost = rows[i].size() * rows_with[c].size();
        if (cost < best_cost) {
          best_cost = cost;
          best_row = i;
          best_col = c;
        }
      }
    }
    if (best_row == rows.size()) break;
    const SparseRow pivot = rows[best_row];
    const Integer u = pivot.at(best_col);
    alive_row[best_row] = false;
    for (const auto& [c, v] : pivot) rows_with[c].erase(best_row);
    const std::set<std::size_t> touched = rows_with[best_col];
    for (auto i : touched) {
      // row_i -= (row_i[c] / u) * pivot, exact since u = +-1
      const Integer k = rows[i].at(best_col) * u;
      for (const auto& [c, v] : pivot) {
        Integer& x = rows[i][c];
        x -= k * v;
        if (x == 0) {
          rows[i].erase(c);
          rows_with[c].erase(i);
        } else {
          rows_with[c].insert(i);
        }
      }
      if (rows[i].empty()) alive_row[i] = false;
    }
    alive_col[best_col] = false;
  }

  std::vector<std::size_t> col_index(p.generator_count, 0);
  std::size_t ncols = 0;
  for (std::size_t c = 0; c < p.generator_count; ++c)
    if (alive_col[c]) col_index[c] = ncols++;
  std::set<IntVector> dense_rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!alive_row[i]) continue;
    IntVector v(ncols, Integer(0));
    for (const auto& [c, x] : rows[i]) v[col_index[c]] = x;
    dense_rows.insert(std::move(v));
  }
  return IntMatrix::from_rows(std::vector<IntVector>(dense_rows.begin(), dense_rows.end()), ncols);
}

}  // namespace

AbelianInvariants invariants(const AbelianPresentation& p) {
  AbelianInvariants out;
  const IntMatrix reduced = unit_presolve(p);
  const SmithForm f = smith_normal_form(reduced);
  const std::size_t limit = std::min(f.s.rows(), f.s.cols());
  std::size_t rank = 0;
  for (std::size_t i = 0; i < limit; ++i) {
    const Integer& d = f.s(i, i);
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = reduced.cols() - rank;
  return out;
}

namespace {

// Coordinates of v in the basis where the relation lattice is diagonal.
struct DiagonalView {
  IntVector w;
  std::vector<Integer> diag;  // length generator_count, zero past the rank
};

DiagonalView diagonal_view(const AbelianPresentation& p, const IntVector& v) {
  if (v.size() != p.generator_count)
    throw DimensionError("vector of length " + std::to_string(v.size()) + " for " +
                         std::to_string(p.generator_count) + " generators");
  const SmithForm f = smith_normal_form(p.relation_matrix());
  DiagonalView out;
  out.w = row_times(v, f.v);
  out.diag.assign(p.generator_count, Integer(0));
  const std::size_t limit = std::min(f.s.rows(), f.s.cols());
  for (std::size_t i = 0; i < limit; ++i) out.diag[i] = f.s(i, i);
  return out;
}

}  // namespace

bool member(const AbelianPresentation& p, const IntVector& v) {
  const DiagonalView d = diagonal_view(p, v);
  for (std::size_t i = 0; i < d.w.size(); ++i) {
    if (d.diag[i] == 0) {
      if (d.w[i] != 0) return false;
    } else if (!mpz_divisible_p(d.w[i].get_mpz_t(), d.diag[i].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

std::optional<Integer> element_order(const AbelianPresentation& p, const IntVector& v) {
  const DiagonalView d = diagonal_view(p, v);
  Integer n = 1;
  for (std::size_t i = 0; i < d.w.size(); ++i) {
    if (d.diag[i] == 0) {
      if (d.w[i] != 0) return std::nullopt;
      continue;
    }
    Integer g = gcd(d.diag[i], d.w[i]);
    n = lcm(n, Integer(d.diag[i] / g));
  }
  return n;
}

bool divisible_by(const AbelianPresentation& p, const IntVector& v, const Integer& m) {
  AbelianPresentation q = p;
  for (std::size_t i = 0; i < p.generator_count; ++i) {
    IntVector r(p.generator_count, Integer(0));
    r[i] = m;
    q.add_relation(std::move(r));
  }
  return member(q, v);
}

}  // namespace qcw
