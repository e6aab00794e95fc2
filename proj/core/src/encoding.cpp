#include "qcw/encoding.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace qcw {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::size_t parse_element(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw CongruenceError("not an element index: '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw CongruenceError("element index out of range: '" + tok + "'");
  }
}

}  // namespace

FiniteCongruence::FiniteCongruence(std::size_t domain_size,
                                   const std::vector<std::vector<std::size_t>>& classes,
                                   std::vector<OpTable> ops)
    : class_of_(domain_size, kUnset), ops_(std::move(ops)) {
  // order classes by least element
  std::vector<std::vector<std::size_t>> sorted;
  for (const auto& c : classes) {
    if (c.empty()) throw CongruenceError("empty class in partition");
    sorted.push_back(c);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    for (auto a : sorted[k]) {
      if (a >= domain_size)
        throw CongruenceError("element " + std::to_string(a) + " outside the domain [0," +
                              std::to_string(domain_size) + ")");
      if (class_of_[a] != kUnset) throw CongruenceError("element " + std::to_string(a) + " listed twice");
      class_of_[a] = k;
    }
    reps_.push_back(*std::min_element(sorted[k].begin(), sorted[k].end()));
  }
  for (std::size_t a = 0; a < domain_size; ++a)
    if (class_of_[a] == kUnset) throw CongruenceError("element " + std::to_string(a) + " is in no class");

  for (const auto& op : ops_) {
    std::map<std::vector<std::size_t>, std::pair<std::vector<std::size_t>, std::size_t>> by_class;
    for (const auto& [args, result] : op.entries) {
      if (args.size() != op.arity)
        throw CongruenceError("operation " + op.name + " has arity " + std::to_string(op.arity) +
                              " but an entry with " + std::to_string(args.size()) + " arguments");
      std::vector<std::size_t> key;
      for (auto a : args) {
        if (a >= domain_size) throw CongruenceError("operation " + op.name + " argument outside the domain");
        key.push_back(class_of_[a]);
      }
      if (result >= domain_size) throw CongruenceError("operation " + op.name + " result outside the domain");
      auto [it, fresh] = by_class.try_emplace(key, args, result);
      if (!fresh && class_of_[it->second.second] != class_of_[result])
        throw CongruenceError("not a congruence: " + op.name + tuple_string(it->second.first) + " = " +
                              std::to_string(it->second.second) + " but " + op.name + tuple_string(args) +
                              " = " + std::to_string(result));
    }
  }
}

FiniteCongruence FiniteCongruence::identity(std::size_t domain_size, std::vector<OpTable> ops) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < domain_size; ++a) classes.push_back({a});
  return FiniteCongruence(domain_size, classes, std::move(ops));
}

FiniteCongruence read_congruence(std::istream& in) {
  std::vector<std::vector<std::size_t>> classes;
  std::map<std::string, OpTable> ops;
  std::vector<std::string> op_order;
  std::size_t domain = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::string arrow = "->";
    auto pos = line.find(arrow);
    if (pos == std::string::npos) {
      arrow = "→";
      pos = line.find(arrow);
    }
    if (pos == std::string::npos) {
      std::istringstream is(line);
      std::vector<std::size_t> cls;
      for (std::string tok; is >> tok;) cls.push_back(parse_element(tok));
      if (cls.empty()) continue;
      for (auto a : cls) domain = std::max(domain, a + 1);
      classes.push_back(std::move(cls));
      continue;
    }
    std::istringstream lhs(line.substr(0, pos));
    std::istringstream rhs(line.substr(pos + arrow.size()));
    std::string name;
    if (!(lhs >> name) || name.find_first_not_of("0123456789") == std::string::npos)
      throw CongruenceError("line " + std::to_string(lineno) + ": operation line needs a name");
    std::vector<std::size_t> args;
    for (std::string tok; lhs >> tok;) args.push_back(parse_element(tok));
    std::string res;
    std::string extra;
    if (!(rhs >> res) || (rhs >> extra))
      throw CongruenceError("line " + std::to_string(lineno) + ": expected exactly one result after the arrow");
    auto [it, fresh] = ops.try_emplace(name);
    if (fresh) {
      it->second.name = name;
      it->second.arity = args.size();
      op_order.push_back(name);
    } else if (it->second.arity != args.size()) {
      throw CongruenceError("line " + std::to_string(lineno) + ": operation " + name + " used with arity " +
                            std::to_string(args.size()) + " and " + std::to_string(it->second.arity));
    }
    const std::size_t r = parse_element(res);
    auto [e, added] = it->second.entries.try_emplace(args, r);
    if (!added && e->second != r)
      throw CongruenceError("line " + std::to_string(lineno) + ": conflicting entries for " + name +
                            tuple_string(args));
  }
  if (classes.empty()) throw CongruenceError("no class lines");
  std::vector<OpTable> tables;
  for (const auto& n : op_order) tables.push_back(ops.at(n));
  return FiniteCongruence(domain, classes, std::move(tables));
}

std::vector<std::size_t> min_representatives(const FiniteCongruence& c) { return c.min_representatives(); }

RhoQ rho_q(const FiniteCongruence& c) {
  RhoQ out;
  out.rho = c.min_representatives();
  for (std::size_t a = 0; a < c.domain_size(); ++a) out.q.push_back(c.q(a));
  return out;
}

std::vector<OpTable> quotient_tables(const FiniteCongruence& c) {
  std::vector<OpTable> out;
  std::vector<MissingEntry> missing;
  const std::size_t k = c.class_count();
  for (const auto& op : c.ops()) {
    OpTable t{op.name, op.arity, {}};
    std::vector<std::size_t> idx(op.arity, 0);
    bool done = k == 0 && op.arity > 0;
    while (!done) {
      std::vector<std::size_t> args;
      for (auto i : idx) args.push_back(c.rho(i));
      if (auto it = op.entries.find(args); it != op.entries.end())
        t.entries[idx] = c.q(it->second);
      else
        missing.push_back({op.name, args});
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] + 1 == k) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    out.push_back(std::move(t));
  }
  if (!missing.empty()) {
    std::string msg = "missing table entries at representative tuples:";
    for (const auto& m : missing) msg += " " + m.op + tuple_string(m.args);
    throw PartialDataError(msg, std::move(missing));
  }
  return out;
}

}  // namespace qcw
