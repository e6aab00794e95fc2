#include "qcw/cantorset.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

#include "qcw/rational.hpp"

namespace qcw {

namespace {

constexpr std::size_t kNone = RawAutomaton::kNone;

std::size_t parse_index(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (tok.empty() || tok[0] == '-') throw std::invalid_argument(tok);
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument("bad " + what + " '" + tok + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

void RawAutomaton::add(std::size_t from, int bit, std::size_t to) {
  if (from >= state_count || to >= state_count)
    throw std::invalid_argument("transition " + std::to_string(from) + " -> " + std::to_string(to) +
                                " mentions a state outside [0," + std::to_string(state_count) + ")");
  if (bit != 0 && bit != 1) throw std::invalid_argument("transition bit must be 0 or 1");
  auto& slot = next[from][static_cast<std::size_t>(bit)];
  if (slot != kNone && slot != to)
    throw std::invalid_argument("state " + std::to_string(from) + " has two transitions on bit " +
                                std::to_string(bit));
  slot = to;
}

RawAutomaton read_automaton(std::istream& in) {
  std::string line;
  std::vector<std::string> head;
  while (head.empty() && std::getline(in, line)) head = tokens_of(line);
  if (head.size() != 2) throw std::invalid_argument("automaton header must be 'states initial'");
  const std::size_t n = parse_index(head[0], "state count");
  const std::size_t init = parse_index(head[1], "initial state");
  if (init >= n) throw std::invalid_argument("initial state outside the state range");
  RawAutomaton raw(n, init);
  while (std::getline(in, line)) {
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t.size() != 3 || (t[1] != "0" && t[1] != "1"))
      throw std::invalid_argument("transition line must be 'state bit target': '" + line + "'");
    raw.add(parse_index(t[0], "state"), t[1] == "1" ? 1 : 0, parse_index(t[2], "state"));
  }
  return raw;
}

RegularClosedSet RegularClosedSet::prune(const RawAutomaton& raw) {
  const std::size_t n = raw.state_count;
  if (raw.initial >= n) throw std::invalid_argument("initial state outside the state range");
  // live: greatest set where every state keeps a transition into the set
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!alive[q]) continue;
      bool ok = false;
      for (auto t : raw.next[q]) ok = ok || (t != kNone && alive[t]);
      if (!ok) {
        alive[q] = false;
        changed = true;
      }
    }
  }
  if (!alive[raw.initial]) throw EmptySetError("no infinite branch survives pruning");

  std::vector<std::size_t> rename(n, kNone);
  std::vector<std::size_t> order{raw.initial};
  rename[raw.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto t : raw.next[order[i]])
      if (t != kNone && alive[t] && rename[t] == kNone) {
        rename[t] = order.size();
        order.push_back(t);
      }
  std::vector<std::array<std::size_t, 2>> next(order.size(), {kNone, kNone});
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t t = raw.next[order[i]][b];
      if (t != kNone && alive[t]) next[i][b] = rename[t];
    }
  return RegularClosedSet(std::move(next));
}

RegularClosedSet RegularClosedSet::full_space() {
  RawAutomaton raw(1, 0);
  raw.add(0, 0, 0);
  raw.add(0, 1, 0);
  return prune(raw);
}

RegularClosedSet RegularClosedSet::eventually_periodic_point(std::string_view u, std::string_view v) {
  if (v.empty()) throw std::invalid_argument("period must be nonempty");
  const std::size_t n = u.size() + v.size();
  RawAutomaton raw(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const char c = i < u.size() ? u[i] : v[i - u.size()];
    if (c != '0' && c != '1') throw std::invalid_argument("point labels must be bits");
    raw.add(i, c - '0', i + 1 < n ? i + 1 : u.size());
  }
  return prune(raw);
}

std::optional<std::size_t> RegularClosedSet::next(std::size_t q, int bit) const {
  const std::size_t t = next_.at(q).at(static_cast<std::size_t>(bit));
  if (t == kNone) return std::nullopt;
  return t;
}

std::size_t RegularClosedSet::out_degree(std::size_t q) const {
  return (next_.at(q)[0] != kNone ? 1 : 0) + (next_.at(q)[1] != kNone ? 1 : 0);
}

std::optional<std::size_t> RegularClosedSet::run(std::string_view bits) const {
  std::size_t q = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("prefix must be over {0,1}");
    const auto t = next(q, c - '0');
    if (!t) return std::nullopt;
    q = *t;
  }
  return q;
}

RawAutomaton RegularClosedSet::to_raw() const {
  RawAutomaton raw(next_.size(), 0);
  raw.next = next_;
  return raw;
}

std::string to_string(const RegularClosedSet& f) {
  std::ostringstream os;
  os << f.state_count() << " 0\n";
  for (std::size_t q = 0; q < f.state_count(); ++q)
    for (int b = 0; b < 2; ++b)
      if (auto t = f.next(q, b)) os << q << ' ' << b << ' ' << *t << '\n';
  return os.str();
}

std::vector<bool> single_branch_states(const RegularClosedSet& f) {
  // Every state is live, so q carries one branch iff every state reachable
  // from q has out-degree 1. Greatest fixpoint: start from out-degree-1
  // states and drop those with a successor outside the set.
  const std::size_t n = f.state_count();
  std::vector<bool> single(n);
  for (std::size_t q = 0; q < n; ++q) single[q] = f.out_degree(q) == 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!single[q]) continue;
      for (int b = 0; b < 2; ++b)
        if (auto t = f.next(q, b); t && !single[*t]) {
          single[q] = false;
          changed = true;
        }
    }
  }
  return single;
}

std::optional<RegularClosedSet> cb_derivative(const RegularClosedSet& f) {
  const auto single = single_branch_states(f);
  if (single[0]) return std::nullopt;
  RawAutomaton raw = f.to_raw();
  for (std::size_t q = 0; q < raw.state_count; ++q)
    for (auto& t : raw.next[q])
      if (t != kNone && single[t]) t = kNone;
  try {
    return RegularClosedSet::prune(raw);
  } catch (const EmptySetError&) {
    return std::nullopt;
  }
}

CBAnalysis cb_rank_and_kernel(const RegularClosedSet& f) {
  CBAnalysis out;
  out.kernel = f;
  while (out.kernel) {
    auto d = cb_derivative(*out.kernel);
    if (d && *d == *out.kernel) break;
    ++out.rank;
    out.kernel = std::move(d);
  }
  return out;
}

bool is_countable(const RegularClosedSet& f) { return !cb_rank_and_kernel(f).kernel.has_value(); }
bool is_superatomic(const RegularClosedSet& f) { return is_countable(f); }
bool dual_separable(const RegularClosedSet& f) { return is_countable(f); }

bool is_subset(const RegularClosedSet& f, const RegularClosedSet& g) {
  // closed sets: F subset of G iff every prefix of F is a prefix of G
  std::set<std::pair<std::size_t, std::size_t>> seen{{0, 0}};
  std::deque<std::pair<std::size_t, std::size_t>> todo{{0, 0}};
  while (!todo.empty()) {
    auto [p, q] = todo.front();
    todo.pop_front();
    for (int b = 0; b < 2; ++b) {
      auto tp = f.next(p, b);
      if (!tp) continue;
      auto tq = g.next(q, b);
      if (!tq) return false;
      if (seen.insert({*tp, *tq}).second) todo.push_back({*tp, *tq});
    }
  }
  return true;
}

StepFunction StepFunction::indicator(std::string_view prefix) {
  StepFunction s;
  s.depth = prefix.size();
  s.values.assign(std::size_t{1} << s.depth, mpq_class(0));
  std::size_t idx = 0;
  for (char c : prefix) {
    if (c != '0' && c != '1') throw std::invalid_argument("cylinder prefix must be over {0,1}");
    idx = idx * 2 + static_cast<std::size_t>(c - '0');
  }
  s.values[idx] = 1;
  return s;
}

const mpq_class& StepFunction::at(std::string_view bits) const {
  if (bits.size() != depth) throw std::invalid_argument("step function lookup at the wrong depth");
  std::size_t idx = 0;
  for (char c : bits) idx = idx * 2 + static_cast<std::size_t>(c == '1');
  return values.at(idx);
}

StepFunction read_step_function(std::istream& in) {
  std::string line;
  std::vector<std::string> head;
  while (head.empty() && std::getline(in, line)) head = tokens_of(line);
  if (head.size() != 1) throw std::invalid_argument("step function header must be 'k'");
  StepFunction s;
  s.depth = parse_index(head[0], "depth");
  if (s.depth > 24) throw std::invalid_argument("step function depth above 24 is not supported");
  const std::size_t total = std::size_t{1} << s.depth;
  s.values.assign(total, mpq_class(0));
  std::vector<bool> given(total, false);
  while (std::getline(in, line)) {
    auto t = tokens_of(line);
    if (t.empty()) continue;
    std::string bits;
    std::string value;
    if (t.size() == 2) {
      bits = t[0];
      value = t[1];
    } else if (t.size() == 1 && s.depth == 0) {
      value = t[0];
    } else {
      throw std::invalid_argument("step function line must be 'bits value': '" + line + "'");
    }
    if (bits.size() != s.depth || bits.find_first_not_of("01") != std::string::npos)
      throw std::invalid_argument("'" + bits + "' is not a bit string of length " + std::to_string(s.depth));
    std::size_t idx = 0;
    for (char c : bits) idx = idx * 2 + static_cast<std::size_t>(c == '1');
    if (given[idx]) throw std::invalid_argument("value for '" + bits + "' given twice");
    given[idx] = true;
    s.values[idx] = parse_rational(value);
  }
  if (std::find(given.begin(), given.end(), false) != given.end())
    throw std::invalid_argument("step function is not total on all strings of length " + std::to_string(s.depth));
  return s;
}

mpq_class wijsman_dist(const StepFunction& f, const RegularClosedSet& F) {
  // states reachable at each depth, per prefix index
  std::vector<std::pair<std::size_t, std::size_t>> frontier{{0, 0}};  // (prefix index, state)
  for (std::size_t d = 0; d < f.depth; ++d) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    for (auto [idx, q] : frontier)
      for (int b = 0; b < 2; ++b)
        if (auto t = F.next(q, b)) next.push_back({idx * 2 + static_cast<std::size_t>(b), *t});
    frontier = std::move(next);
  }
  mpq_class best = 0;
  for (auto [idx, q] : frontier) best = std::max(best, mpq_class(abs(f.values.at(idx))));
  return best;
}

}  // namespace qcw
