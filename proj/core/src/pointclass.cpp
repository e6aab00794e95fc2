#include "qcw/pointclass.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace qcw {

namespace {

using K = PointclassKind;

Pointclass clamp(Pointclass g, int max_level, bool inherited_saturation) {
  g.saturated = g.saturated || inherited_saturation;
  if (g.is_borel() && g.kind != K::LocallyClosed && g.level > max_level) {
    g.level = max_level;
    g.saturated = true;
  }
  return g;
}

// Candidate upper bounds, ordered so that the first match is the least one.
std::vector<Pointclass> borel_candidates(int top) {
  std::vector<Pointclass> out;
  out.push_back(Pointclass::delta0(1));
  out.push_back(Pointclass::sigma0(1));
  out.push_back(Pointclass::pi0(1));
  out.push_back(Pointclass::locally_closed());
  for (int n = 2; n <= top; ++n) {
    out.push_back(Pointclass::delta0(n));
    out.push_back(Pointclass::sigma0(n));
    out.push_back(Pointclass::pi0(n));
  }
  return out;
}

}  // namespace

Pointclass complement(const Pointclass& g) {
  Pointclass out = g;
  switch (g.kind) {
    case K::Sigma0: out.kind = K::Pi0; break;
    case K::Pi0: out.kind = K::Sigma0; break;
    case K::Sigma11: out.kind = K::Pi11; break;
    case K::Pi11: out.kind = K::Sigma11; break;
    case K::Delta0:
    case K::LocallyClosed: break;
  }
  return out;
}

Pointclass countable_union(const Pointclass& g, int max_level) {
  switch (g.kind) {
    case K::Sigma0:
    case K::Delta0:
      return clamp(Pointclass::sigma0(g.level), max_level, g.saturated);
    case K::Pi0:
      return clamp(Pointclass::sigma0(g.level + 1), max_level, g.saturated);
    case K::LocallyClosed:
      return clamp(Pointclass::sigma0(2), max_level, g.saturated);
    case K::Sigma11:
    case K::Pi11:
      return g;
  }
  return g;
}

Pointclass countable_intersection(const Pointclass& g, int max_level) {
  return complement(countable_union(complement(g), max_level));
}

bool leq(const Pointclass& a, const Pointclass& b) {
  if (a == b) return true;
  if (b.is_projective()) return a.is_borel();
  if (a.is_projective()) return false;

  if (a.kind == K::LocallyClosed) return b.level >= 2 && b.kind != K::LocallyClosed;
  if (b.kind == K::LocallyClosed) return a.level == 1;

  switch (a.kind) {
    case K::Delta0:
      return b.level >= a.level;
    case K::Sigma0:
      return (b.kind == K::Sigma0 && b.level >= a.level) || b.level > a.level;
    case K::Pi0:
      return (b.kind == K::Pi0 && b.level >= a.level) || b.level > a.level;
    default:
      return false;
  }
}

Pointclass binary_meet_join(const Pointclass& a, const Pointclass& b, Connective,
                            int max_level) {
  const bool sat = a.saturated || b.saturated;
  if (a.is_projective() || b.is_projective()) {
    if (a.is_projective() && b.is_projective() && !(a == b))
      throw std::domain_error("no class in the lattice contains both " + to_string(a) +
                              " and " + to_string(b));
    Pointclass p = a.is_projective() ? a : b;
    p.saturated = sat;
    return p;
  }
  const int top = std::max(a.kind == K::LocallyClosed ? 1 : a.level,
                           b.kind == K::LocallyClosed ? 1 : b.level) + 1;
  for (const Pointclass& c : borel_candidates(top)) {
    if (leq(a, c) && leq(b, c)) return clamp(c, max_level, sat);
  }
  throw std::logic_error("binary_meet_join: no upper bound found");
}

std::string to_string(const Pointclass& g) {
  switch (g.kind) {
    case K::Delta0: return "Delta0_" + std::to_string(g.level);
    case K::Sigma0: return "Sigma0_" + std::to_string(g.level);
    case K::Pi0: return "Pi0_" + std::to_string(g.level);
    case K::LocallyClosed: return "LocClosed";
    case K::Sigma11: return "Sigma1_1";
    case K::Pi11: return "Pi1_1";
  }
  return "?";
}

std::optional<Pointclass> parse_pointclass(std::string_view text) {
  if (text == "LocClosed") return Pointclass::locally_closed();
  if (text == "Sigma1_1") return Pointclass::sigma11();
  if (text == "Pi1_1") return Pointclass::pi11();

  auto with_level = [&](std::string_view prefix, K kind) -> std::optional<Pointclass> {
    if (!text.starts_with(prefix)) return std::nullopt;
    std::string_view digits = text.substr(prefix.size());
    if (digits.empty() || digits.front() == '0') return std::nullopt;
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1) return std::nullopt;
    return Pointclass{kind, n};
  };
  if (auto p = with_level("Sigma0_", K::Sigma0)) return p;
  if (auto p = with_level("Pi0_", K::Pi0)) return p;
  if (auto p = with_level("Delta0_", K::Delta0)) return p;
  return std::nullopt;
}

}  // namespace qcw
