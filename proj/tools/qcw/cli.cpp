#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "qcw/abelian.hpp"
#include "qcw/cantorset.hpp"
#include "qcw/encoding.hpp"
#include "qcw/errors.hpp"
#include "qcw/formula.hpp"
#include "qcw/grothendieck.hpp"
#include "qcw/rational.hpp"
#include "qcw/reductions.hpp"
#include "qcw/sofic.hpp"

namespace qcw::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  CheckFailed(const std::string& what, std::string report) : std::runtime_error(what), report(std::move(report)) {}
  std::string report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json invariants_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const auto& d : inv.torsion) torsion.push_back(d.get_str());
  return {{"free_rank", inv.free_rank}, {"torsion", torsion}, {"text", to_string(inv)}};
}

struct Globals {
  bool as_json = false;
  std::uint64_t seed = 1;
  int max_level = kDefaultMaxLevel;
};

struct Context {
  Globals g;
  std::vector<std::string> warnings;
};

// --- subcommands -----------------------------------------------------------

json cmd_rank(Context& ctx, const std::string& path) {
  const std::string text = read_file(path);
  const Formula f = parse_formula(text);
  RankResult r = rank(push_negations(f), RankOptions{ctx.g.max_level});
  ctx.warnings = r.warnings;
  return {{"pointclass", to_string(r.pointclass)},
          {"saturated", r.pointclass.saturated},
          {"formula", to_string(f)}};
}

json cmd_catalogue(Context& ctx) {
  json rows = json::array();
  std::size_t passed = 0;
  const auto checks = check_catalogue(RankOptions{ctx.g.max_level});
  for (const auto& c : checks) {
    rows.push_back({{"name", c.entry->name},
                    {"expected", to_string(c.entry->expected)},
                    {"computed", to_string(c.computed)},
                    {"exact", c.entry->exact},
                    {"passed", c.passed}});
    if (c.passed) ++passed;
    for (const auto& w : c.warnings) ctx.warnings.push_back(c.entry->name + ": " + w);
  }
  json result = {{"catalogue", rows}, {"passed", passed}, {"total", checks.size()}};
  if (passed != checks.size())
    throw CheckFailed(std::to_string(checks.size() - passed) + " catalogue entries failed",
                      render_text({{"subcommand", "rank"}, {"result", result}}));
  return result;
}

json cmd_group_invariants(const std::string& path) {
  std::istringstream in(read_file(path));
  const IntMatrix m = read_int_matrix(in);
  AbelianPresentation p(m.cols(), {});
  for (std::size_t r = 0; r < m.rows(); ++r) p.add_relation(m.row(r));
  return invariants_json(invariants(p));
}

json cmd_reduce(const std::string& family_name, const std::string& alpha_text, std::size_t stage,
                bool with_invariants) {
  const auto family = parse_family(family_name);
  if (!family) throw InputError("unknown reduction family '" + family_name + "'");
  const UPSequence alpha = UPSequence::parse(alpha_text);
  const TruncatedCode code = truncated_code(*family, alpha, stage);
  const FamilyInfo& info = family_info(*family);
  const auto order = code.quotient_order();
  json result = {{"family", info.name},
                 {"alpha", alpha.to_string()},
                 {"property", info.property},
                 {"pointclass", to_string(info.property_class)},
                 {"classify", classify(*family, alpha)},
                 {"stage", stage},
                 {"quotient_order", order ? json(order->get_str()) : json(nullptr)}};
  if (with_invariants) {
    if (code.is_abelian()) {
      result["invariants"] = invariants_json(invariants(code.presentation()));
    } else if (*family == ReductionFamily::GroupFin) {
      AbelianInvariants inv;
      inv.torsion.assign(code.image().size(), Integer(2));
      result["invariants"] = invariants_json(inv);
    } else {
      throw InputError("--invariants applies to the group families only");
    }
  }
  return result;
}

json cmd_k0(const std::string& dims, std::optional<std::size_t> rank_bound) {
  const FDAlgebra b = FDAlgebra::parse(dims);
  const std::size_t r = rank_bound.value_or(b.blocks());
  json blocks = b.block_dims;
  json result = invariants_json(k0(b, r));
  result["algebra"] = blocks;
  result["rank_bound"] = r;
  return result;
}

ComplexMatrix random_perturbed_projection(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> pick_rank(0, d);
  const std::size_t k = pick_rank(rng);
  // Gram-Schmidt on k random vectors
  std::vector<std::vector<Complex>> basis;
  while (basis.size() < k) {
    std::vector<Complex> v(d);
    for (auto& z : v) z = {gauss(rng), gauss(rng)};
    for (const auto& b : basis) {
      Complex dot = 0;
      for (std::size_t i = 0; i < d; ++i) dot += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < d; ++i) v[i] -= dot * b[i];
    }
    double norm = 0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto& z : v) z /= norm;
    basis.push_back(std::move(v));
  }
  ComplexMatrix x(d, d);
  for (const auto& b : basis)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) x(i, j) += b[i] * std::conj(b[j]);
  ComplexMatrix noise(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Complex z = i == j ? Complex(gauss(rng), 0) : Complex(gauss(rng), gauss(rng));
      noise(i, j) = z;
      noise(j, i) = std::conj(z);
    }
  const double n = operator_norm(noise);
  if (n > 0) x = x + Complex(0.03 / n) * noise;
  return x;
}

json cmd_correct_proj(Context& ctx, const std::string& path, std::optional<std::size_t> random_dim) {
  ComplexMatrix x;
  if (random_dim) {
    if (*random_dim == 0 || *random_dim > 64) throw InputError("--random dimension must be in [1, 64]");
    std::mt19937_64 rng(ctx.g.seed);
    x = random_perturbed_projection(*random_dim, rng);
  } else {
    std::istringstream in(read_file(path));
    x = read_complex_matrix(in);
  }
  const ComplexMatrix p = correct_projection(x);
  double trace = 0;
  for (std::size_t i = 0; i < p.rows(); ++i) trace += p(i, i).real();
  return {{"dimension", x.rows()},
          {"input_defect", idempotence_defect(x)},
          {"output_defect", idempotence_defect(p)},
          {"distance", operator_norm(p - x)},
          {"rank", static_cast<long>(std::lround(trace))},
          {"matrix", to_string(p)}};
}

RegularClosedSet load_set(const std::string& path) {
  std::istringstream in(read_file(path));
  return RegularClosedSet::prune(read_automaton(in));
}

json cmd_tree_rank(const std::string& path) {
  const auto a = cb_rank_and_kernel(load_set(path));
  return {{"cb_rank", a.rank},
          {"kernel_states", a.kernel ? json(a.kernel->state_count()) : json(nullptr)},
          {"countable", !a.kernel.has_value()}};
}

json cmd_tree_countable(const std::string& path) {
  const auto f = load_set(path);
  return {{"countable", is_countable(f)}, {"superatomic", is_superatomic(f)}, {"dual_separable", dual_separable(f)}};
}

json cmd_tree_dist(const std::string& set_path, const std::string& fn_path) {
  const auto f = load_set(set_path);
  std::istringstream in(read_file(fn_path));
  return {{"distance", to_string(wijsman_dist(read_step_function(in), f))}};
}

json cmd_encode(const std::string& path) {
  std::istringstream in(read_file(path));
  const FiniteCongruence c = read_congruence(in);
  const RhoQ rq = rho_q(c);
  json tables = json::array();
  for (const auto& t : quotient_tables(c)) {
    json entries = json::array();
    for (const auto& [args, value] : t.entries) entries.push_back({{"args", args}, {"value", value}});
    tables.push_back({{"name", t.name}, {"arity", t.arity}, {"entries", entries}});
  }
  return {{"classes", c.class_count()}, {"rho", rq.rho}, {"q", rq.q}, {"tables", tables}};
}

json violation_json(const std::optional<SoficViolation>& v) {
  if (!v) return nullptr;
  return {{"clause", to_string(v->clause)}, {"symbols", v->symbols}, {"distance", to_string(v->distance)}};
}

json cmd_sofic_verify(const std::string& table_path, const std::string& map_path, const std::string& eps_text) {
  std::istringstream tin(read_file(table_path));
  const PartialTable t = read_partial_table(tin);
  std::istringstream min(read_file(map_path));
  const SoficMap s = read_sofic_map(min);
  const mpq_class eps = parse_rational(eps_text);
  const VerifyResult r = verify(t, s, eps);
  return {{"ok", r.ok}, {"eps", to_string(eps)}, {"violation", violation_json(r.violation)}};
}

json cmd_sofic_search(const std::string& table_path, const std::string& eps_text, std::size_t d_max) {
  std::istringstream tin(read_file(table_path));
  const PartialTable t = read_partial_table(tin);
  const mpq_class eps = parse_rational(eps_text);
  if (d_max == 0) throw InputError("--dmax must be >= 1");
  const auto s = search(t, eps, d_max);
  json result = {{"found", s.has_value()}, {"eps", to_string(eps)}, {"d_max", d_max}};
  if (s) {
    result["degree"] = s->degree;
    json m = json::object();
    for (const auto& [name, p] : s->sigma) m[name] = p;
    result["map"] = m;
  }
  return result;
}

// --- text rendering --------------------------------------------------------

std::string join(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ' ';
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string render_result(const std::string& sub, const json& r) {
  std::ostringstream os;
  if (sub == "rank" && r.contains("catalogue")) {
    for (const auto& row : r["catalogue"])
      os << (row["passed"].get<bool>() ? "PASS " : "FAIL ") << row["name"].get<std::string>() << ": "
         << row["computed"].get<std::string>() << (row["exact"].get<bool>() ? " == " : " <= ")
         << row["expected"].get<std::string>() << '\n';
    os << r["passed"].get<std::size_t>() << '/' << r["total"].get<std::size_t>() << " entries passed\n";
  } else if (sub == "rank") {
    os << r["pointclass"].get<std::string>() << '\n';
  } else if (sub == "group invariants" || sub == "k0") {
    os << r["text"].get<std::string>() << '\n';
  } else if (sub == "reduce") {
    os << "family: " << r["family"].get<std::string>() << '\n'
       << "alpha: " << r["alpha"].get<std::string>() << '\n'
       << "property: " << r["property"].get<std::string>() << " (" << r["pointclass"].get<std::string>() << ")\n"
       << "classify: " << (r["classify"].get<bool>() ? "true" : "false") << '\n'
       << "stage: " << r["stage"].get<std::size_t>() << '\n'
       << "quotient order: "
       << (r["quotient_order"].is_null() ? std::string("infinite") : r["quotient_order"].get<std::string>()) << '\n';
    if (r.contains("invariants")) os << "invariants: " << r["invariants"]["text"].get<std::string>() << '\n';
  } else if (sub == "correct-proj") {
    os << r["matrix"].get<std::string>();
  } else if (sub == "tree rank") {
    os << "cb_rank: " << r["cb_rank"].get<std::size_t>() << '\n' << "kernel: ";
    if (r["kernel_states"].is_null())
      os << "empty\n";
    else
      os << r["kernel_states"].get<std::size_t>() << " states\n";
  } else if (sub == "tree countable") {
    os << "countable: " << (r["countable"].get<bool>() ? "true" : "false") << '\n'
       << "superatomic: " << (r["superatomic"].get<bool>() ? "true" : "false") << '\n'
       << "separable dual: " << (r["dual_separable"].get<bool>() ? "true" : "false") << '\n';
  } else if (sub == "tree dist") {
    os << r["distance"].get<std::string>() << '\n';
  } else if (sub == "encode") {
    os << "rho: " << join(r["rho"]) << '\n' << "q: " << join(r["q"]) << '\n';
    for (const auto& t : r["tables"])
      for (const auto& e : t["entries"]) {
        os << t["name"].get<std::string>();
        if (!e["args"].empty()) os << ' ' << join(e["args"]);
        os << " -> " << e["value"].dump() << '\n';
      }
  } else if (sub == "sofic verify") {
    if (r["ok"].get<bool>()) {
      os << "ok\n";
    } else {
      const auto& v = r["violation"];
      os << "violated " << v["clause"].get<std::string>() << " (" << join(v["symbols"]) << "): d_H = "
         << v["distance"].get<std::string>() << '\n';
    }
  } else if (sub == "sofic search") {
    if (!r["found"].get<bool>()) {
      os << "not found with degree <= " << r["d_max"].get<std::size_t>() << '\n';
    } else {
      os << "found degree " << r["degree"].get<std::size_t>() << '\n';
      for (const auto& [name, p] : r["map"].items()) os << name << ' ' << join(p) << '\n';
    }
  } else {
    os << r.dump() << '\n';
  }
  return os.str();
}

int exit_code_for(const std::exception_ptr& e, std::string& message) {
  try {
    std::rethrow_exception(e);
  } catch (const CheckFailed& x) {
    message = x.report + x.what();
    return kCheckFailed;
  } catch (const FormulaError& x) {
    message = "line " + std::to_string(x.line()) + ", column " + std::to_string(x.column()) + ": " + x.what();
    return kInputError;
  } catch (const PreconditionError& x) {
    message = x.what();
    return kPreconditionError;
  } catch (const SpectralGapError& x) {
    message = x.what();
    return kPreconditionError;
  } catch (const EmptySetError& x) {
    message = x.what();
    return kPreconditionError;
  } catch (const PartialDataError& x) {
    message = x.what();
    return kPreconditionError;
  } catch (const std::domain_error& x) {
    message = x.what();
    return kPreconditionError;
  } catch (const std::exception& x) {
    // parse and validation failures: InputError, NegationError, std::invalid_argument family
    message = x.what();
    return kInputError;
  }
}

}  // namespace

std::string render_text(const json& envelope) {
  return render_result(envelope.at("subcommand").get<std::string>(), envelope.at("result"));
}

Outcome run(const std::vector<std::string>& args) {
  Context ctx;
  CLI::App app{"Quotient-coding workbench: pointclass ranks, reductions, K0, Cantor-Bendixson, sofic checks", "qcw"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.g.as_json, "Machine-readable output");
  app.add_option("--seed", ctx.g.seed, "Seed for randomized demos");
  app.add_option("--max-level", ctx.g.max_level, "Pointclass level cap")->check(CLI::Range(1, 1000));

  std::string file;
  std::string file2;
  bool catalogue_flag = false;
  auto* rank_cmd = app.add_subcommand("rank", "Rank a formula file");
  rank_cmd->add_option("file", file, "Formula file");
  rank_cmd->add_flag("--catalogue", catalogue_flag, "Run the built-in catalogue regression");

  auto* group_cmd = app.add_subcommand("group", "Finitely presented abelian groups");
  group_cmd->require_subcommand(1);
  auto* group_inv = group_cmd->add_subcommand("invariants", "Invariant factors of a relation matrix");
  group_inv->add_option("file", file, "Matrix file")->required();

  std::string family;
  std::string alpha;
  std::size_t stage = 8;
  bool with_invariants = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Stage of a completeness reduction");
  reduce_cmd->add_option("family", family, "Reduction family")->required();
  reduce_cmd->add_option("alpha", alpha, "Sequence 'prefix;period'")->required();
  reduce_cmd->add_option("--stage", stage, "Truncation stage");
  reduce_cmd->add_flag("--invariants", with_invariants, "Print group invariants of the truncation");

  std::string dims;
  std::optional<std::size_t> rank_bound;
  auto* k0_cmd = app.add_subcommand("k0", "K0 of a finite-dimensional algebra");
  k0_cmd->add_option("dims", dims, "Block dimensions, e.g. 2,5")->required();
  k0_cmd->add_option("--rank-bound", rank_bound, "Rank truncation bound (default: block count)");

  std::optional<std::size_t> random_dim;
  auto* proj_cmd = app.add_subcommand("correct-proj", "Correct an almost-projection");
  auto* proj_file = proj_cmd->add_option("file", file, "Matrix file");
  auto* proj_random = proj_cmd->add_option("--random", random_dim, "Use a random perturbed projection of this size");
  proj_file->excludes(proj_random);

  auto* tree_cmd = app.add_subcommand("tree", "Regular closed subsets of Cantor space");
  tree_cmd->require_subcommand(1);
  auto* tree_rank = tree_cmd->add_subcommand("rank", "Cantor-Bendixson rank and kernel");
  tree_rank->add_option("file", file, "Automaton file")->required();
  auto* tree_countable = tree_cmd->add_subcommand("countable", "Countability / superatomicity");
  tree_countable->add_option("file", file, "Automaton file")->required();
  auto* tree_dist = tree_cmd->add_subcommand("dist", "Distance of a step function to the ideal of F");
  tree_dist->add_option("file", file, "Automaton file")->required();
  tree_dist->add_option("stepfn", file2, "Step function file")->required();

  auto* encode_cmd = app.add_subcommand("encode", "Canonical encoding of a finite congruence");
  encode_cmd->add_option("file", file, "Congruence file")->required();

  std::string eps = "1/4";
  std::size_t d_max = 4;
  auto* sofic_cmd = app.add_subcommand("sofic", "Sofic approximations");
  sofic_cmd->require_subcommand(1);
  auto* sofic_verify = sofic_cmd->add_subcommand("verify", "Check a sofic map against a table");
  sofic_verify->add_option("table", file, "Table file")->required();
  sofic_verify->add_option("map", file2, "Map file")->required();
  sofic_verify->add_option("--eps", eps, "Tolerance (rational)");
  auto* sofic_search = sofic_cmd->add_subcommand("search", "Search for a sofic map");
  sofic_search->add_option("table", file, "Table file")->required();
  sofic_search->add_option("--eps", eps, "Tolerance (rational)");
  sofic_search->add_option("--dmax", d_max, "Largest degree to try");

  Outcome outcome;
  std::ostringstream help_out;
  std::ostringstream help_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, help_out, help_err);
    outcome.out = help_out.str();
    outcome.err = help_err.str();
    if (code != 0) {
      outcome.exit_code = kInputError;
      outcome.out.clear();
    }
    return outcome;
  }

  std::string sub;
  json result;
  try {
    if (rank_cmd->parsed()) {
      sub = "rank";
      if (catalogue_flag)
        result = cmd_catalogue(ctx);
      else if (file.empty())
        throw InputError("rank needs a formula file (or --catalogue)");
      else
        result = cmd_rank(ctx, file);
    } else if (group_inv->parsed()) {
      sub = "group invariants";
      result = cmd_group_invariants(file);
    } else if (reduce_cmd->parsed()) {
      sub = "reduce";
      result = cmd_reduce(family, alpha, stage, with_invariants);
    } else if (k0_cmd->parsed()) {
      sub = "k0";
      result = cmd_k0(dims, rank_bound);
    } else if (proj_cmd->parsed()) {
      sub = "correct-proj";
      if (file.empty() && !random_dim) throw InputError("correct-proj needs a matrix file or --random");
      result = cmd_correct_proj(ctx, file, random_dim);
    } else if (tree_rank->parsed()) {
      sub = "tree rank";
      result = cmd_tree_rank(file);
    } else if (tree_countable->parsed()) {
      sub = "tree countable";
      result = cmd_tree_countable(file);
    } else if (tree_dist->parsed()) {
      sub = "tree dist";
      result = cmd_tree_dist(file, file2);
    } else if (encode_cmd->parsed()) {
      sub = "encode";
      result = cmd_encode(file);
    } else if (sofic_verify->parsed()) {
      sub = "sofic verify";
      result = cmd_sofic_verify(file, file2, eps);
    } else if (sofic_search->parsed()) {
      sub = "sofic search";
      result = cmd_sofic_search(file, eps, d_max);
    }
  } catch (...) {
    std::string message;
    outcome.exit_code = exit_code_for(std::current_exception(), message);
    outcome.err = "qcw: " + message + "\n";
    return outcome;
  }

  json envelope = {{"subcommand", sub}, {"result", result}, {"warnings", ctx.warnings}};
  if (ctx.g.as_json) {
    outcome.out = envelope.dump(2) + "\n";
  } else {
    outcome.out = render_text(envelope);
    for (const auto& w : ctx.warnings) outcome.err += "warning: " + w + "\n";
  }
  return outcome;
}

}  // namespace qcw::cli
