#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cartankit/corpus.hpp"
#include "cartankit/error.hpp"
#include "cartankit/group.hpp"
#include "cartankit/json_io.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/verify.hpp"

using namespace cartankit;
using io::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kSplit = 3 };

struct Options {
  bool text = false;
  bool real = false;
  std::uint64_t seed = 0;
  io::Style style() const { return {real}; }
};

bool is_scalar(const json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

bool is_matrix(const json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string inline_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_scalar(j)) return io::scalar_from_json(j).to_string();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + inline_text(j[k]);
    return out + "]";
  }
  return j.dump();
}

bool is_flat(const json& j) {
  if (!j.is_array()) return true;
  for (const auto& e : j) {
    if (!(e.is_primitive() || is_scalar(e) || (e.is_array() && is_flat(e) && !e.empty() && !e[0].is_array()))) {
      return false;
    }
  }
  return true;
}

void render_text(std::ostream& os, const json& j, const std::string& indent) {
  if (is_matrix(j)) {
    for (const auto& row : j["entries"]) os << indent << inline_text(row) << "\n";
    return;
  }
  if (j.is_object() && !is_scalar(j)) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value) && !value.is_object()) {
        os << indent << key << ": " << inline_text(value) << "\n";
      } else if (is_scalar(value)) {
        os << indent << key << ": " << inline_text(value) << "\n";
      } else {
        os << indent << key << ":\n";
        render_text(os, value, indent + "  ");
      }
    }
    return;
  }
  if (j.is_array() && !is_flat(j)) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << indent << "- [" << k << "]\n";
      render_text(os, j[k], indent + "  ");
    }
    return;
  }
  os << indent << inline_text(j) << "\n";
}

void emit(const Options& opt, json out) {
  if (!out.contains("seed")) out["seed"] = opt.seed;
  if (opt.text) {
    render_text(std::cout, out, "");
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

/// A subspace argument: a JSON file ({"vectors"}, {"indices"} or a
/// serialized Subspace), otherwise a comma-separated list of basis indices.
Subspace subspace_arg(const std::string& arg, const LieAlgebra& l) {
  if (std::filesystem::is_regular_file(arg)) {
    json j = io::read_file(arg);
    if (j.is_object() && j.contains("ambient_dim")) {
      Subspace s = io::subspace_from_json(j);
      if (s.ambient_dim() != l.dim()) {
        throw InputError("subspace in '" + arg + "' has ambient_dim " + std::to_string(s.ambient_dim()) +
                         ", expected " + std::to_string(l.dim()));
      }
      return s;
    }
    return io::subalgebra_from_json(j, l);
  }
  json indices = json::array();
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long k = -1;
    try {
      k = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || k < 0) {
      throw InputError("subspace argument '" + arg + "' is neither a file nor a list of basis indices");
    }
    indices.push_back(k);
  }
  return io::subalgebra_from_json({{"indices", indices}}, l);
}

json subspace_list(const std::vector<Subspace>& ss, io::Style style) {
  json out = json::array();
  for (const auto& s : ss) out.push_back(io::to_json(s, style));
  return out;
}

json dims(const std::vector<Subspace>& ss) {
  json out = json::array();
  for (const auto& s : ss) out.push_back(s.dim());
  return out;
}

json roots_json(const RootDatum& d, io::Style style) {
  json h = json::array();
  for (const auto& v : d.h_basis) h.push_back(io::to_json(v, style));
  json rs = json::array();
  for (const auto& r : d.roots) {
    rs.push_back({{"dim", r.space.dim()}, {"space", io::to_json(r.space, style)}, {"values", io::to_json(r.values, style)}});
  }
  return {{"h_basis", h}, {"roots", rs}};
}

template <class T>
const T& unwrap(const SplitResult<T>& r) {
  if (!split_ok(r)) throw SplitError(std::get<SplitFailure>(r));
  return std::get<T>(r);
}

struct LieArgs {
  std::string file;
  bool cartan = false, rank = false, series = false, nilpotent = false, solvable = false;
  std::string roots, normalizer, centralizer, g0, hull;
};

struct GrpArgs {
  std::string file, corpus_name, element;
  bool acoeffs = false, r = false, g1 = false, regular = false, validate = false;
  std::string in_c, root_action;
};

struct VerifyArgs {
  bool all = false, canonical = false;
  std::string check;
  std::optional<std::size_t> samples;
};

std::size_t count_set(std::initializer_list<bool> flags) {
  std::size_t n = 0;
  for (bool f : flags) n += f;
  return n;
}

int run_lie(const LieArgs& a, const Options& opt) {
  if (count_set({a.cartan, a.rank, a.series, a.nilpotent, a.solvable, !a.roots.empty(), !a.normalizer.empty(),
                 !a.centralizer.empty(), !a.g0.empty(), !a.hull.empty()}) != 1) {
    throw InputError("lie: give exactly one operation flag");
  }
  LieAlgebra l = io::lie_from_json(io::read_file(a.file));
  const io::Style st = opt.style();
  if (a.cartan) {
    Subspace h = cartan_subalgebra(l, opt.seed);
    emit(opt, {{"cartan", io::to_json(h, st)}, {"dim", h.dim()}});
  } else if (a.rank) {
    emit(opt, {{"rank", rank(l, opt.seed)}});
  } else if (!a.roots.empty()) {
    emit(opt, roots_json(unwrap(roots(l, subspace_arg(a.roots, l))), st));
  } else if (a.series) {
    emit(opt, {{"derived_dims", dims(derived_series(l))},
               {"derived_series", subspace_list(derived_series(l), st)},
               {"lower_central_dims", dims(lower_central_series(l))},
               {"lower_central_series", subspace_list(lower_central_series(l), st)}});
  } else if (a.nilpotent) {
    emit(opt, {{"nilpotent", is_nilpotent(l)}});
  } else if (a.solvable) {
    emit(opt, {{"solvable", is_solvable(l)}});
  } else if (!a.normalizer.empty()) {
    Subspace n = normalizer(l, subspace_arg(a.normalizer, l));
    emit(opt, {{"dim", n.dim()}, {"normalizer", io::to_json(n, st)}});
  } else if (!a.centralizer.empty()) {
    Subspace z = centralizer(l, subspace_arg(a.centralizer, l));
    emit(opt, {{"centralizer", io::to_json(z, st)}, {"dim", z.dim()}});
  } else if (!a.g0.empty()) {
    Subspace g0 = g0_of(l, subspace_arg(a.g0, l));
    emit(opt, {{"dim", g0.dim()}, {"g0", io::to_json(g0, st)}, {"is_cartan", is_cartan(l, g0)}});
  } else {
    Mat x = io::mat_from_json(io::read_file(a.hull));
    if (!x.square()) throw InputError("--hull-single: matrix in '" + a.hull + "' is not square");
    const Subspace& flat = unwrap(algebraic_hull_single(x.rows(), x));
    json basis = json::array();
    for (const auto& v : flat.vectors()) basis.push_back(io::to_json(Mat::unflatten(v, x.rows()), st));
    emit(opt, {{"basis", basis}, {"dim", flat.dim()}, {"hull", io::to_json(flat, st)}});
  }
  return kOk;
}

int run_grp(const GrpArgs& a, const Options& opt) {
  if (count_set({a.acoeffs, a.r, a.g1, a.regular, a.validate, !a.in_c.empty(), !a.root_action.empty()}) != 1) {
    throw InputError("grp: give exactly one operation flag");
  }
  if (a.file.empty() == a.corpus_name.empty()) throw InputError("grp: give either a group file or --corpus");
  GroupContext g = a.file.empty() ? corpus::group(a.corpus_name) : io::group_from_json(io::read_file(a.file));
  Mat x = io::mat_from_json(io::read_file(a.element));
  const io::Style st = opt.style();
  json out{{"group", g.name()}};
  if (a.validate) {
    Validation v = validate(g, x);
    out["valid"] = v.ok;
    if (!v.ok) out["reason"] = v.reason;
    emit(opt, out);
    return v.ok ? kOk : kFail;
  }
  require_valid(g, x);
  if (a.acoeffs) {
    out["a"] = io::to_json(a_coeffs(g, x), st);
    out["r"] = r_of(g, x);
  } else if (a.r) {
    out["r"] = r_of(g, x);
  } else if (a.g1) {
    Subspace g1 = g1_of(g, x);
    out["dim"] = g1.dim();
    out["g1"] = io::to_json(g1, st);
  } else if (a.regular) {
    std::size_t rk = rank(g.lie(), opt.seed);
    out["dim_g1"] = g1_of(g, x).dim();
    out["rank"] = rk;
    out["regular"] = is_regular_with_rank(g, x, rk);
  } else if (!a.in_c.empty()) {
    Subspace h = subspace_arg(a.in_c, g.lie());
    out["in_c"] = in_C_h(g, x, h, opt.seed);
    out["in_normalizer"] = in_NG_h(g, x, h);
  } else {
    Subspace h = subspace_arg(a.root_action, g.lie());
    auto perm = root_action(g, x, h);
    out["permutation"] = perm;
    out["roots"] = roots_json(unwrap(roots(g.lie(), h)), st)["roots"];
  }
  emit(opt, out);
  return kOk;
}

int run_verify(const VerifyArgs& a, const Options& opt) {
  if (a.all == !a.check.empty()) throw InputError("verify: give exactly one of --all or --check");
  if (a.all) {
    if (a.samples) throw InputError("verify: --samples applies to --check only");
    auto reports = verify::run_all(opt.seed);
    json rs = json::array();
    bool flagged = false;
    for (const auto& r : reports) {
      rs.push_back(verify::to_json(r, !a.canonical));
      flagged = flagged || r.outcome == verify::Outcome::Flagged;
    }
    bool failed = verify::any_failed(reports);
    emit(opt, {{"outcome", failed ? "fail" : flagged ? "flagged" : "pass"}, {"reports", rs}});
    return failed ? kFail : kOk;
  }
  if (!verify::is_check(a.check)) throw InputError("verify: unknown check '" + a.check + "'");
  auto r = a.samples ? verify::run_check(a.check, opt.seed, *a.samples) : verify::run_check(a.check, opt.seed);
  emit(opt, verify::to_json(r, !a.canonical));
  return r.outcome == verify::Outcome::Fail ? kFail : kOk;
}

int run_corpus(const Options& opt) {
  json list = json::array();
  for (const auto& name : corpus::names()) {
    GroupContext g = corpus::group(name);
    list.push_back({{"ambient", g.ambient()},
                    {"description", corpus::description(name)},
                    {"dim", g.lie().dim()},
                    {"hint", to_string(g.hint())},
                    {"name", name}});
  }
  emit(opt, {{"corpus", list}});
  return kOk;
}

void error_out(const Options& opt, json err, const std::string& message) {
  std::cerr << "cartankit: " << message << "\n";
  if (!opt.text) std::cout << err.dump(2) << "\n";
}

std::uint64_t env_seed() {
  const char* s = std::getenv("CARTANKIT_SEED");
  if (s == nullptr || *s == '\0') return 0;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(s).size()) throw InputError(std::string("CARTANKIT_SEED='") + s + "' is not an integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie theory over the Gaussian rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::optional<std::uint64_t> seed;
  app.add_flag("--text", opt.text, "Human-readable output instead of JSON");
  app.add_flag("--real-output", opt.real, "Print real scalars as bare rationals");
  app.add_option("--seed", seed, "Seed (default $CARTANKIT_SEED or 0)");

  LieArgs la;
  auto* lie = app.add_subcommand("lie", "Lie algebra operations");
  lie->add_option("file", la.file, "Lie algebra JSON")->required();
  lie->add_flag("--cartan", la.cartan, "A Cartan subalgebra");
  lie->add_flag("--rank", la.rank, "Rank");
  lie->add_option("--roots", la.roots, "Root decomposition relative to h");
  lie->add_flag("--series", la.series, "Lower central and derived series");
  lie->add_flag("--nilpotent", la.nilpotent, "Nilpotency test");
  lie->add_flag("--solvable", la.solvable, "Solvability test");
  lie->add_option("--normalizer", la.normalizer, "Normalizer of h");
  lie->add_option("--centralizer", la.centralizer, "Centralizer of h");
  lie->add_option("--g0", la.g0, "g0(h) for a nilpotent subalgebra h");
  lie->add_option("--hull-single", la.hull, "Algebraic hull of one matrix");

  GrpArgs ga;
  auto* grp = app.add_subcommand("grp", "Group element operations");
  grp->add_option("file", ga.file, "Group JSON");
  grp->add_option("--corpus", ga.corpus_name, "Built-in group name");
  grp->add_option("--element", ga.element, "Element matrix JSON")->required();
  grp->add_flag("--acoeffs", ga.acoeffs, "Coefficients of det((T+1) - Ad(g))");
  grp->add_flag("--r", ga.r, "r(g)");
  grp->add_flag("--g1", ga.g1, "g1(Ad(g))");
  grp->add_flag("--regular", ga.regular, "Regularity");
  grp->add_option("--in-c", ga.in_c, "Membership in C(h)");
  grp->add_option("--root-action", ga.root_action, "Permutation of roots by Ad(g)");
  grp->add_flag("--validate", ga.validate, "Membership validation");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run verification checks");
  ver->add_flag("--all", va.all, "Every check with default sample counts");
  ver->add_option("--check", va.check, "One check id, C1..C12");
  ver->add_option("--samples", va.samples, "Sample count for --check");
  ver->add_flag("--canonical", va.canonical, "Omit runtime_ms so reports are byte-identical");

  bool list = false;
  auto* cor = app.add_subcommand("corpus", "Built-in groups");
  cor->add_flag("--list", list, "List built-in groups")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    opt.seed = seed ? *seed : env_seed();
    if (lie->parsed()) return run_lie(la, opt);
    if (grp->parsed()) return run_grp(ga, opt);
    if (ver->parsed()) return run_verify(va, opt);
    return run_corpus(opt);
  } catch (const SplitError& e) {
    json err = io::to_json(e.failure(), opt.style());
    err["seed"] = opt.seed;
    error_out(opt, err, e.what());
    return kSplit;
  } catch (const InconsistencyError& e) {
    error_out(opt, {{"error", "inconsistency"}, {"message", e.what()}, {"seed", opt.seed}}, e.what());
    return kFail;
  } catch (const std::exception& e) {
    error_out(opt, {{"error", "input_error"}, {"message", e.what()}, {"seed", opt.seed}}, e.what());
    return kInput;
  }
}
