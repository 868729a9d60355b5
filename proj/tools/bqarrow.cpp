#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include <bqarrow/invariant.hpp>
#include <bqarrow/io.hpp>
#include <bqarrow/knotdb.hpp>
#include <bqarrow/moves.hpp>
#include <bqarrow/weight.hpp>

using namespace bqarrow;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Failure with a report; exits 1.
struct Rejected {
  std::string message;
  Json detail;
};

struct Options {
  std::string format = "text";
  std::string biquandle, weight, table, code_file, contains;
  std::optional<std::string> code;
  Residue modulus = 2;
  std::uint64_t limit = 0;
  int steps = 10, trials = 100, threads = 0;
  std::optional<std::uint64_t> seed;
  bool corrupt_signs = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (json_mode(o))
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

GaussDiagram diagram_arg(const Options& o) {
  if (o.code) {
    if (!o.code_file.empty()) std::cerr << "warning: --code given, ignoring --code-file\n";
    return parse_gauss_code(*o.code);
  }
  if (o.code_file.empty()) throw PreconditionError("a Gauss code is required (--code or --code-file)");
  std::string text = read_file(o.code_file);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return parse_gauss_code(text);
}

std::string multiset_text(const std::vector<Residue>& sums) {
  std::string s = "{";
  for (std::size_t i = 0; i < sums.size(); ++i) s += (i ? "," : "") + std::to_string(sums[i]);
  return s + "}";
}

Json counts_json(const InvariantValue& v) {
  Json c = Json::object();
  for (const auto& [r, k] : v.counts) c[std::to_string(r)] = k;
  return c;
}

int cmd_validate(const Options& o) {
  try {
    const Biquandle b = load_biquandle(o.biquandle);
    emit(o, {{"valid", true}, {"n", b.size()}}, "valid (n=" + std::to_string(b.size()) + ")\n");
    return kOk;
  } catch (const AxiomError& e) {
    const auto& v = e.violation();
    Json w = Json::array();
    for (Element x : v.witness) w.push_back(x + 1);
    throw Rejected{std::string("invalid: ") + e.what(), {{"valid", false}, {"axiom", to_string(v.axiom)}, {"witness", w}}};
  } catch (const RangeError& e) {
    throw Rejected{std::string("invalid: ") + e.what(), {{"valid", false}, {"axiom", nullptr}, {"error", e.what()}}};
  }
}

int cmd_verify_weight(const Options& o) {
  const Biquandle b = load_biquandle(o.biquandle);
  const ArrowWeight w = load_weight(o.weight);
  const WeightCheck c = verify_weight(b, w);
  if (!c.ok()) {
    Json wit = Json::array();
    for (Element x : c.violation->witness) wit.push_back(x + 1);
    throw Rejected{"invalid: " + c.violation->describe(),
                   {{"valid", false}, {"axiom", to_string(c.violation->axiom)}, {"witness", wit}}};
  }
  emit(o, {{"valid", true}, {"instances", c.instances}},
       "valid arrow weight (" + std::to_string(c.instances) + " axiom instances checked)\n");
  return kOk;
}

int cmd_solve(const Options& o) {
  const Biquandle b = load_biquandle(o.biquandle);
  const WeightSpace ws = solve_weight_space(b, o.modulus);
  Json j = {{"m", o.modulus}, {"n", b.size()}, {"count", ws.count()}, {"orders", ws.orders()}};
  std::string text = "weights over Z_" + std::to_string(o.modulus) + ": " + std::to_string(ws.count()) + " (orders";
  for (Residue r : ws.orders()) text += " " + std::to_string(r);
  text += ")\n";
  Json gens = Json::array();
  for (const ArrowWeight& g : ws.generators()) gens.push_back(weight_to_json(g)["tensor"]);
  j["generators"] = gens;
  if (!o.contains.empty()) {
    const bool in = ws.contains(load_weight(o.contains));
    j["contains"] = in;
    text += o.contains + (in ? " is in the space\n" : " is not in the space\n");
  }
  if (o.limit > 0) {
    Json all = Json::array();
    for (const ArrowWeight& w : enumerate_weights(ws, o.limit, true)) {
      all.push_back(weight_to_json(w)["tensor"]);
      text += all.back().dump() + "\n";
    }
    j["weights"] = all;
    j["truncated"] = ws.count() > o.limit;
  }
  emit(o, j, text);
  return kOk;
}

int cmd_invariant(const Options& o) {
  const GaussDiagram d = diagram_arg(o);
  const Biquandle b = load_biquandle(o.biquandle);
  const ArrowWeight w = load_weight(o.weight);
  const InvariantValue v = compute_invariant(d, b, w);
  auto sums = weight_sums(d, b, w);
  std::sort(sums.begin(), sums.end());
  emit(o, {{"m", v.modulus}, {"counts", counts_json(v)}, {"polynomial", v.polynomial()}, {"multiset", sums}},
       v.polynomial() + "\nmultiset " + multiset_text(sums) + "\n");
  return kOk;
}

int cmd_classify(const Options& o) {
  const auto records = load_table(o.table);
  const Biquandle b = load_biquandle(o.biquandle);
  const ArrowWeight w = load_weight(o.weight);
  const auto report = o.threads > 0 ? classify(records, b, w, o.threads) : classify(records, b, w);
  emit(o, render_json(report), render_text(report));
  return kOk;
}

int cmd_fuzz(const Options& o) {
  if (json_mode(o) && !o.seed) throw PreconditionError("--seed is required with --format json");
  if (o.steps < 0 || o.trials < 0) throw PreconditionError("--steps and --trials must be non-negative");
  const GaussDiagram d = diagram_arg(o);
  const Biquandle b = load_biquandle(o.biquandle);
  const ArrowWeight w = load_weight(o.weight);
  const SignRule rule = o.corrupt_signs ? SignRule::Ignore : SignRule::Product;
  const std::uint64_t seed = o.seed.value_or(1);
  const InvariantValue expect = compute_invariant(d, b, w, rule);
  for (int t = 0; t < o.trials; ++t) {
    const MoveWalk walk = random_move_walk_traced(d, o.steps, seed + t);
    const InvariantValue got = compute_invariant(walk.result, b, w, rule);
    if (got == expect) continue;
    Json moves = Json::array();
    for (const auto& m : walk.moves) moves.push_back(move_name(m));
    throw Rejected{"FAIL trial " + std::to_string(t) + ": " + expect.polynomial() + " became " + got.polynomial() +
                       " at " + serialize_gauss_code(walk.result),
                   {{"pass", false},
                    {"trial", t},
                    {"expected", expect.polynomial()},
                    {"got", got.polynomial()},
                    {"diagram", serialize_gauss_code(walk.result)},
                    {"moves", moves}}};
  }
  emit(o, {{"pass", true}, {"trials", o.trials}, {"steps", o.steps}, {"seed", seed}, {"value", expect.polynomial()}},
       "pass: " + std::to_string(o.trials) + " walks of " + std::to_string(o.steps) + " moves keep " +
           expect.polynomial() + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biquandle arrow weight invariants of classical and virtual knots"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto code_opts = [&](CLI::App* c) {
    c->add_option("--code", o.code, "Gauss code, e.g. O1-O2-U1-U2- (empty for the unknot)");
    c->add_option("--code-file", o.code_file, "File holding a Gauss code");
  };
  auto biquandle_opt = [&](CLI::App* c) { c->add_option("biquandle", o.biquandle, "Biquandle JSON")->required(); };
  auto weight_opt = [&](CLI::App* c) { c->add_option("weight", o.weight, "Arrow weight JSON")->required(); };

  auto* validate = app.add_subcommand("validate", "Check the biquandle axioms");
  biquandle_opt(validate);

  auto* verify = app.add_subcommand("verify-weight", "Check the arrow weight axioms");
  biquandle_opt(verify);
  weight_opt(verify);

  auto* solve = app.add_subcommand("solve", "Compute all arrow weights over Z_m");
  biquandle_opt(solve);
  solve->add_option("--mod", o.modulus, "Coefficient modulus")->required();
  solve->add_option("--limit", o.limit, "Also list up to this many weights");
  solve->add_option("--contains", o.contains, "Report whether this weight lies in the space");

  auto* invariant = app.add_subcommand("invariant", "Compute the invariant of one diagram");
  biquandle_opt(invariant);
  weight_opt(invariant);
  code_opts(invariant);

  auto* cls = app.add_subcommand("classify", "Group the knots of a table by invariant value");
  cls->add_option("table", o.table, "Knot table (name<TAB>gauss_code)")->required();
  biquandle_opt(cls);
  weight_opt(cls);
  cls->add_option("--threads", o.threads, "Worker threads (default: all cores)");

  auto* fuzz = app.add_subcommand("fuzz", "Check invariance under random Reidemeister move walks");
  biquandle_opt(fuzz);
  weight_opt(fuzz);
  code_opts(fuzz);
  fuzz->add_option("--steps", o.steps, "Moves per walk");
  fuzz->add_option("--trials", o.trials, "Number of walks");
  fuzz->add_option("--seed", o.seed, "Seed of the first walk; walk t uses seed + t");
  fuzz->add_flag("--corrupt-signs", o.corrupt_signs, "Debug: drop the sign product from the weight sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*verify) return cmd_verify_weight(o);
    if (*solve) return cmd_solve(o);
    if (*invariant) return cmd_invariant(o);
    if (*cls) return cmd_classify(o);
    return cmd_fuzz(o);
  } catch (const Rejected& r) {
    if (json_mode(o))
      std::cout << r.detail.dump() << "\n";
    else
      std::cout << r.message << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
