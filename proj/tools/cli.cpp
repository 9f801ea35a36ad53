#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "quantoid/correspondence.hpp"
#include "quantoid/duality.hpp"
#include "quantoid/entropic.hpp"
#include "quantoid/expansion.hpp"
#include "quantoid/json_io.hpp"
#include "quantoid/sharing.hpp"

namespace quantoid::cli {
namespace {

struct Arguments {
  std::string input;
  std::string output;
  std::string dealer;
  std::string kind = "polymatroid";
  std::string mode;
  bool verify_lemma52 = false;
  std::string classical;
  std::string quantum;
  std::optional<long> snap;
  double tol = kDefaultTolerance;
  std::string base = "2";
};

SetFunction load(const std::string& path) { return io::parse_set_function(io::read_file(path)); }

void emit(const io::Json& document, const std::string& path, std::ostream& out) {
  const std::string text = io::dump(document);
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write " + path);
  file << text;
}

int command_check(const Arguments& a, std::ostream& out) {
  out << io::dump(io::to_json(classify(load(a.input))));
  return kExitOk;
}

int command_transform(const std::string& op, const Arguments& a, std::ostream& out) {
  const SetFunction f = load(a.input);
  const SetFunction g = op == "dual" ? dual(f) : op == "hat" ? hat(f) : vee(f);
  emit(io::to_json(g), a.output, out);
  return kExitOk;
}

int command_share(const Arguments& a, std::ostream& out) {
  const SetFunction f = load(a.input);
  const SharingReport report = analyze(f, a.dealer, parse_kind(a.kind));
  out << io::dump(io::to_json(report, f.ground()));
  return report.ideal ? kExitOk : kExitNegative;
}

int command_expand(const Arguments& a, std::ostream& out) {
  const SetFunction f = load(a.input);
  ExpansionOptions options;
  options.cap = expansion_cap_from_env();

  io::Json document = io::Json::object();
  const std::string mode = a.mode.empty() && !a.verify_lemma52 ? "matroid" : a.mode;
  if (!mode.empty()) {
    const Expansion e = mode == "matroid"    ? free_expand_polymatroid(f, options)
                        : mode == "quantoid" ? free_expand_polyquantoid(f, options)
                                             : two_factor(f, options);
    document = io::to_json(e);
  }
  bool ok = true;
  if (a.verify_lemma52) {
    ok = verify_lemma52(f, options);
    document["lemma52"] = ok;
  }
  out << io::dump(document);
  return ok ? kExitOk : kExitNegative;
}

int command_entropy(const Arguments& a, std::ostream& out) {
  const LogBase base = a.base == "e" ? LogBase::nats : LogBase::bits;
  const ApproxSetFunction f =
      a.classical.empty()
          ? von_neumann_entropy_function(io::parse_state(io::read_file(a.quantum), a.tol), base)
          : shannon_entropy_function(io::parse_distribution(io::read_file(a.classical), a.tol), base);
  if (a.snap) {
    out << io::dump(io::to_json(snap_to_rational(f, *a.snap)));
  } else {
    out << io::dump(io::to_json(f));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank functions of polymatroids and polyquantoids", "quantoid"};
  app.require_subcommand(1);
  Arguments a;

  auto* check = app.add_subcommand("check", "Classify a set function; prints the axiom report");
  check->add_option("file", a.input, "Set-function document")->required();

  std::vector<CLI::App*> transforms;
  for (const char* name : {"dual", "hat", "vee"}) {
    auto* sub = app.add_subcommand(name, std::string("Apply the ") + name + " map");
    sub->add_option("input", a.input, "Set-function document ('-' for stdin)")->required();
    sub->add_option("output", a.output, "Output path (default stdout)");
    transforms.push_back(sub);
  }

  auto* share = app.add_subcommand("share", "Secret-sharing analysis of one dealer");
  share->add_option("file", a.input, "Set-function document")->required();
  share->add_option("--dealer", a.dealer, "Dealer label")->required();
  share->add_option("--kind", a.kind, "polymatroid or polyquantoid")
      ->check(CLI::IsMember({"polymatroid", "polyquantoid"}));

  auto* expand = app.add_subcommand("expand", "Free expansion, 2-factor, or expansion cross-check");
  expand->add_option("file", a.input, "Set-function document")->required();
  expand->add_option("--mode", a.mode, "matroid, quantoid or two-factor")
      ->check(CLI::IsMember({"matroid", "quantoid", "two-factor"}));
  expand->add_flag("--verify-lemma52", a.verify_lemma52,
                   "Compare vee of the 2-factor of hat(e) with the free expansion of e");

  auto* entropy = app.add_subcommand("entropy", "Entropy function of a distribution or pure state");
  auto* classical = entropy->add_option("--classical", a.classical, "Distribution document");
  auto* quantum = entropy->add_option("--quantum", a.quantum, "Pure-state document");
  classical->excludes(quantum);
  entropy->add_option("--snap", a.snap, "Snap values to rationals with this maximum denominator")
      ->check(CLI::PositiveNumber);
  entropy->add_option("--tol", a.tol, "Tolerance")->check(CLI::PositiveNumber);
  entropy->add_option("--base", a.base, "Logarithm base: 2 or e")->check(CLI::IsMember({"2", "e"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (entropy->parsed() && a.classical.empty() && a.quantum.empty()) {
      throw CLI::RequiredError("--classical or --quantum");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return command_check(a, out);
    for (auto* sub : transforms) {
      if (sub->parsed()) return command_transform(sub->get_name(), a, out);
    }
    if (share->parsed()) return command_share(a, out);
    if (expand->parsed()) return command_expand(a, out);
    return command_entropy(a, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace quantoid::cli
