#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qclust/error.hpp"
#include "qclust/session.hpp"

namespace fs = std::filesystem;
using namespace qclust;

namespace {

struct Flags {
  std::string session;
  std::string route;
  int degree_cap = -1;
  int cone_bound = -1;
  std::vector<int> primes;
  int jobs = 0;
  std::string golden;
  std::string json_path;
  int depth = 12;
};

void apply(const Flags& f, SessionSpec& s) {
  if (!f.route.empty()) s.options.route = parse_route(f.route);
  if (f.cone_bound >= 0) s.options.cone_bound = IntVec(s.n, f.cone_bound);
  if (!f.primes.empty()) s.options.primes = f.primes;
  if (f.jobs > 0) s.options.jobs = f.jobs;
  if (f.degree_cap >= 0 && f.degree_cap != s.options.degree_cap) {
    // the cap belongs to the potential, so re-read the session with it
    s.options.degree_cap = f.degree_cap;
    Potential w(f.degree_cap);
    for (const auto& [word, c] : s.qp.potential.terms()) w.add(word, c);
    s.qp = make_qp(s.qp.quiver, w);
  }
}

// Compares against <dir>/<session stem>.<command>.txt; a missing file is a failure.
bool check_golden(const std::string& dir, const std::string& session, const std::string& cmd, const std::string& out) {
  const std::string stem = session.empty() ? "builtin" : fs::path(session).stem().string();
  const fs::path p = fs::path(dir) / (stem + "." + cmd + ".txt");
  std::ifstream in(p);
  if (!in) {
    std::cerr << "golden: missing " << p.string() << "\n";
    return false;
  }
  std::ostringstream want;
  want << in.rdbuf();
  if (want.str() != out) {
    std::cerr << "golden: output differs from " << p.string() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cluster monomials by seed mutation and by DT conjugation"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub, bool session_required) {
    auto* opt = sub->add_option("session", f.session, "session JSON file");
    if (session_required) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--route", f.route, "mutation, dt or both")->check(CLI::IsMember({"mutation", "dt", "both"}));
    sub->add_option("--degree-cap", f.degree_cap, "truncation degree D of potentials");
    sub->add_option("--cone-bound", f.cone_bound, "fixed cone bound per mutable vertex");
    sub->add_option("--primes", f.primes, "field orders for point counts")->delimiter(',');
    sub->add_option("--jobs", f.jobs, "parallel workers for count and check loops");
    sub->add_option("--golden", f.golden, "directory of expected outputs");
    sub->add_option("--json", f.json_path, "write a JSON report here ('-' for stdout)");
  };
  auto* mutate = app.add_subcommand("mutate", "print the mutated seed");
  auto* expand = app.add_subcommand("expand", "expand a cluster monomial and run the checks");
  auto* count = app.add_subcommand("count", "quiver Grassmannian counts against the F-coefficients");
  auto* ident = app.add_subcommand("identity-check", "pentagon and factorization identities");
  add_common(mutate, true);
  add_common(expand, true);
  add_common(count, true);
  add_common(ident, false);
  ident->add_option("--depth", f.depth, "cone depth of the series identities");

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    CommandResult res;
    std::optional<SessionSpec> spec;
    if (!f.session.empty()) {
      spec = load_session(f.session);
      apply(f, *spec);
    }
    if (cmd == "mutate")
      res = cmd_mutate(*spec);
    else if (cmd == "expand")
      res = cmd_expand(*spec);
    else if (cmd == "count")
      res = cmd_count(*spec);
    else
      res = cmd_identity_check(spec ? &*spec : nullptr, f.depth);

    // with --json - the report alone goes to stdout
    if (f.json_path != "-") std::cout << res.text;
    bool ok = res.ok;
    if (!f.golden.empty()) ok = check_golden(f.golden, f.session, cmd, res.text) && ok;
    if (!f.json_path.empty()) {
      const std::string dumped = res.report.dump(2) + "\n";
      if (f.json_path == "-") {
        std::cout << dumped;
      } else {
        std::ofstream out(f.json_path);
        out << dumped;
      }
    }
    return ok ? 0 : 1;
  } catch (const NotDivisibleError& e) {
    std::cerr << "error: " << e.what() << "\n  remainder " << e.remainder().to_string() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
