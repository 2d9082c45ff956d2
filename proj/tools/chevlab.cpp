// chevlab: command line front end for the verification tasks.
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "chevlab/error.hpp"
#include "chevlab/tasks.hpp"

using namespace chevlab;

namespace {

struct Flags {
  std::map<std::string, std::string> strings;
  std::map<std::string, std::uint64_t> numbers;
  std::map<std::string, bool> bools;
};

// Registers --name options whose values land in the params object only when given.
void add_string(CLI::App* app, Flags& f, const std::string& key, const std::string& help) {
  std::string flag = "--" + key;
  for (auto& ch : flag)
    if (ch == '_') ch = '-';
  app->add_option_function<std::string>(flag, [&f, key](const std::string& v) { f.strings[key] = v; }, help);
}

void add_number(CLI::App* app, Flags& f, const std::string& key, const std::string& help) {
  std::string flag = "--" + key;
  for (auto& ch : flag)
    if (ch == '_') ch = '-';
  app->add_option_function<std::uint64_t>(flag, [&f, key](std::uint64_t v) { f.numbers[key] = v; }, help);
}

json params_of(const Flags& f) {
  json p = json::object();
  for (const auto& [k, v] : f.strings) p[k] = v;
  for (const auto& [k, v] : f.numbers) p[k] = v;
  for (const auto& [k, v] : f.bools) p[k] = v;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary Chevalley groups of rank 2: commutator identities and brute-force checks"};
  app.require_subcommand(1);
  std::string report_path;
  bool timings = false;
  std::uint64_t seed = 1;
  app.add_option("--report", report_path, "write the JSON report here instead of stdout");
  app.add_flag("--timings", timings, "include wall-clock timings (reports are no longer reproducible)");
  app.add_option("--seed", seed, "seed for sampled checks");

  Flags f;
  std::string command;

  auto* verify = app.add_subcommand("verify", "identity-level checks");
  verify->require_subcommand(1);
  auto* st = verify->add_subcommand("steinberg", "Steinberg relations, symbolically");
  add_string(st, f, "type", "A2, C2, G2 or all");
  auto* ch = verify->add_subcommand("chevalley", "normalized structure constants against the displayed ones");
  add_string(ch, f, "type", "A2, C2, G2 or all");
  auto* ml = verify->add_subcommand("main-lemma", "Main Lemma factorizations (symbolic, or exhaustive with --ring)");
  for (auto k : {"case", "type", "ring", "ideal_i", "ideal_j"}) add_string(ml, f, k, k);
  auto* lr = verify->add_subcommand("long-root", "short root elements from long root ones");
  for (auto k : {"type", "ring", "ideal"}) add_string(lr, f, k, k);
  auto* lv = verify->add_subcommand("levi", "sampled Levi commutator check");
  for (auto k : {"type", "ring", "ideal_i", "ideal_j"}) add_string(lv, f, k, k);
  add_number(lv, f, "samples", "sample count");

  auto* bf = app.add_subcommand("bruteforce", "subgroup-level statements by enumeration");
  for (auto k : {"stmt", "type", "ring", "ideal_i", "ideal_j"}) add_string(bf, f, k, k);
  add_number(bf, f, "bound", "element bound");
  add_number(bf, f, "candidate_bound", "candidate bound for direct enumeration");

  auto* dc = app.add_subcommand("dump-constants", "structure constant tables");
  add_string(dc, f, "type", "A2, C2, G2 or all");
  dc->add_flag_function("--normalized", [&f](std::int64_t) { f.bools["normalized"] = true; },
                        "also list the per-instance sign normalizations");

  auto* dg = app.add_subcommand("dump-generators", "relative (or, with --ideal-j, mixed) generators");
  for (auto k : {"type", "ring", "ideal_i", "ideal_j"}) add_string(dg, f, k, k);

  auto* fz = app.add_subcommand("factorize", "print one factorization");
  fz->require_subcommand(1);
  auto* fm = fz->add_subcommand("main-lemma", "certified Main Lemma factorization");
  for (auto k : {"case", "type", "alpha", "ring", "xi", "zeta", "eta", "ideal_i", "ideal_j"}) add_string(fm, f, k, k);
  bool symbolic = false;
  fm->add_flag("--symbolic", symbolic, "over Z[xi,zeta,eta] (the default without --ring)");
  auto* fl = fz->add_subcommand("long-root", "long-root decomposition");
  for (auto k : {"type", "beta", "ring", "ideal", "xi"}) add_string(fl, f, k, k);

  auto* cp = app.add_subcommand("campaign", "run a JSON campaign");
  cp->require_subcommand(1);
  auto* cr = cp->add_subcommand("run", "run every task of a campaign file");
  std::string campaign_file;
  cr->add_option("file", campaign_file, "campaign JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  TaskOptions opt{timings, seed};
  auto emit = [&](const json& j) {
    std::string text = j.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(report_path);
      os << text;
    }
  };

  try {
    if (cr->parsed()) {
      std::ifstream is(campaign_file);
      if (!is) throw chevlab::Error(ErrorCode::InvalidArgument, "cannot read " + campaign_file);
      json c;
      try {
        c = json::parse(is);
      } catch (const json::exception& e) {
        throw chevlab::Error(ErrorCode::ParseError, e.what());
      }
      auto res = run_campaign(c, opt);
      emit(res.report);
      return res.exit_code;
    }
    if (st->parsed()) command = "verify steinberg";
    else if (ch->parsed()) command = "verify chevalley";
    else if (ml->parsed()) command = "verify main-lemma";
    else if (lr->parsed()) command = "verify long-root";
    else if (lv->parsed()) command = "verify levi";
    else if (bf->parsed()) command = "bruteforce";
    else if (dc->parsed()) command = "dump-constants";
    else if (dg->parsed()) command = "dump-generators";
    else if (fm->parsed()) command = "factorize main-lemma";
    else command = "factorize long-root";
    json params = params_of(f);
    if (fm->parsed() && symbolic && params.contains("ring"))
      throw chevlab::Error(ErrorCode::InvalidArgument, "--symbolic and --ring exclude each other");
    json result = run_task(command, params, opt);
    emit(result);
    return exit_code_for(result);
  } catch (const std::exception& e) {
    emit(json{{"command", command}, {"error", e.what()}});
    std::cerr << "chevlab: " << e.what() << "\n";
    return 2;
  }
}
