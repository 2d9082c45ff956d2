#include "chevlab/tasks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "chevlab/factorizer.hpp"
#include "chevlab/subgroupenum.hpp"

namespace chevlab {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"verify steinberg", {"type"}},
      {"verify chevalley", {"type"}},
      {"verify main-lemma", {"case", "type", "ring", "ideal_i", "ideal_j"}},
      {"verify long-root", {"type", "ring", "ideal"}},
      {"verify levi", {"type", "ring", "ideal_i", "ideal_j", "samples", "seed"}},
      {"bruteforce", {"stmt", "type", "ring", "ideal_i", "ideal_j", "bound", "candidate_bound"}},
      {"dump-constants", {"type", "normalized"}},
      {"dump-generators", {"type", "ring", "ideal_i", "ideal_j"}},
      {"factorize main-lemma", {"case", "type", "alpha", "ring", "xi", "zeta", "eta", "ideal_i", "ideal_j"}},
      {"factorize long-root", {"type", "beta", "ring", "ideal", "xi"}},
  };
  return s;
}

const std::set<std::string> kIntParams = {"samples", "seed", "bound", "candidate_bound"};
const std::set<std::string> kBoolParams = {"normalized"};

std::string str(const json& p, const char* k, const std::string& def) {
  return p.contains(k) ? p.at(k).get<std::string>() : def;
}

std::uint64_t num(const json& p, const char* k, std::uint64_t def) {
  return p.contains(k) ? p.at(k).get<std::uint64_t>() : def;
}

std::vector<SystemType> types_of(const std::string& s) {
  if (s == "all") return {SystemType::A2, SystemType::C2, SystemType::G2};
  return {parse_system_type(s)};
}

std::vector<MainLemmaCase> cases_of(const std::string& s) {
  if (s == "all") return {MainLemmaCase::A2, MainLemmaCase::C2Long, MainLemmaCase::C2Short, MainLemmaCase::G2Short};
  return {parse_case(s)};
}

json constants_json(const std::vector<StructureConstant>& cs) {
  json out = json::array();
  for (const auto& c : cs)
    out.push_back({{"alpha", c.alpha.name()}, {"beta", c.beta.name()}, {"i", c.i}, {"j", c.j}, {"n", c.n}});
  return out;
}

json checks_json(const std::vector<NamedCheck>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"check", c.name}, {"pass", c.pass}});
  return out;
}

json factorization_json(const CertifiedFactorization& f, const FactorizationCheck& chk) {
  json factors = json::array();
  for (const auto& [w, c] : f.factors) factors.push_back({{"word", w.to_string()}, {"certificate", c.to_string()}});
  return {{"case", to_string(f.main_case)},
          {"alpha", f.alpha.name()},
          {"beta", f.beta.name()},
          {"gamma", f.gamma.name()},
          {"order", to_string(f.normalization.order)},
          {"signs", f.normalization.signs},
          {"target", f.target.to_string()},
          {"tail", f.tail.to_string()},
          {"identity", f.identity},
          {"factors", factors},
          {"factor_count", chk.factor_count},
          {"product_equal", chk.product_equal},
          {"certificates_valid", chk.certificates_valid},
          {"verdict", chk.ok()}};
}

// [x_b(s), x_g(t)] in the normalized representation against the displayed
// constants, symbolically.
bool displayed_form_holds(const SignNormalization& sn) {
  static const Ring P = Ring::parse("Z[s,t]");
  RingElement s(P, P.variable(0)), t(P, P.variable(1));
  Word rhs(P);
  for (const auto& c : sn.displayed)
    rhs = rhs * Word::x(sn.beta * c.i + sn.gamma * c.j, RingElement::from_int(P, c.n) * s.pow(c.i) * t.pow(c.j));
  return commutator(Word::x(sn.beta, s), Word::x(sn.gamma, t)).evaluate(sn.rep) == rhs.evaluate(sn.rep);
}

json verify_steinberg_task(const json& p) {
  json systems = json::array();
  bool all = true;
  for (auto t : types_of(str(p, "type", "all"))) {
    auto r = verify_steinberg(Representation::standard(t));
    json failures = json::array();
    for (const auto* list : {&r.additivity, &r.commutators})
      for (const auto& rel : *list)
        if (!rel.pass) failures.push_back(rel.relation);
    systems.push_back({{"system", to_string(t)},
                       {"additivity_relations", r.additivity.size()},
                       {"commutator_relations", r.commutators.size()},
                       {"failures", failures},
                       {"verdict", r.all_pass()}});
    all = all && r.all_pass();
  }
  return {{"systems", systems}, {"verdict", all}};
}

json verify_chevalley_task(const json& p) {
  json systems = json::array();
  bool all = true;
  for (auto t : types_of(str(p, "type", "all"))) {
    const auto& table = standard_table(t);
    json instances = json::array();
    bool ok = true;
    for (const auto& [c, alpha] : main_lemma_instances(t)) {
      json inst = {{"case", to_string(c)}, {"alpha", alpha.name()}};
      try {
        auto sn = normalize_signs(table, c, alpha);
        bool form = displayed_form_holds(sn);
        inst["beta"] = sn.beta.name();
        inst["gamma"] = sn.gamma.name();
        inst["order"] = to_string(sn.order);
        inst["displayed"] = constants_json(sn.displayed);
        inst["displayed_form_holds"] = form;
        bool pass = form;
        if (c == MainLemmaCase::G2Short) {
          // [x_a(s), x_{b+2g}(t)] = x_{2b+3g}(3st)
          StructureConstantTable nt = compute_table(sn.rep);
          auto aux = nt.pair(alpha, sn.beta + sn.gamma * 2);
          bool aux_ok = aux.size() == 1 && aux[0].i == 1 && aux[0].j == 1 && aux[0].n == 3;
          inst["auxiliary"] = constants_json(aux);
          inst["auxiliary_holds"] = aux_ok;
          pass = pass && aux_ok;
        }
        inst["verdict"] = pass;
        ok = ok && pass;
      } catch (const Error& e) {
        inst["error"] = e.what();
        inst["verdict"] = false;
        ok = false;
      }
      instances.push_back(inst);
    }
    auto global = find_global_normalization(table, main_lemma_instances(t));
    systems.push_back({{"system", to_string(t)},
                       {"instances", instances},
                       {"single_global_sign_choice", global.exists},
                       {"verdict", ok}});
    all = all && ok;
  }
  return {{"systems", systems}, {"verdict", all}};
}

json verify_main_lemma_task(const json& p) {
  if (!p.contains("ring")) {
    json cases = json::array();
    bool all = true;
    for (auto c : cases_of(str(p, "case", "all"))) {
      auto s = symbolic_main_lemma(c);
      auto chk = check_factorization(s.factorization, s.I, s.J);
      json j = factorization_json(s.factorization, chk);
      j["ring"] = s.I.ring().to_string();
      j["ideal_i"] = s.I.to_string();
      j["ideal_j"] = s.J.to_string();
      cases.push_back(j);
      all = all && chk.ok();
    }
    return {{"mode", "symbolic"}, {"cases", cases}, {"verdict", all}};
  }
  // exhaustive evaluation over a finite ring, every root of the system
  SystemType t = parse_system_type(str(p, "type", "G2"));
  Ring R = Ring::parse(str(p, "ring", ""));
  Ideal I = Ideal::parse(R, str(p, "ideal_i", "0")), J = Ideal::parse(R, str(p, "ideal_j", "0"));
  auto iv = enumerate_ideal(I), jv = enumerate_ideal(J), rv = enumerate_elements(R);
  json roots = json::array();
  std::size_t total = 0, failed = 0, max_factors = 0;
  json failures = json::array();
  for (const auto& [c, alpha] : main_lemma_instances(t)) {
    std::size_t n = 0, bad = 0;
    for (const auto& xi : iv)
      for (const auto& zeta : jv)
        for (const auto& eta : rv) {
          ++n;
          bool ok = false;
          try {
            auto f = main_lemma_word(t, c, alpha, xi, zeta, eta, I, J);
            auto chk = check_factorization(f, I, J);
            max_factors = std::max(max_factors, chk.factor_count);
            ok = chk.ok();
          } catch (const Error& e) {
            if (failures.size() < 5) failures.push_back(e.what());
          }
          if (!ok) {
            ++bad;
            if (failures.size() < 5)
              failures.push_back(alpha.name() + " xi=" + xi.to_string() + " zeta=" + zeta.to_string() +
                                 " eta=" + eta.to_string());
          }
        }
    roots.push_back({{"alpha", alpha.name()}, {"case", to_string(c)}, {"triples", n}, {"failures", bad}});
    total += n;
    failed += bad;
  }
  return {{"mode", "finite"},
          {"system", to_string(t)},
          {"ring", R.to_string()},
          {"ideal_i", I.to_string()},
          {"ideal_j", J.to_string()},
          {"condition_star", condition_star(t, R).summary()},
          {"roots", roots},
          {"instances", total},
          {"failed", failed},
          {"max_factor_count", max_factors},
          {"failure_examples", failures},
          {"verdict", failed == 0}};
}

json long_root_json(SystemType t, const Root& b, const RingElement& xi, const Ideal& I) {
  auto d = long_root_decomposition(t, b, xi, I);
  auto chk = check_long_root(t, d, xi, I);
  std::size_t limit = t == SystemType::C2 ? 3 : 6;
  bool short_enough = std::all_of(d.term_lengths.begin(), d.term_lengths.end(), [&](auto n) { return n <= limit; });
  json units = json::array();
  for (const auto& [th, r] : d.units) units.push_back({{"theta", th.to_string()}, {"r", r.to_string()}});
  return {{"beta", b.name()},
          {"xi", xi.to_string()},
          {"word", d.word.to_string()},
          {"term_lengths", d.term_lengths},
          {"units", units},
          {"identity", d.identity},
          {"evaluates", chk.evaluates},
          {"long_letters_only", chk.long_letters_only},
          {"coefficients_in_ideal", chk.coefficients_in_ideal},
          {"verdict", chk.ok() && short_enough}};
}

json verify_long_root_task(const json& p) {
  json systems = json::array();
  bool all = true;
  std::string ts = str(p, "type", "all");
  std::vector<SystemType> types = ts == "all" ? std::vector<SystemType>{SystemType::C2, SystemType::G2}
                                              : std::vector<SystemType>{parse_system_type(ts)};
  for (auto t : types) {
    const auto& rs = RootSystem::get(t);
    // C2 symbolically unless a ring is given; G2 needs a finite ring
    std::string ring = str(p, "ring", t == SystemType::C2 ? "Z[xi]" : "Z/9");
    Ring R = Ring::parse(ring);
    Ideal I = Ideal::parse(R, str(p, "ideal", R.is_polynomial() ? "xi" : "3"));
    std::vector<RingElement> xis =
        R.is_finite() ? enumerate_ideal(I) : std::vector<RingElement>{I.generators().front()};
    json runs = json::array();
    bool ok = true;
    for (const auto& b : rs.roots()) {
      if (t == SystemType::A2 || rs.is_long(b)) continue;
      for (const auto& xi : xis) {
        json r = long_root_json(t, b, xi, I);
        ok = ok && r["verdict"].get<bool>();
        runs.push_back(r);
      }
    }
    json sys = {{"system", to_string(t)}, {"ring", R.to_string()}, {"ideal", I.to_string()}, {"runs", runs}};
    if (R.is_finite() && t == SystemType::G2) {
      json units = json::array();
      for (const auto& [th, r] : unit_decompose(R)) units.push_back({{"theta", th.to_string()}, {"r", r.to_string()}});
      sys["unit_decomposition"] = units;
    }
    sys["verdict"] = ok;
    systems.push_back(sys);
    all = all && ok;
  }
  return {{"systems", systems}, {"verdict", all}};
}

json verify_levi_task(const json& p, const TaskOptions& opt) {
  SystemType t = parse_system_type(str(p, "type", "A2"));
  Ring R = Ring::parse(str(p, "ring", "Z/8"));
  Ideal I = Ideal::parse(R, str(p, "ideal_i", "2")), J = Ideal::parse(R, str(p, "ideal_j", "2"));
  std::size_t samples = num(p, "samples", 1000);
  std::uint64_t seed = num(p, "seed", opt.seed);
  json runs = json::array();
  bool all = true;
  for (int r : {1, 2})
    for (bool minus : {false, true}) {
      auto rep = levi_commutator_check(ParabolicData::make(t, r), I, J, samples, minus, seed);
      runs.push_back({{"r", r},
                      {"radical", minus ? "U-" : "U"},
                      {"samples", rep.samples},
                      {"violations", rep.violations},
                      {"examples", rep.examples}});
      all = all && rep.violations == 0;
    }
  return {{"system", to_string(t)}, {"ring", R.to_string()}, {"ideal_i", I.to_string()},
          {"ideal_j", J.to_string()}, {"ideal_ij", (I * J).to_string()}, {"seed", seed},
          {"runs", runs},           {"verdict", all}};
}

json bruteforce_task(const json& p, const TaskOptions& opt) {
  Statement st = parse_statement(str(p, "stmt", "T1"));
  SystemType t = parse_system_type(str(p, "type", "A2"));
  Ring R = Ring::parse(str(p, "ring", "Z/8"));
  Ideal I = Ideal::parse(R, str(p, "ideal_i", "2")), J = Ideal::parse(R, str(p, "ideal_j", "2"));
  Bounds b;
  b.elements = num(p, "bound", b.elements);
  b.candidates = num(p, "candidate_bound", b.candidates);
  auto r = verify_theorem(st, t, I, J, b);
  json cards = json::array();
  for (const auto& [k, v] : r.cardinalities) cards.push_back({{"set", k}, {"size", v}});
  json out = {{"stmt", to_string(st)},   {"system", to_string(t)},         {"ring", r.ring},
              {"ideal_i", r.ideal_i},    {"ideal_j", r.ideal_j},           {"cardinalities", cards},
              {"checks", checks_json(r.checks)}, {"condition_star", r.condition_star},
              {"generator_hash", r.generator_hash}, {"verdict", r.verdict}};
  if (opt.timings) {
    json tm = json::array();
    for (const auto& [k, v] : r.timings) tm.push_back({{"step", k}, {"seconds", v}});
    out["step_timings"] = tm;
  }
  return out;
}

json dump_constants_task(const json& p) {
  json systems = json::array();
  bool normalized = p.value("normalized", false);
  for (auto t : types_of(str(p, "type", "all"))) {
    const auto& table = standard_table(t);
    json sys = {{"system", to_string(t)}, {"order", to_string(ProductOrder::IncreasingHeight)},
                {"constants", constants_json(table.entries())}};
    if (normalized) {
      json inst = json::array();
      for (const auto& [c, alpha] : main_lemma_instances(t)) {
        auto sn = normalize_signs(table, c, alpha);
        inst.push_back({{"case", to_string(c)},
                        {"alpha", alpha.name()},
                        {"order", to_string(sn.order)},
                        {"signs", sn.signs},
                        {"displayed", constants_json(sn.displayed)}});
      }
      sys["normalizations"] = inst;
    }
    systems.push_back(sys);
  }
  return {{"systems", systems}, {"verdict", nullptr}};
}

json dump_generators_task(const json& p) {
  SystemType t = parse_system_type(str(p, "type", "A2"));
  Ring R = Ring::parse(str(p, "ring", "Z/8"));
  Ideal I = Ideal::parse(R, str(p, "ideal_i", "2"));
  json out = {{"system", to_string(t)}, {"ring", R.to_string()}, {"ideal_i", I.to_string()}};
  if (!p.contains("ideal_j")) {
    json ws = json::array();
    for (const auto& w : relative_generators(t, I)) ws.push_back(w.to_string());
    out["kind"] = "relative";
    out["count"] = ws.size();
    out["generators"] = ws;
  } else {
    Ideal J = Ideal::parse(R, str(p, "ideal_j", ""));
    auto m = mixed_commutator_generators(t, I, J);
    json gs = json::array();
    for (const auto& g : m.generators) {
      json e = {{"bullet", g.bullet}, {"word", g.word.to_string()}};
      e["certificate"] = g.certificate ? json(g.certificate->to_string()) : json("pending main lemma");
      gs.push_back(e);
    }
    out["kind"] = "mixed";
    out["ideal_j"] = J.to_string();
    out["condition_star"] = m.condition.summary();
    out["condition_star_holds"] = m.condition.holds();
    if (!m.warning.empty()) out["warning"] = m.warning;
    out["count"] = gs.size();
    out["generators"] = gs;
  }
  out["verdict"] = nullptr;
  return out;
}

json factorize_main_lemma_task(const json& p) {
  MainLemmaCase c = parse_case(str(p, "case", "A2"));
  if (!p.contains("ring")) {
    SystemType t = p.contains("type") ? parse_system_type(str(p, "type", "")) : RootSystem::home_system(c);
    Root alpha = p.contains("alpha") ? Root::parse(str(p, "alpha", "")) : RootSystem::canonical_root(c);
    auto s = symbolic_main_lemma(t, c, alpha);
    json j = factorization_json(s.factorization, check_factorization(s.factorization, s.I, s.J));
    j["ring"] = s.I.ring().to_string();
    j["ideal_i"] = s.I.to_string();
    j["ideal_j"] = s.J.to_string();
    return j;
  }
  SystemType t = parse_system_type(str(p, "type", std::string(to_string(RootSystem::home_system(c)))));
  Root alpha = p.contains("alpha") ? Root::parse(str(p, "alpha", "")) : RootSystem::canonical_root(c);
  Ring R = Ring::parse(str(p, "ring", ""));
  Ideal I = Ideal::parse(R, str(p, "ideal_i", "0")), J = Ideal::parse(R, str(p, "ideal_j", "0"));
  auto xi = RingElement::parse(R, str(p, "xi", "0"));
  auto zeta = RingElement::parse(R, str(p, "zeta", "0"));
  auto eta = RingElement::parse(R, str(p, "eta", "0"));
  if (!I.contains(xi) || !J.contains(zeta))
    throw Error(ErrorCode::InvalidArgument, "need xi in I and zeta in J");
  auto f = main_lemma_word(t, c, alpha, xi, zeta, eta, I, J);
  json j = factorization_json(f, check_factorization(f, I, J));
  j["ring"] = R.to_string();
  j["ideal_i"] = I.to_string();
  j["ideal_j"] = J.to_string();
  j["condition_star"] = condition_star(t, R).summary();
  return j;
}

json factorize_long_root_task(const json& p) {
  SystemType t = parse_system_type(str(p, "type", "C2"));
  Ring R = Ring::parse(str(p, "ring", t == SystemType::G2 ? "Z/9" : "Z[xi]"));
  Ideal I = Ideal::parse(R, str(p, "ideal", R.is_polynomial() ? "xi" : "3"));
  auto xi = p.contains("xi") ? RingElement::parse(R, str(p, "xi", "")) : I.generators().front();
  const auto& rs = RootSystem::get(t);
  json runs = json::array();
  bool all = true;
  for (const auto& b : rs.roots()) {
    if (p.contains("beta") ? !(b == Root::parse(str(p, "beta", ""))) : (t == SystemType::A2 || rs.is_long(b)))
      continue;
    json r = long_root_json(t, b, xi, I);
    all = all && r["verdict"].get<bool>();
    runs.push_back(r);
  }
  if (runs.empty()) throw Error(ErrorCode::NotShortRoot, "no short root selected in " + std::string(to_string(t)));
  return {{"system", to_string(t)}, {"ring", R.to_string()}, {"ideal", I.to_string()}, {"runs", runs},
          {"verdict", all}};
}

}  // namespace

const std::vector<std::string>& task_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : schema()) v.push_back(k);
    return v;
  }();
  return names;
}

void validate_task(const std::string& command, const json& params) {
  auto it = schema().find(command);
  if (it == schema().end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  if (!params.is_object()) throw Error(ErrorCode::InvalidArgument, command + ": params must be an object");
  for (const auto& [k, v] : params.items()) {
    if (!it->second.count(k)) throw Error(ErrorCode::InvalidArgument, command + ": unknown parameter '" + k + "'");
    bool ok = kIntParams.count(k) ? (v.is_number_integer() && v.get<std::int64_t>() >= 0) : kBoolParams.count(k) ? v.is_boolean() : v.is_string();
    if (!ok) throw Error(ErrorCode::InvalidArgument, command + ": bad value for '" + k + "'");
  }
  // parse what can be parsed up front
  if (params.contains("type") && params["type"] != "all") parse_system_type(params["type"].get<std::string>());
  if (params.contains("case") && params["case"] != "all") parse_case(params["case"].get<std::string>());
  if (params.contains("stmt")) parse_statement(params["stmt"].get<std::string>());
  if (params.contains("ring")) {
    Ring R = Ring::parse(params["ring"].get<std::string>());
    for (const char* k : {"ideal", "ideal_i", "ideal_j"})
      if (params.contains(k)) Ideal::parse(R, params[k].get<std::string>());
    for (const char* k : {"xi", "zeta", "eta"})
      if (params.contains(k)) R.parse_value(params[k].get<std::string>());
  }
  for (const char* k : {"alpha", "beta"})
    if (params.contains(k)) Root::parse(params[k].get<std::string>());
}

json run_task(const std::string& command, const json& params, const TaskOptions& opt) {
  validate_task(command, params);
  auto start = std::chrono::steady_clock::now();
  json out;
  if (command == "verify steinberg") out = verify_steinberg_task(params);
  else if (command == "verify chevalley") out = verify_chevalley_task(params);
  else if (command == "verify main-lemma") out = verify_main_lemma_task(params);
  else if (command == "verify long-root") out = verify_long_root_task(params);
  else if (command == "verify levi") out = verify_levi_task(params, opt);
  else if (command == "bruteforce") out = bruteforce_task(params, opt);
  else if (command == "dump-constants") out = dump_constants_task(params);
  else if (command == "dump-generators") out = dump_generators_task(params);
  else if (command == "factorize main-lemma") out = factorize_main_lemma_task(params);
  else out = factorize_long_root_task(params);
  out["command"] = command;
  out["params"] = params;
  if (opt.timings)
    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int exit_code_for(const json& result) {
  const auto& v = result.at("verdict");
  return v.is_boolean() && !v.get<bool>() ? 1 : 0;
}

CampaignResult run_campaign(const json& campaign, const TaskOptions& opt) {
  if (!campaign.is_object()) throw Error(ErrorCode::InvalidArgument, "campaign must be a JSON object");
  TaskOptions o = opt;
  if (campaign.contains("seed")) o.seed = campaign.at("seed").get<std::uint64_t>();
  json tasks = campaign.value("tasks", json::array());
  if (!tasks.is_array()) throw Error(ErrorCode::InvalidArgument, "tasks must be an array");
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const auto& t = tasks[k];
    if (!t.is_object() || !t.contains("command") || !t["command"].is_string())
      throw Error(ErrorCode::InvalidArgument, "task " + std::to_string(k) + ": missing command");
    try {
      validate_task(t["command"].get<std::string>(), t.value("params", json::object()));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidArgument, "task " + std::to_string(k) + ": " + e.what());
    }
  }
  CampaignResult res;
  json results = json::array();
  for (const auto& t : tasks) {
    std::string cmd = t["command"].get<std::string>();
    json params = t.value("params", json::object());
    try {
      json r = run_task(cmd, params, o);
      res.exit_code = std::max(res.exit_code, exit_code_for(r));
      results.push_back(r);
    } catch (const Error& e) {
      res.exit_code = 2;
      results.push_back({{"command", cmd}, {"params", params}, {"error", e.what()}, {"verdict", false}});
    }
  }
  bool all = res.exit_code == 0;
  res.report = {{"seed", o.seed}, {"tasks", results}, {"all_pass", all}};
  return res;
}

}  // namespace chevlab
