// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "chevlab/factorizer.hpp"
#include "chevlab/subgroupenum.hpp"
#include "chevlab/tasks.hpp"

using namespace chevlab;

namespace {

const TaskOptions kOpt{false, 1};

json run(const std::string& cmd, json params) { return run_task(cmd, std::move(params), kOpt); }

bool verdict(const json& j) { return j.at("verdict").is_boolean() && j.at("verdict").get<bool>(); }

std::size_t size_of(const json& report, const std::string& set) {
  for (const auto& c : report.at("cardinalities"))
    if (c.at("set") == set) return c.at("size").get<std::size_t>();
  return 0;
}

json brute(const char* stmt, const char* type, const char* ring, const char* i, const char* j) {
  return run("bruteforce", {{"stmt", stmt}, {"type", type}, {"ring", ring}, {"ideal_i", i}, {"ideal_j", j}});
}

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("error: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("criterion %2d %s  %s [%s] (%.1f s)\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str(), s);
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "Steinberg relations, A2 C2 G2, symbolic", [](std::string& d) {
    auto r = run("verify steinberg", {{"type", "all"}});
    std::size_t rel = 0;
    for (const auto& s : r["systems"])
      rel += s["additivity_relations"].get<std::size_t>() + s["commutator_relations"].get<std::size_t>();
    d = std::to_string(rel) + " relations";
    return verdict(r) && rel == 6 + 24 + 8 + 48 + 12 + 120;
  });

  criterion(2, "normalized structure constants match the displayed ones", [](std::string& d) {
    auto r = run("verify chevalley", {{"type", "all"}});
    std::size_t inst = 0;
    for (const auto& s : r["systems"]) inst += s["instances"].size();
    // canonical instances, exact values
    auto a2 = normalize_signs(standard_table(SystemType::A2), MainLemmaCase::A2);
    auto c2 = normalize_signs(standard_table(SystemType::C2), MainLemmaCase::C2Short);
    auto g2 = normalize_signs(standard_table(SystemType::G2), MainLemmaCase::G2Short);
    bool a2ok = a2.displayed.size() == 1 && a2.displayed[0].n == 1;
    bool c2ok = c2.displayed.size() == 2 && c2.displayed[0].n == 1 && c2.displayed[1].n == 1;
    std::string sig;
    for (const auto& c : g2.displayed) sig += std::to_string(c.n);
    auto aux = compute_table(g2.rep).get(g2.alpha, g2.beta + g2.gamma * 2, 1, 1);
    d = std::to_string(inst) + " instances; G2 signature " + sig + " (" + std::string(to_string(g2.order)) +
        "), auxiliary constant " + std::to_string(aux);
    return verdict(r) && a2ok && c2ok && sig == "2111" && aux == 3;
  });

  criterion(3, "Main Lemma, four cases over Z[xi,zeta,eta], I=(xi), J=(zeta)", [](std::string& d) {
    bool ok = true;
    for (const char* c : {"A2", "C2Long", "C2Short", "G2Short"}) {
      auto t0 = std::chrono::steady_clock::now();
      auto r = run("verify main-lemma", {{"case", c}});
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto& cs = r["cases"][0];
      d += std::string(d.empty() ? "" : ", ") + c + ": " + std::to_string(cs["factor_count"].get<int>()) + " factors";
      ok = ok && verdict(r) && s < 60;
    }
    return ok;
  });

  criterion(4, "long-root generation, C2 symbolic, G2 exhaustive over Z/9 with I=(3)", [](std::string& d) {
    auto r = run("verify long-root", {{"type", "all"}});
    std::size_t g2runs = 0, maxlen = 0;
    for (const auto& s : r["systems"])
      if (s["system"] == "G2")
        for (const auto& run : s["runs"]) {
          ++g2runs;
          for (auto n : run["term_lengths"]) maxlen = std::max(maxlen, n.get<std::size_t>());
        }
    auto u = unit_decompose(Ring::parse("Z/9"));
    bool unit_ok = u.size() == 1 && u[0].first.to_string() == "2";
    d = std::to_string(g2runs) + " G2 runs, longest term " + std::to_string(maxlen) + " letters, unit (theta=" +
        u[0].first.to_string() + ", r=" + u[0].second.to_string() + ")";
    return verdict(r) && g2runs == 18 && maxlen <= 6 && unit_ok;
  });

  criterion(5, "[E(I),E(J)] = [E(R,I),E(R,J)], A2 over Z/8, I=J=(2) and I=(2), J=(4)", [](std::string& d) {
    Ring R = Ring::parse("Z/8");
    Ambient amb(SystemType::A2, R);
    auto G = enumerate_congruence_subgroup(amb, Ideal::parse(R, "2"), Bounds{});
    auto a = brute("T1", "A2", "Z/8", "2", "2");
    auto b = brute("T1", "A2", "Z/8", "2", "4");
    d = "|G(R,(2))|=" + std::to_string(G.size()) + ", sizes " + std::to_string(size_of(a, "[E(I),E(J)]")) + " and " +
        std::to_string(size_of(b, "[E(I),E(J)]"));
    return G.size() == 65536 && verdict(a) && verdict(b);
  });

  criterion(6, "E(R,IJ) inside [E(I),E(J)], normal in E(R), A2 over Z/8, I=J=(2)", [](std::string& d) {
    auto o1 = brute("O1", "A2", "Z/8", "2", "2");
    auto o2 = brute("O2", "A2", "Z/8", "2", "2");
    d = "|E(R,IJ)|=" + std::to_string(size_of(o1, "E(R,IJ)")) + ", conjugators " +
        std::to_string(size_of(o2, "x_a(t) conjugators"));
    return verdict(o1) && verdict(o2);
  });

  criterion(7, "[E(I),C(R,J)] = [E(I),E(J)] and E(I) normal in C(R,I), A2 over Z/8, I=J=(2)", [](std::string& d) {
    auto t2 = brute("T2", "A2", "Z/8", "2", "2");
    auto t3 = brute("T3", "A2", "Z/8", "2", "2");
    d = "|SL3(F2)|=" + std::to_string(size_of(t2, "G(R/J)")) + ", centre " +
        std::to_string(size_of(t2, "centre of G(R/J)")) + ", |C(R,(2))|=" + std::to_string(size_of(t2, "C(R,J)")) +
        ", |E(I)|=" + std::to_string(size_of(t3, "E(I)"));
    return verdict(t2) && verdict(t3) && size_of(t2, "centre of G(R/J)") == 1 && size_of(t2, "C(R,J)") == 65536;
  });

  criterion(8, "[E(I),E(J)] = [E(R,I),E(R,J)] for C2 over Z/27 and Z/9, I=J=(3); [E(I),C(R,J)] over Z/9", [](std::string& d) {
    Ring R27 = Ring::parse("Z/27");
    auto cs = condition_star(SystemType::C2, R27);
    auto a = brute("T1", "C2", "Z/27", "3", "3");
    auto b = brute("T1", "C2", "Z/9", "3", "3");
    auto c = brute("T2", "C2", "Z/9", "3", "3");
    d = "(*): " + cs.summary() + "; |G(R,(9))|=" + std::to_string(size_of(a, "G(R,IJ)")) + ", sides " +
        std::to_string(size_of(a, "[E(I),E(J)]")) + "/" + std::to_string(size_of(a, "[E(R,I),E(R,J)]")) +
        "; Z/9 sides " + std::to_string(size_of(b, "[E(I),E(J)]")) + "/" +
        std::to_string(size_of(b, "[E(R,I),E(R,J)]")) + ", |C(R,(3))|=" + std::to_string(size_of(c, "C(R,J)"));
    return cs.holds() && verdict(a) && verdict(b) && verdict(c) && size_of(a, "G(R,IJ)") == 59049 &&
           size_of(a, "[E(I),E(J)]") == 59049 && size_of(b, "[E(I),E(J)]") == 1 &&
           size_of(b, "[E(R,I),E(R,J)]") == 1 && size_of(c, "C(R,J)") == 2 * 59049;
  });

  criterion(9, "Levi lemma, 1000 samples per radical", [](std::string& d) {
    bool ok = true;
    struct Run {
      const char *type, *ring, *i, *j;
    };
    for (auto r : {Run{"A2", "Z/8", "2", "2"}, Run{"C2", "Z/27", "3", "3"}, Run{"G2", "Z/27", "3", "3"}}) {
      auto rep = run("verify levi", {{"type", r.type}, {"ring", r.ring}, {"ideal_i", r.i}, {"ideal_j", r.j},
                                     {"samples", 1000}});
      std::size_t v = 0;
      for (const auto& x : rep["runs"]) v += x["violations"].get<std::size_t>();
      d += std::string(d.empty() ? "" : ", ") + r.type + "/" + r.ring + " " + std::to_string(v) + " violations";
      ok = ok && verdict(rep);
    }
    return ok;
  });

  criterion(10, "G2: enumeration declared out of scale; Main Lemma evaluated over Z/9 and Z/27", [](std::string& d) {
    bool stated = false;
    try {
      brute("T1", "G2", "Z/9", "3", "3");
    } catch (const Error& e) {
      stated = e.code() == ErrorCode::UnsupportedType && std::string(e.what()).find("out of desk scale") != std::string::npos;
    }
    auto z9 = run("verify main-lemma", {{"type", "G2"}, {"ring", "Z/9"}, {"ideal_i", "3"}, {"ideal_j", "3"}});
    std::size_t short_instances = 0;
    for (const auto& r : z9["roots"])
      if (r["case"] == "G2Short") short_instances += r["triples"].get<std::size_t>();
    auto z27 = run("verify main-lemma", {{"type", "G2"}, {"ring", "Z/27"}, {"ideal_i", "3"}, {"ideal_j", "3"}});
    d = std::string(stated ? "out-of-scale stated" : "no out-of-scale statement") + "; Z/9: " +
        std::to_string(short_instances) + " short-root / " + std::to_string(z9["instances"].get<std::size_t>()) +
        " total instances; Z/27: " + std::to_string(z27["instances"].get<std::size_t>()) + " instances, up to " +
        std::to_string(z27["max_factor_count"].get<std::size_t>()) + " factors";
    return stated && verdict(z9) && verdict(z27) && short_instances == 486;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
