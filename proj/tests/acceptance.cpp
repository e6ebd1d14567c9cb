// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "polytwo/catalog.hpp"
#include "polytwo/suites.hpp"

using namespace polytwo;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

struct Entry {
  std::string name;
  Analysis an;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> v = [] {
    std::vector<Entry> out;
    for (const auto& e : catalog()) out.push_back({e.name, analyze(e.builder())});
    return out;
  }();
  return v;
}

const Analysis& entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e.an;
  throw PolytopeError(ErrorCode::UnknownSource, name);
}

void require_suite(Outcome& o, const std::string& entry_name, const SuiteReport& rep) {
  for (const auto& c : rep.checks) o.expect(c.pass(), entry_name + ": " + c.name + " failed (" + c.detail + ")");
}

std::size_t checked(const SuiteReport& rep, const std::string& name) {
  const Check* c = rep.find(name);
  return c && c->verdict == Verdict::Pass ? c->instances : 0;
}

Outcome classification() {
  Outcome o;
  struct Named {
    const char* name;
    const char* cls;
    const char* symbol;
  };
  for (auto [name, cls, sym] : {Named{"cuboctahedron", "2_{0,1}", "(3,4)/(4,4)"}, Named{"icosidodecahedron", "2_{0,1}", "(3,4)/(5,4)"},
                                Named{"rhombic_dodecahedron", "2_{1,2}", "(4,3)/(4,4)"},
                                Named{"rhombic_triacontahedron", "2_{1,2}", "(4,3)/(4,5)"}}) {
    const auto& cp = entry(name).profile;
    o.expect(cp.class_name() == cls, std::string(name) + " is " + cp.class_name());
    o.expect(cp.symbol && cp.symbol->normalized().to_string() == sym,
             std::string(name) + " symbol " + (cp.symbol ? cp.symbol->normalized().to_string() : "none"));
  }
  for (const char* name : {"hemicuboctahedron", "hemiicosidodecahedron"}) {
    const auto& cp = entry(name).profile;
    o.expect(cp.two_orbit() && !cp.chiral, std::string(name) + " is " + cp.class_name());
  }
  o.note = o.pass ? "rhombic class computed as " + entry("rhombic_dodecahedron").profile.class_name() : o.note;
  return o;
}

Outcome chirality() {
  Outcome o;
  auto p = torus_44(2, 1);
  auto an = analyze(p);
  const auto& cp = an.profile;
  const auto ref = oracle::profile(p);
  o.expect(cp.chiral && cp.class_name() == "2_{}", "class " + cp.class_name());
  o.expect(cp.group_order == 20 && ref.group_order == 20, "group order " + std::to_string(cp.group_order));
  o.expect(cp.flag_count == 40 && ref.flags == 40, "flags " + std::to_string(cp.flag_count));
  o.expect(ref.chiral && ref.orbits == 2, "oracle disagrees");
  auto ft = face_transitivity_report(an);
  o.expect(ft.pass && ft.orbit_counts == std::vector<std::size_t>{1, 1, 1}, "not fully transitive");
  return o;
}

Outcome theorem_suites() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& [name, an] : entries()) {
    if (an.profile.orbit_count > 2) continue;
    auto rep = classifier_suite(an);
    require_suite(o, name, rep);
    for (const char* c : {"section classes", "chain orbits", "class well-definedness", "parity"})
      o.expect(rep.find(c) != nullptr, name + ": missing " + c);
    if (an.profile.two_orbit())
      for (const char* c : {"face transitivity", "section orbits"}) o.expect(checked(rep, c) > 0, name + ": " + c + " unchecked");
    for (const auto& c : rep.checks) instances += c.instances;
  }
  if (o.pass) o.note = std::to_string(instances) + " instances";
  return o;
}

Outcome generator_machinery() {
  Outcome o;
  std::map<std::string, std::size_t> families;
  for (const auto& [name, an] : entries()) {
    if (an.profile.orbit_count > 2) continue;
    auto rep = relations_suite(an);
    require_suite(o, name, rep);
    o.expect(checked(rep, "generation") == 1, name + ": generation unchecked");
    o.expect(checked(rep, "factorization") >= kFactorSamples, name + ": too few factorizations");
    if (!an.deficient_set().empty()) o.expect(checked(rep, "rebase") > 0, name + ": rebase unchecked");
    for (const auto& c : rep.checks) families[c.name] += c.verdict == Verdict::Pass ? c.instances : 0;
  }
  for (const char* fam : {"string relations", "relations (a)", "relations (b)", "relations (c)", "relations (d)", "relations (e)",
                          "relations (f)"})
    o.expect(families[fam] > 0, std::string("no instance of ") + fam);
  return o;
}

Outcome stabilizer_machinery() {
  Outcome o;
  std::size_t primed = 0;
  for (const auto& [name, an] : entries()) {
    if (an.profile.orbit_count > 2) continue;
    auto st = stabilizers_suite(an);
    require_suite(o, name, st);
    require_suite(o, name, intersections_suite(an));
    o.expect(checked(st, "stabilizers") > 0, name + ": stabilizers unchecked");
    for (const auto& c : st.checks) primed += c.name.rfind("intertwine", 0) == 0 ? c.instances : 0;
  }
  o.expect(primed > 0, "intertwine never exercised");
  return o;
}

Outcome deficiency_identities() {
  Outcome o;
  for (const char* name : {"cuboctahedron", "icosidodecahedron"}) {
    const auto& an = entry(name);
    o.expect(an.deficient_set() == RankSet{2}, std::string(name) + ": special rank is not 2");
    auto rep = deficiency_suite(an);
    require_suite(o, name, rep);
    o.expect(checked(rep, "rd1 lower identity") > 0, std::string(name) + ": lower identity unchecked");
  }
  for (const char* name : {"rhombic_dodecahedron", "rhombic_triacontahedron"}) {
    const auto& an = entry(name);
    o.expect(an.deficient_set() == RankSet{0}, std::string(name) + ": special rank is not 0");
    auto rep = deficiency_suite(an);
    require_suite(o, name, rep);
    o.expect(checked(rep, "rd1 upper identity") > 0, std::string(name) + ": upper identity unchecked");
  }
  const auto& search = detail::rd2_search();
  std::size_t specimens = 0;
  for (const auto& h : search.hits) {
    auto an = analyze(torus_44_lattice(h.lattice.a, h.lattice.b, h.lattice.c));
    auto rep = deficiency_suite(an);
    const std::string name = "lattice " + std::to_string(h.lattice.a) + "," + std::to_string(h.lattice.b) + "," + std::to_string(h.lattice.c);
    require_suite(o, name, rep);
    o.expect(checked(rep, "rd2 empty coset") > 0 && checked(rep, "rd2 conjugate coset") > 0, name + ": rd2 identities unchecked");
    ++specimens;
  }
  if (o.pass)
    o.note = "search to index " + std::to_string(kSearchIndex) + ": " + std::to_string(search.lattices) + " lattices, " +
             std::to_string(search.degenerate) + " degenerate, " + std::to_string(specimens) + " class 2_{1} specimens";
  return o;
}

Outcome order_reconstruction() {
  Outcome o;
  for (const auto& [name, an] : entries()) {
    if (an.profile.orbit_count > 2) continue;
    require_suite(o, name, order_suite(an));
  }
  auto rec = rebuild_order(entry("cuboctahedron"));
  o.expect(rec.base_counts == std::vector<std::size_t>{1, 12, 24, 8, 1}, "cuboctahedron base coset counts");
  o.expect(rec.adjacent_counts == std::vector<std::size_t>{0, 0, 0, 6, 0}, "cuboctahedron adjacent coset counts");
  return o;
}

Outcome axioms() {
  Outcome o;
  for (const auto& [name, an] : entries()) require_suite(o, name, axiom_suite(an));
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "classification of named examples", classification},
      {"AC2", "chirality witness torus_44(2,1)", chirality},
      {"AC3", "classifier theorem suites", theorem_suites},
      {"AC4", "generator machinery", generator_machinery},
      {"AC5", "stabilizer machinery", stabilizer_machinery},
      {"AC6", "deficiency identities", deficiency_identities},
      {"AC7", "order reconstruction", order_reconstruction},
      {"AC8", "flag-level axioms", axioms},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("error: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %s %s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.note.empty() ? "" : " -- ", o.note.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - failed, secs);
  return failed == 0 ? 0 : 1;
}
