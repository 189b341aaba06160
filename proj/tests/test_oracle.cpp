#include <doctest.h>

#include <map>

#include "hallmark/oracle.hpp"

using namespace hallmark;
using namespace hallmark::oracle;

namespace {

arith::PrimeSet ps(std::initializer_list<arith::Int> v) {
  return arith::PrimeSet(std::vector<arith::Int>(v));
}

}  // namespace

TEST_CASE("corpus contents and tiers") {
  const auto& corpus = builtin_corpus();
  for (const char* name : {"A5", "A6", "PSL(2,7)", "PGL(2,7)", "PSL(2,8)", "PSL(2,17)",
                           "PSL(2,31)", "PSL(3,3)"}) {
    const CorpusEntry* e = find_corpus_entry(name);
    REQUIRE(e != nullptr);
    CHECK(e->tier == Tier::Core);
  }
  for (const char* name : {"PSU(3,3)", "PSU(3,4)"}) {
    const CorpusEntry* e = find_corpus_entry(name);
    REQUIRE(e != nullptr);
    CHECK(e->tier == Tier::Stretch);
  }
  CHECK(find_corpus_entry("M11") == nullptr);
  // Tier size guideline: core entries stay affordable, stretch below 1e5.
  for (const auto& e : corpus) {
    arith::Int order = e.construct().order();
    if (e.tier == Tier::Core) CHECK(order <= 20'000);
    CHECK(order <= 100'000);
  }
}

TEST_CASE("run_examples without the stretch tier skips loudly") {
  auto rep = run_examples(false);
  CHECK(rep.disagreements() == 0);
  long stretch_skips = 0;
  for (const auto& row : rep.rows) {
    if (row.group == "PSU(3,4)") {
      CHECK(row.oracle.rfind("skipped", 0) == 0);
      CHECK(row.oracle.find("stretch") != std::string::npos);
      CHECK(row.expected.rfind("hallfact:", 0) == 0);  // facts still asserted
      ++stretch_skips;
    }
  }
  CHECK(stretch_skips == 4);
}

TEST_CASE("run_examples core rows reproduce the quoted facts") {
  auto rep = run_examples(false);
  auto find_row = [&](const std::string& g, const std::string& pi,
                      const std::string& prop) -> const ReportRow* {
    for (const auto& r : rep.rows)
      if (r.group == g && r.pi == pi && r.property == prop) return &r;
    return nullptr;
  };
  REQUIRE(find_row("PSL(2,7)", "{2,3}", "E"));
  CHECK(find_row("PSL(2,7)", "{2,3}", "E")->oracle == "yes");
  CHECK(find_row("PSL(2,7)", "{3,7}", "E")->oracle == "yes");
  CHECK(find_row("PSL(2,7)", "{2,7}", "E")->oracle == "no");
  CHECK(find_row("PSL(2,7)", "{2,3}", "hall-classes")->oracle == "2");
  CHECK(find_row("PSL(2,7)", "{2,3}", "C")->oracle == "no");
  CHECK(find_row("PSL(2,7)", "{2,3}", "D")->oracle == "no");
  CHECK(find_row("PGL(2,7)", "{2,3}", "E")->oracle == "no");
  CHECK(find_row("PGL(2,7)", "-", "factors")->oracle == "C2,PSL(2,7)");
  CHECK(find_row("PGL(2,7)", "-", "factors")->agreement == "yes");
  CHECK(find_row("PSL(2,8)", "{2,7}", "E")->oracle == "yes");
}

TEST_CASE("oracle class membership matches hand facts") {
  PermGroup psl27 = catalog::construct_by_label("PSL(2,7)");
  std::string why;
  CHECK(class_membership(psl27, classifier::GroupClass::U, ps({3}), {}, &why) == true);
  CHECK(class_membership(psl27, classifier::GroupClass::HatU, ps({3}), {}, &why) == false);
  CHECK(class_membership(psl27, classifier::GroupClass::HatVStar, ps({7}), {}, &why) == true);
  CHECK(class_membership(psl27, classifier::GroupClass::DPiPiPrime, ps({2}), {}, &why) ==
        true);
  CHECK(class_membership(psl27, classifier::GroupClass::DPiPiPrime, ps({3}), {}, &why) ==
        false);

  PermGroup pgl27 = catalog::construct_by_label("PGL(2,7)");
  CHECK(class_membership(pgl27, classifier::GroupClass::U, ps({3}), {}, &why) == false);
}

TEST_CASE("crosscheck of one entry agrees per row and respects D => C => E") {
  const CorpusEntry* e = find_corpus_entry("A5");
  REQUIRE(e);
  auto rep = crosscheck(*e, ps({2, 3}));
  CHECK(rep.disagreements() == 0);
  std::string evalue, cvalue, dvalue;
  for (const auto& r : rep.rows) {
    if (r.property == "E") evalue = r.oracle;
    if (r.property == "C") cvalue = r.oracle;
    if (r.property == "D") dvalue = r.oracle;
  }
  CHECK(evalue == "yes");
  CHECK(cvalue == "yes");  // single class of A4s
  CHECK(dvalue == "no");   // S3 escapes every A4
}

TEST_CASE("full core sweep is disagreement-free and deterministic") {
  auto rep1 = full_sweep(2, false);
  CHECK(rep1.disagreements() == 0);
  CHECK(rep1.rows.size() > 500);

  // D => C => E per (group, pi).
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> cells;
  for (const auto& r : rep1.rows) {
    if (r.property == "E" || r.property == "C" || r.property == "D")
      cells[{r.group, r.pi}][r.property] = r.oracle;
  }
  for (const auto& [key, vals] : cells) {
    if (vals.count("D") && vals.at("D") == "yes") CHECK(vals.at("C") == "yes");
    if (vals.count("C") && vals.at("C") == "yes") CHECK(vals.at("E") == "yes");
  }

  auto rep2 = full_sweep(2, false);
  CHECK(rep1.file_text("h") == rep2.file_text("h"));

  // Every skipped row names a reason.
  for (const auto& r : rep1.rows) {
    if (r.oracle.rfind("skipped", 0) == 0) CHECK(r.oracle.size() > std::string("skipped: ").size());
  }
}

TEST_CASE("report text shapes") {
  CrosscheckReport rep;
  rep.rows.push_back({"G", "{2}", "E", "yes", "none", "n/a", 0.5});
  rep.rows.push_back({"A", "{3}", "D", "no", "hallfact:no", "yes", 0.0});
  rep.sort_rows();
  CHECK(rep.rows[0].group == "A");
  std::string text = rep.file_text("header line");
  CHECK(text.find("# header line") == 0);
  CHECK(text.find("runtime") == std::string::npos);
  CHECK(text.find("group=A pi={3} prop=D oracle=no expected=hallfact:no agree=yes") !=
        std::string::npos);
  CHECK(rep.disagreements() == 0);
}
