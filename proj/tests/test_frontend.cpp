#include <filesystem>
#include <random>

#include "doctest.h"
#include "support/corpus.h"
#include "support/random_models.h"
#include "umlsem/frontend.h"
#include "umlsem/wellformed.h"

using namespace umlsem;

namespace {

StaticModel must_parse(std::string_view text)
{
  auto p = parse_model(text);
  if (!p.ok()) FAIL(p.errors.front().to_string());
  return *p.value;
}

bool has_kind(const std::vector<SourceError> & errors, SourceError::Kind k)
{
  for (const auto & e : errors) {
    if (e.kind == k) return true;
  }
  return false;
}

// Every error position lies inside the text (the end-of-input position
// counts as inside).
void check_positions(std::string_view text, const std::vector<SourceError> & errors)
{
  std::size_t lines = 1;
  for (char c : text) lines += c == '\n';
  for (const auto & e : errors) {
    CHECK(e.line >= 1);
    CHECK(e.column >= 1);
    CHECK(e.line <= lines);
  }
}

}  // namespace

TEST_CASE("parse model examples")
{
  const StaticModel m = must_parse(
      "model M { class Student { attr id } class FullTime extends Student abstract class Person "
      "assoc enlightens { end enlightens_u : University [0..*] end at : Student [1..1] } "
      "class University }");
  StaticModel expected;
  expected.add_classifier("Student", false, {"id"});
  expected.add_classifier("FullTime").add_classifier("Person", true).add_classifier("University");
  expected.add_generalization("Student", "FullTime");
  expected.add_association({"enlightens",
                            {{"enlightens_u", "University", Multiplicity::any()},
                             {"at", "Student", Multiplicity::exactly(1)}}});
  CHECK(m == expected);
  CHECK(m.name == Name("M"));

  const StaticModel empty = must_parse("model M { }");
  CHECK(same_diagram(empty, StaticModel{}));

  const auto ghost = parse_model("model M { assoc a { end x : Ghost [1..1] end y : Ghost [1..1] } }");
  CHECK_FALSE(ghost.ok());
  CHECK(has_kind(ghost.errors, SourceError::Kind::kResolve));
}

TEST_CASE("parse model details")
{
  const StaticModel m = must_parse(
      "// header\nmodel Lib { class A class B extends A class C extends A, B "
      "assoc r { end x : A [0..1, 3..*] end y : B [2] } assoc s { end p : C [*] end q : C [1, 4..5] } }");
  CHECK(m.name == Name("Lib"));
  CHECK(m.supertype_of.size() == 3);
  const auto r = m.find_associations("r");
  REQUIRE(r.size() == 1);
  CHECK(r[0]->ends[0].multi.to_string() == "0..1, 3..*");
  CHECK(r[0]->ends[1].multi == Multiplicity::exactly(2));

  SUBCASE("ill-formed models still parse")
  {
    const auto cyc = parse_model("model M { class A extends B class B extends A }");
    REQUIRE(cyc.ok());
    CHECK(well_formed(*cyc.value).rules() == std::set<WfRule>{WfRule::WF2});
    const auto tri = parse_model(
        "model M { class A assoc t { end x : A [*] end y : A [*] end z : A [*] } }");
    REQUIRE(tri.ok());
    CHECK(well_formed(*tri.value).rules() == std::set<WfRule>{WfRule::WF6});
  }
  SUBCASE("errors")
  {
    for (const char * bad : {
             "",
             "model",
             "model M {",
             "model M { class }",
             "model M { class A assoc r { end x : A [] end y : A [*] } }",
             "model M { class A assoc r { end x : A [3..1] end y : A [*] } }",
             "model M { class A } trailing",
             "model M { class A extends Z }",
             "model M { class A \"str }",
             "model M { class A $ }",
         }) {
      CAPTURE(bad);
      const auto p = parse_model(bad);
      CHECK_FALSE(p.ok());
      CHECK_FALSE(p.errors.empty());
      check_positions(bad, p.errors);
    }
  }
  SUBCASE("several errors are reported")
  {
    const auto p = parse_model("model M { class A extends X class B extends Y }");
    CHECK(p.errors.size() >= 2);
  }
  SUBCASE("error positions")
  {
    const auto p = parse_model("model M {\n  class A\n  klass B\n}");
    REQUIRE_FALSE(p.errors.empty());
    CHECK(p.errors.front().line == 3);
    CHECK(p.errors.front().column == 3);
    CHECK(p.errors.front().to_string().rfind("3:3: parse error: ", 0) == 0);
  }
}

TEST_CASE("parse snapshot examples")
{
  StaticModel m = must_parse(
      "model M { class University class Student { attr id } class FullTime extends Student "
      "assoc enlightens { end enlightens : University [0..*] end at : Student [1..1] } }");

  const auto empty = parse_snapshot("snapshot { }", m);
  REQUIRE(empty.ok());
  CHECK(empty.value->objects.empty());

  const auto two = parse_snapshot(
      "snapshot { u1 : University { enlightens -> s1 } s1 : FullTime { at -> u1, id = \"x\" } }", m);
  REQUIRE(two.ok());
  CHECK(two.value->objects.size() == 2);
  const Value u1 = Value::object(0);
  const Value s1 = Value::object(1);
  CHECK(derive_links(*two.value) ==
        LinkMap{{"enlightens", {{u1, s1}}}, {"at", {{s1, u1}}}});
  CHECK(two.value->objects.at(s1).attributes.at("id") == std::set<Value>{Value::data(0)});

  const auto dangling = parse_snapshot("snapshot { u1 : University { enlightens -> ghost } }", m);
  CHECK_FALSE(dangling.ok());
  CHECK(has_kind(dangling.errors, SourceError::Kind::kResolve));

  const auto unknown = parse_snapshot("snapshot { x : Ghost }", m);
  CHECK_FALSE(unknown.ok());
  const auto dup = parse_snapshot("snapshot { x : University x : University }", m);
  CHECK_FALSE(dup.ok());

  const auto sets = parse_snapshot(
      "snapshot { u : University { enlightens -> { a, b } } a : Student { at -> {}, id = \"p\" } "
      "b : Student { at -> u, id = \"q\" } c : Student { id = \"p\" } }",
      m);
  REQUIRE(sets.ok());
  const Snapshot & s = *sets.value;
  CHECK(s.objects.at(Value::object(0)).attributes.at("enlightens").size() == 2);
  CHECK(s.objects.at(Value::object(1)).attributes.at("at").empty());
  CHECK(s.objects.at(Value::object(3)).attributes.at("id") == std::set<Value>{Value::data(0)});
  CHECK(s.objects.at(Value::object(2)).attributes.at("id") == std::set<Value>{Value::data(1)});
}

TEST_CASE("parse proof examples")
{
  const auto three = parse_proof(
      "proof { introduce_weakened enlightens as new retarget at -> FullTime; erase enlightens; "
      "rename new -> enlightens }");
  REQUIRE(three.ok());
  REQUIRE(three.value->steps.size() == 3);
  CHECK(three.value->steps[0] ==
        Rule(rule::IntroduceWeakenedAssociation{"enlightens", "new", {{"at", "FullTime"}}, {}}));
  CHECK(three.value->steps[1] == Rule(rule::EraseAssociation{"enlightens"}));
  CHECK(three.value->steps[2] == Rule(rule::RenameAssociation{"new", "enlightens"}));

  CHECK_FALSE(parse_proof("proof { }").ok());

  const auto widen = parse_proof("proof { widen enlightens.at to [0..1] }");
  REQUIRE(widen.ok());
  CHECK(widen.value->steps ==
        std::vector<Rule>{rule::WidenMultiplicity{"enlightens", "at", Multiplicity::between(0, 1)}});

  const auto all = parse_proof(
      "proof { add_class abstract N extends A, B attr x, y; narrow r.e to [1]; restrict r.e to C; "
      "erase_attr C.a; make_concrete C; introduce_weakened r as w widen e to [*], f to [0..2]; }");
  REQUIRE(all.ok());
  CHECK(all.value->steps.size() == 6);
  CHECK(all.value->steps[0] == Rule(rule::AddClassifier{"N", true, {"x", "y"}, {"A", "B"}}));

  for (const char * bad : {"proof { frobnicate x }", "proof { erase }", "proof { rename a b }",
                           "proof { widen r to [1] }", "proof { erase a erase b }"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_proof(bad).ok());
  }
}

TEST_CASE("printing")
{
  CHECK(print_model(StaticModel{}) == "model M { }\n");
  const StaticModel m = must_parse(
      "model M { class A assoc r { end x : A [3..*, 0..1] end y : A [1] } }");
  const std::string text = print_model(m);
  CHECK(text.find("[0..1, 3..*]") != std::string::npos);
  CHECK(text.find("[1..1]") != std::string::npos);
  CHECK(print_snapshot(Snapshot{}) == "snapshot { }\n");

  const ProofScript p = testing::corpus_proof("university/university.prf");
  const auto again = parse_proof(print_proof(p));
  REQUIRE(again.ok());
  CHECK(*again.value == p);
}

TEST_CASE("round trip over the corpus")
{
  int files = 0;
  for (const auto & entry :
       std::filesystem::recursive_directory_iterator(testing::corpus_path(""))) {
    if (entry.path().extension() != ".smdl") continue;
    ++files;
    CAPTURE(entry.path().string());
    const auto parsed = parse_model(testing::read_corpus(
        std::filesystem::relative(entry.path(), testing::corpus_path("")).string()));
    REQUIRE(parsed.ok());
    CHECK(well_formed(*parsed.value).ok());
    const std::string once = print_model(*parsed.value);
    const auto reparsed = parse_model(once);
    REQUIRE(reparsed.ok());
    CHECK(*reparsed.value == *parsed.value);
    CHECK(print_model(*reparsed.value) == once);
  }
  CHECK(files >= 5);
}

TEST_CASE("round trip over random models and snapshots")
{
  std::mt19937 rng(12);
  for (int round = 0; round < 200; ++round) {
    const StaticModel m = testing::random_model(rng, {.max_classifiers = 4, .max_associations = 3});
    const std::string text = print_model(m);
    const auto back = parse_model(text);
    REQUIRE(back.ok());
    CHECK(*back.value == m);
    CHECK(print_model(*back.value) == text);
  }
  const StaticModel d0 = testing::corpus_model("university/d0.smdl");
  // Ids are renumbered by declaration order, so equality holds after one pass.
  const StaticModel d3 = testing::corpus_model("university/d3.smdl");
  for (const Snapshot & s : enumerate_models(d0, {3, 1}, Mode::kStrictPaper)) {
    const auto back = parse_snapshot(print_snapshot(s), d0);
    REQUIRE(back.ok());
    CHECK(back.value->objects.size() == s.objects.size());
    CHECK(satisfies(d3, *back.value, Mode::kTyped).satisfied() ==
          satisfies(d3, s, Mode::kTyped).satisfied());
    const auto again = parse_snapshot(print_snapshot(*back.value), d0);
    REQUIRE(again.ok());
    CHECK(*again.value == *back.value);
  }
}

TEST_CASE("parsing is total")
{
  const std::string alphabet = "model class abstract extends attr assoc end snapshot proof "
                               "{}[]().,;:->=*\"\\/\n\t 0123456789abcXYZ_$é";
  std::mt19937 rng(13);
  const StaticModel d0 = testing::corpus_model("university/d0.smdl");
  const std::string seed = print_model(d0);
  for (int round = 0; round < 3000; ++round) {
    std::string text;
    if (round % 2 == 0) {
      const int len = std::uniform_int_distribution<int>(0, 60)(rng);
      for (int i = 0; i < len; ++i) {
        text += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      }
    } else {
      // mutate a valid model
      text = seed;
      for (int k = 0; k < 3; ++k) {
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
        text[at] = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      }
    }
    const auto pm = parse_model(text);
    CHECK(pm.ok() == pm.errors.empty());
    check_positions(text, pm.errors);
    const auto ps = parse_snapshot(text, d0);
    check_positions(text, ps.errors);
    const auto pp = parse_proof(text);
    check_positions(text, pp.errors);
  }
}
