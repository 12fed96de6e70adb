#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "affmon/io.hpp"

using namespace affmon;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  write_text_file(path, content);
  return path;
}

}  // namespace

TEST_CASE("monoid documents parse in all three shapes") {
  Json wrapped = parse_json_text(
      R"({"monoid": {"ambient_rank": 2, "generators": [[2, 0], [1, 1], [0, 2]]}})",
      "doc");
  MonoidInput a = monoid_from_document(wrapped);
  CHECK(a.monoid.ambient == 2);
  CHECK(a.monoid.gens.rows() == 3);
  CHECK_FALSE(a.presented);

  Json bare = parse_json_text(R"({"ambient_rank": 1, "generators": [[1]]})", "doc");
  MonoidInput b = monoid_from_document(bare);
  CHECK(b.monoid.ambient == 1);

  Json pres = parse_json_text(
      R"({"presentation": {"n": 3, "relations": [{"lhs": [1, 1, 0], "rhs": [0, 0, 2]}]}})",
      "doc");
  MonoidInput c = monoid_from_document(pres);
  CHECK(c.presented);
  CHECK(c.torsion_free);
  CHECK(c.generator_images.rows() == 3);
  // x + y = 2z forces rank 2
  CHECK(c.monoid.gp_rank() == 2);
}

TEST_CASE("presentations report discarded torsion") {
  // 2x = 2y has groupification Z + Z/2; only the free part survives
  Json pres = parse_json_text(
      R"({"presentation": {"n": 2, "relations": [{"lhs": [2, 0], "rhs": [0, 2]}]}})",
      "doc");
  MonoidInput m = monoid_from_document(pres);
  CHECK(m.presented);
  CHECK_FALSE(m.torsion_free);
  REQUIRE(m.discarded_torsion.size() == 1);
  CHECK(m.discarded_torsion[0] == 2);
  // both generators map to the same image in the free quotient
  CHECK(m.generator_images.row(0) == m.generator_images.row(1));
  CHECK(m.monoid.gp_rank() == 1);
}

TEST_CASE("relations accept the two-array shape") {
  Json pres = parse_json_text(
      R"({"presentation": {"n": 2, "relations": [[[1, 0], [0, 1]]]}})", "doc");
  MonoidInput m = monoid_from_document(pres);
  // x = y collapses to one generator of N
  CHECK(m.monoid.gp_rank() == 1);
  CHECK(m.torsion_free);
}

TEST_CASE("monoid document errors name the field") {
  Json missing = parse_json_text(R"({"ambient_rank": 2})", "doc");
  CHECK_THROWS_WITH_AS(monoid_from_document(missing),
                       doctest::Contains("generators"), ParseError);

  Json ragged = parse_json_text(
      R"({"ambient_rank": 2, "generators": [[1, 0], [1]]})", "doc");
  CHECK_THROWS_AS(monoid_from_document(ragged), ParseError);

  Json bad_rel = parse_json_text(
      R"({"presentation": {"n": 2, "relations": [{"lhs": [1], "rhs": [0, 1]}]}})",
      "doc");
  CHECK_THROWS_WITH_AS(monoid_from_document(bad_rel), doctest::Contains("lhs"),
                       ParseError);

  Json neg_rel = parse_json_text(
      R"({"presentation": {"n": 1, "relations": [{"lhs": [-1], "rhs": [0]}]}})",
      "doc");
  CHECK_THROWS_AS(monoid_from_document(neg_rel), ParseError);
}

TEST_CASE("ring shorthands cover the whole family") {
  CHECK(ring_from_shorthand("Q")->kind == RingKind::Rationals);
  CHECK(ring_from_shorthand("Z")->kind == RingKind::Integers);

  auto f2 = ring_from_shorthand("F2");
  REQUIRE(f2);
  CHECK(f2->kind == RingKind::PrimeField);
  CHECK(f2->modulus == 2);
  CHECK(ring_from_shorthand("F97")->modulus == 97);

  auto m6 = ring_from_shorthand("mod6");
  REQUIRE(m6);
  CHECK(m6->kind == RingKind::ModN);
  CHECK(m6->modulus == 6);

  auto qq = ring_from_shorthand("QxQ");
  REQUIRE(qq);
  CHECK(qq->kind == RingKind::ProductOfFields);
  CHECK(qq->factors == 2);
  CHECK(ring_from_shorthand("QxQxQ")->factors == 3);

  CHECK_FALSE(ring_from_shorthand("F4"));    // not prime
  CHECK_FALSE(ring_from_shorthand("F"));
  CHECK_FALSE(ring_from_shorthand("mod1"));
  CHECK_FALSE(ring_from_shorthand("mod"));
  CHECK_FALSE(ring_from_shorthand("QxZ"));
  CHECK_FALSE(ring_from_shorthand("QxQx"));
  CHECK_FALSE(ring_from_shorthand(""));
  CHECK_FALSE(ring_from_shorthand("q"));
}

TEST_CASE("ring documents parse wrapped and bare") {
  Json wrapped = parse_json_text(R"({"ring": {"kind": "mod_n", "n": "6"}})", "doc");
  BaseRingDescriptor a = ring_from_document(wrapped);
  CHECK(a.kind == RingKind::ModN);
  CHECK(a.modulus == 6);

  Json bare = parse_json_text(R"({"kind": "product", "factors": 2})", "doc");
  CHECK(ring_from_document(bare).kind == RingKind::ProductOfFields);

  Json bad = parse_json_text(R"({"kind": "prime_field", "p": "6"})", "doc");
  CHECK_THROWS_WITH_AS(ring_from_document(bad), doctest::Contains("not prime"),
                       ParseError);
}

TEST_CASE("center documents carry either a monomial or a polynomial center") {
  Json mono = parse_json_text(
      R"({"center": {"monoid_prime": {"face_generators": [0, 2]},
                     "base_prime": {"p": "2", "factor": 0}}})",
      "doc");
  CenterInput a = center_from_document(mono);
  REQUIRE(a.monomial);
  CHECK_FALSE(a.polynomial);
  CHECK(a.monomial->face_gens == std::vector<std::size_t>{0, 2});
  CHECK(a.monomial->base_prime.p == 2);

  // defaults: empty face and the zero base prime
  Json empty = parse_json_text(R"({"monoid_prime": {"face_generators": []}})", "doc");
  CenterInput b = center_from_document(empty);
  REQUIRE(b.monomial);
  CHECK(b.monomial->face_gens.empty());
  CHECK(b.monomial->base_prime.p == 0);
  CHECK_THROWS_WITH_AS(center_from_document(parse_json_text(
                           R"({"monoid_prime": {}})", "doc")),
                       doctest::Contains("face_generators"), ParseError);

  Json poly = parse_json_text(
      R"({"polynomial_generators": [{"terms": [{"coeff": "1", "exponents": [1, 0]},
                                               {"coeff": "-1", "exponents": [0, 0]}]}]})",
      "doc");
  CenterInput c = center_from_document(poly);
  REQUIRE(c.polynomial);
  CHECK_FALSE(c.monomial);
  PolyContext ctx = make_poly_context(ring_rationals(), 2);
  std::vector<Polynomial> gens = polynomials_from_json(ctx, *c.polynomial, "center");
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].terms.size() == 2);

  Json both = parse_json_text(
      R"({"monoid_prime": {}, "polynomial_generators": []})", "doc");
  CHECK_THROWS_AS(center_from_document(both), ParseError);
}

TEST_CASE("json parse errors carry file, line and column") {
  try {
    parse_json_text("{\n  \"a\": ,\n}", "broken.json");
    FAIL("expected a throw");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("broken.json:2:") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_json_text("", "empty.json"),
                       doctest::Contains("empty.json"), ParseError);
}

TEST_CASE("files round trip through the temp directory") {
  std::string path = temp_file("affmon_io_roundtrip.json",
                               R"({"ambient_rank": 1, "generators": [[1]]})");
  Json j = load_json_file(path);
  CHECK(monoid_from_document(j).monoid.ambient == 1);
  CHECK_THROWS_WITH_AS(load_json_file(path + ".missing"),
                       doctest::Contains("cannot open"), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("certificate documents parse bare and wrapped in a report") {
  Certificate cert;
  cert.verdict = "yes";
  cert.subject = "a roundtrip subject";
  CertStep s;
  s.rule = "reasoning";
  s.claim = "nothing to check";
  s.method = "structural";
  cert.steps.push_back(s);

  Json bare = certificate_to_json(cert);
  Certificate back = certificate_from_document(bare);
  CHECK(certificate_digest(back) == certificate_digest(cert));

  Json report = Json::object();
  report["tool"] = "affmon";
  report["certificate"] = bare;
  Certificate back2 = certificate_from_document(report);
  CHECK(certificate_digest(back2) == certificate_digest(cert));

  Json junk = parse_json_text(R"({"tool": "affmon"})", "doc");
  CHECK_THROWS_AS(certificate_from_document(junk), ParseError);
}
