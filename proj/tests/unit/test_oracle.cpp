#include <doctest.h>

#include <fstream>

#include "delsub/audit.hpp"
#include "delsub/errors.hpp"
#include "delsub/oracle.hpp"
#include "delsub/serialize.hpp"

using namespace delsub;

namespace {
Sequence S(const char* s) { return Sequence::parse(s, 2); }
}  // namespace

TEST_CASE("mode parsing") {
  CHECK(parse_verify_mode("DS(1,0)") == VerifyMode{BallKind::DelSub, 1, 0});
  CHECK(parse_verify_mode("DST(1,1)") == VerifyMode{BallKind::DelSubTrans, 1, 1});
  CHECK(parse_verify_mode("Burst(2)").kind == BallKind::BurstDel);
  CHECK(to_string(VerifyMode{BallKind::DelSub, 2, 0}) == "DS(2,0)");
  CHECK_THROWS_AS(parse_verify_mode("DS(1)"), ParseError);
  CHECK_THROWS_AS(parse_verify_mode("XX(1,1)"), ParseError);
}

TEST_CASE("verify_code") {
  const VerifyMode ds10{BallKind::DelSub, 1, 0};
  CHECK(verify_code({S("0000"), S("0110"), S("1001"), S("1111")}, ds10).ok());
  const auto bad = verify_code({S("11"), S("00")}, {BallKind::DelSub, 1, 1});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.counterexample->x == S("00"));
  CHECK(bad.counterexample->y == S("11"));
  CHECK(bad.counterexample->z == S("0"));
  CHECK(verify_code({S("0101")}, {BallKind::DelSubTrans, 1, 1}).ok());
  CHECK(verify_code({}, ds10).ok());
  CHECK_THROWS_AS(verify_code({S("0"), S("01")}, ds10), LengthMismatch);
  // the reported pair is the smallest one, whatever the thread count
  std::vector<Sequence> words{S("0001"), S("0010"), S("0100"), S("1000"), S("0111")};
  const auto one = verify_code(words, ds10, kDefaultBallCap, 1);
  const auto four = verify_code(words, ds10, kDefaultBallCap, 4);
  REQUIRE(one.counterexample);
  CHECK(*one.counterexample == *four.counterexample);
  CHECK(one.counterexample->x == S("0001"));
  CHECK(one.counterexample->y == S("0010"));
  CHECK(one.pairs_checked == 10);
}

TEST_CASE("family cells") {
  const auto cell = verify_family_cell(Family::C1, 2, 6, 1, 0, {BallKind::DelSub, 1, 0}, ResidueStrategy::All);
  CHECK(cell.ok());
  CHECK(cell.codes_checked == 7);
  const auto dst = verify_family_cell(Family::C1, 2, 7, 1, 1, {BallKind::DelSubTrans, 1, 1}, ResidueStrategy::Best);
  CHECK(dst.ok());
  const auto q3 = verify_family_cell(Family::C2, 3, 5, 1, 1, {BallKind::DelSub, 1, 1}, ResidueStrategy::Best);
  CHECK(q3.ok());
  const auto burst = verify_family_cell(Family::C3, 2, 8, 2, 0, {BallKind::BurstDel, 2, 0}, ResidueStrategy::All);
  CHECK(burst.ok());
}

TEST_CASE("a broken modulus rule is caught") {
  const auto cell = verify_family_cell(Family::C1, 2, 7, 1, 0, {BallKind::DelSub, 1, 0}, ResidueStrategy::All,
                                       ModulusRule::OffByOne);
  CHECK_FALSE(cell.ok());
  REQUIRE(cell.first_counterexample);
  const auto& c = *cell.first_counterexample;
  CHECK(del_sub_ball(c.x, 1, 0).contains(c.z));
  CHECK(del_sub_ball(c.y, 1, 0).contains(c.z));
}

TEST_CASE("stored counterexamples still replay") {
  std::ifstream in(DELSUB_FIXTURE_DIR "/counterexamples.json");
  REQUIRE(in);
  const auto fixtures = Json::parse(in);
  REQUIRE(fixtures.size() > 0);
  for (const auto& f : fixtures) {
    const auto c = counterexample_from_json(f.at("counterexample"));
    const auto mode = parse_verify_mode(f.at("mode").get<std::string>());
    CHECK(c.x != c.y);
    CHECK(ball_for(c.x, mode).contains(c.z));
    CHECK(ball_for(c.y, mode).contains(c.z));
    // the exact code still fails under the broken rule and never under the real one
    const auto family = parse_family(f.at("family").get<std::string>());
    const auto rule = parse_modulus_rule(f.at("modulus_rule").get<std::string>());
    CodeParams p{family, f.at("q"), f.at("n"), f.at("t"), f.at("s"), f.at("failing_residues")};
    CHECK(is_member(c.x, p, rule));
    CHECK(is_member(c.y, p, rule));
    CHECK(verify_code(enumerate_code(p, kDefaultEnumCap, rule), mode).counterexample == c);
    const auto a = residue_vector(c.x, family, code_moduli(family, p.q, p.n, p.t, p.s));
    CHECK(a != residue_vector(c.y, family, code_moduli(family, p.q, p.n, p.t, p.s)));
  }
}

TEST_CASE("property sweeps at small size") {
  for (const auto& r : {audit_sign(5), audit_single_deletion_f(6), audit_single_deletion_g(3, 5), audit_burst_two_g(6),
                        audit_good_pairs(2, 7), audit_valid_pairs(3, 2, 5), audit_valid_windows(3, 2, 6),
                        audit_pair_insertion(2, 4), audit_partitions(5, 1, 1, ChannelModel::DST),
                        audit_family_bounds(Family::C1, 2, 7, 1, 1, BallKind::DelSub, 1, 1),
                        audit_family_bounds(Family::C4, 3, 5, 2, 0, BallKind::DelSub, 2, 0)}) {
    CHECK_MESSAGE(r.ok(), r.name << ": " << r.first_violation);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("syndrome bounds catch a shrunken bound") {
  // single deletions in C1 with s = 0 need the full n; a pair at distance n exists
  const auto r = audit_family_bounds(Family::C1, 2, 6, 1, 0, BallKind::DelSub, 1, 1);
  CHECK_FALSE(r.ok());
}
