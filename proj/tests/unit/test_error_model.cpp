#include <doctest.h>

#include <set>

#include "delsub/combinatorics.hpp"
#include "delsub/error_model.hpp"
#include "delsub/errors.hpp"

using namespace delsub;

namespace {
Sequence S(const char* s, int q = 2) { return Sequence::parse(s, q); }

std::set<std::string> strings(const Ball& b) {
  std::set<std::string> out;
  for (const auto& m : b.members) out.insert(m.str());
  return out;
}

// Independent reference: substitutions anywhere, then deletions, with plain recursion.
void reference_ds(const Sequence& x, int t, int s, std::size_t from, std::set<Sequence>& out) {
  if (s == 0 || from > x.size()) {
    std::vector<Sequence> level{x};
    for (int d = 0; d < t; ++d) {
      std::set<Sequence> next;
      for (const auto& w : level) {
        for (std::size_t p = 1; p <= w.size(); ++p) {
          std::vector<std::size_t> one{p};
          next.insert(w.erase(one));
        }
      }
      level.assign(next.begin(), next.end());
    }
    out.insert(level.begin(), level.end());
    if (s == 0) return;
  }
  if (from > x.size()) return;
  reference_ds(x, t, s, from + 1, out);
  for (Symbol v = 0; v < x.q(); ++v) {
    if (v != x[from - 1]) reference_ds(x.with(from, v), t, s - 1, from + 1, out);
  }
}
}  // namespace

TEST_CASE("apply_script") {
  CHECK(apply_script(S("1011"), {{2}, {}, {}}).str() == "111");
  CHECK(apply_script(S("1011"), {}).str() == "1011");
  CHECK(apply_script(S("10"), {{}, {}, {1}}).str() == "01");
  CHECK(apply_script(S("1011"), {{1}, {{2, 1}}, {}}).str() == "111");
  CHECK_THROWS_AS(apply_script(S("10"), {{3}, {}, {}}), InvalidScript);
  CHECK_THROWS_AS(apply_script(S("10"), {{1, 1}, {}, {}}), InvalidScript);
  CHECK_THROWS_AS(apply_script(S("10"), {{}, {}, {2}}), InvalidScript);
  CHECK_THROWS_AS(apply_script(S("10"), {{}, {{1, 2}}, {}}), InvalidScript);
}

TEST_CASE("burst deletion balls") {
  CHECK(strings(burst_deletion_ball(S("10"), 1)) == std::set<std::string>{"10", "0", "1"});
  CHECK(strings(burst_deletion_ball(S("1"), 1)) == std::set<std::string>{"1", ""});
  CHECK(strings(burst_deletion_ball(S("101"), 2)) == std::set<std::string>{"101", "01", "11", "10", "1"});
}

TEST_CASE("deletion/substitution balls") {
  CHECK(strings(del_sub_ball(S("101"), 1, 0)) == std::set<std::string>{"01", "11", "10"});
  CHECK(strings(del_sub_ball(S("0"), 0, 1)) == std::set<std::string>{"0", "1"});
  CHECK(strings(del_sub_ball(S("00"), 1, 1)) == std::set<std::string>{"0", "1"});
  CHECK(del_sub_ball(S("0110"), 4, 0).members.size() == 1);
  CHECK_THROWS_AS(del_sub_ball(S("01"), 3, 0), Error);
}

TEST_CASE("deletion/substitution balls match a recursive reference") {
  for (int q : {2, 3}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& x : all_words(q, n)) {
        for (int t = 0; t <= 2 && t <= static_cast<int>(n); ++t) {
          for (int s = 0; s <= 2; ++s) {
            std::set<Sequence> ref;
            reference_ds(x, t, s, 1, ref);
            const auto ball = del_sub_ball(x, t, s);
            CHECK(std::set<Sequence>(ball.members.begin(), ball.members.end()) == ref);
          }
        }
      }
    }
  }
}

TEST_CASE("substitution/transposition balls") {
  CHECK(strings(del_sub_trans_ball(S("10"), 0, 1)) == std::set<std::string>{"10", "00", "11", "01"});
  CHECK(strings(del_sub_trans_ball(S("1101"), 0, 0)) == std::set<std::string>{"1101"});
  CHECK_THROWS_AS(del_sub_trans_ball(S("12", 3), 1, 1), UnsupportedAlphabet);
  // transpositions of equal symbols add nothing beyond the DS ball
  const auto ds = del_sub_ball(S("0000"), 1, 1);
  CHECK(del_sub_trans_ball(S("0000"), 1, 1).members == ds.members);
  // every DS member is a DST member
  for (const auto& x : all_words(2, 6)) {
    const auto dst = del_sub_trans_ball(x, 1, 1);
    for (const auto& m : del_sub_ball(x, 1, 1).members) CHECK(dst.contains(m));
  }
}

TEST_CASE("ball cap") { CHECK_THROWS_AS(del_sub_ball(Sequence::zeros(20, 4), 2, 3, 1000), CapExceeded); }

TEST_CASE("burst ball intersection") {
  const auto w = burst_balls_intersect(S("10"), S("01"), 1);
  REQUIRE(w);
  CHECK(w->length == 1);
  CHECK(check_burst_witness(S("10"), S("01"), *w));
  CHECK(burst_balls_intersect(S("0110"), S("0110"), 3)->length == 0);
  CHECK_FALSE(burst_balls_intersect(S("00"), S("11"), 1));
  CHECK_THROWS_AS(burst_balls_intersect(S("0"), S("11"), 1), LengthMismatch);
}

TEST_CASE("burst ball intersection agrees with materialized balls") {
  for (int q : {2, 3}) {
    for (std::size_t n = 1; n <= (q == 2 ? 6u : 4u); ++n) {
      const auto words = all_words(q, n);
      for (int t = 1; t <= 3 && t <= static_cast<int>(n); ++t) {
        std::vector<Ball> balls;
        for (const auto& x : words) balls.push_back(burst_deletion_ball(x, t));
        for (std::size_t a = 0; a < words.size(); ++a) {
          for (std::size_t b = 0; b < words.size(); ++b) {
            bool meet = false;
            for (const auto& m : balls[a].members) meet = meet || balls[b].contains(m);
            const auto w = burst_balls_intersect(words[a], words[b], t);
            CHECK(w.has_value() == meet);
            if (w) CHECK(check_burst_witness(words[a], words[b], *w));
          }
        }
      }
    }
  }
}

TEST_CASE("sample_corruption") {
  const auto x = S("1010");
  const auto none = sample_corruption(x, 0, 0, ChannelModel::DS, 99);
  CHECK(none.received == x);
  CHECK(none.script.empty());
  const auto a = sample_corruption(x, 1, 0, ChannelModel::DS, 7);
  const auto b = sample_corruption(x, 1, 0, ChannelModel::DS, 7);
  CHECK(a.received == b.received);
  CHECK(a.script == b.script);
  CHECK(del_sub_ball(x, 1, 0).contains(a.received));
  CHECK(apply_script(x, a.script) == a.received);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto y = S("11010010");
    const auto ds = sample_corruption(y, 2, 1, ChannelModel::DS, seed);
    CHECK(del_sub_ball(y, 2, 1).contains(ds.received));
    const auto dst = sample_corruption(y, 1, 1, ChannelModel::DST, seed);
    CHECK(del_sub_trans_ball(y, 1, 1).contains(dst.received));
  }
}

TEST_CASE("channel model names") {
  CHECK(parse_channel_model("DST") == ChannelModel::DST);
  CHECK(to_string(ChannelModel::DS) == "DS");
  CHECK_THROWS_AS(parse_channel_model("XY"), ParseError);
}
