#include <doctest.h>

#include "delsub/errors.hpp"
#include "delsub/seq_core.hpp"

using namespace delsub;

namespace {
Sequence S(const char* s, int q = 2) { return Sequence::parse(s, q); }
IntSequence I(const char* s) { return IntSequence::parse(s); }
}  // namespace

TEST_CASE("parse and print") {
  CHECK(S("0110").str() == "0110");
  CHECK(S("af", 16).str() == "af");
  CHECK(S("").empty());
  CHECK_THROWS_AS(S("012"), ParseError);
  CHECK_THROWS_AS(Sequence::parse("01", 17), UnsupportedAlphabet);
  CHECK_THROWS_AS(Sequence::parse("01", 1), UnsupportedAlphabet);
  CHECK(I("1,0,-1,2").entries == std::vector<std::int64_t>{1, 0, -1, 2});
  CHECK(I("").size() == 0);
  CHECK_THROWS_AS(I("1,,2"), ParseError);
}

TEST_CASE("word editing") {
  const auto x = S("1011");
  CHECK(x.slice(2, 3).str() == "01");
  CHECK(x.slice(3, 2).empty());
  std::vector<std::size_t> del{2};
  CHECK(x.erase(del).str() == "111");
  CHECK(x.insert(1, 0).str() == "01011");
  CHECK(x.insert(5, 0).str() == "10110");
  CHECK(x.swapped(1).str() == "0111");
  CHECK(x.with(4, 0).str() == "1010");
  CHECK(x.at1(0) == 0);
  CHECK(x.at1(5) == 0);
  CHECK(x.at1(1) == 1);
}

TEST_CASE("accumulative") {
  CHECK(accumulative(S("101")).str() == "1,1,2");
  CHECK(accumulative(S("000")).str() == "0,0,0");
  CHECK(accumulative(S("21", 3)).str() == "2,3");
}

TEST_CASE("differential and its integral") {
  CHECK(differential(S("1101")).str() == "1011");
  CHECK(differential(S("00000", 5)) == Sequence::zeros(5, 5));
  CHECK(differential(S("1202", 3)).str() == "1112");
  for (const auto& x : {S("1032", 4), S("1010"), S("2201", 3)}) CHECK(integrate_differential(differential(x)) == x);
}

TEST_CASE("accumulative differential") {
  CHECK(accumulative_differential(S("1101")).str() == "1,1,2,3");
  const auto g = accumulative_differential(S("1202", 3));
  CHECK(g.str() == "1,2,3,5");
  // residues of g mod q give back x
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] % 3 == S("1202", 3)[i]);
  CHECK(accumulative_differential(Sequence::zeros(4, 3)).str() == "0,0,0,0");
}

TEST_CASE("sign preserving number") {
  CHECK(sign_preserving_number(I("1,0,-1,2")) == 3);
  CHECK(sign_preserving_number(I("0,0,0,0")) == 1);
  CHECK(sign_preserving_number(I("3,0,7")) == 1);
  CHECK(sign_preserving_number(I("")) == 0);
  CHECK(sign_preserving_number(I("0,-1,0,1,0,0")) == 2);
  CHECK(sign_preserving_number(I("-1,1,-1,1")) == 4);
}

TEST_CASE("sign preserving number is minimal (split-point brute force)") {
  // all words over [-1,1]^5 against an exhaustive search over split sets
  for (int code = 0; code < 243; ++code) {
    std::vector<std::int64_t> z;
    for (int c = code, i = 0; i < 5; ++i, c /= 3) z.push_back(c % 3 - 1);
    std::size_t best = 99;
    for (int mask = 0; mask < 16; ++mask) {
      std::size_t parts = 1;
      bool ok = true;
      int sign = 0;
      for (int i = 0; i < 5; ++i) {
        if (i > 0 && (mask >> (i - 1) & 1)) {
          ++parts;
          sign = 0;
        }
        if (z[i] == 0) continue;
        const int sg = z[i] > 0 ? 1 : -1;
        if (sign != 0 && sg != sign) ok = false;
        sign = sg;
      }
      if (ok) best = std::min(best, parts);
    }
    CHECK(sign_preserving_number(z) == best);
  }
}

TEST_CASE("VT syndromes") {
  CHECK(vt_syndrome(I("1,1,2"), 1) == 9);
  CHECK(vt_syndrome(I("0,0,0"), 3) == 0);
  CHECK(vt_syndrome(I("2,-1"), 0) == 1);
  CHECK(vt_syndrome_mod(I("1,1,2"), 1, 5) == 4);
  CHECK(vt_syndrome_mod(I("2,-3"), 0, 5) == 4);
  CHECK(vt_syndrome_mod(I("2,-3"), 1, 7) == 3);
  CHECK(power_sum(4, 0) == 4);
  CHECK(power_sum(4, 2) == 30);
  // exact value beyond 64 bits
  std::vector<std::int64_t> big(40, 1);
  CHECK(vt_syndrome(big, 12) > BigInt(UINT64_MAX));
}

TEST_CASE("symbol ordering and hashing") {
  CHECK(S("01") < S("1"));
  CHECK(S("") < S("0"));
  CHECK(std::hash<Sequence>{}(S("01")) == std::hash<Sequence>{}(S("01")));
  CHECK(S("01") != Sequence::parse("01", 3));
}
