#include <doctest.h>

#include "oracles.hpp"
#include "splitov/detect.hpp"

using namespace splitov;

namespace {

Word W(const char* s, int k = 2) { return Word::parse(s, k); }

oracle::Gap to_oracle(GapConvention c) {
  switch (c) {
    case GapConvention::EmptyPieces: return oracle::Gap::EmptyPieces;
    case GapConvention::EmptyGap: return oracle::Gap::EmptyGap;
    case GapConvention::NonemptyGap: return oracle::Gap::NonemptyGap;
  }
  return oracle::Gap::EmptyPieces;
}

constexpr GapConvention kConventions[] = {GapConvention::EmptyPieces, GapConvention::EmptyGap,
                                          GapConvention::NonemptyGap};

}  // namespace

TEST_CASE("t-overlap recognition") {
  CHECK(is_t_overlap(Word::from_text("entente"), 1));
  CHECK_FALSE(is_t_overlap(W("0011"), 0));
  CHECK(is_t_overlap(Word::from_text("inpinpin"), 2));
  CHECK(is_t_overlap(W("00"), 0));
  CHECK_FALSE(is_t_overlap(W("0"), 0));
  // p >= t: 0000 has period 1 but 1 < t = 2.
  CHECK_FALSE(is_t_overlap(W("0000"), 2));
  CHECK(is_t_overlap(W("000000"), 2));
  CHECK_THROWS_AS(is_t_overlap(W("00"), -1), std::invalid_argument);
}

TEST_CASE("t-overlap factors") {
  auto v = find_t_overlap_factor(Word::parse("0120120", 3), 1);
  REQUIRE(v);
  CHECK(v->x_span == Span{0, 6});
  CHECK_FALSE(find_t_overlap_factor(W("0011"), 1));
  v = find_t_overlap_factor(W("011"), 0);
  REQUIRE(v);
  CHECK(v->repetition.str() == "11");
}

TEST_CASE("split t-overlaps") {
  const Word contentment = Word::parse("01234235423", 6);
  auto v = find_split_t_overlap(contentment, 2);
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::SplitTOverlap);
  CHECK(is_t_overlap(v->repetition, 2));
  // ntent . m . ent -> ntentent
  CHECK(is_t_overlap(Word::parse("23423423", 6), 2));

  v = find_split_t_overlap(W("00110"), 1);
  REQUIRE(v);
  CHECK(v->repetition.str() == "000");
  CHECK(v->x_span == Span{0, 1});
  CHECK(v->z_span == Span{4, 4});

  CHECK_FALSE(find_split_t_overlap(W("0011"), 1));
  for (auto c : kConventions) CHECK_FALSE(find_split_t_overlap(W("0011"), 1, c));
}

TEST_CASE("reversed split t-overlaps") {
  const Word independent = Word::parse("01234312315", 6);
  auto v = find_reversed_split_t_overlap(independent, 1);
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::ReversedSplitTOverlap);
  CHECK(is_t_overlap(v->repetition, 1));
  // z = ende, x = nde: endende
  CHECK(is_t_overlap(Word::parse("3123123", 6), 1));

  CHECK_FALSE(find_reversed_split_t_overlap(W("0011"), 1));
  v = find_reversed_split_t_overlap(W("000"), 0);
  REQUIRE(v);
  CHECK(v->repetition.str() == "00");

  // 01010 is a contiguous 1-overlap but never zx with x before z.
  CHECK_FALSE(find_reversed_split_t_overlap(W("01010"), 1, GapConvention::EmptyGap));
  v = find_reversed_split_t_overlap(W("01010"), 1, GapConvention::EmptyPieces);
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::TOverlap);
}

TEST_CASE("disjoint occurrences") {
  CHECK_FALSE(find_disjoint_pair(W("0111000"), 2));
  CHECK_FALSE(find_disjoint_pair(W("0001110"), 2));
  for (int n = 1; n <= 5; ++n) {
    auto v = find_disjoint_pair(W("0").repeated(2 * n), n);
    REQUIRE(v);
    CHECK(v->x_span.start == 0);
    CHECK(v->z_span->start == static_cast<std::size_t>(n));
  }
  CHECK(find_disjoint_pair(W("00011100"), 2));
  CHECK(find_disjoint_pair(W("00011101"), 2));
  CHECK(count_nondisjoint_occurrences(W("01010"), W("010")) == 2);
  CHECK(count_nondisjoint_occurrences(W("000"), W("00")) == 2);
  CHECK(count_nondisjoint_occurrences(W("010101010"), W("0101010")) == 2);
  CHECK_THROWS_AS(find_disjoint_pair(W("01"), 0), std::invalid_argument);
}

TEST_CASE("gap convention names") {
  for (auto c : kConventions) CHECK(parse_gap_convention(to_string(c)) == c);
  CHECK_THROWS_AS(parse_gap_convention("gapless"), std::invalid_argument);
}

TEST_CASE("oracle equivalence: all binary words up to length 12") {
  for (int len = 0; len <= 12; ++len) {
    for (const auto& s : oracle::all_words(2, len)) {
      const Word w = W(s.c_str());
      for (int t = 0; t <= 3; ++t) {
        const auto f = find_t_overlap_factor(w, t);
        const auto fo = oracle::overlap_factor(s, t);
        REQUIRE(f.has_value() == fo.has_value());
        if (f) REQUIRE(std::make_pair(f->x_span.start, f->x_span.end) == *fo);

        for (auto c : kConventions) {
          for (bool reversed : {false, true}) {
            const auto v = reversed ? find_reversed_split_t_overlap(w, t, c)
                                    : find_split_t_overlap(w, t, c);
            const auto o = oracle::split(s, t, to_oracle(c), reversed);
            const bool contiguous_counts = reversed && c == GapConvention::EmptyPieces;
            INFO(s << " t=" << t << " " << to_string(c) << (reversed ? " reversed" : ""));
            if (o) {
              REQUIRE(v);
              REQUIRE(v->z_span);
              const oracle::Tuple got{v->x_span.start, v->x_span.end, v->z_span->start,
                                      v->z_span->end};
              REQUIRE(got == *o);
            } else if (contiguous_counts && fo) {
              REQUIRE(v);
              REQUIRE(v->kind == ViolationKind::TOverlap);
            } else {
              REQUIRE_FALSE(v);
            }
          }
        }
      }
      for (int n = 1; n <= 3; ++n) {
        const auto v = find_disjoint_pair(w, n);
        const auto o = oracle::disjoint_pair(s, n);
        REQUIRE(v.has_value() == o.has_value());
        if (v) REQUIRE(std::make_pair(v->x_span.start, v->z_span->start) == *o);
      }
    }
  }
}
