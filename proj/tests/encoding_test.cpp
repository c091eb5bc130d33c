#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "iupacscan/encoding.hpp"

using namespace iupacscan;

namespace {

// Dictionary values transcribed row by row (p = A C G T M R W S Y K V H D B N -,
// columns t = A C G T), index = 4 * row + column.
constexpr int kTable3[16][4] = {
    {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0},
    {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1},
    {1, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0},
    {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1},
};

// Class membership written out as letters, independent of the bit masks.
const std::vector<std::pair<char, std::string>> kTable2 = {
    {'A', "A"},   {'C', "C"},   {'G', "G"},   {'T', "T"},   {'M', "AC"},   {'R', "AG"},
    {'W', "AT"},  {'S', "CG"},  {'Y', "CT"},  {'K', "GT"},  {'V', "ACG"},  {'H', "ACT"},
    {'D', "AGT"}, {'B', "CGT"}, {'N', "ACGT"}, {'-', ""},
};

std::vector<int> codes_of(const EncodedPattern& p) {
  std::vector<int> out;
  for (auto c : p.codes()) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<int> text_codes(const EncodedText& t) {
  return {t.codes().begin(), t.codes().end()};
}

}  // namespace

TEST(EncodeText, WorkedExample) {
  const auto t = encode_text("ATGACCGGCAT");
  EXPECT_EQ(text_codes(t), (std::vector<int>{0, 3, 2, 0, 1, 1, 2, 2, 1, 0, 3}));
  EXPECT_TRUE(t.invalid_positions().empty());
  EXPECT_FALSE(t.has_invalid());
}

TEST(EncodeText, Empty) {
  const auto t = encode_text("");
  EXPECT_EQ(t.size(), 0u);
  EXPECT_TRUE(t.invalid_positions().empty());
}

TEST(EncodeText, NonBasesFlaggedAndLowercaseFolded) {
  const auto t = encode_text("ANa");
  EXPECT_EQ(text_codes(t), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(t.invalid_positions(), (std::vector<std::size_t>{2}));

  const auto u = encode_text("acgtACGT-n\r");
  EXPECT_EQ(text_codes(u), (std::vector<int>{0, 1, 2, 3, 0, 1, 2, 3, 0, 0, 0}));
  EXPECT_EQ(u.invalid_positions(), (std::vector<std::size_t>{9, 10, 11}));
}

TEST(EncodeText, BaseAlphabetNeverInvalid) {
  std::string s;
  for (int i = 0; i < 4096; ++i) s.push_back("ACGTacgt"[(i * 7 + i / 3) % 8]);
  EXPECT_TRUE(encode_text(s).invalid_positions().empty());
}

TEST(EncodeText, EveryByteIsAccepted) {
  std::string all;
  for (int c = 0; c < 256; ++c) all.push_back(static_cast<char>(c));
  const auto t = encode_text(all);
  EXPECT_EQ(t.size(), 256u);
  EXPECT_EQ(t.invalid_positions().size(), 256u - 8u);
}

TEST(EncodePattern, WorkedExample) {
  const auto p = encode_pattern("C[CGT]GG[CG]");
  EXPECT_EQ(codes_of(p), (std::vector<int>{1, 13, 2, 2, 7}));
  const std::vector<int> shifted(p.shifted().begin(), p.shifted().end());
  EXPECT_EQ(shifted, (std::vector<int>{0b000100, 0b110100, 0b001000, 0b001000, 0b011100}));
  EXPECT_EQ(shifted, (std::vector<int>{4, 52, 8, 8, 28}));
  EXPECT_EQ(p.to_string(), "CBGGS");
}

TEST(EncodePattern, SingleLetter) {
  const auto p = encode_pattern("A");
  EXPECT_EQ(codes_of(p), (std::vector<int>{0}));
  EXPECT_EQ(p.shifted()[0], 0);
}

TEST(EncodePattern, Table2Letters) {
  for (std::size_t code = 0; code < kTable2.size(); ++code) {
    const std::string spec(1, kTable2[code].first);
    EXPECT_EQ(codes_of(encode_pattern(spec)), (std::vector<int>{static_cast<int>(code)}))
        << spec;
  }
  EXPECT_EQ(codes_of(encode_pattern("acgtn")), (std::vector<int>{0, 1, 2, 3, 14}));
}

TEST(EncodePattern, BracketsNormalizeToIupac) {
  for (std::size_t code = 0; code + 1 < kTable2.size(); ++code) {
    const std::string spec = "[" + kTable2[code].second + "]";
    EXPECT_EQ(codes_of(encode_pattern(spec)), (std::vector<int>{static_cast<int>(code)}))
        << spec;
  }
  // order and repetition inside brackets don't matter
  EXPECT_EQ(codes_of(encode_pattern("[CA][TGC][gac][AAC]")), (std::vector<int>{4, 13, 10, 4}));
}

TEST(EncodePattern, Rejections) {
  EXPECT_THROW(encode_pattern(""), PatternError);
  EXPECT_THROW(encode_pattern("ACX"), PatternError);
  EXPECT_THROW(encode_pattern("A[]C"), PatternError);
  EXPECT_THROW(encode_pattern("A[CN]"), PatternError);
  EXPECT_THROW(encode_pattern("A[CG"), PatternError);
  EXPECT_THROW(encode_pattern("A]"), PatternError);
  EXPECT_THROW(encode_pattern("A C"), PatternError);
  try {
    encode_pattern("XYZ");
    FAIL() << "no exception";
  } catch (const PatternError& e) {
    EXPECT_NE(std::string(e.what()).find("'X'"), std::string::npos) << e.what();
  }
}

TEST(EncodePattern, DecodeReencodeIsIdentity) {
  for (std::size_t code = 0; code < kPatternCodeCount; ++code) {
    const auto c = static_cast<IupacCode>(code);
    EXPECT_EQ(code_of_class(class_of(c)), c);
    EXPECT_EQ(codes_of(encode_pattern(std::string(1, letter_of(c)))),
              (std::vector<int>{static_cast<int>(code)}));
  }
  const auto p = encode_pattern("ACGTMRWSYKVHDBN-");
  EXPECT_EQ(codes_of(encode_pattern(p.to_string())), codes_of(p));
}

TEST(PairIndex, Examples) {
  EXPECT_EQ(pair_index(IupacCode::D, Base::A), 48);
  EXPECT_EQ(pair_index(IupacCode::A, Base::A), 0);
  EXPECT_EQ(pair_index(IupacCode::C, Base::T), 7);
}

TEST(PairIndex, InjectiveOverAllPairs) {
  std::set<int> seen;
  for (std::size_t p = 0; p < kPatternCodeCount; ++p)
    for (std::size_t t = 0; t < kBaseCount; ++t)
      seen.insert(pair_index(static_cast<IupacCode>(p), static_cast<Base>(t)));
  EXPECT_EQ(seen.size(), kLutSize);
  EXPECT_EQ(*seen.begin(), 0);
  EXPECT_EQ(*seen.rbegin(), 63);
}

TEST(MatchLut, EqualsTable3) {
  const MatchLUT lut = build_match_lut();
  for (int row = 0; row < 16; ++row)
    for (int col = 0; col < 4; ++col)
      EXPECT_EQ(lut[row * 4 + col], kTable3[row][col]) << "index " << row * 4 + col;
  EXPECT_EQ(lut, kMatchLUT);
}

TEST(MatchLut, NamedEntries) {
  const MatchLUT lut = build_match_lut();
  EXPECT_EQ(lut[48], 0);
  EXPECT_EQ(lut[4], 1);
  EXPECT_EQ(lut[63], 1);
  for (int t = 0; t < 4; ++t) EXPECT_EQ(lut[60 + t], 1);
}

TEST(MatchLut, ZeroExactlyForMembers) {
  const char bases[] = {'A', 'C', 'G', 'T'};
  const MatchLUT lut = build_match_lut();
  int cases = 0;
  for (std::size_t code = 0; code < 15; ++code) {
    for (std::size_t t = 0; t < 4; ++t) {
      const bool member = kTable2[code].second.find(bases[t]) != std::string::npos;
      const auto idx = pair_index(static_cast<IupacCode>(code), static_cast<Base>(t));
      EXPECT_EQ(lut[idx] == 0, member) << kTable2[code].first << " over " << bases[t];
      ++cases;
    }
  }
  EXPECT_EQ(cases, 60);
}
