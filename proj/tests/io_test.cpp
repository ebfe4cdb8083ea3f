#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "wpdid/errors.hpp"
#include "wpdid/io.hpp"

namespace wpdid {
namespace {

std::string parse_error_of(std::string_view text) {
  try {
    (void)parse_layout_document(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

TEST(LayoutDocument, ExactStringsAndPairs) {
  const auto file = parse_layout_document(R"({"positions": ["0", "1.2", "6"], "pairs": [[1, 3], [2, 3]]})");
  EXPECT_TRUE(file.layout.exact());
  EXPECT_EQ(file.layout.exact_positions()[1], Rational(6, 5));
  ASSERT_TRUE(file.pairs);
  const std::vector<SensorPair> expected{{0, 2}, {1, 2}};
  EXPECT_EQ(*file.pairs, expected);
  EXPECT_EQ(*file.distances().exact, (std::vector<Rational>{Rational(6), Rational(24, 5)}));
}

TEST(LayoutDocument, NumbersAndFractions) {
  EXPECT_TRUE(parse_layout_document(R"({"positions": [0, 2, 7]})").layout.exact());
  EXPECT_FALSE(parse_layout_document(R"({"positions": [0, 1.2, 6]})").layout.exact());
  const auto f = parse_layout_document(R"({"positions": ["0", "18/5", "8.1"]})");
  EXPECT_EQ(f.layout.exact_positions()[1], Rational(18, 5));
  EXPECT_FALSE(f.pairs);
  EXPECT_EQ(f.distances().size(), 3u);
}

TEST(LayoutDocument, ErrorsNameTheField) {
  EXPECT_NE(parse_error_of("{not json").find("malformed"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"pos": []})").find("'positions'"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["0", "abc"]})").find("positions[1]"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["0", true]})").find("positions[1]"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["0", "1"], "pairs": [[0, 1]]})").find("pairs[0]"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["0", "1"], "pairs": [[1]]})").find("pairs[0]"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["0", "1"], "pairs": [[2, 1]]})").find("pairs"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"positions": ["1", "1"]})").find("positions"), std::string::npos);
}

TEST(LayoutDocument, RoundTrip) {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> num(1, 1000);
  std::uniform_int_distribution<int> den(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> pos{Rational(0)};
    while (pos.size() < static_cast<std::size_t>(2 + trial % 5)) {
      Rational p(num(rng), den(rng));
      if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
    }
    LayoutFile file{make_layout(pos), std::nullopt};
    if (trial % 2 == 0) file.pairs = std::vector<SensorPair>{{0, 1}};
    const auto back = parse_layout_document(format_layout_document(file));
    EXPECT_EQ(back.layout, file.layout);
    EXPECT_EQ(back.pairs, file.pairs);
  }
  std::vector<double> floats{0.0, 0.1, 3.3};
  LayoutFile approx{make_layout(floats), std::nullopt};
  EXPECT_EQ(parse_layout_document(format_layout_document(approx)).layout.positions(), floats);
}

TEST(LayoutDocument, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "wpdid_io_test_layout.json";
  {
    std::ofstream out(path);
    out << R"({"positions": ["0", "3.6", "8.1"]})";
  }
  EXPECT_EQ(read_layout_file(path).layout.exact_positions()[2], Rational(81, 10));
  std::filesystem::remove(path);
  EXPECT_THROW(read_layout_file(path), Error);
}

TEST(ReportJson, UnidentifiableExample) {
  const auto report = check_identifiability(make_layout(std::vector<Rational>{Rational(0), Rational(6, 5), Rational(6)}));
  const auto doc = report_to_json(report);
  EXPECT_EQ(doc["verdict"], "Unidentifiable");
  EXPECT_EQ(doc["d"], nlohmann::json::parse(R"(["6/5", "6/1", "24/5"])"));
  EXPECT_EQ(doc["D"], nlohmann::json::parse("[1, 5, 4]"));
  EXPECT_EQ(doc["c"], "6/5");
  EXPECT_EQ(doc["I"], "5/6");
  EXPECT_EQ(doc["q_max"], nlohmann::json::parse("[1, 5, 4]"));
  EXPECT_EQ(doc["witness_q"], nlohmann::json::parse("[1, 5, 4]"));
  EXPECT_EQ(doc["ambiguous_sine_offsets"], nlohmann::json::parse(R"(["5/3"])"));
  EXPECT_EQ(doc["pairs"], nlohmann::json::parse("[[1, 2], [1, 3], [2, 3]]"));
  EXPECT_EQ(doc["exact"], true);
}

TEST(ReportJson, IncommensurableHasNullReduction) {
  const auto report = check_identifiability(make_layout(std::vector<double>{0.0, 1.0, 1.0 + std::sqrt(2.0)}));
  const auto doc = report_to_json(report);
  EXPECT_EQ(doc["verdict"], "IdentifiableByIncommensurability");
  EXPECT_TRUE(doc["D"].is_null());
  EXPECT_TRUE(doc["witness_q"].is_null());
}

TEST(IntegerJson, LargeValuesBecomeStrings) {
  EXPECT_EQ(integer_to_json(Integer(42)), 42);
  const Integer huge = Integer(1) << 80;
  EXPECT_EQ(integer_to_json(huge), "1208925819614629174706176");
}

TEST(SweepJson, Fields) {
  const auto layout = make_layout(std::vector<Rational>{Rational(0), Rational(1)});
  const std::vector<RmsePoint> points{{kNoiseFree, 0.0, 0}, {10.0, 0.5, 1}};
  const auto doc = rmse_sweep_to_json(layout, SweepSettings{0.1, 101, 5, 9}, points);
  EXPECT_EQ(doc["grid_size"], 101);
  EXPECT_EQ(doc["trials"], 5);
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_EQ(doc["points"][0]["snr_db"], "inf");
  EXPECT_EQ(doc["points"][1]["snr_db"], 10.0);
  EXPECT_EQ(doc["points"][1]["trials_failed"], 1);
  EXPECT_EQ(doc["layout"], nlohmann::json::parse(R"(["0/1", "1/1"])"));
}

}  // namespace
}  // namespace wpdid
