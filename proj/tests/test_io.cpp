#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bruhat/chain.hpp"
#include "bruhat/chain_io.hpp"
#include "bruhat/io.hpp"

using namespace bruhat;

TEST_CASE("matrix text round trip") {
  const auto a = BinaryMatrix::from_rows({"0110", "1100", "1001", "0011"});
  CHECK(to_text(a) == "0110\n1100\n1001\n0011\n");
  CHECK(parse_matrix_text(to_text(a)) == a);
  CHECK(parse_matrix_text("\n\n  10 \n 01\n\n11\n") == named::I2());
  CHECK_THROWS_AS(parse_matrix_text("\n \n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1x\n01\n"), ParseError);

  std::istringstream two("10\n01\n\n01\n10\n");
  CHECK(*read_matrix_text(two) == named::I2());
  CHECK(*read_matrix_text(two) == named::L2());
  CHECK_FALSE(read_matrix_text(two).has_value());
}

TEST_CASE("matrix JSON round trip") {
  const auto a = direct_sum({named::J2(), named::F3()});
  const auto j = to_json(a);
  CHECK(j.at("m") == 5);
  CHECK(j.at("n") == 5);
  CHECK(j.at("rows").at(2) == "00110");
  CHECK(matrix_from_json(j) == a);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"m", 2}, {"n", 2}, {"rows", {"10"}}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"m", 1}, {"n", 3}, {"rows", {"10"}}}), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", {"10"}}}), ParseError);
}

TEST_CASE("cumulative table output") {
  const auto t = cumulative_sums(named::J2());
  CHECK(to_json(t) == nlohmann::json::parse("[[1,2],[2,4]]"));
  std::ostringstream out;
  write_table_text(out, t);
  CHECK(out.str() == "1 2\n2 4\n");
}

TEST_CASE("margin parsing") {
  const auto mp = parse_margins("2,2,1/2,2,1");
  CHECK(mp.row_sums == std::vector<std::size_t>{2, 2, 1});
  CHECK(mp.col_sums == std::vector<std::size_t>{2, 2, 1});
  CHECK(parse_margins("1,2") == MarginPair{{1, 2}, {1, 2}});
  CHECK(parse_margins(" 3 , 1 /2,2") == MarginPair{{3, 1}, {2, 2}});
  CHECK(format_margins(mp) == "2,2,1/2,2,1");
  CHECK_THROWS_AS(parse_margins("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_margins("2,-1"), ParseError);
  CHECK_THROWS_AS(parse_margins("/1"), ParseError);
}

TEST_CASE("chain serialization round trip") {
  const auto base = base_chain_4();
  CHECK(chain_from_json(to_json(base)) == base);
  CHECK(parse_chain(to_json(base).dump()) == base);
  CHECK(parse_chain(nlohmann::json{{"command", "chain"}, {"result", to_json(base)}}.dump()) == base);

  std::ostringstream text;
  write_chain_text(text, base);
  CHECK(parse_chain(text.str()) == base);

  const auto spliced = chain_Y_to_Q5();
  const auto j = to_json(spliced);
  CHECK(j.at("mode") == "bruhat");
  CHECK(j.at("splices").size() == 1);
  CHECK(j.at("splices").at(0).at("at") == 0);
  CHECK(chain_from_json(j) == spliced);
  std::ostringstream spliced_text;
  write_chain_text(spliced_text, spliced);
  CHECK(parse_chain(spliced_text.str()) == spliced);

  Chain unspliced{named::I2(), {Interchange{0, 1, 0, 1, Direction::ItoL}}, ChainMode::Bruhat};
  std::ostringstream bruhat_text;
  write_chain_text(bruhat_text, unspliced);
  CHECK(bruhat_text.str().find("mode bruhat") != std::string::npos);
  CHECK(parse_chain(bruhat_text.str()) == unspliced);
}

TEST_CASE("malformed chains") {
  CHECK_THROWS_AS(parse_chain(""), MalformedChain);
  CHECK_THROWS_AS(parse_chain("10\n01\n\n0 1 0\n"), MalformedChain);
  CHECK_THROWS_AS(parse_chain("10\n01\n\n0 1 0 1 7\n"), MalformedChain);
  CHECK_THROWS_AS(parse_chain("10\n01\n\nmode sideways\n"), MalformedChain);
  CHECK_THROWS_AS(parse_chain("{\"mode\": \"interchange\""), MalformedChain);
  CHECK_THROWS_AS(parse_chain(R"({"mode":"other","start":{"m":1,"n":1,"rows":["1"]},"steps":[]})"), MalformedChain);
  CHECK_THROWS_AS(parse_chain(R"({"mode":"bruhat","start":{"m":1,"n":1,"rows":["1"]},"steps":[],
                                 "splices":[{"at":3,"matrix":{"m":1,"n":1,"rows":["1"]}}]})"),
                  MalformedChain);
}
