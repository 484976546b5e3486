#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapda/audit.hpp"
#include "mapda/constructions.hpp"
#include "mapda/lift.hpp"
#include "mapda/text_format.hpp"
#include "mapda/validate.hpp"
#include "support.hpp"

using namespace mapda;
using testing_support::arr;

namespace {

// 4-user, 3-antenna array with one star per column; every block appears in
// every row-and-column of its own subarray.
const char* kExampleMapda = "4 4\n* 1 2 3\n1 * 3 2\n2 3 * 1\n3 2 1 *\n";

// 6x4 single-antenna base array (the t=2 subset construction for 4 users).
const char* kSubsetBase = "6 4\n* * 1 2\n* 1 * 3\n* 2 3 *\n1 * * 4\n2 * 4 *\n3 4 * *\n";

// Valid but irregular: block 1 occurs twice, blocks 2 and 3 once.
const char* kIrregularPda = "3 2\n* 1\n1 *\n2 3\n";

}  // namespace

TEST_CASE("entries distinguish stars from block indices") {
  const Entry star = Entry::star();
  CHECK(star.is_star());
  CHECK_FALSE(star.is_integer());
  CHECK_EQ(star.code(), 0);
  CHECK_THROWS_AS(star.value(), std::logic_error);

  const Entry five = Entry::integer(5);
  CHECK(five.is_integer());
  CHECK_EQ(five.value(), 5);
  CHECK_EQ(five, Entry::from_code(5));
  CHECK_THROWS_AS(Entry::integer(0), std::invalid_argument);
  CHECK_THROWS_AS(Entry::integer(-3), std::invalid_argument);
}

TEST_CASE("coded arrays start all-star and reject bad shapes") {
  CodedArray a(2, 3);
  for (std::int64_t r = 0; r < 2; ++r)
    for (std::int64_t c = 0; c < 3; ++c) CHECK(a.is_star(r, c));
  a.set(1, 2, Entry::integer(7));
  CHECK_EQ(a.at(1, 2).value(), 7);
  CHECK_EQ(a.max_value(), 7);
  CHECK_THROWS_AS(CodedArray(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("text format round-trips bit-exactly") {
  for (const char* text : {kExampleMapda, kSubsetBase, kIrregularPda}) {
    const CodedArray a = arr(text);
    CHECK_EQ(to_text(a), text);
    CHECK_EQ(parse_array(to_text(a)), a);
  }
  const CodedArray lifted = mn_mapda(4, 2, 2, 3).p;
  CHECK_EQ(parse_array(to_text(lifted)), lifted);
}

TEST_CASE("parser rejects malformed input with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_array(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::int64_t{-1};
  };
  CHECK_EQ(line_of(""), 1);                          // empty
  CHECK_EQ(line_of("2\n* *\n* *\n"), 1);             // header needs two counts
  CHECK_EQ(line_of("2 2\n* *\n*\n"), 3);             // short row
  CHECK_EQ(line_of("2 2\n* * *\n* *\n"), 2);         // long row
  CHECK_EQ(line_of("2 2\n* 0\n* *\n"), 2);           // zero is not a block index
  CHECK_EQ(line_of("2 2\n* -1\n* *\n"), 2);          // negative
  CHECK_EQ(line_of("2 2\n* x\n* *\n"), 2);           // junk token
  CHECK_EQ(line_of("2 2\n* *\n* *"), 1);             // missing trailing newline
  CHECK_EQ(line_of("2 2\n* *\n* *\n* *\n"), 4);      // extra row
  CHECK_EQ(line_of("0 2\n"), 1);                     // empty shape
}

TEST_CASE("file reads wrap errors with the path") {
  CHECK_THROWS_AS(read_array_file("missing-dir/nope.pda"), std::runtime_error);

  const std::string path =
      (std::filesystem::temp_directory_path() / "mapda-bad-fixture.pda").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << "2 2\n* y\n* *\n";
  }
  try {
    read_array_file(path);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find(path) != std::string::npos);
    CHECK_EQ(e.line(), 2);
  }
  std::filesystem::remove(path);
}

TEST_CASE("validate_pda accepts the subset base array") {
  const PdaParams p = validate_pda(arr(kSubsetBase));
  CHECK_EQ(p.users, 4);
  CHECK_EQ(p.packets, 6);
  CHECK_EQ(p.stars, 3);
  CHECK_EQ(p.blocks, 4);
  CHECK_EQ(p.regularity, 3);
}

TEST_CASE("validate_pda accepts a single column of stars over distinct integers") {
  const PdaParams p = validate_pda(arr("4 1\n*\n*\n1\n2\n"));
  CHECK_EQ(p.users, 1);
  CHECK_EQ(p.stars, 2);
  CHECK_EQ(p.blocks, 2);
  CHECK_EQ(p.regularity, 1);
}

TEST_CASE("validate_pda reports an integer repeated in one column") {
  try {
    validate_pda(arr("4 2\n1 *\n1 *\n* 2\n* 2\n"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::repeated_in_line);
    REQUIRE_EQ(e.where().size(), 2);
    CHECK_EQ(e.where()[0], Position{1, 1});
    CHECK_EQ(e.where()[1], Position{2, 1});
    CHECK_EQ(e.value(), 1);
  }
}

TEST_CASE("validate_pda reports a missing star pair") {
  // Equal integers in distinct rows and columns, but one crossing cell holds
  // an integer instead of a star.
  try {
    validate_pda(arr("3 3\n* 1 2\n1 2 *\n2 * 1\n"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::missing_star_pair);
  }
}

TEST_CASE("validate_pda reports gaps in the block indices") {
  try {
    validate_pda(arr("2 2\n* 1\n3 *\n"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::integer_range);
    CHECK_EQ(e.value(), 2);  // first missing index
  }
}

TEST_CASE("validate_pda reports unequal star counts") {
  try {
    validate_pda(arr("2 2\n* 1\n* 1\n"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::star_count);
  }
}

TEST_CASE("validate_mapda accepts the 4x4 example at three antennas") {
  const MapdaParams p = validate_mapda(arr(kExampleMapda), 3);
  CHECK_EQ(p.antennas, 3);
  CHECK_EQ(p.users, 4);
  CHECK_EQ(p.packets, 4);
  CHECK_EQ(p.stars, 1);
  CHECK_EQ(p.blocks, 3);
  CHECK_EQ(p.regularity, 4);
}

TEST_CASE("validate_mapda rejects the 4x4 example at two antennas") {
  try {
    validate_mapda(arr(kExampleMapda), 2);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::row_budget);
    CHECK_EQ(e.value(), 1);  // block 1's subarray is the whole array
    // The witness row carries three integer entries, one more than allowed.
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("validate_mapda rejects an all-star array for lack of blocks") {
  try {
    validate_mapda(CodedArray(2, 2), 1);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::integer_range);
  }
}

TEST_CASE("validate_mapda rejects a block repeated within a column") {
  try {
    validate_mapda(arr("4 2\n1 *\n1 *\n* 2\n* 2\n"), 2);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_EQ(e.condition(), Violation::column_repeat);
    REQUIRE_EQ(e.where().size(), 2);
    CHECK_EQ(e.where()[0], Position{1, 1});
    CHECK_EQ(e.where()[1], Position{2, 1});
  }
}

TEST_CASE("validate_mapda allows row repeats that single-antenna arrays forbid") {
  // Block 1 twice in row 1: fine for two antennas, fatal for a PDA.
  const CodedArray a = arr("2 2\n1 1\n* *\n");
  const MapdaParams p = validate_mapda(a, 2);
  CHECK_EQ(p.blocks, 1);
  CHECK_THROWS_AS(validate_pda(a), ValidationError);
  CHECK_THROWS_AS(validate_mapda(a, 1), ValidationError);
}

TEST_CASE("one-antenna validation matches single-antenna validation everywhere") {
  std::vector<CodedArray> corpus = {
      arr(kExampleMapda), arr(kSubsetBase), arr(kIrregularPda),
      mn_pda(5, 2),       latin_square(4),  latin_mapda(5, 2),
      latin_mapda(4, 1),  arr("4 1\n*\n*\n1\n2\n"),
  };
  std::uint64_t seed = 1;
  std::vector<CodedArray> probes;
  for (const CodedArray& a : corpus) {
    probes.push_back(a);
    for (int i = 0; i < 25; ++i) {
      probes.push_back(testing_support::mutate_one_cell(a, seed++));
    }
  }
  for (const CodedArray& a : probes) {
    bool pda_ok = true;
    try {
      validate_pda(a);
    } catch (const ValidationError&) {
      pda_ok = false;
    }
    bool one_antenna_ok = true;
    try {
      validate_mapda(a, 1);
    } catch (const ValidationError&) {
      one_antenna_ok = false;
    }
    CHECK_EQ(pda_ok, one_antenna_ok);
  }
}

TEST_CASE("the quadratic scanner and the validator agree on small arrays") {
  std::vector<CodedArray> corpus = {
      arr(kExampleMapda),      arr(kSubsetBase),       arr(kIrregularPda),
      latin_square(4),         latin_square(8),        latin_mapda(5, 2),
      latin_mapda(6, 3),       latin_mapda(4, 4),      mn_pda(4, 2),
      mn_mapda(4, 2, 2, 2).p,  arr("4 1\n*\n*\n1\n2\n"),
      arr("2 2\n1 1\n* *\n"),  arr("2 2\n* 1\n1 2\n"),
  };
  std::uint64_t seed = 77;
  std::vector<CodedArray> probes;
  for (const CodedArray& a : corpus) {
    REQUIRE_LE(a.rows() * a.cols(), 64);
    probes.push_back(a);
    for (int i = 0; i < 40; ++i) {
      probes.push_back(testing_support::mutate_one_cell(a, seed++));
    }
  }
  for (const CodedArray& a : probes) {
    bool pda_ok = true;
    try {
      validate_pda(a);
    } catch (const ValidationError&) {
      pda_ok = false;
    }
    CHECK_EQ(pda_ok, testing_support::scan_pda(a));
    for (std::int64_t antennas = 1; antennas <= 4; ++antennas) {
      bool mapda_ok = true;
      try {
        validate_mapda(a, antennas);
      } catch (const ValidationError&) {
        mapda_ok = false;
      }
      CHECK_EQ(mapda_ok, testing_support::scan_mapda(a, antennas));
    }
  }
}

TEST_CASE("subarray_of spans exactly the rows and columns holding the block") {
  const CodedArray a = arr(kExampleMapda);
  const SubarrayView whole = subarray_of(a, 1);
  CHECK_EQ(whole.row_count(), 4);
  CHECK_EQ(whole.col_count(), 4);
  CHECK_EQ(whole.materialize(), a);

  CodedArray single(2, 3);
  single.set(0, 0, Entry::integer(1));
  const SubarrayView tiny = subarray_of(single, 1);
  CHECK_EQ(tiny.row_count(), 1);
  CHECK_EQ(tiny.col_count(), 1);
  CHECK_EQ(tiny.at(0, 0).value(), 1);

  CHECK_THROWS_AS(subarray_of(a, 9), std::invalid_argument);
}

TEST_CASE("block occurrences come back in row-major order") {
  const auto occ = block_occurrences(arr(kIrregularPda));
  REQUIRE_EQ(occ.size(), 3);
  REQUIRE_EQ(occ[0].size(), 2);
  CHECK_EQ(occ[0][0], Position{1, 2});
  CHECK_EQ(occ[0][1], Position{2, 1});
  CHECK_EQ(occ[1], std::vector<Position>{Position{3, 1}});
  CHECK_EQ(occ[2], std::vector<Position>{Position{3, 2}});
  CHECK_THROWS_AS(block_occurrences(arr("1 2\n1 3\n")), ValidationError);
}

TEST_CASE("star audit of the 4x4 example meets the bound with equality") {
  const StarAudit audit = star_audit(arr(kExampleMapda), 3);
  CHECK_EQ(audit.integer_entries, 12);
  CHECK_EQ(audit.occurrences, std::vector<std::int64_t>{4, 4, 4});
  CHECK_EQ(audit.stars_used, 12);
  CHECK_EQ(audit.stars_available, 12);
  CHECK_EQ(audit.min_blocks, make_rational(3, 1));  // 48/16
  CHECK_EQ(audit.dof_bound, make_rational(4, 1));
  CHECK_EQ(audit.achieved_dof, make_rational(4, 1));
  CHECK(audit.meets_bound_with_equality);
}

TEST_CASE("star audit with all-distinct blocks uses no stars") {
  const StarAudit audit = star_audit(arr("2 2\n* 1\n2 *\n"), 1);
  CHECK_EQ(audit.stars_used, 0);
  CHECK_EQ(audit.integer_entries, 2);
  CHECK_LE(audit.stars_used, audit.stars_available);
}

TEST_CASE("star audit of the lifted 42-row array hits degrees of freedom seven") {
  const StarAudit audit = star_audit(mn_mapda(4, 2, 2, 3).p, 3);
  CHECK_EQ(audit.params.users, 8);
  CHECK_EQ(audit.params.packets, 42);
  CHECK_EQ(audit.achieved_dof, make_rational(7, 1));
  CHECK_EQ(audit.dof_bound, make_rational(7, 1));
  CHECK(audit.meets_bound_with_equality);
  CHECK_LE(audit.stars_used, audit.stars_available);
  CHECK_LE(audit.min_blocks, make_rational(audit.params.blocks, 1));
}

TEST_CASE("sum-DoF formula on frozen parameter tuples") {
  CHECK_EQ(sum_dof(MapdaParams{3, 4, 4, 1, 3, 4}), make_rational(4, 1));
  CHECK_EQ(sum_dof(MapdaParams{3, 8, 42, 21, 24, 7}), make_rational(7, 1));
  // One uncached packet per user, one block per user: exactly one unit.
  CHECK_EQ(sum_dof(MapdaParams{1, 6, 5, 4, 6, {}}), make_rational(1, 1));
}

TEST_CASE("irregular arrays report no regularity") {
  const PdaParams p = validate_pda(arr(kIrregularPda));
  CHECK_EQ(p.blocks, 3);
  CHECK_FALSE(p.regularity.has_value());
}
