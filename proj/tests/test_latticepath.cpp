#include <doctest.h>

#include <algorithm>
#include <set>

#include "fockpath/latticepath.hpp"
#include "fockpath/sweep.hpp"

using namespace fockpath;

namespace {

const SignSequence kNine({2, 3, 5, 9}, {1, 4, 6, 7, 8});

std::vector<int> norms(const std::vector<LatticedPath>& ps) {
  std::vector<int> out;
  for (const auto& p : ps) out.push_back(p.norm());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> norms(const std::vector<WellNestedCollection>& ws) {
  std::vector<int> out;
  for (const auto& w : ws) out.push_back(w.norm);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::size_t count_strokes(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return c == '/' || c == '\\' || c == '_'; }));
}

}  // namespace

TEST_SUITE("latticepath") {
  TEST_CASE("nine-step example") {
    const auto paths = enumerate_latticed(kNine);
    CHECK(norms(paths) == std::vector<int>{10, 8, 8, 6, 4});
    CHECK(paths.front().flat.empty());
    CHECK(norms(enumerate_latticed_slow(kNine, 0, 10)) == std::vector<int>{10, 8, 8, 6, 4});
  }

  TEST_CASE("small windows") {
    const auto empty = enumerate_latticed(SignSequence{});
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().norm() == 1);
    CHECK(norms(enumerate_latticed(SignSequence({1, 2}, {3, 4}))) == std::vector<int>{5, 3, 1});
    const auto degenerate = make_path(kNine, 4, 4);
    CHECK(degenerate.degenerate());
    CHECK(degenerate.norm() == 0);
  }

  TEST_CASE("path construction and validation") {
    const auto p = make_path(kNine, 0, 10, {3, 4});
    CHECK(p.norm() == 8);
    CHECK(p.flattened_pairs() == std::vector<std::pair<int, int>>{{3, 4}});
    CHECK(p.height_after(0) == 0);
    CHECK(p.heights().back() == -1);
    CHECK_THROWS_AS(make_path(kNine, 0, 10, {2, 4}), std::invalid_argument);  // not a ridge
    CHECK_THROWS_AS(make_path(kNine, 0, 10, {4}), std::invalid_argument);
    CHECK_THROWS_AS(make_path(kNine, 5, 3), std::invalid_argument);
    const auto d = descending_path(SignSequence({2}, {3}), 1, 4);
    CHECK(d.flat == PositionSet{2, 3});
  }

  TEST_CASE("start heights are absolute") {
    const auto p = make_path(kNine, 3, 9);
    CHECK(p.start_height == kNine.height_after(3));
    CHECK(p.height_after(3) == p.start_height);
  }

  TEST_CASE("fast and slow enumerations agree") {
    for (int k = 0; k <= 7; ++k)
      for (const auto& t : sign_sequences_on(k)) {
        std::set<PositionSet> fast, slow;
        for (const auto& p : enumerate_latticed(t, 0, k + 1)) fast.insert(p.flat);
        for (const auto& p : enumerate_latticed_slow(t, 0, k + 1)) slow.insert(p.flat);
        CHECK(fast == slow);
      }
  }

  TEST_CASE("well-nested collections") {
    const SignSequence t1({4, 6}, {1, 2});
    auto ws = enumerate_wellnested(t1, {1, 2}, {4, 6});
    REQUIRE(ws.size() == 1);
    CHECK(ws.front().norm == 4);
    CHECK(ws.front().path_of(2).norm() == 1);
    CHECK(ws.front().path_of(1).norm() == 3);

    const SignSequence t2({3, 5, 6}, {1, 2, 4});
    ws = enumerate_wellnested(t2, {1, 2}, {5, 6});
    CHECK(norms(ws) == std::vector<int>{8, 6, 4});
    for (const auto& w : ws) CHECK(is_well_nested(w));
    // Outer generic with the inner path flattened dips below: excluded.
    const auto outer = make_path(t2, 1, 6);
    const auto inner = make_path(t2, 2, 5, {3, 4});
    CHECK_FALSE(nested_ok(outer, inner));
    CHECK_THROWS(make_collection({{1, 6}, {2, 5}}, {outer, inner}));

    CHECK_THROWS_AS(enumerate_wellnested(t2, {1}, {}), PairingError);
    CHECK_THROWS_AS(enumerate_wellnested(t2, {5}, {6}), PairingError);
  }

  TEST_CASE("a single pair gives the window's latticed paths") {
    const auto ws = enumerate_wellnested(kNine, {1}, {9});
    CHECK(norms(ws) == norms(enumerate_latticed(kNine, 1, 9)));
  }

  TEST_CASE("rendering") {
    const SignSequence valley({2}, {1});
    const auto a = render_sequence(valley, RenderFormat::ascii);
    CHECK(a == render_sequence(valley, RenderFormat::ascii));
    CHECK(count_strokes(a) == 2);
    CHECK(a.find("\\/") != std::string::npos);
    CHECK(count_strokes(render_sequence(kNine, RenderFormat::ascii)) == 9);
    CHECK(render_sequence(SignSequence{}, RenderFormat::ascii).empty());
    const auto flat = render_path(make_path(kNine, 0, 10, {3, 4}), RenderFormat::ascii);
    CHECK(std::count(flat.begin(), flat.end(), '_') == 2);
    const auto svg = render_path(make_path(kNine, 0, 10, {3, 4}), RenderFormat::svg, true);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(parse_render_format("svg") == RenderFormat::svg);
    CHECK_THROWS(parse_render_format("png"));
  }
}
