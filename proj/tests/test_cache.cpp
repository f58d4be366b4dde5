#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fockpath/cache.hpp"
#include "fockpath/json_io.hpp"

using namespace fockpath;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("fockpath_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("json encodings") {
    const auto p = LaurentPolynomial::monomial(-1) + LaurentPolynomial::monomial(2, 3);
    CHECK(to_json(p) == Json::parse(R"({"-1":1,"2":3})"));
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(to_json(Partition{3, 1}) == Json::parse("[3,1]"));
    CHECK(partition_from_json(Json::parse("[]")) == Partition{});
    const SignSequence t({2, 3}, {1});
    CHECK(sign_sequence_from_json(to_json(t)) == t);
    CanonicalBasis basis(2);
    const auto rec = canonical_record(Partition{2}, basis.get(Partition{2}));
    CHECK(rec["mu"] == Json::parse("[2]"));
    const auto [mu, g] = canonical_record_from_json(rec);
    CHECK(mu == Partition{2});
    CHECK(g == basis.get(Partition{2}));
    CHECK_THROWS(poly_from_json(Json::parse(R"({"x":1})")));
  }

  TEST_CASE("checksum") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("write then read is identical; missing directory is created") {
    TempDir dir;
    CanonicalBasis basis(2);
    const auto& elements = basis.elements_of_size(6);
    write_cache(dir.path / "nested", 2, 6, elements);
    const auto back = read_cache(dir.path / "nested", 2, 6);
    REQUIRE(back.has_value());
    CHECK(*back == elements);
    CHECK_FALSE(read_cache(dir.path / "nested", 2, 7).has_value());
    for (const auto& entry : fs::directory_iterator(dir.path / "nested"))
      CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }

  TEST_CASE("corruption is rejected, reported and recomputed") {
    TempDir dir;
    CanonicalBasis fresh(2);
    const auto expected = fresh.elements_of_size(6);
    write_cache(dir.path, 2, 6, expected);
    const auto file = cache_file(dir.path, 2, 6);
    auto bytes = slurp(file);
    const auto pos = bytes.find("\"poly\"");
    REQUIRE(pos != std::string::npos);
    bytes[pos + 1] = 'P';
    std::ofstream(file, std::ios::binary | std::ios::trunc) << bytes;
    CHECK_THROWS_AS(read_cache(dir.path, 2, 6), CacheError);

    CanonicalBasis cached(2, dir.path);
    CHECK(cached.elements_of_size(6) == expected);
    CHECK_FALSE(cached.diagnostics().empty());
    CHECK(cached.loaded_sizes().count(6) == 0);
    // The recomputed size was written back and now loads cleanly.
    CanonicalBasis again(2, dir.path);
    CHECK(again.elements_of_size(6) == expected);
    CHECK(again.diagnostics().empty());
    CHECK(again.loaded_sizes().count(6) == 1);
  }

  TEST_CASE("a file for another size is rejected") {
    TempDir dir;
    CanonicalBasis basis(2);
    write_cache(dir.path, 2, 4, basis.elements_of_size(4));
    fs::create_directories(dir.path);
    fs::copy_file(cache_file(dir.path, 2, 4), cache_file(dir.path, 2, 5));
    CHECK_THROWS_AS(read_cache(dir.path, 2, 5), CacheError);
  }
}
