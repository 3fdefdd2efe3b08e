#include "liecheck/cache.hpp"
#include "liecheck/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace liecheck;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("liecheck-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("structure constants text round trip") {
  const auto d = RootDatum::build(parse_type("G2"));
  const auto L = LieAlgebraTable::build(d);
  const auto text = write_constants(L);
  CHECK(text.rfind("# liecheck structure constants\ntype G2\nversion 1\ndim 14\n", 0) == 0);
  CHECK(parse_constants(text, d.type()) == L.constants());
  CHECK_THROWS_AS(parse_constants(text, parse_type("A2")), ParseError);
  CHECK_THROWS_AS(parse_constants("type G2\nversion 1\ndim 14\n0 1 x 1\n", d.type()), ParseError);
  CHECK_THROWS_AS(parse_constants("type G2\nversion 9\ndim 14\n", d.type()), ParseError);
}

TEST_CASE("module text round trip") {
  const auto d = RootDatum::build(parse_type("B2"));
  const auto m = build_irrep(d, {1, 1});
  const auto back = parse_module(write_module(m), d.type(), {1, 1});
  CHECK(back.dim == m.dim);
  CHECK(back.e == m.e);
  CHECK(back.f == m.f);
  CHECK(back.h == m.h);
  CHECK(back.space_index == m.space_index);
  CHECK_THROWS_AS(parse_module(write_module(m), d.type(), {1, 0}), ParseError);
}

TEST_CASE("cache directory: miss, store, hit, corrupt file rebuilds") {
  TempDir tmp;
  const Cache cache(tmp.path);
  const auto d = RootDatum::build(parse_type("A2"));
  CHECK_FALSE(cache.load_algebra(d).has_value());
  const auto L = cache.algebra(d);
  CHECK(fs::exists(cache.constants_path(d.type())));
  const auto again = cache.load_algebra(d);
  REQUIRE(again.has_value());
  CHECK(again->constants() == L.constants());

  const auto m = cache.module(d, {1, 1});
  CHECK(cache.load_module(d, {1, 1}).has_value());
  CHECK(cache.entries().size() == 2);

  // a tampered matrix entry violates the Chevalley relations
  auto text = write_module(m);
  const auto entry = text.find('\n', text.find("matrix e 0")) + 1;
  const auto end = text.find('\n', entry);
  const auto last_space = text.rfind(' ', end);
  text.replace(last_space + 1, end - last_space - 1, "17");
  atomic_write(cache.module_path(d.type(), {1, 1}), text);
  CHECK_FALSE(cache.load_module(d, {1, 1}).has_value());
  CHECK(cache.module(d, {1, 1}).e == m.e);  // rebuilt silently
  CHECK(cache.load_module(d, {1, 1}).has_value());

  atomic_write(cache.constants_path(d.type()), "garbage\n");
  CHECK_FALSE(cache.load_algebra(d).has_value());
  CHECK(cache.algebra(d).constants() == L.constants());

  CHECK(cache.clear() == 2);
  CHECK(cache.entries().empty());
}

TEST_CASE("atomic_write leaves no temporary files") {
  TempDir tmp;
  atomic_write(tmp.path / "sub" / "a.txt", "hello\n");
  atomic_write(tmp.path / "sub" / "a.txt", "world\n");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(tmp.path / "sub")) {
    ++files;
    CHECK(e.path().filename() == "a.txt");
  }
  CHECK(files == 1);
  std::ifstream in(tmp.path / "sub" / "a.txt");
  std::string s;
  std::getline(in, s);
  CHECK(s == "world");
}
