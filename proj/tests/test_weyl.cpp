#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "ideal_lab/errors.hpp"
#include "ideal_lab/poly.hpp"
#include "ideal_lab/weyl.hpp"
#include "ideal_lab/weyl_cache.hpp"
#include "test_helpers.hpp"

using namespace ideal_lab;

namespace {

RootSystem build(const char* name) { return RootSystem::build(parse_type_rank(name)); }

IntPolynomial length_histogram(const WeylGroup& W) {
  std::vector<BigInt> coeffs(W.root_system().num_positive_roots() + 1, 0);
  for (uint32_t e = 0; e < W.size(); ++e) coeffs[W.length(e)] += 1;
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("group sizes") {
  for (auto [name, order] : std::initializer_list<std::pair<const char*, uint64_t>>{
           {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B3", 48}, {"D4", 192}, {"G2", 12}, {"F4", 1152}}) {
    RootSystem rs = build(name);
    WeylGroup W = WeylGroup::enumerate(rs);
    CHECK(W.size() == order);
    CHECK(W.size() == rs.weyl_order());
  }
}

TEST_CASE("elements match the matrix-closure oracle") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    RootSystem rs = build(name);
    WeylGroup W = WeylGroup::enumerate(rs);
    auto oracle = test_oracle::weyl_matrix_closure(rs);
    REQUIRE(oracle.size() == W.size());
    for (uint32_t e = 0; e < W.size(); ++e)
      CHECK(oracle.count(test_oracle::element_matrix(rs, W, e)) == 1);
  }
}

TEST_CASE("identity, longest element, A1 and A2 basics") {
  RootSystem rs = build("A2");
  WeylGroup W = WeylGroup::enumerate(rs);
  CHECK(W.length(W.identity()) == 0);
  CHECK(W.inversions(W.identity()).empty());
  CHECK(W.length(W.longest()) == 3);
  CHECK(W.inversions(W.longest()) == rs.all_roots_mask());

  std::multiset<int> lengths;
  for (uint32_t e = 0; e < W.size(); ++e) lengths.insert(W.length(e));
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});

  RootSystem a1 = build("A1");
  WeylGroup W1 = WeylGroup::enumerate(a1);
  CHECK(W1.size() == 2);
  CHECK(W1.inversions(1) == IndexSet::single(0));
}

TEST_CASE("inversion sets are faithful and ordered by length") {
  for (const char* name : {"A3", "B3", "G2"}) {
    WeylGroup W = WeylGroup::enumerate(build(name));
    for (uint32_t e = 0; e < W.size(); ++e) {
      CHECK(W.inversions(e).count() == W.length(e));
      CHECK(W.find_by_inversions(W.inversions(e)) == e);
      if (e > 0) CHECK(W.length(e - 1) <= W.length(e));
      if (e > 0 && W.length(e - 1) == W.length(e))
        CHECK(W.inversions(e - 1) < W.inversions(e));
      // a simple reflection's inversion set is the simple root itself
      if (W.length(e) == 1) CHECK(W.inversions(e).count() == 1);
    }
    // the highest root is not simple, so {theta} is nobody's inversion set
    CHECK_FALSE(W.find_by_inversions(
                     IndexSet::single(W.root_system().num_positive_roots() - 1))
                    .has_value());
  }
}

TEST_CASE("length generating function factors over the exponents") {
  CHECK(length_histogram(WeylGroup::enumerate(build("A3"))) ==
        product_of_geometrics(std::vector<int>{1, 2, 3}));
  CHECK(length_histogram(WeylGroup::enumerate(build("B3"))) ==
        product_of_geometrics(std::vector<int>{1, 3, 5}));
  CHECK(length_histogram(WeylGroup::enumerate(build("G2"))) ==
        product_of_geometrics(std::vector<int>{1, 5}));
  CHECK(length_histogram(WeylGroup::enumerate(build("D4"))) ==
        product_of_geometrics(std::vector<int>{1, 3, 3, 5}));
}

TEST_CASE("composition, inverse, and right multiplication agree") {
  RootSystem rs = build("B3");
  WeylGroup W = WeylGroup::enumerate(rs);
  for (uint32_t e = 0; e < W.size(); ++e) {
    CHECK(W.compose(W.identity(), e) == e);
    CHECK(W.compose(e, W.identity()) == e);
    CHECK(W.compose(e, W.inverse(e)) == W.identity());
    CHECK(W.compose(W.inverse(e), e) == W.identity());
    CHECK(W.inverse_inversions(e) == W.inversions(W.inverse(e)));
    for (int s = 0; s < rs.rank(); ++s) {
      uint32_t simple = *W.find_by_inversions(IndexSet::single(s));
      CHECK(W.right_mult(e, s) == W.compose(e, simple));
      int diff = W.length(W.right_mult(e, s)) - W.length(e);
      CHECK(std::abs(diff) == 1);
      CHECK(W.right_mult(W.right_mult(e, s), s) == e);
    }
  }
  for (uint32_t a = 0; a < W.size(); a += 7)
    for (uint32_t b = 0; b < W.size(); b += 5)
      for (uint32_t c = 0; c < W.size(); c += 11)
        CHECK(W.compose(W.compose(a, b), c) == W.compose(a, W.compose(b, c)));
}

TEST_CASE("negative simple preimages read off the image codes") {
  RootSystem rs = build("B3");
  WeylGroup W = WeylGroup::enumerate(rs);
  for (uint32_t e = 0; e < W.size(); ++e)
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      int code = W.image_code(e, k);
      bool neg_simple = code < 0 && -code <= rs.rank();
      CHECK(W.neg_simple_preimages(e).test(k) == neg_simple);
      CHECK(W.image_root(e, k) == std::abs(code) - 1);
    }
}

TEST_CASE("length additivity four-way equivalence") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootSystem rs = build(name);
    WeylGroup W = WeylGroup::enumerate(rs);
    for (uint32_t x = 0; x < W.size(); ++x) {
      uint32_t xinv = W.inverse(x);
      for (uint32_t y = 0; y < W.size(); ++y) {
        uint32_t yx = W.compose(y, x);
        bool c1 = W.inversions(x).is_subset_of(W.inversions(yx));
        bool c4 = W.length(yx) == W.length(y) + W.length(x);

        bool c2 = true;
        IndexSet mapped;
        W.inversions(y).for_each([&](int g) {
          int code = W.image_code(xinv, g);
          if (code < 0) c2 = false;
          else mapped.set(code - 1);
        });
        bool c3 = c2 && !W.inversions(x).intersects(mapped) &&
                  (W.inversions(x) | mapped) == W.inversions(yx) &&
                  mapped.count() == W.inversions(y).count();

        CHECK(c1 == c4);
        CHECK(c2 == c4);
        CHECK(c3 == c4);
      }
    }
  }
}

TEST_CASE("chain property between nested inversion sets") {
  for (const char* name : {"A2", "B2", "A3", "B3", "C3", "G2"}) {
    RootSystem rs = build(name);
    WeylGroup W = WeylGroup::enumerate(rs);
    std::vector<uint32_t> simples;
    for (int s = 0; s < rs.rank(); ++s)
      simples.push_back(*W.find_by_inversions(IndexSet::single(s)));
    for (uint32_t x = 0; x < W.size(); ++x)
      for (uint32_t w = 0; w < W.size(); ++w) {
        const IndexSet nx = W.inversions(x), nw = W.inversions(w);
        if (!(nx.is_subset_of(nw) && nx != nw)) continue;
        bool up = false, down = false;
        for (uint32_t s : simples) {
          IndexSet grow = W.inversions(W.compose(s, x));
          if (nx.is_subset_of(grow) && nx != grow && grow.is_subset_of(nw)) up = true;
          IndexSet shrink = W.inversions(W.compose(s, w));
          if (nx.is_subset_of(shrink) && shrink.is_subset_of(nw) && shrink != nw) down = true;
        }
        CHECK(up);
        CHECK(down);
      }
  }
}

TEST_CASE("enumeration cap") {
  RootSystem rs = build("A2");
  CHECK_THROWS_AS(WeylGroup::enumerate(rs, 5), GroupTooLargeError);
  CHECK(WeylGroup::enumerate(rs, 6).size() == 6);
  CHECK_THROWS_AS(WeylGroup::enumerate(build("B9")), GroupTooLargeError);
}

TEST_CASE("disk cache round trip, corruption fallback") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ideal_lab_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  RootSystem rs = build("B3");
  WeylGroup fresh = load_or_enumerate_weyl(rs, 1'000'000, dir.string());
  fs::path file = weyl_cache_path(rs, dir.string());
  REQUIRE(fs::exists(file));

  auto check_same = [&](const WeylGroup& W) {
    REQUIRE(W.size() == fresh.size());
    for (uint32_t e = 0; e < W.size(); ++e) {
      CHECK(W.length(e) == fresh.length(e));
      CHECK(W.inversions(e) == fresh.inversions(e));
      for (int k = 0; k < rs.num_positive_roots(); ++k)
        CHECK(W.image_code(e, k) == fresh.image_code(e, k));
    }
  };
  check_same(load_or_enumerate_weyl(rs, 1'000'000, dir.string()));

  // corrupt one payload byte: checksum must reject, loader must recompute
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(64);
    char b = 0;
    f.seekg(64);
    f.read(&b, 1);
    b ^= 0x5a;
    f.seekp(64);
    f.write(&b, 1);
  }
  check_same(load_or_enumerate_weyl(rs, 1'000'000, dir.string()));

  // truncated file
  fs::resize_file(file, 10);
  check_same(load_or_enumerate_weyl(rs, 1'000'000, dir.string()));

  // cache for one type must not be picked up for another
  WeylGroup a3 = load_or_enumerate_weyl(build("A3"), 1'000'000, dir.string());
  CHECK(a3.size() == 24);

  fs::remove_all(dir);
}
