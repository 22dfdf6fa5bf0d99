#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ccx/bits.hpp"

using ccx::Bits;

namespace {

Bits random_bits(std::mt19937_64& rng, int n) {
  Bits b(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) b.set(i);
  return b;
}

}  // namespace

TEST_SUITE("bits") {
  TEST_CASE("string roundtrip and bit indexing") {
    Bits b = Bits::from_string("01101");
    CHECK(b.size() == 5);
    CHECK_FALSE(b.get(0));
    CHECK(b.get(1));
    CHECK(b.get(2));
    CHECK_FALSE(b.get(3));
    CHECK(b.get(4));
    CHECK(b.to_string() == "01101");
    CHECK(Bits::from_string("").size() == 0);
    CHECK(Bits::from_string("").to_string() == "");
  }

  TEST_CASE("set, flip, count, any, none") {
    Bits b(70);  // spans two words
    CHECK(b.none());
    CHECK(b.count() == 0);
    b.set(0);
    b.set(69);
    CHECK(b.any());
    CHECK(b.count() == 2);
    b.set(69, false);
    CHECK(b.count() == 1);
    b.flip(69);
    b.flip(0);
    CHECK(b.count() == 1);
    CHECK(b.get(69));
    CHECK_FALSE(b.get(0));
  }

  TEST_CASE("ones keeps trailing bits clear") {
    Bits b = Bits::ones(70);
    CHECK(b.count() == 70);
    CHECK((~b).count() == 0);
    CHECK((~Bits(70)).count() == 70);
  }

  TEST_CASE("boolean algebra against per-bit oracle") {
    std::mt19937_64 rng(12345);
    for (int n : {1, 7, 64, 65, 130}) {
      Bits a = random_bits(rng, n), b = random_bits(rng, n);
      Bits band = a & b, bor = a | b, bxor = a ^ b, bminus = a.minus(b), bnot = ~a;
      int hamming_oracle = 0;
      bool intersects_oracle = false, subset_oracle = true;
      for (int i = 0; i < n; ++i) {
        CHECK(band.get(i) == (a.get(i) && b.get(i)));
        CHECK(bor.get(i) == (a.get(i) || b.get(i)));
        CHECK(bxor.get(i) == (a.get(i) != b.get(i)));
        CHECK(bminus.get(i) == (a.get(i) && !b.get(i)));
        CHECK(bnot.get(i) == !a.get(i));
        hamming_oracle += a.get(i) != b.get(i);
        intersects_oracle = intersects_oracle || (a.get(i) && b.get(i));
        subset_oracle = subset_oracle && (!a.get(i) || b.get(i));
      }
      CHECK(a.hamming(b) == hamming_oracle);
      CHECK(a.intersects(b) == intersects_oracle);
      CHECK(a.is_subset_of(b) == subset_oracle);
      CHECK(band.is_subset_of(a));
      CHECK(a.is_subset_of(bor));
      Bits acc = a;
      acc |= b;
      CHECK(acc == bor);
      acc = a;
      acc &= b;
      CHECK(acc == band);
    }
  }

  TEST_CASE("majority matches per-bit vote") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 100);
      Bits a = random_bits(rng, n), b = random_bits(rng, n), c = random_bits(rng, n);
      Bits m = Bits::majority(a, b, c);
      for (int i = 0; i < n; ++i) {
        int votes = a.get(i) + b.get(i) + c.get(i);
        CHECK(m.get(i) == (votes >= 2));
      }
    }
  }

  TEST_CASE("first_set and next_set enumerate the set bits in order") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 150);
      Bits b = random_bits(rng, n);
      std::vector<int> expected;
      for (int i = 0; i < n; ++i)
        if (b.get(i)) expected.push_back(i);
      std::vector<int> got;
      for (int i = b.first_set(); i >= 0; i = b.next_set(i)) got.push_back(i);
      CHECK(got == expected);
    }
    CHECK(Bits(5).first_set() == -1);
    Bits single(65);
    single.set(64);
    CHECK(single.first_set() == 64);
    CHECK(single.next_set(64) == -1);
  }

  TEST_CASE("lex_less agrees with string comparison") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 1 + static_cast<int>(rng() % 130);
      Bits a = random_bits(rng, n), b = random_bits(rng, n);
      CHECK(a.lex_less(b) == (a.to_string() < b.to_string()));
      CHECK_FALSE(a.lex_less(a));
    }
  }

  TEST_CASE("equality and hash") {
    Bits a = Bits::from_string("10110");
    Bits b = Bits::from_string("10110");
    Bits c = Bits::from_string("10111");
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.hash() == b.hash());
    CHECK(Bits(3) != Bits(4));  // same (empty) content, different width
  }

  TEST_CASE("sorting with BitsLexLess matches string sort") {
    std::vector<std::string> strings = {"110", "001", "010", "000", "101"};
    std::vector<Bits> bits;
    for (const auto& s : strings) bits.push_back(Bits::from_string(s));
    std::sort(bits.begin(), bits.end(), ccx::BitsLexLess{});
    std::sort(strings.begin(), strings.end());
    for (std::size_t i = 0; i < strings.size(); ++i) CHECK(bits[i].to_string() == strings[i]);
  }
}
