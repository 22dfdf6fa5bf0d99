#include <doctest.h>

#include <string>
#include <vector>

#include "ccx/bits.hpp"
#include "ccx/errors.hpp"
#include "ccx/wallspace.hpp"

using ccx::Bits;
using ccx::Wall;
using ccx::Wallspace;

namespace {

Wallspace square_walls() {
  // Elements are the four vertices of a square; walls are its two axes.
  return Wallspace::create({"00", "01", "10", "11"},
                           {{"h", Bits::from_string("0011")},   // 10, 11
                            {"v", Bits::from_string("0101")}});  // 01, 11
}

}  // namespace

TEST_SUITE("wallspace") {
  TEST_CASE("create accepts a valid wallspace and indexes elements") {
    Wallspace ws = square_walls();
    CHECK(ws.n_elements() == 4);
    CHECK(ws.n_walls() == 2);
    CHECK(ws.element_index("10") == 2);
    CHECK(ws.element_index("absent") == -1);
    CHECK(ws.plus(0).to_string() == "0011");
    CHECK(ws.minus(0).to_string() == "1100");
    CHECK(ws.walls()[1].name == "v");
  }

  TEST_CASE("zero walls is a valid wallspace") {
    Wallspace ws = Wallspace::create({"only"}, {});
    CHECK(ws.n_elements() == 1);
    CHECK(ws.n_walls() == 0);
  }

  TEST_CASE("empty wall names are auto-assigned by index") {
    Wallspace ws = Wallspace::create({"a", "b", "c"}, {{"", Bits::from_string("001")},
                                                       {"", Bits::from_string("011")}});
    CHECK(ws.walls()[0].name == "W0");
    CHECK(ws.walls()[1].name == "W1");
  }

  TEST_CASE("create rejects malformed input") {
    CHECK_THROWS_AS(Wallspace::create({}, {}), ccx::invalid_input_error);
    CHECK_THROWS_AS(Wallspace::create({"a", "a"}, {}), ccx::invalid_input_error);
    CHECK_THROWS_AS(Wallspace::create({"a", "b"}, {{"w", Bits::from_string("01")},
                                                   {"w", Bits::from_string("10")}}),
                    ccx::invalid_input_error);
    // one-sided walls
    CHECK_THROWS_AS(Wallspace::create({"a", "b"}, {{"w", Bits::from_string("00")}}),
                    ccx::invalid_input_error);
    CHECK_THROWS_AS(Wallspace::create({"a", "b"}, {{"w", Bits::from_string("11")}}),
                    ccx::invalid_input_error);
    // wrong width
    CHECK_THROWS_AS(Wallspace::create({"a", "b"}, {{"w", Bits::from_string("010")}}),
                    ccx::invalid_input_error);
  }

  TEST_CASE("duplicate partitions are rejected even with flipped sides") {
    CHECK_THROWS_AS(Wallspace::create({"a", "b", "c"}, {{"w1", Bits::from_string("011")},
                                                        {"w2", Bits::from_string("011")}}),
                    ccx::invalid_input_error);
    CHECK_THROWS_AS(Wallspace::create({"a", "b", "c"}, {{"w1", Bits::from_string("011")},
                                                        {"w2", Bits::from_string("100")}}),
                    ccx::invalid_input_error);
  }

  TEST_CASE("partition_key ignores which side is plus") {
    Wallspace a = Wallspace::create({"x", "y", "z"}, {{"w", Bits::from_string("011")}});
    Wallspace b = Wallspace::create({"x", "y", "z"}, {{"w", Bits::from_string("100")}});
    CHECK(a.partition_key(0) == b.partition_key(0));
    CHECK_FALSE(a.partition_key(0).get(0));  // key side avoids element 0
  }

  TEST_CASE("is_consistent accepts exactly the orientations with a common point") {
    Wallspace ws = square_walls();
    // Any orientation of two crossing walls is consistent: all four
    // quarterspaces of the square are nonempty.
    for (const char* o : {"00", "01", "10", "11"}) {
      auto r = ccx::is_consistent(ws, 0, Bits::from_string(o));
      CHECK(r.ok);
    }

    // Two nested walls on a 3-element path: flipping only the outer one
    // chooses disjoint halfspaces.
    Wallspace nested = Wallspace::create({"a", "b", "c"}, {{"w1", Bits::from_string("011")},
                                                           {"w2", Bits::from_string("001")}});
    CHECK(ccx::is_consistent(nested, 0, Bits::from_string("00")).ok);
    CHECK(ccx::is_consistent(nested, 0, Bits::from_string("10")).ok);
    CHECK(ccx::is_consistent(nested, 0, Bits::from_string("11")).ok);
    auto bad = ccx::is_consistent(nested, 0, Bits::from_string("01"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.wall_a == 0);
    CHECK(bad.wall_b == 1);

    // The same inconsistent choice expressed from a different base element.
    auto bad2 = ccx::is_consistent(nested, 2, Bits::from_string("10"));
    CHECK_FALSE(bad2.ok);
    CHECK_THROWS_AS(ccx::is_consistent(nested, 0, Bits::from_string("0")),
                    ccx::invalid_input_error);
  }
}
