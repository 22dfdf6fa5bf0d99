#include "ccx/fixtures.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "ccx/constructions.hpp"
#include "ccx/errors.hpp"

namespace ccx {
namespace {

std::string padded2(const std::string& prefix, int i) {
  std::string d = std::to_string(i);
  if (d.size() < 2) d.insert(d.begin(), '0');
  return prefix + d;
}

CubeComplex tripod() {
  std::vector<Bits> verts(4, Bits(3));
  verts[1].set(0);
  verts[2].set(1);
  verts[3].set(2);
  return CubeComplex::from_vertices({"l0", "l1", "l2"}, std::move(verts));
}

// Five squares arranged in a cycle around one central 0-cube; the central
// vertex's incident-edge structure is a pentagon, so consecutive walls cross
// and non-consecutive walls only touch.
CubeComplex tengon_five_squares() {
  std::vector<Bits> verts;
  verts.reserve(11);
  verts.push_back(Bits(5));
  for (int i = 0; i < 5; ++i) {
    Bits v(5);
    v.set(i);
    verts.push_back(v);
  }
  for (int i = 0; i < 5; ++i) {
    Bits v(5);
    v.set(i);
    v.set((i + 1) % 5);
    verts.push_back(v);
  }
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back(padded2("w", i));
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

// Deterministic small random dual: redraws until the wall count is met and
// the dual stays within 400 vertices, so every index yields a fixed complex.
CubeComplex random_dual_fixture(int k) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(1000003ULL * static_cast<std::uint64_t>(k + 1) +
                        static_cast<std::uint64_t>(attempt));
    int ne = 8 + static_cast<int>(rng() % 7);
    int nw = 6 + static_cast<int>(rng() % 7);
    std::vector<std::string> elements;
    elements.reserve(ne);
    for (int e = 0; e < ne; ++e) elements.push_back(padded2("s", e));
    std::vector<Wall> walls;
    std::unordered_set<Bits, BitsHash> partitions;
    for (int draws = 0; static_cast<int>(walls.size()) < nw && draws < 400; ++draws) {
      Bits plus(ne);
      for (int e = 0; e < ne; ++e)
        if (rng() & 1) plus.set(e);
      if (plus.none() || plus.count() == ne) continue;
      Bits key = plus.get(0) ? ~plus : plus;
      if (!partitions.insert(key).second) continue;
      walls.push_back({padded2("w", static_cast<int>(walls.size())), std::move(plus)});
    }
    if (static_cast<int>(walls.size()) < nw) continue;
    auto ws = Wallspace::create(std::move(elements), std::move(walls));
    try {
      return sageev_dual(ws, 0, 400);
    } catch (const resource_limit_error&) {
      continue;  // dual too big for the fixture budget; redraw
    }
  }
  throw internal_error("random fixture " + std::to_string(k) + " failed to converge");
}

}  // namespace

CubeComplex grid_complex(int a, int b) {
  if (a < 0 || b < 0) throw invalid_input_error("grid sides must be non-negative");
  if (a > 60 || b > 60) throw invalid_input_error("grid sides larger than 60 are not supported");
  std::vector<std::string> names;
  names.reserve(a + b);
  for (int i = 0; i < a; ++i) names.push_back(padded2("x", i));
  for (int j = 0; j < b; ++j) names.push_back(padded2("y", j));
  std::vector<Bits> verts;
  verts.reserve((a + 1) * (b + 1));
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      Bits v(a + b);
      for (int t = 0; t < i; ++t) v.set(t);
      for (int t = 0; t < j; ++t) v.set(a + t);
      verts.push_back(v);
    }
  }
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

CubeComplex path_complex(int n) {
  if (n < 0) throw invalid_input_error("path length must be non-negative");
  if (n > 4000) throw invalid_input_error("path length larger than 4000 is not supported");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(padded2("e", i));
  std::vector<Bits> verts;
  verts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    Bits v(n);
    for (int t = 0; t < i; ++t) v.set(t);
    verts.push_back(v);
  }
  return CubeComplex::from_vertices(std::move(names), std::move(verts));
}

CubeComplex fixture(const std::string& name) {
  if (name == "tripod") return tripod();
  if (name == "square") return grid_complex(1, 1);
  if (name == "10gon-5squares") return tengon_five_squares();
  if (name == "tripod-x-segment") return product(tripod(), path_complex(2));
  if (name == "wedge-squares") return generate("wedge", "square,square", 0);
  if (name == "wedge-square-tripod") return wedge(grid_complex(1, 1), tripod());
  auto num = [&](std::size_t pos) {
    std::string s = name.substr(pos);
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
      throw invalid_input_error("unknown fixture \"" + name + "\"");
    return std::stoi(s);
  };
  if (name.rfind("path-", 0) == 0) return path_complex(num(5));
  if (name.rfind("rand-", 0) == 0) return random_dual_fixture(num(5));
  if (name.rfind("grid-", 0) == 0) {
    auto x = name.find('x', 5);
    if (x != std::string::npos) {
      std::string a = name.substr(5, x - 5), b = name.substr(x + 1);
      if (!a.empty() && !b.empty() && a.find_first_not_of("0123456789") == std::string::npos &&
          b.find_first_not_of("0123456789") == std::string::npos && a.size() <= 3 && b.size() <= 3)
        return grid_complex(std::stoi(a), std::stoi(b));
    }
  }
  throw invalid_input_error("unknown fixture \"" + name + "\"");
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"tripod", "square"};
    for (int n = 1; n <= 8; ++n) v.push_back("path-" + std::to_string(n));
    for (const char* g : {"1x2", "1x3", "2x2", "2x3", "2x4", "3x3", "3x4", "4x4"})
      v.push_back(std::string("grid-") + g);
    v.push_back("wedge-squares");
    v.push_back("wedge-square-tripod");
    v.push_back("10gon-5squares");
    v.push_back("tripod-x-segment");
    for (int k = 0; k < 50; ++k) v.push_back("rand-" + std::to_string(k));
    return v;
  }();
  return names;
}

}  // namespace ccx
