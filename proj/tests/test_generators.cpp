#include "doctest.h"
#include "test_support.hpp"

#include "simcut/errors.hpp"
#include "simcut/generators.hpp"
#include "simcut/instance_io.hpp"

#include <algorithm>
#include <set>

using namespace simcut;
using namespace simcut::testing;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges()) {
    out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return out;
}

} // namespace

TEST_CASE("disjoint cycles on 5 vertices form K5") {
  GeneratorParams p;
  p.n = 5;
  p.ell = 2;
  const auto fam = std::get<GraphFamily>(generate(GeneratorKind::disjoint_cycles, p));
  REQUIRE(fam.size() == 2);
  auto all = edge_set(fam[0]);
  const auto second = edge_set(fam[1]);
  CHECK(fam[0].m() == 5);
  CHECK(fam[1].m() == 5);
  for (const auto& e : second) {
    CHECK(all.count(e) == 0);
    all.insert(e);
  }
  CHECK(all.size() == 10);
  for (Vertex v = 0; v < 5; ++v) {
    CHECK(fam[0].degree(v) == 2);
    CHECK(fam[1].degree(v) == 2);
  }
  CHECK(fam == c5_pair());
}

TEST_CASE("disjoint cycles reject bad parameters") {
  GeneratorParams p;
  p.n = 6;
  p.ell = 2;
  CHECK_THROWS_AS(generate(GeneratorKind::disjoint_cycles, p), ContractError);
  p.n = 5;
  p.ell = 3;
  CHECK_THROWS_AS(generate(GeneratorKind::disjoint_cycles, p), ContractError);
}

TEST_CASE("star") {
  GeneratorParams p;
  p.n = 11;
  const auto fam = std::get<GraphFamily>(generate(GeneratorKind::star, p));
  CHECK(fam.size() == 1);
  CHECK(fam[0].m() == 10);
  CHECK(fam[0].max_degree() == 10);
  CHECK(fam[0].degree(0) == 10);
}

TEST_CASE("gnm is deterministic and exact") {
  GeneratorParams p;
  p.n = 20;
  p.m = 50;
  p.seed = 7;
  CHECK(serialize(generate(GeneratorKind::gnm, p)) == serialize(generate(GeneratorKind::gnm, p)));
  const auto fam = std::get<GraphFamily>(generate(GeneratorKind::gnm, p));
  CHECK(fam[0].m() == 50);
  p.seed = 8;
  CHECK(serialize(generate(GeneratorKind::gnm, p)) != serialize(fam));

  p.m = 191;
  CHECK_THROWS_AS(generate(GeneratorKind::gnm, p), ContractError);
  p.m = 190;
  CHECK(std::get<GraphFamily>(generate(GeneratorKind::gnm, p))[0].m() == 190);
}

TEST_CASE("bounded degree respects its cap") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorParams p;
    p.n = 100 + seed;
    p.degree = 1 + seed % 4;
    p.ell = 2;
    p.seed = seed;
    const auto fam = std::get<GraphFamily>(generate(GeneratorKind::bounded_degree, p));
    for (const Graph& g : fam.graphs()) {
      CHECK(g.max_degree() <= p.degree);
      CHECK(g.m() > 0);
    }
    p.m = 30;
    const Instance cut = generate(GeneratorKind::bounded_degree, p);
    for (const Graph& g : std::get<GraphFamily>(cut).graphs()) {
      CHECK(g.m() == 30);
    }
  }
}

TEST_CASE("r-uniform hypergraphs honor the pair cap") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorParams p;
    p.n = 15;
    p.r = 3;
    p.m = 25;
    p.ell = 2;
    p.max_pair = 1 + seed % 2;
    p.seed = seed;
    const auto fam = std::get<HypergraphFamily>(generate(GeneratorKind::runiform, p));
    CHECK(fam.r() == 3);
    for (const Hypergraph& h : fam.members()) {
      CHECK(h.m() == 25);
      CHECK(h.delta2() <= p.max_pair);
    }
  }
}

TEST_CASE("generator names") {
  for (auto kind : {GeneratorKind::gnm, GeneratorKind::disjoint_cycles, GeneratorKind::star,
                    GeneratorKind::bounded_degree, GeneratorKind::runiform}) {
    CHECK(generator_from_string(to_string(kind)) == kind);
  }
  CHECK(to_string(GeneratorKind::disjoint_cycles) == "disjoint-cycles");
  CHECK_THROWS_AS(generator_from_string("petersen"), ContractError);
}
