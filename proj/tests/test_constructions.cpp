#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nilcover/catalog.hpp"
#include "nilcover/constructions.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/structure.hpp"
#include "oracles.hpp"

using namespace nilcover;

namespace {

std::vector<Index> max_clique(const FiniteGroup& g, ClassKind kind) {
  return clique_number(build_graph(g, kind)).vertices;
}

GroupPtr product_of(std::initializer_list<GroupPtr> fs) {
  const std::vector<GroupPtr> v(fs);
  return catalog::direct_product(v);
}

}  // namespace

TEST_CASE("product witness for homomorphism-closed classes") {
  auto s3 = catalog::build("S3");
  auto p = product_of({s3, s3});
  auto wa = max_clique(*s3, ClassKind::Abelian);
  REQUIRE(wa.size() == 4);
  auto w = product_witness_homclosed(*p, {s3, wa}, {s3, wa}, ClassKind::Abelian);
  CHECK(w.size() == 7);
  CHECK(verify_witness(*p, ClassKind::Abelian, w).verified);
  CHECK_FALSE(satisfies_condition(*p, ClassKind::Abelian, 6));

  const std::vector<Index> single = {wa.front()};
  auto w1 = product_witness_homclosed(*p, {s3, wa}, {s3, single}, ClassKind::Abelian);
  CHECK(w1.size() == 4);
  CHECK(verify_witness(*p, ClassKind::Abelian, w1).verified);

  auto a4 = catalog::build("A4");
  auto p2 = product_of({s3, a4});
  auto w2 = product_witness_homclosed(*p2, {s3, max_clique(*s3, ClassKind::Nilpotent)},
                                      {a4, max_clique(*a4, ClassKind::Nilpotent)}, ClassKind::Nilpotent);
  CHECK(w2.size() == 8);
  CHECK(verify_witness(*p2, ClassKind::Nilpotent, w2).verified);

  // The shape of the construction: n elements (x_i, 1) then (x_1, y_j).
  const GroupPtr f[] = {s3, s3};
  for (std::size_t i = 1; i < wa.size(); ++i) {
    const Index parts[] = {wa[i], s3->identity()};
    CHECK(w[i - 1] == catalog::embed(*p, f, parts));
  }
  for (std::size_t j = 0; j < wa.size(); ++j) {
    const Index parts[] = {wa[0], wa[j]};
    CHECK(w[wa.size() - 1 + j] == catalog::embed(*p, f, parts));
  }
}

TEST_CASE("product witnesses reject unverified inputs") {
  auto s3 = catalog::build("S3");
  auto p = product_of({s3, s3});
  const Index c = s3->index_of(parse_cycles("(1,2,3)", 3));
  const std::vector<Index> bad = {c, s3->mult(c, c)};
  auto good = max_clique(*s3, ClassKind::Abelian);
  CHECK_THROWS_AS(product_witness_homclosed(*p, {s3, bad}, {s3, good}, ClassKind::Abelian), ConstructionFailure);
  CHECK_THROWS_AS(product_witness_homclosed(*p, {s3, good}, {s3, {}}, ClassKind::Abelian), ConstructionFailure);
  const GroupWitness ws[] = {{s3, bad}, {s3, good}};
  CHECK_THROWS_AS(product_witness_nilpotent(*p, ws), ConstructionFailure);
  CHECK_THROWS_AS(product_witness_nilpotent(*p, {}), ConstructionFailure);
}

TEST_CASE("Cartesian product witness for the nilpotent class") {
  auto s3 = catalog::build("S3");
  auto wn = max_clique(*s3, ClassKind::Nilpotent);
  auto p = product_of({s3, s3});
  const GroupWitness two[] = {{s3, wn}, {s3, wn}};
  auto w = product_witness_nilpotent(*p, two);
  CHECK(w.size() == 16);
  CHECK(verify_witness(*p, ClassKind::Nilpotent, w).verified);
  CHECK_FALSE(satisfies_condition(*p, ClassKind::Nilpotent, 15));

  const GroupWitness one[] = {{s3, wn}};
  auto single = product_witness_nilpotent(*s3, one);
  CHECK(single == wn);

  auto a5 = catalog::build("A5");
  auto p2 = product_of({s3, a5});
  const GroupWitness mixed[] = {{s3, wn}, {a5, a5_sylow_witness(*a5)}};
  auto w2 = product_witness_nilpotent(*p2, mixed);
  CHECK(w2.size() == 84);
  CHECK(verify_witness(*p2, ClassKind::Nilpotent, w2).verified);
}

TEST_CASE("441 pairwise non-nilpotent elements of A5xA5") {
  auto a5 = catalog::build("A5");
  auto p = product_of({a5, a5});
  const GroupWitness w{a5, a5_sylow_witness(*a5)};
  const GroupWitness ws[] = {w, w};
  auto x = product_witness_nilpotent(*p, ws);
  REQUIRE(x.size() == 441);
  auto cert = verify_witness(*p, ClassKind::Nilpotent, x);
  CHECK(cert.verified);
  // A sample of pairs against the brute-force Sylow oracle.
  for (std::size_t a = 0; a < x.size(); a += 37) {
    for (std::size_t b = a + 1; b < x.size(); b += 53) {
      CHECK_FALSE(oracle::pair_in_class(*p, x[a], x[b], false));
    }
  }
}

TEST_CASE("Sylow witness and cover of A5") {
  auto a5 = catalog::build("A5");
  auto w = a5_sylow_witness(*a5);
  CHECK(w.size() == 21);
  CHECK(verify_witness(*a5, ClassKind::Nilpotent, w).verified);
  auto cover = a5_sylow_cover(*a5);
  REQUIRE(cover.size() == 21);
  Bitset all(a5->order());
  for (const auto& part : cover) {
    all |= part.member_set();
    CHECK(is_nilpotent(part));
    CHECK(part.contains(a5->identity()));
  }
  CHECK(all.count() == 60);
  CHECK(verify_cover(*a5, cover, ClassKind::Nilpotent));
  CHECK(verify_cover(*a5, cover, ClassKind::Abelian));
  for (std::size_t i = 0; i < cover.size(); ++i) CHECK(w[i] == cover[i].members()[1]);
  CHECK_THROWS_AS(a5_sylow_witness(*catalog::build("S5")), ConstructionFailure);
  CHECK_NOTHROW(a5_sylow_witness(*catalog::build("PSL(2,4)")));
  CHECK_NOTHROW(a5_sylow_cover(*catalog::build("SL(2,5)/Z")));
}

TEST_CASE("bundled S5 witness") {
  std::ifstream in(NILCOVER_S5_ASSET_PATH, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(std::string(s5_witness_asset()) == buf.str());

  auto s5 = catalog::build("S5");
  auto cert = s5_witness(*s5);
  CHECK(cert.size() == 22);
  CHECK(cert.verified);
  CHECK(cert.elements.front() == "(3,4,5)");
  CHECK(cert.elements.back() == "(1,5,3,2,4)");
  auto perms = parse_cycle_list(s5_witness_asset(), 5);
  for (std::size_t skip = 0; skip < perms.size(); ++skip) {
    std::vector<Permutation> rest;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (i != skip) rest.push_back(perms[i]);
    }
    CHECK(verify_witness(*s5, ClassKind::Nilpotent, rest).verified);
  }
  std::size_t checked = 0;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      CHECK_FALSE(oracle::pair_in_class(*s5, s5->index_of(perms[a]), s5->index_of(perms[b]), false));
      ++checked;
    }
  }
  CHECK(checked == 231);
}

TEST_CASE("SL(2,5) construction") {
  auto g = catalog::build("SL(2,5)");
  auto w = sl25_witness(*g);
  REQUIRE(w.size() == 22);
  auto cert = verify_witness(*g, ClassKind::Abelian, w);
  CHECK(cert.verified);
  auto z = center(*g);
  auto twos = sylow(*g, 2).subgroups;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(twos[i].contains(w[i]));
    CHECK_FALSE(z.contains(w[i]));
  }
  CHECK(twos[0].contains(w[21]));
  CHECK_FALSE(z.contains(w[21]));
  for (std::size_t i = 5; i < 15; ++i) CHECK(g->element_order(w[i]) == 3);
  for (std::size_t i = 15; i < 21; ++i) CHECK(g->element_order(w[i]) == 5);
  CHECK_FALSE(satisfies_condition(*g, ClassKind::Abelian, 21));
  CHECK_THROWS_AS(sl25_witness(*catalog::build("S5")), ConstructionFailure);
}

TEST_CASE("verify_cover") {
  auto s3 = catalog::build("S3");
  std::vector<Subgroup> parts;
  for (const char* c : {"(1,2,3)", "(1,2)", "(1,3)", "(2,3)"}) {
    const Index seeds[] = {s3->index_of(parse_cycles(c, 3))};
    parts.push_back(subgroup_generated(*s3, seeds));
  }
  CHECK(verify_cover(*s3, parts, ClassKind::Nilpotent));
  CHECK(verify_cover(*s3, parts, ClassKind::Abelian));
  CHECK(satisfies_condition(*s3, ClassKind::Abelian, parts.size()));
  std::vector<Subgroup> three(parts.begin(), parts.begin() + 3);
  CHECK_FALSE(verify_cover(*s3, three, ClassKind::Abelian));
  const std::vector<Subgroup> whole = {whole_group(*s3)};
  CHECK_FALSE(verify_cover(*s3, whole, ClassKind::Nilpotent));

  auto a4 = catalog::build("A4");
  std::vector<Subgroup> sy;
  for (unsigned p : {2U, 3U}) {
    for (auto& s : sylow(*a4, p).subgroups) sy.push_back(std::move(s));
  }
  CHECK(sy.size() == 5);
  CHECK(verify_cover(*a4, sy, ClassKind::Nilpotent));
  CHECK(satisfies_condition(*a4, ClassKind::Nilpotent, sy.size()));

  for (const char* spec : {"C1", "S3", "A4"}) {
    auto g = catalog::build(spec);
    const std::vector<Subgroup> triv = {trivial_subgroup(*g)};
    CHECK(verify_cover(*g, triv, ClassKind::Abelian) == (g->order() == 1));
  }
  auto other = catalog::build("S3");
  CHECK_THROWS_AS(verify_cover(*other, parts, ClassKind::Abelian), std::invalid_argument);
}

TEST_CASE("lifted covers") {
  auto g = catalog::build("C2xA5");
  auto z = center(*g);
  auto q = quotient(*g, z);
  auto cover = a5_sylow_cover(*q.group);
  auto lifted = lift_cover(*g, q, cover);
  REQUIRE(lifted.size() == 21);
  for (const auto& part : lifted) CHECK(z.is_subgroup_of(part));
  CHECK(verify_cover(*g, lifted, ClassKind::Abelian));
  CHECK(satisfies_condition(*g, ClassKind::Abelian, 21));

  auto sl = catalog::build("SL(2,5)");
  auto qs = quotient(*sl, center(*sl));
  auto lifted_sl = lift_cover(*sl, qs, a5_sylow_cover(*qs.group));
  CHECK(verify_cover(*sl, lifted_sl, ClassKind::Nilpotent));
  CHECK_FALSE(verify_cover(*sl, lifted_sl, ClassKind::Abelian));
}
