#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "nilcover/catalog.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/pair_graph.hpp"
#include "nilcover/structure.hpp"
#include "oracles.hpp"

using namespace nilcover;

namespace {

const std::vector<std::string> kSmall = {"C1",  "C6",      "C12",   "C2xC2", "S3",    "S4",    "A4",     "D4",
                                         "D5",  "D6",      "Q8",    "Q16",   "Q32",   "S3xC4", "SL(2,3)", "A4xC2",
                                         "A5",  "SL(2,5)", "S5",    "C2xA5", "D4xC3", "S3xS3", "PSL(2,7)", "A4xS3",
                                         "Q8xS3", "SL(2,5)/Z", "S4/Z*"};

std::vector<Index> members_of(const Subgroup& h) { return {h.members().begin(), h.members().end()}; }

Index idx(const FiniteGroup& g, const char* cycles) { return g.index_of(parse_cycles(cycles, g.degree())); }

Subgroup gen(const FiniteGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<Index> seeds;
  for (const char* c : cycles) seeds.push_back(idx(g, c));
  return subgroup_generated(g, seeds);
}

}  // namespace

TEST_CASE("center") {
  CHECK(center(*catalog::build("S3")).is_trivial());
  CHECK(center(*catalog::build("SL(2,5)")).order() == 2);
  CHECK(center(*catalog::build("C6")).is_whole());
  CHECK(center(*catalog::build("Q8")).order() == 2);
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    auto z = center(*g);
    for (Index x : z.members()) {
      for (Index y = 0; y < g->order(); ++y) REQUIRE(g->mult(x, y) == g->mult(y, x));
    }
    std::size_t central = 0;
    for (Index x = 0; x < g->order(); ++x) {
      bool all = true;
      for (Index y = 0; y < g->order() && all; ++y) all = g->mult(x, y) == g->mult(y, x);
      central += all;
    }
    CHECK(central == z.order());
  }
}

TEST_CASE("hypercentre") {
  auto q8 = catalog::build("Q8");
  CHECK(hypercentre(*q8).hypercentre.is_whole());
  auto sl = catalog::build("SL(2,5)");
  auto h = hypercentre(*sl);
  CHECK(h.hypercentre.order() == 2);
  CHECK(h.hypercentre == center(*sl));
  auto g = catalog::build("S3xC4");
  auto zs = hypercentre(*g).hypercentre;
  std::vector<Index> c4_factor;
  for (Index i = 0; i < g->order(); ++i) {
    const auto& p = g->element(i);
    if (p(0) == 0 && p(1) == 1 && p(2) == 2) c4_factor.push_back(i);
  }
  CHECK(members_of(zs) == c4_factor);
  for (const auto& spec : kSmall) {
    auto grp = catalog::build(spec);
    auto ucs = hypercentre(*grp);
    INFO(spec);
    CHECK(ucs.hypercentre.is_whole() == is_nilpotent(*grp));
    REQUIRE_FALSE(ucs.terms.empty());
    CHECK(ucs.terms.front() == center(*grp));
    CHECK(ucs.terms.back() == ucs.hypercentre);
    for (std::size_t i = 1; i < ucs.terms.size(); ++i) {
      CHECK(ucs.terms[i - 1].is_subgroup_of(ucs.terms[i]));
      CHECK(ucs.terms[i - 1].order() < ucs.terms[i].order());
    }
  }
}

TEST_CASE("derived series and solubility") {
  CHECK(derived_length(*catalog::build("C6")) == 1);
  CHECK(derived_length(*catalog::build("S4")) == 3);
  CHECK(derived_length(*catalog::build("SL(2,3)")) == 3);
  CHECK(derived_length(*catalog::build("C1")) == 0);
  auto a5 = catalog::build("A5");
  CHECK_FALSE(is_soluble(*a5));
  CHECK_THROWS_AS(derived_length(*a5), Insoluble);
  auto s4 = derived_series(*catalog::build("S4"));
  REQUIRE(s4.size() == 4);
  CHECK(s4[1].order() == 12);
  CHECK(s4[2].order() == 4);
  CHECK(s4[3].is_trivial());
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    auto ds = derived_series(*g);
    for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i].order() < ds[i - 1].order());
    CHECK(ds.back().is_trivial() == is_soluble(*g));
  }
}

TEST_CASE("is_nilpotent examples") {
  CHECK(is_nilpotent(*catalog::build("Q8")));
  CHECK_FALSE(is_nilpotent(*catalog::build("S3")));
  auto s3 = catalog::build("S3");
  CHECK_FALSE(is_nilpotent(gen(*s3, {"(1,2,3)", "(1,2)"})));
  CHECK(is_nilpotent(*catalog::build("D4xC3")));
  CHECK(is_nilpotent(*catalog::build("Q8xC3")));
  CHECK_FALSE(is_nilpotent(*catalog::build("D6")));
}

TEST_CASE("is_nilpotent agrees with the Sylow oracle on 2-generated subgroups") {
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    if (g->order() > 200) continue;
    INFO(spec);
    CHECK(is_nilpotent(*g) == oracle::sylow_oracle_nilpotent(*g, members_of(whole_group(*g))));
    std::set<std::vector<Index>> seen;
    for (Index x = 0; x < g->order(); ++x) {
      for (Index y = x; y < g->order(); ++y) {
        const Index seeds[] = {x, y};
        auto h = subgroup_generated(*g, seeds);
        auto m = members_of(h);
        if (!seen.insert(m).second) continue;
        REQUIRE(is_nilpotent(h) == oracle::sylow_oracle_nilpotent(*g, m));
        REQUIRE(is_abelian(h) == (is_nilpotent(h) && lower_central_series(h).size() <= 2));
        if (x != y) REQUIRE(classify_pair(*g, x, y, ClassKind::Nilpotent) == oracle::sylow_oracle_nilpotent(*g, m));
      }
    }
  }
}

TEST_CASE("normal closures and minimal normal subgroups") {
  auto a4 = catalog::build("A4");
  const Index c3[] = {idx(*a4, "(1,2,3)")};
  const Index dt[] = {idx(*a4, "(1,2)(3,4)")};
  CHECK(normal_closure(*a4, c3).is_whole());
  CHECK(normal_closure(*a4, dt).order() == 4);
  CHECK(is_normal(*a4, normal_closure(*a4, dt)));
  CHECK_FALSE(is_normal(*a4, subgroup_generated(*a4, c3)));

  auto a5 = catalog::build("A5");
  auto mins = minimal_normal_subgroups(*a5);
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().is_whole());
  CHECK(is_simple(*a5));

  auto c6 = catalog::build("C6");
  auto m6 = minimal_normal_subgroups(*c6);
  REQUIRE(m6.size() == 2);
  std::multiset<std::size_t> orders = {m6[0].order(), m6[1].order()};
  CHECK(orders == std::multiset<std::size_t>{2, 3});

  auto s4 = catalog::build("S4");
  auto ms4 = minimal_normal_subgroups(*s4);
  REQUIRE(ms4.size() == 1);
  CHECK(ms4.front().order() == 4);
}

TEST_CASE("normalizer and centralizer") {
  auto s4 = catalog::build("S4");
  auto h = gen(*s4, {"(1,2,3,4)"});
  CHECK(normalizer(*s4, h).order() == 8);
  CHECK(centralizer(*s4, h).order() == 4);
  CHECK(normalizer(*s4, whole_group(*s4)).is_whole());
}

TEST_CASE("radicals") {
  auto s4 = catalog::build("S4");
  CHECK(soluble_radical(*s4).is_whole());
  CHECK(fitting(*s4).order() == 4);
  auto a5 = catalog::build("A5");
  CHECK(soluble_radical(*a5).is_trivial());
  CHECK(cr_radical(*a5).is_whole());
  CHECK(cr_radical(*catalog::build("S3")).is_trivial());
  CHECK(cr_radical(*catalog::build("C2xA5")).order() == 60);
  CHECK(soluble_radical(*catalog::build("SL(2,5)")).order() == 2);
  CHECK(fitting(*catalog::build("SL(2,3)")).order() == 8);
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    INFO(spec);
    auto sol = soluble_radical(*g);
    auto fit = fitting(*g);
    CHECK(is_soluble(sol));
    CHECK(is_normal(*g, sol));
    CHECK(is_nilpotent(fit));
    CHECK(is_normal(*g, fit));
    CHECK(fit.is_subgroup_of(sol));
    for (const auto& n : class_normal_closures(*g)) {
      if (is_soluble(n)) CHECK(join(sol, n) == sol);
      if (is_nilpotent(n)) CHECK(join(fit, n) == fit);
    }
    CHECK(is_soluble(*g) == sol.is_whole());
    CHECK(is_nilpotent(*g) == fit.is_whole());
  }
}

TEST_CASE("sylow examples") {
  auto a5 = catalog::build("A5");
  CHECK(sylow(*a5, 2).count == 5);
  CHECK(sylow(*a5, 3).count == 10);
  CHECK(sylow(*a5, 5).count == 6);
  auto p8 = sylow(*catalog::build("PSL(2,8)"), 7);
  CHECK(p8.count == 36);
  CHECK(p8.pairwise_trivial_intersection);
  CHECK(sylow(*catalog::build("C12"), 2).count == 1);
  auto none = sylow(*catalog::build("S3"), 5);
  CHECK(none.count == 0);
  REQUIRE(none.subgroups.size() == 1);
  CHECK(none.subgroups.front().is_trivial());
  CHECK_THROWS_AS(sylow(*a5, 4), std::invalid_argument);
  CHECK_FALSE(sylow(*catalog::build("S4"), 2).pairwise_trivial_intersection);
}

TEST_CASE("sylow counts agree with a brute-force count") {
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    if (g->order() > 200) continue;
    for (unsigned p : prime_divisors(g->order())) {
      const std::size_t full = p_part(g->order(), p);
      std::vector<Index> pel;
      for (Index x = 0; x < g->order(); ++x) {
        if (p_part(g->element_order(x), p) == g->element_order(x)) pel.push_back(x);
      }
      // Every Sylow subgroup in this list needs at most three generators.
      std::set<std::vector<Index>> pairs;
      for (Index x : pel) {
        for (Index y : pel) {
          if (y < x) continue;
          const Index seeds[] = {x, y};
          auto h = subgroup_generated(*g, seeds);
          if (full % h.order() == 0) pairs.insert(members_of(h));
        }
      }
      std::set<std::vector<Index>> found;
      for (const auto& h : pairs) {
        for (Index z : pel) {
          std::vector<Index> seeds = h;
          seeds.push_back(z);
          auto k = subgroup_generated(*g, seeds);
          if (k.order() == full) found.insert(members_of(k));
        }
      }
      INFO(spec << " p=" << p);
      CHECK(sylow(*g, p).count == found.size());
    }
  }
}

TEST_CASE("sylow invariants") {
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    for (unsigned p : prime_divisors(g->order())) {
      auto rep = sylow(*g, p);
      INFO(spec << " p=" << p);
      CHECK(rep.count % p == 1);
      CHECK((g->order() / rep.sylow_order) % rep.count == 0);
      CHECK(rep.count == g->order() / rep.normalizer_order);
      REQUIRE(rep.subgroups.size() == rep.count);
      const auto& first = rep.subgroups.front();
      auto n = normalizer(*g, first);
      CHECK(n.order() == rep.normalizer_order);
      // Conjugating the first Sylow by least right coset representatives of
      // its normalizer reproduces the list.
      std::vector<std::vector<Index>> conj;
      Bitset used(g->order());
      for (Index t = 0; t < g->order(); ++t) {
        if (used.test(t)) continue;
        for (Index m : n.members()) used.set(g->mult(m, t));
        std::vector<Index> c;
        for (Index x : first.members()) c.push_back(conjugate(*g, x, t));
        std::sort(c.begin(), c.end());
        conj.push_back(c);
      }
      REQUIRE(conj.size() == rep.count);
      for (std::size_t i = 0; i < conj.size(); ++i) CHECK(conj[i] == members_of(rep.subgroups[i]));
      bool ti = true;
      for (std::size_t i = 0; i < rep.subgroups.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.subgroups.size(); ++j) {
          ti = ti && intersection(rep.subgroups[i], rep.subgroups[j]).is_trivial();
        }
      }
      CHECK(ti == rep.pairwise_trivial_intersection);
    }
  }
}

TEST_CASE("Sylow counts of PSL(2,q)") {
  for (unsigned q : {5U, 7U, 8U, 9U, 11U, 13U}) {
    auto g = catalog::projective_special_linear_2(q);
    const unsigned c = prime_divisors(q).front();
    INFO("q=" << q);
    auto rc = sylow(*g, c);
    CHECK(rc.count == q + 1);
    CHECK(rc.pairwise_trivial_intersection);
    for (unsigned r : prime_divisors(g->order())) {
      if (r == 2 || r == c) continue;
      auto rep = sylow(*g, r);
      INFO("r=" << r);
      if ((q + 1) % r == 0) CHECK(rep.count == q * (q - 1) / 2);
      if ((q - 1) % r == 0) CHECK(rep.count == q * (q + 1) / 2);
      CHECK(rep.pairwise_trivial_intersection);
    }
  }
}

TEST_CASE("quotients") {
  auto sl = catalog::build("SL(2,5)");
  auto q = quotient(*sl, center(*sl));
  CHECK(q.group->order() == 60);
  CHECK(recognize(*q.group) == Recognition::A5);
  CHECK(q.group->label() == "SL(2,5)/N");

  auto s4 = catalog::build("S4");
  auto v4 = fitting(*s4);
  auto qs = quotient(*s4, v4, "S4/V4");
  CHECK(qs.group->order() == 6);
  CHECK(recognize(*qs.group) == Recognition::S3);
  CHECK(qs.group->label() == "S4/V4");

  auto s3 = catalog::build("S3");
  auto qt = quotient(*s3, trivial_subgroup(*s3));
  CHECK(qt.group->order() == 6);
  for (auto kind : {ClassKind::Abelian, ClassKind::Nilpotent}) {
    CHECK(clique_number(build_graph(*qt.group, kind)).omega == clique_number(build_graph(*s3, kind)).omega);
  }
  CHECK_THROWS_AS(quotient(*s3, gen(*s3, {"(1,2)"})), NotNormal);

  std::mt19937 rng(99);
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g->order() - 1));
    for (const auto& n : class_normal_closures(*g)) {
      auto qq = quotient(*g, n);
      REQUIRE(qq.group->order() * n.order() == g->order());
      for (int k = 0; k < 1000 / 20; ++k) {
        const Index a = pick(rng), b = pick(rng);
        CHECK(qq.projection[g->mult(a, b)] == qq.group->mult(qq.projection[a], qq.projection[b]));
      }
      for (Index m : n.members()) CHECK(qq.projection[m] == qq.group->identity());
    }
  }
}

TEST_CASE("quotient map is a homomorphism on 1000 random pairs") {
  auto g = catalog::build("S4xS3");
  auto n = fitting(*g);
  auto q = quotient(*g, n);
  std::mt19937 rng(5);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g->order() - 1));
  for (int k = 0; k < 1000; ++k) {
    const Index a = pick(rng), b = pick(rng);
    REQUIRE(q.projection[g->mult(a, b)] == q.group->mult(q.projection[a], q.projection[b]));
    REQUIRE(q.coset_of[a] == q.coset_of[g->mult(n.members()[k % n.order()], a)]);
  }
}

TEST_CASE("recognize") {
  CHECK(recognize(*catalog::build("A5")) == Recognition::A5);
  CHECK(recognize(*catalog::build("PSL(2,5)")) == Recognition::A5);
  CHECK(recognize(*catalog::build("PSL(2,4)")) == Recognition::A5);
  CHECK(recognize(*catalog::build("SL(2,5)/Z")) == Recognition::A5);
  CHECK(recognize(*catalog::build("C6")) == Recognition::Other);
  CHECK(recognize(*catalog::build("S3")) == Recognition::S3);
  CHECK(recognize(*catalog::build("D3")) == Recognition::S3);
  CHECK(recognize(*catalog::build("C2xA5")) == Recognition::Other);
  CHECK(to_string(Recognition::A5) == "A5");
}

TEST_CASE("normal p-complements and supersolubility") {
  CHECK(has_normal_p_complement(*catalog::build("S3"), 2));
  CHECK_FALSE(has_normal_p_complement(*catalog::build("A4"), 2));
  CHECK(has_normal_p_complement(*catalog::build("A4"), 3));
  CHECK_FALSE(is_supersoluble(*catalog::build("A4")));
  CHECK(is_supersoluble(*catalog::build("S3")));
  CHECK(is_supersoluble(*catalog::build("D4xC3")));
  CHECK_FALSE(is_supersoluble(*catalog::build("S4")));
  CHECK_FALSE(is_supersoluble(*catalog::build("A5")));
  CHECK(is_supersoluble(*catalog::build("C1")));
}

TEST_CASE("structure report invariants") {
  for (const auto& spec : kSmall) {
    auto g = catalog::build(spec);
    auto r = analyze_structure(*g);
    INFO(spec);
    CHECK(r.center.is_subgroup_of(r.hypercentre));
    CHECK(r.upper_central_series.back() == r.hypercentre);
    CHECK(r.fitting.is_subgroup_of(r.soluble_radical));
    CHECK(is_normal(*g, r.fitting));
    CHECK(is_normal(*g, r.soluble_radical));
    CHECK(is_normal(*g, r.cr_radical));
    CHECK(r.is_soluble == r.derived_series.back().is_trivial());
    if (r.derived_length) CHECK(*r.derived_length == r.derived_series.size() - 1);
    CHECK(r.is_nilpotent == r.lower_central_series.back().is_trivial());
    CHECK(r.sylow.size() == prime_divisors(g->order()).size());
    if (r.is_supersoluble) CHECK(r.is_soluble);
  }
}

TEST_CASE("caches are safe under concurrent first use") {
  auto g = catalog::build("S5");
  std::vector<std::size_t> sizes(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      pool.emplace_back([&, t] { sizes[t] = minimal_normal_subgroups(*g).size() * 100 + g->conjugacy_classes().size(); });
    }
  }
  for (auto s : sizes) CHECK(s == 107);
}

TEST_CASE("arithmetic helpers") {
  CHECK(prime_divisors(5616) == std::vector<unsigned>{2, 3, 13});
  CHECK(prime_divisors(1).empty());
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(p_part(5616, 3) == 27);
  CHECK(p_part(5616, 5) == 1);
}
