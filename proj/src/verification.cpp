#include "nilcover/verification.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

#include "nilcover/constructions.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/structure.hpp"

namespace nilcover::verification {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

bool Log::expect(bool ok, std::string what) {
  lines_.push_back((ok ? "ok    " : "FAIL  ") + std::move(what));
  if (!ok) failed_ = true;
  return ok;
}

void Log::note(std::string what) { lines_.push_back("info  " + std::move(what)); }

std::size_t least_nontrivial_sylow_count(std::size_t order, unsigned p) {
  const std::size_t m = order / p_part(order, p);
  for (std::size_t d = p + 1; d <= m; d += p) {
    if (m % d == 0) return d;
  }
  return 0;
}

std::vector<std::string> property_catalog() {
  return {"C1",   "C2",      "C6",     "C2xC2",  "C2xC2xC2", "S3",      "D4",      "D5",     "D6",
          "Q8",   "Q16",     "A4",     "S4",     "S3xC2",    "S3xC4",   "A4xC2",   "SL(2,3)", "D4xC3",
          "Q8xC3", "S3xS3",  "A5",     "S5",     "SL(2,5)",  "C2xA5",   "PSL(2,7)", "SL(2,5)/Z", "S4/Z*"};
}

namespace {

using std::to_string;

struct Context {
  const Settings& settings;
  Log& log;

  GroupPtr group(std::string_view spec) const { return catalog::build(spec, settings.build); }
  PairGraph graph(const FiniteGroup& g, ClassKind kind) const { return build_graph(g, kind, settings.limits); }
  CliqueNumber omega(const FiniteGroup& g, ClassKind kind) const {
    auto c = clique_number(graph(g, kind), settings.clique);
    if (!c.exact) {
      throw Timeout("clique number of " + g.label() + " exceeded its time budget", c.omega);
    }
    return c;
  }
  bool satisfies(const FiniteGroup& g, ClassKind kind, std::size_t n) const {
    return check_condition(graph(g, kind), n, settings.clique).satisfied;
  }
  void expect_omega(const FiniteGroup& g, ClassKind kind, std::size_t expected) const {
    auto c = omega(g, kind);
    log.expect(c.omega == expected && c.witness.verified,
               std::string("omega_") + std::string(to_string(kind)) + "(" + g.label() + ") = " +
                   to_string(c.omega) + ", expected " + to_string(expected) +
                   (c.witness.verified ? ", witness verified" : ", witness NOT verified"));
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_a5_condition(Context& cx) {
  auto a5 = cx.group("A5");
  cx.expect_omega(*a5, ClassKind::Nilpotent, 21);
  cx.log.expect(cx.satisfies(*a5, ClassKind::Nilpotent, 21), "A5 satisfies (N,21)");
  auto res = check_condition(cx.graph(*a5, ClassKind::Nilpotent), 20, cx.settings.clique);
  cx.log.expect(!res.satisfied && res.violation.size() == 21 && res.violation.verified,
                "A5 violates (N,20) with a verified 21-element witness");
  auto gn = cx.graph(*a5, ClassKind::Nilpotent);
  auto ga = cx.graph(*a5, ClassKind::Abelian);
  bool same = true;
  for (Index i = 0; i < a5->order(); ++i) same = same && gn.neighbours(i) == ga.neighbours(i);
  cx.log.expect(same, "nilpotent and abelian pair graphs of A5 coincide");
}

void check_small_omegas(Context& cx) {
  auto s3 = cx.group("S3");
  auto a4 = cx.group("A4");
  cx.expect_omega(*s3, ClassKind::Nilpotent, 4);
  cx.expect_omega(*a4, ClassKind::Nilpotent, 5);
  cx.log.expect(cx.satisfies(*a4, ClassKind::Nilpotent, 5), "A4 satisfies (N,5)");
  cx.log.expect(!cx.satisfies(*a4, ClassKind::Nilpotent, 4), "A4 violates (N,4)");
  std::vector<Subgroup> parts;
  for (unsigned p : {2U, 3U}) {
    for (auto& s : sylow(*a4, p).subgroups) parts.push_back(std::move(s));
  }
  cx.log.expect(parts.size() == 5 && verify_cover(*a4, parts, ClassKind::Nilpotent),
                "A4 is the union of its " + to_string(parts.size()) + " Sylow subgroups");
  cx.log.expect(is_supersoluble(*s3), "S3 is supersoluble");
  cx.log.expect(!is_supersoluble(*a4), "A4 is not supersoluble");
  cx.log.expect(has_normal_p_complement(*s3, 2), "S3 has a normal 2-complement");
  cx.log.expect(!has_normal_p_complement(*a4, 2), "A4 has no normal 2-complement");
}

void check_s5_witness(Context& cx) {
  auto s5 = cx.group("S5");
  auto cert = s5_witness(*s5);
  cx.log.expect(cert.size() == 22, "asset lists " + to_string(cert.size()) + " permutations");
  cx.log.expect(cert.verified, "all " + to_string(cert.size() * (cert.size() - 1) / 2) +
                                   " pairs generate non-nilpotent subgroups" +
                                   (cert.diagnostic.empty() ? "" : " (" + cert.diagnostic + ")"));
  cx.log.expect(!cx.satisfies(*s5, ClassKind::Nilpotent, 21), "S5 violates (N,21)");
}

void check_sl25_quotient(Context& cx) {
  auto g = cx.group("SL(2,5)");
  auto z = center(*g);
  auto zs = hypercentre(*g).hypercentre;
  cx.log.expect(z.order() == 2, "|Z(SL(2,5))| = " + to_string(z.order()));
  cx.log.expect(zs == z, "Z*(SL(2,5)) = Z(SL(2,5))");
  auto q = quotient(*g, zs);
  cx.log.expect(recognize(*q.group) == Recognition::A5, "SL(2,5)/Z*(SL(2,5)) recognised as A5");
  cx.expect_omega(*g, ClassKind::Nilpotent, 21);
}

void check_sl25_witness(Context& cx) {
  auto g = cx.group("SL(2,5)");
  auto w = sl25_witness(*g);
  auto cert = verify_witness(*g, ClassKind::Abelian, w);
  cx.log.expect(cert.size() == 22 && cert.verified, "constructed " + to_string(cert.size()) +
                                                        "-element set is pairwise non-commuting");
  cx.log.expect(!cx.satisfies(*g, ClassKind::Abelian, 21), "SL(2,5) violates (A,21)");
  cx.log.note("omega_abelian(SL(2,5)) = " + to_string(cx.omega(*g, ClassKind::Abelian).omega) + " (computed)");
}

void check_abelian_a5(Context& cx) {
  auto a5 = cx.group("A5");
  cx.expect_omega(*a5, ClassKind::Abelian, 21);
  cx.log.expect(center(*a5).is_trivial(), "Z(A5) is trivial, so A5 = Z(A5) x A5");
  auto g = cx.group("C2xA5");
  auto z = center(*g);
  cx.log.expect(z.order() == 2, "|Z(C2xA5)| = " + to_string(z.order()));
  auto q = quotient(*g, z);
  cx.log.expect(recognize(*q.group) == Recognition::A5, "(C2xA5)/Z recognised as A5");
  auto cover = a5_sylow_cover(*q.group);
  auto lifted = lift_cover(*g, q, cover);
  cx.log.expect(lifted.size() == 21 && verify_cover(*g, lifted, ClassKind::Abelian),
                "the lifted Sylow cover of C2xA5 has 21 abelian parts");
  cx.log.expect(cx.satisfies(*g, ClassKind::Abelian, 21), "C2xA5 satisfies (A,21)");
}

void check_s3_family(Context& cx) {
  for (const char* spec : {"S3", "S3xC2", "S3xC4"}) {
    auto g = cx.group(spec);
    auto zs = hypercentre(*g).hypercentre;
    auto q = quotient(*g, zs);
    cx.log.expect(recognize(*q.group) == Recognition::S3, std::string(spec) + "/Z* recognised as S3");
    cx.expect_omega(*g, ClassKind::Nilpotent, 4);
  }
  auto s3 = cx.group("S3");
  std::vector<Subgroup> parts;
  for (const char* c : {"(1,2,3)", "(1,2)", "(1,3)", "(2,3)"}) {
    const Index x = s3->index_of(parse_cycles(c, 3));
    const Index seeds[] = {x};
    parts.push_back(subgroup_generated(*s3, seeds));
  }
  cx.log.expect(verify_cover(*s3, parts, ClassKind::Abelian), "S3 is covered by 4 abelian subgroups");
}

void check_a5_sylow(Context& cx) {
  auto a5 = cx.group("A5");
  auto w = a5_sylow_witness(*a5);
  auto cert = verify_witness(*a5, ClassKind::Nilpotent, w);
  cx.log.expect(cert.size() == 21 && cert.verified, "one element from each Sylow subgroup: 21 pairwise non-nilpotent");
  auto cover = a5_sylow_cover(*a5);
  cx.log.expect(cover.size() == 21 && verify_cover(*a5, cover, ClassKind::Nilpotent),
                "A5 is the union of its 21 Sylow subgroups");
}

void check_sylow_psl2(Context& cx) {
  for (unsigned q : {5U, 7U, 8U, 9U, 11U, 13U}) {
    auto g = cx.group("PSL(2," + to_string(q) + ")");
    const auto primes = prime_divisors(g->order());
    const unsigned p = prime_divisors(q).front();
    for (unsigned r : primes) {
      std::size_t expected = 0;
      if (r == p) {
        expected = q + 1;
      } else if (r != 2 && (q + 1) % r == 0) {
        expected = q * (q - 1) / 2;
      } else if (r != 2 && (q - 1) % r == 0) {
        expected = q * (q + 1) / 2;
      } else {
        continue;
      }
      auto rep = sylow(*g, r);
      cx.log.expect(rep.count == expected && rep.pairwise_trivial_intersection,
                    "PSL(2," + to_string(q) + "): nu_" + to_string(r) + " = " + to_string(rep.count) +
                        " (formula " + to_string(expected) + "), TI " + yes_no(rep.pairwise_trivial_intersection));
    }
  }
}

void check_homclosed_product(Context& cx) {
  auto s3 = cx.group("S3");
  auto a4 = cx.group("A4");
  auto wa = cx.omega(*s3, ClassKind::Abelian).vertices;
  const GroupPtr f[] = {s3, s3};
  auto p = catalog::direct_product(f, cx.settings.build);
  auto w = product_witness_homclosed(*p, {s3, wa}, {s3, wa}, ClassKind::Abelian);
  auto cert = verify_witness(*p, ClassKind::Abelian, w);
  cx.log.expect(cert.size() == 7 && cert.verified, "S3xS3 abelian witness of size " + to_string(cert.size()) + " verifies");
  cx.log.expect(!cx.satisfies(*p, ClassKind::Abelian, 6), "S3xS3 violates (A,6)");

  auto wn = cx.omega(*s3, ClassKind::Nilpotent).vertices;
  auto wm = cx.omega(*a4, ClassKind::Nilpotent).vertices;
  const GroupPtr f2[] = {s3, a4};
  auto p2 = catalog::direct_product(f2, cx.settings.build);
  auto w2 = product_witness_homclosed(*p2, {s3, wn}, {a4, wm}, ClassKind::Nilpotent);
  auto cert2 = verify_witness(*p2, ClassKind::Nilpotent, w2);
  cx.log.expect(cert2.size() == 8 && cert2.verified, "S3xA4 nilpotent witness of size " + to_string(cert2.size()) + " verifies");
}

void check_nilpotent_product(Context& cx) {
  auto s3 = cx.group("S3");
  auto wn = cx.omega(*s3, ClassKind::Nilpotent).vertices;
  const GroupPtr f[] = {s3, s3};
  auto p = catalog::direct_product(f, cx.settings.build);
  const GroupWitness ws[] = {{s3, wn}, {s3, wn}};
  auto w = product_witness_nilpotent(*p, ws);
  auto cert = verify_witness(*p, ClassKind::Nilpotent, w);
  cx.log.expect(cert.size() == 16 && cert.verified, "S3xS3 nilpotent witness of size " + to_string(cert.size()) + " verifies");
  cx.log.expect(!cx.satisfies(*p, ClassKind::Nilpotent, 15), "S3xS3 violates (N,15)");
}

void check_a5_square(Context& cx) {
  auto a5 = cx.group("A5");
  const GroupPtr f[] = {a5, a5};
  auto p = catalog::direct_product(f, cx.settings.build);
  const GroupWitness w{a5, a5_sylow_witness(*a5)};
  const GroupWitness ws[] = {w, w};
  auto x = product_witness_nilpotent(*p, ws);
  auto cert = verify_witness(*p, ClassKind::Nilpotent, x);
  cx.log.expect(cert.size() == 441 && cert.verified,
                "A5xA5 witness of size " + to_string(cert.size()) + " is pairwise non-nilpotent");
  cx.log.note("A5xA5 violates (N,440); its exact clique number is not computed");
}

void check_properties_sylow(Context& cx) {
  for (const auto& spec : property_catalog()) {
    auto g = cx.group(spec);
    for (unsigned p : prime_divisors(g->order())) {
      auto rep = sylow(*g, p);
      const bool ok = rep.count % p == 1 % p && (g->order() / rep.sylow_order) % rep.count == 0 &&
                      rep.subgroups.size() == rep.count && rep.sylow_order == p_part(g->order(), p);
      if (!ok) cx.log.expect(false, spec + ": nu_" + to_string(p) + " = " + to_string(rep.count));
    }
  }
  for (unsigned q : {5U, 7U, 8U, 9U, 11U, 13U}) {
    auto g = cx.group("PSL(2," + to_string(q) + ")");
    for (unsigned p : prime_divisors(g->order())) {
      auto rep = sylow(*g, p);
      if (rep.count % p != 1) cx.log.expect(false, g->label() + ": nu_" + to_string(p) + " = " + to_string(rep.count));
    }
  }
  cx.log.expect(!cx.log.failed(), "nu_p = 1 mod p and nu_p divides the index for every group and prime");
}

// All cliques are listed by plain backtracking; fine up to about two dozen vertices.
std::size_t exhaustive_omega(const FiniteGroup& g, ClassKind kind) {
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edge[i][j] = edge[j][i] = !classify_pair(g, i, j, kind);
  }
  std::size_t best = n ? 1 : 0;
  std::vector<Index> current;
  std::function<void(Index)> grow = [&](Index from) {
    best = std::max(best, current.size());
    for (Index v = from; v < n; ++v) {
      if (std::all_of(current.begin(), current.end(), [&](Index u) { return edge[u][v]; })) {
        current.push_back(v);
        grow(v + 1);
        current.pop_back();
      }
    }
  };
  grow(0);
  return best;
}

void check_properties_condition(Context& cx) {
  for (const auto& spec : property_catalog()) {
    auto g = cx.group(spec);
    auto gn = cx.graph(*g, ClassKind::Nilpotent);
    auto ga = cx.graph(*g, ClassKind::Abelian);
    bool contained = true;
    for (Index i = 0; i < g->order(); ++i) contained = contained && gn.neighbours(i).is_subset_of(ga.neighbours(i));
    if (!contained) cx.log.expect(false, spec + ": nilpotent edges not contained in abelian edges");
    for (const PairGraph* graph : {&gn, &ga}) {
      auto c = clique_number(*graph, cx.settings.clique);
      if (!c.exact) throw Timeout("clique number of " + spec, c.omega);
      if (!c.witness.verified) cx.log.expect(false, spec + ": maximum clique does not verify");
      for (std::size_t n = 1; n <= c.omega + 1; ++n) {
        const bool sat = check_condition(*graph, n, cx.settings.clique).satisfied;
        if (sat != (n >= c.omega)) {
          cx.log.expect(false, spec + ": condition with n = " + to_string(n) + " disagrees with omega " + to_string(c.omega));
        }
      }
      if (g->order() <= 24) {
        const std::size_t oracle = exhaustive_omega(*g, graph->kind());
        if (oracle != c.omega) {
          cx.log.expect(false, spec + ": solver omega " + to_string(c.omega) + " but exhaustive " + to_string(oracle));
        }
      }
    }
  }
  cx.log.expect(!cx.log.failed(), "edge containment, monotonicity and the exhaustive oracle hold on the catalog");
}

std::vector<Subgroup> known_normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out = class_normal_closures(g);
  out.push_back(center(g));
  out.push_back(hypercentre(g).hypercentre);
  for (auto& d : derived_series(g)) out.push_back(std::move(d));
  out.push_back(soluble_radical(g));
  out.push_back(fitting(g));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::ranges::lexicographical_compare(a.members(), b.members());
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [](const Subgroup& n) { return n.is_trivial() || n.is_whole(); });
  return out;
}

void check_properties_quotient(Context& cx) {
  std::size_t pairs = 0;
  std::size_t strict = 0;
  for (const auto& spec : property_catalog()) {
    auto g = cx.group(spec);
    const auto on = cx.omega(*g, ClassKind::Nilpotent).omega;
    const auto oa = cx.omega(*g, ClassKind::Abelian).omega;
    for (const auto& n : known_normal_subgroups(*g)) {
      auto q = quotient(*g, n);
      const auto qn = cx.omega(*q.group, ClassKind::Nilpotent).omega;
      const auto qa = cx.omega(*q.group, ClassKind::Abelian).omega;
      ++pairs;
      if (qn > on || qa > oa) {
        cx.log.expect(false, spec + " mod a normal subgroup of order " + to_string(n.order()) + ": omega grew");
      }
      if (!is_abelian(n)) {
        ++strict;
        if (qa + 1 > oa) {
          cx.log.expect(false, spec + " mod a non-abelian normal subgroup of order " + to_string(n.order()) +
                                   ": abelian omega " + to_string(qa) + " vs " + to_string(oa));
        }
      }
    }
  }
  cx.log.expect(!cx.log.failed(), "omega(G/N) <= omega(G) on " + to_string(pairs) + " pairs, strict decrease on " +
                                      to_string(strict) + " non-abelian N");
}

void check_derived_length(Context& cx) {
  std::size_t tested = 0;
  for (const auto& spec : property_catalog()) {
    auto g = cx.group(spec);
    if (!is_soluble(*g)) continue;
    const auto n = cx.omega(*g, ClassKind::Abelian).omega;
    const auto d = derived_length(*g);
    ++tested;
    if (n <= 2 && !is_abelian(whole_group(*g))) cx.log.expect(false, spec + ": omega <= 2 but not abelian");
    if (n >= 3 && d > 2 * n - 3) {
      cx.log.expect(false, spec + ": derived length " + to_string(d) + " exceeds 2*" + to_string(n) + "-3");
    }
  }
  cx.log.expect(!cx.log.failed(), "derived length bound holds on " + to_string(tested) + " soluble groups");
}

void check_simple_eliminations(Context& cx) {
  struct Elimination {
    unsigned q;
    unsigned prime;
  };
  for (const auto& e : {Elimination{7, 3}, Elimination{8, 7}, Elimination{9, 5}, Elimination{11, 3},
                        Elimination{13, 3}, Elimination{16, 5}, Elimination{17, 3}, Elimination{19, 3}}) {
    auto g = cx.group("PSL(2," + to_string(e.q) + ")");
    auto rep = sylow(*g, e.prime);
    cx.log.expect(rep.pairwise_trivial_intersection && rep.count > 21,
                  g->label() + ": nu_" + to_string(e.prime) + " = " + to_string(rep.count) + " > 21, TI " +
                      yes_no(rep.pairwise_trivial_intersection));
  }
  auto h = cx.group("PSL(3,3)");
  cx.log.expect(h->order() == 5616, "|PSL(3,3)| = " + to_string(h->order()));
  const auto b13 = least_nontrivial_sylow_count(5616, 13);
  cx.log.expect(b13 >= 27 && b13 > 26, "PSL(3,3): nu_13 = 1 mod 13 and 14 does not divide the order, so nu_13 >= " +
                                           to_string(b13));
  auto rep = sylow(*h, 13);
  cx.log.expect(rep.count == 144 && rep.count >= b13, "PSL(3,3): computed nu_13 = " + to_string(rep.count));

  const std::size_t psl35 = 372000;  // 5^3 * 2^5 * 3 * 31
  const auto b31 = least_nontrivial_sylow_count(psl35, 31);
  cx.log.expect(b31 >= 32 && b31 > 21, "PSL(3,5): nu_31 >= " + to_string(b31));
  const std::size_t psu34 = 62400;  // 2^6 * 3 * 5^2 * 13
  const auto u13 = least_nontrivial_sylow_count(psu34, 13);
  cx.log.expect(u13 >= 27 && u13 > 26, "PSU(3,4): nu_13 >= " + to_string(u13));
  for (unsigned p : {3U, 5U, 7U}) {
    const std::size_t q2 = std::size_t{1} << (2 * p);
    const std::size_t order = q2 * ((std::size_t{1} << p) - 1) * (q2 + 1);
    const std::size_t odd = order / p_part(order, 2);
    cx.log.expect(odd % (q2 + 1) == 0 && (q2 + 1) % 2 == 1 && q2 + 1 >= 65 && q2 + 1 > 21,
                  "Sz(2^" + to_string(p) + "): order " + to_string(order) + ", nu_2 = " + to_string(q2 + 1) +
                      " divides the odd part and is >= 65");
  }
  cx.log.note("PSL(3,5), PSU(3,4) and Sz(2^p) are not constructed");
  cx.log.note("exact clique number of PSL(3,3) is out of budget and not claimed");
}

using Body = void (*)(Context&);

Check make(std::string id, std::string title, Body body) {
  return Check{std::move(id), std::move(title), [body](const Settings& s, Log& log) {
                 Context cx{s, log};
                 body(cx);
               }};
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      make("condition-a5", "A5 satisfies (N,21) and violates (N,20)", check_a5_condition),
      make("cor-2.3", "S3 and A4 nilpotent clique numbers", check_small_omegas),
      make("lemma-1.5", "22 pairwise non-nilpotent elements of S5", check_s5_witness),
      make("theorem-b", "SL(2,5) modulo its hypercentre is A5", check_sl25_quotient),
      make("lemma-3.1", "22 pairwise non-commuting elements of SL(2,5)", check_sl25_witness),
      make("theorem-d", "abelian condition for A5 and C2xA5", check_abelian_a5),
      make("theorem-c", "groups with S3 modulo the hypercentre", check_s3_family),
      make("remark-1", "Sylow witness and cover of A5", check_a5_sylow),
      make("sylow-psl2", "Sylow counts of PSL(2,q)", check_sylow_psl2),
      make("lemma-1.1", "product witnesses for homomorphism-closed classes", check_homclosed_product),
      make("lemma-1.2", "Cartesian product witness for the nilpotent class", check_nilpotent_product),
      make("lemma-1.3", "441 pairwise non-nilpotent elements of A5xA5", check_a5_square),
      make("properties-sylow", "Sylow congruences across the catalog", check_properties_sylow),
      make("properties-condition", "containment, monotonicity and exhaustive oracle", check_properties_condition),
      make("properties-quotient", "clique numbers of quotients", check_properties_quotient),
      make("theorem-e", "derived length against the abelian clique number", check_derived_length),
      make("prop-1.4", "Sylow eliminations for simple groups other than A5", check_simple_eliminations),
  };
  return all;
}

const Check* find_check(std::string_view id) {
  for (const auto& c : checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckResult run_check(const Check& check, const Settings& settings) {
  CheckResult out{check.id, check.title, Status::Pass, {}, 0};
  Log log;
  const auto start = std::chrono::steady_clock::now();
  try {
    check.run(settings, log);
    out.status = log.failed() ? Status::Fail : Status::Pass;
  } catch (const Timeout& e) {
    out.status = Status::Inconclusive;
    log.note(e.what());
  } catch (const std::exception& e) {
    out.status = Status::Error;
    log.note(e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.details = log.lines();
  return out;
}

std::vector<CheckResult> run_checks(std::span<const std::string> only, const Settings& settings, bool parallel) {
  std::vector<const Check*> selected;
  if (only.empty()) {
    for (const auto& c : checks()) selected.push_back(&c);
  } else {
    for (const auto& id : only) {
      if (!find_check(id)) throw std::invalid_argument("unknown check '" + id + "'");
    }
    for (const auto& c : checks()) {
      if (std::find(only.begin(), only.end(), c.id) != only.end()) selected.push_back(&c);
    }
  }
  std::vector<CheckResult> out;
  if (parallel) {
    std::vector<std::future<CheckResult>> pending;
    for (const Check* c : selected) pending.push_back(std::async(std::launch::async, run_check, std::cref(*c), std::cref(settings)));
    for (auto& f : pending) out.push_back(f.get());
  } else {
    for (const Check* c : selected) out.push_back(run_check(*c, settings));
  }
  return out;
}

}  // namespace nilcover::verification
