// test_rewriting.cpp
#include <doctest.h>

#include "relpres/rewriting.hpp"

using namespace relpres;

namespace {

FreeWord fw(std::vector<std::pair<int, int>> gens) {
  std::vector<FreeWord::Gen> raw;
  for (auto [i, e] : gens) raw.push_back({i, e});
  return FreeWord::reduced(std::move(raw));
}

GroupDescriptor z2_descriptor() {
  GroupDescriptor d;
  d.generators = {"x", "y"};
  d.relators = {fw({{0, 1}, {1, 1}, {0, -1}, {1, -1}})};  // x y x^-1 y^-1
  d.class_hint = GroupClass::FgAbelian;
  d.declared_torsion_free = true;
  return d;
}

// enumerate all (not necessarily reduced) words of length exactly n over
// x, X, y, Y; used against the integer-vector oracle
void all_words(int n, const std::function<void(const FreeWord&)>& fn) {
  std::vector<int> idx(n, 0);
  const std::pair<int, int> syms[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};
  while (true) {
    std::vector<FreeWord::Gen> raw;
    for (int i : idx) raw.push_back({syms[i].first, syms[i].second});
    fn(FreeWord::reduced(std::move(raw)));
    int k = n - 1;
    while (k >= 0 && idx[k] == 3) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
}

}  // namespace

TEST_SUITE("rewriting") {
  TEST_CASE("free group completes with reduction rules only") {
    RewriteEngine e = complete(GroupDescriptor::free_group({"x"}));
    CHECK(e.status() == EngineStatus::Complete);
    CHECK(e.rules().size() == 2);  // xX -> 1, Xx -> 1
    CHECK(e.normal_form(fw({{0, 1}, {0, -1}})).empty());
  }

  TEST_CASE("Z^2 completes and matches the vector oracle") {
    RewriteEngine e = complete(z2_descriptor());
    REQUIRE(e.status() == EngineStatus::Complete);
    CHECK(equal(e, fw({{0, 1}, {1, 1}}), fw({{1, 1}, {0, 1}})) == Tri::Equal);
    CHECK(equal(e, fw({{0, 1}}), fw({{1, 1}})) == Tri::Distinct);
    for (int n = 0; n <= 5; ++n)
      all_words(n, [&](const FreeWord& w) {
        long a = w.exponent_sum(0), b = w.exponent_sum(1);
        FreeWord canonical = FreeWord::power(0, static_cast<int>(a)) *
                             FreeWord::power(1, static_cast<int>(b));
        CHECK(e.normal_form(w) == e.normal_form(canonical));
      });
  }

  TEST_CASE("defining relation xy completes to powers of x") {
    GroupDescriptor d;
    d.generators = {"x", "y"};
    d.relators = {fw({{0, 1}, {1, 1}})};
    RewriteEngine e = complete(d);
    REQUIRE(e.status() == EngineStatus::Complete);
    CHECK(equal(e, fw({{0, 1}}), fw({{1, -1}})) == Tri::Equal);
    // normal forms are powers of a single symbol
    FreeWord w = fw({{1, 1}, {0, 1}, {1, -1}, {0, 1}});
    FreeWord nf = e.normal_form(w);
    for (const auto& l : nf.letters()) CHECK(l.index == 0);
  }

  TEST_CASE("equal on identical words") {
    RewriteEngine e = complete(z2_descriptor());
    FreeWord u = fw({{0, 1}, {1, -1}, {0, 1}});
    CHECK(equal(e, u, u) == Tri::Equal);
  }

  TEST_CASE("is_trivial_in") {
    GroupDescriptor d;
    d.generators = {"x", "y"};
    d.relators = {fw({{0, 1}, {1, 1}})};
    RewriteEngine e = complete(d);
    CHECK(is_trivial_in(e, fw({{0, 1}, {1, 1}})) == Tri::Equal);
    CHECK(is_trivial_in(e, fw({{0, 1}})) == Tri::Distinct);
    RewriteEngine f = complete(GroupDescriptor::free_group({"x", "y"}));
    CHECK(is_trivial_in(f, fw({{0, 1}, {1, -1}})) == Tri::Distinct);
  }

  TEST_CASE("abelianization invariants") {
    GroupDescriptor d;
    d.generators = {"x", "y"};
    d.relators = {fw({{0, 1}, {1, 1}})};
    AbelianizedLattice ab = abelianization(d);
    CHECK(ab.free_rank() == 1);
    CHECK(ab.torsion().empty());

    AbelianizedLattice abf = abelianization(GroupDescriptor::free_group({"x"}));
    CHECK(abf.free_rank() == 1);

    GroupDescriptor d23;
    d23.generators = {"x", "y"};
    d23.relators = {fw({{0, 1}, {0, 1}, {1, 1}, {1, 1}, {1, 1}})};  // x^2 y^3
    AbelianizedLattice ab23 = abelianization(d23);
    CHECK(ab23.free_rank() == 1);
    CHECK(ab23.torsion().empty());
  }

  TEST_CASE("abelianization is stable under consequence relators") {
    GroupDescriptor d = z2_descriptor();
    AbelianizedLattice before = abelianization(d);
    // add a consequence: conjugate of the commutator times itself
    FreeWord r = d.relators[0];
    FreeWord c = fw({{0, 1}, {1, 1}});
    d.relators.push_back(r.conjugate(c) * r);
    AbelianizedLattice after = abelianization(d);
    CHECK(before.free_rank() == after.free_rank());
    CHECK(before.torsion() == after.torsion());
  }

  TEST_CASE("torsion shows up in Smith form") {
    GroupDescriptor d;
    d.generators = {"x", "y"};
    d.relators = {fw({{0, 1}, {0, 1}}), fw({{1, 1}, {1, 1}, {1, 1}, {1, 1}})};
    AbelianizedLattice ab = abelianization(d);
    CHECK(ab.free_rank() == 0);
    ZVec t = ab.torsion();
    REQUIRE(t.size() == 2);
    CHECK(t[0] == 2);
    CHECK(t[1] == 4);
  }

  TEST_CASE("partial engines keep sound answers") {
    KBLimits tiny;
    tiny.max_rules = 6;  // free rules alone take 4; relator pushes it over
    tiny.max_steps = 400;
    GroupDescriptor d = z2_descriptor();
    RewriteEngine e = complete(d, tiny);
    CHECK(e.status() == EngineStatus::Partial);
    CHECK(equal(e, fw({{0, 1}}), fw({{0, 1}})) == Tri::Equal);
    CHECK(equal(e, fw({{0, 1}}), fw({{1, 1}})) == Tri::Distinct);  // via abelianization
    // commuting words may be Unknown under a partial engine, never Distinct
    Tri t = equal(e, fw({{0, 1}, {1, 1}}), fw({{1, 1}, {0, 1}}));
    CHECK(t != Tri::Distinct);
  }

  TEST_CASE("class hint consistency") {
    GroupDescriptor d = z2_descriptor();
    RewriteEngine e = complete(d);
    CHECK(class_hint_consistent(d, e) == Cert::Yes);
    GroupDescriptor bad;
    bad.generators = {"x", "y"};
    bad.class_hint = GroupClass::FgAbelian;  // free group is not abelian
    RewriteEngine eb = complete(bad);
    CHECK(class_hint_consistent(bad, eb) == Cert::No);
  }

  TEST_CASE("nontriviality and noncyclicity evidence") {
    CHECK(group_nontrivial(GroupDescriptor::free_group({"x", "y"})) == Cert::Yes);
    CHECK(group_nontrivial(GroupDescriptor::trivial()) == Cert::No);
    CHECK(group_noncyclic(GroupDescriptor::free_group({"x", "y"})) == Cert::Yes);
    CHECK(group_noncyclic(GroupDescriptor::infinite_cyclic()) == Cert::No);
    CHECK(group_noncyclic(GroupDescriptor::free_abelian({"x", "y"})) == Cert::Yes);
  }

  TEST_CASE("finite cyclic groups rewrite to canonical powers") {
    RewriteEngine e = complete(GroupDescriptor::finite_cyclic("a", 5));
    REQUIRE(e.status() == EngineStatus::Complete);
    CHECK(equal(e, FreeWord::power(0, 7), FreeWord::power(0, 2)) == Tri::Equal);
    CHECK(equal(e, FreeWord::power(0, 5), FreeWord()) == Tri::Equal);
    CHECK(equal(e, FreeWord::power(0, 3), FreeWord::power(0, 2)) == Tri::Distinct);
  }
}
