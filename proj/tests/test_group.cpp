#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "lhg/errors.hpp"
#include "lhg/group.hpp"

using namespace lhg;

static bool throws_kind(Err kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

TEST_CASE("cyclic groups") {
  FiniteGroup z35 = FiniteGroup::cyclic(35);
  CHECK(z35.order() == 35);
  CHECK(z35.element_order(1) == 35);
  CHECK(z35.element_order(5) == 7);
  CHECK(z35.mul(2, 4) == 6);
  CHECK(FiniteGroup::cyclic(5).mul(2, 4) == 1);
  CHECK(z35.inv(15) == 20);
  CHECK(z35.abelian());
}

TEST_CASE("dihedral groups") {
  FiniteGroup d7 = FiniteGroup::dihedral(7);
  CHECK(d7.order() == 14);
  CHECK(!d7.abelian());
  for (int i = 7; i < 14; ++i) CHECK(d7.element_order(i) == 2);  // reflections
  CHECK(d7.element_order(1) == 7);
}

TEST_CASE("symmetric groups") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!s3.abelian());
  std::map<int, int> by_order;
  for (int x = 0; x < 6; ++x) by_order[s3.element_order(x)]++;
  CHECK(by_order == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(throws_kind(Err::UnknownDescriptor, [] { FiniteGroup::symmetric(7); }));
  CHECK(throws_kind(Err::OrderTooLarge, [] { FiniteGroup::symmetric(6); }));
}

TEST_CASE("gl2_3") {
  FiniteGroup g = FiniteGroup::gl2_3();
  CHECK(g.order() == 48);
  CHECK(g.element_order(g.identity()) == 1);
  // element order multiset vs direct enumeration of invertible matrices
  std::map<int, int> by_order;
  for (int x = 0; x < 48; ++x) by_order[g.element_order(x)]++;
  std::map<int, int> expected{{1, 1}, {2, 13}, {3, 8}, {4, 6}, {6, 8}, {8, 12}};
  CHECK(by_order == expected);
}

TEST_CASE("direct products") {
  FiniteGroup g42 = direct_product(FiniteGroup::cyclic(7), FiniteGroup::symmetric(3));
  CHECK(g42.order() == 42);
  FiniteGroup g42b = direct_product(FiniteGroup::cyclic(3), FiniteGroup::dihedral(7));
  CHECK(g42b.order() == 42);
  CHECK(throws_kind(Err::OrderTooLarge,
                    [] { direct_product(FiniteGroup::cyclic(2), FiniteGroup::gl2_3()); }));

  // order((x,y)) = lcm(order x, order y)
  FiniteGroup a = FiniteGroup::cyclic(6), b = FiniteGroup::dihedral(4);
  FiniteGroup p = direct_product(a, b);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y) {
      int ox = a.element_order(x), oy = b.element_order(y);
      CHECK(p.element_order(x * b.order() + y) == std::lcm(ox, oy));
    }
}

TEST_CASE("from_table validation") {
  CHECK(FiniteGroup::from_table({{0}}).order() == 1);

  // Klein four-group
  FiniteGroup v4 = FiniteGroup::from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  for (int x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  // same element-order multiset as the builtin when fed its table
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  FiniteGroup z6b = FiniteGroup::from_table(z6.table());
  std::multiset<int> a, b;
  for (int x = 0; x < 6; ++x) {
    a.insert(z6.element_order(x));
    b.insert(z6b.element_order(x));
  }
  CHECK(a == b);

  CHECK(throws_kind(Err::NotLatinSquare, [] { FiniteGroup::from_table({{0, 0}, {1, 1}}); }));
  // Latin square whose only left identity fails on the right
  CHECK(throws_kind(Err::NoIdentity,
                    [] { FiniteGroup::from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}); }));
  // Latin square with identity but not associative (order 5 loop)
  CHECK(throws_kind(Err::NotAssociative, [] {
    FiniteGroup::from_table({{0, 1, 2, 3, 4},
                             {1, 0, 3, 4, 2},
                             {2, 4, 0, 1, 3},
                             {3, 2, 4, 0, 1},
                             {4, 3, 1, 2, 0}});
  }));
}

TEST_CASE("inverse/order laws") {
  for (const FiniteGroup& g :
       {FiniteGroup::cyclic(12), FiniteGroup::dihedral(6), FiniteGroup::symmetric(4)}) {
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.element_order(x) == g.element_order(g.inv(x)));
      CHECK(g.mul(x, g.inv(x)) == g.identity());
      CHECK(g.order() % g.element_order(x) == 0);
    }
  }
}

TEST_CASE("descriptors") {
  CHECK(builtin_group("cyclic:35").order() == 35);
  CHECK(builtin_group("dihedral:7").order() == 14);
  CHECK(builtin_group("gl2_3").order() == 48);
  CHECK(builtin_group("cyclic:7*symmetric:3").order() == 42);
  CHECK(throws_kind(Err::UnknownDescriptor, [] { builtin_group("quaternion:8"); }));
  CHECK(throws_kind(Err::UnknownDescriptor, [] { builtin_group("cyclic:x"); }));
  CHECK(throws_kind(Err::OrderTooLarge, [] { builtin_group("cyclic:201"); }));
}

TEST_CASE("cayley table and binding files") {
  std::string tbl = "/tmp/lhg_test_group.tbl";
  {
    std::ofstream out(tbl);
    out << "order 3\n0 1 2\n1 2 0\n2 0 1\nnames e a b\n";
  }
  FiniteGroup g = load_cayley_table(tbl);
  CHECK(g.order() == 3);
  CHECK(g.name(1) == "a");
  CHECK(builtin_group("table:" + tbl).order() == 3);

  std::string gen = "/tmp/lhg_test_group.gen";
  {
    std::ofstream out(gen);
    out << "# comment line\nf_1 = 1\nf2 = 2\n";
  }
  GeneratorBindings b = load_bindings(gen);
  CHECK(b.f.at(1) == 1);
  CHECK(b.f.at(2) == 2);

  GroupRef ref = parse_group_descriptor("table:" + tbl + "@" + gen);
  CHECK(ref.group->order() == 3);
  CHECK(evaluate_word(*ref.group, "f1*f2", &ref.bindings) == 0);
  CHECK(evaluate_word(*ref.group, "f1^2", &ref.bindings) == 2);
}

TEST_CASE("word evaluation") {
  FiniteGroup z35 = FiniteGroup::cyclic(35);
  CHECK(evaluate_word(z35, "") == 0);
  CHECK(evaluate_word(z35, "15") == 15);
  GeneratorBindings b;
  b.f[1] = 5;
  CHECK(evaluate_word(z35, "f1^3", &b) == 15);
  CHECK(evaluate_word(z35, "f1^-1", &b) == 30);
  CHECK(throws_kind(Err::UnboundGenerator, [&] { evaluate_word(z35, "f9", &b); }));
  CHECK(throws_kind(Err::IndexOutOfRange, [&] { evaluate_word(z35, "40", &b); }));
}
