#include <doctest.h>

#include <set>

#include "knotpoly/conway.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/invariants.hpp"
#include "test_util.hpp"

using namespace knotpoly;

namespace {

const char* kReferenceSymbols[] = {
    "3",          "2",           "2 2",       "3 2",         "2 1 2",
    "3,3,-3",     "5,3,-3",      "2,2,2,2,2+", "(2 1,2 1) 1 (2,2+)",
    "(2,2,2) (2 1,2 1)",         "6*2 2:.(2,-2) 0",           "6*",
    "3 1 1 3",    "7 2",         "2 1 1 1 1 2", "4 2 1 2",    "6",
};

}  // namespace

TEST_CASE("parsing shapes") {
  TangleExpr t = parse("3,3,-3");
  REQUIRE(t.kind == TangleExpr::Kind::Ramification);
  REQUIRE(t.children.size() == 3);
  CHECK(t.children[0] == TangleExpr::integer(3));
  CHECK(t.children[2] == TangleExpr::integer(-3));
  CHECK(t.plus_count == 0);

  TangleExpr p = parse("2 2");
  REQUIRE(p.kind == TangleExpr::Kind::Product);
  REQUIRE(p.children.size() == 2);

  TangleExpr r = parse("2,2,2,2,2+");
  REQUIRE(r.kind == TangleExpr::Kind::Ramification);
  CHECK(r.children.size() == 5);
  CHECK(r.plus_count == 1);
  for (const auto& c : r.children) CHECK(c == TangleExpr::integer(2));

  TangleExpr poly = parse("6*2 2:.(2,-2) 0");
  REQUIRE(poly.kind == TangleExpr::Kind::Polyhedral);
  REQUIRE(poly.children.size() == 6);
  CHECK(poly.children[1] == TangleExpr::integer(1));
  CHECK(poly.children[3].kind == TangleExpr::Kind::Product);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("8*1"), ParseError);
  CHECK_THROWS_AS(parse("10**2"), ParseError);
  CHECK_THROWS_AS(parse("2,,3"), ParseError);
  CHECK_THROWS_AS(parse("2+"), ParseError);
  CHECK_THROWS_AS(parse("(2 2"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("2 2 )");
  } catch (const ParseError& e) {
    CHECK(e.position >= 4);
  }
}

TEST_CASE("print round trip on the reference symbols") {
  for (const char* s : kReferenceSymbols) {
    TangleExpr t = parse(s);
    CHECK(parse(print(t)) == t);
  }
}

TEST_CASE("mirror symbol") {
  CHECK(mirror_symbol(parse("3")) == parse("-3"));
  CHECK(mirror_symbol(parse("3,3,-3")) == parse("-3,-3,3"));
  for (const char* s : kReferenceSymbols)
    CHECK(mirror_symbol(mirror_symbol(parse(s))) == parse(s));
}

TEST_CASE("mirror symbol builds the mirror diagram") {
  for (const char* s : {"3", "2 2", "3,3,-3", "2,2,2,2,2+", "6*2 2:.(2,-2) 0"}) {
    Diagram a = to_diagram(mirror_symbol(parse(s)));
    Diagram b = mirror(to_diagram(parse(s)));
    REQUIRE(a.n() == b.n());
    for (int c = 0; c < a.n(); ++c) {
      CHECK(a.crossings[c].arcs == b.crossings[c].arcs);
      CHECK(a.crossings[c].over_diag == b.crossings[c].over_diag);
    }
  }
}

TEST_CASE("diagram realization counts") {
  auto trefoil = to_diagram(parse("3"));
  CHECK(trefoil.n() == 3);
  CHECK(component_count(trefoil) == 1);

  auto hopf = to_diagram(parse("2"));
  CHECK(hopf.n() == 2);
  CHECK(component_count(hopf) == 2);

  auto big = to_diagram(parse("2,2,2,2,2+"));
  CHECK(big.n() == 11);
  CHECK(component_count(big) == 5);

  CHECK(component_count(to_diagram(parse("(2,2,2) (2 1,2 1)"))) == 4);
  CHECK(component_count(to_diagram(parse("6*2 2:.(2,-2) 0"))) == 3);
}

TEST_CASE("crossing count additivity") {
  for (const char* s : kReferenceSymbols) {
    TangleExpr t = parse(s);
    CHECK(to_diagram(t).n() == symbol_crossings(t));
  }
}

TEST_CASE("all-positive symbols build alternating diagrams") {
  for (const char* s : {"3", "2 2", "2 1 2", "2,2,2", "3 1 1 3", "2 1 1 1 1 2",
                        "6*", "6*2.2.2.2.2.2"}) {
    CHECK(is_alternating(to_diagram(parse(s))));
  }
  CHECK(!is_alternating(to_diagram(parse("3,3,-3"))));
}

TEST_CASE("family members") {
  FamilySpec spec{parse("3,3,-3"), {0}};
  auto fam = family_members(spec, 4, Parity::Even);
  REQUIRE(fam.size() == 3);
  CHECK(fam[0] == parse("3,3,-3"));
  std::set<std::string> names;
  for (const auto& m : fam) names.insert(print(m));
  CHECK(names == std::set<std::string>{"3,3,-3", "5,3,-3", "7,3,-3"});

  FamilySpec empty{parse("2 2"), {}};
  auto only = family_members(empty, 7, Parity::Any);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == parse("2 2"));

  FamilySpec both{parse("2 2"), {0, 1}};
  auto four = family_members(both, 1, Parity::Any);
  std::set<std::string> got;
  for (const auto& m : four) got.insert(print(m));
  CHECK(got == std::set<std::string>{"2 2", "3 2", "2 3", "3 3"});
}

TEST_CASE("family selection validation") {
  FamilySpec bad{parse("2 2"), {5}};
  CHECK_THROWS_AS(family_members(bad, 2, Parity::Any), std::invalid_argument);
  FamilySpec ones{parse("2 1 2"), {1}};
  CHECK_THROWS_AS(family_members(ones, 2, Parity::Any), std::invalid_argument);
}

TEST_CASE("even families preserve component counts") {
  for (const char* base : {"2 2", "2,2,2", "2 1 2", "3 2"}) {
    TangleExpr b = parse(base);
    int nsel = static_cast<int>(integer_entries(b).size());
    std::vector<int> sel;
    for (int i = 0; i < nsel; ++i)
      if (std::abs(integer_entries(b)[i]->value) != 1) sel.push_back(i);
    FamilySpec spec{b, sel};
    int c0 = component_count(to_diagram(b));
    for (const auto& m : family_members(spec, 4, Parity::Even))
      CHECK(component_count(to_diagram(m)) == c0);
  }
}

TEST_CASE("rational enumeration small cases") {
  auto n2 = enumerate_rational(2);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0].p == 2);
  CHECK(n2[0].q == 1);

  auto n3 = enumerate_rational(3);
  REQUIRE(n3.size() == 1);
  CHECK(n3[0].p == 3);
  CHECK(n3[0].q == 1);
  CHECK(n3[0].chiral);
  CHECK(!n3[0].mirror_listed);

  auto n4 = enumerate_rational(4);
  bool has_fig8 = false;
  for (const auto& rc : n4)
    if (rc.p == 5 && rc.q == 2) {
      has_fig8 = true;
      CHECK(!rc.chiral);  // 2*3 == 1 (mod 5)
    }
  CHECK(has_fig8);
  CHECK(n4.size() == 2);

  CHECK_THROWS_AS(enumerate_rational(1), std::invalid_argument);
}

TEST_CASE("canonical symbols match their fractions and crossing numbers") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& rc : enumerate_rational(n)) {
      auto [p, q] = continued_fraction(rc.symbol);
      CHECK(p == rc.p);
      CHECK(q == rc.q);
      CHECK(symbol_crossings(rc.symbol) == n);
      CHECK(to_diagram(rc.symbol).n() == n);
    }
  }
}

TEST_CASE("rational enumeration agrees with brute-force diagram signatures") {
  // every positive composition of n (not only last>=2) realizes a rational
  // link; group them by invariant signature and compare against the class
  // list expanded by chirality
  for (int n = 2; n <= 8; ++n) {
    std::set<std::string> signatures;
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rest) -> void {
      if (rest == 0) {
        TangleExpr t;
        if (comp.size() == 1) {
          t = TangleExpr::integer(comp[0]);
        } else {
          t.kind = TangleExpr::Kind::Product;
          for (int a : comp) t.children.push_back(TangleExpr::integer(a));
        }
        Diagram d = to_diagram(t);
        if (d.n() != n) return;  // reducible nugatory forms keep n anyway
        std::string sig = std::to_string(component_count(d)) + "|" +
                          serialize(alexander(d)) + "|" + serialize(jones(d));
        signatures.insert(sig);
        return;
      }
      for (int part = 1; part <= rest; ++part) {
        comp.push_back(part);
        self(self, rest - part);
        comp.pop_back();
      }
    };
    rec(rec, n);

    // a chiral class contributes its mirror only when no separate entry
    // for the mirror class was generated
    std::size_t expanded = 0;
    for (const auto& rc : enumerate_rational(n))
      expanded += (rc.chiral && !rc.mirror_listed) ? 2 : 1;
    CHECK(signatures.size() == expanded);
  }
}
