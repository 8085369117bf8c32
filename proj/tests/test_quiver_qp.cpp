#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "qclust/qp_mutation.hpp"
#include "qclust/seed.hpp"

using namespace qclust;

namespace {

const IntMatrix kA2 = IntMatrix::from_rows({{0, 1}, {-1, 0}});

// a:1→2, b:2→3, c:3→1 with W = abc in traversal order
QPData triangle() { return corpus::triangle().qp; }

}  // namespace

TEST_CASE("quivers from exchange matrices") {
  const Quiver a2 = from_btilde(kA2);
  REQUIRE(a2.arrows().size() == 1);
  CHECK(a2.arrows()[0].src == 2);
  CHECK(a2.arrows()[0].tgt == 1);
  CHECK(from_btilde(IntMatrix(3, 2)).arrows().empty());
  const Quiver k = from_btilde(IntMatrix::from_rows({{0, 2}, {-2, 0}}));
  REQUIRE(k.arrows().size() == 2);
  for (const auto& a : k.arrows()) CHECK((a.src == 2 && a.tgt == 1));
  CHECK_THROWS_AS(from_btilde(IntMatrix::from_rows({{0, 1}, {1, 0}})), Error);
  // frozen rows: b_31 = 1 gives an arrow 1→3
  const Quiver p = from_btilde(IntMatrix::from_rows({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
  CHECK(exchange_matrix(p, 2) == IntMatrix::from_rows({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("quiver mutation") {
  const Quiver empty(3);
  CHECK(same_multigraph(quiver_mutate(empty, 2), empty));
  const Quiver t = triangle().quiver;
  const Quiver t1 = quiver_mutate(t, 1);
  CHECK(same_multigraph(quiver_mutate(t1, 1), t));
  const IntMatrix b = exchange_matrix(t, 3);
  CHECK(exchange_matrix(t1, 3) == mutate_btilde(b, 1));
  CHECK(t1.arrows().size() == 2);
  Quiver loop(2);
  loop.add_arrow(1, 1);
  try {
    quiver_mutate(loop, 1);
    FAIL("mutated at a loop");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LoopAtVertex);
  }
}

TEST_CASE("property: quiver mutation follows matrix mutation on the corpus") {
  for (const auto& c : corpus::all()) {
    Quiver q = from_btilde(c.btilde);
    IntMatrix b = c.btilde;
    for (const auto& ks : corpus::sequences(c.n, 3)) {
      Quiver qq = q;
      IntMatrix bb = b;
      for (int k : ks) {
        qq = quiver_mutate(qq, k);
        bb = mutate_btilde(bb, k);
      }
      CHECK(exchange_matrix(qq, c.n) == bb);
    }
  }
}

TEST_CASE("Euler form") {
  const Quiver a2 = from_btilde(kA2);  // one arrow 2→1
  CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2, {0, 1}, {1, 0}) == 0);
  Quiver opposite(2);
  opposite.add_arrow(1, 2);
  CHECK(euler_form(opposite, {1, 0}, {0, 1}) == 0);
  CHECK(euler_form(opposite, {0, 1}, {1, 0}) == -1);
  CHECK(euler_form(Quiver(3), {1, 2, 3}, {1, 2, 3}) == 14);
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  const Quiver t = triangle().quiver;
  for (int trial = 0; trial < 30; ++trial) {
    IntVec a{d(rng), d(rng), d(rng)}, a2v{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    CHECK(euler_form(t, a + a2v, b) == euler_form(t, a, b) + euler_form(t, a2v, b));
  }
  // antisymmetrization recovers the exchange matrix
  const IntMatrix bt = exchange_matrix(t, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(euler_form(t, unit_vector(3, j), unit_vector(3, i)) - euler_form(t, unit_vector(3, i), unit_vector(3, j)) ==
            bt(i, j));
}

TEST_CASE("potentials and cyclic derivatives") {
  const QPData t = triangle();
  CHECK(t.potential.coeff({2, 3, 1}) == 1);  // rotations name the same cyclic word
  CHECK(cyclic_derivative(t.potential, 1) == PathCombo{{{2, 3}, 1}});
  CHECK(cyclic_derivative(Potential{}, 1).empty());
  Quiver two(2);
  two.add_arrow(1, 2, 1);
  two.add_arrow(2, 1, 2);
  Potential w;
  w.add({1, 2, 1, 2}, 1);
  CHECK(cyclic_derivative(w, 1) == PathCombo{{{2, 1, 2}, 2}});
  Potential r;
  r.add({2, 1, 2, 1}, 1);
  CHECK(r == w);
  CHECK(cyclic_derivative(r, 2) == cyclic_derivative(w, 2));
  Potential capped(4);
  capped.add({1, 2, 1, 2, 1, 2}, 1);
  CHECK(capped.is_zero());
  Potential bad;
  bad.add({1, 1}, 1);
  CHECK_THROWS_AS(check_potential(two, bad), Error);
  CHECK_THROWS_AS(make_qp(two, bad), Error);
}

TEST_CASE("premutation of the triangle at 1") {
  const Premutation p = premutate_full(triangle(), 1);
  const Quiver& q = p.qp.quiver;
  REQUIRE(q.arrows().size() == 4);
  CHECK(q.arrow(1).src == 2);  // ā
  CHECK(q.arrow(1).tgt == 1);
  CHECK(q.arrow(3).src == 1);  // c̄
  CHECK(q.arrow(3).tgt == 3);
  CHECK(q.arrow(2).src == 2);  // b unchanged
  CHECK(q.arrow(2).tgt == 3);
  REQUIRE(p.composites.size() == 1);
  const int comp = p.composites.begin()->first;
  CHECK(q.arrow(comp).src == 3);
  CHECK(q.arrow(comp).tgt == 2);
  // [ac]c̄ā as a cycle and b[ac] as the 2-cycle replacing abc
  CHECK(p.qp.potential.terms().size() == 2);
  CHECK(p.qp.potential.coeff({comp, 1, 3}) != 0);
  CHECK(p.qp.potential.coeff({2, comp}) != 0);
}

TEST_CASE("premutation edge cases") {
  Quiver q(3);
  q.add_arrow(2, 3);
  const QPData away = make_qp(q, Potential{});
  const QPData p = premutate(away, 1);
  CHECK(same_multigraph(p.quiver, q));
  Quiver sink(2);
  sink.add_arrow(1, 2);
  const Premutation s = premutate_full(make_qp(sink, Potential{}), 2);
  CHECK(s.composites.empty());
  CHECK(s.qp.potential.is_zero());
  CHECK(s.qp.quiver.arrows().size() == 1);
  CHECK(s.qp.quiver.arrows()[0].src == 2);
}

TEST_CASE("reduction") {
  const QPData t = triangle();
  CHECK(reduce(t).quiver.arrows() == t.quiver.arrows());
  CHECK(reduce(t).potential == t.potential);

  const QPData red = reduce(premutate(t, 1));
  CHECK(red.potential.is_zero());
  REQUIRE(red.quiver.arrows().size() == 2);
  CHECK(red.quiver.arrow(1).src == 2);
  CHECK(red.quiver.arrow(1).tgt == 1);
  CHECK(red.quiver.arrow(3).src == 1);
  CHECK(red.quiver.arrow(3).tgt == 3);

  Quiver two(2);
  two.add_arrow(1, 2, 1);
  two.add_arrow(2, 1, 2);
  Potential w;
  w.add({1, 2}, 1);
  const QPData trivial = reduce(make_qp(two, w));
  CHECK(trivial.quiver.arrows().empty());
  CHECK(trivial.potential.is_zero());
}

TEST_CASE("QP mutation") {
  const QPMutation m = mutate_qp_full(triangle(), 1);
  CHECK(m.well_mutable);
  CHECK(m.qp.potential.is_zero());
  CHECK(m.qp.quiver.arrows().size() == 2);
  // acyclic with W = 0 follows quiver mutation; the potential stays zero at
  // sources and sinks, while the middle of A3 closes an oriented triangle
  const auto a3 = corpus::a3().qp;
  for (int k = 1; k <= 3; ++k) {
    const QPData mk = mutate_qp(a3, k);
    CHECK(same_multigraph(mk.quiver, quiver_mutate(a3.quiver, k)));
    CHECK(mk.potential.is_zero() == (k != 2));
  }
}

TEST_CASE("truncated Jacobi algebra dimensions") {
  const Quiver a2 = from_btilde(kA2);
  CHECK(jacobi_dims(make_qp(a2, Potential{}), 3) == std::vector<long>{2, 1, 0, 0});
  const QPData t = triangle();
  const auto d = jacobi_dims(t, 6);
  CHECK(d[0] == 3);
  CHECK(d[1] == 3);
  // ∂W kill every path of length 2, hence everything longer
  CHECK(d[2] == 0);
  CHECK(jacobi_dims(make_qp(t.quiver, Potential{}), 4) == std::vector<long>{3, 3, 3, 3, 3});
  try {
    jacobi_dims(t, 11);
    FAIL("degree cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeCapExceeded);
  }
}

TEST_CASE("property: QP mutation is an involution on observables") {
  for (const auto& c : corpus::all()) {
    CAPTURE(c.name);
    for (const auto& ks : corpus::sequences(c.n, 3)) {
      QPData cur = make_qp(c.qp.quiver, [&] {
        Potential w(8);
        for (const auto& [word, x] : c.qp.potential.terms()) w.add(word, x);
        return w;
      }());
      for (int k : ks) cur = mutate_qp(cur, k);
      for (const auto& t : cur.potential.terms()) CHECK(t.first.size() > 2);
      for (int k = 1; k <= c.n; ++k) {
        const QPData back = mutate_qp(mutate_qp(cur, k), k);
        CHECK(same_multigraph(back.quiver, cur.quiver));
        const int up = std::min<int>(6, 8 - static_cast<int>(std::max(back.potential.max_degree(),
                                                                   cur.potential.max_degree())) + 1);
        CHECK(jacobi_dims(back, up) == jacobi_dims(cur, up));
      }
    }
  }
}
