#pragma once

#include <string>
#include <vector>

#include "regcat/regcat.hpp"

namespace regcat::fixtures {

  inline Rational q(long p, long d = 1) { return Rational(p, d); }

  inline Matrix diag10() { return Matrix{{1, 0}, {0, 0}}; }
  inline Matrix nilpotent() { return Matrix{{0, 1}, {0, 0}}; }
  inline Matrix swap2() { return Matrix{{0, 1}, {1, 0}}; }
  inline Matrix shear() { return Matrix{{1, 1}, {0, 1}}; }

  //! Objects X1, X2 of dimension 2 with arrows a: X1→X2 and b: X2→X1.
  inline RepresentedCategory pair_category(Matrix const& a, Matrix const& b) {
    RepresentedCategory cat;
    cat.add_object("X1", a.cols());
    cat.add_object("X2", a.rows());
    cat.add_arrow("a", "X1", "X2", a);
    cat.add_arrow("b", "X2", "X1", b);
    return cat;
  }

  inline Cocycle pair_cocycle() { return {{"X1", "X2"}, {"a", "b"}}; }

  //! One category holding the invertible pair, the diag(1,0) pair, the
  //! diag(1,0) triple and the nilpotent triple, all based at X1.
  struct Corpus {
    RepresentedCategory cat;
    Cocycle invertible{{"X1", "Y"}, {"inv1", "inv2"}};
    Cocycle idem_pair{{"X1", "Z"}, {"p1", "p2"}};
    Cocycle idem_triple{{"X1", "U", "V"}, {"t1", "t2", "t3"}};
    Cocycle nil_triple{{"X1", "U", "V"}, {"n1", "t2", "t3"}};
    Cocycle idem_single{{"X1"}, {"e"}};
  };

  inline Corpus corpus() {
    Corpus c;
    for (auto const* name : {"X1", "Y", "Z", "U", "V"}) {
      c.cat.add_object(name, 2);
    }
    c.cat.add_arrow("inv1", "X1", "Y", shear());
    c.cat.add_arrow("inv2", "Y", "X1", inverse(shear()));
    c.cat.add_arrow("p1", "X1", "Z", diag10());
    c.cat.add_arrow("p2", "Z", "X1", diag10());
    c.cat.add_arrow("t1", "X1", "U", diag10());
    c.cat.add_arrow("t2", "U", "V", diag10());
    c.cat.add_arrow("t3", "V", "X1", diag10());
    c.cat.add_arrow("n1", "X1", "U", nilpotent());
    c.cat.add_arrow("e", "X1", "X1", diag10());
    return c;
  }

  //! Coordinate-wise product on Q^2: b_i b_j = δ_ij b_i.
  inline Matrix pointwise_mult() {
    Matrix m(2, 4);
    m(0, 0) = 1;
    m(1, 3) = 1;
    return m;
  }

  //! Group-like comultiplication b_i ↦ b_i ⊗ b_i on Q^d.
  inline Matrix grouplike_comult(std::size_t d) {
    Matrix c(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
      c(i * d + i, i) = 1;
    }
    return c;
  }

  //! Group algebra of Z_n on basis b_0..b_{n-1}.
  inline Matrix cyclic_group_mult(std::size_t n) {
    Matrix m(n, n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        m((x + y) % n, x * n + y) = 1;
      }
    }
    return m;
  }

  //! b_x ↦ b_{-x}.
  inline Matrix cyclic_group_inversion(std::size_t n) {
    Matrix s(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      s((n - x) % n, x) = 1;
    }
    return s;
  }

  inline AlmostBialgebra cyclic_group_bialgebra(std::size_t n) {
    Matrix unit(n, 1);
    unit(0, 0) = 1;
    Matrix counit(1, n);
    for (std::size_t x = 0; x < n; ++x) {
      counit(0, x) = 1;
    }
    Matrix id = Matrix::identity(n);
    return AlmostBialgebra(ObstructedAlgebra(cyclic_group_mult(n), id),
                           ObstructedCoalgebra(grouplike_comult(n), id), unit, counit);
  }

}  // namespace regcat::fixtures
