#pragma once

// Seeded generators for property tests. Every generator is deterministic for
// a given engine state.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "regcat/regcat.hpp"

namespace regcat::testing {

  using Engine = std::mt19937_64;

  inline std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline bool coin(Engine& rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
  }

  //! p/q with p in [-5, 5] and q in [1, 5].
  inline Rational small_rational(Engine& rng) {
    auto p = std::uniform_int_distribution<int>(-5, 5)(rng);
    auto q = std::uniform_int_distribution<int>(1, 5)(rng);
    return Rational(p, q);
  }

  inline Matrix dense_matrix(Engine& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = small_rational(rng);
      }
    }
    return m;
  }

  //! Small-entry matrix that is often rank deficient: entries are sparse and
  //! some rows and columns are copied from earlier ones.
  inline Matrix corpus_matrix(Engine& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    double density = coin(rng) ? 1.0 : 0.6;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (coin(rng, density)) {
          m(i, j) = small_rational(rng);
        }
      }
    }
    if (coin(rng)) {
      for (std::size_t i = 1; i < rows; ++i) {
        if (coin(rng, 0.35)) {
          std::size_t src = uniform(rng, 0, i - 1);
          for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = m(src, j);
          }
        }
      }
      for (std::size_t j = 1; j < cols; ++j) {
        if (coin(rng, 0.35)) {
          std::size_t src = uniform(rng, 0, j - 1);
          for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = m(i, src);
          }
        }
      }
    }
    return m;
  }

  inline Matrix corpus_matrix(Engine& rng) {
    return corpus_matrix(rng, uniform(rng, 1, 6), uniform(rng, 1, 6));
  }

  inline Matrix invertible_matrix(Engine& rng, std::size_t n) {
    while (true) {
      Matrix m = dense_matrix(rng, n, n);
      if (is_invertible(m)) {
        return m;
      }
    }
  }

  //! Full column rank rows x cols matrix (rows >= cols).
  inline Matrix injective_matrix(Engine& rng, std::size_t rows, std::size_t cols) {
    while (true) {
      Matrix m = dense_matrix(rng, rows, cols);
      if (rank(m) == cols) {
        return m;
      }
    }
  }

  //! A left inverse of an injective map, perturbed by a map killing its image.
  inline Matrix retraction_for(Engine& rng, Matrix const& inclusion) {
    Matrix left = generalized_inverse(inclusion);
    Matrix kill_image = Matrix::identity(inclusion.rows()) - inclusion * left;
    return left + dense_matrix(rng, inclusion.cols(), inclusion.rows()) * kill_image;
  }

  //! Random lift data: small dimension `small` at every index, big dimensions
  //! in [small, max_big], invertible small cycle closed up by its last map.
  inline LiftData random_lift_data(Engine& rng, std::size_t n, std::size_t small,
                                   std::size_t max_big) {
    LiftData data;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t big = uniform(rng, small, max_big);
      data.inclusions.push_back(injective_matrix(rng, big, small));
      data.projections.push_back(retraction_for(rng, data.inclusions.back()));
    }
    Matrix around = Matrix::identity(small);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      data.small_maps.push_back(invertible_matrix(rng, small));
      around = data.small_maps.back() * around;
    }
    data.small_maps.push_back(inverse(around));
    return data;
  }

  //! Four-term lift data over big spaces X (positions 1, 3) and Y (positions
  //! 2, 4) sharing inclusions, with independently perturbed projections. The
  //! derived star chain [f1, f4, f3, f2] has f* a generalized inverse of f and
  //! f*, f*** agreeing on Im f while f** and f*** differ from f and f*.
  inline LiftData random_four_lift(Engine& rng, std::size_t small, std::size_t dim_x,
                                   std::size_t dim_y) {
    Matrix iota_x = injective_matrix(rng, dim_x, small);
    Matrix iota_y = injective_matrix(rng, dim_y, small);
    Matrix forward = invertible_matrix(rng, small);
    Matrix backward = inverse(forward);
    LiftData data;
    data.inclusions  = {iota_x, iota_y, iota_x, iota_y};
    data.projections = {retraction_for(rng, iota_x), retraction_for(rng, iota_y),
                        retraction_for(rng, iota_x), retraction_for(rng, iota_y)};
    data.small_maps  = {forward, backward, forward, backward};
    return data;
  }

}  // namespace regcat::testing
