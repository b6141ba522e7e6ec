#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/matrix.hpp"

namespace regcat {

  struct RowEchelon {
    Matrix reduced;                   // same shape as the input
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
  };

  //! Gauss-Jordan elimination to reduced row echelon form.
  inline RowEchelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
      std::size_t r = lead_row;
      while (r < m.rows() && m(r, col) == 0) {
        ++r;
      }
      if (r == m.rows()) {
        continue;
      }
      if (r != lead_row) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(r, j), m(lead_row, j));
        }
      }
      Rational inv = 1 / m(lead_row, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(lead_row, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == lead_row || m(i, col) == 0) {
          continue;
        }
        Rational factor = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          m(i, j) -= factor * m(lead_row, j);
        }
      }
      pivots.push_back(col);
      ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
  }

  inline std::size_t rank(Matrix const& m) {
    return rref(m).pivots.size();
  }

  inline bool is_invertible(Matrix const& m) {
    return m.is_square() && rank(m) == m.rows();
  }

  //! Exact inverse of a square nonsingular matrix.
  inline Matrix inverse(Matrix const& m) {
    if (!m.is_square()) {
      throw DimensionMismatch("cannot invert non-square " + m.shape());
    }
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    auto [red, pivots] = rref(std::move(aug));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
      throw SingularMatrix("matrix is singular");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = red(i, n + j);
      }
    }
    return inv;
  }

  //! A subspace of Q^n held by its canonical RREF basis; equality is structural.
  class Subspace {
   public:
    //! The zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient = 0) : _basis(0, ambient) {}

    //! Span of the rows of `rows` (which may be dependent or zero).
    static Subspace span(Matrix const& rows) {
      auto [red, pivots] = rref(rows);
      Matrix basis(pivots.size(), rows.cols());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) {
          basis(i, j) = red(i, j);
        }
      }
      Subspace s;
      s._basis = std::move(basis);
      s._pivots = std::move(pivots);
      return s;
    }

    static Subspace span(std::vector<Vector> const& vectors, std::size_t ambient) {
      return span(Matrix::from_rows(vectors, ambient));
    }

    static Subspace full(std::size_t ambient) {
      return span(Matrix::identity(ambient));
    }

    std::size_t ambient_dim() const noexcept { return _basis.cols(); }
    std::size_t dim() const noexcept { return _basis.rows(); }
    //! Basis vectors as rows, in RREF.
    Matrix const& basis() const noexcept { return _basis; }
    std::vector<std::size_t> const& pivots() const noexcept { return _pivots; }

    std::vector<Vector> basis_vectors() const {
      std::vector<Vector> out;
      for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(_basis.row(i));
      }
      return out;
    }

    bool contains(Vector const& v) const {
      if (v.size() != ambient_dim()) {
        throw DimensionMismatch("vector length does not match ambient dimension");
      }
      return span(stack(_basis, Matrix::from_rows({v}))).dim() == dim();
    }

    bool contains(Subspace const& other) const {
      require_same_ambient(other);
      return span(stack(_basis, other._basis)).dim() == dim();
    }

    friend bool operator==(Subspace const& a, Subspace const& b) {
      return a._basis == b._basis;
    }

    friend Subspace operator+(Subspace const& a, Subspace const& b) {
      a.require_same_ambient(b);
      return span(stack(a._basis, b._basis));
    }

    static Matrix stack(Matrix const& top, Matrix const& bottom) {
      if (top.cols() != bottom.cols()) {
        throw DimensionMismatch("cannot stack " + top.shape() + " on " + bottom.shape());
      }
      Matrix out(top.rows() + bottom.rows(), top.cols());
      for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) {
          out(i, j) = top(i, j);
        }
      }
      for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < bottom.cols(); ++j) {
          out(top.rows() + i, j) = bottom(i, j);
        }
      }
      return out;
    }

    void require_same_ambient(Subspace const& other) const {
      if (ambient_dim() != other.ambient_dim()) {
        throw DimensionMismatch("subspaces live in Q^" + std::to_string(ambient_dim())
                                + " and Q^" + std::to_string(other.ambient_dim()));
      }
    }

   private:
    Matrix _basis;
    std::vector<std::size_t> _pivots;
  };

  //! True iff a ⊕ b is the whole ambient space.
  inline bool is_direct_sum(Subspace const& a, Subspace const& b) {
    a.require_same_ambient(b);
    return a.dim() + b.dim() == a.ambient_dim() && (a + b).dim() == a.ambient_dim();
  }

  inline Subspace kernel(Matrix const& f) {
    auto [red, pivots] = rref(f);
    std::vector<bool> is_pivot(f.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < f.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vector v(f.cols(), Rational(0));
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = -red(r, free);
      }
      vectors.push_back(std::move(v));
    }
    return Subspace::span(vectors, f.cols());
  }

  //! Column space of f.
  inline Subspace image(Matrix const& f) {
    return Subspace::span(f.transpose());
  }

  //! Coordinate complement: the standard basis vectors at the non-pivot columns.
  inline Subspace complement(Subspace const& s) {
    std::vector<bool> is_pivot(s.ambient_dim(), false);
    for (auto p : s.pivots()) {
      is_pivot[p] = true;
    }
    std::vector<Vector> vectors;
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      if (!is_pivot[j]) {
        vectors.push_back(basis_vector(s.ambient_dim(), j));
      }
    }
    return Subspace::span(vectors, s.ambient_dim());
  }

  //! The idempotent with image `onto` and kernel `along`.
  inline Matrix projector_onto(Subspace const& onto, Subspace const& along) {
    if (onto.ambient_dim() != along.ambient_dim() || !is_direct_sum(onto, along)) {
      throw NotADirectSum("subspaces of dimensions " + std::to_string(onto.dim()) + " and "
                          + std::to_string(along.dim()) + " do not decompose Q^"
                          + std::to_string(onto.ambient_dim()));
    }
    // Columns of `frame` form a basis adapted to the decomposition.
    Matrix frame = Subspace::stack(onto.basis(), along.basis()).transpose();
    std::vector<Rational> keep(onto.ambient_dim(), Rational(0));
    std::fill(keep.begin(), keep.begin() + static_cast<std::ptrdiff_t>(onto.dim()),
              Rational(1));
    return frame * Matrix::diagonal(keep) * inverse(frame);
  }

  //! Some x with a*x = b (b may have several columns), or nullopt if none exists.
  inline std::optional<Matrix> solve(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows()) {
      throw DimensionMismatch("solve: " + a.shape() + " against " + b.shape());
    }
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        aug(i, j) = a(i, j);
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        aug(i, a.cols() + j) = b(i, j);
      }
    }
    auto [red, pivots] = rref(std::move(aug));
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] >= a.cols()) {
        return std::nullopt;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        x(pivots[r], j) = red(r, a.cols() + j);
      }
    }
    return x;
  }

}  // namespace regcat
