#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/rational.hpp"

namespace regcat {

  using Vector = std::vector<Rational>;

  //! Dense row-major matrix of exact rationals.
  //!
  //! A matrix with r rows and c columns is read as a linear map from Q^c to
  //! Q^r acting on column vectors, so composition g∘f is the product G * F.
  //! Zero-sized dimensions are allowed; the 0x0 matrix is the identity of the
  //! zero space.
  class Matrix {
   public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols, Rational(0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : _rows(rows), _cols(cols), _entries(std::move(entries)) {
      if (_entries.size() != rows * cols) {
        throw DimensionMismatch("matrix entry count " + std::to_string(_entries.size())
                                + " does not equal " + std::to_string(rows) + "x"
                                + std::to_string(cols));
      }
    }

    //! Builds a matrix from nested row lists; every row must have equal length.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
      _rows = rows.size();
      _cols = _rows == 0 ? 0 : rows.begin()->size();
      _entries.reserve(_rows * _cols);
      for (auto const& row : rows) {
        if (row.size() != _cols) {
          throw DimensionMismatch("ragged matrix literal");
        }
        _entries.insert(_entries.end(), row.begin(), row.end());
      }
    }

    static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols_if_empty = 0) {
      std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
      Matrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          throw DimensionMismatch("ragged row list");
        }
        for (std::size_t j = 0; j < cols; ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) {
      return Matrix(rows, cols);
    }

    static Matrix diagonal(std::vector<Rational> const& d) {
      Matrix m(d.size(), d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
      }
      return m;
    }

    static Matrix column(Vector const& v) {
      return Matrix(v.size(), 1, v);
    }

    std::size_t rows() const noexcept { return _rows; }
    std::size_t cols() const noexcept { return _cols; }
    // Names for the linear-map reading.
    std::size_t domain_dim() const noexcept { return _cols; }
    std::size_t codomain_dim() const noexcept { return _rows; }
    bool is_square() const noexcept { return _rows == _cols; }

    Rational& operator()(std::size_t i, std::size_t j) { return _entries[i * _cols + j]; }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    std::vector<Rational> const& entries() const noexcept { return _entries; }

    Vector row(std::size_t i) const {
      return Vector(_entries.begin() + i * _cols, _entries.begin() + (i + 1) * _cols);
    }

    Vector col(std::size_t j) const {
      Vector v(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        v[i] = (*this)(i, j);
      }
      return v;
    }

    bool is_zero() const {
      for (auto const& x : _entries) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw DimensionMismatch("cannot compose " + a.shape() + " after " + b.shape());
      }
      Matrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          Rational const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
      return c;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      a.require_same_shape(b, "+");
      for (std::size_t i = 0; i < a._entries.size(); ++i) {
        a._entries[i] += b._entries[i];
      }
      return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b) {
      a.require_same_shape(b, "-");
      for (std::size_t i = 0; i < a._entries.size(); ++i) {
        a._entries[i] -= b._entries[i];
      }
      return a;
    }

    friend Matrix operator*(Rational const& s, Matrix a) {
      for (auto& x : a._entries) {
        x *= s;
      }
      return a;
    }

    friend Vector operator*(Matrix const& a, Vector const& v) {
      if (a._cols != v.size()) {
        throw DimensionMismatch("cannot apply " + a.shape() + " to a vector of length "
                                + std::to_string(v.size()));
      }
      Vector out(a._rows, Rational(0));
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t j = 0; j < a._cols; ++j) {
          out[i] += a(i, j) * v[j];
        }
      }
      return out;
    }

    std::string shape() const {
      return std::to_string(_rows) + "x" + std::to_string(_cols);
    }

   private:
    void require_same_shape(Matrix const& b, char const* op) const {
      if (_rows != b._rows || _cols != b._cols) {
        throw DimensionMismatch(std::string("shape mismatch in ") + op + ": " + shape()
                                + " vs " + b.shape());
      }
    }

    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Rational> _entries;
  };

  //! Kronecker product with row-major basis ordering (a_i ⊗ b_j ↦ index i*dim(b)+j).
  inline Matrix kronecker(Matrix const& a, Matrix const& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j) == 0) {
          continue;
        }
        for (std::size_t p = 0; p < b.rows(); ++p) {
          for (std::size_t q = 0; q < b.cols(); ++q) {
            k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
          }
        }
      }
    }
    return k;
  }

  //! Composite of a list of maps, applied right to left: maps[0] ∘ ... ∘ maps.back().
  inline Matrix compose(std::vector<Matrix> const& maps) {
    if (maps.empty()) {
      throw DimensionMismatch("empty composite has no defined dimension");
    }
    Matrix out = maps.front();
    for (std::size_t i = 1; i < maps.size(); ++i) {
      out = out * maps[i];
    }
    return out;
  }

  inline Vector basis_vector(std::size_t dim, std::size_t index) {
    Vector v(dim, Rational(0));
    v.at(index) = 1;
    return v;
  }

  //! Standard basis vector e_j of the domain on which a and b disagree, if any.
  //! Both maps must share a shape.
  inline std::optional<Vector> first_difference(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionMismatch("cannot compare " + a.shape() + " with " + b.shape());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a(i, j) != b(i, j)) {
          return basis_vector(a.cols(), j);
        }
      }
    }
    return std::nullopt;
  }

  inline std::ostream& operator<<(std::ostream& os, Matrix const& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << (j == 0 ? "" : ", ") << to_string(m(i, j));
      }
      os << ']';
    }
    return os << ']';
  }

  inline std::string to_string(Vector const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : ", ") + to_string(v[i]);
    }
    return out + ")";
  }

}  // namespace regcat
