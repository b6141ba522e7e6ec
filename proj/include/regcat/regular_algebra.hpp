#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/linear.hpp"
#include "regcat/matrix.hpp"

// Algebraic structures over Q^d with a designated idempotent obstruction e.
// Tensor powers use the Kronecker (row-major) basis, so a multiplication is a
// d x d² matrix and a comultiplication is d² x d. Duals pair through the
// standard dual basis, which turns every duality into a transpose.

namespace regcat {

  //! Outcome of one identity between two linear maps.
  struct LawResult {
    std::string name;
    bool passed = false;
    std::optional<Vector> witness;  // basis vector of the domain where the sides differ
  };

  inline bool all_passed(std::vector<LawResult> const& laws) {
    for (auto const& l : laws) {
      if (!l.passed) {
        return false;
      }
    }
    return true;
  }

  inline LawResult compare_law(std::string name, Matrix const& lhs, Matrix const& rhs) {
    auto diff = first_difference(lhs, rhs);
    return {std::move(name), !diff, std::move(diff)};
  }

  //! Flip map on Q^d ⊗ Q^d.
  inline Matrix swap_map(std::size_t dim) {
    Matrix s(dim * dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        s(j * dim + i, i * dim + j) = 1;
      }
    }
    return s;
  }

  namespace detail {
    inline void require_endomap(Matrix const& m, std::size_t dim, char const* what) {
      if (m.rows() != dim || m.cols() != dim) {
        throw DimensionMismatch(std::string(what) + " should be " + std::to_string(dim) + "x"
                                + std::to_string(dim) + ", got " + m.shape());
      }
    }

    inline void require_idempotent(Matrix const& e, char const* what) {
      if (e * e != e) {
        throw InvariantViolation(std::string(what) + " is not idempotent");
      }
    }
  }  // namespace detail

  //! Associative multiplication m : A ⊗ A → A with obstruction e.
  class ObstructedAlgebra {
   public:
    ObstructedAlgebra(Matrix mult, Matrix obstruction)
        : _mult(std::move(mult)), _obstruction(std::move(obstruction)) {
      std::size_t d = _mult.rows();
      if (_mult.cols() != d * d) {
        throw DimensionMismatch("multiplication must be d x d², got " + _mult.shape());
      }
      detail::require_endomap(_obstruction, d, "obstruction");
      detail::require_idempotent(_obstruction, "obstruction");
      Matrix id = Matrix::identity(d);
      if (_mult * kronecker(_mult, id) != _mult * kronecker(id, _mult)) {
        throw InvariantViolation("multiplication is not associative");
      }
    }

    std::size_t dim() const noexcept { return _mult.rows(); }
    Matrix const& mult() const noexcept { return _mult; }
    Matrix const& obstruction() const noexcept { return _obstruction; }

    friend bool operator==(ObstructedAlgebra const&, ObstructedAlgebra const&) = default;

   private:
    Matrix _mult;
    Matrix _obstruction;
  };

  //! Coassociative comultiplication Δ : A → A ⊗ A with obstruction e.
  class ObstructedCoalgebra {
   public:
    ObstructedCoalgebra(Matrix comult, Matrix obstruction)
        : _comult(std::move(comult)), _obstruction(std::move(obstruction)) {
      std::size_t d = _comult.cols();
      if (_comult.rows() != d * d) {
        throw DimensionMismatch("comultiplication must be d² x d, got " + _comult.shape());
      }
      detail::require_endomap(_obstruction, d, "obstruction");
      detail::require_idempotent(_obstruction, "obstruction");
      Matrix id = Matrix::identity(d);
      if (kronecker(_comult, id) * _comult != kronecker(id, _comult) * _comult) {
        throw InvariantViolation("comultiplication is not coassociative");
      }
    }

    std::size_t dim() const noexcept { return _comult.cols(); }
    Matrix const& comult() const noexcept { return _comult; }
    Matrix const& obstruction() const noexcept { return _obstruction; }

    friend bool operator==(ObstructedCoalgebra const&, ObstructedCoalgebra const&) = default;

   private:
    Matrix _comult;
    Matrix _obstruction;
  };

  //! Algebra and coalgebra on the same space with Δ(ab) = Δ(a)Δ(b). Unit
  //! (d x 1) and counit (1 x d) are optional; when present they must be two-sided.
  class AlmostBialgebra {
   public:
    AlmostBialgebra(ObstructedAlgebra algebra, ObstructedCoalgebra coalgebra,
                    std::optional<Matrix> unit = std::nullopt,
                    std::optional<Matrix> counit = std::nullopt)
        : _algebra(std::move(algebra)),
          _coalgebra(std::move(coalgebra)),
          _unit(std::move(unit)),
          _counit(std::move(counit)) {
      std::size_t d = _algebra.dim();
      if (_coalgebra.dim() != d) {
        throw DimensionMismatch("algebra and coalgebra dimensions differ");
      }
      if (_algebra.obstruction() != _coalgebra.obstruction()) {
        throw InvariantViolation("algebra and coalgebra carry different obstructions");
      }
      Matrix id = Matrix::identity(d);
      Matrix const& m = _algebra.mult();
      Matrix const& c = _coalgebra.comult();
      Matrix middle_swap = kronecker(kronecker(id, swap_map(d)), id);
      if (c * m != kronecker(m, m) * middle_swap * kronecker(c, c)) {
        throw InvariantViolation("comultiplication is not multiplicative");
      }
      if (_unit) {
        if (_unit->rows() != d || _unit->cols() != 1) {
          throw DimensionMismatch("unit must be d x 1, got " + _unit->shape());
        }
        if (m * kronecker(*_unit, id) != id || m * kronecker(id, *_unit) != id) {
          throw InvariantViolation("unit is not two-sided");
        }
      }
      if (_counit) {
        if (_counit->rows() != 1 || _counit->cols() != d) {
          throw DimensionMismatch("counit must be 1 x d, got " + _counit->shape());
        }
        if (kronecker(*_counit, id) * c != id || kronecker(id, *_counit) * c != id) {
          throw InvariantViolation("counit is not two-sided");
        }
      }
    }

    std::size_t dim() const noexcept { return _algebra.dim(); }
    ObstructedAlgebra const& algebra() const noexcept { return _algebra; }
    ObstructedCoalgebra const& coalgebra() const noexcept { return _coalgebra; }
    Matrix const& mult() const noexcept { return _algebra.mult(); }
    Matrix const& comult() const noexcept { return _coalgebra.comult(); }
    Matrix const& obstruction() const noexcept { return _algebra.obstruction(); }
    std::optional<Matrix> const& unit() const noexcept { return _unit; }
    std::optional<Matrix> const& counit() const noexcept { return _counit; }

    friend bool operator==(AlmostBialgebra const&, AlmostBialgebra const&) = default;

   private:
    ObstructedAlgebra     _algebra;
    ObstructedCoalgebra   _coalgebra;
    std::optional<Matrix> _unit;
    std::optional<Matrix> _counit;
  };

  //! m ∘ (e ⊗ e) = e ∘ m
  inline LawResult regular_algebra_law(ObstructedAlgebra const& a) {
    Matrix const& e = a.obstruction();
    return compare_law("m∘(e⊗e) = e∘m", a.mult() * kronecker(e, e), e * a.mult());
  }

  inline bool check_regular_algebra(ObstructedAlgebra const& a) {
    return regular_algebra_law(a).passed;
  }

  //! Δ ∘ e = (e ⊗ e) ∘ Δ
  inline LawResult regular_coalgebra_law(ObstructedCoalgebra const& c) {
    Matrix const& e = c.obstruction();
    return compare_law("Δ∘e = (e⊗e)∘Δ", c.comult() * e, kronecker(e, e) * c.comult());
  }

  inline bool check_regular_coalgebra(ObstructedCoalgebra const& c) {
    return regular_coalgebra_law(c).passed;
  }

  //! s ⋆ t = m ∘ (s ⊗ t) ∘ Δ
  inline Matrix convolution(AlmostBialgebra const& b, Matrix const& s, Matrix const& t) {
    detail::require_endomap(s, b.dim(), "left convolution factor");
    detail::require_endomap(t, b.dim(), "right convolution factor");
    return b.mult() * kronecker(s, t) * b.comult();
  }

  //! s ∘ m = m ∘ (s ⊗ s)
  inline bool hom_m_check(ObstructedAlgebra const& a, Matrix const& s) {
    detail::require_endomap(s, a.dim(), "endomap");
    return s * a.mult() == a.mult() * kronecker(s, s);
  }

  inline bool hom_m_check(AlmostBialgebra const& b, Matrix const& s) {
    return hom_m_check(b.algebra(), s);
  }

  //! S ⋆ id ⋆ S = S and id ⋆ S ⋆ id = id.
  inline std::vector<LawResult> almost_hopf_laws(AlmostBialgebra const& b, Matrix const& s) {
    if (!hom_m_check(b, s)) {
      throw NotMultiplicative("S ∘ m differs from m ∘ (S ⊗ S)");
    }
    Matrix id = Matrix::identity(b.dim());
    auto triple = [&](Matrix const& x, Matrix const& y, Matrix const& z) {
      Matrix left  = convolution(b, convolution(b, x, y), z);
      Matrix right = convolution(b, x, convolution(b, y, z));
      if (left != right) {
        throw InternalError("convolution is not associative on a bialgebra");
      }
      return left;
    };
    return {compare_law("S⋆id⋆S = S", triple(s, id, s), s),
            compare_law("id⋆S⋆id = id", triple(id, s, id), id)};
  }

  inline bool check_almost_hopf(AlmostBialgebra const& b, Matrix const& s) {
    return all_passed(almost_hopf_laws(b, s));
  }

  //! Coalgebra on A* with Δ = mᵀ, so ⟨Δξ, x⊗y⟩ = ⟨ξ, m(x⊗y)⟩, and obstruction eᵀ.
  inline ObstructedCoalgebra dualize_algebra(ObstructedAlgebra const& a) {
    if (!check_regular_algebra(a)) {
      throw NotRegularAlgebra("m∘(e⊗e) differs from e∘m");
    }
    ObstructedCoalgebra c(a.mult().transpose(), a.obstruction().transpose());
    if (!check_regular_coalgebra(c)) {
      throw InternalError("dual of a regular algebra failed the coalgebra law");
    }
    return c;
  }

  inline ObstructedAlgebra dualize_coalgebra(ObstructedCoalgebra const& c) {
    if (!check_regular_coalgebra(c)) {
      throw NotRegularAlgebra("Δ∘e differs from (e⊗e)∘Δ");
    }
    ObstructedAlgebra a(c.comult().transpose(), c.obstruction().transpose());
    if (!check_regular_algebra(a)) {
      throw InternalError("dual of a regular coalgebra failed the algebra law");
    }
    return a;
  }

  //! Swaps the roles of m and Δ (and of unit and counit) under transposition.
  inline AlmostBialgebra dualize_bialgebra(AlmostBialgebra const& b) {
    std::optional<Matrix> unit, counit;
    if (b.counit()) {
      unit = b.counit()->transpose();
    }
    if (b.unit()) {
      counit = b.unit()->transpose();
    }
    return AlmostBialgebra(dualize_coalgebra(b.coalgebra()), dualize_algebra(b.algebra()),
                           std::move(unit), std::move(counit));
  }

  //! Left module data: action ρ : A ⊗ M → M and module obstruction e_M.
  struct ModuleData {
    std::size_t dim = 0;
    Matrix      action;       // dim x (dim A · dim)
    Matrix      obstruction;  // e_M
  };

  //! Left comodule data: coaction δ : M → A ⊗ M and module obstruction e_M.
  struct ComoduleData {
    std::size_t dim = 0;
    Matrix      coaction;     // (dim A · dim) x dim
    Matrix      obstruction;  // e_M
  };

  inline std::vector<LawResult> regular_module_laws(ObstructedAlgebra const& a,
                                                    ModuleData const& module) {
    std::size_t d = module.dim;
    if (module.action.rows() != d || module.action.cols() != a.dim() * d) {
      throw DimensionMismatch("action must be " + std::to_string(d) + "x"
                              + std::to_string(a.dim() * d) + ", got " + module.action.shape());
    }
    detail::require_endomap(module.obstruction, d, "module obstruction");
    if (module.obstruction * module.obstruction != module.obstruction) {
      throw PreconditionViolated("module obstruction is not idempotent");
    }
    Matrix const& rho = module.action;
    Matrix id_a = Matrix::identity(a.dim());
    Matrix id_m = Matrix::identity(d);
    return {compare_law("ρ∘(m⊗id) = ρ∘(id⊗ρ)", rho * kronecker(a.mult(), id_m),
                        rho * kronecker(id_a, rho)),
            compare_law("ρ∘(e_A⊗e_M) = e_M∘ρ", rho * kronecker(a.obstruction(), module.obstruction),
                        module.obstruction * rho)};
  }

  inline bool check_regular_module(ObstructedAlgebra const& a, ModuleData const& module) {
    return all_passed(regular_module_laws(a, module));
  }

  //! Coaction laws (Δ⊗id)∘δ = (id⊗δ)∘δ and (e_A⊗e_M)∘δ = δ∘e_M, the transposes
  //! of the module laws.
  inline std::vector<LawResult> regular_comodule_laws(ObstructedCoalgebra const& c,
                                                      ComoduleData const& comodule) {
    std::size_t d = comodule.dim;
    if (comodule.coaction.rows() != c.dim() * d || comodule.coaction.cols() != d) {
      throw DimensionMismatch("coaction must be " + std::to_string(c.dim() * d) + "x"
                              + std::to_string(d) + ", got " + comodule.coaction.shape());
    }
    detail::require_endomap(comodule.obstruction, d, "comodule obstruction");
    if (comodule.obstruction * comodule.obstruction != comodule.obstruction) {
      throw PreconditionViolated("comodule obstruction is not idempotent");
    }
    Matrix const& delta = comodule.coaction;
    Matrix id_a = Matrix::identity(c.dim());
    Matrix id_m = Matrix::identity(d);
    return {compare_law("(Δ⊗id)∘δ = (id⊗δ)∘δ", kronecker(c.comult(), id_m) * delta,
                        kronecker(id_a, delta) * delta),
            compare_law("(e_A⊗e_M)∘δ = δ∘e_M",
                        kronecker(c.obstruction(), comodule.obstruction) * delta,
                        delta * comodule.obstruction)};
  }

  inline bool check_regular_comodule(ObstructedCoalgebra const& c, ComoduleData const& comodule) {
    return all_passed(regular_comodule_laws(c, comodule));
  }

  //! The A*-comodule M* with ⟨δ(ξ), a⊗x⟩ = ⟨ξ, ρ(a⊗x)⟩.
  inline ComoduleData transpose_module(ModuleData const& module) {
    return {module.dim, module.action.transpose(), module.obstruction.transpose()};
  }

  inline ModuleData transpose_comodule(ComoduleData const& comodule) {
    return {comodule.dim, comodule.coaction.transpose(), comodule.obstruction.transpose()};
  }

}  // namespace regcat
