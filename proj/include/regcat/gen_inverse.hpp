#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/linear.hpp"
#include "regcat/matrix.hpp"

namespace regcat {

  namespace detail {
    inline void require_opposite_shapes(Matrix const& f, Matrix const& g) {
      if (g.domain_dim() != f.codomain_dim() || g.codomain_dim() != f.domain_dim()) {
        throw DimensionMismatch("candidate inverse of a " + f.shape() + " map must be "
                                + std::to_string(f.cols()) + "x" + std::to_string(f.rows())
                                + ", got " + g.shape());
      }
    }
  }  // namespace detail

  //! f∘g∘f = f
  inline bool is_inner_inverse(Matrix const& f, Matrix const& g) {
    detail::require_opposite_shapes(f, g);
    return f * g * f == f;
  }

  //! g∘f∘g = g
  inline bool is_outer_inverse(Matrix const& f, Matrix const& g) {
    detail::require_opposite_shapes(f, g);
    return g * f * g == g;
  }

  inline bool is_generalized_inverse(Matrix const& f, Matrix const& g) {
    return is_inner_inverse(f, g) && is_outer_inverse(f, g);
  }

  struct InverseReport {
    bool is_inner     = false;
    bool is_outer     = false;
    bool is_reflexive = false;
    // A standard basis vector on which the first failing identity differs.
    std::optional<Vector> witness_vector;
  };

  inline InverseReport inverse_report(Matrix const& f, Matrix const& g) {
    detail::require_opposite_shapes(f, g);
    InverseReport r;
    auto inner_diff = first_difference(f * g * f, f);
    auto outer_diff = first_difference(g * f * g, g);
    r.is_inner      = !inner_diff;
    r.is_outer      = !outer_diff;
    r.is_reflexive  = r.is_inner && r.is_outer;
    r.witness_vector = inner_diff ? inner_diff : outer_diff;
    return r;
  }

  //! g_in∘f∘g_in, which is both an inner and an outer inverse whenever g_in is inner.
  inline Matrix reflexive_from_inner(Matrix const& f, Matrix const& g_in) {
    if (!is_inner_inverse(f, g_in)) {
      throw NotAnInnerInverse("f∘g∘f differs from f");
    }
    Matrix g = g_in * f * g_in;
    if (!is_outer_inverse(f, g)) {
      throw InternalError("reflexive_from_inner produced a non-reflexive map");
    }
    return g;
  }

  //! The generalized inverse attached to decompositions X = M ⊕ Ker f and
  //! Y = Im f ⊕ N: it inverts f on M, kills N, and has Im = M, Ker = N.
  //! Missing M or N default to the coordinate complements of Ker f and Im f.
  inline Matrix generalized_inverse(Matrix const&           f,
                                    std::optional<Subspace> m = std::nullopt,
                                    std::optional<Subspace> n = std::nullopt) {
    Subspace ker = kernel(f);
    Subspace im  = image(f);
    Subspace mm  = m ? std::move(*m) : complement(ker);
    Subspace nn  = n ? std::move(*n) : complement(im);
    if (mm.ambient_dim() != f.domain_dim() || !is_direct_sum(mm, ker)) {
      throw NotADirectSum("M is not a complement of Ker f in Q^"
                          + std::to_string(f.domain_dim()));
    }
    if (nn.ambient_dim() != f.codomain_dim() || !is_direct_sum(im, nn)) {
      throw NotADirectSum("N is not a complement of Im f in Q^"
                          + std::to_string(f.codomain_dim()));
    }
    Matrix onto_image = projector_onto(im, nn);
    Matrix inclusion  = mm.basis().transpose();  // X <- M, in the RREF basis of M
    // f restricted to M is a bijection onto Im f, so this system has exactly one solution.
    auto restricted_inverse = solve(f * inclusion, onto_image);
    if (!restricted_inverse) {
      throw InternalError("f restricted to M failed to reach Im f");
    }
    Matrix g = inclusion * *restricted_inverse;
    if (!is_generalized_inverse(f, g)) {
      throw InternalError("projector construction violated a regularity law");
    }
    return g;
  }

  //! (P_f, P_f*) = (f∘g, g∘f).
  inline std::pair<Matrix, Matrix> range_projectors(Matrix const& f, Matrix const& g) {
    if (!is_generalized_inverse(f, g)) {
      throw NotAGeneralizedInverse("g is not both an inner and an outer inverse of f");
    }
    Matrix pf = f * g;
    Matrix pg = g * f;
    bool ok = pf * pf == pf && pf * f == f && f * pg == f && pg * pg == pg && pg * g == g
              && g * pf == g;
    if (!ok) {
      throw InternalError("range projector identities failed for a generalized inverse");
    }
    return {std::move(pf), std::move(pg)};
  }

  struct NamedCheck {
    std::string name;
    bool        passed;
  };

  //! Image/kernel facts that hold for every generalized inverse g of f.
  struct SubspaceReport {
    Subspace image_f, kernel_f, image_g, kernel_g;
    std::vector<NamedCheck> checks;

    bool all_passed() const {
      for (auto const& c : checks) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }
  };

  inline SubspaceReport lemma3_report(Matrix const& f, Matrix const& g) {
    if (!is_generalized_inverse(f, g)) {
      throw NotAGeneralizedInverse("g is not both an inner and an outer inverse of f");
    }
    SubspaceReport r{image(f), kernel(f), image(g), kernel(g), {}};
    Matrix fg = f * g;
    Matrix gf = g * f;
    r.checks.push_back({"Im f = Im(f∘g)", r.image_f == image(fg)});
    r.checks.push_back({"Ker(f∘g) = Ker g", kernel(fg) == r.kernel_g});
    r.checks.push_back({"Im(g∘f) = Im g", image(gf) == r.image_g});
    r.checks.push_back({"Ker(g∘f) = Ker f", kernel(gf) == r.kernel_f});
    r.checks.push_back({"X = Im g ⊕ Ker f", is_direct_sum(r.image_g, r.kernel_f)});
    r.checks.push_back({"Y = Im f ⊕ Ker g", is_direct_sum(r.image_f, r.kernel_g)});
    // f|Im g is injective onto Im f: f maps a basis of Im g to a basis of Im f.
    Matrix restricted = f * r.image_g.basis().transpose();
    r.checks.push_back({"f|Im g : Im g → Im f is bijective",
                        rank(restricted) == r.image_g.dim() && image(restricted) == r.image_f});
    return r;
  }

}  // namespace regcat
