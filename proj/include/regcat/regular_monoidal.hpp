#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/linear.hpp"
#include "regcat/matrix.hpp"
#include "regcat/obstructed_category.hpp"

namespace regcat {

  //! A cocycle packaged with the category holding exactly its objects and arrows.
  struct CocycleInstance {
    RepresentedCategory category;
    Cocycle             cocycle;
  };

  namespace detail {
    inline void ensure_object(RepresentedCategory& cat, std::string const& name, std::size_t dim) {
      if (!cat.has_object(name)) {
        cat.add_object(name, dim);
      } else if (cat.object(name).dim != dim) {
        throw InternalError("object \"" + name + "\" rebuilt with a different dimension");
      }
    }

    inline void ensure_arrow(RepresentedCategory& cat, std::string const& name,
                             std::string const& source, std::string const& target,
                             Matrix const& map) {
      if (!cat.has_arrow(name)) {
        cat.add_arrow(name, source, target, map);
      } else if (cat.arrow(name).map != map) {
        throw InternalError("arrow \"" + name + "\" rebuilt with a different matrix");
      }
    }

    // X ↦ X*, X* ↦ X, so that dualizing twice restores the name.
    inline std::string dual_name(std::string const& name) {
      if (!name.empty() && name.back() == '*') {
        return name.substr(0, name.size() - 1);
      }
      return name + "*";
    }
  }  // namespace detail

  //! Componentwise tensor product of two regular cocycles of the same length.
  inline CocycleInstance tensor_cocycles(RepresentedCategory const& left_cat, Cocycle const& left,
                                         RepresentedCategory const& right_cat,
                                         Cocycle const&             right) {
    if (left.n() != right.n()) {
      throw LengthMismatch("cannot tensor cocycles of lengths " + std::to_string(left.n())
                           + " and " + std::to_string(right.n()));
    }
    auto e_left  = obstruction_structure(left_cat, left);
    auto e_right = obstruction_structure(right_cat, right);
    std::size_t n = left.n();
    CocycleInstance out;
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = left.objects[i] + "⊗" + right.objects[i];
      detail::ensure_object(out.category, name,
                            left_cat.object(left.objects[i]).dim
                                * right_cat.object(right.objects[i]).dim);
      out.cocycle.objects.push_back(name);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = left.arrows[i] + "⊗" + right.arrows[i];
      detail::ensure_arrow(out.category, name, out.cocycle.objects[i],
                           out.cocycle.objects[(i + 1) % n],
                           kronecker(left_cat.arrow(left.arrows[i]).map,
                                     right_cat.arrow(right.arrows[i]).map));
      out.cocycle.arrows.push_back(name);
    }
    auto e = obstruction_structure(out.category, out.cocycle);
    for (std::size_t i = 0; i < n; ++i) {
      if (e.endomaps[i] != kronecker(e_left.endomaps[i], e_right.endomaps[i])) {
        throw InternalError("tensor obstruction is not the Kronecker product of the factors");
      }
    }
    return out;
  }

  inline CocycleInstance tensor_cocycles(RepresentedCategory const& cat, Cocycle const& left,
                                         Cocycle const& right) {
    return tensor_cocycles(cat, left, cat, right);
  }

  //! Reverses the cycle and transposes every arrow:
  //! X_1* -f_n*-> X_n* -> ... -> X_2* -f_1*-> X_1*.
  inline CocycleInstance dual_cocycle(RepresentedCategory const& cat, Cocycle const& c) {
    auto e = obstruction_structure(cat, c);
    std::size_t n = c.n();
    // Position k of the dual sits over original object (n - k) mod n.
    auto original = [n](std::size_t k) { return (n - k) % n; };
    CocycleInstance out;
    for (std::size_t k = 0; k < n; ++k) {
      auto const& o = cat.object(c.objects[original(k)]);
      std::string name = detail::dual_name(o.name);
      detail::ensure_object(out.category, name, o.dim);
      out.cocycle.objects.push_back(name);
    }
    for (std::size_t k = 0; k < n; ++k) {
      // Arrow leaving position k is f*_j with j the original arrow entering X_{original(k)}.
      auto const& a = cat.arrow(c.arrows[(original(k) + n - 1) % n]);
      std::string name = detail::dual_name(a.name);
      detail::ensure_arrow(out.category, name, out.cocycle.objects[k],
                           out.cocycle.objects[(k + 1) % n], a.map.transpose());
      out.cocycle.arrows.push_back(name);
    }
    auto dual_e = obstruction_structure(out.category, out.cocycle);
    for (std::size_t k = 0; k < n; ++k) {
      if (dual_e.endomaps[k] != e.endomaps[original(k)].transpose()) {
        throw InternalError("dual obstruction is not the transpose of the original");
      }
    }
    return out;
  }

  //! The evaluation pairing X* ⊗ X → I, ξ ⊗ x ↦ ξ(x), as a 1 x d² row.
  inline Matrix evaluation_pairing(std::size_t dim) {
    Matrix g(1, dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
      g(0, a * dim + a) = 1;
    }
    return g;
  }

  struct PairingCheck {
    bool holds = false;
    std::optional<std::size_t> failing_index;  // 1-based
    std::string failing_law;
  };

  //! Checks, for the evaluation pairing and transpose duals,
  //!   ⟨f_i* ξ, x⟩ = ⟨ξ, f_i x⟩        (ξ ∈ X_{i+1}*, x ∈ X_i)
  //!   ⟨e_{X_i*} ξ, x⟩ = ⟨ξ, e_{X_i} x⟩
  //! where f_i* and e_{X_i*} are read off the dual cocycle.
  inline PairingCheck pairing_check(RepresentedCategory const& cat, Cocycle const& c) {
    auto e    = obstruction_structure(cat, c);
    auto dual = dual_cocycle(cat, c);
    auto dual_e = obstruction_structure(dual.category, dual.cocycle);
    std::size_t n = c.n();
    for (std::size_t i = 0; i < n; ++i) {
      auto const& f = cat.arrow(c.arrows[i]).map;
      auto const& f_star = dual.category.arrow(detail::dual_name(c.arrows[i])).map;
      std::size_t d_here = f.domain_dim();
      std::size_t d_next = f.codomain_dim();
      Matrix lhs = evaluation_pairing(d_here) * kronecker(f_star, Matrix::identity(d_here));
      Matrix rhs = evaluation_pairing(d_next) * kronecker(Matrix::identity(d_next), f);
      if (lhs != rhs) {
        return {false, i + 1, "⟨f*ξ, x⟩ = ⟨ξ, f x⟩"};
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& e_here = e.endomaps[i];
      auto const& e_dual = dual_e.endomaps[(n - i) % n];
      std::size_t d = e_here.rows();
      Matrix lhs = evaluation_pairing(d) * kronecker(e_dual, Matrix::identity(d));
      Matrix rhs = evaluation_pairing(d) * kronecker(Matrix::identity(d), e_here);
      if (lhs != rhs) {
        return {false, i + 1, "⟨e*ξ, x⟩ = ⟨ξ, e x⟩"};
      }
    }
    return {true, std::nullopt, {}};
  }

  //! Object and arrow assignments of a functor given on generators.
  struct FunctorData {
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> arrows;

    std::string const& object(std::string const& name) const {
      auto it = objects.find(name);
      if (it == objects.end()) {
        throw UnknownName("functor does not assign object \"" + name + "\"");
      }
      return it->second;
    }

    std::string const& arrow(std::string const& name) const {
      auto it = arrows.find(name);
      if (it == arrows.end()) {
        throw UnknownName("functor does not assign arrow \"" + name + "\"");
      }
      return it->second;
    }

    static FunctorData identity(RepresentedCategory const& cat) {
      FunctorData f;
      for (auto const& o : cat.objects()) {
        f.objects[o.name] = o.name;
      }
      for (auto const& a : cat.arrows()) {
        f.arrows[a.name] = a.name;
      }
      return f;
    }

    friend bool operator==(FunctorData const&, FunctorData const&) = default;
  };

  //! outer ∘ inner on every name inner assigns.
  inline FunctorData compose(FunctorData const& outer, FunctorData const& inner) {
    FunctorData out;
    for (auto const& [from, to] : inner.objects) {
      out.objects[from] = outer.object(to);
    }
    for (auto const& [from, to] : inner.arrows) {
      out.arrows[from] = outer.arrow(to);
    }
    return out;
  }

  //! Image of a cocycle under F, validated as a cocycle of `dst`.
  inline Cocycle image_cocycle(RepresentedCategory const& dst, FunctorData const& functor,
                               Cocycle const& c) {
    Cocycle image;
    for (auto const& o : c.objects) {
      image.objects.push_back(functor.object(o));
    }
    for (auto const& a : c.arrows) {
      image.arrows.push_back(functor.arrow(a));
    }
    try {
      cocycle_maps(dst, image);
    } catch (DimensionMismatch const& e) {
      throw ImageNotACocycle(e.what());
    }
    return image;
  }

  struct FunctorCheck {
    bool passed = false;
    // 'a' composition, 'b' obstruction preservation, 'c' F(f_i) ∘ e = F(f_i).
    std::optional<char> failed_condition;
    std::optional<std::size_t> cocycle_index;  // 0-based into the supplied list
    std::optional<std::size_t> arrow_index;    // 1-based within the cocycle
  };

  //! Checks F on the supplied cocycles:
  //!  (a) whenever a generator h of `src` equals f_{i+1} ∘ f_i (same ends, same
  //!      matrix), F(h) = F(f_{i+1}) ∘ F(f_i);
  //!  (b) the image obstruction at F(X_i) agrees with e_{X_i} up to cocycle
  //!      equivalence, i.e. the two idempotents have equal rank;
  //!  (c) F(f_i) ∘ e_{F X_i} = F(f_i) with e computed on the image cocycle.
  inline FunctorCheck functor_check(RepresentedCategory const& src, RepresentedCategory const& dst,
                                    FunctorData const& functor, std::vector<Cocycle> const& cocycles) {
    for (std::size_t ci = 0; ci < cocycles.size(); ++ci) {
      auto const& c = cocycles[ci];
      auto e     = obstruction_structure(src, c);
      auto maps  = cocycle_maps(src, c);
      auto image = image_cocycle(dst, functor, c);
      auto image_maps = cocycle_maps(dst, image);
      std::size_t n = c.n();

      for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        Matrix composite = maps[j] * maps[i];
        Matrix image_composite = image_maps[j] * image_maps[i];
        for (auto const& h : src.arrows()) {
          if (h.source == c.objects[i] && h.target == c.objects[(i + 2) % n]
              && h.map == composite
              && dst.arrow(functor.arrow(h.name)).map != image_composite) {
            return {false, 'a', ci, i + 1};
          }
        }
      }

      auto image_e = cyclic_composites(image_maps);
      for (std::size_t i = 0; i < n; ++i) {
        if (rank(image_e[i]) != rank(e.endomaps[i])) {
          return {false, 'b', ci, i + 1};
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (image_maps[i] * image_e[i] != image_maps[i]) {
          return {false, 'c', ci, i + 1};
        }
      }
    }
    return {true, std::nullopt, std::nullopt, std::nullopt};
  }

  struct NaturalityCheck {
    bool natural = false;
    std::optional<std::size_t> cocycle_index;  // 0-based
    std::optional<std::size_t> square;         // 1-based
  };

  //! s_{X_{i+1}} ∘ F(f_i) = G(f_i) ∘ s_{X_i}; components are keyed by source object.
  inline NaturalityCheck natural_transformation_check(
      RepresentedCategory const& src, RepresentedCategory const& dst, FunctorData const& from,
      FunctorData const& to, std::map<std::string, Matrix> const& components,
      std::vector<Cocycle> const& cocycles) {
    if (!functor_check(src, dst, from, cocycles).passed
        || !functor_check(src, dst, to, cocycles).passed) {
      throw PreconditionViolated("both functors must pass functor_check on the cocycles");
    }
    auto component = [&](std::string const& object) -> Matrix const& {
      auto it = components.find(object);
      if (it == components.end()) {
        throw UnknownName("no component for object \"" + object + "\"");
      }
      std::size_t cols = dst.object(from.object(object)).dim;
      std::size_t rows = dst.object(to.object(object)).dim;
      if (it->second.rows() != rows || it->second.cols() != cols) {
        throw DimensionMismatch("component at \"" + object + "\" should be "
                                + std::to_string(rows) + "x" + std::to_string(cols)
                                + ", got " + it->second.shape());
      }
      return it->second;
    };
    for (std::size_t ci = 0; ci < cocycles.size(); ++ci) {
      auto const& c = cocycles[ci];
      std::size_t n = c.n();
      for (std::size_t i = 0; i < n; ++i) {
        auto const& f_image = dst.arrow(from.arrow(c.arrows[i])).map;
        auto const& g_image = dst.arrow(to.arrow(c.arrows[i])).map;
        if (component(c.objects[(i + 1) % n]) * f_image != g_image * component(c.objects[i])) {
          return {false, ci, i + 1};
        }
      }
    }
    return {true, std::nullopt, std::nullopt};
  }

}  // namespace regcat
