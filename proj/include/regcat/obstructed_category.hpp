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
#include "regcat/star_chain.hpp"

namespace regcat {

  struct Object {
    std::string name;
    std::size_t dim;

    friend bool operator==(Object const&, Object const&) = default;
  };

  struct Arrow {
    std::string name;
    std::string source;
    std::string target;
    Matrix      map;

    friend bool operator==(Arrow const&, Arrow const&) = default;
  };

  //! A finite directed graph whose objects are coordinate spaces and whose
  //! arrows are matrices. Composition is the matrix product.
  class RepresentedCategory {
   public:
    RepresentedCategory() = default;

    RepresentedCategory(std::vector<Object> objects, std::vector<Arrow> arrows) {
      for (auto& o : objects) {
        add_object(std::move(o.name), o.dim);
      }
      for (auto& a : arrows) {
        add_arrow(std::move(a.name), std::move(a.source), std::move(a.target),
                  std::move(a.map));
      }
    }

    void add_object(std::string name, std::size_t dim) {
      if (_object_index.count(name) != 0) {
        throw DuplicateName("object \"" + name + "\" declared twice");
      }
      _object_index.emplace(name, _objects.size());
      _objects.push_back({std::move(name), dim});
    }

    void add_arrow(std::string name, std::string source, std::string target, Matrix map) {
      if (_arrow_index.count(name) != 0) {
        throw DuplicateName("arrow \"" + name + "\" declared twice");
      }
      auto const& s = object(source);
      auto const& t = object(target);
      if (map.domain_dim() != s.dim || map.codomain_dim() != t.dim) {
        throw DimensionMismatch("arrow \"" + name + "\" : " + source + " -> " + target
                                + " needs a " + std::to_string(t.dim) + "x"
                                + std::to_string(s.dim) + " matrix, got " + map.shape());
      }
      _arrow_index.emplace(name, _arrows.size());
      _arrows.push_back({std::move(name), std::move(source), std::move(target), std::move(map)});
    }

    bool has_object(std::string const& name) const { return _object_index.count(name) != 0; }
    bool has_arrow(std::string const& name) const { return _arrow_index.count(name) != 0; }

    Object const& object(std::string const& name) const {
      auto it = _object_index.find(name);
      if (it == _object_index.end()) {
        throw UnknownName("unknown object \"" + name + "\"");
      }
      return _objects[it->second];
    }

    Arrow const& arrow(std::string const& name) const {
      auto it = _arrow_index.find(name);
      if (it == _arrow_index.end()) {
        throw UnknownName("unknown arrow \"" + name + "\"");
      }
      return _arrows[it->second];
    }

    std::vector<Object> const& objects() const noexcept { return _objects; }
    std::vector<Arrow> const& arrows() const noexcept { return _arrows; }

    friend bool operator==(RepresentedCategory const& a, RepresentedCategory const& b) {
      return a._objects == b._objects && a._arrows == b._arrows;
    }

   private:
    std::vector<Object> _objects;
    std::vector<Arrow>  _arrows;
    std::map<std::string, std::size_t> _object_index;
    std::map<std::string, std::size_t> _arrow_index;
  };

  //! X_1 -f_1-> X_2 -> ... -> X_n -f_n-> X_1, by name.
  struct Cocycle {
    std::vector<std::string> objects;
    std::vector<std::string> arrows;

    std::size_t n() const noexcept { return arrows.size(); }

    friend bool operator==(Cocycle const&, Cocycle const&) = default;
  };

  //! Resolves the arrows of `c` in `cat`, checking that they close up into a cycle.
  inline std::vector<Matrix> cocycle_maps(RepresentedCategory const& cat, Cocycle const& c) {
    if (c.arrows.empty()) {
      throw PreconditionViolated("a cocycle needs at least one arrow");
    }
    if (c.objects.size() != c.arrows.size()) {
      throw DimensionMismatch("cocycle lists " + std::to_string(c.objects.size())
                              + " objects but " + std::to_string(c.arrows.size()) + " arrows");
    }
    for (auto const& o : c.objects) {
      cat.object(o);
    }
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < c.n(); ++i) {
      auto const& a = cat.arrow(c.arrows[i]);
      auto const& from = c.objects[i];
      auto const& to   = c.objects[(i + 1) % c.n()];
      if (a.source != from || a.target != to) {
        throw DimensionMismatch("arrow \"" + a.name + "\" goes " + a.source + " -> " + a.target
                                + " but the cocycle needs " + from + " -> " + to);
      }
      maps.push_back(a.map);
    }
    return maps;
  }

  //! Idempotent obstruction e_{X_i} at each object of a verified cocycle.
  struct ObstructionStructure {
    std::vector<Matrix> endomaps;

    friend bool operator==(ObstructionStructure const&, ObstructionStructure const&) = default;
  };

  //! Full cyclic composite starting and ending at each object:
  //! e_i = f_{i-1} ∘ ... ∘ f_{i+1} ∘ f_i (0-based, indices mod n).
  inline std::vector<Matrix> cyclic_composites(std::vector<Matrix> const& maps) {
    std::size_t n = maps.size();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix e = maps[i];
      for (std::size_t step = 1; step < n; ++step) {
        e = maps[(i + step) % n] * e;
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  struct CocycleCheck {
    bool regular = false;
    std::optional<std::size_t> failing_index;  // 1-based, names f_i
    std::optional<Vector> witness;
    std::optional<ObstructionStructure> obstruction;
  };

  //! Checks f_i ∘ e_{X_i} = f_i for every i on a cycle of composable matrices.
  inline CocycleCheck check_cycle(std::vector<Matrix> const& maps) {
    std::size_t n = maps.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto const& next = maps[(i + 1) % n];
      if (maps[i].codomain_dim() != next.domain_dim()) {
        throw DimensionMismatch("f_" + std::to_string(i + 1) + " and f_"
                                + std::to_string((i + 1) % n + 1) + " are not composable");
      }
    }
    auto composites = cyclic_composites(maps);
    for (std::size_t i = 0; i < n; ++i) {
      if (auto diff = first_difference(maps[i] * composites[i], maps[i])) {
        return {false, i + 1, std::move(diff), std::nullopt};
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& e      = composites[i];
      auto const& e_next = composites[(i + 1) % n];
      if (!(e * e == e && e_next * maps[i] == maps[i])) {
        throw InternalError("obstruction relations failed on a regular cocycle");
      }
    }
    return {true, std::nullopt, std::nullopt, ObstructionStructure{std::move(composites)}};
  }

  inline CocycleCheck verify_cocycle(RepresentedCategory const& cat, Cocycle const& c) {
    return check_cycle(cocycle_maps(cat, c));
  }

  //! Like verify_cocycle but raises NotRegular instead of returning a negative verdict.
  inline ObstructionStructure obstruction_structure(RepresentedCategory const& cat,
                                                    Cocycle const&             c) {
    auto check = verify_cocycle(cat, c);
    if (!check.regular) {
      throw NotRegular("cyclic identity fails for arrow " + c.arrows[*check.failing_index - 1],
                       *check.failing_index, *check.witness);
    }
    return std::move(*check.obstruction);
  }

  inline bool is_trivial(ObstructionStructure const& obstruction) {
    for (auto const& e : obstruction.endomaps) {
      if (e != Matrix::identity(e.rows())) {
        return false;
      }
    }
    return true;
  }

  //! Smallest length among the supplied cocycles whose obstruction at `object`
  //! is not the identity; nullopt means every obstruction there is trivial.
  inline std::optional<std::size_t> obstruction_degree(RepresentedCategory const& cat,
                                                       std::vector<Cocycle> const& cocycles,
                                                       std::string const&         object) {
    cat.object(object);
    std::optional<std::size_t> degree;
    for (auto const& c : cocycles) {
      auto e = obstruction_structure(cat, c);
      bool passes = false;
      for (std::size_t i = 0; i < c.n(); ++i) {
        if (c.objects[i] != object) {
          continue;
        }
        passes = true;
        if (e.endomaps[i] != Matrix::identity(e.endomaps[i].rows())
            && (!degree || c.n() < *degree)) {
          degree = c.n();
        }
      }
      if (!passes) {
        throw PreconditionViolated("cocycle does not pass through \"" + object + "\"");
      }
    }
    return degree;
  }

  enum class MorphismKind { not_a_morphism, morphism, equivalence };

  inline char const* to_string(MorphismKind k) {
    switch (k) {
      case MorphismKind::not_a_morphism:
        return "not_a_morphism";
      case MorphismKind::morphism:
        return "morphism";
      case MorphismKind::equivalence:
        return "equivalence";
    }
    return "";
  }

  struct MorphismCheck {
    MorphismKind kind = MorphismKind::not_a_morphism;
    std::optional<std::size_t> failing_square;  // 1-based
  };

  //! Ladder α: (X, f) → (Y, g) with α_{i+1} ∘ f_i = g_i ∘ α_i.
  inline MorphismCheck cocycle_morphism_check(RepresentedCategory const& cat,
                                              Cocycle const&             source,
                                              Cocycle const&             target,
                                              std::vector<Matrix> const& alphas) {
    obstruction_structure(cat, source);
    obstruction_structure(cat, target);
    auto f = cocycle_maps(cat, source);
    auto g = cocycle_maps(cat, target);
    std::size_t n = f.size();
    if (g.size() != n || alphas.size() != n) {
      throw DimensionMismatch("cocycle morphism needs equal lengths, got "
                              + std::to_string(n) + ", " + std::to_string(g.size())
                              + " and " + std::to_string(alphas.size()) + " components");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (alphas[i].domain_dim() != f[i].domain_dim()
          || alphas[i].codomain_dim() != g[i].domain_dim()) {
        throw DimensionMismatch("component alpha_" + std::to_string(i + 1) + " has shape "
                                + alphas[i].shape());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (alphas[(i + 1) % n] * f[i] != g[i] * alphas[i]) {
        return {MorphismKind::not_a_morphism, i + 1};
      }
    }
    for (auto const& a : alphas) {
      if (!is_invertible(a)) {
        return {MorphismKind::morphism, std::nullopt};
      }
    }
    return {MorphismKind::equivalence, std::nullopt};
  }

  //! Retract data Y_i ⇄ X_i and an invertible cycle on the Y_i.
  struct LiftData {
    std::vector<Matrix> inclusions;   // ι_i : Y_i → X_i
    std::vector<Matrix> projections;  // π_i : X_i → Y_i
    std::vector<Matrix> small_maps;   // f̃_i : Y_i → Y_{i+1}

    std::size_t n() const noexcept { return small_maps.size(); }

    friend bool operator==(LiftData const&, LiftData const&) = default;
  };

  struct LiftResult {
    RepresentedCategory  category;
    Cocycle              cocycle;
    ObstructionStructure obstruction;
  };

  //! The big arrows f_i = ι_{i+1} ∘ f̃_i ∘ π_i, in the order of `data`.
  inline std::vector<Matrix> lifted_maps(LiftData const& data) {
    std::size_t n = data.n();
    if (n == 0 || data.inclusions.size() != n || data.projections.size() != n) {
      throw DimensionMismatch("lift data needs n >= 1 inclusions, projections and small maps");
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& iota = data.inclusions[i];
      auto const& pi   = data.projections[i];
      if (pi.rows() != iota.cols() || pi.cols() != iota.rows()) {
        throw DimensionMismatch("projection " + std::to_string(i + 1) + " has shape "
                                + pi.shape() + " against inclusion " + iota.shape());
      }
      auto const& small = data.small_maps[i];
      if (small.domain_dim() != iota.cols()
          || small.codomain_dim() != data.inclusions[(i + 1) % n].cols()) {
        throw DimensionMismatch("small map " + std::to_string(i + 1) + " has shape "
                                + small.shape());
      }
      if (pi * iota != Matrix::identity(iota.cols())) {
        throw RetractionFailure("pi_" + std::to_string(i + 1) + " ∘ iota_"
                                + std::to_string(i + 1) + " is not the identity");
      }
    }
    auto small_cycle = cyclic_composites(data.small_maps);
    for (std::size_t i = 0; i < n; ++i) {
      if (small_cycle[i] != Matrix::identity(small_cycle[i].rows())) {
        throw SmallCycleNotTrivial("small cycle composite at Y_" + std::to_string(i + 1)
                                   + " is not the identity");
      }
    }
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < n; ++i) {
      maps.push_back(data.inclusions[(i + 1) % n] * data.small_maps[i] * data.projections[i]);
    }
    return maps;
  }

  //! Builds the cocycle X_1 → ... → X_n → X_1 (objects "X<i>", arrows "f<i>")
  //! whose obstruction at X_i is ι_i ∘ π_i.
  inline LiftResult lift_construct(LiftData const& data) {
    auto maps = lifted_maps(data);
    std::size_t n = maps.size();
    LiftResult out;
    for (std::size_t i = 0; i < n; ++i) {
      out.category.add_object("X" + std::to_string(i + 1), data.inclusions[i].rows());
      out.cocycle.objects.push_back("X" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = "f" + std::to_string(i + 1);
      out.category.add_arrow(name, out.cocycle.objects[i], out.cocycle.objects[(i + 1) % n],
                             maps[i]);
      out.cocycle.arrows.push_back(name);
    }
    out.obstruction = obstruction_structure(out.category, out.cocycle);
    for (std::size_t i = 0; i < n; ++i) {
      if (out.obstruction.endomaps[i] != data.inclusions[i] * data.projections[i]) {
        throw InternalError("lifted obstruction differs from iota ∘ pi at X_"
                            + std::to_string(i + 1));
      }
    }
    return out;
  }

  //! Reads an even cycle X → Y → X → ... → Y → X of maps f_1, ..., f_n as the
  //! star chain [f_1, f_n, f_{n-1}, ..., f_2]; its first chain identity is the
  //! first cocycle identity.
  inline StarChain star_chain_from_cycle(std::vector<Matrix> const& maps) {
    if (maps.size() % 2 == 1) {
      throw OddChainLength("only even cycles give star chains, got length "
                           + std::to_string(maps.size()));
    }
    std::vector<Matrix> chain;
    if (!maps.empty()) {
      chain.push_back(maps.front());
      for (std::size_t i = maps.size() - 1; i >= 1; --i) {
        chain.push_back(maps[i]);
      }
    }
    return StarChain(std::move(chain));
  }

  //! Non-degenerate star chain from lift data whose odd and even positions
  //! share the big spaces X and Y.
  inline StarChain star_chain_from_lift(LiftData const& data) {
    return star_chain_from_cycle(lifted_maps(data));
  }

}  // namespace regcat
