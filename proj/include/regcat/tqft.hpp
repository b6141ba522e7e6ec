#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/matrix.hpp"
#include "regcat/obstructed_category.hpp"

// Combinatorial cobordisms: boundaries are ordered lists of oriented labels,
// and an interaction is a word of generator tags between two boundaries.

namespace regcat {

  struct BoundaryComponent {
    std::string label;
    int         orientation = 1;  // +1 or -1

    friend bool operator==(BoundaryComponent const&, BoundaryComponent const&) = default;
  };

  //! Ordered disjoint union of oriented components; empty means ∅.
  class Boundary {
   public:
    Boundary() = default;

    explicit Boundary(std::vector<BoundaryComponent> components)
        : _components(std::move(components)) {
      for (auto const& c : _components) {
        if (c.orientation != 1 && c.orientation != -1) {
          throw InvariantViolation("orientation of \"" + c.label + "\" must be +1 or -1");
        }
      }
    }

    static Boundary of(std::vector<std::string> const& labels) {
      std::vector<BoundaryComponent> cs;
      for (auto const& l : labels) {
        cs.push_back({l, 1});
      }
      return Boundary(std::move(cs));
    }

    std::vector<BoundaryComponent> const& components() const noexcept { return _components; }
    bool empty() const noexcept { return _components.empty(); }

    //! Same components with every orientation reversed.
    Boundary dual() const {
      auto cs = _components;
      for (auto& c : cs) {
        c.orientation = -c.orientation;
      }
      return Boundary(std::move(cs));
    }

    //! Disjoint union, by concatenation.
    friend Boundary operator+(Boundary const& a, Boundary const& b) {
      auto cs = a._components;
      cs.insert(cs.end(), b._components.begin(), b._components.end());
      return Boundary(std::move(cs));
    }

    friend bool operator==(Boundary const&, Boundary const&) = default;

    std::string str() const {
      if (_components.empty()) {
        return "∅";
      }
      std::string out;
      for (std::size_t i = 0; i < _components.size(); ++i) {
        out += (i == 0 ? "" : " ⊔ ") + _components[i].label
               + (_components[i].orientation == -1 ? "*" : "");
      }
      return out;
    }

   private:
    std::vector<BoundaryComponent> _components;
  };

  namespace detail {
    inline void require_same_boundary(Boundary const& expected, Boundary const& actual,
                                      std::string const& where) {
      if (expected == actual) {
        return;
      }
      auto const& a = expected.components();
      auto const& b = actual.components();
      std::size_t i = 0;
      while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
      }
      std::string detail = i < a.size() && i < b.size()
                               ? "component " + std::to_string(i + 1) + " differs"
                               : "component " + std::to_string(i + 1) + " is missing on one side";
      throw BoundaryMismatch(where + ": expected " + expected.str() + ", got " + actual.str()
                             + " (" + detail + ")");
    }
  }  // namespace detail

  struct Generator {
    std::string tag;
    Boundary    incoming;
    Boundary    outgoing;
    std::optional<std::string> opposite;
    bool        cylinder = false;  // relation: this generator is the identity

    friend bool operator==(Generator const&, Generator const&) = default;
  };

  //! Declared labels and generators with their opposite pairs.
  class CobordismSignature {
   public:
    CobordismSignature() = default;

    CobordismSignature(std::set<std::string> labels, std::vector<Generator> generators)
        : _labels(std::move(labels)) {
      for (auto& g : generators) {
        if (_generators.count(g.tag) != 0) {
          throw DuplicateName("generator \"" + g.tag + "\" declared twice");
        }
        std::string tag = g.tag;
        _generators.emplace(std::move(tag), std::move(g));
      }
      for (auto const& [tag, g] : _generators) {
        for (auto const* b : {&g.incoming, &g.outgoing}) {
          for (auto const& c : b->components()) {
            if (_labels.count(c.label) == 0) {
              throw UnknownName("generator \"" + tag + "\" uses undeclared label \"" + c.label
                                + "\"");
            }
          }
        }
        if (g.cylinder && g.incoming != g.outgoing) {
          throw InvariantViolation("cylinder generator \"" + tag + "\" changes its boundary");
        }
        if (g.opposite) {
          auto const& op = generator(*g.opposite);
          if (op.opposite != tag) {
            throw InvariantViolation("opposite of \"" + *g.opposite + "\" is not \"" + tag + "\"");
          }
          if (op.incoming != g.outgoing || op.outgoing != g.incoming) {
            throw InvariantViolation("\"" + *g.opposite + "\" does not reverse the boundaries of \""
                                     + tag + "\"");
          }
        }
      }
    }

    std::set<std::string> const& labels() const noexcept { return _labels; }
    std::map<std::string, Generator> const& generators() const noexcept { return _generators; }

    Generator const& generator(std::string const& tag) const {
      auto it = _generators.find(tag);
      if (it == _generators.end()) {
        throw UnknownName("unknown generator \"" + tag + "\"");
      }
      return it->second;
    }

    void require_labels(Boundary const& b) const {
      for (auto const& c : b.components()) {
        if (_labels.count(c.label) == 0) {
          throw UnknownName("undeclared label \"" + c.label + "\"");
        }
      }
    }

    friend bool operator==(CobordismSignature const&, CobordismSignature const&) = default;

   private:
    std::set<std::string>            _labels;
    std::map<std::string, Generator> _generators;
  };

  //! _{incoming} body _{outgoing}; the body never contains cylinder tags.
  struct Interaction {
    Boundary                 incoming;
    Boundary                 outgoing;
    std::vector<std::string> body;

    friend bool operator==(Interaction const&, Interaction const&) = default;
  };

  //! Validates that the word glues from `incoming` to `outgoing` and drops cylinders.
  inline Interaction make_interaction(CobordismSignature const& sig, Boundary incoming,
                                      Boundary outgoing, std::vector<std::string> const& word) {
    sig.require_labels(incoming);
    sig.require_labels(outgoing);
    Interaction m{std::move(incoming), std::move(outgoing), {}};
    Boundary const* at = &m.incoming;
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto const& g = sig.generator(word[i]);
      detail::require_same_boundary(*at, g.incoming,
                                    "gluing generator " + std::to_string(i + 1) + " \"" + g.tag + "\"");
      at = &g.outgoing;
      if (!g.cylinder) {
        m.body.push_back(g.tag);
      }
    }
    detail::require_same_boundary(m.outgoing, *at, "end of word");
    return m;
  }

  inline Interaction generator_interaction(CobordismSignature const& sig, std::string const& tag) {
    auto const& g = sig.generator(tag);
    return make_interaction(sig, g.incoming, g.outgoing, {tag});
  }

  //! Σ × [0, 1].
  inline Interaction cylinder(Boundary const& sigma) {
    return {sigma, sigma, {}};
  }

  //! m1 then m2, glued along m1.outgoing = m2.incoming.
  inline Interaction glue(Interaction const& first, Interaction const& second) {
    detail::require_same_boundary(first.outgoing, second.incoming, "glue");
    Interaction out{first.incoming, second.outgoing, first.body};
    out.body.insert(out.body.end(), second.body.begin(), second.body.end());
    return out;
  }

  //! Boundaries swapped, word reversed, each generator replaced by its opposite.
  inline Interaction opposite(CobordismSignature const& sig, Interaction const& m) {
    Interaction out{m.outgoing, m.incoming, {}};
    for (auto it = m.body.rbegin(); it != m.body.rend(); ++it) {
      auto const& g = sig.generator(*it);
      if (!g.opposite) {
        throw NoOppositeDeclared("generator \"" + g.tag + "\" has no declared opposite");
      }
      out.body.push_back(*g.opposite);
    }
    return out;
  }

  //! Functor data: a dimension per label and a matrix per generator.
  struct TqftAssignment {
    std::map<std::string, std::size_t> label_dims;
    std::map<std::string, Matrix>      generator_maps;

    friend bool operator==(TqftAssignment const&, TqftAssignment const&) = default;
  };

  //! dim F(Σ): product of label dimensions; a reversed component keeps its
  //! dimension (its dual space is realized on the same coordinates); F(∅) = 1.
  inline std::size_t boundary_dim(TqftAssignment const& tqft, Boundary const& b) {
    std::size_t dim = 1;
    for (auto const& c : b.components()) {
      auto it = tqft.label_dims.find(c.label);
      if (it == tqft.label_dims.end()) {
        throw UnassignedLabel("label \"" + c.label + "\" has no assigned space");
      }
      dim *= it->second;
    }
    return dim;
  }

  inline Matrix const& generator_map(TqftAssignment const& tqft, std::string const& tag) {
    auto it = tqft.generator_maps.find(tag);
    if (it == tqft.generator_maps.end()) {
      throw UnassignedGenerator("generator \"" + tag + "\" has no assigned map");
    }
    return it->second;
  }

  //! Checks every generator shape against its boundaries and that cylinder
  //! generators go to identities.
  inline void validate_assignment(CobordismSignature const& sig, TqftAssignment const& tqft) {
    for (auto const& label : sig.labels()) {
      boundary_dim(tqft, Boundary::of({label}));
    }
    for (auto const& [tag, g] : sig.generators()) {
      auto const& map = generator_map(tqft, tag);
      std::size_t in  = boundary_dim(tqft, g.incoming);
      std::size_t out = boundary_dim(tqft, g.outgoing);
      if (map.domain_dim() != in || map.codomain_dim() != out) {
        throw ShapeMismatch("generator \"" + tag + "\" needs a " + std::to_string(out) + "x"
                            + std::to_string(in) + " matrix, got " + map.shape());
      }
      if (g.cylinder && map != Matrix::identity(in)) {
        throw ShapeMismatch("cylinder generator \"" + tag + "\" must map to the identity");
      }
    }
  }

  //! Composite of the generator maps along the word (first letter applied first);
  //! the empty word evaluates to the identity of F(incoming).
  inline Matrix evaluate(TqftAssignment const& tqft, Interaction const& m) {
    std::size_t in_dim = boundary_dim(tqft, m.incoming);
    Matrix out = Matrix::identity(in_dim);
    for (std::size_t i = 0; i < m.body.size(); ++i) {
      auto const& g = generator_map(tqft, m.body[i]);
      if (g.domain_dim() != out.codomain_dim()) {
        throw ShapeMismatch("generator \"" + m.body[i] + "\" expects dimension "
                            + std::to_string(g.domain_dim()) + " but receives "
                            + std::to_string(out.codomain_dim()));
      }
      out = g * out;
    }
    std::size_t out_dim = boundary_dim(tqft, m.outgoing);
    if (out.codomain_dim() != out_dim) {
      throw ShapeMismatch("word ends in dimension " + std::to_string(out.codomain_dim())
                          + " but F(outgoing) has dimension " + std::to_string(out_dim));
    }
    return out;
  }

  struct TqftCheck {
    CocycleCheck        result;
    bool                trivial = false;  // every obstruction is the identity
    RepresentedCategory category;
    Cocycle             cocycle;
  };

  //! Evaluates a cyclic sequence of interactions and hands the resulting maps
  //! to verify_cocycle. Objects are named "B<i>" (the incoming boundary of the
  //! i-th interaction) and arrows "M<i>".
  inline TqftCheck check_n_regular_tqft(TqftAssignment const&           tqft,
                                        std::vector<Interaction> const& interactions) {
    std::size_t n = interactions.size();
    if (n == 0) {
      throw PreconditionViolated("an interaction cycle needs at least one interaction");
    }
    for (std::size_t i = 0; i < n; ++i) {
      detail::require_same_boundary(interactions[(i + 1) % n].incoming, interactions[i].outgoing,
                                    "interaction " + std::to_string(i + 1) + " outgoing");
    }
    TqftCheck out;
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = "B" + std::to_string(i + 1);
      out.category.add_object(name, boundary_dim(tqft, interactions[i].incoming));
      out.cocycle.objects.push_back(name);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = "M" + std::to_string(i + 1);
      out.category.add_arrow(name, out.cocycle.objects[i], out.cocycle.objects[(i + 1) % n],
                             evaluate(tqft, interactions[i]));
      out.cocycle.arrows.push_back(name);
    }
    out.result  = verify_cocycle(out.category, out.cocycle);
    out.trivial = out.result.regular && is_trivial(*out.result.obstruction);
    return out;
  }

}  // namespace regcat
