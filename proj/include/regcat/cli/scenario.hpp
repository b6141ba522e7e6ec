#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "regcat/cli/json_io.hpp"
#include "regcat/obstructed_category.hpp"
#include "regcat/regular_monoidal.hpp"
#include "regcat/tqft.hpp"

// Scenario files are JSON objects with a "kind" key. Matrices are arrays of
// rows, rationals are "p/q" strings or integers.

namespace regcat::cli {

  struct MatrixScenario {
    Matrix f;
    std::optional<Matrix> inverse;                     // verify this g instead of computing one
    std::optional<std::vector<Vector>> kernel_complement;  // spans M
    std::optional<std::vector<Vector>> image_complement;   // spans N

    friend bool operator==(MatrixScenario const&, MatrixScenario const&) = default;
  };

  struct ChainScenario {
    std::vector<Matrix> maps;
    std::optional<Matrix> map;  // with length: the default chain of this map
    std::optional<std::size_t> length;

    friend bool operator==(ChainScenario const&, ChainScenario const&) = default;
  };

  struct NamedCocycle {
    std::string name;
    Cocycle     cocycle;

    friend bool operator==(NamedCocycle const&, NamedCocycle const&) = default;
  };

  struct MorphismSpec {
    std::string source;
    std::string target;
    std::vector<Matrix> components;

    friend bool operator==(MorphismSpec const&, MorphismSpec const&) = default;
  };

  struct CategoryScenario {
    RepresentedCategory category;
    std::vector<NamedCocycle> cocycles;
    std::optional<std::string> object;  // obstruction-degree target
    std::optional<MorphismSpec> morphism;

    friend bool operator==(CategoryScenario const&, CategoryScenario const&) = default;
  };

  //! A single cycle: arrow i goes from object i to object i+1.
  struct CocycleScenario {
    RepresentedCategory category;
    Cocycle cocycle;

    friend bool operator==(CocycleScenario const&, CocycleScenario const&) = default;
  };

  struct LiftScenario {
    LiftData data;

    friend bool operator==(LiftScenario const&, LiftScenario const&) = default;
  };

  struct NaturalSpec {
    FunctorData to;
    std::map<std::string, Matrix> components;

    friend bool operator==(NaturalSpec const&, NaturalSpec const&) = default;
  };

  struct FunctorScenario {
    RepresentedCategory source;
    RepresentedCategory target;
    FunctorData functor;
    std::vector<NamedCocycle> cocycles;
    std::optional<NaturalSpec> natural;

    friend bool operator==(FunctorScenario const&, FunctorScenario const&) = default;
  };

  //! Exactly one of mult and comult is set.
  struct AlgebraScenario {
    std::optional<Matrix> mult;
    std::optional<Matrix> comult;
    Matrix obstruction;

    friend bool operator==(AlgebraScenario const&, AlgebraScenario const&) = default;
  };

  struct BialgebraScenario {
    Matrix mult;
    Matrix comult;
    Matrix obstruction;
    std::optional<Matrix> unit;
    std::optional<Matrix> counit;
    std::optional<Matrix> antipode;

    friend bool operator==(BialgebraScenario const&, BialgebraScenario const&) = default;
  };

  //! An action over an algebra or a coaction over a coalgebra.
  struct ModuleScenario {
    AlgebraScenario algebra;
    std::size_t dim = 0;
    std::optional<Matrix> action;
    std::optional<Matrix> coaction;
    Matrix obstruction;

    friend bool operator==(ModuleScenario const&, ModuleScenario const&) = default;
  };

  struct TqftGenerator {
    Generator generator;
    Matrix    matrix;

    friend bool operator==(TqftGenerator const&, TqftGenerator const&) = default;
  };

  struct WordSpec {
    Boundary incoming;
    Boundary outgoing;
    std::vector<std::string> word;

    friend bool operator==(WordSpec const&, WordSpec const&) = default;
  };

  struct TqftScenario {
    std::map<std::string, std::size_t> labels;
    std::vector<TqftGenerator> generators;
    std::vector<WordSpec> cycle;

    CobordismSignature signature() const {
      std::set<std::string> names;
      for (auto const& [l, _] : labels) {
        names.insert(l);
      }
      std::vector<Generator> gens;
      for (auto const& g : generators) {
        gens.push_back(g.generator);
      }
      return CobordismSignature(std::move(names), std::move(gens));
    }

    TqftAssignment assignment() const {
      TqftAssignment t;
      t.label_dims = labels;
      for (auto const& g : generators) {
        t.generator_maps[g.generator.tag] = g.matrix;
      }
      return t;
    }

    friend bool operator==(TqftScenario const&, TqftScenario const&) = default;
  };

  using Payload = std::variant<MatrixScenario, ChainScenario, CategoryScenario, CocycleScenario,
                               LiftScenario, FunctorScenario, AlgebraScenario, BialgebraScenario,
                               ModuleScenario, TqftScenario>;

  struct Scenario {
    Payload payload;

    std::string kind() const {
      static constexpr char const* names[] = {"matrix", "chain",     "category", "cocycle",
                                              "lift",   "functor",   "algebra",  "bialgebra",
                                              "module", "tqft"};
      return names[payload.index()];
    }

    friend bool operator==(Scenario const&, Scenario const&) = default;
  };

  namespace detail {

    template <class F>
    auto schema_guard(Field const& at, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (SchemaError const&) {
        throw;
      } catch (RationalFormatError const&) {
        throw;
      } catch (Error const& e) {
        at.fail(e.what());
      }
    }

    inline RepresentedCategory read_category(Field const& f) {
      f.only({"objects", "arrows"});
      RepresentedCategory cat;
      for (auto const& o : f.at("objects").elements()) {
        o.only({"name", "dim"});
        auto name = o.at("name").text();
        auto dim  = o.at("dim").count();
        schema_guard(o, [&] { cat.add_object(name, dim); });
      }
      if (f.has("arrows")) {
        for (auto const& a : f.at("arrows").elements()) {
          a.only({"name", "source", "target", "matrix"});
          auto name   = a.at("name").text();
          auto source = a.at("source").text();
          auto target = a.at("target").text();
          auto map    = a.at("matrix").matrix();
          schema_guard(a, [&] { cat.add_arrow(name, source, target, map); });
        }
      }
      return cat;
    }

    inline NamedCocycle read_cocycle(Field const& f, RepresentedCategory const& cat) {
      f.only({"name", "objects", "arrows"});
      NamedCocycle c{f.at("name").text(), {f.at("objects").texts(), f.at("arrows").texts()}};
      auto objects = f.at("objects").elements();
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (!cat.has_object(c.cocycle.objects[i])) {
          objects[i].fail("undeclared object \"" + c.cocycle.objects[i] + "\"");
        }
      }
      auto arrows = f.at("arrows").elements();
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (!cat.has_arrow(c.cocycle.arrows[i])) {
          arrows[i].fail("undeclared arrow \"" + c.cocycle.arrows[i] + "\"");
        }
      }
      schema_guard(f, [&] { cocycle_maps(cat, c.cocycle); });
      return c;
    }

    inline std::vector<NamedCocycle> read_cocycles(Field const& f, RepresentedCategory const& cat) {
      std::vector<NamedCocycle> out;
      std::set<std::string> seen;
      for (auto const& c : f.elements()) {
        out.push_back(read_cocycle(c, cat));
        if (!seen.insert(out.back().name).second) {
          c.fail("cocycle \"" + out.back().name + "\" declared twice");
        }
      }
      if (out.empty()) {
        f.fail("at least one cocycle is required");
      }
      return out;
    }

    inline FunctorData read_functor(Field const& f) {
      f.only({"objects", "arrows"});
      FunctorData out;
      for (auto const& [k, v] : f.at("objects").members()) {
        out.objects[k] = v.text();
      }
      for (auto const& [k, v] : f.at("arrows").members()) {
        out.arrows[k] = v.text();
      }
      return out;
    }

    inline AlgebraScenario read_algebra(Field const& f) {
      f.only({"kind", "mult", "comult", "obstruction"});
      AlgebraScenario a;
      if (auto m = f.maybe("mult")) {
        a.mult = m->matrix();
      }
      if (auto c = f.maybe("comult")) {
        a.comult = c->matrix();
      }
      if (a.mult.has_value() == a.comult.has_value()) {
        f.fail("exactly one of \"mult\" and \"comult\" is required");
      }
      a.obstruction = f.at("obstruction").matrix();
      return a;
    }

    inline Boundary read_boundary(Field const& f, std::map<std::string, std::size_t> const& labels) {
      std::vector<BoundaryComponent> cs;
      for (auto const& e : f.elements()) {
        auto text = e.text();
        int orientation = 1;
        if (!text.empty() && text.back() == '*') {
          orientation = -1;
          text.pop_back();
        }
        if (labels.count(text) == 0) {
          e.fail("undeclared label \"" + text + "\"");
        }
        cs.push_back({text, orientation});
      }
      return Boundary(std::move(cs));
    }

    inline ordered_json boundary_json(Boundary const& b) {
      ordered_json out = ordered_json::array();
      for (auto const& c : b.components()) {
        out.push_back(c.label + (c.orientation == -1 ? "*" : ""));
      }
      return out;
    }

    inline ordered_json category_json(RepresentedCategory const& cat) {
      ordered_json out;
      out["objects"] = ordered_json::array();
      for (auto const& o : cat.objects()) {
        out["objects"].push_back({{"name", o.name}, {"dim", o.dim}});
      }
      out["arrows"] = ordered_json::array();
      for (auto const& a : cat.arrows()) {
        out["arrows"].push_back(
            {{"name", a.name}, {"source", a.source}, {"target", a.target}, {"matrix", to_json(a.map)}});
      }
      return out;
    }

    inline ordered_json cocycles_json(std::vector<NamedCocycle> const& cs) {
      ordered_json out = ordered_json::array();
      for (auto const& c : cs) {
        out.push_back({{"name", c.name}, {"objects", c.cocycle.objects}, {"arrows", c.cocycle.arrows}});
      }
      return out;
    }

    inline ordered_json functor_json(FunctorData const& f) {
      ordered_json objects = ordered_json::object(), arrows = ordered_json::object();
      for (auto const& [k, v] : f.objects) {
        objects[k] = v;
      }
      for (auto const& [k, v] : f.arrows) {
        arrows[k] = v;
      }
      return {{"objects", objects}, {"arrows", arrows}};
    }

    inline void algebra_json(ordered_json& out, AlgebraScenario const& a) {
      if (a.mult) {
        out["mult"] = to_json(*a.mult);
      }
      if (a.comult) {
        out["comult"] = to_json(*a.comult);
      }
      out["obstruction"] = to_json(a.obstruction);
    }

    inline MatrixScenario read_matrix(Field const& f) {
      f.only({"kind", "matrix", "inverse", "kernel_complement", "image_complement"});
      MatrixScenario s;
      s.f = f.at("matrix").matrix();
      if (auto g = f.maybe("inverse")) {
        s.inverse = g->matrix();
      }
      auto spans = [&](char const* key, std::size_t ambient) -> std::optional<std::vector<Vector>> {
        auto field = f.maybe(key);
        if (!field) {
          return std::nullopt;
        }
        std::vector<Vector> vs;
        for (auto const& e : field->elements()) {
          vs.push_back(e.vector());
          if (vs.back().size() != ambient) {
            e.fail("vector has " + std::to_string(vs.back().size()) + " entries, expected "
                   + std::to_string(ambient));
          }
        }
        return vs;
      };
      s.kernel_complement = spans("kernel_complement", s.f.cols());
      s.image_complement  = spans("image_complement", s.f.rows());
      if (s.inverse && (s.kernel_complement || s.image_complement)) {
        f.fail("\"inverse\" cannot be combined with complements");
      }
      return s;
    }

    inline ChainScenario read_chain(Field const& f) {
      f.only({"kind", "maps", "map", "length"});
      ChainScenario s;
      if (auto maps = f.maybe("maps")) {
        s.maps = maps->matrices();
        if (f.has("map") || f.has("length")) {
          f.fail("give either \"maps\" or \"map\" with \"length\"");
        }
        if (s.maps.empty()) {
          maps->fail("a chain needs at least one map");
        }
      } else {
        s.map    = f.at("map").matrix();
        s.length = f.at("length").count();
      }
      return s;
    }

    inline CategoryScenario read_category_scenario(Field const& f) {
      f.only({"kind", "objects", "arrows", "cocycles", "object", "morphism"});
      CategoryScenario s;
      json stripped = {{"objects", f.at("objects").value()}};
      if (f.has("arrows")) {
        stripped["arrows"] = f.at("arrows").value();
      }
      s.category = read_category(Field(stripped, f.path()));
      s.cocycles = read_cocycles(f.at("cocycles"), s.category);
      if (auto o = f.maybe("object")) {
        s.object = o->text();
        if (!s.category.has_object(*s.object)) {
          o->fail("undeclared object \"" + *s.object + "\"");
        }
      }
      if (auto m = f.maybe("morphism")) {
        m->only({"source", "target", "components"});
        MorphismSpec spec{m->at("source").text(), m->at("target").text(),
                          m->at("components").matrices()};
        for (auto const* key : {"source", "target"}) {
          auto name = m->at(key).text();
          bool found = false;
          for (auto const& c : s.cocycles) {
            found = found || c.name == name;
          }
          if (!found) {
            m->at(key).fail("undeclared cocycle \"" + name + "\"");
          }
        }
        s.morphism = std::move(spec);
      }
      return s;
    }

    inline CocycleScenario read_cocycle_scenario(Field const& f) {
      f.only({"kind", "objects", "arrows"});
      CocycleScenario s;
      auto objects = f.at("objects").elements();
      auto arrows  = f.at("arrows").elements();
      if (objects.size() != arrows.size() || objects.empty()) {
        f.fail("a cycle needs as many arrows as objects, at least one");
      }
      for (auto const& o : objects) {
        o.only({"name", "dim"});
        auto name = o.at("name").text();
        auto dim  = o.at("dim").count();
        schema_guard(o, [&] { s.category.add_object(name, dim); });
        s.cocycle.objects.push_back(name);
      }
      std::size_t n = objects.size();
      for (std::size_t i = 0; i < n; ++i) {
        arrows[i].only({"name", "matrix"});
        auto name = arrows[i].at("name").text();
        auto map  = arrows[i].at("matrix").matrix();
        schema_guard(arrows[i], [&] {
          s.category.add_arrow(name, s.cocycle.objects[i], s.cocycle.objects[(i + 1) % n], map);
        });
        s.cocycle.arrows.push_back(name);
      }
      return s;
    }

    inline LiftScenario read_lift(Field const& f) {
      f.only({"kind", "inclusions", "projections", "small_maps"});
      LiftScenario s;
      s.data.inclusions  = f.at("inclusions").matrices();
      s.data.projections = f.at("projections").matrices();
      s.data.small_maps  = f.at("small_maps").matrices();
      std::size_t n = s.data.small_maps.size();
      if (n == 0 || s.data.inclusions.size() != n || s.data.projections.size() != n) {
        f.fail("\"inclusions\", \"projections\" and \"small_maps\" need the same nonzero length");
      }
      return s;
    }

    inline FunctorScenario read_functor_scenario(Field const& f) {
      f.only({"kind", "source", "target", "functor", "cocycles", "natural"});
      FunctorScenario s;
      s.source   = read_category(f.at("source"));
      s.target   = read_category(f.at("target"));
      s.functor  = read_functor(f.at("functor"));
      s.cocycles = read_cocycles(f.at("cocycles"), s.source);
      if (auto n = f.maybe("natural")) {
        n->only({"to", "components"});
        NaturalSpec spec;
        spec.to = read_functor(n->at("to"));
        for (auto const& [k, v] : n->at("components").members()) {
          spec.components[k] = v.matrix();
        }
        s.natural = std::move(spec);
      }
      return s;
    }

    inline BialgebraScenario read_bialgebra(Field const& f) {
      f.only({"kind", "mult", "comult", "obstruction", "unit", "counit", "antipode"});
      BialgebraScenario s;
      s.mult        = f.at("mult").matrix();
      s.comult      = f.at("comult").matrix();
      s.obstruction = f.at("obstruction").matrix();
      if (auto u = f.maybe("unit")) {
        s.unit = u->matrix();
      }
      if (auto c = f.maybe("counit")) {
        s.counit = c->matrix();
      }
      if (auto a = f.maybe("antipode")) {
        s.antipode = a->matrix();
      }
      return s;
    }

    inline ModuleScenario read_module(Field const& f) {
      f.only({"kind", "algebra", "module"});
      ModuleScenario s;
      s.algebra = read_algebra(f.at("algebra"));
      auto m = f.at("module");
      m.only({"dim", "action", "coaction", "obstruction"});
      s.dim = m.at("dim").count();
      if (auto a = m.maybe("action")) {
        s.action = a->matrix();
      }
      if (auto c = m.maybe("coaction")) {
        s.coaction = c->matrix();
      }
      if (s.action.has_value() == s.coaction.has_value()) {
        m.fail("exactly one of \"action\" and \"coaction\" is required");
      }
      if (s.action && !s.algebra.mult) {
        m.at("action").fail("an action needs an algebra with \"mult\"");
      }
      if (s.coaction && !s.algebra.comult) {
        m.at("coaction").fail("a coaction needs a coalgebra with \"comult\"");
      }
      s.obstruction = m.at("obstruction").matrix();
      return s;
    }

    inline TqftScenario read_tqft(Field const& f) {
      f.only({"kind", "labels", "generators", "cycle"});
      TqftScenario s;
      for (auto const& [k, v] : f.at("labels").members()) {
        if (k.empty() || k.back() == '*') {
          v.fail("label names cannot be empty or end in '*'");
        }
        s.labels[k] = v.count();
      }
      for (auto const& g : f.at("generators").elements()) {
        g.only({"tag", "in", "out", "opposite", "cylinder", "matrix"});
        TqftGenerator gen;
        gen.generator.tag      = g.at("tag").text();
        gen.generator.incoming = read_boundary(g.at("in"), s.labels);
        gen.generator.outgoing = read_boundary(g.at("out"), s.labels);
        if (auto o = g.maybe("opposite")) {
          gen.generator.opposite = o->text();
        }
        if (auto c = g.maybe("cylinder")) {
          gen.generator.cylinder = c->flag();
        }
        gen.matrix = g.at("matrix").matrix();
        s.generators.push_back(std::move(gen));
      }
      schema_guard(f.at("generators"), [&] { s.signature(); });
      std::set<std::string> tags;
      for (auto const& g : s.generators) {
        tags.insert(g.generator.tag);
      }
      for (auto const& w : f.at("cycle").elements()) {
        w.only({"in", "out", "word"});
        WordSpec spec{read_boundary(w.at("in"), s.labels), read_boundary(w.at("out"), s.labels),
                      w.at("word").texts()};
        auto letters = w.at("word").elements();
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (tags.count(spec.word[i]) == 0) {
            letters[i].fail("undeclared generator \"" + spec.word[i] + "\"");
          }
        }
        s.cycle.push_back(std::move(spec));
      }
      if (s.cycle.empty()) {
        f.at("cycle").fail("at least one interaction is required");
      }
      return s;
    }

  }  // namespace detail

  inline Scenario parse_scenario(std::string const& text) {
    json doc = parse_document(text);
    Field root(doc, "");
    std::string kind = root.at("kind").text();
    if (kind == "matrix") {
      return {detail::read_matrix(root)};
    }
    if (kind == "chain") {
      return {detail::read_chain(root)};
    }
    if (kind == "category") {
      return {detail::read_category_scenario(root)};
    }
    if (kind == "cocycle") {
      return {detail::read_cocycle_scenario(root)};
    }
    if (kind == "lift") {
      return {detail::read_lift(root)};
    }
    if (kind == "functor") {
      return {detail::read_functor_scenario(root)};
    }
    if (kind == "algebra") {
      return {detail::read_algebra(root)};
    }
    if (kind == "bialgebra") {
      return {detail::read_bialgebra(root)};
    }
    if (kind == "module") {
      return {detail::read_module(root)};
    }
    if (kind == "tqft") {
      return {detail::read_tqft(root)};
    }
    root.at("kind").fail("unknown kind \"" + kind + "\"");
  }

  inline Scenario load_scenario(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot read \"" + path + "\"");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
  }

  inline ordered_json to_json(Scenario const& s) {
    ordered_json out;
    out["kind"] = s.kind();
    std::visit(
        [&](auto const& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, MatrixScenario>) {
            out["matrix"] = to_json(p.f);
            if (p.inverse) {
              out["inverse"] = to_json(*p.inverse);
            }
            if (p.kernel_complement) {
              out["kernel_complement"] = ordered_json::array();
              for (auto const& v : *p.kernel_complement) {
                out["kernel_complement"].push_back(to_json(v));
              }
            }
            if (p.image_complement) {
              out["image_complement"] = ordered_json::array();
              for (auto const& v : *p.image_complement) {
                out["image_complement"].push_back(to_json(v));
              }
            }
          } else if constexpr (std::is_same_v<T, ChainScenario>) {
            if (p.map) {
              out["map"]    = to_json(*p.map);
              out["length"] = *p.length;
            } else {
              out["maps"] = to_json(p.maps);
            }
          } else if constexpr (std::is_same_v<T, CategoryScenario>) {
            auto cat = detail::category_json(p.category);
            out["objects"]  = cat["objects"];
            out["arrows"]   = cat["arrows"];
            out["cocycles"] = detail::cocycles_json(p.cocycles);
            if (p.object) {
              out["object"] = *p.object;
            }
            if (p.morphism) {
              out["morphism"] = {{"source", p.morphism->source},
                                 {"target", p.morphism->target},
                                 {"components", to_json(p.morphism->components)}};
            }
          } else if constexpr (std::is_same_v<T, CocycleScenario>) {
            out["objects"] = ordered_json::array();
            out["arrows"]  = ordered_json::array();
            for (std::size_t i = 0; i < p.cocycle.n(); ++i) {
              out["objects"].push_back({{"name", p.cocycle.objects[i]},
                                        {"dim", p.category.object(p.cocycle.objects[i]).dim}});
              out["arrows"].push_back({{"name", p.cocycle.arrows[i]},
                                       {"matrix", to_json(p.category.arrow(p.cocycle.arrows[i]).map)}});
            }
          } else if constexpr (std::is_same_v<T, LiftScenario>) {
            out["inclusions"]  = to_json(p.data.inclusions);
            out["projections"] = to_json(p.data.projections);
            out["small_maps"]  = to_json(p.data.small_maps);
          } else if constexpr (std::is_same_v<T, FunctorScenario>) {
            out["source"]   = detail::category_json(p.source);
            out["target"]   = detail::category_json(p.target);
            out["functor"]  = detail::functor_json(p.functor);
            out["cocycles"] = detail::cocycles_json(p.cocycles);
            if (p.natural) {
              ordered_json comps = ordered_json::object();
              for (auto const& [k, m] : p.natural->components) {
                comps[k] = to_json(m);
              }
              out["natural"] = {{"to", detail::functor_json(p.natural->to)}, {"components", comps}};
            }
          } else if constexpr (std::is_same_v<T, AlgebraScenario>) {
            detail::algebra_json(out, p);
          } else if constexpr (std::is_same_v<T, BialgebraScenario>) {
            out["mult"]        = to_json(p.mult);
            out["comult"]      = to_json(p.comult);
            out["obstruction"] = to_json(p.obstruction);
            if (p.unit) {
              out["unit"] = to_json(*p.unit);
            }
            if (p.counit) {
              out["counit"] = to_json(*p.counit);
            }
            if (p.antipode) {
              out["antipode"] = to_json(*p.antipode);
            }
          } else if constexpr (std::is_same_v<T, ModuleScenario>) {
            ordered_json alg;
            detail::algebra_json(alg, p.algebra);
            ordered_json mod;
            mod["dim"] = p.dim;
            if (p.action) {
              mod["action"] = to_json(*p.action);
            }
            if (p.coaction) {
              mod["coaction"] = to_json(*p.coaction);
            }
            mod["obstruction"] = to_json(p.obstruction);
            out["algebra"] = alg;
            out["module"]  = mod;
          } else if constexpr (std::is_same_v<T, TqftScenario>) {
            ordered_json labels = ordered_json::object();
            for (auto const& [k, d] : p.labels) {
              labels[k] = d;
            }
            out["labels"]     = labels;
            out["generators"] = ordered_json::array();
            for (auto const& g : p.generators) {
              ordered_json j;
              j["tag"] = g.generator.tag;
              j["in"]  = detail::boundary_json(g.generator.incoming);
              j["out"] = detail::boundary_json(g.generator.outgoing);
              if (g.generator.opposite) {
                j["opposite"] = *g.generator.opposite;
              }
              if (g.generator.cylinder) {
                j["cylinder"] = true;
              }
              j["matrix"] = to_json(g.matrix);
              out["generators"].push_back(j);
            }
            out["cycle"] = ordered_json::array();
            for (auto const& w : p.cycle) {
              out["cycle"].push_back({{"in", detail::boundary_json(w.incoming)},
                                      {"out", detail::boundary_json(w.outgoing)},
                                      {"word", w.word}});
            }
          }
        },
        s.payload);
    return out;
  }

}  // namespace regcat::cli
