#pragma once

#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "regcat/cli/scenario.hpp"
#include "regcat/cli/verdict.hpp"
#include "regcat/gen_inverse.hpp"
#include "regcat/regular_algebra.hpp"
#include "regcat/regular_monoidal.hpp"
#include "regcat/star_chain.hpp"
#include "regcat/tqft.hpp"

namespace regcat::cli {

  enum class ReportFormat { text, json };

  struct Options {
    ReportFormat report = ReportFormat::text;
    bool stop_on_first_failure = false;
  };

  inline std::vector<std::string> const& command_names() {
    static std::vector<std::string> const names{
        "ginverse", "check-chain", "verify-cocycle", "obstruction-degree", "lift",
        "cocycle-morphism", "tensor", "dual", "pairing", "functor-check",
        "algebra-check", "hopf-check", "module-check", "tqft-check"};
    return names;
  }

  namespace detail {

    template <class T>
    T const& expect(Scenario const& s, std::string const& command) {
      if (auto const* p = std::get_if<T>(&s.payload)) {
        return *p;
      }
      throw SchemaError(command + " does not accept a " + s.kind() + " scenario");
    }

    struct CycleSet {
      RepresentedCategory const* category = nullptr;
      std::vector<std::pair<std::string, Cocycle>> cycles;  // report prefix, cocycle
    };

    inline CycleSet cycle_set(Scenario const& s, std::string const& command) {
      if (auto const* p = std::get_if<CocycleScenario>(&s.payload)) {
        return {&p->category, {{"", p->cocycle}}};
      }
      if (auto const* p = std::get_if<CategoryScenario>(&s.payload)) {
        CycleSet out{&p->category, {}};
        for (auto const& c : p->cocycles) {
          out.cycles.emplace_back("[" + c.name + "] ", c.cocycle);
        }
        return out;
      }
      throw SchemaError(command + " does not accept a " + s.kind() + " scenario");
    }

    inline std::string obstruction_name(std::string const& object) { return "e_" + object; }

    inline Matrix identity_like(Matrix const& m) { return Matrix::identity(m.rows()); }

    inline bool cocycle_checks(Verdict& v, RepresentedCategory const& cat, Cocycle const& c,
                               std::string const& prefix) {
      auto maps = cocycle_maps(cat, c);
      auto e    = cyclic_composites(maps);
      bool ok   = true;
      for (std::size_t i = 0; i < c.n(); ++i) {
        auto const& a = c.arrows[i];
        ok = v.add(law(prefix + a + "∘" + obstruction_name(c.objects[i]) + " = " + a,
                       "cocycle identity", maps[i] * e[i], maps[i]))
             && ok;
      }
      return ok;
    }

    inline void obstruction_report(Verdict& v, RepresentedCategory const& cat, Cocycle const& c,
                                   std::string const& prefix) {
      auto maps = cocycle_maps(cat, c);
      auto e    = cyclic_composites(maps);
      std::size_t n = c.n();
      for (std::size_t i = 0; i < n; ++i) {
        v.value(prefix + obstruction_name(c.objects[i]), str(e[i]));
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto const& a   = c.arrows[i];
        auto const& ei  = obstruction_name(c.objects[i]);
        auto const& ej  = obstruction_name(c.objects[(i + 1) % n]);
        v.add(law(prefix + ei + "∘" + ei + " = " + ei, "obstruction relations", e[i] * e[i], e[i]));
        v.add(law(prefix + ej + "∘" + a + " = " + a, "obstruction relations",
                  e[(i + 1) % n] * maps[i], maps[i]));
      }
    }

    inline std::string degree_text(std::optional<std::size_t> d) {
      return d ? std::to_string(*d) : std::string("trivial");
    }

    inline void ginverse(MatrixScenario const& s, Verdict& v) {
      Matrix const& f = s.f;
      Matrix g;
      if (s.inverse) {
        g = *s.inverse;
        if (g.rows() != f.cols() || g.cols() != f.rows()) {
          throw DimensionMismatch("inverse should be " + std::to_string(f.cols()) + "x"
                                  + std::to_string(f.rows()) + ", got " + g.shape());
        }
      } else {
        std::optional<Subspace> m, n;
        if (s.kernel_complement) {
          m = Subspace::span(*s.kernel_complement, f.cols());
        }
        if (s.image_complement) {
          n = Subspace::span(*s.image_complement, f.rows());
        }
        g = generalized_inverse(f, m, n);
      }
      v.value("g", str(g));
      bool inner = v.add(law("f∘g∘f = f", "inner inverse", f * g * f, f));
      bool outer = v.add(law("g∘f∘g = g", "outer inverse", g * f * g, g));
      if (!(inner && outer)) {
        return;
      }
      auto [pf, pg] = range_projectors(f, g);
      v.value("P_f", str(pf));
      v.value("P_g", str(pg));
      v.add(law("P_f∘P_f = P_f", "range projectors", pf * pf, pf));
      v.add(law("P_f∘f = f", "range projectors", pf * f, f));
      v.add(law("g∘P_f = g", "range projectors", g * pf, g));
      v.add(law("P_g∘P_g = P_g", "range projectors", pg * pg, pg));
      v.add(law("P_g∘g = g", "range projectors", pg * g, g));
      v.add(law("f∘P_g = f", "range projectors", f * pg, f));
      auto report = lemma3_report(f, g);
      v.value("dim Im f", std::to_string(report.image_f.dim()));
      v.value("dim Ker f", std::to_string(report.kernel_f.dim()));
      for (auto const& c : report.checks) {
        v.add(claim(c.name, "image and kernel decomposition", c.passed));
      }
      v.add(claim("dim Im g + dim Ker f = dim X", "image and kernel decomposition",
                  report.image_g.dim() + report.kernel_f.dim() == f.domain_dim()));
    }

    inline void check_chain(ChainScenario const& s, Verdict& v) {
      StarChain chain = s.map ? build_default_chain(*s.map, *s.length) : StarChain(s.maps);
      std::size_t n = chain.n();
      if (s.map) {
        for (std::size_t k = 0; k < n; ++k) {
          v.value("chain[" + std::to_string(k) + "]", str(chain[k]));
        }
      }
      bool regular = true;
      for (std::size_t k = 0; k < n; ++k) {
        regular = v.add(law("cyclic identity at position " + std::to_string(k), "n-regularity",
                            chain.cyclic_product(k) * chain[k], chain[k]))
                  && regular;
      }
      if (regular) {
        Matrix p = higher_projector(chain);
        v.value("P", str(p));
        v.add(law("P∘P = P", "higher projector", p * p, p));
        v.add(law("P∘f = f", "higher projector", p * chain[0], chain[0]));
      }
      if (n == 4) {
        auto r = analyze_4_to_2(chain);
        v.value("4-to-2 hypothesis", r.hypothesis() ? "holds" : "does not hold");
        if (r.hypothesis()) {
          auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
          v.add(claim("f∘f*∘f**∘f***∘f = f ⇔ (f∘f*∘f = f and f*∘f**∘f* = f*)", "4-to-2 reduction",
                      r.four_regular == (r.inner_law && r.star_law),
                      "4-regular " + yes(r.four_regular) + ", f∘f*∘f = f " + yes(r.inner_law)
                          + ", f*∘f**∘f* = f* " + yes(r.star_law)));
        }
      }
    }

    inline void verify_cocycles(Scenario const& s, Verdict& v) {
      auto set = cycle_set(s, v.command);
      auto const& cat = *set.category;
      for (auto const& [prefix, c] : set.cycles) {
        if (!cocycle_checks(v, cat, c, prefix)) {
          continue;
        }
        obstruction_report(v, cat, c, prefix);
        std::set<std::string> seen;
        for (auto const& o : c.objects) {
          if (seen.insert(o).second) {
            v.value(prefix + "degree at " + o, degree_text(obstruction_degree(cat, {c}, o)));
          }
        }
      }
    }

    inline void degrees(Scenario const& s, Verdict& v) {
      auto set = cycle_set(s, v.command);
      auto const& cat = *set.category;
      bool ok = true;
      for (auto const& [prefix, c] : set.cycles) {
        ok = cocycle_checks(v, cat, c, prefix) && ok;
      }
      if (!ok) {
        return;
      }
      std::vector<std::string> objects;
      auto const* category = std::get_if<CategoryScenario>(&s.payload);
      if (category && category->object) {
        objects.push_back(*category->object);
      } else {
        std::set<std::string> seen;
        for (auto const& [_, c] : set.cycles) {
          for (auto const& o : c.objects) {
            if (seen.insert(o).second) {
              objects.push_back(o);
            }
          }
        }
      }
      for (auto const& o : objects) {
        std::vector<Cocycle> through;
        for (auto const& [_, c] : set.cycles) {
          for (auto const& x : c.objects) {
            if (x == o) {
              through.push_back(c);
              break;
            }
          }
        }
        auto d = through.empty() ? std::nullopt : obstruction_degree(cat, through, o);
        v.value("degree at " + o, degree_text(d) + " (over " + std::to_string(through.size())
                                      + (through.size() == 1 ? " cocycle)" : " cocycles)"));
      }
    }

    inline void lift(LiftScenario const& s, Verdict& v) {
      auto const& d = s.data;
      std::size_t n = d.n();
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        auto k = std::to_string(i + 1);
        ok = v.add(law("π" + k + "∘ι" + k + " = id", "retraction",
                       d.projections[i] * d.inclusions[i], Matrix::identity(d.inclusions[i].cols())))
             && ok;
      }
      auto small = cyclic_composites(d.small_maps);
      for (std::size_t i = 0; i < n; ++i) {
        ok = v.add(law("small cycle at Y" + std::to_string(i + 1) + " = id", "invertible small cycle",
                       small[i], identity_like(small[i])))
             && ok;
      }
      if (!ok) {
        return;
      }
      auto r = lift_construct(d);
      for (std::size_t i = 0; i < n; ++i) {
        v.value(r.cocycle.arrows[i], str(r.category.arrow(r.cocycle.arrows[i]).map));
      }
      if (!cocycle_checks(v, r.category, r.cocycle, "")) {
        return;
      }
      obstruction_report(v, r.category, r.cocycle, "");
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t rk  = rank(r.obstruction.endomaps[i]);
        std::size_t dim = d.inclusions[i].cols();
        v.add(claim("rank " + obstruction_name(r.cocycle.objects[i]) + " = dim Y" + std::to_string(i + 1),
                    "lifted obstruction", rk == dim,
                    "rank " + std::to_string(rk) + ", dim " + std::to_string(dim)));
      }
    }

    inline Cocycle const& named(CategoryScenario const& s, std::string const& name) {
      for (auto const& c : s.cocycles) {
        if (c.name == name) {
          return c.cocycle;
        }
      }
      throw SchemaError("morphism: undeclared cocycle \"" + name + "\"");
    }

    inline void morphism(CategoryScenario const& s, Verdict& v) {
      if (!s.morphism) {
        throw SchemaError("morphism: cocycle-morphism needs a \"morphism\" block");
      }
      auto const& cat = s.category;
      auto const& src = named(s, s.morphism->source);
      auto const& tgt = named(s, s.morphism->target);
      bool ok = cocycle_checks(v, cat, src, "[" + s.morphism->source + "] ");
      ok = cocycle_checks(v, cat, tgt, "[" + s.morphism->target + "] ") && ok;
      if (!ok) {
        return;
      }
      auto const& alpha = s.morphism->components;
      auto r = cocycle_morphism_check(cat, src, tgt, alpha);
      auto f = cocycle_maps(cat, src);
      auto g = cocycle_maps(cat, tgt);
      std::size_t n = f.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        v.add(law("α" + std::to_string(j + 1) + "∘" + src.arrows[i] + " = " + tgt.arrows[i] + "∘α"
                      + std::to_string(i + 1),
                  "cocycle morphism", alpha[j] * f[i], g[i] * alpha[i]));
      }
      v.value("kind", to_string(r.kind));
    }

    inline void tensor(Scenario const& s, Verdict& v) {
      auto set = cycle_set(s, v.command);
      auto const& cat = *set.category;
      Cocycle left, right;
      std::string lp = "[left] ", rp = "[right] ";
      if (set.cycles.size() == 1) {
        left = right = set.cycles[0].second;
      } else {
        left  = set.cycles[0].second;
        right = set.cycles[1].second;
        lp    = set.cycles[0].first;
        rp    = set.cycles[1].first;
      }
      if (left.n() != right.n()) {
        throw LengthMismatch("tensor needs cocycles of equal length, got "
                             + std::to_string(left.n()) + " and " + std::to_string(right.n()));
      }
      bool ok = cocycle_checks(v, cat, left, lp);
      ok = cocycle_checks(v, cat, right, rp) && ok;
      if (!ok) {
        return;
      }
      auto t  = tensor_cocycles(cat, left, cat, right);
      auto el = cyclic_composites(cocycle_maps(cat, left));
      auto er = cyclic_composites(cocycle_maps(cat, right));
      auto et = cyclic_composites(cocycle_maps(t.category, t.cocycle));
      cocycle_checks(v, t.category, t.cocycle, "");
      for (std::size_t i = 0; i < t.cocycle.n(); ++i) {
        v.value(obstruction_name(t.cocycle.objects[i]), str(et[i]));
        v.add(law(obstruction_name(t.cocycle.objects[i]) + " = " + obstruction_name(left.objects[i])
                      + "⊗" + obstruction_name(right.objects[i]),
                  "tensor obstruction", et[i], kronecker(el[i], er[i])));
      }
    }

    inline void dual(Scenario const& s, Verdict& v) {
      auto set = cycle_set(s, v.command);
      auto const& cat = *set.category;
      for (auto const& [prefix, c] : set.cycles) {
        if (!cocycle_checks(v, cat, c, prefix)) {
          continue;
        }
        auto d = dual_cocycle(cat, c);
        for (auto const& a : d.cocycle.arrows) {
          auto const& arrow = d.category.arrow(a);
          v.value(prefix + a + " : " + arrow.source + " → " + arrow.target, str(arrow.map));
        }
        cocycle_checks(v, d.category, d.cocycle, prefix);
        auto e  = cyclic_composites(cocycle_maps(cat, c));
        auto de = cyclic_composites(cocycle_maps(d.category, d.cocycle));
        std::size_t n = c.n();
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t k = (n - i) % n;
          v.add(law(prefix + obstruction_name(d.cocycle.objects[k]) + " = "
                        + obstruction_name(c.objects[i]) + "ᵀ",
                    "dual obstruction", de[k], e[i].transpose()));
        }
        auto dd = dual_cocycle(d.category, d.cocycle);
        bool same = dd.cocycle == c;
        for (std::size_t i = 0; same && i < n; ++i) {
          same = dd.category.arrow(c.arrows[i]).map == cat.arrow(c.arrows[i]).map;
        }
        v.add(claim(prefix + "double dual = original", "double dual", same));
      }
    }

    inline void pairing(Scenario const& s, Verdict& v) {
      auto set = cycle_set(s, v.command);
      auto const& cat = *set.category;
      std::string const arrows_law = "⟨f*ξ, x⟩ = ⟨ξ, f x⟩";
      std::string const obstruction_law = "⟨e*ξ, x⟩ = ⟨ξ, e x⟩";
      for (auto const& [prefix, c] : set.cycles) {
        if (!cocycle_checks(v, cat, c, prefix)) {
          continue;
        }
        auto r = pairing_check(cat, c);
        std::string where = r.failing_index ? "at index " + std::to_string(*r.failing_index) : "";
        v.add(claim(prefix + arrows_law, "evaluation pairing", r.failing_law != arrows_law, where));
        if (r.failing_law != arrows_law) {
          v.add(claim(prefix + obstruction_law, "evaluation pairing", r.failing_law != obstruction_law,
                      where));
        }
      }
    }

    inline void functor(FunctorScenario const& s, Verdict& v) {
      struct Condition {
        char id;
        char const* law;
        char const* anchor;
      };
      static constexpr Condition conditions[] = {
          {'a', "F(f_{i+1}∘f_i) = F(f_{i+1})∘F(f_i) on composite generators", "functor composition"},
          {'b', "rank e_{F X_i} = rank e_{X_i}", "obstruction preservation"},
          {'c', "F(f_i)∘e_{F X_i} = F(f_i)", "image cocycle identity"}};

      auto run_conditions = [&](FunctorData const& f, std::string const& name, std::string const& prefix,
                                Cocycle const& c) {
        auto r = functor_check(s.source, s.target, f, {c});
        for (auto const& cond : conditions) {
          bool failed = !r.passed && *r.failed_condition == cond.id;
          v.add(claim(prefix + name + ": (" + cond.id + ") " + cond.law, cond.anchor, !failed,
                      r.arrow_index ? "at arrow " + std::to_string(*r.arrow_index) : ""));
          if (failed) {
            break;
          }
        }
        return r.passed;
      };

      bool all = true;
      for (auto const& nc : s.cocycles) {
        std::string prefix = "[" + nc.name + "] ";
        if (!cocycle_checks(v, s.source, nc.cocycle, prefix)) {
          all = false;
          continue;
        }
        if (!run_conditions(s.functor, "F", prefix, nc.cocycle)) {
          all = false;
          continue;
        }
        auto image = image_cocycle(s.target, s.functor, nc.cocycle);
        auto e = cyclic_composites(cocycle_maps(s.target, image));
        for (std::size_t i = 0; i < image.n(); ++i) {
          v.value(prefix + obstruction_name(image.objects[i]), str(e[i]));
        }
        if (s.natural) {
          all = run_conditions(s.natural->to, "G", prefix, nc.cocycle) && all;
        }
      }
      if (s.natural && all) {
        std::vector<Cocycle> cs;
        for (auto const& nc : s.cocycles) {
          cs.push_back(nc.cocycle);
        }
        auto r = natural_transformation_check(s.source, s.target, s.functor, s.natural->to,
                                              s.natural->components, cs);
        v.add(claim("s_{X_{i+1}}∘F(f_i) = G(f_i)∘s_{X_i}", "natural transformation", r.natural,
                    r.square ? "cocycle " + s.cocycles[*r.cocycle_index].name + ", square "
                                   + std::to_string(*r.square)
                             : ""));
      }
    }

    inline Check algebra_law(Matrix const& m, Matrix const& e, std::string const& anchor) {
      return law("m∘(e⊗e) = e∘m", anchor, m * kronecker(e, e), e * m);
    }

    inline Check coalgebra_law(Matrix const& c, Matrix const& e, std::string const& anchor) {
      return law("Δ∘e = (e⊗e)∘Δ", anchor, c * e, kronecker(e, e) * c);
    }

    inline void algebra(Scenario const& s, Verdict& v) {
      if (auto const* p = std::get_if<AlgebraScenario>(&s.payload)) {
        if (p->mult) {
          ObstructedAlgebra a(*p->mult, p->obstruction);
          if (!v.add(algebra_law(a.mult(), a.obstruction(), "regular algebra"))) {
            return;
          }
          auto c = dualize_algebra(a);
          v.value("dual comultiplication", str(c.comult()));
          v.add(coalgebra_law(c.comult(), c.obstruction(), "dual coalgebra"));
          v.add(claim("dual of the dual = original", "dual round trip", dualize_coalgebra(c) == a));
        } else {
          ObstructedCoalgebra c(*p->comult, p->obstruction);
          if (!v.add(coalgebra_law(c.comult(), c.obstruction(), "regular coalgebra"))) {
            return;
          }
          auto a = dualize_coalgebra(c);
          v.value("dual multiplication", str(a.mult()));
          v.add(algebra_law(a.mult(), a.obstruction(), "dual algebra"));
          v.add(claim("dual of the dual = original", "dual round trip", dualize_algebra(a) == c));
        }
        return;
      }
      auto const& p = expect<BialgebraScenario>(s, v.command);
      AlmostBialgebra b(ObstructedAlgebra(p.mult, p.obstruction),
                        ObstructedCoalgebra(p.comult, p.obstruction), p.unit, p.counit);
      bool ok = v.add(algebra_law(b.mult(), b.obstruction(), "regular algebra"));
      ok = v.add(coalgebra_law(b.comult(), b.obstruction(), "regular coalgebra")) && ok;
      if (ok) {
        auto d = dualize_bialgebra(b);
        v.add(claim("dual of the dual = original", "dual round trip", dualize_bialgebra(d) == b));
      }
    }

    inline void hopf(BialgebraScenario const& p, Verdict& v) {
      if (!p.antipode) {
        throw SchemaError("antipode: hopf-check needs an \"antipode\"");
      }
      AlmostBialgebra b(ObstructedAlgebra(p.mult, p.obstruction),
                        ObstructedCoalgebra(p.comult, p.obstruction), p.unit, p.counit);
      Matrix const& s = *p.antipode;
      if (s.rows() != b.dim() || s.cols() != b.dim()) {
        throw DimensionMismatch("antipode should be " + std::to_string(b.dim()) + "x"
                                + std::to_string(b.dim()) + ", got " + s.shape());
      }
      if (!v.add(law("S∘m = m∘(S⊗S)", "multiplicative antipode", s * b.mult(),
                     b.mult() * kronecker(s, s)))) {
        return;
      }
      Matrix id    = Matrix::identity(b.dim());
      Matrix left  = convolution(b, convolution(b, s, id), s);
      Matrix right = convolution(b, convolution(b, id, s), id);
      v.value("S⋆id⋆S", str(left));
      v.value("id⋆S⋆id", str(right));
      v.add(law("S⋆id⋆S = S", "almost Hopf", left, s));
      v.add(law("id⋆S⋆id = id", "almost Hopf", right, id));
    }

    inline bool module_laws(Verdict& v, ObstructedAlgebra const& a, ModuleData const& m,
                            std::string const& anchor) {
      regular_module_laws(a, m);
      Matrix const& rho = m.action;
      Matrix id_a = Matrix::identity(a.dim());
      Matrix id_m = Matrix::identity(m.dim);
      bool ok = v.add(law("ρ∘(m⊗id) = ρ∘(id⊗ρ)", anchor, rho * kronecker(a.mult(), id_m),
                          rho * kronecker(id_a, rho)));
      return v.add(law("ρ∘(e_A⊗e_M) = e_M∘ρ", anchor, rho * kronecker(a.obstruction(), m.obstruction),
                       m.obstruction * rho))
             && ok;
    }

    inline bool comodule_laws(Verdict& v, ObstructedCoalgebra const& c, ComoduleData const& m,
                              std::string const& anchor) {
      regular_comodule_laws(c, m);
      Matrix const& delta = m.coaction;
      Matrix id_a = Matrix::identity(c.dim());
      Matrix id_m = Matrix::identity(m.dim);
      bool ok = v.add(law("(Δ⊗id)∘δ = (id⊗δ)∘δ", anchor, kronecker(c.comult(), id_m) * delta,
                          kronecker(id_a, delta) * delta));
      return v.add(law("(e_A⊗e_M)∘δ = δ∘e_M", anchor,
                       kronecker(c.obstruction(), m.obstruction) * delta, delta * m.obstruction))
             && ok;
    }

    inline void module_check(ModuleScenario const& p, Verdict& v) {
      if (p.action) {
        ObstructedAlgebra a(*p.algebra.mult, p.algebra.obstruction);
        ModuleData m{p.dim, *p.action, p.obstruction};
        if (!module_laws(v, a, m, "regular module")) {
          return;
        }
        if (!check_regular_algebra(a)) {
          v.value("transpose", "skipped, the algebra is not regular");
          return;
        }
        auto dual = transpose_module(m);
        v.value("coaction", str(dual.coaction));
        comodule_laws(v, dualize_algebra(a), dual, "transposed comodule");
      } else {
        ObstructedCoalgebra c(*p.algebra.comult, p.algebra.obstruction);
        ComoduleData m{p.dim, *p.coaction, p.obstruction};
        if (!comodule_laws(v, c, m, "regular comodule")) {
          return;
        }
        if (!check_regular_coalgebra(c)) {
          v.value("transpose", "skipped, the coalgebra is not regular");
          return;
        }
        auto dual = transpose_comodule(m);
        v.value("action", str(dual.action));
        module_laws(v, dualize_coalgebra(c), dual, "transposed module");
      }
    }

    inline void tqft(TqftScenario const& p, Verdict& v) {
      auto sig  = p.signature();
      auto tqft = p.assignment();
      validate_assignment(sig, tqft);
      std::vector<Interaction> interactions;
      for (auto const& w : p.cycle) {
        interactions.push_back(make_interaction(sig, w.incoming, w.outgoing, w.word));
      }
      auto tc = check_n_regular_tqft(tqft, interactions);
      std::size_t n = interactions.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto const& o = tc.category.object(tc.cocycle.objects[i]);
        v.value(o.name, interactions[i].incoming.str() + ", dim " + std::to_string(o.dim));
      }
      for (std::size_t i = 0; i < n; ++i) {
        v.value(tc.cocycle.arrows[i], str(tc.category.arrow(tc.cocycle.arrows[i]).map));
      }
      if (!cocycle_checks(v, tc.category, tc.cocycle, "")) {
        return;
      }
      obstruction_report(v, tc.category, tc.cocycle, "");
      v.value("regularity", tc.trivial ? "trivial (time reversible)"
                                       : std::to_string(n) + "-regular, nontrivial obstruction");
    }

  }  // namespace detail

  //! Runs one command on a loaded scenario. Input problems throw; failed laws
  //! are recorded in the verdict.
  inline Verdict execute(std::string const& command, Scenario const& s) {
    Verdict v;
    v.command = command;
    using namespace detail;
    if (command == "ginverse") {
      ginverse(expect<MatrixScenario>(s, command), v);
    } else if (command == "check-chain") {
      check_chain(expect<ChainScenario>(s, command), v);
    } else if (command == "verify-cocycle") {
      verify_cocycles(s, v);
    } else if (command == "obstruction-degree") {
      degrees(s, v);
    } else if (command == "lift") {
      lift(expect<LiftScenario>(s, command), v);
    } else if (command == "cocycle-morphism") {
      morphism(expect<CategoryScenario>(s, command), v);
    } else if (command == "tensor") {
      tensor(s, v);
    } else if (command == "dual") {
      dual(s, v);
    } else if (command == "pairing") {
      pairing(s, v);
    } else if (command == "functor-check") {
      functor(expect<FunctorScenario>(s, command), v);
    } else if (command == "algebra-check") {
      algebra(s, v);
    } else if (command == "hopf-check") {
      hopf(expect<BialgebraScenario>(s, command), v);
    } else if (command == "module-check") {
      module_check(expect<ModuleScenario>(s, command), v);
    } else if (command == "tqft-check") {
      tqft(expect<TqftScenario>(s, command), v);
    } else {
      throw SchemaError("unknown command \"" + command + "\"");
    }
    return v;
  }

  //! Loads, executes and renders. Returns 0 on pass, 1 on a failed law and 2 on
  //! any input error.
  inline int run(std::string const& command, std::string const& path, Options const& options,
                 std::ostream& out, std::ostream& err) {
    try {
      auto scenario = load_scenario(path);
      auto verdict  = execute(command, scenario);
      if (options.stop_on_first_failure) {
        verdict.truncate_after_failure();
      }
      out << (options.report == ReportFormat::json ? render_json(verdict) : render_text(verdict));
      return verdict.passed() ? 0 : 1;
    } catch (RationalFormatError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }

}  // namespace regcat::cli
