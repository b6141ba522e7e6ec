#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcat/error.hpp"
#include "regcat/gen_inverse.hpp"
#include "regcat/linear.hpp"
#include "regcat/matrix.hpp"

namespace regcat {

  //! An even-length sequence [f, f*, f**, ...] alternating between X → Y and
  //! Y → X. Position k holds the map with k stars.
  class StarChain {
   public:
    explicit StarChain(std::vector<Matrix> maps) : _maps(std::move(maps)) {
      if (_maps.size() % 2 == 1) {
        throw OddChainLength("star chains need an even length, got "
                             + std::to_string(_maps.size()));
      }
      if (_maps.empty()) {
        throw PreconditionViolated("a star chain needs at least two maps");
      }
      Matrix const& f = _maps.front();
      for (std::size_t k = 0; k < _maps.size(); ++k) {
        bool forward = k % 2 == 0;
        std::size_t rows = forward ? f.rows() : f.cols();
        std::size_t cols = forward ? f.cols() : f.rows();
        if (_maps[k].rows() != rows || _maps[k].cols() != cols) {
          throw DimensionMismatch("chain position " + std::to_string(k) + " should be "
                                  + std::to_string(rows) + "x" + std::to_string(cols)
                                  + ", got " + _maps[k].shape());
        }
      }
    }

    std::size_t n() const noexcept { return _maps.size(); }
    std::vector<Matrix> const& maps() const noexcept { return _maps; }
    Matrix const& operator[](std::size_t k) const { return _maps.at(k); }

    //! maps[k] ∘ maps[k+1] ∘ ... ∘ maps[k+n-1] (indices mod n).
    Matrix cyclic_product(std::size_t k) const {
      Matrix out = _maps[k % n()];
      for (std::size_t j = 1; j < n(); ++j) {
        out = out * _maps[(k + j) % n()];
      }
      return out;
    }

    //! The chain rotated by `shift` positions; only even shifts keep f in front.
    StarChain rotated(std::size_t shift) const {
      std::vector<Matrix> out;
      for (std::size_t j = 0; j < n(); ++j) {
        out.push_back(_maps[(shift + j) % n()]);
      }
      return StarChain(std::move(out));
    }

    friend bool operator==(StarChain const&, StarChain const&) = default;

   private:
    std::vector<Matrix> _maps;
  };

  struct StarChainCheck {
    bool regular = false;
    std::optional<std::size_t> failing_index;  // 0-based chain position
    std::optional<Vector> witness;
  };

  //! Tests every cyclic identity maps[k] ∘ ... ∘ maps[k-1] ∘ maps[k] = maps[k].
  inline StarChainCheck check_star_chain(StarChain const& chain) {
    for (std::size_t k = 0; k < chain.n(); ++k) {
      Matrix lhs = chain.cyclic_product(k) * chain[k];
      if (auto diff = first_difference(lhs, chain[k])) {
        return {false, k, std::move(diff)};
      }
    }
    return {true, std::nullopt, std::nullopt};
  }

  //! f ∘ f* ∘ ... ∘ f^(n-1 stars), an idempotent on Y fixing Im f.
  inline Matrix higher_projector(StarChain const& chain) {
    auto check = check_star_chain(chain);
    if (!check.regular) {
      throw NotNRegular("chain identity fails at position "
                        + std::to_string(*check.failing_index));
    }
    Matrix p = chain.cyclic_product(0);
    if (!(p * p == p && p * chain[0] == chain[0])) {
      throw InternalError("higher projector is not an idempotent fixing f");
    }
    return p;
  }

  //! [f, g, f, g, ...] with g the default generalized inverse of f.
  inline StarChain build_default_chain(Matrix const& f, std::size_t n) {
    if (n % 2 == 1) {
      throw OddChainLength("star chains need an even length, got " + std::to_string(n));
    }
    Matrix g = generalized_inverse(f);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < n; ++k) {
      maps.push_back(k % 2 == 0 ? f : g);
    }
    return StarChain(std::move(maps));
  }

  struct FourToTwoReport {
    // Hypotheses.
    bool star_is_generalized_inverse = false;  // f* comes from a pair of projectors
    bool stars_agree_on_image        = false;  // f*|Im f = f***|Im f
    // Conclusions.
    bool four_regular = false;  // f∘f*∘f**∘f***∘f = f
    bool inner_law    = false;  // f∘f*∘f = f
    bool star_law     = false;  // f*∘f**∘f* = f*

    bool hypothesis() const { return star_is_generalized_inverse && stars_agree_on_image; }
  };

  //! Evaluates the hypotheses and both sides of the 4-to-2 reduction without
  //! throwing on disagreement.
  inline FourToTwoReport analyze_4_to_2(StarChain const& chain) {
    if (chain.n() != 4) {
      throw DimensionMismatch("the 4-to-2 reduction needs a chain of length 4, got "
                              + std::to_string(chain.n()));
    }
    Matrix const& f  = chain[0];
    Matrix const& f1 = chain[1];
    Matrix const& f2 = chain[2];
    Matrix const& f3 = chain[3];
    FourToTwoReport r;
    r.star_is_generalized_inverse = is_generalized_inverse(f, f1);
    Matrix on_image = image(f).basis().transpose();
    r.stars_agree_on_image = f1 * on_image == f3 * on_image;
    r.four_regular = f * f1 * f2 * f3 * f == f;
    r.inner_law    = f * f1 * f == f;
    r.star_law     = f1 * f2 * f1 == f1;
    return r;
  }

  //! Returns whether the reduction's hypotheses hold. When they do, the
  //! 4-regularity identity must be equivalent to the pair of 2-regularity laws;
  //! a disagreement raises TheoremContradiction.
  inline bool reduce_4_to_2(StarChain const& chain) {
    auto r = analyze_4_to_2(chain);
    if (!r.hypothesis()) {
      return false;
    }
    if (r.four_regular != (r.inner_law && r.star_law)) {
      throw TheoremContradiction(
          std::string("4-regularity is ") + (r.four_regular ? "true" : "false")
          + " but f∘f*∘f = f is " + (r.inner_law ? "true" : "false")
          + " and f*∘f**∘f* = f* is " + (r.star_law ? "true" : "false"));
    }
    return true;
  }

}  // namespace regcat
