#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regcat/cli/json_io.hpp"
#include "regcat/matrix.hpp"

namespace regcat::cli {

  struct Check {
    std::string law;
    std::string anchor;
    bool passed = false;
    std::optional<std::string> witness;
  };

  struct Verdict {
    std::string command;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<Check> checks;

    bool passed() const {
      for (auto const& c : checks) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }

    std::size_t failures() const {
      std::size_t n = 0;
      for (auto const& c : checks) {
        n += c.passed ? 0 : 1;
      }
      return n;
    }

    void value(std::string name, std::string text) { values.emplace_back(std::move(name), std::move(text)); }

    //! Appends a check and returns whether it passed.
    bool add(Check c) {
      checks.push_back(std::move(c));
      return checks.back().passed;
    }

    //! Drops every check after the first failure.
    void truncate_after_failure() {
      for (std::size_t i = 0; i < checks.size(); ++i) {
        if (!checks[i].passed) {
          checks.resize(i + 1);
          return;
        }
      }
    }
  };

  inline std::string str(Matrix const& m) {
    std::ostringstream os;
    os << m;
    return os.str();
  }

  //! lhs = rhs, with the first differing column as witness.
  inline Check law(std::string name, std::string anchor, Matrix const& lhs, Matrix const& rhs) {
    Check c{std::move(name), std::move(anchor), true, std::nullopt};
    if (auto diff = first_difference(lhs, rhs)) {
      std::size_t j = 0;
      while ((*diff)[j] == 0) {
        ++j;
      }
      c.passed  = false;
      c.witness = "at e" + std::to_string(j + 1) + ": " + to_string(lhs.col(j)) + " vs "
                  + to_string(rhs.col(j));
    }
    return c;
  }

  inline Check claim(std::string name, std::string anchor, bool ok,
                     std::optional<std::string> witness = std::nullopt) {
    return {std::move(name), std::move(anchor), ok, ok ? std::nullopt : std::move(witness)};
  }

  inline std::string render_text(Verdict const& v) {
    std::ostringstream os;
    os << v.command << "\n";
    for (auto const& [name, text] : v.values) {
      os << "  " << name << " = " << text << "\n";
    }
    for (auto const& c : v.checks) {
      os << (c.passed ? "[pass] " : "[FAIL] ") << c.law << "  (" << c.anchor << ")\n";
      if (c.witness) {
        os << "       witness " << *c.witness << "\n";
      }
    }
    if (v.passed()) {
      os << "verdict: pass, " << v.checks.size() << " checks\n";
    } else {
      os << "verdict: FAIL, " << v.failures() << " of " << v.checks.size() << " checks failed\n";
    }
    return os.str();
  }

  inline ordered_json verdict_json(Verdict const& v) {
    ordered_json out;
    out["command"] = v.command;
    out["passed"]  = v.passed();
    out["values"]  = ordered_json::array();
    for (auto const& [name, text] : v.values) {
      out["values"].push_back({{"name", name}, {"value", text}});
    }
    out["checks"] = ordered_json::array();
    for (auto const& c : v.checks) {
      ordered_json j{{"law", c.law}, {"anchor", c.anchor}, {"passed", c.passed}};
      if (c.witness) {
        j["witness"] = *c.witness;
      }
      out["checks"].push_back(j);
    }
    return out;
  }

  inline std::string render_json(Verdict const& v) { return verdict_json(v).dump(2) + "\n"; }

}  // namespace regcat::cli
