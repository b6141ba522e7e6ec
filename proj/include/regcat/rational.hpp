#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace regcat {

  //! Exact rational, always held in lowest terms with a positive denominator.
  using Rational = boost::multiprecision::cpp_rational;
  using Integer  = boost::multiprecision::cpp_int;

  //! Raised by parse_rational on malformed input or a zero denominator.
  class RationalFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  namespace detail {
    // cpp_int reads a leading 0 as an octal prefix.
    inline std::string_view strip_zeros(std::string_view s) {
      while (s.size() > 1 && s.front() == '0') {
        s.remove_prefix(1);
      }
      return s;
    }

    inline bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! Parses "p", "-p", "p/q" or "-p/q" with decimal digits only.
  inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                            : body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw RationalFormatError("malformed rational \"" + std::string(text) + "\"");
    }
    Integer n{std::string(detail::strip_zeros(num))};
    Integer d{std::string(detail::strip_zeros(den))};
    if (d == 0) {
      throw RationalFormatError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational r(n, d);
    return negative ? Rational(-r) : r;
  }

  inline std::string to_string(Rational const& r) {
    if (denominator(r) == 1) {
      return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
  }

}  // namespace regcat
