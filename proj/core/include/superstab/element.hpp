/*
 *   Copyright 2026 The superstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace superstab {

/// A strictly positive real. The natural log is carried alongside the value
/// so that deep orbit points keep an accurate logarithm.
struct PosReal {
  double value = 1.0;
  double log = 0.0;
};

using Exponent = std::int64_t;
using ExpVector = std::vector<Exponent>;

/// A point of a commutative semigroup: either a positive real under
/// multiplication or an exponent vector of the free commutative monoid.
class Element {
 public:
  /// The multiplicative identity of the positive reals.
  Element() = default;

  /// Throws DomainError unless `value` is finite and > 0.
  static Element real(double value);
  static Element real_with_log(double value, double log);
  /// Throws DomainError on negative components.
  static Element exponents(ExpVector exps);

  bool is_real() const noexcept { return std::holds_alternative<PosReal>(payload_); }
  bool is_exponents() const noexcept { return !is_real(); }

  /// Value of a positive real. Throws DomainError for exponent vectors.
  double value() const;
  /// ln of a positive real. Throws DomainError for exponent vectors.
  double log_value() const;
  /// Exponents of a free-monoid element. Throws DomainError for reals.
  const ExpVector& exps() const;
  std::size_t arity() const noexcept;

  /// Canonical text form: shortest round-trip decimal for reals, "(1,0,2)"
  /// for exponent vectors. Used as a JSON map key.
  std::string key() const;
  static Element from_key(std::string_view key);

  /// Reals order by value, exponent vectors lexicographically; every real
  /// orders before every exponent vector.
  friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs);
  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  std::variant<PosReal, ExpVector> payload_;
};

std::string to_string(const Element& e);

}  // namespace superstab
