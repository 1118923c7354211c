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

#include <string>
#include <vector>

#include "superstab/element.hpp"

namespace superstab {

enum class SemigroupKind {
  PositiveReals,          ///< ((0, inf), *), identity 1
  FreeCommutativeMonoid,  ///< (N^k, +) over k named generators, identity 0
};

/// A commutative semigroup with identity. Values are immutable; every member
/// function is a pure function of its arguments.
class Semigroup {
 public:
  static Semigroup positive_reals();
  /// Throws DomainError when `generator_names` is empty.
  static Semigroup free_monoid(std::vector<std::string> generator_names);

  SemigroupKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& generator_names() const noexcept { return generators_; }
  std::size_t arity() const noexcept { return generators_.size(); }

  Element identity() const;
  /// The i-th free generator, e_i. Throws DomainError for the positive reals.
  Element generator(std::size_t i) const;

  bool contains(const Element& x) const noexcept;

  /// The semigroup product xy. Throws DomainError on a family or arity
  /// mismatch and RangeError when the product is not representable.
  Element combine(const Element& x, const Element& y) const;

  /// a^n, with a^0 the identity. Throws RangeError on overflow; callers
  /// iterating along an orbit must then reduce the depth.
  Element power(const Element& a, std::int64_t n) const;

  /// A nonnegative scalar size of an element: the value itself for positive
  /// reals, 1 + sum of exponents for exponent vectors. Nondecreasing along
  /// every orbit y, ay, a^2 y, ... whose anchor has size >= 1.
  double magnitude(const Element& x) const;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  Semigroup(SemigroupKind kind, std::vector<std::string> generators)
      : kind_(kind), generators_(std::move(generators)) {}

  void require_member(const Element& x) const;

  SemigroupKind kind_;
  std::vector<std::string> generators_;
};

const char* to_string(SemigroupKind kind) noexcept;

}  // namespace superstab
