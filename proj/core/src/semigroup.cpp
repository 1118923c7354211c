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

#include "superstab/semigroup.hpp"

#include <cmath>

#include "superstab/errors.hpp"

namespace superstab {

Semigroup Semigroup::positive_reals() { return Semigroup(SemigroupKind::PositiveReals, {}); }

Semigroup Semigroup::free_monoid(std::vector<std::string> generator_names) {
  if (generator_names.empty()) {
    throw DomainError("a free commutative monoid needs at least one generator");
  }
  return Semigroup(SemigroupKind::FreeCommutativeMonoid, std::move(generator_names));
}

Element Semigroup::identity() const {
  if (kind_ == SemigroupKind::PositiveReals) return Element::real(1.0);
  return Element::exponents(ExpVector(arity(), 0));
}

Element Semigroup::generator(std::size_t i) const {
  if (kind_ == SemigroupKind::PositiveReals) {
    throw DomainError("the positive reals have no named generators");
  }
  if (i >= arity()) throw DomainError("generator index out of range");
  ExpVector e(arity(), 0);
  e[i] = 1;
  return Element::exponents(std::move(e));
}

bool Semigroup::contains(const Element& x) const noexcept {
  if (kind_ == SemigroupKind::PositiveReals) return x.is_real();
  return x.is_exponents() && x.arity() == arity();
}

void Semigroup::require_member(const Element& x) const {
  if (!contains(x)) {
    throw DomainError("element " + x.key() + " does not belong to the " +
                      to_string(kind_) + " semigroup of arity " + std::to_string(arity()));
  }
}

Element Semigroup::combine(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  if (kind_ == SemigroupKind::PositiveReals) {
    return Element::real_with_log(x.value() * y.value(), x.log_value() + y.log_value());
  }
  const auto& a = x.exps();
  const auto& b = y.exps();
  ExpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) {
      throw RangeError("exponent overflow combining " + x.key() + " and " + y.key());
    }
  }
  return Element::exponents(std::move(out));
}

Element Semigroup::power(const Element& a, std::int64_t n) const {
  require_member(a);
  if (n < 0) throw DomainError("negative powers are not defined in a semigroup");
  if (n == 0) return identity();
  if (n == 1) return a;
  if (kind_ == SemigroupKind::PositiveReals) {
    double log = static_cast<double>(n) * a.log_value();
    return Element::real_with_log(std::pow(a.value(), static_cast<double>(n)), log);
  }
  const auto& e = a.exps();
  ExpVector out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (__builtin_mul_overflow(e[i], n, &out[i])) {
      throw RangeError("exponent overflow in power " + a.key() + "^" + std::to_string(n) +
                       "; reduce the orbit depth");
    }
  }
  return Element::exponents(std::move(out));
}

double Semigroup::magnitude(const Element& x) const {
  require_member(x);
  if (kind_ == SemigroupKind::PositiveReals) return x.value();
  double sum = 1.0;
  for (Exponent v : x.exps()) sum += static_cast<double>(v);
  return sum;
}

const char* to_string(SemigroupKind kind) noexcept {
  switch (kind) {
    case SemigroupKind::PositiveReals:
      return "positive_reals";
    case SemigroupKind::FreeCommutativeMonoid:
      return "free_commutative_monoid";
  }
  return "unknown";
}

}  // namespace superstab
