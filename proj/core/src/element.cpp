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

#include "superstab/element.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "superstab/errors.hpp"

namespace superstab {

Element Element::real(double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("positive real element must be finite and > 0, got " +
                      std::to_string(value));
  }
  return real_with_log(value, std::log(value));
}

Element Element::real_with_log(double value, double log) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw RangeError("positive real element left the representable range (ln = " +
                     std::to_string(log) + ")");
  }
  Element e;
  e.payload_ = PosReal{value, log};
  return e;
}

Element Element::exponents(ExpVector exps) {
  for (Exponent v : exps) {
    if (v < 0) throw DomainError("exponent vectors must be nonnegative");
  }
  Element e;
  e.payload_ = std::move(exps);
  return e;
}

double Element::value() const {
  if (const auto* r = std::get_if<PosReal>(&payload_)) return r->value;
  throw DomainError("element " + key() + " is not a positive real");
}

double Element::log_value() const {
  if (const auto* r = std::get_if<PosReal>(&payload_)) return r->log;
  throw DomainError("element " + key() + " is not a positive real");
}

const ExpVector& Element::exps() const {
  if (const auto* v = std::get_if<ExpVector>(&payload_)) return *v;
  throw DomainError("element " + key() + " is not an exponent vector");
}

std::size_t Element::arity() const noexcept {
  if (const auto* v = std::get_if<ExpVector>(&payload_)) return v->size();
  return 0;
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string Element::key() const {
  if (const auto* r = std::get_if<PosReal>(&payload_)) return shortest(r->value);
  const auto& v = std::get<ExpVector>(payload_);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

Element Element::from_key(std::string_view key) {
  auto fail = [&] { return DomainError("malformed element key '" + std::string(key) + "'"); };
  if (key.empty()) throw fail();
  if (key.front() != '(') {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc{} || ptr != key.data() + key.size()) throw fail();
    return real(v);
  }
  if (key.back() != ')') throw fail();
  ExpVector exps;
  std::string_view body = key.substr(1, key.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    Exponent v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail();
    exps.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw fail();
  }
  return exponents(std::move(exps));
}

std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) {
  if (lhs.is_real() != rhs.is_real()) {
    return lhs.is_real() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (lhs.is_real()) {
    double a = std::get<PosReal>(lhs.payload_).value;
    double b = std::get<PosReal>(rhs.payload_).value;
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return std::get<ExpVector>(lhs.payload_) <=> std::get<ExpVector>(rhs.payload_);
}

bool operator==(const Element& lhs, const Element& rhs) { return (lhs <=> rhs) == 0; }

std::string to_string(const Element& e) { return e.key(); }

}  // namespace superstab
