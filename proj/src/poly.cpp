// Copyright 2026 The arpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arpq/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "arpq/error.hpp"

namespace arpq {

namespace {

void normalise(Monomial& m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void accumulate(std::map<Monomial, double>& terms, Monomial m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms.erase(it);
  }
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::uint32_t VarRegistry::add(const VarId& id, std::string name) {
  if (by_id_.count(id) > 0) throw InvalidInput("variable '" + name + "' registered twice");
  if (by_name_.count(name) > 0) throw InvalidInput("variable name '" + name + "' registered twice");
  auto q = static_cast<std::uint32_t>(ids_.size());
  ids_.push_back(id);
  by_id_.emplace(id, q);
  by_name_.emplace(name, q);
  names_.push_back(std::move(name));
  return q;
}

std::optional<std::uint32_t> VarRegistry::find(const VarId& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> VarRegistry::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

RegistryPtr merged_registry(const PBPoly& a, const PBPoly& b) {
  if (a.registry_ && b.registry_ && a.registry_ != b.registry_)
    throw InvalidInput("registry mismatch between polynomials");
  return a.registry_ ? a.registry_ : b.registry_;
}

PBPoly PBPoly::constant(double c, RegistryPtr registry) {
  PBPoly p(std::move(registry));
  p.constant_ = c;
  return p;
}

PBPoly PBPoly::variable(std::uint32_t q, RegistryPtr registry) {
  if (registry && q >= registry->size()) throw InvalidInput("variable index out of range");
  PBPoly p(std::move(registry));
  p.terms_.emplace(Monomial{q}, 1.0);
  return p;
}

void PBPoly::add_term(Monomial vars, double c) {
  normalise(vars);
  if (vars.empty()) {
    constant_ += c;
    return;
  }
  accumulate(terms_, std::move(vars), c);
}

double PBPoly::coefficient(const Monomial& m) const {
  if (m.empty()) return constant_;
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t PBPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.size());
  return d;
}

std::size_t PBPoly::variable_bound() const {
  std::size_t bound = 0;
  for (const auto& [m, _] : terms_) bound = std::max<std::size_t>(bound, m.back() + 1);
  return bound;
}

PBPoly& PBPoly::operator+=(const PBPoly& other) {
  registry_ = merged_registry(*this, other);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
  constant_ += other.constant_;
  return *this;
}

PBPoly& PBPoly::operator-=(const PBPoly& other) {
  registry_ = merged_registry(*this, other);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, -c);
  constant_ -= other.constant_;
  return *this;
}

PBPoly& PBPoly::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    constant_ = 0.0;
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  constant_ *= c;
  return *this;
}

PBPoly operator*(const PBPoly& a, const PBPoly& b) {
  PBPoly out(merged_registry(a, b));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) accumulate(out.terms_, merge(ma, mb), ca * cb);
    accumulate(out.terms_, ma, ca * b.constant_);
  }
  for (const auto& [mb, cb] : b.terms_) accumulate(out.terms_, mb, a.constant_ * cb);
  out.constant_ = a.constant_ * b.constant_;
  return out;
}

PBPoly add(const PBPoly& p, const PBPoly& q) { return p + q; }
PBPoly scale(const PBPoly& p, double c) { return p * c; }
PBPoly multiply(const PBPoly& p, const PBPoly& q) { return p * q; }

std::pair<PBPoly, double> drop_constant(const PBPoly& p) {
  PBPoly out = p;
  double c = p.constant_term();
  out.add_constant(-c);
  return {std::move(out), c};
}

PBPoly substitute(const PBPoly& p, std::uint32_t q, bool bit) {
  PBPoly out(p.registry());
  out.add_constant(p.constant_term());
  for (const auto& [m, c] : p.terms()) {
    auto pos = std::lower_bound(m.begin(), m.end(), q);
    if (pos == m.end() || *pos != q) {
      out.add_term(m, c);
    } else if (bit) {
      Monomial rest(m.begin(), pos);
      rest.insert(rest.end(), pos + 1, m.end());
      out.add_term(std::move(rest), c);
    }
  }
  return out;
}

double evaluate(const PBPoly& p, std::span<const std::uint8_t> assignment) {
  if (p.variable_bound() > assignment.size())
    throw InvalidInput("assignment does not cover every variable of the polynomial");
  double value = p.constant_term();
  for (const auto& [m, c] : p.terms()) {
    bool on = std::all_of(m.begin(), m.end(), [&](std::uint32_t q) { return assignment[q] != 0; });
    if (on) value += c;
  }
  return value;
}

void SpinPoly::add_term(Monomial qubits, double c) {
  std::sort(qubits.begin(), qubits.end());
  // z^2 = 1: pairs of equal indices cancel.
  Monomial reduced;
  for (std::size_t i = 0; i < qubits.size();) {
    std::size_t j = i;
    while (j < qubits.size() && qubits[j] == qubits[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(qubits[i]);
    i = j;
  }
  if (reduced.empty()) {
    constant_ += c;
    return;
  }
  if (reduced.back() >= width_) width_ = reduced.back() + 1;
  accumulate(terms_, std::move(reduced), c);
}

std::size_t SpinPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.size());
  return d;
}

SpinPoly to_spin(const PBPoly& p, std::optional<std::size_t> width) {
  SpinPoly s(width.value_or(p.variable_bound()));
  s.add_constant(p.constant_term());
  for (const auto& [m, c] : p.terms()) {
    if (m.size() >= 63) throw InvalidInput("term too long for spin conversion");
    const double share = c / static_cast<double>(std::uint64_t{1} << m.size());
    const std::uint64_t subsets = std::uint64_t{1} << m.size();
    for (std::uint64_t sub = 0; sub < subsets; ++sub) {
      Monomial z;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (sub >> k & 1U) z.push_back(m[k]);
      s.add_term(std::move(z), share);
    }
  }
  return s;
}

double evaluate_spin(const SpinPoly& s, std::span<const std::int8_t> spins) {
  double value = s.constant_term();
  for (const auto& [m, c] : s.terms()) {
    int sign = 1;
    for (std::uint32_t q : m) {
      if (q >= spins.size()) throw InvalidInput("spin assignment too short");
      sign *= spins[q];
    }
    value += sign * c;
  }
  return value;
}

CompiledPoly::CompiledPoly(const PBPoly& p) : constant_(p.constant_term()) {
  if (p.variable_bound() > 64) throw InvalidInput("compiled evaluation supports at most 64 variables");
  terms_.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t mask = 0;
    for (std::uint32_t q : m) mask |= std::uint64_t{1} << q;
    terms_.emplace_back(mask, c);
  }
}

double CompiledPoly::operator()(std::uint64_t bits) const {
  double value = constant_;
  for (const auto& [mask, c] : terms_)
    if ((bits & mask) == mask) value += c;
  return value;
}

std::vector<double> energy_table(const PBPoly& p, std::size_t width) {
  if (width > 30) throw WidthCapExceeded("energy table limited to 30 variables");
  if (p.variable_bound() > width) throw InvalidInput("polynomial references variables beyond width");
  const std::size_t size = std::size_t{1} << width;
  std::vector<double> table(size, 0.0);
  for (const auto& [m, c] : p.terms()) {
    std::size_t mask = 0;
    for (std::uint32_t q : m) mask |= std::size_t{1} << q;
    table[mask] += c;
  }
  table[0] += p.constant_term();
  for (std::size_t bit = 0; bit < width; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t b = 0; b < size; ++b)
      if (b & step) table[b] += table[b ^ step];
  }
  return table;
}

std::vector<std::uint8_t> to_assignment(std::uint64_t bits, std::size_t width) {
  std::vector<std::uint8_t> out(width);
  for (std::size_t q = 0; q < width; ++q) out[q] = static_cast<std::uint8_t>(q < 64 && (bits >> q & 1U));
  return out;
}

std::uint64_t from_assignment(std::span<const std::uint8_t> assignment) {
  if (assignment.size() > 64) throw InvalidInput("assignment wider than 64 bits");
  std::uint64_t bits = 0;
  for (std::size_t q = 0; q < assignment.size(); ++q)
    if (assignment[q]) bits |= std::uint64_t{1} << q;
  return bits;
}

std::string bitstring(std::uint64_t bits, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t q = 0; q < width; ++q)
    if (q < 64 && (bits >> q & 1U)) out[width - 1 - q] = '1';
  return out;
}

std::string to_text(const PBPoly& p) {
  std::ostringstream out;
  const auto& reg = p.registry();
  if (p.constant_term() != 0.0 || p.terms().empty()) out << format_double(p.constant_term()) << '\n';
  for (const auto& [m, c] : p.terms()) {
    out << format_double(c) << " *";
    for (std::uint32_t q : m) {
      out << ' ';
      if (reg && q < reg->size()) {
        out << reg->name(q);
      } else {
        out << 'q' << q;
      }
    }
    out << '\n';
  }
  return out.str();
}

PBPoly parse_poly_text(std::string_view text, RegistryPtr registry) {
  PBPoly out(registry);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    std::istringstream tokens(line);
    std::string coeff_tok;
    if (!(tokens >> coeff_tok)) {
      if (eol == text.size()) break;
      continue;
    }
    double coeff = 0.0;
    auto res = std::from_chars(coeff_tok.data(), coeff_tok.data() + coeff_tok.size(), coeff);
    if (res.ec != std::errc() || res.ptr != coeff_tok.data() + coeff_tok.size())
      throw InvalidInput("line " + std::to_string(line_no) + ": bad coefficient '" + coeff_tok + "'");
    std::string star;
    if (!(tokens >> star)) {
      out.add_constant(coeff);
      continue;
    }
    if (star != "*") throw InvalidInput("line " + std::to_string(line_no) + ": expected '*'");
    Monomial vars;
    std::string name;
    while (tokens >> name) {
      if (registry) {
        auto q = registry->find(name);
        if (!q) throw InvalidInput("line " + std::to_string(line_no) + ": unknown variable '" + name + "'");
        vars.push_back(*q);
      } else {
        std::uint32_t q = 0;
        auto r = std::from_chars(name.data() + 1, name.data() + name.size(), q);
        if (name.size() < 2 || name[0] != 'q' || r.ec != std::errc() || r.ptr != name.data() + name.size())
          throw InvalidInput("line " + std::to_string(line_no) + ": bad variable '" + name + "'");
        vars.push_back(q);
      }
    }
    if (vars.empty()) throw InvalidInput("line " + std::to_string(line_no) + ": term without variables");
    out.add_term(std::move(vars), coeff);
  }
  return out;
}

}  // namespace arpq
