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

#include "arpq/qasm.hpp"

#include <charconv>
#include <cctype>
#include <numbers>
#include <sstream>

#include "arpq/error.hpp"

namespace arpq {

namespace {

std::string format_angle(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw InvalidInput("qasm line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) bad(line, "bad number '" + std::string(s) + "'");
  return v;
}

// number | [-]pi | [-]number*pi | [-]pi/number | number*pi/number
double parse_angle(std::string expr, std::size_t line) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.find("pi") == std::string::npos) return parse_number(s, line);
  double sign = 1.0;
  if (!s.empty() && s[0] == '-') {
    sign = -1.0;
    s.erase(0, 1);
  }
  double factor = 1.0, divisor = 1.0;
  auto pi = s.find("pi");
  std::string before = s.substr(0, pi), after = s.substr(pi + 2);
  if (!before.empty()) {
    if (before.back() != '*') bad(line, "bad angle '" + expr + "'");
    factor = parse_number(std::string_view(before).substr(0, before.size() - 1), line);
  }
  if (!after.empty()) {
    if (after.front() != '/') bad(line, "bad angle '" + expr + "'");
    divisor = parse_number(std::string_view(after).substr(1), line);
  }
  return sign * factor * std::numbers::pi / divisor;
}

std::uint32_t parse_qubit(const std::string& operand, std::size_t line) {
  std::string s = trim(operand);
  if (s.size() < 4 || s.rfind("q[", 0) != 0 || s.back() != ']') bad(line, "bad qubit operand '" + s + "'");
  std::uint32_t q = 0;
  auto res = std::from_chars(s.data() + 2, s.data() + s.size() - 1, q);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() - 1) bad(line, "bad qubit index '" + s + "'");
  return q;
}

}  // namespace

std::string export_qasm(const Circuit& c, std::span<const double> params) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "// qubit 0 is the least significant bit of a measured bitstring\n";
  out << "qreg q[" << c.width() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::h:
        out << "h q[" << g.target << "];\n";
        break;
      case GateKind::rz:
        out << "rz(" << format_angle(g.angle.value(params)) << ") q[" << g.target << "];\n";
        break;
      case GateKind::rx:
        out << "rx(" << format_angle(g.angle.value(params)) << ") q[" << g.target << "];\n";
        break;
      case GateKind::cx:
        out << "cx q[" << g.control << "],q[" << g.target << "];\n";
        break;
    }
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto c = raw.find("//"); c != std::string::npos) raw.erase(c);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.back() != ';') bad(line_no, "missing ';'");
    line = trim(std::string_view(line).substr(0, line.size() - 1));
    if (line.rfind("OPENQASM", 0) == 0) {
      if (trim(std::string_view(line).substr(8)) != "2.0") bad(line_no, "only OpenQASM 2.0 is supported");
      header = true;
      continue;
    }
    if (!header) bad(line_no, "missing OPENQASM header");
    if (line.rfind("include", 0) == 0 || line.rfind("creg", 0) == 0 || line.rfind("barrier", 0) == 0 ||
        line.rfind("measure", 0) == 0)
      continue;
    if (line.rfind("qreg", 0) == 0) {
      if (circuit) bad(line_no, "only one quantum register is supported");
      std::string reg = trim(std::string_view(line).substr(4));
      if (reg.rfind("q[", 0) != 0) bad(line_no, "register must be named q");
      circuit.emplace(parse_qubit(reg, line_no));
      continue;
    }
    if (!circuit) bad(line_no, "gate before qreg declaration");
    std::string name, operands;
    std::optional<double> angle;
    if (auto open = line.find('('); open != std::string::npos) {
      auto close = line.find(')', open);
      if (close == std::string::npos) bad(line_no, "unbalanced parenthesis");
      name = trim(std::string_view(line).substr(0, open));
      angle = parse_angle(line.substr(open + 1, close - open - 1), line_no);
      operands = line.substr(close + 1);
    } else {
      auto space = line.find_first_of(" \t");
      if (space == std::string::npos) bad(line_no, "missing operands");
      name = line.substr(0, space);
      operands = line.substr(space + 1);
    }
    try {
      if (name == "h" && !angle) {
        circuit->add(Gate::h(parse_qubit(operands, line_no)));
      } else if (name == "rz" && angle) {
        circuit->add(Gate::rz(parse_qubit(operands, line_no), Angle::literal(*angle)));
      } else if (name == "rx" && angle) {
        circuit->add(Gate::rx(parse_qubit(operands, line_no), Angle::literal(*angle)));
      } else if ((name == "cx" || name == "CX") && !angle) {
        auto comma = operands.find(',');
        if (comma == std::string::npos) bad(line_no, "cx needs two operands");
        circuit->add(Gate::cx(parse_qubit(operands.substr(0, comma), line_no),
                              parse_qubit(operands.substr(comma + 1), line_no)));
      } else {
        bad(line_no, "unsupported statement '" + name + "'");
      }
    } catch (const InvalidInput& e) {
      if (std::string(e.what()).rfind("qasm line", 0) == 0) throw;
      bad(line_no, e.what());
    }
  }
  if (!circuit) throw InvalidInput("qasm text declares no quantum register");
  return *circuit;
}

}  // namespace arpq
