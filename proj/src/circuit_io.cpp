#include "qsp/circuit_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "qsp/numfmt.hpp"

namespace qsp::io {

namespace {

struct KindSpec {
  GateKind kind;
  int num_qubits;
  bool has_angle;
};

std::optional<KindSpec> kind_from_token(std::string_view token) {
  if (token == "X") return KindSpec{GateKind::X, 1, false};
  if (token == "SX") return KindSpec{GateKind::Sx, 1, false};
  if (token == "H") return KindSpec{GateKind::H, 1, false};
  if (token == "S") return KindSpec{GateKind::S, 1, false};
  if (token == "SDG") return KindSpec{GateKind::Sdg, 1, false};
  if (token == "RZ") return KindSpec{GateKind::Rz, 1, true};
  if (token == "RY") return KindSpec{GateKind::Ry, 1, true};
  if (token == "CX") return KindSpec{GateKind::Cx, 2, false};
  if (token == "CZ") return KindSpec{GateKind::Cz, 2, false};
  if (token == "SWAP") return KindSpec{GateKind::Swap, 2, false};
  if (token == "CSWAP") return KindSpec{GateKind::Cswap, 3, false};
  if (token == "GLOBAL_PHASE") return KindSpec{GateKind::GlobalPhase, 0, true};
  return std::nullopt;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(token) +
                                "'");
  }
  return value;
}

double parse_angle(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end()) {
    throw std::invalid_argument("malformed angle: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string write_circuit(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.num_qubits << '\n';
  for (const Gate& g : circuit.instructions) {
    if (g.kind == GateKind::Unitary || g.kind == GateKind::Controlled) {
      throw std::invalid_argument(std::string(gate_kind_name(g.kind)) +
                                  " is not representable in the text format; flatten first");
    }
    os << gate_kind_name(g.kind);
    for (int q : g.qubits) os << ' ' << q;
    if (g.kind == GateKind::Rz || g.kind == GateKind::Ry || g.kind == GateKind::GlobalPhase) {
      // 17 significant digits round-trip a double exactly.
      os << ' ' << format_double(g.angle, 17);
    }
    os << '\n';
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const auto fail = [line_no](const std::string& msg) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };

    if (!circuit.has_value()) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        fail("expected header 'qubits N'");
      }
      const int n = parse_int(tokens[1], "qubit count");
      if (n < 1) fail("qubit count must be positive");
      circuit.emplace(n);
      continue;
    }

    const auto spec = kind_from_token(tokens[0]);
    if (!spec.has_value()) fail("unknown gate '" + std::string(tokens[0]) + "'");
    const size_t expected = 1 + static_cast<size_t>(spec->num_qubits) + (spec->has_angle ? 1 : 0);
    if (tokens.size() != expected) {
      fail(std::string(gate_kind_name(spec->kind)) + " expects " +
           std::to_string(spec->num_qubits) + " qubit(s)" +
           (spec->has_angle ? " and an angle" : ""));
    }
    Gate g;
    g.kind = spec->kind;
    for (int q = 0; q < spec->num_qubits; ++q) {
      g.qubits.push_back(parse_int(tokens[1 + static_cast<size_t>(q)], "qubit index"));
    }
    if (spec->has_angle) g.angle = parse_angle(tokens.back());
    try {
      circuit->push(std::move(g));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!circuit.has_value()) {
    throw std::invalid_argument("empty circuit text: missing 'qubits N' header");
  }
  return std::move(*circuit);
}

}  // namespace qsp::io
