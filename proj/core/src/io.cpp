// Copyright 2026 The holoqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holoqc/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace holoqc::io {

namespace {

using nlohmann::json;

// nlohmann keeps the last of duplicate keys; we refuse them instead.
json parse_strict(std::string_view text, const char* what) {
  std::vector<std::set<std::string>> open_objects;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case json::parse_event_t::key: {
        auto key = parsed.get<std::string>();
        if (!open_objects.back().insert(key).second) {
          throw InputError(std::string(what) + ": duplicate key \"" + key + "\"");
        }
        break;
      }
      case json::parse_event_t::object_end:
        open_objects.pop_back();
        break;
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& what) {
  if (!obj.is_object()) throw InputError(what + ": expected an object");
  for (const char* k : required) {
    if (!obj.contains(k)) throw InputError(what + ": missing key \"" + k + "\"");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || item.key() == k;
    for (const char* k : optional) known = known || item.key() == k;
    if (!known) throw InputError(what + ": unexpected key \"" + item.key() + "\"");
  }
}

std::size_t read_count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 ||
      j.get<std::int64_t>() > static_cast<std::int64_t>(kMaxQubits)) {
    throw InputError(what + ": \"n\" must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
  }
  return j.get<std::size_t>();
}

Complex read_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(what + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

HoloState read_amplitudes(const json& amps, std::size_t n, const std::string& what) {
  if (!amps.is_object()) throw InputError(what + ": amplitudes must be an object");
  HoloState::AmplitudeMap map;
  for (const auto& item : amps.items()) {
    const std::string& bits = item.key();
    if (bits.size() != n || bits.find_first_not_of("01") != std::string::npos) {
      throw InputError(what + ": key \"" + bits + "\" is not a " + std::to_string(n) +
                       "-character bit string");
    }
    map.emplace(bits_to_index(bits), read_complex(item.value(), what + " \"" + bits + "\""));
  }
  return HoloState(n, std::move(map));
}

void write_complex(std::ostream& out, Complex c) {
  out << '[' << format_double(c.real()) << ", " << format_double(c.imag()) << ']';
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

HoloState parse_state(std::string_view text) {
  const json j = parse_strict(text, "state file");
  require_keys(j, {"n", "amplitudes"}, {}, "state file");
  const std::size_t n = read_count(j["n"], "state file");
  return read_amplitudes(j["amplitudes"], n, "state file");
}

Circuit parse_circuit(std::string_view text) {
  const json j = parse_strict(text, "circuit file");
  require_keys(j, {"n", "gates"}, {}, "circuit file");
  Circuit circuit;
  circuit.nqubits = read_count(j["n"], "circuit file");
  if (!j["gates"].is_array()) throw InputError("circuit file: \"gates\" must be an array");

  std::size_t index = 0;
  for (const auto& g : j["gates"]) {
    const std::string where = "circuit file: gate " + std::to_string(++index);
    require_keys(g, {"kind", "qubits"}, {"u"}, where);
    if (!g["kind"].is_string()) throw InputError(where + ": \"kind\" must be a string");
    const auto name = g["kind"].get<std::string>();
    const auto kind = parse_gate_kind(name);
    if (!kind) throw InputError(where + ": unknown gate kind \"" + name + "\"");

    GateSpec spec{*kind, {}, std::nullopt};
    if (!g["qubits"].is_array()) throw InputError(where + ": \"qubits\" must be an array");
    for (const auto& q : g["qubits"]) {
      if (!q.is_number_integer() || q.get<std::int64_t>() < 1) {
        throw InputError(where + ": qubit indices are 1-based positive integers");
      }
      spec.qubits.push_back(q.get<std::size_t>() - 1);
    }
    if (g.contains("u")) {
      if (*kind != GateKind::CU) throw InputError(where + ": only CU takes a \"u\" payload");
      const auto& u = g["u"];
      if (!u.is_array() || u.size() != 2 || !u[0].is_array() || u[0].size() != 2 ||
          !u[1].is_array() || u[1].size() != 2) {
        throw InputError(where + ": \"u\" must be a 2x2 array of [re, im]");
      }
      Eigen::Matrix2cd m;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) m(r, c) = read_complex(u[r][c], where + " u");
      }
      spec.u = m;
    }
    try {
      validate(spec, circuit.nqubits);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    circuit.gates.push_back(std::move(spec));
  }
  return circuit;
}

StateLoop parse_loop(std::string_view text) {
  const json j = parse_strict(text, "loop file");
  require_keys(j, {"n", "states"}, {}, "loop file");
  const std::size_t n = read_count(j["n"], "loop file");
  if (!j["states"].is_array()) throw InputError("loop file: \"states\" must be an array");
  std::vector<HoloState> states;
  std::size_t index = 0;
  for (const auto& s : j["states"]) {
    states.push_back(read_amplitudes(s, n, "loop file: state " + std::to_string(++index)));
  }
  return StateLoop(std::move(states));
}

CoherentPoint parse_point(std::string_view text) {
  const json j = parse_strict(text, "point file");
  require_keys(j, {"n", "z"}, {}, "point file");
  const std::size_t n = read_count(j["n"], "point file");
  const auto& z = j["z"];
  if (!z.is_array() || z.size() != 2 * n) {
    throw InputError("point file: \"z\" must hold 2n = " + std::to_string(2 * n) + " entries");
  }
  CoherentPoint p{Eigen::VectorXcd(static_cast<Eigen::Index>(2 * n))};
  for (std::size_t k = 0; k < 2 * n; ++k) {
    p.z(static_cast<Eigen::Index>(k)) = read_complex(z[k], "point file z[" + std::to_string(k) + "]");
  }
  return p;
}

void write_state(std::ostream& out, const HoloState& state) {
  out << "{\n  \"n\": " << state.nqubits() << ",\n  \"amplitudes\": {";
  bool first = true;
  for (const auto& [index, c] : state.amplitudes()) {
    out << (first ? "\n" : ",\n") << "    \"" << index_to_bits(index, state.nqubits()) << "\": ";
    write_complex(out, c);
    first = false;
  }
  out << (first ? "}\n}\n" : "\n  }\n}\n");
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "{\n  \"n\": " << circuit.nqubits << ",\n  \"gates\": [";
  bool first = true;
  for (const auto& g : circuit.gates) {
    out << (first ? "\n" : ",\n") << "    { \"kind\": \"" << to_string(g.kind) << "\", \"qubits\": [";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) out << (i ? ", " : "") << g.qubits[i] + 1;
    out << ']';
    if (g.u) {
      out << ", \"u\": [";
      for (int r = 0; r < 2; ++r) {
        out << (r ? ", [" : "[");
        write_complex(out, (*g.u)(r, 0));
        out << ", ";
        write_complex(out, (*g.u)(r, 1));
        out << ']';
      }
      out << ']';
    }
    out << " }";
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\" for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open \"" + tmp.string() + "\" for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("write to \"" + tmp.string() + "\" failed");
  }
  fs::rename(tmp, target);
}

}  // namespace holoqc::io
