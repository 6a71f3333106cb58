#include "frqaoa/circuit_json.hpp"

#include <fstream>
#include <stdexcept>

namespace frqaoa {

using nlohmann::json;

namespace {

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

Axis axis_from_name(const std::string& s) {
  if (s == "X") return Axis::X;
  if (s == "Y") return Axis::Y;
  if (s == "Z") return Axis::Z;
  throw std::invalid_argument("unknown axis: " + s);
}

}  // namespace

json circuit_to_json(const Circuit& c) {
  validate(c);
  json jc;
  jc["n_qubits"] = c.n_qubits;
  json cycles = json::array();
  for (const Cycle& cy : c.cycles) {
    json jcy;
    jcy["class"] = cycle_class_name(cy.cls);
    json gates = json::array();
    for (const Gate& g : cy.gates) {
      json jg;
      jg["kind"] = kind_name(g.kind);
      jg["qubits"] = g.qubits;
      if (g.angle) jg["angle"] = *g.angle;
      if (g.kind == GateKind::C1) {
        jg["clifford"] = g.clifford;
        if (g.axis) jg["axis"] = axis_name(*g.axis);
      }
      gates.push_back(std::move(jg));
    }
    jcy["gates"] = std::move(gates);
    cycles.push_back(std::move(jcy));
  }
  jc["cycles"] = std::move(cycles);
  return jc;
}

Circuit circuit_from_json(const json& j) {
  auto fail = [](const std::string& path, const std::string& what) {
    throw std::invalid_argument("circuit json: " + path + ": " + what);
  };
  if (!j.is_object()) fail("$", "expected object");
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
    fail("$.n_qubits", "missing or not an integer");
  if (!j.contains("cycles") || !j["cycles"].is_array()) fail("$.cycles", "missing or not an array");

  Circuit c;
  c.n_qubits = j["n_qubits"].get<int>();
  for (std::size_t ci = 0; ci < j["cycles"].size(); ++ci) {
    const json& jcy = j["cycles"][ci];
    const std::string cpath = "$.cycles[" + std::to_string(ci) + "]";
    if (!jcy.is_object()) fail(cpath, "expected object");
    if (!jcy.contains("class") || !jcy["class"].is_string()) fail(cpath + ".class", "missing or not a string");
    if (!jcy.contains("gates") || !jcy["gates"].is_array()) fail(cpath + ".gates", "missing or not an array");
    Cycle cy;
    try {
      cy.cls = cycle_class_from_name(jcy["class"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(cpath + ".class", e.what());
    }
    for (std::size_t gi = 0; gi < jcy["gates"].size(); ++gi) {
      const json& jg = jcy["gates"][gi];
      const std::string gpath = cpath + ".gates[" + std::to_string(gi) + "]";
      if (!jg.is_object()) fail(gpath, "expected object");
      if (!jg.contains("kind") || !jg["kind"].is_string()) fail(gpath + ".kind", "missing or not a string");
      if (!jg.contains("qubits") || !jg["qubits"].is_array()) fail(gpath + ".qubits", "missing or not an array");
      Gate g;
      try {
        g.kind = kind_from_name(jg["kind"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        fail(gpath + ".kind", e.what());
      }
      for (const json& q : jg["qubits"]) {
        if (!q.is_number_integer()) fail(gpath + ".qubits", "entries must be integers");
        g.qubits.push_back(q.get<int>());
      }
      if (jg.contains("angle")) {
        if (!jg["angle"].is_number()) fail(gpath + ".angle", "not a number");
        g.angle = jg["angle"].get<double>();
      }
      if (jg.contains("clifford")) {
        if (!jg["clifford"].is_number_integer()) fail(gpath + ".clifford", "not an integer");
        g.clifford = jg["clifford"].get<int>();
      }
      if (jg.contains("axis")) {
        if (!jg["axis"].is_string()) fail(gpath + ".axis", "not a string");
        try {
          g.axis = axis_from_name(jg["axis"].get<std::string>());
        } catch (const std::invalid_argument& e) {
          fail(gpath + ".axis", e.what());
        }
      }
      try {
        validate(g, c.n_qubits);
      } catch (const std::invalid_argument& e) {
        fail(gpath, e.what());
      }
      cy.gates.push_back(std::move(g));
    }
    try {
      validate(cy, c.n_qubits);
    } catch (const std::invalid_argument& e) {
      fail(cpath, e.what());
    }
    c.cycles.push_back(std::move(cy));
  }
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    fail("$", e.what());
  }
  return c;
}

void save_circuit(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << circuit_to_json(c).dump(2) << "\n";
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("circuit json: " + path + ": " + e.what());
  }
  return circuit_from_json(j);
}

}  // namespace frqaoa
