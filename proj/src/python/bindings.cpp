// Python bindings for the core library. Matrices of bits cross the boundary
// as lists of '0'/'1' strings, Pauli operators as letter strings, and bit
// vectors as '0'/'1' strings, so the Python surface needs no numeric types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eacq/catalog.hpp"
#include "eacq/code.hpp"
#include "eacq/correction.hpp"
#include "eacq/gf2.hpp"
#include "eacq/pauli.hpp"
#include "eacq/simulator.hpp"

namespace py = pybind11;
using namespace eacq;

namespace {

SympVec parse_err(const std::string& s) { return parse_pauli(s).v; }

std::string err_str(const SympVec& v) {
  return format_pauli(PauliOp::from_symplectic(v));
}

std::vector<std::string> mat_strings(const SympMat& m) {
  std::vector<std::string> out;
  out.reserve(m.num_rows());
  for (std::size_t i = 0; i < m.num_rows(); ++i) out.push_back(err_str(m.row(i)));
  return out;
}

SympMat symp_from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error("need at least one row");
  auto bar = rows[0].find('|');
  if (bar == std::string::npos)
    throw Error("symplectic rows look like '<z bits>|<x bits>'");
  return SympMat::from_strings(bar, rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Stabilizer codes carrying a quantum and a classical payload: "
      "construction from parity-check matrices, syndrome decoding, distance "
      "search, and exact sign-tracking simulation.";

  py::class_<CodeParams>(m, "CodeParams")
      .def_readonly("n", &CodeParams::n)
      .def_readonly("q", &CodeParams::q)
      .def_readonly("c", &CodeParams::c)
      .def_readonly("c1", &CodeParams::c1)
      .def_readonly("c2", &CodeParams::c2)
      .def_readonly("e", &CodeParams::e)
      .def_readonly("s", &CodeParams::s)
      .def("__repr__", [](const CodeParams& p) {
        std::ostringstream o;
        o << "CodeParams(n=" << p.n << ", q=" << p.q << ", c=" << p.c
          << ", e=" << p.e << ")";
        return o.str();
      });

  py::class_<EacqCode>(m, "Code")
      .def_property_readonly("params",
                             [](const EacqCode& c) { return c.params; })
      .def_readonly("d_claimed", &EacqCode::d_claimed)
      .def_property_readonly(
          "stabilizer_generators",
          [](const EacqCode& c) { return mat_strings(c.g_quantum); })
      .def_property_readonly(
          "classical_generators",
          [](const EacqCode& c) { return mat_strings(c.classical_readout_gens); })
      .def_property_readonly(
          "logical_z", [](const EacqCode& c) { return mat_strings(c.logical_z); })
      .def_property_readonly(
          "logical_x", [](const EacqCode& c) { return mat_strings(c.logical_x); })
      .def("__repr__", [](const EacqCode& c) {
        std::ostringstream o;
        o << "<Code n=" << c.params.n << " q=" << c.params.q
          << " c=" << c.params.c << " e=" << c.params.e << ">";
        return o.str();
      });

  m.def(
      "build",
      [](const std::vector<std::string>& h_quantum,
         const std::vector<std::string>& h_classical) {
        return build(symp_from_strings(h_quantum),
                     BitMat::from_strings(h_classical));
      },
      py::arg("h_quantum"), py::arg("h_classical"),
      "Construct a code from quantum check rows '<z>|<x>' and classical "
      "check rows over those generators.");
  m.def(
      "ea_css",
      [](const std::vector<std::string>& h) { return ea_css(BitMat::from_strings(h)); },
      py::arg("h"),
      "Doubled construction (h|0), (0|h) from a classical parity check.");
  m.def("enhance", &enhance, py::arg("code"), py::arg("move_isotropic"),
        py::arg("move_pairs"),
        "Move stabilizer generators to the classical side of a c=0 code.");
  m.def("strip", &strip, py::arg("code"),
        "Fold the classical side back into the quantum stabilizer.");
  m.def("code_hash", &code_hash, py::arg("code"));
  m.def("code_to_string", &code_to_string, py::arg("code"));
  m.def(
      "read_code",
      [](const std::string& path) { return read_code_file(path); },
      py::arg("path"));
  m.def(
      "write_code",
      [](const EacqCode& code, const std::string& path) {
        std::ofstream out(path);
        if (!out) throw Error("cannot open " + path);
        write_code(out, code);
      },
      py::arg("code"), py::arg("path"));

  py::class_<NamedCode>(m, "NamedCode")
      .def_readonly("name", &NamedCode::name)
      .def_readonly("bracket", &NamedCode::bracket)
      .def_readonly("code", &NamedCode::code)
      .def_readonly("notes", &NamedCode::notes)
      .def("__repr__", [](const NamedCode& n) {
        return "<NamedCode " + n.name + " " + n.bracket + ">";
      });
  m.def("catalog", [] { return catalog(); },
        "All built-in codes, in construction order.");
  m.def(
      "find_code",
      [](const std::string& name) -> std::optional<NamedCode> {
        const NamedCode* e = find_code(name);
        if (!e) return std::nullopt;
        return *e;
      },
      py::arg("name"), "The catalog entry with this name, or None.");

  py::enum_<ErrorClass>(m, "ErrorClass")
      .value("Distinguishable", ErrorClass::Distinguishable)
      .value("DegenerateQuantum", ErrorClass::DegenerateQuantum)
      .value("DegenerateClassical", ErrorClass::DegenerateClassical)
      .value("Uncorrectable", ErrorClass::Uncorrectable);

  m.def(
      "syndrome",
      [](const EacqCode& code, const std::string& err) {
        return syndrome(code, parse_err(err)).to_string();
      },
      py::arg("code"), py::arg("error"));
  m.def(
      "classify_pair",
      [](const EacqCode& code, const std::string& a, const std::string& b) {
        return classify_pair(code, parse_err(a), parse_err(b));
      },
      py::arg("code"), py::arg("a"), py::arg("b"));
  m.def(
      "check_correctable",
      [](const EacqCode& code, const std::vector<std::string>& errors)
          -> std::optional<std::pair<std::string, std::string>> {
        std::vector<SympVec> errs;
        errs.reserve(errors.size());
        for (const auto& e : errors) errs.push_back(parse_err(e));
        CorrectabilityResult r = check_correctable(code, errs);
        if (r.correctable) return std::nullopt;
        return std::make_pair(err_str(r.witness->first),
                              err_str(r.witness->second));
      },
      py::arg("code"), py::arg("errors"),
      "None if the set is simultaneously correctable, else a colliding pair.");

  py::class_<DistanceResult>(m, "DistanceResult")
      .def_readonly("distance", &DistanceResult::distance)
      .def_readonly("exhaustive", &DistanceResult::exhaustive)
      .def_readonly("searched_weight", &DistanceResult::searched_weight)
      .def_property_readonly("witness",
                             [](const DistanceResult& r) -> std::optional<std::string> {
                               if (!r.witness) return std::nullopt;
                               return err_str(*r.witness);
                             })
      .def("__repr__", [](const DistanceResult& r) {
        std::ostringstream o;
        o << "DistanceResult(distance=" << r.distance
          << ", exhaustive=" << (r.exhaustive ? "True" : "False") << ")";
        return o.str();
      });
  py::enum_<DistanceAlgorithm>(m, "DistanceAlgorithm")
      .value("Auto", DistanceAlgorithm::Auto)
      .value("Direct", DistanceAlgorithm::Direct)
      .value("MeetInMiddle", DistanceAlgorithm::MeetInMiddle);
  m.def("distance_search", &distance_search, py::arg("code"),
        py::arg("max_weight"), py::arg("want_witness") = true,
        py::arg("threads") = 1,
        py::arg("algorithm") = DistanceAlgorithm::Auto);

  py::enum_<DecoderPolicy>(m, "DecoderPolicy")
      .value("Strict", DecoderPolicy::Strict)
      .value("BestEffort", DecoderPolicy::BestEffort);
  py::class_<DecodeTable>(m, "DecodeTable")
      .def_readonly("code_id", &DecodeTable::code_id)
      .def_readonly("t", &DecodeTable::t)
      .def("__len__",
           [](const DecodeTable& t) { return t.entries.size(); })
      .def("__repr__", [](const DecodeTable& t) {
        std::ostringstream o;
        o << "<DecodeTable t=" << t.t << " entries=" << t.entries.size()
          << " code=" << t.code_id << ">";
        return o.str();
      });
  m.def("build_decoder", &build_decoder, py::arg("code"), py::arg("t"),
        py::arg("policy") = DecoderPolicy::Strict);
  m.def(
      "lookup",
      [](const DecodeTable& table, const std::string& syn)
          -> std::optional<std::string> {
        std::optional<SympVec> r = lookup(table, BitVec::from_string(syn));
        if (!r) return std::nullopt;
        return err_str(*r);
      },
      py::arg("table"), py::arg("syndrome"));
  m.def("read_decode_table", &read_decode_table_file, py::arg("path"));
  m.def("write_decode_table", &write_decode_table_file, py::arg("path"),
        py::arg("table"));

  py::class_<StabState>(m, "StabState")
      .def_property_readonly("signs",
                             [](const StabState& s) { return s.signs.to_string(); })
      .def_property_readonly("num_qubits",
                             [](const StabState& s) { return s.num_qubits(); })
      .def("__repr__", [](const StabState& s) {
        return "<StabState qubits=" + std::to_string(s.num_qubits()) +
               " signs=" + s.signs.to_string() + ">";
      });
  m.def(
      "encode",
      [](const EacqCode& code, const std::string& classical_index,
         const std::string& logical_bits) {
        return encode(code, BitVec::from_string(classical_index),
                      BitVec::from_string(logical_bits));
      },
      py::arg("code"), py::arg("classical_index") = "",
      py::arg("logical_bits") = "");
  m.def(
      "apply_error",
      [](StabState& st, const std::string& err) {
        apply_error(st, parse_err(err));
      },
      py::arg("state"), py::arg("error"));
  m.def(
      "measure_syndrome",
      [](const StabState& st, const EacqCode& code) {
        return measure_syndrome(st, code).to_string();
      },
      py::arg("state"), py::arg("code"));
  m.def(
      "readout",
      [](const StabState& st, const EacqCode& code) {
        auto [c, q] = readout(st, code);
        return std::make_pair(c.to_string(), q.to_string());
      },
      py::arg("state"), py::arg("code"),
      "(classical bits, logical bits); requires a zero syndrome.");

  py::class_<TrialStats>(m, "TrialStats")
      .def_readonly("trials", &TrialStats::trials)
      .def_readonly("classical_failures", &TrialStats::classical_failures)
      .def_readonly("quantum_failures", &TrialStats::quantum_failures)
      .def("__repr__", [](const TrialStats& s) {
        std::ostringstream o;
        o << "TrialStats(trials=" << s.trials
          << ", classical_failures=" << s.classical_failures
          << ", quantum_failures=" << s.quantum_failures << ")";
        return o.str();
      });
  m.def(
      "run_trials",
      [](const EacqCode& code, const DecodeTable& table, double p,
         std::size_t trials, std::uint64_t seed, unsigned threads) {
        ChannelSpec ch{NoiseModel::Depolarizing, p, seed};
        return run_trials(code, table, ch, trials, threads);
      },
      py::arg("code"), py::arg("table"), py::arg("p"), py::arg("trials"),
      py::arg("seed"), py::arg("threads") = 1,
      "Depolarizing-channel decode trials; deterministic in (p, seed).");
  m.attr("RNG_ID") = kRngId;
}
