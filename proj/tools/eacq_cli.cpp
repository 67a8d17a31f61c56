#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eacq/catalog.hpp"
#include "eacq/code.hpp"
#include "eacq/correction.hpp"
#include "eacq/pauli.hpp"
#include "eacq/simulator.hpp"

namespace {

using namespace eacq;

// A <code> argument is either "catalog:<name>" or a path to an eacq v1 file.
struct LoadedCode {
  EacqCode code;
  std::string title;
};

LoadedCode load_code(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string name = spec.substr(prefix.size());
    const NamedCode* entry = find_code(name);
    if (!entry)
      throw Error("unknown catalog code '" + name + "'");
    return {entry->code, entry->name + " " + entry->bracket};
  }
  return {read_code_file(spec), spec};
}

std::string pauli_str(const SympVec& v) {
  return format_pauli(PauliOp{0, v});
}

void print_params(std::ostream& out, const CodeParams& p) {
  out << "n " << p.n << "  q " << p.q << "  c " << p.c << " (c1 " << p.c1
      << "  c2 " << p.c2 << ")  e " << p.e << "  s " << p.s << "\n";
}

void print_info(std::ostream& out, const LoadedCode& loaded) {
  const EacqCode& code = loaded.code;
  out << loaded.title << "\n";
  print_params(out, code.params);
  if (code.d_claimed >= 0)
    out << "claimed distance " << code.d_claimed << "\n";
  out << "S_Q generators:\n";
  for (std::size_t i = 0; i < code.g_quantum.num_rows(); ++i)
    out << "g" << (i + 1) << " " << pauli_str(code.g_quantum.row(i)) << "\n";
  if (code.params.c > 0) {
    out << "S_C generators (h rows";
    for (std::size_t r : code.readout_rows)
      out << " " << (r + 1);
    out << "):\n";
    for (std::size_t i = 0; i < code.classical_readout_gens.num_rows(); ++i)
      out << "r" << (i + 1) << " "
          << pauli_str(code.classical_readout_gens.row(i)) << "\n";
  }
  if (code.params.q > 0) {
    out << "logical operators:\n";
    for (std::size_t k = 0; k < code.params.q; ++k) {
      out << "z" << (k + 1) << " " << pauli_str(code.logical_z.row(k)) << "\n";
      out << "x" << (k + 1) << " " << pauli_str(code.logical_x.row(k)) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement-assisted quantum codes carrying classical bits"};
  app.require_subcommand(1);

  std::string code_spec, out_path, table_path;
  std::size_t max_weight = 0, table_t = 0, trials = 0;
  unsigned threads = 1;
  double prob = 0.0;
  std::uint64_t seed = 0;
  bool best_effort = false, do_strip = false;
  std::vector<std::size_t> enhance_args;

  CLI::App* validate = app.add_subcommand("validate", "parse and check a code file");
  validate->add_option("file", code_spec, "eacq v1 file")->required();

  CLI::App* info = app.add_subcommand("info", "print a code's generators");
  info->add_option("code", code_spec, "file or catalog:<name>")->required();

  CLI::App* distance = app.add_subcommand("distance", "search for undetected errors");
  distance->add_option("code", code_spec, "file or catalog:<name>")->required();
  distance->add_option("--max-weight", max_weight, "largest error weight to search")
      ->required();
  distance->add_option("--threads", threads, "worker threads");

  CLI::App* table = app.add_subcommand("table", "build and save a decode table");
  table->add_option("code", code_spec, "file or catalog:<name>")->required();
  table->add_option("-t", table_t, "cover all errors of weight <= t")->required();
  table->add_option("-o", out_path, "output file")->required();
  table->add_flag("--best-effort", best_effort,
                  "keep canonical representatives even when a syndrome "
                  "collision is not degenerate");

  CLI::App* simulate = app.add_subcommand("simulate", "run noisy decoding trials");
  simulate->add_option("code", code_spec, "file or catalog:<name>")->required();
  simulate->add_option("--table", table_path, "decode table file")->required();
  simulate->add_option("--p", prob, "per-qubit depolarizing probability")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--threads", threads, "worker threads");

  CLI::App* transform = app.add_subcommand("transform", "emit a transformed code");
  transform->add_option("code", code_spec, "file or catalog:<name>")->required();
  CLI::Option* opt_enhance =
      transform
          ->add_option("--enhance", enhance_args,
                       "move i isotropic generators and j pairs to the "
                       "classical part")
          ->expected(2);
  transform->add_flag("--strip", do_strip, "absorb the classical part into the stabilizer")
      ->excludes(opt_enhance);

  CLI::App* list = app.add_subcommand("catalog", "list built-in codes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      EacqCode code = read_code_file(code_spec);
      std::cout << "valid eacq code\n";
      print_params(std::cout, code.params);
    } else if (info->parsed()) {
      print_info(std::cout, load_code(code_spec));
    } else if (distance->parsed()) {
      LoadedCode loaded = load_code(code_spec);
      if (max_weight == 0)
        throw Error("--max-weight must be at least 1");
      DistanceResult r = distance_search(loaded.code, max_weight, true, threads);
      if (r.exhaustive) {
        std::cout << "d = " << r.distance << " (exhaustive)\n";
        if (r.witness)
          std::cout << "witness " << pauli_str(*r.witness) << "\n";
      } else {
        std::cout << "d >= " << r.distance << " (no violation at weight <= "
                  << r.searched_weight << ")\n";
      }
    } else if (table->parsed()) {
      LoadedCode loaded = load_code(code_spec);
      DecodeTable t = build_decoder(
          loaded.code, table_t,
          best_effort ? DecoderPolicy::BestEffort : DecoderPolicy::Strict);
      write_decode_table_file(out_path, t);
      std::cout << "wrote " << out_path << ": t " << t.t << ", "
                << t.entries.size() << " entries, code " << t.code_id << "\n";
    } else if (simulate->parsed()) {
      LoadedCode loaded = load_code(code_spec);
      DecodeTable t = read_decode_table_file(table_path);
      std::string hash = code_hash(loaded.code);
      if (t.code_id != hash)
        throw Error("decode table was built for code " + t.code_id +
                    ", not for this code (" + hash + ")");
      ChannelSpec ch{NoiseModel::Depolarizing, prob, seed};
      TrialStats stats = run_trials(loaded.code, t, ch, trials, threads);
      write_trials_csv_header(std::cout);
      write_trials_csv_row(std::cout, ch, stats);
    } else if (transform->parsed()) {
      LoadedCode loaded = load_code(code_spec);
      if (!do_strip && enhance_args.empty()) {
        std::cerr << "transform requires --enhance i j or --strip\n";
        return 2;
      }
      EacqCode result = do_strip
                            ? strip(loaded.code)
                            : enhance(loaded.code, enhance_args[0], enhance_args[1]);
      write_code(std::cout, result);
    } else if (list->parsed()) {
      for (const NamedCode& entry : catalog()) {
        const CodeParams& p = entry.code.params;
        std::cout << entry.name << "  " << entry.bracket << "  n " << p.n
                  << "  q " << p.q << "  c " << p.c << "  e " << p.e
                  << "  claimed d " << entry.code.d_claimed << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
