#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "graver/errors.hpp"
#include "graver/io.hpp"
#include "graver/lattice.hpp"
#include "graver/models.hpp"
#include "graver/oracle.hpp"
#include "graver/solve.hpp"
#include "graver/symmetry.hpp"

namespace graver {

namespace cli {

enum class Precision { automatic, int64, big };

/// Raised when `check` finds a problem with the supplied basis.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// Runs body.template operator()<T>() with T chosen by the precision flag.
// In automatic mode an int64 run that overflows is repeated with BigInt.
template <class Body>
auto with_precision(Precision p, Body&& body) {
  switch (p) {
    case Precision::int64:
      return body.template operator()<std::int64_t>();
    case Precision::big:
      return body.template operator()<BigInt>();
    case Precision::automatic:
      break;
  }
  try {
    return body.template operator()<std::int64_t>();
  } catch (const OverflowError&) {
    return body.template operator()<BigInt>();
  }
}

template <Scalar T>
std::vector<IntVector<T>> read_vectors(const std::string& path) {
  return matrix_cast<T>(read_matrix(path)).rows;
}

template <Scalar T>
void write_vectors(const std::string& path, const std::vector<IntVector<T>>& vs,
                   std::size_t n) {
  write_matrix(path, IntMatrix<T>(vs, n));
}

struct LatticeInput {
  std::string matrix;
  std::string lattice;
};

template <Scalar T>
LatticeBasis<T> load_lattice(const LatticeInput& in) {
  if (!in.matrix.empty()) return kernel_lattice(matrix_cast<T>(read_matrix(in.matrix)));
  const IntMatrix<BigInt> gens = read_matrix(in.lattice);
  if (gens.num_cols() == 0) throw ValidationError("lattice file has no columns");
  return LatticeBasis<T>::from_generators(matrix_cast<T>(gens).rows, gens.num_cols());
}

inline void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  auto out = detail::open_output(path);
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("write to '" + path + "' failed");
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct GraverArgs {
  LatticeInput input;
  std::string algorithm = "fast";
  std::string output;
  std::string stats;
  std::string symmetry;
  std::string reps;
  bool signed_output = false;
  unsigned threads = 1;
  Precision precision = Precision::automatic;
};

inline void run_graver(const GraverArgs& args, bool symmetric) {
  const Algorithm algorithm =
      args.algorithm == "pottier" ? Algorithm::pottier : Algorithm::fast;
  std::optional<PermutationGroup> group;
  if (symmetric) group = read_symmetry(args.symmetry);
  EngineOptions options;
  options.threads = args.threads;
  with_precision(args.precision, [&]<Scalar T>() {
    const LatticeBasis<T> lattice = load_lattice<T>(args.input);
    const auto start = std::chrono::steady_clock::now();
    const GraverResult<T> result =
        compute_graver(lattice, algorithm, group ? &*group : nullptr, options);
    const double ms = elapsed_ms(start);
    const std::size_t n = result.dimension;
    write_vectors(args.output, args.signed_output ? result.signed_basis : result.up_to_sign, n);

    nlohmann::ordered_json stats;
    stats["graver_size_up_to_sign"] = result.up_to_sign.size();
    if (result.orbits) {
      write_vectors(args.reps, result.orbits->representatives, n);
      stats["num_representatives"] = result.orbits->representatives.size();
      stats["group_order"] = result.orbits->group_order;
      stats["orbit_sizes"] = result.orbits->orbit_sizes;
      stats["num_signed_representatives"] = result.orbits->signed_orbits;
    } else {
      stats["num_representatives"] = result.up_to_sign.size();
      stats["group_order"] = 1;
      stats["orbit_sizes"] = std::vector<std::size_t>(result.up_to_sign.size(), 1);
    }
    stats["runtime_ms"] = ms;
    stats["algorithm"] = std::string(symmetric ? "sym-" : "") + algorithm_name(algorithm);
    stats["precision"] = std::same_as<T, BigInt> ? "bigint" : "int64";
    stats["threads"] = args.threads;
    if (!args.stats.empty()) write_json(args.stats, stats);
    return 0;
  });
}

inline void run_kernel(const std::string& matrix, const std::string& output) {
  const auto lattice = kernel_lattice(read_matrix(matrix));
  write_vectors(output, lattice.generators(), lattice.ambient_dimension());
}

inline void run_gen_table(const std::vector<std::size_t>& dims, const std::string& matrix_out,
                          const std::string& sym_out) {
  const auto A = table_matrix<std::int64_t>(dims);
  const auto group = table_group(dims);
  write_matrix(matrix_out, A);
  write_symmetry(sym_out, group);
}

inline void run_orbits(const std::string& vectors, const std::string& symmetry,
                       const std::string& reps_out, const std::string& stats_path,
                       Precision precision) {
  const PermutationGroup group = read_symmetry(symmetry);
  with_precision(precision, [&]<Scalar T>() {
    const IntMatrix<T> V = matrix_cast<T>(read_matrix(vectors));
    if (V.num_cols() != group.degree())
      throw ValidationError("vectors have length " + std::to_string(V.num_cols()) +
                            " but the group has degree " + std::to_string(group.degree()));
    const auto start = std::chrono::steady_clock::now();
    const OrbitSummary<T> summary = summarize_orbits(V.rows, group);
    const double ms = elapsed_ms(start);
    write_vectors(reps_out, summary.representatives, V.num_cols());
    if (!stats_path.empty()) {
      std::size_t total = 0;
      for (auto s : summary.orbit_sizes) total += s;
      nlohmann::ordered_json stats;
      stats["graver_size_up_to_sign"] = total;
      stats["num_representatives"] = summary.representatives.size();
      stats["group_order"] = summary.group_order;
      stats["orbit_sizes"] = summary.orbit_sizes;
      stats["num_signed_representatives"] = summary.signed_orbits;
      stats["runtime_ms"] = ms;
      stats["algorithm"] = "orbits";
      write_json(stats_path, stats);
    }
    return 0;
  });
}

// Minimality of every listed vector, and completeness of the list up to
// max-norm `bound` (default: the largest max-norm in the file).
inline std::string run_check(const std::string& graver_path, const LatticeInput& input,
                             std::optional<std::string> bound_text, Precision precision) {
  return with_precision(precision, [&]<Scalar T>() {
    const LatticeBasis<T> lattice = load_lattice<T>(input);
    const IntMatrix<T> V = matrix_cast<T>(read_matrix(graver_path));
    const std::size_t n = lattice.ambient_dimension();
    if (V.num_cols() != n)
      throw ValidationError("vectors have length " + std::to_string(V.num_cols()) +
                            " but the lattice has dimension " + std::to_string(n));
    std::set<IntVector<T>> listed;
    T largest(0);
    for (std::size_t i = 0; i < V.num_rows(); ++i) {
      const auto& v = V.rows[i];
      const std::string where = "vector " + std::to_string(i + 1);
      if (v.is_zero()) throw VerificationFailure(where + " is zero");
      if (!member(v, lattice)) throw VerificationFailure(where + " is not in the lattice");
      if (!is_graver_element(v, lattice))
        throw VerificationFailure(where + " is not conformally minimal");
      listed.insert(canonical_sign(v));
      largest = std::max(largest, max_norm(v));
    }
    T bound = largest < T(1) ? T(1) : largest;
    if (bound_text) {
      const BigInt b(*bound_text);
      if (b < 1) throw ValidationError("--bound must be positive");
      bound = scalar_cast<T>(b);
    }
    std::size_t missing = 0;
    for (const auto& g : brute_force_graver(lattice, bound)) {
      if (g.is_zero() || g != canonical_sign(g)) continue;
      if (!listed.contains(g)) ++missing;
    }
    if (missing)
      throw VerificationFailure(std::to_string(missing) +
                                " Graver elements of max-norm <= " + to_string(bound) +
                                " are missing");
    return "certified: " + std::to_string(listed.size()) +
           " vectors up to sign, complete up to max-norm " + to_string(bound);
  });
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const VerificationFailure*>(&e)) return 4;
  if (dynamic_cast<const ResourceError*>(&e) || dynamic_cast<const OverflowError*>(&e) ||
      dynamic_cast<const std::bad_alloc*>(&e))
    return 3;
  return 2;
}

inline const char* error_class(const std::exception& e) {
  if (dynamic_cast<const VerificationFailure*>(&e)) return "verification";
  if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
  if (exit_code_for(e) == 3) return "resource";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  return "validation";
}

}  // namespace cli

/// Command-line entry point. Returns the process exit status:
/// 0 success, 1 usage, 2 parse/validation, 3 resource cap, 4 verification.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using cli::Precision;
  CLI::App app{"Graver bases of integer lattices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::map<std::string, Precision> precisions{
      {"auto", Precision::automatic}, {"int64", Precision::int64}, {"big", Precision::big}};
  const std::vector<std::string> algorithms{"pottier", "fast"};

  cli::GraverArgs g;
  auto add_graver_options = [&](CLI::App* sub) {
    auto* m = sub->add_option("--matrix", g.input.matrix, "constraint matrix; lattice = kernel");
    auto* l = sub->add_option("--lattice", g.input.lattice, "lattice generators, one per row");
    m->excludes(l);
    sub->add_option("--algorithm", g.algorithm)->check(CLI::IsMember(algorithms));
    sub->add_option("--output", g.output, "Graver basis output (.gra)")->required();
    sub->add_option("--stats", g.stats, "statistics output (JSON)");
    sub->add_flag("--signed", g.signed_output, "write both signs of every element");
    sub->add_option("--threads", g.threads, "worker threads, 0 = all cores")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--precision", g.precision, "auto, int64 or big")
        ->transform(CLI::CheckedTransformer(precisions));
  };
  auto* graver_cmd = app.add_subcommand("graver", "compute a Graver basis");
  add_graver_options(graver_cmd);
  auto* sym_cmd = app.add_subcommand("graver-sym", "compute a Graver basis using symmetry");
  add_graver_options(sym_cmd);
  sym_cmd->add_option("--symmetry", g.symmetry, "permutation generators (.sym)")->required();
  sym_cmd->add_option("--reps", g.reps, "orbit representatives output (.rep)")->required();

  std::string kernel_matrix, kernel_out;
  auto* kernel_cmd = app.add_subcommand("kernel", "write a basis of the integer kernel");
  kernel_cmd->add_option("--matrix", kernel_matrix)->required();
  kernel_cmd->add_option("--output", kernel_out)->required();

  std::vector<std::size_t> dims;
  std::string table_matrix_out, table_sym_out;
  auto* table_cmd = app.add_subcommand("gen-table", "write the matrix and symmetry of a table model");
  table_cmd->add_option("dims", dims, "axis lengths")->required()->expected(2, -1);
  table_cmd->add_option("--matrix-out", table_matrix_out)->required();
  table_cmd->add_option("--sym-out", table_sym_out)->required();

  std::string orbit_vectors, orbit_sym, orbit_reps, orbit_stats;
  Precision orbit_precision = Precision::automatic;
  auto* orbits_cmd = app.add_subcommand("orbits", "group a vector set into orbits");
  orbits_cmd->add_option("--vectors", orbit_vectors)->required();
  orbits_cmd->add_option("--symmetry", orbit_sym)->required();
  orbits_cmd->add_option("--reps-out", orbit_reps)->required();
  orbits_cmd->add_option("--stats", orbit_stats);
  orbits_cmd->add_option("--precision", orbit_precision)
      ->transform(CLI::CheckedTransformer(precisions));

  std::string check_graver;
  cli::LatticeInput check_input;
  std::optional<std::string> check_bound;
  Precision check_precision = Precision::automatic;
  auto* check_cmd = app.add_subcommand("check", "certify a Graver basis by brute force");
  check_cmd->add_option("--graver", check_graver)->required();
  auto* cm = check_cmd->add_option("--matrix", check_input.matrix);
  auto* cl = check_cmd->add_option("--lattice", check_input.lattice);
  cm->excludes(cl);
  check_cmd->add_option("--bound", check_bound, "max-norm bound for completeness")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--precision", check_precision)
      ->transform(CLI::CheckedTransformer(precisions));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto need_input = [&](const cli::LatticeInput& in) {
    if (in.matrix.empty() == in.lattice.empty()) {
      err << "usage error: exactly one of --matrix or --lattice is required\n";
      return false;
    }
    return true;
  };

  try {
    if (*graver_cmd || *sym_cmd) {
      if (!need_input(g.input)) return 1;
      if (g.threads == 0) g.threads = std::max(1u, std::thread::hardware_concurrency());
      cli::run_graver(g, static_cast<bool>(*sym_cmd));
    } else if (*kernel_cmd) {
      cli::run_kernel(kernel_matrix, kernel_out);
    } else if (*table_cmd) {
      cli::run_gen_table(dims, table_matrix_out, table_sym_out);
    } else if (*orbits_cmd) {
      cli::run_orbits(orbit_vectors, orbit_sym, orbit_reps, orbit_stats, orbit_precision);
    } else if (*check_cmd) {
      if (!need_input(check_input)) return 1;
      out << cli::run_check(check_graver, check_input, check_bound, check_precision) << '\n';
    }
  } catch (const std::exception& e) {
    const int code = cli::exit_code_for(e);
    err << cli::error_class(e) << " error: " << e.what() << '\n';
    return code;
  }
  return 0;
}

}  // namespace graver
