// Copyright 2026 The qcliff Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "qcliff/embedding.hpp"
#include "qcliff/errors.hpp"
#include "qcliff/symplectic.hpp"
#include "qcliff/synthesis.hpp"
#include "qcliff/text_io.hpp"
#include "qcliff/unitary.hpp"

namespace qcliff::cli {

namespace {

double default_tolerance() {
  if (const char* env = std::getenv("CS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultTolerance;
}

/// Reads a file, or standard input for "-".
std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModMatrix load_matrix(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_matrix(in);
}

/// Exit code for a matrix that fails the symplectic test, or nullopt.
std::optional<SymplecticMatrix> as_symplectic(const ModMatrix& m, std::ostream& err) {
  if (!is_symplectic(m)) {
    err << "error: matrix is not symplectic mod " << m.dim().D() << '\n';
    return std::nullopt;
  }
  return SymplecticMatrix(m);
}

void print_program(const GateSequence& seq, std::ostream& out) {
  out << format_program(seq) << "# gates: " << seq.size() << '\n';
}

std::string witness_text(const SymplecticMatrix& m) {
  std::ostringstream s;
  s << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
  return s.str();
}

int verify(const GateSequence& seq, const SymplecticMatrix& m, const std::string& oracle, double tol,
           std::ostream& out, std::ostream& err) {
  if (oracle == "none") return kOk;
  bool ok = sequence_matrix(seq) == m;
  if (ok && oracle == "unitary") ok = check_program(seq, m, tol);
  if (!ok) {
    err << "verification failed (" << oracle << ")\n";
    return kVerifyFailed;
  }
  out << "# verified: " << oracle << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qudit Clifford synthesis and verification"};
  app.require_subcommand(1, 1);
  double tol = default_tolerance();
  app.add_option("--tol", tol, "Dense-oracle tolerance (default: CS_TOL or 1e-9)")->check(CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth", "Synthesize a gate program for a symplectic matrix");
  std::string matrix_path;
  std::string verify_mode = "none";
  synth->add_option("matrix", matrix_path, "Matrix file ('-' for stdin)")->required();
  synth->add_option("--verify", verify_mode, "Check the result")
      ->check(CLI::IsMember({"none", "symplectic", "unitary"}));

  auto* transport_cmd = app.add_subcommand("transport", "Program mapping word p to word q");
  std::string p_text, q_text;
  transport_cmd->add_option("p", p_text, "Source word, e.g. 'd=6 n=2 a=1,0 b=0,3'")->required();
  transport_cmd->add_option("q", q_text, "Target word")->required();

  auto* peg = app.add_subcommand("peg", "Reduce a word to Z^g on the last qudit");
  std::string word_text;
  peg->add_option("word", word_text, "Word text")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a program against a matrix");
  std::string program_path;
  std::string oracle = "symplectic";
  verify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  verify_cmd->add_option("program", program_path, "Program file ('-' for stdin)")->required();
  verify_cmd->add_option("--oracle", oracle, "Which check to run")
      ->check(CLI::IsMember({"symplectic", "unitary"}));

  auto* embed = app.add_subcommand("embed-check", "Symplectic feasibility of a GKP embedding");
  long n = 0, r_x = 0, r_z = 0;
  embed->add_option("n", n, "Logical dimension")->required();
  embed->add_option("r_x", r_x, "X spacing")->required();
  embed->add_option("r_z", r_z, "Z spacing")->required();

  auto* random = app.add_subcommand("random", "Print a random symplectic matrix file");
  std::uint64_t seed = 1;
  long rd = 3, rn = 2;
  std::size_t length = 20;
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("-d,--dim", rd, "Qudit dimension");
  random->add_option("-n,--qudits", rn, "Number of qudits");
  random->add_option("--length", length, "Number of random generators");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    if (synth->parsed()) {
      const auto m = as_symplectic(load_matrix(matrix_path), err);
      if (!m) return kNotSymplectic;
      const SynthesisResult result = synthesize(*m);
      print_program(result.program, out);
      return verify(result.program, *m, verify_mode, tol, out, err);
    }
    if (transport_cmd->parsed()) {
      const PauliWord p = parse_word(p_text);
      const PauliWord q = parse_word(q_text);
      const auto seq = transport(p, q);
      if (!seq) {
        out << "infeasible\n";
        return kInfeasible;
      }
      print_program(*seq, out);
      return kOk;
    }
    if (peg->parsed()) {
      const PegResult r = generalized_peg(parse_word(word_text));
      print_program(r.program, out);
      out << "# gcd: " << r.gcd << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto m = as_symplectic(load_matrix(matrix_path), err);
      if (!m) return kNotSymplectic;
      std::istringstream in(slurp(program_path));
      const GateSequence seq = parse_program(in, m->n(), m->dim());
      const int code = verify(seq, *m, oracle, tol, out, err);
      if (code == kOk) out << "ok\n";
      return code;
    }
    if (embed->parsed()) {
      if (n < 2 || r_x < 1 || r_z < 1) throw ParseError("need n >= 2 and positive r_x, r_z");
      if (n * r_x * r_z > kEmbedCheckMaxDimension) {
        err << "error: d = " << n * r_x * r_z << " exceeds " << kEmbedCheckMaxDimension << '\n';
        return kScaleLimit;
      }
      const Embedding e(n, r_x, r_z);
      const auto qft = logical_feasible_single(e, LogicalGate::QFT);
      const auto phase = logical_feasible_single(e, LogicalGate::PhaseShift);
      const auto sum = logical_feasible_sum(e);
      out << "d: " << e.ambient().d() << '\n';
      out << "symplectic: " << (qft && phase ? "yes" : "no") << '\n';
      out << "QFT: " << (qft ? "feasible " + witness_text(*qft) : "infeasible") << '\n';
      out << "PhaseShift: " << (phase ? "feasible " + witness_text(*phase) : "infeasible") << '\n';
      out << "SUM: " << (sum ? "feasible" : "infeasible") << '\n';
      return kOk;
    }
    if (random->parsed()) {
      if (rn < 1) throw ParseError("need at least one qudit");
      const Dimension dim(rd);
      const auto nq = static_cast<std::size_t>(rn);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Int> exponent(1, dim.D() - 1);
      std::uniform_int_distribution<std::size_t> qudit(0, nq - 1);
      GateSequence seq(nq, dim);
      for (std::size_t i = 0; i < length; ++i) {
        const int kind = static_cast<int>(rng() % (nq > 1 ? 3 : 2));
        if (kind == 0) {
          seq.push_back(Fourier{qudit(rng)});
        } else if (kind == 1) {
          seq.push_back(Phase{qudit(rng), exponent(rng)});
        } else {
          const std::size_t c = qudit(rng);
          std::size_t t = qudit(rng);
          while (t == c) t = qudit(rng);
          seq.push_back(Sum{c, t, exponent(rng)});
        }
      }
      out << format_matrix(sequence_matrix(seq).matrix());
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ScaleLimit& e) {
    err << "scale limit: " << e.what() << '\n';
    return kScaleLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kParse;
}

}  // namespace qcliff::cli
