#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "schreier/graph.hpp"
#include "schreier/io.hpp"
#include "schreier/schreier.hpp"
#include "schreier/verify.hpp"

namespace schreier::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kList, kCsv, kBFile };

struct Config {
  Count n = 1;
  Count p = 1;
  Count q = 1;
  Count n_max = 1;
  Count p_max = 1;
  Count q_max = 1;
  Format format = Format::kList;
  bool check = false;
  std::string out_path;
  std::string bfile_path;
  std::string sequence = "sr";
};

// Writes to --out when given, otherwise to the command's output stream.
void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + cfg.out_path + " for writing");
  file << text;
  if (!file.flush()) throw IoError("write to " + cfg.out_path + " failed");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Sr(1..count, p, q) by running the partial sums.
std::vector<Count> sr_terms(Count count, Count p, Count q) {
  std::vector<Count> terms;
  terms.reserve(static_cast<std::size_t>(count));
  Count value = sr_partial_sum({1, p, q});
  for (Count n = 1; n <= count; ++n) {
    terms.push_back(value);
    value = checked_add(value, partial_sum_term(n, p, q));
  }
  return terms;
}

unsigned sweep_threads() {
  const char* env = std::getenv("SCHREIER_THREADS");
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1) throw std::invalid_argument("SCHREIER_THREADS must be a positive integer");
  return std::min(hw, static_cast<unsigned>(cap));
}

int cmd_seq(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto terms = sr_terms(cfg.n_max + 1, cfg.p, cfg.q);
  const std::span<const Count> shown(terms.data(), static_cast<std::size_t>(cfg.n_max));

  if (cfg.check) {
    for (Count n = 1; n <= cfg.n_max; ++n) {
      const Count expected = sr_bruteforce({n, cfg.p, cfg.q});
      if (expected != shown[static_cast<std::size_t>(n - 1)]) {
        err << "mismatch at n=" << n << ": partial sum " << shown[static_cast<std::size_t>(n - 1)]
            << ", enumeration " << expected << "\n";
        return kExitMismatch;
      }
    }
  }

  std::string text;
  switch (cfg.format) {
    case Format::kList:
      for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i > 0) text += ", ";
        text += std::to_string(shown[i]);
      }
      text += '\n';
      break;
    case Format::kCsv: {
      std::vector<SequenceRow> rows;
      for (std::size_t i = 0; i < shown.size(); ++i) {
        rows.push_back({static_cast<Count>(i + 1), terms[i], terms[i + 1] - terms[i]});
      }
      text = write_sequence_csv(rows);
      break;
    }
    case Format::kBFile:
      text = write_bfile(shown, 1);
      break;
  }
  emit(cfg, text, out);
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto reports = sweep({cfg.n_max, cfg.p_max, cfg.q_max}, sweep_threads());

  struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
  };
  std::map<std::pair<Count, Count>, Tally> cells;
  const VerificationReport* first_failure = nullptr;
  for (const auto& r : reports) {
    auto& tally = cells[{r.params.p, r.params.q}];
    if (r.passed()) {
      ++tally.pass;
    } else {
      ++tally.fail;
      if (first_failure == nullptr) first_failure = &r;
    }
  }

  out << std::setw(4) << "p" << std::setw(4) << "q" << std::setw(8) << "n_max" << std::setw(8)
      << "pass" << std::setw(8) << "fail" << "\n";
  std::size_t passed = 0;
  for (const auto& [key, tally] : cells) {
    out << std::setw(4) << key.first << std::setw(4) << key.second << std::setw(8) << cfg.n_max
        << std::setw(8) << tally.pass << std::setw(8) << tally.fail << "\n";
    passed += tally.pass;
  }
  out << "total: " << passed << "/" << reports.size() << " pass\n";

  if (first_failure != nullptr) {
    const auto& p = first_failure->params;
    err << "FAIL n=" << p.n << " p=" << p.p << " q=" << p.q << ": " << first_failure->failure
        << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_graph(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PartiteGraph g = build_T(cfg.n, cfg.p, cfg.q);
  const std::string name = "T(" + std::to_string(cfg.n) + "," + std::to_string(cfg.p) + "," +
                           std::to_string(cfg.q) + ")";
  emit(cfg, export_graph(g, name), out);
  (cfg.out_path.empty() ? err : out) << "edges: " << edge_count(g) << "\n";
  return kExitOk;
}

int cmd_compare(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto entries = read_bfile(read_file(cfg.bfile_path));
  std::vector<Count> computed;
  computed.reserve(entries.size());
  for (const auto& e : entries) {
    if (cfg.sequence == "sr") {
      if (e.index < 1) throw std::invalid_argument("Sr is defined from index 1; b-file starts lower");
      computed.push_back(sr_partial_sum({e.index, cfg.p, cfg.q}));
    } else {
      if (e.index < 0) throw std::invalid_argument("Turan counts are defined from index 0");
      computed.push_back(turan_edge_count(e.index, cfg.p));
    }
  }

  const auto expected = bfile_values(entries);
  const auto cmp = compare_sequences(expected, computed);
  out << "agreement: " << cmp.agreement << " of " << entries.size() << " terms\n";
  if (cmp.mismatch) {
    err << "first mismatch at index " << entries[cmp.agreement].index << ": b-file "
        << expected[cmp.agreement] << ", computed " << computed[cmp.agreement] << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_diff_table(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream table;
  table << "n,ell,k,case,sr_difference,growth_delta,floor_term,enumeration_diff\n";
  const Count pq = checked_mul(cfg.p, cfg.q);
  const Count middle_floor = checked_mul(cfg.p - 1, cfg.q);
  Count previous = sr_bruteforce({1, cfg.p, cfg.q});
  bool agree = true;
  for (Count n = 1; n <= cfg.n_max; ++n) {
    const Count next = sr_bruteforce({n + 1, cfg.p, cfg.q});
    const auto [ell, k] = decompose(n, pq + 1, RemainderRange::kZeroBased);
    const char* tag = k == pq ? "full" : (k > middle_floor ? "middle" : "low");
    const Count a = sr_difference(n, cfg.p, cfg.q);
    const Count b = growth_delta(n, cfg.p, cfg.q);
    const Count c = partial_sum_term(n, cfg.p, cfg.q);
    const Count d = next - previous;
    agree = agree && a == b && b == c && c == d;
    table << n << ',' << ell << ',' << k << ',' << tag << ',' << a << ',' << b << ',' << c << ','
          << d << '\n';
    previous = next;
  }
  emit(cfg, table.str(), out);
  if (!agree) {
    err << "difference formulas disagree; see table\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Schreier-set counts and modified Turan graph constructions", "schreier"};
  app.require_subcommand(1, 1);

  const std::map<std::string, Format> formats{
      {"list", Format::kList}, {"csv", Format::kCsv}, {"bfile", Format::kBFile}};

  auto* seq = app.add_subcommand("seq", "print Sr(1..n-max, p, q)");
  seq->add_option("--p", cfg.p, "slack factor")->check(CLI::PositiveNumber);
  seq->add_option("--q", cfg.q, "progression difference")->check(CLI::PositiveNumber);
  seq->add_option("--n-max", cfg.n_max, "last n")->required()->check(CLI::PositiveNumber);
  seq->add_option("--format", cfg.format, "list, csv or bfile")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  seq->add_flag("--check", cfg.check, "cross-check against enumeration");
  seq->add_option("--out", cfg.out_path, "output file");

  auto* verify = app.add_subcommand("verify", "check Sr(n,p,q) = T(n+1,pq+1,q) over a grid");
  verify->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--p-max", cfg.p_max)->check(CLI::PositiveNumber);
  verify->add_option("--q-max", cfg.q_max)->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "export T(n, p, q) as Graphviz DOT");
  graph->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::PositiveNumber);
  graph->add_option("--p", cfg.p, "part count")->check(CLI::PositiveNumber);
  graph->add_option("--q", cfg.q, "numbering period")->check(CLI::PositiveNumber);
  graph->add_option("--out", cfg.out_path, "output file");

  auto* compare = app.add_subcommand("compare", "compare a generated sequence with a b-file");
  compare->add_option("--bfile", cfg.bfile_path)->required();
  compare->add_option("--sequence", cfg.sequence, "sr or turan")
      ->check(CLI::IsMember({"sr", "turan"}));
  compare->add_option("--p", cfg.p)->check(CLI::PositiveNumber);
  compare->add_option("--q", cfg.q)->check(CLI::PositiveNumber);

  auto* diff_table = app.add_subcommand("diff-table", "tabulate Sr(n+1) - Sr(n) by every route");
  diff_table->add_option("--p", cfg.p)->check(CLI::PositiveNumber);
  diff_table->add_option("--q", cfg.q)->check(CLI::PositiveNumber);
  diff_table->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
  diff_table->add_option("--out", cfg.out_path, "output file");

  std::vector<const char*> argv{"schreier"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (graph->parsed()) return cmd_graph(cfg, out, err);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (diff_table->parsed()) return cmd_diff_table(cfg, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const BFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace schreier::cli
