#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace iupacscan;

int main(int argc, char** argv) {
  CLI::App app{"iupacscan: k-mismatch IUPAC pattern search over DNA"};
  app.require_subcommand(1);

  cli::SearchOptions search_opt;
  auto* search = app.add_subcommand("search", "Find pattern occurrences in FASTA records");
  search->add_option("input", search_opt.input, "FASTA file, '-' for standard input")
      ->capture_default_str();
  auto* pat = search->add_option("--pattern,-p", search_opt.pattern,
                                 "Pattern of IUPAC letters and [ACGT] classes");
  auto* patf = search->add_option("--pattern-file", search_opt.pattern_file,
                                  "File holding the pattern (optional '>' header)");
  pat->excludes(patf);
  search->add_option("--k,-k", search_opt.k, "Allowed mismatches")->capture_default_str();
  search->add_option("--threads,-t", search_opt.threads, "Worker threads")
      ->capture_default_str();
  const std::map<std::string, cli::OutputFormat> formats{{"tsv", cli::OutputFormat::Tsv},
                                                         {"json", cli::OutputFormat::Json}};
  search->add_option("--format", search_opt.format, "Output format: tsv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  search->add_flag("--header", search_opt.header, "Print a TSV header line");
  search->add_flag("--show-match", search_opt.show_match, "Add the matched substring");

  auto* selftest = app.add_subcommand("selftest", "Replay the reference scan trace");

  cli::BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Time searches for several pattern lengths");
  bench->add_option("--input", bench_opt.input, "FASTA text (first record); synthetic if absent");
  bench->add_option("--seed", bench_opt.seed, "Seed for synthetic text and pattern positions")
      ->capture_default_str();
  bench->add_option("--length", bench_opt.length, "Synthetic text length")
      ->capture_default_str();
  bench->add_option("--lengths,-m", bench_opt.lengths, "Pattern lengths")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--patterns", bench_opt.patterns, "Patterns per length")
      ->capture_default_str();
  bench->add_option("--reps", bench_opt.reps, "Repetitions per pattern")->capture_default_str();
  bench->add_option("--k,-k", bench_opt.k, "Allowed mismatches")->capture_default_str();
  bench->add_option("--threads,-t", bench_opt.threads, "Worker threads")->capture_default_str();

  cli::OracleCheckOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check against reference matchers");
  oracle->add_option("--trials", oracle_opt.trials, "Number of random trials")
      ->capture_default_str();
  oracle->add_option("--seed", oracle_opt.seed, "Base seed")->capture_default_str();
  oracle->add_option("--max-n", oracle_opt.max_n, "Largest text")->capture_default_str();
  oracle->add_option("--max-m", oracle_opt.max_m, "Longest pattern")->capture_default_str();
  oracle->add_option("--prime-max-n", oracle_opt.prime_max_n,
                     "Largest text for the prime reference")
      ->capture_default_str();
  oracle->add_option("--prime-max-m", oracle_opt.prime_max_m,
                     "Longest pattern for the prime reference")
      ->capture_default_str();
  oracle->add_option("--corrupt-lut", oracle_opt.corrupt_lut,
                     "Flip one dictionary entry (checks that disagreements are caught)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitError;
  }

  if (*search) return cli::cmd_search(search_opt, std::cin, std::cout, std::cerr);
  if (*selftest) return cli::cmd_selftest(std::cout);
  if (*bench) return cli::cmd_bench(bench_opt, std::cin, std::cout, std::cerr);
  if (*oracle) return cli::cmd_oracle_check(oracle_opt, std::cout, std::cerr);
  return cli::kExitError;
}
