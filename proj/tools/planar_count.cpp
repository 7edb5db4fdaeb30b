// Command-line front end: compute, table, verify.
#include "planar/memo_cache.hpp"
#include "planar/records.hpp"
#include "planar/recursion.hpp"
#include "planar/verify.hpp"

#include <CLI11.hpp>

#include <climits>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CacheSession {
  std::string path;
  planar::MemoTable memo;

  // Missing file means a cold start; the file is created on save.
  void load() {
    if (path.empty() || !std::filesystem::exists(path)) return;
    memo = planar::load_cache(path);
  }
  void save() const {
    if (!path.empty()) planar::save_cache(path, memo);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts rational planar curves in P^3 through lines and points"};
  app.require_subcommand(1);

  const std::map<std::string, planar::OutputFormat> formats{
      {"csv", planar::OutputFormat::kCsv}, {"json", planar::OutputFormat::kJson}};
  const CLI::Range positive(1, INT_MAX);
  const CLI::Range nonnegative(0, INT_MAX);

  CacheSession session;
  planar::CountKey key;
  planar::OutputFormat format = planar::OutputFormat::kCsv;
  int max_d = 0;

  auto* compute = app.add_subcommand("compute", "Compute one count N_d(r, s, theta)");
  compute->add_option("--d", key.d, "Curve degree")->required()->check(positive);
  compute->add_option("--r", key.r, "Number of line conditions")->required()->check(nonnegative);
  compute->add_option("--s", key.s, "Number of point conditions")->required()->check(nonnegative);
  compute->add_option("--theta", key.theta, "Power of the dual hyperplane class")
      ->required()
      ->check(nonnegative);
  compute->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  compute->add_option("--cache", session.path, "Memo cache file to load and update");

  auto* table = app.add_subcommand("table", "Print every on-shell count up to a degree");
  table->add_option("--max-d", max_d, "Largest degree")->required()->check(positive);
  table->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  table->add_option("--cache", session.path, "Memo cache file to load and update");

  int verify_max_d = 6;
  auto* verify = app.add_subcommand("verify", "Run the consistency checks");
  verify->add_option("--max-d", verify_max_d, "Largest degree to check")
      ->check(CLI::Range(2, INT_MAX));
  verify->add_option("--cache", session.path, "Memo cache file to load and update");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    session.load();
    int status = kExitOk;
    if (*compute) {
      planar::write_records(std::cout, {planar::make_record(key, session.memo)}, format);
    } else if (*table) {
      planar::write_records(std::cout, planar::table_records(max_d, session.memo), format);
    } else if (*verify) {
      const auto report = planar::run_verification(verify_max_d, session.memo);
      report.print(std::cout);
      status = report.passed() ? kExitOk : kExitFailure;
    }
    session.save();
    return status;
  } catch (const planar::CacheValidationError& e) {
    std::cerr << "cache validation failed for key " << e.key().to_string() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}
