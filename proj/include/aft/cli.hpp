#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aft::cli {

enum class Frontend { Lp, Adf, Table };
enum class Format { Text, Json };

/// Selector names accepted by --semantics, in report order.
const std::vector<std::string>& semantics_names();

struct RunConfig {
  Frontend frontend = Frontend::Lp;
  /// Path, or "-" for standard input.
  std::string input = "-";
  /// Subset of semantics_names(); "all" expands to every selector.
  std::vector<std::string> semantics = {"all"};
  Format format = Format::Text;
  bool trace = false;
  /// Verify the approximator before computing and force inner validation.
  bool validate = false;
  std::uint64_t seed = 42;
};

/// Computes the selected semantics and writes the report. Exit codes: 0 on
/// success, 1 on input errors, 2 on violated invariants.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Law-by-law verdict on the input's approximator; 0 iff every law holds.
int check(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Kripke-Kleene under the frontend approximator, the ultimate
/// approximator and the convex lifting, with pairwise precision
/// comparisons.
int compare(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// The same comparison over `count` seeded random programs on 3 to 4 atoms;
/// reports how often each construction is strictly more precise.
int compare_corpus(std::uint64_t seed, std::size_t count, Format format, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aft::cli
