#pragma once

#include "mvl/io.hpp"
#include "mvl/semantics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mvl::case_study {

/// A social group or party, identified with its set of issues. Signs are kept
/// for display only.
struct Actor {
  std::string id;
  std::string state;
  std::string label;
  std::vector<std::string> issues;  // without sign
  std::map<std::string, char> signs;
};

/// Equivalence classes over issues.
class Partition {
 public:
  Partition() = default;
  /// Throws SpecError when classes overlap or are empty.
  explicit Partition(std::vector<std::vector<std::string>> classes);

  /// Throws SpecError for an issue outside every class.
  int class_of(const std::string& issue) const;
  std::set<int> classes_of(const Actor& a) const;
  const std::vector<std::vector<std::string>>& classes() const { return classes_; }

 private:
  std::vector<std::vector<std::string>> classes_;
  std::map<std::string, int> index_;
};

/// How strongly an actor recognises each of its issues in issues of the other
/// side. Weights are exact micro-units (1'000'000 = 1).
struct RecognitionFn {
  std::string source;
  std::vector<std::string> source_issues;
  std::vector<std::string> target_issues;
  std::map<std::pair<std::string, std::string>, std::int64_t> micro;

  /// Weight of (x, y) in micro-units; 0 when absent.
  std::int64_t weight(const std::string& x, const std::string& y) const;
};

inline constexpr std::int64_t kMicro = 1'000'000;

/// Nearest grid point to num/den on a chain, ties rounded up.
Value round_to_grid(const TruthLattice& L, std::int64_t num, std::int64_t den);

/// |classes(x1) & classes(x2)| / |classes(x1)|, rounded to the grid.
Value similarity(const Actor& x1, const Actor& x2, const Partition& p, const TruthLattice& L);

/// Sum of f over source issues x target issues divided by the number of
/// non-zero pairs, rounded to the grid; 0 when there are none.
Value affinity(const RecognitionFn& f, const Actor& target, const TruthLattice& L);

/// Reading of the party-similarity diagram: arrow a -> b labelled v stored as
/// E(b, a) = v (Transposed, the fixture's choice) or as E(a, b) = v.
enum class Orientation { Transposed, AsDrawn };

struct ScenarioInputs {
  io::Json document;
  LatticePtr lattice;
  std::vector<Actor> social;
  std::vector<Actor> political;
  Partition social_partition;
  Partition political_partition;
  std::map<std::string, RecognitionFn> recognition;  // by actor id
  /// Reference tables (rows beta, columns states) keyed by formula text.
  std::vector<std::pair<std::string, ARelation>> reference_tables;
  /// Reference first rows (beta = 0) keyed by formula text.
  std::vector<std::pair<std::string, ASet>> reference_rows;

  const Actor& actor(const std::string& id) const;
};

ScenarioInputs load_inputs(std::string_view json_text);
/// The bundled fixture, parsed once.
const ScenarioInputs& bundled_inputs();

Model build_scenario(const ScenarioInputs& in, Orientation o = Orientation::Transposed);
inline Model build_scenario() { return build_scenario(bundled_inputs()); }

struct ReportRow {
  std::string section;
  std::string quantity;
  std::string location;
  std::string computed;
  std::string reference;
  std::optional<bool> match;  // empty when there is no reference value
  std::string variant = "stored";
};

struct Report {
  std::vector<ReportRow> rows;
  bool frame_compatible = false;
  std::vector<std::string> violations;

  /// Mismatching rows of the stored configuration.
  std::vector<ReportRow> discrepancies() const;
  const ReportRow* find(std::string_view section, std::string_view quantity, std::string_view location,
                        std::string_view variant = "stored") const;
  std::string to_csv() const;
  std::string to_text() const;
};

Report report(const ScenarioInputs& in);
inline Report report() { return report(bundled_inputs()); }

/// First row (beta = 0) of a val table.
ASet first_row(const Interpretation& i, Index states);

}  // namespace mvl::case_study
