// mvl: command-line driver for frames, models, contexts and the case study.

#include "mvl/case_study.hpp"
#include "mvl/errors.hpp"
#include "mvl/io.hpp"
#include "mvl/search.hpp"
#include "mvl/semantics.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace mvl;

namespace {

enum Exit { kOk = 0, kFails = 1, kInputError = 2 };

struct Globals {
  std::string lattice;
  std::uint64_t seed = 0;
  std::string output = "text";
  bool output_given = false;

  bool csv() const { return output == "csv"; }
  LatticePtr fallback() const { return lattice.empty() ? nullptr : share(io::lattice_from_name(lattice)); }
};

// Bare names of bundled fixtures resolve against the data directory.
fs::path resolve(const std::string& arg) {
  fs::path p(arg);
  if (fs::exists(p)) return p;
#ifdef MVL_DATA_DIR
  fs::path bundled = fs::path(MVL_DATA_DIR) / p;
  if (fs::exists(bundled)) return bundled;
#endif
  return p;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> formatted(const TruthLattice& L, const ASet& v) {
  std::vector<std::string> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(L.format(v(i)));
  return out;
}

// Aligned text table or CSV.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, bool csv) {
  if (csv) {
    for (const auto& r : rows) out << join(r, ",") << '\n';
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  }
}

void print_relation(std::ostream& out, const TruthLattice& L, const std::string& title, const std::vector<std::string>& rows,
                    const std::vector<std::string>& cols, const ARelation& R) {
  std::vector<std::vector<std::string>> t;
  std::vector<std::string> head = {title};
  head.insert(head.end(), cols.begin(), cols.end());
  t.push_back(head);
  for (Index i = 0; i < R.rows(); ++i) {
    std::vector<std::string> r = {rows[static_cast<std::size_t>(i)]};
    for (Index j = 0; j < R.cols(); ++j) r.push_back(L.format(R(i, j)));
    t.push_back(r);
  }
  print_table(out, t, false);
}

void print_model(std::ostream& out, const Model& m) {
  const HeteroFrame& F = m.frame();
  const TruthLattice& L = F.L();
  out << "lattice: " << L.describe() << '\n';
  print_relation(out, L, "E_S", F.social.states, F.social.states, F.social.edges);
  print_relation(out, L, "E_P", F.political.states, F.political.states, F.political.edges);
  print_relation(out, L, "R_dia", F.political.states, F.social.states, F.r_dia);
  print_relation(out, L, "R_loz", F.social.states, F.political.states, F.r_loz);
  for (const auto& [key, interp] : m.atoms())
    out << to_string(key.second) << ": " << key.first << " descr = (" << join(formatted(L, interp.descr), ", ") << ")\n";
}

Interpretation evaluate(const Model& m, const FormulaPtr& phi) {
  EvalStats stats;
  Interpretation i = extend(m, phi, &stats);
  if (stats.closed_modal_images > 0)
    std::cerr << "warning: frame is not compatible; " << stats.closed_modal_images << " modal image(s) were closed\n";
  return i;
}

// Index of `state` on the evaluation side of `s`.
Index locate(const Model& m, Sort s, const std::string& state) {
  const AGraph& g = m.graph(s);
  const Index z = g.find(state);
  if (z >= 0) return z;
  if (m.graph(opposite(s)).find(state) >= 0)
    throw SideMismatch("state '" + state + "' is on the " + to_string(evaluation_side(opposite(s))) + " side; " + to_string(s) +
                       " formulas are evaluated on the " + to_string(evaluation_side(s)) + " side");
  throw UnknownState("unknown state '" + state + "'");
}

int cmd_check_frame(const Globals& g, const std::string& path) {
  const FramePtr F = io::load_frame(resolve(path), g.fallback());
  const auto violations = compat_check(*F);
  if (g.csv()) {
    std::cout << "relation,lift,beta,alpha,state,violation\n";
    for (const auto& v : violations)
      std::cout << (v.relation == CrossRelation::Diamond ? "R_dia" : "R_loz") << ',' << (v.lift == Lift::Zero ? "0" : "1") << ','
                << F->L().format(v.beta) << ',' << (v.alpha < 0 ? "" : F->L().format(v.alpha)) << ',' << v.state << ",\""
                << describe(*F, v) << "\"\n";
  } else if (violations.empty()) {
    std::cout << "compatible\n";
  } else {
    std::cout << "incompatible: " << violations.size() << " violations\n";
    for (const auto& v : violations) std::cout << "  " << describe(*F, v) << '\n';
  }
  return violations.empty() ? kOk : kFails;
}

struct EvalArgs {
  std::string model, formula, beta, state;
  bool descr = false;
};

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const Model m = io::load_model(resolve(a.model), g.fallback());
  const FormulaPtr phi = parse(a.formula);
  const Index z = locate(m, phi->sort(), a.state);
  const Interpretation i = evaluate(m, phi);
  const TruthLattice& L = m.L();
  if (a.descr) {
    std::cout << L.format(i.descr(z)) << '\n';
    return kOk;
  }
  if (a.beta.empty()) throw SpecError("--beta is required unless --descr is given");
  const Value beta = L.parse(a.beta);
  std::cout << L.format(i.val(product_index(beta, z, m.graph(phi->sort()).size()))) << '\n';
  return kOk;
}

int cmd_table(const Globals& g, const std::string& model, const std::string& formula) {
  const Model m = io::load_model(resolve(model), g.fallback());
  const FormulaPtr phi = parse(formula);
  const Interpretation i = evaluate(m, phi);
  const TruthLattice& L = m.L();
  const AGraph& graph = m.graph(phi->sort());
  const ProductTable t = as_table(i.val, graph.size());

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"beta"};
  head.insert(head.end(), graph.states.begin(), graph.states.end());
  rows.push_back(head);
  for (Index b = 0; b < t.rows(); ++b) {
    std::vector<std::string> r = {L.format(static_cast<Value>(b))};
    for (Index z = 0; z < t.cols(); ++z) r.push_back(L.format(t(b, z)));
    rows.push_back(r);
  }
  std::vector<std::string> d = {"descr"};
  const auto ds = formatted(L, i.descr);
  d.insert(d.end(), ds.begin(), ds.end());
  rows.push_back(d);
  if (!g.csv()) std::cout << "val(" << to_string(*phi) << ")\n";
  print_table(std::cout, rows, g.csv());
  return kOk;
}

int cmd_sequent(const Globals& g, const std::string& model, const std::string& text, bool valid) {
  const Model m = io::load_model(resolve(model), g.fallback());
  const Sequent s = parse_sequent(text);
  if (!valid) {
    const bool t = sequent_true(m, s);
    std::cout << (t ? "true" : "false") << '\n';
    return t ? kOk : kFails;
  }
  ValidityOptions opts;
  opts.seed = g.seed;
  const ValidityVerdict v = sequent_valid(m.frame_ptr(), s, opts);
  std::cout << (v.holds ? "valid" : "not valid") << " (" << (v.sampled ? "sampled" : "exhaustive") << ", " << v.models_checked
            << " interpretations)\n";
  if (v.counterexample)
    for (const auto& [key, interp] : *v.counterexample)
      std::cout << "  " << to_string(key.second) << ": " << key.first << " descr = (" << join(formatted(m.L(), interp.descr), ", ")
                << ")\n";
  return v.holds ? kOk : kFails;
}

struct CountermodelArgs {
  std::string sequent;
  int max_states = 1;
  bool exhaustive = false;
};

int cmd_countermodel(const Globals& g, const CountermodelArgs& a) {
  const Sequent s = parse_sequent(a.sequent);
  search::CountermodelBounds b;
  b.max_states = a.max_states;
  b.exhaustive = a.exhaustive;
  b.seed = g.seed;
  b.lattice = g.fallback();
  const auto r = search::countermodel_search(s, b);
  std::cout << r.verdict() << '\n';
  std::cout << "frames checked: " << r.frames_checked << " (" << r.frames_incompatible << " incompatible skipped)\n";
  std::cout << "models checked: " << r.models_checked << '\n';
  std::cout << "seed: " << r.seed << '\n';
  if (r.witness) print_model(std::cout, *r.witness);
  return r.found() ? kFails : kOk;
}

int cmd_concepts(const Globals& g, const std::string& path, const std::string& mode) {
  const APolarity P = io::load_context(resolve(path), g.fallback());
  const auto m = mode == "exhaustive" ? EnumerationMode::Exhaustive : EnumerationMode::ClosureGeneration;
  const auto concepts = enumerate_concepts(P, m);
  const TruthLattice& L = P.L();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"#"};
  for (const auto& o : P.objects) head.push_back("ext:" + o);
  for (const auto& x : P.attributes) head.push_back("int:" + x);
  rows.push_back(head);
  for (std::size_t k = 0; k < concepts.size(); ++k) {
    std::vector<std::string> r = {std::to_string(k)};
    for (const auto& v : formatted(L, concepts[k].extent)) r.push_back(v);
    for (const auto& v : formatted(L, concepts[k].intent)) r.push_back(v);
    rows.push_back(r);
  }
  if (!g.csv()) std::cout << concepts.size() << " concepts\n";
  print_table(std::cout, rows, g.csv());
  return kOk;
}

int cmd_case_study(const Globals& g, bool full, const std::string& input) {
  std::optional<case_study::ScenarioInputs> own;
  if (!input.empty()) {
    const fs::path p = resolve(input);
    own = case_study::load_inputs(io::read_json_file(p).dump());
  }
  const auto& in = own ? *own : case_study::bundled_inputs();
  const auto rep = case_study::report(in);
  if (full) {
    // A report is meant for diffing, so CSV unless text was asked for.
    std::cout << ((g.output_given && !g.csv()) ? rep.to_text() : rep.to_csv());
    return kOk;
  }
  std::size_t checked = 0;
  for (const auto& r : rep.rows)
    if (r.variant == "stored" && r.match) ++checked;
  const auto diff = rep.discrepancies();
  std::cout << "values checked: " << checked << '\n';
  std::cout << "discrepancies: " << diff.size() << '\n';
  for (const auto& r : diff)
    std::cout << "  " << r.section << ' ' << r.quantity << ' ' << r.location << ": computed " << r.computed << ", reference "
              << r.reference << '\n';
  std::cout << "frame: " << (rep.frame_compatible ? "compatible" : "incompatible") << " (" << rep.violations.size()
            << " violations)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-valued two-sorted modal logic over graph-based frames"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--lattice", g.lattice, "Truth lattice (luk11, godel5, bool, ...) when a file names none");
  app.add_option("--seed", g.seed, "Seed for sampled searches");
  auto* out_opt = app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"csv", "text"}));

  std::string path;
  auto* check = app.add_subcommand("check-frame", "Check the compatibility conditions of a frame");
  check->add_option("file", path, "Frame or model file")->required();

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Value of a formula at (beta, state)");
  eval->add_option("model", ea.model)->required();
  eval->add_option("--formula,-f", ea.formula)->required();
  eval->add_option("--beta,-b", ea.beta);
  eval->add_option("--state,-z", ea.state)->required();
  eval->add_flag("--descr", ea.descr, "Print descr(state) instead");

  std::string model, formula;
  auto* table = app.add_subcommand("table", "Full val table and descr vector of a formula");
  table->add_option("model", model)->required();
  table->add_option("--formula,-f", formula)->required();

  std::string sequent_text;
  bool valid = false;
  auto* seq = app.add_subcommand("sequent", "Truth of a sequent in a model");
  seq->add_option("model", model)->required();
  seq->add_option("sequent", sequent_text)->required();
  seq->add_flag("--valid", valid, "Check every stable interpretation on the model's frame");

  CountermodelArgs ca;
  auto* cm = app.add_subcommand("countermodel", "Search small frames for a model refuting a sequent");
  cm->add_option("sequent", ca.sequent)->required();
  cm->add_option("--max-states", ca.max_states)->check(CLI::Range(1, 8));
  cm->add_flag("--exhaustive", ca.exhaustive);

  std::string mode = "generation";
  auto* concepts = app.add_subcommand("concepts", "Concepts of a formal context");
  concepts->add_option("context", path)->required();
  concepts->add_option("--mode", mode)->check(CLI::IsMember({"generation", "exhaustive"}));

  bool full = false;
  std::string input;
  auto* cs = app.add_subcommand("case-study", "Recompute the bundled case study");
  cs->add_flag("--report", full, "Emit every recomputed value with its reference");
  cs->add_option("--input", input, "Alternative scenario file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  g.output_given = out_opt->count() > 0;

  try {
    if (*check) return cmd_check_frame(g, path);
    if (*eval) return cmd_eval(g, ea);
    if (*table) return cmd_table(g, model, formula);
    if (*seq) return cmd_sequent(g, model, sequent_text, valid);
    if (*cm) return cmd_countermodel(g, ca);
    if (*concepts) return cmd_concepts(g, path, mode);
    if (*cs) return cmd_case_study(g, full, input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
