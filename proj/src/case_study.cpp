#include "mvl/case_study.hpp"

#include "mvl/errors.hpp"

#include <mvl/case_study_fixture.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mvl::case_study {

Partition::Partition(std::vector<std::vector<std::string>> classes) : classes_(std::move(classes)) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) throw SpecError("empty issue class");
    for (const auto& issue : classes_[c])
      if (!index_.emplace(issue, static_cast<int>(c)).second) throw SpecError("issue " + issue + " appears in two classes");
  }
}

int Partition::class_of(const std::string& issue) const {
  auto it = index_.find(issue);
  if (it == index_.end()) throw SpecError("issue " + issue + " is not covered by the partition");
  return it->second;
}

std::set<int> Partition::classes_of(const Actor& a) const {
  std::set<int> out;
  for (const auto& issue : a.issues) out.insert(class_of(issue));
  return out;
}

std::int64_t RecognitionFn::weight(const std::string& x, const std::string& y) const {
  auto it = micro.find({x, y});
  return it == micro.end() ? 0 : it->second;
}

Value round_to_grid(const TruthLattice& L, std::int64_t num, std::int64_t den) {
  if (!L.is_chain()) throw Unsupported("grid rounding needs a chain");
  if (den <= 0 || num < 0 || num > den) throw DomainError("ratio outside [0,1]");
  const std::int64_t d = L.denominator();
  return static_cast<Value>((2 * num * d + den) / (2 * den));
}

Value similarity(const Actor& x1, const Actor& x2, const Partition& p, const TruthLattice& L) {
  const auto c1 = p.classes_of(x1);
  const auto c2 = p.classes_of(x2);
  if (c1.empty()) throw SpecError("actor " + x1.id + " has no issues");
  std::int64_t common = 0;
  for (int c : c1) common += c2.count(c);
  return round_to_grid(L, common, static_cast<std::int64_t>(c1.size()));
}

Value affinity(const RecognitionFn& f, const Actor& target, const TruthLattice& L) {
  std::int64_t sum = 0, nonzero = 0;
  for (const auto& x : f.source_issues)
    for (const auto& y : target.issues) {
      const std::int64_t w = f.weight(x, y);
      sum += w;
      nonzero += w != 0;
    }
  if (nonzero == 0) return L.bottom();
  return round_to_grid(L, sum, nonzero * kMicro);
}

const Actor& ScenarioInputs::actor(const std::string& id) const {
  for (const auto* side : {&social, &political})
    for (const auto& a : *side)
      if (a.id == id) return a;
  throw SpecError("unknown actor " + id);
}

namespace {

using io::Json;

std::vector<Actor> parse_actors(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of actors");
  std::vector<Actor> out;
  for (const auto& a : j) {
    Actor actor{a.at("id").get<std::string>(), a.at("state").get<std::string>(), a.value("label", std::string()), {}, {}};
    for (const auto& raw : a.at("issues")) {
      std::string issue = raw.get<std::string>();
      char sign = '+';
      if (!issue.empty() && (issue.front() == '+' || issue.front() == '-')) {
        sign = issue.front();
        issue.erase(0, 1);
      }
      actor.signs[issue] = sign;
      actor.issues.push_back(issue);
    }
    if (actor.issues.empty()) throw SpecError(where + ": actor " + actor.id + " has no issues");
    out.push_back(std::move(actor));
  }
  return out;
}

Partition parse_partition(const Json& j) { return Partition(j.get<std::vector<std::vector<std::string>>>()); }

RecognitionFn parse_recognition(const std::string& id, const Actor& source, const Json& j) {
  RecognitionFn f;
  f.source = id;
  f.target_issues = j.at("cols").get<std::vector<std::string>>();
  for (const auto& [x, row] : j.at("rows").items()) {
    if (row.size() != f.target_issues.size()) throw SpecError("/recognition/" + id + "/rows/" + x + ": wrong number of entries");
    f.source_issues.push_back(x);
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double v = row[c].get<double>();
      if (v < 0.0 || v > 1.0) throw SpecError("/recognition/" + id + "/rows/" + x + ": weight outside [0,1]");
      const auto w = static_cast<std::int64_t>(std::llround(v * static_cast<double>(kMicro)));
      if (w != 0) f.micro[{x, f.target_issues[c]}] = w;
    }
  }
  auto a = f.source_issues, b = source.issues;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw SpecError("/recognition/" + id + ": rows must be exactly the issues of actor " + id);
  return f;
}

std::string format_vector(const TruthLattice& L, const ASet& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + L.format(v(i));
  return s + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string match_text(const std::optional<bool>& m) { return m ? (*m ? "yes" : "no") : "n/a"; }

}  // namespace

ScenarioInputs load_inputs(std::string_view json_text) {
  ScenarioInputs in;
  in.document = io::parse_json(json_text, "case-study.json");
  const Json& doc = in.document;
  try {
    in.lattice = io::parse_lattice(doc.at("lattice"));
    in.social = parse_actors(doc.at("actors").at("social"), "/actors/social");
    in.political = parse_actors(doc.at("actors").at("political"), "/actors/political");
    in.social_partition = parse_partition(doc.at("partitions").at("social"));
    in.political_partition = parse_partition(doc.at("partitions").at("political"));
    for (const auto& [id, f] : doc.at("recognition").items()) in.recognition.emplace(id, parse_recognition(id, in.actor(id), f));
    const TruthLattice& L = *in.lattice;
    const Json& ref = doc.at("reference");
    for (const auto& [key, t] : ref.at("tables").items()) {
      const Index cols = t.empty() ? 0 : static_cast<Index>(t[0].size());
      in.reference_tables.emplace_back(key, io::parse_matrix(L, t, L.size(), cols, "/reference/tables/" + key));
    }
    for (const auto& [key, r] : ref.at("first_rows").items())
      in.reference_rows.emplace_back(key, io::parse_vector(L, r, static_cast<Index>(r.size()), "/reference/first_rows/" + key));
  } catch (const Json::exception& e) {
    throw SpecError(std::string("case-study fixture: ") + e.what());
  }
  return in;
}

const ScenarioInputs& bundled_inputs() {
  static const ScenarioInputs in = load_inputs(fixture::kCaseStudyJson);
  return in;
}

Model build_scenario(const ScenarioInputs& in, Orientation o) {
  if (o == Orientation::Transposed) return io::parse_model(in.document);
  Json doc = in.document;
  doc["frame"]["political"]["orientation"] = "as-drawn";
  return io::parse_model(doc);
}

ASet first_row(const Interpretation& i, Index states) { return i.val.head(states); }

Report report(const ScenarioInputs& in) {
  Report rep;
  const TruthLattice& L = *in.lattice;
  const Model stored = build_scenario(in, Orientation::Transposed);
  const Model drawn = build_scenario(in, Orientation::AsDrawn);
  const HeteroFrame& F = stored.frame();

  auto cell = [&](const AGraph& rows, Index r, const AGraph& cols, Index c) {
    return "(" + rows.states[static_cast<std::size_t>(r)] + "," + cols.states[static_cast<std::size_t>(c)] + ")";
  };
  auto actor_at = [&](const std::vector<Actor>& actors, const std::string& state) -> const Actor& {
    for (const auto& a : actors)
      if (a.state == state) return a;
    throw SpecError("no actor for state " + state);
  };
  auto value_row = [&](std::string section, std::string quantity, std::string location, Value computed, Value reference,
                       std::string variant = "stored") {
    rep.rows.push_back({std::move(section), std::move(quantity), std::move(location), L.format(computed), L.format(reference),
                        computed == reference, std::move(variant)});
  };

  // Similarity relations recomputed from issue classes.
  struct SimilaritySide {
    const char* name;
    const AGraph& graph;
    const std::vector<Actor>& actors;
    const Partition& partition;
  };
  for (const SimilaritySide& s : {SimilaritySide{"E_S", F.social, in.social, in.social_partition},
                                  SimilaritySide{"E_P", F.political, in.political, in.political_partition}}) {
    for (Index i = 0; i < s.graph.size(); ++i)
      for (Index j = 0; j < s.graph.size(); ++j) {
        const Actor& a = actor_at(s.actors, s.graph.states[static_cast<std::size_t>(i)]);
        const Actor& b = actor_at(s.actors, s.graph.states[static_cast<std::size_t>(j)]);
        value_row(s.name, "similarity", cell(s.graph, i, s.graph, j), similarity(a, b, s.partition, L), s.graph.edges(i, j));
      }
  }

  // Affinity relations recomputed from recognition tables.
  struct AffinitySide {
    const char* name;
    const AGraph& rows;
    const AGraph& cols;
    const std::vector<Actor>& sources;
    const std::vector<Actor>& targets;
    const ARelation& figure;
  };
  for (const AffinitySide& s : {AffinitySide{"R_loz", F.social, F.political, in.social, in.political, F.r_loz},
                                AffinitySide{"R_dia", F.political, F.social, in.political, in.social, F.r_dia}}) {
    for (Index i = 0; i < s.rows.size(); ++i)
      for (Index j = 0; j < s.cols.size(); ++j) {
        const Actor& src = actor_at(s.sources, s.rows.states[static_cast<std::size_t>(i)]);
        const Actor& tgt = actor_at(s.targets, s.cols.states[static_cast<std::size_t>(j)]);
        auto f = in.recognition.find(src.id);
        if (f == in.recognition.end()) throw SpecError("no recognition function for actor " + src.id);
        value_row(s.name, "affinity", cell(s.rows, i, s.cols, j), affinity(f->second, tgt, L), s.figure(i, j));
      }
  }

  // Full val tables.
  for (const auto& [text, table] : in.reference_tables) {
    const FormulaPtr phi = parse(text);
    const Interpretation v = extend(stored, *phi);
    const AGraph& g = stored.graph(phi->sort());
    const ProductTable t = as_table(v.val, g.size());
    for (Value beta = 0; beta < L.size(); ++beta)
      for (Index z = 0; z < g.size(); ++z)
        value_row("table", text, "(" + L.format(beta) + "," + g.states[static_cast<std::size_t>(z)] + ")", t(beta, z), table(beta, z));
  }

  // First rows, under both readings of the party diagram when it matters.
  for (const auto& [text, row] : in.reference_rows) {
    const FormulaPtr phi = parse(text);
    const Model* models[] = {&stored, &drawn};
    const char* variants[] = {"stored", "as-drawn"};
    for (int k = 0; k < 2; ++k) {
      const Model& m = *models[k];
      if (k == 1) {
        // Only formulas whose value depends on E_P differ between the readings.
        const ASet a = extend(stored, *phi).val, b = extend(drawn, *phi).val;
        if (phi->sort() == Sort::PP && (a == b).all()) continue;
      }
      const AGraph& g = m.graph(phi->sort());
      const ASet r = first_row(extend(m, *phi), g.size());
      for (Index z = 0; z < g.size(); ++z)
        value_row("first row", text, g.states[static_cast<std::size_t>(z)], r(z), row(z), variants[k]);
    }
  }

  // Atom descr vectors that are not Galois-stable get closed on input.
  const Json& atoms = in.document.at("atoms");
  for (const auto& [sort_name, entries] : atoms.items()) {
    const Sort s = sort_name == "SD" ? Sort::SD : Sort::PP;
    for (const auto& [name, entry] : entries.items()) {
      const AGraph& g = stored.graph(s);
      const ASet given = io::parse_vector(L, entry.is_array() ? entry : entry.at("descr"), g.size(), "/atoms/" + sort_name + "/" + name);
      const ASet closed = stored.atom(name, s).descr;
      rep.rows.push_back({"descr", sort_name + ": " + name, "closure", format_vector(L, closed), format_vector(L, given),
                          (closed == given).all(), "stored"});
    }
  }

  const auto violations = compat_check(F);
  rep.frame_compatible = violations.empty();
  for (const auto& v : violations) rep.violations.push_back(describe(F, v));
  rep.rows.push_back({"frame", "compatibility", "all families",
                      rep.frame_compatible ? "compatible" : "incompatible (" + std::to_string(violations.size()) + " failing singletons)",
                      "", std::nullopt, "stored"});
  return rep;
}

std::vector<ReportRow> Report::discrepancies() const {
  std::vector<ReportRow> out;
  for (const auto& r : rows)
    if (r.variant == "stored" && r.match && !*r.match) out.push_back(r);
  return out;
}

const ReportRow* Report::find(std::string_view section, std::string_view quantity, std::string_view location, std::string_view variant) const {
  for (const auto& r : rows)
    if (r.section == section && r.quantity == quantity && r.location == location && r.variant == variant) return &r;
  return nullptr;
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "section,quantity,location,variant,computed,reference,match\n";
  for (const auto& r : rows)
    out << csv_field(r.section) << ',' << csv_field(r.quantity) << ',' << csv_field(r.location) << ',' << csv_field(r.variant) << ','
        << csv_field(r.computed) << ',' << csv_field(r.reference) << ',' << match_text(r.match) << '\n';
  return out.str();
}

std::string Report::to_text() const {
  const std::vector<std::string> head = {"section", "quantity", "location", "variant", "computed", "reference", "match"};
  auto fields = [](const ReportRow& r) {
    return std::vector<std::string>{r.section, r.quantity, r.location, r.variant, r.computed, r.reference, match_text(r.match)};
  };
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& r : rows) {
    const auto f = fields(r);
    for (std::size_t c = 0; c < f.size(); ++c) width[c] = std::max(width[c], f[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& f) {
    for (std::size_t c = 0; c < f.size(); ++c) {
      out << f[c];
      if (c + 1 < f.size()) out << std::string(width[c] - f[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(head);
  for (const auto& r : rows) line(fields(r));

  const auto diff = discrepancies();
  out << "\nDiscrepancies (" << diff.size() << "):\n";
  for (const auto& r : diff)
    out << "  " << r.section << ' ' << r.quantity << ' ' << r.location << ": computed " << r.computed << ", reference " << r.reference << '\n';
  out << "\nFrame: " << (frame_compatible ? "compatible" : "incompatible") << '\n';
  const std::size_t shown = std::min<std::size_t>(violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) out << "  " << violations[i] << '\n';
  if (violations.size() > shown) out << "  ... " << violations.size() - shown << " more\n";
  return out.str();
}

}  // namespace mvl::case_study
