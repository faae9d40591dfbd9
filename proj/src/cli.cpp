#include "heegaard/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "heegaard/complex.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/error.hpp"
#include "heegaard/format.hpp"
#include "heegaard/oracle.hpp"
#include "heegaard/twist.hpp"

namespace heegaard {

namespace {

using nlohmann::ordered_json;

std::size_t at(int v) { return static_cast<std::size_t>(v); }

struct Outcome {
  int code = kHolds;
  std::string out;
  std::string err;
};

struct Options {
  bool json = false;
  bool irreducible = false;
  std::string side = "P";
  std::string pants_i;
  std::string pants_j;
};

DiagramFile load(const std::string& file) { return parse_diagram_file(load_diagram_text(file)); }

const NormalDiagram& need_level_two(const DiagramFile& f) {
  if (!f.normal) throw InvalidInput("level-2 data required (file has words only)");
  return *f.normal;
}

/// Complex of a level-2 file, reduced to minimal position when cellular.
CurvePairComplex working_complex(const NormalDiagram& nd) {
  const CurvePairComplex c = build_complex(nd);
  if (!c.cellular) return c;
  return reduce_bigons(c);
}

IntersectionMatrix file_matrix(const DiagramFile& f) {
  if (!f.normal) return intersection_matrix(f.sequence);
  return intersection_matrix(working_complex(*f.normal));
}

std::string matrix_text(const IntersectionMatrix& m, const std::vector<std::string>& names) {
  std::size_t width = 2;
  for (const auto& n : names) width = std::max(width, n.size());
  for (long long v : m.entries) width = std::max(width, std::to_string(v).size());
  std::ostringstream s;
  s << "|Di ∩ Ej| (" << (m.reduced ? "reduced" : "raw") << " counts; rows cuffs, columns E-curves)\n";
  s << std::setw(4) << "";
  for (const auto& n : names) s << " " << std::setw(static_cast<int>(width)) << n;
  s << "\n";
  for (int i = 0; i < m.rows; ++i) {
    s << std::setw(4) << i + 1;
    for (int j = 0; j < m.cols; ++j) s << " " << std::setw(static_cast<int>(width)) << m.at(i, j);
    s << "\n";
  }
  return s.str();
}

ordered_json matrix_json(const IntersectionMatrix& m, const std::vector<std::string>& names) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return {{"reduced", m.reduced}, {"columns", names}, {"rows", rows}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json certificate_json(const std::optional<Certificate>& cert) {
  if (!cert) return nullptr;
  return {{"kind", cert->kind == CertificateKind::EvenParity ? "even_parity" : "rectangle"},
          {"conclusion", conclusion_name(cert->conclusion)},
          {"assumptions", cert->assumptions},
          {"evidence", cert->evidence}};
}

std::string table_text(const std::array<std::array<bool, 3>, 3>& table) {
  std::ostringstream s;
  s << "      ab bc ca  (dual slots)\n";
  for (int x = 0; x < 3; ++x) {
    s << "  " << slot_pair_name(x) << " ";
    for (int y = 0; y < 3; ++y) s << "  " << (table[at(x)][at(y)] ? "x" : ".");
    s << "\n";
  }
  return s.str();
}

ordered_json table_json(const std::array<std::array<bool, 3>, 3>& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table) rows.push_back({row[0], row[1], row[2]});
  return rows;
}

// ---------------------------------------------------------------------------
// file commands

Outcome cmd_validate(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  Outcome r;
  std::ostringstream s;
  ordered_json j{{"file", file}, {"valid", true}, {"level", f.level()}, {"genus", f.pd().genus()}};
  s << "valid level-" << f.level() << " diagram: genus " << f.pd().genus() << ", "
    << f.sequence.curve_count() << " E-curves";
  if (f.normal) {
    const CurvePairComplex c = build_complex(*f.normal);
    const EulerAuditReport a = euler_audit(c);
    s << ", " << c.vertex_count() << " crossings, " << (c.cellular ? "cellular" : "non-cellular")
      << ", " << c.bigon_faces().size() << " bigons";
    j["crossings"] = c.vertex_count();
    j["cellular"] = c.cellular;
    j["bigons"] = c.bigon_faces().size();
    j["aux"] = f.normal->aux_curves().size();
    if (!a.pass()) {
      r.code = kInvalid;
      j["valid"] = false;
      j["problems"] = a.problems;
      r.err = "audit: " + a.problems.front() + "\n";
    }
  } else {
    const auto disjoint = f.sequence.disjoint_curves();
    if (!disjoint.empty()) s << ", " << disjoint.size() << " disjoint from every cuff";
    j["disjoint_curves"] = disjoint.size();
  }
  r.out = o.json ? dump(j) : s.str() + "\n";
  return r;
}

Outcome cmd_matrix(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const IntersectionMatrix m = file_matrix(f);
  Outcome r;
  r.out = o.json ? dump(matrix_json(m, f.sequence.names)) : matrix_text(m, f.sequence.names);
  return r;
}

Outcome cmd_parity(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const IntersectionMatrix m = file_matrix(f);
  const auto cert = certify(m, o.irreducible);
  Outcome r;
  r.code = cert ? kHolds : kFails;
  if (o.json) {
    r.out = dump({{"file", file}, {"parity", parity_check(m)}, {"matrix", matrix_json(m, f.sequence.names)},
                  {"certificate", certificate_json(cert)}, {"report", certificate_text(cert)}});
  } else {
    r.out = certificate_text(cert) + "\n";
  }
  return r;
}

Outcome cmd_rectangles(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const CurvePairComplex c = working_complex(need_level_two(f));
  Outcome r;
  if (!c.cellular) {
    r.code = kFails;
    r.out = o.json ? dump({{"file", file}, {"holds", false}, {"note", "data is not cellular"}})
                   : "rectangle condition fails: data is not cellular\n";
    return r;
  }
  const DualPantsStructure dual = derive_dual_pants(c);
  const RectangleConditionResult res = rectangle_condition(c, dual);
  const RectangleCensus census = rectangle_census(c, dual);
  r.code = res.holds ? kHolds : kFails;
  const std::string head = res.holds ? "rectangle condition holds; certificate: strongly irreducible"
                                     : "rectangle condition fails; no conclusion";
  if (o.json) {
    ordered_json pairs = ordered_json::array();
    for (const TightnessReport& t : res.reports) {
      pairs.push_back({{"p", c.pd.pants_name(t.p_pants)},
                       {"q", dual.pants.pants_name(t.q_pants)},
                       {"tight", t.tight},
                       {"table", table_json(t.table)}});
    }
    ordered_json cj = ordered_json::array();
    for (const auto& [key, count] : census) {
      cj.push_back({{"p", c.pd.pants_name(key.p_pants)},
                    {"q", dual.pants.pants_name(key.q_pants)},
                    {"p_slots", slot_pair_name(slot_pair_index(key.p_slots[0], key.p_slots[1]))},
                    {"q_slots", slot_pair_name(slot_pair_index(key.q_slots[0], key.q_slots[1]))},
                    {"count", count}});
    }
    r.out = dump({{"file", file}, {"holds", res.holds}, {"pairs", pairs}, {"census", cj},
                  {"certificate", certificate_json(res.certificate)}, {"report", head}});
    return r;
  }
  std::ostringstream s;
  int tight = 0;
  for (const TightnessReport& t : res.reports) tight += t.tight ? 1 : 0;
  s << head << "\n";
  s << tight << " of " << res.reports.size() << " pants pairs tight\n";
  for (const TightnessReport& t : res.reports) {
    int cells = 0;
    for (const auto& row : t.table) cells += static_cast<int>(std::count(row.begin(), row.end(), true));
    s << "  " << c.pd.pants_name(t.p_pants) << " x " << dual.pants.pants_name(t.q_pants) << ": " << cells
      << "/9" << (t.tight ? " tight" : "") << "\n";
  }
  r.out = s.str();
  return r;
}

int resolve_pants(const PantsDecomposition& pd, const std::string& token) {
  int p = pd.find_pants(token);
  if (p >= 0) return p;
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size() && v >= 1 && v <= pd.pants_count()) return v - 1;
  } catch (const std::exception&) {
  }
  throw InvalidInput("no pants '" + token + "'");
}

Outcome cmd_tight(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const CurvePairComplex c = working_complex(need_level_two(f));
  if (!c.cellular) throw InvalidInput("data is not cellular; dual pants cannot be traced");
  const DualPantsStructure dual = derive_dual_pants(c);
  const int i = resolve_pants(c.pd, o.pants_i);
  const int j = resolve_pants(dual.pants, o.pants_j);
  const TightnessReport t = tightness_report(c, dual, i, j);
  Outcome r;
  r.code = t.tight ? kHolds : kFails;
  const std::string head = c.pd.pants_name(i) + " x " + dual.pants.pants_name(j) +
                           (t.tight ? ": tight" : ": not tight");
  if (o.json) {
    r.out = dump({{"p", c.pd.pants_name(i)},
                  {"q", dual.pants.pants_name(j)},
                  {"tight", t.tight},
                  {"bigon_witness", t.bigon_witness ? ordered_json(*t.bigon_witness) : ordered_json(nullptr)},
                  {"table", table_json(t.table)}});
  } else {
    r.out = head + "\n" + table_text(t.table);
  }
  return r;
}

Outcome cmd_waves(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const CurvePairComplex c = working_complex(need_level_two(f));
  if (o.side != "P" && o.side != "Q") throw InvalidInput("--side must be P or Q");
  const ArcFamily side = o.side == "P" ? ArcFamily::P : ArcFamily::Q;
  const auto shadows = detect_returning_arcs(c, side);
  std::optional<DualPantsStructure> dual;
  if (side == ArcFamily::P && c.cellular) dual = derive_dual_pants(c);
  auto pants_name = [&](int p) {
    return side == ArcFamily::Q ? c.pd.pants_name(p) : dual->pants.pants_name(p);
  };
  Outcome r;
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const WaveShadow& w : shadows) {
      list.push_back({{"curve", c.arr.curves[at(w.curve)].name},
                      {"pants", pants_name(w.pants)},
                      {"slot", std::string(1, label_char(w.slot))}});
    }
    r.out = dump({{"file", file}, {"side", o.side}, {"count", shadows.size()}, {"shadows", list}});
    return r;
  }
  std::ostringstream s;
  s << shadows.size() << " essential returning arc(s) of family " << o.side << "\n";
  for (const WaveShadow& w : shadows) {
    s << "  " << c.arr.curves[at(w.curve)].name << " in " << pants_name(w.pants) << " at slot "
      << label_char(w.slot) << "\n";
  }
  r.out = s.str();
  return r;
}

Outcome cmd_audit(const std::string& file, const Options& o) {
  const DiagramFile f = load(file);
  const CurvePairComplex c = build_complex(need_level_two(f));
  const EulerAuditReport a = euler_audit(c);
  Outcome r;
  r.code = a.pass() ? kHolds : kFails;
  if (o.json) {
    r.out = dump({{"file", file}, {"pass", a.pass()}, {"V", a.vertices}, {"E", a.edges}, {"F", a.faces},
                  {"euler", a.euler}, {"expected", a.expected}, {"degree_four", a.degree_four},
                  {"alternating", a.alternating}, {"non_cellular", a.non_cellular},
                  {"problems", a.problems}});
    return r;
  }
  std::ostringstream s;
  s << "V=" << a.vertices << " E=" << a.edges << " F=" << a.faces << " V-E+F=" << a.euler
    << " (2-2g=" << a.expected << ")\n";
  s << "degree 4: " << (a.degree_four ? "yes" : "no") << ", alternating: " << (a.alternating ? "yes" : "no")
    << (a.non_cellular ? ", non-cellular" : "") << "\n";
  for (const auto& p : a.problems) s << "problem: " << p << "\n";
  s << (a.pass() ? "audit passed" : "audit failed") << "\n";
  r.out = s.str();
  return r;
}

// ---------------------------------------------------------------------------
// diagram-producing commands

void emit_diagram(const DiagramFile& f, const std::string& out_path, bool json, std::ostream& out,
                  const std::string& summary) {
  const std::string text = json ? to_json(f) + "\n" : serialize(f);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + out_path);
  file << text;
  out << summary << "\nwritten to " << out_path << "\n";
}

/// Runs `job` over every file, `jobs` at a time, and prints results in input order.
int run_batch(const std::vector<std::string>& files, int jobs,
              const std::function<Outcome(const std::string&)>& job, std::ostream& out, std::ostream& err) {
  std::vector<Outcome> results(files.size());
  auto guarded = [&](std::size_t k) {
    try {
      results[k] = job(files[k]);
    } catch (const std::exception& e) {
      results[k] = Outcome{kInvalid, "", std::string("error: ") + e.what() + "\n"};
    }
  };
  const std::size_t workers = std::min<std::size_t>(files.size(), static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < files.size(); ++k) guarded(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < files.size(); k = next++) guarded(k);
      });
    }
    for (auto& t : pool) t.join();
  }
  int worst = kHolds;
  for (std::size_t k = 0; k < files.size(); ++k) {
    if (files.size() > 1) out << "== " << files[k] << " ==\n";
    out << results[k].out;
    err << results[k].err;
    worst = std::max(worst, results[k].code);
  }
  return worst;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard diagram checks: parity, rectangles, waves, twists", "heegaard"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Options o;
  std::vector<std::string> files;
  int jobs = 1;
  std::string alpha;
  std::string out_path;
  int power = 1;
  int genus = 2;
  int twists = 0;
  std::uint64_t seed = 0;
  bool even = false;
  std::string example_name;
  std::string single_file;

  auto add_files = [&](CLI::App* sub, bool batch) {
    if (batch) {
      sub->add_option("FILE", files, "diagram file(s) or builtin fixture name(s)")->required();
      sub->add_option("--jobs", jobs, "check files concurrently")->check(CLI::PositiveNumber);
    } else {
      sub->add_option("FILE", single_file, "diagram file or builtin fixture name")->required();
    }
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a diagram");
  add_files(validate, true);
  validate->add_flag("--json", o.json);
  auto* matrix = app.add_subcommand("matrix", "intersection matrix |Di ∩ Ej|");
  add_files(matrix, true);
  matrix->add_flag("--json", o.json);
  auto* parity = app.add_subcommand("parity", "even parity condition");
  add_files(parity, true);
  parity->add_flag("--irreducible", o.irreducible, "assume the manifold is irreducible");
  parity->add_flag("--json", o.json);
  auto* rectangles = app.add_subcommand("rectangles", "rectangle condition (level 2)");
  add_files(rectangles, true);
  rectangles->add_flag("--json", o.json);
  auto* tight = app.add_subcommand("tight", "tightness of one pants pair (level 2)");
  add_files(tight, false);
  tight->add_option("I", o.pants_i, "base pants (name or 1-based index)")->required();
  tight->add_option("J", o.pants_j, "dual pants (name or 1-based index)")->required();
  tight->add_flag("--json", o.json);
  auto* waves = app.add_subcommand("waves", "essential returning arcs (level 2)");
  add_files(waves, true);
  waves->add_option("--side", o.side, "arc family P or Q")->required()->check(CLI::IsMember({"P", "Q"}));
  waves->add_flag("--json", o.json);
  auto* twist = app.add_subcommand("twist", "Dehn twist of the E-curves along an auxiliary curve");
  add_files(twist, false);
  twist->add_option("--alpha", alpha, "curve to twist along")->required();
  twist->add_option("--power", power, "twist power (positive = right-handed)")->required();
  twist->add_option("--out", out_path, "write the result here");
  twist->add_flag("--json", o.json);
  auto* surgery = app.add_subcommand("surgery", "diagram of 1/1-surgery along a curve");
  add_files(surgery, false);
  surgery->add_option("--alpha", alpha, "surgery curve")->required();
  surgery->add_option("--power", power, "+1 or -1")->check(CLI::IsMember({1, -1}));
  surgery->add_option("--out", out_path, "write the result here");
  surgery->add_flag("--json", o.json);
  auto* random = app.add_subcommand("random", "random diagram from the generator");
  random->add_option("--genus", genus)->required()->check(CLI::Range(2, 12));
  random->add_option("--twists", twists)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--seed", seed)->required();
  random->add_flag("--even", even, "keep even parity");
  random->add_option("--out", out_path, "write the result here");
  random->add_flag("--json", o.json);
  auto* example = app.add_subcommand("example", "print a builtin fixture");
  example->add_option("NAME", example_name)->required();
  example->add_option("--out", out_path, "write the fixture here");
  example->add_flag("--json", o.json);
  auto* audit = app.add_subcommand("audit", "independent Euler audit (level 2)");
  add_files(audit, true);
  audit->add_flag("--json", o.json);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  if (!single_file.empty()) files = {single_file};

  using Job = std::function<Outcome(const std::string&)>;
  auto batch = [&](Outcome (*fn)(const std::string&, const Options&)) {
    const Job job = [&, fn](const std::string& file) { return fn(file, o); };
    return run_batch(files, jobs, job, out, err);
  };
  try {
    if (*validate) return batch(cmd_validate);
    if (*matrix) return batch(cmd_matrix);
    if (*parity) return batch(cmd_parity);
    if (*rectangles) return batch(cmd_rectangles);
    if (*tight) return batch(cmd_tight);
    if (*waves) return batch(cmd_waves);
    if (*audit) return batch(cmd_audit);
    if (*twist) {
      DiagramFile f = load(files.front());
      const NormalDiagram& nd = need_level_two(f);
      const int a = nd.find_curve(alpha);
      if (a < 0) throw InvalidInput("no curve named " + alpha);
      f.normal = dehn_twist(nd, TwistSpec{alpha, power});
      f.sequence = project_to_sequence(*f.normal);
      emit_diagram(f, out_path, o.json, out, "twisted along " + alpha + " with power " + std::to_string(power));
      return kHolds;
    }
    if (*surgery) {
      DiagramFile f = load(files.front());
      const SurgeryResult res = surgery_diagram(need_level_two(f), TwistSpec{alpha, power});
      DiagramFile g = make_file(res.diagram);
      g.manifold = f.manifold.empty() ? "" : "1/1-surgery on " + alpha + " in " + f.manifold;
      std::string summary = res.note + "\n" +
                            (res.certificate ? "certificate: " + conclusion_name(res.certificate->conclusion)
                                             : std::string("no certificate"));
      if (out_path.empty()) {
        err << summary << "\n";
        summary.clear();
      }
      emit_diagram(g, out_path, o.json, out, summary);
      return kHolds;
    }
    if (*random) {
      GeneratorOptions gen;
      gen.even_parity = even;
      DiagramFile f = make_file(random_diagram(genus, twists, seed, gen));
      f.name = "random-g" + std::to_string(genus) + "-t" + std::to_string(twists) + "-s" + std::to_string(seed);
      emit_diagram(f, out_path, o.json, out, "generated " + f.name);
      return kHolds;
    }
    if (*example) {
      const auto text = builtin_fixture(example_name);
      if (!text) throw InvalidInput("no builtin fixture named " + example_name);
      const DiagramFile f = parse_diagram_file(*text);
      emit_diagram(f, out_path, o.json, out, "fixture " + example_name);
      return kHolds;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  err << app.help();
  return kInvalid;
}

}  // namespace heegaard
