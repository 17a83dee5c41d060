// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latwalk/classification.hpp"
#include "latwalk/enumeration.hpp"
#include "latwalk/errors.hpp"
#include "latwalk/graph_export.hpp"
#include "latwalk/oeis.hpp"
#include "latwalk/quadfield.hpp"
#include "latwalk/verify.hpp"

namespace latwalk {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------- formatting

std::string pt_text(Pt p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string steps_text(const std::vector<Pt>& steps) {
  std::string out = "{";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ", ";
    out += pt_text(steps[i]);
  }
  return out + "}";
}

std::string walk_text(const Walk& w) {
  if (w.empty()) return "(empty walk)";
  std::string out;
  for (Pt b : w) out += pt_text(b);
  return out;
}

std::string witness_text(const ConditionWitness& w) {
  std::string out = "u=" + pt_text(w.u);
  if (w.offset != 0) out += " offset=" + std::to_string(w.offset);
  if (w.u2) out += " u2=" + pt_text(*w.u2);
  return out;
}

std::string condition_text(const ConditionResult& c) {
  if (!c.holds) return "no";
  return c.witness ? "yes   " + witness_text(*c.witness) : "yes";
}

json point_json(Pt p) { return json::array({p.x, p.y}); }

json condition_json(const ConditionResult& c) {
  json j{{"holds", c.holds}};
  if (c.witness) {
    json w{{"u", point_json(c.witness->u)}};
    if (c.witness->offset != 0) w["offset"] = c.witness->offset;
    if (c.witness->u2) w["u2"] = point_json(*c.witness->u2);
    j["witness"] = w;
  }
  return j;
}

json walk_json(const Walk& w) {
  json arr = json::array();
  for (Pt b : w) arr.push_back(point_json(b));
  return arr;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + path);
  f << content;
  if (!f) throw ValidationError("failed writing output file: " + path);
}

const std::string* output_path(const JobSpec& job, const char* key) {
  const auto it = job.outputs.find(key);
  return it == job.outputs.end() ? nullptr : &it->second;
}

// ------------------------------------------------------------------ classify

json classification_json(const ClassificationReport& r,
                         const std::string& stepset_desc,
                         const std::string& region_desc) {
  json j;
  j["stepset"] = stepset_desc;
  j["region"] = region_desc;
  j["conditions"] = json{{"cc", condition_json(r.cc)},
                         {"slc", condition_json(r.slc)},
                         {"lc", condition_json(r.lc)},
                         {"wlc", condition_json(r.wlc)}};
  j["properties"] = json{{"fpp", tri_name(r.fpp)},
                         {"bpp", tri_name(r.bpp)},
                         {"ipp", tri_name(r.ipp)}};
  j["rationales"] = json{{"fpp", r.fpp_rationale},
                         {"bpp", r.bpp_rationale},
                         {"ipp", r.ipp_rationale}};
  j["combination"] = combination_label(r.combination);
  j["units_nontrivial"] = r.units_nontrivial;
  j["group"] = group_iso_name(r.group_iso);
  if (r.ipp_cycle) j["closed_walk"] = walk_json(*r.ipp_cycle);
  if (r.admissible) {
    json adm;
    adm["complete"] = r.admissible->complete();
    json confirmed = json::array();
    for (const auto& s : r.admissible->confirmed) confirmed.push_back(point_json(s.step));
    adm["confirmed"] = confirmed;
    json refuted = json::array();
    for (Pt s : r.admissible->refuted) refuted.push_back(point_json(s));
    adm["refuted"] = refuted;
    json undetermined = json::array();
    for (Pt s : r.admissible->undetermined) undetermined.push_back(point_json(s));
    adm["undetermined"] = undetermined;
    j["admissible"] = adm;
  }
  return j;
}

void print_classification(const ClassificationReport& r, std::ostream& out) {
  out << "  CC  " << condition_text(r.cc) << "\n";
  out << "  SLC " << condition_text(r.slc) << "\n";
  out << "  LC  " << condition_text(r.lc) << "\n";
  out << "  WLC " << condition_text(r.wlc) << "\n";
  out << "  FPP " << tri_name(r.fpp) << "  -- " << r.fpp_rationale << "\n";
  out << "  BPP " << tri_name(r.bpp) << "  -- " << r.bpp_rationale << "\n";
  out << "  IPP " << tri_name(r.ipp) << "  -- " << r.ipp_rationale << "\n";
  if (r.ipp_cycle) out << "  closed walk at O: " << walk_text(*r.ipp_cycle) << "\n";
  out << "  combination : " << combination_label(r.combination) << "\n";
}

void print_monoid_structure(const ClassificationReport& r, bool constrained,
                            std::ostream& out) {
  const char* scope = constrained ? " (X unconstrained)" : "";
  out << "  units" << scope << " : "
      << (r.units_nontrivial ? "nontrivial" : "trivial") << "\n";
  out << "  group" << scope << " : " << group_iso_name(r.group_iso) << "\n";
}

int do_classify(const JobSpec& job, std::ostream& out) {
  const MaterializedStepSet mat = materialize(job.stepset);
  const Constraint C = job.constraint.build();
  out << "step set : " << mat.description << "\n";
  out << "steps    : " << steps_text(mat.steps) << "\n";
  out << "region   : " << C.description() << "\n";

  ClassificationReport r;
  if (C.is_full_plane()) {
    r = classify_finite(mat.steps);
    print_classification(r, out);
    print_monoid_structure(r, /*constrained=*/false, out);
  } else {
    r = classify_constrained(mat.steps, C);
    print_classification(r, out);
    print_monoid_structure(r, /*constrained=*/true, out);
    if (r.admissible) {
      out << "  admissible  : ";
      if (r.admissible->complete()) {
        out << steps_text(r.admissible->confirmed_steps()) << " (complete)\n";
      } else {
        out << r.admissible->confirmed.size() << " confirmed, "
            << r.admissible->undetermined.size() << " undetermined within bound "
            << r.bound_used << "\n";
      }
    }
    const UnitsGroupReport ug = constrained_units_and_group(mat.steps, C);
    out << "  units (constrained): " << tri_name(ug.units) << "\n";
    out << "  group (constrained): " << tri_name(ug.group) << "\n";
  }

  json j = classification_json(r, mat.description, C.description());
  if (mat.family && C.is_full_plane()) {
    const RegistryEntry& entry = registry_lookup(*mat.family);
    out << "registry : " << entry.label << " -- " << entry.rationale << "\n";
    if (entry.label != combination_label(r.combination))
      out << "note     : the materialized truncation classifies as "
          << combination_label(r.combination)
          << "; the registry row describes the full infinite family\n";
    j["registry"] = json{{"label", entry.label}, {"rationale", entry.rationale}};
  }
  if (const std::string* path = output_path(job, "json"))
    write_file(*path, j.dump(2) + "\n");
  return 0;
}

// --------------------------------------------------------------------- count

int do_count(const JobSpec& job, std::ostream& out) {
  const MaterializedStepSet mat = materialize(job.stepset);
  const Constraint C = job.constraint.build();
  if (job.window) {
    const CountTable table = count_table(mat.steps, *job.window, C, job.max_len);
    out << "counts over [" << job.window->xmin << "," << job.window->xmax
        << "]x[" << job.window->ymin << "," << job.window->ymax << "] for "
        << mat.description << " under " << C.description() << ":\n";
    std::string csv = "x,y,count\n";
    json rows = json::array();
    for (const auto& [p, count] : table.counts) {
      if (!job.window->contains(p)) continue;
      out << "  " << pt_text(p) << " : " << count.str() << "\n";
      csv += std::to_string(p.x) + "," + std::to_string(p.y) + "," +
             count.str() + "\n";
      rows.push_back(json{{"point", point_json(p)}, {"count", count.str()}});
    }
    if (table.evidence)
      out << "  pumping cycle backing the inf rows: "
          << walk_text(table.evidence->cycle) << "\n";
    if (const std::string* path = output_path(job, "csv")) write_file(*path, csv);
    if (const std::string* path = output_path(job, "json")) {
      json j{{"stepset", mat.description},
             {"region", C.description()},
             {"rows", rows}};
      write_file(*path, j.dump(2) + "\n");
    }
    return 0;
  }
  if (!job.target)
    throw ValidationError("count needs --target x,y or --window");
  const CountOutcome outcome = count_walks(mat.steps, *job.target, C, job.max_len);
  out << "walks to " << pt_text(*job.target) << ": " << outcome.count.str()
      << "\n";
  if (outcome.evidence) {
    out << "  pumping certificate: prefix " << walk_text(outcome.evidence->prefix)
        << ", cycle " << walk_text(outcome.evidence->cycle) << ", suffix "
        << walk_text(outcome.evidence->suffix) << "\n";
  }
  if (const std::string* path = output_path(job, "json")) {
    json j{{"stepset", mat.description},
           {"region", C.description()},
           {"target", point_json(*job.target)},
           {"count", outcome.count.str()}};
    if (outcome.evidence) {
      j["evidence"] = json{{"prefix", walk_json(outcome.evidence->prefix)},
                           {"cycle", walk_json(outcome.evidence->cycle)},
                           {"suffix", walk_json(outcome.evidence->suffix)}};
    }
    write_file(*path, j.dump(2) + "\n");
  }
  return 0;
}

// --------------------------------------------------------------------- graph

int do_graph(const JobSpec& job, std::ostream& out) {
  if (!job.window) throw ValidationError("graph needs --window");
  const MaterializedStepSet mat = materialize(job.stepset);
  const Constraint C = job.constraint.build();
  const LatticeGraph g = build_graph(mat.steps, *job.window, C, job.max_len);
  long long leaving = 0;
  for (const auto& e : g.edges) leaving += e.leaves_window;
  out << "graph over [" << job.window->xmin << "," << job.window->xmax << "]x["
      << job.window->ymin << "," << job.window->ymax << "]: "
      << g.vertices.size() << " vertices, "
      << (static_cast<long long>(g.edges.size()) - leaving) << " edges, "
      << leaving << " window-leaving stubs\n";
  const std::string* dot_path = output_path(job, "dot");
  const std::string* tikz_path = output_path(job, "tikz");
  if (dot_path) {
    write_file(*dot_path, emit_dot(g));
    out << "wrote " << *dot_path << "\n";
  }
  if (tikz_path) {
    write_file(*tikz_path, emit_tikz(g));
    out << "wrote " << *tikz_path << "\n";
  }
  if (!dot_path && !tikz_path) out << emit_dot(g);
  return 0;
}

// ------------------------------------------------------------------ sequence

int do_sequence(const JobSpec& job, std::ostream& out) {
  const SequenceQuery query = job.sequence.value_or(SequenceQuery{});
  const MaterializedStepSet mat = materialize(job.stepset);
  const Constraint C = job.constraint.build();
  std::vector<BigInt> terms;
  for (long long i = 0; i < query.length; ++i) {
    const Pt target = query.mode == SequenceQuery::Mode::Diagonal
                          ? Pt{i, i}
                          : Pt{i, query.index};
    const CountOutcome outcome = count_walks(mat.steps, target, C, job.max_len);
    if (!outcome.count.is_exact())
      throw ValidationError("sequence extraction needs exact counts; walks to " +
                            pt_text(target) + " gave " + outcome.count.str());
    terms.push_back(outcome.count.value);
  }
  out << "terms: ";
  for (std::size_t i = 0; i < terms.size(); ++i)
    out << (i ? "," : "") << terms[i];
  out << "\n";
  if (job.oeis == OeisMode::Off) return 0;
  const auto matches = oeis_lookup(terms, job.oeis);
  if (matches.empty()) {
    out << "no database matches\n";
  } else {
    for (const auto& m : matches) out << "  " << m.id << "  " << m.name << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ appendix

int do_appendix(const JobSpec& job, std::ostream& out) {
  AppendixContext ctx(job.appendix_d);
  const AppendixSequences seq = ctx.build(job.appendix_kmax);
  out << "field: Q(sqrt(" << seq.d << "))\n";
  out << "base pair: beta_1 = gamma_1 = " << seq.beta1.a << "\n";
  json levels = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < seq.alphas.size(); ++i) {
    const long long k = static_cast<long long>(i) + 1;
    const PkResult& pk = seq.p[i];
    const MElement& alpha = seq.alphas[i];
    out << "k=" << k << ": l=" << pk.l << " a=" << pk.a << " p_k=" << pk.p
        << " R_k=" << seq.R[i] << "\n";
    out << "  alpha_" << k << " = " << alpha.value().str() << "\n";
    // replay the defining window: alpha_k in (1/k, 1/k + 1/k) with phi in
    // [p, p + p_k] for p = k*(1 + R_k) + 1
    const QuadExt lo = QuadExt::rational(BigRat(1, k), seq.d);
    const QuadExt hi = lo + lo;
    const bool in_window =
        qx_compare(lo, alpha.value()) < 0 && qx_compare(alpha.value(), hi) < 0;
    const BigInt p = k * (1 + seq.R[i]) + 1;
    const bool phi_ok = alpha.phi() >= p && alpha.phi() <= p + pk.p;
    out << "  interval replay: " << (in_window ? "ok" : "FAILED")
        << ", coefficient range: " << (phi_ok ? "ok" : "FAILED") << "\n";
    all_ok = all_ok && in_window && phi_ok;
    levels.push_back(json{{"k", k},
                          {"l", pk.l.str()},
                          {"a", pk.a.str()},
                          {"p", pk.p.str()},
                          {"R", seq.R[i].str()},
                          {"alpha", alpha.value().str()},
                          {"interval_ok", in_window},
                          {"phi_ok", phi_ok}});
  }
  const std::vector<MElement> sigma{seq.alphas.front(), seq.beta1, seq.gamma1};
  const bool sums_ok = sum_set_check(sigma, 1, 3, 4);
  out << "sum-set spot check (l=1, n in [3,4]): " << (sums_ok ? "ok" : "FAILED")
      << "\n";
  all_ok = all_ok && sums_ok;
  if (const std::string* path = output_path(job, "json")) {
    json j{{"d", seq.d},
           {"levels", levels},
           {"sum_set_l1_n3_4", sums_ok}};
    write_file(*path, j.dump(2) + "\n");
  }
  LATWALK_CHECK(all_ok, "construction transcript failed its own replay");
  return 0;
}

// -------------------------------------------------------------------- verify

int do_verify(const JobSpec& job, std::ostream& out) {
  int failed_suites = 0;
  for (const VerifyResult& r : run_verify_suites(job.seed)) {
    out << (r.ok() ? "PASS" : "FAIL") << "  " << r.suite << " (" << r.checks
        << " checks";
    if (!r.ok()) out << ", " << r.failures << " failures";
    out << ")\n";
    for (const auto& m : r.messages) out << "      " << m << "\n";
    failed_suites += !r.ok();
  }
  out << (failed_suites == 0 ? "all suites passed" : "some suites FAILED")
      << " (seed " << job.seed << ")\n";
  return failed_suites == 0 ? 0 : 4;
}

// ----------------------------------------------------------------- arg glue

std::vector<Pt> parse_points_arg(const std::string& text,
                                 const std::string& flag) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(flag + ": expected JSON like [[0,1],[1,0]]: " +
                          e.what());
  }
  if (!j.is_array()) throw ValidationError(flag + ": expected a JSON array");
  std::vector<Pt> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ValidationError(flag + ": each entry must be [x, y]");
    out.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
  }
  return out;
}

std::vector<std::int64_t> parse_csv_ints(const std::string& text,
                                         const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError(flag + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

Pt parse_target_arg(const std::string& text) {
  const auto v = parse_csv_ints(text, "--target");
  if (v.size() != 2) throw ValidationError("--target: expected x,y");
  return {v[0], v[1]};
}

Window parse_window_arg(const std::string& text) {
  const auto v = parse_csv_ints(text, "--window");
  if (v.size() == 2) return Window::square(v[0], v[1]);
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  throw ValidationError("--window: expected lo,hi or xmin,xmax,ymin,ymax");
}

ConstraintKind parse_constraint_arg(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  for (ConstraintKind k :
       {ConstraintKind::FullPlane, ConstraintKind::HalfplaneIntersection,
        ConstraintKind::PuncturedQuadrant, ConstraintKind::DiagonalChain,
        ConstraintKind::BelowDiagonal})
    if (constraint_kind_name(k) == name) return k;
  throw ValidationError("--constraint: unknown kind '" + name + "'");
}

// Options shared by the step-set-consuming subcommands, wired into `job` at
// parse time.
struct StepsetArgs {
  std::string steps_json;
  std::string family;
  long long bound = 8;
  std::string trunc_window;
  long long d = 2;
  std::string side = "below";

  void attach(CLI::App* cmd) {
    cmd->add_option("--steps", steps_json,
                    "explicit step set as JSON, e.g. [[0,1],[1,0]]");
    cmd->add_option("--family", family, "named step-set family");
    cmd->add_option("--bound", bound, "family truncation bound");
    cmd->add_option("--trunc-window", trunc_window,
                    "family spatial clip: xmin,xmax,ymin,ymax");
    cmd->add_option("--d", d, "radicand for the irrational families");
    cmd->add_option("--side", side, "irrational half-plane side: below|above");
  }

  StepSetSpec build() const {
    if (!steps_json.empty() && !family.empty())
      throw ValidationError("give either --steps or --family, not both");
    if (!steps_json.empty())
      return StepSetSpec::from_steps(parse_points_arg(steps_json, "--steps"));
    if (family.empty()) throw ValidationError("needs --steps or --family");
    const auto fam = family_from_name(family);
    if (!fam) throw ValidationError("unknown family '" + family + "'");
    Truncation t;
    t.bound = bound;
    if (!trunc_window.empty()) {
      const auto v = parse_csv_ints(trunc_window, "--trunc-window");
      if (v.size() != 4)
        throw ValidationError("--trunc-window: expected xmin,xmax,ymin,ymax");
      t.window = Window{v[0], v[1], v[2], v[3]};
    }
    FamilyParams p;
    p.d = d;
    if (side == "below")
      p.side = HalfplaneSide::Below;
    else if (side == "above")
      p.side = HalfplaneSide::Above;
    else
      throw ValidationError("--side: expected below or above");
    return StepSetSpec::from_family(*fam, t, p);
  }
};

struct ConstraintArgs {
  std::string kind = "full_plane";
  std::string normals_json;

  void attach(CLI::App* cmd) {
    cmd->add_option("--constraint", kind,
                    "region: full_plane | halfplane_intersection | "
                    "punctured_quadrant | diagonal_chain | below_diagonal");
    cmd->add_option("--normals", normals_json,
                    "halfplane_intersection normals as JSON, e.g. [[0,1]]");
  }

  ConstraintSpec build() const {
    ConstraintSpec c;
    c.kind = parse_constraint_arg(kind);
    if (c.kind == ConstraintKind::HalfplaneIntersection) {
      if (normals_json.empty())
        throw ValidationError("halfplane_intersection needs --normals");
      c.normals = parse_points_arg(normals_json, "--normals");
    } else if (!normals_json.empty()) {
      throw ValidationError("--normals only applies to halfplane_intersection");
    }
    return c;
  }
};

void attach_output(CLI::App* cmd, std::map<std::string, std::string>* outputs,
                   const char* key, const char* help) {
  cmd->add_option_function<std::string>(
      std::string("--") + key,
      [outputs, key](const std::string& path) { (*outputs)[key] = path; }, help);
}

}  // namespace

int execute_job(const JobSpec& job, std::ostream& out) {
  if (job.subcommand == "classify") return do_classify(job, out);
  if (job.subcommand == "count") return do_count(job, out);
  if (job.subcommand == "graph") return do_graph(job, out);
  if (job.subcommand == "sequence") return do_sequence(job, out);
  if (job.subcommand == "appendix") return do_appendix(job, out);
  if (job.subcommand == "verify") return do_verify(job, out);
  throw ValidationError("unknown subcommand '" + job.subcommand + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact lattice-walk enumeration, classification, and export"};
  app.require_subcommand(1);

  JobSpec job;
  StepsetArgs stepset_args;
  ConstraintArgs constraint_args;
  std::string target_text, window_text;

  CLI::App* classify = app.add_subcommand(
      "classify", "decide conditions, finiteness properties, and group structure");
  stepset_args.attach(classify);
  constraint_args.attach(classify);
  attach_output(classify, &job.outputs, "json", "write the report as JSON");

  CLI::App* count = app.add_subcommand(
      "count", "exact walk counts to a target or over a window");
  stepset_args.attach(count);
  constraint_args.attach(count);
  count->add_option("--target", target_text, "target point x,y");
  count->add_option("--window", window_text,
                    "count table window: lo,hi or xmin,xmax,ymin,ymax");
  count->add_option("--max-len", job.max_len, "walk length cutoff");
  attach_output(count, &job.outputs, "json", "write counts as JSON");
  attach_output(count, &job.outputs, "csv", "write counts as CSV");

  CLI::App* graph = app.add_subcommand(
      "graph", "window digraph with count labels, exported as DOT/TikZ");
  stepset_args.attach(graph);
  constraint_args.attach(graph);
  graph->add_option("--window", window_text,
                    "window: lo,hi or xmin,xmax,ymin,ymax");
  graph->add_option("--max-len", job.max_len, "walk length cutoff");
  attach_output(graph, &job.outputs, "dot", "write Graphviz text here");
  attach_output(graph, &job.outputs, "tikz", "write standalone TikZ here");

  CLI::App* sequence = app.add_subcommand(
      "sequence", "extract a diagonal or row of counts, with optional lookup");
  stepset_args.attach(sequence);
  constraint_args.attach(sequence);
  bool diag_flag = false;
  long long row_index = 0, seq_length = 8;
  sequence->add_flag("--diagonal", diag_flag, "take counts at (i,i)");
  sequence->add_option("--row", row_index, "take counts at (i, ROW)");
  sequence->add_option("--length", seq_length, "number of terms");
  sequence->add_option("--max-len", job.max_len, "walk length cutoff");
  std::string oeis_mode = "off";
  sequence->add_option("--oeis", oeis_mode, "lookup mode: off|online|fixture");

  CLI::App* appendix = app.add_subcommand(
      "appendix", "quadratic-monoid construction report and replay transcript");
  appendix->add_option("--kmax", job.appendix_kmax, "levels to build (max 3)");
  appendix->add_option("--d", job.appendix_d, "radicand");
  attach_output(appendix, &job.outputs, "json", "write the report as JSON");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the seeded randomized invariant suites");
  verify->add_option("--seed", job.seed, "suite RNG seed");

  CLI::App* jobcmd = app.add_subcommand(
      "job", "run a JSON job file (use --echo to print the normalized spec)");
  std::string job_file;
  bool echo_only = false;
  jobcmd->add_option("--file", job_file, "job JSON path, or - for stdin")
      ->required();
  jobcmd->add_flag("--echo", echo_only, "print normalized JSON, do not run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    // CLI11 returns 0 for --help; anything else is a usage problem
    return code == 0 ? 0 : 1;
  }

  try {
    if (jobcmd->parsed()) {
      std::string text;
      if (job_file == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
      } else {
        std::ifstream in(job_file);
        if (!in) throw ValidationError("cannot read job file: " + job_file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
      }
      const JobSpec parsed = jobspec_from_json(text);
      if (echo_only) {
        out << jobspec_to_json(parsed);
        return 0;
      }
      return execute_job(parsed, out);
    }

    for (CLI::App* cmd : {classify, count, graph, sequence})
      if (cmd->parsed()) {
        job.subcommand = cmd->get_name();
        job.stepset = stepset_args.build();
        job.constraint = constraint_args.build();
      }
    if (appendix->parsed()) job.subcommand = "appendix";
    if (verify->parsed()) job.subcommand = "verify";
    if (!target_text.empty()) job.target = parse_target_arg(target_text);
    if (!window_text.empty()) job.window = parse_window_arg(window_text);
    if (sequence->parsed()) {
      SequenceQuery q;
      if (diag_flag && sequence->count("--row"))
        throw ValidationError("give --diagonal or --row, not both");
      q.mode = sequence->count("--row") ? SequenceQuery::Mode::Row
                                        : SequenceQuery::Mode::Diagonal;
      q.index = row_index;
      q.length = seq_length;
      job.sequence = q;
      // LATWALK_OEIS_MODE overrides the flag so CI can pin lookups to
      // fixtures (or off) no matter what the invocation says.
      if (const char* forced = std::getenv("LATWALK_OEIS_MODE")) oeis_mode = forced;
      const auto mode = oeis_mode_from_name(oeis_mode);
      if (!mode) throw ValidationError("--oeis: expected off|online|fixture");
      job.oeis = *mode;
    }
    return execute_job(job, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const NetworkError& e) {
    err << "network failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace latwalk
