// Copyright 2026 The Authors.
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


#include "mlz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlz/io.hpp"
#include "mlz/spectra.hpp"
#include "mlz/verify.hpp"

namespace mlz {
namespace {

using nlohmann::json;

struct Source {
  std::string input;
  std::string uniform_arg;
  std::string graphic_path;
};

struct PolyArgs {
  std::string kind = "basis";
  std::optional<int> k;
  std::string at;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

int parse_small_int(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(field, "'" + text + "' is not an integer");
  }
}

Matroid load_matroid(const Source& s) {
  const int given = !s.input.empty() + !s.uniform_arg.empty() +
                    !s.graphic_path.empty();
  if (given != 1) {
    throw InputError("input",
                     "give exactly one of a matroid file, --uniform, --graphic");
  }
  try {
    if (!s.uniform_arg.empty()) {
      const auto comma = s.uniform_arg.find(',');
      if (comma == std::string::npos) {
        throw InputError("--uniform", "expected r,n");
      }
      const int r = parse_small_int(s.uniform_arg.substr(0, comma), "--uniform");
      const int n = parse_small_int(s.uniform_arg.substr(comma + 1), "--uniform");
      if (n < 1 || n > Matroid::kMaxGround || r < 0 || r > n) {
        throw InputError("--uniform", "need 0 <= r <= n and 1 <= n <= " +
                                          std::to_string(Matroid::kMaxGround));
      }
      return uniform(r, n);
    }
    if (!s.graphic_path.empty()) {
      return graphic_from_json(read_json_file(s.graphic_path));
    }
    return matroid_from_json(read_json_file(s.input));
  } catch (const MatroidError& e) {
    throw InputError(s.uniform_arg.empty() ? "bases" : "--uniform", e.what());
  }
}

MatroidMorphism load_morphism(const std::string& path) {
  if (path.empty()) throw InputError("input", "a morphism file is required");
  const json j = read_json_file(path);
  try {
    return morphism_from_json(j);
  } catch (const MatroidError& e) {
    throw InputError("bases", e.what());
  } catch (const MorphismError& e) {
    throw InputError("map", e.what());
  }
}

HomogPoly select_poly(const Source& s, const PolyArgs& p) {
  if (p.kind == "morphism") return morphism_poly(load_morphism(s.input)).reduced;
  const Matroid m = load_matroid(s);
  if (p.kind == "basis") return basis_poly(m);
  if (p.kind == "indep") return indep_poly(m);
  if (p.kind == "reduced") return reduced_indep_poly(m);
  if (!p.k) throw InputError("--k", "required for --kind slice");
  if (*p.k < 0 || *p.k > m.ground_size()) {
    throw InputError("--k", "must be in 0.." + std::to_string(m.ground_size()));
  }
  return f_slice(m, *p.k);
}

RationalPoint parse_point(const std::string& text, std::size_t size) {
  if (text.empty()) return all_ones(size);
  RationalPoint a;
  try {
    a.coords = parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("--at", e.what());
  }
  if (a.size() != size) {
    throw InputError("--at", "expected " + std::to_string(size) +
                                 " coordinates, one per active variable");
  }
  return a;
}

json check_to_json(const std::string& name, const DegreeOneCheck& c,
                   const RationalPoint& a) {
  return json{{"check", name},
              {"point", point_to_json(a)},
              {"verdict", to_string(c.verdict)},
              {"value", to_string(c.value)},
              {"inertia", inertia_to_json(c.inertia)},
              {"hessian_rank", c.hessian_rank},
              {"grad_rank", c.gradient_rank}};
}

void print_list(std::ostream& out, const std::vector<Subset>& sets) {
  json j = json::array();
  for (Subset s : sets) j.push_back(subset_to_json(s));
  out << j.dump();
}

int cmd_matroid_info(const Source& s, const std::string& format,
                     std::ostream& out) {
  const Matroid m = load_matroid(s);
  const ParallelDecomposition d = parallel_decomposition(m);
  const CircuitsAndGirth cg = circuits_and_girth(m);
  const IndepProfile prof = indep_profile(m);
  json counts = json::array();
  for (const Integer& c : prof.counts) counts.push_back(to_string(c));
  json classes = json::array(), circuits = json::array();
  for (Subset c : d.classes) classes.push_back(subset_to_json(c));
  for (Subset c : cg.circuits) circuits.push_back(subset_to_json(c));
  const json info{{"matroid", matroid_to_json(m)},
                  {"rank", m.rank()},
                  {"bases", m.bases().size()},
                  {"simple", m.is_simple()},
                  {"uniform", m.is_uniform()},
                  {"loops", subset_to_json(d.loops)},
                  {"parallel_classes", classes},
                  {"girth", cg.girth.to_string()},
                  {"circuits", circuits},
                  {"flats", flats(m).size()},
                  {"independent_counts", counts}};
  if (format == "json") {
    out << info.dump() << "\n";
    return kExitOk;
  }
  out << "n: " << m.ground_size() << "\n"
      << "rank: " << m.rank() << "\n"
      << "bases: ";
  print_list(out, m.bases());
  out << "\nsimple: " << (m.is_simple() ? "true" : "false") << "\n"
      << "uniform: " << (m.is_uniform() ? "true" : "false") << "\n"
      << "loops: " << info["loops"].dump() << "\n"
      << "parallel_classes: " << classes.dump() << "\n"
      << "girth: " << cg.girth.to_string() << "\n"
      << "circuits: " << circuits.dump() << "\n"
      << "flats: " << info["flats"].get<std::size_t>() << "\n"
      << "independent_counts:";
  for (const Integer& c : prof.counts) out << " " << to_string(c);
  out << "\n";
  return kExitOk;
}

int cmd_poly(const Source& s, const PolyArgs& p, const std::string& format,
             std::ostream& out) {
  const HomogPoly poly = select_poly(s, p);
  if (format == "json") {
    out << json{{"degree", poly.degree()}, {"terms", poly_to_json(poly)}}.dump()
        << "\n";
  } else {
    out << poly.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_hessian(const Source& s, const PolyArgs& p, const std::string& format,
                std::ostream& out) {
  const HomogPoly poly = select_poly(s, p);
  const RationalPoint a = parse_point(p.at, poly.active().size());
  const SymMatrix h = hessian_at(poly, a);
  const Inertia in = inertia(h);
  json rows = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < h.size(); ++j) row.push_back(to_string(h(i, j)));
    rows.push_back(row);
  }
  if (format == "json") {
    out << json{{"point", point_to_json(a)},
                {"hessian", rows},
                {"inertia", inertia_to_json(in)},
                {"rank", matrix_rank(h)}}
               .dump()
        << "\n";
    return kExitOk;
  }
  for (const json& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? " " : "") << row[j].get<std::string>();
    }
    out << "\n";
  }
  out << "inertia=" << in.to_plain_string() << " rank=" << matrix_rank(h)
      << "\n";
  return kExitOk;
}

int cmd_check(const std::string& property, const Source& s, const PolyArgs& p,
              std::uint64_t seed, int points, const std::string& format,
              std::ostream& out) {
  const HomogPoly poly = select_poly(s, p);
  const std::size_t size = poly.active().size();
  if (property == "lorentz-witness") {
    std::vector<RationalPoint> pts;
    if (!p.at.empty()) {
      pts.push_back(parse_point(p.at, size));
    } else {
      PointSampler sampler(seed);
      for (int t = 0; t < points; ++t) pts.push_back(sampler.positive(size));
    }
    LorentzianWitness w;
    try {
      w = lorentzian_witness(poly, pts);
    } catch (const PolyError& e) {
      throw InputError("--at", e.what());
    }
    if (format == "json") {
      json j{{"check", "lorentz-witness"},
             {"passed", w.passed},
             {"derivatives", w.derivatives},
             {"zero_derivatives", w.zero_derivatives},
             {"quadratic_checks", w.quadratic_checks},
             {"point_checks", w.point_checks}};
      json jp = json::array();
      for (const RationalPoint& a : pts) jp.push_back(point_to_json(a));
      j["points"] = jp;
      if (w.failure) {
        j["failure"] = {{"e0", w.failure->e0},
                        {"vars", subset_to_json(w.failure->vars)},
                        {"inertia", inertia_to_json(w.failure->inertia)}};
      }
      out << j.dump() << "\n";
    } else {
      out << "LORENTZ-WITNESS: " << (w.passed ? "true" : "false")
          << " derivatives=" << w.derivatives
          << " zero=" << w.zero_derivatives
          << " quadratic_checks=" << w.quadratic_checks
          << " point_checks=" << w.point_checks;
      if (w.failure) {
        out << " failure=(e0=" << w.failure->e0
            << " vars=" << subset_to_json(w.failure->vars).dump()
            << " inertia=" << w.failure->inertia.to_plain_string() << ")";
      }
      out << "\n";
    }
    return kExitOk;
  }
  const RationalPoint a = parse_point(p.at, size);
  const DegreeOneCheck c =
      property == "hrr1" ? check_hrr1(poly, a) : check_slp1(poly, a);
  if (format == "json") {
    out << check_to_json(property, c, a).dump() << "\n";
  } else if (property == "hrr1") {
    out << "HRR1: " << to_string(c.verdict)
        << " inertia=" << c.inertia.to_plain_string()
        << " grad_rank=" << c.gradient_rank << "\n";
  } else {
    out << "SLP1: " << to_string(c.verdict)
        << " hessian_rank=" << c.hessian_rank
        << " grad_rank=" << c.gradient_rank << "\n";
  }
  return kExitOk;
}

std::string opt_bool(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "none";
}

json opt_bool_json(const std::optional<bool>& b) {
  return b ? json(*b) : json(nullptr);
}

int cmd_mason(const std::string& form, const Source& s, const PolyArgs& p,
              std::optional<int> i, std::optional<int> j,
              const std::string& format, std::ostream& out) {
  const Matroid m = load_matroid(s);
  std::optional<RationalPoint> a;
  if (!p.at.empty()) {
    a = parse_point(p.at, static_cast<std::size_t>(m.ground_size()));
  }
  try {
    if (form == "basis") {
      if (!i || !j) throw InputError(!i ? "--i" : "--j", "required");
      const MasonBasisReport r = mason_basis_check(m, *i, *j, a);
      if (format == "json") {
        out << json{{"i", r.i},
                    {"j", r.j},
                    {"f", to_string(r.f)},
                    {"f_i", to_string(r.f_i)},
                    {"f_j", to_string(r.f_j)},
                    {"f_ij", to_string(r.f_ij)},
                    {"lhs", to_string(r.lhs)},
                    {"rhs", to_string(r.rhs)},
                    {"equal", r.equal},
                    {"loop_argument", r.loop_argument},
                    {"predicted_equal", opt_bool_json(r.predicted_equal)},
                    {"consistent", r.consistent}}
                   .dump()
            << "\n";
      } else {
        out << "MASON-PAIR i=" << r.i << " j=" << r.j
            << ": lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs)
            << " equal=" << (r.equal ? "true" : "false")
            << " predicted_equal=" << opt_bool(r.predicted_equal)
            << " consistent=" << (r.consistent ? "true" : "false")
            << (r.loop_argument ? " loop_argument" : "") << "\n";
      }
      return r.holds() && r.consistent ? kExitOk : kExitCounterexample;
    }
    if (!p.k) throw InputError("--k", "required");
    const MasonIndepReport r = mason_indep_check(m, *p.k, a);
    if (format == "json") {
      out << json{{"k", r.k},
                  {"lhs", to_string(r.lhs)},
                  {"rhs", to_string(r.rhs)},
                  {"equal", r.equal},
                  {"predicted_equal", opt_bool_json(r.predicted_equal)},
                  {"consistent", r.consistent}}
                 .dump()
          << "\n";
    } else {
      out << "MASON-INDEP k=" << r.k << ": lhs=" << to_string(r.lhs)
          << " rhs=" << to_string(r.rhs)
          << " equal=" << (r.equal ? "true" : "false")
          << " predicted_equal=" << opt_bool(r.predicted_equal)
          << " consistent=" << (r.consistent ? "true" : "false") << "\n";
    }
    return r.holds() && r.consistent ? kExitOk : kExitCounterexample;
  } catch (const MatroidError& e) {
    throw InputError(form == "basis" ? "--i/--j" : "--k", e.what());
  } catch (const PolyError& e) {
    throw InputError("--at", e.what());
  }
}

int cmd_morphism(const std::string& action, const std::string& path,
                 const std::string& format, std::ostream& out) {
  if (action == "validate") {
    if (path.empty()) throw InputError("input", "a morphism file is required");
    const json j = read_json_file(path);
    try {
      const MatroidMorphism phi = morphism_from_json(j);
      const json v{{"valid", true},
                   {"phi_loops", subset_to_json(phi.phi_loops())},
                   {"image", subset_to_json(phi.image(phi.source().ground()))}};
      if (format == "json") {
        out << v.dump() << "\n";
      } else {
        out << "VALID: true phi_loops=" << v["phi_loops"].dump()
            << " image=" << v["image"].dump() << "\n";
      }
      return kExitOk;
    } catch (const MorphismError& e) {
      if (format == "json") {
        out << json{{"valid", false},
                    {"reason", e.what()},
                    {"flat", subset_to_json(e.flat())}}
                   .dump()
            << "\n";
      } else {
        out << "VALID: false " << e.what() << "\n";
      }
      return kExitCounterexample;
    } catch (const MatroidError& e) {
      throw InputError("bases", e.what());
    }
  }
  const MatroidMorphism phi = load_morphism(path);
  if (action == "class") {
    const DegeneracyVerdict v = degeneracy_class(phi);
    const std::size_t g = gradient_rank(morphism_poly(phi).reduced);
    if (format == "json") {
      json j{{"classes", v.classes_string()},
             {"grad_rank", g},
             {"source_simple", v.source_simple}};
      if (v.annihilator) j["annihilator"] = point_to_json(*v.annihilator);
      out << j.dump() << "\n";
    } else {
      out << "CLASS: " << v.classes_string() << " grad_rank=" << g;
      if (v.annihilator) {
        out << " annihilator=" << point_to_json(*v.annihilator).dump();
      }
      out << "\n";
    }
    return kExitOk;
  }
  bool ok = true;
  json rows = json::array();
  for (const EurHuhEntry& e : eur_huh_profile(phi)) {
    ok = ok && e.lhs <= e.rhs;
    rows.push_back(json{{"k", e.k},
                        {"lhs", to_string(e.lhs)},
                        {"rhs", to_string(e.rhs)},
                        {"equal", e.equal}});
  }
  if (format == "json") {
    out << rows.dump() << "\n";
  } else if (rows.empty()) {
    out << "EUR-HUH: no interior k\n";
  } else {
    for (const json& r : rows) {
      out << "EUR-HUH k=" << r["k"].get<int>()
          << ": lhs=" << r["lhs"].get<std::string>()
          << " rhs=" << r["rhs"].get<std::string>()
          << " equal=" << (r["equal"].get<bool>() ? "true" : "false") << "\n";
    }
  }
  return ok ? kExitOk : kExitCounterexample;
}

int cmd_survey(int n, std::uint64_t seed, bool no_morphisms, bool serial,
               const std::string& format, std::ostream& out) {
  if (n < 1 || n > kMaxEnumerationGround) {
    throw InputError("--n", "must be in 1.." +
                                std::to_string(kMaxEnumerationGround));
  }
  SurveyOptions o;
  o.n_max = n;
  o.morphisms = !no_morphisms;
  o.execution = serial ? Execution::kSerial : Execution::kParallel;
  const SurveyReport r = survey(o, seed);
  out << (format == "json" ? r.to_jsonl() : r.to_tsv());
  return r.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("input", s.input, "Matroid JSON file");
  cmd->add_option("--uniform", s.uniform_arg, "Uniform matroid r,n");
  cmd->add_option("--graphic", s.graphic_path, "Graph JSON file");
}

void add_poly(CLI::App* cmd, PolyArgs& p, bool with_kind) {
  if (with_kind) {
    cmd->add_option("--kind", p.kind, "basis|indep|reduced|slice|morphism")
        ->check(CLI::IsMember({"basis", "indep", "reduced", "slice", "morphism"}));
  }
  cmd->add_option("--k", p.k, "Slice or inequality index");
  cmd->add_option("--at", p.at, "Point: comma-separated rationals");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact log-concavity checks for small matroids", "mlz"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text|json|tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  app.fallthrough();

  Source src;
  PolyArgs pa;
  std::string property, form, action;
  std::optional<int> i, j;
  std::uint64_t seed = 0;
  int points = 3, n = 4;
  bool no_morphisms = false, serial = false;

  auto* info = app.add_subcommand("matroid-info", "Structure of a matroid");
  add_source(info, src);

  auto* poly = app.add_subcommand("poly", "Print a generating polynomial");
  add_source(poly, src);
  add_poly(poly, pa, true);

  auto* hess = app.add_subcommand("hessian", "Hessian matrix and inertia");
  add_source(hess, src);
  add_poly(hess, pa, true);

  auto* check = app.add_subcommand("check", "SLP1, HRR1 or Lorentzian witness");
  check->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"slp1", "hrr1", "lorentz-witness"}));
  add_source(check, src);
  add_poly(check, pa, true);
  check->add_option("--seed", seed, "Seed for witness points");
  check->add_option("--points", points, "Number of witness points")
      ->check(CLI::Range(1, 64));

  auto* mason = app.add_subcommand("mason", "Basis pair or independent set row");
  mason->add_option("form", form)
      ->required()
      ->check(CLI::IsMember({"basis", "indep"}));
  add_source(mason, src);
  add_poly(mason, pa, false);
  mason->add_option("--i", i, "First element");
  mason->add_option("--j", j, "Second element");

  auto* morph = app.add_subcommand("morphism", "Morphism queries");
  morph->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"validate", "class", "eurhuh"}));
  morph->add_option("input", src.input, "Morphism JSON file");

  auto* surv = app.add_subcommand("survey", "Exhaustive survey");
  surv->add_option("--n", n, "Largest ground set");
  surv->add_option("--seed", seed, "Run seed");
  surv->add_flag("--no-morphisms", no_morphisms, "Skip the morphism survey");
  surv->add_flag("--serial", serial, "Use the serial path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "mlz: usage: " << msg << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_matroid_info(src, format, out);
    if (poly->parsed()) return cmd_poly(src, pa, format, out);
    if (hess->parsed()) return cmd_hessian(src, pa, format, out);
    if (check->parsed()) {
      return cmd_check(property, src, pa, seed, points, format, out);
    }
    if (mason->parsed()) return cmd_mason(form, src, pa, i, j, format, out);
    if (morph->parsed()) return cmd_morphism(action, src.input, format, out);
    return cmd_survey(n, seed, no_morphisms, serial, format, out);
  } catch (const InputError& e) {
    err << "mlz: " << e.what() << "\n";
  } catch (const PolyError& e) {
    err << "mlz: --at: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "mlz: input: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace mlz
