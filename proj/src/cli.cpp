#include "lagmon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "lagmon/classify.hpp"
#include "lagmon/error.hpp"
#include "lagmon/floer.hpp"
#include "lagmon/monodromy.hpp"
#include "lagmon/text_io.hpp"

namespace lagmon {

namespace {

using Json = nlohmann::ordered_json;

// Each record is printed as one text line or as one JSON object per line.
class Emitter {
public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const std::string& text, Json record) {
    if (json_)
      out_ << record.dump() << '\n';
    else
      out_ << text << '\n';
  }

private:
  std::ostream& out_;
  bool json_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? sep : "") + xs[i];
  return s;
}

std::vector<std::string> cycle_strings(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(cycle_notation(p));
  return out;
}

std::string blocks_string(const NormalPartition& p) {
  std::vector<std::string> bs;
  for (const auto& b : p.blocks) {
    std::vector<std::string> xs;
    for (std::size_t i : b)
      xs.push_back(std::to_string(i + 1));
    bs.push_back("{" + join(xs, ",") + "}");
  }
  return join(bs);
}

Json blocks_json(const NormalPartition& p) {
  Json a = Json::array();
  for (const auto& b : p.blocks) {
    Json blk = Json::array();
    for (std::size_t i : b)
      blk.push_back(i + 1);
    a.push_back(blk);
  }
  return a;
}

std::vector<std::string> point_strings(const std::vector<TorsionPoint>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

struct Options {
  bool json = false;
  std::size_t bound = 6;
  std::size_t cap = 0;
  std::string mode;
  std::string path;
  std::string at;
  std::string group = "ORDER3";
  std::vector<std::string> qform;
};

void group_report(Emitter& em, const std::string& label, const ToricFiberData& d, const PermutationGroup& g) {
  em.emit(label + " order " + std::to_string(g.order()),
          {{"record", "group"}, {"group", label}, {"order", g.order()}});
  auto gens = cycle_strings(g.generators());
  em.emit(label + " generators " + (gens.empty() ? std::string("none") : join(gens)),
          {{"record", "generators"}, {"group", label}, {"generators", gens}});
  for (const auto& s : g.generators()) {
    IntegerMatrix m = induced_matrix(d, s);
    em.emit("induced " + label + " " + cycle_notation(s) + " " + m.to_string(),
            {{"record", "induced"}, {"group", label}, {"permutation", cycle_notation(s)}, {"matrix", m.to_string()}});
  }
}

int cmd_toric(const Options& o, Emitter& em) {
  DelzantPolytope p = parse_polytope(read_text_file(o.path));
  if (!o.mode.empty())
    p = DelzantPolytope(p.dim(), p.facets(),
                        o.mode == "vertex" ? CompactnessMode::VertexRequired : CompactnessMode::Compact);
  em.emit("polytope dim " + std::to_string(p.dim()) + " facets " + std::to_string(p.facet_count()) + " mode " +
              (p.mode() == CompactnessMode::Compact ? "compact" : "vertex"),
          {{"record", "polytope"},
           {"dim", p.dim()},
           {"facets", p.facet_count()},
           {"mode", p.mode() == CompactnessMode::Compact ? "compact" : "vertex"}});
  ValidationReport v = validate_delzant(p);
  Json vr{{"record", "delzant"}, {"result", delzant_failure_name(v.failure)}, {"message", v.message},
          {"vertices", v.vertices.size()}};
  std::string text = std::string("delzant ") + delzant_failure_name(v.failure) + " vertices " +
                     std::to_string(v.vertices.size());
  if (!v.pass())
    text += " " + v.message;
  if (v.unchecked_topology) {
    text += " UNCHECKED_TOPOLOGY";
    vr["unchecked_topology"] = true;
  }
  em.emit(text, vr);
  if (!v.pass())
    return 2;

  DelzantPolytope mono = monotone_normalize(p);
  std::vector<std::string> offs;
  for (const auto& f : mono.facets())
    offs.push_back(to_string(f.offset));
  em.emit("monotone offsets " + join(offs), {{"record", "monotone"}, {"offsets", offs}});

  ToricFiberData d = toric_fiber_data(mono);
  em.emit("K rank " + std::to_string(d.relations.rank()) + " basis " + d.relations.basis().to_string(),
          {{"record", "relations"}, {"rank", d.relations.rank()}, {"basis", d.relations.basis().to_string()}});
  em.emit("W " + d.superpotential.to_string(), {{"record", "superpotential"}, {"W", d.superpotential.to_string()}});
  NormalPartition part = coefficient_partition(d.relations);
  em.emit("partition " + blocks_string(part), {{"record", "partition"}, {"blocks", blocks_json(part)}});
  std::size_t sum = 0;
  for (const auto& b : part.blocks)
    sum += b.size() - 1;
  const bool ok = partition_bound_check(part, p.dim());
  em.emit("partition_bound " + std::to_string(sum) + " <= " + std::to_string(p.dim()) + (ok ? " PASS" : " FAIL"),
          {{"record", "partition_bound"}, {"sum", sum}, {"n", p.dim()}, {"pass", ok}});

  PermutationGroup h = hamiltonian_monodromy(d);
  group_report(em, "H_L", d, h);
  SearchLimits limits;
  if (o.cap)
    limits.max_degree = o.cap;
  try {
    PermutationGroup hs = symplectic_monodromy(d, limits);
    group_report(em, "H_L^S", d, hs);
    const bool same = hs == h;
    em.emit(std::string("H_L^S equals H_L ") + (same ? "yes" : "no"), {{"record", "comparison"}, {"equal", same}});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchTooLarge)
      throw;
    em.emit(std::string("H_L^S skipped ") + e.what(), {{"record", "skipped"}, {"group", "H_L^S"}, {"reason", e.what()}});
  }
  if (p.dim() == 2) {
    std::string cls = identify_class_n2(induced_matrix_group(d, h)).name;
    em.emit("class " + cls, {{"record", "class"}, {"name", cls}});
  }
  return 0;
}

int cmd_classify2d(Emitter& em) {
  for (const auto& r : classify_n2()) {
    std::string text = "class " + r.name + " order " + std::to_string(r.order) + " " + r.tag;
    Json j{{"record", "class"}, {"name", r.name}, {"order", r.order}, {"tag", r.tag}};
    if (r.admissibility.witness_element) {
      text += " element " + r.admissibility.witness_element->to_string() + " moves " +
              r.admissibility.witness_point->to_string();
      j["element"] = r.admissibility.witness_element->to_string();
      j["point"] = r.admissibility.witness_point->to_string();
    }
    if (!r.realized_by.empty()) {
      text += " by " + join(r.realized_by, ",");
      j["realized_by"] = r.realized_by;
    }
    if (!r.reason.empty() && r.tag != "IMPOSSIBLE") {
      text += " (" + r.reason + ")";
      j["reason"] = r.reason;
    }
    em.emit(text, j);
  }
  return 0;
}

int cmd_filter(const Options& o, Emitter& em) {
  ParsedGroup pg = parse_group(read_text_file(o.path));
  MatrixGroup g = MatrixGroup::generate(pg.dim, pg.generators);
  em.emit("group dim " + std::to_string(g.dim()) + " order " + std::to_string(g.order()),
          {{"record", "group"}, {"dim", g.dim()}, {"order", g.order()}});
  AdmissibilityReport r = admissible_group(g);
  auto pts = point_strings(r.forced.points);
  em.emit("forced " + std::to_string(pts.size()) + (pts.empty() ? "" : " " + join(pts)),
          {{"record", "forced"}, {"count", pts.size()}, {"points", pts}});
  Json j{{"record", "admissible"}, {"admissible", r.admissible}};
  std::string text = std::string("admissible ") + (r.admissible ? "yes" : "no");
  if (!r.admissible) {
    text += " element " + r.witness_element->to_string() + " moves " + r.witness_point->to_string();
    j["element"] = r.witness_element->to_string();
    j["point"] = r.witness_point->to_string();
  }
  em.emit(text, j);
  if (g.dim() == 2) {
    std::string cls = identify_class_n2(g).name;
    em.emit("class " + cls, {{"record", "class"}, {"name", cls}});
  }
  return 0;
}

int cmd_conjecture(const Options& o, Emitter& em) {
  GroupCatalog c = ingest_catalog(read_text_file(o.path));
  em.emit("catalog dim " + std::to_string(c.dim) + " groups " + std::to_string(c.entries.size()),
          {{"record", "catalog"}, {"dim", c.dim}, {"groups", c.entries.size()}});
  for (const auto& w : c.warnings)
    em.emit("warning " + w, {{"record", "warning"}, {"message", w}});
  for (const auto& v : conjecture_filter(c)) {
    std::string text = "group " + v.name + " order " + std::to_string(v.order) + " " + conjecture_status_name(v.status);
    Json j{{"record", "verdict"}, {"name", v.name}, {"order", v.order}, {"status", conjecture_status_name(v.status)}};
    if (v.admissibility.witness_element) {
      text += " element " + v.admissibility.witness_element->to_string() + " moves " +
              v.admissibility.witness_point->to_string();
      j["element"] = v.admissibility.witness_element->to_string();
      j["point"] = v.admissibility.witness_point->to_string();
    }
    if (v.embedding) {
      std::vector<std::string> parts;
      for (std::size_t p : v.embedding->parts)
        parts.push_back(std::to_string(p));
      text += " parts (" + join(parts, ",") + ") images " + join(cycle_strings(v.embedding->images));
      j["parts"] = v.embedding->parts;
      j["images"] = cycle_strings(v.embedding->images);
    }
    for (const auto& n : v.notes)
      text += " [" + n + "]";
    if (!v.notes.empty())
      j["notes"] = v.notes;
    em.emit(text, j);
  }
  return 0;
}

int cmd_crit(const Options& o, Emitter& em) {
  LaurentPolynomial w = parse_laurent(read_text_file(o.path));
  auto pts = torsion_critical_points(w, o.bound, o.cap ? o.cap : 1000000);
  em.emit("W " + w.to_string(), {{"record", "superpotential"}, {"W", w.to_string()}});
  em.emit("critical " + std::to_string(pts.size()) + " bound " + std::to_string(o.bound),
          {{"record", "critical"}, {"count", pts.size()}, {"bound", o.bound}});
  for (const auto& p : pts) {
    std::string text = "point " + p.to_string() + " W = " + evaluate(w, p).to_string();
    Json j{{"record", "point"}, {"point", p.to_string()}, {"value", evaluate(w, p).to_string()}};
    if (w.dim() == 2) {
      CliffordData d = clifford_constants(w, p);
      text += " lambda " + d.lambda.to_string() + " mu " + d.mu.to_string() + " nu " + d.nu.to_string();
      j["lambda"] = d.lambda.to_string();
      j["mu"] = d.mu.to_string();
      j["nu"] = d.nu.to_string();
    }
    em.emit(text, j);
  }
  return 0;
}

int cmd_rk1(const Options& o, Emitter& em) {
  Rk1Report r = rk1_classify(parse_laurent(read_text_file(o.path)));
  std::string text = std::string("case ") + rk1_case_name(r.kind) + " a " + r.a.get_str();
  Json j{{"record", "rk1"}, {"case", rk1_case_name(r.kind)}, {"a", r.a.get_str()}};
  if (r.kind == Rk1Case::Monomial) {
    text += " b " + r.b.get_str() + " k " + std::to_string(r.k);
    j["b"] = r.b.get_str();
    j["k"] = r.k;
  } else if (r.kind == Rk1Case::SymmetricPm) {
    text += std::string(" sign ") + (r.b > 0 ? "+" : "-");
    j["sign"] = r.b > 0 ? "+" : "-";
  }
  text += " bound " + r.group_bound;
  j["group_bound"] = r.group_bound;
  em.emit(text, j);
  std::string shears = r.only_zero_shear ? "{0}" : r.shear_modulus.get_str() + "Z";
  std::vector<std::string> factors;
  for (std::size_t d : r.cyclotomic_factors)
    factors.push_back("Phi_" + std::to_string(d));
  em.emit("shears " + shears + " (" + r.shear_reason + ")" + (factors.empty() ? "" : " factors " + join(factors)),
          {{"record", "shears"}, {"allowed", shears}, {"reason", r.shear_reason}, {"factors", factors}});
  return 0;
}

int cmd_hessian(const Options& o, Emitter& em) {
  HessianGroup g;
  if (o.group == "ORDER3")
    g = HessianGroup::Order3;
  else if (o.group == "ORDER2")
    g = HessianGroup::Order2;
  else if (o.group == "ORDER2_F")
    g = HessianGroup::Order2F;
  else
    fail(ErrorCode::ParseError, "unknown group kind " + o.group);
  HessianCheckReport r = hessian_theorem_check(parse_laurent(read_text_file(o.path)), g);
  for (const auto& pc : r.points) {
    const CliffordData& d = pc.normalized ? *pc.normalized : pc.raw;
    std::string consts = "(" + d.lambda.to_string() + "," + d.mu.to_string() + "," + d.nu.to_string() + ")";
    em.emit("point " + pc.point.to_string() + " constants " + consts + (pc.ok ? "" : " VIOLATION"),
            {{"record", "point"}, {"point", pc.point.to_string()}, {"constants", consts}, {"ok", pc.ok}});
  }
  std::string text = std::string(hessian_group_name(g)) + (r.pass ? " PASS" : " VIOLATION");
  Json j{{"record", "hessian"}, {"group", hessian_group_name(g)}, {"pass", r.pass}};
  if (r.epsilon) {
    text += " epsilon " + std::to_string(*r.epsilon);
    j["epsilon"] = *r.epsilon;
  }
  if (r.epsilon1) {
    text += " epsilon " + std::to_string(*r.epsilon1) + "," + std::to_string(*r.epsilon2);
    j["epsilon1"] = *r.epsilon1;
    j["epsilon2"] = *r.epsilon2;
  }
  if (r.hyperbolic) {
    text += " hyperbolic";
    j["hyperbolic"] = true;
  }
  if (!r.pass) {
    text += " " + r.violation;
    j["violation"] = r.violation;
  }
  em.emit(text, j);
  return r.pass ? 0 : 2;
}

int cmd_clifford(const Options& o, Emitter& em) {
  LaurentPolynomial w = parse_laurent(read_text_file(o.path));
  TorsionPoint p = parse_point(o.at);
  if (p.dim() != w.dim())
    fail(ErrorCode::ParseError, "point " + o.at + " has the wrong number of coordinates");
  CliffordData d = clifford_constants(w, p);
  std::string text = "point " + p.to_string() + " lambda " + d.lambda.to_string() + " mu " + d.mu.to_string() +
                     " nu " + d.nu.to_string();
  if (d.half_integral)
    text += " HALF_INTEGRAL";
  em.emit(text, {{"record", "clifford"},
                 {"point", p.to_string()},
                 {"lambda", d.lambda.to_string()},
                 {"mu", d.mu.to_string()},
                 {"nu", d.nu.to_string()},
                 {"half_integral", d.half_integral}});
  return 0;
}

int cmd_qform(const Options& o, Emitter& em) {
  if (o.qform.size() != 3)
    fail(ErrorCode::ParseError, "qform needs three integers");
  BinaryForm q{parse_integer(o.qform[0]), parse_integer(o.qform[1]), parse_integer(o.qform[2])};
  FormReduction r = reduce_binary_form(q);
  em.emit(std::string("form ") + q.to_string() + " discriminant " + q.discriminant().get_str() + " canonical " +
              canonical_form_name(r.kind) + " " + r.canonical.to_string() + " transform " + r.u.to_string(),
          {{"record", "qform"},
           {"form", q.to_string()},
           {"discriminant", q.discriminant().get_str()},
           {"canonical", canonical_form_name(r.kind)},
           {"matrix", r.canonical.to_string()},
           {"transform", r.u.to_string()}});
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy of monotone Lagrangian tori", "lagmon"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "one JSON object per output line");

  auto* toric = app.add_subcommand("toric", "Delzant check, monotone fibre data and monodromy groups");
  toric->add_option("polytope", o.path, "polytope file")->required();
  toric->add_option("--mode", o.mode, "override the compactness mode")->check(CLI::IsMember({"compact", "vertex"}));
  toric->add_option("--cap", o.cap, "largest facet count for the setwise search")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify2d", "admissibility of the 13 finite subgroups of GL(2,Z)");

  auto* filter = app.add_subcommand("filter", "forced critical points and admissibility of a group");
  filter->add_option("group", o.path, "group file")->required();

  auto* conj = app.add_subcommand("conjecture", "run the conjecture filter on a catalog");
  conj->add_option("catalog", o.path, "catalog file")->required();

  auto* pot = app.add_subcommand("potential", "superpotential tools");
  pot->require_subcommand(1);
  auto* crit = pot->add_subcommand("crit", "critical torsion points");
  crit->add_option("polynomial", o.path, "Laurent polynomial file")->required();
  crit->add_option("--bound", o.bound, "order bound for torsion points")->check(CLI::PositiveNumber);
  crit->add_option("--cap", o.cap, "largest grid to scan")->check(CLI::PositiveNumber);
  auto* rk1 = pot->add_subcommand("rk1", "rank-one classification");
  rk1->add_option("polynomial", o.path, "Laurent polynomial file")->required();
  auto* hess = pot->add_subcommand("hessian", "Hessian check at the forced critical points");
  hess->add_option("polynomial", o.path, "Laurent polynomial file")->required();
  hess->add_option("--group", o.group, "ORDER3, ORDER2 or ORDER2_F")
      ->check(CLI::IsMember({"ORDER3", "ORDER2", "ORDER2_F"}));

  auto* cliff = app.add_subcommand("clifford", "Clifford constants at a critical point");
  cliff->add_option("polynomial", o.path, "Laurent polynomial file")->required();
  cliff->add_option("--at", o.at, "torsion point such as 0,1/2")->required();

  auto* qform = app.add_subcommand("qform", "reduce a binary form of discriminant +-1");
  qform->add_option("entries", o.qform, "lambda mu' nu")->expected(3)->required()->allow_extra_args(false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "PARSE_ERROR: " << e.what() << '\n';
    return 3;
  }

  Emitter em(out, o.json);
  try {
    if (*toric)
      return cmd_toric(o, em);
    if (*classify)
      return cmd_classify2d(em);
    if (*filter)
      return cmd_filter(o, em);
    if (*conj)
      return cmd_conjecture(o, em);
    if (*crit)
      return cmd_crit(o, em);
    if (*rk1)
      return cmd_rk1(o, em);
    if (*hess)
      return cmd_hessian(o, em);
    if (*cliff)
      return cmd_clifford(o, em);
    if (*qform)
      return cmd_qform(o, em);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 3 : 2;
  }
  return 3;
}

} // namespace lagmon
