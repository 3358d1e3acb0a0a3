#include "hhwb/cli.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hhwb/error.hpp"
#include "hhwb/homology.hpp"
#include "hhwb/sparse_matrix.hpp"
#include "hhwb/verify.hpp"

namespace hhwb::cli {

using io::Json;

namespace {

struct Params {
  std::size_t max_degree = 4;
  std::size_t bound = 12;
  std::string field;
  std::optional<std::uint64_t> cap;
  std::string out;
  bool json = false;
};

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json hh_json(const HomologyReport& r) {
  return Json{{"dims", r.dims},
              {"chain-dims", r.chain_dims},
              {"degree-cap", r.degree_cap},
              {"field", io::field_flag(r.field)},
              {"provenance", r.provenance},
              {"commutator-quotient", r.commutator_quotient}};
}

Json gldim_json(const GldimVerdict& g) {
  Json rows = Json::array();
  for (const auto& e : g.per_simple) {
    rows.push_back(Json{{"idempotent", e.idempotent}, {"simple-dim", e.simple_dim}, {"projdim", opt_json(e.projdim)}});
  }
  return Json{{"value", opt_json(g.value)}, {"bound", g.bound}, {"per-simple", rows}};
}

Json stratifying_json(const StratifyingReport& s) {
  return Json{{"corner-dim", s.corner_dim},
              {"tensor-dim", s.tensor_dim},
              {"ideal-dim", s.ideal_dim},
              {"multiplication-rank", s.multiplication_rank},
              {"injective", s.injective},
              {"surjective", s.surjective},
              {"si1", s.si1},
              {"tor", s.tor},
              {"si2", s.si2},
              {"bound", s.bound}};
}

Json splitting_json(const SplittingReport& r) {
  Json rows = Json::array();
  for (const auto& d : r.degrees) {
    rows.push_back(Json{{"degree", d.degree}, {"a", d.a}, {"b", d.b}, {"c", d.c}, {"equal", d.equal}});
  }
  return Json{{"degrees", rows}, {"overall", r.overall}, {"cap", r.cap}, {"provenance", r.provenance}};
}

Json exactness_json(const ExactnessReport& e) {
  return Json{{"dim-r", e.dim_r},
              {"dim-st", e.dim_st},
              {"dim-m", e.dim_m},
              {"rank-first", e.rank_first},
              {"rank-second", e.rank_second},
              {"composite-zero", e.composite_zero},
              {"defect-r", e.defect_r},
              {"defect-middle", e.defect_middle},
              {"excess-middle", e.excess_middle},
              {"defect-m", e.defect_m},
              {"exact-at-r", e.exact_at_r()},
              {"exact-at-middle", e.exact_at_middle()},
              {"exact-at-m", e.exact_at_m()},
              {"exact", e.exact()}};
}

std::string error_type(const Error& e) {
  if (dynamic_cast<const SchemaError*>(&e)) return "schema";
  if (dynamic_cast<const NotStratifying*>(&e)) return "not-stratifying";
  if (dynamic_cast<const SizeGuardError*>(&e)) return "size-guard";
  if (dynamic_cast<const NotFiniteWithinCap*>(&e)) return "not-finite-within-cap";
  if (dynamic_cast<const InconclusiveConfluence*>(&e)) return "inconclusive-confluence";
  if (dynamic_cast<const UnsupportedField*>(&e)) return "unsupported-field";
  if (dynamic_cast<const InvariantError*>(&e)) return "invariant";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field-mismatch";
  if (dynamic_cast<const InternalError*>(&e)) return "internal";
  return "error";
}

const Vector& need_idempotent(const io::Built& b) {
  if (!b.idempotent) {
    throw PreconditionError("document has no idempotent; add an \"idempotent\" member");
  }
  return *b.idempotent;
}

struct Outcome {
  Json results = Json::object();
  Json verdict;
  int code = positive;
};

Outcome cmd_build(const Json& doc, const io::BuildOptions& opt) {
  Outcome o;
  auto b = io::build(doc, opt);
  const FdAlgebra& a = *b.algebra;
  o.results = Json{{"kind", b.kind},
                   {"dim", a.dim()},
                   {"labels", a.labels()},
                   {"idempotent-count", a.idempotents().size()},
                   {"radical-designated", a.designated_radical().has_value()},
                   {"table", io::algebra_table(a)}};
  o.results["validation"] = b.validation ? io::validation_json(*b.validation) : Json(nullptr);
  if (b.idempotent) o.results["idempotent"] = io::vector_json(a, *b.idempotent);
  o.verdict = "valid";
  return o;
}

Outcome cmd_hh(const Json& doc, const Params& p, const io::BuildOptions& opt) {
  Outcome o;
  auto b = io::build(doc, opt);
  o.results = hh_json(hh_dims(*b.algebra, p.max_degree));
  o.verdict = "computed";
  return o;
}

Outcome cmd_gldim(const Json& doc, const Params& p, const io::BuildOptions& opt) {
  Outcome o;
  auto b = io::build(doc, opt);
  auto g = gldim(b.algebra, p.bound);
  o.results = gldim_json(g);
  o.verdict = g.value ? "gldim " + std::to_string(*g.value) : "exceeds bound " + std::to_string(p.bound);
  return o;
}

Outcome cmd_verify(const std::string& sub, const Json& doc, const Params& p, const io::BuildOptions& opt) {
  Outcome o;
  auto b = io::build(doc, opt);
  bool ok = false;
  if (sub == "splitting") {
    if (b.kind != "triangular" && b.kind != "exact-context") {
      throw PreconditionError("verify splitting needs a triangular or exact-context document");
    }
    auto r = verify_splitting(*b.algebra, *b.first, *b.second, p.max_degree, b.kind);
    o.results = splitting_json(r);
    ok = r.overall;
  } else if (sub == "les") {
    auto r = verify_les_inequality(*b.algebra, need_idempotent(b), p.max_degree, p.bound);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back(Json{{"degree", row.degree},
                          {"a", row.a},
                          {"quotient", row.quotient},
                          {"corner", row.corner},
                          {"slack", row.slack}});
    }
    o.results = Json{{"stratifying", stratifying_json(r.stratifying)},
                     {"corner-dim", r.corner_dim},
                     {"quotient-dim", r.quotient_dim},
                     {"rows", rows},
                     {"cap", r.cap},
                     {"tight", r.tight()}};
    ok = true;
  } else if (sub == "stratifying") {
    auto r = check_stratifying(*b.algebra, need_idempotent(b), p.bound);
    o.results = stratifying_json(r);
    o.results["failing"] = !r.si1 ? Json("SI1") : !r.si2 ? Json("SI2") : Json(nullptr);
    ok = r.verdict();
  } else if (sub == "morita") {
    if (!b.morita) throw PreconditionError("verify morita needs a morita document");
    auto r = verify_morita_reduction(*b.morita, p.max_degree, p.bound, b.variant);
    o.results = Json{{"variant", r.variant},
                     {"tensor-dim", r.tensor_dim},
                     {"pairing-rank", r.pairing_rank},
                     {"injective", r.injective},
                     {"tor", r.tor},
                     {"tor-vanishing", r.tor_vanishing},
                     {"projdim", opt_json(r.projdim)},
                     {"bound", r.bound},
                     {"quotient-dim", r.quotient_dim},
                     {"hypotheses", r.hypotheses()},
                     {"failure", r.failure()}};
    o.results["splitting"] = r.splitting ? splitting_json(*r.splitting) : Json(nullptr);
    ok = r.verdict();
  } else {
    if (!b.exact) throw PreconditionError("verify exact-context needs an exact-context document");
    auto r = check_homological_exact_context(*b.exact, p.bound);
    o.results = Json{{"form", b.form},
                     {"exactness", exactness_json(r.exactness)},
                     {"tor", r.tor},
                     {"bound", r.bound},
                     {"vanishing", r.vanishing},
                     {"homological", r.homological()}};
    ok = r.homological();
    if (b.trivial) {
      const auto& t = *b.trivial;
      o.results["trivial-extension"] = Json{{"tensor-dim", t.tensor_dim},
                                            {"epimorphism", t.epimorphism},
                                            {"tor", t.tor},
                                            {"tor-vanishing", t.tor_vanishing},
                                            {"projdim-m", opt_json(t.projdim_m)},
                                            {"hypotheses", t.hypotheses()}};
      ok = ok && t.hypotheses();
    }
  }
  o.verdict = ok;
  o.code = ok ? positive : negative;
  return o;
}

Outcome cmd_validate(const std::string& sub, const Json& doc, const io::BuildOptions& opt) {
  Outcome o;
  ValidationReport r;
  if (sub == "gentle" || sub == "skew-gentle") {
    auto pres = io::parse_presentation(doc, opt);
    auto rels = io::monomial_relations(pres, doc);
    if (sub == "gentle") {
      if (!pres.special_loops.empty()) throw SchemaError("/special-loops", "not allowed for validate gentle");
      r = validate_gentle(pres.quiver, rels);
    } else {
      r = validate_skew_gentle({pres.quiver, rels, pres.special_loops}).report;
    }
  } else if (sub == "cartan") {
    r = validate_cartan_triple(io::parse_cartan(doc));
  } else {
    r = validate_ei(io::parse_category(doc));
  }
  o.results = io::validation_json(r);
  o.verdict = r.passed();
  o.code = r.passed() ? positive : negative;
  return o;
}

std::string render_text(const Json& report) {
  std::ostringstream s;
  s << report["command"].get<std::string>() << ": " << report["verdict"].dump() << "\n";
  if (report.contains("error")) {
    s << "  error (" << report["error"]["type"].get<std::string>()
      << "): " << report["error"]["message"].get<std::string>() << "\n";
  }
  for (const auto& [k, v] : report["results"].items()) {
    if (k == "table") continue;
    s << "  " << k << ": " << v.dump() << "\n";
  }
  return s.str();
}

}  // namespace

std::string input_digest(const Json& doc) {
  const std::string text = doc.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::ostringstream s;
  s << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) s << std::setw(2) << static_cast<int>(md[i]);
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild homology workbench for finite-dimensional algebras", "hhwb"};
  app.require_subcommand(1);
  app.fallthrough();
  Params p;
  std::uint64_t cap = 0;
  app.add_option("--max-degree", p.max_degree, "Highest homological degree")
      ->envname("HHWB_MAX_DEGREE")
      ->capture_default_str();
  app.add_option("--bound", p.bound, "Bound for projective dimension and Tor")
      ->envname("HHWB_BOUND")
      ->capture_default_str();
  app.add_option("--field", p.field, "Ground field override: q or fp:<p>")->envname("HHWB_FIELD");
  auto* cap_opt = app.add_option("--cap-bytes", cap, "Entry cap (rows*cols) for any single matrix")
                      ->envname("HHWB_CAP_BYTES");
  app.add_option("--out", p.out, "Also write the JSON report to this path");
  app.add_flag("--json", p.json, "Print the JSON report instead of a summary");

  std::string input;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->add_option("input", input, "Input document (JSON)")->required();
    return s;
  };
  leaf(&app, "build", "Construct the algebra and report its basis");
  leaf(&app, "hh", "Hochschild homology dimensions");
  leaf(&app, "gldim", "Global dimension up to --bound");
  auto* verify = app.add_subcommand("verify", "Check a theorem instance");
  verify->require_subcommand(1);
  leaf(verify, "splitting", "HH(A) = HH(B) + HH(C) degreewise");
  leaf(verify, "les", "dim HH_n(A) <= dim HH_n(A/AeA) + dim HH_n(eAe)");
  leaf(verify, "morita", "Morita context reduction hypotheses and splitting");
  leaf(verify, "stratifying", "SI1 and SI2 for the idempotent ideal AeA");
  leaf(verify, "exact-context", "Exactness and Tor vanishing of an exact context");
  auto* validate = app.add_subcommand("validate", "Run a combinatorial validator");
  validate->require_subcommand(1);
  leaf(validate, "gentle", "Gentle conditions GP1 to GP4");
  leaf(validate, "skew-gentle", "Skew-gentle conditions on a presentation with special loops");
  leaf(validate, "cartan", "Cartan triple conditions C1 to C3 and orientation");
  leaf(validate, "ei", "EI and skeletal conditions for a finite category");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return positive;
  } catch (const CLI::ParseError& e) {
    err << "hhwb: " << e.what() << "\n";
    return failure;
  }
  if (cap_opt->count() > 0) p.cap = cap;

  std::string command, sub;
  auto* top = app.get_subcommands().front();
  command = top->get_name();
  if (!top->get_subcommands().empty()) sub = top->get_subcommands().front()->get_name();

  Json report;
  report["command"] = sub.empty() ? command : command + " " + sub;
  report["input-digest"] = nullptr;
  report["parameters"] = Json{{"max-degree", p.max_degree},
                              {"bound", p.bound},
                              {"field", p.field.empty() ? Json(nullptr) : Json(p.field)},
                              {"cap-bytes", p.cap ? Json(*p.cap) : Json(nullptr)}};
  report["results"] = Json::object();
  int code = failure;
  try {
    io::BuildOptions opt;
    opt.bound = p.bound;
    if (!p.field.empty()) opt.field = io::parse_field_flag(p.field);
    if (p.cap && *p.cap == 0) throw SchemaError("--cap-bytes", "must be positive");
    std::optional<ScopedSizeCap> guard;
    if (p.cap) guard.emplace(*p.cap);

    std::ifstream in(input, std::ios::binary);
    if (!in) throw Error("cannot read " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
      throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    report["input-digest"] = input_digest(doc);

    Outcome o;
    if (command == "build") {
      o = cmd_build(doc, opt);
    } else if (command == "hh") {
      o = cmd_hh(doc, p, opt);
    } else if (command == "gldim") {
      o = cmd_gldim(doc, p, opt);
    } else if (command == "verify") {
      o = cmd_verify(sub, doc, p, opt);
    } else {
      o = cmd_validate(sub, doc, opt);
    }
    report["results"] = std::move(o.results);
    report["verdict"] = std::move(o.verdict);
    code = o.code;
  } catch (const Error& e) {
    Json error{{"type", error_type(e)}, {"message", e.what()}};
    if (auto* s = dynamic_cast<const SchemaError*>(&e)) error["pointer"] = s->pointer();
    if (auto* s = dynamic_cast<const NotFiniteWithinCap*>(&e)) {
      error["cap"] = s->cap();
      error["witness"] = s->witness();
    }
    if (auto* s = dynamic_cast<const NotStratifying*>(&e)) {
      report["results"] = Json{{"stratifying", stratifying_json(s->report())}};
    }
    report["error"] = error;
    report["verdict"] = "error";
    err << "hhwb: " << e.what() << "\n";
    code = failure;
  }

  if (!p.out.empty()) {
    std::ofstream f(p.out, std::ios::binary);
    if (!f || !(f << report.dump(2) << "\n")) {
      err << "hhwb: cannot write " << p.out << "\n";
      return failure;
    }
  }
  out << (p.json ? report.dump(2) + "\n" : render_text(report));
  return code;
}

}  // namespace hhwb::cli
