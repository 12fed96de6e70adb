#include "affmon/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "affmon/faces.hpp"
#include "affmon/io.hpp"
#include "affmon/log_ring.hpp"

namespace affmon::cli {
namespace {

struct CommonOpts {
  std::string input_path;
  std::string ring_arg;
  std::string prime_path;
  std::string format = "text";
  bool no_oracle = false;
  std::size_t budget = 0;  // 0 means the environment default
};

std::size_t effective_budget(const CommonOpts& o) {
  return o.budget ? o.budget : default_reduction_budget();
}

// Report documents are the authoritative output; the text rendering is a
// line-by-line digest of the same facts. No timestamps or paths go in, so
// identical inputs produce identical bytes.
struct Report {
  Json doc = Json::object();
  std::vector<std::string> lines;

  explicit Report(const std::string& command) {
    doc["tool"] = "affmon";
    doc["version"] = tool_version;
    doc["command"] = command;
    lines.push_back("affmon " + std::string(tool_version) + " " + command);
  }

  void line(std::string s) { lines.push_back(std::move(s)); }

  int finish(int code, const CommonOpts& o, std::ostream& out) {
    doc["exit_code"] = code;
    if (o.format == "json") {
      out << doc.dump(2) << "\n";
    } else {
      for (const std::string& l : lines) out << l << "\n";
    }
    return code;
  }
};

int exit_for(const Decision& d) {
  if (d.budget_exceeded) return exit_budget;
  switch (d.verdict) {
    case Verdict::Yes:
      return exit_yes;
    case Verdict::No:
      return exit_no;
    case Verdict::Unsupported:
      return exit_unsupported;
  }
  return exit_unsupported;
}

void attach_decision(Report& rep, const Decision& d) {
  rep.doc["verdict"] = verdict_name(d.verdict);
  rep.doc["note"] = d.note;
  if (d.budget_exceeded) rep.doc["budget_exceeded"] = true;
  rep.doc["certificate"] = certificate_to_json(d.certificate);
  rep.doc["certificate_digest"] = certificate_digest(d.certificate);
  rep.line("verdict: " + verdict_name(d.verdict) +
           (d.note.empty() ? "" : " (" + d.note + ")"));
  if (d.budget_exceeded) rep.line("the oracle budget ran out before a full answer");
  rep.line("certificate: " + std::to_string(d.certificate.steps.size()) +
           " steps, digest " + certificate_digest(d.certificate));
}

Json canonical_monoid(const AffineMonoid& q) {
  return json_monoid_data(q.ambient, q.gens);
}

std::string input_digest(const AffineMonoid& q,
                         const std::optional<BaseRingDescriptor>& ring,
                         const Json& center) {
  Json j = Json::object();
  j["monoid"] = canonical_monoid(q);
  if (ring) j["ring"] = json_ring(*ring);
  if (!center.is_null()) j["center"] = center;
  return digest_bytes(j.dump());
}

BaseRingDescriptor resolve_ring(const std::string& arg) {
  if (arg.empty()) return ring_rationals();
  if (auto r = ring_from_shorthand(arg)) return *r;
  return ring_from_document(load_json_file(arg));
}

struct ResolvedCenter {
  std::optional<CenterSpec> monomial;
  std::optional<std::vector<Polynomial>> poly;
  Json canonical;
};

ResolvedCenter resolve_center(const CommonOpts& o, const BaseRingDescriptor& ring,
                              const AffineMonoid& q) {
  ResolvedCenter rc;
  CenterInput ci;
  if (o.prime_path.empty()) {
    // default center: the maximal monomial prime over the zero base prime
    ci.monomial = maximal_center(q);
  } else {
    ci = center_from_document(load_json_file(o.prime_path));
  }
  if (ci.polynomial) {
    if (!(ring.kind == RingKind::Rationals || ring.kind == RingKind::PrimeField))
      throw ParseError("center: polynomial generators need a coefficient field, not " +
                       ring.name());
    PolyContext ctx = make_poly_context(ring, q.gens.rows());
    rc.poly = polynomials_from_json(ctx, *ci.polynomial, "center.polynomial_generators");
    Json arr = Json::array();
    for (const Polynomial& p : *rc.poly) arr.push_back(json_polynomial(ring, p));
    rc.canonical = Json::object({{"polynomial_generators", arr}});
  } else {
    rc.monomial = *ci.monomial;
    Json fg = Json::array();
    for (std::size_t i : rc.monomial->face_gens) fg.push_back(i);
    rc.canonical =
        Json::object({{"monoid_prime", Json::object({{"face_generators", fg}})},
                      {"base_prime", json_base_prime(rc.monomial->base_prime)}});
  }
  return rc;
}

// Localize the global ring at the resolved center; on failure fills the
// report (with a certificate for the rejection, so it can be re-checked)
// and the exit code.
std::optional<LogRingDescriptor> apply_center(Report& rep, const LogRingDescriptor& global,
                                              const ResolvedCenter& rc, std::size_t budget,
                                              int& code) {
  LocalizeOutcome lo = rc.poly ? localize_at_polynomial_prime(global, *rc.poly, budget)
                               : localize_log_ring(global, *rc.monomial);
  if (lo.ring) return lo.ring;
  if (lo.budget_exceeded) {
    rep.doc["budget_exceeded"] = true;
    rep.line("the oracle budget ran out while contracting the center");
    code = exit_budget;
    return std::nullopt;
  }
  Certificate cert;
  cert.verdict = "unsupported";
  cert.subject = "the stated center of " + global.base.name() + "[Q]";
  if (lo.rejection) {
    rep.doc["rejection"] =
        Json::object({{"combination", json_vec(lo.rejection->combination)}});
    CertStep s;
    s.rule = "face-rejection";
    s.claim = "the monomial support of the center spans no face, so it is not a "
              "monomial prime";
    s.method = "structural";
    Json idx = Json::array();
    for (std::size_t i : lo.rejection_support) idx.push_back(i);
    s.data = Json::object({{"monoid", canonical_monoid(global.monoid)},
                           {"support_indices", std::move(idx)},
                           {"combination", json_vec(lo.rejection->combination)}});
    cert.steps.push_back(std::move(s));
    rep.line("center rejected: its monomial support spans no face");
    rep.line("witness relation on the generators: " + to_string(lo.rejection->combination));
  } else {
    rep.doc["error"] = lo.error;
    CertStep s;
    s.rule = "reasoning";
    s.claim = lo.error;
    s.method = "structural";
    cert.steps.push_back(std::move(s));
    rep.line("center rejected: " + lo.error);
  }
  rep.doc["verdict"] = "unsupported";
  rep.doc["certificate"] = certificate_to_json(cert);
  rep.doc["certificate_digest"] = certificate_digest(cert);
  rep.line("certificate: " + std::to_string(cert.steps.size()) + " steps, digest " +
           certificate_digest(cert));
  code = exit_unsupported;
  return std::nullopt;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  const AffineMonoid& q = mi.monoid;
  Report rep("analyze");
  rep.doc["input_digest"] = input_digest(q, std::nullopt, Json());

  Json facts = Json::object();
  facts["ambient_rank"] = q.ambient;
  facts["generator_count"] = q.gens.rows();
  facts["generators"] = json_matrix(q.gens);
  facts["finitely_generated"] = true;
  facts["cancellative"] = true;
  facts["reduced"] = q.is_reduced();
  facts["group_rank"] = q.gp_rank();
  facts["unit_rank"] = q.units_basis.rows();

  SaturationResult sat = root_closed_and_saturate(q);
  facts["root_closed"] = sat.root_closed;
  if (!sat.root_closed)
    facts["root_closed_witness"] = Json::object(
        {{"x", json_vec(sat.witness_x)}, {"n", json_int(sat.witness_n)}});

  SpecPoset sp = primes(q);
  facts["dim"] = sp.dim;
  facts["face_count"] = sp.primes.size();

  if (!q.is_reduced()) {
    ReducedMonoidResult red = reduced_monoid(q);
    if (red.ok) {
      facts["reduced_monoid"] = canonical_monoid(red.monoid);
    } else {
      Json tors = Json::array();
      for (const Int& t : red.torsion) tors.push_back(json_int(t));
      facts["reduced_monoid_torsion"] = tors;
    }
  }
  if (mi.presented) {
    facts["presented"] = true;
    facts["torsion_free"] = mi.torsion_free;
    if (!mi.torsion_free) {
      Json tors = Json::array();
      for (const Int& t : mi.discarded_torsion) tors.push_back(json_int(t));
      facts["discarded_torsion"] = tors;
    }
    facts["generator_images"] = json_matrix(mi.generator_images);
  }
  rep.doc["monoid"] = facts;

  rep.line("input digest: " + rep.doc["input_digest"].get<std::string>());
  rep.line("ambient rank: " + std::to_string(q.ambient) +
           ", generators: " + std::to_string(q.gens.rows()));
  if (mi.presented) {
    rep.line(std::string("presented input, torsion free: ") + yesno(mi.torsion_free));
    if (!mi.torsion_free) {
      std::string t;
      for (const Int& v : mi.discarded_torsion) t += (t.empty() ? "" : ", ") + v.get_str();
      rep.line("discarded torsion invariants: " + t);
    }
  }
  rep.line("finitely generated: yes, cancellative: yes");
  rep.line(std::string("reduced: ") + yesno(q.is_reduced()));
  rep.line(std::string("root closed: ") + yesno(sat.root_closed));
  if (!sat.root_closed)
    rep.line("  witness: " + to_string(sat.witness_x) + " missing, its multiple by " +
             sat.witness_n.get_str() + " present");
  rep.line("group rank: " + std::to_string(q.gp_rank()) +
           ", unit rank: " + std::to_string(q.units_basis.rows()));
  rep.line("dim: " + std::to_string(sp.dim));
  rep.line("faces: " + std::to_string(sp.primes.size()));
  return rep.finish(exit_yes, o, out);
}

int cmd_faces(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  const AffineMonoid& q = mi.monoid;
  Report rep("faces");
  rep.doc["input_digest"] = input_digest(q, std::nullopt, Json());

  std::vector<Face> faces = enumerate_faces(q);
  Json arr = Json::array();
  for (const Face& f : faces) {
    Json jf = json_face(f);
    jf["dim"] = f.dim;
    arr.push_back(jf);
  }
  rep.doc["face_count"] = faces.size();
  rep.doc["faces"] = arr;

  rep.line("faces: " + std::to_string(faces.size()));
  for (const Face& f : faces) {
    std::string idx;
    for (std::size_t i : f.gen_indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    rep.line("  {" + idx + "}  dim " + std::to_string(f.dim) + "  functional " +
             to_string(f.functional));
  }
  return rep.finish(exit_yes, o, out);
}

int cmd_saturate(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  const AffineMonoid& q = mi.monoid;
  Report rep("saturate");
  rep.doc["input_digest"] = input_digest(q, std::nullopt, Json());

  SaturationResult sat = root_closed_and_saturate(q);
  rep.doc["root_closed"] = sat.root_closed;
  rep.doc["saturation"] = canonical_monoid(sat.saturation);
  if (!sat.root_closed)
    rep.doc["witness"] = Json::object(
        {{"x", json_vec(sat.witness_x)}, {"n", json_int(sat.witness_n)}});

  rep.line(std::string("root closed: ") + yesno(sat.root_closed));
  if (!sat.root_closed)
    rep.line("witness: " + to_string(sat.witness_x) + " lies outside while its multiple by " +
             sat.witness_n.get_str() + " lies inside");
  rep.line("saturation generators: " + std::to_string(sat.saturation.gens.rows()));
  for (std::size_t i = 0; i < sat.saturation.gens.rows(); ++i)
    rep.line("  " + to_string(sat.saturation.gens.row(i)));
  return rep.finish(exit_yes, o, out);
}

int cmd_localize(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  BaseRingDescriptor ring = resolve_ring(o.ring_arg);
  ResolvedCenter rc = resolve_center(o, ring, mi.monoid);
  Report rep("localize");
  rep.doc["input_digest"] = input_digest(mi.monoid, ring, rc.canonical);
  rep.doc["ring"] = json_ring(ring);
  rep.doc["center"] = rc.canonical;

  LogRingDescriptor global = make_log_ring(ring, mi.monoid);
  int code = exit_usage;
  std::optional<LogRingDescriptor> local =
      apply_center(rep, global, rc, effective_budget(o), code);
  if (!local) return rep.finish(code, o, out);

  rep.doc["localized_monoid"] = canonical_monoid(local->monoid);
  Json cf = Json::array();
  for (std::size_t i : local->center_face->gen_indices) cf.push_back(i);
  rep.doc["center_face"] = cf;
  rep.doc["unit_rank"] = local->monoid.units_basis.rows();

  Decision loc = is_local_log(*local);
  attach_decision(rep, loc);

  std::string idx;
  for (std::size_t i : local->center_face->gen_indices)
    idx += (idx.empty() ? "" : ",") + std::to_string(i);
  rep.line("center face: {" + idx + "}");
  rep.line("localized monoid: " + std::to_string(local->monoid.gens.rows()) +
           " generators, unit rank " + std::to_string(local->monoid.units_basis.rows()));
  return rep.finish(exit_yes, o, out);
}

int cmd_very_solid(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  BaseRingDescriptor ring = resolve_ring(o.ring_arg);
  LogRingDescriptor r = make_log_ring(ring, mi.monoid);

  Report rep("very-solid");
  if (!o.prime_path.empty()) {
    ResolvedCenter rc = resolve_center(o, ring, mi.monoid);
    rep.doc["input_digest"] = input_digest(mi.monoid, ring, rc.canonical);
    rep.doc["ring"] = json_ring(ring);
    rep.doc["center"] = rc.canonical;
    int code = exit_usage;
    std::optional<LogRingDescriptor> local =
        apply_center(rep, r, rc, effective_budget(o), code);
    if (!local) return rep.finish(code, o, out);
    Decision d = is_very_solid(*local, !o.no_oracle, effective_budget(o));
    attach_decision(rep, d);
    return rep.finish(exit_for(d), o, out);
  }
  rep.doc["input_digest"] = input_digest(mi.monoid, ring, Json());
  rep.doc["ring"] = json_ring(ring);
  Decision d = is_very_solid(r, !o.no_oracle, effective_budget(o));
  attach_decision(rep, d);
  return rep.finish(exit_for(d), o, out);
}

int cmd_logreg(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  BaseRingDescriptor ring = resolve_ring(o.ring_arg);
  ResolvedCenter rc = resolve_center(o, ring, mi.monoid);
  Report rep("logreg");
  rep.doc["input_digest"] = input_digest(mi.monoid, ring, rc.canonical);
  rep.doc["ring"] = json_ring(ring);
  rep.doc["center"] = rc.canonical;

  LogRingDescriptor global = make_log_ring(ring, mi.monoid);
  int code = exit_usage;
  std::optional<LogRingDescriptor> local =
      apply_center(rep, global, rc, effective_budget(o), code);
  if (!local) return rep.finish(code, o, out);

  Decision d = is_log_regular(*local, !o.no_oracle, effective_budget(o));
  attach_decision(rep, d);
  return rep.finish(exit_for(d), o, out);
}

int cmd_theorem(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  BaseRingDescriptor ring = resolve_ring(o.ring_arg);
  ResolvedCenter rc = resolve_center(o, ring, mi.monoid);
  Report rep("theorem");
  rep.doc["input_digest"] = input_digest(mi.monoid, ring, rc.canonical);
  rep.doc["ring"] = json_ring(ring);
  rep.doc["center"] = rc.canonical;

  LogRingDescriptor global = make_log_ring(ring, mi.monoid);
  Decision d;
  if (rc.poly) {
    // polynomial centers go through contraction and the localized test
    int code = exit_usage;
    std::optional<LogRingDescriptor> local =
        apply_center(rep, global, rc, effective_budget(o), code);
    if (!local) return rep.finish(code, o, out);
    d = is_log_regular(*local, !o.no_oracle, effective_budget(o));
  } else {
    d = main_theorem_check(global, *rc.monomial, !o.no_oracle, effective_budget(o));
  }
  attach_decision(rep, d);
  return rep.finish(exit_for(d), o, out);
}

int cmd_oracle_dim(const CommonOpts& o, std::ostream& out) {
  MonoidInput mi = monoid_from_document(load_json_file(o.input_path));
  BaseRingDescriptor ring = resolve_ring(o.ring_arg);
  if (!(ring.kind == RingKind::Rationals || ring.kind == RingKind::PrimeField))
    throw ParseError("oracle-dim needs a coefficient field, not " + ring.name());
  const AffineMonoid& q = mi.monoid;
  Report rep("oracle-dim");
  rep.doc["input_digest"] = input_digest(q, ring, Json());
  rep.doc["ring"] = json_ring(ring);

  ToricIdealResult t = toric_ideal(ring, q, effective_budget(o));
  if (t.budget_exceeded) {
    rep.doc["budget_exceeded"] = true;
    rep.line("the oracle budget ran out while computing the presentation ideal");
    return rep.finish(exit_budget, o, out);
  }
  PolyContext ctx = make_poly_context(ring, q.gens.rows());
  long dim = krull_dim_quotient(ctx, t.basis);
  std::size_t monoid_dim = primes(q).dim;

  Json basis = Json::array();
  for (const Polynomial& g : t.basis) basis.push_back(json_polynomial(ring, g));
  rep.doc["nvars"] = q.gens.rows();
  rep.doc["reduced_basis"] = basis;
  rep.doc["steps_used"] = t.steps_used;
  rep.doc["dim"] = json_int(Int(dim));
  rep.doc["group_rank"] = q.gp_rank();
  rep.doc["monoid_dim"] = monoid_dim;
  rep.doc["agrees_with_monoid_dim"] = (dim >= 0 && static_cast<std::size_t>(dim) == monoid_dim);

  rep.line("presentation ideal: " + std::to_string(t.basis.size()) +
           " reduced basis elements, " + std::to_string(t.steps_used) + " steps");
  for (const Polynomial& g : t.basis) rep.line("  " + poly_to_string(ctx, g));
  rep.line("dim of the presented algebra: " + std::to_string(dim));
  rep.line("monoid dim: " + std::to_string(monoid_dim) + ", group rank: " +
           std::to_string(q.gp_rank()));
  return rep.finish(exit_yes, o, out);
}

int cmd_verify(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  Json doc = load_json_file(o.input_path);
  Certificate cert;
  try {
    cert = certificate_from_document(doc);
  } catch (const ParseError& e) {
    err << "malformed certificate: " << e.what() << "\n";
    return exit_usage;
  }
  Report rep("verify");
  rep.doc["certificate_digest"] = certificate_digest(cert);
  rep.doc["steps"] = cert.steps.size();
  rep.doc["claimed_verdict"] = cert.verdict;

  VerifyResult v = verify_certificate(cert, effective_budget(o));
  int code;
  std::string result;
  if (v.ok) {
    result = "accepted";
    code = exit_yes;
  } else if (v.budget_exceeded) {
    result = "budget exhausted";
    code = exit_budget;
  } else if (v.malformed) {
    result = "malformed";
    code = exit_usage;
  } else {
    result = "rejected";
    code = exit_no;
  }
  rep.doc["result"] = result;
  if (v.failed_step) rep.doc["failed_step"] = *v.failed_step;
  if (!v.message.empty()) rep.doc["message"] = v.message;

  rep.line("certificate digest: " + certificate_digest(cert));
  rep.line("steps: " + std::to_string(cert.steps.size()) + ", claimed verdict: " +
           cert.verdict);
  rep.line("result: " + result);
  if (v.failed_step) rep.line("failed step: " + std::to_string(*v.failed_step));
  if (!v.message.empty()) rep.line("detail: " + v.message);
  return rep.finish(code, o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact decision procedures for log regularity of monoid algebras"};
  app.name("affmon");
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* s, const std::string& input_name,
                        const std::string& input_help) {
    s->add_option(input_name, o.input_path, input_help)->required();
    s->add_option("--format", o.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    s->add_option("--budget", o.budget,
                  "oracle step budget (default AFFMON_ORACLE_BUDGET or 1000000)");
    s->add_flag("--no-oracle", o.no_oracle, "structural certificates only");
  };
  auto add_ring = [&](CLI::App* s) {
    s->add_option("--ring", o.ring_arg,
                  "base ring: Q, Z, F<p>, mod<n>, QxQ, or a JSON file (default Q)");
  };
  auto add_prime = [&](CLI::App* s) {
    s->add_option("--prime", o.prime_path,
                  "center document; default is the maximal monomial prime over the "
                  "zero base prime");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "monoid predicates, group and dimension facts");
  add_common(analyze, "monoid", "monoid document (JSON)");

  CLI::App* faces = app.add_subcommand("faces", "the full face lattice");
  add_common(faces, "monoid", "monoid document (JSON)");

  CLI::App* saturate =
      app.add_subcommand("saturate", "root closedness and the saturation");
  add_common(saturate, "monoid", "monoid document (JSON)");

  CLI::App* localize =
      app.add_subcommand("localize", "localize the algebra at a center");
  add_common(localize, "monoid", "monoid document (JSON)");
  add_ring(localize);
  add_prime(localize);

  CLI::App* very_solid = app.add_subcommand(
      "very-solid", "do all monomial primes extend to primes of the algebra");
  add_common(very_solid, "monoid", "monoid document (JSON)");
  add_ring(very_solid);
  add_prime(very_solid);

  CLI::App* logreg = app.add_subcommand(
      "logreg", "log regularity of the algebra localized at a center");
  add_common(logreg, "monoid", "monoid document (JSON)");
  add_ring(logreg);
  add_prime(logreg);

  CLI::App* theorem = app.add_subcommand(
      "theorem", "full pipeline: hypotheses, localization, both criteria");
  add_common(theorem, "monoid", "monoid document (JSON)");
  add_ring(theorem);
  add_prime(theorem);

  CLI::App* oracle_dim = app.add_subcommand(
      "oracle-dim", "presentation ideal and its dimension over a field");
  add_common(oracle_dim, "monoid", "monoid document (JSON)");
  add_ring(oracle_dim);

  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
  add_common(verify, "certificate", "certificate or report document (JSON)");

  try {
    // CLI11 consumes the vector back to front
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_yes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_yes;
  } catch (const CLI::CallForVersion&) {
    out << tool_version << "\n";
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (faces->parsed()) return cmd_faces(o, out);
    if (saturate->parsed()) return cmd_saturate(o, out);
    if (localize->parsed()) return cmd_localize(o, out);
    if (very_solid->parsed()) return cmd_very_solid(o, out);
    if (logreg->parsed()) return cmd_logreg(o, out);
    if (theorem->parsed()) return cmd_theorem(o, out);
    if (oracle_dim->parsed()) return cmd_oracle_dim(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "usage error: no subcommand\n";
  return exit_usage;
}

}  // namespace affmon::cli
