#include "redcor/cli.hpp"

#include <CLI11.hpp>

#include <ctime>
#include <filesystem>
#include <functional>
#include <optional>
#include <regex>

#include "redcor/duality.hpp"
#include "redcor/homological.hpp"
#include "redcor/io.hpp"
#include "redcor/smith.hpp"
#include "redcor/torsion.hpp"

namespace redcor::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Summary, Text, Json };

/// Output of one command. Reports (check/verify) also carry a pass flag.
struct Result {
  Json json;
  std::string summary;
  std::vector<std::string> proof;
  std::optional<bool> passed;
};

Result report(std::string claim, std::string paper_ref, std::string verdict, Json witness,
              bool passed, std::string summary) {
  Result r;
  r.json = Json{{"claim", std::move(claim)},
                {"paper_ref", std::move(paper_ref)},
                {"verdict", std::move(verdict)},
                {"witness", std::move(witness)}};
  r.summary = std::move(summary);
  r.passed = passed;
  return r;
}

struct Options {
  std::string workspace = "redcor.json";
  bool json = false, strict = false;
  std::string format = "summary";

  std::string module, other, ideal, seq, save, name, from, to, cyclic, diag;
  std::string ring_text;
  std::vector<std::string> rows, elements;
  std::size_t gens = 0, free_rank = 0;
  bool has_gens = false, has_free = false, identity = false, zero = false, replace = false,
       reset = false;
  unsigned bound = 64, i_bound = 4, j_bound = 8, degree = 1, length = 3;
};

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json analysis_json(const MapAnalysis& a) {
  return Json{{"well_defined", a.well_defined},
              {"injective", a.injective},
              {"surjective", a.surjective},
              {"iso", a.iso}};
}

std::string analysis_text(const MapAnalysis& a) {
  if (!a.well_defined) return "not well defined";
  if (a.iso) return "ISO (kernel 0, cokernel 0)";
  return std::string("not iso (kernel ") + (a.injective ? "0" : "nonzero") + ", cokernel " +
         (a.surjective ? "0" : "nonzero") + ")";
}

class Session {
 public:
  Session(Options opt, std::ostream& out) : opt_(std::move(opt)), out_(out) {}

  void load() {
    if (std::filesystem::exists(opt_.workspace)) {
      ws_ = io::load_workspace(opt_.workspace);
    } else {
      ws_.created = timestamp();
    }
  }
  void save() { io::save_workspace(ws_, opt_.workspace); }

  io::Workspace& ws() { return ws_; }
  const Options& opt() const { return opt_; }
  const Ring& ring() const { return ws_.require_ring(); }

  const Presentation& module(const std::string& flag, const std::string& name) const {
    if (name.empty()) throw UsageError(flag + " is required");
    try {
      return ws_.module(name);
    } catch (const Error& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  const Ideal& ideal(const std::string& flag, const std::string& name) const {
    if (name.empty()) throw UsageError(flag + " is required");
    try {
      return ws_.ideal(name);
    } catch (const Error& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  const Presentation& m() const { return module("-m", opt_.module); }
  const Presentation& n() const { return module("-n", opt_.other); }
  const Ideal& i() const { return ideal("-i", opt_.ideal); }

  /// Sequence from --seq, or the generators of -i.
  std::vector<Elem> sequence() const {
    if (!opt_.seq.empty()) return io::parse_element_list(ring(), opt_.seq);
    if (!opt_.ideal.empty()) return i().generators();
    throw UsageError("--seq or -i is required");
  }

  void define(const std::string& name, io::Object obj) {
    static const std::regex valid(R"([A-Za-z_][A-Za-z0-9_']*)");
    if (!std::regex_match(name, valid)) throw UsageError("invalid object name \"" + name + "\"");
    if (ws_.objects.count(name) && !opt_.replace)
      throw UsageError("\"" + name + "\" already exists (pass --replace to overwrite)");
    ws_.objects.insert_or_assign(name, std::move(obj));
  }

  /// Stores a computed module under --save, if given.
  void keep(const Presentation& m) {
    if (opt_.save.empty()) return;
    define(opt_.save, m);
    save();
  }

  int emit(const Result& r) {
    Format f = opt_.json || opt_.format == "json" ? Format::Json
               : opt_.format == "text"             ? Format::Text
                                                   : Format::Summary;
    if (f == Format::Json) {
      out_ << r.json.dump() << "\n";
    } else {
      out_ << r.summary << "\n";
      if (f == Format::Text)
        for (const auto& line : r.proof) out_ << "  " << line << "\n";
    }
    if (opt_.strict && r.passed && !*r.passed) return VerdictFailed;
    return Ok;
  }

 private:
  Options opt_;
  std::ostream& out_;
  io::Workspace ws_;
};

// ---- ring / def / list / rm ------------------------------------------------

Result ring_set(Session& s) {
  Ring r = io::ring_from_text(s.opt().ring_text);
  auto& ws = s.ws();
  if (!ws.objects.empty() && !(ws.ring && *ws.ring == r)) {
    if (!s.opt().reset) throw UsageError("workspace has objects over another ring (pass --reset to clear)");
    ws.objects.clear();
  }
  ws.ring = r;
  s.save();
  Result out;
  out.json = io::ring_to_json(r);
  out.summary = "ring: " + io::ring_to_text(r);
  return out;
}

Result ring_show(Session& s) {
  Result out;
  out.json = io::ring_to_json(s.ring());
  out.summary = io::ring_to_text(s.ring());
  return out;
}

Matrix rows_matrix(const Ring& ring, std::size_t cols, const std::vector<std::string>& rows) {
  Matrix a = Matrix::from_rows(cols, {});
  for (const auto& row : rows) {
    Vector v = io::parse_element_list(ring, row);
    if (v.size() != cols)
      throw UsageError("--row \"" + row + "\" has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(cols));
    a.append_row(v);
  }
  return a;
}

Result def_ideal(Session& s) {
  std::vector<Elem> gens;
  for (const auto& e : s.opt().elements) {
    auto part = io::parse_element_list(s.ring(), e);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  if (gens.empty()) throw UsageError("def ideal needs at least one generator");
  Ideal ideal(s.ring(), gens);
  s.define(s.opt().name, ideal);
  s.save();
  Result out;
  out.json = Json{{"name", s.opt().name}, {"kind", "ideal"}};
  out.json.update(io::ideal_to_json(ideal));
  out.summary = s.opt().name + " = " + ideal.to_string();
  return out;
}

Result def_module(Session& s) {
  const auto& o = s.opt();
  const Ring& ring = s.ring();
  const int forms = !o.cyclic.empty() + !o.diag.empty() + !o.ideal.empty() + o.has_free + o.has_gens;
  if (forms != 1) throw UsageError("def module needs exactly one of --gens, --free, --cyclic, --diag, -i");
  Presentation m = Presentation::zero(ring);
  if (o.has_gens) {
    m = Presentation(ring, o.gens, rows_matrix(ring, o.gens, o.rows));
  } else if (o.has_free) {
    m = Presentation::free(ring, o.free_rank);
  } else if (!o.cyclic.empty()) {
    m = Presentation::cyclic(Ideal(ring, io::parse_element_list(ring, o.cyclic)));
  } else if (!o.diag.empty()) {
    m = Presentation::diagonal(ring, io::parse_element_list(ring, o.diag));
  } else {
    m = Presentation::cyclic(s.i());
  }
  s.define(o.name, m);
  s.save();
  Result out;
  out.json = Json{{"name", o.name}, {"kind", "module"}};
  out.json.update(io::presentation_to_json(m));
  out.summary = o.name + " = " + describe(m);
  return out;
}

Result def_map(Session& s) {
  const auto& o = s.opt();
  const Presentation& src = s.module("--from", o.from);
  const Presentation& tgt = s.module("--to", o.to);
  Matrix p = o.identity ? Matrix::identity(s.ring(), src.gens())
             : o.zero   ? Matrix::zero(s.ring(), src.gens(), tgt.gens())
                        : rows_matrix(s.ring(), tgt.gens(), o.rows);
  if (p.rows() != src.gens() || p.cols() != tgt.gens())
    throw UsageError("map needs " + std::to_string(src.gens()) + " rows of " +
                     std::to_string(tgt.gens()) + " entries");
  ModuleMap f(src, tgt, p);  // NotWellDefined surfaces as an engine error
  s.define(o.name, io::MapRecord{o.from, o.to, p});
  s.save();
  Result out;
  out.json = Json{{"name", o.name}, {"kind", "map"}, {"source", o.from}, {"target", o.to},
                  {"matrix", io::matrix_to_json(s.ring(), p)}, {"analysis", analysis_json(map_analyze(f))}};
  out.summary = o.name + ": " + o.from + " -> " + o.to + ", " + analysis_text(map_analyze(f));
  return out;
}

Result list_objects(Session& s) {
  Result out;
  Json objs = Json::array();
  const auto& ws = s.ws();
  out.summary = "ring: " + (ws.ring ? io::ring_to_text(*ws.ring) : std::string("(none)"));
  for (const auto& [name, obj] : ws.objects) {
    objs.push_back(Json{{"name", name}, {"kind", io::kind_name(obj)}});
    out.summary += "\n" + name + "\t" + io::kind_name(obj);
  }
  out.json = Json{{"ring", ws.ring ? io::ring_to_json(*ws.ring) : Json(nullptr)}, {"objects", objs}};
  return out;
}

Result remove_object(Session& s) {
  auto& ws = s.ws();
  const std::string& name = s.opt().name;
  if (!ws.objects.count(name)) throw UsageError("no object named \"" + name + "\"");
  for (const auto& [other, obj] : ws.objects)
    if (const auto* rec = std::get_if<io::MapRecord>(&obj))
      if (rec->source == name || rec->target == name)
        throw UsageError("\"" + name + "\" is used by map \"" + other + "\"");
  ws.objects.erase(name);
  s.save();
  Result out;
  out.json = Json{{"removed", name}};
  out.summary = "removed " + name;
  return out;
}

// ---- compute ---------------------------------------------------------------

std::vector<std::string> tower_text(const std::string& label, const std::vector<TowerStage>& tower) {
  std::vector<std::string> out;
  for (const auto& t : tower)
    out.push_back(label + "^" + std::to_string(t.exponent) + ": [" + join(t.invariants) + "]");
  return out;
}

Result compute_gamma(Session& s) {
  GammaResult g = gamma(s.m(), s.i(), s.opt().bound);
  s.keep(g.module);
  Result out;
  out.json = Json{{"stabilized_at", g.exponent}, {"invariants", invariant_strings(g.module)}};
  out.summary = "Γ_I(M) = " + describe(g.module) + " (stabilized at k=" + std::to_string(g.exponent) + ")";
  out.proof = tower_text("(0 :_M I)", g.tower);
  out.proof.push_back("inclusion Γ_I(M) -> M: " + analysis_text(map_analyze(g.include)));
  return out;
}

Result compute_lambda(Session& s) {
  LambdaResult l = lambda(s.m(), s.i(), s.opt().bound);
  Result out;
  if (l.stabilized) {
    s.keep(*l.module);
    out.json = Json{{"stabilized_at", l.exponent}, {"invariants", invariant_strings(*l.module)}};
    out.summary = "Λ_I(M) = " + describe(*l.module) + " (stabilized at k=" + std::to_string(l.exponent) + ")";
    out.proof.push_back("projection M -> Λ_I(M): " + analysis_text(map_analyze(*l.project)));
  } else {
    out.json = Json{{"stabilized_at", nullptr}, {"bound", l.exponent}, {"invariants", nullptr}};
    out.summary = "Λ_I(M): tower not stable within k=" + std::to_string(l.exponent);
  }
  auto tower = tower_text("M/I^k M, k", l.tower);
  out.proof.insert(out.proof.begin(), tower.begin(), tower.end());
  return out;
}

Result compute_hom(Session& s) {
  HomModule h = hom_module(s.m(), s.n());
  s.keep(h.module());
  Result out;
  Json maps = Json::array();
  for (std::size_t j = 0; j < h.module().gens(); ++j)
    maps.push_back(io::matrix_to_json(s.ring(), h.realize(j).matrix()));
  out.json = Json{{"invariants", invariant_strings(h.module())}, {"generators", maps}};
  out.summary = "Hom(M, N) = " + describe(h.module());
  for (std::size_t j = 0; j < h.module().gens(); ++j)
    out.proof.push_back("generator " + std::to_string(j) + ": " + maps[j].dump());
  return out;
}

Result compute_tensor(Session& s) {
  Presentation t = tensor_product(s.m(), s.n());
  s.keep(t);
  Result out;
  out.json = Json{{"invariants", invariant_strings(t)}, {"module", io::presentation_to_json(t)}};
  out.summary = "M ⊗ N = " + describe(t);
  return out;
}

Result compute_colon(Session& s) {
  Submodule c = colon_annihilator(s.m(), s.i());
  s.keep(c.module);
  Result out;
  out.json = Json{{"invariants", invariant_strings(c.module)},
                  {"generators", io::matrix_to_json(s.ring(), c.include.matrix())}};
  out.summary = "(0 :_M I) = " + describe(c.module);
  return out;
}

Result compute_scalar(Session& s) {
  ScalarSubmodule sc = scalar_submodule(s.m(), s.i());
  s.keep(sc.quotient);
  Result out;
  out.json = Json{{"submodule", invariant_strings(sc.submodule)},
                  {"quotient", invariant_strings(sc.quotient)},
                  {"generators", io::matrix_to_json(s.ring(), sc.include.matrix())}};
  out.summary = "IM = " + describe(sc.submodule) + ", M/IM = " + describe(sc.quotient);
  return out;
}

Result compute_snf(Session& s) {
  const Presentation& m = s.m();
  SmithForm f = smith_invariants(m);
  std::vector<std::string> diag;
  for (const auto& d : f.invariants) diag.push_back(s.ring().format(d));
  Result out;
  out.json = Json{{"invariants", invariant_strings(m)},
                  {"diagonal", diag},
                  {"free_rank", f.free_rank},
                  {"U", io::matrix_to_json(s.ring(), f.U)},
                  {"V", io::matrix_to_json(s.ring(), f.V)},
                  {"D", io::matrix_to_json(s.ring(), f.D)}};
  out.summary = "M = " + describe(m) + " (diagonal [" + join(diag) + "], free rank " +
                std::to_string(f.free_rank) + ")";
  bool ok = mat::mul(s.ring(), mat::mul(s.ring(), f.U, m.relations()), f.V) == f.D;
  out.proof.push_back(std::string("U·A·V = D: ") + (ok ? "verified" : "FAILED"));
  return out;
}

Result complex_result(const ChainComplex& c, const std::string& label) {
  Result out;
  Json cohomology_json = Json::object();
  for (int p = c.lo(); p <= c.hi(); ++p) {
    auto inv = invariant_strings(cohomology(c, p).module);
    cohomology_json[std::to_string(p)] = inv;
    out.proof.push_back("H^" + std::to_string(p) + " = " + describe(cohomology(c, p).module));
  }
  out.json = Json{{"complex", io::complex_to_json(c)}, {"cohomology", cohomology_json}};
  std::vector<std::string> ranks;
  for (int p = c.lo(); p <= c.hi(); ++p) ranks.push_back(std::to_string(c.term(p).gens()));
  out.summary = label + ": degrees " + std::to_string(c.lo()) + ".." + std::to_string(c.hi()) +
                ", ranks " + join(ranks, " ");
  return out;
}

Result compute_koszul(Session& s) {
  return complex_result(koszul_complex(s.ring(), s.sequence()), "K(R; r)");
}

Result compute_resolution(Session& s) {
  if (s.opt().length == 0) throw UsageError("--length must be at least 1");
  return complex_result(free_resolution(s.m(), s.opt().length), "free resolution");
}

Result compute_tor(Session& s) {
  Presentation t = tor(s.m(), s.n(), s.opt().degree);
  s.keep(t);
  Result out;
  out.json = Json{{"degree", s.opt().degree}, {"invariants", invariant_strings(t)}};
  out.summary = "Tor_" + std::to_string(s.opt().degree) + "(M, N) = " + describe(t);
  return out;
}

Result compute_matlis(Session& s) {
  MatlisDual d = matlis_dual(s.m());
  s.keep(d.module);
  Result out;
  out.json = Json{{"kind", d.kind == MatlisDual::Kind::Character ? "character" : "linear"},
                  {"invariants", invariant_strings(d.module)},
                  {"module", io::presentation_to_json(d.module)}};
  out.summary = "D(M) = " + describe(d.module);
  return out;
}

Result compute_yoneda(Session& s) {
  YonedaReport y = yoneda_gamma_nat(s.i());
  Result out;
  out.json = Json{{"invariants", y.invariants},
                  {"canonical", analysis_json(y.canonical)},
                  {"companion_zero", y.companion_zero}};
  out.summary = "Γ_I(R/I) = " + describe(y.value) + ", canonical map R/I -> Γ_I(R/I): " +
                (y.canonical.iso ? "ISO" : "not iso");
  out.proof.push_back("I·(R/I) = 0: " + yes_no(y.companion_zero));
  out.proof.push_back("R/I -> Γ_I(R/I): " + analysis_text(y.canonical));
  return out;
}

// ---- check -----------------------------------------------------------------

Result check_reduced(Session& s) {
  const Presentation& m = s.m();
  const Ideal& i = s.i();
  bool v = is_I_reduced(m, i);
  auto a = invariant_strings(colon_annihilator(m, i).module);
  auto b = invariant_strings(colon_annihilator(m, ideal_power(i, 2)).module);
  Result r = report("M is I-reduced", "(0 :_M I) = (0 :_M I^2)", yes_no(v),
                    Json{{"colon_I", a}, {"colon_I2", b}}, v, "I-reduced: " + yes_no(v));
  r.proof = {"(0 :_M I) = [" + join(a) + "]", "(0 :_M I^2) = [" + join(b) + "]"};
  return r;
}

Result check_coreduced(Session& s) {
  const Presentation& m = s.m();
  const Ideal& i = s.i();
  bool v = is_I_coreduced(m, i);
  auto a = invariant_strings(scalar_submodule(m, i).submodule);
  auto b = invariant_strings(scalar_submodule(m, ideal_power(i, 2)).submodule);
  Result r = report("M is I-coreduced", "IM = I^2 M", yes_no(v), Json{{"IM", a}, {"I2M", b}}, v,
                    "I-coreduced: " + yes_no(v));
  r.proof = {"IM = [" + join(a) + "]", "I^2 M = [" + join(b) + "]"};
  return r;
}

Result check_torsion(Session& s) {
  GammaResult g = gamma(s.m(), s.i(), s.opt().bound);
  MapAnalysis a = map_analyze(g.include);
  Result r = report("M is I-torsion", "Γ_I(M) -> M is an isomorphism", yes_no(a.iso),
                    Json{{"gamma", invariant_strings(g.module)}, {"inclusion", analysis_json(a)}},
                    a.iso, "I-torsion: " + yes_no(a.iso));
  r.proof = {"Γ_I(M) -> M: " + analysis_text(a)};
  return r;
}

Result check_complete(Session& s) {
  CompletenessVerdict c = is_complete(s.m(), s.i(), s.opt().bound);
  const std::string v = to_string(c.value);
  std::string summary = "I-complete: " + v;
  if (c.value == Tristate::Unknown) summary += " (tower not stable within k=" + std::to_string(c.bound) + ")";
  return report("M is I-complete", "M -> Λ_I(M) is an isomorphism", v, Json{{"bound", c.bound}},
                c.value == Tristate::True, summary);
}

Result check_wpr(Session& s) {
  const auto& o = s.opt();
  ProZeroVerdict v = weak_proregularity_check(s.ring(), s.sequence(), o.i_bound, o.j_bound);
  Json witnesses = Json::array();
  std::vector<std::string> proof;
  for (const auto& [key, j] : v.witnesses) {
    witnesses.push_back(Json{{"i", key.first}, {"p", key.second}, {"j", j}});
    proof.push_back("H^" + std::to_string(key.second) + ": r^" + std::to_string(j) + " -> r^" +
                    std::to_string(key.first) + " is zero");
  }
  const std::string verdict = v.pro_zero ? "ProZeroUpTo(i_bound=" + std::to_string(v.i_bound) +
                                               ", j_bound=" + std::to_string(v.j_bound) + ")"
                                         : std::string("Inconclusive");
  Json witness{{"transitions", witnesses}};
  if (!v.pro_zero) witness["failed"] = Json{{"i", v.failed_i}, {"p", v.failed_p}};
  Result r = report("r is weakly proregular",
                    "each inverse system H^p(K(R; r^j)) -> H^p(K(R; r^i)), p < 0, is pro-zero",
                    verdict, witness, v.pro_zero, "weak proregularity: " + verdict);
  r.proof = proof;
  return r;
}

Result check_strong(Session& s) {
  StrongIdempotenceVerdict v = strongly_idempotent_check(s.i(), s.opt().i_bound);
  const std::string verdict = v.holds ? "HoldsUpTo(" + std::to_string(v.bound) + ")"
                                      : "FailsAt(" + std::to_string(v.failed_at) + ")";
  return report("I is strongly idempotent", "Tor_i(R/I, R/I) = 0 for all i >= 1", verdict,
                Json{{"bound", v.bound}, {"failed_at", v.holds ? Json(nullptr) : Json(v.failed_at)}},
                v.holds, "strong idempotence: " + verdict);
}

// ---- verify ----------------------------------------------------------------

Result verify_gm(Session& s) {
  AdjunctionReport a = gm_adjunction_check(s.m(), s.n(), s.i());
  std::string sides = a.left_label == a.right_label
                          ? "both sides " + a.left_label
                          : "Hom(Λ_I M, N) = " + a.left_label + ", Hom(M, Γ_I N) = " + a.right_label;
  Result r = report("Hom(Λ_I M, N) ≅ Hom(M, Γ_I N) via currying",
                    "Hom(R/I ⊗ M, N) ≅ Hom(M, Hom(R/I, N)) for I-coreduced M and I-reduced N",
                    a.conclusion ? "ISO" : "NOT ISO",
                    Json{{"left", a.left}, {"right", a.right}, {"currying", analysis_json(a.currying)},
                         {"invariants_agree", a.invariants_agree}},
                    a.conclusion && a.invariants_agree,
                    "GM adjunction: " + std::string(a.conclusion ? "ISO" : "NOT ISO") + " (" + sides + ")");
  r.proof = {"M is I-coreduced: " + yes_no(a.coreduced_m), "N is I-reduced: " + yes_no(a.reduced_n),
             "currying map: " + analysis_text(a.currying)};
  return r;
}

Result verify_mgm(Session& s) {
  MgmReport m = mgm_check(s.m(), s.i());
  auto opt_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  auto opt_map = [](const std::optional<MapAnalysis>& a) { return a ? analysis_json(*a) : Json(nullptr); };
  Json witness{{"reduced", m.reduced},         {"coreduced", m.coreduced},
               {"torsion", m.torsion},         {"complete", to_string(m.complete)},
               {"in_D", m.in_d},               {"in_E", m.in_e},
               {"gamma_complete", opt_bool(m.gamma_complete)},
               {"gamma_coreduced", opt_bool(m.gamma_coreduced)},
               {"lambda_torsion", opt_bool(m.lambda_torsion)},
               {"lambda_reduced", opt_bool(m.lambda_reduced)},
               {"lambda_gamma", opt_map(m.lambda_gamma)},
               {"gamma_lambda", opt_map(m.gamma_lambda)},
               {"skipped", m.skipped}};
  Result r = report("Γ_I and Λ_I exchange the reduced and coreduced sides and invert each other on D and E",
                    "Γ_I: D -> E and Λ_I: E -> D are quasi-inverse, D = torsion ∩ reduced, E = complete ∩ coreduced",
                    m.all_pass ? "pass" : "fail", witness, m.all_pass,
                    std::string("MGM equivalence: ") + (m.all_pass ? "pass" : "fail"));
  if (m.gamma_complete)
    r.proof.push_back("Γ_I(M) I-complete: " + yes_no(*m.gamma_complete) +
                      ", I-coreduced: " + yes_no(*m.gamma_coreduced));
  if (m.lambda_torsion)
    r.proof.push_back("Λ_I(M) I-torsion: " + yes_no(*m.lambda_torsion) +
                      ", I-reduced: " + yes_no(*m.lambda_reduced));
  if (m.lambda_gamma) r.proof.push_back("Λ_I Γ_I(M) -> M: " + analysis_text(*m.lambda_gamma));
  if (m.gamma_lambda) r.proof.push_back("M -> Γ_I Λ_I(M): " + analysis_text(*m.gamma_lambda));
  for (const auto& k : m.skipped) r.proof.push_back("skipped: " + k);
  return r;
}

Result verify_squares(Session& s) {
  SquareReport q = duality_square_check(s.m(), s.i());
  auto opt_map = [](const std::optional<MapAnalysis>& a) { return a ? analysis_json(*a) : Json(nullptr); };
  Json witness{{"gamma_of_dual", opt_map(q.gamma_of_dual)},
               {"lambda_of_dual", opt_map(q.lambda_of_dual)},
               {"gamma_dual", q.gamma_dual_side},
               {"dual_lambda", q.dual_lambda_side},
               {"lambda_dual", q.lambda_dual_side},
               {"dual_gamma", q.dual_gamma_side}};
  Result r = report("Matlis duality exchanges Γ_I and Λ_I",
                    "D(Λ_I M) ≅ Γ_I(D M) for I-coreduced M; Λ_I(D M) ≅ D(Γ_I M) for I-reduced M",
                    q.all_pass ? "pass" : "fail", witness, q.all_pass,
                    std::string("duality squares: ") + (q.all_pass ? "pass" : "fail"));
  if (q.gamma_of_dual) r.proof.push_back("D(Λ_I M) -> Γ_I(D M): " + analysis_text(*q.gamma_of_dual));
  if (q.lambda_of_dual) r.proof.push_back("Λ_I(D M) -> D(Γ_I M): " + analysis_text(*q.lambda_of_dual));
  return r;
}

Result verify_semigroup(Session& s) {
  SemigroupReport t = semigroup_table_check(s.m(), s.i());
  Json witness{{"HH", analysis_json(t.hh)}, {"TT", analysis_json(t.tt)}, {"TH", analysis_json(t.th)},
               {"HT", analysis_json(t.ht)}, {"H", t.h_side}, {"T", t.t_side}};
  Result r = report("H = Hom(R/I, -) and T = R/I ⊗ - compose idempotently",
                    "HH ≅ H, TT ≅ T, TH ≅ H, HT ≅ T on the relevant (co)reduced modules",
                    t.all_pass ? "pass" : "fail", witness, t.all_pass,
                    std::string("semigroup table: ") + (t.all_pass ? "pass" : "fail"));
  r.proof = {"HH -> H: " + analysis_text(t.hh), "TT -> T: " + analysis_text(t.tt),
             "TH -> H: " + analysis_text(t.th), "HT -> T: " + analysis_text(t.ht)};
  return r;
}

Result verify_transfer(Session& s) {
  TransferReport t = matlis_transfer_check(s.m(), s.i());
  Json rows = Json::array();
  std::vector<std::string> proof;
  for (const auto& row : t.rows) {
    rows.push_back(Json{{"ideal", row.ideal},
                        {"reduced_M", row.reduced_m},
                        {"coreduced_DM", row.coreduced_dual},
                        {"coreduced_M", row.coreduced_m},
                        {"reduced_DM", row.reduced_dual},
                        {"holds", row.holds}});
    proof.push_back(row.ideal + ": reduced(M)=" + yes_no(row.reduced_m) + " coreduced(DM)=" +
                    yes_no(row.coreduced_dual) + " coreduced(M)=" + yes_no(row.coreduced_m) +
                    " reduced(DM)=" + yes_no(row.reduced_dual));
  }
  Result r = report("reducedness transfers across the Matlis dual",
                    "M I-reduced <=> D(M) I-coreduced, M I-coreduced <=> D(M) I-reduced",
                    t.holds ? "pass" : "fail", Json{{"dual", t.dual_invariants}, {"ideals", rows}},
                    t.holds,
                    std::string("Matlis transfer: ") + (t.holds ? "pass" : "fail") + " (" +
                        std::to_string(t.rows.size()) + " ideals)");
  r.proof = proof;
  return r;
}

// ---- parser ----------------------------------------------------------------

using Handler = std::function<Result(Session&)>;

struct Builder {
  Options& o;
  std::vector<std::pair<CLI::App*, Handler>>& handlers;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  }
  void m(CLI::App* a) { a->add_option("-m,--module", o.module, "module name"); }
  void n(CLI::App* a) { a->add_option("-n,--other", o.other, "second module name"); }
  void i(CLI::App* a) { a->add_option("-i,--ideal", o.ideal, "ideal name"); }
  void bound(CLI::App* a) { a->add_option("--bound", o.bound, "stabilization bound")->capture_default_str(); }
  void save(CLI::App* a) { a->add_option("--save", o.save, "store the resulting module under this name"); }
  void seq(CLI::App* a) { a->add_option("--seq", o.seq, "comma-separated ring elements"); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  CLI::App app{"redcor: reduced and coreduced modules, torsion and completion, GM/MGM and Matlis checks"};
  app.name("redcor");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-w,--workspace", o.workspace, "workspace file")->capture_default_str();
  app.add_flag("--json", o.json, "print JSON");
  app.add_flag("--strict", o.strict, "exit 1 when a check or verification fails");
  app.add_option("--format", o.format, "summary, text (with proof lines) or json")
      ->check(CLI::IsMember({"summary", "text", "json"}))
      ->capture_default_str();
  Builder b{o, handlers};

  CLI::App* ring = app.add_subcommand("ring", "set or show the workspace ring")->require_subcommand(1);
  auto* ring_set_cmd = b.leaf(ring, "set", "set the ring: Z, Z/n, Q[x,y] or Fp[x,y] (;lex or ;grlex)", ring_set);
  ring_set_cmd->add_option("ring", o.ring_text, "ring")->required();
  ring_set_cmd->add_flag("--reset", o.reset, "drop objects defined over another ring");
  b.leaf(ring, "show", "print the ring", ring_show);

  CLI::App* def = app.add_subcommand("def", "define a named object")->require_subcommand(1);
  auto* di = b.leaf(def, "ideal", "def ideal NAME GEN...", def_ideal);
  di->add_option("name", o.name, "name")->required();
  di->add_option("generators", o.elements, "generators")->required();
  di->add_flag("--replace", o.replace, "overwrite an existing object");
  auto* dm = b.leaf(def, "module", "def module NAME (--gens g --row ... | --free g | --cyclic a,b | --diag d1,d2 | -i I)", def_module);
  dm->add_option("name", o.name, "name")->required();
  dm->add_option("--gens", o.gens, "number of generators")->each([&](const std::string&) { o.has_gens = true; });
  dm->add_option("--row", o.rows, "relation row, comma-separated");
  dm->add_option("--free", o.free_rank, "free module of this rank")->each([&](const std::string&) { o.has_free = true; });
  dm->add_option("--cyclic", o.cyclic, "R/(a,b,...)");
  dm->add_option("--diag", o.diag, "R/(d1) + R/(d2) + ...");
  b.i(dm);
  dm->add_flag("--replace", o.replace, "overwrite an existing object");
  auto* df = b.leaf(def, "map", "def map NAME --from M --to N (--row ... | --identity | --zero)", def_map);
  df->add_option("name", o.name, "name")->required();
  df->add_option("--from", o.from, "source module")->required();
  df->add_option("--to", o.to, "target module")->required();
  df->add_option("--row", o.rows, "image of a generator, comma-separated");
  df->add_flag("--identity", o.identity, "identity matrix");
  df->add_flag("--zero", o.zero, "zero map");
  df->add_flag("--replace", o.replace, "overwrite an existing object");

  CLI::App* compute = app.add_subcommand("compute", "run a construction")->require_subcommand(1);
  auto mi = [&](CLI::App* a) { b.m(a); b.i(a); };
  auto mn = [&](CLI::App* a) { b.m(a); b.n(a); };
  {
    auto* c = b.leaf(compute, "gamma", "Γ_I(M)", compute_gamma); mi(c); b.bound(c); b.save(c);
    c = b.leaf(compute, "lambda", "Λ_I(M)", compute_lambda); mi(c); b.bound(c); b.save(c);
    c = b.leaf(compute, "hom", "Hom(M, N)", compute_hom); mn(c); b.save(c);
    c = b.leaf(compute, "tensor", "M ⊗ N", compute_tensor); mn(c); b.save(c);
    c = b.leaf(compute, "colon", "(0 :_M I)", compute_colon); mi(c); b.save(c);
    c = b.leaf(compute, "scalar", "IM and M/IM (--save stores M/IM)", compute_scalar); mi(c); b.save(c);
    c = b.leaf(compute, "snf", "Smith normal form of the relations", compute_snf); b.m(c);
    c = b.leaf(compute, "koszul", "Koszul complex on --seq or the generators of -i", compute_koszul); b.seq(c); b.i(c);
    c = b.leaf(compute, "tor", "Tor_i(M, N)", compute_tor); mn(c); b.save(c);
    c->add_option("--degree", o.degree, "homological degree")->capture_default_str();
    c = b.leaf(compute, "resolution", "free resolution of M", compute_resolution); b.m(c);
    c->add_option("--length", o.length, "number of steps")->capture_default_str();
    c = b.leaf(compute, "matlis", "Matlis dual of a finite-length module", compute_matlis); b.m(c); b.save(c);
    c = b.leaf(compute, "yoneda", "Γ_I(R/I) and the canonical map", compute_yoneda); b.i(c);
  }

  CLI::App* check = app.add_subcommand("check", "decide a predicate")->require_subcommand(1);
  {
    auto* c = b.leaf(check, "reduced", "(0 :_M I) = (0 :_M I^2)", check_reduced); mi(c);
    c = b.leaf(check, "coreduced", "IM = I^2 M", check_coreduced); mi(c);
    c = b.leaf(check, "torsion", "Γ_I(M) -> M iso", check_torsion); mi(c); b.bound(c);
    c = b.leaf(check, "complete", "M -> Λ_I(M) iso", check_complete); mi(c); b.bound(c);
    c = b.leaf(check, "wpr", "bounded weak proregularity of --seq or -i", check_wpr); b.seq(c); b.i(c);
    c->add_option("--i-bound", o.i_bound, "largest i")->capture_default_str();
    c->add_option("--j-bound", o.j_bound, "largest j")->capture_default_str();
    c = b.leaf(check, "strongly-idempotent", "Tor_i(R/I, R/I) = 0 up to --bound", check_strong); b.i(c);
    c->add_option("--bound", o.i_bound, "largest i")->capture_default_str();
  }

  CLI::App* verify = app.add_subcommand("verify", "run a verification harness")->require_subcommand(1);
  {
    auto* c = b.leaf(verify, "gm", "GM adjunction for I-coreduced M, I-reduced N", verify_gm); mn(c); b.i(c);
    c = b.leaf(verify, "mgm", "MGM equivalence clauses", verify_mgm); mi(c);
    c = b.leaf(verify, "squares", "Matlis duality squares", verify_squares); mi(c);
    c = b.leaf(verify, "semigroup", "H/T semigroup table", verify_semigroup); mi(c);
    c = b.leaf(verify, "transfer", "Matlis transfer of (co)reducedness", verify_transfer); mi(c);
  }

  b.leaf(&app, "list", "list named objects", list_objects);
  auto* rm = b.leaf(&app, "rm", "remove a named object", remove_object);
  rm->add_option("name", o.name, "name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  const Handler* handler = nullptr;
  for (const auto& [sub, h] : handlers)
    if (sub->parsed()) handler = &h;
  if (!handler) {
    err << "redcor: no command given\n";
    return Usage;
  }

  try {
    Session session(o, out);
    session.load();
    return session.emit((*handler)(session));
  } catch (const UsageError& e) {
    err << "redcor: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    err << "redcor: " << e.what() << "\n";
    return Engine;
  }
}

}  // namespace redcor::cli
