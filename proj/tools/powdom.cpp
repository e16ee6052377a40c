// powdom: command-line front end over the definition language, the
// catalog and the verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/monad.hpp"
#include "powdom/powerdomain.hpp"
#include "powdom/report.hpp"
#include "powdom/verify.hpp"
#include "powdom/workspace.hpp"

using namespace powdom;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kSizeGuard = 3;

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> extraFiles;
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  std::uint64_t sizeGuard = kDefaultSizeGuard;
  std::string json;
  std::string dot;
  bool timing = false;

  LawConfig law() const { return LawConfig{seed, trials, sizeGuard}; }
};

void addCommon(CLI::App* sub, Options& o) {
  sub->add_option("-f,--file", o.extraFiles, "Definition file (repeatable)");
  sub->add_option("--seed", o.seed, "Seed for sampled checks (POWDOM_SEED overrides)");
  sub->add_option("--trials", o.trials, "Samples per sampled law");
  sub->add_option("--size-guard", o.sizeGuard, "Bound on enumerated objects");
  sub->add_option("--json", o.json, "Write the JSON report here ('-' for stdout)");
  sub->add_option("--dot", o.dot, "Write a DOT diagram here ('-' for stdout)");
  sub->add_flag("--timing", o.timing, "Include per-check timing in the JSON report");
}

Workspace loadAll(const Options& o) {
  Workspace ws;
  for (const auto& f : o.files) ws.loadFile(f);
  for (const auto& f : o.extraFiles) ws.loadFile(f);
  return ws;
}

Report newReport(std::string command, const Options& o) {
  Report r;
  r.command = std::move(command);
  r.config = o.law();
  std::vector<std::string> files = o.files;
  files.insert(files.end(), o.extraFiles.begin(), o.extraFiles.end());
  if (!files.empty()) r.result["files"] = files;
  return r;
}

void writeTo(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidValue, "cannot write " + path);
  out << text;
}

int emit(const Report& r, const Options& o, const std::string& text, const std::string& dot = {}) {
  if (o.json != "-" && o.dot != "-") std::cout << text << r.summary();
  if (!o.json.empty()) writeTo(o.json, r.json(o.timing).dump(2) + "\n");
  if (!o.dot.empty()) {
    if (dot.empty()) {
      std::cerr << "note: this command produces no diagram\n";
    } else {
      writeTo(o.dot, dot);
    }
  }
  return r.overall() ? kOk : kCheckFailed;
}

std::string verdictWord(bool relaxed, bool holds) {
  if (relaxed) return holds ? "relaxed-entropic" : "not-relaxed-entropic";
  return holds ? "entropic" : "not-entropic";
}

std::string witnessLine(const Witness& w) {
  std::string s;
  for (const auto& a : w.args) s += (s.empty() ? "" : " ") + a;
  if (!w.params.empty()) {
    s += "  params:";
    for (const auto& p : w.params) s += " " + p;
  }
  return s + "  lhs " + w.lhs + "  rhs " + w.rhs;
}

// ---------------------------------------------------------------- check

template <class A>
int checkAlgebra(const A& alg, bool relaxed, const Options& o, Report& rep) {
  const auto er = relaxed ? isRelaxedEntropic(alg, o.law()) : isEntropic(alg, o.law());
  const auto& ops = alg.signature().ops();
  Json matrix = Json::array();
  std::ostringstream text;
  text << alg.name() << ": " << verdictWord(relaxed, er.verdict)
       << (er.exhaustive ? std::string(" (exhaustive)")
           : er.verdict  ? " (no counterexample on grid + samples, seed " + std::to_string(er.seed) + ")"
                         : " (grid + samples, seed " + std::to_string(er.seed) + ")")
       << "\n";
  CheckRecord constants;
  constants.name = "constants agree";
  constants.cases = 1;
  constants.verdict = er.constantsAgree;
  rep.checks.push_back(constants);
  for (const auto& p : er.pairs) {
    const std::string pair = ops[p.sigma].symbol + "/" + ops[p.omega].symbol;
    Json row;
    row["sigma"] = ops[p.sigma].symbol;
    row["omega"] = ops[p.omega].symbol;
    row["required"] = std::string(to_string(p.required));
    row["holds"] = p.outcome.holds;
    matrix.push_back(std::move(row));
    CheckRecord r = recordOf(pair + " " + std::string(to_string(p.required)), p.outcome);
    rep.checks.push_back(std::move(r));
  }
  rep.result["algebra"] = alg.name();
  rep.result["mode"] = relaxed ? "relaxed" : "entropic";
  rep.result["verdict"] = verdictWord(relaxed, er.verdict);
  rep.result["exhaustive"] = er.exhaustive;
  if (!er.exhaustive) rep.result["seed"] = er.seed;
  rep.result["matrix"] = std::move(matrix);
  return emit(rep, o, text.str());
}

int cmdCheck(const Options& o, const std::string& entropic, const std::string& relaxed) {
  if (entropic.empty() == relaxed.empty()) {
    fail(ErrorKind::InvalidValue, "give exactly one of --entropic NAME or --relaxed NAME");
  }
  const bool isRelaxed = !relaxed.empty();
  const std::string& name = isRelaxed ? relaxed : entropic;
  const Workspace ws = loadAll(o);
  Report rep = newReport(std::string("check ") + (isRelaxed ? "--relaxed " : "--entropic ") + name, o);
  if (ws.isFiniteAlgebra(name)) return checkAlgebra(ws.finiteAlgebra(name), isRelaxed, o, rep);
  return checkAlgebra(ws.ratAlgebra(name), isRelaxed, o, rep);
}

// ---------------------------------------------------------- powerdomain

int cmdPowerdomain(const Options& o, const std::string& kind, const std::string& posetName) {
  const Workspace ws = loadAll(o);
  const PosetPtr x = ws.poset(posetName);
  Report rep = newReport("powerdomain " + kind + " " + posetName, o);
  rep.result["kind"] = kind;
  rep.result["poset"] = x->name();
  std::ostringstream text;

  if (kind == "hoare" || kind == "smyth") {
    const auto pd = kind == "hoare" ? hoarePowerdomain(x, o.sizeGuard) : smythPowerdomain(x, o.sizeGuard);
    rep.result["size"] = pd.sets.size();
    rep.result["order"] = kind == "hoare" ? "inclusion" : "reverse inclusion";
    Json elems = Json::array();
    text << pd.poset->name() << ": " << pd.sets.size() << " elements ("
         << (kind == "hoare" ? "down-sets" : "up-sets") << ")\n";
    for (std::size_t i = 0; i < pd.sets.size(); ++i) {
      Json e;
      e["set"] = pd.poset->label(static_cast<Elem>(i));
      e["functional"] = pd.image[i].str();
      elems.push_back(std::move(e));
      text << "  " << pd.poset->label(static_cast<Elem>(i)) << "  |->  " << pd.image[i].str() << "\n";
    }
    rep.result["elements"] = std::move(elems);
    rep.result["homomorphisms"] = pd.hom.size();
    rep.result["isomorphism"] = pd.verdict;
    text << "isomorphism onto the homomorphisms into " << (kind == "hoare" ? "2_ang" : "2_dem") << ": "
         << (pd.verdict ? "yes" : "no") << "\n";
    rep.checks.push_back(recordOf("images are homomorphisms", pd.intoHom));
    rep.checks.push_back(recordOf("bijection onto homomorphisms", pd.bijective));
    rep.checks.push_back(recordOf("order isomorphism", pd.orderIsomorphism));
    rep.checks.push_back(recordOf(kind == "hoare" ? "ideal shape" : "filter shape", pd.shape));
    rep.checks.push_back(recordOf("free = hom", pd.freeEqualsHom));
    return emit(rep, o, text.str(), hasseDot(*pd.poset));
  }
  if (kind == "sober") {
    const auto s = sobrification(x, o.sizeGuard);
    rep.result["size"] = s.points.size();
    Json pts = Json::array();
    text << s.poset->name() << ": " << s.points.size() << " points\n";
    for (Elem p = 0; p < x->size() && p < s.deltaIndex.size(); ++p) {
      Json e;
      e["element"] = x->label(p);
      e["point"] = s.points[s.deltaIndex[p]].str();
      pts.push_back(std::move(e));
      text << "  " << x->label(p) << "  |->  " << s.points[s.deltaIndex[p]].str() << "\n";
    }
    rep.result["points"] = std::move(pts);
    rep.checks.push_back(recordOf("one point per element", s.count));
    rep.checks.push_back(recordOf("delta is an order isomorphism", s.deltaIso));
    return emit(rep, o, text.str(), hasseDot(*s.poset));
  }
  if (kind == "valuations") {
    const auto vals = catalogValuations(x);
    std::vector<std::string> labels;
    std::vector<ElemBits> rows;
    Json elems = Json::array();
    text << "catalog valuations on " << x->name() << ": " << vals.size() << "\n";
    for (const auto& mu : vals) {
      labels.push_back(mu.str());
      ElemBits row(vals.size());
      for (std::size_t j = 0; j < vals.size(); ++j) row.set(j, valuationLeq(mu, vals[j]));
      rows.push_back(row);
      Json e;
      e["valuation"] = mu.str();
      e["mass"] = mu.mass().str();
      elems.push_back(std::move(e));
      text << "  " << mu.str() << "  mass " << mu.mass().str() << "\n";
      rep.checks.push_back(recordOf("linear " + mu.str(), [&] {
        const auto lr = checkLinear(mu, o.law());
        LawOutcome out;
        for (const auto* part : {&lr.zero, &lr.homogeneity, &lr.additive, &lr.monotone}) {
          out.cases += part->cases;
          out.exhaustive = out.exhaustive && part->exhaustive;
          if (!part->holds && out.holds) {
            out.holds = false;
            out.witness = part->witness;
          }
        }
        return out;
      }()));
    }
    const auto order = FinPoset::fromOrder("V(" + x->name() + ")", labels, rows);
    Json less = Json::array();
    for (const auto& [a, b] : order->covers()) less.push_back({order->label(a), order->label(b)});
    rep.result["elements"] = std::move(elems);
    rep.result["covers"] = std::move(less);
    return emit(rep, o, text.str(), hasseDot(*order));
  }
  fail(ErrorKind::InvalidValue, "unknown powerdomain kind '" + kind + "' (hoare, smyth, sober, valuations)");
}

// ------------------------------------------------------ homs/free/relaxed

int cmdFamily(const Options& o, Family family, const std::string& algebra, const std::string& posetName) {
  const Workspace ws = loadAll(o);
  const FinAlgebra& r = ws.finiteAlgebra(algebra);
  const PosetPtr x = ws.poset(posetName);
  const std::string fname(to_string(family));
  Report rep = newReport(fname + " " + algebra + " " + posetName, o);
  ContinuationMonad m(r, o.sizeGuard);
  const auto& preds = m.predicates(x);
  const auto& tx = m.functionals(x);
  const auto& members = m.family(x, family);
  std::ostringstream text;
  text << fname << " functionals on " << r.name() << "^" << x->name() << ": " << members.size() << " of "
       << tx->size() << "\n";
  text << "  predicates in table order: ";
  for (Elem g = 0; g < preds->size(); ++g) text << (g ? " " : "") << preds->poset()->label(g);
  text << "\n";
  Json list = Json::array();
  for (Elem i : members) {
    list.push_back(tx->poset()->label(i));
    text << "  " << tx->poset()->label(i) << "\n";
  }
  const auto cmp = compareFamilies(m, x);
  rep.result["algebra"] = r.name();
  rep.result["poset"] = x->name();
  rep.result["family"] = fname;
  rep.result["predicates"] = preds->poset()->labels();
  rep.result["count"] = members.size();
  rep.result["total"] = tx->size();
  rep.result["functionals"] = std::move(list);
  rep.result["comparison"] = {{"free", cmp.free.size()},
                              {"hom", cmp.hom.size()},
                              {"relaxed", cmp.relaxed.size()},
                              {"freeInHom", cmp.freeInHom},
                              {"freeInRelaxed", cmp.freeInRelaxed},
                              {"homInRelaxed", cmp.homInRelaxed},
                              {"freeEqualsHom", cmp.freeEqualsHom},
                              {"freeMinusHom", cmp.freeMinusHom.size()},
                              {"homMinusFree", cmp.homMinusFree.size()},
                              {"relaxedMinusHom", cmp.relaxedMinusHom.size()}};
  const auto sub = subPoset(*tx->poset(), members, fname + "(" + x->name() + ")");
  return emit(rep, o, text.str(), hasseDot(*sub));
}

// ------------------------------------------------------------ transform

std::string classify(const ContinuationMonad& m, const PredicateTransformer& s) {
  if (m.isHomomorphism(s)) return "hom";
  if (m.isRelaxedMorphism(s)) return "relaxed";
  return "neither";
}

bool allIn(const ContinuationMonad& m, const StateTransformer& t, Family f) {
  for (Elem x = 0; x < t.x->size(); ++x) {
    if (!m.inFamily(m.functional(t.y, t.map.table()[x]), f)) return false;
  }
  return true;
}

int cmdTransform(const Options& o, const std::string& direction, const std::string& name) {
  const Workspace ws = loadAll(o);
  Report rep = newReport("transform " + direction + " " + name, o);
  std::optional<ContinuationMonad> m;
  std::optional<StateTransformer> t;
  std::optional<PredicateTransformer> s;
  std::string input, output;
  bool roundtrip = false;
  if (direction == "q2p") {
    const auto& def = ws.transformer(name);
    m.emplace(ws.finiteAlgebra(def.algebra), o.sizeGuard);
    t = buildTransformer(*m, def);
    s = m->pTransform(*t);
    roundtrip = m->qTransform(*s) == *t;
    input = t->str();
    output = s->str();
  } else if (direction == "p2q") {
    const auto& def = ws.ptransformer(name);
    m.emplace(ws.finiteAlgebra(def.algebra), o.sizeGuard);
    s = buildPTransformer(*m, def);
    t = m->qTransform(*s);
    roundtrip = m->pTransform(*t) == *s;
    input = s->str();
    output = t->str();
  } else {
    fail(ErrorKind::InvalidValue, "unknown direction '" + direction + "' (p2q, q2p)");
  }
  const std::string cls = classify(*m, *s);
  const bool homs = allIn(*m, *t, Family::Hom);
  const bool relaxed = allIn(*m, *t, Family::Relaxed);
  rep.result["direction"] = direction;
  rep.result["name"] = name;
  rep.result["algebra"] = m->algebra().name();
  rep.result["input"] = input;
  rep.result["output"] = output;
  rep.result["stateTransformer"] = t->str();
  rep.result["predicateTransformer"] = s->str();
  rep.result["classification"] = cls;
  rep.result["valuesAllHom"] = homs;
  rep.result["valuesAllRelaxed"] = relaxed;

  CheckRecord rt;
  rt.name = "roundtrip";
  rt.cases = 1;
  rt.verdict = roundtrip;
  rep.checks.push_back(rt);
  CheckRecord ch;
  ch.name = "hom iff every value is a homomorphism";
  ch.cases = 1;
  ch.verdict = (cls == "hom") == homs;
  rep.checks.push_back(ch);
  CheckRecord cr;
  cr.name = "relaxed iff every value is relaxed";
  cr.cases = 1;
  cr.verdict = (cls != "neither") == relaxed;
  rep.checks.push_back(cr);

  std::ostringstream text;
  text << name << " (" << direction << ", over " << m->algebra().name() << ")\n"
       << "  state transformer:     " << t->str() << "\n"
       << "  predicate transformer: " << s->str() << "\n"
       << "  classification: " << cls << "\n";
  return emit(rep, o, text.str());
}

// ------------------------------------------------------------ valuation

int cmdValuation(const Options& o, const std::string& name, const std::vector<std::string>& evals,
                 const std::vector<std::string>& leqs) {
  const Workspace ws = loadAll(o);
  const auto& v = ws.valuation(name);
  Report rep = newReport("valuation " + name, o);
  std::ostringstream text;
  text << name << " = " << valuationStr(v) << "\n";
  rep.result["name"] = name;
  rep.result["value"] = valuationStr(v);

  auto lawRecord = [&](const std::string& law, const FunctionalLawReport& lr) {
    LawOutcome out;
    for (const auto* part : {&lr.zero, &lr.homogeneity, &lr.additive, &lr.monotone}) {
      out.cases += part->cases;
      out.exhaustive = out.exhaustive && part->exhaustive;
      if (!part->holds && out.holds) {
        out.holds = false;
        out.witness = part->witness;
      }
    }
    out.holds = out.holds && lr.verdict;
    rep.checks.push_back(recordOf(law, out));
  };
  Json values = Json::object();
  for (const auto& p : evals) {
    const ExtNN value = std::visit([&](const auto& phi) { return evaluate(phi, ws.predicate(p)); }, v);
    values[p] = value.str();
    text << "  " << name << "(" << p << ") = " << value.str() << "\n";
  }
  if (!evals.empty()) rep.result["evaluations"] = std::move(values);

  if (const auto* mu = std::get_if<SimpleValuation>(&v)) {
    rep.result["kind"] = "valuation";
    rep.result["mass"] = mu->mass().str();
    text << "  mass " << mu->mass().str() << "\n";
    lawRecord("linear", checkLinear(*mu, o.law()));
    Json order = Json::object();
    for (const auto& other : leqs) {
      const auto* nu = std::get_if<SimpleValuation>(&ws.valuation(other));
      if (!nu) fail(ErrorKind::TypeMismatch, "'" + other + "' is not a simple valuation");
      const bool leq = valuationLeq(*mu, *nu);
      order[other] = leq;
      text << "  " << name << (leq ? " <= " : " is not <= ") << other << "\n";
      rep.checks.push_back(recordOf("order oracle agrees with sampling against " + other,
                                    checkLeqOracle(*mu, *nu, o.law())));
    }
    if (!leqs.empty()) rep.result["leq"] = std::move(order);
  } else if (const auto* sub = std::get_if<SubFn>(&v)) {
    rep.result["kind"] = "sup";
    lawRecord("sublinear", checkSublinear(*sub, o.law()));
  } else {
    rep.result["kind"] = "inf";
    lawRecord("superlinear", checkSuperlinear(std::get<SupFn>(v), o.law()));
  }
  if (!leqs.empty() && !std::holds_alternative<SimpleValuation>(v)) {
    fail(ErrorKind::TypeMismatch, "--leq compares simple valuations only");
  }
  return emit(rep, o, text.str());
}

// --------------------------------------------------------- verify-suite

int cmdVerifySuite(const Options& o, std::size_t catalogMax, const std::string& fault) {
  VerifyOptions vo;
  vo.law = o.law();
  if (catalogMax > 0) vo.catalogMax = catalogMax;
  if (!fault.empty()) {
    const auto& known = faultNames();
    if (std::find(known.begin(), known.end(), fault) == known.end()) {
      fail(ErrorKind::InvalidValue, "unknown fault '" + fault + "'");
    }
    vo.fault = fault;
  }
  Report rep = verifySuite(vo);
  rep.command = "verify-suite";
  if (catalogMax > 0) rep.command += " --catalog-max " + std::to_string(catalogMax);
  if (!fault.empty()) rep.command += " --inject-fault " + fault;

  std::ostringstream text;
  for (const auto& g : rep.result["groups"]) {
    text << (g["verdict"] == "pass" ? "  ok    " : "  FAIL  ") << g["name"].get<std::string>() << "  "
         << g["passed"].get<std::size_t>() << "/" << g["checks"].get<std::size_t>() << "  "
         << g["title"].get<std::string>() << "\n";
  }
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    if (c.verdict) continue;
    ++failed;
    text << "  failed " << c.group << ": " << c.name << "\n";
    if (c.witness) text << "    witness: " << witnessLine(*c.witness) << "\n";
    if (c.details.contains("error")) text << "    error: " << c.details["error"].get<std::string>() << "\n";
  }
  text << (failed == 0 ? "PASS" : "FAIL") << ": " << rep.checks.size() - failed << " of " << rep.checks.size()
       << " checks passed (seed " << o.seed << ", trials " << o.trials << ")\n";

  if (o.json != "-") std::cout << text.str();
  if (!o.json.empty()) writeTo(o.json, rep.json(o.timing).dump(2) + "\n");
  return rep.overall() ? kOk : kCheckFailed;
}

// ----------------------------------------------------------- export-dot

int cmdExportDot(const Options& o, const std::string& posetName) {
  const Workspace ws = loadAll(o);
  const PosetPtr x = ws.poset(posetName);
  const std::string dot = hasseDot(*x);
  if (o.dot.empty() || o.dot == "-") {
    std::cout << dot;
  } else {
    writeTo(o.dot, dot);
  }
  if (!o.json.empty()) {
    Report rep = newReport("export-dot " + posetName, o);
    rep.result["poset"] = x->name();
    rep.result["size"] = x->size();
    writeTo(o.json, rep.json(o.timing).dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuation-monad powerdomains over finite posets"};
  app.require_subcommand(1);
  Options o;

  std::string entropic, relaxed;
  auto* check = app.add_subcommand("check", "Entropic or relaxed-entropic check of an algebra");
  check->add_option("--entropic", entropic, "Algebra name");
  check->add_option("--relaxed", relaxed, "Algebra name");
  check->add_option("files", o.files, "Definition files");
  addCommon(check, o);

  std::string kind, posetName;
  auto* pd = app.add_subcommand("powerdomain", "Hoare, Smyth, sober or valuation construction on a poset");
  pd->add_option("kind", kind, "hoare | smyth | sober | valuations")->required();
  pd->add_option("poset", posetName, "Poset name")->required();
  pd->add_option("files", o.files, "Definition files");
  addCommon(pd, o);

  std::string algebra;
  std::vector<std::pair<CLI::App*, Family>> families;
  for (auto [cmd, fam, help] : {std::tuple{"homs", Family::Hom, "Homomorphism functionals"},
                                std::tuple{"free", Family::Free, "Free functionals"},
                                std::tuple{"relaxed", Family::Relaxed, "Relaxed functionals"}}) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("algebra", algebra, "Finite algebra name")->required();
    sub->add_option("poset", posetName, "Poset name")->required();
    sub->add_option("files", o.files, "Definition files");
    addCommon(sub, o);
    families.emplace_back(sub, fam);
  }

  std::string direction, name;
  auto* tr = app.add_subcommand("transform", "Convert between state and predicate transformers");
  tr->add_option("direction", direction, "p2q | q2p")->required();
  tr->add_option("name", name, "Transformer name")->required();
  tr->add_option("files", o.files, "Definition files");
  addCommon(tr, o);

  std::vector<std::string> evals, leqs;
  auto* val = app.add_subcommand("valuation", "Evaluate and check a valuation");
  val->add_option("name", name, "Valuation name")->required();
  val->add_option("files", o.files, "Definition files");
  val->add_option("--eval", evals, "Predicate to evaluate on (repeatable)");
  val->add_option("--leq", leqs, "Valuation to compare with (repeatable)");
  addCommon(val, o);

  std::size_t catalogMax = 0;
  std::string fault;
  auto* vs = app.add_subcommand("verify-suite", "Run every invariant over the catalog");
  vs->add_option("--catalog-max", catalogMax, "Largest catalog poset to use");
  vs->add_option("--inject-fault", fault)->group("");
  addCommon(vs, o);

  auto* ed = app.add_subcommand("export-dot", "Hasse diagram of a poset in DOT");
  ed->add_option("poset", posetName, "Poset name")->required();
  ed->add_option("files", o.files, "Definition files");
  addCommon(ed, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("POWDOM_SEED")) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: POWDOM_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }

  try {
    if (check->parsed()) return cmdCheck(o, entropic, relaxed);
    if (pd->parsed()) return cmdPowerdomain(o, kind, posetName);
    for (auto& [sub, fam] : families) {
      if (sub->parsed()) return cmdFamily(o, fam, algebra, posetName);
    }
    if (tr->parsed()) return cmdTransform(o, direction, name);
    if (val->parsed()) return cmdValuation(o, name, evals, leqs);
    if (vs->parsed()) return cmdVerifySuite(o, catalogMax, fault);
    if (ed->parsed()) return cmdExportDot(o, posetName);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeGuardExceeded ? kSizeGuard : kUsage;
  }
  return kUsage;
}
