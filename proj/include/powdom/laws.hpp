#pragma once

// Generic (in)equational law checking. A law domain either has a finite
// carrier, in which case every law is decided by exhaustive enumeration, or an
// infinite one (Q+ and predicates over it), in which case a law is checked
// on a fixed grid and then on seeded random instances. Verdicts on infinite
// carriers are "no counterexample found", never proofs; LawOutcome records
// which of the two applies.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powdom/algebra.hpp"
#include "powdom/error.hpp"
#include "powdom/extnum.hpp"
#include "powdom/sampler.hpp"

namespace powdom {

template <class D>
concept LawDomain = requires(const D& d, std::size_t op, std::span<const ExtNN> params,
                             std::span<const typename D::value_type> args,
                             const typename D::value_type& a) {
  typename D::value_type;
  { d.signature() } -> std::same_as<const Signature&>;
  { d.apply(op, params, args) } -> std::same_as<typename D::value_type>;
  { d.leq(a, a) } -> std::same_as<bool>;
  { d.equal(a, a) } -> std::same_as<bool>;
  { d.format(a) } -> std::same_as<std::string>;
  { D::exhaustive } -> std::convertible_to<bool>;
};

template <class D>
concept FiniteDomain = LawDomain<D> && D::exhaustive && requires(const D& d, std::size_t i) {
  { d.size() } -> std::convertible_to<std::size_t>;
  { d.element(i) } -> std::same_as<typename D::value_type>;
};

template <class D>
concept SampledDomain = LawDomain<D> && (!D::exhaustive) && requires(const D& d, Sampler& s) {
  { d.grid() } -> std::convertible_to<const std::vector<typename D::value_type>&>;
  { d.sample(s) } -> std::same_as<typename D::value_type>;
};

struct LawConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  /// Bound on the number of exhaustively enumerated cases per law.
  std::uint64_t sizeGuard = kDefaultSizeGuard;
};

enum class Relation { Equal, LessEq, GreaterEq };

std::string_view to_string(Relation rel) noexcept;
/// The relation an operation's tag demands of a relaxed morphism.
Relation relationFor(Tag tag) noexcept;

struct Witness {
  std::vector<std::string> args;
  std::vector<std::string> params;
  std::string lhs;
  std::string rhs;
};

struct LawOutcome {
  bool holds = true;
  /// True when every case was enumerated; false for grid + samples.
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
};

template <LawDomain D>
bool related(const D& d, const typename D::value_type& lhs, const typename D::value_type& rhs,
             Relation rel) {
  switch (rel) {
    case Relation::Equal: return d.equal(lhs, rhs);
    case Relation::LessEq: return d.leq(lhs, rhs);
    case Relation::GreaterEq: return d.leq(rhs, lhs);
  }
  return false;
}

/// Where the values of one group of law variables come from.
template <class V>
struct SlotSource {
  std::vector<V> grid;
  std::function<V(Sampler&)> sample;
  bool exhaustive = false;
  std::function<std::string(const V&)> format;
};

template <FiniteDomain D>
SlotSource<typename D::value_type> slotsOf(const D& d) {
  SlotSource<typename D::value_type> src;
  for (std::size_t i = 0; i < d.size(); ++i) src.grid.push_back(d.element(i));
  const std::size_t n = d.size();
  src.sample = [&d, n](Sampler& s) { return d.element(static_cast<std::size_t>(s.below(n))); };
  src.exhaustive = true;
  src.format = [&d](const typename D::value_type& v) { return d.format(v); };
  return src;
}

template <SampledDomain D>
SlotSource<typename D::value_type> slotsOf(const D& d) {
  SlotSource<typename D::value_type> src;
  src.grid = d.grid();
  src.sample = [&d](Sampler& s) { return d.sample(s); };
  src.exhaustive = false;
  src.format = [&d](const typename D::value_type& v) { return d.format(v); };
  return src;
}

SlotSource<ExtNN> scalarSlots();

/// Visits assignments of `na` values from `a`, `nb` values from `b` and `ns`
/// scalars. If every used group is exhaustive the full product is visited;
/// otherwise the product of the grids, then cfg.trials random assignments
/// drawn from a Sampler seeded with cfg.seed. `check` returns nullopt when the
/// case holds, or the (lhs, rhs) rendering of a violation, which stops the
/// enumeration and is recorded as the witness.
template <class A, class B, class F>
LawOutcome forEachCase(const SlotSource<A>& a, std::size_t na, const SlotSource<B>& b,
                       std::size_t nb, std::size_t ns, const LawConfig& cfg, F&& check) {
  LawOutcome out;
  const SlotSource<ExtNN> s = scalarSlots();
  const bool exhaustive = (na == 0 || a.exhaustive) && (nb == 0 || b.exhaustive) && ns == 0;
  out.exhaustive = exhaustive;

  std::vector<A> va(na);
  std::vector<B> vb(nb);
  std::vector<ExtNN> vs(ns);

  auto record = [&](std::pair<std::string, std::string> sides) {
    Witness w;
    for (const auto& x : va) w.args.push_back(a.format(x));
    for (const auto& x : vb) w.args.push_back(b.format(x));
    for (const auto& x : vs) w.params.push_back(x.str());
    w.lhs = std::move(sides.first);
    w.rhs = std::move(sides.second);
    out.holds = false;
    out.witness = std::move(w);
  };

  // Grid (or full) phase: odometer over all slots.
  const std::size_t total = na + nb + ns;
  std::vector<std::size_t> sizes;
  sizes.reserve(total);
  for (std::size_t i = 0; i < na; ++i) sizes.push_back(a.grid.size());
  for (std::size_t i = 0; i < nb; ++i) sizes.push_back(b.grid.size());
  for (std::size_t i = 0; i < ns; ++i) sizes.push_back(s.grid.size());
  std::uint64_t product = 1;
  for (auto z : sizes) {
    if (z == 0) return out;
    product *= z;
    checkSizeGuard(product, cfg.sizeGuard, "law enumeration");
  }
  std::vector<std::size_t> idx(total, 0);
  for (std::uint64_t c = 0; c < product; ++c) {
    for (std::size_t i = 0; i < na; ++i) va[i] = a.grid[idx[i]];
    for (std::size_t i = 0; i < nb; ++i) vb[i] = b.grid[idx[na + i]];
    for (std::size_t i = 0; i < ns; ++i) vs[i] = s.grid[idx[na + nb + i]];
    ++out.cases;
    if (auto bad = check(std::span<const A>(va), std::span<const B>(vb),
                         std::span<const ExtNN>(vs))) {
      record(std::move(*bad));
      return out;
    }
    for (std::size_t i = total; i-- > 0;) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
  }
  if (exhaustive) return out;

  Sampler rng(cfg.seed);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    for (std::size_t i = 0; i < na; ++i) va[i] = a.sample(rng);
    for (std::size_t i = 0; i < nb; ++i) vb[i] = b.sample(rng);
    for (std::size_t i = 0; i < ns; ++i) vs[i] = s.sample(rng);
    ++out.cases;
    if (auto bad = check(std::span<const A>(va), std::span<const B>(vb),
                         std::span<const ExtNN>(vs))) {
      record(std::move(*bad));
      return out;
    }
  }
  return out;
}

template <LawDomain D, class F>
LawOutcome forEachAssignment(const D& d, std::size_t nvals, std::size_t nparams,
                             const LawConfig& cfg, F&& check) {
  auto src = slotsOf(d);
  using V = typename D::value_type;
  return forEachCase(src, nvals, src, 0, nparams, cfg,
                     [&](std::span<const V> vals, std::span<const V>,
                         std::span<const ExtNN> params) { return check(vals, params); });
}

inline std::size_t paramCount(const Signature& sig, std::size_t op) {
  return sig.op(op).parametric ? 1 : 0;
}

/// The interchange law between sigma (arity n) and omega (arity m):
///   sigma(omega(x11..x1m), ..., omega(xn1..xnm))  REL  omega(sigma(x11..xn1), ..., sigma(x1m..xnm))
/// Witness args are listed row by row (x11, ..., x1m, x21, ...); params are
/// sigma's scalar then omega's scalar, for parametric operations.
template <LawDomain D>
LawOutcome interchangeLaw(const D& d, std::size_t sigma, std::size_t omega, Relation rel,
                          const LawConfig& cfg) {
  using V = typename D::value_type;
  const auto& sig = d.signature();
  const std::size_t n = sig.op(sigma).arity;
  const std::size_t m = sig.op(omega).arity;
  const std::size_t ps = paramCount(sig, sigma);
  const std::size_t pw = paramCount(sig, omega);
  return forEachAssignment(
      d, n * m, ps + pw, cfg,
      [&](std::span<const V> x, std::span<const ExtNN> params)
          -> std::optional<std::pair<std::string, std::string>> {
        auto psig = params.subspan(0, ps);
        auto pom = params.subspan(ps, pw);
        std::vector<V> inner(n);
        for (std::size_t i = 0; i < n; ++i) inner[i] = d.apply(omega, pom, x.subspan(i * m, m));
        V lhs = d.apply(sigma, psig, inner);
        std::vector<V> column(n);
        std::vector<V> outer(m);
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t i = 0; i < n; ++i) column[i] = x[i * m + j];
          outer[j] = d.apply(sigma, psig, column);
        }
        V rhs = d.apply(omega, pom, outer);
        if (related(d, lhs, rhs, rel)) return std::nullopt;
        return std::make_pair(d.format(lhs), d.format(rhs));
      });
}

template <LawDomain D>
LawOutcome commutes(const D& d, std::size_t sigma, std::size_t omega, const LawConfig& cfg = {}) {
  return interchangeLaw(d, sigma, omega, Relation::Equal, cfg);
}

template <LawDomain D>
LawOutcome subcommutes(const D& d, std::size_t sigma, std::size_t omega,
                       const LawConfig& cfg = {}) {
  return interchangeLaw(d, sigma, omega, Relation::LessEq, cfg);
}

template <LawDomain D>
LawOutcome supercommutes(const D& d, std::size_t sigma, std::size_t omega,
                         const LawConfig& cfg = {}) {
  return interchangeLaw(d, sigma, omega, Relation::GreaterEq, cfg);
}

struct PairCheck {
  std::size_t sigma = 0;
  std::size_t omega = 0;
  Relation required = Relation::Equal;
  LawOutcome outcome;
};

struct EntropicReport {
  bool verdict = true;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  /// All nullary operations denote the same element.
  bool constantsAgree = true;
  /// Row-major over (sigma, omega).
  std::vector<PairCheck> pairs;

  const PairCheck& at(std::size_t sigma, std::size_t omega, std::size_t opCount) const {
    return pairs.at(sigma * opCount + omega);
  }
};

template <LawDomain D>
bool constantsAgree(const D& d) {
  using V = typename D::value_type;
  const auto& sig = d.signature();
  std::optional<V> first;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (sig.op(i).arity != 0) continue;
    V c = d.apply(i, {}, std::span<const V>{});
    if (!first) {
      first = c;
    } else if (!d.equal(*first, c)) {
      return false;
    }
  }
  return true;
}

namespace detail {

template <LawDomain D, class RequiredFn>
EntropicReport interchangeMatrix(const D& d, const LawConfig& cfg, RequiredFn required) {
  EntropicReport report;
  report.seed = cfg.seed;
  report.constantsAgree = constantsAgree(d);
  const auto& sig = d.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (std::size_t w = 0; w < sig.size(); ++w) {
      PairCheck pc;
      pc.sigma = s;
      pc.omega = w;
      pc.required = required(sig.op(w).tag);
      pc.outcome = interchangeLaw(d, s, w, pc.required, cfg);
      report.verdict = report.verdict && pc.outcome.holds;
      report.exhaustive = report.exhaustive && pc.outcome.exhaustive;
      report.pairs.push_back(std::move(pc));
    }
  }
  return report;
}

}  // namespace detail

/// Any two operations commute (Eq. interchange with '=' for every ordered pair).
template <LawDomain D>
EntropicReport isEntropic(const D& d, const LawConfig& cfg = {}) {
  return detail::interchangeMatrix(d, cfg, [](Tag) { return Relation::Equal; });
}

/// Every operation subcommutes with the LE-tagged ones and supercommutes with
/// the GE-tagged ones (both for EQ).
template <LawDomain D>
EntropicReport isRelaxedEntropic(const D& d, const LawConfig& cfg = {}) {
  return detail::interchangeMatrix(d, cfg, [](Tag t) { return relationFor(t); });
}

struct OpCheck {
  std::size_t op = 0;
  Relation relation = Relation::Equal;
  LawOutcome outcome;
};

struct MorphismReport {
  bool verdict = true;
  bool exhaustive = true;
  std::vector<OpCheck> ops;
};

enum class MorphismKind { Homomorphism, Relaxed };

/// Checks phi(w(x1..xn)) REL w(phi x1, ..., phi xn) for every operation w,
/// where REL is '=' for homomorphisms and dictated by w's tag in R for
/// relaxed morphisms. With stopEarly the first failing operation ends the
/// check.
template <LawDomain B, LawDomain R, class Phi>
MorphismReport checkMorphism(const B& b, const R& r, Phi&& phi, MorphismKind kind,
                             const LawConfig& cfg = {}, bool stopEarly = false) {
  if (!b.signature().sameShape(r.signature())) {
    fail(ErrorKind::SignatureMismatch, "morphism between algebras of different signatures");
  }
  using VB = typename B::value_type;
  using VR = typename R::value_type;
  MorphismReport report;
  const auto& sig = r.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    OpCheck oc;
    oc.op = op;
    oc.relation = kind == MorphismKind::Homomorphism ? Relation::Equal : relationFor(sig.op(op).tag);
    const std::size_t n = sig.op(op).arity;
    std::vector<VR> images(n);
    oc.outcome = forEachAssignment(
        b, n, paramCount(sig, op), cfg,
        [&](std::span<const VB> x, std::span<const ExtNN> params)
            -> std::optional<std::pair<std::string, std::string>> {
          VR lhs = phi(b.apply(op, params, x));
          for (std::size_t i = 0; i < n; ++i) images[i] = phi(x[i]);
          VR rhs = r.apply(op, params, images);
          if (related(r, lhs, rhs, oc.relation)) return std::nullopt;
          return std::make_pair(r.format(lhs), r.format(rhs));
        });
    report.verdict = report.verdict && oc.outcome.holds;
    report.exhaustive = report.exhaustive && oc.outcome.exhaustive;
    const bool failed = !oc.outcome.holds;
    report.ops.push_back(std::move(oc));
    if (failed && stopEarly) break;
  }
  return report;
}

/// Bottom-up evaluation. Throws UnknownOp, ArityMismatch, UnboundVariable.
template <LawDomain D>
typename D::value_type evalTerm(const Term& t, std::span<const typename D::value_type> env,
                                const D& d) {
  using V = typename D::value_type;
  if (t.isVar()) {
    if (t.varIndex() >= env.size()) {
      fail(ErrorKind::UnboundVariable, "variable v" + std::to_string(t.varIndex()) +
                                           " with an environment of size " +
                                           std::to_string(env.size()));
    }
    return env[t.varIndex()];
  }
  const auto& sig = d.signature();
  const std::size_t op = sig.index(t.symbol());
  const auto& spec = sig.op(op);
  if (t.args().size() != spec.arity) {
    fail(ErrorKind::ArityMismatch, spec.symbol + " expects " + std::to_string(spec.arity) +
                                       " arguments, got " + std::to_string(t.args().size()));
  }
  if (spec.parametric != t.param().has_value()) {
    fail(ErrorKind::ArityMismatch, spec.symbol + (spec.parametric ? " needs a scalar parameter"
                                                                   : " takes no parameter"));
  }
  std::vector<V> args;
  args.reserve(t.args().size());
  for (const auto& sub : t.args()) args.push_back(evalTerm(sub, env, d));
  std::vector<ExtNN> params;
  if (t.param()) params.push_back(*t.param());
  return d.apply(op, params, args);
}

// ------------------------------------------------------------ End(R)-modules

/// Endomorphisms of a finite algebra as tables, with pointwise operations.
class FiniteEndoSpace {
 public:
  using endo_type = std::vector<Elem>;

  /// Uses every endomorphism of r.
  explicit FiniteEndoSpace(const FinAlgebra& r);
  FiniteEndoSpace(const FinAlgebra& r, std::vector<endo_type> endos);

  const std::vector<endo_type>& endos() const noexcept { return endos_; }
  endo_type identity() const;
  /// (a o b)(x) = a(b(x))
  endo_type compose(const endo_type& a, const endo_type& b) const;
  endo_type applyOp(std::size_t op, std::span<const ExtNN> params,
                    std::span<const endo_type> args) const;
  std::string format(const endo_type& e) const;
  SlotSource<endo_type> slots() const;

 private:
  const FinAlgebra* r_;
  std::vector<endo_type> endos_;
};

struct ModuleReport {
  bool verdict = true;
  LawOutcome identity;
  LawOutcome composition;
  /// One per operation.
  std::vector<LawOutcome> opsOnEndos;
  std::vector<LawOutcome> endosOnOps;
};

/// The End(R)-module axioms for an action (rho, x) |-> rho . x:
///   1 . x = x;  (r1 o r2) . x = r1 . (r2 . x);
///   w(r1..rn) . x = w(r1 . x, ..., rn . x);  r . w(x1..xn) = w(r . x1, ..., r . xn)
template <class Space, LawDomain D, class Action>
ModuleReport checkModuleAxioms(const Space& space, const D& a, Action&& act,
                               const LawConfig& cfg = {}) {
  using E = typename Space::endo_type;
  using V = typename D::value_type;
  const auto es = space.slots();
  const auto xs = slotsOf(a);
  ModuleReport report;
  using Sides = std::optional<std::pair<std::string, std::string>>;

  report.identity = forEachCase(es, 0, xs, 1, 0, cfg,
                                [&](std::span<const E>, std::span<const V> x,
                                    std::span<const ExtNN>) -> Sides {
                                  V lhs = act(space.identity(), x[0]);
                                  if (a.equal(lhs, x[0])) return std::nullopt;
                                  return std::make_pair(a.format(lhs), a.format(x[0]));
                                });
  report.composition = forEachCase(
      es, 2, xs, 1, 0, cfg,
      [&](std::span<const E> r, std::span<const V> x, std::span<const ExtNN>) -> Sides {
        V lhs = act(space.compose(r[0], r[1]), x[0]);
        V rhs = act(r[0], act(r[1], x[0]));
        if (a.equal(lhs, rhs)) return std::nullopt;
        return std::make_pair(a.format(lhs), a.format(rhs));
      });
  const auto& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t n = sig.op(op).arity;
    const std::size_t np = paramCount(sig, op);
    report.opsOnEndos.push_back(forEachCase(
        es, n, xs, 1, np, cfg,
        [&](std::span<const E> r, std::span<const V> x, std::span<const ExtNN> p) -> Sides {
          V lhs = act(space.applyOp(op, p, r), x[0]);
          std::vector<V> images(n);
          for (std::size_t i = 0; i < n; ++i) images[i] = act(r[i], x[0]);
          V rhs = a.apply(op, p, images);
          if (a.equal(lhs, rhs)) return std::nullopt;
          return std::make_pair(a.format(lhs), a.format(rhs));
        }));
    report.endosOnOps.push_back(forEachCase(
        es, 1, xs, n, np, cfg,
        [&](std::span<const E> r, std::span<const V> x, std::span<const ExtNN> p) -> Sides {
          V lhs = act(r[0], a.apply(op, p, x));
          std::vector<V> images(n);
          for (std::size_t i = 0; i < n; ++i) images[i] = act(r[0], x[i]);
          V rhs = a.apply(op, p, images);
          if (a.equal(lhs, rhs)) return std::nullopt;
          return std::make_pair(a.format(lhs), a.format(rhs));
        }));
  }
  report.verdict = report.identity.holds && report.composition.holds;
  for (const auto& o : report.opsOnEndos) report.verdict = report.verdict && o.holds;
  for (const auto& o : report.endosOnOps) report.verdict = report.verdict && o.holds;
  return report;
}

}  // namespace powdom
