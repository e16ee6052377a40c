#include "powdom/ratalgebra.hpp"

#include <algorithm>

#include "powdom/error.hpp"

namespace powdom {

std::string_view to_string(RatOpKind kind) noexcept {
  switch (kind) {
    case RatOpKind::Add: return "add";
    case RatOpKind::Max: return "max";
    case RatOpKind::Min: return "min";
    case RatOpKind::Mul: return "mul";
    case RatOpKind::Scale: return "scale";
    case RatOpKind::ScaleFamily: return "scale";
    case RatOpKind::Const: return "const";
  }
  return "?";
}

RatOpKind parseRatOpKind(std::string_view text) {
  if (text == "add") return RatOpKind::Add;
  if (text == "max") return RatOpKind::Max;
  if (text == "min") return RatOpKind::Min;
  if (text == "mul") return RatOpKind::Mul;
  if (text == "scale") return RatOpKind::ScaleFamily;
  if (text == "const") return RatOpKind::Const;
  fail(ErrorKind::UnknownOp, "unknown builtin '" + std::string(text) + "'");
}

unsigned arityOf(RatOpKind kind) noexcept {
  switch (kind) {
    case RatOpKind::Add:
    case RatOpKind::Max:
    case RatOpKind::Min:
    case RatOpKind::Mul: return 2;
    case RatOpKind::Scale:
    case RatOpKind::ScaleFamily: return 1;
    case RatOpKind::Const: return 0;
  }
  return 0;
}

ExtNN applyRatOp(RatOpKind kind, const ExtNN& param, std::span<const ExtNN> params,
                 std::span<const ExtNN> args) {
  switch (kind) {
    case RatOpKind::Add: return args[0] + args[1];
    case RatOpKind::Max: return ennMax(args[0], args[1]);
    case RatOpKind::Min: return ennMin(args[0], args[1]);
    case RatOpKind::Mul: return args[0] * args[1];
    case RatOpKind::Scale: return param * args[0];
    case RatOpKind::ScaleFamily:
      if (params.empty()) fail(ErrorKind::ArityMismatch, "scale family applied without a scalar");
      return params[0] * args[0];
    case RatOpKind::Const: return param;
  }
  return param;
}

namespace {

Signature signatureOf(const std::vector<RatOp>& ops) {
  std::vector<OpSpec> specs;
  specs.reserve(ops.size());
  for (const auto& op : ops) {
    specs.push_back(OpSpec{op.symbol, arityOf(op.kind), op.tag, op.kind == RatOpKind::ScaleFamily});
  }
  return Signature(std::move(specs));
}

}  // namespace

RatAlgebra::RatAlgebra(std::string name, std::vector<RatOp> ops)
    : name_(std::move(name)), ops_(std::move(ops)), signature_(signatureOf(ops_)) {}

ExtNN RatAlgebra::apply(std::size_t op, std::span<const ExtNN> params,
                        std::span<const ExtNN> args) const {
  const auto& o = ops_.at(op);
  if (args.size() != arityOf(o.kind)) {
    fail(ErrorKind::ArityMismatch, o.symbol + " expects " + std::to_string(arityOf(o.kind)) +
                                       " arguments, got " + std::to_string(args.size()));
  }
  return applyRatOp(o.kind, o.param, params, args);
}

RatAlgebra RatAlgebra::retagged(const std::vector<Tag>& tags) const {
  if (tags.size() != ops_.size()) {
    fail(ErrorKind::ArityMismatch, "expected " + std::to_string(ops_.size()) + " tags");
  }
  auto ops = ops_;
  for (std::size_t i = 0; i < ops.size(); ++i) ops[i].tag = tags[i];
  return RatAlgebra(name_, std::move(ops));
}

RatAlgebra RatAlgebra::renamed(std::string name) const {
  RatAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

LawOutcome checkMonotone(const RatAlgebra& a, const LawConfig& cfg) {
  LawOutcome total;
  // Argument pos is replaced by pos + extra, which is never smaller.
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const std::size_t n = a.signature().op(op).arity;
    const std::size_t np = paramCount(a.signature(), op);
    for (std::size_t pos = 0; pos < n; ++pos) {
      auto out = forEachAssignment(
          a, n + 1, np, cfg,
          [&](std::span<const ExtNN> x, std::span<const ExtNN> p)
              -> std::optional<std::pair<std::string, std::string>> {
            std::vector<ExtNN> lo(x.begin(), x.begin() + n);
            std::vector<ExtNN> hi = lo;
            hi[pos] = lo[pos] + x[n];
            ExtNN l = a.apply(op, p, lo);
            ExtNN h = a.apply(op, p, hi);
            if (l <= h) return std::nullopt;
            return std::make_pair(l.str(), h.str());
          });
      total.cases += out.cases;
      total.exhaustive = total.exhaustive && out.exhaustive;
      if (!out.holds) {
        total.holds = false;
        total.witness = out.witness;
        return total;
      }
    }
  }
  return total;
}

Predicate::Predicate(PosetPtr x, std::vector<ExtNN> values) : x_(std::move(x)), values_(std::move(values)) {
  if (values_.size() != x_->size()) {
    fail(ErrorKind::ArityMismatch, "predicate on " + x_->name() + " needs " +
                                       std::to_string(x_->size()) + " values, got " +
                                       std::to_string(values_.size()));
  }
  for (auto [a, b] : x_->covers()) {
    if (!(values_[a] <= values_[b])) {
      fail(ErrorKind::NonMonotone, "predicate is not monotone: " + x_->label(a) + " <= " +
                                       x_->label(b) + " but " + values_[a].str() + " > " +
                                       values_[b].str());
    }
  }
}

Predicate Predicate::constant(const PosetPtr& x, const ExtNN& v) {
  return Predicate(x, std::vector<ExtNN>(x->size(), v));
}

Predicate Predicate::characteristic(const PosetPtr& x, const ElemBits& upSet) {
  std::vector<ExtNN> v(x->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ExtNN(upSet.test(i) ? 1 : 0);
  return Predicate(x, std::move(v));
}

std::string Predicate::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += values_[i].str();
  }
  return out + ">";
}

namespace {

template <class F>
Predicate zipWith(const Predicate& f, const Predicate& g, F op) {
  if (f.poset() != g.poset()) fail(ErrorKind::TypeMismatch, "predicates on different posets");
  std::vector<ExtNN> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(f.values()[i], g.values()[i]);
  return Predicate(f.poset(), std::move(v));
}

}  // namespace

Predicate predAdd(const Predicate& f, const Predicate& g) { return zipWith(f, g, ennAdd); }
Predicate predMax(const Predicate& f, const Predicate& g) { return zipWith(f, g, ennMax); }
Predicate predMin(const Predicate& f, const Predicate& g) { return zipWith(f, g, ennMin); }

Predicate predScale(const ExtNN& r, const Predicate& f) {
  std::vector<ExtNN> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = r * f.values()[i];
  return Predicate(f.poset(), std::move(v));
}

bool predLeq(const Predicate& f, const Predicate& g) {
  if (f.poset() != g.poset()) fail(ErrorKind::TypeMismatch, "predicates on different posets");
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (!(f.values()[i] <= g.values()[i])) return false;
  }
  return true;
}

std::vector<Predicate> characteristicPredicates(const PosetPtr& x) {
  std::vector<Predicate> out;
  for (const auto& u : allUpSets(*x)) out.push_back(Predicate::characteristic(x, u.members));
  return out;
}

Predicate samplePredicate(const PosetPtr& x, Sampler& s) {
  const std::size_t n = x->size();
  std::vector<ExtNN> raw(n);
  for (auto& v : raw) v = s.extnn();
  std::vector<ExtNN> hull(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExtNN m;
    for (Elem y : x->below(static_cast<Elem>(i)).members()) m = ennMax(m, raw[y]);
    hull[i] = m;
  }
  return Predicate(x, std::move(hull));
}

PredicateAlgebra::PredicateAlgebra(RatAlgebra base, PosetPtr x)
    : base_(std::move(base)), x_(std::move(x)), grid_(characteristicPredicates(x_)) {
  grid_.push_back(Predicate::constant(x_, ExtNN::infinity()));
}

Predicate PredicateAlgebra::apply(std::size_t op, std::span<const ExtNN> params,
                                  std::span<const Predicate> args) const {
  const std::size_t n = x_->size();
  std::vector<ExtNN> out(n);
  std::vector<ExtNN> point(args.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k].poset() != x_) fail(ErrorKind::TypeMismatch, "predicate on a different poset");
      point[k] = args[k].values()[i];
    }
    out[i] = base_.apply(op, params, point);
  }
  return Predicate(x_, std::move(out));
}

ExtNN ScalarEndoSpace::applyOp(std::size_t op, std::span<const ExtNN> params,
                               std::span<const ExtNN> args) const {
  const auto& o = a_->op(op);
  switch (o.kind) {
    case RatOpKind::Add:
    case RatOpKind::Max:
    case RatOpKind::Min:
    case RatOpKind::Scale:
    case RatOpKind::ScaleFamily:
      // Each of these commutes with scaling, so the pointwise combination of
      // x |-> r_i x is again a scaling by the combined scalars.
      return applyRatOp(o.kind, o.param, params, args);
    case RatOpKind::Const:
      if (o.param.isZero()) return ExtNN(0);
      fail(ErrorKind::SignatureMismatch,
           "constant " + o.param.str() + " is not a scaling endomorphism");
    case RatOpKind::Mul:
      fail(ErrorKind::SignatureMismatch, "pointwise product of scalings is not a scaling");
  }
  return ExtNN(0);
}

}  // namespace powdom
