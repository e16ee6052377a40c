#include "powdom/algebra.hpp"

#include <algorithm>
#include <set>

#include "powdom/error.hpp"
#include "powdom/laws.hpp"

namespace powdom {

std::string_view to_string(Tag tag) noexcept {
  switch (tag) {
    case Tag::LE: return "LE";
    case Tag::GE: return "GE";
    case Tag::EQ: return "EQ";
  }
  return "?";
}

Tag parseTag(std::string_view text) {
  if (text == "LE") return Tag::LE;
  if (text == "GE") return Tag::GE;
  if (text == "EQ") return Tag::EQ;
  fail(ErrorKind::InvalidValue, "unknown tag '" + std::string(text) + "' (expected LE, GE or EQ)");
}

Signature::Signature(std::vector<OpSpec> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (!seen.insert(op.symbol).second) {
      fail(ErrorKind::InvalidValue, "operation symbol '" + op.symbol + "' declared twice");
    }
    if (op.parametric && op.arity != 1) {
      fail(ErrorKind::InvalidValue, "parametric operation '" + op.symbol + "' must be unary");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].symbol == symbol) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index(std::string_view symbol) const {
  if (auto i = find(symbol)) return *i;
  fail(ErrorKind::UnknownOp, "no operation '" + std::string(symbol) + "' in signature");
}

Signature Signature::withTags(const std::vector<Tag>& tags) const {
  if (tags.size() != ops_.size()) {
    fail(ErrorKind::ArityMismatch, "expected " + std::to_string(ops_.size()) + " tags, got " +
                                       std::to_string(tags.size()));
  }
  Signature out = *this;
  for (std::size_t i = 0; i < tags.size(); ++i) out.ops_[i].tag = tags[i];
  return out;
}

std::vector<Tag> Signature::tags() const {
  std::vector<Tag> out;
  out.reserve(ops_.size());
  for (const auto& op : ops_) out.push_back(op.tag);
  return out;
}

bool Signature::sameShape(const Signature& other) const {
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto& a = ops_[i];
    const auto& b = other.ops_[i];
    if (a.symbol != b.symbol || a.arity != b.arity || a.parametric != b.parametric) return false;
  }
  return true;
}

std::size_t tupleIndex(std::span<const Elem> args, std::size_t base) {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * base + a;
  return idx;
}

namespace {

std::uint64_t power(std::uint64_t base, unsigned exp, std::uint64_t guard, std::string_view what) {
  std::uint64_t p = 1;
  for (unsigned i = 0; i < exp; ++i) {
    p *= base;
    checkSizeGuard(p, guard, what);
  }
  return p;
}

bool advance(std::vector<Elem>& tuple, std::size_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

FinAlgebra::FinAlgebra(std::string name, PosetPtr carrier, Signature signature,
                       std::vector<std::vector<Elem>> tables)
    : name_(std::move(name)),
      carrier_(std::move(carrier)),
      signature_(std::move(signature)),
      tables_(std::move(tables)) {
  if (tables_.size() != signature_.size()) {
    fail(ErrorKind::ArityMismatch, name_ + ": " + std::to_string(signature_.size()) +
                                       " operations but " + std::to_string(tables_.size()) +
                                       " tables");
  }
  const std::size_t n = carrier_->size();
  std::vector<std::vector<Elem>> upperCovers(n);
  for (auto [a, b] : carrier_->covers()) upperCovers[a].push_back(b);

  for (std::size_t op = 0; op < signature_.size(); ++op) {
    const auto& spec = signature_.op(op);
    const auto& table = tables_[op];
    const std::uint64_t expected = power(n, spec.arity, kDefaultSizeGuard * 4, "operation table");
    if (table.size() != expected) {
      fail(ErrorKind::ArityMismatch, name_ + ": table of '" + spec.symbol + "' has " +
                                         std::to_string(table.size()) + " entries, expected " +
                                         std::to_string(expected));
    }
    for (Elem v : table) {
      if (v >= n) {
        fail(ErrorKind::UnknownElement,
             name_ + ": table of '" + spec.symbol + "' has an entry outside the carrier");
      }
    }
    if (spec.arity == 0 || n == 0) continue;
    std::vector<Elem> tuple(spec.arity, 0);
    do {
      const Elem here = table[tupleIndex(tuple, n)];
      for (std::size_t pos = 0; pos < spec.arity; ++pos) {
        const Elem saved = tuple[pos];
        for (Elem up : upperCovers[saved]) {
          tuple[pos] = up;
          if (!carrier_->leq(here, table[tupleIndex(tuple, n)])) {
            std::string at;
            for (std::size_t k = 0; k < spec.arity; ++k) {
              at += (k ? "," : "") + carrier_->label(k == pos ? saved : tuple[k]);
            }
            fail(ErrorKind::NonMonotone, name_ + ": '" + spec.symbol + "' is not monotone in argument " +
                                             std::to_string(pos + 1) + " at (" + at + ")");
          }
        }
        tuple[pos] = saved;
      }
    } while (advance(tuple, n));
  }
}

Elem FinAlgebra::apply(std::size_t op, std::span<const Elem> args) const {
  const auto& spec = signature_.op(op);
  if (args.size() != spec.arity) {
    fail(ErrorKind::ArityMismatch, spec.symbol + " expects " + std::to_string(spec.arity) +
                                       " arguments, got " + std::to_string(args.size()));
  }
  return tables_[op][tupleIndex(args, carrier_->size())];
}

FinAlgebra FinAlgebra::retagged(const std::vector<Tag>& tags) const {
  FinAlgebra out = *this;
  out.signature_ = signature_.withTags(tags);
  return out;
}

FinAlgebra FinAlgebra::renamed(std::string name) const {
  FinAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

FinAlgebra liftOver(const FinAlgebra& a, const ExpPtr& space, std::uint64_t sizeGuard) {
  if (space->target() != a.carrier()) {
    fail(ErrorKind::TypeMismatch, "function space does not take values in the carrier of " + a.name());
  }
  const std::size_t n = space->size();
  const std::size_t width = space->source()->size();
  const auto& sig = a.signature();
  std::vector<std::vector<Elem>> tables;
  tables.reserve(sig.size());
  std::vector<Elem> point;
  std::vector<Elem> result(width);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const unsigned arity = sig.op(op).arity;
    const std::uint64_t entries = power(n, arity, sizeGuard, "lifted operation table");
    std::vector<Elem> table;
    table.reserve(entries);
    std::vector<Elem> tuple(arity, 0);
    point.assign(arity, 0);
    bool more = n > 0 || arity == 0;
    while (more) {
      for (std::size_t x = 0; x < width; ++x) {
        for (unsigned k = 0; k < arity; ++k) point[k] = space->table(tuple[k])[x];
        result[x] = a.apply(op, point);
      }
      table.push_back(space->indexOf(result));
      more = arity > 0 && advance(tuple, n);
    }
    tables.push_back(std::move(table));
  }
  return FinAlgebra(a.name() + "^" + space->source()->name(), space->poset(), sig,
                    std::move(tables));
}

LiftedAlgebra liftPointwise(const FinAlgebra& a, const PosetPtr& x, std::uint64_t sizeGuard) {
  auto space = enumerateMonotone(x, a.carrier(), sizeGuard);
  return LiftedAlgebra{space, liftOver(a, space, sizeGuard)};
}

std::vector<Elem> generatedSubalgebra(const FinAlgebra& a, std::span<const Elem> generators) {
  const std::size_t n = a.size();
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  for (Elem g : generators) {
    if (g >= n) {
      fail(ErrorKind::UnknownElement, "generator " + std::to_string(g) + " is not an element of " +
                                          a.name());
    }
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  const auto& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig.op(op).arity != 0) continue;
    const Elem c = a.apply(op, {});
    if (!in[c]) {
      in[c] = 1;
      members.push_back(c);
    }
  }
  // Naive fixpoint: apply every operation to every tuple of current members
  // until nothing new appears.
  bool grew = true;
  std::vector<Elem> pick;
  std::vector<Elem> args;
  while (grew) {
    grew = false;
    const std::vector<Elem> snapshot = members;
    const std::size_t m = snapshot.size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const unsigned arity = sig.op(op).arity;
      if (arity == 0 || m == 0) continue;
      pick.assign(arity, 0);
      args.resize(arity);
      do {
        for (unsigned k = 0; k < arity; ++k) args[k] = snapshot[pick[k]];
        const Elem r = a.apply(op, args);
        if (!in[r]) {
          in[r] = 1;
          members.push_back(r);
          grew = true;
        }
      } while (advance(pick, m));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

void checkCarriers(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r) {
  if (phi.source() != b.carrier() || phi.target() != r.carrier()) {
    fail(ErrorKind::TypeMismatch, "map carriers do not match " + b.name() + " -> " + r.name());
  }
}

}  // namespace

bool isHomomorphism(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r) {
  checkCarriers(phi, b, r);
  LawConfig cfg;
  cfg.sizeGuard = ~std::uint64_t{0};
  return checkMorphism(b, r, [&](Elem x) { return phi(x); }, MorphismKind::Homomorphism, cfg, true)
      .verdict;
}

bool isRelaxedMorphism(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r) {
  checkCarriers(phi, b, r);
  LawConfig cfg;
  cfg.sizeGuard = ~std::uint64_t{0};
  return checkMorphism(b, r, [&](Elem x) { return phi(x); }, MorphismKind::Relaxed, cfg, true)
      .verdict;
}

std::vector<Endo> endomorphisms(const FinAlgebra& r, std::uint64_t sizeGuard) {
  auto space = enumerateMonotone(r.carrier(), r.carrier(), sizeGuard);
  std::vector<Endo> out;
  for (Elem i = 0; i < space->size(); ++i) {
    MonoMap m = space->map(i);
    if (isHomomorphism(m, r, r)) out.push_back(Endo{std::move(m), true});
  }
  return out;
}

Term Term::var(std::size_t index) {
  Term t;
  t.node_ = index;
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args, std::optional<ExtNN> param) {
  Term t;
  t.node_ = App{std::move(symbol), std::move(args), std::move(param)};
  return t;
}

std::string Term::str() const {
  if (isVar()) return "v" + std::to_string(varIndex());
  const auto& a = std::get<App>(node_);
  std::string out = a.symbol;
  if (a.param) out += "[" + a.param->str() + "]";
  out += "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += a.args[i].str();
  }
  return out + ")";
}

}  // namespace powdom
