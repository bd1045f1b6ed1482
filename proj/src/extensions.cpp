#include "cremona/extensions.hpp"

#include "cremona/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace cremona {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int kind_rank(const GroupDescriptor::Variant& v) {
  return std::visit(overloaded{
                        [](const Free&) { return 0; },
                        [](const FreeAbelian&) { return 1; },
                        [](const Asserted&) { return 2; },
                        [](const Tower&) { return 3; },
                        [](const FiniteTagged&) { return 4; },
                        [](const Cyclic&) { return 5; },
                        [](const DirectSum&) { return 6; },
                    },
                    v);
}

// Smallest prime dividing n (n >= 2) and whether n is a power of it.
std::optional<Integer> prime_power_base(const Integer& n) {
  if (n < 2) return std::nullopt;
  Integer p = 2;
  Integer m = n;
  while (p * p <= m && m % p != 0) ++p;
  if (m % p != 0) p = m;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return p;
}

bool is_power_of(const Integer& n, const Integer& p) {
  if (n < 2) return false;
  Integer m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace

// ---------------------------------------------------------------- factories

GroupDescriptor GroupDescriptor::cyclic(Integer order) {
  if (order < 1) throw Error("cyclic group order must be >= 1, got " + order.str());
  return GroupDescriptor(Cyclic{std::move(order)});
}

GroupDescriptor GroupDescriptor::free(Integer rank) {
  if (rank < 0) throw Error("free group rank must be >= 0");
  if (rank == 0) return trivial();
  if (rank == 1) return free_abelian(1);
  return GroupDescriptor(Free{std::move(rank)});
}

GroupDescriptor GroupDescriptor::free_abelian(Integer rank) {
  if (rank < 0) throw Error("free abelian rank must be >= 0");
  if (rank == 0) return trivial();
  return GroupDescriptor(FreeAbelian{std::move(rank)});
}

GroupDescriptor GroupDescriptor::finite(Integer order, std::optional<Presentation> presentation) {
  if (order < 1) throw Error("finite group order must be >= 1, got " + order.str());
  if (order == 1) return trivial();
  return GroupDescriptor(FiniteTagged{std::move(order), std::move(presentation)});
}

GroupDescriptor GroupDescriptor::asserted(std::string label) {
  label = detail::trim(label);
  if (label.empty()) throw Error("asserted group needs a label");
  if (label.find('"') != std::string::npos) throw Error("asserted group label may not contain '\"'");
  return GroupDescriptor(Asserted{std::move(label)});
}

GroupDescriptor GroupDescriptor::direct_sum(std::vector<GroupDescriptor> summands) {
  std::vector<GroupDescriptor> flat;
  std::vector<Integer> cyclic_orders;
  Integer free_abelian_rank = 0;
  std::vector<GroupDescriptor> pending = std::move(summands);
  while (!pending.empty()) {
    GroupDescriptor g = std::move(pending.back());
    pending.pop_back();
    if (const auto* s = g.get_if<DirectSum>()) {
      pending.insert(pending.end(), s->summands.begin(), s->summands.end());
    } else if (const auto* c = g.get_if<Cyclic>()) {
      if (c->order > 1) cyclic_orders.push_back(c->order);
    } else if (const auto* fa = g.get_if<FreeAbelian>()) {
      free_abelian_rank += fa->rank;
    } else {
      flat.push_back(std::move(g));
    }
  }
  if (free_abelian_rank > 0) flat.push_back(free_abelian(free_abelian_rank));
  if (!cyclic_orders.empty()) {
    AbelianInvariants torsion_part;
    for (const auto& o : cyclic_orders)
      torsion_part = AbelianInvariants::direct_sum(torsion_part, AbelianInvariants{0, {o}});
    for (const auto& t : torsion_part.torsion) flat.push_back(cyclic(t));
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  return GroupDescriptor(DirectSum{std::move(flat)});
}

GroupDescriptor GroupDescriptor::tower(GroupDescriptor base, std::vector<Integer> kernels) {
  for (const auto& k : kernels)
    if (k < 2) throw Error("tower kernel orders must be >= 2, got " + k.str());
  if (kernels.empty()) return base;
  if (const auto* t = base.get_if<Tower>()) {
    std::vector<Integer> all = t->kernels;
    all.insert(all.end(), kernels.begin(), kernels.end());
    return GroupDescriptor(Tower{t->base, std::move(all)});
  }
  return GroupDescriptor(Tower{std::make_shared<const GroupDescriptor>(std::move(base)), std::move(kernels)});
}

// ---------------------------------------------------------------- queries

bool GroupDescriptor::is_trivial() const {
  const auto* c = get_if<Cyclic>();
  return c && c->order == 1;
}

std::optional<Integer> GroupDescriptor::order() const {
  return std::visit(overloaded{
                        [](const Cyclic& c) -> std::optional<Integer> { return c.order; },
                        [](const FiniteTagged& f) -> std::optional<Integer> { return f.order; },
                        [](const Free&) -> std::optional<Integer> { return std::nullopt; },
                        [](const FreeAbelian&) -> std::optional<Integer> { return std::nullopt; },
                        [](const Asserted&) -> std::optional<Integer> { return std::nullopt; },
                        [](const DirectSum& s) -> std::optional<Integer> {
                          Integer prod = 1;
                          for (const auto& g : s.summands) {
                            const auto o = g.order();
                            if (!o) return std::nullopt;
                            prod *= *o;
                          }
                          return prod;
                        },
                        [](const Tower& t) -> std::optional<Integer> {
                          auto o = t.base->order();
                          if (!o) return std::nullopt;
                          for (const auto& k : t.kernels) *o *= k;
                          return o;
                        },
                    },
                    value_);
}

bool GroupDescriptor::certainly_cyclic() const {
  if (get_if<Cyclic>()) return true;
  const auto* fa = get_if<FreeAbelian>();
  return fa && fa->rank == 1;
}

bool GroupDescriptor::certainly_noncyclic() const {
  return std::visit(overloaded{
                        [](const Free&) { return true; },
                        [](const FreeAbelian& f) { return f.rank >= 2; },
                        [](const DirectSum& s) {
                          // Canonical sums of recognized summands have >= 2 invariant factors.
                          return std::all_of(s.summands.begin(), s.summands.end(), [](const GroupDescriptor& g) {
                            return g.get_if<Cyclic>() || g.get_if<FreeAbelian>() || g.get_if<Free>();
                          });
                        },
                        // A quotient of a cyclic group is cyclic.
                        [](const Tower& t) { return t.base->certainly_noncyclic(); },
                        [](const auto&) { return false; },
                    },
                    value_);
}

std::string GroupDescriptor::str() const {
  return std::visit(overloaded{
                        [](const Cyclic& c) { return "Z/" + c.order.str(); },
                        [](const Free& f) { return "F" + f.rank.str(); },
                        [](const FreeAbelian& f) { return f.rank == 1 ? std::string("Z") : "Z^" + f.rank.str(); },
                        [](const FiniteTagged& f) {
                          std::string out = "Finite(" + f.order.str();
                          if (f.presentation) out += "; " + f.presentation->str();
                          return out + ")";
                        },
                        [](const Asserted& a) { return "Asserted(\"" + a.label + "\")"; },
                        [](const DirectSum& s) {
                          std::string out;
                          for (std::size_t i = 0; i < s.summands.size(); ++i)
                            out += (i ? " (+) " : "") + s.summands[i].str();
                          return out;
                        },
                        [](const Tower& t) {
                          std::string out = "Tower(" + t.base->str() + ";";
                          for (std::size_t i = 0; i < t.kernels.size(); ++i) out += (i ? "," : " ") + t.kernels[i].str();
                          return out + ")";
                        },
                    },
                    value_);
}

bool GroupDescriptor::operator==(const GroupDescriptor& rhs) const { return str() == rhs.str(); }

bool GroupDescriptor::operator<(const GroupDescriptor& rhs) const {
  const int a = kind_rank(value_), b = kind_rank(rhs.value_);
  if (a != b) return a < b;
  if (const auto* c = get_if<Cyclic>()) return c->order < rhs.get_if<Cyclic>()->order;
  if (const auto* f = get_if<Free>()) return f->rank < rhs.get_if<Free>()->rank;
  if (const auto* f = get_if<FreeAbelian>()) return f->rank < rhs.get_if<FreeAbelian>()->rank;
  return str() < rhs.str();
}

// ---------------------------------------------------------------- parsing

namespace {

GroupDescriptor parse_sum(detail::Cursor& in);

Integer expect_int(detail::Cursor& in, const char* what) {
  const auto digits = in.digits();
  if (digits.empty() || digits == "-")
    throw Error(std::string("expected ") + what + " at '" + in.rest() + "' in group '" + in.text() + "'");
  return parse_integer(digits);
}

void expect(detail::Cursor& in, char c) {
  if (!in.accept(c))
    throw Error(std::string("expected '") + c + "' at '" + in.rest() + "' in group '" + in.text() + "'");
}

GroupDescriptor parse_atom(detail::Cursor& in) {
  if (in.accept("Tower(")) {
    GroupDescriptor base = parse_sum(in);
    expect(in, ';');
    std::vector<Integer> kernels{expect_int(in, "kernel order")};
    while (in.accept(',')) kernels.push_back(expect_int(in, "kernel order"));
    expect(in, ')');
    return GroupDescriptor::tower(std::move(base), std::move(kernels));
  }
  if (in.accept("Finite(")) {
    Integer order = expect_int(in, "group order");
    std::optional<Presentation> pres;
    if (in.accept(';')) {
      in.skip_ws();
      const auto start = in.position();
      const auto close = in.text().find('>', start);
      if (in.peek() != '<' || close == std::string::npos) throw Error("expected a presentation in '" + in.text() + "'");
      pres = Presentation::parse(in.text().substr(start, close - start + 1));
      in.seek(close + 1);
    }
    expect(in, ')');
    return GroupDescriptor::finite(std::move(order), std::move(pres));
  }
  if (in.accept("Asserted(\"")) {
    const auto start = in.position();
    const auto quote = in.text().find('"', start);
    if (quote == std::string::npos) throw Error("unterminated label in '" + in.text() + "'");
    std::string label = in.text().substr(start, quote - start);
    in.seek(quote + 1);
    expect(in, ')');
    return GroupDescriptor::asserted(std::move(label));
  }
  if (in.accept("Z/")) return GroupDescriptor::cyclic(expect_int(in, "cyclic order"));
  if (in.accept("Z^")) return GroupDescriptor::free_abelian(expect_int(in, "rank"));
  if (in.accept('Z')) return GroupDescriptor::free_abelian(1);
  if (in.accept('F')) return GroupDescriptor::free(expect_int(in, "rank"));
  throw Error("unrecognized group term at '" + in.rest() + "' in '" + in.text() + "'");
}

GroupDescriptor parse_sum(detail::Cursor& in) {
  std::vector<GroupDescriptor> parts{parse_atom(in)};
  while (in.accept("(+)")) parts.push_back(parse_atom(in));
  return parts.size() == 1 ? parts.front() : GroupDescriptor::direct_sum(std::move(parts));
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  detail::Cursor in(text);
  GroupDescriptor g = parse_sum(in);
  if (!in.done()) throw Error("trailing text '" + in.rest() + "' in group '" + text + "'");
  return g;
}

// ---------------------------------------------------------------- presentations

namespace {

void append_standard(const GroupDescriptor& g, std::vector<std::string>& gens, std::vector<Word>& rels,
                     std::vector<std::vector<std::string>>& blocks, bool& ok) {
  const auto fresh = [&gens]() { return "x" + std::to_string(gens.size() + 1); };
  std::vector<std::string> block;
  if (const auto* c = g.get_if<Cyclic>()) {
    block.push_back(fresh());
    gens.push_back(block.back());
    rels.push_back(Word::power(block.back(), static_cast<long long>(c->order)));
  } else if (const auto* f = g.get_if<Free>()) {
    for (Integer i = 0; i < f->rank; ++i) gens.push_back(fresh()), block.push_back(gens.back());
  } else if (const auto* fa = g.get_if<FreeAbelian>()) {
    for (Integer i = 0; i < fa->rank; ++i) gens.push_back(fresh()), block.push_back(gens.back());
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        rels.push_back(commutator(Word::generator(block[i]), Word::generator(block[j])));
  } else if (const auto* ft = g.get_if<FiniteTagged>(); ft && ft->presentation) {
    const auto& old = ft->presentation->generators();
    std::map<std::string, std::string> rename;
    for (const auto& name : old) {
      block.push_back(fresh());
      gens.push_back(block.back());
      rename[name] = block.back();
    }
    for (const auto& r : ft->presentation->relators()) {
      std::vector<Letter> letters;
      for (const auto& l : r.letters()) letters.push_back({rename.at(l.generator), l.inverse});
      rels.emplace_back(std::move(letters));
    }
  } else {
    ok = false;
    return;
  }
  blocks.push_back(std::move(block));
}

}  // namespace

std::optional<Presentation> standard_presentation(const GroupDescriptor& g) {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  std::vector<std::vector<std::string>> blocks;
  bool ok = true;
  if (const auto* s = g.get_if<DirectSum>()) {
    for (const auto& part : s->summands) append_standard(part, gens, rels, blocks, ok);
  } else {
    append_standard(g, gens, rels, blocks, ok);
  }
  if (!ok) return std::nullopt;
  // Generators of distinct summands commute.
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      for (const auto& x : blocks[a])
        for (const auto& y : blocks[b]) rels.push_back(commutator(Word::generator(x), Word::generator(y)));
  return Presentation(std::move(gens), std::move(rels));
}

std::optional<AbelianInvariants> descriptor_abelianization(const GroupDescriptor& g) {
  const auto p = standard_presentation(g);
  if (!p) return std::nullopt;
  return abelianization(*p);
}

// ---------------------------------------------------------------- properties

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unknown";
  }
}

Tri tri_from_string(const std::string& s) {
  if (s == "true" || s == "yes" || s == "T") return Tri::yes;
  if (s == "false" || s == "no" || s == "F") return Tri::no;
  if (s == "unknown" || s == "?") return Tri::unknown;
  throw Error("expected true/false/unknown, got '" + s + "'");
}

namespace {

using FlagMember = Tri PropertyFlags::*;

const std::array<std::pair<const char*, FlagMember>, 11> kFlags{{
    {"finite", &PropertyFlags::finite},
    {"abelian", &PropertyFlags::abelian},
    {"cyclic", &PropertyFlags::cyclic},
    {"nonabelian", &PropertyFlags::nonabelian},
    {"solvable", &PropertyFlags::solvable},
    {"supersolvable", &PropertyFlags::supersolvable},
    {"polycyclic", &PropertyFlags::polycyclic},
    {"nilpotent", &PropertyFlags::nilpotent},
    {"p_group", &PropertyFlags::p_group},
    {"virtually_nilpotent", &PropertyFlags::virtually_nilpotent},
    {"virtually_solvable", &PropertyFlags::virtually_solvable},
}};

FlagMember member_for(const std::string& name) {
  for (const auto& [n, m] : kFlags)
    if (name == n) return m;
  throw Error("unknown group property '" + name + "'");
}

// Records `value` for `flag`; returns true if something changed.
bool force(PropertyFlags& p, FlagMember flag, Tri value, const char* why) {
  Tri& slot = p.*flag;
  if (slot == value) return false;
  if (slot != Tri::unknown) throw Error(std::string("inconsistent group properties (") + why + ")");
  slot = value;
  return true;
}

}  // namespace

const std::vector<std::string>& PropertyFlags::names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& entry : kFlags) v.emplace_back(entry.first);
    return v;
  }();
  return out;
}

void PropertyFlags::set(const std::string& name, Tri value) { this->*member_for(name) = value; }

Tri PropertyFlags::get(const std::string& name) const { return this->*member_for(name); }

PropertyFlags PropertyFlags::closed() const {
  PropertyFlags p = *this;
  if (p.p_group == Tri::yes) {
    if (!p.p_group_prime) throw Error("p_group=true needs a prime");
    if (prime_power_base(*p.p_group_prime) != p.p_group_prime)
      throw Error("p_group prime " + p.p_group_prime->str() + " is not prime");
  } else {
    p.p_group_prime.reset();
  }
  if (p.nilpotency_class && p.nilpotency_class->lo > p.nilpotency_class->hi)
    throw Error("empty nilpotency class interval");
  using P = PropertyFlags;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto yes = [](Tri t) { return t == Tri::yes; };
    const auto no = [](Tri t) { return t == Tri::no; };
    if (yes(p.cyclic)) changed |= force(p, &P::abelian, Tri::yes, "cyclic implies abelian");
    if (yes(p.abelian)) {
      changed |= force(p, &P::nonabelian, Tri::no, "abelian");
      changed |= force(p, &P::solvable, Tri::yes, "abelian implies solvable");
      changed |= force(p, &P::nilpotent, Tri::yes, "abelian implies nilpotent");
    }
    if (no(p.nonabelian)) changed |= force(p, &P::abelian, Tri::yes, "not nonabelian");
    if (yes(p.nonabelian)) changed |= force(p, &P::abelian, Tri::no, "nonabelian");
    if (no(p.abelian)) {
      changed |= force(p, &P::nonabelian, Tri::yes, "not abelian");
      changed |= force(p, &P::cyclic, Tri::no, "not abelian");
    }
    if (yes(p.nilpotent)) {
      changed |= force(p, &P::solvable, Tri::yes, "nilpotent implies solvable");
      changed |= force(p, &P::virtually_nilpotent, Tri::yes, "nilpotent");
    }
    if (yes(p.supersolvable)) changed |= force(p, &P::polycyclic, Tri::yes, "supersolvable implies polycyclic");
    if (yes(p.polycyclic)) changed |= force(p, &P::solvable, Tri::yes, "polycyclic implies solvable");
    if (yes(p.solvable)) changed |= force(p, &P::virtually_solvable, Tri::yes, "solvable");
    if (yes(p.virtually_nilpotent)) changed |= force(p, &P::virtually_solvable, Tri::yes, "virtually nilpotent");
    if (yes(p.finite)) {
      changed |= force(p, &P::virtually_nilpotent, Tri::yes, "finite");
      if (yes(p.solvable)) changed |= force(p, &P::polycyclic, Tri::yes, "finite solvable");
      if (yes(p.p_group)) changed |= force(p, &P::nilpotent, Tri::yes, "finite p-group");
    }
  }
  return p;
}

PropertyFlags PropertyFlags::merged(const PropertyFlags& other) const {
  PropertyFlags out = closed();
  const PropertyFlags rhs = other.closed();
  for (const auto& name : names()) {
    const Tri v = rhs.get(name);
    if (v == Tri::unknown) continue;
    force(out, member_for(name), v, name.c_str());
  }
  if (rhs.p_group == Tri::yes) {
    if (out.p_group_prime && out.p_group_prime != rhs.p_group_prime) throw Error("inconsistent p-group primes");
    out.p_group_prime = rhs.p_group_prime;
  }
  if (rhs.nilpotency_class) {
    if (!out.nilpotency_class) {
      out.nilpotency_class = rhs.nilpotency_class;
    } else {
      ClassInterval both{std::max(out.nilpotency_class->lo, rhs.nilpotency_class->lo),
                         std::min(out.nilpotency_class->hi, rhs.nilpotency_class->hi)};
      if (both.lo > both.hi) throw Error("inconsistent nilpotency class intervals");
      out.nilpotency_class = both;
    }
  }
  return out.closed();
}

PropertyFlags facts_from_descriptor(const GroupDescriptor& g) {
  PropertyFlags p;
  if (g.order()) p.finite = Tri::yes;

  const auto abelian_fg = [&p](bool finite, bool cyclic) {
    p.finite = finite ? Tri::yes : Tri::no;
    p.abelian = Tri::yes;
    p.cyclic = cyclic ? Tri::yes : Tri::no;
    p.supersolvable = Tri::yes;
    p.polycyclic = Tri::yes;
  };
  const auto recognized_abelian = [](const GroupDescriptor& x) {
    return x.get_if<Cyclic>() || x.get_if<FreeAbelian>();
  };

  if (const auto* c = g.get_if<Cyclic>()) {
    abelian_fg(true, true);
    p.nilpotency_class = c->order == 1 ? ClassInterval{0, 0} : ClassInterval{1, 1};
    if (c->order > 1) {
      const auto base = prime_power_base(c->order);
      p.p_group = base ? Tri::yes : Tri::no;
      p.p_group_prime = base;
    }
  } else if (const auto* fa = g.get_if<FreeAbelian>()) {
    abelian_fg(false, fa->rank == 1);
    p.nilpotency_class = ClassInterval{1, 1};
    p.p_group = Tri::no;
  } else if (g.get_if<Free>()) {
    for (const auto& name : PropertyFlags::names()) p.set(name, Tri::no);
    p.nonabelian = Tri::yes;
  } else if (const auto* s = g.get_if<DirectSum>()) {
    if (std::all_of(s->summands.begin(), s->summands.end(), recognized_abelian)) {
      const bool finite = g.order().has_value();
      abelian_fg(finite, false);
      p.nilpotency_class = ClassInterval{1, 1};
      if (finite) {
        std::optional<Integer> prime;
        bool same_prime = true;
        for (const auto& part : s->summands) {
          const auto base = prime_power_base(part.get_if<Cyclic>()->order);
          if (!base || (prime && *prime != *base)) same_prime = false;
          if (base && !prime) prime = base;
        }
        p.p_group = same_prime ? Tri::yes : Tri::no;
        if (same_prime) p.p_group_prime = prime;
      } else {
        p.p_group = Tri::no;
      }
    } else if (std::any_of(s->summands.begin(), s->summands.end(),
                           [](const GroupDescriptor& x) { return x.get_if<Free>() != nullptr; })) {
      // Contains a non-abelian free subgroup.
      for (const auto& name : PropertyFlags::names()) p.set(name, Tri::no);
      p.nonabelian = Tri::yes;
    }
  }
  return p.closed();
}

PropertyFlags propagate_properties(const PropertyFlags& input, const Integer& kernel_order, bool cyclic_rule_applied) {
  const PropertyFlags p = input.closed();
  PropertyFlags out;
  const auto keep_true = [&](FlagMember m) {
    if (p.*m == Tri::yes) out.*m = Tri::yes;
  };
  keep_true(&PropertyFlags::finite);
  keep_true(&PropertyFlags::nonabelian);
  keep_true(&PropertyFlags::solvable);
  keep_true(&PropertyFlags::supersolvable);
  keep_true(&PropertyFlags::polycyclic);
  keep_true(&PropertyFlags::nilpotent);
  keep_true(&PropertyFlags::virtually_nilpotent);
  keep_true(&PropertyFlags::virtually_solvable);
  if (p.p_group == Tri::yes && is_power_of(kernel_order, *p.p_group_prime)) {
    out.p_group = Tri::yes;
    out.p_group_prime = p.p_group_prime;
  }
  if (p.nilpotency_class) out.nilpotency_class = ClassInterval{p.nilpotency_class->lo, p.nilpotency_class->hi + 1};
  if (cyclic_rule_applied && p.cyclic == Tri::yes) out.cyclic = Tri::yes;
  return out.closed();
}

// ---------------------------------------------------------------- extension

std::string to_string(Family f) {
  switch (f) {
    case Family::smooth: return "smooth";
    case Family::pencil: return "pencil";
    case Family::generic_lines: return "generic-lines";
    default: return "custom";
  }
}

Family family_from_string(const std::string& s) {
  if (s == "smooth") return Family::smooth;
  if (s == "pencil") return Family::pencil;
  if (s == "generic-lines") return Family::generic_lines;
  if (s == "custom") return Family::custom;
  throw Error("unknown family tag '" + s + "'");
}

std::string to_string(ExtensionRule r) {
  switch (r) {
    case ExtensionRule::irreducible_cyclic: return "irreducible-cyclic";
    case ExtensionRule::free_group: return "free-group";
    case ExtensionRule::generic_lines: return "generic-lines";
    case ExtensionRule::coprime_finite: return "coprime-finite";
    default: return "unresolved-tower";
  }
}

ExtensionResult central_extend_traced(const GroupDescriptor& g, const Integer& kernel_order,
                                      const ExtensionContext& context) {
  if (kernel_order < 2) throw Error("central extension kernel order must be >= 2, got " + kernel_order.str());
  const auto kernel = GroupDescriptor::cyclic(kernel_order);
  if (const auto* c = g.get_if<Cyclic>(); c && context.irreducible)
    return {GroupDescriptor::cyclic(c->order * kernel_order), ExtensionRule::irreducible_cyclic};
  const auto* fa = g.get_if<FreeAbelian>();
  if (g.get_if<Free>() || (fa && fa->rank == 1))
    return {GroupDescriptor::direct_sum({g, kernel}), ExtensionRule::free_group};
  if (fa && context.family == Family::generic_lines)
    return {GroupDescriptor::direct_sum({g, kernel}), ExtensionRule::generic_lines};
  if (const auto o = g.order(); o && gcd(*o, kernel_order) == 1)
    return {GroupDescriptor::direct_sum({g, kernel}), ExtensionRule::coprime_finite};
  return {GroupDescriptor::tower(g, {kernel_order}), ExtensionRule::unresolved_tower};
}

GroupDescriptor central_extend(const GroupDescriptor& g, const Integer& kernel_order, const ExtensionContext& context) {
  return central_extend_traced(g, kernel_order, context).group;
}

std::string to_string(SplitKind k) {
  switch (k) {
    case SplitKind::non_split: return "non-split";
    case SplitKind::splits_as_direct_sum: return "splits";
    default: return "unknown";
  }
}

std::string to_string(SplitRule r) {
  switch (r) {
    case SplitRule::summand_count_not_coprime: return "summand-count-not-coprime";
    case SplitRule::coprime_finite: return "coprime-finite";
    default: return "no-rule";
  }
}

SplitVerdict split_test(const AbelianInvariants& h1, const Integer& components, const Integer& kernel_order) {
  h1.validate();
  if (Integer(h1.summand_count()) == components) {
    // Free summands have order 0 and gcd(0, N) = N.
    const bool all_shared = std::all_of(h1.torsion.begin(), h1.torsion.end(),
                                        [&](const Integer& t) { return gcd(t, kernel_order) != 1; });
    if (all_shared && kernel_order >= 2) return {SplitKind::non_split, SplitRule::summand_count_not_coprime};
  }
  if (h1.finite() && gcd(h1.order(), kernel_order) == 1)
    return {SplitKind::splits_as_direct_sum, SplitRule::coprime_finite};
  return {SplitKind::unknown, SplitRule::no_rule};
}

}  // namespace cremona
