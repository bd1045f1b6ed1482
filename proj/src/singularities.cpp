#include "cremona/singularities.hpp"

#include "cremona/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <optional>

namespace cremona {

namespace {

bool entry_less(const SingularityType::Entry& a, const SingularityType::Entry& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* x = std::get_if<Integer>(&a)) return *x < std::get<Integer>(b);
  const auto& na = std::get<NestedEntry>(a);
  const auto& nb = std::get<NestedEntry>(b);
  if (na.head != nb.head) return na.head < nb.head;
  return std::lexicographical_compare(na.clusters.begin(), na.clusters.end(), nb.clusters.begin(), nb.clusters.end());
}

std::string render(const std::vector<SingularityType::Entry>& entries, bool elide_ones) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < entries.size()) {
    if (const auto* nested = std::get_if<NestedEntry>(&entries[i])) {
      std::string s = nested->head.str() + ",(";
      for (std::size_t c = 0; c < nested->clusters.size(); ++c) {
        const auto& cl = nested->clusters[c];
        s += (c ? ",|" : "|") + (elide_ones ? cl.display() : cl.str()) + "|";
      }
      parts.push_back(s + ")");
      ++i;
      continue;
    }
    const Integer& v = std::get<Integer>(entries[i]);
    std::size_t j = i;
    while (j < entries.size() && std::holds_alternative<Integer>(entries[j]) && std::get<Integer>(entries[j]) == v) ++j;
    if (!(elide_ones && v == 1)) parts.push_back(j - i == 1 ? v.str() : v.str() + "_" + std::to_string(j - i));
    i = j;
  }
  std::string out = "[";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + parts[k];
  return out + "]";
}

SingularityType parse_type(detail::Cursor& in);

Integer read_positive(detail::Cursor& in, const char* what) {
  const auto digits = in.digits();
  if (digits.empty() || digits[0] == '-')
    throw Error(std::string("expected ") + what + " at '" + in.rest() + "' in singularity '" + in.text() + "'");
  Integer v = parse_integer(digits);
  if (v < 1) throw Error(std::string(what) + " must be >= 1 in singularity '" + in.text() + "'");
  return v;
}

void expect(detail::Cursor& in, char c) {
  if (!in.accept(c))
    throw Error(std::string("expected '") + c + "' at '" + in.rest() + "' in singularity '" + in.text() + "'");
}

SingularityType parse_type(detail::Cursor& in) {
  expect(in, '[');
  std::vector<SingularityType> pieces;  // concatenated at the end
  std::vector<Integer> flat;
  std::optional<SingularityType> nested;
  if (in.accept(']')) return SingularityType::flat({});
  do {
    if (nested) throw Error("a nested entry must end its singularity type: '" + in.text() + "'");
    const Integer value = read_positive(in, "multiplicity");
    if (in.accept('_')) {
      const Integer count = read_positive(in, "run length");
      check_expansion(count, "run length");
      for (Integer c = 0; c < count; ++c) flat.push_back(value);
      continue;
    }
    const auto mark = in.position();
    if (in.accept(',') && in.peek() == '(') {
      expect(in, '(');
      std::vector<SingularityType> clusters;
      do {
        expect(in, '|');
        clusters.push_back(parse_type(in));
        expect(in, '|');
      } while (in.accept(','));
      expect(in, ')');
      nested = SingularityType::with_head(value, std::move(clusters));
      continue;
    }
    in.seek(mark);
    flat.push_back(value);
  } while (in.accept(','));
  expect(in, ']');
  if (!nested) return SingularityType::flat(std::move(flat));
  if (!flat.empty()) throw Error("entries before a nested head are not supported: '" + in.text() + "'");
  return *nested;
}

}  // namespace

SingularityType SingularityType::flat(std::vector<Integer> multiplicities) {
  SingularityType t;
  for (auto& m : multiplicities) {
    if (m < 1) throw Error("multiplicity must be >= 1, got " + m.str());
    t.entries_.emplace_back(std::move(m));
  }
  return t;
}

void check_expansion(const Integer& count, const char* what) {
  if (count > kMaxExpandedLength)
    throw Error(std::string(what) + " " + count.str() + " exceeds the supported maximum " +
                std::to_string(kMaxExpandedLength));
}

SingularityType SingularityType::run(const Integer& value, const Integer& count) {
  if (count < 0) throw Error("run length must be >= 0");
  check_expansion(count, "run length");
  std::vector<Integer> ms;
  for (Integer i = 0; i < count; ++i) ms.push_back(value);
  return flat(std::move(ms));
}

SingularityType SingularityType::with_head(const Integer& head, std::vector<SingularityType> clusters) {
  if (head < 1) throw Error("head multiplicity must be >= 1");
  if (clusters.empty()) throw Error("a blown-down point needs at least one cluster");
  SingularityType t;
  t.entries_.emplace_back(head);
  if (clusters.size() == 1 && clusters.front().is_flat()) {
    for (const auto& e : clusters.front().entries_) t.entries_.push_back(e);
    return t;
  }
  std::sort(clusters.begin(), clusters.end());
  t.entries_.front() = NestedEntry{head, std::move(clusters)};
  return t;
}

SingularityType SingularityType::parse(const std::string& text) {
  detail::Cursor in(text);
  auto t = parse_type(in);
  if (!in.done()) throw Error("trailing text '" + in.rest() + "' in singularity '" + text + "'");
  return t;
}

bool SingularityType::is_flat() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return std::holds_alternative<Integer>(e); });
}

std::vector<Integer> SingularityType::multiplicities() const {
  if (!is_flat()) throw Error("singularity " + str() + " is nested");
  std::vector<Integer> out;
  for (const auto& e : entries_) out.push_back(std::get<Integer>(e));
  return out;
}

std::string SingularityType::str() const { return render(entries_, false); }

std::string SingularityType::display() const {
  const bool all_ones = std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) {
    const auto* v = std::get_if<Integer>(&e);
    return v && *v == 1;
  });
  return render(entries_, !all_ones);
}

bool SingularityType::operator==(const SingularityType& rhs) const { return str() == rhs.str(); }

bool SingularityType::operator<(const SingularityType& rhs) const {
  return std::lexicographical_compare(entries_.begin(), entries_.end(), rhs.entries_.begin(), rhs.entries_.end(),
                                      entry_less);
}

SingularityType tacnode_type(const Integer& d, const Integer& order) {
  if (d < 2) throw Error("a tacnode needs at least two branches, got d = " + d.str());
  if (order < 0) throw Error("tacnode order must be >= 0");
  return SingularityType::run(d, order + 1);
}

SingularityType blowdown_type(const Integer& head, std::vector<SingularityType> clusters) {
  if (head < 2) throw Error("blown-down head multiplicity must be >= 2, got " + head.str());
  return SingularityType::with_head(head, std::move(clusters));
}

Integer drop(const SingularityType& t) {
  Integer total = 0;
  for (const auto& e : t.entries()) {
    if (const auto* v = std::get_if<Integer>(&e)) {
      total += *v * *v;
    } else {
      const auto& n = std::get<NestedEntry>(e);
      total += n.head * n.head;
      for (const auto& c : n.clusters) total += drop(c);
    }
  }
  return total;
}

// ---------------------------------------------------------------- multiset

SingularityMultiset::SingularityMultiset(std::initializer_list<SingularityType> items)
    : SingularityMultiset(std::vector<SingularityType>(items)) {}

SingularityMultiset::SingularityMultiset(std::vector<SingularityType> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

void SingularityMultiset::insert(SingularityType t) {
  items_.insert(std::upper_bound(items_.begin(), items_.end(), t), std::move(t));
}

SingularityMultiset SingularityMultiset::united(const SingularityMultiset& other) const {
  std::vector<SingularityType> all = items_;
  all.insert(all.end(), other.items_.begin(), other.items_.end());
  return SingularityMultiset(std::move(all));
}

std::size_t SingularityMultiset::count(const SingularityType& t) const {
  return static_cast<std::size_t>(std::count(items_.begin(), items_.end(), t));
}

Integer SingularityMultiset::total_drop() const {
  Integer total = 0;
  for (const auto& t : items_) total += drop(t);
  return total;
}

std::string SingularityMultiset::display() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) out += (i ? ", " : "") + items_[i].display();
  return out + "}";
}

std::string SingularityMultiset::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) out += (i ? ", " : "") + items_[i].str();
  return out + "}";
}

}  // namespace cremona
