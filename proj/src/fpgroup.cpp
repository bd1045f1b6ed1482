#include "cremona/fpgroup.hpp"

#include "cremona/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace cremona {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error("expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error("expected an integer, got '" + text + "'");
  Integer value(text[0] == '+' ? text.substr(1) : text);
  return value;
}

// ---------------------------------------------------------------- Word

Word Word::power(const std::string& generator, long long exponent) {
  if (!detail::is_identifier(generator)) throw Error("invalid generator name '" + generator + "'");
  std::vector<Letter> letters;
  const bool inverse = exponent < 0;
  for (long long i = 0; i < (inverse ? -exponent : exponent); ++i) letters.push_back({generator, inverse});
  return Word(std::move(letters));
}

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    long long exponent = 1;
    if (caret != std::string::npos) {
      const std::string exp_text = token.substr(caret + 1);
      try {
        exponent = static_cast<long long>(parse_integer(exp_text));
      } catch (const Error&) {
        throw Error("bad exponent in word term '" + token + "'");
      }
    }
    if (!detail::is_identifier(name)) throw Error("bad word term '" + token + "'");
    const auto syllable = power(name, exponent);
    letters.insert(letters.end(), syllable.letters().begin(), syllable.letters().end());
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word Word::pow(long long exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return free_reduce(Word(std::move(out)));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return free_reduce(Word(std::move(out)));
}

Word Word::substitute(const std::string& generator, const Word& image) const {
  const Word image_inv = image.inverse();
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.generator != generator) {
      out.push_back(l);
      continue;
    }
    const auto& src = l.inverse ? image_inv.letters_ : image.letters_;
    out.insert(out.end(), src.begin(), src.end());
  }
  return free_reduce(Word(std::move(out)));
}

long long Word::exponent_sum(const std::string& generator) const {
  long long sum = 0;
  for (const auto& l : letters_)
    if (l.generator == generator) sum += l.inverse ? -1 : 1;
  return sum;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    out += letters_[i].generator;
    const long long exponent = letters_[i].inverse ? -run : run;
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i = j;
  }
  return out;
}

bool Word::operator==(const Word& rhs) const {
  return free_reduce(*this).letters_ == free_reduce(rhs).letters_;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().inverse != l.inverse)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!detail::is_identifier(g)) throw Error("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error("generator '" + g + "' declared twice");
  }
  relators_.reserve(relators.size());
  for (const auto& r : relators) {
    for (const auto& l : r.letters())
      if (!seen.count(l.generator))
        throw Error("relator '" + r.str() + "' uses undeclared generator '" + l.generator + "'");
    relators_.push_back(free_reduce(r));
  }
}

bool Presentation::has_generator(const std::string& name) const {
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

Presentation Presentation::without_empty_relators() const {
  std::vector<Word> kept;
  for (const auto& r : relators_)
    if (!r.empty()) kept.push_back(r);
  return Presentation(generators_, std::move(kept));
}

std::string Presentation::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? ", " : "") + generators_[i];
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) out += (i ? ", " : " ") + relators_[i].str();
  out += ">";
  return out;
}

Presentation Presentation::parse(const std::string& text) {
  const std::string t = detail::trim(text);
  if (t.size() < 2 || t.front() != '<' || t.back() != '>')
    throw Error("presentation must be written <generators | relators>: '" + text + "'");
  const std::string body = t.substr(1, t.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string::npos) throw Error("presentation is missing '|': '" + text + "'");
  std::vector<std::string> gens;
  for (const auto& g : detail::split(body.substr(0, bar), ',')) {
    const auto name = detail::trim(g);
    if (!name.empty()) gens.push_back(name);
  }
  std::vector<Word> rels;
  for (const auto& r : detail::split(body.substr(bar + 1), ',')) {
    const auto word = detail::trim(r);
    if (!word.empty()) rels.push_back(Word::parse(word));
  }
  return Presentation(std::move(gens), std::move(rels));
}

// ---------------------------------------------------------------- IntMatrix / SNF

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      const Integer a = abs(m(r, c));
      if (!found || a < best) {
        best = a;
        pr = r;
        pc = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<Integer> smith_normal_form(IntMatrix m) {
  std::vector<Integer> factors;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(m, r, t, m(r, t) / m(t, t));
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(m, c, t, m(t, c) / m(t, t));
        if (m(t, c) != 0) dirty = true;
      }
      if (!dirty) {
        // Pivot is isolated; it must also divide the rest of the block.
        for (std::size_t r = t + 1; r < m.rows() && !dirty; ++r)
          for (std::size_t c = t + 1; c < m.cols(); ++c)
            if (m(r, c) % m(t, t) != 0) {
              row_axpy(m, t, r, Integer(-1));
              dirty = true;
              break;
            }
        if (!dirty) break;
      }
      // A remainder smaller than the pivot appeared; move it into place.
      find_pivot(m, t, pr, pc);
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
    }
    factors.push_back(abs(m(t, t)));
  }
  return factors;
}

// ---------------------------------------------------------------- AbelianInvariants

void AbelianInvariants::validate() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw Error("torsion coefficient " + torsion[i].str() + " is below 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw Error("torsion coefficients do not form a divisibility chain");
  }
}

Integer AbelianInvariants::order() const {
  Integer p = 1;
  for (const auto& t : torsion) p *= t;
  return p;
}

std::string AbelianInvariants::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " (+) " : "") + parts[i];
  return out;
}

AbelianInvariants AbelianInvariants::direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
  const std::size_t n = a.torsion.size() + b.torsion.size();
  IntMatrix diag(n, n);
  std::size_t i = 0;
  for (const auto& t : a.torsion) diag(i, i) = t, ++i;
  for (const auto& t : b.torsion) diag(i, i) = t, ++i;
  AbelianInvariants out;
  out.free_rank = a.free_rank + b.free_rank;
  for (auto& f : smith_normal_form(std::move(diag)))
    if (f > 1) out.torsion.push_back(f);
  return out;
}

AbelianInvariants abelian_invariants_of_relations(const IntMatrix& relations) {
  const auto factors = smith_normal_form(relations);
  AbelianInvariants out;
  out.free_rank = relations.cols() - factors.size();
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t c = 0; c < p.generators().size(); ++c)
      m(r, c) = p.relators()[r].exponent_sum(p.generators()[c]);
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return abelian_invariants_of_relations(exponent_matrix(p));
}

// ---------------------------------------------------------------- local groups

std::string branch_generator(int i) { return "alpha" + std::to_string(i); }

Presentation local_group(int k) {
  if (k < 2) throw Error("local_group needs k >= 2 (k = 1 is local_group_degenerate)");
  std::vector<std::string> gens{"alpha"};
  std::vector<Word> rels;
  const Word alpha = Word::generator("alpha");
  for (int i = 2; i <= k; ++i) {
    gens.push_back(branch_generator(i));
    rels.push_back(commutator(alpha, Word::generator(branch_generator(i))));
  }
  return Presentation(std::move(gens), std::move(rels));
}

Presentation local_group_degenerate() { return Presentation({"alpha"}, {}); }

Word local_group_central_word(int k) {
  if (k < 1) throw Error("local group needs at least one branch");
  Word w;
  for (int i = 1; i <= k; ++i) w = w * Word::generator(branch_generator(i));
  return w;
}

Presentation local_group_branches(int k) {
  if (k < 1) throw Error("local group needs at least one branch");
  std::vector<std::string> gens;
  std::vector<Word> cyclic_products;
  for (int i = 1; i <= k; ++i) gens.push_back(branch_generator(i));
  for (int shift = 0; shift < k; ++shift) {
    Word w;
    for (int j = 0; j < k; ++j) w = w * Word::generator(gens[(shift + j) % k]);
    cyclic_products.push_back(w);
  }
  std::vector<Word> rels;
  for (int shift = 1; shift < k; ++shift) rels.push_back(cyclic_products[0] * cyclic_products[shift].inverse());
  return Presentation(std::move(gens), std::move(rels));
}

Presentation quotient(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators();
  for (const auto& w : extra) {
    for (const auto& l : w.letters())
      if (!p.has_generator(l.generator))
        throw Error("quotient word '" + w.str() + "' uses unknown generator '" + l.generator + "'");
    rels.push_back(w);
  }
  return Presentation(p.generators(), std::move(rels));
}

Integer cyclic_quotient_order(const std::vector<Integer>& ns) {
  if (ns.empty()) throw Error("cyclic_quotient_order needs at least one parameter");
  for (const auto& n : ns)
    if (n < 1) throw Error("construction parameter " + n.str() + " is below 1");
  const std::size_t k = ns.size();
  // Columns: alpha, alpha2, ..., alphak. In homology alpha1 = alpha - (alpha2 + ... + alphak).
  IntMatrix rel(k, k);
  rel(0, 0) = ns[0] + 1;
  for (std::size_t c = 1; c < k; ++c) rel(0, c) = -1;
  for (std::size_t i = 1; i < k; ++i) {
    rel(i, 0) = ns[i];
    rel(i, i) = 1;
  }
  const auto inv = abelian_invariants_of_relations(rel);
  if (!inv.finite()) throw Error("cyclic quotient is infinite");
  return inv.order();
}

}  // namespace cremona
