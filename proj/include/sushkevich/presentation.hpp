#ifndef SUSHKEVICH_PRESENTATION_HPP_
#define SUSHKEVICH_PRESENTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace sushkevich {

  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  enum class PresentationKind : std::uint8_t { plain_monoid, group_completion };

  // A monoid presentation <A | u_i = v_i>. Relations are unoriented; the empty
  // word is the identity. `names()` holds the base letter names, indexed by
  // Letter::id(); `alphabet()` holds the declared letters (barred or not) in
  // declaration order.
  //
  // Values are immutable once constructed and every constructor validates:
  //   * alphabet letters reference a name and are pairwise distinct;
  //   * every relation is spelled over the alphabet;
  //   * a group completion contains a·ā = 1 and ā·a = 1 for each unbarred a.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::vector<std::string> names,
                 std::vector<Letter>      alphabet,
                 std::vector<Relation>    relations,
                 PresentationKind         kind = PresentationKind::plain_monoid)
        : _names(std::move(names)),
          _alphabet(std::move(alphabet)),
          _relations(std::move(relations)),
          _kind(kind) {
      validate();
    }

    // Convenience: unbarred alphabet from names, in the given order.
    static Presentation monoid(std::vector<std::string> names,
                               std::vector<Relation>    relations = {}) {
      std::vector<Letter> alphabet;
      for (std::uint32_t i = 0; i < names.size(); ++i) {
        alphabet.emplace_back(i);
      }
      return Presentation(std::move(names), std::move(alphabet),
                          std::move(relations));
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::vector<Letter> const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] PresentationKind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] bool contains(Letter x) const {
      return std::find(_alphabet.begin(), _alphabet.end(), x)
             != _alphabet.end();
    }

    [[nodiscard]] bool has_barred_letters() const {
      return std::any_of(_alphabet.begin(), _alphabet.end(),
                         [](Letter x) { return x.barred(); });
    }

    // Alphabet sorted by the letter order, which is the shortlex order used by
    // the rewriting engine.
    [[nodiscard]] std::vector<Letter> ordered_alphabet() const {
      auto out = _alphabet;
      std::sort(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] std::string letter_name(Letter x) const {
      return _names.at(x.id()) + (x.barred() ? "'" : "");
    }

    // Letter named `token`, where a trailing apostrophe selects the barred
    // copy.
    [[nodiscard]] std::optional<Letter> find_letter(std::string_view token) const {
      bool barred = false;
      if (!token.empty() && token.back() == '\'') {
        barred = true;
        token.remove_suffix(1);
      }
      for (std::uint32_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == token && contains(Letter(i, barred))) {
          return Letter(i, barred);
        }
      }
      return std::nullopt;
    }

    // Space separated letters, "1" for the empty word.
    [[nodiscard]] std::string to_string(std::span<Letter const> w) const {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += letter_name(w[i]);
      }
      return out;
    }

    // Inverse of to_string; throws Error on an unknown letter.
    [[nodiscard]] Word parse_word(std::string_view text) const {
      Word               out;
      std::istringstream in{std::string(text)};
      std::string        token;
      while (in >> token) {
        if (token == "1") {
          continue;
        }
        auto x = find_letter(token);
        if (!x) {
          throw Error("unknown letter '" + token + "'");
        }
        out.push_back(*x);
      }
      return out;
    }

    // True iff both a·ā = 1 and ā·a = 1 occur among the relations, in
    // either orientation.
    [[nodiscard]] bool has_inverse_relations(Letter x) const {
      auto is_unit = [this](Word const& w) {
        auto trivial = [](Relation const& r, Word const& side) {
          return (r.lhs == side && r.rhs.empty())
                 || (r.rhs == side && r.lhs.empty());
        };
        return std::any_of(_relations.begin(), _relations.end(),
                           [&](Relation const& r) { return trivial(r, w); });
      };
      return is_unit(Word{x, x.partner()}) && is_unit(Word{x.partner(), x});
    }

    bool operator==(Presentation const&) const = default;

   private:
    void validate() const {
      std::set<Letter> seen;
      for (Letter x : _alphabet) {
        if (x.id() >= _names.size()) {
          throw Error("letter id " + std::to_string(x.id())
                      + " has no declared name");
        }
        if (!seen.insert(x).second) {
          throw Error("duplicate letter '" + letter_name(x) + "'");
        }
      }
      for (auto const& [lhs, rhs] : _relations) {
        for (auto const* side : {&lhs, &rhs}) {
          for (Letter x : *side) {
            if (!seen.contains(x)) {
              throw Error("relation uses undeclared letter id "
                          + std::to_string(x.id()));
            }
          }
        }
      }
      if (_kind == PresentationKind::group_completion) {
        for (Letter x : _alphabet) {
          if (x.barred()) {
            continue;
          }
          if (!contains(x.partner()) || !has_inverse_relations(x)) {
            throw Error("group completion lacks inverse relations for '"
                        + letter_name(x) + "'");
          }
        }
      }
    }

    std::vector<std::string> _names;
    std::vector<Letter>      _alphabet;
    std::vector<Relation>    _relations;
    PresentationKind         _kind = PresentationKind::plain_monoid;
  };

  // Group-completion invariant: the kind tag is set and every unbarred letter
  // a has its partner in the alphabet together with a·ā = 1 and ā·a = 1.
  [[nodiscard]] inline bool is_group_completion(Presentation const& p) {
    if (p.kind() != PresentationKind::group_completion) {
      return false;
    }
    return std::all_of(p.alphabet().begin(), p.alphabet().end(),
                       [&p](Letter x) {
                         return x.barred()
                                || (p.contains(x.partner())
                                    && p.has_inverse_relations(x));
                       });
  }

  // The anti-isomorphic copy: every letter barred, every relation reversed.
  // If A·B = C in M then B̄·Ā = C̄ in the copy.
  [[nodiscard]] inline Presentation bar_copy(Presentation const& p) {
    if (p.kind() != PresentationKind::plain_monoid) {
      throw Error("bar_copy expects a plain monoid presentation");
    }
    if (p.has_barred_letters()) {
      throw Error("bar_copy input already contains barred letters");
    }
    std::vector<Letter> alphabet;
    for (Letter x : p.alphabet()) {
      alphabet.push_back(x.partner());
    }
    std::vector<Relation> relations;
    for (auto const& [lhs, rhs] : p.relations()) {
      relations.push_back({reverse(toggle_bars(lhs)), reverse(toggle_bars(rhs))});
    }
    return Presentation(p.names(), std::move(alphabet), std::move(relations));
  }

  // Monoid free product amalgamating the identities: the union of the
  // alphabets and of the relation sets. Base names shared by p and q map to
  // the same id (so a and a' end up as partners); q's other names are
  // appended after p's.
  [[nodiscard]] inline Presentation free_product(Presentation const& p,
                                                 Presentation const& q) {
    std::vector<std::string>   names = p.names();
    std::vector<std::uint32_t> remap(q.names().size());
    for (std::size_t i = 0; i < q.names().size(); ++i) {
      auto it = std::find(names.begin(), names.end(), q.names()[i]);
      if (it == names.end()) {
        names.push_back(q.names()[i]);
        it = names.end() - 1;
      }
      remap[i] = static_cast<std::uint32_t>(it - names.begin());
    }
    auto translate = [&remap](Letter x) {
      return Letter(remap[x.id()], x.barred());
    };

    std::vector<Letter> alphabet = p.alphabet();
    for (Letter x : q.alphabet()) {
      Letter y = translate(x);
      if (p.contains(y)) {
        throw Error("free_product: alphabets share the letter '"
                    + q.letter_name(x) + "'");
      }
      alphabet.push_back(y);
    }
    std::vector<Relation> relations = p.relations();
    for (auto const& [lhs, rhs] : q.relations()) {
      Relation r;
      std::transform(lhs.begin(), lhs.end(), std::back_inserter(r.lhs),
                     translate);
      std::transform(rhs.begin(), rhs.end(), std::back_inserter(r.rhs),
                     translate);
      relations.push_back(std::move(r));
    }
    return Presentation(std::move(names), std::move(alphabet),
                        std::move(relations));
  }

  // G(M) = M * M̄ with a·ā = ā·a = 1 adjoined for every generator a of M.
  // Relation count is 2·|relations(p)| + 2·|alphabet(p)|.
  [[nodiscard]] inline Presentation build_gm(Presentation const& p) {
    Presentation product   = free_product(p, bar_copy(p));
    auto         relations = product.relations();
    for (Letter x : p.alphabet()) {
      relations.push_back({Word{x, x.partner()}, Word{}});
      relations.push_back({Word{x.partner(), x}, Word{}});
    }
    return Presentation(product.names(), product.alphabet(),
                        std::move(relations),
                        PresentationKind::group_completion);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////
  //
  //   # comment
  //   letters: a b c        declaration order is the shortlex order
  //   rel: x a = y b        "1" is the empty word, a' is the barred a
  //
  // Exactly one letters line, before any rel line.

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      auto const ws    = " \t\r";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return s.substr(first, last - first + 1);
    }

    inline bool valid_name(std::string_view name) {
      if (name.empty() || name == "1") {
        return false;
      }
      return name.find_first_of("'=#:") == std::string_view::npos;
    }
  }  // namespace detail

  [[nodiscard]] inline Presentation parse_presentation(std::string_view text) {
    std::vector<std::string>                         names;
    std::vector<Letter>                              alphabet;
    std::vector<std::pair<std::size_t, std::string>> pending;  // line, text
    bool                                             have_letters = false;

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = detail::trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.starts_with("letters:")) {
        if (have_letters) {
          throw ParseError(line_no, "duplicate letters line");
        }
        if (!pending.empty()) {
          throw ParseError(line_no, "letters line must precede relations");
        }
        have_letters = true;
        std::istringstream in{std::string(line.substr(8))};
        std::string        token;
        while (in >> token) {
          bool barred = token.back() == '\'';
          auto name   = barred ? token.substr(0, token.size() - 1) : token;
          if (!detail::valid_name(name)) {
            throw ParseError(line_no, "invalid letter name '" + token + "'");
          }
          auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) {
            names.push_back(name);
            it = names.end() - 1;
          }
          Letter x(static_cast<std::uint32_t>(it - names.begin()), barred);
          if (std::find(alphabet.begin(), alphabet.end(), x)
              != alphabet.end()) {
            throw ParseError(line_no, "duplicate letter '" + token + "'");
          }
          alphabet.push_back(x);
        }
        if (alphabet.empty()) {
          throw ParseError(line_no, "empty letters line");
        }
      } else if (line.starts_with("rel:")) {
        if (!have_letters) {
          throw ParseError(line_no, "relation before letters declaration");
        }
        pending.emplace_back(line_no, std::string(line.substr(4)));
      } else {
        throw ParseError(line_no, "expected 'letters:' or 'rel:'");
      }
    }
    if (!have_letters) {
      throw ParseError(line_no == 0 ? 1 : line_no, "missing letters line");
    }

    Presentation          bare(names, alphabet, {});
    std::vector<Relation> relations;
    for (auto const& [line, body] : pending) {
      auto eq = body.find('=');
      if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos) {
        throw ParseError(line, "relation needs exactly one '='");
      }
      auto lhs_text = detail::trim(std::string_view(body).substr(0, eq));
      auto rhs_text = detail::trim(std::string_view(body).substr(eq + 1));
      if (lhs_text.empty() || rhs_text.empty()) {
        throw ParseError(line, "empty relation side (write 1 for identity)");
      }
      try {
        relations.push_back(
            {bare.parse_word(lhs_text), bare.parse_word(rhs_text)});
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line, e.what());
      }
    }
    return Presentation(std::move(names), std::move(alphabet),
                        std::move(relations));
  }

  [[nodiscard]] inline std::string format_presentation(Presentation const& p) {
    std::string out = "letters:";
    for (Letter x : p.alphabet()) {
      out += ' ';
      out += p.letter_name(x);
    }
    out += '\n';
    for (auto const& [lhs, rhs] : p.relations()) {
      out += "rel: " + p.to_string(lhs) + " = " + p.to_string(rhs) + '\n';
    }
    return out;
  }

}  // namespace sushkevich

#endif  // SUSHKEVICH_PRESENTATION_HPP_
