#ifndef SUSHKEVICH_REWRITING_HPP_
#define SUSHKEVICH_REWRITING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace sushkevich {

  ////////////////////////////////////////////////////////////////////////
  // Derivations over defining relations
  ////////////////////////////////////////////////////////////////////////

  // One elementary transformation: at `pos`, replace relations[relation].lhs
  // by .rhs (forward) or .rhs by .lhs (backward).
  struct DerivationStep {
    std::size_t pos      = 0;
    std::size_t relation = 0;
    bool        forward  = true;

    bool operator==(DerivationStep const&) const = default;
  };

  using Derivation = std::vector<DerivationStep>;

  // Applies one step, throwing if the expected factor is not at `pos`.
  [[nodiscard]] inline Word apply_step(std::span<Relation const> relations,
                                       std::span<Letter const>   w,
                                       DerivationStep const&     step) {
    if (step.relation >= relations.size()) {
      throw Error("derivation step references relation "
                  + std::to_string(step.relation) + " which does not exist");
    }
    auto const& r    = relations[step.relation];
    auto const& from = step.forward ? r.lhs : r.rhs;
    auto const& to   = step.forward ? r.rhs : r.lhs;
    if (!has_factor_at(w, step.pos, from)) {
      throw Error("derivation step does not apply at position "
                  + std::to_string(step.pos));
    }
    return splice(w, step.pos, from.size(), to);
  }

  // Replays `d` from `start` and returns the final word. Any step that does
  // not apply throws.
  [[nodiscard]] inline Word replay(std::span<Relation const> relations,
                                   Word                      start,
                                   Derivation const&         d) {
    for (auto const& step : d) {
      start = apply_step(relations, start, step);
    }
    return start;
  }

  [[nodiscard]] inline Derivation inverse(Derivation const& d) {
    Derivation out;
    out.reserve(d.size());
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      out.push_back({it->pos, it->relation, !it->forward});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting systems
  ////////////////////////////////////////////////////////////////////////

  // lhs > rhs in shortlex.
  struct Rule {
    Word lhs;
    Word rhs;

    bool operator==(Rule const&) const = default;
  };

  enum class CompletionStatus : std::uint8_t { confluent, budget_exhausted };

  struct CompletionBudget {
    std::size_t max_rules       = 500;
    std::size_t max_rule_length = 50;
  };

  // Application of rules()[rule] at `pos`.
  struct RewriteStep {
    std::size_t pos  = 0;
    std::size_t rule = 0;
  };

  namespace detail {
    // A step of a rule proof: either a defining relation or an earlier rule
    // (by record id), applied at `pos`.
    struct ProofStep {
      std::size_t pos;
      std::size_t index;
      bool        forward;
      bool        by_rule;
    };

    // Every rule ever created during completion, with a proof lhs → rhs in
    // terms of relations and strictly older records.
    struct RuleRecord {
      Word                   lhs;
      Word                   rhs;
      std::vector<ProofStep> proof;
    };

    using ProofStore = std::vector<RuleRecord>;

    inline std::vector<ProofStep> inverse(std::vector<ProofStep> const& p) {
      std::vector<ProofStep> out;
      out.reserve(p.size());
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        out.push_back({it->pos, it->index, !it->forward, it->by_rule});
      }
      return out;
    }

    // Expands a proof into relation steps. Returns nullopt once more than
    // `cap` steps would be produced.
    inline std::optional<Derivation> expand(ProofStore const&             store,
                                            std::vector<ProofStep> const& proof,
                                            std::size_t                   cap) {
      Derivation out;
      bool       overflow = false;

      std::function<void(std::vector<ProofStep> const&, std::size_t, bool)>
          emit_sequence;
      auto emit = [&](ProofStep const& s, std::size_t offset, bool forward) {
        if (overflow) {
          return;
        }
        if (s.by_rule) {
          emit_sequence(store[s.index].proof, offset + s.pos, forward);
        } else if (out.size() == cap) {
          overflow = true;
        } else {
          out.push_back({offset + s.pos, s.index, forward});
        }
      };
      emit_sequence = [&](std::vector<ProofStep> const& seq,
                          std::size_t                   offset,
                          bool                          forward) {
        if (forward) {
          for (auto const& s : seq) {
            emit(s, offset, s.forward);
          }
        } else {
          for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            emit(*it, offset, !it->forward);
          }
        }
      };
      emit_sequence(proof, 0, true);
      if (overflow) {
        return std::nullopt;
      }
      return out;
    }

    inline bool ends_with(Word const& w, Word const& suffix) {
      return suffix.size() <= w.size()
             && std::equal(suffix.begin(), suffix.end(),
                           w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
    }

    // Left-to-right reduction driver shared by completion and the finished
    // system. `match(buffer)` returns the index of a rule whose lhs is a
    // suffix of buffer, or npos.
    template <typename Match, typename Lhs, typename Rhs>
    Word reduce_with(std::span<Letter const>   w,
                     Match&&                   match,
                     Lhs&&                     lhs_of,
                     Rhs&&                     rhs_of,
                     std::vector<RewriteStep>* trace) {
      Word out;
      Word pending(w.rbegin(), w.rend());
      out.reserve(w.size());
      while (!pending.empty()) {
        out.push_back(pending.back());
        pending.pop_back();
        std::size_t i = match(out);
        if (i != static_cast<std::size_t>(-1)) {
          Word const& lhs = lhs_of(i);
          Word const& rhs = rhs_of(i);
          std::size_t pos = out.size() - lhs.size();
          if (trace != nullptr) {
            trace->push_back({pos, i});
          }
          out.resize(pos);
          pending.insert(pending.end(), rhs.rbegin(), rhs.rend());
        }
      }
      return out;
    }
  }  // namespace detail

  // A shortlex-oriented, interreduced rewriting system for a presentation,
  // produced by kb_complete. Each rule carries a proof from the defining
  // relations, so rewriting traces can be turned into replayable derivations.
  // Immutable after construction and safe to share between threads.
  class RewriteSystem {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    // Upper bound on the length of an expanded derivation.
    static constexpr std::size_t derivation_cap = std::size_t{1} << 20;

    RewriteSystem(Presentation                             source,
                  std::vector<Rule>                        rules,
                  std::vector<std::size_t>                 records,
                  std::shared_ptr<detail::ProofStore const> store,
                  CompletionStatus                         status)
        : _source(std::move(source)),
          _rules(std::move(rules)),
          _records(std::move(records)),
          _store(std::move(store)),
          _status(status) {
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        auto const& lhs = _rules[i].lhs;
        _by_last[lhs.back().rank()].push_back(i);
      }
    }

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _source;
    }
    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] CompletionStatus status() const noexcept {
      return _status;
    }
    [[nodiscard]] bool confluent() const noexcept {
      return _status == CompletionStatus::confluent;
    }

    [[nodiscard]] Word reduce(std::span<Letter const>   w,
                              std::vector<RewriteStep>* trace = nullptr) const {
      auto match = [this](Word const& buffer) {
        auto it = _by_last.find(buffer.back().rank());
        if (it != _by_last.end()) {
          for (std::size_t i : it->second) {
            if (detail::ends_with(buffer, _rules[i].lhs)) {
              return i;
            }
          }
        }
        return npos;
      };
      return detail::reduce_with(
          w, match,
          [this](std::size_t i) -> Word const& { return _rules[i].lhs; },
          [this](std::size_t i) -> Word const& { return _rules[i].rhs; },
          trace);
    }

    [[nodiscard]] bool is_reducible(std::span<Letter const> w) const {
      for (auto const& rule : _rules) {
        if (find_factor(w, rule.lhs) <= w.size()) {
          return true;
        }
      }
      return false;
    }

    // Relation-level derivation of rules()[i].lhs → rules()[i].rhs.
    [[nodiscard]] std::optional<Derivation> rule_derivation(std::size_t i) const {
      return detail::expand(*_store, {{0, _records.at(i), true, true}},
                            derivation_cap);
    }

    // Relation-level derivation realising a rewriting trace (`forward`), or
    // its reverse. nullopt when the expansion exceeds derivation_cap.
    [[nodiscard]] std::optional<Derivation>
    derivation(std::vector<RewriteStep> const& trace, bool forward = true) const {
      std::vector<detail::ProofStep> proof;
      proof.reserve(trace.size());
      for (auto const& s : trace) {
        proof.push_back({s.pos, _records.at(s.rule), true, true});
      }
      if (!forward) {
        proof = detail::inverse(proof);
      }
      return detail::expand(*_store, proof, derivation_cap);
    }

   private:
    Presentation                                              _source;
    std::vector<Rule>                                         _rules;
    std::vector<std::size_t>                                  _records;
    std::shared_ptr<detail::ProofStore const>                 _store;
    CompletionStatus                                          _status;
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> _by_last;
  };

  // First critical pair of `rs` (overlap or inclusion of two left-hand sides)
  // whose two one-step reducts have different normal forms, returned as the
  // pair of normal forms.
  [[nodiscard]] inline std::optional<std::pair<Word, Word>>
  find_unresolved_critical_pair(RewriteSystem const& rs) {
    auto const& rules = rs.rules();
    auto        check = [&rs](Word const& p, Word const& q)
        -> std::optional<std::pair<Word, Word>> {
      auto np = rs.reduce(p);
      auto nq = rs.reduce(q);
      if (np != nq) {
        return std::pair{np, nq};
      }
      return std::nullopt;
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& l1 = rules[i].lhs;
        auto const& l2 = rules[j].lhs;
        // suffix of l1 equals prefix of l2
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
          if (std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(),
                         l2.begin())) {
            auto bad = check(concat(rules[i].rhs, std::span(l2).subspan(k)),
                             concat(std::span(l1).first(l1.size() - k),
                                    rules[j].rhs));
            if (bad) {
              return bad;
            }
          }
        }
        // l2 occurs inside l1
        if (i == j) {
          continue;
        }
        for (std::size_t pos = find_factor(l1, l2); pos <= l1.size();
             pos             = find_factor(l1, l2, pos + 1)) {
          auto bad = check(rules[i].rhs, splice(l1, pos, l2.size(), rules[j].rhs));
          if (bad) {
            return bad;
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Knuth–Bendix completion
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class Completion {
     public:
      Completion(Presentation const& p, CompletionBudget budget)
          : _source(p), _budget(budget), _store(std::make_shared<ProofStore>()) {}

      RewriteSystem run() {
        auto const& relations = _source.relations();
        for (std::size_t i = 0; i < relations.size(); ++i) {
          if (relations[i].lhs == relations[i].rhs) {
            continue;
          }
          _pending.push_back(
              {relations[i].lhs, relations[i].rhs, {{0, i, true, false}}});
        }
        bool ok = true;
        while (ok) {
          ok = drain();
          if (!ok) {
            break;
          }
          auto next = std::find_if(_rules.begin(), _rules.end(),
                                   [](Work const& r) {
                                     return r.active && !r.overlapped;
                                   });
          if (next == _rules.end()) {
            break;
          }
          next->overlapped = true;
          std::size_t const i = static_cast<std::size_t>(next - _rules.begin());
          for (std::size_t j = 0; j <= i && ok; ++j) {
            if (!_rules[j].active || !_rules[j].overlapped) {
              continue;
            }
            push_overlaps(i, j);
            if (i != j) {
              push_overlaps(j, i);
            }
          }
        }
        return finish(ok ? CompletionStatus::confluent
                         : CompletionStatus::budget_exhausted);
      }

     private:
      struct Equation {
        Word                   u;
        Word                   v;
        std::vector<ProofStep> proof;  // u → v
      };

      struct Work {
        Word        lhs;
        Word        rhs;
        std::size_t record;
        bool        active;
        bool        overlapped;
      };

      Word reduce(std::span<Letter const> w, std::vector<ProofStep>& trace) {
        std::vector<RewriteStep> steps;
        auto                     match = [this](Word const& buffer) {
          for (std::size_t i = 0; i < _rules.size(); ++i) {
            if (_rules[i].active && ends_with(buffer, _rules[i].lhs)) {
              return i;
            }
          }
          return RewriteSystem::npos;
        };
        Word out = reduce_with(
            w, match,
            [this](std::size_t i) -> Word const& { return _rules[i].lhs; },
            [this](std::size_t i) -> Word const& { return _rules[i].rhs; },
            &steps);
        for (auto const& s : steps) {
          trace.push_back({s.pos, _rules[s.rule].record, true, true});
        }
        return out;
      }

      std::size_t active_count() const {
        return static_cast<std::size_t>(
            std::count_if(_rules.begin(), _rules.end(),
                          [](Work const& r) { return r.active; }));
      }

      // Processes queued equations FIFO; false when a budget trips.
      bool drain() {
        while (!_pending.empty()) {
          Equation eq = std::move(_pending.front());
          _pending.pop_front();

          std::vector<ProofStep> tu;
          std::vector<ProofStep> tv;
          Word                   u = reduce(eq.u, tu);
          Word                   v = reduce(eq.v, tv);
          if (u == v) {
            continue;
          }
          // u → eq.u → eq.v → v
          std::vector<ProofStep> proof = detail::inverse(tu);
          proof.insert(proof.end(), eq.proof.begin(), eq.proof.end());
          proof.insert(proof.end(), tv.begin(), tv.end());
          if (shortlex_less(u, v)) {
            std::swap(u, v);
            proof = detail::inverse(proof);
          }
          if (u.size() > _budget.max_rule_length) {
            return false;
          }
          add_rule(std::move(u), std::move(v), std::move(proof));
          if (active_count() > _budget.max_rules) {
            return false;
          }
        }
        return true;
      }

      void add_rule(Word lhs, Word rhs, std::vector<ProofStep> proof) {
        std::size_t record = _store->size();
        _store->push_back({lhs, rhs, std::move(proof)});
        _rules.push_back({lhs, rhs, record, true, false});
        std::size_t const fresh = _rules.size() - 1;

        for (std::size_t i = 0; i < fresh; ++i) {
          auto& r = _rules[i];
          if (!r.active) {
            continue;
          }
          if (find_factor(r.lhs, lhs) <= r.lhs.size()) {
            r.active = false;
            _pending.push_back({r.lhs, r.rhs, {{0, r.record, true, true}}});
          } else if (find_factor(r.rhs, lhs) <= r.rhs.size()) {
            std::vector<ProofStep> trace;
            Word                   reduced = reduce(r.rhs, trace);
            std::vector<ProofStep> p{{0, r.record, true, true}};
            p.insert(p.end(), trace.begin(), trace.end());
            r.record = _store->size();
            _store->push_back({r.lhs, reduced, std::move(p)});
            r.rhs = std::move(reduced);
          }
        }
      }

      // Critical pairs from suffixes of rule i's lhs overlapping prefixes of
      // rule j's lhs, smallest overlap first.
      void push_overlaps(std::size_t i, std::size_t j) {
        Word const& l1 = _rules[i].lhs;
        Word const& l2 = _rules[j].lhs;
        std::size_t r1 = _rules[i].record;
        std::size_t r2 = _rules[j].record;
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
          if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(),
                          l2.begin())) {
            continue;
          }
          std::size_t const prefix = l1.size() - k;
          // w = l1 · l2[k..]; u = rhs1 · l2[k..], v = l1[..prefix] · rhs2
          Word u = concat(_rules[i].rhs, std::span(l2).subspan(k));
          Word v = concat(std::span(l1).first(prefix), _rules[j].rhs);
          _pending.push_back(
              {std::move(u),
               std::move(v),
               {{0, r1, false, true}, {prefix, r2, true, true}}});
        }
      }

      RewriteSystem finish(CompletionStatus status) {
        std::vector<Rule>        rules;
        std::vector<std::size_t> records;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < _rules.size(); ++i) {
          if (_rules[i].active) {
            order.push_back(i);
          }
        }
        std::sort(order.begin(), order.end(),
                  [this](std::size_t a, std::size_t b) {
                    return shortlex_less(_rules[a].lhs, _rules[b].lhs);
                  });
        for (std::size_t i : order) {
          rules.push_back({_rules[i].lhs, _rules[i].rhs});
          records.push_back(_rules[i].record);
        }
        return RewriteSystem(_source, std::move(rules), std::move(records),
                             std::move(_store), status);
      }

      Presentation const&         _source;
      CompletionBudget            _budget;
      std::shared_ptr<ProofStore> _store;
      std::vector<Work>           _rules;
      std::deque<Equation>        _pending;
    };
  }  // namespace detail

  // Orients the relations of `p` by shortlex and resolves critical pairs until
  // the system is confluent or a budget trips. Trivial relations (w = w) are
  // dropped. Budget exhaustion is reported through status(), never thrown.
  [[nodiscard]] inline RewriteSystem kb_complete(Presentation const& p,
                                                 CompletionBudget    budget = {}) {
    if (budget.max_rules == 0 || budget.max_rule_length == 0) {
      throw Error("kb_complete: budgets must be positive");
    }
    RewriteSystem rs = detail::Completion(p, budget).run();
    // Interreduced completion is confluent here; the scan below is a final
    // certificate that the status is not overstated.
    if (rs.confluent() && find_unresolved_critical_pair(rs)) {
      throw Error("kb_complete: internal error, unresolved critical pair");
    }
    return rs;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word equality
  ////////////////////////////////////////////////////////////////////////

  enum class Verdict : std::uint8_t { equal, distinct, unknown };

  struct EqualityCertificate {
    // Normal forms of the two words under the rewriting system, when used.
    std::optional<std::pair<Word, Word>> normal_forms;
    // Relation-level derivation from u to v; set for equal verdicts.
    std::optional<Derivation> derivation;
  };

  struct EqualityVerdict {
    Verdict             value = Verdict::unknown;
    EqualityCertificate certificate;
    std::size_t         visited = 0;  // words visited by the bounded search
  };

  namespace detail {
    // Bidirectional breadth-first search over single relation applications.
    // Words longer than max(|u|, |v|) + 2·(longest relation side) are not
    // visited.
    inline EqualityVerdict search_equal(std::span<Relation const> relations,
                                        Word const&               u,
                                        Word const&               v,
                                        std::size_t               budget) {
      struct Parent {
        Word           prev;
        DerivationStep step;  // prev → this word
      };
      using Visited = std::unordered_map<Word, Parent, WordHash>;

      EqualityVerdict verdict;
      if (u == v) {
        verdict.value                   = Verdict::equal;
        verdict.certificate.derivation = Derivation{};
        return verdict;
      }
      std::size_t longest = 0;
      for (auto const& r : relations) {
        longest = std::max({longest, r.lhs.size(), r.rhs.size()});
      }
      std::size_t const max_length = std::max(u.size(), v.size()) + 2 * longest;

      Visited           seen[2];
      std::vector<Word> frontier[2] = {{u}, {v}};
      seen[0].emplace(u, Parent{});
      seen[1].emplace(v, Parent{});

      auto path_to = [&](int side, Word w) {
        Derivation d;
        while (w != (side == 0 ? u : v)) {
          auto const& parent = seen[side].at(w);
          d.push_back(parent.step);
          w = parent.prev;
        }
        std::reverse(d.begin(), d.end());
        return d;  // start of `side` → w
      };

      auto neighbours = [&](Word const& w, auto&& visit) {
        for (std::size_t i = 0; i < relations.size(); ++i) {
          for (bool forward : {true, false}) {
            auto const& from = forward ? relations[i].lhs : relations[i].rhs;
            auto const& to   = forward ? relations[i].rhs : relations[i].lhs;
            if (from.size() > w.size()
                || w.size() - from.size() + to.size() > max_length) {
              continue;
            }
            for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
              if (has_factor_at(w, pos, from)) {
                if (!visit(splice(w, pos, from.size(), to),
                           DerivationStep{pos, i, forward})) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      };

      while (!frontier[0].empty() && !frontier[1].empty()) {
        int const side  = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        int const other = 1 - side;
        std::vector<Word> next;
        std::optional<Word> meet;
        bool                exhausted = false;
        for (auto const& w : frontier[side]) {
          bool go_on = neighbours(w, [&](Word x, DerivationStep step) {
            if (seen[side].contains(x)) {
              return true;
            }
            seen[side].emplace(x, Parent{w, step});
            if (seen[other].contains(x)) {
              meet = std::move(x);
              return false;
            }
            if (seen[0].size() + seen[1].size() > budget) {
              exhausted = true;
              return false;
            }
            next.push_back(std::move(x));
            return true;
          });
          if (!go_on) {
            break;
          }
        }
        verdict.visited = seen[0].size() + seen[1].size();
        if (meet) {
          Derivation from_u = path_to(0, *meet);
          Derivation from_v = path_to(1, *meet);
          Derivation to_v   = inverse(from_v);
          from_u.insert(from_u.end(), to_v.begin(), to_v.end());
          verdict.value                   = Verdict::equal;
          verdict.certificate.derivation = std::move(from_u);
          return verdict;
        }
        if (exhausted) {
          return verdict;
        }
        frontier[side] = std::move(next);
      }
      // One side's component is finite and fully explored without meeting
      // the other; within the length window the words are not connected, but
      // longer detours may exist, so this is still not a proof of distinctness.
      return verdict;
    }
  }  // namespace detail

  // Decides u = v in the monoid presented by rs.presentation().
  //  * Equal normal forms prove equality (rules are consequences of the
  //    relations); the certificate carries a relation-level derivation.
  //  * Different normal forms prove distinctness when rs is confluent.
  //  * Otherwise a bounded bidirectional search over relation applications
  //    runs with at most `budget` visited words and may answer unknown.
  [[nodiscard]] inline EqualityVerdict equal_words(RewriteSystem const& rs,
                                                   Word const&          u,
                                                   Word const&          v,
                                                   std::size_t budget = 100'000) {
    EqualityVerdict          verdict;
    std::vector<RewriteStep> tu;
    std::vector<RewriteStep> tv;
    Word                     nu = rs.reduce(u, &tu);
    Word                     nv = rs.reduce(v, &tv);
    if (nu == nv) {
      verdict.value                     = Verdict::equal;
      verdict.certificate.normal_forms = std::pair{nu, nv};
      auto to_nf                        = rs.derivation(tu, true);
      auto from_nf                      = rs.derivation(tv, false);
      if (to_nf && from_nf) {
        to_nf->insert(to_nf->end(), from_nf->begin(), from_nf->end());
        verdict.certificate.derivation = std::move(to_nf);
      }
      return verdict;
    }
    if (rs.confluent()) {
      verdict.value                     = Verdict::distinct;
      verdict.certificate.normal_forms = std::pair{nu, nv};
      return verdict;
    }
    return detail::search_equal(rs.presentation().relations(), u, v, budget);
  }

  [[nodiscard]] inline EqualityVerdict equal_words(Presentation const& p,
                                                   Word const&         u,
                                                   Word const&         v,
                                                   std::size_t budget = 100'000,
                                                   CompletionBudget completion = {}) {
    return equal_words(kb_complete(p, completion), u, v, budget);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of normal forms
  ////////////////////////////////////////////////////////////////////////

  // All irreducible words of length ≤ max_len in shortlex order; for a
  // confluent system these are exactly one representative per element.
  [[nodiscard]] inline std::vector<Word> enumerate_elements(RewriteSystem const& rs,
                                                            std::size_t max_len) {
    if (!rs.confluent()) {
      throw Error("enumerate_elements requires a confluent rewriting system");
    }
    auto const        letters = rs.presentation().ordered_alphabet();
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    // Irreducible words are factor closed, so extending irreducible words by
    // one letter and checking suffixes reaches every irreducible word.
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (Letter x : letters) {
          Word candidate = w;
          candidate.push_back(x);
          bool reducible = std::any_of(
              rs.rules().begin(), rs.rules().end(),
              [&](Rule const& r) { return detail::ends_with(candidate, r.lhs); });
          if (!reducible) {
            next.push_back(std::move(candidate));
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

}  // namespace sushkevich

#endif  // SUSHKEVICH_REWRITING_HPP_
