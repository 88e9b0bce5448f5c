#ifndef SUSHKEVICH_EMBEDDING_HPP_
#define SUSHKEVICH_EMBEDDING_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "presentation.hpp"
#include "rewriting.hpp"
#include "word.hpp"

namespace sushkevich {

  // kb_complete did not reach confluence for a presentation that needs it.
  class NotConfluent : public Error {
   public:
    using Error::Error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Probing the canonical map M → G(M)
  ////////////////////////////////////////////////////////////////////////

  enum class EmbeddingStatus : std::uint8_t {
    no_collision_found,
    collision,
    inconclusive
  };

  struct EmbeddingWitness {
    Word                u;
    Word                v;
    Verdict             in_m;   // always distinct: u, v are distinct normal forms
    Verdict             in_gm;  // equal (collision) or unknown (inconclusive)
    EqualityCertificate certificate;  // from the G(M) side
  };

  struct ProbeOptions {
    std::size_t      max_len = 4;
    std::size_t      budget  = 100'000;  // visited words per G(M) query
    CompletionBudget completion{};
    std::size_t      max_witnesses = 100;  // witnesses listed, not counted
  };

  struct EmbeddingReport {
    EmbeddingStatus               status       = EmbeddingStatus::no_collision_found;
    std::size_t                   probe_length = 0;
    std::vector<EmbeddingWitness> witnesses;  // collisions first, then inconclusive

    // budget_spent
    std::size_t elements          = 0;  // normal forms of M up to probe_length
    std::size_t pairs_checked     = 0;
    std::size_t collisions        = 0;
    std::size_t inconclusive      = 0;
    std::size_t visited           = 0;  // words visited by bounded searches
    std::size_t m_rules           = 0;
    std::size_t gm_rules          = 0;
    bool        gm_confluent      = false;

    Presentation m;
    Presentation gm;
  };

  // Unordered pairs {u, v} of distinct words, shortest first: ordered by the
  // shortlex-larger member, then by the smaller one.
  inline bool probe_pair_less(std::pair<std::size_t, std::size_t> a,
                              std::pair<std::size_t, std::size_t> b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  }

  // Enumerates the elements of M up to `max_len` by their normal forms and
  // asks, for each unordered pair of distinct elements, whether the two words
  // are identified in G(M).
  [[nodiscard]] inline EmbeddingReport probe_embedding(Presentation const& p,
                                                       ProbeOptions const& opts = {}) {
    if (p.kind() != PresentationKind::plain_monoid || p.has_barred_letters()) {
      throw Error("probe_embedding expects a plain monoid presentation "
                  "without barred letters");
    }
    EmbeddingReport report;
    report.probe_length = opts.max_len;
    report.m            = p;
    report.gm           = build_gm(p);

    RewriteSystem m_rs = kb_complete(p, opts.completion);
    report.m_rules     = m_rs.rules().size();
    if (!m_rs.confluent()) {
      throw NotConfluent("Knuth-Bendix completion of M did not reach "
                         "confluence within the budget");
    }
    RewriteSystem gm_rs = kb_complete(report.gm, opts.completion);
    report.gm_rules     = gm_rs.rules().size();
    report.gm_confluent = gm_rs.confluent();

    auto const        elements = enumerate_elements(m_rs, opts.max_len);
    std::size_t const n        = elements.size();
    report.elements            = n;
    report.pairs_checked       = n * (n - 1) / 2;

    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    std::vector<std::pair<std::size_t, std::size_t>> unknown;
    std::map<std::pair<std::size_t, std::size_t>, EqualityVerdict> verdicts;

    if (gm_rs.confluent()) {
      // One normal form per element; pairs in the same class collide and
      // every other pair is decided distinct.
      std::map<Word, std::vector<std::size_t>, ShortlexLess> classes;
      for (std::size_t i = 0; i < n; ++i) {
        classes[gm_rs.reduce(elements[i])].push_back(i);
      }
      for (auto const& [nf, members] : classes) {
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            collisions.emplace_back(members[a], members[b]);
          }
        }
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          auto verdict = equal_words(gm_rs, elements[i], elements[j], opts.budget);
          report.visited += verdict.visited;
          if (verdict.value == Verdict::equal) {
            collisions.emplace_back(i, j);
            verdicts.emplace(std::pair{i, j}, std::move(verdict));
          } else if (verdict.value == Verdict::unknown) {
            unknown.emplace_back(i, j);
            verdicts.emplace(std::pair{i, j}, std::move(verdict));
          }
        }
      }
    }
    std::sort(collisions.begin(), collisions.end(), probe_pair_less);
    std::sort(unknown.begin(), unknown.end(), probe_pair_less);
    report.collisions   = collisions.size();
    report.inconclusive = unknown.size();

    auto witness = [&](std::pair<std::size_t, std::size_t> ij) {
      auto it = verdicts.find(ij);
      auto verdict =
          it != verdicts.end()
              ? it->second
              : equal_words(gm_rs, elements[ij.first], elements[ij.second],
                            opts.budget);
      return EmbeddingWitness{elements[ij.first], elements[ij.second],
                              Verdict::distinct, verdict.value,
                              std::move(verdict.certificate)};
    };
    for (auto ij : collisions) {
      if (report.witnesses.size() == opts.max_witnesses) {
        break;
      }
      report.witnesses.push_back(witness(ij));
    }
    for (auto ij : unknown) {
      if (report.witnesses.size() == opts.max_witnesses) {
        break;
      }
      report.witnesses.push_back(witness(ij));
    }

    if (!collisions.empty()) {
      report.status = EmbeddingStatus::collision;
    } else if (!unknown.empty()) {
      report.status = EmbeddingStatus::inconclusive;
    } else {
      report.status = EmbeddingStatus::no_collision_found;
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Mal'cev quadruple condition
  ////////////////////////////////////////////////////////////////////////

  // Element 8-tuple in the order (a, b, c, d, u, v, x, y).
  using MalcevTuple = std::array<std::size_t, 8>;

  struct MalcevReport {
    // 8-tuples satisfying xa = yb, xc = yd, ua = vb
    std::size_t systems_checked = 0;
    // tuples among them with uc ≠ vd
    std::size_t              violation_count = 0;
    std::vector<MalcevTuple> violations;  // first max_listed of them
  };

  // True iff the tuple satisfies the three hypotheses and uc ≠ vd.
  [[nodiscard]] inline bool is_malcev_violation(CayleyTable const& t,
                                                MalcevTuple const& tuple) {
    auto [a, b, c, d, u, v, x, y] = tuple;
    std::size_t const n            = t.size();
    for (std::size_t e : tuple) {
      if (e >= n) {
        return false;
      }
    }
    return t.at(x, a) == t.at(y, b) && t.at(x, c) == t.at(y, d)
           && t.at(u, a) == t.at(v, b) && t.at(u, c) != t.at(v, d);
  }

  // Scans every 8-tuple with xa = yb, xc = yd, ua = vb and records those with
  // uc ≠ vd. Any group-embeddable semigroup has no violation; the converse
  // does not hold.
  [[nodiscard]] inline MalcevReport
  check_malcev_condition(CayleyTable const& t,
                         std::size_t max_listed = static_cast<std::size_t>(-1)) {
    if (!is_associative(t)) {
      throw Error("check_malcev_condition: the table is not associative");
    }
    std::size_t const n = t.size();
    MalcevReport      report;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (t.at(x, a) != t.at(y, b)) {
              continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
              for (std::size_t d = 0; d < n; ++d) {
                if (t.at(x, c) != t.at(y, d)) {
                  continue;
                }
                for (std::size_t u = 0; u < n; ++u) {
                  for (std::size_t v = 0; v < n; ++v) {
                    if (t.at(u, a) != t.at(v, b)) {
                      continue;
                    }
                    ++report.systems_checked;
                    if (t.at(u, c) != t.at(v, d)) {
                      ++report.violation_count;
                      if (report.violations.size() < max_listed) {
                        report.violations.push_back({a, b, c, d, u, v, x, y});
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace sushkevich

#endif  // SUSHKEVICH_EMBEDDING_HPP_
