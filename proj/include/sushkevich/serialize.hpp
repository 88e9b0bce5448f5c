#ifndef SUSHKEVICH_SERIALIZE_HPP_
#define SUSHKEVICH_SERIALIZE_HPP_

// JSON encodings of the library's reports. Field order is fixed
// (ordered_json) so identical inputs give byte-identical output.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "presentation.hpp"
#include "rank1.hpp"
#include "rewriting.hpp"

namespace sushkevich::json {

  using Json = nlohmann::ordered_json;

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::equal:
        return "equal";
      case Verdict::distinct:
        return "distinct";
      case Verdict::unknown:
        return "unknown";
    }
    return "unknown";
  }

  inline char const* to_string(CompletionStatus s) {
    return s == CompletionStatus::confluent ? "confluent" : "budget-exhausted";
  }

  inline char const* to_string(EmbeddingStatus s) {
    switch (s) {
      case EmbeddingStatus::no_collision_found:
        return "no-collision-found";
      case EmbeddingStatus::collision:
        return "collision";
      case EmbeddingStatus::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  inline Json encode(CayleyTable const& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < t.size(); ++j) {
        row.push_back(t.at(i, j));
      }
      rows.push_back(std::move(row));
    }
    return Json{{"n", t.size()}, {"table", std::move(rows)}};
  }

  // {"n": k, "table": [[...], ...]}; throws Error on any schema violation.
  inline CayleyTable decode_table(Json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("table")) {
      throw Error("table JSON needs fields \"n\" and \"table\"");
    }
    if (!j["n"].is_number_unsigned()) {
      throw Error("\"n\" must be a non-negative integer");
    }
    auto const  n     = j["n"].get<std::size_t>();
    auto const& table = j["table"];
    if (!table.is_array() || table.size() != n) {
      throw Error("\"table\" must be an array of " + std::to_string(n) + " rows");
    }
    std::vector<CayleyTable::index_type> data;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& row = table[i];
      if (!row.is_array() || row.size() != n) {
        throw Error("row " + std::to_string(i) + " must have "
                    + std::to_string(n) + " entries");
      }
      for (auto const& x : row) {
        if (!x.is_number_unsigned()) {
          throw Error("row " + std::to_string(i)
                      + " contains a non-integer entry");
        }
        data.push_back(x.get<CayleyTable::index_type>());
      }
    }
    return CayleyTable(n, std::move(data));
  }

  inline CayleyTable parse_table(std::string const& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw Error(std::string("malformed table JSON: ") + e.what());
    }
    return decode_table(j);
  }

  inline Json encode(LawReport const& r) {
    auto counts = [](std::vector<std::vector<std::size_t>> const& c) {
      Json out = Json::array();
      for (auto const& row : c) {
        out.push_back(row);
      }
      return out;
    };
    return Json{
        {"n", r.n},
        {"left_unique", {{"law", "x a = y a => x = y"}, {"holds", r.left_unique}}},
        {"right_unique", {{"law", "a x = a y => x = y"}, {"holds", r.right_unique}}},
        {"left_unlimited",
         {{"law", "X a = b solvable"},
          {"solvable", r.left_solvable},
          {"finite_surrogate", true},
          {"counts", counts(r.left_counts)}}},
        {"right_unlimited",
         {{"law", "a X = b solvable"},
          {"solvable", r.right_solvable},
          {"finite_surrogate", true},
          {"counts", counts(r.right_counts)}}},
    };
  }

  inline Json encode(RightGroupDecomposition const& d) {
    return Json{{"group_order", d.group_part.size()},
                {"classes", d.classes},
                {"group_part", encode(d.group_part)},
                {"group_of", d.group_of},
                {"class_of", d.class_of}};
  }

  inline Json encode(MalcevReport const& r) {
    Json violations = Json::array();
    for (auto const& t : r.violations) {
      violations.push_back(Json{{"a", t[0]}, {"b", t[1]}, {"c", t[2]}, {"d", t[3]},
                                {"u", t[4]}, {"v", t[5]}, {"x", t[6]}, {"y", t[7]}});
    }
    return Json{{"condition", "x a = y b, x c = y d, u a = v b => u c = v d"},
                {"systems_checked", r.systems_checked},
                {"violation_count", r.violation_count},
                {"violations", std::move(violations)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and rewriting
  ////////////////////////////////////////////////////////////////////////

  inline Json encode(Presentation const& p, Derivation const& d, Word start) {
    Json steps = Json::array();
    for (auto const& step : d) {
      start = apply_step(p.relations(), start, step);
      steps.push_back(Json{{"pos", step.pos},
                           {"relation", step.relation},
                           {"forward", step.forward},
                           {"word", p.to_string(start)}});
    }
    return steps;
  }

  inline Json encode(Presentation const&        p,
                     EqualityCertificate const& c,
                     Word const&                u) {
    Json out = Json::object();
    if (c.normal_forms) {
      out["normal_forms"] = {p.to_string(c.normal_forms->first),
                             p.to_string(c.normal_forms->second)};
    }
    if (c.derivation) {
      out["derivation"] = encode(p, *c.derivation, u);
    }
    return out;
  }

  inline Json encode(RewriteSystem const& rs) {
    auto const& p     = rs.presentation();
    Json        order = Json::array();
    for (Letter x : p.ordered_alphabet()) {
      order.push_back(p.letter_name(x));
    }
    Json rules = Json::array();
    for (auto const& r : rs.rules()) {
      rules.push_back(Json{{"lhs", p.to_string(r.lhs)}, {"rhs", p.to_string(r.rhs)}});
    }
    return Json{{"status", to_string(rs.status())},
                {"letter_order", std::move(order)},
                {"rule_count", rs.rules().size()},
                {"rules", std::move(rules)}};
  }

  inline Json encode(EmbeddingReport const& r) {
    Json witnesses = Json::array();
    for (auto const& w : r.witnesses) {
      witnesses.push_back(Json{{"u", r.m.to_string(w.u)},
                               {"v", r.m.to_string(w.v)},
                               {"in_m", to_string(w.in_m)},
                               {"in_gm", to_string(w.in_gm)},
                               {"certificate", encode(r.gm, w.certificate, w.u)}});
    }
    Json gm_relations = Json::array();
    for (auto const& rel : r.gm.relations()) {
      gm_relations.push_back(r.gm.to_string(rel.lhs) + " = " + r.gm.to_string(rel.rhs));
    }
    return Json{{"status", to_string(r.status)},
                {"probe_length", r.probe_length},
                {"witnesses", std::move(witnesses)},
                {"budget_spent",
                 {{"elements", r.elements},
                  {"pairs_checked", r.pairs_checked},
                  {"collisions", r.collisions},
                  {"inconclusive", r.inconclusive},
                  {"visited_words", r.visited},
                  {"m_rules", r.m_rules},
                  {"gm_rules", r.gm_rules},
                  {"gm_confluent", r.gm_confluent}}},
                {"gm_relations", std::move(gm_relations)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  inline Json descriptor(PrimeField const& f) {
    return Json{{"p", f.characteristic()}};
  }

  inline Json descriptor(RationalField const&) {
    return Json{{"p", "Q"}};
  }

  inline Json entry(PrimeField const&, std::uint64_t x) {
    return x;
  }

  inline Json entry(RationalField const& f, RationalField::value_type const& x) {
    return f.to_string(x);
  }

  template <Field F>
  Json encode(Rank1Matrix<F> const& m) {
    Json rows = Json::array();
    for (auto const& row : to_dense(m)) {
      Json r = Json::array();
      for (auto const& x : row) {
        r.push_back(entry(m.field(), x));
      }
      rows.push_back(std::move(r));
    }
    return Json{{"field", descriptor(m.field())}, {"matrix", std::move(rows)}};
  }

  inline Json encode(Rank1Universe const& u, bool with_table) {
    auto const& field = u.elements.front().field();
    Json        subgroups = Json::array();
    for (auto const& s : u.subgroups) {
      subgroups.push_back(
          Json{{"a", s.a}, {"b", s.b}, {"order", s.order}, {"isomorphic_to_units", s.isomorphic}});
    }
    Json out{{"field", descriptor(field)},
             {"n", u.elements.front().dimension()},
             {"elements", u.elements.size()},
             {"nonzero", u.nonzero},
             {"idempotents", u.idempotents},
             {"associative", is_associative(u.table)},
             {"subgroups", std::move(subgroups)}};
    if (with_table) {
      Json elements = Json::array();
      for (auto const& m : u.elements) {
        elements.push_back(encode(m)["matrix"]);
      }
      out["matrices"] = std::move(elements);
      out["table"]    = encode(u.table);
    }
    return out;
  }

}  // namespace sushkevich::json

#endif  // SUSHKEVICH_SERIALIZE_HPP_
