#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "semiid/checker.hpp"
#include "semiid/monoid.hpp"

namespace semiid {

  inline constexpr char const* check_report_schema   = "semiid.check-report/1";
  inline constexpr char const* closure_report_schema = "semiid.closure-report/1";

  enum class MonoidKind : std::uint8_t { upper_triangular, unitriangular, reflexive };

  MonoidKind  parse_monoid_kind(std::string const& text);
  std::string to_string(MonoidKind k);

  struct ReportContext {
    Identity       identity;
    MonoidKind     kind = MonoidKind::unitriangular;
    std::size_t    n    = 2;
    std::string    semiring;
    CheckOptions   options;
    nlohmann::json config = nlohmann::json::object();
    // Omitted when absent, for byte-stable output.
    std::optional<double> timing_ms;
  };

  nlohmann::json to_json(Evidence const& e);

  template <Semiring S>
  nlohmann::json to_json(S const& s, Witness<S> const& w) {
    nlohmann::json images = nlohmann::json::object();
    for (auto const& [c, A] : w.morphism.images) {
      images[std::string(1, c)] = format_matrix(s, A);
    }
    return {{"entry", {w.row, w.col}},
            {"images", images},
            {"lhs_image", format_matrix(s, w.lhs_image)},
            {"rhs_image", format_matrix(s, w.rhs_image)}};
  }

  template <Semiring S>
  nlohmann::json to_json(S const& s, Verdict<S> const& v) {
    nlohmann::json evidence = nlohmann::json::array();
    for (auto const& e : v.evidence) {
      evidence.push_back(to_json(e));
    }
    nlohmann::json inconclusive = nlohmann::json::array();
    for (auto const& u : v.inconclusive) {
      inconclusive.push_back(u.str());
    }
    return {{"outcome", to_string(v.outcome)},
            {"criterion", v.criterion},
            {"evidence", evidence},
            {"witness", v.witness ? to_json(s, *v.witness) : nlohmann::json()},
            {"inconclusive", inconclusive},
            {"spot_checks", v.spot_checks}};
  }

  template <Semiring S>
  nlohmann::json check_report(S const& s, Verdict<S> const& v, ReportContext const& ctx) {
    nlohmann::json examined = nlohmann::json::array();
    for (auto const& e : v.evidence) {
      examined.push_back(e.u.str());
    }
    nlohmann::json report = {
        {"schema", check_report_schema},
        {"identity", ctx.identity.str()},
        {"balanced", is_balanced(ctx.identity)},
        {"monoid", {{"kind", to_string(ctx.kind)}, {"n", ctx.n}, {"semiring", ctx.semiring}}},
        {"verdict", to_json(s, v)},
        {"u_words_examined", examined},
        {"seed", ctx.options.seed},
        {"config", ctx.config}};
    if (ctx.timing_ms) {
      report["timing_ms"] = *ctx.timing_ms;
    }
    return report;
  }

  template <Semiring S>
  nlohmann::json closure_report(ClosureResult<S> const& M,
                                std::string const&      family_name,
                                nlohmann::json const&   config) {
    nlohmann::json elements = nlohmann::json::array();
    for (std::uint32_t k = 0; k < M.size(); ++k) {
      elements.push_back({{"matrix", format_matrix(M.semiring, M.elements[k])},
                          {"word", M.word_label(k)}});
    }
    return {{"schema", closure_report_schema},
            {"family", family_name},
            {"n", M.n},
            {"semiring", M.semiring.name()},
            {"count", M.size()},
            {"generators", M.generator_labels},
            {"elements", elements},
            {"config", config}};
  }

  // Human-oriented rendering; not stability-guaranteed.
  template <Semiring S>
  std::string format_witness(S const& s, Witness<S> const& w) {
    std::string out;
    for (auto const& [c, A] : w.morphism.images) {
      out += std::string(1, c) + ": " + format_matrix(s, A) + "\n";
    }
    out += "entry: " + std::to_string(w.row) + " " + std::to_string(w.col) + "\n";
    out += "lhs: " + format_matrix(s, w.lhs_image) + "\n";
    out += "rhs: " + format_matrix(s, w.rhs_image) + "\n";
    return out;
  }

}  // namespace semiid
