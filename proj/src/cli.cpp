#include "semiid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiid/any_semiring.hpp"
#include "semiid/checker.hpp"
#include "semiid/monoid.hpp"
#include "semiid/polynomial.hpp"
#include "semiid/report.hpp"
#include "semiid/verify/criteria.hpp"

namespace semiid {

  namespace {
    struct RunConfig {
      std::string   command;
      std::string   monoid   = "u";
      std::size_t   n        = 2;
      std::string   semiring = "bool";
      std::string   identity;
      std::string   family;
      std::string   s_sample;
      std::string   index_range = "full";
      std::size_t   element_cap = FamilyOptions().element_cap;
      std::uint64_t seed        = 0;
      std::uint64_t budget      = CheckOptions().sample_budget;
      std::uint64_t spot_checks = CheckOptions().rn_spot_checks;
      std::size_t   max_alphabet = CheckOptions().max_alphabet;
      unsigned      jobs        = 1;
      std::string   format      = "json";
      std::string   output;
      bool          stable = false;
      std::string   u;
      std::string   w;
      std::string   rho;
      std::string   suite;
    };

    std::uint64_t default_seed() {
      char const* env = std::getenv("SEMIID_SEED");
      if (env == nullptr || *env == '\0') {
        return 0;
      }
      try {
        std::size_t pos  = 0;
        auto const  seed = std::stoull(env, &pos);
        if (env[pos] != '\0') {
          throw std::invalid_argument(env);
        }
        return seed;
      } catch (std::exception const&) {
        throw ParseError(std::string("SEMIID_SEED is not an unsigned integer: '") + env
                         + "'");
      }
    }

    CheckOptions check_options(RunConfig const& cfg) {
      CheckOptions opts;
      opts.seed           = cfg.seed;
      opts.sample_budget  = cfg.budget;
      opts.max_alphabet   = cfg.max_alphabet;
      opts.rn_spot_checks = cfg.spot_checks;
      return opts;
    }

    nlohmann::json echo(RunConfig const& cfg) {
      nlohmann::json j = {{"command", cfg.command},
                          {"seed", cfg.seed},
                          {"jobs", cfg.jobs},
                          {"format", cfg.format},
                          {"stable", cfg.stable}};
      if (cfg.command == "check" || cfg.command == "witness") {
        j["monoid"]           = cfg.monoid;
        j["n"]                = cfg.n;
        j["semiring"]         = cfg.semiring;
        j["identity"]         = cfg.identity;
        j["sample_budget"]    = cfg.budget;
        j["exhaustive_limit"] = CheckOptions().exhaustive_limit;
        j["max_alphabet"]     = cfg.max_alphabet;
        j["rn_spot_checks"]   = cfg.spot_checks;
      } else if (cfg.command == "closure") {
        j["family"]      = cfg.family;
        j["n"]           = cfg.n;
        j["semiring"]    = cfg.semiring;
        j["s_sample"]    = cfg.s_sample;
        j["element_cap"] = cfg.element_cap;
        j["index_range"] = cfg.index_range;
      }
      return j;
    }

    template <Semiring S>
    Verdict<S> dispatch_check(MonoidKind kind, Identity const& id, std::size_t n,
                              S const& s, CheckOptions const& opts) {
      switch (kind) {
        case MonoidKind::upper_triangular:
          return check_UT(id, n, s, opts);
        case MonoidKind::unitriangular:
          return check_Un(id, n, s, opts);
        case MonoidKind::reflexive:
          break;
      }
      return check_Rn(id, n, s, opts);
    }

    int exit_for(Outcome o) {
      return o == Outcome::fails ? exit_fails : exit_ok;
    }

    int do_check(RunConfig const& cfg, std::ostream& out) {
      auto const kind = parse_monoid_kind(cfg.monoid);
      auto const id   = Identity::parse(cfg.identity);
      auto const sr   = parse_semiring(cfg.semiring);
      auto const opts = check_options(cfg);
      return std::visit(
          [&](auto const& s) {
            auto const t0 = std::chrono::steady_clock::now();
            auto const v  = dispatch_check(kind, id, cfg.n, s, opts);
            auto const ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            if (cfg.command == "witness") {
              if (v.witness) {
                out << format_witness(s, *v.witness);
              } else {
                out << "no witness: " << cfg.identity << " " << to_string(v.outcome)
                    << " (" << v.criterion << ")\n";
              }
              return exit_for(v.outcome);
            }
            if (cfg.format == "text") {
              out << to_string(v.outcome) << ": " << id.str() << " in " << cfg.monoid << "_"
                  << cfg.n << "(" << s.name() << ") by " << v.criterion << "\n";
              if (v.witness) {
                out << format_witness(s, *v.witness);
              }
              for (auto const& u : v.inconclusive) {
                out << "inconclusive u: '" << u.str() << "'\n";
              }
              return exit_for(v.outcome);
            }
            ReportContext ctx{id, kind, cfg.n, s.name(), opts, echo(cfg), std::nullopt};
            if (!cfg.stable) {
              ctx.timing_ms = ms;
            }
            out << check_report(s, v, ctx).dump(2) << "\n";
            return exit_for(v.outcome);
          },
          sr);
    }

    template <Semiring S>
    std::vector<value_t<S>> scalar_sample(S const& s, std::string const& text) {
      if (text.empty()) {
        return s.default_scalars();
      }
      std::vector<value_t<S>> out;
      std::stringstream       in(text);
      std::string             item;
      while (std::getline(in, item, ',')) {
        out.push_back(s.parse(item));
      }
      return out;
    }

    int do_closure(RunConfig const& cfg, std::ostream& out) {
      auto const    f = parse_family(cfg.family);
      FamilyOptions fo;
      fo.element_cap = cfg.element_cap;
      if (cfg.index_range == "full") {
        fo.index_range = IndexRange::full;
      } else if (cfg.index_range == "truncated") {
        fo.index_range = IndexRange::truncated;
      } else {
        throw ParseError("unknown index range '" + cfg.index_range
                         + "', expected full or truncated");
      }
      auto const sr = parse_semiring(cfg.semiring);
      return std::visit(
          [&](auto const& s) {
            using S = std::decay_t<decltype(s)>;
            ClosureResult<S> M(s);
            if constexpr (std::is_same_v<S, Boolean>) {
              M = is_generalized(f) ? family(s, f, cfg.n, scalar_sample(s, cfg.s_sample), fo)
                                    : boolean_family(f, cfg.n, fo);
            } else {
              if (f == Family::reflexive || f == Family::convex) {
                throw PreconditionError(to_string(f) + " is defined over bool only");
              }
              M = family(s, f, cfg.n, scalar_sample(s, cfg.s_sample), fo);
            }
            if (cfg.format == "json") {
              out << closure_report(M, cfg.family, echo(cfg)).dump(2) << "\n";
            } else {
              out << format_closure(M, cfg.family);
            }
            return int(exit_ok);
          },
          sr);
    }

    int do_poly(RunConfig const& cfg, std::ostream& out) {
      Word const u(cfg.u);
      Word const w(cfg.w);
      if (cfg.rho.empty()) {
        out << build_f_canonical(u, w).str() << "\n";
        return exit_ok;
      }
      std::vector<std::size_t> rho;
      std::stringstream        in(cfg.rho);
      std::string              item;
      while (std::getline(in, item, ',')) {
        try {
          rho.push_back(std::stoul(item));
        } catch (std::exception const&) {
          throw ParseError("--rho expects comma-separated vertices, got '" + cfg.rho + "'");
        }
      }
      std::size_t const n = std::max<std::size_t>(
          cfg.n, rho.empty() ? 1 : *std::max_element(rho.begin(), rho.end()));
      out << build_f(u, rho, w, n).str() << "\n";
      return exit_ok;
    }

    int do_verify(RunConfig const& cfg, std::ostream& out) {
      verify::VerifyOptions opts;
      opts.seed = cfg.seed;
      std::vector<std::string> suites;
      if (cfg.suite == "all") {
        suites = verify::suite_names();
      } else {
        suites = {cfg.suite};
      }
      bool ok = true;
      for (auto const& name : suites) {
        out << "suite " << name << "\n";
        for (auto const& r : verify::run_suite(name, opts)) {
          out << verify::format_result(r);
          ok = ok && r.passed();
        }
      }
      return ok ? exit_ok : exit_fails;
    }

    int execute(RunConfig const& cfg, std::ostream& out) {
      if (cfg.command == "check" || cfg.command == "witness") {
        return do_check(cfg, out);
      } else if (cfg.command == "closure") {
        return do_closure(cfg, out);
      } else if (cfg.command == "poly") {
        return do_poly(cfg, out);
      }
      return do_verify(cfg, out);
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
      cfg.seed = default_seed();
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }

    CLI::App app{"Semigroup identities in matrix monoids over semirings", "semiid"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto common = [&](CLI::App* sub) {
      sub->add_option("--seed", cfg.seed, "random seed (default: $SEMIID_SEED or 0)");
      sub->add_option("--jobs", cfg.jobs, "worker bound; results do not depend on it")
          ->check(CLI::Range(1u, 1024u));
      sub->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
    };

    auto add_check_options = [&](CLI::App* sub) {
      sub->add_option("--monoid", cfg.monoid, "ut, u or r")
          ->required()
          ->check(CLI::IsMember({"ut", "u", "r"}));
      sub->add_option("--n", cfg.n, "matrix dimension")->required();
      sub->add_option("--semiring", cfg.semiring, "semiring spec");
      sub->add_option("--budget", cfg.budget, "samples per inconclusive polynomial pair");
      sub->add_option("--spot-checks", cfg.spot_checks, "random morphisms confirming an R_n Holds");
      sub->add_option("--max-alphabet", cfg.max_alphabet, "largest accepted alphabet");
      sub->add_option("identity", cfg.identity, "<lhs>=<rhs>")->required();
      common(sub);
    };

    auto* check = app.add_subcommand("check", "decide an identity, JSON report");
    add_check_options(check);
    check->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_flag("--stable", cfg.stable, "omit timing for byte-identical output");

    auto* witness = app.add_subcommand("witness", "print a falsifying morphism");
    add_check_options(witness);

    auto* closure = app.add_subcommand("closure", "enumerate a monoid family");
    closure->add_option("--family", cfg.family, "family name")->required();
    closure->add_option("--n", cfg.n, "matrix dimension")->required();
    closure->add_option("--semiring", cfg.semiring, "semiring spec");
    closure->add_option("--s-sample", cfg.s_sample, "comma-separated scalars");
    closure->add_option("--cap", cfg.element_cap, "element cap");
    closure->add_option("--index-range", cfg.index_range, "full or truncated")
        ->check(CLI::IsMember({"full", "truncated"}));
    closure->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"json", "text"}));
    common(closure);

    auto* poly = app.add_subcommand("poly", "print f_u^w");
    poly->add_option("--u", cfg.u, "the word u (may be empty)");
    poly->add_option("--w", cfg.w, "the word w")->required();
    poly->add_option("--rho", cfg.rho, "comma-separated path (default 1..|u|+1)");
    poly->add_option("--n", cfg.n, "dimension bound for --rho");
    common(poly);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    auto  suites = verify::suite_names();
    suites.push_back("all");
    verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suites));
    common(verify);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "closure" && closure->count("--format") == 0) {
      cfg.format = "text";
    }

    try {
      if (cfg.output.empty()) {
        return execute(cfg, out);
      }
      std::ofstream file(cfg.output);
      if (!file) {
        err << "error: cannot open " << cfg.output << "\n";
        return exit_usage;
      }
      return execute(cfg, file);
    } catch (InconsistencyError const& e) {
      err << "internal inconsistency: " << e.what() << "\n";
      return exit_inconsistent;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
    } catch (UnsupportedStructure const& e) {
      err << "unsupported: " << e.what() << "\n";
    } catch (BudgetExceeded const& e) {
      err << "cap exceeded: " << e.what() << "\n";
    } catch (PreconditionError const& e) {
      err << "invalid input: " << e.what() << "\n";
    } catch (InstanceMismatch const& e) {
      err << "instance mismatch: " << e.what() << "\n";
    }
    return exit_usage;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) {
      args.emplace_back(argv[k]);
    }
    return run(args, out, err);
  }

}  // namespace semiid
