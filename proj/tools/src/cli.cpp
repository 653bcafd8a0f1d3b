#include "whitefact/cli.hpp"

#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "whitefact/explorer.hpp"
#include "whitefact/factorization.hpp"
#include "whitefact/io.hpp"
#include "whitefact/reduction.hpp"
#include "whitefact/selftest.hpp"
#include "whitefact/tree.hpp"

namespace whitefact {

namespace {

enum class Format { json, dot, text };

struct RunConfig {
  std::string system;  // file path or inline JSON; K3 when empty
  Format format = Format::json;
  std::uint64_t seed = 0;
};

SystemRef load_system(const RunConfig& cfg) {
  if (cfg.system.empty()) return cyclic_system({2, 2, 2});
  return system_from_json(load_json(cfg.system));
}

void require_format(const RunConfig& cfg, const std::string& cmd, bool dot_ok) {
  if (cfg.format == Format::dot && !dot_ok)
    throw CLI::ValidationError("--format", "dot output is not available for " + cmd);
}

std::string text_vertex_list(const std::vector<TreeVertex>& path) {
  std::string out;
  for (const auto& v : path) out += (out.empty() ? "" : " ") + vertex_name(v);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free products, their Bass-Serre trees, and factorization of pure symmetric "
               "automorphisms into Whitehead automorphisms.",
               "whitefact"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"dot", Format::dot}, {"text", Format::text}};
  app.add_option("--system", cfg.system, "factor system (JSON file or inline JSON); default Z/2*Z/2*Z/2");
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|dot|text (default json)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  std::function<void()> action;

  std::string word_arg, p_arg, q_arg, alpha_arg, at_arg, auto_arg, fact_arg, center_arg = "U:[]";
  std::size_t max_volume = 0, radius = 1;
  std::vector<int> criteria;

  auto* normalize = app.add_subcommand("normalize", "reduce a word to normal form");
  normalize->add_option("word", word_arg, "word JSON")->required();
  normalize->callback([&] {
    action = [&] {
      require_format(cfg, "normalize", false);
      const Word w = word_from_json(load_system(cfg), load_json(word_arg));
      out << (cfg.format == Format::text ? to_string(w) : word_to_json(w).dump()) << "\n";
    };
  });

  auto* dist = app.add_subcommand("distance", "tree distance between two vertices");
  dist->add_option("p", p_arg, "vertex, e.g. U:[] or C3:[[2,1]]")->required();
  dist->add_option("q", q_arg, "vertex")->required();
  dist->callback([&] {
    action = [&] {
      require_format(cfg, "distance", false);
      const SystemRef s = load_system(cfg);
      out << distance(vertex_from_string(s, p_arg), vertex_from_string(s, q_arg)) << "\n";
    };
  });

  auto* geo = app.add_subcommand("geodesic", "tree geodesic between two vertices");
  geo->add_option("p", p_arg, "vertex")->required();
  geo->add_option("q", q_arg, "vertex")->required();
  geo->callback([&] {
    action = [&] {
      const SystemRef s = load_system(cfg);
      const auto path = geodesic(vertex_from_string(s, p_arg), vertex_from_string(s, q_arg));
      if (cfg.format == Format::text) {
        out << text_vertex_list(path) << "\n";
      } else if (cfg.format == Format::dot) {
        out << "graph geodesic {\n";
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
          out << "  " << json(vertex_name(path[k])).dump() << " -- "
              << json(vertex_name(path[k + 1])).dump() << ";\n";
        out << "}\n";
      } else {
        json names = json::array();
        for (const auto& v : path) names.push_back(vertex_name(v));
        out << names.dump() << "\n";
      }
    };
  });

  auto* ball = app.add_subcommand("ball", "metric ball in the tree (finite factors only)");
  ball->add_option("center", center_arg, "center vertex")->capture_default_str();
  ball->add_option("--radius", radius, "radius")->capture_default_str();
  ball->callback([&] {
    action = [&] {
      const Ball b = bfs_ball(vertex_from_string(load_system(cfg), center_arg), radius);
      if (cfg.format == Format::dot)
        out << ball_to_dot(b);
      else if (cfg.format == Format::text)
        out << b.vertices.size() << " vertices\n";
      else
        out << ball_to_json(b).dump() << "\n";
    };
  });

  auto* vol = app.add_subcommand("volume", "volume of an alpha labelling");
  vol->add_option("alpha", alpha_arg, "alpha labelling JSON")->required();
  vol->add_option("--at", at_arg, "basepoint word x (default 1)");
  vol->callback([&] {
    action = [&] {
      require_format(cfg, "volume", false);
      const SystemRef s = load_system(cfg);
      const AlphaLabel l = alpha_from_json(s, load_json(alpha_arg));
      const Word x = at_arg.empty() ? Word(s) : word_from_json(s, load_json(at_arg));
      out << volume(l, x) << "\n";
    };
  });

  auto* red = app.add_subcommand("reduce", "reduce an alpha labelling to the base class");
  red->add_option("alpha", alpha_arg, "alpha labelling JSON")->required();
  red->callback([&] {
    action = [&] {
      require_format(cfg, "reduce", false);
      const SystemRef s = load_system(cfg);
      const Reduction r = reduce_to_base(alpha_from_json(s, load_json(alpha_arg)));
      if (cfg.format == Format::text) {
        for (const auto& m : r.moves)
          out << "i=" << m.i << " j=" << m.j << " a=" << s->factor(m.a.factor).element_name(m.a)
              << " volume " << m.vol_before << " -> " << m.vol_after << "\n";
        out << "final " << alpha_to_json(r.final).dump() << "\n";
      } else {
        out << moves_to_json(r.moves).dump() << "\n";
      }
    };
  });

  auto* fac = app.add_subcommand("factorize", "factor a pure symmetric automorphism");
  fac->add_option("auto", auto_arg, "automorphism JSON")->required();
  fac->callback([&] {
    action = [&] {
      require_format(cfg, "factorize", false);
      const SystemRef s = load_system(cfg);
      const Factorization f = factorize(auto_from_json(s, load_json(auto_arg)));
      const json j = factorization_to_json(*s, f);
      out << (cfg.format == Format::text ? j.dump(2) : j.dump()) << "\n";
    };
  });

  auto* ver = app.add_subcommand("verify", "check a factorization against an automorphism");
  ver->add_option("auto", auto_arg, "automorphism JSON")->required();
  ver->add_option("factorization", fact_arg, "factorization JSON")->required();
  ver->callback([&] {
    action = [&] {
      require_format(cfg, "verify", false);
      const SystemRef s = load_system(cfg);
      const PureSymmetricAuto psi = auto_from_json(s, load_json(auto_arg));
      const Factorization f = factorization_from_json(s, load_json(fact_arg));
      if (!verify_factorization(psi, f))
        throw DomainError("factorization does not compose to the automorphism");
      out << "OK\n";
    };
  });

  auto* exp = app.add_subcommand("explore", "enumerate and check a volume-bounded ball of classes");
  exp->add_option("--max-volume", max_volume, "volume bound")->required();
  exp->callback([&] {
    action = [&] {
      const SnBall b = enumerate_ball(load_system(cfg), max_volume);
      const BallReport report = check_ball(b);
      if (cfg.format == Format::dot) {
        out << sn_ball_to_dot(b);
      } else if (cfg.format == Format::text) {
        out << b.alpha_classes.size() << " alpha classes, " << b.a_classes.size()
            << " A classes, " << b.edges.size() << " edges (" << b.candidates << " candidates, "
            << b.non_splitting << " not splittings)\n";
        out << (report.ok() ? "all checks pass" : "checks failed") << "\n";
        for (const auto& f : report.failures) out << "  " << f << "\n";
      } else {
        json j = sn_ball_to_json(b);
        j["check"] = {{"ok", report.ok()}, {"failures", report.failures}};
        out << j.dump() << "\n";
      }
      if (!report.ok()) throw DomainError("ball check failed");
    };
  });

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--criterion", criteria, "run only these criteria (1-8)");
  self->callback([&] {
    action = [&] {
      if (criteria.empty())
        for (int id = 1; id <= kCriterionCount; ++id) criteria.push_back(id);
      bool all = true;
      for (int id : criteria) {
        const CriterionResult r = run_criterion(id, cfg.seed);
        out << format_result(r) << std::endl;
        all = all && r.passed();
      }
      if (!all) throw DomainError("acceptance suite failed");
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace whitefact
