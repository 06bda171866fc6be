// Command-line surface for the library: normal forms, word-problem and
// commutation decisions, ribbon/FRZ decisions, the desingularization map and
// its truncated extension, and the exhaustive verification scans.  Decision
// verbs print true/false and use the exit code to signal the boolean:
// 0 = true/success, 1 = decision false or scan violations, 2 = usage or
// parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"
#include "raag/group_ring.hpp"
#include "raag/scans.hpp"
#include "raag/series.hpp"
#include "raag/singular.hpp"
#include "raag/words.hpp"

namespace {

raag::DefiningGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw raag::ParseError("cannot open graph file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return raag::DefiningGraph::parse(buffer.str());
}

int decision(bool value) {
  std::cout << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

bool has_tau(const raag::Word& w) {
  return std::any_of(w.begin(), w.end(), [](const raag::Token& t) {
    return t.kind == raag::TokenKind::tau ||
           t.kind == raag::TokenKind::tau_inv;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation in right-angled Artin groups, trace monoids, and "
      "right-angled singular Artin monoids"};
  app.require_subcommand(1);

  std::string graph_path;
  app.add_option("--graph", graph_path, "graph file (vertices:/edges: lines)")
      ->required();

  std::string word1, word2, s_name, t_name, family = "sigma";
  long long k_flag = 1;
  long cutoff = 0;
  unsigned max_len = 0, max_syll = 0, max_l = 0, max_p = 0;
  long max_exp = 0;

  auto* normalize = app.add_subcommand(
      "normalize", "print the normal form of a word (group or singular)");
  normalize->add_option("word", word1)->required();

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("word1", word1)->required();
  eq->add_option("word2", word2)->required();

  auto* commute =
      app.add_subcommand("commute", "decide whether two words commute");
  commute->add_option("word1", word1)->required();
  commute->add_option("word2", word2)->required();

  auto* theta = app.add_subcommand(
      "theta", "print the group image of a word (tau maps to sigma)");
  theta->add_option("word", word1)->required();

  auto* ord =
      app.add_subcommand("ord", "print the number of singular letters");
  ord->add_option("word", word1)->required();

  auto* eta = app.add_subcommand(
      "eta", "print the group-ring image under desingularization");
  eta->add_option("word", word1)->required();

  auto* eta_trunc = app.add_subcommand(
      "eta-trunc",
      "print the truncated series image of an extended word (tokens may "
      "include !v)");
  eta_trunc->add_option("--cutoff", cutoff, "highest stratum to compute")
      ->required();
  eta_trunc->add_option("word", word1)->required();

  auto* ribbon = app.add_subcommand(
      "ribbon", "decide whether a group word conjugates sigma_s to sigma_t");
  ribbon->add_option("--s", s_name)->required();
  ribbon->add_option("--t", t_name)->required();
  ribbon->add_option("word", word1)->required();

  auto* frz = app.add_subcommand(
      "frz", "decide alpha . g_s^k == g_t^k . alpha for g = sigma or tau");
  frz->add_option("--family", family)
      ->check(CLI::IsMember({"sigma", "tau"}));
  frz->add_option("--s", s_name)->required();
  frz->add_option("--t", t_name)->required();
  frz->add_option("--k", k_flag)->required();
  frz->add_option("word", word1)->required();

  auto* birman = app.add_subcommand(
      "birman-scan",
      "enumerate all words up to a length and count desingularization "
      "collisions among distinct elements");
  birman->add_option("--max-len", max_len)->required();

  auto* orbit = app.add_subcommand(
      "nf-orbit-check",
      "verify normal-form uniqueness against the elementary-operation "
      "closure of every bounded expression, for all four weight kinds");
  orbit->add_option("--max-syll", max_syll)->required();
  orbit->add_option("--max-exp", max_exp)->required();

  auto* lemma42 = app.add_subcommand(
      "lemma42-scan",
      "verify over all trace alphabets of up to 4 letters that v^p u == u "
      "w^p forces v == w and commutation with u");
  lemma42->add_option("--max-l", max_l)->required();
  lemma42->add_option("--max-p", max_p)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const raag::DefiningGraph graph = load_graph(graph_path);
    const raag::SingularMonoid monoid(graph);
    const raag::GroupRing ring(graph);

    if (normalize->parsed()) {
      const raag::Word w = raag::parse_word(graph, word1);
      const raag::SingularElement x = monoid.evaluate(w);
      if (has_tau(w)) {
        std::cout << monoid.to_text(x) << "\n";
      } else {
        std::cout << raag::to_text(graph, x.group) << "\n";
      }
      return 0;
    }
    if (eq->parsed()) {
      return decision(monoid.word_equal(raag::parse_word(graph, word1),
                                        raag::parse_word(graph, word2)));
    }
    if (commute->parsed()) {
      raag::Word ab = raag::parse_word(graph, word1);
      raag::Word b = raag::parse_word(graph, word2);
      raag::Word ba = b;
      ba.insert(ba.end(), ab.begin(), ab.end());
      ab.insert(ab.end(), b.begin(), b.end());
      return decision(monoid.word_equal(ab, ba));
    }
    if (theta->parsed()) {
      const auto x = monoid.evaluate(raag::parse_word(graph, word1));
      std::cout << raag::to_text(graph, monoid.theta(x)) << "\n";
      return 0;
    }
    if (ord->parsed()) {
      const auto x = monoid.evaluate(raag::parse_word(graph, word1));
      std::cout << raag::SingularMonoid::ord(x) << "\n";
      return 0;
    }
    if (eta->parsed()) {
      const auto x = monoid.evaluate(raag::parse_word(graph, word1));
      std::cout << ring.to_text(ring.eta(x)) << "\n";
      return 0;
    }
    if (eta_trunc->parsed()) {
      const raag::Word w = raag::parse_extended_word(graph, word1);
      std::cout << raag::to_text(ring, raag::eta_truncated(ring, w, cutoff));
      return 0;
    }
    if (ribbon->parsed()) {
      const raag::Word w = raag::parse_word(graph, word1);
      if (has_tau(w)) {
        throw raag::ParseError("ribbon expects a group word (no ~ tokens)");
      }
      return decision(monoid.is_ribbon(monoid.evaluate(w).group,
                                       graph.require(s_name),
                                       graph.require(t_name)));
    }
    if (frz->parsed()) {
      const auto fam = family == "sigma" ? raag::FrzFamily::sigma
                                         : raag::FrzFamily::tau;
      return decision(monoid.frz_decide(fam, raag::parse_word(graph, word1),
                                        graph.require(s_name),
                                        graph.require(t_name), k_flag));
    }
    if (birman->parsed()) {
      const raag::BirmanReport report = raag::birman_scan(graph, max_len);
      std::cout << "words: " << report.words << "\n"
                << "distinct elements: " << report.distinct_elements << "\n"
                << "eta collisions: " << report.collisions << "\n";
      return report.ok() ? 0 : 1;
    }
    if (orbit->parsed()) {
      const raag::OrbitCheckReport report =
          raag::orbit_check(graph, max_syll, max_exp);
      for (const auto& kind : report.kinds) {
        std::cout << kind.kind << ": expressions=" << kind.expressions
                  << " orbits=" << kind.orbits
                  << " nf_mismatches=" << kind.nf_mismatches
                  << " min_length_mismatches=" << kind.min_length_mismatches
                  << " support_order_failures=" << kind.support_order_failures
                  << " connectivity_failures=" << kind.connectivity_failures
                  << "\n";
      }
      return report.ok() ? 0 : 1;
    }
    if (lemma42->parsed()) {
      const raag::PowerShuffleScanReport report =
          raag::power_shuffle_scan(4, max_l, max_p);
      std::cout << "instances: " << report.instances << "\n"
                << "hypotheses held: " << report.hypotheses_held << "\n"
                << "violations: " << report.violations << "\n";
      return report.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
