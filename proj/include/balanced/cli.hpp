#pragma once

// The `balanced` command-line driver. run() is the whole program minus the
// process boundary, so tests call it directly.
//
// Exit codes: 0 success, 1 a verification reported failures, 2 usage or
// parse error, 3 a search limit was exceeded, 4 a domain error.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "balanced/equivalence.hpp"
#include "balanced/errors.hpp"
#include "balanced/generators.hpp"
#include "balanced/graph.hpp"
#include "balanced/primes.hpp"
#include "balanced/reduction.hpp"
#include "balanced/serialize.hpp"
#include "balanced/word.hpp"

namespace balanced::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kLimit = 3,
  kDomain = 4,
};

// Usage problems detected after CLI11 has accepted the arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline PrimeKind parse_kind(const std::string& s) {
  return s == "upper" ? PrimeKind::Upper : PrimeKind::Lower;
}

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + path);
  os << text;
}

inline nlohmann::json pair_list(const std::vector<std::pair<Word, Word>>& ps) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [x, y] : ps) a.push_back({x.str(), y.str()});
  return a;
}

struct Options {
  std::string word;
  std::string other;
  bool trace = false;
  bool json = false;
  bool minimality = false;
  std::string dot;
  std::size_t limit = kDefaultClassLimit;
  std::size_t max_len = 0;
  std::string kind = "upper";
  std::size_t hypercube = 0;
  std::string edges;
  std::string base;
  std::size_t max_word_len = 4;
};

inline int cmd_reduce(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.word);
  if (o.trace) {
    for (const auto& x : reduction_trace(w)) out << x << '\n';
  } else {
    out << reduce(w) << '\n';
  }
  return kOk;
}

inline int cmd_equiv(const Options& o, std::ostream& out) {
  const Word x = Word::parse(o.word);
  const Word y = Word::parse(o.other);
  out << (are_equivalent(x, y, o.limit) ? "equivalent" : "not equivalent") << '\n';
  return kOk;
}

inline int cmd_class(const Options& o, std::ostream& out) {
  if (o.json && o.dot == "-") throw UsageError("--json and --dot - both write to standard output");
  const auto c = equivalence_class(Word::parse(o.word), o.limit);
  if (!o.dot.empty()) {
    const std::string dot = swap_graph_dot(c);
    if (o.dot == "-") {
      out << dot;
      return kOk;
    }
    write_file(o.dot, dot);
  }
  if (o.json) {
    print_json(out, c);
  } else {
    for (const auto& m : c.members) out << m << '\n';
  }
  return kOk;
}

inline int cmd_primes(const Options& o, std::ostream& out) {
  const auto ps = enumerate_primes(parse_kind(o.kind), o.max_len);
  if (o.json) {
    print_json(out, ps);
  } else {
    for (const auto& p : ps) out << p << '\n';
  }
  return kOk;
}

inline int cmd_classes(const Options& o, std::ostream& out) {
  const auto table = prime_classes(parse_kind(o.kind), o.max_len);
  if (o.json) {
    print_json(out, table);
    return kOk;
  }
  for (const auto& c : table.classes) {
    for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? ", " : "") << c.members[i];
    out << '\n';
  }
  return kOk;
}

inline int cmd_gens(const Options& o, std::ostream& out) {
  const auto pairs = minimal_generating_pairs(o.max_len);
  if (o.json) {
    print_json(out, pairs);
  } else {
    for (const auto& p : pairs) out << p.u << ' ' << p.d << '\n';
  }
  return kOk;
}

// Generation: every U D - D U with l(U), l(D) <= max_len is reachable using
// the representative pairs of length <= max_len. Minimality: no single pair
// can be dropped.
inline int cmd_verify_gens(const Options& o, std::ostream& out) {
  const auto pairs = minimal_generating_pairs(o.max_len);
  const auto ups = enumerate_primes(PrimeKind::Upper, o.max_len);
  const auto downs = enumerate_primes(PrimeKind::Lower, o.max_len);

  std::vector<std::pair<Word, Word>> targets;
  for (const auto& u : ups)
    for (const auto& d : downs) targets.emplace_back(u, d);
  const auto ok = balanced::detail::parallel_map(targets.size(), [&](std::size_t i) {
    return verify_generation(targets[i].first, targets[i].second, pairs, o.limit) ? 1 : 0;
  });
  std::vector<std::pair<Word, Word>> not_generated;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!ok[i]) not_generated.push_back(targets[i]);

  std::vector<std::pair<Word, Word>> removable;
  if (o.minimality) {
    for (const auto& [p, still] : verify_minimality(pairs, o.limit))
      if (still) removable.emplace_back(p.u, p.d);
  }

  if (o.json) {
    nlohmann::json j{{"max_len", o.max_len},
                     {"pairs", pairs.size()},
                     {"generation",
                      {{"checked", targets.size()}, {"not_generated", pair_list(not_generated)}}}};
    if (o.minimality)
      j["minimality"] = {{"checked", pairs.size()}, {"removable", pair_list(removable)}};
    print_json(out, j);
  } else {
    out << "pairs: " << pairs.size() << '\n';
    out << "generation: " << targets.size() - not_generated.size() << '/' << targets.size()
        << " commutators generated\n";
    for (const auto& [u, d] : not_generated) out << "  not generated: " << u << ' ' << d << '\n';
    if (o.minimality) {
      out << "minimality: " << pairs.size() - removable.size() << '/' << pairs.size()
          << " pairs essential\n";
      for (const auto& [u, d] : removable) out << "  removable: " << u << ' ' << d << '\n';
    }
  }
  return not_generated.empty() && removable.empty() ? kOk : kVerificationFailed;
}

inline int cmd_graph_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const GraphModel g =
      o.hypercube ? hypercube(o.hypercube) : load_graph(read_file(o.edges), o.base);

  std::optional<IntersectionTable> table;
  std::string not_dr;
  try {
    table = intersection_numbers(g);
  } catch (const NotDistanceRegular& e) {
    not_dr = e.what();
  }
  const auto lr = raising_lowering(g);
  const bool projections_ok = projections_consistent(projections(g));
  const auto report = check_thin_commutation(g, o.max_word_len);

  std::vector<std::size_t> layer_sizes;
  for (const auto& l : g.layers()) layer_sizes.push_back(l.size());

  if (o.json) {
    nlohmann::json j{{"vertices", g.size()},
                     {"diameter", g.diameter()},
                     {"layer_sizes", layer_sizes},
                     {"intersection_numbers", nullptr},
                     {"a_eq_r_plus_l", lr.adjacency_splits()},
                     {"projections_ok", projections_ok},
                     {"max_word_len", o.max_word_len},
                     {"commutation_violations", pair_list(report.violations)}};
    if (table) j["intersection_numbers"] = *table;
    print_json(out, j);
  } else {
    out << "vertices: " << g.size() << '\n';
    out << "diameter: " << g.diameter() << '\n';
    out << "layer sizes:";
    for (auto s : layer_sizes) out << ' ' << s;
    out << '\n';
    out << "distance-regular: " << (table ? "yes" : "no") << '\n';
    out << "A = R + L: " << (lr.adjacency_splits() ? "yes" : "no") << '\n';
    out << "projections: " << (projections_ok ? "ok" : "inconsistent") << '\n';
    out << "commutation violations (words up to length " << o.max_word_len
        << "): " << report.violations.size() << '\n';
    for (const auto& [f, h] : report.violations) out << "  " << f << ' ' << h << '\n';
  }
  if (!table) {
    err << "error: " << not_dr << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Word calculus of the balanced algebra", "balanced"};
  app.require_subcommand(1);

  auto word_arg = [&](CLI::App* sub, std::string& dest, const char* name) {
    sub->add_option(name, dest, "word over {L,R}")->required();
  };
  auto limit_opt = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "maximum equivalence class size")
        ->check(CLI::PositiveNumber);
  };
  auto max_len_opt = [&](CLI::App* sub) {
    sub->add_option("--max-len", o.max_len, "maximum prime length")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{40}));
  };
  auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "upper or lower")
        ->required()
        ->check(CLI::IsMember({"upper", "lower"}));
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "print the reduced (minimal) word");
  word_arg(reduce_cmd, o.word, "word");
  reduce_cmd->add_flag("--trace", o.trace, "print every intermediate word");

  auto* equiv_cmd = app.add_subcommand("equiv", "decide whether two words are equivalent");
  word_arg(equiv_cmd, o.word, "x");
  word_arg(equiv_cmd, o.other, "y");
  limit_opt(equiv_cmd);

  auto* class_cmd = app.add_subcommand("class", "list the equivalence class of a word");
  word_arg(class_cmd, o.word, "word");
  limit_opt(class_cmd);
  class_cmd->add_option("--dot", o.dot, "write the swap graph as DOT (- for stdout)");
  class_cmd->add_flag("--json", o.json);

  auto* primes_cmd = app.add_subcommand("primes", "list primes of one kind");
  kind_opt(primes_cmd);
  max_len_opt(primes_cmd);
  primes_cmd->add_flag("--json", o.json);

  auto* classes_cmd = app.add_subcommand("classes", "list equivalence classes of primes");
  kind_opt(classes_cmd);
  max_len_opt(classes_cmd);
  classes_cmd->add_flag("--json", o.json);

  auto* gens_cmd = app.add_subcommand("gens", "list the minimal generating pairs");
  max_len_opt(gens_cmd);
  gens_cmd->add_flag("--json", o.json);

  auto* verify_cmd = app.add_subcommand("verify-gens", "check generation and minimality");
  max_len_opt(verify_cmd);
  limit_opt(verify_cmd);
  verify_cmd->add_flag("--minimality", o.minimality, "also check that no pair can be removed");
  verify_cmd->add_flag("--json", o.json);

  auto* graph_cmd = app.add_subcommand("graph-verify", "check the commutation criterion on a graph");
  auto* cube = graph_cmd->add_option("--hypercube", o.hypercube, "use Q_D")
                   ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  auto* edges = graph_cmd->add_option("--edges", o.edges, "edge-list file");
  auto* base = graph_cmd->add_option("--base", o.base, "base vertex name");
  cube->excludes(edges)->excludes(base);
  edges->needs(base);
  base->needs(edges);
  graph_cmd->add_option("--max-word-len", o.max_word_len, "maximum word length")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  graph_cmd->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (graph_cmd->parsed() && !o.hypercube && o.edges.empty())
      throw UsageError("graph-verify needs --hypercube or --edges");
    if (graph_cmd->parsed() && o.max_word_len % 2 != 0)
      throw UsageError("--max-word-len must be even");

    if (reduce_cmd->parsed()) return detail::cmd_reduce(o, out);
    if (equiv_cmd->parsed()) return detail::cmd_equiv(o, out);
    if (class_cmd->parsed()) return detail::cmd_class(o, out);
    if (primes_cmd->parsed()) return detail::cmd_primes(o, out);
    if (classes_cmd->parsed()) return detail::cmd_classes(o, out);
    if (gens_cmd->parsed()) return detail::cmd_gens(o, out);
    if (verify_cmd->parsed()) return detail::cmd_verify_gens(o, out);
    return detail::cmd_graph_verify(o, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const InvalidCharacter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace balanced::cli
