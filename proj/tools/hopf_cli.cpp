// Command-line front end: antipodes, conflict-graph coefficients, hypergraph
// orientations, chromatic polynomials and verification suites.
//
// Exit codes: 0 ok, 2 bad input, 3 enumeration guard, 4 method not
// applicable to the monoid, 5 verification mismatch, 1 anything else.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hopf/cocommutative.hpp"
#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/lxh.hpp"
#include "hopf/takeuchi.hpp"
#include "hopf/verify.hpp"

namespace {

using namespace hopf;
using io::json;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kGuard = 3, kMismatch = 4, kVerify = 5 };

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  int jobs = 1;
  int limit = 0;
};

struct AntipodeArgs {
  std::string monoid;
  std::string inner = "g";
  std::string element;
  std::string method = "takeuchi";
  int n = -1;
  bool verify = false;
};

template <class M>
void print_sum(const Globals& g, const FormalSum<typename M::element>& s) {
  if (g.format == "text") {
    std::cout << io::sum_text<M>(s);
  } else {
    std::cout << io::sum_json<M>(s).dump() << "\n";
  }
}

template <class M>
using Method = std::function<FormalSum<typename M::element>(const typename M::element&)>;

/// Runs the requested method; with --verify also every other applicable one.
template <class M>
int finish_antipode(const Globals& g, const AntipodeArgs& a, const typename M::element& x,
                    const std::vector<std::pair<std::string, Method<M>>>& methods, bool graded = false) {
  const Method<M>* chosen = nullptr;
  for (const auto& [name, f] : methods) {
    if (name == a.method) chosen = &f;
  }
  if (!chosen) throw MonoidMismatch("method '" + a.method + "' does not apply to monoid '" + a.monoid + "'");
  const auto result = (*chosen)(x);
  if (a.verify) {
    for (const auto& [name, f] : methods) {
      if (name == a.method) continue;
      if (!(f(x) == result)) throw VerificationFailed("method '" + name + "' disagrees with '" + a.method + "'");
      std::cerr << "verified against " << name << "\n";
    }
    const bool holds = graded ? kh_antipode_axiom_check<M>(x, result).empty() : antipode_axiom_check<M>(x, result).empty();
    if (!holds) throw VerificationFailed("antipode axiom fails");
    std::cerr << "antipode axiom holds\n";
  }
  print_sum<M>(g, result);
  return kOk;
}

template <class M>
int antipode_bicommutative(const Globals& g, const AntipodeArgs& a) {
  const auto x = io::parse_element<M>(a.element, a.n);
  return finish_antipode<M>(g, a, x,
                            {{"takeuchi", [&](const auto& e) { return takeuchi_antipode<M>(e, g.jobs); }},
                             {"orientations", [](const auto& e) { return antipode_cocommutative<M>(e); }},
                             {"permutations", [](const auto& e) { return antipode_via_permutations<M>(e); }}});
}

template <class H>
int antipode_lxh_pair(const Globals& g, const AntipodeArgs& a) {
  using P = LxH<H>;
  const auto x = io::parse_element<P>(a.element, a.n);
  return finish_antipode<P>(g, a, x,
                            {{"takeuchi", [&](const auto& e) { return takeuchi_antipode<P>(e, g.jobs); }},
                             {"lxh", [](const auto& e) { return antipode_lxh<H>(e.first, e.second); }}});
}

int antipode_inner_dispatch(const Globals& g, const AntipodeArgs& a) {
  if (a.inner == "l") return antipode_lxh_pair<Orders>(g, a);
  if (a.inner == "pi") return antipode_lxh_pair<Partitions>(g, a);
  if (a.inner == "g") return antipode_lxh_pair<Graphs>(g, a);
  if (a.inner == "hg") return antipode_lxh_pair<Hypergraphs>(g, a);
  if (a.inner == "sc") return antipode_lxh_pair<SimplicialComplexes>(g, a);
  if (a.inner == "hf") return antipode_lxh_pair<Hyperforests>(g, a);
  throw InvalidInput("unknown inner monoid '" + a.inner + "'");
}

int cmd_antipode(const Globals& g, const AntipodeArgs& a) {
  if (a.monoid == "l") {
    const auto x = io::parse_element<Orders>(a.element, a.n);
    return finish_antipode<Orders>(g, a, x, {{"takeuchi", [&](const auto& e) { return takeuchi_antipode<Orders>(e, g.jobs); }}});
  }
  if (a.monoid == "kl") {
    const auto x = io::parse_element<Orders>(a.element, a.n);
    return finish_antipode<Orders>(g, a, x,
                                   {{"takeuchi", [&](const auto& e) { return kh_antipode_takeuchi<Orders>(e, g.jobs); }},
                                    {"pr", [](const auto& e) { return pr_antipode(e); }}},
                                   true);
  }
  if (a.monoid == "pi") return antipode_bicommutative<Partitions>(g, a);
  if (a.monoid == "g") return antipode_bicommutative<Graphs>(g, a);
  if (a.monoid == "hg") return antipode_bicommutative<Hypergraphs>(g, a);
  if (a.monoid == "sc") return antipode_bicommutative<SimplicialComplexes>(g, a);
  if (a.monoid == "hf") return antipode_bicommutative<Hyperforests>(g, a);
  if (a.monoid == "lxh") return antipode_inner_dispatch(g, a);
  throw InvalidInput("unknown monoid '" + a.monoid + "'");
}

NonNestingGraph parse_arcs(int m, const std::string& arcs) {
  std::vector<std::pair<int, int>> out;
  if (!io::detail::trim(arcs).empty()) {
    for (const auto& tok : io::detail::split(arcs, ',')) {
      const auto ends = io::detail::split(tok, '-');
      if (ends.size() != 2) throw InvalidInput("arcs are written a-b");
      out.emplace_back(io::detail::parse_label(ends[0]) + 1, io::detail::parse_label(ends[1]) + 1);
    }
  }
  return NonNestingGraph::make(m, std::move(out));
}

int cmd_cgraph(const Globals& g, int m, const std::string& arcs, bool brute) {
  const NonNestingGraph graph = parse_arcs(m, arcs);
  const int c = brute ? c_graph_bruteforce(graph) : c_graph_fast(graph);
  if (g.format == "text") {
    std::cout << c << "\n";
  } else {
    std::cout << json{{"m", m}, {"c", c}}.dump() << "\n";
  }
  return kOk;
}

QuotientHypergraph parse_hypergraph(const std::string& text, int m) {
  const Hypergraph h = io::parse_element<Hypergraphs>(text, m);
  QuotientHypergraph q;
  q.m = popcount(h.support);
  q.hyperedges = h.edges;
  for (int i = 0; i < q.m; ++i) q.lambda.parts.push_back(bit(i));
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      if (i != j && is_subset(h.edges[i], h.edges[j])) throw InvalidInput("hyperedges must form an antichain");
    }
  }
  return q;
}

std::string side_text(Mask head, Mask tail) {
  return io::detail::mask_text(head) + ">" + io::detail::mask_text(tail);
}

int cmd_orientations(const Globals& g, const std::string& edges, int m, bool list) {
  const QuotientHypergraph q = parse_hypergraph(edges, m);
  const auto all = enumerate_acyclic_orientations(q);
  if (!list) {
    if (g.format == "text") {
      std::cout << all.size() << "\n";
    } else {
      std::cout << json{{"count", all.size()}, {"signed_sum", orientation_sum(q)}}.dump() << "\n";
    }
    return kOk;
  }
  json rows = json::array();
  for (const auto& o : all) {
    const SetComposition a = orientation_composition(q, o);
    std::string sides;
    json jo = json::array();
    for (const auto& [head, tail] : o.sides) {
      sides += (sides.empty() ? "" : " ") + side_text(head, tail);
      jo.push_back({io::detail::mask_json(head), io::detail::mask_json(tail)});
    }
    std::string comp = "(";
    json ja = json::array();
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
      comp += (i ? "," : "") + io::detail::mask_text(a.parts[i]);
      ja.push_back(io::detail::mask_json(a.parts[i]));
    }
    comp += ")";
    if (g.format == "text") {
      std::cout << sides << "    " << comp << "\n";
    } else {
      rows.push_back({{"orientation", jo}, {"composition", ja}, {"length", a.parts.size()}});
    }
  }
  if (g.format != "text") std::cout << rows.dump() << "\n";
  return kOk;
}

struct ChromaticArgs {
  std::string permutation;
  std::string graph;
  std::string character = "identity";
  int n = -1;
  std::optional<long long> eval;
};

int cmd_chromatic(const Globals& g, const ChromaticArgs& c) {
  BinomialPolynomial p;
  if (!c.permutation.empty()) {
    const LinearOrder a = io::parse_element<Orders>(c.permutation, c.n);
    if (c.character == "identity") {
      p = chromatic_poly<Orders>(a, identity_order_character());
    } else if (c.character == "pattern21") {
      p = chromatic_poly<Orders>(a, pattern21_character());
    } else {
      throw InvalidInput("unknown character '" + c.character + "'");
    }
  } else if (!c.graph.empty()) {
    if (c.character != "identity" && c.character != "discrete") {
      throw MonoidMismatch("graphs only support the discrete character");
    }
    p = chromatic_poly<Graphs>(io::parse_element<Graphs>(c.graph, c.n), discrete_character<Graphs>());
  } else {
    throw InvalidInput("give --permutation or --graph");
  }
  if (g.format == "text") {
    if (c.eval) {
      std::cout << p.evaluate(BigInt(*c.eval)).str() << "\n";
    } else {
      std::cout << p.monomial_string() << "\n";
    }
    return kOk;
  }
  json out{{"binomial", p.coefficients}, {"monomial", p.monomial_string()}};
  if (c.eval) {
    out["t"] = *c.eval;
    out["value"] = p.evaluate(BigInt(*c.eval)).str();
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_verify(const Globals& g, std::vector<std::string> suites, int n) {
  if (suites.empty()) suites = verify::suite_names();
  bool all_ok = true;
  json out = json::object();
  for (const auto& s : suites) {
    const auto results = verify::run_suite(s, n);
    json cases = json::array();
    for (const auto& r : results) {
      all_ok = all_ok && r.passed;
      if (g.format == "text") {
        std::cout << (r.passed ? "PASS " : "FAIL ") << s << " / " << r.name << ": " << r.detail << "\n";
      } else {
        cases.push_back({{"case", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
    }
    if (g.format != "text") out[s] = cases;
  }
  if (g.format != "text") std::cout << out.dump(2) << "\n";
  return all_ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antipodes of linearized Hopf monoids"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads for the Takeuchi sweep")->check(CLI::Range(1, 256));
  app.add_option("--limit", g.limit, "Raise or lower the enumeration guard (default 16)")->check(CLI::Range(1, 32));

  AntipodeArgs anti;
  auto* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
  antipode->add_option("--monoid", anti.monoid, "l, pi, g, hg, sc, hf, lxh or kl")
      ->required()
      ->check(CLI::IsMember({"l", "pi", "g", "hg", "sc", "hf", "lxh", "kl"}));
  antipode->add_option("--inner", anti.inner, "Second factor for lxh")
      ->check(CLI::IsMember({"l", "pi", "g", "hg", "sc", "hf"}));
  antipode->add_option("--element", anti.element, "JSON or shorthand element")->required();
  antipode->add_option("--method", anti.method, "takeuchi, lxh, orientations, permutations or pr")
      ->check(CLI::IsMember({"takeuchi", "lxh", "orientations", "permutations", "pr"}));
  antipode->add_option("--n", anti.n, "Ground set size when it cannot be inferred");
  antipode->add_flag("--verify", anti.verify, "Cross-check every applicable method and the antipode axiom");

  int m = 0;
  std::string arcs;
  bool brute = false;
  auto* cgraph = app.add_subcommand("cgraph", "Coefficient c(G) of a non-nested arc diagram");
  cgraph->add_option("--m", m, "Number of vertices")->required()->check(CLI::Range(1, 32));
  cgraph->add_option("--arcs", arcs, "Arcs a-b separated by commas");
  cgraph->add_flag("--brute", brute, "Sum over interval splits instead of the fixed-point search");

  std::string hyperedges;
  int hm = -1;
  bool count = false, list = false;
  auto* orient = app.add_subcommand("orientations", "Acyclic orientations of a hypergraph");
  orient->add_option("--hyperedges", hyperedges, "Hyperedges like 1,2,4/2,3,4")->required();
  orient->add_option("--m", hm, "Number of vertices (default: largest label)");
  auto* count_flag = orient->add_flag("--count", count, "Print the number of acyclic orientations");
  orient->add_flag("--list", list, "Print each orientation with its set composition")->excludes(count_flag);

  ChromaticArgs chrom;
  long long eval_at = 0;
  bool poly = false;
  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a permutation or graph");
  auto* perm_opt = chromatic->add_option("--permutation", chrom.permutation, "Permutation like 2143");
  chromatic->add_option("--graph", chrom.graph, "Graph like 1-2,2-3")->excludes(perm_opt);
  chromatic->add_option("--n", chrom.n, "Number of vertices for --graph");
  chromatic->add_option("--character", chrom.character, "identity or pattern21 (permutations), discrete (graphs)");
  auto* eval_opt = chromatic->add_option("--eval", eval_at, "Evaluate at an integer t");
  chromatic->add_flag("--poly", poly, "Print the polynomial (default when --eval is absent)");

  std::vector<std::string> suites;
  int vn = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite,--identity", suites, "Suite names (default: all)")
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--n", vn, "Degree bound for suites that take one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (g.limit > 0) {
      set_enumeration_limit(g.limit);
      std::cerr << "enumeration guard set to n <= " << g.limit << "\n";
    }
    if (*antipode) return cmd_antipode(g, anti);
    if (*cgraph) return cmd_cgraph(g, m, arcs, brute);
    if (*orient) return cmd_orientations(g, hyperedges, hm, list);
    if (*chromatic) {
      if (*eval_opt) chrom.eval = eval_at;
      (void)poly;
      return cmd_chromatic(g, chrom);
    }
    if (*verify_cmd) return cmd_verify(g, suites, vn);
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const MonoidMismatch& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kMismatch;
  } catch (const InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
