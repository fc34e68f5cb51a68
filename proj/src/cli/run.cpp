#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "permcomp/bijections.hpp"
#include "permcomp/cli.hpp"
#include "permcomp/compgraph.hpp"
#include "permcomp/graph_io.hpp"
#include "permcomp/structure.hpp"
#include "permcomp/verify.hpp"

namespace permcomp::cli {

using nlohmann::json;

namespace {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Shape {
  std::string kind;
  int m = 0;
};

Shape parse_shape(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  Shape s;
  if (colon != std::string::npos) {
    s.kind = text.substr(0, colon);
    try {
      s.m = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      s.m = 0;
    }
  }
  if ((s.kind != "star" && s.kind != "path") || s.m < 1) {
    throw UsageError(flag + ": expected star:M or path:M with M >= 1, got '" + text + "'");
  }
  return s;
}

WeightedGraph shape_graph(const Shape& s) { return s.kind == "star" ? unit_star(s.m) : unit_path(s.m); }

Permutation parse_perm(const std::string& text, const std::string& what) {
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::optional<Permutation> parse_avoid(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_perm(text, "--avoid");
}

json perm_list(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(p.to_string());
  return out;
}

std::string edge_text(const SimpleGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += "  " + std::to_string(g.label(e.u)) + " -- " + std::to_string(g.label(e.v)) + "\n";
  return out;
}

std::string edge_text(const WeightedGraph& g) {
  std::string out;
  for (const WeightedEdge& e : g.edges()) {
    out += "  " + std::to_string(g.label(e.u)) + " -- " + std::to_string(g.label(e.v)) + "  weight " +
           std::to_string(e.weight) + "\n";
  }
  return out;
}

// Global flags shared by every verb.
struct Globals {
  bool json = false;
  bool timing = false;
  bool force = false;
  bool no_cache = false;
  int jobs = 0;
  std::string cache_path;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : globals_(g), out_(out) {
    options_.force = g.force;
    options_.jobs = g.jobs > 0 ? g.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string path = g.cache_path;
    if (path.empty()) {
      if (const char* env = std::getenv("PERMCOMP_CACHE")) path = env;
    }
    if (!path.empty() && !g.no_cache) cache_.emplace(path);
  }

  SweepOptions& options() { return options_; }
  ResultCache* cache() { return cache_ ? &*cache_ : nullptr; }
  bool json_mode() const { return globals_.json; }
  bool timing() const { return globals_.timing; }
  std::ostream& out() { return out_; }

  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }

  // Prints reports and returns the exit status they imply.
  int emit_reports(const std::vector<Report>& reports) {
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
    if (json_mode()) {
      json docs = json::array();
      for (const auto& r : reports) docs.push_back(r.to_json(timing()));
      emit({{"status", all_pass ? "PASS" : "FAIL"}, {"reports", docs}});
    } else {
      std::size_t passed = 0;
      for (const auto& r : reports) {
        out_ << r.to_text(timing());
        passed += r.pass;
      }
      if (reports.size() > 1) out_ << passed << " of " << reports.size() << " claims pass\n";
    }
    return all_pass ? kOk : kFail;
  }

  // Reports from the cache when possible.
  std::vector<Report> cached_reports(const std::string& op, const json& params,
                                     const std::function<std::vector<Report>()>& compute) {
    if (auto* c = cache()) {
      if (auto hit = c->lookup(op, params)) {
        try {
          std::vector<Report> out;
          for (const auto& doc : *hit) out.push_back(Report::from_json(doc));
          return out;
        } catch (const json::exception&) {
        }
      }
    }
    auto reports = compute();
    if (auto* c = cache()) {
      json docs = json::array();
      for (const auto& r : reports) docs.push_back(r.to_json(true));
      c->store(op, params, docs);
    }
    return reports;
  }

  json cached_json(const std::string& op, const json& params, const std::function<json()>& compute) {
    if (auto* c = cache()) {
      if (auto hit = c->lookup(op, params)) return *hit;
    }
    json result = compute();
    if (auto* c = cache()) c->store(op, params, result);
    return result;
  }

 private:
  Globals globals_;
  std::ostream& out_;
  SweepOptions options_;
  std::optional<ResultCache> cache_;
};

void apply_cap(Session& s, int cap, int ScaleLimits::*field) {
  if (cap > 0) s.options().limits.*field = cap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competition graphs of permutations: constructions, bijections and exhaustive checks", "permcomp"};
  app.require_subcommand(1);
  // Global flags may follow the verb; subcommands created below inherit this.
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit one JSON document on standard output");
  app.add_flag("--timing", g.timing, "Include runtimes in reports");
  app.add_flag("--force", g.force, "Allow sweeps beyond the default scale caps");
  app.add_flag("--no-cache", g.no_cache, "Ignore the result cache");
  app.add_option("--cache", g.cache_path, "Result cache file (default: $PERMCOMP_CACHE)");
  app.add_option("--jobs", g.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", kToolVersion);

  // compgraph / digraph
  std::string perm_text;
  bool weighted = false;
  bool dot = false;
  auto* compgraph = app.add_subcommand("compgraph", "Competition graph C(pi), or W(pi) with --weighted");
  compgraph->add_option("PI", perm_text, "Permutation")->required();
  compgraph->add_flag("--weighted", weighted, "Weighted competition graph");
  compgraph->add_flag("--dot", dot, "Graphviz output");
  auto* digraph = app.add_subcommand("digraph", "Digraph D(pi) of the doubly partial order");
  digraph->add_option("PI", perm_text, "Permutation")->required();
  digraph->add_flag("--dot", dot, "Graphviz output");

  // patterns / avoiders
  std::string pattern_text;
  int length = 0;
  bool count_only = false;
  auto* patterns = app.add_subcommand("patterns", "Occurrences of a pattern");
  patterns->add_option("PI", perm_text, "Permutation")->required();
  patterns->add_option("TAU", pattern_text, "Pattern")->required();
  patterns->add_flag("--count", count_only, "Only the number of occurrences");
  auto* avoiders_cmd = app.add_subcommand("avoiders", "Permutations of length N avoiding TAU");
  avoiders_cmd->add_option("N", length, "Length")->required()->check(CLI::NonNegativeNumber);
  avoiders_cmd->add_option("TAU", pattern_text, "Pattern")->required();
  avoiders_cmd->add_flag("--count", count_only, "Only the number of avoiders");

  // structure
  auto* minimize_cmd = app.add_subcommand("minimize", "Delete right-most redundant terms until none remain");
  minimize_cmd->add_option("PI", perm_text, "Permutation")->required();
  auto* realize = app.add_subcommand("realize132", "A 132-avoider with an isomorphic competition graph");
  realize->add_option("PI", perm_text, "Permutation")->required();
  std::string shape_text;
  std::string avoid_text;
  int maxlen = 11;
  auto* base = app.add_subcommand("base-perms", "Base permutations of a unit-weight star or path");
  base->add_option("--graph", shape_text, "star:M or path:M")->required();
  base->add_option("--avoid", avoid_text, "Avoided pattern");
  base->add_option("--maxlen", maxlen, "Longest permutation searched (at most 11)");

  // bijections
  auto* bijection = app.add_subcommand("bijection", "Path/star bijections");
  bijection->require_subcommand(1);
  int k = -1;
  bool inverse = false;
  auto* bij_t = bijection->add_subcommand("t", "T^k on a path realizer (default k = m-2)");
  bij_t->add_option("PI", perm_text, "Permutation")->required();
  bij_t->add_option("--k", k, "Power of T");
  bij_t->add_flag("--inverse", inverse, "Star to path instead");
  auto* bij_m = bijection->add_subcommand("m", "M on a 123-avoiding path realizer");
  bij_m->add_option("PI", perm_text, "Permutation")->required();
  bij_m->add_flag("--inverse", inverse, "132-avoiding star to 123-avoiding path instead");
  int n = 0;
  int max_n_cap = 0;
  auto* bij_verify = bijection->add_subcommand("verify", "Check a bijection over whole preimage classes");
  bij_verify->add_option("--shape", shape_text, "path:M")->required();
  bij_verify->add_option("--n", n, "Length")->required();
  bij_verify->add_option("--avoid", avoid_text, "123 selects M, otherwise T");
  bij_verify->add_option("--max-n", max_n_cap, "Scale cap for the sweep");

  // preimage
  auto* preimage = app.add_subcommand("preimage", "Permutations whose W is the shape up to isolated vertices");
  preimage->add_option("--shape", shape_text, "star:M or path:M")->required();
  preimage->add_option("--n", n, "Length")->required();
  preimage->add_option("--avoid", avoid_text, "Avoided pattern");
  preimage->add_option("--max-n", max_n_cap, "Scale cap for the sweep");
  preimage->add_flag("--count", count_only, "Only the number of permutations");

  // table
  auto* table = app.add_subcommand("table", "Counting tables");
  table->require_subcommand(1);
  int max_m = 5;
  int table_n = 12;
  int brute_n = 0;
  bool csv = false;
  auto* table_h = table->add_subcommand("h", "h(m,n) by the recurrence, optionally cross-checked");
  table_h->add_option("--max-m", max_m, "Rows")->check(CLI::PositiveNumber);
  table_h->add_option("--max-n", table_n, "Columns")->check(CLI::PositiveNumber);
  table_h->add_option("--brute-max-n", brute_n, "Also count by brute force up to this n (cap 10)");
  table_h->add_flag("--csv", csv, "CSV with rows m and columns n");
  int oeis_n = 30;
  auto* table_oeis = table->add_subcommand("oeis", "Rows m = 1, 2, 3 as OEIS b-files");
  table_oeis->add_option("--max-n", oeis_n, "Last n")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive checks of individual claims");
  verify->require_subcommand(1);
  auto* v_lemma = verify->add_subcommand("lemma3.3", "Seven-term obstructions K'_{1,3} and P'_3");
  auto* v_thm = verify->add_subcommand("thm3.6", "132 class iff no induced P_3");
  v_thm->add_option("--n", n, "Length")->required();
  v_thm->add_option("--max-n", max_n_cap, "Scale cap");
  auto* v_conj = verify->add_subcommand("conjecture", "123 class iff no induced K_{1,3}");
  v_conj->add_option("--n", n, "Length")->required();
  v_conj->add_option("--max-n", max_n_cap, "Scale cap");

  auto* reproduce = app.add_subcommand("reproduce-all", "Every claim at default scale");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "permcomp: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Session s(g, out);

    if (compgraph->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      if (weighted) {
        const WeightedGraph w = weighted_competition_graph(p);
        if (dot) {
          out << to_dot(w);
        } else if (s.json_mode()) {
          json doc = to_json(w);
          doc["permutation"] = p.to_string();
          s.emit(doc);
        } else {
          out << "W(" << p.to_string() << "): " << w.edge_count() << " edges, total weight " << w.total_weight() << "\n"
              << edge_text(w);
        }
      } else {
        const SimpleGraph c = competition_graph(p);
        if (dot) {
          out << to_dot(c);
        } else if (s.json_mode()) {
          json doc = to_json(c);
          doc["permutation"] = p.to_string();
          s.emit(doc);
        } else {
          out << "C(" << p.to_string() << "): " << c.edge_count() << " edges\n" << edge_text(c);
        }
      }
      return kOk;
    }

    if (digraph->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      const Digraph d = digraph_of(p);
      if (dot) {
        out << to_dot(d);
      } else if (s.json_mode()) {
        json doc = to_json(d);
        doc["permutation"] = p.to_string();
        s.emit(doc);
      } else {
        out << "D(" << p.to_string() << "): " << d.arc_count() << " arcs\n";
        for (auto [from, to] : d.arcs()) out << "  " << d.label(from) << " -> " << d.label(to) << "\n";
      }
      return kOk;
    }

    if (patterns->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      const Permutation tau = parse_perm(pattern_text, "TAU");
      if (tau.empty()) throw UsageError("TAU: pattern must be non-empty");
      const auto occ = occurrences(p, tau);
      if (s.json_mode()) {
        json list = json::array();
        for (const auto& o : occ) list.push_back(o.indices);
        json doc{{"permutation", p.to_string()}, {"pattern", tau.to_string()}, {"count", occ.size()}};
        if (!count_only) doc["occurrences"] = list;
        s.emit(doc);
      } else {
        out << occ.size() << " occurrence(s) of " << tau.to_string() << " in " << p.to_string() << "\n";
        if (!count_only) {
          for (const auto& o : occ) {
            std::vector<int> values;
            for (int i : o.indices) values.push_back(p.value_at(i));
            out << "  positions";
            for (int i : o.indices) out << ' ' << i;
            out << "  values";
            for (int v : values) out << ' ' << v;
            out << '\n';
          }
        }
      }
      return kOk;
    }

    if (avoiders_cmd->parsed()) {
      const Permutation tau = parse_perm(pattern_text, "TAU");
      if (tau.empty()) throw UsageError("TAU: pattern must be non-empty");
      check_scale("avoiders", length, s.options().limits.avoider_class + 1, s.options().force);
      std::size_t total = 0;
      json list = json::array();
      for_each_avoider(length, tau, [&](const Permutation& p) {
        ++total;
        if (count_only) return;
        if (s.json_mode()) {
          list.push_back(p.to_string());
        } else {
          out << p.to_string() << '\n';
        }
      });
      if (s.json_mode()) {
        json doc{{"n", length}, {"pattern", tau.to_string()}, {"count", total}};
        if (!count_only) doc["avoiders"] = list;
        s.emit(doc);
      } else if (count_only) {
        out << total << '\n';
      }
      return kOk;
    }

    if (minimize_cmd->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      const Minimized m = minimize_tracked(p);
      const bool several = nontrivial_components(competition_graph(p)).size() > 1;
      if (s.json_mode()) {
        s.emit({{"permutation", p.to_string()},
                {"minimized", m.perm.to_string()},
                {"kept_positions", m.kept},
                {"multiple_components", several}});
      } else {
        out << (m.perm.empty() ? std::string("(empty)") : m.perm.to_string()) << '\n';
        if (several) out << "note: C(pi) has more than one non-trivial component\n";
      }
      return kOk;
    }

    if (realize->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      const Permutation q = realize_132(p);
      if (s.json_mode()) {
        s.emit({{"permutation", p.to_string()}, {"realization", q.to_string()}});
      } else {
        out << q.to_string() << '\n';
      }
      return kOk;
    }

    if (base->parsed()) {
      const Shape shape = parse_shape(shape_text, "--graph");
      const auto avoid = parse_avoid(avoid_text);
      if (maxlen > 11) throw UsageError("--maxlen: base-permutation search stops at length 11");
      const json params{{"graph", shape_text}, {"avoid", avoid_text}, {"maxlen", maxlen}};
      const json result = s.cached_json("base-perms", params, [&] {
        std::vector<Permutation> found;
        for (const auto& p : base_permutations(shape_graph(shape), maxlen, avoid)) found.push_back(p);
        return json{{"base_permutations", perm_list(found)}};
      });
      if (s.json_mode()) {
        json doc = params;
        doc["base_permutations"] = result.at("base_permutations");
        s.emit(doc);
      } else {
        for (const auto& p : result.at("base_permutations")) out << p.get<std::string>() << '\n';
      }
      return kOk;
    }

    if (bij_t->parsed() || bij_m->parsed()) {
      const Permutation p = parse_perm(perm_text, "PI");
      Permutation image;
      std::string name;
      if (bij_t->parsed()) {
        if (inverse) {
          image = star_to_path(p);
          name = "T^-(m-2)";
        } else if (k >= 0) {
          image = shift_path(p, k);
          name = "T^" + std::to_string(k);
        } else {
          image = path_to_star(p);
          name = "T^(m-2)";
        }
      } else {
        image = inverse ? star132_to_path123(p) : path123_to_star132(p);
        name = inverse ? "M^-1" : "M";
      }
      if (s.json_mode()) {
        s.emit({{"map", name}, {"input", p.to_string()}, {"output", image.to_string()}});
      } else {
        out << name << "(" << p.to_string() << ") = " << image.to_string() << '\n';
      }
      return kOk;
    }

    if (bij_verify->parsed()) {
      const Shape shape = parse_shape(shape_text, "--shape");
      if (shape.kind != "path") throw UsageError("--shape: bijections start from path:M");
      const auto avoid = parse_avoid(avoid_text);
      if (avoid && *avoid != Permutation{1, 2, 3}) throw UsageError("--avoid: only 123 is supported");
      apply_cap(s, max_n_cap, &ScaleLimits::preimage);
      check_scale("bijection verify", n, s.options().limits.preimage, s.options().force);
      const BijectionKind kind = avoid ? BijectionKind::PathStar123To132 : BijectionKind::PathStar;
      const json params{{"m", shape.m}, {"n", n}, {"kind", avoid ? "m" : "t"}};
      const json result = s.cached_json("bijection-verify", params, [&] {
        SweepOptions inner = s.options();
        inner.force = true;
        const BijectionCheck check = verify_bijection(kind, shape.m, n, inner);
        json table = json::array();
        for (const auto& [from, to] : check.table) table.push_back({from.to_string(), to.to_string()});
        return json{{"status", check.ok() ? "PASS" : "FAIL"},
                    {"domain", check.domain},
                    {"codomain", check.codomain},
                    {"table", table},
                    {"problems", check.problems}};
      });
      const bool pass = result.at("status") == "PASS";
      if (s.json_mode()) {
        json doc = params;
        doc.update(result);
        s.emit(doc);
      } else {
        for (const auto& row : result.at("table")) {
          out << row[0].get<std::string>() << " -> " << row[1].get<std::string>() << '\n';
        }
        for (const auto& p : result.at("problems")) out << "problem: " << p.get<std::string>() << '\n';
        out << (pass ? "PASS" : "FAIL") << ": " << result.at("domain") << " -> " << result.at("codomain") << '\n';
      }
      return pass ? kOk : kFail;
    }

    if (preimage->parsed()) {
      const Shape shape = parse_shape(shape_text, "--shape");
      const auto avoid = parse_avoid(avoid_text);
      apply_cap(s, max_n_cap, &ScaleLimits::preimage);
      check_scale("preimage", n, s.options().limits.preimage, s.options().force);
      const json params{{"shape", shape_text}, {"n", n}, {"avoid", avoid_text}};
      const json result = s.cached_json("preimage", params, [&] {
        SweepOptions inner = s.options();
        inner.force = true;
        return json{{"permutations", perm_list(wcg_preimage(shape_graph(shape), n, avoid, inner))}};
      });
      const auto& perms = result.at("permutations");
      if (s.json_mode()) {
        json doc = params;
        doc["count"] = perms.size();
        if (!count_only) doc["permutations"] = perms;
        s.emit(doc);
      } else {
        if (!count_only) {
          for (const auto& p : perms) out << p.get<std::string>() << '\n';
        }
        out << perms.size() << " permutation(s)\n";
      }
      return kOk;
    }

    if (table_h->parsed()) {
      if (brute_n > s.options().limits.h_bruteforce && !s.options().force) {
        throw UsageError("--brute-max-n: brute force is capped at n = " +
                         std::to_string(s.options().limits.h_bruteforce) + " without --force");
      }
      SequenceTable t;
      const HTable rec(max_m, table_n);
      for (int m = 1; m <= max_m; ++m) {
        for (int c = 1; c <= table_n; ++c) t.record(m, c, rec(m, c), SequenceTable::Method::Recurrence);
      }
      if (brute_n > 0) {
        SweepOptions inner = s.options();
        inner.force = true;
        for (int m = 1; m <= max_m; ++m) {
          for (int c = 1; c <= std::min(brute_n, table_n); ++c) {
            t.record(m, c, h_bruteforce(m, c, inner), SequenceTable::Method::Brute);
          }
        }
      }
      const bool agree = t.conflicts().empty();
      if (s.json_mode()) {
        json cells = json::array();
        for (const auto& [mn, c] : t.cells()) {
          json methods = json::array();
          for (auto method : c.methods) methods.push_back(to_string(method));
          cells.push_back({{"m", mn.first}, {"n", mn.second}, {"value", c.value.str()}, {"methods", methods}});
        }
        s.emit({{"max_m", max_m}, {"max_n", table_n}, {"cells", cells}, {"conflicts", t.conflicts()}});
      } else {
        out << (csv ? t.to_csv(max_m, table_n) : t.to_text(max_m, table_n));
        for (const auto& c : t.conflicts()) err << "conflict: " << c << '\n';
      }
      return agree ? kOk : kFail;
    }

    if (table_oeis->parsed()) {
      const std::string text = oeis_rows(oeis_n);
      if (s.json_mode()) {
        s.emit({{"max_n", oeis_n}, {"bfiles", text}});
      } else {
        out << text;
      }
      return kOk;
    }

    if (v_lemma->parsed()) {
      return s.emit_reports(s.cached_reports("verify.lemma3.3", json::object(),
                                             [&] { return verify_seven_term_obstructions(s.options()); }));
    }

    if (v_thm->parsed() || v_conj->parsed()) {
      apply_cap(s, max_n_cap, &ScaleLimits::characterization);
      check_scale("characterization sweep", n, s.options().limits.characterization, s.options().force);
      SweepOptions inner = s.options();
      inner.force = true;
      // Both directions come from the same sweep, so they share a cache entry.
      auto reports = s.cached_reports("verify.characterizations", {{"n", n}},
                                      [&] { return verify_characterizations(n, inner); });
      const std::string wanted = v_thm->parsed() ? "p3-free-iff-132" : "k13-free-iff-123";
      std::vector<Report> picked;
      for (auto& r : reports) {
        if (r.claim == wanted) picked.push_back(r);
      }
      return s.emit_reports(picked);
    }

    if (reproduce->parsed()) {
      return s.emit_reports(reproduce_all(s.options(), s.cache()));
    }
  } catch (const UsageError& e) {
    err << "permcomp: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "permcomp: " << e.what() << '\n';
    return kUsage;
  }
  err << "permcomp: no verb given\n";
  return kUsage;
}

}  // namespace permcomp::cli
