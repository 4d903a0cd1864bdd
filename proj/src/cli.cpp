#include "ziggu/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ziggu/codes.hpp"
#include "ziggu/graph_export.hpp"
#include "ziggu/kernels.hpp"
#include "ziggu/loopless.hpp"
#include "ziggu/nurikabe.hpp"
#include "ziggu/oracle.hpp"
#include "ziggu/rank.hpp"
#include "ziggu/rulers.hpp"
#include "ziggu/stepper.hpp"

namespace ziggu::cli {

using json = nlohmann::ordered_json;

namespace {

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v);
  return v.str();
}

json move_json(const Move& m) { return {{"index", m.index}, {"delta", m.delta}}; }

std::string moves_text(const std::vector<Move>& moves) {
  std::string s;
  for (const auto& m : moves) {
    if (!s.empty()) s += ' ';
    s += to_string(m);
  }
  return s;
}

struct Options {
  std::string kind = "short";
  std::size_t n = 3;
  std::string format = "text";
  std::string mode = "shortest";
  bool states = false;
  bool unsigned_ruler = false;
  std::vector<std::string> args;
};

std::vector<std::string> inputs(const Options& o, std::istream& in) {
  if (!o.args.empty()) return o.args;
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

void print_list(Kind kind, std::size_t n, const std::string& format, std::ostream& out) {
  std::vector<std::string> states;
  if (n <= max_listing_n(kind)) {
    for (const auto& q : listing(kind, n).states) states.push_back(q.str());
  } else {
    ListingCursor c(kind, n);
    if (format == "text") {
      out << c.current().str() << '\n';
      while (c.advance()) out << c.current().str() << '\n';
      return;
    }
    states.push_back(c.current().str());
    while (c.advance()) states.push_back(c.current().str());
  }
  if (format == "json") {
    json doc;
    doc["kind"] = kind_name(kind);
    doc["n"] = n;
    doc["count"] = states.size();
    doc["states"] = states;
    out << doc.dump() << '\n';
  } else {
    for (const auto& s : states) out << s << '\n';
  }
}

void print_step(const StepOutcome& s, const std::string& format, std::ostream& out) {
  const char* status = s.status == StepOutcome::Status::Moved  ? "moved"
                       : s.status == StepOutcome::Status::Solved ? "solved"
                                                                 : "first";
  if (format == "json") {
    json doc;
    doc["status"] = status;
    doc["state"] = s.moved() ? json(s.state.str()) : json(nullptr);
    doc["move"] = s.moved() ? move_json(s.move) : json(nullptr);
    out << doc.dump() << '\n';
  } else if (s.moved()) {
    out << s.state.str() << '\n';
  } else {
    out << (s.status == StepOutcome::Status::Solved ? "SOLVED" : "FIRST") << '\n';
  }
}

SolveMode parse_mode(const std::string& m) {
  if (m == "shortest") return SolveMode::ShortestList;
  if (m == "longest") return SolveMode::LongestList;
  return SolveMode::Bfs;
}

}  // namespace

bool verify(std::size_t n, std::ostream& out) {
  if (n < 1 || n > oracle::kMaxGraphN)
    throw DomainError("verify supports 1 <= n <= " + std::to_string(oracle::kMaxGraphN));
  bool all_ok = true;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    out << (ok ? "ok   " : "FAIL ") << name << "  [" << ms << " ms]" << note << '\n';
    all_ok = all_ok && ok;
  };
  const auto S = listing(Kind::Short, n).states;
  const auto L = listing(Kind::Long, n).states;
  const auto B = listing(Kind::Brgc, n).states;
  const bool quat_ok = n <= max_listing_n(Kind::Quat);
  const auto Q = quat_ok ? listing(Kind::Quat, n).states : std::vector<QuatString>{};
  const auto zero = QuatString::zeros(n), top = QuatString::solved(n);

  check("listing lengths match closed forms and recurrences", [&] {
    bool ok = S.size() == count(Kind::Short, n) && L.size() == count(Kind::Long, n) &&
              B.size() == count(Kind::Brgc, n) && (!quat_ok || Q.size() == count(Kind::Quat, n));
    for (Kind k : {Kind::Brgc, Kind::Quat, Kind::Long, Kind::Short})
      ok = ok && count(k, n) == recurrence_count(k, n) &&
           move_count(k, n) == recurrence_move_count(k, n);
    return ok;
  });
  if (n <= 11) {
    check("4^n sweep counts valid and ziggu words", [&] {
      const auto c = kernels::parallel::count_encodings(n);
      return c.valid == count(Kind::Long, n) && c.ziggu == count(Kind::Short, n);
    });
  }
  check("listing state sets equal the predicate sets", [&] {
    std::set<QuatString> sl(L.begin(), L.end()), ss(S.begin(), S.end());
    if (sl.size() != L.size() || ss.size() != S.size()) return false;
    for (const auto& q : L)
      if (!is_valid(q) || is_ziggu(q) != ss.count(q)) return false;
    return true;
  });

  const auto g = oracle::build_graph(n, true);
  check("state graph size", [&] { return g.size() == L.size(); });
  check("breadth-first geodesic is the shortest solution and unique", [&] {
    return oracle::bfs_path(g, zero, top) == S && oracle::count_geodesics(g, zero, top) == 1;
  });
  check("longest solution is a Hamilton path", [&] { return oracle::is_hamilton_path(g, L); });
  if (n <= 4) {
    check("Hamilton path from 0^n is unique",
          [&] { return oracle::count_hamilton_paths(g, zero, 10) == 1; });
  }
  check("greedy leftmost walk = shortest, rightmost = longest", [&] {
    const std::size_t budget = 4 * L.size();
    return oracle::greedy_walk(g, oracle::Side::Leftmost, budget) == S &&
           oracle::greedy_walk(g, oracle::Side::Rightmost, budget) == L &&
           greedy_walk(zero, Side::Leftmost, budget) == S &&
           greedy_walk(zero, Side::Rightmost, budget) == L;
  });
  check("dead ends are exactly 0^n and 3^n", [&] {
    const auto st = oracle::degree_stats(g);
    if (n == 1) return st.degree_one.size() == 2;
    std::set<QuatString> ends(st.degree_one.begin(), st.degree_one.end());
    return ends == std::set<QuatString>{zero, top};
  });
  if (n >= 3) {
    check("most legal moves at one state is ceil(n/2)+1",
          [&] { return oracle::degree_stats(g).max_degree == (n + 1) / 2 + 1; });
    check("at most three non-reversing moves along the shortest solution",
          [&] { return oracle::max_non_reversing(g, S) <= 3; });
  }

  check("ranks equal list positions", [&] {
    bool ok = kernels::parallel::rank_mismatches(Kind::Short, S) == 0 &&
              kernels::parallel::rank_mismatches(Kind::Long, L) == 0 &&
              kernels::parallel::rank_mismatches(Kind::Brgc, B) == 0;
    if (quat_ok) ok = ok && kernels::parallel::rank_mismatches(Kind::Quat, Q) == 0;
    return ok;
  });
  check("unrank inverts rank", [&] {
    for (std::size_t j = 0; j < S.size(); ++j)
      if (unrank(Kind::Short, n, j) != S[j]) return false;
    for (std::size_t j = 0; j < L.size(); ++j)
      if (unrank(Kind::Long, n, j) != L[j]) return false;
    return true;
  });
  check("successor and predecessor walk the listings", [&] {
    for (Kind k : {Kind::Short, Kind::Long}) {
      const auto& list = k == Kind::Short ? S : L;
      for (std::size_t j = 0; j < list.size(); ++j) {
        auto s = next(k, list[j]);
        auto p = prev(k, list[j]);
        if (j + 1 < list.size() ? !(s.moved() && s.state == list[j + 1]) : s.moved()) return false;
        if (j > 0 ? !(p.moved() && p.state == list[j - 1]) : p.moved()) return false;
      }
    }
    return true;
  });
  check("compare agrees with list order", [&] {
    if (n <= 6) {
      return kernels::parallel::compare_violations(S) == 0 &&
             kernels::parallel::compare_violations(L) == 0 &&
             (!quat_ok || kernels::parallel::compare_violations(Q) == 0);
    }
    for (std::size_t j = 0; j + 1 < L.size(); ++j)
      if (compare(L[j], L[j + 1]) != Ordering::Before) return false;
    return true;
  });
  check("signed and unsigned change sequences replay the listings", [&] {
    for (Kind k : {Kind::Brgc, Kind::Long, Kind::Short}) {
      const auto& list = k == Kind::Short ? S : k == Kind::Long ? L : B;
      const auto alpha = k == Kind::Brgc ? Alphabet::Binary : Alphabet::Quaternary;
      if (replay(zero, ruler(k, n, true), alpha) != list) return false;
      if (replay(zero, ruler(k, n, false), alpha) != list) return false;
    }
    if (quat_ok && replay(zero, ruler(Kind::Quat, n, true)) != Q) return false;
    return true;
  });
  check("both loopless generators emit the shortest solution", [&] {
    ParityGenerator a(n);
    DirectionGenerator b(n);
    std::size_t j = 0;
    bool ok = a.current() == S[0] && b.current() == S[0];
    while (a.next()) {
      ok = ok && b.next() && ++j < S.size() && a.current() == S[j] && b.current() == S[j] &&
           a.last_cost() <= 4 && b.last_cost() <= 4;
    }
    return ok && !b.next() && j + 1 == S.size();
  });
  if (n <= 10) {
    check("sigma maps the shortest solution onto all grids", [&] {
      const auto grids = oracle::enumerate_nurikabe(n);
      std::set<NurikabeGrid> image;
      for (const auto& q : S) {
        const auto gr = sigma(q);
        if (!is_valid_grid(gr) || sigma_inverse(gr) != q || !reflection_check(q)) return false;
        image.insert(gr);
      }
      const auto f = nurikabe_counts(n);
      const auto k = kernels::parallel::count_grids(n);
      return image.size() == S.size() && std::set<NurikabeGrid>(grids.begin(), grids.end()) == image &&
             k.total == f.a && k.all_columns_black == f.b && k.with_white_column == f.c;
    });
  }

  out << "shortest=" << S.size() << " longest=" << L.size() << '\n';
  out << (all_ok ? "PASS" : "FAIL") << '\n';
  return all_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Ziggu puzzle engine: listings, ranks, successors, solving, verification"};
  app.name("ziggu");
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> kinds{"brgc", "quat", "long", "short"};
  auto add_kind = [&](CLI::App* sc) {
    sc->add_option("--kind", o.kind, "brgc | quat | long | short")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
  };
  auto add_n = [&](CLI::App* sc, bool required) {
    auto* opt = sc->add_option("--n", o.n, "number of digits")->check(CLI::Range(1, 4096));
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sc, std::vector<std::string> allowed) {
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* list = app.add_subcommand("list", "print a listing, one state per line");
  add_kind(list);
  add_n(list, true);
  add_format(list, {"text", "json"});

  auto* rank_cmd = app.add_subcommand("rank", "rank states (arguments or stdin)");
  add_kind(rank_cmd);
  add_format(rank_cmd, {"text", "json"});
  rank_cmd->add_option("states", o.args, "states");

  auto* unrank_cmd = app.add_subcommand("unrank", "state at each rank");
  add_kind(unrank_cmd);
  add_n(unrank_cmd, true);
  unrank_cmd->add_option("ranks", o.args, "ranks")->required();

  auto* next_cmd = app.add_subcommand("next", "successor on a listing");
  auto* prev_cmd = app.add_subcommand("prev", "predecessor on a listing");
  for (auto* sc : {next_cmd, prev_cmd}) {
    add_kind(sc);
    add_format(sc, {"text", "json"});
    sc->add_option("state", o.args, "state")->required()->expected(1);
  }

  auto* compare_cmd = app.add_subcommand("compare", "order of two states: before, equal, after");
  compare_cmd->add_option("states", o.args, "two states")->required()->expected(2);

  auto* solve = app.add_subcommand("solve", "moves from a state to 3^n");
  solve->add_option("--mode", o.mode, "shortest | longest | bfs")
      ->check(CLI::IsMember({"shortest", "longest", "bfs"}));
  solve->add_flag("--states", o.states, "also print the visited states");
  add_format(solve, {"text", "json"});
  solve->add_option("state", o.args, "state")->required()->expected(1);

  auto* moves = app.add_subcommand("moves", "legal moves at a state");
  add_format(moves, {"text", "json"});
  moves->add_option("state", o.args, "state")->required()->expected(1);

  auto* graph = app.add_subcommand("graph", "export the state graph");
  add_n(graph, true);
  add_format(graph, {"dot", "json"});

  auto* nuri = app.add_subcommand("nurikabe", "2 x n grid tools");
  nuri->require_subcommand(1);
  auto* ncount = nuri->add_subcommand("count", "count grids by enumeration and by formula");
  add_n(ncount, true);
  add_format(ncount, {"text", "json"});
  auto* nmap = nuri->add_subcommand("map", "grid of a shortest-solution state");
  nmap->add_option("state", o.args, "state")->required()->expected(1);
  auto* ngrids = nuri->add_subcommand("grids", "all valid grids");
  add_n(ngrids, true);
  add_format(ngrids, {"text", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "run the cross-checks at one size");
  add_n(verify_cmd, true);

  auto* ruler_cmd = app.add_subcommand("ruler", "change sequence of a listing");
  add_kind(ruler_cmd);
  add_n(ruler_cmd, true);
  ruler_cmd->add_flag("--unsigned", o.unsigned_ruler, "drop the directions");

  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ziggu: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Kind kind = parse_kind(o.kind);
    if (o.format == "text" && *graph) o.format = "dot";

    if (*list) {
      print_list(kind, o.n, o.format, out);
    } else if (*rank_cmd) {
      json arr = json::array();
      for (const auto& s : inputs(o, in)) {
        const BigInt r = rank(kind, parse(s));
        if (o.format == "json") arr.push_back({{"state", s}, {"kind", o.kind}, {"rank", big_to_json(r)}});
        else out << r << '\n';
      }
      if (o.format == "json") out << arr.dump() << '\n';
    } else if (*unrank_cmd) {
      for (const auto& s : o.args) {
        BigInt r;
        try {
          r = BigInt(s);
        } catch (const std::exception&) {
          throw ParseError("bad rank \"" + s + "\"");
        }
        out << unrank(kind, o.n, r).str() << '\n';
      }
    } else if (*next_cmd) {
      print_step(next(kind, parse(o.args.at(0))), o.format, out);
    } else if (*prev_cmd) {
      print_step(prev(kind, parse(o.args.at(0))), o.format, out);
    } else if (*compare_cmd) {
      out << to_string(compare(parse(o.args.at(0)), parse(o.args.at(1)))) << '\n';
    } else if (*solve) {
      const QuatString q = parse(o.args.at(0));
      const auto path = solve_path(q, parse_mode(o.mode));
      std::vector<std::string> visited{q.str()};
      QuatString cur = q;
      for (const auto& m : path) {
        cur = apply_move(cur, m);
        visited.push_back(cur.str());
      }
      if (o.format == "json") {
        json doc;
        doc["state"] = q.str();
        doc["mode"] = o.mode;
        doc["moves"] = json::array();
        for (const auto& m : path) doc["moves"].push_back(move_json(m));
        if (o.states) doc["states"] = visited;
        out << doc.dump() << '\n';
      } else {
        out << moves_text(path) << '\n';
        if (o.states)
          for (const auto& s : visited) out << s << '\n';
      }
    } else if (*moves) {
      const auto ms = legal_moves(parse(o.args.at(0)));
      if (o.format == "json") {
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(move_json(m));
        out << arr.dump() << '\n';
      } else {
        out << moves_text(ms) << '\n';
      }
    } else if (*graph) {
      if (o.n > oracle::kMaxGraphN) throw DomainError("graph export is limited to n <= 12");
      const auto g = oracle::build_graph(o.n, true);
      out << (o.format == "json" ? graph_to_json(g) : graph_to_dot(g));
    } else if (*ncount) {
      if (o.n > 12) throw DomainError("grid enumeration is limited to n <= 12");
      const auto k = kernels::parallel::count_grids(o.n);
      const auto f = nurikabe_counts(o.n);
      if (o.format == "json") {
        out << json{{"n", o.n},
                    {"a", k.total},
                    {"b", k.all_columns_black},
                    {"c", k.with_white_column},
                    {"formula", {{"a", f.a}, {"b", f.b}, {"c", f.c}}}}
                   .dump()
            << '\n';
      } else {
        out << "a=" << k.total << " b=" << k.all_columns_black << " c=" << k.with_white_column
            << " (formula a=" << f.a << " b=" << f.b << " c=" << f.c << ")\n";
      }
    } else if (*nmap) {
      out << sigma(parse(o.args.at(0))).str() << '\n';
    } else if (*ngrids) {
      const auto grids = oracle::enumerate_nurikabe(o.n);
      if (o.format == "json") {
        json arr = json::array();
        for (const auto& g : grids) arr.push_back(g.str());
        out << arr.dump() << '\n';
      } else {
        for (std::size_t k = 0; k < grids.size(); ++k) out << (k ? "\n" : "") << grids[k].str() << '\n';
      }
    } else if (*verify_cmd) {
      return verify(o.n, out) ? 0 : 1;
    } else if (*ruler_cmd) {
      const auto seq = ruler(kind, o.n, !o.unsigned_ruler);
      std::string line;
      for (const auto& e : seq) line += (line.empty() ? "" : ",") + std::to_string(e.value());
      out << line << '\n';
    }
  } catch (const ParseError& e) {
    err << "ziggu: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "ziggu: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ziggu::cli
