// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ntucore/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ntucore/constant_players.hpp"
#include "ntucore/couples.hpp"
#include "ntucore/errors.hpp"
#include "ntucore/io.hpp"
#include "ntucore/oracle.hpp"
#include "ntucore/reductions.hpp"

namespace ntucore::cli {

namespace {

using json = nlohmann::ordered_json;

struct MethodError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { automatic, couples, constant, oracle };

inline constexpr int kAutoConstPlayers = 6;

struct Options {
  std::string core = "weak";
  std::string method = "auto";
  std::string instance;
  std::string matching;
  std::string out;
  std::string matching_out;
  std::string names_out;
  std::string x3c;
  std::string cnf;
  std::string assignment;
  std::int64_t cap = oracle::kDefaultMatchingCap;
  std::int64_t budget = kDefaultFrontierBudget;
  int max_players = kDefaultMaxPlayers;
  int n = 10;
  int class_cap = 2;
  double edge_prob = 0.3;
  std::uint64_t seed = 0;
  int a = 0;
  int b = 1;
  int c = 2;
};

Method parse_method(const std::string& text) {
  if (text == "auto") return Method::automatic;
  if (text == "couples") return Method::couples;
  if (text == "const") return Method::constant;
  if (text == "oracle") return Method::oracle;
  throw InputError("unknown method \"" + text + "\"");
}

Method resolve(Method m, const Instance& inst) {
  if (m == Method::couples && !is_couples_instance(inst)) {
    throw MethodError("couples method needs every player to own at most 2 vertices");
  }
  if (m != Method::automatic) return m;
  if (is_couples_instance(inst)) return Method::couples;
  if (inst.player_count() <= kAutoConstPlayers) return Method::constant;
  return Method::oracle;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (!path.empty()) write_file(path, text);
  out << text;
}

int verify(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(read_file(o.instance));
  const Matching m = parse_matching(read_file(o.matching));
  const CoreKind kind = parse_core_kind(o.core);
  utility(inst, m);  // validates m against the graph
  MembershipVerdict v;
  switch (resolve(parse_method(o.method), inst)) {
    case Method::couples: {
      const CouplesGame cg = normalize(inst);
      v = kind == CoreKind::weak ? weak_membership(cg, m) : strong_membership(cg, m);
      break;
    }
    case Method::constant:
      v = core_membership_by_enumeration(inst, m, kind, o.max_players);
      break;
    default:
      v = oracle::oracle_membership(inst, m, kind, o.cap);
      break;
  }
  if (v.certificate && !certificate_valid(inst, utility(inst, m), *v.certificate)) {
    throw InternalError("produced certificate does not re-validate");
  }
  emit(out, o.out, serialize(make_certificate(kind, v)));
  return v.in_core ? kInCore : kBlocked;
}

std::optional<Matching> solve_core(const Options& o, const Instance& inst, CoreKind kind) {
  switch (resolve(parse_method(o.method), inst)) {
    case Method::couples: {
      const CouplesGame cg = normalize(inst);
      if (kind == CoreKind::weak) return weak_construct(cg);
      return strong_core_solve(cg);
    }
    case Method::constant:
      if (inst.player_count() > o.max_players) {
        throw MethodError("const method limited to " + std::to_string(o.max_players) + " players");
      }
      return find_core_matching(inst, kind, o.budget);
    default: {
      const auto outcome = oracle::oracle_core(inst, kind, o.cap);
      if (outcome.in_core.empty()) return std::nullopt;
      return outcome.in_core.rbegin()->second;
    }
  }
}

int solve(const Options& o, std::ostream& out, bool emptiness) {
  const Instance inst = parse_instance(read_file(o.instance));
  const CoreKind kind = parse_core_kind(o.core);
  const auto m = solve_core(o, inst, kind);
  if (emptiness || !m) {
    json j;
    j["kind"] = std::string(to_string(kind));
    j["empty"] = !m;
    if (m) j["matching"] = json::parse(serialize(*m))["edges"];
    emit(out, o.out, j.dump() + "\n");
  } else {
    emit(out, o.out, serialize(*m));
  }
  return m ? kInCore : kBlocked;
}

int generate(const std::string& kind, const Options& o, std::ostream& out) {
  GeneratedInstance g;
  if (kind == "example1") {
    g = gen_example1();
  } else if (kind == "x3c-weak" || kind == "x3c-strong") {
    if (o.x3c.empty()) throw InputError("gen " + kind + " needs --x3c FILE");
    const X3CInstance x = parse_x3c(read_file(o.x3c));
    g = kind == "x3c-weak" ? gen_x3c_weak(x) : gen_x3c_strong(x);
  } else if (kind == "sat-weak") {
    if (o.cnf.empty()) throw InputError("gen sat-weak needs --cnf FILE");
    std::optional<std::vector<bool>> assignment;
    if (!o.assignment.empty()) {
      assignment.emplace();
      for (char ch : o.assignment) {
        if (ch != '0' && ch != '1') throw InputError("--assignment takes a string of 0/1 digits");
        assignment->push_back(ch == '1');
      }
    }
    g = gen_3sat_weak_emptiness(parse_cnf(read_file(o.cnf)), assignment);
  } else if (kind == "random") {
    g = gen_random(o.n, o.class_cap, o.edge_prob, o.seed);
  } else {
    throw InputError("unknown generator \"" + kind + "\"");
  }
  emit(out, o.out, serialize(g.instance));
  if (!o.matching_out.empty()) {
    if (!g.matching) throw InputError("generator " + kind + " has no matching to write");
    write_file(o.matching_out, serialize(*g.matching));
  }
  if (!o.names_out.empty()) write_file(o.names_out, serialize_names(g));
  return kInCore;
}

int run_oracle(const std::string& sub, const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(read_file(o.instance));
  json j;
  if (sub == "matchings") {
    j["count"] = oracle::count_matchings(inst.graph(), o.cap);
    j["max_size"] = oracle::max_matching_size(inst.graph(), o.cap);
    out << j.dump() << "\n";
    return kInCore;
  }
  if (sub == "core") {
    const CoreKind kind = parse_core_kind(o.core);
    const auto outcome = oracle::oracle_core(inst, kind, o.cap);
    j["kind"] = std::string(to_string(kind));
    j["empty"] = outcome.in_core.empty();
    json rows = json::array();
    for (const auto& [u, m] : outcome.in_core) {
      rows.push_back({{"utility", u}, {"matching", json::parse(serialize(m))["edges"]}});
    }
    j["in_core"] = std::move(rows);
    emit(out, o.out, j.dump() + "\n");
    return outcome.in_core.empty() ? kBlocked : kInCore;
  }
  if (sub == "delta") {
    if (!is_couples_instance(inst)) throw MethodError("delta paths need a couples instance");
    const CouplesGame cg = normalize(inst);
    if (cg.vertex_count() > oracle::kMaxCouplesVertices) {
      throw ResourceError("delta oracle limited to " + std::to_string(oracle::kMaxCouplesVertices) +
                          " vertices");
    }
    for (int p : {o.a, o.b, o.c}) {
      if (p < 0 || p >= cg.player_count()) throw InputError("player id out of range");
    }
    const auto dp = oracle::find_delta_path(cg, o.a, o.b, o.c);
    j["exists"] = dp.has_value();
    if (dp) {
      j["cycle"] = dp->cycle;
      j["path"] = dp->path;
    }
    out << j.dump() << "\n";
    return dp ? kInCore : kBlocked;
  }
  throw InputError("unknown oracle command \"" + sub + "\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for NTU partitioned matching games", "ntucore"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> methods = {"auto", "couples", "const", "oracle"};
  const std::vector<std::string> cores = {"weak", "strong"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "matching enumeration cap for oracle methods");
    sub->add_option("--budget", o.budget, "utility-lattice budget for the const method");
    sub->add_option("--max-players", o.max_players, "coalition enumeration player limit");
  };

  auto* verify_cmd = app.add_subcommand("verify", "test a matching for core membership");
  verify_cmd->add_option("--core", o.core)->required()->check(CLI::IsMember(cores));
  verify_cmd->add_option("--instance", o.instance)->required();
  verify_cmd->add_option("--matching", o.matching)->required();
  verify_cmd->add_option("--method", o.method)->check(CLI::IsMember(methods));
  verify_cmd->add_option("--out", o.out, "also write the certificate here");
  add_common(verify_cmd);

  CLI::App* solve_cmds[2];
  solve_cmds[0] = app.add_subcommand("solve", "find a core matching");
  solve_cmds[1] = app.add_subcommand("core-empty", "decide whether the core is empty");
  for (auto* sub : solve_cmds) {
    sub->add_option("--core", o.core)->required()->check(CLI::IsMember(cores));
    sub->add_option("--instance", o.instance)->required();
    sub->add_option("--method", o.method)->check(CLI::IsMember(methods));
    sub->add_option("--out", o.out, "also write the result here");
    add_common(sub);
  }

  std::string gen_kind;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("kind", gen_kind, "example1 | x3c-weak | x3c-strong | sat-weak | random")
      ->required();
  gen_cmd->add_option("--out", o.out, "instance file (also printed)");
  gen_cmd->add_option("--matching-out", o.matching_out);
  gen_cmd->add_option("--names-out", o.names_out);
  gen_cmd->add_option("--x3c", o.x3c, "x3c JSON file");
  gen_cmd->add_option("--cnf", o.cnf, "3-CNF as JSON or DIMACS");
  gen_cmd->add_option("--assignment", o.assignment, "satisfying assignment as 0/1 digits");
  gen_cmd->add_option("--n", o.n);
  gen_cmd->add_option("--class-cap", o.class_cap);
  gen_cmd->add_option("--edge-prob", o.edge_prob);
  gen_cmd->add_option("--seed", o.seed);

  std::string oracle_kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference computations");
  oracle_cmd->add_option("what", oracle_kind, "core | matchings | delta")->required();
  oracle_cmd->add_option("--instance", o.instance)->required();
  oracle_cmd->add_option("--core", o.core)->check(CLI::IsMember(cores));
  oracle_cmd->add_option("--out", o.out);
  oracle_cmd->add_option("--a", o.a);
  oracle_cmd->add_option("--b", o.b);
  oracle_cmd->add_option("--c", o.c);
  add_common(oracle_cmd);

  auto fail = [&](const char* category, const std::string& msg, int code) {
    std::string line = msg;
    std::replace(line.begin(), line.end(), '\n', ' ');
    err << "error: " << category << ": " << line << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kInCore;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kInCore;
    }
    return fail("usage", e.what(), kUsage);
  }

  try {
    if (verify_cmd->parsed()) return verify(o, out);
    if (solve_cmds[0]->parsed()) return solve(o, out, false);
    if (solve_cmds[1]->parsed()) return solve(o, out, true);
    if (gen_cmd->parsed()) return generate(gen_kind, o, out);
    return run_oracle(oracle_kind, o, out);
  } catch (const InputError& e) {
    return fail("input", e.what(), kUsage);
  } catch (const MethodError& e) {
    return fail("method", e.what(), kResource);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), kResource);
  } catch (const InternalError& e) {
    return fail("internal", e.what(), kInternal);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kInternal);
  }
}

}  // namespace ntucore::cli
